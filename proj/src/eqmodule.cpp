#include "powops/eqmodule.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "powops/symfunc.hpp"

namespace powops {

namespace {

std::vector<std::vector<int>> perms_lex(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int perm_sign(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

// Sorted k-subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<int>> subsets_k(int d, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > d) return out;
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == d - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    if (k == 0) out.assign(1, {});
    return out;
}

// Non-decreasing k-tuples over {0..d-1} in lexicographic order.
std::vector<std::vector<int>> multisets_k(int d, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || (d <= 0 && k > 0)) return out;
    std::vector<int> s(k, 0);
    if (k == 0) {
        out.assign(1, {});
        return out;
    }
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == d - 1) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[i];
    }
    return out;
}

Cyclotomic cyc_one() { return Cyclotomic(1); }

// Determinant by exact Gaussian elimination over the cyclotomic field.
Cyclotomic cyc_det(CycMatrix a) {
    int n = a.rows();
    if (n != a.cols()) throw internal_error("cyc_det: matrix not square");
    if (n == 0) return cyc_one();
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return Cyclotomic();
        if (piv != col) {
            for (int j = col; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            sign = -sign;
        }
        Cyclotomic inv = a.at(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Cyclotomic f = a.at(i, col) * inv;
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    Cyclotomic det = cyc_one();
    for (int i = 0; i < n; ++i) det *= a.at(i, i);
    if (sign < 0) det = -det;
    return det;
}

Cyclotomic minor_det(const CycMatrix& a, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
    int k = static_cast<int>(rows.size());
    CycMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
    return cyc_det(sub);
}

// Matrix of the induced map on the i-th exterior power, in the given
// lexicographic subset basis: entry (T, S) = det A[T, S].
CycMatrix ext_matrix(const CycMatrix& a, const std::vector<std::vector<int>>& subsets) {
    int n = static_cast<int>(subsets.size());
    CycMatrix m(n, n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) m.at(t, s) = minor_det(a, subsets[t], subsets[s]);
    return m;
}

// Matrix of the induced map on the k-th symmetric power in the sorted
// multiset basis: column S expands the product over j in S of (A e_j).
CycMatrix sym_matrix(const CycMatrix& a, const std::vector<std::vector<int>>& msets,
                     const std::map<std::vector<int>, int>& index) {
    int n = static_cast<int>(msets.size());
    int d = a.rows();
    CycMatrix m(n, n);
    for (int s = 0; s < n; ++s) {
        std::map<std::vector<int>, Cyclotomic> cur;
        cur[{}] = cyc_one();
        for (int j : msets[s]) {
            std::map<std::vector<int>, Cyclotomic> next;
            for (const auto& [key, coeff] : cur)
                for (int t = 0; t < d; ++t) {
                    if (a.at(t, j).is_zero()) continue;
                    std::vector<int> nk = key;
                    nk.insert(std::upper_bound(nk.begin(), nk.end(), t), t);
                    next[nk] += coeff * a.at(t, j);
                }
            cur = std::move(next);
        }
        for (const auto& [key, coeff] : cur) m.at(index.at(key), s) = coeff;
    }
    return m;
}

// Sum of the principal i x i minors: the trace of the induced exterior-power
// matrix without materializing it.
Cyclotomic exterior_trace(const CycMatrix& a, int i) {
    Cyclotomic t;
    for (const auto& s : subsets_k(a.rows(), i)) t += minor_det(a, s, s);
    return t;
}

void require_same_ctx(const EquivariantModule& v, const EquivariantModule& w) {
    if (v.ctx().get() != w.ctx().get()) throw domain_error("modules on different groups");
}

// The point count n for the natural S_n modules; rejects other catalogs.
int symmetric_points(const GroupRef& ctx) {
    const std::string& nm = ctx->G.name;
    if (nm.size() == 2 && nm[0] == 'S' && std::isdigit(static_cast<unsigned char>(nm[1]))) {
        int n = nm[1] - '0';
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        if (fact == ctx->G.n) return n;
    }
    throw domain_error("natural permutation modules need a symmetric-group catalog entry S<n>");
}

std::string basis_label(const EquivariantModule& v, int i) {
    if (!v.basis_labels().empty()) return v.basis_labels()[i];
    return "e" + std::to_string(i);
}

}  // namespace

// --- CycMatrix ---------------------------------------------------------------

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = cyc_one();
    return m;
}

CycMatrix CycMatrix::from_int(const IntMatrix& m) {
    CycMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Cyclotomic(Rat(m.at(i, j)));
    return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (c_ != o.r_) throw internal_error("CycMatrix: inner sizes differ in product");
    CycMatrix r(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Cyclotomic& f = at(i, k);
            if (f.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += f * o.at(k, j);
            }
        }
    return r;
}

Cyclotomic CycMatrix::trace() const {
    if (r_ != c_) throw internal_error("CycMatrix::trace: matrix not square");
    Cyclotomic t;
    for (int i = 0; i < r_; ++i) t += at(i, i);
    return t;
}

CycMatrix CycMatrix::kronecker(const CycMatrix& o) const {
    CycMatrix r(r_ * o.r_, c_ * o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (int k = 0; k < o.r_; ++k)
                for (int l = 0; l < o.c_; ++l)
                    r.at(i * o.r_ + k, j * o.c_ + l) = at(i, j) * o.at(k, l);
        }
    return r;
}

CycMatrix solve_exact(const CycMatrix& B, const CycMatrix& C) {
    if (B.rows() != C.rows()) throw internal_error("solve_exact: row counts differ");
    const int m = B.rows(), r = B.cols(), k = C.cols();
    std::vector<std::vector<Cyclotomic>> a(m, std::vector<Cyclotomic>(r + k));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < r; ++j) a[i][j] = B.at(i, j);
        for (int j = 0; j < k; ++j) a[i][r + j] = C.at(i, j);
    }
    for (int col = 0; col < r; ++col) {
        int piv = -1;
        for (int i = col; i < m; ++i)
            if (!a[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw internal_error("solve_exact: coefficient matrix lost column rank");
        std::swap(a[piv], a[col]);
        Cyclotomic inv = a[col][col].inverse();
        for (int j = col; j < r + k; ++j) a[col][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Cyclotomic f = a[i][col];
            for (int j = col; j < r + k; ++j) a[i][j] -= f * a[col][j];
        }
    }
    for (int i = r; i < m; ++i)
        for (int j = 0; j < k; ++j)
            if (!a[i][r + j].is_zero()) throw internal_error("solve_exact: inconsistent system");
    CycMatrix x(r, k);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < k; ++j) x.at(i, j) = a[i][r + j];
    return x;
}

// --- EquivariantModule --------------------------------------------------------

EquivariantModule::EquivariantModule(GroupRef ctx, std::vector<CycMatrix> action,
                                     std::vector<std::string> basis_labels, std::string name)
    : ctx_(std::move(ctx)), act_(std::move(action)), labels_(std::move(basis_labels)),
      name_(std::move(name)) {
    const FiniteGroup& G = ctx_->G;
    if (static_cast<int>(act_.size()) != G.n)
        throw domain_error("module: need exactly one matrix per group element");
    dim_ = act_.empty() ? 0 : act_[0].rows();
    for (const CycMatrix& m : act_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw domain_error("module: matrices must be square of a common size");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != dim_)
        throw domain_error("module: basis label count differs from dimension");
    if (!(act_[G.identity] == CycMatrix::identity(dim_)))
        throw domain_error("module: identity element must act as the identity matrix");
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y)
            if (!(act_[G.mul[x][y]] == act_[x] * act_[y]))
                throw domain_error("module: action table violates the multiplication table at " +
                                   G.labels[x] + " * " + G.labels[y]);
}

ClassFunction EquivariantModule::character() const {
    const ConjugacyData& C = ctx_->C;
    std::vector<Cyclotomic> v(C.class_count());
    for (int c = 0; c < C.class_count(); ++c) v[c] = act_[C.reps[c]].trace();
    return ClassFunction(ctx_, std::move(v));
}

// --- constructors -------------------------------------------------------------

EquivariantModule trivial_module(const GroupRef& ctx) {
    std::vector<CycMatrix> act(ctx->G.n, CycMatrix::identity(1));
    return EquivariantModule(ctx, std::move(act), {"1"}, "triv");
}

EquivariantModule regular_module(const GroupRef& ctx) {
    const FiniteGroup& G = ctx->G;
    std::vector<CycMatrix> act(G.n, CycMatrix(G.n, G.n));
    for (int g = 0; g < G.n; ++g)
        for (int x = 0; x < G.n; ++x) act[g].at(G.mul[g][x], x) = cyc_one();
    return EquivariantModule(ctx, std::move(act), G.labels, "reg");
}

EquivariantModule line_module(const CharacterTable& table, int row) {
    if (row < 0 || row >= table.size()) throw domain_error("line_module: row index out of range");
    const ClassFunction& chi = table.row(row);
    if (chi.degree() != 1) throw domain_error("line_module: table row is not one-dimensional");
    GroupRef ctx = table.ctx();
    const FiniteGroup& G = ctx->G;
    std::vector<CycMatrix> act(G.n, CycMatrix(1, 1));
    for (int g = 0; g < G.n; ++g) act[g].at(0, 0) = chi.value(ctx->C.class_of[g]);
    return EquivariantModule(ctx, std::move(act), {"v"}, "line:" + std::to_string(row));
}

EquivariantModule permutation_module(const GroupRef& ctx) {
    int n = symmetric_points(ctx);
    auto perms = perms_lex(n);
    std::vector<CycMatrix> act(ctx->G.n, CycMatrix(n, n));
    for (int g = 0; g < ctx->G.n; ++g)
        for (int x = 0; x < n; ++x) act[g].at(perms[g][x], x) = cyc_one();
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) labels[x] = "e" + std::to_string(x);
    return EquivariantModule(ctx, std::move(act), std::move(labels), "perm");
}

EquivariantModule standard_module(const GroupRef& ctx) {
    int n = symmetric_points(ctx);
    if (n < 2) throw domain_error("standard_module: need at least two points");
    auto perms = perms_lex(n);
    std::vector<CycMatrix> act(ctx->G.n, CycMatrix(n - 1, n - 1));
    for (int g = 0; g < ctx->G.n; ++g)
        for (int k = 0; k + 1 < n; ++k) {
            // image of f_k = e_k - e_{k+1} is e_a - e_b, a telescoping sum of f_j.
            int a = perms[g][k], b = perms[g][k + 1];
            if (a < b)
                for (int j = a; j < b; ++j) act[g].at(j, k) = cyc_one();
            else
                for (int j = b; j < a; ++j) act[g].at(j, k) = -cyc_one();
        }
    std::vector<std::string> labels(n - 1);
    for (int k = 0; k + 1 < n; ++k)
        labels[k] = "e" + std::to_string(k) + "-e" + std::to_string(k + 1);
    return EquivariantModule(ctx, std::move(act), std::move(labels), "std");
}

EquivariantModule sign_module(const GroupRef& ctx) {
    int n = symmetric_points(ctx);
    auto perms = perms_lex(n);
    std::vector<CycMatrix> act(ctx->G.n, CycMatrix(1, 1));
    for (int g = 0; g < ctx->G.n; ++g) act[g].at(0, 0) = Cyclotomic(perm_sign(perms[g]));
    return EquivariantModule(ctx, std::move(act), {"v"}, "sgn");
}

EquivariantModule two_dim_module(const GroupRef& ctx) {
    const std::string& nm = ctx->G.name;
    std::vector<CycMatrix> act;
    if (nm == "Q8") {
        // Elements are 2*axis + (1 for the negative sign); axes 1, i, j, k.
        Cyclotomic z = Cyclotomic::zeta(4);
        std::vector<CycMatrix> base(4, CycMatrix(2, 2));
        base[0] = CycMatrix::identity(2);
        base[1].at(0, 0) = z;
        base[1].at(1, 1) = -z;
        base[2].at(0, 1) = -cyc_one();
        base[2].at(1, 0) = cyc_one();
        base[3].at(0, 1) = -z;
        base[3].at(1, 0) = -z;
        act.assign(8, CycMatrix(2, 2));
        for (int g = 0; g < 8; ++g) {
            act[g] = base[g / 2];
            if (g % 2)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) act[g].at(i, j) = -act[g].at(i, j);
        }
    } else if (nm == "D4") {
        // Element i + 4j is r^i s^j; r rotates a quarter turn, s reflects.
        CycMatrix R(2, 2), S(2, 2);
        R.at(0, 1) = -cyc_one();
        R.at(1, 0) = cyc_one();
        S.at(0, 0) = cyc_one();
        S.at(1, 1) = -cyc_one();
        act.assign(8, CycMatrix::identity(2));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j) {
                CycMatrix m = CycMatrix::identity(2);
                for (int t = 0; t < i; ++t) m = m * R;
                if (j) m = m * S;
                act[i + 4 * j] = m;
            }
    } else {
        throw domain_error("two_dim_module: on file for Q8 and D4 only");
    }
    return EquivariantModule(ctx, std::move(act), {"x", "y"}, "2dim");
}

EquivariantModule module_from_file(const GroupRef& ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open module file: " + path);
    long d = -1;
    if (!(in >> d) || d < 0) throw domain_error("module file: bad dimension line");
    const int n = ctx->G.n;
    std::vector<CycMatrix> act(n, CycMatrix(static_cast<int>(d), static_cast<int>(d)));
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                long long v;
                if (!(in >> v))
                    throw domain_error("module file: expected " + std::to_string(n) +
                                       " matrices of size " + std::to_string(d) + "x" +
                                       std::to_string(d));
                act[g].at(i, static_cast<int>(j)) = Cyclotomic(static_cast<long>(v));
            }
    return EquivariantModule(ctx, std::move(act), {}, path);
}

EquivariantModule module_by_name(const GroupRef& ctx, const std::string& name) {
    if (name == "triv") return trivial_module(ctx);
    if (name == "reg") return regular_module(ctx);
    if (name == "sgn") return sign_module(ctx);
    if (name == "std") return standard_module(ctx);
    if (name == "perm") return permutation_module(ctx);
    if (name == "2dim") return two_dim_module(ctx);
    if (name.rfind("line:", 0) == 0) {
        int row = std::stoi(name.substr(5));
        return line_module(character_table(ctx), row);
    }
    return module_from_file(ctx, name);
}

// --- functors ------------------------------------------------------------------

EquivariantModule tensor(const EquivariantModule& V, const EquivariantModule& W) {
    require_same_ctx(V, W);
    const int n = V.ctx()->G.n;
    std::vector<CycMatrix> act(n);
    for (int g = 0; g < n; ++g) act[g] = V.action(g).kronecker(W.action(g));
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(V.dim()) * W.dim());
    for (int i = 0; i < V.dim(); ++i)
        for (int j = 0; j < W.dim(); ++j)
            labels.push_back(basis_label(V, i) + "*" + basis_label(W, j));
    return EquivariantModule(V.ctx(), std::move(act), std::move(labels),
                             V.name() + "(x)" + W.name());
}

EquivariantModule exterior_power(const EquivariantModule& V, int i) {
    if (i < 0) throw domain_error("exterior_power: negative degree");
    const int n = V.ctx()->G.n;
    auto subsets = subsets_k(V.dim(), i);
    std::vector<CycMatrix> act(n);
    for (int g = 0; g < n; ++g) act[g] = ext_matrix(V.action(g), subsets);
    std::vector<std::string> labels;
    for (const auto& s : subsets) {
        std::string l;
        for (size_t t = 0; t < s.size(); ++t) l += (t ? "^" : "") + basis_label(V, s[t]);
        labels.push_back(l.empty() ? "1" : l);
    }
    return EquivariantModule(V.ctx(), std::move(act), std::move(labels),
                             "Ext^" + std::to_string(i) + "(" + V.name() + ")");
}

EquivariantModule symmetric_power(const EquivariantModule& V, int i) {
    if (i < 0) throw domain_error("symmetric_power: negative degree");
    const int n = V.ctx()->G.n;
    auto msets = multisets_k(V.dim(), i);
    std::map<std::vector<int>, int> index;
    for (size_t t = 0; t < msets.size(); ++t) index[msets[t]] = static_cast<int>(t);
    std::vector<CycMatrix> act(n);
    for (int g = 0; g < n; ++g) act[g] = sym_matrix(V.action(g), msets, index);
    std::vector<std::string> labels;
    for (const auto& s : msets) {
        std::string l;
        for (size_t t = 0; t < s.size(); ++t) l += (t ? "." : "") + basis_label(V, s[t]);
        labels.push_back(l.empty() ? "1" : l);
    }
    return EquivariantModule(V.ctx(), std::move(act), std::move(labels),
                             "Sym^" + std::to_string(i) + "(" + V.name() + ")");
}

// --- row-to-column map and its image ---------------------------------------------

namespace {

EquivariantModule zero_module(const GroupRef& ctx, const std::string& name) {
    std::vector<CycMatrix> act(ctx->G.n, CycMatrix(0, 0));
    return EquivariantModule(ctx, std::move(act), {}, name);
}

}  // namespace

EquivariantModule schur_module(const EquivariantModule& V, const Partition& lambda) {
    if (!is_valid_partition(lambda)) throw domain_error("schur_module: invalid shape");
    const std::string name = "L" + partition_str(lambda) + "(" + V.name() + ")";
    GroupRef ctx = V.ctx();
    const int d = V.dim();
    if (lambda.empty()) {
        std::vector<CycMatrix> act(ctx->G.n, CycMatrix::identity(1));
        return EquivariantModule(ctx, std::move(act), {"1"}, name);
    }
    const int nrows = static_cast<int>(lambda.size());
    const int ncols = lambda[0];
    const Partition colheights = conjugate_partition(lambda);
    if (lambda[0] > d) return zero_module(ctx, name);

    // Source basis: one sorted subset per diagram row.
    std::vector<std::vector<std::vector<int>>> rowsets(nrows);
    for (int r = 0; r < nrows; ++r) rowsets[r] = subsets_k(d, lambda[r]);
    // Target basis: one sorted multiset per diagram column, column 0 most
    // significant in the flattened index.
    std::vector<std::vector<std::vector<int>>> colsets(ncols);
    std::vector<std::map<std::vector<int>, int>> colindex(ncols);
    for (int c = 0; c < ncols; ++c) {
        colsets[c] = multisets_k(d, colheights[c]);
        for (size_t t = 0; t < colsets[c].size(); ++t)
            colindex[c][colsets[c][t]] = static_cast<int>(t);
    }
    long sdim = 1, tdim = 1;
    for (int r = 0; r < nrows; ++r) sdim *= static_cast<long>(rowsets[r].size());
    for (int c = 0; c < ncols; ++c) tdim *= static_cast<long>(colsets[c].size());

    // Per-row orderings with signs, keyed by row length.
    std::vector<std::vector<std::vector<int>>> orders(nrows);
    std::vector<std::vector<int>> order_signs(nrows);
    for (int r = 0; r < nrows; ++r) {
        orders[r] = perms_lex(lambda[r]);
        for (const auto& w : orders[r]) order_signs[r].push_back(perm_sign(w));
    }

    // The integer matrix of the row-antisymmetrization / column-multiplication
    // map in these bases.
    IntMatrix D(static_cast<int>(tdim), static_cast<int>(sdim));
    std::vector<int> sel(nrows, 0);
    for (long sidx = 0; sidx < sdim; ++sidx) {
        std::vector<int> w(nrows, 0);
        while (true) {
            int sign = 1;
            // filling[r][c] = c-th entry of row r under its chosen ordering
            std::vector<std::vector<int>> filling(nrows);
            for (int r = 0; r < nrows; ++r) {
                sign *= order_signs[r][w[r]];
                const auto& S = rowsets[r][sel[r]];
                const auto& ord = orders[r][w[r]];
                filling[r].resize(lambda[r]);
                for (int c = 0; c < lambda[r]; ++c) filling[r][c] = S[ord[c]];
            }
            long tidx = 0;
            for (int c = 0; c < ncols; ++c) {
                std::vector<int> col;
                for (int r = 0; r < colheights[c]; ++r) col.push_back(filling[r][c]);
                std::sort(col.begin(), col.end());
                tidx = tidx * static_cast<long>(colsets[c].size()) + colindex[c].at(col);
            }
            D.at(static_cast<int>(tidx), static_cast<int>(sidx)) += sign;
            int r = nrows - 1;
            while (r >= 0 && w[r] + 1 == static_cast<int>(orders[r].size())) w[r--] = 0;
            if (r < 0) break;
            ++w[r];
        }
        int r = nrows - 1;
        while (r >= 0 && sel[r] + 1 == static_cast<int>(rowsets[r].size())) sel[r--] = 0;
        if (r < 0) break;
        ++sel[r];
    }

    IntMatrix B = lattice_basis(D);
    if (B.cols() == 0) return zero_module(ctx, name);
    CycMatrix Bc = CycMatrix::from_int(B);

    const int n = ctx->G.n;
    std::vector<CycMatrix> act(n);
    for (int g = 0; g < n; ++g) {
        CycMatrix target = CycMatrix::identity(1);
        for (int c = 0; c < ncols; ++c)
            target = target.kronecker(sym_matrix(V.action(g), colsets[c], colindex[c]));
        act[g] = solve_exact(Bc, target * Bc);
    }
    return EquivariantModule(ctx, std::move(act), {}, name);
}

EquivariantModule coschur_module(const EquivariantModule& V, const Partition& lambda) {
    EquivariantModule m = schur_module(V, conjugate_partition(lambda));
    const int n = V.ctx()->G.n;
    std::vector<CycMatrix> act(n);
    for (int g = 0; g < n; ++g) act[g] = m.action(g);
    return EquivariantModule(V.ctx(), std::move(act), {},
                             "K" + partition_str(lambda) + "(" + V.name() + ")");
}

// --- named checks ----------------------------------------------------------------

CheckResult verify_prop_2_1(const EquivariantModule& V, const Partition& lambda) {
    const ConjugacyData& C = V.ctx()->C;
    const int w = partition_weight(lambda);
    const Partition conj = conjugate_partition(lambda);

    EquivariantModule L = schur_module(V, lambda);
    EquivariantModule K = coschur_module(V, lambda);
    ClassFunction chiL = L.character();
    ClassFunction chiK = K.character();

    // Exterior traces of the underlying action, straight from minors.
    std::vector<std::vector<Cyclotomic>> lam(C.class_count());
    for (int c = 0; c < C.class_count(); ++c) {
        lam[c].resize(w + 1);
        for (int i = 0; i <= w; ++i) lam[c][i] = exterior_trace(V.action(C.reps[c]), i);
    }
    SymExpr pL = schur_in_e(lambda);
    SymExpr pK = schur_in_e(conj);
    std::function<Cyclotomic(const Int&)> embed = [](const Int& n) {
        return Cyclotomic(Rat(n));
    };

    std::ostringstream detail;
    bool pass = true;
    for (int c = 0; c < C.class_count() && pass; ++c) {
        std::function<Cyclotomic(const SymVar&)> value = [&](const SymVar& v) {
            return lam[c][v.index];
        };
        Cyclotomic eL = pL.evaluate<Cyclotomic>(value, embed);
        Cyclotomic eK = pK.evaluate<Cyclotomic>(value, embed);
        if (!(eL == chiL.value(c))) {
            pass = false;
            detail << L.name() << " trace at class " << c << " is " << chiL.value(c).str()
                   << " but the determinantal polynomial gives " << eL.str();
        } else if (!(eK == chiK.value(c))) {
            pass = false;
            detail << K.name() << " trace at class " << c << " is " << chiK.value(c).str()
                   << " but the determinantal polynomial gives " << eK.str();
        }
    }
    Int dimL = tableau_count(conj, V.dim());
    Int dimK = tableau_count(lambda, V.dim());
    if (pass && Int(L.dim()) != dimL) {
        pass = false;
        detail << L.name() << " has dimension " << L.dim() << " but the hook-content count is "
               << dimL.get_str();
    }
    if (pass && Int(K.dim()) != dimK) {
        pass = false;
        detail << K.name() << " has dimension " << K.dim() << " but the hook-content count is "
               << dimK.get_str();
    }
    if (pass)
        detail << L.name() << " dim " << L.dim() << " and " << K.name() << " dim " << K.dim()
               << ": characters match the determinantal polynomials on all "
               << C.class_count() << " classes";
    return {pass, detail.str()};
}

CheckResult verify_module_cauchy(const EquivariantModule& V, const EquivariantModule& W, int i) {
    require_same_ctx(V, W);
    if (i < 0) throw domain_error("verify_module_cauchy: negative degree");
    const ConjugacyData& C = V.ctx()->C;
    SymExpr P = cauchy_P(i);
    std::function<Cyclotomic(const Int&)> embed = [](const Int& n) {
        return Cyclotomic(Rat(n));
    };
    std::ostringstream detail;
    for (int c = 0; c < C.class_count(); ++c) {
        int rep = C.reps[c];
        CycMatrix t = V.action(rep).kronecker(W.action(rep));
        Cyclotomic lhs = exterior_trace(t, i);
        std::vector<Cyclotomic> lamV(i + 1), lamW(i + 1);
        for (int k = 0; k <= i; ++k) {
            lamV[k] = exterior_trace(V.action(rep), k);
            lamW[k] = exterior_trace(W.action(rep), k);
        }
        std::function<Cyclotomic(const SymVar&)> value = [&](const SymVar& v) {
            return v.family == 'X' ? lamV[v.index] : lamW[v.index];
        };
        Cyclotomic rhs = P.evaluate<Cyclotomic>(value, embed);
        if (!(lhs == rhs)) {
            detail << "exterior degree " << i << " of " << V.name() << "(x)" << W.name()
                   << " at class " << c << ": minor trace " << lhs.str()
                   << " differs from the two-alphabet polynomial " << rhs.str();
            return {false, detail.str()};
        }
    }
    detail << "exterior degree " << i << " of " << V.name() << "(x)" << W.name()
           << " matches the two-alphabet polynomial on all " << C.class_count() << " classes";
    return {true, detail.str()};
}

}  // namespace powops
