#include "powops/intmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace powops {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw domain_error("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw domain_error("IntMatrix::mul: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("IntMatrix::add: shape mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("IntMatrix::sub: shape mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw domain_error("IntMatrix::apply: shape mismatch");
    std::vector<Int> r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::column(int c) const {
    IntMatrix r(rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
    return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw domain_error("IntMatrix::hcat: row mismatch");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::scaled(const Int& s) const {
    IntMatrix r = *this;
    for (Int& x : r.e_) x *= s;
    return r;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// Floor division quotient for integer reduction steps.
Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct SmithWork {
    IntMatrix A, U, V;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < A.cols(); ++j) std::swap(A.at(a, j), A.at(b, j));
        for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < A.rows(); ++i) std::swap(A.at(i, a), A.at(i, b));
        for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    }
    void addmul_row(int dst, int src, const Int& f) {  // row_dst += f*row_src
        for (int j = 0; j < A.cols(); ++j) A.at(dst, j) += f * A.at(src, j);
        for (int j = 0; j < U.cols(); ++j) U.at(dst, j) += f * U.at(src, j);
    }
    void addmul_col(int dst, int src, const Int& f) {
        for (int i = 0; i < A.rows(); ++i) A.at(i, dst) += f * A.at(i, src);
        for (int i = 0; i < V.rows(); ++i) V.at(i, dst) += f * V.at(i, src);
    }
    void negate_row(int r) {
        for (int j = 0; j < A.cols(); ++j) A.at(r, j) = -A.at(r, j);
        for (int j = 0; j < U.cols(); ++j) U.at(r, j) = -U.at(r, j);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& A) {
    SmithWork w{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols())};
    int n = std::min(A.rows(), A.cols());
    for (int t = 0; t < n; ++t) {
        for (;;) {
            // Minimal-absolute-value pivot in the trailing submatrix.
            int pr = -1, pc = -1;
            Int best;
            for (int i = t; i < w.A.rows(); ++i)
                for (int j = t; j < w.A.cols(); ++j) {
                    if (w.A.at(i, j) == 0) continue;
                    Int a = abs(w.A.at(i, j));
                    if (pr < 0 || a < best) { best = a; pr = i; pc = j; }
                }
            if (pr < 0) { pr = -2; break; }  // trailing block is zero
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);
            bool clean = true;
            for (int i = t + 1; i < w.A.rows(); ++i) {
                if (w.A.at(i, t) == 0) continue;
                Int q = fdiv_q(w.A.at(i, t), w.A.at(t, t));
                w.addmul_row(i, t, -q);
                if (w.A.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < w.A.cols(); ++j) {
                if (w.A.at(t, j) == 0) continue;
                Int q = fdiv_q(w.A.at(t, j), w.A.at(t, t));
                w.addmul_col(j, t, -q);
                if (w.A.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders exist; re-pivot
            // Divisibility sweep: pull any non-multiple into row t.
            bool chain_ok = true;
            for (int i = t + 1; i < w.A.rows() && chain_ok; ++i)
                for (int j = t + 1; j < w.A.cols() && chain_ok; ++j)
                    if (w.A.at(i, j) % w.A.at(t, t) != 0) {
                        w.addmul_row(t, i, Int(1));
                        chain_ok = false;
                    }
            if (chain_ok) break;
        }
        if (w.A.at(t, t) < 0) w.negate_row(t);
    }
    return {w.U, w.A, w.V};
}

Int bareiss_det(IntMatrix A) {
    if (A.rows() != A.cols()) throw domain_error("bareiss_det: matrix not square");
    int n = A.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (A.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
                Int q = num / prev;
                if (q * prev != num) throw internal_error("bareiss_det: inexact division");
                A.at(i, j) = q;
            }
        prev = A.at(k, k);
    }
    return sign * A.at(n - 1, n - 1);
}

HermiteResult hermite_normal_form(const IntMatrix& A) {
    IntMatrix H = A, U = IntMatrix::identity(A.cols());
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < H.rows(); ++i) std::swap(H.at(i, a), H.at(i, b));
        for (int i = 0; i < U.rows(); ++i) std::swap(U.at(i, a), U.at(i, b));
    };
    auto addmul_col = [&](int dst, int src, const Int& f) {
        for (int i = 0; i < H.rows(); ++i) H.at(i, dst) += f * H.at(i, src);
        for (int i = 0; i < U.rows(); ++i) U.at(i, dst) += f * U.at(i, src);
    };
    auto negate_col = [&](int c) {
        for (int i = 0; i < H.rows(); ++i) H.at(i, c) = -H.at(i, c);
        for (int i = 0; i < U.rows(); ++i) U.at(i, c) = -U.at(i, c);
    };

    int jcol = H.cols() - 1;
    std::vector<std::pair<int, int>> pivots;  // (row, col), built bottom-up
    for (int r = H.rows() - 1; r >= 0 && jcol >= 0; --r) {
        // Euclid over columns 0..jcol until row r has a single nonzero there.
        for (;;) {
            int p = -1;
            Int best;
            for (int j = 0; j <= jcol; ++j) {
                if (H.at(r, j) == 0) continue;
                Int a = abs(H.at(r, j));
                if (p < 0 || a < best) { best = a; p = j; }
            }
            if (p < 0) { p = -2; break; }
            swap_cols(p, jcol);
            bool clean = true;
            for (int j = 0; j < jcol; ++j) {
                if (H.at(r, j) == 0) continue;
                Int q = fdiv_q(H.at(r, j), H.at(r, jcol));
                addmul_col(j, jcol, -q);
                if (H.at(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        bool placed = false;
        for (int j = 0; j <= jcol; ++j) placed = placed || H.at(r, j) != 0;
        if (!placed) continue;
        if (H.at(r, jcol) < 0) negate_col(jcol);
        // Reduce this pivot row across the already-placed columns to the right.
        for (int k = jcol + 1; k < H.cols(); ++k) {
            Int q = fdiv_q(H.at(r, k), H.at(r, jcol));
            if (q != 0) addmul_col(k, jcol, -q);
        }
        pivots.emplace_back(r, jcol);
        --jcol;
    }
    return {H, U};
}

IntMatrix lattice_basis(const IntMatrix& generators) {
    IntMatrix H = hermite_normal_form(generators).H;
    int first = 0;
    auto col_zero = [&](int j) {
        for (int i = 0; i < H.rows(); ++i)
            if (H.at(i, j) != 0) return false;
        return true;
    };
    while (first < H.cols() && col_zero(first)) ++first;
    IntMatrix B(H.rows(), H.cols() - first);
    for (int i = 0; i < H.rows(); ++i)
        for (int j = first; j < H.cols(); ++j) B.at(i, j - first) = H.at(i, j);
    return B;
}

bool lattice_equal(const IntMatrix& gens_a, const IntMatrix& gens_b) {
    return lattice_basis(gens_a) == lattice_basis(gens_b);
}

std::optional<std::vector<Int>> echelon_solve(const IntMatrix& B, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != B.rows()) throw domain_error("echelon_solve: shape mismatch");
    // Pivot of column j = its last nonzero row; rows strictly increase with j.
    std::vector<int> pivot_row(B.cols(), -1);
    for (int j = 0; j < B.cols(); ++j) {
        for (int i = B.rows() - 1; i >= 0; --i)
            if (B.at(i, j) != 0) { pivot_row[j] = i; break; }
        if (pivot_row[j] < 0) throw domain_error("echelon_solve: zero column");
    }
    std::vector<Int> x(B.cols(), 0), rem = v;
    for (int j = B.cols() - 1; j >= 0; --j) {
        int r = pivot_row[j];
        Int q = rem[r] / B.at(r, j);
        if (q * B.at(r, j) != rem[r]) return std::nullopt;
        x[j] = q;
        if (q != 0)
            for (int i = 0; i < B.rows(); ++i) rem[i] -= q * B.at(i, j);
    }
    for (const Int& t : rem)
        if (t != 0) return std::nullopt;
    return x;
}

bool lattice_contains(const IntMatrix& B, const std::vector<Int>& v) {
    return echelon_solve(B, v).has_value();
}

Int lattice_index(const IntMatrix& basis) {
    if (basis.rows() != basis.cols()) throw domain_error("lattice_index: basis not square");
    Int d = bareiss_det(basis);
    if (d == 0) throw domain_error("lattice_index: basis not full rank");
    return abs(d);
}

IntMatrix integer_kernel(const IntMatrix& A) {
    SmithResult s = smith_normal_form(A);
    int n = std::min(A.rows(), A.cols());
    std::vector<int> zero_cols;
    for (int j = 0; j < A.cols(); ++j)
        if (j >= n || s.D.at(j, j) == 0) zero_cols.push_back(j);
    IntMatrix K(A.cols(), static_cast<int>(zero_cols.size()));
    for (size_t t = 0; t < zero_cols.size(); ++t)
        for (int i = 0; i < A.cols(); ++i) K.at(i, static_cast<int>(t)) = s.V.at(i, zero_cols[t]);
    return K;
}

IntMatrix lattice_intersection(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows() != B.rows()) throw domain_error("lattice_intersection: ambient mismatch");
    // x in both lattices iff x = A*a = B*b; kernel of [A | -B] gives all such pairs.
    IntMatrix M = A.hcat(B.scaled(Int(-1)));
    IntMatrix K = integer_kernel(M);
    IntMatrix Apart(A.cols(), K.cols());
    for (int i = 0; i < A.cols(); ++i)
        for (int j = 0; j < K.cols(); ++j) Apart.at(i, j) = K.at(i, j);
    return lattice_basis(A * Apart);
}

}  // namespace powops
