#include "powops/lattices.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace powops {

namespace {

// Sorted k-subsets of {0..d-1}, lexicographic.
std::vector<std::vector<int>> subsets_k(int d, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > d) return out;
    if (k == 0) return {{}};
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
    return out;
}

// Non-decreasing k-tuples over {0..d-1}, lexicographic.
std::vector<std::vector<int>> multisets_k(int d, int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) return {{}};
    if (d <= 0) return out;
    std::vector<int> s(k, 0);
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

long multichoose_long_direct(long d, long k) {
    Int c = multichoose_int(d, k);
    if (!c.fits_slong_p()) throw domain_error("multichoose_long: count overflows");
    return c.get_si();
}

// Rank/unrank call this with the same small arguments millions of times per
// enumeration; memoize per thread so the hot path is an array lookup.
long multichoose_long(long d, long k) {
    if (d < 0 || k < 0 || d > 2048 || k > 64) return multichoose_long_direct(d, k);
    thread_local std::vector<std::vector<long>> cache;
    if (cache.size() <= static_cast<size_t>(d)) cache.resize(d + 1);
    auto& row = cache[d];
    if (row.size() <= static_cast<size_t>(k)) row.resize(k + 1, -1);
    if (row[k] < 0) row[k] = multichoose_long_direct(d, k);
    return row[k];
}

// Lexicographic rank of a sorted multiset among multisets_k(d, k).
long multiset_rank(const std::vector<int>& s, int d) {
    long r = 0;
    int lo = 0;
    int k = static_cast<int>(s.size());
    for (int t = 0; t < k; ++t) {
        for (int v = lo; v < s[t]; ++v) r += multichoose_long(d - v, k - 1 - t);
        lo = s[t];
    }
    return r;
}

std::vector<int> multiset_unrank(long r, int d, int k) {
    std::vector<int> s(k);
    int lo = 0;
    for (int t = 0; t < k; ++t) {
        int v = lo;
        while (true) {
            long block = multichoose_long(d - v, k - 1 - t);
            if (r < block) break;
            r -= block;
            ++v;
        }
        s[t] = v;
        lo = v;
    }
    return s;
}

IntMatrix minor_matrix(const IntMatrix& a, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = a.at(rows[i], cols[j]);
    return m;
}

}  // namespace

void validate_lattice(const GammaLattice& L) {
    if (!L.ctx) throw domain_error("lattice: missing group context");
    const FiniteGroup& G = L.ctx->G;
    if (static_cast<int>(L.action.size()) != G.n)
        throw domain_error("lattice: need one action matrix per group element");
    for (const IntMatrix& m : L.action) {
        if (m.rows() != L.rank || m.cols() != L.rank)
            throw domain_error("lattice: action matrices must be rank x rank");
        Int d = bareiss_det(m);
        if (d != 1 && d != -1) throw domain_error("lattice: action matrix not unimodular");
    }
    if (!(L.action[G.identity] == IntMatrix::identity(L.rank)))
        throw domain_error("lattice: identity must act as the identity matrix");
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            if (!(L.action[G.mul[a][b]] == L.action[a] * L.action[b]))
                throw domain_error("lattice: action violates the multiplication table");
    if (!L.basis_labels.empty()) {
        if (static_cast<int>(L.basis_labels.size()) != L.rank)
            throw domain_error("lattice: label count differs from rank");
        for (int g = 0; g < G.n; ++g) {
            int fixed = 0;
            for (int j = 0; j < L.rank; ++j) {
                int ones = 0;
                for (int i = 0; i < L.rank; ++i) {
                    const Int& e = L.action[g].at(i, j);
                    if (e == 0) continue;
                    if (e != 1) throw domain_error("lattice: labeled basis requires a permutation action");
                    ++ones;
                    if (i == j) ++fixed;
                }
                if (ones != 1) throw domain_error("lattice: labeled basis requires a permutation action");
            }
            if (g != G.identity && fixed != 0)
                throw domain_error("lattice: labeled basis must be permuted freely");
        }
    }
}

GammaLattice group_ring_lattice(const GroupRef& ctx, int n) {
    if (n < 1) throw domain_error("group_ring_lattice: rank must be >= 1");
    const FiniteGroup& G = ctx->G;
    GammaLattice L;
    L.ctx = ctx;
    L.rank = G.n * n;
    L.action.assign(G.n, IntMatrix(L.rank, L.rank));
    L.basis_labels.resize(L.rank);
    for (int p = 0; p < n; ++p)
        for (int x = 0; x < G.n; ++x) {
            int l = p * G.n + x;
            L.basis_labels[l] = n > 1 ? G.labels[x] + "#" + std::to_string(p) : G.labels[x];
            for (int g = 0; g < G.n; ++g) L.action[g].at(p * G.n + G.mul[g][x], l) = 1;
        }
    L.name = n > 1 ? "ZG^" + std::to_string(n) : "ZG";
    validate_lattice(L);
    return L;
}

long orbit_budget() {
    if (const char* env = std::getenv("POWOPS_ORBIT_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000000L;
}

OrbitDecomposition sym_power_orbits(const GroupRef& ctx, int n, const std::vector<int>& ks) {
    if (n < 1) throw domain_error("sym_power_orbits: rank must be >= 1");
    if (ks.empty()) throw domain_error("sym_power_orbits: need at least one power");
    for (int k : ks)
        if (k < 1) throw domain_error("sym_power_orbits: powers must be >= 1");
    const FiniteGroup& G = ctx->G;
    const int B = G.n * n;
    const int r = static_cast<int>(ks.size());

    Int total = 1;
    for (int k : ks) total *= multichoose_int(B, k);
    long budget = orbit_budget();
    if (total > budget)
        throw budget_error("sym_power_orbits: tuple space of size " + total.get_str() +
                               " exceeds the enumeration budget " + std::to_string(budget),
                           total);

    std::vector<long> sizes(r);
    for (int i = 0; i < r; ++i) sizes[i] = multichoose_long(B, ks[i]);
    const long N = total.get_si();

    // label = point * |G| + element; left translation moves the element part.
    auto translate = [&](int g, const std::vector<int>& mset) {
        std::vector<int> out(mset.size());
        for (size_t t = 0; t < mset.size(); ++t)
            out[t] = (mset[t] / G.n) * G.n + G.mul[g][mset[t] % G.n];
        std::sort(out.begin(), out.end());
        return out;
    };

    OrbitDecomposition dec;
    dec.ctx = ctx;
    dec.rank = n;
    dec.powers = ks;
    dec.total = total;

    std::vector<bool> visited(static_cast<size_t>(N), false);
    std::vector<std::vector<int>> tuple(r);
    for (long idx = 0; idx < N; ++idx) {
        if (visited[static_cast<size_t>(idx)]) continue;
        long rest = idx;
        for (int i = r - 1; i >= 0; --i) {
            tuple[i] = multiset_unrank(rest % sizes[i], B, ks[i]);
            rest /= sizes[i];
        }
        Orbit orb;
        orb.rep = tuple;
        long distinct = 0;
        for (int g = 0; g < G.n; ++g) {
            long gidx = 0;
            for (int i = 0; i < r; ++i)
                gidx = gidx * sizes[i] + multiset_rank(translate(g, tuple[i]), B);
            if (gidx == idx) orb.stabilizer.push_back(g);
            if (!visited[static_cast<size_t>(gidx)]) {
                visited[static_cast<size_t>(gidx)] = true;
                ++distinct;
            }
        }
        orb.size = distinct;
        if (orb.size * static_cast<long>(orb.stabilizer.size()) != G.n)
            throw internal_error("sym_power_orbits: orbit size times stabilizer order is not the group order");
        dec.max_stabilizer = std::max(dec.max_stabilizer, static_cast<long>(orb.stabilizer.size()));
        if (orb.stabilizer.size() == 1) ++dec.free_orbits;
        dec.orbits.push_back(std::move(orb));
    }
    return dec;
}

std::vector<Int> decomposition_character(const OrbitDecomposition& d) {
    const FiniteGroup& G = d.ctx->G;
    const ConjugacyData& C = d.ctx->C;
    // Group the orbits by stabilizer: the coset character only depends on it.
    std::map<std::vector<int>, long> by_stab;
    for (const Orbit& o : d.orbits) ++by_stab[o.stabilizer];
    std::vector<Int> chi(C.class_count(), 0);
    for (const auto& [stab, count] : by_stab) {
        std::vector<bool> in_stab(G.n, false);
        for (int s : stab) in_stab[s] = true;
        for (int c = 0; c < C.class_count(); ++c) {
            int rep = C.reps[c];
            long fix = 0;
            for (int x = 0; x < G.n; ++x)
                if (in_stab[G.mul[G.mul[G.inverse[x]][rep]][x]]) ++fix;
            if (fix % static_cast<long>(stab.size()) != 0)
                throw internal_error("decomposition_character: coset fix count not divisible");
            chi[c] += Int(count) * Int(fix / static_cast<long>(stab.size()));
        }
    }
    return chi;
}

CheckResult verify_prop_1_1(const GroupRef& ctx, int n, const std::vector<int>& ks) {
    OrbitDecomposition d = sym_power_orbits(ctx, n, ks);
    const FiniteGroup& G = ctx->G;
    std::ostringstream detail;
    std::ostringstream params;
    params << "n=" << n << " k=(";
    for (size_t i = 0; i < ks.size(); ++i) params << (i ? "," : "") << ks[i];
    params << ") over " << G.name;

    long g = G.n;
    for (int k : ks) g = gcd_long(g, k);

    Int covered = 0;
    for (const Orbit& o : d.orbits) covered += o.size;
    if (covered != d.total) {
        detail << params.str() << ": orbit sizes sum to " << covered.get_str()
               << " but the tuple space has " << d.total.get_str();
        return {false, detail.str()};
    }
    for (const Orbit& o : d.orbits)
        if (g % static_cast<long>(o.stabilizer.size()) != 0) {
            detail << params.str() << ": stabilizer of order " << o.stabilizer.size()
                   << " does not divide gcd " << g;
            return {false, detail.str()};
        }
    if (g == 1) {
        if (d.free_orbits != static_cast<long>(d.orbits.size())) {
            detail << params.str() << ": gcd 1 but " << d.orbits.size() - d.free_orbits
                   << " orbits are not free";
            return {false, detail.str()};
        }
        if (Int(static_cast<long>(d.orbits.size())) * Int(G.n) != d.total) {
            detail << params.str() << ": free decomposition should have total/|G| orbits";
            return {false, detail.str()};
        }
    }

    // Character shadow: coset characters of the decomposition against the
    // symmetric-power characters of n copies of the regular character.
    std::vector<Int> perm_chi = decomposition_character(d);
    ClassFunction reg_n = ClassFunction::regular(ctx).times(Rat(n));
    ClassFunction expected = ClassFunction::trivial(ctx);
    int kmax = *std::max_element(ks.begin(), ks.end());
    PowerOps ops = power_operations(reg_n, kmax);
    for (int k : ks) expected = expected * ops.sigma[k];
    for (int c = 0; c < ctx->C.class_count(); ++c)
        if (!(Cyclotomic(Rat(perm_chi[c])) == expected.value(c))) {
            detail << params.str() << ": decomposition character at class " << c << " is "
                   << perm_chi[c].get_str() << " but the symmetric-power character gives "
                   << expected.value(c).str();
            return {false, detail.str()};
        }

    detail << params.str() << ": " << d.orbits.size() << " orbits (" << d.free_orbits
           << " free) over " << d.total.get_str() << " tuples, max stabilizer "
           << d.max_stabilizer << " divides gcd " << g << ", character matches";
    return {true, detail.str()};
}

// --- C(beta) -------------------------------------------------------------------

IntMatrix int_kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

IntMatrix int_exterior_matrix(const IntMatrix& a, int k) {
    if (a.rows() != a.cols()) throw domain_error("int_exterior_matrix: matrix not square");
    auto subsets = subsets_k(a.rows(), k);
    int n = static_cast<int>(subsets.size());
    IntMatrix m(n, n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) m.at(t, s) = bareiss_det(minor_matrix(a, subsets[t], subsets[s]));
    return m;
}

IntMatrix int_symmetric_matrix(const IntMatrix& a, int k) {
    if (a.rows() != a.cols()) throw domain_error("int_symmetric_matrix: matrix not square");
    const int d = a.rows();
    auto msets = multisets_k(d, k);
    std::map<std::vector<int>, int> index;
    for (size_t t = 0; t < msets.size(); ++t) index[msets[t]] = static_cast<int>(t);
    int n = static_cast<int>(msets.size());
    IntMatrix m(n, n);
    for (int s = 0; s < n; ++s) {
        std::map<std::vector<int>, Int> cur;
        cur[{}] = 1;
        for (int j : msets[s]) {
            std::map<std::vector<int>, Int> next;
            for (const auto& [key, coeff] : cur)
                for (int t = 0; t < d; ++t) {
                    if (a.at(t, j) == 0) continue;
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

IntMatrix adjugate(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw domain_error("adjugate: matrix not square");
    const int n = a.rows();
    if (n == 0) return a;
    IntMatrix adj(n, n);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int t = 0; t < n; ++t) {
                if (t != i) rows.push_back(t);
                if (t != j) cols.push_back(t);
            }
            Int c = bareiss_det(minor_matrix(a, rows, cols));
            adj.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

CBetaResult lattice_C_beta(const GammaLattice& F, const IntMatrix& beta, long p) {
    if (p < 2 || !is_prime_long(p)) throw domain_error("lattice_C_beta: p must be prime");
    if (beta.rows() != F.rank || beta.cols() != F.rank)
        throw domain_error("lattice_C_beta: matrix size differs from the lattice rank");
    for (const IntMatrix& ag : F.action)
        if (!(beta * ag == ag * beta))
            throw domain_error("lattice_C_beta: matrix does not commute with the group action");
    Int det = bareiss_det(beta);
    if (det == 0) throw domain_error("lattice_C_beta: singular matrix");
    Int pa = p_part(det, p);

    // {x : adj(beta) x = 0 mod p^a}: project the kernel of [adj | -p^a I].
    IntMatrix adj = adjugate(beta);
    IntMatrix scaled_id = IntMatrix::identity(F.rank).scaled(-pa);
    IntMatrix ker = integer_kernel(adj.hcat(scaled_id));
    IntMatrix xpart(F.rank, ker.cols());
    for (int i = 0; i < F.rank; ++i)
        for (int j = 0; j < ker.cols(); ++j) xpart.at(i, j) = ker.at(i, j);
    IntMatrix basis = lattice_basis(xpart);
    if (basis.cols() != F.rank) throw internal_error("lattice_C_beta: sublattice lost full rank");

    Int index = lattice_index(basis);
    if (index != pa)
        throw internal_error("lattice_C_beta: index " + index.get_str() +
                             " differs from the p-part " + pa.get_str());

    GammaLattice sub;
    sub.ctx = F.ctx;
    sub.rank = F.rank;
    sub.name = "C(" + (F.name.empty() ? std::string("F") : F.name) + ")";
    for (const IntMatrix& ag : F.action) {
        IntMatrix moved = ag * basis;
        IntMatrix rewritten(F.rank, F.rank);
        for (int j = 0; j < F.rank; ++j) {
            std::vector<Int> col(F.rank);
            for (int i = 0; i < F.rank; ++i) col[i] = moved.at(i, j);
            auto sol = echelon_solve(basis, col);
            if (!sol) throw internal_error("lattice_C_beta: sublattice is not stable under the action");
            for (int i = 0; i < F.rank; ++i) rewritten.at(i, j) = (*sol)[i];
        }
        sub.action.push_back(std::move(rewritten));
    }
    validate_lattice(sub);
    return {std::move(basis), std::move(index), std::move(sub)};
}

CheckResult verify_lemma_3_2b(const GammaLattice& F, const std::vector<IntMatrix>& betas,
                              const std::vector<int>& ks, long p) {
    if (betas.empty() || betas.size() != ks.size())
        throw domain_error("verify_lemma_3_2b: need one matrix per power");
    long g = F.ctx->G.n;
    for (int k : ks) {
        if (k < 1) throw domain_error("verify_lemma_3_2b: powers must be >= 1");
        g = gcd_long(g, k);
    }
    if (g != 1) throw domain_error("verify_lemma_3_2b: powers must be coprime to the group order");

    // Left side: the lattice spanned by products of C(beta_i) basis vectors.
    IntMatrix lhs_gen = IntMatrix::identity(1);
    for (size_t i = 0; i < betas.size(); ++i) {
        CBetaResult c = lattice_C_beta(F, betas[i], p);
        lhs_gen = int_kronecker(lhs_gen, int_symmetric_matrix(c.basis, ks[i]));
    }
    IntMatrix lhs = lattice_basis(lhs_gen);

    // Right side: C of the induced map on the same tensor-of-symmetric space.
    GammaLattice big;
    big.ctx = F.ctx;
    big.name = "Sym(" + (F.name.empty() ? std::string("F") : F.name) + ")";
    IntMatrix sym_beta = IntMatrix::identity(1);
    for (size_t i = 0; i < betas.size(); ++i)
        sym_beta = int_kronecker(sym_beta, int_symmetric_matrix(betas[i], ks[i]));
    big.rank = sym_beta.rows();
    for (int e = 0; e < F.ctx->G.n; ++e) {
        IntMatrix m = IntMatrix::identity(1);
        for (size_t i = 0; i < betas.size(); ++i)
            m = int_kronecker(m, int_symmetric_matrix(F.action[e], ks[i]));
        big.action.push_back(std::move(m));
    }
    validate_lattice(big);
    CBetaResult rhs = lattice_C_beta(big, sym_beta, p);

    std::ostringstream detail;
    Int expect = p_part(bareiss_det(sym_beta), p);
    Int lhs_index = lhs.cols() == lhs.rows() ? lattice_index(lhs) : Int(0);
    if (!lattice_equal(lhs, rhs.basis)) {
        detail << "sublattice spanned by C-basis products differs from C of the induced map (indices "
               << lhs_index.get_str() << " vs " << rhs.index.get_str() << ")";
        return {false, detail.str()};
    }
    if (lhs_index != expect || rhs.index != expect) {
        detail << "matching lattices but index " << rhs.index.get_str()
               << " differs from the p-part " << expect.get_str() << " of the induced determinant";
        return {false, detail.str()};
    }
    detail << "rank-" << big.rank << " tensor space: both constructions give the same HNF basis, index "
           << expect.get_str();
    return {true, detail.str()};
}

IntMatrix beta_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open matrix file: " + path);
    long r = -1;
    if (!(in >> r) || r < 1) throw domain_error("matrix file: bad size line");
    IntMatrix m(static_cast<int>(r), static_cast<int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            long long v;
            if (!(in >> v)) throw domain_error("matrix file: expected " + std::to_string(r * r) + " entries");
            m.at(i, j) = static_cast<long>(v);
        }
    return m;
}

}  // namespace powops
