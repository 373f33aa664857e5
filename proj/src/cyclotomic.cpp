#include "powops/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace powops {

namespace {

// Exact division of integer polynomials, num / den with den monic-leading.
// Used only for Phi_m = (x^m - 1) / prod of lower Phi_d, where division is exact.
std::vector<Int> exact_poly_div(std::vector<Int> num, const std::vector<Int>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<Int> quot(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        Int q = num[i] / den[dd];
        if (q * den[dd] != num[i]) throw internal_error("exact_poly_div: inexact");
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw internal_error("exact_poly_div: nonzero remainder");
    return quot;
}

// Fold exponents mod m, then reduce mod Phi_m; result has length phi(m).
std::vector<Rat> fold_mod_phi(const std::vector<Rat>& raw, int m) {
    std::vector<Rat> work(m, Rat(0));
    for (size_t i = 0; i < raw.size(); ++i) work[i % m] += raw[i];
    const std::vector<Int>& phi = cyclotomic_polynomial(m);
    int deg = static_cast<int>(phi.size()) - 1;  // = euler_phi(m)
    for (int i = m - 1; i >= deg; --i) {
        if (work[i] == 0) continue;
        Rat q = work[i];  // phi is monic
        for (int j = 0; j <= deg; ++j) work[i - deg + j] -= q * Rat(phi[j]);
    }
    work.resize(deg);
    for (Rat& r : work) r.canonicalize();
    return work;
}

// Apply the field automorphism zeta_m -> zeta_m^s to a Phi_m-reduced vector.
std::vector<Rat> apply_automorphism(const std::vector<Rat>& v, int m, int s) {
    std::vector<Rat> raw(m, Rat(0));
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        raw[(i * static_cast<size_t>(s)) % m] += v[i];
    }
    return fold_mod_phi(raw, m);
}

// Precomputed data for deciding and performing the descent Q(zeta_m) -> Q(zeta_f):
//  - gens: automorphisms generating the subgroup {s in (Z/m)* : s = 1 mod f},
//    whose fixed field is exactly Q(zeta_f); a vector descends iff each one
//    fixes it, which is far cheaper to test than solving a linear system.
//  - T, built on first successful pretest: a row-reduction transform taking the
//    conductor-m coordinates of a descending vector to its conductor-f
//    coordinates (rows 0..phi(f)-1 of T*v), with zero tail rows.
struct DescentPlan {
    std::vector<int> gens;
    bool solver_ready = false;
    std::vector<std::vector<Rat>> T;
};

DescentPlan& descent_plan(int m, int f) {
    thread_local std::map<std::pair<int, int>, DescentPlan> cache;
    auto key = std::make_pair(m, f);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    DescentPlan plan;
    std::set<int> closed{1};
    auto close_under = [&](const std::vector<int>& gens) {
        std::set<int> h{1};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(h.begin(), h.end());
            for (int a : cur)
                for (int g : gens)
                    if (h.insert(static_cast<int>((static_cast<long>(a) * g) % m)).second) grew = true;
        }
        return h;
    };
    for (int s = 2; s < m; ++s) {
        if (std::gcd(s, m) != 1 || (s - 1) % f != 0) continue;
        if (closed.count(s)) continue;
        plan.gens.push_back(s);
        closed = close_under(plan.gens);
    }
    return cache.emplace(key, std::move(plan)).first->second;
}

void build_descent_solver(DescentPlan& plan, int m, int f) {
    int phim = static_cast<int>(euler_phi(m));
    int phif = static_cast<int>(euler_phi(f));
    int stride = m / f;
    // Columns: zeta_f^j = zeta_m^{j*stride} in the conductor-m basis.
    std::vector<std::vector<Rat>> basis(phim, std::vector<Rat>(phif, Rat(0)));
    for (int j = 0; j < phif; ++j) {
        std::vector<Rat> raw(static_cast<size_t>(j) * stride + 1, Rat(0));
        raw[static_cast<size_t>(j) * stride] = 1;
        std::vector<Rat> col = fold_mod_phi(raw, m);
        for (int i = 0; i < phim; ++i) basis[i][j] = col[i];
    }
    std::vector<std::vector<Rat>> T(phim, std::vector<Rat>(phim, Rat(0)));
    for (int i = 0; i < phim; ++i) T[i][i] = 1;
    // Reduce the basis columns to the identity block on rows 0..phif-1,
    // mirroring every row operation on T.  The columns are linearly
    // independent, so a pivot exists for each.
    for (int col = 0; col < phif; ++col) {
        int sel = -1;
        for (int i = col; i < phim; ++i)
            if (basis[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) throw internal_error("cyclotomic descent: dependent subfield basis");
        std::swap(basis[sel], basis[col]);
        std::swap(T[sel], T[col]);
        Rat inv = Rat(1) / basis[col][col];
        for (Rat& r : basis[col]) r *= inv;
        for (Rat& r : T[col]) r *= inv;
        for (int i = 0; i < phim; ++i) {
            if (i == col || basis[i][col] == 0) continue;
            Rat q = basis[i][col];
            for (int j = 0; j < phif; ++j) basis[i][j] -= q * basis[col][j];
            for (int j = 0; j < phim; ++j) T[i][j] -= q * T[col][j];
        }
    }
    plan.T = std::move(T);
    plan.solver_ready = true;
}

// ---------------------------------------------------------------------------
// Machine-integer fast lane.
//
// Character-theoretic work keeps coefficients tiny (sums of roots of unity and
// small integer combinations of them), so the hot operations run in plain
// longs against a precomputed reduction table for Q(zeta_m), with every input
// and output magnitude checked against bounds that make overflow impossible;
// anything outside the bounds falls back to the exact rational path.
// ---------------------------------------------------------------------------

// Guards chosen so all intermediates stay below 2^61 with m <= 128 and
// |reduction-table entry| <= 256 (see the bound notes at each use).
constexpr long kMulInGuard = 1L << 16;
constexpr long kMulLiftGuard = 1L << 18;
constexpr long kAddGuard = 1L << 44;

// Reduction table for exact long arithmetic in Q(zeta_m): red[e] holds the
// coordinates of zeta_m^e (0 <= e < m) in the reduced power basis.
struct LongRing {
    int m = 0;
    int deg = 0;
    std::vector<std::vector<long>> red;
};

const LongRing* long_ring(int m) {
    if (m > 128) return nullptr;
    thread_local std::map<int, std::optional<LongRing>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second ? &*it->second : nullptr;
    LongRing ring;
    ring.m = m;
    ring.deg = static_cast<int>(euler_phi(m));
    ring.red.resize(m);
    bool ok = true;
    for (int e = 0; ok && e < m; ++e) {
        std::vector<Rat> raw(static_cast<size_t>(e) + 1, Rat(0));
        raw[static_cast<size_t>(e)] = 1;
        std::vector<Rat> col = fold_mod_phi(raw, m);
        std::vector<long> row(ring.deg, 0);
        for (int r = 0; r < ring.deg; ++r) {
            mpq_srcptr q = col[r].get_mpq_t();
            if (mpz_cmp_ui(mpq_denref(q), 1) != 0 || !mpz_fits_slong_p(mpq_numref(q))) {
                ok = false;
                break;
            }
            long n = mpz_get_si(mpq_numref(q));
            if (n > 256 || n < -256) {
                ok = false;
                break;
            }
            row[r] = n;
        }
        ring.red[e] = std::move(row);
    }
    auto& slot = cache[m];
    if (ok) slot = std::move(ring);
    return slot ? &*slot : nullptr;
}

bool to_longs(const std::vector<Rat>& v, long guard, std::vector<long>& out) {
    out.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        mpq_srcptr q = v[i].get_mpq_t();
        if (mpz_cmp_ui(mpq_denref(q), 1) != 0 || !mpz_fits_slong_p(mpq_numref(q))) return false;
        long n = mpz_get_si(mpq_numref(q));
        if (n > guard || n < -guard) return false;
        out[i] = n;
    }
    return true;
}

bool small_coeffs(const std::vector<long>& v, long guard) {
    for (long x : v)
        if (x > guard || x < -guard) return false;
    return true;
}

// Reduce a by-exponent accumulator (length m) to basis coordinates.
// Bound: |out| <= |acc| + m * max|acc| * 256.
std::vector<long> long_apply(const LongRing& ring, const std::vector<long>& acc) {
    std::vector<long> out(ring.deg, 0);
    for (int t = 0; t < ring.m; ++t) {
        long v = acc[t];
        if (v == 0) continue;
        if (t < ring.deg) {
            out[t] += v;
            continue;
        }
        const std::vector<long>& row = ring.red[t];
        for (int r = 0; r < ring.deg; ++r) out[r] += v * row[r];
    }
    return out;
}

// Coordinates at conductor ring.m of a value given at conductor from_m | ring.m.
std::vector<long> long_lift(const LongRing& ring, const std::vector<long>& c, int from_m) {
    if (from_m == ring.m) return c;
    int stride = ring.m / from_m;
    std::vector<long> acc(ring.m, 0);
    for (size_t i = 0; i < c.size(); ++i) acc[i * static_cast<size_t>(stride)] = c[i];
    return long_apply(ring, acc);
}

// Product of two reduced coordinate vectors; exponents fold through zeta^m = 1.
std::vector<long> long_mul(const LongRing& ring, const std::vector<long>& a,
                           const std::vector<long>& b) {
    std::vector<long> acc(ring.m, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            size_t t = i + j;
            if (t >= static_cast<size_t>(ring.m)) t -= ring.m;
            acc[t] += a[i] * b[j];
        }
    }
    return long_apply(ring, acc);
}

bool long_fixes(const LongRing& ring, const std::vector<long>& v, int s) {
    std::vector<long> acc(ring.m, 0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        acc[(i * static_cast<size_t>(s)) % ring.m] += v[i];
    }
    return long_apply(ring, acc) == v;
}

// True when every subfield-descent pretest fails, i.e. ring.m is already the
// minimal conductor of v; false when v lies (or may lie) in a proper subfield,
// in which case the caller must renormalize through the exact path.
bool long_minimal(const LongRing& ring, const std::vector<long>& v); // fwd

// Express a Phi_m-reduced vector in the subfield Q(zeta_f), f | m, as a
// Phi_f-reduced vector, or nullopt when the value does not lie there.
std::optional<std::vector<Rat>> descend_coeffs(const std::vector<Rat>& v, int m, int f) {
    DescentPlan& plan = descent_plan(m, f);
    for (int s : plan.gens)
        if (apply_automorphism(v, m, s) != v) return std::nullopt;
    // Fixed by Gal(Q(zeta_m)/Q(zeta_f)), so the value lies in Q(zeta_f);
    // read its coordinates off the cached transform.
    if (!plan.solver_ready) build_descent_solver(plan, m, f);
    int phim = static_cast<int>(v.size());
    int phif = static_cast<int>(euler_phi(f));
    std::vector<Rat> t(phif);
    for (int r = 0; r < phim; ++r) {
        Rat acc(0);
        for (int i = 0; i < phim; ++i) {
            if (plan.T[r][i] == 0 || v[i] == 0) continue;
            acc += plan.T[r][i] * v[i];
        }
        if (r < phif) {
            acc.canonicalize();
            t[r] = acc;
        } else if (acc != 0) {
            throw internal_error("cyclotomic descent: invariant vector failed to descend");
        }
    }
    return t;
}

bool long_minimal(const LongRing& ring, const std::vector<long>& v) {
    int rest = ring.m;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        const DescentPlan& plan = descent_plan(ring.m, ring.m / p);
        bool fixed = true;
        for (int s : plan.gens)
            if (!long_fixes(ring, v, s)) {
                fixed = false;
                break;
            }
        if (fixed) return false;
    }
    return true;
}

}  // namespace

Cyclotomic& Cyclotomic::assign_reduced(const std::vector<long>& red, int m) {
    bool rational = true;
    for (size_t i = 1; i < red.size(); ++i)
        if (red[i] != 0) {
            rational = false;
            break;
        }
    if (rational) {
        m_ = 1;
        c_.assign(1, Rat(red.empty() ? 0L : red[0]));
        return *this;
    }
    const LongRing* ring = long_ring(m);
    if (ring && long_minimal(*ring, red)) {
        // No subfield pretest passed, so m is already the minimal conductor.
        m_ = m;
        c_.resize(red.size());
        for (size_t i = 0; i < red.size(); ++i) c_[i] = Rat(red[i]);
        return *this;
    }
    std::vector<Rat> v(red.size());
    for (size_t i = 0; i < red.size(); ++i) v[i] = Rat(red[i]);
    *this = from_reduced(std::move(v), m);
    return *this;
}

Cyclotomic Cyclotomic::from_reduced(std::vector<Rat> v, int m) {
    for (Rat& r : v) r.canonicalize();
    bool rational = true;
    for (size_t i = 1; i < v.size(); ++i) rational = rational && v[i] == 0;
    if (rational) {
        Cyclotomic z;
        z.c_[0] = v.empty() ? Rat(0) : v[0];
        return z;
    }
    bool descended = true;
    while (descended && m > 1) {
        descended = false;
        int rest = m;
        for (int p = 2; p <= rest; ++p) {
            if (rest % p != 0) continue;
            while (rest % p == 0) rest /= p;
            std::optional<std::vector<Rat>> d = descend_coeffs(v, m, m / p);
            if (d) {
                v = std::move(*d);
                m /= p;
                descended = true;
                break;
            }
        }
    }
    Cyclotomic z;
    z.m_ = m;
    z.c_ = std::move(v);
    return z;
}

std::vector<Rat> Cyclotomic::lifted_coeffs(int M) const {
    if (M % m_ != 0) throw internal_error("Cyclotomic::lifted_coeffs: conductor mismatch");
    if (M == m_) return c_;
    int stride = M / m_;
    std::vector<Rat> raw(static_cast<size_t>(M), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * stride] = c_[i];
    return fold_mod_phi(raw, M);
}

const std::vector<Int>& cyclotomic_polynomial(int m) {
    if (m < 1) throw domain_error("cyclotomic_polynomial: m must be positive");
    thread_local std::map<int, std::vector<Int>> cache;
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, filled for all divisors
    // of m in increasing order so every needed Phi_e is already cached.
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0 || cache.count(d)) continue;
        std::vector<Int> poly(d + 1, 0);
        poly[0] = -1;
        poly[d] = 1;
        for (int e = 1; e < d; ++e)
            if (d % e == 0) poly = exact_poly_div(std::move(poly), cache.at(e));
        cache.emplace(d, std::move(poly));
    }
    return cache.at(m);
}

Cyclotomic::Cyclotomic(const Rat& r) : m_(1), c_(1, r) {
    c_[0].canonicalize();
}

Cyclotomic Cyclotomic::zeta(int m, long k) {
    std::vector<Rat> raw;
    long e = ((k % m) + m) % m;
    raw.assign(static_cast<size_t>(e) + 1, Rat(0));
    raw[static_cast<size_t>(e)] = 1;
    return normalize(raw, m);
}

Cyclotomic Cyclotomic::normalize(const std::vector<Rat>& raw, int m) {
    if (m < 1) throw domain_error("Cyclotomic: conductor must be positive");
    return from_reduced(fold_mod_phi(raw, m), m);
}

bool Cyclotomic::is_zero() const {
    for (const Rat& r : c_)
        if (r != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::as_rational() const {
    if (!is_rational()) throw domain_error("Cyclotomic::as_rational: value is irrational: " + str());
    return c_[0];
}

std::optional<Rat> Cyclotomic::try_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
    if (m_ == 1) return *this;
    // Conjugation is a field automorphism of Q(zeta_m) over Q, so it preserves
    // the minimal conductor: reduce mod Phi_m and keep the conductor as is.
    Cyclotomic z;
    z.m_ = m_;
    if (const LongRing* ring = long_ring(m_)) {
        std::vector<long> v;
        if (to_longs(c_, kAddGuard, v)) {
            std::vector<long> acc(m_, 0);
            for (size_t i = 0; i < v.size(); ++i) {
                if (v[i] == 0) continue;
                acc[(i == 0) ? 0 : static_cast<size_t>(m_) - i] += v[i];
            }
            std::vector<long> red = long_apply(*ring, acc);
            z.c_.resize(red.size());
            for (size_t i = 0; i < red.size(); ++i) z.c_[i] = Rat(red[i]);
            return z;
        }
    }
    std::vector<Rat> raw(m_, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        size_t e = (i == 0) ? 0 : static_cast<size_t>(m_) - i;
        raw[e] += c_[i];
    }
    z.c_ = fold_mod_phi(raw, m_);
    return z;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z = *this;
    for (Rat& r : z.c_) r = -r;
    return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    // Adding a nonzero rational to an irrational value shifts only the
    // coordinate of the basis element 1 and cannot change the minimal
    // conductor (both values generate the same field).
    if (o.m_ == 1 && m_ != 1) {
        c_[0] += o.c_[0];
        c_[0].canonicalize();
        return *this;
    }
    if (m_ == 1 && o.m_ != 1) {
        Rat s = c_[0];
        *this = o;
        c_[0] += s;
        c_[0].canonicalize();
        return *this;
    }
    int M = static_cast<int>(lcm_long(m_, o.m_));
    // Machine-integer lane.  Bounds: lifts reach |.| <= 2^44 * 256 * 128 < 2^60,
    // the sum adds one bit, and the minimality pretests multiply a re-checked
    // <= 2^44 vector by table entries, staying below 2^60 throughout.
    if (const LongRing* ring = long_ring(M)) {
        std::vector<long> la, lb;
        if (to_longs(c_, kAddGuard, la) && to_longs(o.c_, kAddGuard, lb)) {
            std::vector<long> a = long_lift(*ring, la, m_);
            std::vector<long> b = long_lift(*ring, lb, o.m_);
            if (small_coeffs(a, kAddGuard) && small_coeffs(b, kAddGuard)) {
                for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
                return assign_reduced(a, M);
            }
        }
    }
    std::vector<Rat> a = lifted_coeffs(M);
    std::vector<Rat> b = o.lifted_coeffs(M);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    *this = from_reduced(std::move(a), M);
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    // Scaling by a nonzero rational rescales the coordinates and never
    // changes the minimal conductor, so skip the renormalization entirely.
    if (o.m_ == 1) {
        const Rat& s = o.c_[0];
        if (s == 0) { *this = Cyclotomic(); return *this; }
        for (Rat& r : c_) r *= s;
        return *this;
    }
    if (m_ == 1) {
        Rat s = c_[0];
        if (s == 0) return *this;
        *this = o;
        for (Rat& r : c_) r *= s;
        return *this;
    }
    int M = static_cast<int>(lcm_long(m_, o.m_));
    // Machine-integer lane.  Bounds: products of lifted coefficients are
    // <= 2^36, an exponent collects <= 128 of them (2^43), and the basis
    // reduction multiplies by <= 256 across <= 128 exponents (< 2^58).
    if (const LongRing* ring = long_ring(M)) {
        std::vector<long> la, lb;
        if (to_longs(c_, kMulInGuard, la) && to_longs(o.c_, kMulInGuard, lb)) {
            std::vector<long> a = long_lift(*ring, la, m_);
            std::vector<long> b = long_lift(*ring, lb, o.m_);
            if (small_coeffs(a, kMulLiftGuard) && small_coeffs(b, kMulLiftGuard)) {
                std::vector<long> prod = long_mul(*ring, a, b);
                if (small_coeffs(prod, kAddGuard)) return assign_reduced(prod, M);
            }
        }
    }
    std::vector<Rat> a = lifted_coeffs(M);
    std::vector<Rat> b = o.lifted_coeffs(M);
    std::vector<Rat> prod(a.size() + b.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    *this = normalize(prod, M);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw domain_error("Cyclotomic::inverse: zero");
    if (is_rational()) {
        Cyclotomic z = *this;
        z.c_[0] = Rat(1) / c_[0];
        return z;
    }
    // Extended Euclid in Q[x] for gcd(f, Phi_m) = 1: s*f + t*Phi = 1.
    std::vector<Rat> r0(c_.begin(), c_.end());
    const std::vector<Int>& phi = cyclotomic_polynomial(m_);
    std::vector<Rat> r1(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) r1[i] = Rat(phi[i]);
    std::vector<Rat> s0{Rat(1)}, s1{Rat(0)};
    auto degree = [](const std::vector<Rat>& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    while (true) {
        int d1 = degree(r1);
        if (d1 < 0) throw internal_error("Cyclotomic::inverse: gcd chain hit zero");
        if (d1 == 0) {
            // r1 is a nonzero constant: inverse = s1 / r1.
            std::vector<Rat> inv(s1.size());
            for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / r1[0];
            Cyclotomic z = normalize(inv, m_);
            return z;
        }
        int d0 = degree(r0);
        if (d0 < d1) { std::swap(r0, r1); std::swap(s0, s1); continue; }
        // r0 -= (lead ratio) x^{d0-d1} * r1, mirrored on s.
        Rat q = r0[d0] / r1[d1];
        int shift = d0 - d1;
        if (r0.size() < r1.size() + shift) r0.resize(r1.size() + shift, Rat(0));
        for (int i = 0; i <= d1; ++i) r0[i + shift] -= q * r1[i];
        if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, Rat(0));
        for (size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= q * s1[i];
    }
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
}

int Cyclotomic::cmp(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_ ? -1 : 1;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        int c = ::cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << m_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace powops
