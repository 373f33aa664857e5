#include "powops/symfunc.hpp"

#include <algorithm>
#include <sstream>

namespace powops {

long monomial_weight(const SymMonomial& m, char family) {
    long w = 0;
    for (const auto& [v, exp] : m)
        if (family == 0 || v.family == family) w += static_cast<long>(v.index) * exp;
    return w;
}

SymExpr::SymExpr(const Int& c) {
    if (c != 0) terms_[SymMonomial{}] = c;
}

SymExpr SymExpr::variable(char family, int index) {
    if (index < 1) throw domain_error("SymExpr::variable: index must be >= 1");
    SymExpr e;
    e.terms_[SymMonomial{{SymVar{family, index}, 1}}] = 1;
    return e;
}

bool SymExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Int SymExpr::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw domain_error("SymExpr::constant_value: not a constant");
    return terms_.begin()->second;
}

void SymExpr::add_term(const SymMonomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SymExpr SymExpr::operator+(const SymExpr& o) const {
    SymExpr r = *this;
    r += o;
    return r;
}

SymExpr SymExpr::operator-(const SymExpr& o) const {
    SymExpr r = *this;
    r -= o;
    return r;
}

SymExpr SymExpr::operator-() const {
    SymExpr r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

namespace {

SymMonomial merge_monomials(const SymMonomial& a, const SymMonomial& b) {
    SymMonomial out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SymExpr SymExpr::operator*(const SymExpr& o) const {
    SymExpr r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(merge_monomials(ma, mb), ca * cb);
    return r;
}

SymExpr SymExpr::times(const Int& c) const {
    SymExpr r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

std::optional<long> SymExpr::homogeneous_weight(char family) const {
    std::optional<long> w;
    for (const auto& [m, c] : terms_) {
        (void)c;
        long mw = monomial_weight(m, family);
        if (!w) {
            w = mw;
        } else if (*w != mw) {
            return std::nullopt;
        }
    }
    return w ? w : std::optional<long>(0);
}

SymExpr SymExpr::rename_family(char from, char to) const {
    SymExpr r;
    for (const auto& [m, c] : terms_) {
        SymMonomial rm = m;
        for (auto& [v, exp] : rm) {
            (void)exp;
            if (v.family == from) v.family = to;
        }
        std::sort(rm.begin(), rm.end());
        r.add_term(rm, c);
    }
    return r;
}

SymExpr SymExpr::substituted(const std::function<std::optional<SymExpr>(const SymVar&)>& repl) const {
    return evaluate<SymExpr>(
        [&](const SymVar& v) {
            std::optional<SymExpr> r = repl(v);
            return r ? *r : SymExpr::variable(v.family, v.index);
        },
        [](const Int& c) { return SymExpr(c); });
}

namespace {

// Display order: descending lexicographic by exponent over ascending
// variable order, so E1^3 precedes E1*E2 precedes E3.
bool display_before(const SymMonomial& a, const SymMonomial& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first != b[j].first) return a[i].first < b[j].first;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    return i < a.size();
}

std::string monomial_str(const SymMonomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, exp] : m) {
        if (!first) os << "*";
        first = false;
        os << v.family << v.index;
        if (exp > 1) os << "^" << exp;
    }
    return os.str();
}

}  // namespace

std::string SymExpr::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const SymMonomial, Int>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return display_before(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const Int& c = t->second;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (t->first.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << monomial_str(t->first);
        }
    }
    return os.str();
}

SymExpr newton_poly(int i, char basis, char family) {
    if (i < 1) throw domain_error("newton_poly: i must be >= 1");
    if (basis != 'e' && basis != 'h') throw domain_error("newton_poly: basis must be 'e' or 'h'");
    char fam = family ? family : (basis == 'e' ? 'E' : 'H');
    std::vector<SymExpr> N(i + 1);
    for (int n = 1; n <= i; ++n) {
        SymExpr acc;
        if (basis == 'e') {
            // N_n = sum_{r<n} (-1)^{r-1} E_r N_{n-r} + (-1)^{n-1} n E_n.
            for (int r = 1; r < n; ++r) {
                SymExpr t = SymExpr::variable(fam, r) * N[n - r];
                acc += (r % 2) ? t : -t;
            }
            SymExpr last = SymExpr::variable(fam, n).times(n);
            acc += (n % 2) ? last : -last;
        } else {
            // N_n = n H_n - sum_{r<n} N_r H_{n-r}.
            acc = SymExpr::variable(fam, n).times(n);
            for (int r = 1; r < n; ++r) acc -= N[r] * SymExpr::variable(fam, n - r);
        }
        N[n] = acc;
    }
    return N[i];
}

namespace {

// Determinant of a matrix of polynomials by cofactor expansion along the
// first row; sizes stay <= 6 at the scales used here.
SymExpr poly_det(const std::vector<std::vector<SymExpr>>& m) {
    size_t n = m.size();
    if (n == 0) return SymExpr(1);
    if (n == 1) return m[0][0];
    SymExpr acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<SymExpr>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<SymExpr> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        SymExpr t = m[0][j] * poly_det(minor);
        acc += (j % 2) ? -t : t;
    }
    return acc;
}

SymExpr jacobi_trudi(const Partition& lambda, char family) {
    size_t n = lambda.size();
    std::vector<std::vector<SymExpr>> m(n, std::vector<SymExpr>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int idx = lambda[i] - static_cast<int>(i) + static_cast<int>(j);
            if (idx < 0)
                m[i][j] = SymExpr();
            else if (idx == 0)
                m[i][j] = SymExpr(1);
            else
                m[i][j] = SymExpr::variable(family, idx);
        }
    return poly_det(m);
}

}  // namespace

SymExpr schur_in_e(const Partition& lambda, char family) {
    if (!is_valid_partition(lambda)) throw domain_error("schur_in_e: invalid partition");
    if (lambda.empty()) return SymExpr(1);
    return jacobi_trudi(lambda, family);
}

SymExpr schur_in_h(const Partition& lambda, char family) {
    if (!is_valid_partition(lambda)) throw domain_error("schur_in_h: invalid partition");
    if (lambda.empty()) return SymExpr(1);
    return jacobi_trudi(lambda, family);
}

SymExpr cauchy_P(int i) {
    if (i < 0) throw domain_error("cauchy_P: i must be >= 0");
    SymExpr acc;
    for (const Partition& lambda : partitions_of(i))
        acc += schur_in_e(lambda, 'X') * schur_in_e(conjugate_partition(lambda), 'Y');
    return acc;
}

SymExpr sym_cauchy_Q(int j) {
    if (j < 0) throw domain_error("sym_cauchy_Q: j must be >= 0");
    SymExpr acc;
    for (const Partition& lambda : partitions_of(j))
        acc += schur_in_h(lambda, 'X') * schur_in_h(lambda, 'Y');
    return acc;
}

SymExpr complete_in_elementary(int i) {
    if (i < 0) throw domain_error("complete_in_elementary: negative index");
    std::vector<SymExpr> H(i + 1);
    H[0] = SymExpr(1);
    for (int n = 1; n <= i; ++n) {
        SymExpr acc;
        for (int r = 1; r <= n; ++r) {
            SymExpr t = SymExpr::variable('E', r) * H[n - r];
            acc += (r % 2) ? t : -t;
        }
        H[n] = acc;
    }
    return H[i];
}

IdentityReport verify_newton_cauchy(int i) {
    std::vector<SymExpr> P(i + 1);
    for (int k = 1; k <= i; ++k) P[k] = cauchy_P(k);
    SymExpr lhs = newton_poly(i, 'e').substituted([&](const SymVar& v) -> std::optional<SymExpr> {
        if (v.family != 'E') return std::nullopt;
        return P[v.index];
    });
    SymExpr rhs = newton_poly(i, 'e', 'X') * newton_poly(i, 'e', 'Y');
    return {lhs == rhs, lhs.str(), rhs.str()};
}

IdentityReport verify_q_specialization(int j) {
    SymExpr lhs = sym_cauchy_Q(j).substituted([&](const SymVar& v) -> std::optional<SymExpr> {
        if (v.family != 'Y') return std::nullopt;
        return SymExpr(v.index == j ? 1 : 0);
    });
    SymExpr rhs = newton_poly(j, 'h', 'X');
    return {lhs == rhs, lhs.str(), rhs.str()};
}

}  // namespace powops
