#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powops/common.hpp"
#include "powops/partitions.hpp"

namespace powops {

// A formal indeterminate: one-letter family plus positive index, e.g. E3,
// H2, X1, Y4.  The index doubles as the graded weight of the variable.
struct SymVar {
    char family;
    int index;
    friend auto operator<=>(const SymVar&, const SymVar&) = default;
};

// Sorted (variable, exponent) pairs with positive exponents.
using SymMonomial = std::vector<std::pair<SymVar, int>>;

long monomial_weight(const SymMonomial& m, char family = 0);

// Integer polynomial in SymVar indeterminates with canonical term storage:
// zero coefficients are never kept, so structural equality is value equality.
class SymExpr {
public:
    SymExpr() = default;
    explicit SymExpr(long c) : SymExpr(Int(c)) {}
    explicit SymExpr(const Int& c);
    static SymExpr variable(char family, int index);

    const std::map<SymMonomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Int constant_value() const;

    SymExpr& operator+=(const SymExpr& o);
    SymExpr& operator-=(const SymExpr& o);
    SymExpr operator+(const SymExpr& o) const;
    SymExpr operator-(const SymExpr& o) const;
    SymExpr operator-() const;
    SymExpr operator*(const SymExpr& o) const;
    SymExpr times(const Int& c) const;
    friend bool operator==(const SymExpr&, const SymExpr&) = default;

    // Weight of the expression when every variable of the chosen family
    // weighs its index (family 0 = all variables); nullopt if monomial
    // weights differ, 0 for the zero polynomial.
    std::optional<long> homogeneous_weight(char family = 0) const;

    SymExpr rename_family(char from, char to) const;

    // Replace every variable for which repl returns a polynomial; other
    // variables stay formal.
    SymExpr substituted(const std::function<std::optional<SymExpr>(const SymVar&)>& repl) const;

    // Evaluate in a commutative ring T: embed maps integers into T, value
    // supplies each variable.  T needs operator+ and operator*.
    template <class T>
    T evaluate(const std::function<T(const SymVar&)>& value,
               const std::function<T(const Int&)>& embed) const {
        T acc = embed(Int(0));
        for (const auto& [mono, coeff] : terms_) {
            T term = embed(coeff);
            for (const auto& [v, exp] : mono)
                for (int e = 0; e < exp; ++e) term = term * value(v);
            acc = acc + term;
        }
        return acc;
    }

    // Canonical text, monomials in descending exponent-lex order, e.g.
    // "E1^3 - 3*E1*E2 + 3*E3".
    std::string str() const;

    void add_term(const SymMonomial& m, const Int& c);

private:
    std::map<SymMonomial, Int> terms_;
};

// The i-th power sum written in the elementary basis ('e', variables E_k:
// N_i = E_1 N_{i-1} - E_2 N_{i-2} + ... + (-1)^{i-1} i E_i) or the complete
// basis ('h': N_i = i H_i - sum_{r<i} N_r H_{i-r}).  A nonzero family
// letter relabels the variables (e.g. 'X').
SymExpr newton_poly(int i, char basis = 'e', char family = 0);

// det(E_{lambda_i - i + j})_{i,j<=len(lambda)}: the Schur expression of the
// transposed shape in elementary variables, homogeneous of weight |lambda|.
SymExpr schur_in_e(const Partition& lambda, char family = 'E');

// det(H_{lambda_i - i + j}): the Schur expression of shape lambda in
// complete-basis variables.
SymExpr schur_in_h(const Partition& lambda, char family = 'H');

// P_i(X;Y) = sum over |lambda| = i of schur_in_e(lambda, 'X') *
// schur_in_e(conjugate, 'Y'): the class of the i-th exterior power of a
// tensor product in the exterior classes of the factors.
SymExpr cauchy_P(int i);

// Q_j(X;Y) = sum over |lambda| = j of schur_in_h(lambda, 'X') *
// schur_in_h(lambda, 'Y'): the class of the j-th symmetric power of a
// tensor product in the symmetric classes of the factors.
SymExpr sym_cauchy_Q(int j);

// H_i written in the E variables via the alternating recursion
// H_i = E_1 H_{i-1} - E_2 H_{i-2} + ... + (-1)^{i-1} E_i.
SymExpr complete_in_elementary(int i);

struct IdentityReport {
    bool pass;
    std::string lhs;
    std::string rhs;
};

// N_i(P_1,...,P_i) = N_i(X) * N_i(Y), exactly.
IdentityReport verify_newton_cauchy(int i);

// Q_j(X; 0,...,0,1) = N_j in the complete basis, exactly.
IdentityReport verify_q_specialization(int j);

}  // namespace powops
