#include <functional>

#include "doctest.h"
#include "powops/symfunc.hpp"

using namespace powops;

namespace {

SymExpr E(int i) { return SymExpr::variable('E', i); }
SymExpr H(int i) { return SymExpr::variable('H', i); }

Int eval_elem(const SymExpr& e, const std::function<Int(const SymVar&)>& value) {
    return e.evaluate<Int>(value, [](const Int& c) { return c; });
}

}  // namespace

TEST_CASE("power sums in the elementary basis match the classical expansions") {
    CHECK(newton_poly(1) == E(1));
    CHECK(newton_poly(2) == E(1) * E(1) - E(2).times(2));
    CHECK(newton_poly(3).str() == "E1^3 - 3*E1*E2 + 3*E3");
    CHECK(newton_poly(4) == E(1) * E(1) * E(1) * E(1) - (E(1) * E(1) * E(2)).times(4) +
                                (E(2) * E(2)).times(2) + (E(1) * E(3)).times(4) -
                                E(4).times(4));
    CHECK(newton_poly(5) ==
          E(1) * E(1) * E(1) * E(1) * E(1) - (E(1) * E(1) * E(1) * E(2)).times(5) +
              (E(1) * E(2) * E(2)).times(5) + (E(1) * E(1) * E(3)).times(5) -
              (E(2) * E(3)).times(5) - (E(1) * E(4)).times(5) + E(5).times(5));
}

TEST_CASE("power sums in the complete basis") {
    // p2 = 2 h2 - h1^2, p3 = 3 h3 - 3 h1 h2 + h1^3.
    CHECK(newton_poly(2, 'h') == H(2).times(2) - H(1) * H(1));
    CHECK(newton_poly(3, 'h') == H(3).times(3) - (H(1) * H(2)).times(3) + H(1) * H(1) * H(1));
}

TEST_CASE("family relabeling") {
    SymExpr n2x = newton_poly(2, 'e', 'X');
    CHECK(n2x == SymExpr::variable('X', 1) * SymExpr::variable('X', 1) -
                     SymExpr::variable('X', 2).times(2));
    CHECK(newton_poly(2).rename_family('E', 'X') == n2x);
}

TEST_CASE("numeric evaluation against a concrete alphabet") {
    // Alphabet {2, 3, 5}: e1 = 10, e2 = 31, e3 = 30; p3 = 8 + 27 + 125 = 160.
    auto value = [](const SymVar& v) -> Int {
        REQUIRE(v.family == 'E');
        if (v.index == 1) return 10;
        if (v.index == 2) return 31;
        if (v.index == 3) return 30;
        return 0;
    };
    CHECK(eval_elem(newton_poly(3), value) == 160);
    // p4 = 16 + 81 + 625 = 722.
    CHECK(eval_elem(newton_poly(4), value) == 722);
}

TEST_CASE("schur polynomials in the elementary basis (dual determinant)") {
    // schur_in_e(lambda) is det(E_{lambda_i - i + j}), which is the classical
    // Schur function of the TRANSPOSED shape written in elementaries.  The
    // frozen right-hand sides below are the classical s_{transpose(lambda)}
    // expansions (independently recomputed symbolically).
    CHECK(schur_in_e({2, 1}) == E(1) * E(2) - E(3));                               // (2,1)~ = (2,1)
    CHECK(schur_in_e({2, 2}) == E(2) * E(2) - E(1) * E(3));                        // (2,2)~ = (2,2)
    CHECK(schur_in_e({3, 1}) == E(1) * E(3) - E(4));                               // s_{2,1,1}
    CHECK(schur_in_e({2, 1, 1}) ==
          E(1) * E(1) * E(2) - E(2) * E(2) - E(1) * E(3) + E(4));                  // s_{3,1}
    CHECK(schur_in_e({3}) == E(3));                                                // s_{1,1,1}
    CHECK(schur_in_e({1, 1, 1}) ==
          E(1) * E(1) * E(1) - (E(1) * E(2)).times(2) + E(3));                     // s_{3}
    CHECK(schur_in_e({1}) == E(1));
}

TEST_CASE("schur polynomials in the complete basis") {
    // In the complete basis the same determinant gives the classical
    // (untransposed) Schur function.
    CHECK(schur_in_h({2, 1}) == H(1) * H(2) - H(3));
    CHECK(schur_in_h({1, 1}) == H(1) * H(1) - H(2));
    CHECK(schur_in_h({3}) == H(3));
    CHECK(schur_in_h({1, 1, 1}) == H(1) * H(1) * H(1) - (H(1) * H(2)).times(2) + H(3));
    // Both bases come from one determinant, so renaming H to E lands on the
    // elementary-basis polynomial of the same shape.
    CHECK(schur_in_h({2, 1}).rename_family('H', 'E') == schur_in_e({2, 1}));
}

TEST_CASE("complete symmetric functions in elementaries") {
    CHECK(complete_in_elementary(2) == E(1) * E(1) - E(2));
    CHECK(complete_in_elementary(3) == E(1) * E(1) * E(1) - (E(1) * E(2)).times(2) + E(3));
    CHECK(complete_in_elementary(4) ==
          E(1) * E(1) * E(1) * E(1) - (E(1) * E(1) * E(2)).times(3) + (E(2) * E(2)) +
              (E(1) * E(3)).times(2) - E(4));
}

TEST_CASE("homogeneity and term bookkeeping") {
    for (int i = 1; i <= 6; ++i) {
        CHECK(newton_poly(i).homogeneous_weight() == i);
        CHECK(cauchy_P(i).homogeneous_weight('X') == i);
        CHECK(cauchy_P(i).homogeneous_weight('Y') == i);
        CHECK(sym_cauchy_Q(i).homogeneous_weight('X') == i);
    }
    CHECK(SymExpr(0).is_zero());
    CHECK(SymExpr(7).is_constant());
    CHECK(SymExpr(7).constant_value() == 7);
    SymExpr mixed = E(1) + E(2);
    CHECK_FALSE(mixed.homogeneous_weight().has_value());
}

TEST_CASE("cauchy classes at low degree") {
    // P_1(X;Y) = X1*Y1 and Q_1(X;Y) = X1*Y1.
    SymExpr x1y1 = SymExpr::variable('X', 1) * SymExpr::variable('Y', 1);
    CHECK(cauchy_P(1) == x1y1);
    CHECK(sym_cauchy_Q(1) == x1y1);
    CHECK(cauchy_P(0) == SymExpr(1));
    CHECK(sym_cauchy_Q(0) == SymExpr(1));
}

TEST_CASE("substitution keeps unmatched variables formal") {
    SymExpr p = newton_poly(2);  // E1^2 - 2 E2
    SymExpr q = p.substituted([](const SymVar& v) -> std::optional<SymExpr> {
        if (v.family == 'E' && v.index == 2) return SymExpr(0);
        return std::nullopt;
    });
    CHECK(q == E(1) * E(1));
}

TEST_CASE("identity reports for the two library verifiers") {
    for (int i = 1; i <= 5; ++i) {
        IdentityReport r = verify_newton_cauchy(i);
        CHECK(r.pass);
        IdentityReport q = verify_q_specialization(i);
        CHECK(q.pass);
    }
}
