#include <string>

#include "doctest.h"
#include "powops/bott.hpp"

using namespace powops;

TEST_CASE("truncated-sum elements fold exponents into the cyclic ring") {
    // theta_k = 1 + x + ... + x^{k-1} reduced mod x^m - 1.
    CHECK(cyc_str(bott_element(4, 3)) == "1 + x + x^2");
    CHECK(cyc_str(bott_element(3, 4)) == "2 + x + x^2");  // wraps once
    CHECK(cyc_str(bott_element(5, 1)) == "1");
    CHECK(cyc_eq(bott_element(1, 7), cyc_const(1, 7)));
    // The all-ones element.
    CHECK(cyc_str(norm_element(3)) == "1 + x + x^2");
}

TEST_CASE("polynomial ring operations") {
    CycPoly a = cyc_add(cyc_one(6), cyc_x_power(6, 4));
    CycPoly b = cyc_sub(cyc_x_power(6, 2), cyc_const(6, 3));
    CHECK(cyc_eq(cyc_mul(a, b), cyc_mul(b, a)));
    CycPoly c = cyc_x_power(6, 5);
    CHECK(cyc_eq(cyc_mul(cyc_mul(a, b), c), cyc_mul(a, cyc_mul(b, c))));
    CHECK(cyc_eq(cyc_mul(a, cyc_one(6)), a));
    CHECK(cyc_eq(cyc_scale(a, 3), cyc_add(a, cyc_add(a, a))));
    CHECK(cyc_eq(cyc_sub(a, a), cyc_zero(6)));
    // x^m folds to 1.
    CHECK(cyc_eq(cyc_x_power(6, 6), cyc_one(6)));
    // Augmentation is a ring map to the integers.
    CHECK(cyc_augmentation(cyc_mul(a, b)) ==
          cyc_augmentation(a) * cyc_augmentation(b));
}

TEST_CASE("telescoping: (x - 1) * theta_k = x^k - 1 and wraparound") {
    for (int m = 1; m <= 12; ++m)
        for (long k = 1; k <= 3 * m; ++k) {
            CHECK(verify_bott_wraparound(m, k).pass);
            CHECK(cyc_augmentation(bott_element(m, k)) == k);
        }
}

TEST_CASE("unit identities for coprime exponents") {
    CheckResult r = verify_lemma_5_7(3, 2, 2);
    CHECK(r.pass);
    r = verify_lemma_5_7(4, 3, 3);
    CHECK(r.pass);
    CHECK(r.detail.find("1 + 2*nu") != std::string::npos);
    CHECK(verify_lemma_5_7(5, 1, 1).pass);
    // Large inverse exponent: 7 * 31 = 217 = 1 + 18 * 12.
    r = verify_lemma_5_7(12, 7, 31);
    CHECK(r.pass);
    CHECK(r.detail.find("1 + 18*nu") != std::string::npos);

    // Full sweep over coprime pairs in the acceptance window.
    for (int m = 1; m <= 12; ++m)
        for (long k = 1; k <= 12; ++k) {
            if (gcd_long(k, m) != 1) continue;
            long kprime = 1;
            while ((k * kprime) % m != 1 % m) ++kprime;
            CHECK(verify_lemma_5_7(m, k, kprime).pass);
        }
}

TEST_CASE("non-coprime exponents are rejected up front") {
    CHECK_THROWS_AS(verify_lemma_5_7(4, 2, 2), domain_error);
    CHECK_THROWS_AS(verify_lemma_5_7(6, 3, 1), domain_error);
}

TEST_CASE("factorization shape with and without a unit witness") {
    CheckResult r = verify_prop_5_3_shape(4, 3);
    CHECK(r.pass);
    CHECK(r.detail.find("kprime=3") != std::string::npos);
    // k not coprime to m: the factorization still holds, without a unit.
    r = verify_prop_5_3_shape(4, 2);
    CHECK(r.pass);
    CHECK(r.detail.find("no unit witness") != std::string::npos);
    for (int m = 1; m <= 12; ++m)
        for (long k = 1; k <= 12; ++k)
            if (gcd_long(k, m) == 1) CHECK(verify_prop_5_3_shape(m, k).pass);
}

TEST_CASE("cofactor inverts the truncated sum modulo the norm ideal") {
    // theta_3 * cofactor = 1 + 2 * nu in Z[C4].
    CycPoly theta = bott_element(4, 3);
    CycPoly cof = bott_cofactor(4, 3, 3);
    CycPoly prod = cyc_mul(theta, cof);
    CycPoly expect = cyc_add(cyc_one(4), cyc_scale(norm_element(4), 2));
    CHECK(cyc_eq(prod, expect));
}
