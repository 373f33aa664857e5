#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "powops/cyclotomic.hpp"

using namespace powops;

namespace {

// Independent numeric oracle: evaluate the stored coefficient vector at the
// complex root exp(2*pi*i/m) in double precision.
std::complex<double> numeric(const Cyclotomic& v) {
    const double pi = 3.14159265358979323846;
    std::complex<double> acc = 0.0;
    int m = v.conductor();
    for (size_t j = 0; j < v.coeffs().size(); ++j) {
        double c = v.coeffs()[j].get_d();
        double ang = 2.0 * pi * static_cast<double>(j) / m;
        acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

bool close(const std::complex<double>& a, const std::complex<double>& b) {
    return std::abs(a - b) < 1e-6 * (1.0 + std::abs(a) + std::abs(b));
}

Cyclotomic random_element(std::mt19937& rng, int m) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Rat> raw(m);
    for (int j = 0; j < m; ++j) raw[j] = Rat(coeff(rng));
    return Cyclotomic::normalize(raw, m);
}

}  // namespace

TEST_CASE("rationals live at conductor 1") {
    Cyclotomic zero;
    CHECK(zero.is_zero());
    CHECK(zero.conductor() == 1);
    Cyclotomic half{Rat(1, 2)};
    CHECK(half.is_rational());
    CHECK(half.as_rational() == Rat(1, 2));
    CHECK(half.str() == "1/2");
    CHECK(Cyclotomic(3).try_rational().value() == 3);
}

TEST_CASE("classical root-of-unity identities") {
    // zeta_4^2 = -1, a rational.
    Cyclotomic i = Cyclotomic::zeta(4);
    CHECK(i * i == Cyclotomic(-1));
    CHECK((i * i).conductor() == 1);

    // 1 + zeta_3 + zeta_3^2 = 0.
    Cyclotomic w = Cyclotomic::zeta(3);
    CHECK((Cyclotomic(1) + w + w * w).is_zero());

    // Full vanishing sum at a prime conductor.
    Cyclotomic s;
    for (long k = 0; k < 5; ++k) s += Cyclotomic::zeta(5, k);
    CHECK(s.is_zero());

    // zeta_6 = 1 + zeta_3 and its minimal conductor is 3.
    Cyclotomic z6 = Cyclotomic::zeta(6);
    CHECK(z6.conductor() == 3);
    CHECK(z6 == Cyclotomic(1) + w);
    // Same value reached through conductor 12.
    CHECK(Cyclotomic::zeta(12, 2) == z6);

    // sqrt(2) = zeta_8 + zeta_8^{-1} squares to 2.
    Cyclotomic r2 = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7);
    CHECK(r2.conductor() == 8);
    CHECK(r2 * r2 == Cyclotomic(2));

    // Quadratic Gauss sum at 7: (sum of legendre(a) * zeta_7^a)^2 = -7.
    Cyclotomic g;
    for (long a = 1; a < 7; ++a) {
        long ls = 0;  // legendre symbol a over 7; squares mod 7 are {1,2,4}
        ls = (a == 1 || a == 2 || a == 4) ? 1 : -1;
        g += Cyclotomic(ls) * Cyclotomic::zeta(7, a);
    }
    CHECK(g * g == Cyclotomic(-7));
}

TEST_CASE("normalize folds exponents and drops the conductor") {
    // Raw exponent vector longer than phi(m).
    std::vector<Rat> raw(12, Rat(0));
    raw[0] = 1;
    raw[6] = 1;  // 1 + zeta_12^6 = 1 - 1 = 0
    CHECK(Cyclotomic::normalize(raw, 12).is_zero());

    // zeta_12^3 = i has minimal conductor 4.
    std::vector<Rat> raw2(12, Rat(0));
    raw2[3] = 1;
    Cyclotomic v = Cyclotomic::normalize(raw2, 12);
    CHECK(v.conductor() == 4);
    CHECK(v == Cyclotomic::zeta(4));
}

TEST_CASE("conjugation and inverse") {
    Cyclotomic w = Cyclotomic::zeta(5);
    CHECK(w.conj() == Cyclotomic::zeta(5, 4));
    CHECK(w.conj().conj() == w);
    CHECK(w * w.conj() == Cyclotomic(1));

    Cyclotomic v = Cyclotomic(2) + Cyclotomic::zeta(12, 7);
    CHECK(v * v.inverse() == Cyclotomic(1));
    CHECK(v.conj().conductor() == v.conductor());

    CHECK_THROWS_AS(Cyclotomic().inverse(), domain_error);
    CHECK_THROWS_AS((Cyclotomic::zeta(3) - Cyclotomic::zeta(3)).inverse(), domain_error);
}

TEST_CASE("total order is consistent with equality") {
    Cyclotomic a = Cyclotomic::zeta(3);
    Cyclotomic b = Cyclotomic::zeta(4);
    CHECK(Cyclotomic::cmp(a, a) == 0);
    CHECK(Cyclotomic::cmp(a, b) != 0);
    CHECK((Cyclotomic::cmp(a, b) < 0) == (a < b));
    CHECK((Cyclotomic(1) < Cyclotomic::zeta(3)));  // conductor 1 before 3
}

TEST_CASE("ring laws on randomized elements, cross-checked numerically") {
    std::mt19937 rng(20240817);
    for (int m : {8, 12, 24}) {
        for (int iter = 0; iter < 25; ++iter) {
            Cyclotomic a = random_element(rng, m);
            Cyclotomic b = random_element(rng, m);
            Cyclotomic c = random_element(rng, m);

            // Exact ring axioms across mixed conductors.
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());

            // Conjugation is a ring homomorphism.
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());

            // Numeric cross-check of the canonical representatives.
            CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
            CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
            CHECK(close(numeric(a.conj()), std::conj(numeric(a))));
        }
    }
}

TEST_CASE("huge coefficients take the exact big-integer route") {
    std::mt19937 rng(987654321);
    Cyclotomic a = random_element(rng, 24);
    Cyclotomic b = random_element(rng, 24);
    Cyclotomic big{Rat(Int("123456789012345678901234567890"))};
    // Scaling by a huge rational first must commute with the product.
    CHECK((big * a) * b == big * (a * b));
    CHECK(big * a + big * b == big * (a + b));
    Cyclotomic tiny{Rat(Int(1), Int("98765432109876543210"))};
    CHECK((tiny * a) * (tiny * b) == tiny * tiny * a * b);
}

TEST_CASE("division closes the field") {
    Cyclotomic a = Cyclotomic(3) + Cyclotomic::zeta(7, 2);
    Cyclotomic b = Cyclotomic(1) - Cyclotomic::zeta(7, 5);
    CHECK((a / b) * b == a);
}
