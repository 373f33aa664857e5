#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powops/common.hpp"

namespace powops {

/// Element of a cyclotomic field, stored as a rational coefficient vector in
/// the power basis 1, zeta_m, ..., zeta_m^{phi(m)-1} where m is the *minimal*
/// conductor of the value (so rationals always sit at m = 1). The
/// representation is fully canonical: two equal values have the same
/// conductor and identical vectors, no matter how they were produced.
///
/// Mixed-conductor arithmetic lifts both operands into the lcm conductor and
/// re-reduces the result.
class Cyclotomic {
public:
    /// Zero.
    Cyclotomic() : m_(1), c_(1, Rat(0)) {}

    /// A rational constant.
    explicit Cyclotomic(const Rat& r);
    explicit Cyclotomic(long n) : Cyclotomic(Rat(n)) {}

    /// zeta_m^k.
    static Cyclotomic zeta(int m, long k = 1);

    /// Canonical representative of a raw power-basis coefficient vector
    /// (any length; exponents are taken mod m, reduced mod Phi_m, then the
    /// conductor is dropped to the minimal one).
    static Cyclotomic normalize(const std::vector<Rat>& raw, int m);

    int conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The rational value; throws domain_error when the element is irrational.
    Rat as_rational() const;
    std::optional<Rat> try_rational() const;

    /// Image under zeta -> zeta^{-1}; an involution.
    Cyclotomic conj() const;

    /// Field inverse (extended Euclid against Phi_m). Throws on zero.
    Cyclotomic inverse() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Total order on values: by minimal conductor, then coefficient vector.
    static int cmp(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return cmp(a, b) < 0; }

    /// Human form, e.g. "1 - 1/2*z3". JSON emission uses coeffs() directly.
    std::string str() const;

private:
    /// Adopt a Phi_m-reduced vector (length phi(m)), dropping the conductor
    /// to the minimal one.
    static Cyclotomic from_reduced(std::vector<Rat> v, int m);
    /// Adopt a Phi_m-reduced machine-integer vector, dropping the conductor
    /// to the minimal one.
    Cyclotomic& assign_reduced(const std::vector<long>& red, int m);
    /// This value's Phi_M-reduced vector at conductor M (m_ must divide M).
    std::vector<Rat> lifted_coeffs(int M) const;

    int m_;
    std::vector<Rat> c_;  // length phi(m_)
};

/// Coefficients of the m-th cyclotomic polynomial Phi_m (degree phi(m), monic,
/// index = power of x). Cached across calls.
const std::vector<Int>& cyclotomic_polynomial(int m);

}  // namespace powops
