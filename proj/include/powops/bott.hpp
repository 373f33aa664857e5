#pragma once

#include <string>
#include <vector>

#include "powops/common.hpp"

namespace powops {

/// Element of Z[x]/(x^m - 1), stored as m integer coefficients on the
/// monomial basis 1, x, ..., x^{m-1}.
struct CycPoly {
    int m = 1;
    std::vector<Int> c;
};

CycPoly cyc_zero(int m);
CycPoly cyc_one(int m);
CycPoly cyc_const(int m, const Int& a);
/// x^e with the exponent folded into 0..m-1 (negative e allowed).
CycPoly cyc_x_power(int m, long e);

CycPoly cyc_add(const CycPoly& a, const CycPoly& b);
CycPoly cyc_sub(const CycPoly& a, const CycPoly& b);
/// Cyclic convolution: (a*b)[t] = sum over i+j == t (mod m) of a[i]*b[j].
CycPoly cyc_mul(const CycPoly& a, const CycPoly& b);
CycPoly cyc_scale(const CycPoly& a, const Int& s);
bool cyc_eq(const CycPoly& a, const CycPoly& b);
/// Display form like "2 + x + x^2", terms in increasing exponent.
std::string cyc_str(const CycPoly& a);
/// Ring map x -> 1: the sum of the coefficients.
Int cyc_augmentation(const CycPoly& a);

/// theta^k = 1 + x + ... + x^{k-1} with exponents folded mod m; k >= 1.
CycPoly bott_element(int m, long k);
/// nu = 1 + x + ... + x^{m-1}, the norm line generator.
CycPoly norm_element(int m);
/// sum over i < kprime of x^{ik}: the inverse factor paired with theta^k.
CycPoly bott_cofactor(int m, long k, long kprime);

/// The four exact identities tying theta^k to x^k - 1 and its inverse
/// factor. Requires k * kprime == 1 (mod m).
CheckResult verify_lemma_5_7(int m, long k, long kprime);
/// (x^k - 1) == (x - 1) * theta^k; when gcd(k, m) == 1 also finds the
/// minimal kprime and checks theta^k * cofactor == 1 modulo the norm line.
CheckResult verify_prop_5_3_shape(int m, long k);
/// theta^{k+m} == theta^k + nu.
CheckResult verify_bott_wraparound(int m, long k);

}  // namespace powops
