#include "powops/bott.hpp"

#include <sstream>

namespace powops {

namespace {

void require_modulus(int m) {
    if (m < 1) throw domain_error("cyclic ring: modulus must be >= 1");
}

int fold_exponent(int m, long e) {
    long r = e % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

void require_same_ring(const CycPoly& a, const CycPoly& b) {
    if (a.m != b.m)
        throw domain_error("cyclic ring: mixed moduli " + std::to_string(a.m) +
                           " and " + std::to_string(b.m));
}

}  // namespace

CycPoly cyc_zero(int m) {
    require_modulus(m);
    CycPoly p;
    p.m = m;
    p.c.assign(m, Int(0));
    return p;
}

CycPoly cyc_one(int m) { return cyc_const(m, Int(1)); }

CycPoly cyc_const(int m, const Int& a) {
    CycPoly p = cyc_zero(m);
    p.c[0] = a;
    return p;
}

CycPoly cyc_x_power(int m, long e) {
    CycPoly p = cyc_zero(m);
    p.c[fold_exponent(m, e)] = 1;
    return p;
}

CycPoly cyc_add(const CycPoly& a, const CycPoly& b) {
    require_same_ring(a, b);
    CycPoly r = a;
    for (int i = 0; i < a.m; ++i) r.c[i] += b.c[i];
    return r;
}

CycPoly cyc_sub(const CycPoly& a, const CycPoly& b) {
    require_same_ring(a, b);
    CycPoly r = a;
    for (int i = 0; i < a.m; ++i) r.c[i] -= b.c[i];
    return r;
}

CycPoly cyc_mul(const CycPoly& a, const CycPoly& b) {
    require_same_ring(a, b);
    CycPoly r = cyc_zero(a.m);
    for (int i = 0; i < a.m; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < a.m; ++j) {
            if (b.c[j] == 0) continue;
            int t = i + j;
            if (t >= a.m) t -= a.m;
            r.c[t] += a.c[i] * b.c[j];
        }
    }
    return r;
}

CycPoly cyc_scale(const CycPoly& a, const Int& s) {
    CycPoly r = a;
    for (int i = 0; i < a.m; ++i) r.c[i] *= s;
    return r;
}

bool cyc_eq(const CycPoly& a, const CycPoly& b) {
    require_same_ring(a, b);
    for (int i = 0; i < a.m; ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

std::string cyc_str(const CycPoly& a) {
    std::string out;
    for (int e = 0; e < a.m; ++e) {
        const Int& v = a.c[e];
        if (v == 0) continue;
        Int av = v < 0 ? Int(-v) : v;
        std::string term;
        if (e == 0) {
            term = av.get_str();
        } else {
            std::string xs = e == 1 ? "x" : "x^" + std::to_string(e);
            term = av == 1 ? xs : av.get_str() + "*" + xs;
        }
        if (out.empty())
            out = (v < 0 ? "-" : "") + term;
        else
            out += (v < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

Int cyc_augmentation(const CycPoly& a) {
    Int s = 0;
    for (const Int& v : a.c) s += v;
    return s;
}

CycPoly bott_element(int m, long k) {
    require_modulus(m);
    if (k < 1) throw domain_error("bott_element: k must be >= 1");
    CycPoly p = cyc_zero(m);
    for (long i = 0; i < k; ++i) p.c[fold_exponent(m, i)] += 1;
    return p;
}

CycPoly norm_element(int m) {
    require_modulus(m);
    CycPoly p;
    p.m = m;
    p.c.assign(m, Int(1));
    return p;
}

CycPoly bott_cofactor(int m, long k, long kprime) {
    require_modulus(m);
    if (k < 1 || kprime < 1)
        throw domain_error("bott_cofactor: exponents must be >= 1");
    CycPoly p = cyc_zero(m);
    for (long i = 0; i < kprime; ++i) p.c[fold_exponent(m, i * k)] += 1;
    return p;
}

CheckResult verify_lemma_5_7(int m, long k, long kprime) {
    require_modulus(m);
    if (k < 1 || kprime < 1)
        throw domain_error("verify_lemma_5_7: exponents must be >= 1");
    Int prod = Int(k) * Int(kprime);
    if ((prod - 1) % m != 0)
        throw domain_error("verify_lemma_5_7: need k*kprime == 1 (mod m), got " +
                           prod.get_str() + " mod " + std::to_string(m));

    CycPoly theta = bott_element(m, k);
    CycPoly co = bott_cofactor(m, k, kprime);
    CycPoly x_minus_1 = cyc_sub(cyc_x_power(m, 1), cyc_one(m));
    CycPoly xk_minus_1 = cyc_sub(cyc_x_power(m, k), cyc_one(m));

    std::ostringstream os;
    os << "m=" << m << " k=" << k << " kprime=" << kprime
       << "; theta = " << cyc_str(theta) << "; cofactor = " << cyc_str(co);

    CycPoly lhs1 = cyc_mul(theta, x_minus_1);
    if (!cyc_eq(lhs1, xk_minus_1)) {
        os << "; identity (i) fails: theta*(x-1) = " << cyc_str(lhs1)
           << " but x^k-1 = " << cyc_str(xk_minus_1);
        return {false, os.str()};
    }

    long folded = static_cast<long>(mpz_class(prod % m).get_si());
    CycPoly lhs2 = cyc_x_power(m, folded);
    if (!cyc_eq(lhs2, cyc_x_power(m, 1))) {
        os << "; identity (ii) fails: x^(k*kprime) = " << cyc_str(lhs2);
        return {false, os.str()};
    }

    CycPoly lhs3 = cyc_mul(co, xk_minus_1);
    if (!cyc_eq(lhs3, x_minus_1)) {
        os << "; identity (iii) fails: cofactor*(x^k-1) = " << cyc_str(lhs3)
           << " but x-1 = " << cyc_str(x_minus_1);
        return {false, os.str()};
    }

    Int scalar = (prod - 1) / m;
    CycPoly rhs4 = cyc_add(cyc_one(m), cyc_scale(norm_element(m), scalar));
    CycPoly lhs4 = cyc_mul(theta, co);
    if (!cyc_eq(lhs4, rhs4)) {
        os << "; identity (iv) fails: theta*cofactor = " << cyc_str(lhs4)
           << " but 1 + " << scalar.get_str() << "*nu = " << cyc_str(rhs4);
        return {false, os.str()};
    }

    os << "; theta*cofactor = 1 + " << scalar.get_str() << "*nu"
       << "; all four identities hold";
    return {true, os.str()};
}

CheckResult verify_prop_5_3_shape(int m, long k) {
    require_modulus(m);
    if (k < 1) throw domain_error("verify_prop_5_3_shape: k must be >= 1");

    CycPoly theta = bott_element(m, k);
    CycPoly x_minus_1 = cyc_sub(cyc_x_power(m, 1), cyc_one(m));
    CycPoly xk_minus_1 = cyc_sub(cyc_x_power(m, k), cyc_one(m));

    std::ostringstream os;
    os << "m=" << m << " k=" << k << "; theta = " << cyc_str(theta);

    CycPoly factored = cyc_mul(x_minus_1, theta);
    if (!cyc_eq(factored, xk_minus_1)) {
        os << "; factorization fails: (x-1)*theta = " << cyc_str(factored)
           << " but x^k-1 = " << cyc_str(xk_minus_1);
        return {false, os.str()};
    }
    os << "; (x-1)*theta = x^k - 1";

    Int aug = cyc_augmentation(theta);
    if (aug != k) {
        os << "; augmentation fails: theta(1) = " << aug.get_str();
        return {false, os.str()};
    }
    os << "; theta(1) = " << aug.get_str();

    if (gcd_long(k, m) != 1) {
        os << "; gcd(k, m) = " << gcd_long(k, m) << ", no unit witness expected";
        return {true, os.str()};
    }

    long kprime = inverse_mod(k, m);
    CycPoly co = bott_cofactor(m, k, kprime);
    Int scalar = (Int(k) * Int(kprime) - 1) / m;
    CycPoly expected = cyc_add(cyc_one(m), cyc_scale(norm_element(m), scalar));
    CycPoly product = cyc_mul(theta, co);
    if (!cyc_eq(product, expected)) {
        os << "; unit witness fails at kprime=" << kprime
           << ": theta*cofactor = " << cyc_str(product) << " but expected "
           << cyc_str(expected);
        return {false, os.str()};
    }
    os << "; unit witness kprime=" << kprime << " gives theta*cofactor = 1 + "
       << scalar.get_str() << "*nu";
    return {true, os.str()};
}

CheckResult verify_bott_wraparound(int m, long k) {
    require_modulus(m);
    if (k < 1) throw domain_error("verify_bott_wraparound: k must be >= 1");
    CycPoly lhs = bott_element(m, k + m);
    CycPoly rhs = cyc_add(bott_element(m, k), norm_element(m));
    std::ostringstream os;
    os << "m=" << m << " k=" << k << "; theta^(k+m) = " << cyc_str(lhs);
    if (!cyc_eq(lhs, rhs)) {
        os << " but theta^k + nu = " << cyc_str(rhs);
        return {false, os.str()};
    }
    os << " = theta^k + nu";
    return {true, os.str()};
}

}  // namespace powops
