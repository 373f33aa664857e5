#include "powops/quadfield.hpp"

#include <algorithm>
#include <sstream>

namespace powops {

namespace {

bool squarefree(long d) {
    if (d < 0) d = -d;
    for (long q = 2; q * q <= d; ++q)
        if (d % (q * q) == 0) return false;
    return true;
}

long math_mod(long a, long m) { return ((a % m) + m) % m; }

// --- small 2x2 lattice toolkit (full-rank sublattices of Z^2) ----------------

IntMatrix lat_sum(const IntMatrix& a, const IntMatrix& b) { return lattice_basis(a.hcat(b)); }

IntMatrix lat_product(const QuadraticField& Q, const IntMatrix& a, const IntMatrix& b);

bool lat_subset(const IntMatrix& a, const IntMatrix& b) {
    for (int j = 0; j < a.cols(); ++j) {
        std::vector<Int> col(a.rows());
        for (int i = 0; i < a.rows(); ++i) col[i] = a.at(i, j);
        if (!lattice_contains(b, col)) return false;
    }
    return true;
}

// {x : M x in L}
IntMatrix lat_preimage(const IntMatrix& m, const IntMatrix& l) {
    IntMatrix neg = l.scaled(-1);
    IntMatrix ker = integer_kernel(m.hcat(neg));
    IntMatrix xpart(m.cols(), ker.cols());
    for (int i = 0; i < m.cols(); ++i)
        for (int j = 0; j < ker.cols(); ++j) xpart.at(i, j) = ker.at(i, j);
    return lattice_basis(xpart);
}

// Saturation away from p: the smallest superlattice with p-power index in Z^2.
IntMatrix lat_saturate(const IntMatrix& l, long p) {
    Int idx = lattice_index(l);
    Int u = idx / p_part(idx, p);
    if (u == 1) return lattice_basis(l);
    IntMatrix uid = IntMatrix::identity(l.rows()).scaled(u);
    IntMatrix meet = lattice_intersection(l, uid);
    IntMatrix out(meet.rows(), meet.cols());
    for (int i = 0; i < meet.rows(); ++i)
        for (int j = 0; j < meet.cols(); ++j) {
            Int q = meet.at(i, j) / u;
            if (q * u != meet.at(i, j))
                throw internal_error("lat_saturate: intersection not divisible by the cofactor");
            out.at(i, j) = q;
        }
    return lattice_basis(out);
}

// [A : B] for nested full-rank lattices B <= A.
Int lat_index_in(const IntMatrix& outer, const IntMatrix& inner) {
    Int a = lattice_index(outer), b = lattice_index(inner);
    if (b % a != 0) throw internal_error("lat_index_in: indexes not nested");
    return b / a;
}

std::string lat_str(const IntMatrix& l) { return l.str(); }

IntMatrix lat_product(const QuadraticField& Q, const IntMatrix& a, const IntMatrix& b) {
    // Lattice generated by all products of a-basis and b-basis elements.
    IntMatrix gens(2, a.cols() * b.cols());
    int c = 0;
    for (int i = 0; i < a.cols(); ++i) {
        IntMatrix mi = mult_matrix(Q, a.at(0, i), a.at(1, i));
        for (int j = 0; j < b.cols(); ++j) {
            gens.at(0, c) = mi.at(0, 0) * b.at(0, j) + mi.at(0, 1) * b.at(1, j);
            gens.at(1, c) = mi.at(1, 0) * b.at(0, j) + mi.at(1, 1) * b.at(1, j);
            ++c;
        }
    }
    return lattice_basis(gens);
}

}  // namespace

QuadraticField quad_build(long D) {
    if (D == 0 || D == 1) throw domain_error("quad_build: D must not be 0 or 1");
    if (!squarefree(D)) throw domain_error("quad_build: D must be squarefree");
    QuadraticField Q;
    Q.D = D;
    Q.half_integral = math_mod(D, 4) == 1;
    if (Q.half_integral) {
        Q.disc = D;
        // t = (1+sqrt(D))/2 has T^2 - T - (D-1)/4.
        Q.phi_c1 = -1;
        Q.phi_c0 = -(D - 1) / 4;
        Q.sigma = IntMatrix::from_rows({{1, 1}, {0, -1}});  // t -> 1 - t
        Q.ring = "Z[(1+sqrt(" + std::to_string(D) + "))/2]";
    } else {
        Q.disc = 4 * D;
        Q.phi_c1 = 0;
        Q.phi_c0 = -D;
        Q.sigma = IntMatrix::from_rows({{1, 0}, {0, -1}});  // t -> -t
        Q.ring = "Z[sqrt(" + std::to_string(D) + ")]";
    }
    return Q;
}

IntMatrix mult_matrix(const QuadraticField& Q, const Int& u, const Int& v) {
    // t^2 = -c1 t - c0, so (u + v t) * t = -c0 v + (u - c1 v) t.
    IntMatrix m(2, 2);
    m.at(0, 0) = u;
    m.at(1, 0) = v;
    m.at(0, 1) = -Int(Q.phi_c0) * v;
    m.at(1, 1) = u - Int(Q.phi_c1) * v;
    return m;
}

Int element_norm(const QuadraticField& Q, const Int& u, const Int& v) {
    return bareiss_det(mult_matrix(Q, u, v));
}

namespace {

// phi'(t) coordinates: 2t (non-half-integral) or 2t - 1.
std::pair<Int, Int> derivative_coords(const QuadraticField& Q) {
    return Q.half_integral ? std::pair<Int, Int>(-1, 2) : std::pair<Int, Int>(0, 2);
}

// Lift of the nilradical of O/pO: the unique prime above a ramified p.
IntMatrix ramified_prime_lattice(const QuadraticField& Q, long p) {
    for (long u = 0; u < p; ++u)
        for (long v = 0; v < p; ++v) {
            if (u == 0 && v == 0) continue;
            IntMatrix m = mult_matrix(Q, u, v);
            // (u + v t)^2 coordinates
            Int su = m.at(0, 0) * u + m.at(0, 1) * v;
            Int sv = m.at(1, 0) * u + m.at(1, 1) * v;
            if (su % p == 0 && sv % p == 0) {
                IntMatrix gens(2, 3);
                gens.at(0, 0) = p;
                gens.at(1, 1) = p;
                gens.at(0, 2) = u;
                gens.at(1, 2) = v;
                return lattice_basis(gens);
            }
        }
    throw internal_error("ramified_prime_lattice: no nilpotent found at p=" + std::to_string(p));
}

int valuation_at(const QuadraticField& Q, const IntMatrix& P, long p, const Int& u, const Int& v) {
    std::vector<Int> x = {u, v};
    IntMatrix power = IntMatrix::identity(2);
    int val = 0;
    while (true) {
        power = lat_product(Q, power, P);
        if (!lattice_contains(lat_saturate(power, p), x)) return val;
        ++val;
        if (val > 64) throw internal_error("valuation_at: runaway valuation");
    }
}

RamifiedPrime make_ramified_prime(const QuadraticField& Q, long p) {
    RamifiedPrime rp;
    rp.p = p;
    rp.wild = (p == 2);
    rp.lattice = ramified_prime_lattice(Q, p);
    IntMatrix p2 = lat_product(Q, rp.lattice, rp.lattice);
    IntMatrix p2sat = lat_saturate(p2, p);
    IntMatrix psat = lat_saturate(rp.lattice, p);

    // Canonical uniformizer: sqrt(D) when it works, else the coefficient-least
    // element of P minus P^2 (ordered by |u|+|v|, then u, then v).
    Int ru = Q.half_integral ? Int(-1) : Int(0);
    Int rv = Q.half_integral ? Int(2) : Int(1);  // sqrt(D) = 2t - 1 or t
    auto in_p_not_p2 = [&](const Int& u, const Int& v) {
        std::vector<Int> x = {u, v};
        return lattice_contains(psat, x) && !lattice_contains(p2sat, x);
    };
    if (in_p_not_p2(ru, rv)) {
        rp.pi_u = ru;
        rp.pi_v = rv;
    } else {
        bool found = false;
        for (long s = 1; s <= 4 * p && !found; ++s)
            for (long u = -s; u <= s && !found; ++u) {
                long a = s - (u < 0 ? -u : u);
                for (long v : {-a, a}) {
                    if (in_p_not_p2(u, v)) {
                        rp.pi_u = u;
                        rp.pi_v = v;
                        found = true;
                        break;
                    }
                }
            }
        if (!found) throw internal_error("make_ramified_prime: no uniformizer found");
    }
    auto [du, dv] = derivative_coords(Q);
    rp.phi_valuation = valuation_at(Q, rp.lattice, p, du, dv);
    return rp;
}

}  // namespace

DifferentData quad_different(const QuadraticField& Q) {
    DifferentData d;
    auto [du, dv] = derivative_coords(Q);
    d.gen_u = du;
    d.gen_v = dv;
    d.norm = element_norm(Q, du, dv);
    if (d.norm < 0) d.norm = -d.norm;
    if (d.norm != Int(Q.disc < 0 ? -Q.disc : Q.disc))
        throw internal_error("quad_different: norm of the derivative differs from |disc|");
    long rest = Q.disc < 0 ? -Q.disc : Q.disc;
    Int local_product = 1;
    for (long p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        RamifiedPrime rp = make_ramified_prime(Q, p);
        for (int i = 0; i < rp.phi_valuation; ++i) local_product *= p;
        d.primes.push_back(std::move(rp));
        while (rest % p == 0) rest /= p;
    }
    if (local_product != d.norm)
        throw internal_error("quad_different: local valuations do not recover |disc|");
    return d;
}

OmegaPresentation quad_omega(const QuadraticField& Q) {
    OmegaPresentation o;
    auto [du, dv] = derivative_coords(Q);
    IntMatrix mphi = mult_matrix(Q, du, dv);
    o.relations = lattice_basis(mphi);
    o.order = lattice_index(o.relations);
    o.sigma_action = Q.sigma.scaled(-1);
    // Annihilator of the cyclic module from the presentation: elements whose
    // multiplication sends all of O into the relation lattice.
    IntMatrix tmul = mult_matrix(Q, 0, 1);
    IntMatrix ann = lattice_intersection(o.relations, lat_preimage(tmul, o.relations));
    o.annihilator_matches = lattice_equal(ann, o.relations);
    return o;
}

CheckResult verify_example_4_4(const QuadraticField& Q) {
    std::ostringstream detail;
    auto [du, dv] = derivative_coords(Q);
    Int n = element_norm(Q, du, dv);
    if (n < 0) n = -n;

    IntMatrix M = mult_matrix(Q, du, dv);
    const IntMatrix& S = Q.sigma;
    IntMatrix O = IntMatrix::identity(2);
    IntMatrix phiO = lattice_basis(M);                  // (phi') O
    IntMatrix Bp = phiO;                                // |disc| * (inverse different)
    IntMatrix nO = O.scaled(n);                         // scaled copy of the kernel O
    IntMatrix nphiO = lattice_basis(phiO.scaled(n));    // relations, scaled

    std::string tag = "D=" + std::to_string(Q.D) + " (" + Q.ring + ")";

    // The involution negates phi', so the scaled source and target are stable.
    if (!lattice_equal(S * Bp, Bp) || !lattice_equal(S * nphiO, nphiO) ||
        !lattice_equal(S * nO, nO))
        return {false, tag + ": a lattice in the sequence is not stable under the involution"};

    // Well-defined and surjective: the map sends the scaled inverse different
    // exactly onto the scaled ambient of the quotient.
    IntMatrix image = lattice_basis(M * Bp);
    if (!lattice_equal(image, nO))
        return {false, tag + ": image " + lat_str(image) + " differs from " + lat_str(nO)};

    // Kernel: preimage of the relation lattice inside the source.
    IntMatrix kernel = lattice_intersection(lat_preimage(M, nphiO), Bp);
    if (!lattice_equal(kernel, nO))
        return {false, tag + ": kernel " + lat_str(kernel) + " is not the ring of integers copy"};

    // Equivariance: with dt negated on the target, the obstruction matrix
    // M*S + S*M must vanish identically.
    IntMatrix obstruction = M * S + S * M;
    if (!(obstruction == IntMatrix(2, 2)))
        return {false, tag + ": equivariance obstruction " + lat_str(obstruction) + " is nonzero"};

    Int src_order = lat_index_in(Bp, nO);
    Int tgt_order = lat_index_in(nO, nphiO);
    if (src_order != Int(Q.disc < 0 ? -Q.disc : Q.disc) || src_order != tgt_order)
        return {false, tag + ": quotient orders " + src_order.get_str() + " and " +
                           tgt_order.get_str() + " do not both equal |disc|"};

    detail << tag << ": inverse-different quotient maps isomorphically onto the differential "
           << "module, both of order " << src_order.get_str()
           << "; equivariance holds as the exact identity M*S + S*M = 0 with source basis "
           << lat_str(Bp);
    return {true, detail.str()};
}

CheckResult verify_thm_4_1_graded(const QuadraticField& Q, const RamifiedPrime& P) {
    std::ostringstream detail;
    const long p = P.p;
    std::string tag = "D=" + std::to_string(Q.D) + " p=" + std::to_string(p);
    auto [du, dv] = derivative_coords(Q);
    const int l = P.phi_valuation;
    if (l < 1) return {false, tag + ": derivative has no valuation at this prime"};

    // Uniformizer data: c = (d pi / d t) * conjugate(pi); the map multiplies
    // by c into the norm-scaled target.
    Int cu, cv;
    {
        IntMatrix pi_col(2, 1);
        pi_col.at(0, 0) = P.pi_u;
        pi_col.at(1, 0) = P.pi_v;
        IntMatrix spi = Q.sigma * pi_col;
        cu = P.pi_v * spi.at(0, 0);  // d(pi)/dt = pi_v (constant term drops)
        cv = P.pi_v * spi.at(1, 0);
    }
    IntMatrix Mc = mult_matrix(Q, cu, cv);
    Int Npi = element_norm(Q, P.pi_u, P.pi_v);
    if (p_part(Npi, p) != p) return {false, tag + ": chosen uniformizer has wrong norm p-part"};

    const IntMatrix& S = Q.sigma;
    IntMatrix phiO = lattice_basis(mult_matrix(Q, du, dv));
    if (!lattice_equal(S * P.lattice, P.lattice))
        return {false, tag + ": ramified prime lattice not stable under the involution"};

    // Powers of the prime and the filtration layers L_i = P^i + (phi') O.
    std::vector<IntMatrix> Ppow(l + 3);
    Ppow[0] = IntMatrix::identity(2);
    for (int i = 1; i <= l + 2; ++i) Ppow[i] = lat_product(Q, Ppow[i - 1], P.lattice);
    auto scaled_layer = [&](int i) {
        IntMatrix Li = lat_sum(Ppow[i], phiO);
        return lat_saturate(Li.scaled(Npi < 0 ? -Npi : Npi), p);
    };

    Int layer_product = 1;
    for (int i = 0; i < l; ++i) {
        IntMatrix target_big = scaled_layer(i);      // p-local N * (P^i Omega ambient)
        IntMatrix target_small = scaled_layer(i + 1);
        std::string layer = tag + " layer i=" + std::to_string(i);

        // Well-defined: source and its sub map into the right scaled layers.
        if (!lat_subset(lattice_basis(Mc * Ppow[i + 1]), target_big))
            return {false, layer + ": image leaves the target layer"};
        if (!lat_subset(lattice_basis(Mc * Ppow[i + 2]), target_small))
            return {false, layer + ": sub-ideal image leaves the smaller layer"};

        // Surjectivity onto the graded quotient.
        IntMatrix span = lat_saturate(lat_sum(lattice_basis(Mc * Ppow[i + 1]), target_small), p);
        if (!lattice_equal(span, target_big))
            return {false, layer + ": image plus lower layer misses the graded quotient"};

        // Kernel exactness p-locally: preimage of the lower layer inside the
        // source must meet it in P^{i+2} up to prime-to-p index.
        IntMatrix kernel = lattice_intersection(lat_preimage(Mc, target_small), Ppow[i + 1]);
        if (!lat_subset(Ppow[i + 2], kernel))
            return {false, layer + ": kernel does not contain the expected sub-ideal"};
        Int excess = lat_index_in(kernel, Ppow[i + 2]);
        if (excess % p == 0)
            return {false, layer + ": kernel strictly larger than the sub-ideal at p (excess " +
                               excess.get_str() + ")"};

        // Equivariance into the quotient: the involution negates d(pi), so the
        // obstruction must land inside the lower layer.
        IntMatrix obstruction = S * Mc + Mc * S;
        if (!lat_subset(lattice_basis(obstruction * Ppow[i + 1]), target_small))
            return {false, layer + ": equivariance obstruction escapes the lower layer"};

        Int order = lat_index_in(target_big, target_small);
        if (order != Int(p))
            return {false, layer + ": graded layer has order " + order.get_str() +
                               " instead of the residue field size"};
        layer_product *= order;
    }

    Int expect = p_part(Int(Q.disc < 0 ? -Q.disc : Q.disc), p);
    if (layer_product != expect)
        return {false, tag + ": layer orders multiply to " + layer_product.get_str() +
                           " but the p-part of |disc| is " + expect.get_str()};

    detail << tag << ": " << l << " graded layer" << (l == 1 ? "" : "s")
           << " exact and equivariant with uniformizer (" << P.pi_u.get_str() << ","
           << P.pi_v.get_str() << "), orders multiply to " << expect.get_str()
           << (P.wild ? " (wild)" : " (tame)");
    return {true, detail.str()};
}

CheckResult verify_thm_4_1_all(const QuadraticField& Q) {
    DifferentData d = quad_different(Q);
    std::ostringstream detail;
    for (size_t i = 0; i < d.primes.size(); ++i) {
        CheckResult r = verify_thm_4_1_graded(Q, d.primes[i]);
        if (!r.pass) return r;
        detail << (i ? "; " : "") << r.detail;
    }
    if (d.primes.empty()) detail << "D=" << Q.D << ": no ramified primes (impossible for |disc|>1)";
    return {true, detail.str()};
}

CotangentElement cotangent_element(const QuadraticField& Q) {
    if (!Q.half_integral)
        throw domain_error(
            "cotangent_element: needs an odd discriminant (tame everywhere); D = " +
            std::to_string(Q.D) + " ramifies at 2");
    CotangentElement c;
    c.minuend = "[D^{-1} of " + Q.ring + "]";
    c.subtrahend = "[" + Q.ring + "]";
    c.witness = verify_example_4_4(Q);
    c.witness_order = Q.disc < 0 ? -Q.disc : Q.disc;
    return c;
}

}  // namespace powops
