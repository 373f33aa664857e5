#include <numeric>
#include <vector>

#include "doctest.h"
#include "powops/lattices.hpp"

using namespace powops;

TEST_CASE("group-ring lattices act freely on their labelled basis") {
    GroupRef c4 = group_ctx_from_spec("C4");
    GammaLattice f2 = group_ring_lattice(c4, 2);
    CHECK(f2.rank == 8);
    CHECK(f2.basis_labels.size() == 8);
    validate_lattice(f2);
}

TEST_CASE("functorial integer matrices") {
    IntMatrix a = IntMatrix::from_rows({{1, 2, 0}, {0, 1, 3}, {1, 0, 1}});
    IntMatrix b = IntMatrix::from_rows({{2, 1, 1}, {0, 1, 0}, {1, 1, 1}});

    // Exterior square is functorial and 2x2 minors of a diagonal are products.
    CHECK(int_exterior_matrix(a * b, 2) ==
          int_exterior_matrix(a, 2) * int_exterior_matrix(b, 2));
    CHECK(int_symmetric_matrix(a * b, 2) ==
          int_symmetric_matrix(a, 2) * int_symmetric_matrix(b, 2));
    IntMatrix d = IntMatrix::from_rows({{2, 0}, {0, 3}});
    CHECK(int_exterior_matrix(d, 2) == IntMatrix::from_rows({{6}}));
    IntMatrix s = int_symmetric_matrix(d, 2);
    CHECK(s.rows() == 3);
    CHECK(bareiss_det(s) == 4 * 6 * 9);  // diagonal entries 4, 6, 9

    // Kronecker product of diagonals.
    IntMatrix k = int_kronecker(d, IntMatrix::from_rows({{5, 0}, {0, 7}}));
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 0) == 10);
    CHECK(k.at(3, 3) == 21);

    // Adjugate identity A * adj(A) = det(A) * I.
    CHECK(a * adjugate(a) == IntMatrix::identity(3).scaled(bareiss_det(a)));
    CHECK(adjugate(d) == IntMatrix::from_rows({{3, 0}, {0, 2}}));
}

TEST_CASE("orbit decomposition of multiset bases: hand-counted cases") {
    GroupRef c2 = group_ctx_from_spec("C2");

    // Sym^2 of Z[C2]: basis {ee, eg, gg}; orbits {ee,gg} (free) and {eg}.
    OrbitDecomposition d = sym_power_orbits(c2, 1, {2});
    CHECK(d.total == 3);
    CHECK(d.orbits.size() == 2);
    CHECK(d.free_orbits == 1);
    CHECK(d.max_stabilizer == 2);

    // Sym^3: basis size 4, two free orbits {eee,ggg} and {eeg,egg}.
    OrbitDecomposition d3 = sym_power_orbits(c2, 1, {3});
    CHECK(d3.total == 4);
    CHECK(d3.orbits.size() == 2);
    CHECK(d3.free_orbits == 2);

    // Rank 2 means two copies of the group ring, so Z-rank 4; the (1,1)
    // tensor has 4*4 = 16 basis pairs, and the swap fixes none of them
    // (Burnside: (16 + 0)/2 = 8 orbits, all free).
    OrbitDecomposition d11 = sym_power_orbits(c2, 2, {1, 1});
    CHECK(d11.total == 16);
    CHECK(d11.orbits.size() == 8);
    CHECK(d11.free_orbits == 8);
    CHECK(d11.max_stabilizer == 1);

    // C4, Sym^2: 10 monomials = two free orbits + {02,13} with stabilizer 2.
    GroupRef c4 = group_ctx_from_spec("C4");
    OrbitDecomposition dc4 = sym_power_orbits(c4, 1, {2});
    CHECK(dc4.total == 10);
    CHECK(dc4.orbits.size() == 3);
    CHECK(dc4.free_orbits == 2);
    CHECK(dc4.max_stabilizer == 2);

    // S3, Sym^5: 252 monomials, all orbits free (5 is coprime to 2 and 3).
    GroupRef s3 = group_ctx_from_spec("S3");
    OrbitDecomposition ds3 = sym_power_orbits(s3, 1, {5});
    CHECK(ds3.total == 252);
    CHECK(ds3.orbits.size() == 42);
    CHECK(ds3.free_orbits == 42);
    CHECK(ds3.max_stabilizer == 1);

    // Orbit sizes always multiply against stabilizers to the group order,
    // and sizes sum to the basis size.
    Int covered = 0;
    for (const Orbit& o : dc4.orbits) {
        CHECK(static_cast<long>(o.stabilizer.size()) * o.size == c4->G.n);
        covered += o.size;
    }
    CHECK(covered == dc4.total);
}

TEST_CASE("permutation character of the decomposition") {
    GroupRef c2 = group_ctx_from_spec("C2");
    OrbitDecomposition d = sym_power_orbits(c2, 1, {2});
    std::vector<Int> chi = decomposition_character(d);
    CHECK(chi == std::vector<Int>{Int(3), Int(1)});
}

TEST_CASE("orbit law verification and the enumeration budget") {
    CHECK(verify_prop_1_1(group_ctx_from_spec("C2"), 1, {2}).pass);
    CHECK(verify_prop_1_1(group_ctx_from_spec("C4"), 1, {2}).pass);
    CHECK(verify_prop_1_1(group_ctx_from_spec("S3"), 1, {5}).pass);
    CHECK(verify_prop_1_1(group_ctx_from_spec("C2"), 2, {1, 1}).pass);
    CHECK(verify_prop_1_1(group_ctx_from_spec("C12"), 2, {3, 2}).pass);

    // A combinatorial explosion is reported as a budget excess, not a hang.
    GroupRef c12 = group_ctx_from_spec("C12");
    CHECK_THROWS_AS(sym_power_orbits(c12, 2, {5, 1}), budget_error);
    try {
        sym_power_orbits(c12, 2, {5, 1});
    } catch (const budget_error& e) {
        CHECK(e.attempted > orbit_budget());
    }
}

TEST_CASE("p-local sublattices from equivariant maps") {
    GroupRef c2 = group_ctx_from_spec("C2");
    GammaLattice F = group_ring_lattice(c2, 1);

    // beta = 2 + g acting by right multiplication; det = 3.
    IntMatrix beta = IntMatrix::from_rows({{2, 1}, {1, 2}});
    CBetaResult cb = lattice_C_beta(F, beta, 3);
    CHECK(cb.index == 3);
    CHECK(cb.basis.rows() == 2);
    validate_lattice(cb.sub);

    // At a prime not dividing det(beta), the sublattice is everything.
    CHECK(lattice_C_beta(F, beta, 5).index == 1);
    CHECK(lattice_C_beta(F, IntMatrix::identity(2), 3).index == 1);

    // A non-equivariant map is rejected.
    IntMatrix skew = IntMatrix::from_rows({{1, 1}, {0, 1}});
    CHECK_THROWS_AS(lattice_C_beta(F, skew, 2), domain_error);
}

TEST_CASE("symmetric powers respect the compatible sublattices") {
    GroupRef c2 = group_ctx_from_spec("C2");
    GammaLattice F2 = group_ring_lattice(c2, 1);
    IntMatrix b21 = IntMatrix::from_rows({{2, 1}, {1, 2}});  // 2 + g
    IntMatrix b31 = IntMatrix::from_rows({{3, 1}, {1, 3}});  // 3 + g
    IntMatrix b12 = IntMatrix::from_rows({{1, 2}, {2, 1}});  // 1 + 2g

    for (int k : {1, 3}) {
        CHECK(verify_lemma_3_2b(F2, {b21}, {k}, 3).pass);
        CHECK(verify_lemma_3_2b(F2, {b31}, {k}, 2).pass);
        CHECK(verify_lemma_3_2b(F2, {b12}, {k}, 3).pass);
    }
    // Tensor of two factors with per-factor degrees.
    CHECK(verify_lemma_3_2b(F2, {b21, b31}, {2, 1}, 3).pass);

    GroupRef c3 = group_ctx_from_spec("C3");
    GammaLattice F3 = group_ring_lattice(c3, 1);
    IntMatrix c21 = IntMatrix::from_rows({{2, 1, 0}, {0, 2, 1}, {1, 0, 2}});
    IntMatrix c11 = IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    for (int k : {1, 2}) {
        CHECK(verify_lemma_3_2b(F3, {c21}, {k}, 3).pass);
        CHECK(verify_lemma_3_2b(F3, {c11}, {k}, 2).pass);
    }

    // The degree must stay coprime to the group order.
    CHECK_THROWS_AS(verify_lemma_3_2b(F2, {b21}, {2}, 3), domain_error);
}

TEST_CASE("matrices from files") {
    CHECK_THROWS_AS(beta_from_file("/no/such/beta.mat"), domain_error);
}
