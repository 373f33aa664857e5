#include <vector>

#include "doctest.h"
#include "powops/intmatrix.hpp"

using namespace powops;

namespace {

IntMatrix diag2(long a, long b) { return IntMatrix::from_rows({{a, 0}, {0, b}}); }

bool is_zero(const IntMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("construction and arithmetic") {
    IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 2);
    CHECK(a.transpose() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
    IntMatrix b = IntMatrix::from_rows({{5, 6}, {7, 8}});
    CHECK(a * b == IntMatrix::from_rows({{19, 22}, {43, 50}}));
    CHECK(a + b == IntMatrix::from_rows({{6, 8}, {10, 12}}));
    CHECK(b - a == IntMatrix::from_rows({{4, 4}, {4, 4}}));
    CHECK(a * IntMatrix::identity(2) == a);
    CHECK(a.scaled(3) == IntMatrix::from_rows({{3, 6}, {9, 12}}));
    std::vector<Int> v = a.apply({Int(1), Int(1)});
    CHECK(v[0] == 3);
    CHECK(v[1] == 7);
}

TEST_CASE("determinants") {
    CHECK(bareiss_det(IntMatrix::from_rows({{2, 1}, {1, 2}})) == 3);
    CHECK(bareiss_det(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
    // Hand expansion: 1*(50-48) - 2*(40-42) + 3*(32-35) = 2 + 4 - 9 = -3.
    CHECK(bareiss_det(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
    CHECK(bareiss_det(IntMatrix::identity(5)) == 1);
}

TEST_CASE("smith normal form") {
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SmithResult s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    Int du = bareiss_det(s.U), dv = bareiss_det(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // |det| = 8, gcd of entries 2, so the invariant factors are 2 | 4.
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 4);
    CHECK(s.D.at(0, 1) == 0);

    IntMatrix r1 = IntMatrix::from_rows({{2, 4}, {1, 2}});  // rank 1
    SmithResult s1 = smith_normal_form(r1);
    CHECK(s1.D.at(0, 0) == 1);
    CHECK(s1.D.at(1, 1) == 0);
}

TEST_CASE("hermite normal form and lattice equality") {
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
    HermiteResult h = hermite_normal_form(a);
    CHECK(a * h.U == h.H);
    Int du = bareiss_det(h.U);
    CHECK((du == 1 || du == -1));

    // Right multiplication by a unimodular matrix preserves the lattice.
    IntMatrix t = IntMatrix::from_rows({{1, 1}, {0, 1}});
    CHECK(lattice_equal(a, a * t));
    CHECK(lattice_equal(a, a * t * t.transpose()));
    CHECK_FALSE(lattice_equal(a, diag2(2, 6)));
    CHECK(lattice_index(a) == 6);
    CHECK(lattice_index(IntMatrix::identity(3)) == 1);
}

TEST_CASE("echelon solve and membership") {
    IntMatrix gens = IntMatrix::from_rows({{2, 2}, {0, 3}});  // columns (2,0), (2,3)
    IntMatrix b = lattice_basis(gens);
    std::vector<Int> v = {Int(2), Int(3)};
    auto sol = echelon_solve(b, v);
    REQUIRE(sol.has_value());
    CHECK(b.apply(*sol) == v);
    CHECK(lattice_contains(b, v));
    CHECK_FALSE(lattice_contains(b, {Int(1), Int(0)}));
    CHECK_FALSE(echelon_solve(b, {Int(0), Int(1)}).has_value());
}

TEST_CASE("integer kernel") {
    IntMatrix a = IntMatrix::from_rows({{2, 4}});
    IntMatrix k = integer_kernel(a);
    CHECK(k.cols() == 1);
    CHECK(is_zero(a * k));
    // The kernel is spanned by the primitive vector (2, -1).
    CHECK(lattice_contains(lattice_basis(k), {Int(2), Int(-1)}));

    CHECK(integer_kernel(IntMatrix::from_rows({{1, 2}, {3, 4}})).cols() == 0);

    IntMatrix wide = IntMatrix::from_rows({{1, 2, 3}});
    IntMatrix kw = integer_kernel(wide);
    CHECK(kw.cols() == 2);
    CHECK(is_zero(wide * kw));
}

TEST_CASE("lattice intersection") {
    // {x even} meets {y divisible by 3} in the diagonal lattice (2, 3).
    IntMatrix a = diag2(2, 1);
    IntMatrix b = diag2(1, 3);
    CHECK(lattice_equal(lattice_intersection(a, b), diag2(2, 3)));
    CHECK(lattice_equal(lattice_intersection(a, a), a));
}

