#include <numeric>
#include <vector>

#include "doctest.h"
#include "powops/chartable.hpp"

using namespace powops;

namespace {

std::vector<long> degree_list(const CharacterTable& t) {
    std::vector<long> out;
    for (const Int& d : t.degrees()) out.push_back(d.get_si());
    return out;
}

// The unique degree-d row satisfying pred; fails the test if not unique.
const ClassFunction& row_of_degree(const CharacterTable& t, long d, int skip = 0) {
    for (int i = 0; i < t.size(); ++i)
        if (t.row(i).degree() == d) {
            if (skip == 0) return t.row(i);
            --skip;
        }
    REQUIRE(false);
    return t.row(0);
}

}  // namespace

TEST_CASE("irreducible degrees of the classical small groups") {
    CHECK(degree_list(character_table(group_ctx_from_spec("C4"))) ==
          std::vector<long>{1, 1, 1, 1});
    CHECK(degree_list(character_table(group_ctx_from_spec("S3"))) ==
          std::vector<long>{1, 1, 2});
    CHECK(degree_list(character_table(group_ctx_from_spec("Q8"))) ==
          std::vector<long>{1, 1, 1, 1, 2});
    CHECK(degree_list(character_table(group_ctx_from_spec("D4"))) ==
          std::vector<long>{1, 1, 1, 1, 2});
    CHECK(degree_list(character_table(group_ctx_from_spec("S4"))) ==
          std::vector<long>{1, 1, 2, 3, 3});
    CHECK(degree_list(character_table(group_ctx_from_spec("A4"))) ==
          std::vector<long>{1, 1, 1, 3});
}

TEST_CASE("row orthogonality and the degree identity") {
    for (const char* spec : {"S4", "Q8", "C6", "A4"}) {
        GroupRef ctx = group_ctx_from_spec(spec);
        CharacterTable t = character_table(ctx);
        long sum_sq = 0;
        for (int i = 0; i < t.size(); ++i) {
            long d = t.row(i).degree().get_si();
            sum_sq += d * d;
            CHECK(t.row(i).integral());
            for (int j = 0; j < t.size(); ++j) {
                Cyclotomic p = pairing(t.row(i), t.row(j));
                CHECK(p == Cyclotomic(i == j ? 1 : 0));
            }
        }
        CHECK(sum_sq == ctx->G.n);
    }
}

TEST_CASE("the generic table matches the shipped closed forms") {
    for (const char* spec : {"C6", "C12", "D4", "Q8", "S3", "S4", "A4"}) {
        GroupRef ctx = group_ctx_from_spec(spec);
        CharacterTable generic = character_table(ctx);
        auto closed = closed_form_table(ctx);
        REQUIRE(closed.has_value());
        REQUIRE(closed->size() == generic.size());
        for (int i = 0; i < generic.size(); ++i) CHECK(closed->row(i) == generic.row(i));
    }
    CHECK_FALSE(closed_form_table(group_ctx_from_spec("D6")).has_value());
}

TEST_CASE("decompose and assemble are mutually inverse") {
    GroupRef ctx = group_ctx_from_spec("S4");
    CharacterTable t = character_table(ctx);
    CHECK(t.row(t.trivial_index()) == ClassFunction::trivial(ctx));

    std::vector<Int> coords = {Int(2), Int(-1), Int(3), Int(0), Int(5)};
    ClassFunction f = t.assemble(coords);
    CHECK(t.decompose(f) == coords);

    // The regular character decomposes with the degrees as coordinates.
    CHECK(t.decompose(ClassFunction::regular(ctx)) == t.degrees());
}

TEST_CASE("power maps on S3: hand-computed images") {
    GroupRef ctx = group_ctx_from_spec("S3");
    CharacterTable t = character_table(ctx);
    const ClassFunction& triv = t.row(t.trivial_index());
    const ClassFunction& std2 = row_of_degree(t, 2);
    // sgn is the degree-1 row that is not trivial.
    const ClassFunction& r0 = row_of_degree(t, 1, 0);
    const ClassFunction& r1 = row_of_degree(t, 1, 1);
    const ClassFunction& sgn = (r0 == triv) ? r1 : r0;

    // psi^1 is the identity.
    CHECK(adams(std2, 1) == std2);
    // psi^2 on the 2-dim irreducible: values (2,2,-1) = triv - sgn + std.
    CHECK(adams(std2, 2) + sgn == triv + std2);
    // psi^3: squares of a transposition are transpositions^3 = transposition;
    // values (2,0,2) = triv + sgn.
    CHECK(adams(std2, 3) == triv + sgn);
    // psi is multiplicative in the exponent.
    CHECK(adams(adams(std2, 2), 3) == adams(std2, 6));
    // ... and a ring homomorphism for the pointwise product.
    CHECK(adams(std2 * sgn, 2) == adams(std2, 2) * adams(sgn, 2));
}

TEST_CASE("exterior and symmetric powers of the 2-dim S3 module") {
    GroupRef ctx = group_ctx_from_spec("S3");
    CharacterTable t = character_table(ctx);
    const ClassFunction& triv = t.row(t.trivial_index());
    const ClassFunction& std2 = row_of_degree(t, 2);
    const ClassFunction& r0 = row_of_degree(t, 1, 0);
    const ClassFunction& r1 = row_of_degree(t, 1, 1);
    const ClassFunction& sgn = (r0 == triv) ? r1 : r0;

    PowerOps ops = power_operations(std2, 3);
    CHECK(ops.lambda[0] == triv);
    CHECK(ops.lambda[1] == std2);
    CHECK(ops.lambda[2] == sgn);           // top exterior power = determinant
    CHECK(ops.lambda[3].is_zero());        // beyond the dimension
    CHECK(ops.sigma[2] == triv + std2);    // Sym^2: values (3,1,0)
    CHECK(ops.sigma[3] == triv + sgn + std2);  // Sym^3: values (4,0,1)
    for (int i = 0; i <= 3; ++i) CHECK(ops.sigma[i].integral());
}

TEST_CASE("adjoint power map against brute-force root counting") {
    GroupRef ctx = group_ctx_from_spec("C4");
    CharacterTable t = character_table(ctx);
    for (long k = 1; k <= 8; ++k)
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j) {
                Cyclotomic lhs = pairing(adams_adjoint(t.row(i), k), t.row(j));
                Cyclotomic rhs = pairing(t.row(i), adams(t.row(j), k));
                CHECK(lhs == rhs);
            }
    CHECK(verify_adjoint_pairing(t, 6).pass);
    // At exponent 4, psi-hat^3 = psi^3 since 3*3 = 1 mod 4.
    CHECK(verify_adjoint_is_inverse_adams(t, 3, 3).pass);
}

TEST_CASE("regular character is fixed exactly by coprime power maps") {
    for (const char* spec : {"S3", "C6", "Q8", "A4"}) {
        GroupRef ctx = group_ctx_from_spec(spec);
        for (long k = 1; k <= 2 * ctx->C.exponent; ++k)
            if (gcd_long(k, ctx->G.n) == 1) CHECK(verify_regular_fixed(ctx, k).pass);
    }
    // Negative control: C4 at k = 2 moves the regular character.
    CHECK_FALSE(verify_regular_fixed(group_ctx_from_spec("C4"), 2, false).pass);
}

TEST_CASE("periodicity in the exponent") {
    for (const char* spec : {"S3", "Q8", "C12"}) {
        CharacterTable t = character_table(group_ctx_from_spec(spec));
        for (long k = 1; k <= 2 * t.ctx()->C.exponent; ++k)
            CHECK(verify_periodicity(t, k).pass);
    }
}

TEST_CASE("koszul resolution and two-route virtual classes") {
    GroupRef ctx = group_ctx_from_spec("S3");
    CharacterTable t = character_table(ctx);
    const ClassFunction& std2 = row_of_degree(t, 2);
    for (int i = 1; i <= 4; ++i) {
        CHECK(verify_koszul(std2, i).pass);
        CHECK(verify_koszul(ClassFunction::regular(ctx), i).pass);
    }
    const ClassFunction& triv = t.row(t.trivial_index());
    CHECK(verify_multiplicativity(std2, triv + std2, 3).pass);
    for (int i = 1; i <= 4; ++i)
        CHECK(verify_virtual_sigma_paths(std2 + triv, std2, i).pass);
}

TEST_CASE("frobenius-schur classification") {
    // S3: every character is real.
    CharacterTable s3 = character_table(group_ctx_from_spec("S3"));
    FSData fs3 = fs_classify(s3);
    for (int i = 0; i < s3.size(); ++i) {
        CHECK(fs3.indicator[i] == 1);
        CHECK(fs3.partner[i] == -1);
    }

    // C4: one conjugate pair of complex characters.
    CharacterTable c4 = character_table(group_ctx_from_spec("C4"));
    FSData fc4 = fs_classify(c4);
    int complex_rows = 0;
    for (int i = 0; i < c4.size(); ++i)
        if (fc4.indicator[i] == 0) {
            ++complex_rows;
            int j = fc4.partner[i];
            REQUIRE(j >= 0);
            CHECK(fc4.partner[j] == i);
            CHECK(conjugate(c4.row(i)) == c4.row(j));
        }
    CHECK(complex_rows == 2);

    // Q8: the 2-dim row is quaternionic.
    CharacterTable q8 = character_table(group_ctx_from_spec("Q8"));
    FSData fq8 = fs_classify(q8);
    for (int i = 0; i < q8.size(); ++i)
        CHECK(fq8.indicator[i] == (q8.row(i).degree() == 2 ? -1 : 1));
}

TEST_CASE("symplectic subgroup membership") {
    CharacterTable q8 = character_table(group_ctx_from_spec("Q8"));
    FSData fs = fs_classify(q8);
    // The quaternionic row itself is a member; an odd multiple of a real
    // 1-dim row is not.
    std::vector<Int> coords(q8.size(), Int(0));
    for (int i = 0; i < q8.size(); ++i)
        if (q8.row(i).degree() == 2) coords[i] = 1;
    CHECK(in_symplectic_subgroup(q8, fs, coords).member);

    std::vector<Int> bad(q8.size(), Int(0));
    bad[q8.trivial_index()] = 1;
    SymplecticCheck sc = in_symplectic_subgroup(q8, fs, bad);
    CHECK_FALSE(sc.member);
    CHECK_FALSE(sc.violations.empty());

    std::vector<Int> even(q8.size(), Int(2));
    CHECK(in_symplectic_subgroup(q8, fs, even).member);
}
