#include <vector>

#include "doctest.h"
#include "powops/chartable.hpp"
#include "powops/eqmodule.hpp"

using namespace powops;

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("named modules have the expected dimensions and characters") {
    GroupRef s3 = group_ctx_from_spec("S3");
    CHECK(module_by_name(s3, "reg").dim() == 6);
    CHECK(module_by_name(s3, "triv").dim() == 1);
    CHECK(module_by_name(s3, "sgn").dim() == 1);
    CHECK(module_by_name(s3, "std").dim() == 2);
    CHECK(module_by_name(s3, "perm").dim() == 3);

    // Characters agree with the table rows they realize.
    CharacterTable t = character_table(s3);
    ClassFunction std_chi = module_by_name(s3, "std").character();
    bool found = false;
    for (int i = 0; i < t.size(); ++i)
        if (t.row(i) == std_chi) found = true;
    CHECK(found);

    // perm = triv + std and reg decomposes with degree multiplicities.
    CHECK(module_by_name(s3, "perm").character() ==
          module_by_name(s3, "triv").character() + std_chi);
    CHECK(t.decompose(module_by_name(s3, "reg").character()) == t.degrees());

    CHECK_THROWS_AS(module_by_name(s3, "bogus"), domain_error);

    GroupRef q8 = group_ctx_from_spec("Q8");
    CHECK(module_by_name(q8, "2dim").dim() == 2);
    CHECK(module_by_name(q8, "line:0").dim() == 1);
    GroupRef c6 = group_ctx_from_spec("C6");
    for (int i = 0; i < 6; ++i)
        CHECK(module_by_name(c6, "line:" + std::to_string(i)).dim() == 1);
}

TEST_CASE("tensor, exterior, and symmetric constructions") {
    GroupRef s3 = group_ctx_from_spec("S3");
    EquivariantModule stdm = module_by_name(s3, "std");
    EquivariantModule perm = module_by_name(s3, "perm");

    EquivariantModule tens = tensor(stdm, perm);
    CHECK(tens.dim() == 6);
    CHECK(tens.character() == stdm.character() * perm.character());

    EquivariantModule reg = module_by_name(s3, "reg");
    for (int k = 0; k <= 3; ++k)
        CHECK(exterior_power(reg, k).dim() == binom(6, k));
    for (int k = 0; k <= 3; ++k)
        CHECK(symmetric_power(stdm, k).dim() == binom(2 + k - 1, k));

    // Top exterior power of the 2-dim module is the sign line.
    CHECK(exterior_power(stdm, 2).character() == module_by_name(s3, "sgn").character());
    // Sym^2(std) carries character (3,1,0) = triv + std.
    CHECK(symmetric_power(stdm, 2).character() ==
          module_by_name(s3, "triv").character() + stdm.character());
}

TEST_CASE("schur and coschur dimensions follow the hook-content counts") {
    GroupRef s3 = group_ctx_from_spec("S3");
    EquivariantModule stdm = module_by_name(s3, "std");   // dim 2
    EquivariantModule perm = module_by_name(s3, "perm");  // dim 3

    // The module of shape lambda carries the classical Schur character of the
    // TRANSPOSED shape (exterior powers run along the rows of lambda), so its
    // dimension is the hook-content count of transpose(lambda).
    // dim 2: s_(2,1) = 2, s_(2,2) = 1, s_(2,1,1) = 0, s_(3,1) = 3.
    CHECK(schur_module(stdm, {2, 1}).dim() == 2);
    CHECK(schur_module(stdm, {2, 2}).dim() == 1);
    CHECK(schur_module(stdm, {3, 1}).dim() == 0);     // transpose (2,1,1)
    CHECK(schur_module(stdm, {2, 1, 1}).dim() == 3);  // transpose (3,1)
    // dim 3: s_(2,1) = 8, s_(2,2) = 6, s_(2,1,1) = 3, s_(3,1) = 15,
    //        s_(1,1,1) = 1, s_(3) = 10.
    CHECK(schur_module(perm, {2, 1}).dim() == 8);
    CHECK(schur_module(perm, {2, 2}).dim() == 6);
    CHECK(schur_module(perm, {3, 1}).dim() == 3);      // transpose (2,1,1)
    CHECK(schur_module(perm, {2, 1, 1}).dim() == 15);  // transpose (3,1)
    CHECK(schur_module(perm, {3}).dim() == 1);         // transpose (1,1,1)
    CHECK(schur_module(perm, {1, 1, 1}).dim() == 10);  // transpose (3)

    // Single-row shapes reduce to exterior powers, single columns to
    // symmetric powers; the coSchur construction swaps the two.
    CHECK(schur_module(perm, {2}).character() == exterior_power(perm, 2).character());
    CHECK(schur_module(perm, {1, 1}).character() == symmetric_power(perm, 2).character());
    CHECK(coschur_module(perm, {2}).character() == symmetric_power(perm, 2).character());
    CHECK(coschur_module(perm, {1, 1}).character() == exterior_power(perm, 2).character());

    // The coSchur module of a shape matches the module of its conjugate.
    CHECK(coschur_module(stdm, {2, 1}).dim() == 2);
    CHECK(coschur_module(perm, {3, 1}).dim() ==
          schur_module(perm, {2, 1, 1}).dim());
    CHECK(coschur_module(perm, {2, 1, 1}).character() ==
          schur_module(perm, {3, 1}).character());
}

TEST_CASE("determinantal character law for schur and coschur modules") {
    GroupRef s3 = group_ctx_from_spec("S3");
    for (const char* name : {"std", "perm"}) {
        EquivariantModule V = module_by_name(s3, name);
        for (const Partition& lam :
             {Partition{1}, {2}, {1, 1}, {2, 1}, {3}, {2, 2}, {2, 1, 1}, {3, 1}})
            CHECK(verify_prop_2_1(V, lam).pass);
    }
    GroupRef q8 = group_ctx_from_spec("Q8");
    CHECK(verify_prop_2_1(module_by_name(q8, "2dim"), {2, 1}).pass);
    GroupRef d4 = group_ctx_from_spec("D4");
    CHECK(verify_prop_2_1(module_by_name(d4, "2dim"), {2, 2}).pass);
}

TEST_CASE("exterior powers of a tensor product expand by the cauchy rule") {
    GroupRef s3 = group_ctx_from_spec("S3");
    EquivariantModule stdm = module_by_name(s3, "std");
    EquivariantModule sgn = module_by_name(s3, "sgn");
    for (int i = 0; i <= 4; ++i) CHECK(verify_module_cauchy(stdm, sgn, i).pass);
    for (int i = 0; i <= 3; ++i) CHECK(verify_module_cauchy(stdm, stdm, i).pass);

    GroupRef q8 = group_ctx_from_spec("Q8");
    EquivariantModule two = module_by_name(q8, "2dim");
    EquivariantModule line = module_by_name(q8, "line:1");
    for (int i = 0; i <= 3; ++i) CHECK(verify_module_cauchy(two, line, i).pass);
}

TEST_CASE("module characters are class functions of the action") {
    // Regular module character: |G| at the identity, 0 elsewhere.
    GroupRef q8 = group_ctx_from_spec("Q8");
    ClassFunction chi = module_by_name(q8, "reg").character();
    CHECK(chi.degree() == 8);
    for (int c = 0; c < chi.size(); ++c)
        if (c != q8->C.identity_class) CHECK(chi.value(c).is_zero());
}
