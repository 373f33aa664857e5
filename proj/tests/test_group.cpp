#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "powops/group.hpp"

using namespace powops;

namespace {

std::vector<int> sorted_sizes(const GroupRef& ctx) {
    std::vector<int> s = ctx->C.sizes;
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("catalog groups have the classical invariants") {
    struct Row {
        const char* spec;
        int order, exponent;
        std::vector<int> sizes;  // sorted class sizes
    };
    const Row rows[] = {
        {"C1", 1, 1, {1}},
        {"C12", 12, 12, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
        {"S3", 6, 6, {1, 2, 3}},
        {"S4", 24, 12, {1, 3, 6, 6, 8}},
        {"S5", 120, 60, {1, 10, 15, 20, 20, 24, 30}},
        {"A4", 12, 6, {1, 3, 4, 4}},
        {"D4", 8, 4, {1, 1, 2, 2, 2}},
        {"Q8", 8, 4, {1, 1, 2, 2, 2}},
        {"D6", 12, 6, {1, 1, 2, 2, 3, 3}},
    };
    for (const Row& r : rows) {
        GroupRef ctx = group_ctx_from_spec(r.spec);
        CHECK(ctx->G.n == r.order);
        CHECK(ctx->C.exponent == r.exponent);
        CHECK(sorted_sizes(ctx) == r.sizes);
        long total = std::accumulate(ctx->C.sizes.begin(), ctx->C.sizes.end(), 0L);
        CHECK(total == r.order);
        CHECK(ctx->C.sizes[ctx->C.identity_class] == 1);
    }
}

TEST_CASE("direct products") {
    GroupRef c6 = group_ctx_from_spec("prod(C2,C3)");
    CHECK(c6->G.n == 6);
    CHECK(c6->C.exponent == 6);
    CHECK(c6->C.reps.size() == 6);  // abelian: every class a singleton

    GroupRef g = group_ctx_from_spec("prod(C2,Q8)");
    CHECK(g->G.n == 16);
    CHECK(g->C.exponent == 4);
}

TEST_CASE("group axioms hold for every catalog entry") {
    for (const char* spec : {"C5", "S4", "Q8", "D4", "A4", "prod(C2,C2)"}) {
        GroupRef ctx = group_ctx_from_spec(spec);
        const FiniteGroup& G = ctx->G;
        for (int a = 0; a < G.n; ++a) {
            CHECK(G.mul[G.identity][a] == a);
            CHECK(G.mul[a][G.inverse[a]] == G.identity);
            CHECK(G.power(a, G.element_order(a)) == G.identity);
            CHECK(ctx->C.exponent % G.element_order(a) == 0);
        }
    }
}

TEST_CASE("spec grammar rejections") {
    CHECK_THROWS_AS(group_ctx_from_spec("S6"), domain_error);
    CHECK_THROWS_AS(group_ctx_from_spec("C0"), domain_error);
    CHECK_THROWS_AS(group_ctx_from_spec("nope"), domain_error);
    CHECK_THROWS_AS(group_ctx_from_spec("prod(C2)"), domain_error);
    CHECK_THROWS_AS(group_ctx_from_spec("table:/no/such/file"), domain_error);
}

TEST_CASE("groups from multiplication tables") {
    std::string klein =
        "4\n"
        "0 1 2 3\n"
        "1 0 3 2\n"
        "2 3 0 1\n"
        "3 2 1 0\n"
        "e a b ab\n";
    FiniteGroup g = group_from_table_text(klein, "klein4");
    CHECK(g.n == 4);
    CHECK(g.labels[3] == "ab");
    GroupRef ctx = make_group_ctx(std::move(g));
    CHECK(ctx->C.exponent == 2);
    CHECK(ctx->C.reps.size() == 4);

    // A broken table (row is not a permutation) is rejected.
    CHECK_THROWS_AS(group_from_table_text("2\n0 0\n0 1\n", "bad"), domain_error);
    // Non-associative magma is rejected.
    CHECK_THROWS_AS(group_from_table_text("3\n0 1 2\n1 2 0\n2 1 0\n", "bad"), domain_error);
}

TEST_CASE("class-level power maps agree with element powers") {
    GroupRef ctx = group_ctx_from_spec("S4");
    for (size_t c = 0; c < ctx->C.reps.size(); ++c)
        for (long k = 0; k <= 13; ++k) {
            int rep = ctx->C.reps[c];
            CHECK(ctx->C.power_class_of(static_cast<int>(c), k) ==
                  ctx->C.class_of[ctx->G.power(rep, k)]);
        }
    // Inverse class is the (-1)-power class.
    for (size_t c = 0; c < ctx->C.reps.size(); ++c)
        CHECK(ctx->C.inverse_class[c] == ctx->C.class_of[ctx->G.inverse[ctx->C.reps[c]]]);
}

TEST_CASE("k-th root counting matches brute force") {
    for (const char* spec : {"S3", "C4", "Q8"}) {
        GroupRef ctx = group_ctx_from_spec(spec);
        for (long k = 1; k <= 6; ++k)
            for (size_t c = 0; c < ctx->C.reps.size(); ++c) {
                std::vector<long> counts = kth_root_counts(*ctx, k, static_cast<int>(c));
                std::vector<long> brute(ctx->C.reps.size(), 0);
                for (int t = 0; t < ctx->G.n; ++t)
                    if (ctx->G.power(t, k) == ctx->C.reps[c]) ++brute[ctx->C.class_of[t]];
                CHECK(counts == brute);
            }
    }
    // Square roots of the identity in S3: the identity plus 3 transpositions.
    GroupRef s3 = group_ctx_from_spec("S3");
    std::vector<long> roots = kth_root_counts(*s3, 2, s3->C.identity_class);
    long total = std::accumulate(roots.begin(), roots.end(), 0L);
    CHECK(total == 4);
}
