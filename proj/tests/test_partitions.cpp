#include <set>

#include "doctest.h"
#include "powops/partitions.hpp"

using namespace powops;

TEST_CASE("partition counts match the classical sequence") {
    // p(0)..p(10) = 1 1 2 3 5 7 11 15 22 30 42.
    const size_t expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        auto ps = partitions_of(n);
        CHECK(ps.size() == expect[n]);
        std::set<Partition> seen;
        for (const Partition& p : ps) {
            CHECK(is_valid_partition(p));
            CHECK(partition_weight(p) == n);
            seen.insert(p);
        }
        CHECK(seen.size() == ps.size());
    }
}

TEST_CASE("validity") {
    CHECK(is_valid_partition({}));
    CHECK(is_valid_partition({3, 1, 1}));
    CHECK_FALSE(is_valid_partition({1, 2}));
    CHECK_FALSE(is_valid_partition({2, 0}));
    CHECK_FALSE(is_valid_partition({-1}));
}

TEST_CASE("conjugation") {
    CHECK(conjugate_partition({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate_partition({2, 1}) == Partition{2, 1});
    CHECK(conjugate_partition({4}) == Partition{1, 1, 1, 1});
    CHECK(conjugate_partition({}) == Partition{});
    for (int n = 0; n <= 8; ++n)
        for (const Partition& p : partitions_of(n)) {
            CHECK(conjugate_partition(conjugate_partition(p)) == p);
            CHECK(partition_weight(conjugate_partition(p)) == n);
        }
}
