#pragma once

#include <string>
#include <vector>

#include "powops/common.hpp"

namespace powops {

// Weakly decreasing positive parts, stored without trailing zeros.
// The empty vector is the empty partition (weight 0).
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);
int partition_weight(const Partition& p);

// Conjugate (transposed) diagram: result_j = #{i : p_i >= j}.
Partition conjugate_partition(const Partition& p);

// All partitions of n, each once, in ascending lexicographic order
// ((1,1,...,1) first, (n) last); comparisons pad with zeros.
std::vector<Partition> partitions_of(int n);

// Number of partitions of n (independent Euler-recurrence counter).
Int partition_count(int n);

// The set I of partitions v with mu_i <= v_i <= mu_i + 1 for every i
// (rows past the end of mu count as 0) and |v| = |mu| + p, in ascending
// lexicographic order.  Never empty for p >= 1: appending p rows of 1
// always qualifies.
std::vector<Partition> pieri_index_set(const Partition& mu, int p);

// Lexicographic comparison with zero padding: a < b iff they agree up to
// some index r and a_{r+1} < b_{r+1}.
bool partition_lex_less(const Partition& a, const Partition& b);

// Number of column-strict tableaux of shape lambda with entries in 1..n,
// by the hook content formula; the dimension of the classical Schur
// functor of shape lambda on an n-dimensional space.
Int tableau_count(const Partition& lambda, int n);

std::string partition_str(const Partition& p);

// Accepts "2,1", "[2,1]", "(2,1)", or "" / "0" for the empty partition.
Partition parse_partition(const std::string& text);

}  // namespace powops
