#pragma once

#include <memory>
#include <string>
#include <vector>

#include "powops/common.hpp"

namespace powops {

// Finite group as an explicit multiplication table (0-based element ids).
struct FiniteGroup {
    int n = 0;
    std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
    int identity = 0;
    std::vector<int> inverse;
    std::vector<std::string> labels;
    std::string name;

    int op(int a, int b) const { return mul[a][b]; }
    int power(int a, long k) const;   // a^k, k may be negative
    int element_order(int a) const;
};

// Table sanity: identity/inverses exist, associativity exhaustive for
// n <= 24 and by deterministic sampling above; throws on violation.
void validate_group(const FiniteGroup& g);

FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int n);  // order 2n
FiniteGroup make_quaternion8();
FiniteGroup make_symmetric(int n);  // n <= 5
FiniteGroup make_alternating4();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Table text format: first line n, then n rows of n space-separated
// 0-based indices; optionally n trailing whitespace-separated labels.
FiniteGroup group_from_table_text(const std::string& text, const std::string& name);
FiniteGroup group_from_file(const std::string& path);

// Grammar: C<n>, D<n>, Q8, S<n> (n<=5), A4, prod(<spec>,<spec>), table:<path>.
FiniteGroup parse_group_spec(const std::string& spec);

// Conjugacy bookkeeping: classes, exponent, class-level power maps.
struct ConjugacyData {
    int group_order = 0;
    int exponent = 1;
    std::vector<int> class_of;            // element -> class
    std::vector<int> reps;                // class -> representative element
    std::vector<int> sizes;               // class -> size
    int identity_class = 0;
    std::vector<int> inverse_class;       // class of rep^{-1}
    std::vector<std::vector<int>> power_class;  // [k mod exponent][class] -> class of rep^k

    int class_count() const { return static_cast<int>(reps.size()); }
    int power_class_of(int c, long k) const;
};

ConjugacyData conjugacy_classes(const FiniteGroup& g);
int group_exponent(const FiniteGroup& g);

// Immutable bundle shared by the character-level modules.
struct GroupCtx {
    FiniteGroup G;
    ConjugacyData C;
};
using GroupRef = std::shared_ptr<const GroupCtx>;

GroupRef make_group_ctx(FiniteGroup g);
GroupRef group_ctx_from_spec(const std::string& spec);

// Multiset of classes of the k-th roots of class c's representative:
// counts[d] = #{tau : tau^k = rep_c, class(tau) = d}.
std::vector<long> kth_root_counts(const GroupCtx& ctx, long k, int c);

}  // namespace powops
