#pragma once

#include <string>
#include <vector>

#include "powops/chartable.hpp"
#include "powops/group.hpp"
#include "powops/intmatrix.hpp"

namespace powops {

/// Raised when an exhaustive enumeration would exceed the configured budget;
/// carries the size that was attempted. Callers usually map this to a
/// "skipped" outcome rather than a failure.
struct budget_error : domain_error {
    budget_error(const std::string& msg, Int attempted_count)
        : domain_error(msg), attempted(std::move(attempted_count)) {}
    Int attempted;
};

/// Free-rank lattice with an integral group action (one unimodular matrix per
/// element). When basis_labels is non-empty the basis is a distinguished set
/// the group permutes freely (no nonidentity element fixes a label).
struct GammaLattice {
    GroupRef ctx;
    int rank = 0;
    std::vector<IntMatrix> action;
    std::vector<std::string> basis_labels;
    std::string name;
};

/// Unimodularity, the multiplication table, identity, and (when labels are
/// present) free permutation of the labels; throws on violation.
void validate_lattice(const GammaLattice& L);

/// The rank-n free module over the integral group ring, basis Gamma x {1..n}
/// (label id = point * |Gamma| + element), acting by left translation.
GammaLattice group_ring_lattice(const GroupRef& ctx, int n);

/// One orbit of tuples of multisets under the diagonal left translation.
struct Orbit {
    std::vector<std::vector<int>> rep;  // per factor: sorted label multiset (lex-minimal in orbit)
    std::vector<int> stabilizer;        // sorted element ids; always contains the identity
    long size = 0;                      // size * |stabilizer| = |Gamma|
};

struct OrbitDecomposition {
    GroupRef ctx;
    int rank = 0;             // the n of Gamma x {1..n}
    std::vector<int> powers;  // k_1..k_r
    std::vector<Orbit> orbits;
    Int total = 0;            // product over factors of the multiset counts
    long free_orbits = 0;
    long max_stabilizer = 1;
};

/// Enumeration ceiling for the tuple space (default 10^6); the environment
/// variable POWOPS_ORBIT_BUDGET overrides it.
long orbit_budget();

/// Orbits of (k_1-multiset, ..., k_r-multiset) tuples over the rank-n group
/// ring basis under diagonal left translation, with exact stabilizers.
/// Throws budget_error when the tuple space exceeds orbit_budget().
OrbitDecomposition sym_power_orbits(const GroupRef& ctx, int n, const std::vector<int>& ks);

/// Permutation character of the decomposition, one value per conjugacy class,
/// summed from the coset characters of the orbit stabilizers.
std::vector<Int> decomposition_character(const OrbitDecomposition& d);

/// Stabilizer divisibility, conservation of the tuple count, freeness with
/// orbit-count * |Gamma| = tuple count when gcd(k_i, |Gamma|) = 1, and the
/// character of the decomposition against the symmetric-power character of
/// n copies of the regular character.
CheckResult verify_prop_1_1(const GroupRef& ctx, int n, const std::vector<int>& ks);

/// Sublattice of vectors that the inverted map keeps p-integral, with the
/// induced (still integral) action.
struct CBetaResult {
    IntMatrix basis;   // HNF columns in ambient coordinates
    Int index;         // [F : C(beta)] = p-part of |det beta|
    GammaLattice sub;  // action rewritten in basis coordinates
};

/// C(beta) = beta(F tensor Z_(p)) intersected with F, computed as
/// {x : adj(beta) x = 0 mod p^a}, a = v_p(|det beta|). Requires beta
/// equivariant for F's action and nonsingular.
CBetaResult lattice_C_beta(const GammaLattice& F, const IntMatrix& beta, long p);

/// Inside the tensor product of the Sym^{k_i}(F): the lattice spanned by
/// products of C(beta_i) bases against C of the induced map, by HNF equality
/// and index comparison with the p-part of its determinant. Requires
/// gcd(k_1, ..., k_r, |Gamma|) = 1.
CheckResult verify_lemma_3_2b(const GammaLattice& F, const std::vector<IntMatrix>& betas,
                              const std::vector<int>& ks, long p);

/// Induced integer matrices in the sorted-subset (minors) and sorted-multiset
/// (expansion) bases, and the Kronecker product.
IntMatrix int_exterior_matrix(const IntMatrix& a, int k);
IntMatrix int_symmetric_matrix(const IntMatrix& a, int k);
IntMatrix int_kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix adjugate(const IntMatrix& a);

/// Square integer matrix from a file: first token r, then r*r entries row by
/// row.
IntMatrix beta_from_file(const std::string& path);

}  // namespace powops
