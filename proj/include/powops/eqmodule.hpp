#pragma once

#include <string>
#include <vector>

#include "powops/chartable.hpp"
#include "powops/intmatrix.hpp"
#include "powops/partitions.hpp"

namespace powops {

/// Dense matrix over the cyclotomic numbers.
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CycMatrix identity(int n);
    static CycMatrix from_int(const IntMatrix& m);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Cyclotomic& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Cyclotomic& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    CycMatrix operator*(const CycMatrix& o) const;
    bool operator==(const CycMatrix& o) const = default;

    Cyclotomic trace() const;
    CycMatrix kronecker(const CycMatrix& o) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Cyclotomic> a_;
};

/// Solve B * X = C exactly for X, where B has full column rank; throws
/// internal_error when the system is inconsistent or B loses rank.
CycMatrix solve_exact(const CycMatrix& B, const CycMatrix& C);

/// Module of a finite group with one explicit matrix per group element.
/// Construction validates the action against the multiplication table.
class EquivariantModule {
public:
    EquivariantModule(GroupRef ctx, std::vector<CycMatrix> action,
                      std::vector<std::string> basis_labels = {}, std::string name = "");

    const GroupRef& ctx() const { return ctx_; }
    int dim() const { return dim_; }
    const CycMatrix& action(int g) const { return act_[g]; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    /// Trace at one representative per conjugacy class.
    ClassFunction character() const;

private:
    GroupRef ctx_;
    int dim_;
    std::vector<CycMatrix> act_;
    std::vector<std::string> labels_;
    std::string name_;
};

// --- constructors -----------------------------------------------------------
EquivariantModule trivial_module(const GroupRef& ctx);
EquivariantModule regular_module(const GroupRef& ctx);
/// 1-dimensional module from a degree-1 character-table row.
EquivariantModule line_module(const CharacterTable& table, int row);
/// Natural n-point permutation module of S_n (group must be the catalog S<n>).
EquivariantModule permutation_module(const GroupRef& ctx);
/// (n-1)-dimensional standard module of S_n.
EquivariantModule standard_module(const GroupRef& ctx);
/// Sign module of S_n.
EquivariantModule sign_module(const GroupRef& ctx);
/// The faithful 2-dimensional module of Q8 (over z4) or D4 (integral).
EquivariantModule two_dim_module(const GroupRef& ctx);
/// Action table from a file: line 1 = dimension d, then one d x d integer
/// matrix (d rows of d entries) per group element, in element order.
EquivariantModule module_from_file(const GroupRef& ctx, const std::string& path);
/// Catalog lookup: reg | triv | sgn | std | perm | 2dim | line:<row>; any
/// other string is read as a matrix-file path.
EquivariantModule module_by_name(const GroupRef& ctx, const std::string& name);

// --- functors ---------------------------------------------------------------
EquivariantModule tensor(const EquivariantModule& V, const EquivariantModule& W);
EquivariantModule exterior_power(const EquivariantModule& V, int i);
EquivariantModule symmetric_power(const EquivariantModule& V, int i);

/// Image of the canonical map from the product of row exterior powers to the
/// product of column symmetric powers, with the induced action.
EquivariantModule schur_module(const EquivariantModule& V, const Partition& lambda);
/// Companion construction with rows and columns exchanged.
EquivariantModule coschur_module(const EquivariantModule& V, const Partition& lambda);

// --- named checks -----------------------------------------------------------
/// Character of schur_module(V, lambda) against the determinantal polynomial
/// in exterior characters, and of coschur_module against the conjugate shape.
CheckResult verify_prop_2_1(const EquivariantModule& V, const Partition& lambda);
/// Character of the i-th exterior power of V (x) W against the two-alphabet
/// polynomial evaluated at both modules' exterior characters.
CheckResult verify_module_cauchy(const EquivariantModule& V, const EquivariantModule& W, int i);

}  // namespace powops
