#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powops/common.hpp"

namespace powops {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    std::vector<Int> apply(const std::vector<Int>& v) const;
    IntMatrix column(int c) const;
    /// Horizontal concatenation [*this | o].
    IntMatrix hcat(const IntMatrix& o) const;
    IntMatrix scaled(const Int& s) const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

struct SmithResult {
    IntMatrix U, D, V;  // U*A*V = D, U and V unimodular, D diagonal with d_1 | d_2 | ...
};

/// Smith normal form with fraction-free integer pivoting (pivot = minimal
/// nonzero absolute value). Diagonal entries nonnegative, divisibility chain.
SmithResult smith_normal_form(const IntMatrix& A);

struct HermiteResult {
    IntMatrix H, U;  // H = A*U, U unimodular
};

/// Column-style Hermite normal form. Zero columns come first; the nonzero
/// part is in column echelon with pivot rows strictly increasing left to
/// right, pivots positive, and entries to the right of each pivot reduced
/// into [0, pivot). Square nonsingular input yields an upper-triangular H.
/// Two full-column-rank matrices span the same lattice iff their stripped
/// HNFs (zero columns removed) coincide.
HermiteResult hermite_normal_form(const IntMatrix& A);

/// Bareiss fraction-free determinant.
Int bareiss_det(IntMatrix A);

/// Nonzero columns of the HNF of the span of A's columns: the canonical
/// lattice basis.
IntMatrix lattice_basis(const IntMatrix& generators);

bool lattice_equal(const IntMatrix& gens_a, const IntMatrix& gens_b);

/// Solves B*x = v exactly over the integers for a full-column-rank B in
/// column-echelon form (as produced by lattice_basis). Returns nullopt when
/// v is outside the lattice.
std::optional<std::vector<Int>> echelon_solve(const IntMatrix& B, const std::vector<Int>& v);

/// Membership of v in the lattice spanned by the echelon basis B.
bool lattice_contains(const IntMatrix& B, const std::vector<Int>& v);

/// Index [Z^n : L] of a full-rank sublattice given by a square basis.
Int lattice_index(const IntMatrix& basis);

/// Integer kernel of A (basis of {x : A*x = 0} as matrix columns).
IntMatrix integer_kernel(const IntMatrix& A);

/// Basis of the intersection of the two column lattices (both in the same
/// ambient Z^n).
IntMatrix lattice_intersection(const IntMatrix& A, const IntMatrix& B);

}  // namespace powops
