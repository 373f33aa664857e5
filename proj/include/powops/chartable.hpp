#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powops/common.hpp"
#include "powops/cyclotomic.hpp"
#include "powops/group.hpp"

namespace powops {

// Cyclotomic-valued class function on a fixed group; values indexed by
// conjugacy class, conductor dividing the group exponent.
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(GroupRef ctx, std::vector<Cyclotomic> values);

    static ClassFunction constant(const GroupRef& ctx, const Int& c);
    static ClassFunction trivial(const GroupRef& ctx);
    static ClassFunction regular(const GroupRef& ctx);

    const GroupRef& ctx() const { return ctx_; }
    int size() const { return static_cast<int>(v_.size()); }
    const Cyclotomic& value(int c) const { return v_[c]; }
    const std::vector<Cyclotomic>& values() const { return v_; }

    // Value at the identity class; must be a rational integer.
    Int degree() const;

    bool is_zero() const;
    // True when every value has integer power-basis coefficients.
    bool integral() const;

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction operator*(const ClassFunction& o) const;  // pointwise
    ClassFunction operator-() const;
    ClassFunction times(const Rat& c) const;
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);

    std::string str() const;

private:
    GroupRef ctx_;
    std::vector<Cyclotomic> v_;
    void check_same_group(const ClassFunction& o) const;
};

// psi^k: value at class c is the value at the class of rep^k.
ClassFunction adams(const ClassFunction& chi, long k);

// Adjoint power map: value at c sums chi over the k-th roots of c's rep.
ClassFunction adams_adjoint(const ClassFunction& chi, long k);

// Complex conjugation applied to every value.
ClassFunction conjugate(const ClassFunction& chi);

// (1/|G|) sum over classes of size * a(c) * conj(b(c)).
Cyclotomic pairing(const ClassFunction& a, const ClassFunction& b);

// Exterior and symmetric power characters lambda^0..lambda^i and
// sigma^0..sigma^i from the power-sum recursions; every division step is
// asserted to land back in integral cyclotomics.
struct PowerOps {
    std::vector<ClassFunction> lambda;
    std::vector<ClassFunction> sigma;
};
PowerOps power_operations(const ClassFunction& chi, int i);

// sigma^i([m]-[n]) via the alternating composition formula
// sum over a >= 0 and ordered tuples (b_1..b_u >= 1), a + sum b = i, of
// (-1)^u sigma^a(m) * sigma^{b_1}(n) * ... * sigma^{b_u}(n).
ClassFunction virtual_sigma_formula(const ClassFunction& m, const ClassFunction& n, int i);

// Same class via the power-sum recursion applied to the virtual class
// (psi additive, division asserted exact) — the independent second path.
ClassFunction virtual_sigma_newton(const ClassFunction& m, const ClassFunction& n, int i);

class CharacterTable {
public:
    // Sorts rows canonically (degree ascending, then value-vector order)
    // and checks row orthogonality; throws internal_error on failure.
    CharacterTable(GroupRef ctx, std::vector<ClassFunction> rows);

    const GroupRef& ctx() const { return ctx_; }
    int size() const { return static_cast<int>(rows_.size()); }
    const ClassFunction& row(int i) const { return rows_[i]; }
    const std::vector<ClassFunction>& rows() const { return rows_; }
    std::vector<Int> degrees() const;
    int trivial_index() const;

    // Coordinates of a virtual character over the rows; throws if any
    // pairing is not a rational integer.
    std::vector<Int> decompose(const ClassFunction& f) const;
    ClassFunction assemble(const std::vector<Int>& coords) const;

private:
    GroupRef ctx_;
    std::vector<ClassFunction> rows_;
};

// Irreducible table by the modular (class-sum eigenvector) method.
CharacterTable character_table(const GroupRef& ctx);

// Shipped closed-form tables for C_n, D_4, Q_8, S_3, S_4, A_4 (by group
// name); nullopt when no closed form is on file.
std::optional<CharacterTable> closed_form_table(const GroupRef& ctx);

// Frobenius–Schur data: indicator per row (+1 real, 0 complex, -1
// quaternionic) and the conjugate partner row for complex rows (-1 else).
struct FSData {
    std::vector<int> indicator;
    std::vector<int> partner;
};
FSData fs_classify(const CharacterTable& t);

// Membership of an integer coordinate vector in the subgroup generated by
// 2*(real rows), (conjugate pair sums), and (quaternionic rows).
struct SymplecticCheck {
    bool member = false;
    std::vector<std::string> violations;
};
SymplecticCheck in_symplectic_subgroup(const CharacterTable& t, const FSData& fs,
                                       const std::vector<Int>& coords);

// Named checks.
CheckResult verify_regular_fixed(const GroupRef& ctx, long k, bool require_coprime = true);
CheckResult verify_adjoint_pairing(const CharacterTable& t, long k);
CheckResult verify_adjoint_is_inverse_adams(const CharacterTable& t, long k, long kprime);
CheckResult verify_periodicity(const CharacterTable& t, long k);
CheckResult verify_koszul(const ClassFunction& chi, int i);
CheckResult verify_multiplicativity(const ClassFunction& a, const ClassFunction& b, int i);
CheckResult verify_virtual_sigma_paths(const ClassFunction& m, const ClassFunction& n, int i);

}  // namespace powops
