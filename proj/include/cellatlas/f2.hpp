#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cellatlas::f2 {

enum class SpaceKind { ambient, quotient };

// V_{Z1} for odd |Z1| (ambient, types B/C) or its quotient by the radical
// V'_{Z1} for even |Z1| (type D). Vectors are even-cardinality subsets of Z1,
// held as bitmasks over point positions. In the quotient every coset is
// represented by its unique member avoiding the largest point, so equality is
// a plain mask comparison.
//
// e_i (1-based) is the two-element subset {z_{i-1}, z_i} in position terms;
// e_1 < e_2 < ... is the pivot order used for canonical echelon bases.
class F2Space {
public:
    F2Space(std::vector<int> points, SpaceKind kind);
    static F2Space ambient(std::vector<int> points);
    static F2Space quotient(std::vector<int> points);

    SpaceKind kind() const { return kind_; }
    int point_count() const { return static_cast<int>(points_.size()); }
    int dimension() const;
    const std::vector<int>& points() const { return points_; }

    std::uint32_t full_mask() const;
    // Canonical coset representative (identity on ambient spaces).
    std::uint32_t canonical(std::uint32_t mask) const;

    bool operator==(const F2Space&) const = default;

private:
    std::vector<int> points_;
    SpaceKind kind_;
};

class F2Vector {
public:
    F2Vector(F2Space space, std::uint32_t position_mask);

    static F2Vector zero(const F2Space& space);
    static F2Vector from_positions(const F2Space& space, const std::vector<int>& positions);
    static F2Vector from_values(const F2Space& space, const std::vector<int>& values);
    // e_i = {z_{i-1}, z_i}, 1 <= i <= point_count-1.
    static F2Vector basis(const F2Space& space, int i);
    static F2Vector from_coords(const F2Space& space, std::uint32_t coords);

    const F2Space& space() const { return space_; }
    std::uint32_t mask() const { return mask_; }
    // Coefficients over e_1..e_dim; bit i-1 is the coefficient of e_i.
    std::uint32_t coords() const;
    bool is_zero() const { return mask_ == 0; }
    std::vector<int> support_positions() const;
    std::vector<int> support_values() const;

    F2Vector operator+(const F2Vector& other) const;
    bool operator==(const F2Vector&) const = default;

    // "e1+e3"; "0" for the zero vector.
    std::string to_string() const;

private:
    F2Space space_;
    std::uint32_t mask_;
};

// (M, M') = |M ∩ M'| mod 2.
int eval_form(const F2Vector& u, const F2Vector& v);

// Canonically echelonized subspace; two subspaces are equal iff their spaces
// and canonical bases coincide.
class F2Subspace {
public:
    explicit F2Subspace(F2Space space);

    const F2Space& space() const { return space_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    std::uint64_t size() const { return std::uint64_t{1} << rows_.size(); }
    bool contains(const F2Vector& v) const;
    bool contains(const F2Subspace& other) const;
    std::vector<F2Vector> basis() const;
    std::vector<F2Vector> elements() const;

    bool operator==(const F2Subspace&) const = default;

    // "<e1+e3, e2>"; "<0>" for the zero subspace.
    std::string to_string() const;
    std::vector<std::string> basis_strings() const;

    friend F2Subspace span(const std::vector<F2Vector>& vectors, const F2Space& ambient);
    friend F2Subspace intersect(const F2Subspace& a, const F2Subspace& b);
    friend F2Subspace sum(const F2Subspace& a, const F2Subspace& b);

private:
    F2Space space_;
    std::vector<std::uint32_t> rows_;  // coord rows, reduced echelon, pivots ascending
};

F2Subspace span(const std::vector<F2Vector>& vectors, const F2Space& ambient);
F2Subspace intersect(const F2Subspace& a, const F2Subspace& b);
F2Subspace sum(const F2Subspace& a, const F2Subspace& b);

// Isotropic of half the ambient dimension.
bool is_lagrangian(const F2Subspace& s);

}  // namespace cellatlas::f2
