#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cellatlas/f2.hpp"
#include "cellatlas/symbols.hpp"

namespace cellatlas::tl {

enum class Shape { BC, D };

// Noncrossing arc diagram on the ordered points of Z1, stored by 0-based
// position so one pattern serves every family with the same m. Shape BC has
// 2m+1 points and a marked point (the strand to the boundary); shape D is a
// perfect matching on 2m points.
struct TLPattern {
    Shape shape;
    int m;
    std::vector<std::pair<int, int>> arcs;  // (min, max), sorted by first
    int star;                               // -1 for shape D

    TLPattern(Shape shape, int m, std::vector<std::pair<int, int>> arcs, int star);

    int point_count() const { return shape == Shape::BC ? 2 * m + 1 : 2 * m; }
    // "arcs=[[0,3],[1,2]];star=4" (BC) or "arcs=[[0,3],[1,2]]" (D).
    std::string serialize() const;
    // One bracket per position, star as '*': "(())*".
    std::string render_brackets() const;

    bool operator==(const TLPattern&) const = default;
    bool operator<(const TLPattern& other) const;
};

// All patterns in a fixed order: recursive by the partner of the leftmost
// point, partner ascending. Catalan(m+1) patterns for BC, Catalan(m) for D.
std::vector<TLPattern> enumerate_patterns(int m, Shape shape);

Shape shape_of(sym::WeylType type);

// The symbols of [T]: one endpoint of each arc goes into M. 2^m symbols for
// BC, 2^{m-1} for D, lexicographically sorted.
std::vector<sym::Symbol> cell_module(const TLPattern& t, const sym::Family& f);

// Span of the arc-pair vectors; Lagrangian in family_space(f).
f2::F2Subspace lagrangian(const TLPattern& t, const sym::Family& f);

// Overlay the kind-specific auxiliary matching; every circle component
// contributes the sum of its auxiliary e-vectors. Lands in abar of the kind.
f2::F2Subspace h_subgroup(const TLPattern& t, sym::WeylType kind, const f2::F2Space& space);

// Scalar product of cell modules: 2^(number of circles) in the concatenation
// of t1 with t2 flipped. For shape D the component through the first point is
// the strand, not a circle.
std::int64_t gram_entry(const TLPattern& t1, const TLPattern& t2);

enum class CanonicalKind { full, trivial, codim1 };

// Patterns with H = Abar (full), H = 0 (trivial) and codim-1 subgroups
// missing the j-th basis line, per the ambient Weyl type.
TLPattern canonical_pattern(CanonicalKind kind, int j, int m, sym::WeylType type);

// Delete the first point of a shape-D pattern; its partner becomes the star.
TLPattern d_to_b(const TLPattern& t);

// e_i -> ebar_{i+1}: transports subspaces of the (2m-1)-point ambient space
// to the 2m-point quotient space.
f2::F2Subspace iota_map(const f2::F2Subspace& s_bc, const f2::F2Space& d_space);

}  // namespace cellatlas::tl
