#include "cellatlas/tl.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "cellatlas/errors.hpp"

namespace cellatlas::tl {

namespace {

using Arc = std::pair<int, int>;

// All noncrossing perfect matchings of the contiguous range [lo, hi),
// leftmost partner ascending.
std::vector<std::vector<Arc>> noncrossing_matchings(int lo, int hi) {
    std::vector<std::vector<Arc>> out;
    if (lo >= hi) {
        out.emplace_back();
        return out;
    }
    for (int b = lo + 1; b < hi; b += 2) {
        const auto inside = noncrossing_matchings(lo + 1, b);
        const auto outside = noncrossing_matchings(b + 1, hi);
        for (const auto& in : inside) {
            for (const auto& rest : outside) {
                std::vector<Arc> arcs;
                arcs.reserve(1 + in.size() + rest.size());
                arcs.emplace_back(lo, b);
                arcs.insert(arcs.end(), in.begin(), in.end());
                arcs.insert(arcs.end(), rest.begin(), rest.end());
                out.push_back(std::move(arcs));
            }
        }
    }
    return out;
}

void check_same_shape(const TLPattern& a, const TLPattern& b, const char* op) {
    if (a.shape != b.shape || a.m != b.m) {
        throw ValidationError(std::string(op) + ": patterns must share shape and m");
    }
}

void check_family_match(const TLPattern& t, const sym::Family& f, const char* op) {
    if (shape_of(f.type) != t.shape || f.m() != t.m) {
        throw ValidationError(std::string(op) + ": pattern shape does not match the family");
    }
}

// Auxiliary matching: adjacent pairs (p, p+1); the pair contributes e_{p+1}.
std::vector<Arc> auxiliary_arcs(sym::WeylType kind, int m) {
    std::vector<Arc> out;
    switch (kind) {
        case sym::WeylType::B:
            for (int p = 0; p + 1 <= 2 * m - 1; p += 2) out.emplace_back(p, p + 1);
            break;
        case sym::WeylType::C:
            for (int p = 1; p + 1 <= 2 * m; p += 2) out.emplace_back(p, p + 1);
            break;
        case sym::WeylType::D:
            for (int p = 1; p + 1 <= 2 * m - 2; p += 2) out.emplace_back(p, p + 1);
            break;
    }
    return out;
}

struct MultiGraph {
    int n;
    std::vector<int> degree;
    std::vector<int> parent;

    explicit MultiGraph(int n) : n(n), degree(n, 0), parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void add_edge(const Arc& e) {
        ++degree[e.first];
        ++degree[e.second];
        parent[find(e.first)] = find(e.second);
    }
    // A component is a circle iff every vertex in it has degree 2.
    std::vector<int> circle_roots() {
        std::vector<bool> broken(n, false);
        for (int v = 0; v < n; ++v) {
            if (degree[v] != 2) broken[find(v)] = true;
        }
        std::vector<int> roots;
        for (int v = 0; v < n; ++v) {
            if (find(v) == v && !broken[v]) roots.push_back(v);
        }
        return roots;
    }
};

TLPattern from_matching(Shape shape, int m, const std::vector<Arc>& matching) {
    if (shape == Shape::D) return TLPattern(shape, m, matching, -1);
    std::vector<Arc> arcs;
    int star = -1;
    const int virtual_point = 2 * m + 1;
    for (const Arc& a : matching) {
        if (a.second == virtual_point) {
            star = a.first;
        } else {
            arcs.push_back(a);
        }
    }
    return TLPattern(shape, m, std::move(arcs), star);
}

}  // namespace

TLPattern::TLPattern(Shape shape, int m, std::vector<Arc> arc_list, int star)
    : shape(shape), m(m), arcs(std::move(arc_list)), star(star) {
    if (m < 0) throw ValidationError("TLPattern: m must be nonnegative");
    const int n = point_count();
    for (Arc& a : arcs) {
        if (a.first > a.second) std::swap(a.first, a.second);
    }
    std::sort(arcs.begin(), arcs.end());
    if (static_cast<int>(arcs.size()) != m) {
        throw ValidationError("TLPattern: wrong arc count");
    }
    std::vector<int> cover(n, 0);
    for (const Arc& a : arcs) {
        if (a.first < 0 || a.second >= n || a.first == a.second) {
            throw ValidationError("TLPattern: arc endpoints out of range");
        }
        if ((a.second - a.first) % 2 == 0) {
            throw ValidationError("TLPattern: arcs must join points of different parity");
        }
        ++cover[a.first];
        ++cover[a.second];
    }
    if (shape == Shape::BC) {
        if (star < 0 || star >= n) throw ValidationError("TLPattern: star out of range");
        ++cover[star];
    } else if (star != -1) {
        throw ValidationError("TLPattern: shape D carries no star");
    }
    for (int v = 0; v < n; ++v) {
        if (cover[v] != 1) throw ValidationError("TLPattern: points must be covered exactly once");
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            const auto& [a, b] = arcs[i];
            const auto& [c, d] = arcs[j];
            if (a < c && c < b && b < d) {
                throw ValidationError("TLPattern: arcs must be noncrossing");
            }
        }
        if (shape == Shape::BC && arcs[i].first < star && star < arcs[i].second) {
            throw ValidationError("TLPattern: the marked point must be uncovered");
        }
    }
}

std::string TLPattern::serialize() const {
    std::ostringstream os;
    os << "arcs=[";
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i) os << ",";
        os << "[" << arcs[i].first << "," << arcs[i].second << "]";
    }
    os << "]";
    if (shape == Shape::BC) os << ";star=" << star;
    return os.str();
}

std::string TLPattern::render_brackets() const {
    std::string out(point_count(), '?');
    for (const Arc& a : arcs) {
        out[a.first] = '(';
        out[a.second] = ')';
    }
    if (shape == Shape::BC) out[star] = '*';
    return out;
}

bool TLPattern::operator<(const TLPattern& other) const {
    if (shape != other.shape) return shape < other.shape;
    if (m != other.m) return m < other.m;
    if (arcs != other.arcs) return arcs < other.arcs;
    return star < other.star;
}

std::vector<TLPattern> enumerate_patterns(int m, Shape shape) {
    if (m < 0) throw ValidationError("enumerate_patterns: m must be nonnegative");
    const int n = shape == Shape::BC ? 2 * m + 2 : 2 * m;
    std::vector<TLPattern> out;
    for (const auto& matching : noncrossing_matchings(0, n)) {
        out.push_back(from_matching(shape, m, matching));
    }
    return out;
}

Shape shape_of(sym::WeylType type) {
    return type == sym::WeylType::D ? Shape::D : Shape::BC;
}

std::vector<sym::Symbol> cell_module(const TLPattern& t, const sym::Family& f) {
    check_family_match(t, f, "cell_module");
    std::vector<sym::Symbol> out;
    const int m = t.m;
    for (std::uint32_t choice = 0; choice < (std::uint32_t{1} << m); ++choice) {
        std::uint32_t mask = 0;
        for (int k = 0; k < m; ++k) {
            const Arc& a = t.arcs[k];
            mask |= std::uint32_t{1} << (((choice >> k) & 1u) ? a.second : a.first);
        }
        // Complement identification in type D: keep the choice that picks up
        // the smallest point.
        if (t.shape == Shape::D && !(mask & 1u)) continue;
        out.push_back(sym::symbol_from_subset(f, mask));
    }
    std::sort(out.begin(), out.end());
    return out;
}

f2::F2Subspace lagrangian(const TLPattern& t, const sym::Family& f) {
    check_family_match(t, f, "lagrangian");
    const f2::F2Space space = sym::family_space(f);
    std::vector<f2::F2Vector> gens;
    for (const Arc& a : t.arcs) {
        gens.push_back(f2::F2Vector::from_positions(space, {a.first, a.second}));
    }
    return f2::span(gens, space);
}

f2::F2Subspace h_subgroup(const TLPattern& t, sym::WeylType kind, const f2::F2Space& space) {
    if (shape_of(kind) != t.shape) {
        throw ValidationError("h_subgroup: kind does not match the pattern shape");
    }
    if (space.point_count() != t.point_count()) {
        throw ValidationError("h_subgroup: space size does not match the pattern");
    }
    const auto aux = auxiliary_arcs(kind, t.m);
    MultiGraph g(t.point_count());
    for (const Arc& a : t.arcs) g.add_edge(a);
    for (const Arc& a : aux) g.add_edge(a);

    std::vector<f2::F2Vector> gens;
    for (int root : g.circle_roots()) {
        f2::F2Vector v = f2::F2Vector::zero(space);
        for (const Arc& a : aux) {
            if (g.find(a.first) == root) v = v + f2::F2Vector::basis(space, a.first + 1);
        }
        gens.push_back(v);
    }
    return f2::span(gens, space);
}

std::int64_t gram_entry(const TLPattern& t1, const TLPattern& t2) {
    check_same_shape(t1, t2, "gram_entry");
    MultiGraph g(t1.point_count());
    for (const Arc& a : t1.arcs) g.add_edge(a);
    for (const Arc& a : t2.arcs) g.add_edge(a);
    int circles = static_cast<int>(g.circle_roots().size());
    if (t1.shape == Shape::D && circles > 0) {
        // The cycle through the first point corresponds to the boundary strand
        // of the equivalent BC picture.
        --circles;
    }
    return std::int64_t{1} << circles;
}

namespace {

TLPattern mirror(const TLPattern& t) {
    const int n = t.point_count();
    std::vector<Arc> arcs;
    for (const Arc& a : t.arcs) arcs.emplace_back(n - 1 - a.second, n - 1 - a.first);
    return TLPattern(t.shape, t.m, std::move(arcs), t.star < 0 ? -1 : n - 1 - t.star);
}

TLPattern b_to_d(const TLPattern& t) {
    std::vector<Arc> arcs;
    for (const Arc& a : t.arcs) arcs.emplace_back(a.first + 1, a.second + 1);
    arcs.emplace_back(0, t.star + 1);
    return TLPattern(Shape::D, t.m + 1, std::move(arcs), -1);
}

TLPattern canonical_pattern_b(CanonicalKind kind, int j, int m) {
    std::vector<Arc> arcs;
    int star = 0;
    switch (kind) {
        case CanonicalKind::full:
            for (int i = 0; i < m; ++i) arcs.emplace_back(2 * i, 2 * i + 1);
            star = 2 * m;
            break;
        case CanonicalKind::trivial:
            for (int i = 1; i <= m; ++i) arcs.emplace_back(2 * i - 1, 2 * i);
            star = 0;
            break;
        case CanonicalKind::codim1:
            if (j < 1 || j > m) throw ValidationError("canonical_pattern: j out of range");
            for (int i = 1; i < j; ++i) arcs.emplace_back(2 * i - 2, 2 * i - 1);
            arcs.emplace_back(2 * j - 1, 2 * m);
            for (int i = j; i < m; ++i) arcs.emplace_back(2 * i, 2 * i + 1);
            star = 2 * j - 2;
            break;
    }
    return TLPattern(Shape::BC, m, std::move(arcs), star);
}

}  // namespace

TLPattern canonical_pattern(CanonicalKind kind, int j, int m, sym::WeylType type) {
    switch (type) {
        case sym::WeylType::B:
            return canonical_pattern_b(kind, j, m);
        case sym::WeylType::C:
            return mirror(canonical_pattern_b(kind, kind == CanonicalKind::codim1 ? m + 1 - j : j, m));
        case sym::WeylType::D:
            if (m < 1) throw ValidationError("canonical_pattern: type D needs m >= 1");
            return b_to_d(canonical_pattern_b(kind, j, m - 1));
    }
    throw ValidationError("canonical_pattern: bad type");
}

TLPattern d_to_b(const TLPattern& t) {
    if (t.shape != Shape::D || t.m < 1) {
        throw ValidationError("d_to_b: needs a shape-D pattern with m >= 1");
    }
    std::vector<Arc> arcs;
    int star = -1;
    for (const Arc& a : t.arcs) {
        if (a.first == 0) {
            star = a.second - 1;
        } else {
            arcs.emplace_back(a.first - 1, a.second - 1);
        }
    }
    return TLPattern(Shape::BC, t.m - 1, std::move(arcs), star);
}

f2::F2Subspace iota_map(const f2::F2Subspace& s_bc, const f2::F2Space& d_space) {
    if (d_space.kind() != f2::SpaceKind::quotient ||
        s_bc.space().point_count() + 1 != d_space.point_count()) {
        throw ValidationError("iota_map: spaces have incompatible sizes");
    }
    std::vector<f2::F2Vector> gens;
    for (const f2::F2Vector& v : s_bc.basis()) {
        gens.emplace_back(d_space, v.mask() << 1);
    }
    return f2::span(gens, d_space);
}

}  // namespace cellatlas::tl
