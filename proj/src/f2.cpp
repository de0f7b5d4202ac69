#include "cellatlas/f2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cellatlas/errors.hpp"

namespace cellatlas::f2 {

namespace {

void check_same_space(const F2Space& a, const F2Space& b, const char* op) {
    if (!(a == b)) {
        throw AmbientMismatchError(std::string(op) + ": operands belong to different ambient spaces");
    }
}

// Inserts a coordinate row into a reduced echelon basis (pivot = lowest set
// bit). Returns false if the row was dependent.
bool echelon_insert(std::vector<std::uint32_t>& rows, std::uint32_t v) {
    for (std::uint32_t r : rows) {
        std::uint32_t pivot = r & (~r + 1);
        if (v & pivot) v ^= r;
    }
    if (v == 0) return false;
    std::uint32_t pivot = v & (~v + 1);
    for (std::uint32_t& r : rows) {
        if (r & pivot) r ^= v;
    }
    rows.push_back(v);
    std::sort(rows.begin(), rows.end(), [](std::uint32_t a, std::uint32_t b) {
        return (a & (~a + 1)) < (b & (~b + 1));
    });
    return true;
}

}  // namespace

F2Space::F2Space(std::vector<int> points, SpaceKind kind) : points_(std::move(points)), kind_(kind) {
    if (!std::is_sorted(points_.begin(), points_.end()) ||
        std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
        throw ValidationError("F2Space: points must be strictly increasing");
    }
    const std::size_t n = points_.size();
    if (n > 30) throw ValidationError("F2Space: point set too large (max 30 points)");
    if (kind_ == SpaceKind::ambient) {
        if (n % 2 == 0) throw ValidationError("F2Space: ambient space needs an odd point count");
    } else {
        if (n % 2 != 0 || n == 0) {
            throw ValidationError("F2Space: quotient space needs a positive even point count");
        }
    }
}

F2Space F2Space::ambient(std::vector<int> points) {
    return F2Space(std::move(points), SpaceKind::ambient);
}

F2Space F2Space::quotient(std::vector<int> points) {
    return F2Space(std::move(points), SpaceKind::quotient);
}

int F2Space::dimension() const {
    return kind_ == SpaceKind::ambient ? point_count() - 1 : point_count() - 2;
}

std::uint32_t F2Space::full_mask() const {
    return (std::uint32_t{1} << points_.size()) - 1;
}

std::uint32_t F2Space::canonical(std::uint32_t mask) const {
    if (kind_ == SpaceKind::quotient && (mask >> (point_count() - 1)) & 1u) {
        return mask ^ full_mask();
    }
    return mask;
}

F2Vector::F2Vector(F2Space space, std::uint32_t position_mask)
    : space_(std::move(space)), mask_(space_.canonical(position_mask)) {
    if (position_mask & ~space_.full_mask()) {
        throw ValidationError("F2Vector: support outside the ambient point set");
    }
    if (std::popcount(mask_) % 2 != 0) {
        throw ValidationError("F2Vector: support must have even cardinality");
    }
}

F2Vector F2Vector::zero(const F2Space& space) {
    return F2Vector(space, 0);
}

F2Vector F2Vector::from_positions(const F2Space& space, const std::vector<int>& positions) {
    std::uint32_t mask = 0;
    for (int p : positions) {
        if (p < 0 || p >= space.point_count()) {
            throw ValidationError("F2Vector: position out of range");
        }
        mask ^= std::uint32_t{1} << p;
    }
    return F2Vector(space, mask);
}

F2Vector F2Vector::from_values(const F2Space& space, const std::vector<int>& values) {
    std::vector<int> positions;
    positions.reserve(values.size());
    for (int v : values) {
        auto it = std::lower_bound(space.points().begin(), space.points().end(), v);
        if (it == space.points().end() || *it != v) {
            throw ValidationError("F2Vector: value is not an ambient point");
        }
        positions.push_back(static_cast<int>(it - space.points().begin()));
    }
    return from_positions(space, positions);
}

F2Vector F2Vector::basis(const F2Space& space, int i) {
    if (i < 1 || i >= space.point_count()) {
        throw ValidationError("F2Vector::basis: index out of range");
    }
    return from_positions(space, {i - 1, i});
}

F2Vector F2Vector::from_coords(const F2Space& space, std::uint32_t coords) {
    if (coords >> space.dimension()) {
        throw ValidationError("F2Vector::from_coords: coordinate out of range");
    }
    std::uint32_t mask = 0;
    for (int i = 1; i <= space.dimension(); ++i) {
        if ((coords >> (i - 1)) & 1u) mask ^= std::uint32_t{3} << (i - 1);
    }
    return F2Vector(space, mask);
}

std::uint32_t F2Vector::coords() const {
    std::uint32_t c = 0;
    for (int i = 1; i <= space_.dimension(); ++i) {
        std::uint32_t prefix = mask_ & ((std::uint32_t{1} << i) - 1);
        if (std::popcount(prefix) % 2 != 0) c |= std::uint32_t{1} << (i - 1);
    }
    return c;
}

std::vector<int> F2Vector::support_positions() const {
    std::vector<int> out;
    for (int p = 0; p < space_.point_count(); ++p) {
        if ((mask_ >> p) & 1u) out.push_back(p);
    }
    return out;
}

std::vector<int> F2Vector::support_values() const {
    std::vector<int> out;
    for (int p : support_positions()) out.push_back(space_.points()[p]);
    return out;
}

F2Vector F2Vector::operator+(const F2Vector& other) const {
    check_same_space(space_, other.space_, "F2Vector::operator+");
    return F2Vector(space_, mask_ ^ other.mask_);
}

std::string F2Vector::to_string() const {
    std::uint32_t c = coords();
    if (c == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= space_.dimension(); ++i) {
        if ((c >> (i - 1)) & 1u) {
            if (!first) os << "+";
            os << "e" << i;
            first = false;
        }
    }
    return os.str();
}

int eval_form(const F2Vector& u, const F2Vector& v) {
    check_same_space(u.space(), v.space(), "eval_form");
    return std::popcount(u.mask() & v.mask()) % 2;
}

F2Subspace::F2Subspace(F2Space space) : space_(std::move(space)) {}

bool F2Subspace::contains(const F2Vector& v) const {
    check_same_space(space_, v.space(), "F2Subspace::contains");
    std::uint32_t c = v.coords();
    for (std::uint32_t r : rows_) {
        std::uint32_t pivot = r & (~r + 1);
        if (c & pivot) c ^= r;
    }
    return c == 0;
}

bool F2Subspace::contains(const F2Subspace& other) const {
    check_same_space(space_, other.space_, "F2Subspace::contains");
    for (const F2Vector& v : other.basis()) {
        if (!contains(v)) return false;
    }
    return true;
}

std::vector<F2Vector> F2Subspace::basis() const {
    std::vector<F2Vector> out;
    out.reserve(rows_.size());
    for (std::uint32_t r : rows_) out.push_back(F2Vector::from_coords(space_, r));
    return out;
}

std::vector<F2Vector> F2Subspace::elements() const {
    std::vector<F2Vector> out;
    out.reserve(size());
    for (std::uint64_t sel = 0; sel < size(); ++sel) {
        std::uint32_t c = 0;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if ((sel >> k) & 1u) c ^= rows_[k];
        }
        out.push_back(F2Vector::from_coords(space_, c));
    }
    return out;
}

std::string F2Subspace::to_string() const {
    if (rows_.empty()) return "<0>";
    std::ostringstream os;
    os << "<";
    const auto names = basis_strings();
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (k) os << ", ";
        os << names[k];
    }
    os << ">";
    return os.str();
}

std::vector<std::string> F2Subspace::basis_strings() const {
    std::vector<std::string> out;
    for (const F2Vector& v : basis()) out.push_back(v.to_string());
    return out;
}

F2Subspace span(const std::vector<F2Vector>& vectors, const F2Space& ambient) {
    F2Subspace s(ambient);
    for (const F2Vector& v : vectors) {
        check_same_space(ambient, v.space(), "span");
        echelon_insert(s.rows_, v.coords());
    }
    return s;
}

F2Subspace intersect(const F2Subspace& a, const F2Subspace& b) {
    check_same_space(a.space_, b.space_, "intersect");
    // Zassenhaus: echelonize [x | x] for x in a and [x | 0] for x in b; rows
    // whose left block vanished have right blocks spanning the intersection.
    const int dim = a.space_.dimension();
    std::vector<std::uint64_t> rows;
    auto insert64 = [&rows](std::uint64_t v) {
        for (std::uint64_t r : rows) {
            std::uint64_t pivot = r & (~r + 1);
            if (v & pivot) v ^= r;
        }
        if (v) rows.push_back(v);
    };
    for (std::uint32_t x : a.rows_) insert64(std::uint64_t{x} | (std::uint64_t{x} << dim));
    for (std::uint32_t x : b.rows_) insert64(std::uint64_t{x});

    const std::uint64_t left = (std::uint64_t{1} << dim) - 1;
    F2Subspace out(a.space_);
    for (std::uint64_t r : rows) {
        if ((r & left) == 0) {
            echelon_insert(out.rows_, static_cast<std::uint32_t>(r >> dim));
        }
    }
    return out;
}

F2Subspace sum(const F2Subspace& a, const F2Subspace& b) {
    check_same_space(a.space_, b.space_, "sum");
    F2Subspace out(a.space_);
    for (std::uint32_t r : a.rows_) echelon_insert(out.rows_, r);
    for (std::uint32_t r : b.rows_) echelon_insert(out.rows_, r);
    return out;
}

bool is_lagrangian(const F2Subspace& s) {
    const auto vs = s.basis();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i; j < vs.size(); ++j) {
            if (eval_form(vs[i], vs[j]) != 0) return false;
        }
    }
    return 2 * s.dimension() == s.space().dimension();
}

}  // namespace cellatlas::f2
