#include "cellatlas/atlas.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cellatlas/errors.hpp"

namespace cellatlas::atlas {

using sym::Family;
using sym::Partition;
using sym::Symbol;
using sym::WeylType;
using tl::TLPattern;

namespace {

void check_not_degenerate(const Family& f, const char* op) {
    if (f.is_degenerate()) {
        throw DegenerateFamilyError(std::string(op) +
                                    ": degenerate (very even) type-D family has trivial Abar");
    }
}

mpz_class pow2(int k) {
    mpz_class out = 1;
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), k);
    return out;
}

}  // namespace

mpz_class SpringerBlock::total_dim() const {
    mpz_class out = 0;
    for (const SpringerEntry& e : entries) out += e.dim;
    return out;
}

CellCounts cell_counts(const Family& f) {
    check_not_degenerate(f, "cell_counts");
    const f2::F2Space space = sym::family_space(f);
    std::vector<TLPattern> patterns = tl::enumerate_patterns(f.m(), tl::shape_of(f.type));
    const std::vector<Symbol> symbols = sym::enumerate_family(f);

    std::vector<f2::F2Subspace> lagrangians;
    lagrangians.reserve(patterns.size());
    for (const TLPattern& t : patterns) lagrangians.push_back(tl::lagrangian(t, f));

    const std::size_t rows = symbols.size(), cols = patterns.size();
    std::vector<std::vector<int>> incidence(rows, std::vector<int>(cols, 0));
    std::vector<mpz_class> dims(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const f2::F2Vector v = sym::embed(symbols[r], f);
        for (std::size_t c = 0; c < cols; ++c) {
            incidence[r][c] = lagrangians[c].contains(v) ? 1 : 0;
        }
        dims[r] = sym::irrep_dim(symbols[r]);
    }

    // Exact rational elimination on the augmented system.
    std::vector<std::vector<mpq_class>> mat(rows, std::vector<mpq_class>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) mat[r][c] = incidence[r][c];
        mat[r][cols] = mpq_class(dims[r]);
    }
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_of_col(cols, rows);
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows && mat[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(mat[sel], mat[pivot_row]);
        const mpq_class inv = mat[pivot_row][c];
        for (auto& x : mat[pivot_row]) x /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || mat[r][c] == 0) continue;
            const mpq_class factor = mat[r][c];
            for (std::size_t k = c; k <= cols; ++k) mat[r][k] -= factor * mat[pivot_row][k];
        }
        pivot_of_col[c] = pivot_row;
        ++pivot_row;
    }
    if (pivot_row != cols) {
        throw InternalInconsistencyError("cell_counts: incidence system is rank-deficient for " +
                                         f.to_string());
    }

    std::vector<mpz_class> counts(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const mpq_class& value = mat[pivot_of_col[c]][cols];
        if (value.get_den() != 1 || value < 0) {
            throw InternalInconsistencyError("cell_counts: non-integral or negative count for " +
                                             f.to_string());
        }
        counts[c] = value.get_num();
    }
    // Every original row must be satisfied, including the eliminated ones.
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class lhs = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (incidence[r][c]) lhs += counts[c];
        }
        if (lhs != dims[r]) {
            throw InternalInconsistencyError("cell_counts: row check failed at symbol " +
                                             symbols[r].to_string());
        }
    }
    return CellCounts{std::move(patterns), std::move(counts)};
}

SpringerBlock springer_block(const Family& f) {
    check_not_degenerate(f, "springer_block");
    SpringerBlock block;
    for (const Symbol& s : sym::enumerate_family(f)) {
        auto [x, chi] = sym::lusztig_pair(s, f);
        if (!x.is_zero()) continue;
        block.entries.push_back(SpringerEntry{chi, s, sym::irrep_dim(s)});
    }
    std::sort(block.entries.begin(), block.entries.end(),
              [](const SpringerEntry& a, const SpringerEntry& b) {
                  return a.character.coords() < b.character.coords();
              });
    for (std::size_t i = 1; i < block.entries.size(); ++i) {
        if (block.entries[i - 1].character == block.entries[i].character) {
            throw InternalInconsistencyError("springer_block: repeated character in " +
                                             f.to_string());
        }
    }
    if (block.entries.empty() || !block.entries.front().character.is_zero() ||
        !(block.entries.front().symbol == sym::special_symbol(f))) {
        throw InternalInconsistencyError(
            "springer_block: zero character must carry the special symbol");
    }
    return block;
}

mpz_class coh_count(const f2::F2Subspace& abar, const f2::F2Subspace& h1,
                    const f2::F2Subspace& h2) {
    if (!(h1.space() == h2.space()) || !(h1.space() == abar.space())) {
        throw AmbientMismatchError("coh_count: subgroups live in different spaces");
    }
    if (!abar.contains(h1) || !abar.contains(h2)) {
        throw ValidationError("coh_count: subgroups must lie inside Abar");
    }
    const int k = abar.dimension() + 2 * intersect(h1, h2).dimension() - h1.dimension() -
                  h2.dimension();
    return pow2(k);
}

std::int64_t hom_dim(const TLPattern& t1, const TLPattern& t2, const Family& f) {
    const std::vector<Symbol> m1 = tl::cell_module(t1, f);
    const std::vector<Symbol> m2 = tl::cell_module(t2, f);
    std::vector<Symbol> shared;
    std::set_intersection(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(shared));
    const std::int64_t by_symbols = static_cast<std::int64_t>(shared.size());

    const f2::F2Subspace meet = intersect(tl::lagrangian(t1, f), tl::lagrangian(t2, f));
    const std::int64_t by_lagrangian = std::int64_t{1} << meet.dimension();
    const std::int64_t by_gram = tl::gram_entry(t1, t2);

    if (by_symbols != by_lagrangian || by_lagrangian != by_gram) {
        std::ostringstream os;
        os << "hom_dim: routes disagree (" << by_symbols << ", " << by_lagrangian << ", "
           << by_gram << ") for " << t1.serialize() << " vs " << t2.serialize();
        throw InternalInconsistencyError(os.str());
    }
    return by_gram;
}

mpz_class multiplicity(const mpz_class& abar_order, const mpz_class& stab_order,
                       const mpz_class& dim_v, const mpz_class& dim_nx, const mpz_class& dim_ny) {
    if (abar_order < 1 || stab_order < 1 || dim_v < 1 || dim_nx < 1 || dim_ny < 1) {
        throw ValidationError("multiplicity: all inputs must be positive");
    }
    if (!mpz_divisible_p(abar_order.get_mpz_t(), stab_order.get_mpz_t())) {
        throw ValidationError("multiplicity: the stabilizer order must divide |Abar|");
    }
    mpz_class orbit;
    mpz_divexact(orbit.get_mpz_t(), abar_order.get_mpz_t(), stab_order.get_mpz_t());
    return orbit * dim_v * dim_nx * dim_ny;
}

AtlasReport build_report(WeylType type, int rank, const Partition& p) {
    sym::validate_partition(type, p);
    const int expected_total = type == WeylType::B ? 2 * rank + 1 : 2 * rank;
    if (p.total() != expected_total) {
        throw ValidationError("partition total " + std::to_string(p.total()) +
                              " does not match rank " + std::to_string(rank) + " in type " +
                              sym::type_letter(type));
    }
    const Symbol special = sym::orbit_to_symbol(type, p);
    if (!sym::is_special(type, p)) {
        throw NotSpecialError("orbit " + p.to_string() + " is not special: the rows of " +
                              special.to_string() + " do not interleave");
    }
    Family family = sym::family_of(special);
    if (family.is_degenerate()) {
        throw DegenerateFamilyError("orbit " + p.to_string() +
                                    " is very even: the family is degenerate with trivial Abar");
    }
    const f2::F2Space space = sym::family_space(family);
    const f2::F2Subspace abar_space = sym::abar(family);

    std::vector<Symbol> family_symbols = sym::enumerate_family(family);
    {
        auto it = std::find(family_symbols.begin(), family_symbols.end(), special);
        if (it == family_symbols.end()) {
            throw InternalInconsistencyError("build_report: special symbol missing from family");
        }
        std::rotate(family_symbols.begin(), it, it + 1);
    }
    std::vector<mpz_class> family_dims;
    family_dims.reserve(family_symbols.size());
    for (const Symbol& s : family_symbols) family_dims.push_back(sym::irrep_dim(s));

    CellCounts counts = cell_counts(family);
    std::vector<CellType> cell_types;
    cell_types.reserve(counts.patterns.size());
    for (std::size_t i = 0; i < counts.patterns.size(); ++i) {
        const TLPattern& t = counts.patterns[i];
        CellType ct{t,
                    tl::cell_module(t, family),
                    {},
                    tl::h_subgroup(t, type, space),
                    counts.counts[i],
                    0};
        for (const Symbol& s : ct.module_symbols) ct.module_dims.push_back(sym::irrep_dim(s));
        if (!abar_space.contains(ct.h)) {
            throw InternalInconsistencyError("build_report: H_T escapes Abar for " + t.serialize());
        }
        ct.orbit_size = pow2(abar_space.dimension() - ct.h.dimension());
        cell_types.push_back(std::move(ct));
    }
    std::sort(cell_types.begin(), cell_types.end(), [](const CellType& a, const CellType& b) {
        if (a.count != b.count) return a.count < b.count;
        return a.pattern.serialize() < b.pattern.serialize();
    });

    SpringerBlock springer = springer_block(family);

    mpz_class y_total = 0, y_fixed = 0, dcell_dim = 0;
    for (const CellType& ct : cell_types) {
        y_total += ct.count * ct.orbit_size;
        if (ct.h == abar_space) y_fixed += ct.count;
        mpz_class module_dim = 0;
        for (const mpz_class& d : ct.module_dims) module_dim += d;
        dcell_dim += ct.count * module_dim;
    }
    if (y_total != springer.total_dim()) {
        throw InternalInconsistencyError("build_report: |Y'| differs from the Springer dimension");
    }
    mpz_class dim_squares = 0;
    for (const mpz_class& d : family_dims) dim_squares += d * d;
    if (dcell_dim != dim_squares) {
        throw InternalInconsistencyError(
            "build_report: cell-module bookkeeping differs from the dimension squares");
    }

    return AtlasReport{type,
                       rank,
                       p,
                       sym::component_group_rank(type, p),
                       std::move(family),
                       special,
                       space,
                       abar_space,
                       std::move(family_symbols),
                       std::move(family_dims),
                       std::move(cell_types),
                       std::move(springer),
                       y_total,
                       y_fixed};
}

std::vector<std::vector<std::int64_t>> gram_matrix(int m, tl::Shape shape) {
    const std::vector<TLPattern> patterns = tl::enumerate_patterns(m, shape);
    const std::size_t n = patterns.size();
    std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            g[i][j] = g[j][i] = tl::gram_entry(patterns[i], patterns[j]);
        }
    }
    return g;
}

mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

mpz_class gram_determinant(int m, tl::Shape shape) {
    const auto g = gram_matrix(m, shape);
    std::vector<std::vector<mpz_class>> a(g.size(), std::vector<mpz_class>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) a[i][j] = g[i][j];
    }
    return determinant(std::move(a));
}

}  // namespace cellatlas::atlas
