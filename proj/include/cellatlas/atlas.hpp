#pragma once

#include <gmpxx.h>

#include <vector>

#include "cellatlas/f2.hpp"
#include "cellatlas/symbols.hpp"
#include "cellatlas/tl.hpp"

namespace cellatlas::atlas {

struct CellType {
    tl::TLPattern pattern;
    std::vector<sym::Symbol> module_symbols;
    std::vector<mpz_class> module_dims;
    f2::F2Subspace h;
    mpz_class count;
    mpz_class orbit_size;
};

struct SpringerEntry {
    f2::F2Vector character;
    sym::Symbol symbol;
    mpz_class dim;
};

struct SpringerBlock {
    std::vector<SpringerEntry> entries;
    mpz_class total_dim() const;
};

struct CellCounts {
    std::vector<tl::TLPattern> patterns;
    std::vector<mpz_class> counts;
};

// Number of left cells per cell-module type: the unique solution of
// sum_T n_T [embed(E) in L_T] = dim E over all family symbols E, solved by
// exact rational elimination with every row verified.
CellCounts cell_counts(const sym::Family& f);

// All family symbols whose Lusztig pair has trivial Abar-component, with
// their Abar*-characters.
SpringerBlock springer_block(const sym::Family& f);

// Simple equivariant sheaves on Abar/h1 x Abar/h2: orbit count times the
// stabilizer order, |Abar| |h1 ∩ h2|^2 / (|h1| |h2|).
mpz_class coh_count(const f2::F2Subspace& abar, const f2::F2Subspace& h1,
                    const f2::F2Subspace& h2);

// Common value of the shared-symbol count, |L ∩ L'| and the Gram entry;
// raises if the three routes disagree.
std::int64_t hom_dim(const tl::TLPattern& t1, const tl::TLPattern& t2, const sym::Family& f);

// (abar_order / stab_order) * dim_v * dim_nx * dim_ny.
mpz_class multiplicity(const mpz_class& abar_order, const mpz_class& stab_order,
                       const mpz_class& dim_v, const mpz_class& dim_nx, const mpz_class& dim_ny);

struct AtlasReport {
    sym::WeylType type;
    int rank;
    sym::Partition partition;
    int component_group_rank;
    sym::Family family;
    sym::Symbol special;
    f2::F2Space space;
    f2::F2Subspace abar;
    std::vector<sym::Symbol> family_symbols;  // special first, then lexicographic
    std::vector<mpz_class> family_dims;
    std::vector<CellType> cell_types;  // count ascending, then pattern serialization
    SpringerBlock springer;
    mpz_class y_total;
    mpz_class y_fixed;
};

AtlasReport build_report(sym::WeylType type, int rank, const sym::Partition& p);

std::vector<std::vector<std::int64_t>> gram_matrix(int m, tl::Shape shape);

// Exact determinant (fraction-free elimination).
mpz_class gram_determinant(int m, tl::Shape shape);
mpz_class determinant(std::vector<std::vector<mpz_class>> a);

}  // namespace cellatlas::atlas
