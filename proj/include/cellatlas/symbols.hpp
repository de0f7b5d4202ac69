#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "cellatlas/f2.hpp"

namespace cellatlas::sym {

enum class WeylType { B, C, D };

char type_letter(WeylType t);
WeylType type_from_letter(char c);

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    explicit Partition(std::vector<int> parts);
    int total() const;
    std::string to_string() const;
    bool operator==(const Partition&) const = default;
};

// Two strictly increasing rows of nonnegative integers. Defect 1 for B/C
// (top is the longer row M'), defect 0 for D (unordered pair, stored with the
// lexicographically smaller row on top).
struct Symbol {
    std::vector<int> top;
    std::vector<int> bot;
    WeylType type;

    Symbol(std::vector<int> top, std::vector<int> bot, WeylType type);

    int defect() const;
    bool is_reduced() const;
    bool is_degenerate() const;  // type D, equal rows
    std::string to_string() const;  // "(0,2,5|1,3)"

    bool operator==(const Symbol&) const = default;
    bool operator<(const Symbol& other) const;
};

Symbol reduce(const Symbol& s);
int rank(const Symbol& s);

// (Z1, Z2) with Z2 = top ∩ bot and Z1 the symmetric difference.
struct Family {
    std::vector<int> z1;
    std::vector<int> z2;
    WeylType type;

    Family(std::vector<int> z1, std::vector<int> z2, WeylType type);

    int m() const;
    bool is_degenerate() const { return type == WeylType::D && z1.empty(); }
    std::string to_string() const;
    bool operator==(const Family&) const = default;
};

Family family_of(const Symbol& s);

// The F2 space V_{Z1} (B/C) or V'_{Z1} (D) carrying the family.
f2::F2Space family_space(const Family& f);

// Abar as a subspace of family_space: <e1,e3,...> for B, <e2,e4,...> for C,
// <e2,e4,...,e_{2m-2}> for D. The dual Lagrangian is abar_dual.
f2::F2Subspace abar(const Family& f);
f2::F2Subspace abar_dual(const Family& f);

// All symbols of the family, lexicographically sorted. C(2m+1, m) symbols for
// B/C, C(2m, m)/2 for D (M identified with its complement; m >= 1).
std::vector<Symbol> enumerate_family(const Family& f);

// The symbol with M = M0 = {z1, z3, ..., z_{2m-1}}.
Symbol special_symbol(const Family& f);

// Builds the family symbol for a given M ⊂ Z1 (positions), |M| = m.
Symbol symbol_from_subset(const Family& f, std::uint32_t m_positions);

// The symmetric difference M Δ M0 as a vector of V_{Z1} (reduced to the
// quotient representative for D).
f2::F2Vector embed(const Symbol& s, const Family& f);

// Decomposition embed(s) = x + chi with x in Abar and chi in Abar*.
std::pair<f2::F2Vector, f2::F2Vector> lusztig_pair(const Symbol& s, const Family& f);

struct Bipartition {
    std::vector<int> alpha;
    std::vector<int> beta;

    bool operator==(const Bipartition&) const = default;
};

Bipartition to_bipartition(const Symbol& s);

// Number of standard Young tableaux of shape lambda (hook length formula).
mpz_class tableau_count(const std::vector<int>& lambda);

// dim = C(n, |alpha|) * f(alpha) * f(beta). Degenerate type-D symbols are
// rejected (the representation splits).
mpz_class irrep_dim(const Symbol& s);

void validate_partition(WeylType type, const Partition& p);

// Symbol of the special representation attached to a nilpotent-orbit
// partition: pad with zeros to odd (B/C) or even (D) length, set
// r_i = q_i + (i-1) over the increasing parts, halve the even r_i and
// (r_i - 1)/2 the odd ones; the two sets form the rows.
Symbol orbit_to_symbol(WeylType type, const Partition& p);

// Rows of orbit_to_symbol interleave.
bool is_special(WeylType type, const Partition& p);

// k with A(e) = (Z/2)^k: distinct even parts for C, distinct odd parts minus
// one for B/D (adjoint-group convention).
int component_group_rank(WeylType type, const Partition& p);

}  // namespace cellatlas::sym
