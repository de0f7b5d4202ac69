#include "cellatlas/symbols.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "cellatlas/errors.hpp"

namespace cellatlas::sym {

namespace {

bool strictly_increasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] >= v[i]) return false;
    }
    return true;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

// a1 <= b1 <= a2 <= b2 <= ... over the two increasing rows.
bool rows_interleave(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (i + 1 < a.size() && b[i] > a[i + 1]) return false;
    }
    return true;
}

mpz_class factorial(int n) {
    mpz_class out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace

char type_letter(WeylType t) {
    switch (t) {
        case WeylType::B: return 'B';
        case WeylType::C: return 'C';
        case WeylType::D: return 'D';
    }
    return '?';
}

WeylType type_from_letter(char c) {
    switch (c) {
        case 'B': return WeylType::B;
        case 'C': return WeylType::C;
        case 'D': return WeylType::D;
        default: throw ValidationError(std::string("unknown Weyl type '") + c + "'");
    }
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw ValidationError("Partition: parts must be positive");
        if (i > 0 && parts[i - 1] < parts[i]) {
            throw ValidationError("Partition: parts must be weakly decreasing");
        }
    }
}

int Partition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
    return "[" + join(parts) + "]";
}

Symbol::Symbol(std::vector<int> t, std::vector<int> b, WeylType ty)
    : top(std::move(t)), bot(std::move(b)), type(ty) {
    if (!strictly_increasing(top) || !strictly_increasing(bot)) {
        throw ValidationError("Symbol: rows must be strictly increasing");
    }
    if ((!top.empty() && top.front() < 0) || (!bot.empty() && bot.front() < 0)) {
        throw ValidationError("Symbol: entries must be nonnegative");
    }
    if (type == WeylType::D) {
        if (top.size() != bot.size()) {
            throw ValidationError("Symbol: type D needs defect 0");
        }
        if (bot < top) std::swap(top, bot);
    } else {
        if (top.size() != bot.size() + 1) {
            throw ValidationError("Symbol: types B/C need defect 1");
        }
    }
}

int Symbol::defect() const {
    return static_cast<int>(top.size()) - static_cast<int>(bot.size());
}

bool Symbol::is_reduced() const {
    const bool zero_top = !top.empty() && top.front() == 0;
    const bool zero_bot = !bot.empty() && bot.front() == 0;
    return !(zero_top && zero_bot);
}

bool Symbol::is_degenerate() const {
    return type == WeylType::D && top == bot;
}

std::string Symbol::to_string() const {
    return "(" + join(top) + "|" + join(bot) + ")";
}

bool Symbol::operator<(const Symbol& other) const {
    if (top != other.top) return top < other.top;
    return bot < other.bot;
}

Symbol reduce(const Symbol& s) {
    std::vector<int> top = s.top, bot = s.bot;
    while (!top.empty() && !bot.empty() && top.front() == 0 && bot.front() == 0) {
        top.erase(top.begin());
        bot.erase(bot.begin());
        for (int& x : top) --x;
        for (int& x : bot) --x;
    }
    return Symbol(std::move(top), std::move(bot), s.type);
}

int rank(const Symbol& s) {
    const long sum = std::accumulate(s.top.begin(), s.top.end(), 0L) +
                     std::accumulate(s.bot.begin(), s.bot.end(), 0L);
    const long k = static_cast<long>(s.bot.size());
    const long n = s.defect() == 1 ? sum - k * k : sum - k * k + k;
    if (n < 0) throw ValidationError("Symbol: negative rank");
    return static_cast<int>(n);
}

Family::Family(std::vector<int> a, std::vector<int> b, WeylType ty)
    : z1(std::move(a)), z2(std::move(b)), type(ty) {
    if (!strictly_increasing(z1) || !strictly_increasing(z2)) {
        throw ValidationError("Family: Z1, Z2 must be strictly increasing");
    }
    if ((!z1.empty() && z1.front() < 0) || (!z2.empty() && z2.front() < 0)) {
        throw ValidationError("Family: entries must be nonnegative");
    }
    if (!z2.empty() && z2.front() == 0) throw ValidationError("Family: 0 must not lie in Z2");
    std::vector<int> common;
    std::set_intersection(z1.begin(), z1.end(), z2.begin(), z2.end(), std::back_inserter(common));
    if (!common.empty()) throw ValidationError("Family: Z1 and Z2 must be disjoint");
    if (type == WeylType::D) {
        if (z1.size() % 2 != 0) throw ValidationError("Family: |Z1| must be even in type D");
    } else {
        if (z1.size() % 2 == 0) throw ValidationError("Family: |Z1| must be odd in types B/C");
    }
}

int Family::m() const {
    return type == WeylType::D ? static_cast<int>(z1.size()) / 2
                               : (static_cast<int>(z1.size()) - 1) / 2;
}

std::string Family::to_string() const {
    return std::string("Z1={") + join(z1) + "} Z2={" + join(z2) + "} type " + type_letter(type);
}

Family family_of(const Symbol& s) {
    if (!s.is_reduced()) throw ValidationError("family_of: symbol must be reduced");
    std::vector<int> z2, uni, z1;
    std::set_intersection(s.top.begin(), s.top.end(), s.bot.begin(), s.bot.end(),
                          std::back_inserter(z2));
    std::set_union(s.top.begin(), s.top.end(), s.bot.begin(), s.bot.end(),
                   std::back_inserter(uni));
    std::set_difference(uni.begin(), uni.end(), z2.begin(), z2.end(), std::back_inserter(z1));
    return Family(std::move(z1), std::move(z2), s.type);
}

f2::F2Space family_space(const Family& f) {
    if (f.is_degenerate()) {
        throw DegenerateFamilyError("family_space: degenerate (very even) type-D family");
    }
    return f.type == WeylType::D ? f2::F2Space::quotient(f.z1) : f2::F2Space::ambient(f.z1);
}

f2::F2Subspace abar(const Family& f) {
    const f2::F2Space space = family_space(f);
    std::vector<f2::F2Vector> gens;
    const int m = f.m();
    switch (f.type) {
        case WeylType::B:
            for (int i = 1; i <= 2 * m - 1; i += 2) gens.push_back(f2::F2Vector::basis(space, i));
            break;
        case WeylType::C:
            for (int i = 2; i <= 2 * m; i += 2) gens.push_back(f2::F2Vector::basis(space, i));
            break;
        case WeylType::D:
            for (int i = 2; i <= 2 * m - 2; i += 2) gens.push_back(f2::F2Vector::basis(space, i));
            break;
    }
    return f2::span(gens, space);
}

f2::F2Subspace abar_dual(const Family& f) {
    const f2::F2Space space = family_space(f);
    std::vector<f2::F2Vector> gens;
    const int m = f.m();
    switch (f.type) {
        case WeylType::B:
            for (int i = 2; i <= 2 * m; i += 2) gens.push_back(f2::F2Vector::basis(space, i));
            break;
        case WeylType::C:
            for (int i = 1; i <= 2 * m - 1; i += 2) gens.push_back(f2::F2Vector::basis(space, i));
            break;
        case WeylType::D:
            for (int i = 1; i <= 2 * m - 1; i += 2) gens.push_back(f2::F2Vector::basis(space, i));
            break;
    }
    return f2::span(gens, space);
}

Symbol symbol_from_subset(const Family& f, std::uint32_t m_positions) {
    const int p = static_cast<int>(f.z1.size());
    if (m_positions >> p) throw ValidationError("symbol_from_subset: positions out of range");
    if (std::popcount(m_positions) != f.m()) {
        throw ValidationError("symbol_from_subset: |M| must equal m");
    }
    std::vector<int> m_vals, rest;
    for (int i = 0; i < p; ++i) {
        if ((m_positions >> i) & 1u) {
            m_vals.push_back(f.z1[i]);
        } else {
            rest.push_back(f.z1[i]);
        }
    }
    return Symbol(sorted_union(rest, f.z2), sorted_union(m_vals, f.z2), f.type);
}

std::vector<Symbol> enumerate_family(const Family& f) {
    std::vector<Symbol> out;
    if (f.is_degenerate()) {
        out.emplace_back(f.z2, f.z2, WeylType::D);
        return out;
    }
    const int p = static_cast<int>(f.z1.size());
    const int m = f.m();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
        if (std::popcount(mask) != m) continue;
        // Type D identifies M with its complement; keep the representative
        // containing the smallest point.
        if (f.type == WeylType::D && !(mask & 1u)) continue;
        out.push_back(symbol_from_subset(f, mask));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::uint32_t special_subset_mask(const Family& f) {
    const int m = f.m();
    std::uint32_t mask = 0;
    if (f.type == WeylType::D) {
        for (int i = 0; i <= 2 * m - 2; i += 2) mask |= std::uint32_t{1} << i;
    } else {
        for (int i = 1; i <= 2 * m - 1; i += 2) mask |= std::uint32_t{1} << i;
    }
    return mask;
}

}  // namespace

Symbol special_symbol(const Family& f) {
    if (f.is_degenerate()) return Symbol(f.z2, f.z2, WeylType::D);
    return symbol_from_subset(f, special_subset_mask(f));
}

f2::F2Vector embed(const Symbol& s, const Family& f) {
    if (s.type != f.type) throw ValidationError("embed: Weyl type mismatch");
    const f2::F2Space space = family_space(f);

    auto row_subset = [&](const std::vector<int>& row) -> std::pair<bool, std::uint32_t> {
        std::vector<int> m_vals;
        std::set_difference(row.begin(), row.end(), f.z2.begin(), f.z2.end(),
                            std::back_inserter(m_vals));
        std::uint32_t mask = 0;
        for (int v : m_vals) {
            auto it = std::lower_bound(f.z1.begin(), f.z1.end(), v);
            if (it == f.z1.end() || *it != v) return {false, 0};
            mask |= std::uint32_t{1} << (it - f.z1.begin());
        }
        if (std::popcount(mask) != f.m()) return {false, 0};
        return {true, mask};
    };

    auto [ok, m_mask] = row_subset(s.bot);
    if (!ok && f.type == WeylType::D) std::tie(ok, m_mask) = row_subset(s.top);
    if (!ok || !(symbol_from_subset(f, m_mask) == s)) {
        throw ValidationError("embed: symbol " + s.to_string() + " does not belong to " +
                              f.to_string());
    }
    return f2::F2Vector(space, m_mask ^ special_subset_mask(f));
}

std::pair<f2::F2Vector, f2::F2Vector> lusztig_pair(const Symbol& s, const Family& f) {
    const f2::F2Vector v = embed(s, f);
    const f2::F2Space& space = v.space();
    // Abar is spanned by the odd e_i in type B and the even e_i in types C/D,
    // so the decomposition is a coordinate split.
    std::uint32_t odd_bits = 0;
    for (int i = 1; i <= space.dimension(); i += 2) odd_bits |= std::uint32_t{1} << (i - 1);
    const std::uint32_t c = v.coords();
    const std::uint32_t x = f.type == WeylType::B ? (c & odd_bits) : (c & ~odd_bits);
    return {f2::F2Vector::from_coords(space, x), f2::F2Vector::from_coords(space, c ^ x)};
}

Bipartition to_bipartition(const Symbol& s) {
    if (!s.is_reduced()) throw ValidationError("to_bipartition: symbol must be reduced");
    auto row_to_partition = [](const std::vector<int>& row) {
        std::vector<int> parts;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const int part = row[i] - static_cast<int>(i);
            if (part > 0) parts.push_back(part);
        }
        std::reverse(parts.begin(), parts.end());
        return parts;
    };
    return Bipartition{row_to_partition(s.top), row_to_partition(s.bot)};
}

mpz_class tableau_count(const std::vector<int>& lambda) {
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (n == 0) return 1;
    std::vector<int> conj(lambda.empty() ? 0 : lambda.front(), 0);
    for (int part : lambda) {
        for (int j = 0; j < part; ++j) ++conj[j];
    }
    mpz_class hooks = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            hooks *= lambda[i] - j + conj[j] - static_cast<int>(i) - 1;
        }
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), factorial(n).get_mpz_t(), hooks.get_mpz_t());
    return out;
}

mpz_class irrep_dim(const Symbol& s) {
    if (s.is_degenerate()) {
        throw DegenerateFamilyError("irrep_dim: degenerate type-D symbol splits into two irreducibles");
    }
    const Symbol r = reduce(s);
    const Bipartition bp = to_bipartition(r);
    const int n = rank(r);
    const int a = std::accumulate(bp.alpha.begin(), bp.alpha.end(), 0);
    return binomial(n, a) * tableau_count(bp.alpha) * tableau_count(bp.beta);
}

void validate_partition(WeylType type, const Partition& p) {
    const int total = p.total();
    if (type == WeylType::B) {
        if (total % 2 == 0) throw ValidationError("type B partition must have odd total");
    } else {
        if (total % 2 != 0) {
            throw ValidationError(std::string("type ") + type_letter(type) +
                                  " partition must have even total");
        }
    }
    const int counted_parity = type == WeylType::C ? 1 : 0;
    for (std::size_t i = 0; i < p.parts.size();) {
        std::size_t j = i;
        while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
        if (p.parts[i] % 2 == counted_parity && (j - i) % 2 != 0) {
            throw ValidationError("part " + std::to_string(p.parts[i]) + " occurs " +
                                  std::to_string(j - i) + " times; " +
                                  (counted_parity ? "odd" : "even") +
                                  " parts need even multiplicity in type " + type_letter(type));
        }
        i = j;
    }
}

Symbol orbit_to_symbol(WeylType type, const Partition& p) {
    validate_partition(type, p);
    std::vector<int> q(p.parts.rbegin(), p.parts.rend());
    const std::size_t want_parity = type == WeylType::D ? 0 : 1;
    if (q.size() % 2 != want_parity) q.insert(q.begin(), 0);

    std::vector<int> evens, odds;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const int r = q[i] + static_cast<int>(i);
        if (r % 2 == 0) {
            evens.push_back(r / 2);
        } else {
            odds.push_back((r - 1) / 2);
        }
    }

    const std::size_t e = evens.size(), o = odds.size();
    const bool sizes_ok = type == WeylType::B   ? o == e + 1
                          : type == WeylType::C ? e == o + 1
                                                : e == o;
    if (!sizes_ok) {
        throw InternalInconsistencyError("orbit_to_symbol: row sizes disagree with the defect for " +
                                         p.to_string());
    }
    Symbol s = type == WeylType::C ? Symbol(std::move(evens), std::move(odds), type)
                                   : Symbol(std::move(odds), std::move(evens), type);
    s = reduce(s);
    const int expect = type == WeylType::B ? (p.total() - 1) / 2 : p.total() / 2;
    if (rank(s) != expect) {
        throw InternalInconsistencyError("orbit_to_symbol: rank mismatch for " + p.to_string());
    }
    return s;
}

bool is_special(WeylType type, const Partition& p) {
    const Symbol s = orbit_to_symbol(type, p);
    if (s.defect() == 1) return rows_interleave(s.top, s.bot);
    return rows_interleave(s.top, s.bot) || rows_interleave(s.bot, s.top);
}

int component_group_rank(WeylType type, const Partition& p) {
    validate_partition(type, p);
    const int counted_parity = type == WeylType::C ? 0 : 1;
    int distinct = 0;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] % 2 != counted_parity) continue;
        if (i == 0 || p.parts[i] != p.parts[i - 1]) ++distinct;
    }
    if (type == WeylType::C) return distinct;
    return std::max(0, distinct - 1);
}

}  // namespace cellatlas::sym
