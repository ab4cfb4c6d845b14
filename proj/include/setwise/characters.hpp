#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"

namespace setwise {

/// Full character tables are computed for n up to this value.
inline constexpr int kTableCeiling = 9;
/// Ceiling unlocked by extended mode.
inline constexpr int kExtendedTableCeiling = 10;
/// Single character values are kept in 64-bit accumulators; n! must fit.
inline constexpr int kEvaluationCeiling = 20;

enum class Flavor { permutation, irreducible };

namespace detail {

inline void require_evaluable(int n)
{
    if (n > kEvaluationCeiling)
        throw ResourceError("character evaluation ceiling is n=" + std::to_string(kEvaluationCeiling) + ", got n=" + std::to_string(n));
}

/// Number of ways to assign the (distinguishable) cycles to the (distinguishable)
/// rows so that every row is filled exactly: the number of tabloids of the
/// given row shape fixed by a permutation with these cycle lengths.
inline std::int64_t count_fixed_tabloids(std::vector<int> rows, const std::vector<int>& cycles)
{
    std::map<std::pair<std::size_t, std::vector<int>>, std::int64_t> memo;
    auto rec = [&](auto&& self, std::size_t idx) -> std::int64_t {
        if (idx == cycles.size()) return 1; // capacities are zero: total sizes match
        auto key = std::pair{idx, rows};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::int64_t total = 0;
        const int len = cycles[idx];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r] < len) continue;
            rows[r] -= len;
            total += self(self, idx + 1);
            rows[r] += len;
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(rec, 0);
}

/// xi of a row-length composition (any order, zeros allowed) at cycle type mu,
/// cached across calls.
inline std::int64_t cached_perm_character(std::vector<int> rows, const Partition& mu)
{
    rows.erase(std::remove(rows.begin(), rows.end(), 0), rows.end());
    std::sort(rows.begin(), rows.end(), std::greater<>());
    static std::shared_mutex mutex;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> cache;
    std::vector<int> cyc(mu.parts().begin(), mu.parts().end());
    auto key = std::pair{rows, cyc};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const std::int64_t value = count_fixed_tabloids(rows, cyc);
    std::unique_lock lock(mutex);
    cache.emplace(std::move(key), value);
    return value;
}

/// Signed determinantal sum over permutations pi of the first l coordinates,
/// keeping only terms with alpha_j - j + pi(j) >= 0 for all j.
inline std::int64_t determinantal_sum(const Partition& alpha, const Partition& mu)
{
    const std::size_t len = alpha.length();
    if (len == 0) return 1;
    std::vector<int> composition(len);
    std::vector<char> used(len, 0);
    std::int64_t total = 0;
    // pi(j) assigned for j = 0..len-1 (0-based), sign tracked via inversions
    auto rec = [&](auto&& self, std::size_t j, int inversions) -> void {
        if (j == len) {
            const std::int64_t xi = cached_perm_character(composition, mu);
            total += (inversions % 2 == 0) ? xi : -xi;
            return;
        }
        int larger_used = 0;
        for (std::size_t v = len; v-- > 0;) {
            if (used[v]) {
                ++larger_used;
                continue;
            }
            const int entry = alpha[j] - static_cast<int>(j) + static_cast<int>(v);
            if (entry < 0) break; // smaller v only decreases the entry
            used[v] = 1;
            composition[j] = entry;
            self(self, j + 1, inversions + larger_used);
            used[v] = 0;
        }
    };
    rec(rec, 0, 0);
    return total;
}

/// Number of semistandard tableaux of shape lam with content given by the
/// (already sorted) content vector, built as a chain of horizontal strips.
inline std::int64_t count_ssyt(const Partition& lam, const std::vector<int>& content)
{
    const std::size_t rows = lam.length();
    std::map<std::pair<std::size_t, std::vector<int>>, std::int64_t> memo;
    auto fill = [&](auto&& self, std::size_t letter, const std::vector<int>& shape) -> std::int64_t {
        if (letter == content.size()) return 1;
        auto key = std::pair{letter, shape};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::int64_t total = 0;
        std::vector<int> next = shape;
        // distribute content[letter] new cells over rows, at most one per column
        auto strip = [&](auto&& strip_self, std::size_t r, int remaining) -> void {
            if (r == rows) {
                if (remaining == 0) total += self(self, letter + 1, next);
                return;
            }
            const int upper = (r == 0) ? lam[0] : std::min(lam[r], shape[r - 1]);
            for (int add = 0; add <= std::min(remaining, upper - shape[r]); ++add) {
                next[r] = shape[r] + add;
                strip_self(strip_self, r + 1, remaining - add);
            }
            next[r] = shape[r];
        };
        strip(strip, 0, content[letter]);
        memo.emplace(std::move(key), total);
        return total;
    };
    return fill(fill, 0, std::vector<int>(rows, 0));
}

} // namespace detail

/// Kostka number K_{lam,mu}: semistandard lam-tableaux with content mu.
inline Integer kostka(const Partition& lam, const Partition& mu)
{
    detail::require_same_n(lam, mu, "kostka");
    detail::require_evaluable(lam.n());
    return detail::count_ssyt(lam, std::vector<int>(mu.parts().begin(), mu.parts().end()));
}

/// Kostka number with content given as an arbitrary composition; the content
/// is reordered to a partition first.
inline Integer kostka(const Partition& lam, const std::vector<int>& content)
{
    std::vector<int> c;
    for (int v : content) {
        if (v < 0) throw InputError("kostka content has a negative entry");
        if (v > 0) c.push_back(v);
    }
    return kostka(lam, Partition(std::move(c)));
}

/// xi_lam at cycle type mu: the number of lam-tabloids fixed by a permutation of type mu.
inline Integer perm_character(const Partition& lam, const Partition& mu)
{
    detail::require_same_n(lam, mu, "perm_character");
    detail::require_evaluable(lam.n());
    return detail::cached_perm_character(std::vector<int>(lam.parts().begin(), lam.parts().end()), mu);
}

/// chi_alpha at cycle type mu via the determinantal formula
/// chi_alpha = sum_pi sgn(pi) xi_{alpha - id + pi}, pi over the first l(alpha) coordinates.
inline Integer irreducible_character(const Partition& alpha, const Partition& mu)
{
    detail::require_same_n(alpha, mu, "irreducible_character");
    detail::require_evaluable(alpha.n());
    return detail::determinantal_sum(alpha, mu);
}

/// Character values indexed (row = character label, column = class label),
/// both in decreasing lexicographic order.
struct CharacterTable {
    int n = 0;
    Flavor flavor = Flavor::irreducible;
    std::vector<Partition> order;
    std::vector<std::vector<Integer>> values;

    [[nodiscard]] std::size_t index_of(const Partition& p) const
    {
        auto it = std::find(order.begin(), order.end(), p);
        if (it == order.end()) throw InputError("partition " + p.str() + " is not a partition of " + std::to_string(n));
        return static_cast<std::size_t>(it - order.begin());
    }
    [[nodiscard]] const Integer& at(const Partition& character, const Partition& cls) const
    {
        return values[index_of(character)][index_of(cls)];
    }
};

inline CharacterTable character_table(int n, Flavor flavor, int ceiling = kTableCeiling)
{
    if (n < 1) throw InputError("character_table needs n >= 1");
    if (n > ceiling)
        throw ResourceError("full character tables are limited to n <= " + std::to_string(ceiling) + ", got n=" + std::to_string(n));
    CharacterTable table;
    table.n = n;
    table.flavor = flavor;
    table.order = partitions_of(n);
    const std::size_t k = table.order.size();
    table.values.assign(k, std::vector<Integer>(k));
    parallel_for(k, [&](std::size_t r) {
        for (std::size_t c = 0; c < k; ++c)
            table.values[r][c] = flavor == Flavor::permutation ? perm_character(table.order[r], table.order[c])
                                                               : irreducible_character(table.order[r], table.order[c]);
    });
    return table;
}

/// A square minor of non-negative integers indexed by F_{n,k} in decreasing lex order.
struct KostkaMinor {
    std::vector<Partition> index;
    std::vector<std::vector<Integer>> values;
};

namespace detail {
inline std::vector<Partition> minor_index(int n, int k, const char* what)
{
    if (k < 0 || n < k + 1)
        throw DomainError(std::string(what) + " needs n >= k+1 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    return fat_partitions(n, k);
}
} // namespace detail

/// (K_{lam,mu}) for lam, mu in F_{n,k}.
inline KostkaMinor kostka_minor(int n, int k)
{
    KostkaMinor m;
    m.index = detail::minor_index(n, k, "kostka_minor");
    for (const auto& lam : m.index) {
        auto& row = m.values.emplace_back();
        for (const auto& mu : m.index) row.push_back(kostka(lam, mu));
    }
    return m;
}

/// (xi_beta(X_alpha)) for beta (rows), alpha (columns) in F_{n,k}.
inline KostkaMinor perm_char_minor(int n, int k)
{
    KostkaMinor m;
    m.index = detail::minor_index(n, k, "perm_char_minor");
    for (const auto& beta : m.index) {
        auto& row = m.values.emplace_back();
        for (const auto& alpha : m.index) row.push_back(perm_character(beta, alpha));
    }
    return m;
}

/// sum over pi in S_{t+1} of sgn(pi) * f_alpha(pi), where f_alpha(pi) is 1 iff
/// pi(1) != 1 and alpha_j - j + pi(j) >= 0 for every j >= 2.
inline std::int64_t determinant_vanishing_sum(const Partition& alpha, int t)
{
    const int n = alpha.n();
    if (t < 1 || alpha.first() != n - t || (alpha.length() == 2 && alpha[1] == t))
        throw InputError("determinant check needs alpha_1 = n - t and alpha != (n-t, t); got " + alpha.str() + ", t=" + std::to_string(t));
    if (static_cast<int>(alpha.length()) > t + 1) throw InternalError("alpha longer than t+1 with alpha_1 = n-t");
    std::vector<int> pi(static_cast<std::size_t>(t) + 1);
    std::iota(pi.begin(), pi.end(), 1);
    std::int64_t total = 0;
    do {
        if (pi[0] == 1) continue;
        bool ok = true;
        for (int j = 2; j <= t + 1 && ok; ++j)
            ok = alpha[static_cast<std::size_t>(j - 1)] - j + pi[static_cast<std::size_t>(j - 1)] >= 0;
        if (!ok) continue;
        int inversions = 0;
        for (std::size_t a = 0; a < pi.size(); ++a)
            for (std::size_t b = a + 1; b < pi.size(); ++b)
                if (pi[a] > pi[b]) ++inversions;
        total += (inversions % 2 == 0) ? 1 : -1;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return total;
}

/// True iff the signed indicator sum above is exactly zero.
inline bool determinant_vanishing_check(const Partition& alpha, int t) { return determinant_vanishing_sum(alpha, t) == 0; }

} // namespace setwise
