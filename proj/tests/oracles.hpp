#pragma once

// Slow, independent reference computations used as test oracles.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "setwise/setwise.hpp"

namespace oracle {

using setwise::Integer;
using setwise::Partition;
using setwise::Permutation;
using setwise::Rational;

/// A permutation of cycle type mu with cycles on consecutive points.
inline Permutation of_type(const Partition& mu)
{
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : mu.parts()) {
        std::vector<int> c;
        for (int k = 0; k < len; ++k) c.push_back(next++);
        cycles.push_back(c);
    }
    return Permutation::from_cycles(mu.n(), cycles);
}

/// Row labels: row[i] = row index of point i. Enumerates all lam-tabloids.
inline std::vector<std::vector<int>> tabloids(const Partition& lam)
{
    std::vector<int> labels;
    for (std::size_t r = 0; r < lam.length(); ++r)
        for (int k = 0; k < lam[r]; ++k) labels.push_back(static_cast<int>(r));
    std::vector<std::vector<int>> out;
    do {
        out.push_back(labels);
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

/// Number of lam-tabloids fixed by a permutation of type mu, by enumeration.
inline Integer fixed_tabloids(const Partition& lam, const Partition& mu)
{
    const Permutation p = of_type(mu);
    Integer count = 0;
    for (const auto& row : tabloids(lam)) {
        bool fixed = true;
        for (int i = 1; i <= lam.n() && fixed; ++i)
            fixed = row[static_cast<std::size_t>(p(i) - 1)] == row[static_cast<std::size_t>(i - 1)];
        if (fixed) ++count;
    }
    return count;
}

/// Semistandard tableaux of shape lam and content mu, by cell-by-cell filling.
inline Integer ssyt_count(const Partition& lam, const Partition& mu)
{
    const std::size_t rows = lam.length();
    std::vector<std::vector<int>> grid(rows);
    for (std::size_t r = 0; r < rows; ++r) grid[r].assign(static_cast<std::size_t>(lam[r]), 0);
    std::vector<int> left(mu.parts().begin(), mu.parts().end());
    Integer count = 0;
    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        if (c == grid[r].size()) {
            self(self, r + 1, 0);
            return;
        }
        for (std::size_t v = 0; v < left.size(); ++v) {
            if (left[v] == 0) continue;
            const int val = static_cast<int>(v) + 1;
            if (c > 0 && grid[r][c - 1] > val) continue;
            if (r > 0 && grid[r - 1][c] >= val) continue;
            --left[v];
            grid[r][c] = val;
            self(self, r, c + 1);
            grid[r][c] = 0;
            ++left[v];
        }
    };
    rec(rec, 0, 0);
    return count;
}

/// Standard Young tableaux of shape lam, by removing corners.
inline Integer standard_tableaux(const Partition& lam)
{
    if (lam.n() <= 1) return 1;
    Integer total = 0;
    std::vector<int> parts(lam.parts().begin(), lam.parts().end());
    for (std::size_t r = 0; r < parts.size(); ++r) {
        if (r + 1 < parts.size() && parts[r + 1] == parts[r]) continue;
        auto smaller = parts;
        --smaller[r];
        if (smaller[r] == 0) smaller.pop_back();
        total += standard_tableaux(Partition(smaller));
    }
    return total;
}

/// Irreducible character by the Murnaghan-Nakayama rule (border strips via
/// beta-numbers).
inline Integer murnaghan_nakayama(const Partition& lam, std::vector<int> cycles)
{
    if (cycles.empty()) return lam.n() == 0 ? 1 : 0;
    const int r = cycles.back();
    cycles.pop_back();
    const std::size_t len = lam.length();
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i) beta[i] = lam[i] + static_cast<int>(len - 1 - i);
    Integer total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const int moved = beta[i] - r;
        if (moved < 0 || std::find(beta.begin(), beta.end(), moved) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (b > moved && b < beta[i]) ++height;
        auto nb = beta;
        nb[i] = moved;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts;
        for (std::size_t k = 0; k < len; ++k) {
            const int p = nb[k] - static_cast<int>(len - 1 - k);
            if (p > 0) parts.push_back(p);
        }
        const Integer sub = murnaghan_nakayama(Partition(parts), cycles);
        total += (height % 2 == 0) ? sub : Integer(-sub);
    }
    return total;
}

inline Integer mn_character(const Partition& lam, const Partition& mu)
{
    return murnaghan_nakayama(lam, std::vector<int>(mu.parts().begin(), mu.parts().end()));
}

/// Does some t-subset have the same image under p and q? Direct scan.
inline bool agree_by_scan(const Permutation& p, const Permutation& q, int t)
{
    for (std::uint32_t x : setwise::subsets_of_size(p.n(), t))
        if (setwise::image_mask(p, x) == setwise::image_mask(q, x)) return true;
    return false;
}

/// Rank by plain rational Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Even and odd permutations of [n] with every cycle longer than t.
inline std::pair<Integer, Integer> no_short_cycles_brute(int n, int t)
{
    Integer even = 0, odd = 0;
    for (const auto& p : setwise::all_permutations(n)) {
        const auto cyc = p.cycles();
        if (std::any_of(cyc.begin(), cyc.end(), [t](const auto& c) { return static_cast<int>(c.size()) <= t; })) continue;
        (p.sign() > 0 ? even : odd) += 1;
    }
    return {even, odd};
}

/// The ten permutations of S_5: cyclic shifts of 1 2 3 4 5 and of 1 3 5 2 4.
inline setwise::Family sharp_s5()
{
    std::vector<Permutation> m;
    for (const auto& base : {std::vector<int>{1, 2, 3, 4, 5}, std::vector<int>{1, 3, 5, 2, 4}})
        for (int s = 0; s < 5; ++s) {
            std::vector<int> v(5);
            for (int i = 0; i < 5; ++i) v[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>((i + s) % 5)];
            m.emplace_back(v);
        }
    return setwise::Family(5, m);
}

/// Every t-coset C' = T_{a->b} (a sorted) that is a valid conflict-witness
/// input against T_{[t]->[t]}.
inline std::vector<setwise::TCoset> witness_inputs(int n, int t)
{
    std::vector<setwise::TCoset> out;
    const std::uint32_t first = (1u << t) - 1;
    for (std::uint32_t xm : setwise::subsets_of_size(n, t))
        for (std::uint32_t ym : setwise::subsets_of_size(n, t)) {
            if (xm == first && ym == first) continue;
            if (n == 2 * t && (xm & first) == 0 && (ym & first) == 0) continue;
            const auto a = setwise::mask_elements(xm);
            auto b = setwise::mask_elements(ym);
            do {
                out.push_back({a, b});
            } while (std::next_permutation(b.begin(), b.end()));
        }
    return out;
}

} // namespace oracle
