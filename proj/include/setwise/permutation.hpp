#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"

namespace setwise {

/// A bijection of [n] = {1..n}. Externally 1-indexed (one-line notation
/// "2 3 4 5 1"), internally 0-indexed. Composition is right-to-left:
/// (p * q)(i) = p(q(i)).
class Permutation {
public:
    Permutation() = default;

    /// From a 1-indexed one-line image sequence.
    explicit Permutation(const std::vector<int>& one_line) : img_(one_line.size())
    {
        std::vector<char> seen(one_line.size(), 0);
        const int n = static_cast<int>(one_line.size());
        for (int i = 0; i < n; ++i) {
            const int v = one_line[static_cast<std::size_t>(i)];
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw InputError("not a permutation of [" + std::to_string(n) + "]: image " + std::to_string(v) + " at position " + std::to_string(i + 1));
            seen[static_cast<std::size_t>(v - 1)] = 1;
            img_[static_cast<std::size_t>(i)] = v - 1;
        }
    }

    static Permutation identity(int n)
    {
        Permutation p;
        p.img_.resize(static_cast<std::size_t>(n));
        std::iota(p.img_.begin(), p.img_.end(), 0);
        return p;
    }

    /// Product of the given cycles (1-indexed), which must be disjoint.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles)
    {
        Permutation p = identity(n);
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        for (const auto& c : cycles) {
            for (std::size_t k = 0; k < c.size(); ++k) {
                const int a = c[k];
                if (a < 1 || a > n || used[static_cast<std::size_t>(a - 1)])
                    throw InputError("cycles are not disjoint within [" + std::to_string(n) + "]");
                used[static_cast<std::size_t>(a - 1)] = 1;
                p.img_[static_cast<std::size_t>(a - 1)] = c[(k + 1) % c.size()] - 1;
            }
        }
        return p;
    }

    /// Strict parser for whitespace-separated one-line notation.
    static Permutation parse(std::string_view text)
    {
        std::vector<int> v;
        std::size_t i = 0;
        while (i < text.size()) {
            if (text[i] == ' ' || text[i] == '\t') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
            if (j == i || (j < text.size() && text[j] != ' ' && text[j] != '\t') || j - i > 4)
                throw InputError("malformed permutation '" + std::string(text) + "'");
            v.push_back(std::stoi(std::string(text.substr(i, j - i))));
            i = j;
        }
        if (v.empty()) throw InputError("empty permutation text");
        return Permutation(v);
    }

    [[nodiscard]] int n() const noexcept { return static_cast<int>(img_.size()); }

    /// Image of i, both 1-indexed.
    [[nodiscard]] int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }

    /// 0-indexed image table.
    [[nodiscard]] const std::vector<int>& zero_based() const noexcept { return img_; }

    [[nodiscard]] std::vector<int> one_line() const
    {
        std::vector<int> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
        return v;
    }

    [[nodiscard]] Permutation inverse() const
    {
        Permutation q;
        q.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) q.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
        return q;
    }

    friend Permutation operator*(const Permutation& p, const Permutation& q)
    {
        if (p.n() != q.n()) throw InputError("cannot compose permutations of different degree");
        Permutation r;
        r.img_.resize(p.img_.size());
        for (std::size_t i = 0; i < p.img_.size(); ++i) r.img_[i] = p.img_[static_cast<std::size_t>(q.img_[i])];
        return r;
    }

    /// Disjoint cycles (1-indexed), each starting at its smallest element,
    /// ordered by that element. Fixed points included.
    [[nodiscard]] std::vector<std::vector<int>> cycles() const
    {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(img_.size(), 0);
        for (std::size_t s = 0; s < img_.size(); ++s) {
            if (seen[s]) continue;
            std::vector<int> c;
            for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(img_[i])) {
                seen[i] = 1;
                c.push_back(static_cast<int>(i) + 1);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    [[nodiscard]] int sign() const
    {
        const auto cs = cycles();
        return ((n() - static_cast<int>(cs.size())) % 2 == 0) ? 1 : -1;
    }

    [[nodiscard]] std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(img_[i] + 1);
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

private:
    std::vector<int> img_;
};

inline Partition cycle_type(const Permutation& p)
{
    std::vector<int> lens;
    for (const auto& c : p.cycles()) lens.push_back(static_cast<int>(c.size()));
    return Partition(std::move(lens));
}

/// True iff no sub-multiset of the cycle lengths sums to t, i.e. the
/// permutation fixes no t-set. Requires 1 <= t <= n.
inline bool is_t_derangement(const Partition& type, int t)
{
    if (t < 1 || t > type.n())
        throw InputError("t-derangement test needs 1 <= t <= n (t=" + std::to_string(t) + ", n=" + std::to_string(type.n()) + ")");
    std::vector<char> reach(static_cast<std::size_t>(t) + 1, 0);
    reach[0] = 1;
    for (int len : type.parts())
        for (int s = t; s >= len; --s)
            if (reach[static_cast<std::size_t>(s - len)]) reach[static_cast<std::size_t>(s)] = 1;
    return !reach[static_cast<std::size_t>(t)];
}

inline bool is_t_derangement(const Permutation& p, int t) { return is_t_derangement(cycle_type(p), t); }

/// All permutations of [n] in lexicographic order of their one-line form.
inline std::vector<Permutation> all_permutations(int n)
{
    if (n < 0 || n > 10) throw ResourceError("refusing to enumerate S_" + std::to_string(n));
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Position of p in all_permutations(p.n()) (Lehmer code).
inline std::size_t lex_rank(const Permutation& p)
{
    const auto& img = p.zero_based();
    const std::size_t n = img.size();
    std::size_t rank = 0;
    std::vector<char> used(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (int v = 0; v < img[i]; ++v)
            if (!used[static_cast<std::size_t>(v)]) ++smaller;
        used[static_cast<std::size_t>(img[i])] = 1;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

/// Image of a set of points (bitmask over 0-based points) under p.
inline std::uint32_t image_mask(const Permutation& p, std::uint32_t mask)
{
    std::uint32_t out = 0;
    const auto& img = p.zero_based();
    for (std::size_t i = 0; i < img.size(); ++i)
        if (mask >> i & 1u) out |= 1u << img[i];
    return out;
}

/// All t-subsets of [n] as bitmasks over 0-based points, ordered
/// lexicographically by their sorted elements.
inline std::vector<std::uint32_t> subsets_of_size(int n, int t)
{
    std::vector<std::uint32_t> out;
    if (t < 0 || t > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == t) {
            std::uint32_t m = 0;
            for (int c : cur) m |= 1u << c;
            out.push_back(m);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// 1-indexed sorted elements of a bitmask set.
inline std::vector<int> mask_elements(std::uint32_t mask)
{
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1u) out.push_back(i + 1);
    return out;
}

} // namespace setwise
