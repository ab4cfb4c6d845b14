#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace setwise {

/// A partition of n: positive parts stored non-increasing. Doubles as the
/// cycle type of a permutation. The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    /// Accepts parts in any order; sorts them. Non-positive parts are rejected.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p <= 0) throw InputError("partition parts must be positive, got " + std::to_string(p));
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Strict parser for "3,2,2": rejects empty fields, non-digits and
    /// parts that are not already non-increasing.
    static Partition parse(std::string_view text);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
    /// i-th part (0-based); zero past the end.
    [[nodiscard]] int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    [[nodiscard]] int first() const noexcept { return (*this)[0]; }

    /// Multiplicity of part size j.
    [[nodiscard]] int multiplicity(int j) const noexcept
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
    }

    [[nodiscard]] std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    // Comparison on the parts vector is lexicographic order for partitions of
    // the same n; across different n it is only a consistent key order.
    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.parts_ <=> b.parts_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.str() << ')'; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

inline Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (field.empty() || field.size() > 4 || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InputError("malformed partition '" + std::string(text) + "'");
        const int v = std::stoi(std::string(field));
        if (v <= 0) throw InputError("partition '" + std::string(text) + "' has a non-positive part");
        if (!parts.empty() && v > parts.back())
            throw InputError("partition '" + std::string(text) + "' is not non-increasing");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

/// Partitions of n with every part <= max_part, in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

/// All partitions of n in decreasing lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

/// p(n), the number of partitions of n.
inline std::int64_t partition_count(int n)
{
    if (n < 0) return 0;
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    return p[n];
}

namespace detail {
inline void require_same_n(const Partition& a, const Partition& b, const char* what)
{
    if (a.n() != b.n())
        throw InputError(std::string(what) + ": partitions " + a.str() + " and " + b.str() + " have different sizes");
}
} // namespace detail

/// Dominance order: every prefix sum of lhs is at least the matching prefix sum of rhs.
inline bool dominates(const Partition& lhs, const Partition& rhs)
{
    detail::require_same_n(lhs, rhs, "dominates");
    const std::size_t len = std::max(lhs.length(), rhs.length());
    int a = 0, b = 0;
    for (std::size_t i = 0; i < len; ++i) {
        a += lhs[i];
        b += rhs[i];
        if (a < b) return false;
    }
    return true;
}

/// Lexicographic order: compares at the first differing part.
inline std::strong_ordering lex_compare(const Partition& lhs, const Partition& rhs)
{
    detail::require_same_n(lhs, rhs, "lex_compare");
    const std::size_t len = std::max(lhs.length(), rhs.length());
    for (std::size_t i = 0; i < len; ++i)
        if (lhs[i] != rhs[i]) return lhs[i] <=> rhs[i];
    return std::strong_ordering::equal;
}

/// Column lengths of the Young diagram.
inline Partition transpose(const Partition& lam)
{
    std::vector<int> cols;
    for (int c = 0; c < lam.first(); ++c) {
        int len = 0;
        while (static_cast<std::size_t>(len) < lam.length() && lam[static_cast<std::size_t>(len)] > c) ++len;
        cols.push_back(len);
    }
    return Partition(std::move(cols));
}

/// f^lambda = n! / product of hook lengths.
inline Integer hook_dimension(const Partition& lam)
{
    const Partition cols = transpose(lam);
    Integer hooks = 1;
    for (std::size_t i = 0; i < lam.length(); ++i) {
        for (int j = 0; j < lam[i]; ++j) {
            const int arm = lam[i] - j - 1;
            const int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    }
    const Integer total = factorial(lam.n());
    if (total % hooks != 0)
        throw InternalError("hook product of " + lam.str() + " does not divide n!");
    return total / hooks;
}

/// Size of the conjugacy class of cycle type mu: n! / prod_j j^{a_j} a_j!.
inline Integer class_size(const Partition& mu)
{
    Integer centralizer = 1;
    for (int j = 1; j <= mu.n(); ++j) {
        const int a = mu.multiplicity(j);
        for (int k = 0; k < a; ++k) centralizer *= j;
        centralizer *= factorial(a);
    }
    return factorial(mu.n()) / centralizer;
}

/// +1 for classes of even permutations, -1 for odd: (-1)^(n - number of cycles).
inline int class_sign(const Partition& mu)
{
    return ((mu.n() - static_cast<int>(mu.length())) % 2 == 0) ? 1 : -1;
}

enum class Parity { even, odd, all };

inline bool has_parity(const Partition& mu, Parity parity)
{
    switch (parity) {
    case Parity::even: return class_sign(mu) == 1;
    case Parity::odd: return class_sign(mu) == -1;
    case Parity::all: return true;
    }
    return true;
}

enum class PartitionKind { critical, fat_noncritical, tall, medium };

inline const char* to_string(PartitionKind k)
{
    switch (k) {
    case PartitionKind::critical: return "critical";
    case PartitionKind::fat_noncritical: return "fat-noncritical";
    case PartitionKind::tall: return "tall";
    case PartitionKind::medium: return "medium";
    }
    return "?";
}

struct PartitionClass {
    PartitionKind kind = PartitionKind::medium;
    bool is_fat = false;
    bool is_tall = false;
};

/// (n-s, s), the two-row shape; s = 0 gives (n).
inline Partition two_row(int n, int s)
{
    if (s == 0) return Partition{n};
    if (s < 0 || s > n - s) throw InputError("(" + std::to_string(n - s) + "," + std::to_string(s) + ") is not a partition");
    return Partition{n - s, s};
}

/// Fat: first row >= n-t. Tall: first column >= n-t. Critical: (n-s, s) with s <= t.
inline PartitionClass classify(const Partition& lam, int t)
{
    const int n = lam.n();
    if (n <= 2 * t)
        throw DomainError("classify needs n > 2t (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
    PartitionClass c;
    c.is_fat = lam.first() >= n - t;
    c.is_tall = static_cast<int>(lam.length()) >= n - t;
    const bool critical = lam.length() <= 2 && lam.first() >= n - t;
    if (critical) c.kind = PartitionKind::critical;
    else if (c.is_fat) c.kind = PartitionKind::fat_noncritical;
    else if (c.is_tall) c.kind = PartitionKind::tall;
    else c.kind = PartitionKind::medium;
    return c;
}

/// F_{n,k}: partitions of n with first part >= n-k, decreasing lex order.
inline std::vector<Partition> fat_partitions(int n, int k)
{
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (p.first() >= n - k) out.push_back(std::move(p));
    return out;
}

} // namespace setwise
