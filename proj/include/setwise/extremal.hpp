#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "spectral.hpp"

namespace setwise {

/// T_{a->b}: permutations with sigma(a_l) = b_l for every l. Tuples are 1-indexed.
struct TCoset {
    std::vector<int> a;
    std::vector<int> b;

    /// Throws InputError unless both tuples have t distinct entries in [n].
    void validate(int n, int t) const
    {
        auto check = [&](const std::vector<int>& v, const char* name) {
            if (static_cast<int>(v.size()) != t)
                throw InputError(std::string("coset tuple ") + name + " must have " + std::to_string(t) + " entries");
            std::set<int> seen;
            for (int x : v) {
                if (x < 1 || x > n) throw InputError("coset entry " + std::to_string(x) + " outside [" + std::to_string(n) + "]");
                if (!seen.insert(x).second) throw InputError("coset entry " + std::to_string(x) + " repeated");
            }
        };
        check(a, "a");
        check(b, "b");
    }

    [[nodiscard]] bool contains(const Permutation& p) const
    {
        for (std::size_t l = 0; l < a.size(); ++l)
            if (p(a[l]) != b[l]) return false;
        return true;
    }

    /// All members, in lexicographic order.
    [[nodiscard]] std::vector<Permutation> members(int n) const
    {
        std::vector<int> img(static_cast<std::size_t>(n), 0);
        std::vector<char> used_target(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t l = 0; l < a.size(); ++l) {
            img[static_cast<std::size_t>(a[l] - 1)] = b[l];
            used_target[static_cast<std::size_t>(b[l])] = 1;
        }
        std::vector<std::size_t> free_pos;
        std::vector<int> free_val;
        for (int i = 0; i < n; ++i)
            if (img[static_cast<std::size_t>(i)] == 0) free_pos.push_back(static_cast<std::size_t>(i));
        for (int v = 1; v <= n; ++v)
            if (!used_target[static_cast<std::size_t>(v)]) free_val.push_back(v);
        std::vector<Permutation> out;
        do {
            for (std::size_t k = 0; k < free_pos.size(); ++k) img[free_pos[k]] = free_val[k];
            out.emplace_back(img);
        } while (std::next_permutation(free_val.begin(), free_val.end()));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// "a1,..,at:b1,..,bt"
    [[nodiscard]] std::string str() const
    {
        auto join = [](const std::vector<int>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s;
        };
        return join(a) + ":" + join(b);
    }

    /// Strict parser for "a1,..,at:b1,..,bt".
    static TCoset parse(std::string_view text)
    {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos) throw InputError("coset '" + std::string(text) + "' lacks ':'");
        auto list = [&](std::string_view s) {
            std::vector<int> v;
            std::size_t pos = 0;
            while (true) {
                const auto comma = s.find(',', pos);
                const auto field = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
                if (field.empty() || field.size() > 4 || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
                    throw InputError("malformed coset '" + std::string(text) + "'");
                v.push_back(std::stoi(std::string(field)));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
            return v;
        };
        return TCoset{list(text.substr(0, colon)), list(text.substr(colon + 1))};
    }

    friend bool operator==(const TCoset&, const TCoset&) = default;
};

/// T_{x->y}: permutations mapping the t-set x onto the t-set y. Sets are
/// sorted 1-indexed element lists.
struct TSetCoset {
    std::vector<int> x;
    std::vector<int> y;

    [[nodiscard]] bool contains(const Permutation& p) const
    {
        for (int e : x)
            if (!std::binary_search(y.begin(), y.end(), p(e))) return false;
        return true;
    }

    friend bool operator==(const TSetCoset&, const TSetCoset&) = default;
};

/// A set of permutations of the same degree, stored sorted and deduplicated.
class Family {
public:
    Family() = default;
    Family(int n, std::vector<Permutation> members) : n_(n), members_(std::move(members))
    {
        for (const auto& p : members_)
            if (p.n() != n_) throw InputError("family member " + p.str() + " is not in S_" + std::to_string(n_));
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] const std::vector<Permutation>& members() const noexcept { return members_; }
    [[nodiscard]] bool contains(const Permutation& p) const { return std::binary_search(members_.begin(), members_.end(), p); }

    friend bool operator==(const Family&, const Family&) = default;
    friend auto operator<=>(const Family& a, const Family& b) { return a.members_ <=> b.members_; }

private:
    int n_ = 0;
    std::vector<Permutation> members_;
};

/// Some t-set x has p(x) = q(x); equivalently q^{-1} p fixes a t-set.
inline bool setwise_agree(const Permutation& p, const Permutation& q, int t)
{
    if (p.n() != q.n()) throw InputError("setwise_agree on permutations of different degree");
    return !is_t_derangement(q.inverse() * p, t);
}

/// Pairwise setwise agreement of all members.
inline bool is_t_set_intersecting(const Family& f, int t)
{
    const auto& m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!setwise_agree(m[i], m[j], t)) return false;
    return true;
}

/// Returns (x, y) with f == T_{x->y}, choosing the lexicographically least x.
inline std::optional<TSetCoset> is_tset_coset(const Family& f, int t)
{
    const int n = f.n();
    if (t < 0 || t > n || f.size() == 0) return std::nullopt;
    if (Integer(f.size()) != factorial(t) * factorial(n - t)) return std::nullopt;
    const Permutation& first = f.members().front();
    for (std::uint32_t x : subsets_of_size(n, t)) {
        const std::uint32_t y = image_mask(first, x);
        const bool all = std::all_of(f.members().begin(), f.members().end(), [&](const Permutation& p) { return image_mask(p, x) == y; });
        if (all) return TSetCoset{mask_elements(x), mask_elements(y)};
    }
    return std::nullopt;
}

/// Splits f into disjoint t-cosets by backtracking on the least uncovered
/// member; empty when no such decomposition exists.
inline std::optional<std::vector<TCoset>> tcoset_decompose(const Family& f, int t)
{
    const int n = f.n();
    if (t < 0 || t > n) throw InputError("tcoset_decompose needs 0 <= t <= n");
    const Integer coset_size = factorial(n - t);
    if (f.size() == 0 || Integer(f.size()) % coset_size != 0) return std::nullopt;
    std::set<Permutation> remaining(f.members().begin(), f.members().end());
    std::vector<TCoset> chosen;
    const auto subsets = subsets_of_size(n, t);
    auto rec = [&](auto&& self) -> bool {
        if (remaining.empty()) return true;
        const Permutation sigma = *remaining.begin();
        for (std::uint32_t mask : subsets) {
            TCoset c;
            c.a = mask_elements(mask);
            for (int e : c.a) c.b.push_back(sigma(e));
            const auto members = c.members(n);
            if (!std::all_of(members.begin(), members.end(), [&](const Permutation& p) { return remaining.count(p) > 0; })) continue;
            for (const auto& p : members) remaining.erase(p);
            chosen.push_back(c);
            if (self(self)) return true;
            chosen.pop_back();
            remaining.insert(members.begin(), members.end());
        }
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    return chosen;
}

/// For every pair of t-sets (x, y), exactly one member maps x onto y.
inline bool verify_sharply_set_transitive(const Family& f, int t)
{
    const int n = f.n();
    if (t < 0 || t > n) return false;
    const auto subsets = subsets_of_size(n, t);
    if (f.size() != subsets.size()) return false;
    for (std::uint32_t x : subsets) {
        std::set<std::uint32_t> images;
        for (const auto& p : f.members()) images.insert(image_mask(p, x));
        if (images.size() != subsets.size()) return false;
    }
    return true;
}

/// n!/C(n,t) = t!(n-t)!, certified by a sharply t-set-transitive family.
inline Integer averaging_bound(const Family& f, int t)
{
    if (!verify_sharply_set_transitive(f, t))
        throw InputError("family is not sharply " + std::to_string(t) + "-set-transitive");
    return factorial(f.n()) / binomial(f.n(), t);
}

// ---------------------------------------------------------------------------
// Conflict witnesses: given C = T_{[t]->[t]} and a t-coset C' that does not
// map [t] onto itself, produce sigma in C, pi in C' such that pi sigma^{-1}
// has a cycle of length >= n-t+1, so sigma and pi agree on no t-set.

struct ConflictWitness {
    Permutation sigma;
    Permutation pi;
};

namespace detail {

struct IterationStructure {
    std::vector<std::vector<int>> chains; // start in I', interior in I', last element outside I'
    std::vector<std::vector<int>> cycles; // closed orbits of p inside I'
};

inline IterationStructure iterate_within(const std::set<int>& inner, const std::map<int, int>& p)
{
    IterationStructure out;
    std::set<int> images;
    for (int i : inner) images.insert(p.at(i));
    std::set<int> covered;
    for (int s : inner) {
        if (images.count(s)) continue;
        std::vector<int> chain{s};
        int x = s;
        while (inner.count(x)) {
            covered.insert(x);
            x = p.at(x);
            chain.push_back(x);
        }
        out.chains.push_back(std::move(chain));
    }
    for (int s : inner) {
        if (covered.count(s)) continue;
        std::vector<int> cyc;
        for (int x = s; !covered.count(x); x = p.at(x)) {
            covered.insert(x);
            cyc.push_back(x);
        }
        out.cycles.push_back(std::move(cyc));
    }
    return out;
}

/// Assembles tau from its short cycles and one long cycle.
inline Permutation permutation_from(int n, const std::vector<std::vector<int>>& cycles, const std::vector<int>& long_cycle)
{
    auto all = cycles;
    if (!long_cycle.empty()) all.push_back(long_cycle);
    return Permutation::from_cycles(n, all);
}

/// Long cycle through [t]^c and the chain containing i*, for some i* in I'
/// with p(i*) outside [t].
inline Permutation tau_maps_outside(int n, int t, const std::set<int>& inner, const std::map<int, int>& p, const std::set<int>& bset)
{
    const auto iter = iterate_within(inner, p);
    auto outside = [&](int x) { return x > t; };
    const std::set<int> r_set = [&] {
        std::set<int> r;
        for (int x = 1; x <= t; ++x)
            if (!inner.count(x) && !p.count(x)) r.insert(x);
        return r;
    }();

    std::map<int, std::size_t> chain_by_end;
    for (std::size_t c = 0; c < iter.chains.size(); ++c) chain_by_end[iter.chains[c].back()] = c;
    std::vector<char> chain_used(iter.chains.size(), 0);
    std::set<int> used;
    auto take_chain = [&](std::size_t c, std::vector<int>& into) {
        chain_used[c] = 1;
        for (int x : iter.chains[c]) {
            used.insert(x);
            into.push_back(x);
        }
    };
    auto smallest_free_outside = [&]() -> int {
        for (int q = t + 1; q <= n; ++q)
            if (!used.count(q)) return q;
        throw InternalError("no unused point outside [t] while building a conflict witness");
    };
    // chain ending at q if there is one, else the point q itself
    auto lead_in = [&](int q, std::vector<int>& into) {
        if (auto it = chain_by_end.find(q); it != chain_by_end.end() && !chain_used[it->second]) take_chain(it->second, into);
        else {
            used.insert(q);
            into.push_back(q);
        }
    };

    std::vector<std::vector<int>> g_chains;
    std::vector<int> bad;
    for (std::size_t c = 0; c < iter.chains.size(); ++c) {
        const auto& ch = iter.chains[c];
        if (bset.count(ch.front()) && outside(ch.back())) take_chain(c, bad);
    }
    for (int b : bset)
        if (outside(b)) {
            used.insert(b);
            bad.push_back(b);
        }
    for (int b : bset) {
        if (!r_set.count(b)) continue;
        std::vector<int> g;
        lead_in(smallest_free_outside(), g);
        used.insert(b);
        g.push_back(b);
        g_chains.push_back(std::move(g));
    }
    for (std::size_t c = 0; c < iter.chains.size(); ++c) {
        const auto& ch = iter.chains[c];
        if (chain_used[c] || !bset.count(ch.front()) || !r_set.count(ch.back())) continue;
        std::vector<int> g;
        lead_in(smallest_free_outside(), g);
        take_chain(c, g);
        g_chains.push_back(std::move(g));
    }
    if (!bad.empty()) {
        std::vector<int> head;
        lead_in(smallest_free_outside(), head);
        head.insert(head.end(), bad.begin(), bad.end());
        g_chains.insert(g_chains.begin(), std::move(head));
    }
    for (std::size_t c = 0; c < iter.chains.size(); ++c) {
        if (chain_used[c]) continue;
        std::vector<int> g;
        take_chain(c, g);
        g_chains.push_back(std::move(g));
    }
    std::set<int> in_cycles;
    for (const auto& cyc : iter.cycles) in_cycles.insert(cyc.begin(), cyc.end());
    std::vector<int> long_cycle;
    for (const auto& g : g_chains) long_cycle.insert(long_cycle.end(), g.begin(), g.end());
    for (int x = 1; x <= n; ++x)
        if (!used.count(x) && !in_cycles.count(x)) long_cycle.push_back(x);
    return permutation_from(n, iter.cycles, long_cycle);
}

/// Long cycle through everything outside I' when i in [t] <=> p(i) in [t].
inline Permutation tau_if_and_only_if(int n, int t, const std::set<int>& inner, const std::map<int, int>& p, const std::set<int>& bset)
{
    const auto iter = iterate_within(inner, p);
    std::set<int> in_chain;
    std::vector<int> long_cycle;
    for (const auto& ch : iter.chains) {
        long_cycle.insert(long_cycle.end(), ch.begin(), ch.end());
        in_chain.insert(ch.begin(), ch.end());
    }
    for (int x = 1; x <= t; ++x)
        if (!inner.count(x) && !p.count(x) && !in_chain.count(x)) long_cycle.push_back(x);
    int entry = 0;
    for (int q = t + 1; q <= n && entry == 0; ++q)
        if (!bset.count(q)) entry = q;
    if (entry == 0) throw InternalError("B covers [t]^c while building a conflict witness");
    long_cycle.push_back(entry);
    for (int q = t + 1; q <= n; ++q)
        if (q != entry) long_cycle.push_back(q);
    return permutation_from(n, iter.cycles, long_cycle);
}

/// Given tau with tau(i) = p(i) on I' and tau^{-1}(B) outside [t], returns
/// sigma in C = T_{[t]->[t]} and pi = tau sigma in C'.
inline ConflictWitness witness_from_tau(int n, int t, const TCoset& cprime, const Permutation& tau)
{
    const Permutation tau_inv = tau.inverse();
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
    for (int l = 1; l <= t; ++l) {
        img[static_cast<std::size_t>(l - 1)] = l;
        taken[static_cast<std::size_t>(l)] = 1;
    }
    for (std::size_t l = 0; l < cprime.a.size(); ++l) {
        const int i = cprime.a[l];
        if (i <= t) continue;
        const int target = tau_inv(cprime.b[l]);
        img[static_cast<std::size_t>(i - 1)] = target;
        taken[static_cast<std::size_t>(target)] = 1;
    }
    int next = t + 1;
    for (int i = t + 1; i <= n; ++i) {
        if (img[static_cast<std::size_t>(i - 1)] != 0) continue;
        while (taken[static_cast<std::size_t>(next)]) ++next;
        img[static_cast<std::size_t>(i - 1)] = next;
        taken[static_cast<std::size_t>(next)] = 1;
    }
    const Permutation sigma(img);
    return {sigma, tau * sigma};
}

inline int longest_cycle(const Permutation& p)
{
    int best = 0;
    for (const auto& c : p.cycles()) best = std::max(best, static_cast<int>(c.size()));
    return best;
}

inline ConflictWitness conflict_witness_normalized(const TCoset& cprime, int n, int t)
{
    std::set<int> iset(cprime.a.begin(), cprime.a.end());
    std::set<int> jset(cprime.b.begin(), cprime.b.end());
    std::set<int> first_t;
    for (int l = 1; l <= t; ++l) first_t.insert(l);
    if (iset == first_t && jset == first_t)
        throw InputError("compatible cosets: " + cprime.str() + " maps [t] onto [t]");

    std::map<int, int> p;
    for (std::size_t l = 0; l < cprime.a.size(); ++l) p[cprime.a[l]] = cprime.b[l];
    std::set<int> inner;  // I' = I cap [t]
    std::set<int> bset;   // B = p(I \ [t])
    for (const auto& [i, pi] : p) {
        if (i <= t) inner.insert(i);
        else bset.insert(pi);
    }
    const bool j_meets_t = std::any_of(jset.begin(), jset.end(), [&](int j) { return j <= t; });

    if (inner.empty() && !j_meets_t) {
        if (n == 2 * t) throw InputError("coset fixes [t]: with n = 2t, " + cprime.str() + " maps [t]^c onto [t]^c");
        // translate C' to T_{(t+1..2t)->(t+1..2t)} keeping C fixed
        std::vector<int> alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
        for (int l = 1; l <= t; ++l) alpha[static_cast<std::size_t>(l - 1)] = beta[static_cast<std::size_t>(l - 1)] = l;
        std::vector<char> alpha_hit(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> beta_pre(static_cast<std::size_t>(n) + 1, 0); // beta as a map value -> image
        for (int l = 1; l <= t; ++l) {
            alpha[static_cast<std::size_t>(t + l - 1)] = cprime.a[static_cast<std::size_t>(l - 1)];
            alpha_hit[static_cast<std::size_t>(cprime.a[static_cast<std::size_t>(l - 1)])] = 1;
            beta[static_cast<std::size_t>(cprime.b[static_cast<std::size_t>(l - 1)] - 1)] = t + l;
        }
        int next = t + 1;
        for (int d = 2 * t + 1; d <= n; ++d) {
            while (alpha_hit[static_cast<std::size_t>(next)]) ++next;
            alpha[static_cast<std::size_t>(d - 1)] = next;
            alpha_hit[static_cast<std::size_t>(next)] = 1;
        }
        int target = 2 * t + 1;
        for (int v = t + 1; v <= n; ++v)
            if (!jset.count(v)) beta[static_cast<std::size_t>(v - 1)] = target++;
        const Permutation a_perm(alpha), b_perm(beta);
        std::vector<int> sigma_cycle, pi_cycle;
        for (int v = 2 * t + 1; v >= t + 1; --v) sigma_cycle.push_back(v);
        for (int v = 1; v <= t; ++v) pi_cycle.push_back(v);
        for (int v = 2 * t + 1; v <= n; ++v) pi_cycle.push_back(v);
        const Permutation sigma0 = Permutation::from_cycles(n, {sigma_cycle});
        const Permutation pi0 = Permutation::from_cycles(n, {pi_cycle});
        const Permutation b_inv = b_perm.inverse(), a_inv = a_perm.inverse();
        return {b_inv * sigma0 * a_inv, b_inv * pi0 * a_inv};
    }

    const bool maps_out = std::any_of(inner.begin(), inner.end(), [&](int i) { return p.at(i) > t; });
    if (maps_out) return witness_from_tau(n, t, cprime, tau_maps_outside(n, t, inner, p, bset));

    const bool maps_in = std::any_of(p.begin(), p.end(), [&](const auto& kv) { return kv.first > t && kv.second <= t; });
    if (maps_in) {
        const ConflictWitness inv = conflict_witness_normalized(TCoset{cprime.b, cprime.a}, n, t);
        return {inv.sigma.inverse(), inv.pi.inverse()};
    }
    return witness_from_tau(n, t, cprime, tau_if_and_only_if(n, t, inner, p, bset));
}

} // namespace detail

/// sigma in C, pi in C', pi sigma^{-1} has a cycle of length >= n-t+1, and no
/// t-set has the same image under both.
inline bool witness_is_valid(const ConflictWitness& w, const TCoset& c, const TCoset& cprime, int t)
{
    if (!c.contains(w.sigma) || !cprime.contains(w.pi)) return false;
    const int n = w.sigma.n();
    if (detail::longest_cycle(w.pi * w.sigma.inverse()) < n - t + 1) return false;
    for (std::uint32_t x : subsets_of_size(n, t))
        if (image_mask(w.sigma, x) == image_mask(w.pi, x)) return false;
    return true;
}

inline TCoset identity_tcoset(int t)
{
    TCoset c;
    for (int l = 1; l <= t; ++l) {
        c.a.push_back(l);
        c.b.push_back(l);
    }
    return c;
}

/// Witness against C = T_{(1..t)->(1..t)}.
inline ConflictWitness conflict_witness(const TCoset& cprime, int n, int t)
{
    if (t < 1 || n < 2 * t) throw InputError("conflict_witness needs 1 <= t and n >= 2t");
    cprime.validate(n, t);
    const ConflictWitness w = detail::conflict_witness_normalized(cprime, n, t);
    if (!witness_is_valid(w, identity_tcoset(t), cprime, t))
        throw InternalError("conflict witness for " + cprime.str() + " failed verification");
    return w;
}

/// General form: double-translates (C, C') so that C = T_{[t]->[t]}, solves,
/// and translates the witness back.
inline ConflictWitness conflict_witness(const TCoset& c, const TCoset& cprime, int n, int t)
{
    if (t < 1 || n < 2 * t) throw InputError("conflict_witness needs 1 <= t and n >= 2t");
    c.validate(n, t);
    cprime.validate(n, t);
    // alpha(l) = a_l, beta(b_l) = l, extended increasingly
    auto extend = [n](const std::vector<std::pair<int, int>>& fixed) {
        std::vector<int> img(static_cast<std::size_t>(n), 0);
        std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
        for (auto [from, to] : fixed) {
            img[static_cast<std::size_t>(from - 1)] = to;
            hit[static_cast<std::size_t>(to)] = 1;
        }
        int next = 1;
        for (int i = 1; i <= n; ++i) {
            if (img[static_cast<std::size_t>(i - 1)] != 0) continue;
            while (hit[static_cast<std::size_t>(next)]) ++next;
            img[static_cast<std::size_t>(i - 1)] = next;
            hit[static_cast<std::size_t>(next)] = 1;
        }
        return Permutation(img);
    };
    std::vector<std::pair<int, int>> fa, fb;
    for (std::size_t l = 0; l < c.a.size(); ++l) {
        fa.emplace_back(static_cast<int>(l) + 1, c.a[l]);
        fb.emplace_back(c.b[l], static_cast<int>(l) + 1);
    }
    const Permutation alpha = extend(fa), beta = extend(fb);
    const Permutation alpha_inv = alpha.inverse(), beta_inv = beta.inverse();
    TCoset normalized;
    for (std::size_t l = 0; l < cprime.a.size(); ++l) {
        normalized.a.push_back(alpha_inv(cprime.a[l]));
        normalized.b.push_back(beta(cprime.b[l]));
    }
    const ConflictWitness w0 = detail::conflict_witness_normalized(normalized, n, t);
    ConflictWitness w{beta_inv * w0.sigma * alpha_inv, beta_inv * w0.pi * alpha_inv};
    if (!witness_is_valid(w, c, cprime, t))
        throw InternalError("conflict witness for " + c.str() + " vs " + cprime.str() + " failed verification");
    return w;
}

// ---------------------------------------------------------------------------
// Exhaustive search over S_n.

inline constexpr int kSearchCeiling = 6;
inline constexpr int kExtendedSearchCeiling = 7;
inline constexpr int kEnumerationCeiling = 5;

namespace detail {

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    [[nodiscard]] bool test(std::size_t i) const { return words_[i >> 6] >> (i & 63) & 1u; }
    [[nodiscard]] bool none() const
    {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    [[nodiscard]] std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    /// Index of the lowest set bit; call only when !none().
    [[nodiscard]] std::size_t first() const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return words_.size() * 64;
    }
    Bits& operator&=(const Bits& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    void and_not(const Bits& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    }

private:
    std::vector<std::uint64_t> words_;
};

/// Cayley graph on S_n given by a connection set of ranks: i ~ j iff
/// perms[i]^{-1} perms[j] is in the set.
struct CayleyGraph {
    std::vector<Permutation> perms;
    std::vector<Bits> adj;
};

inline CayleyGraph build_cayley_graph(int n, const std::function<bool(const Partition&)>& connects)
{
    CayleyGraph g;
    g.perms = all_permutations(n);
    const std::size_t v = g.perms.size();
    std::vector<Permutation> connection;
    for (const auto& d : g.perms)
        if (connects(cycle_type(d))) connection.push_back(d);
    g.adj.assign(v, Bits(v));
    for (std::size_t i = 0; i < v; ++i)
        for (const auto& d : connection) {
            const std::size_t j = lex_rank(g.perms[i] * d);
            if (j != i) g.adj[i].set(j);
        }
    return g;
}

/// Greedy sequential colouring; returns vertices in colour order together
/// with the colour number of each.
inline void colour_sort(const std::vector<Bits>& adj, Bits p, std::vector<std::size_t>& order, std::vector<std::size_t>& colour)
{
    order.clear();
    colour.clear();
    std::size_t k = 0;
    while (!p.none()) {
        ++k;
        Bits q = p;
        while (!q.none()) {
            const std::size_t v = q.first();
            q.reset(v);
            q.and_not(adj[v]);
            p.reset(v);
            order.push_back(v);
            colour.push_back(k);
        }
    }
}

/// Branch and bound for cliques. In maximum mode it raises `best` and stops
/// once `stop_at` is reached; in enumeration mode it reports every clique of
/// exactly `target` vertices.
class CliqueSearch {
public:
    explicit CliqueSearch(const std::vector<Bits>& adj) : adj_(adj) {}

    std::vector<std::size_t> maximum(std::vector<std::size_t> seed, const Bits& candidates, std::vector<std::size_t> incumbent,
                                     std::size_t stop_at, std::uint64_t node_budget = 0)
    {
        best_ = std::move(incumbent);
        stop_at_ = stop_at;
        budget_ = node_budget;
        nodes_ = 0;
        exhausted_ = false;
        enumerate_ = false;
        current_ = std::move(seed);
        if (best_.size() < stop_at_) expand(candidates);
        return best_;
    }

    void enumerate(std::vector<std::size_t> seed, const Bits& candidates, std::size_t target,
                   const std::function<void(const std::vector<std::size_t>&)>& report)
    {
        enumerate_ = true;
        target_ = target;
        report_ = report;
        budget_ = 0;
        current_ = std::move(seed);
        if (current_.size() == target_) report_(current_);
        else expand(candidates);
    }

    /// True when the last maximum() call ran out of its node budget.
    [[nodiscard]] bool budget_exhausted() const noexcept { return exhausted_; }

private:
    bool done() const { return exhausted_ || (!enumerate_ && best_.size() >= stop_at_); }

    void expand(Bits p)
    {
        if (budget_ && ++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        std::vector<std::size_t> order, colour;
        colour_sort(adj_, p, order, colour);
        for (std::size_t i = order.size(); i-- > 0;) {
            const std::size_t bound = current_.size() + colour[i];
            if (enumerate_ ? bound < target_ : bound <= best_.size()) return;
            const std::size_t v = order[i];
            current_.push_back(v);
            Bits np = p;
            np &= adj_[v];
            if (enumerate_) {
                if (current_.size() == target_) report_(current_);
                else if (!np.none()) expand(np);
            } else if (np.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(np);
            }
            current_.pop_back();
            p.reset(v);
            if (done()) return;
        }
    }

    const std::vector<Bits>& adj_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::size_t stop_at_ = 0;
    std::size_t target_ = 0;
    bool enumerate_ = false;
    bool exhausted_ = false;
    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
    std::function<void(const std::vector<std::size_t>&)> report_;
};

inline Family family_from_indices(int n, const std::vector<Permutation>& perms, const std::vector<std::size_t>& idx)
{
    std::vector<Permutation> m;
    for (auto i : idx) m.push_back(perms[i]);
    return Family(n, std::move(m));
}

inline Integer floor_of(const Rational& q) { return numerator(q) / denominator(q); }

} // namespace detail

struct SearchResult {
    int n = 0;
    int t = 0;
    Integer max_size;
    Family witness;
    /// How optimality was established: "exhaustive", "spectral", "weighted-spectral" or "clique-coclique".
    std::string certificate;
};

/// Node budget for the pairwise-disagreeing search behind the clique-coclique certificate.
inline constexpr std::uint64_t kCocliqueBudget = 200000;

/// Exact maximum size of a t-set-intersecting family in S_n, with a witness
/// containing the identity.
inline SearchResult max_family(int n, int t, bool extended = false)
{
    if (n < 1 || t < 1 || t > n) throw InputError("max_family needs 1 <= t <= n");
    const int ceiling = extended ? kExtendedSearchCeiling : kSearchCeiling;
    if (n > ceiling) throw ResourceError("exhaustive search is limited to n <= " + std::to_string(ceiling) + (extended ? "" : " (use extended mode for n = 7)"));

    SearchResult result;
    result.n = n;
    result.t = t;
    const Integer nf = factorial(n);
    const Integer coset_size = factorial(t) * factorial(n - t);

    const auto agree = detail::build_cayley_graph(n, [t](const Partition& mu) { return !is_t_derangement(mu, t); });
    const std::size_t id = 0; // identity is lexicographically first
    const std::size_t v = agree.perms.size();

    // incumbent: the stabilizer of [t], which contains the identity
    std::vector<std::size_t> incumbent;
    {
        std::uint32_t first_t = (1u << t) - 1;
        for (std::size_t i = 0; i < v; ++i)
            if (image_mask(agree.perms[i], first_t) == first_t) incumbent.push_back(i);
    }

    Integer upper = nf;
    std::string certificate = "exhaustive";
    auto offer = [&](const Integer& bound, const char* name) {
        if (bound < upper) {
            upper = bound;
            certificate = name;
        }
    };
    if (t < n) {
        const Spectrum s = adjacency_spectrum(n, t);
        if (s.constant_eigenvalue() != s.min_eigenvalue()) offer(detail::floor_of(delsarte_bound(s, nf)), "spectral");
        if (n >= 3 * t + 1) {
            const WeightReport wr = solve_weights(n, t);
            if (wr.conditions.support_on_t_derangements && wr.bound) offer(detail::floor_of(*wr.bound), "weighted-spectral");
        }
        if (upper > coset_size) {
            // clique-coclique: C(n,t) pairwise disagreeing permutations bound the family by t!(n-t)!
            const auto disagree = detail::build_cayley_graph(n, [t](const Partition& mu) { return is_t_derangement(mu, t); });
            const std::size_t want = binomial(n, t).convert_to<std::size_t>();
            detail::CliqueSearch cs(disagree.adj);
            const auto found = cs.maximum({id}, disagree.adj[id], {id}, want, kCocliqueBudget);
            if (found.size() >= want) offer(nf / binomial(n, t), "clique-coclique");
        }
    }

    std::vector<std::size_t> best = incumbent;
    if (Integer(best.size()) < upper) {
        detail::CliqueSearch cs(agree.adj);
        best = cs.maximum({id}, agree.adj[id], incumbent, upper.convert_to<std::size_t>());
        if (Integer(best.size()) < upper) certificate = "exhaustive";
    }
    result.max_size = best.size();
    result.witness = detail::family_from_indices(n, agree.perms, best);
    result.certificate = certificate;
    if (!is_t_set_intersecting(result.witness, t)) throw InternalError("search witness is not t-set-intersecting");
    return result;
}

struct ExtremalFamily {
    Family family;
    std::optional<TSetCoset> coset; // set when the family is some T_{x->y}
};

/// Every maximum t-set-intersecting family of S_n (n <= 5), canonicalized,
/// deduplicated and sorted.
inline std::vector<ExtremalFamily> enumerate_extremal(int n, int t)
{
    if (n < 1 || t < 1 || t > n) throw InputError("enumerate_extremal needs 1 <= t <= n");
    if (n > kEnumerationCeiling) throw ResourceError("extremal enumeration is limited to n <= " + std::to_string(kEnumerationCeiling));
    const SearchResult best = max_family(n, t);
    const std::size_t target = best.max_size.convert_to<std::size_t>();
    const auto agree = detail::build_cayley_graph(n, [t](const Partition& mu) { return !is_t_derangement(mu, t); });

    std::vector<std::vector<std::size_t>> through_identity;
    detail::CliqueSearch cs(agree.adj);
    cs.enumerate({0}, agree.adj[0], target, [&](const std::vector<std::size_t>& c) { through_identity.push_back(c); });

    std::set<Family> families;
    for (const auto& c : through_identity) {
        const Family base = detail::family_from_indices(n, agree.perms, c);
        for (const auto& sigma : agree.perms) {
            std::vector<Permutation> m;
            for (const auto& p : base.members()) m.push_back(sigma * p);
            families.emplace(n, std::move(m));
        }
    }
    std::vector<ExtremalFamily> out;
    for (const auto& f : families) out.push_back({f, is_tset_coset(f, t)});
    return out;
}

// ---------------------------------------------------------------------------
// Family text form: one permutation per line in one-line notation.

inline Family read_family_text(std::istream& in)
{
    std::vector<Permutation> members;
    std::string line;
    int n = -1;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        Permutation p = Permutation::parse(line);
        if (n == -1) n = p.n();
        else if (p.n() != n) throw InputError("family mixes degrees: '" + line + "'");
        members.push_back(std::move(p));
    }
    if (n == -1) throw InputError("empty family");
    return Family(n, std::move(members));
}

inline void write_family_text(std::ostream& out, const Family& f)
{
    for (const auto& p : f.members()) out << p.str() << '\n';
}

} // namespace setwise
