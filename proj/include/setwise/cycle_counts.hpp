#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"

namespace setwise {

namespace detail {

struct EvenOdd {
    Integer even;
    Integer odd;
};

/// Permutations of [n] with exactly two cycles, both longer than t.
inline Integer two_long_cycles(int n, int t)
{
    Integer total = 0;
    const Integer nf = factorial(n);
    for (int a = t + 1; 2 * a <= n; ++a) {
        const int b = n - a;
        if (b < t + 1) continue;
        total += (a == b) ? Integer(nf / (2 * a * b)) : Integer(nf / (a * b));
    }
    return total;
}

inline EvenOdd no_short_cycles_pair(int n, int t);

inline EvenOdd no_short_cycles_uncached(int n, int t)
{
    if (n == 0) return {1, 0};
    if (n <= t) return {0, 0};
    const Integer ncycles = factorial(n - 1);
    const bool n_odd = n % 2 == 1;
    if (n < 2 * t + 2) {
        // only n-cycles; an n-cycle is even iff n is odd
        return n_odd ? EvenOdd{ncycles, 0} : EvenOdd{0, ncycles};
    }
    if (n <= 3 * t + 2) {
        // n-cycles on one side, two-cycle permutations on the other
        const Integer two = two_long_cycles(n, t);
        return n_odd ? EvenOdd{ncycles, two} : EvenOdd{two, ncycles};
    }
    Integer falling = 1; // (n-2)(n-3)...(n-t)
    for (int k = 2; k <= t; ++k) falling *= n - k;
    const EvenOdd prev = no_short_cycles_pair(n - 1, t);
    const EvenOdd tail = no_short_cycles_pair(n - t - 1, t);
    const bool t_even = t % 2 == 0;
    EvenOdd r;
    r.even = (n - 1) * (prev.odd + falling * (t_even ? tail.even : tail.odd));
    r.odd = (n - 1) * (prev.even + falling * (t_even ? tail.odd : tail.even));
    return r;
}

inline EvenOdd no_short_cycles_pair(int n, int t)
{
    static std::shared_mutex mutex;
    static std::map<std::pair<int, int>, EvenOdd> memo;
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find({n, t}); it != memo.end()) return it->second;
    }
    EvenOdd r = no_short_cycles_uncached(n, t);
    std::unique_lock lock(mutex);
    return memo.emplace(std::pair{n, t}, std::move(r)).first->second;
}

} // namespace detail

/// E_{n,t}, O_{n,t} or D_{n,t} = E + O: permutations of [n] with no cycle of
/// length <= t, restricted by parity. Uses the direct classification for
/// n <= 3t+2 and the two-term recurrences beyond.
inline Integer count_no_short_cycles(int n, int t, Parity parity)
{
    if (n < 0 || t < 1)
        throw InputError("count_no_short_cycles needs n >= 0, t >= 1 (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
    const detail::EvenOdd eo = detail::no_short_cycles_pair(n, t);
    switch (parity) {
    case Parity::even: return eo.even;
    case Parity::odd: return eo.odd;
    case Parity::all: return eo.even + eo.odd;
    }
    return 0;
}

/// L_t = 2 / (3t+2)^2, the lower-density constant for min(E, O) / n!.
inline Rational short_cycle_density_floor(int t) { return Rational(2, (3 * t + 2) * (3 * t + 2)); }

} // namespace setwise
