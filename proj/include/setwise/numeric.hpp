#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"

namespace setwise {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n)
{
    if (n < 0) throw InputError("factorial of negative number " + std::to_string(n));
    Integer r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

/// C(n, k), zero outside 0 <= k <= n.
inline Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Integer& z) { return z.str(); }

/// "p/q", or just "p" for integers.
inline std::string to_string(const Rational& q)
{
    const Integer den = denominator(q);
    if (den == 1) return numerator(q).str();
    return numerator(q).str() + "/" + den.str();
}

/// Six-significant-digit decimal rendering. Display only.
inline std::string to_decimal(const Rational& q)
{
    const double v = numerator(q).convert_to<double>() / denominator(q).convert_to<double>();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Worker count for internal parallel loops: SETWISE_THREADS, else hardware concurrency.
inline unsigned worker_count()
{
    if (const char* env = std::getenv("SETWISE_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, count). Each index is visited exactly once; fn
/// must only write to per-index state.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) fn(i);
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);
}

} // namespace setwise
