#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "characters.hpp"
#include "cycle_counts.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"
#include "permutation.hpp"

namespace setwise {

/// An exact rational-valued class function on S_n. Absent classes are zero.
class ClassFunction {
public:
    ClassFunction() = default;
    explicit ClassFunction(int n) : n_(n) {}

    [[nodiscard]] int n() const noexcept { return n_; }

    [[nodiscard]] Rational operator()(const Partition& mu) const
    {
        auto it = values_.find(mu);
        return it == values_.end() ? Rational(0) : it->second;
    }

    void set(const Partition& mu, const Rational& v)
    {
        if (mu.n() != n_) throw InputError("class " + mu.str() + " is not a partition of " + std::to_string(n_));
        if (v == 0) values_.erase(mu);
        else values_[mu] = v;
    }

    void add(const Partition& mu, const Rational& v) { set(mu, (*this)(mu) + v); }

    /// Non-zero entries, keyed in increasing lexicographic order.
    [[nodiscard]] const std::map<Partition, Rational>& support() const noexcept { return values_; }

    /// Indicator of a set of classes.
    static ClassFunction indicator(int n, const std::vector<Partition>& classes)
    {
        ClassFunction f(n);
        for (const auto& mu : classes) f.set(mu, 1);
        return f;
    }

    friend ClassFunction operator*(const Rational& c, const ClassFunction& f)
    {
        ClassFunction r(f.n_);
        for (const auto& [mu, v] : f.values_) r.set(mu, c * v);
        return r;
    }
    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b)
    {
        if (a.n_ != b.n_) throw InputError("adding class functions on different S_n");
        ClassFunction r = a;
        for (const auto& [mu, v] : b.values_) r.add(mu, v);
        return r;
    }

private:
    int n_ = 0;
    std::map<Partition, Rational> values_;
};

/// <f, g> = sum over sigma in S_n of f(sigma) g(sigma), for integer-valued g
/// given per class.
template <class CharFn>
Rational inner_product(const ClassFunction& f, CharFn&& character)
{
    Rational total = 0;
    for (const auto& [mu, v] : f.support()) total += v * Rational(class_size(mu) * character(mu));
    return total;
}

inline Rational inner_with_irreducible(const ClassFunction& f, const Partition& alpha)
{
    return inner_product(f, [&](const Partition& mu) { return irreducible_character(alpha, mu); });
}

inline Rational inner_with_permutation_character(const ClassFunction& f, const Partition& beta)
{
    return inner_product(f, [&](const Partition& mu) { return perm_character(beta, mu); });
}

struct SpectrumEntry {
    Partition alpha;
    Rational eigenvalue;
    Integer dimension;
    Integer multiplicity;
};

/// Eigenvalues of a normal Cayley graph matrix on S_n, one per irreducible,
/// in decreasing lexicographic order of the labels.
struct Spectrum {
    int n = 0;
    std::vector<SpectrumEntry> entries;

    [[nodiscard]] const SpectrumEntry& entry(const Partition& alpha) const
    {
        for (const auto& e : entries)
            if (e.alpha == alpha) return e;
        throw InputError("no spectrum entry for " + alpha.str());
    }
    [[nodiscard]] const Rational& eigenvalue(const Partition& alpha) const { return entry(alpha).eigenvalue; }
    /// Eigenvalue on the constant functions, the (n) entry.
    [[nodiscard]] const Rational& constant_eigenvalue() const { return entries.front().eigenvalue; }
    [[nodiscard]] Rational min_eigenvalue() const
    {
        Rational m = entries.front().eigenvalue;
        for (const auto& e : entries) m = std::min(m, e.eigenvalue);
        return m;
    }
    [[nodiscard]] std::vector<Partition> argmin() const
    {
        const Rational m = min_eigenvalue();
        std::vector<Partition> out;
        for (const auto& e : entries)
            if (e.eigenvalue == m) out.push_back(e.alpha);
        return out;
    }
};

namespace detail {
inline void require_table_range(int n, int ceiling)
{
    if (n < 1) throw InputError("spectrum needs n >= 1");
    if (n > ceiling)
        throw ResourceError("spectra are limited to n <= " + std::to_string(ceiling) + ", got n=" + std::to_string(n));
}
} // namespace detail

/// lambda_alpha = (1/f^alpha) sum_mu w(mu) |X_mu| chi_alpha(mu) for every alpha of n.
inline Spectrum cayley_spectrum(const ClassFunction& w, int ceiling = kTableCeiling)
{
    detail::require_table_range(w.n(), ceiling);
    Spectrum s;
    s.n = w.n();
    const auto labels = partitions_of(w.n());
    s.entries.resize(labels.size());
    parallel_for(labels.size(), [&](std::size_t i) {
        const Partition& alpha = labels[i];
        const Integer dim = hook_dimension(alpha);
        s.entries[i] = SpectrumEntry{alpha, inner_with_irreducible(w, alpha) / Rational(dim), dim, dim * dim};
    });
    return s;
}

/// Cycle types of all t-derangements of S_n, decreasing lex order.
inline std::vector<Partition> t_derangement_classes(int n, int t)
{
    std::vector<Partition> out;
    for (auto& mu : partitions_of(n))
        if (is_t_derangement(mu, t)) out.push_back(std::move(mu));
    return out;
}

/// Indicator weight of the t-derangement graph Gamma_(t).
inline ClassFunction adjacency_weight(int n, int t)
{
    if (t < 1 || t >= n) throw InputError("adjacency needs 1 <= t < n (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
    return ClassFunction::indicator(n, t_derangement_classes(n, t));
}

inline Spectrum adjacency_spectrum(int n, int t, int ceiling = kTableCeiling)
{
    detail::require_table_range(n, ceiling);
    return cayley_spectrum(adjacency_weight(n, t), ceiling);
}

/// Raised by delsarte_bound when lambda_const == lambda_min.
class DegenerateSpectrumError : public DomainError {
public:
    using DomainError::DomainError;
};

/// N * (-lambda_min) / (lambda_const - lambda_min).
inline Rational delsarte_bound(const Spectrum& s, const Integer& vertex_count)
{
    const Rational top = s.constant_eigenvalue();
    const Rational low = s.min_eigenvalue();
    if (top == low) throw DegenerateSpectrumError("degenerate spectrum: constant eigenvalue equals the minimum");
    return Rational(vertex_count) * (-low) / (top - low);
}

/// sum_alpha (f^alpha)^2 lambda_alpha^2 == n! * sum_mu |X_mu| w(mu)^2.
inline bool trace_identity_check(const ClassFunction& w, const Spectrum& s)
{
    Rational lhs = 0;
    for (const auto& e : s.entries) lhs += Rational(e.multiplicity) * e.eigenvalue * e.eigenvalue;
    Rational rhs = 0;
    for (const auto& [mu, v] : w.support()) rhs += Rational(class_size(mu)) * v * v;
    rhs *= Rational(factorial(w.n()));
    return lhs == rhs;
}

inline bool trace_identity_check(const ClassFunction& w, int ceiling = kTableCeiling)
{
    return trace_identity_check(w, cayley_spectrum(w, ceiling));
}

/// nu_{n,t} = -1 / (C(n,t) - 1).
inline Rational nu_target(int n, int t) { return Rational(-1) / Rational(binomial(n, t) - 1); }

struct EpsilonEta {
    Rational epsilon;
    Rational eta;
};

/// epsilon = sum_{s=1}^{t-1} K_{(n-s,s),beta} (C(n,s) - C(n,s-1)) / (C(n,t) - 1); eta = 1 - epsilon.
inline EpsilonEta epsilon_eta(int n, int t, const Partition& beta)
{
    if (t < 1 || beta.n() != n || beta.first() < n - t + 1)
        throw InputError("epsilon_eta needs beta in F_{n,t-1}; got beta=" + beta.str() + ", n=" + std::to_string(n) + ", t=" + std::to_string(t));
    const Rational denom = Rational(binomial(n, t) - 1);
    Rational eps = 0;
    for (int s = 1; s <= t - 1; ++s) {
        if (n - s < s) break;
        eps += Rational(kostka(two_row(n, s), beta) * (binomial(n, s) - binomial(n, s - 1))) / denom;
    }
    return {eps, 1 - eps};
}

struct ClassCollection {
    std::vector<Partition> cycle_types;
    Integer total_size;
};

/// Cycle types obtained from alpha in F_{n,t-1} by splitting its first part
/// into parts > t, filtered by parity, with their summed class sizes.
inline ClassCollection class_collections(int n, int t, const Partition& alpha, Parity parity)
{
    if (n < 3 * t + 1)
        throw DomainError("construction regime not reached: needs n >= 3t+1 (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
    if (t < 1 || alpha.n() != n || alpha.first() < n - t + 1)
        throw InputError("class_collections needs alpha in F_{n,t-1}; got " + alpha.str());
    const int head = alpha.first();
    std::vector<int> tail(alpha.parts().begin() + 1, alpha.parts().end());
    ClassCollection out;
    out.total_size = 0;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            std::vector<int> parts = cur;
            parts.insert(parts.end(), tail.begin(), tail.end());
            Partition mu(std::move(parts));
            if (has_parity(mu, parity)) {
                out.total_size += class_size(mu);
                out.cycle_types.push_back(std::move(mu));
            }
            return;
        }
        for (int p = std::min(remaining, cap); p > t; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, head, head);
    return out;
}

/// The six numbered checks plus the extremal-eigenvalue diagnostics.
struct ConditionReport {
    bool support_on_t_derangements = false;         // (1)
    bool trivial_eigenvalue_is_one = false;         // (2)
    bool critical_eigenvalues_equal_nu = false;     // (3), all s in [t]
    Rational max_abs_fat_noncritical = 0;           // (4), reported
    Rational max_abs_weight_times_factorial = 0;    // (5), reported
    bool tall_eigenvalues_zero = false;             // (6)
};

struct WeightReport {
    int n = 0;
    int t = 0;
    ClassFunction w;
    std::optional<ClassFunction> w_plus;
    std::optional<ClassFunction> w_minus;
    Spectrum spectrum;
    ConditionReport conditions;
    Rational nu;
    std::optional<Rational> bound;                 // Delsarte bound with N = n!
    Rational lambda_min;
    std::vector<Partition> lambda_min_partitions;
    bool lambda_min_equals_nu = false;
    bool min_attained_exactly_on_critical = false; // argmin == {(n-s,s) : s in [t]}
    std::optional<Rational> gap;                   // min over alpha outside {(n)} and argmin of lambda - lambda_min
    bool trace_identity_holds = false;
    // populated by solve_weights
    std::vector<std::pair<Partition, EpsilonEta>> eta_values;
    std::optional<bool> xi_conditions_hold;        // <w^{+-}, xi_beta> = eta_beta on F_{n,t-1}
    std::vector<std::string> warnings;
};

/// Evaluates the weight conditions for w in exact arithmetic. Needs n > 2t.
inline WeightReport verify_conditions(const ClassFunction& w, int n, int t, int ceiling = kTableCeiling)
{
    if (w.n() != n) throw InputError("class function is on S_" + std::to_string(w.n()) + ", expected S_" + std::to_string(n));
    if (t < 1 || n <= 2 * t)
        throw DomainError("weight conditions need n > 2t (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
    WeightReport r;
    r.n = n;
    r.t = t;
    r.w = w;
    r.spectrum = cayley_spectrum(w, ceiling);
    r.nu = nu_target(n, t);

    auto& c = r.conditions;
    c.support_on_t_derangements = std::all_of(w.support().begin(), w.support().end(),
                                              [&](const auto& kv) { return is_t_derangement(kv.first, t); });
    c.trivial_eigenvalue_is_one = r.spectrum.constant_eigenvalue() == 1;
    c.critical_eigenvalues_equal_nu = true;
    for (int s = 1; s <= t; ++s)
        if (r.spectrum.eigenvalue(two_row(n, s)) != r.nu) c.critical_eigenvalues_equal_nu = false;
    c.tall_eigenvalues_zero = true;
    for (const auto& e : r.spectrum.entries) {
        const PartitionClass pc = classify(e.alpha, t);
        if (pc.kind == PartitionKind::fat_noncritical) c.max_abs_fat_noncritical = std::max(c.max_abs_fat_noncritical, abs(e.eigenvalue));
        if (pc.kind == PartitionKind::tall && e.eigenvalue != 0) c.tall_eigenvalues_zero = false;
    }
    const Rational nf(factorial(n));
    for (const auto& [mu, v] : w.support()) c.max_abs_weight_times_factorial = std::max(c.max_abs_weight_times_factorial, abs(v) * nf);

    r.lambda_min = r.spectrum.min_eigenvalue();
    r.lambda_min_partitions = r.spectrum.argmin();
    r.lambda_min_equals_nu = r.lambda_min == r.nu;
    {
        std::vector<Partition> critical;
        for (int s = 1; s <= t; ++s) critical.push_back(two_row(n, s));
        auto sorted_argmin = r.lambda_min_partitions;
        std::sort(sorted_argmin.begin(), sorted_argmin.end());
        std::sort(critical.begin(), critical.end());
        r.min_attained_exactly_on_critical = sorted_argmin == critical;
    }
    for (const auto& e : r.spectrum.entries) {
        if (e.alpha == Partition{n}) continue;
        if (std::find(r.lambda_min_partitions.begin(), r.lambda_min_partitions.end(), e.alpha) != r.lambda_min_partitions.end()) continue;
        const Rational d = e.eigenvalue - r.lambda_min;
        if (!r.gap || d < *r.gap) r.gap = d;
    }
    if (r.spectrum.constant_eigenvalue() != r.lambda_min) r.bound = delsarte_bound(r.spectrum, factorial(n));
    r.trace_identity_holds = trace_identity_check(w, r.spectrum);
    return r;
}

/// Builds w = (w+ + w-)/2: w+ (w-) is constant x+_gamma (x-_gamma) on the even
/// (odd) part of each class collection S_{n,t}(gamma), gamma in F_{n,t-1},
/// with the x's fixed by the upper-triangular system
/// sum_gamma N~_{beta,gamma} |S(gamma)| x_gamma = eta_beta.
inline WeightReport solve_weights(int n, int t, int ceiling = kTableCeiling)
{
    if (t < 1) throw InputError("solve_weights needs t >= 1");
    if (n < 3 * t + 1)
        throw DomainError("construction regime not reached: needs n >= 3t+1 (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
    detail::require_table_range(n, ceiling);

    const KostkaMinor minor = perm_char_minor(n, t - 1);
    const auto& index = minor.index;
    const std::size_t k = index.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (minor.values[i][i] <= 0) throw InternalError("permutation character minor has a non-positive diagonal entry");
        for (std::size_t j = 0; j < i; ++j)
            if (minor.values[i][j] != 0) throw InternalError("permutation character minor is not upper triangular");
    }

    std::vector<std::pair<Partition, EpsilonEta>> etas;
    for (const auto& beta : index) etas.emplace_back(beta, epsilon_eta(n, t, beta));

    // back substitution: y_gamma = |S(gamma)| x_gamma is parity independent
    std::vector<Rational> y(k);
    for (std::size_t i = k; i-- > 0;) {
        Rational acc = etas[i].second.eta;
        for (std::size_t j = i + 1; j < k; ++j) acc -= Rational(minor.values[i][j]) * y[j];
        y[i] = acc / Rational(minor.values[i][i]);
    }

    ClassFunction w_plus(n), w_minus(n);
    for (std::size_t i = 0; i < k; ++i) {
        for (Parity parity : {Parity::even, Parity::odd}) {
            const ClassCollection coll = class_collections(n, t, index[i], parity);
            if (coll.total_size == 0) throw InternalError("empty class collection for " + index[i].str());
            const Rational x = y[i] / Rational(coll.total_size);
            ClassFunction& target = parity == Parity::even ? w_plus : w_minus;
            for (const auto& mu : coll.cycle_types) target.set(mu, x);
        }
    }
    const ClassFunction w = Rational(1, 2) * (w_plus + w_minus);

    WeightReport report = verify_conditions(w, n, t, ceiling);
    report.w_plus = w_plus;
    report.w_minus = w_minus;
    report.eta_values = etas;
    bool xi_ok = true;
    for (const auto& [beta, ee] : etas) {
        if (inner_with_permutation_character(w_plus, beta) != ee.eta) xi_ok = false;
        if (inner_with_permutation_character(w_minus, beta) != ee.eta) xi_ok = false;
        if (ee.eta < 0 || ee.eta > 1)
            report.warnings.push_back("eta for " + beta.str() + " is " + to_string(ee.eta) + ", outside [0,1]");
    }
    report.xi_conditions_hold = xi_ok;
    return report;
}

namespace detail {

/// Incremental integer row echelon form; T is a signed integer type with
/// checked arithmetic (int64) or an arbitrary-precision integer.
template <class T>
class RowEchelon {
public:
    explicit RowEchelon(std::size_t width) : width_(width) {}

    /// Reduces row against the basis; keeps it if independent. Returns false
    /// on int64 overflow (the caller restarts with big integers).
    bool insert(std::vector<T> row)
    {
        for (const auto& [pivot, b] : basis_) {
            const T a = row[pivot];
            if (a == 0) continue;
            const T p = b[pivot];
            for (std::size_t c = 0; c < width_; ++c) {
                if (b[c] == 0 && row[c] == 0) continue;
                T lhs, rhs;
                if (!mul(p, row[c], lhs) || !mul(a, b[c], rhs) || !sub(lhs, rhs, row[c])) return false;
            }
            normalize(row);
        }
        const auto first = std::find_if(row.begin(), row.end(), [](const T& v) { return v != 0; });
        if (first == row.end()) return true;
        const std::size_t pivot = static_cast<std::size_t>(first - row.begin());
        basis_.emplace(pivot, std::move(row));
        return true;
    }

    [[nodiscard]] std::size_t rank() const noexcept { return basis_.size(); }

private:
    static bool mul(const T& a, const T& b, T& out)
    {
        if constexpr (std::is_same_v<T, std::int64_t>) return !__builtin_mul_overflow(a, b, &out);
        else {
            out = a * b;
            return true;
        }
    }
    static bool sub(const T& a, const T& b, T& out)
    {
        if constexpr (std::is_same_v<T, std::int64_t>) return !__builtin_sub_overflow(a, b, &out);
        else {
            out = a - b;
            return true;
        }
    }
    static T gcd(T a, T b)
    {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            T r = a % b;
            a = b;
            b = r;
        }
        return a;
    }
    static void normalize(std::vector<T>& row)
    {
        T g = 0;
        for (const auto& v : row)
            if (v != 0) g = gcd(g, v);
        if (g > 1)
            for (auto& v : row) v /= g;
    }

    std::size_t width_;
    std::map<std::size_t, std::vector<T>> basis_; // pivot column -> row, iterated by increasing pivot
};

template <class T>
std::optional<std::size_t> indicator_rank(const std::vector<std::vector<std::uint32_t>>& rows, std::size_t width)
{
    RowEchelon<T> ech(width);
    for (const auto& support : rows) {
        std::vector<T> row(width, T(0));
        for (auto idx : support) row[idx] = 1;
        if (!ech.insert(std::move(row))) return std::nullopt;
    }
    return ech.rank();
}

} // namespace detail

/// Dense exact elimination is limited to S_n with n <= 7.
inline constexpr int kSpanRankCeiling = 7;

/// Rank of the indicator vectors of the C(n,t)^2 set-stabilizer cosets
/// T_{x->y} inside the n!-dimensional rational function space on S_n.
inline Integer coset_span_rank(int n, int t)
{
    if (n < 1 || t < 0 || t > n) throw InputError("coset_span_rank needs 0 <= t <= n, n >= 1");
    if (n > kSpanRankCeiling)
        throw ResourceError("coset span rank is limited to n <= " + std::to_string(kSpanRankCeiling) + ", got n=" + std::to_string(n));
    const auto perms = all_permutations(n);
    const auto subsets = subsets_of_size(n, t);
    std::map<std::uint32_t, std::size_t> subset_index;
    for (std::size_t i = 0; i < subsets.size(); ++i) subset_index[subsets[i]] = i;
    const std::size_t m = subsets.size();
    std::vector<std::vector<std::uint32_t>> rows(m * m);
    for (std::size_t p = 0; p < perms.size(); ++p)
        for (std::size_t x = 0; x < m; ++x) {
            const std::size_t y = subset_index.at(image_mask(perms[p], subsets[x]));
            rows[x * m + y].push_back(static_cast<std::uint32_t>(p));
        }
    if (auto r = detail::indicator_rank<std::int64_t>(rows, perms.size())) return *r;
    return *detail::indicator_rank<Integer>(rows, perms.size());
}

} // namespace setwise
