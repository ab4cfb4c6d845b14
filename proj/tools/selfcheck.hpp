#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "setwise/setwise.hpp"

namespace setwise::tool {

/// Desk-scale invariant suite. With inject_fault a single irreducible
/// character value is perturbed before the character checks run, which
/// must make the suite fail.
class SelfCheck {
public:
    SelfCheck(std::ostream& log, std::uint64_t seed, bool inject_fault) : log_(log), rng_(seed), inject_fault_(inject_fault) {}

    bool run()
    {
        characters();
        counts();
        spectra();
        extremal();
        log_ << (failures_ == 0 ? "selfcheck passed" : "selfcheck FAILED") << " (" << checks_ << " checks, " << failures_ << " failures)\n";
        return failures_ == 0;
    }

private:
    void check(const std::string& name, bool ok)
    {
        ++checks_;
        if (!ok) ++failures_;
        log_ << (ok ? "ok   " : "FAIL ") << name << '\n';
    }

    void characters()
    {
        for (int n = 1; n <= 7; ++n) {
            CharacterTable irr = character_table(n, Flavor::irreducible);
            const CharacterTable perm = character_table(n, Flavor::permutation);
            if (inject_fault_ && n == 5) irr.values[1].back() += 1;
            const auto& order = irr.order;
            const std::size_t k = order.size();
            const Integer nf = factorial(n);

            bool ortho = true;
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a; b < k; ++b) {
                    Integer s = 0;
                    for (std::size_t c = 0; c < k; ++c) s += class_size(order[c]) * irr.values[a][c] * irr.values[b][c];
                    if (s != (a == b ? nf : Integer(0))) ortho = false;
                }
            check("row orthogonality n=" + std::to_string(n), ortho);

            bool dims = true, sign = true, young = true, tri = true;
            for (std::size_t a = 0; a < k; ++a) {
                if (irr.values[a].back() != hook_dimension(order[a])) dims = false;
                const std::size_t ta = irr.index_of(transpose(order[a]));
                for (std::size_t c = 0; c < k; ++c) {
                    if (irr.values[ta][c] != class_sign(order[c]) * irr.values[a][c]) sign = false;
                    Integer expanded = 0;
                    for (std::size_t m = 0; m < k; ++m) expanded += kostka(order[m], order[a]) * irr.values[m][c];
                    if (expanded != perm.values[a][c]) young = false;
                    if (c < a && perm.values[a][c] != 0) tri = false;
                }
                if (perm.values[a][a] <= 0) tri = false;
            }
            check("chi(id) = hook dimension n=" + std::to_string(n), dims);
            check("transpose-sign n=" + std::to_string(n), sign);
            check("Young's rule n=" + std::to_string(n), young);
            check("xi table upper triangular n=" + std::to_string(n), tri);
        }
        for (int t = 1; t <= 3; ++t)
            for (int n = t + 1; n <= 9; ++n) {
                for (const auto& alpha : partitions_of(n)) {
                    if (alpha.first() != n - t || (alpha.length() == 2 && alpha[1] == t)) continue;
                    if (!determinant_vanishing_check(alpha, t)) {
                        check("determinant vanishing " + alpha.str(), false);
                        return;
                    }
                }
            }
        check("determinant vanishing t<=3, n<=9", true);
    }

    void counts()
    {
        bool ok = true;
        for (int n = 0; n <= 7; ++n)
            for (int t = 1; t <= 3; ++t) {
                Integer even = 0, odd = 0;
                for (const auto& mu : partitions_of(n)) {
                    if (n > 0 && mu.parts().back() <= t) continue;
                    (class_sign(mu) > 0 ? even : odd) += class_size(mu);
                }
                if (count_no_short_cycles(n, t, Parity::even) != even || count_no_short_cycles(n, t, Parity::odd) != odd) ok = false;
            }
        check("even/odd no-short-cycle counts n<=7", ok);
    }

    void spectra()
    {
        for (int n = 5; n <= 7; ++n) {
            const Spectrum s = adjacency_spectrum(n, 1);
            check("t=1 adjacency bound n=" + std::to_string(n), delsarte_bound(s, factorial(n)) == Rational(factorial(n - 1)));
            check("trace identity adjacency n=" + std::to_string(n), trace_identity_check(adjacency_weight(n, 1), s));
        }
        const WeightReport r = solve_weights(7, 2);
        check("weights (7,2) conditions", r.conditions.support_on_t_derangements && r.conditions.trivial_eigenvalue_is_one &&
                                              r.conditions.critical_eigenvalues_equal_nu && r.conditions.tall_eigenvalues_zero &&
                                              r.xi_conditions_hold.value_or(false) && r.trace_identity_holds);
        check("weights (7,2) bound", r.bound && *r.bound == Rational(factorial(2) * factorial(5)));
        check("span rank (4,1) = 10", coset_span_rank(4, 1) == 10);
        check("span rank (5,2) = 42", coset_span_rank(5, 2) == 42);
    }

    void extremal()
    {
        check("max family (4,2) = 4", max_family(4, 2).max_size == 4);
        check("max family (5,2) = 12", max_family(5, 2).max_size == 12);

        bool ok = true;
        for (auto [n, t] : {std::pair{5, 1}, std::pair{6, 2}}) {
            for (std::uint32_t xm : subsets_of_size(n, t)) {
                const auto a = mask_elements(xm);
                for (std::uint32_t ym : subsets_of_size(n, t)) {
                    auto b = mask_elements(ym);
                    if (xm == ym && xm == (1u << t) - 1) continue;
                    const bool outside = a.front() > t && b.front() > t;
                    if (outside && n == 2 * t) continue;
                    do {
                        const TCoset c{a, b};
                        try {
                            if (!witness_is_valid(conflict_witness(c, n, t), identity_tcoset(t), c, t)) ok = false;
                        } catch (const Error&) {
                            ok = false;
                        }
                    } while (std::next_permutation(b.begin(), b.end()));
                }
            }
        }
        check("conflict witnesses (5,1), (6,2)", ok);

        std::vector<Permutation> sharp;
        for (const auto& base : {std::vector<int>{1, 2, 3, 4, 5}, std::vector<int>{1, 3, 5, 2, 4}})
            for (int s = 0; s < 5; ++s) {
                std::vector<int> v(5);
                for (int i = 0; i < 5; ++i) v[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>((i + s) % 5)];
                sharp.emplace_back(v);
            }
        const Family f(5, sharp);
        check("sharply 2-set-transitive set in S_5", verify_sharply_set_transitive(f, 2) && averaging_bound(f, 2) == 12);

        const auto perms = all_permutations(6);
        std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
        bool inv = true;
        for (int trial = 0; trial < 300; ++trial) {
            const auto& p = perms[pick(rng_)];
            const auto& q = perms[pick(rng_)];
            const auto& r = perms[pick(rng_)];
            const bool base = setwise_agree(p, q, 2);
            if (base != setwise_agree(q, p, 2) || base != setwise_agree(r * p, r * q, 2)) inv = false;
        }
        check("agreement symmetric and left-invariant (sampled S_6)", inv);
    }

    std::ostream& log_;
    std::mt19937_64 rng_;
    bool inject_fault_;
    int checks_ = 0;
    int failures_ = 0;
};

} // namespace setwise::tool
