#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selfcheck.hpp"
#include "setwise/setwise.hpp"

namespace setwise::tool {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kResourceError = 3 };

enum class Format { text, json, csv };

struct RunConfig {
    std::string command;
    int n = 0;
    int t = 0;
    Format format = Format::text;
    std::string output;
    bool extended = false;
    std::uint64_t seed = 1;
};

namespace detail {

inline void require_nt(const RunConfig& cfg)
{
    if (cfg.n < 1) throw InputError("--n must be positive, got " + std::to_string(cfg.n));
    if (cfg.t < 1 || cfg.t >= cfg.n) throw InputError("--t must satisfy 1 <= t < n, got t=" + std::to_string(cfg.t) + " with n=" + std::to_string(cfg.n));
}

inline int table_ceiling(const RunConfig& cfg) { return cfg.extended ? kExtendedTableCeiling : kTableCeiling; }

inline void write_json(std::ostream& out, const io::Json& j) { out << j.dump(2) << '\n'; }

inline std::string rational_text(const Rational& q) { return to_string(q) + " (" + to_decimal(q) + ")"; }

inline void print_grid(std::ostream& out, const std::vector<Partition>& labels, const std::vector<std::vector<Integer>>& values)
{
    std::size_t width = 1;
    for (const auto& row : values)
        for (const auto& v : row) width = std::max(width, v.str().size());
    std::size_t label_width = 1;
    for (const auto& p : labels) label_width = std::max(label_width, p.str().size());
    for (std::size_t r = 0; r < labels.size(); ++r) {
        out << std::setw(static_cast<int>(label_width)) << std::left << labels[r].str() << std::right;
        for (const auto& v : values[r]) out << ' ' << std::setw(static_cast<int>(width)) << v.str();
        out << '\n';
    }
}

inline void print_spectrum_text(std::ostream& out, const Spectrum& s)
{
    out << "partition\tdimension\teigenvalue\tmultiplicity\n";
    for (const auto& e : s.entries)
        out << e.alpha.str() << '\t' << e.dimension << '\t' << rational_text(e.eigenvalue) << '\t' << e.multiplicity << '\n';
}

inline Spectrum spectrum_for(const RunConfig& cfg, const std::string& matrix, std::optional<WeightReport>& report)
{
    if (matrix == "adjacency") return adjacency_spectrum(cfg.n, cfg.t, table_ceiling(cfg));
    if (matrix == "weighted") {
        report = solve_weights(cfg.n, cfg.t, table_ceiling(cfg));
        return report->spectrum;
    }
    throw InputError("--matrix must be adjacency or weighted, got '" + matrix + "'");
}

inline Integer brute_no_short_cycles(int n, int t, Parity parity)
{
    if (n > 10) throw ResourceError("--check-brute enumerates S_n and is limited to n <= 10");
    Integer count = 0;
    for (const auto& p : all_permutations(n)) {
        const Partition mu = cycle_type(p);
        if (n > 0 && mu.parts().back() <= t) continue;
        if (has_parity(mu, parity)) ++count;
    }
    return count;
}

inline Parity parse_parity(const std::string& s)
{
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    if (s == "all") return Parity::all;
    throw InputError("--parity must be even, odd or all, got '" + s + "'");
}

} // namespace detail

/// Parses and executes one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact spectral and search tools for t-set-intersecting families of permutations", "setwise"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand
    RunConfig cfg;
    std::string format = "text";
    app.add_option("--format", format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", cfg.output, "Write output to this file instead of stdout");
    app.add_option("--seed", cfg.seed, "Seed for sampled checks");
    app.add_flag("--extended", cfg.extended, "Unlock extended ceilings (n = 7 search, n = 10 spectra)");

    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Degree n")->required(); };
    auto add_t = [&](CLI::App* sub) { sub->add_option("--t", cfg.t, "Set size t")->required(); };

    std::string flavor = "irr", parity = "all", matrix = "adjacency", coset_text, from_text, file;
    int k = 0;
    bool check_brute = false, enumerate = false, perm_minor = false, inject_fault = false;

    auto* chars = app.add_subcommand("chars", "Character table of S_n");
    add_n(chars);
    chars->add_option("--flavor", flavor, "perm or irr")->check(CLI::IsMember({"perm", "irr"}));

    auto* kost = app.add_subcommand("kostka", "Kostka minor over partitions with first part >= n-k");
    add_n(kost);
    kost->add_option("--k", k, "Minor depth k")->required();
    kost->add_flag("--perm", perm_minor, "Print the permutation-character minor instead");

    auto* dims = app.add_subcommand("dims", "Dimensions and fat/tall/medium/critical classification");
    add_n(dims);
    add_t(dims);

    auto* der = app.add_subcommand("derange", "Permutations with no cycle of length <= t");
    add_n(der);
    add_t(der);
    der->add_option("--parity", parity, "even, odd or all");
    der->add_flag("--check-brute", check_brute, "Compare against enumeration of S_n");

    auto* wts = app.add_subcommand("weights", "Weight construction and its condition report");
    add_n(wts);
    add_t(wts);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of the adjacency or weighted matrix");
    add_n(spectrum_cmd);
    add_t(spectrum_cmd);
    spectrum_cmd->add_option("--matrix", matrix, "adjacency or weighted");

    auto* bnd = app.add_subcommand("bound", "Delsarte bound for the adjacency or weighted matrix");
    add_n(bnd);
    add_t(bnd);
    bnd->add_option("--matrix", matrix, "adjacency or weighted")->required();

    auto* span = app.add_subcommand("spanrank", "Rank of the t-coset indicator span");
    add_n(span);
    add_t(span);

    auto* srch = app.add_subcommand("search", "Maximum t-set-intersecting family by exhaustive search");
    add_n(srch);
    add_t(srch);
    srch->add_flag("--enumerate-extremal", enumerate, "List and classify every maximum family (n <= 5)");

    auto* wit = app.add_subcommand("witness", "Disagreeing pair from two incompatible t-cosets");
    add_n(wit);
    add_t(wit);
    wit->add_option("--coset", coset_text, "Second coset as A1,..,At:B1,..,Bt")->required();
    wit->add_option("--from", from_text, "First coset (default 1,..,t:1,..,t)");

    auto* sharp = app.add_subcommand("verify-sharp", "Check sharp t-set-transitivity of a family");
    add_t(sharp);
    sharp->add_option("--file", file, "Family file: one permutation per line, or JSON")->required();

    auto* self = app.add_subcommand("selfcheck", "Run the invariant suite at desk scale");
    self->add_flag("--inject-fault", inject_fault, "Perturb one character value (the suite must then fail)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    cfg.command = app.get_subcommands().front()->get_name();

    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file_out.open(cfg.output);
        if (!file_out) {
            err << "error: cannot open output file '" << cfg.output << "'\n";
            return kInputError;
        }
        sink = &file_out;
    }
    std::ostream& o = *sink;
    const auto csv_unsupported = [&] {
        if (cfg.format == Format::csv) throw InputError("--format csv is not available for " + cfg.command);
    };

    try {
        const std::string& c = cfg.command;
        if (c == "chars") {
            if (cfg.n < 1) throw InputError("--n must be positive, got " + std::to_string(cfg.n));
            const CharacterTable table = character_table(cfg.n, flavor == "perm" ? Flavor::permutation : Flavor::irreducible, detail::table_ceiling(cfg));
            if (cfg.format == Format::json) detail::write_json(o, io::character_table(table));
            else if (cfg.format == Format::csv) o << io::character_table_csv(table);
            else detail::print_grid(o, table.order, table.values);
        } else if (c == "kostka") {
            if (cfg.n < 1 || k < 0) throw InputError("kostka needs n >= 1 and k >= 0");
            const KostkaMinor m = perm_minor ? perm_char_minor(cfg.n, k) : kostka_minor(cfg.n, k);
            if (cfg.format == Format::json) detail::write_json(o, io::minor(m));
            else if (cfg.format == Format::csv) {
                CharacterTable as_table{cfg.n, Flavor::permutation, m.index, m.values};
                o << io::character_table_csv(as_table);
            } else detail::print_grid(o, m.index, m.values);
        } else if (c == "dims") {
            detail::require_nt(cfg);
            struct Row {
                Partition p;
                Integer dim;
                PartitionClass cls;
            };
            std::vector<Row> rows;
            for (const auto& p : partitions_of(cfg.n)) rows.push_back({p, hook_dimension(p), classify(p, cfg.t)});
            if (cfg.format == Format::json) {
                io::Json a = io::Json::array();
                for (const auto& r : rows) {
                    io::Json j;
                    j["partition"] = io::partition(r.p);
                    j["dimension"] = io::integer(r.dim);
                    j["kind"] = to_string(r.cls.kind);
                    j["fat"] = r.cls.is_fat;
                    j["tall"] = r.cls.is_tall;
                    a.push_back(j);
                }
                detail::write_json(o, a);
            } else {
                const char sep = cfg.format == Format::csv ? ',' : '\t';
                o << "partition" << sep << "dimension" << sep << "kind\n";
                for (const auto& r : rows) o << (cfg.format == Format::csv ? "\"" + r.p.str() + "\"" : r.p.str()) << sep << r.dim << sep << to_string(r.cls.kind) << '\n';
            }
        } else if (c == "derange") {
            detail::require_nt(cfg);
            const Parity par = detail::parse_parity(parity);
            const Integer value = count_no_short_cycles(cfg.n, cfg.t, par);
            std::optional<Integer> brute;
            if (check_brute) brute = detail::brute_no_short_cycles(cfg.n, cfg.t, par);
            if (cfg.format == Format::json) {
                io::Json j;
                j["n"] = cfg.n;
                j["t"] = cfg.t;
                j["parity"] = parity;
                j["count"] = io::integer(value);
                if (brute) j["brute_force"] = io::integer(*brute);
                detail::write_json(o, j);
            } else if (cfg.format == Format::csv) {
                o << "n,t,parity,count" << (brute ? ",brute_force" : "") << '\n'
                  << cfg.n << ',' << cfg.t << ',' << parity << ',' << value;
                if (brute) o << ',' << *brute;
                o << '\n';
            } else {
                o << value << '\n';
                if (brute) o << "brute force: " << *brute << (*brute == value ? " (match)" : " (MISMATCH)") << '\n';
            }
            if (brute && *brute != value) return kVerificationFailed;
        } else if (c == "weights") {
            detail::require_nt(cfg);
            const WeightReport r = solve_weights(cfg.n, cfg.t, detail::table_ceiling(cfg));
            if (cfg.format == Format::csv) o << io::spectrum_csv(r.spectrum);
            else detail::write_json(o, io::weight_report(r));
            const bool ok = r.conditions.support_on_t_derangements && r.conditions.trivial_eigenvalue_is_one &&
                            r.conditions.critical_eigenvalues_equal_nu && r.conditions.tall_eigenvalues_zero && r.trace_identity_holds &&
                            r.xi_conditions_hold.value_or(false);
            for (const auto& w : r.warnings) err << "warning: " << w << '\n';
            if (!ok) return kVerificationFailed;
        } else if (c == "spectrum") {
            detail::require_nt(cfg);
            std::optional<WeightReport> report;
            const Spectrum s = detail::spectrum_for(cfg, matrix, report);
            if (cfg.format == Format::json) detail::write_json(o, io::spectrum(s));
            else if (cfg.format == Format::csv) o << io::spectrum_csv(s);
            else detail::print_spectrum_text(o, s);
        } else if (c == "bound") {
            detail::require_nt(cfg);
            csv_unsupported();
            std::optional<WeightReport> report;
            const Spectrum s = detail::spectrum_for(cfg, matrix, report);
            const Rational b = delsarte_bound(s, factorial(cfg.n));
            if (cfg.format == Format::json) {
                io::Json j;
                j["n"] = cfg.n;
                j["t"] = cfg.t;
                j["matrix"] = matrix;
                io::put_rational(j, "bound", b);
                detail::write_json(o, j);
            } else {
                o << to_string(b) << '\n';
            }
        } else if (c == "spanrank") {
            detail::require_nt(cfg);
            csv_unsupported();
            const Integer rank = coset_span_rank(cfg.n, cfg.t);
            Integer expected = 0;
            for (int s = 0; s <= cfg.t && 2 * s <= cfg.n; ++s) {
                const Integer f = hook_dimension(two_row(cfg.n, s));
                expected += f * f;
            }
            if (cfg.format == Format::json) {
                io::Json j;
                j["n"] = cfg.n;
                j["t"] = cfg.t;
                j["rank"] = io::integer(rank);
                j["sum_of_squared_dimensions"] = io::integer(expected);
                detail::write_json(o, j);
            } else {
                o << rank << '\n';
            }
        } else if (c == "search") {
            detail::require_nt(cfg);
            csv_unsupported();
            const SearchResult r = max_family(cfg.n, cfg.t, cfg.extended);
            std::optional<std::vector<ExtremalFamily>> all;
            if (enumerate) all = enumerate_extremal(cfg.n, cfg.t);
            if (cfg.format == Format::json) detail::write_json(o, io::search_record(r, all));
            else {
                o << "max_size " << r.max_size << '\n' << "certificate " << r.certificate << '\n' << "witness\n";
                write_family_text(o, r.witness);
                if (all) {
                    std::size_t cosets = 0;
                    for (const auto& e : *all)
                        if (e.coset) ++cosets;
                    o << "maximum families " << all->size() << " (tset_coset " << cosets << ", other " << all->size() - cosets << ")\n";
                    for (const auto& e : *all) {
                        o << "family " << (e.coset ? "tset_coset" : "other");
                        if (e.coset) {
                            o << " x={";
                            for (std::size_t i = 0; i < e.coset->x.size(); ++i) o << (i ? "," : "") << e.coset->x[i];
                            o << "} y={";
                            for (std::size_t i = 0; i < e.coset->y.size(); ++i) o << (i ? "," : "") << e.coset->y[i];
                            o << '}';
                        }
                        o << '\n';
                        write_family_text(o, e.family);
                    }
                }
            }
        } else if (c == "witness") {
            detail::require_nt(cfg);
            csv_unsupported();
            const TCoset target = TCoset::parse(coset_text);
            const TCoset base = from_text.empty() ? identity_tcoset(cfg.t) : TCoset::parse(from_text);
            const ConflictWitness w = conflict_witness(base, target, cfg.n, cfg.t);
            const Permutation tau = w.pi * w.sigma.inverse();
            if (cfg.format == Format::json) {
                io::Json j;
                j["n"] = cfg.n;
                j["t"] = cfg.t;
                j["from"] = io::tcoset(base);
                j["coset"] = io::tcoset(target);
                j["sigma"] = io::permutation(w.sigma);
                j["pi"] = io::permutation(w.pi);
                j["pi_sigma_inverse_cycle_type"] = io::partition(cycle_type(tau));
                detail::write_json(o, j);
            } else {
                o << "sigma " << w.sigma << '\n' << "pi " << w.pi << '\n' << "pi*sigma^-1 cycle type " << cycle_type(tau).str() << '\n';
            }
        } else if (c == "verify-sharp") {
            if (cfg.t < 1) throw InputError("--t must be positive, got " + std::to_string(cfg.t));
            csv_unsupported();
            std::ifstream in(file);
            if (!in) throw InputError("cannot read family file '" + file + "'");
            const Family f = io::read_family(in);
            const bool sharp_ok = verify_sharply_set_transitive(f, cfg.t);
            if (cfg.format == Format::json) {
                io::Json j;
                j["n"] = f.n();
                j["t"] = cfg.t;
                j["size"] = f.size();
                j["sharply_set_transitive"] = sharp_ok;
                if (sharp_ok) j["averaging_bound"] = io::integer(averaging_bound(f, cfg.t));
                else j["averaging_bound"] = nullptr;
                detail::write_json(o, j);
            } else {
                o << "sharply " << cfg.t << "-set-transitive: " << (sharp_ok ? "yes" : "no") << '\n';
                if (sharp_ok) o << "averaging bound " << averaging_bound(f, cfg.t) << '\n';
            }
            if (!sharp_ok) return kVerificationFailed;
        } else if (c == "selfcheck") {
            SelfCheck suite(o, cfg.seed, inject_fault);
            if (!suite.run()) return kVerificationFailed;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kResourceError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResourceError;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kOk;
}

} // namespace setwise::tool
