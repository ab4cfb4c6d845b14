#pragma once

#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "characters.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "numeric.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "spectral.hpp"

namespace setwise::io {

using Json = nlohmann::ordered_json;

/// Integers go out as JSON numbers while they fit in 64 bits, as decimal
/// strings beyond that.
inline Json integer(const Integer& z)
{
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return Json(z.convert_to<std::int64_t>());
    return Json(z.str());
}

inline Json partition(const Partition& p)
{
    Json a = Json::array();
    for (int x : p.parts()) a.push_back(x);
    return a;
}

inline Json permutation(const Permutation& p) { return Json(p.one_line()); }

inline Json character_table(const CharacterTable& table)
{
    Json j;
    j["n"] = table.n;
    j["flavor"] = table.flavor == Flavor::permutation ? "perm" : "irr";
    Json order = Json::array();
    for (const auto& p : table.order) order.push_back(partition(p));
    j["order"] = order;
    Json rows = Json::array();
    for (const auto& r : table.values) {
        Json row = Json::array();
        for (const auto& v : r) row.push_back(integer(v));
        rows.push_back(row);
    }
    j["values"] = rows;
    return j;
}

/// Header row of class labels, then one row per character label.
inline std::string character_table_csv(const CharacterTable& table)
{
    std::ostringstream out;
    out << "character";
    for (const auto& p : table.order) out << ",\"" << p.str() << '"';
    out << '\n';
    for (std::size_t r = 0; r < table.order.size(); ++r) {
        out << '"' << table.order[r].str() << '"';
        for (const auto& v : table.values[r]) out << ',' << v;
        out << '\n';
    }
    return out.str();
}

inline Json minor(const KostkaMinor& m)
{
    Json j;
    Json index = Json::array();
    for (const auto& p : m.index) index.push_back(partition(p));
    j["index"] = index;
    Json rows = Json::array();
    for (const auto& r : m.values) {
        Json row = Json::array();
        for (const auto& v : r) row.push_back(integer(v));
        rows.push_back(row);
    }
    j["values"] = rows;
    return j;
}

inline Json spectrum(const Spectrum& s)
{
    Json a = Json::array();
    for (const auto& e : s.entries) {
        Json r;
        r["partition"] = partition(e.alpha);
        r["dimension"] = integer(e.dimension);
        r["eigenvalue_num"] = integer(numerator(e.eigenvalue));
        r["eigenvalue_den"] = integer(denominator(e.eigenvalue));
        r["multiplicity"] = integer(e.multiplicity);
        a.push_back(r);
    }
    return a;
}

inline std::string spectrum_csv(const Spectrum& s)
{
    std::ostringstream out;
    out << "partition,dimension,eigenvalue_num,eigenvalue_den,multiplicity\n";
    for (const auto& e : s.entries)
        out << '"' << e.alpha.str() << "\"," << e.dimension << ',' << numerator(e.eigenvalue) << ',' << denominator(e.eigenvalue) << ','
            << e.multiplicity << '\n';
    return out.str();
}

/// Nonzero values in decreasing lexicographic order of cycle type.
inline Json class_function(const ClassFunction& f)
{
    Json a = Json::array();
    const auto support = f.support();
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
        Json r;
        r["cycle_type"] = partition(it->first);
        r["value_num"] = integer(numerator(it->second));
        r["value_den"] = integer(denominator(it->second));
        a.push_back(r);
    }
    return a;
}

inline void put_rational(Json& j, const std::string& key, const Rational& q)
{
    j[key + "_num"] = integer(numerator(q));
    j[key + "_den"] = integer(denominator(q));
}

inline Json weight_report(const WeightReport& r)
{
    Json j;
    j["n"] = r.n;
    j["t"] = r.t;
    j["weights"] = class_function(r.w);
    j["spectrum"] = spectrum(r.spectrum);
    Json c;
    c["support_on_t_derangements"] = r.conditions.support_on_t_derangements;
    c["trivial_eigenvalue_is_one"] = r.conditions.trivial_eigenvalue_is_one;
    c["critical_eigenvalues_equal_nu"] = r.conditions.critical_eigenvalues_equal_nu;
    put_rational(c, "max_abs_fat_noncritical", r.conditions.max_abs_fat_noncritical);
    put_rational(c, "max_abs_weight_times_factorial", r.conditions.max_abs_weight_times_factorial);
    c["tall_eigenvalues_zero"] = r.conditions.tall_eigenvalues_zero;
    c["trace_identity"] = r.trace_identity_holds;
    if (r.xi_conditions_hold) c["xi_equals_eta"] = *r.xi_conditions_hold;
    j["conditions"] = c;
    if (r.bound) put_rational(j, "bound", *r.bound);
    else {
        j["bound_num"] = nullptr;
        j["bound_den"] = nullptr;
    }
    Json argmin = Json::array();
    for (const auto& p : r.lambda_min_partitions) argmin.push_back(partition(p));
    j["lambda_min_partitions"] = argmin;
    put_rational(j, "lambda_min", r.lambda_min);
    put_rational(j, "nu", r.nu);
    j["lambda_min_equals_nu"] = r.lambda_min_equals_nu;
    j["min_attained_exactly_on_critical"] = r.min_attained_exactly_on_critical;
    if (r.gap) put_rational(j, "gap", *r.gap);
    else {
        j["gap_num"] = nullptr;
        j["gap_den"] = nullptr;
    }
    Json etas = Json::array();
    for (const auto& [beta, ee] : r.eta_values) {
        Json e;
        e["partition"] = partition(beta);
        put_rational(e, "epsilon", ee.epsilon);
        put_rational(e, "eta", ee.eta);
        etas.push_back(e);
    }
    j["eta"] = etas;
    j["warnings"] = r.warnings;
    return j;
}

inline Json family(const Family& f)
{
    Json j;
    j["n"] = f.n();
    Json m = Json::array();
    for (const auto& p : f.members()) m.push_back(permutation(p));
    j["members"] = m;
    return j;
}

inline Family family_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("members") || !j["n"].is_number_integer() || !j["members"].is_array())
        throw InputError("family JSON needs integer \"n\" and array \"members\"");
    const int n = j["n"].get<int>();
    std::vector<Permutation> members;
    for (const auto& m : j["members"]) {
        if (!m.is_array()) throw InputError("family member is not an array: " + m.dump());
        std::vector<int> v;
        for (const auto& x : m) {
            if (!x.is_number_integer()) throw InputError("family member has a non-integer entry: " + m.dump());
            v.push_back(x.get<int>());
        }
        members.emplace_back(v);
    }
    return Family(n, std::move(members));
}

/// Text (one permutation per line) or JSON, decided by the first
/// non-blank character.
inline Family read_family(std::istream& in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw InputError(std::string("malformed family JSON: ") + e.what());
        }
        return family_from_json(j);
    }
    std::istringstream lines(text);
    return read_family_text(lines);
}

inline Json tset_coset(const TSetCoset& c)
{
    Json j;
    j["x"] = c.x;
    j["y"] = c.y;
    return j;
}

inline Json tcoset(const TCoset& c)
{
    Json j;
    j["a"] = c.a;
    j["b"] = c.b;
    return j;
}

inline Json search_record(const SearchResult& r, const std::optional<std::vector<ExtremalFamily>>& extremal = std::nullopt)
{
    Json j;
    j["n"] = r.n;
    j["t"] = r.t;
    j["max_size"] = integer(r.max_size);
    j["witness"] = family(r.witness);
    j["certificate"] = r.certificate;
    if (extremal) {
        std::size_t cosets = 0;
        for (const auto& e : *extremal)
            if (e.coset) ++cosets;
        Json counts;
        counts["tset_coset"] = cosets;
        counts["other"] = extremal->size() - cosets;
        j["classification_counts"] = counts;
        Json fams = Json::array();
        for (const auto& e : *extremal) {
            Json f = family(e.family);
            f["classification"] = e.coset ? "tset_coset" : "other";
            if (e.coset) f["coset"] = tset_coset(*e.coset);
            fams.push_back(f);
        }
        j["families"] = fams;
    } else {
        j["classification_counts"] = nullptr;
    }
    return j;
}

} // namespace setwise::io
