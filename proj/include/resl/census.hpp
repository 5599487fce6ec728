#pragma once

#include "resl/io.hpp"
#include "resl/riecan.hpp"

namespace resl {

struct CensusRow {
    std::string id; // s1, s2, ... in lexicographic order of the table
    StateMap state;
    StateClassification cls; // riecan flag filled
};

[[nodiscard]] inline std::vector<CensusRow> census(
    const AlgebraPtr& A, const AlgebraPtr& L, StateClass cls, const EnumerationOptions& opt = {})
{
    std::vector<CensusRow> rows;
    for (auto& s : enumerate_class(A, L, cls, opt)) {
        auto c = classify_state_with_riecan(s);
        rows.push_back({"s" + std::to_string(rows.size() + 1), std::move(s), std::move(c)});
    }
    return rows;
}

inline constexpr std::array<const char*, 7> census_flag_names{
    "type1", "type2", "type3", "order_preserving", "state_morphism", "faithful", "riecan"};

[[nodiscard]] inline std::array<bool, 7> census_flags(const StateClassification& c)
{
    return {c.type_i, c.type_ii, c.type_iii, c.order_preserving, c.state_morphism, c.faithful, c.riecan.value_or(false)};
}

/// Columns: id, one per domain element (named by its label), then the flags.
[[nodiscard]] inline std::string census_csv(const FiniteResiduatedLattice& A, const std::vector<CensusRow>& rows)
{
    std::string out = "id";
    for (Element a = 0; a < A.size(); ++a)
        out += "," + A.label(a);
    for (const char* f : census_flag_names)
        out += std::string(",") + f;
    out += "\n";
    for (const auto& r : rows) {
        out += r.id;
        for (Element v : r.state.table)
            out += "," + r.state.cod->label(v);
        for (bool b : census_flags(r.cls))
            out += b ? ",1" : ",0";
        out += "\n";
    }
    return out;
}

[[nodiscard]] inline json census_json(const FiniteResiduatedLattice& A, const std::vector<CensusRow>& rows)
{
    json arr = json::array();
    for (const auto& r : rows) {
        json values;
        for (Element a = 0; a < A.size(); ++a)
            values[A.label(a)] = r.state.cod->label(r.state(a));
        json row{{"id", r.id}, {"values", values}};
        const auto f = census_flags(r.cls);
        for (std::size_t i = 0; i < f.size(); ++i)
            row[census_flag_names[i]] = f[i];
        arr.push_back(std::move(row));
    }
    return json{{"rows", arr}};
}

[[nodiscard]] inline std::string census_text(const FiniteResiduatedLattice& A, const std::vector<CensusRow>& rows)
{
    std::string out;
    for (const auto& r : rows) {
        out += r.id + ":";
        for (Element a = 0; a < A.size(); ++a)
            out += " " + A.label(a) + "->" + r.state.cod->label(r.state(a));
        out += "  [";
        bool first = true;
        const auto f = census_flags(r.cls);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i]) {
                out += (first ? "" : " ") + std::string(census_flag_names[i]);
                first = false;
            }
        out += "]\n";
    }
    out += std::to_string(rows.size()) + " rows\n";
    return out;
}

namespace detail {

    inline AlgebraPtr algebra_ref(const json& j, const std::filesystem::path& base)
    {
        if (j.is_string()) {
            const std::filesystem::path p = j.get<std::string>();
            return load_algebra(p.is_absolute() ? p : base / p);
        }
        return make_algebra(raw_from_json(j));
    }

    inline bool same_carrier_tables(const FiniteResiduatedLattice& X, const FiniteResiduatedLattice& Y)
    {
        if (X.size() != Y.size() || X.bot() != Y.bot() || X.top() != Y.top())
            return false;
        for (Element a = 0; a < X.size(); ++a)
            for (Element b = 0; b < X.size(); ++b)
                if (X.leq(a, b) != Y.leq(a, b) || X.times(a, b) != Y.times(a, b))
                    return false;
        return true;
    }

} // namespace detail

/// State file: {"dom": algebra, "cod": algebra, "table": [...]}. Each algebra
/// is a path (relative to the state file) or an inline algebra object; table
/// entries are indices or labels of cod.
[[nodiscard]] inline StateMap load_state_file(const std::filesystem::path& path)
{
    const auto j = read_json_file(path);
    for (const char* key : {"dom", "cod", "table"})
        if (!j.is_object() || !j.contains(key))
            throw Error(ErrorKind::parse_error, path.string() + ": missing '" + key + "'");
    const auto base = path.parent_path();
    auto A = detail::algebra_ref(j["dom"], base);
    auto L = detail::algebra_ref(j["cod"], base);
    if (!j["table"].is_array() || j["table"].size() != A->size())
        throw Error(ErrorKind::parse_error, path.string() + ": table needs one entry per domain element");
    std::vector<Element> t;
    for (const auto& v : j["table"]) {
        if (v.is_number_unsigned())
            t.push_back(v.get<Element>());
        else if (v.is_string())
            t.push_back(parse_element(*L, v.get<std::string>()));
        else
            throw Error(ErrorKind::parse_error, path.string() + ": table entries must be indices or labels");
        if (t.back() >= L->size())
            throw Error(ErrorKind::parse_error, path.string() + ": table entry out of range");
    }
    return make_state(std::move(A), std::move(L), std::move(t));
}

/// Inline form of a state file.
[[nodiscard]] inline json state_to_json(const StateMap& s)
{
    return json{{"dom", algebra_to_json(*s.dom)}, {"cod", algebra_to_json(*s.cod)}, {"table", s.table}};
}

/// A state given as a value list ("0,1,1,0,0,1"), a type I census row
/// ("s6"), a row of another class ("riecan:7") or a state file ("s.json")
/// whose algebras must match A and L.
[[nodiscard]] inline StateMap select_state(
    const AlgebraPtr& A, const AlgebraPtr& L, std::string_view spec, const EnumerationOptions& opt = {})
{
    auto row_of = [&](StateClass cls, std::string_view num) {
        std::size_t k = 0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
        if (ec != std::errc{} || ptr != num.data() + num.size() || k == 0)
            throw Error(ErrorKind::parse_error, "bad census row '" + std::string(spec) + "'");
        auto rows = enumerate_class(A, L, cls, opt);
        if (k > rows.size())
            throw Error(ErrorKind::parse_error,
                "census row " + std::to_string(k) + " out of range (" + std::to_string(rows.size()) + " rows)");
        return rows[k - 1];
    };
    if (spec.ends_with(".json")) {
        const auto s = load_state_file(std::string(spec));
        if (!detail::same_carrier_tables(*s.dom, *A) || !detail::same_carrier_tables(*s.cod, *L))
            throw Error(ErrorKind::precondition_not_met, "state file algebras differ from the given domain and codomain");
        return make_state(A, L, s.table);
    }
    if (const auto colon = spec.find(':'); colon != std::string_view::npos) {
        const auto cls = parse_state_class(spec.substr(0, colon));
        if (!cls)
            throw Error(ErrorKind::parse_error, "unknown state class '" + std::string(spec.substr(0, colon)) + "'");
        return row_of(*cls, spec.substr(colon + 1));
    }
    if (spec.size() > 1 && spec[0] == 's' && spec.find(',') == std::string_view::npos)
        return row_of(StateClass::type_i, spec.substr(1));
    return make_state(A, L, parse_table(*A, *L, spec));
}

} // namespace resl
