#pragma once

#include "resl/lattice.hpp"
#include "resl/state.hpp"

#include "json.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace resl {

using json = nlohmann::json;

/// An element token: a label of A, or failing that a decimal index.
[[nodiscard]] inline Element parse_element(const FiniteResiduatedLattice& A, std::string_view token)
{
    if (auto e = A.find_label(token))
        return *e;
    Element v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty() || v >= A.size())
        throw Error(ErrorKind::parse_error, "unknown element '" + std::string(token) + "'");
    return v;
}

[[nodiscard]] inline std::vector<std::string> split_list(std::string_view text, char sep = ',')
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

namespace detail {

    // Table entries may be indices or label strings; labels are resolved
    // once the label list is known.
    inline Matrix read_matrix(const json& j, const char* name, std::size_t n, const std::vector<std::string>& labels)
    {
        if (!j.is_array() || j.size() != n)
            throw Error(ErrorKind::parse_error, std::string(name) + " must be an array of " + std::to_string(n) + " rows");
        Matrix m(n, std::vector<Element>(n));
        for (std::size_t i = 0; i < n; ++i) {
            const auto& row = j[i];
            if (!row.is_array() || row.size() != n)
                throw Error(ErrorKind::parse_error, std::string(name) + " row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
            for (std::size_t k = 0; k < n; ++k) {
                const auto& v = row[k];
                if (v.is_number_unsigned()) {
                    m[i][k] = v.get<Element>();
                } else if (v.is_boolean() && std::string_view(name) == "leq") {
                    m[i][k] = v.get<bool>() ? 1 : 0;
                } else if (v.is_string()) {
                    const auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
                    if (it == labels.end())
                        throw Error(ErrorKind::parse_error, std::string(name) + ": unknown label '" + v.get<std::string>() + "'");
                    m[i][k] = static_cast<Element>(it - labels.begin());
                } else {
                    throw Error(ErrorKind::parse_error, std::string(name) + ": entries must be indices or labels");
                }
            }
        }
        return m;
    }

    inline Element read_index(const json& j, const char* name, const std::vector<std::string>& labels)
    {
        if (j.is_number_unsigned())
            return j.get<Element>();
        if (j.is_string()) {
            const auto it = std::find(labels.begin(), labels.end(), j.get<std::string>());
            if (it != labels.end())
                return static_cast<Element>(it - labels.begin());
        }
        throw Error(ErrorKind::parse_error, std::string(name) + " must be an index or a label");
    }

} // namespace detail

/// Raw tables from a JSON object with keys n, bot, top, times and either leq
/// or join+meet; imp and labels are optional.
[[nodiscard]] inline RawTables raw_from_json(const json& j)
{
    if (!j.is_object())
        throw Error(ErrorKind::parse_error, "algebra must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_unsigned())
        throw Error(ErrorKind::parse_error, "missing carrier size 'n'");
    RawTables raw;
    raw.n = j["n"].get<std::size_t>();
    if (j.contains("labels")) {
        if (!j["labels"].is_array())
            throw Error(ErrorKind::parse_error, "labels must be an array");
        for (const auto& l : j["labels"]) {
            if (!l.is_string())
                throw Error(ErrorKind::parse_error, "labels must be strings");
            raw.labels.push_back(l.get<std::string>());
        }
    }
    for (const char* key : {"bot", "top", "times"})
        if (!j.contains(key))
            throw Error(ErrorKind::parse_error, std::string("missing '") + key + "'");
    raw.bot = detail::read_index(j["bot"], "bot", raw.labels);
    raw.top = detail::read_index(j["top"], "top", raw.labels);
    raw.times = detail::read_matrix(j["times"], "times", raw.n, raw.labels);
    for (const char* key : {"leq", "join", "meet", "imp"}) {
        if (!j.contains(key))
            continue;
        auto m = detail::read_matrix(j[key], key, raw.n, raw.labels);
        const std::string_view k(key);
        (k == "leq" ? raw.leq : k == "join" ? raw.join : k == "meet" ? raw.meet : raw.imp) = std::move(m);
    }
    return raw;
}

[[nodiscard]] inline json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::parse_error, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::parse_error, path.string() + ": " + e.what());
    }
}

/// Parse errors raise ParseError; bad tables raise the validation error kinds.
[[nodiscard]] inline AlgebraPtr load_algebra(const std::filesystem::path& path)
{
    return make_algebra(raw_from_json(read_json_file(path)));
}

[[nodiscard]] inline json algebra_to_json(const FiniteResiduatedLattice& A)
{
    const std::size_t n = A.size();
    json leq = json::array(), times = json::array(), imp = json::array();
    for (Element a = 0; a < n; ++a) {
        json l = json::array(), t = json::array(), i = json::array();
        for (Element b = 0; b < n; ++b) {
            l.push_back(A.leq(a, b) ? 1 : 0);
            t.push_back(A.times(a, b));
            i.push_back(A.imp(a, b));
        }
        leq.push_back(std::move(l));
        times.push_back(std::move(t));
        imp.push_back(std::move(i));
    }
    json j;
    j["n"] = n;
    j["bot"] = A.bot();
    j["top"] = A.top();
    j["labels"] = A.labels();
    j["leq"] = std::move(leq);
    j["times"] = std::move(times);
    j["imp"] = std::move(imp);
    return j;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::parse_error, "cannot write " + path.string());
    out << text;
}

/// Comma-separated values of a map A -> L, as labels of L or indices.
[[nodiscard]] inline std::vector<Element> parse_table(const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& L, std::string_view text)
{
    const auto tokens = split_list(text);
    if (tokens.size() != A.size())
        throw Error(ErrorKind::parse_error, "state needs " + std::to_string(A.size()) + " values, got " + std::to_string(tokens.size()));
    std::vector<Element> t;
    for (const auto& tok : tokens)
        t.push_back(parse_element(L, tok));
    return t;
}

[[nodiscard]] inline std::string table_text(const FiniteResiduatedLattice& L, std::span<const Element> t)
{
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i)
        out += (i ? "," : "") + L.label(t[i]);
    return out;
}

} // namespace resl
