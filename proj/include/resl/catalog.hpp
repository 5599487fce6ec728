#pragma once

#include "resl/classify.hpp"
#include "resl/io.hpp"
#include "resl/morphism.hpp"
#include "resl/parallel.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

namespace resl {

struct LatticeCatalogEntry {
    std::string id;                      // "<order>-<k>", k counted from 1 in canonical order
    AlgebraPtr algebra;                  // relabeled into canonical position
    std::vector<Element> canonical_form; // leq, times, imp flattened under the minimizing relabeling
    ClassificationReport classification;
};

struct CatalogOptions {
    std::size_t max_order = 6;
    std::uint64_t budget = 50'000'000; // search nodes per order
    unsigned jobs = 1;
};

namespace detail {

    // Permutations of 0..n-1 sending bot to 0 and top to n-1.
    inline std::vector<std::vector<Element>> bound_fixing_perms(std::size_t n, Element bot, Element top)
    {
        std::vector<Element> interior_src, interior_dst;
        for (Element a = 0; a < n; ++a)
            if (a != bot && a != top)
                interior_src.push_back(a);
        for (Element a = 1; a + 1 < n; ++a)
            interior_dst.push_back(a);
        std::vector<std::vector<Element>> out;
        do {
            std::vector<Element> p(n);
            p[bot] = 0;
            p[top] = static_cast<Element>(n - 1);
            for (std::size_t i = 0; i < interior_src.size(); ++i)
                p[interior_src[i]] = interior_dst[i];
            out.push_back(std::move(p));
        } while (std::next_permutation(interior_dst.begin(), interior_dst.end()));
        return out;
    }

    inline std::string letter_label(std::size_t i, std::size_t n)
    {
        if (i == 0)
            return "0";
        if (i + 1 == n)
            return "1";
        return std::string(1, static_cast<char>('a' + (i - 1)));
    }

} // namespace detail

/// Lexicographically least (leq, times, imp) image over relabelings that
/// put bot at 0 and top at n-1, with a permutation attaining it.
[[nodiscard]] inline std::pair<std::vector<Element>, std::vector<Element>> canonical_form(const FiniteResiduatedLattice& A)
{
    const std::size_t n = A.size();
    std::vector<Element> best, best_perm, cur(3 * n * n);
    for (const auto& p : detail::bound_fixing_perms(n, A.bot(), A.top())) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                const std::size_t at = p[a] * n + p[b];
                cur[at] = A.leq(a, b) ? 1 : 0;
                cur[n * n + at] = p[A.times(a, b)];
                cur[2 * n * n + at] = p[A.imp(a, b)];
            }
        if (best.empty() || cur < best) {
            best = cur;
            best_perm = p;
        }
    }
    return {best, best_perm};
}

/// Canonical relabeling, with labels 0, a, b, ..., 1 by position.
[[nodiscard]] inline AlgebraPtr canonical_algebra(const FiniteResiduatedLattice& A)
{
    const auto [form, perm] = canonical_form(A);
    auto raw = relabel(A, perm).to_raw();
    for (std::size_t i = 0; i < raw.n; ++i)
        raw.labels[i] = detail::letter_label(i, raw.n);
    return make_algebra(raw);
}

/// Bounded lattice orders on 0..n-1 with bot 0, top n-1 and i <= j only
/// when i <= j as integers, one per isomorphism class.
[[nodiscard]] inline std::vector<Matrix> bounded_lattice_orders(std::size_t n)
{
    std::vector<std::pair<Element, Element>> pairs;
    for (Element i = 1; i + 1 < n; ++i)
        for (Element j = i + 1; j + 1 < n; ++j)
            pairs.emplace_back(i, j);
    std::map<std::vector<Element>, Matrix> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Matrix leq(n, std::vector<Element>(n, 0));
        for (Element a = 0; a < n; ++a) {
            leq[a][a] = 1;
            leq[0][a] = 1;
            leq[a][n - 1] = 1;
        }
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1)
                leq[pairs[k].first][pairs[k].second] = 1;
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a)
            for (Element b = 0; b < n && ok; ++b)
                for (Element c = 0; c < n && ok; ++c)
                    ok = !(leq[a][b] && leq[b][c]) || leq[a][c];
        // Joins: the set of upper bounds must have a least element.
        for (Element a = 0; a < n && ok; ++a)
            for (Element b = a + 1; b < n && ok; ++b) {
                bool has_sup = false, has_inf = false;
                for (Element c = 0; c < n; ++c) {
                    if (leq[a][c] && leq[b][c]) {
                        bool least = true;
                        for (Element d = 0; d < n; ++d)
                            least = least && (!(leq[a][d] && leq[b][d]) || leq[c][d]);
                        has_sup = has_sup || least;
                    }
                    if (leq[c][a] && leq[c][b]) {
                        bool greatest = true;
                        for (Element d = 0; d < n; ++d)
                            greatest = greatest && (!(leq[d][a] && leq[d][b]) || leq[d][c]);
                        has_inf = has_inf || greatest;
                    }
                }
                ok = has_sup && has_inf;
            }
        if (!ok)
            continue;
        std::vector<Element> form;
        for (const auto& p : detail::bound_fixing_perms(n, 0, static_cast<Element>(n - 1))) {
            std::vector<Element> cur(n * n);
            for (Element a = 0; a < n; ++a)
                for (Element b = 0; b < n; ++b)
                    cur[p[a] * n + p[b]] = leq[a][b];
            if (form.empty() || cur < form)
                form = cur;
        }
        found.emplace(form, leq);
    }
    std::vector<Matrix> out;
    for (auto& [form, leq] : found)
        out.push_back(leq);
    return out;
}

namespace detail {

    // Depth-first search for commutative monoid tables on a fixed lattice
    // with identity top that are monotone and distribute over joins. On a
    // finite lattice the last two conditions are exactly residuation.
    class MonoidSearch {
    public:
        MonoidSearch(const Matrix& leq, std::uint64_t budget)
            : _n(leq.size())
            , _leq(leq)
            , _budget(budget)
        {
            _join.assign(_n, std::vector<Element>(_n));
            _meet.assign(_n, std::vector<Element>(_n));
            for (Element a = 0; a < _n; ++a)
                for (Element b = 0; b < _n; ++b)
                    for (Element c = 0; c < _n; ++c) {
                        if (is_sup(a, b, c))
                            _join[a][b] = c;
                        if (is_inf(a, b, c))
                            _meet[a][b] = c;
                    }
            _t.assign(_n, std::vector<int>(_n, -1));
            for (Element a = 0; a < _n; ++a) {
                set(0, a, 0);
                set(top(), a, static_cast<int>(a));
            }
            for (Element a = 1; a < top(); ++a)
                for (Element b = a; b < top(); ++b)
                    _cells.emplace_back(a, b);
        }

        std::vector<Matrix> run()
        {
            descend(0);
            return std::move(_out);
        }

        [[nodiscard]] std::uint64_t nodes() const { return _nodes; }

    private:
        [[nodiscard]] Element top() const { return static_cast<Element>(_n - 1); }

        bool is_sup(Element a, Element b, Element c) const
        {
            if (!_leq[a][c] || !_leq[b][c])
                return false;
            for (Element d = 0; d < _n; ++d)
                if (_leq[a][d] && _leq[b][d] && !_leq[c][d])
                    return false;
            return true;
        }
        bool is_inf(Element a, Element b, Element c) const
        {
            if (!_leq[c][a] || !_leq[c][b])
                return false;
            for (Element d = 0; d < _n; ++d)
                if (_leq[d][a] && _leq[d][b] && !_leq[d][c])
                    return false;
            return true;
        }
        void set(Element a, Element b, int v)
        {
            _t[a][b] = v;
            _t[b][a] = v;
        }

        // Every condition whose cells are all known.
        [[nodiscard]] bool consistent() const
        {
            const std::size_t n = _n;
            for (Element x = 0; x < n; ++x)
                for (Element y = 0; y < n; ++y) {
                    const int xy = _t[x][y];
                    if (xy < 0)
                        continue;
                    for (Element z = 0; z < n; ++z) {
                        // monotone in the first argument
                        if (_leq[x][z] && _t[z][y] >= 0 && !_leq[xy][_t[z][y]])
                            return false;
                        const int xz = _t[x][z];
                        const int xj = _t[x][_join[y][z]];
                        if (xz >= 0 && xj >= 0 && static_cast<Element>(xj) != _join[xy][xz])
                            return false;
                        const int yz = _t[y][z];
                        if (yz >= 0) {
                            const int l = _t[xy][z], r = _t[x][yz];
                            if (l >= 0 && r >= 0 && l != r)
                                return false;
                        }
                    }
                }
            return true;
        }

        void descend(std::size_t k)
        {
            if (++_nodes > _budget)
                throw Error(ErrorKind::budget_exceeded, "monoid search exceeded " + std::to_string(_budget) + " nodes");
            if (k == _cells.size()) {
                Matrix m(_n, std::vector<Element>(_n));
                for (Element a = 0; a < _n; ++a)
                    for (Element b = 0; b < _n; ++b)
                        m[a][b] = static_cast<Element>(_t[a][b]);
                _out.push_back(std::move(m));
                return;
            }
            const auto [a, b] = _cells[k];
            for (Element v = 0; v < _n; ++v) {
                if (!_leq[v][_meet[a][b]])
                    continue;
                set(a, b, static_cast<int>(v));
                if (consistent())
                    descend(k + 1);
            }
            set(a, b, -1);
        }

        std::size_t _n;
        Matrix _leq, _join, _meet;
        std::vector<std::vector<int>> _t;
        std::vector<std::pair<Element, Element>> _cells;
        std::vector<Matrix> _out;
        std::uint64_t _budget;
        std::uint64_t _nodes = 0;
    };

} // namespace detail

/// Every residuated lattice of the given order, one per isomorphism class,
/// sorted by canonical form.
[[nodiscard]] inline std::vector<LatticeCatalogEntry> enumerate_lattices(std::size_t order, const CatalogOptions& opt = {})
{
    if (order < 2 || order > opt.max_order)
        throw Error(ErrorKind::precondition_not_met,
            "order must lie in [2, " + std::to_string(opt.max_order) + "], got " + std::to_string(order));
    const auto orders = bounded_lattice_orders(order);
    std::vector<std::vector<std::pair<std::vector<Element>, AlgebraPtr>>> per_lattice(orders.size());
    std::vector<std::uint64_t> nodes(orders.size());
    parallel_for(orders.size(), opt.jobs, [&](std::size_t i) {
        detail::MonoidSearch search(orders[i], opt.budget);
        for (auto& times : search.run()) {
            RawTables raw;
            raw.n = order;
            raw.bot = 0;
            raw.top = static_cast<Element>(order - 1);
            raw.leq = orders[i];
            raw.times = std::move(times);
            AlgebraPtr A;
            try {
                A = make_algebra(raw);
            } catch (const Error& e) {
                throw Error(ErrorKind::internal_assertion, std::string("generated tables fail validation: ") + e.what(), e.witness());
            }
            auto C = canonical_algebra(*A);
            auto form = canonical_form(*C).first;
            per_lattice[i].emplace_back(std::move(form), std::move(C));
        }
        nodes[i] = search.nodes();
    });
    std::uint64_t total = 0;
    for (auto v : nodes)
        total += v;
    if (total > opt.budget)
        throw Error(ErrorKind::budget_exceeded, "catalog search exceeded " + std::to_string(opt.budget) + " nodes at order " + std::to_string(order));

    std::map<std::vector<Element>, AlgebraPtr> merged;
    for (auto& found : per_lattice)
        for (auto& [form, A] : found) {
            auto [it, fresh] = merged.emplace(form, A);
            if (!fresh && !find_isomorphism(*it->second, *A))
                throw Error(ErrorKind::internal_assertion, "equal canonical forms without an isomorphism");
        }
    std::vector<LatticeCatalogEntry> out;
    for (auto& [form, A] : merged) {
        LatticeCatalogEntry e;
        e.id = std::to_string(order) + "-" + std::to_string(out.size() + 1);
        e.algebra = A;
        e.canonical_form = form;
        e.classification = classify(*A);
        out.push_back(std::move(e));
    }
    return out;
}

/// Orders 2..max_order concatenated.
[[nodiscard]] inline std::vector<LatticeCatalogEntry> build_catalog(std::size_t max_order, const CatalogOptions& opt = {})
{
    CatalogOptions o = opt;
    o.max_order = std::max(o.max_order, max_order);
    std::vector<LatticeCatalogEntry> all;
    for (std::size_t k = 2; k <= max_order; ++k)
        for (auto& e : enumerate_lattices(k, o))
            all.push_back(std::move(e));
    return all;
}

/// Position of the entry isomorphic to A, if any.
[[nodiscard]] inline std::optional<std::size_t> find_in_catalog(const std::vector<LatticeCatalogEntry>& cat, const FiniteResiduatedLattice& A)
{
    const auto form = canonical_form(A).first;
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (cat[i].canonical_form == form)
            return i;
    return std::nullopt;
}

[[nodiscard]] inline std::filesystem::path catalog_dir(const std::filesystem::path& fallback = "catalog")
{
    if (const char* env = std::getenv("RESL_CATALOG_DIR"); env && *env)
        return env;
    return fallback;
}

[[nodiscard]] inline std::string form_text(const std::vector<Element>& form)
{
    std::string s;
    for (Element e : form)
        s += std::to_string(e);
    return s;
}

[[nodiscard]] inline json index_json(const std::vector<LatticeCatalogEntry>& cat)
{
    json entries = json::array();
    for (const auto& e : cat) {
        json flags;
        const auto f = e.classification.flags();
        for (std::size_t i = 0; i < f.size(); ++i)
            flags[ClassificationReport::names[i]] = f[i];
        entries.push_back({{"id", e.id}, {"order", e.algebra->size()}, {"file", e.id + ".json"},
            {"canonical_form", form_text(e.canonical_form)}, {"classification", flags}});
    }
    return json{{"entries", entries}};
}

/// One JSON file per entry plus index.json.
inline void save_catalog(const std::filesystem::path& dir, const std::vector<LatticeCatalogEntry>& cat)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw Error(ErrorKind::parse_error, "cannot create " + dir.string());
    for (const auto& e : cat)
        write_text_file(dir / (e.id + ".json"), algebra_to_json(*e.algebra).dump(1) + "\n");
    write_text_file(dir / "index.json", index_json(cat).dump(1) + "\n");
}

/// Reads a saved catalog back, recomputing forms and flags and checking
/// them against the index.
[[nodiscard]] inline std::vector<LatticeCatalogEntry> load_catalog(const std::filesystem::path& dir)
{
    const auto index = read_json_file(dir / "index.json");
    if (!index.contains("entries") || !index["entries"].is_array())
        throw Error(ErrorKind::parse_error, "index.json has no entries array");
    std::vector<LatticeCatalogEntry> out;
    for (const auto& item : index["entries"]) {
        if (!item.contains("id") || !item.contains("file") || !item.contains("canonical_form"))
            throw Error(ErrorKind::parse_error, "index entry lacks id, file or canonical_form");
        LatticeCatalogEntry e;
        e.id = item["id"].get<std::string>();
        e.algebra = load_algebra(dir / item["file"].get<std::string>());
        e.canonical_form = canonical_form(*e.algebra).first;
        if (form_text(e.canonical_form) != item["canonical_form"].get<std::string>())
            throw Error(ErrorKind::parse_error, "stored canonical form of " + e.id + " does not match its tables");
        e.classification = classify(*e.algebra);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace resl
