#pragma once

#include "resl/catalog.hpp"
#include "resl/enumerate.hpp"
#include "resl/io.hpp"

namespace resl {

struct ScanFinding {
    std::string problem;
    std::string domain_id;
    std::string codomain_id;
    std::vector<Element> state;
    std::string failed;
    std::vector<Element> witness;
};

struct ScanReport {
    std::string problem;
    std::size_t max_order = 0;
    std::size_t pairs = 0;  // (A, L) pairs or single algebras examined
    std::size_t states = 0; // states examined
    std::vector<ScanFinding> findings;

    /// CSV with '#' comment lines for the summary.
    [[nodiscard]] std::string csv() const
    {
        std::string out = "# problem " + problem + ", catalog orders 2.." + std::to_string(max_order) + "\n";
        out += "# examined " + std::to_string(pairs) + " cases and " + std::to_string(states) + " states; "
            + std::to_string(findings.size()) + " findings\n";
        out += "# an empty finding list is evidence, not proof\n";
        out += "problem,domain,codomain,state,failed,witness\n";
        auto list = [](const std::vector<Element>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? " " : "") + std::to_string(v[i]);
            return s;
        };
        for (const auto& f : findings)
            out += f.problem + "," + f.domain_id + "," + f.codomain_id + "," + list(f.state) + "," + f.failed + "," + list(f.witness) + "\n";
        return out;
    }
};

inline constexpr std::array<const char*, 3> scan_problems{"type2-subset-type1", "type3-join", "mv-corollary"};

namespace detail {

    inline std::vector<const LatticeCatalogEntry*> up_to_order(const std::vector<LatticeCatalogEntry>& cat, std::size_t max_order)
    {
        std::vector<const LatticeCatalogEntry*> out;
        for (const auto& e : cat)
            if (e.algebra->size() <= max_order)
                out.push_back(&e);
        return out;
    }

    // First pair where s((a->b)->b), s((b->a)->a) and s(a v b) are not all equal.
    inline std::optional<std::vector<Element>> join_question_failure(const StateMap& s)
    {
        const auto& A = *s.dom;
        for (Element a = 0; a < A.size(); ++a)
            for (Element b = 0; b < A.size(); ++b) {
                const Element x = s(A.imp(A.imp(a, b), b)), y = s(A.imp(A.imp(b, a), a)), j = s(A.join(a, b));
                if (x != y || y != j)
                    return std::vector<Element>{a, b};
            }
        return std::nullopt;
    }

    template <class PerPair>
    ScanReport scan_pairs(const std::string& problem, const std::vector<LatticeCatalogEntry>& cat, std::size_t max_order,
        unsigned jobs, PerPair&& per_pair)
    {
        const auto algs = up_to_order(cat, max_order);
        const std::size_t m = algs.size();
        std::vector<std::vector<ScanFinding>> found(m * m);
        std::vector<std::size_t> counted(m * m);
        parallel_for(m * m, jobs, [&](std::size_t i) {
            const auto& A = *algs[i / m];
            const auto& L = *algs[i % m];
            counted[i] = per_pair(A, L, found[i]);
        });
        ScanReport r{problem, max_order, m * m, 0, {}};
        for (std::size_t i = 0; i < m * m; ++i) {
            r.states += counted[i];
            for (auto& f : found[i])
                r.findings.push_back(std::move(f));
        }
        return r;
    }

} // namespace detail

/// Type II states on catalog pairs that are not type I.
[[nodiscard]] inline ScanReport scan_type_ii_subset_type_i(
    const std::vector<LatticeCatalogEntry>& cat, std::size_t max_order, const EnumerationOptions& opt = {})
{
    EnumerationOptions inner = opt;
    inner.jobs = 1;
    return detail::scan_pairs("type2-subset-type1", cat, max_order, opt.jobs,
        [&](const LatticeCatalogEntry& A, const LatticeCatalogEntry& L, std::vector<ScanFinding>& out) {
            const auto states = enumerate_states(A.algebra, L.algebra, StateClass::type_ii, inner);
            for (const auto& s : states) {
                const auto c = classify_state(s);
                if (c.type_i)
                    continue;
                detail::internal(c.type_ii, "scan finding is not type II");
                std::vector<Element> w;
                for (std::size_t k = 0; k < 4; ++k)
                    if (!c.type_i_conditions.holds[k]) {
                        w = c.type_i_conditions.witness[k];
                        break;
                    }
                out.push_back({"type2-subset-type1", A.id, L.id, s.table, "type1", w});
            }
            return states.size();
        });
}

/// Type III states with s((a->b)->b) = s((b->a)->a) = s(a v b) failing.
[[nodiscard]] inline ScanReport scan_type_iii_join_question(
    const std::vector<LatticeCatalogEntry>& cat, std::size_t max_order, const EnumerationOptions& opt = {})
{
    EnumerationOptions inner = opt;
    inner.jobs = 1;
    return detail::scan_pairs("type3-join", cat, max_order, opt.jobs,
        [&](const LatticeCatalogEntry& A, const LatticeCatalogEntry& L, std::vector<ScanFinding>& out) {
            const auto states = enumerate_states(A.algebra, L.algebra, StateClass::type_iii, inner);
            for (const auto& s : states)
                if (auto w = detail::join_question_failure(s)) {
                    const auto c = classify_state(s);
                    detail::internal(c.type_iii, "scan finding is not type III");
                    const auto& X = *s.dom;
                    const Element a = (*w)[0], b = (*w)[1];
                    const bool double_residua_agree = s(X.imp(X.imp(a, b), b)) == s(X.imp(X.imp(b, a), a));
                    out.push_back({"type3-join", A.id, L.id, s.table, double_residua_agree ? "join" : "double-residuum", *w});
                }
            return states.size();
        });
}

/// For each algebra: every order-preserving type I self-state is type II
/// exactly when the algebra is MV. A finding is an algebra where this fails.
[[nodiscard]] inline ScanReport scan_mv_corollary(
    const std::vector<LatticeCatalogEntry>& cat, std::size_t max_order, const EnumerationOptions& opt = {})
{
    const auto algs = detail::up_to_order(cat, max_order);
    std::vector<std::optional<ScanFinding>> found(algs.size());
    std::vector<std::size_t> counted(algs.size());
    EnumerationOptions inner = opt;
    inner.jobs = 1;
    parallel_for(algs.size(), opt.jobs, [&](std::size_t i) {
        const auto& e = *algs[i];
        const auto states = enumerate_states(e.algebra, e.algebra, StateClass::order_preserving_type_i, inner);
        counted[i] = states.size();
        std::optional<std::vector<Element>> not_ii;
        for (const auto& s : states)
            if (!classify_state(s).type_ii) {
                not_ii = s.table;
                break;
            }
        const bool all_ii = !not_ii.has_value();
        if (all_ii != e.classification.mv) {
            detail::internal(classify(*e.algebra).mv == e.classification.mv, "stale MV flag in catalog entry");
            found[i] = ScanFinding{"mv-corollary", e.id, e.id, not_ii.value_or(std::vector<Element>{}),
                e.classification.mv ? "mv-but-not-type2" : "type2-but-not-mv", {}};
        }
    });
    ScanReport r{"mv-corollary", max_order, algs.size(), 0, {}};
    for (std::size_t i = 0; i < algs.size(); ++i) {
        r.states += counted[i];
        if (found[i])
            r.findings.push_back(*found[i]);
    }
    return r;
}

[[nodiscard]] inline ScanReport run_scan(std::string_view problem, const std::vector<LatticeCatalogEntry>& cat,
    std::size_t max_order, const EnumerationOptions& opt = {})
{
    if (problem == "type2-subset-type1")
        return scan_type_ii_subset_type_i(cat, max_order, opt);
    if (problem == "type3-join")
        return scan_type_iii_join_question(cat, max_order, opt);
    if (problem == "mv-corollary")
        return scan_mv_corollary(cat, max_order, opt);
    throw Error(ErrorKind::parse_error, "unknown scan problem '" + std::string(problem) + "'");
}

} // namespace resl
