#pragma once

#include "resl/derived.hpp"
#include "resl/state_suites.hpp"

#include <optional>
#include <string>

namespace resl {

/// Subset of a carrier, stored as a membership mask.
struct FilterSet {
    AlgebraPtr alg;
    std::vector<bool> members;

    [[nodiscard]] bool contains(Element a) const { return members[a]; }
    [[nodiscard]] std::vector<Element> elements() const
    {
        std::vector<Element> out;
        for (Element a = 0; a < members.size(); ++a)
            if (members[a])
                out.push_back(a);
        return out;
    }
    bool operator==(const FilterSet& o) const { return members == o.members; }
};

/// First failed filter axiom: "top", "up" (a in F, a <= b, b not in F) or
/// "times" (a, b in F, a*b not in F).
[[nodiscard]] inline std::optional<std::pair<std::string, std::vector<Element>>> filter_violation(
    const FiniteResiduatedLattice& A, const std::vector<bool>& m)
{
    const std::size_t n = A.size();
    if (m.size() != n)
        return std::pair<std::string, std::vector<Element>>{"size", {}};
    if (!m[A.top()])
        return std::pair<std::string, std::vector<Element>>{"top", {A.top()}};
    for (Element a = 0; a < n; ++a) {
        if (!m[a])
            continue;
        for (Element b = 0; b < n; ++b) {
            if (A.leq(a, b) && !m[b])
                return std::pair<std::string, std::vector<Element>>{"up", {a, b}};
            if (m[b] && !m[A.times(a, b)])
                return std::pair<std::string, std::vector<Element>>{"times", {a, b}};
        }
    }
    return std::nullopt;
}

[[nodiscard]] inline bool is_filter(const FiniteResiduatedLattice& A, const std::vector<bool>& m)
{
    return !filter_violation(A, m).has_value();
}

[[nodiscard]] inline FilterSet make_filter(const AlgebraPtr& A, std::vector<bool> m)
{
    if (auto v = filter_violation(*A, m))
        throw Error(ErrorKind::not_a_filter, "filter axiom fails: " + v->first, v->second);
    return FilterSet{A, std::move(m)};
}

[[nodiscard]] inline FilterSet make_filter(const AlgebraPtr& A, const std::vector<Element>& elems)
{
    std::vector<bool> m(A->size(), false);
    for (Element e : elems) {
        if (e >= A->size())
            throw Error(ErrorKind::not_a_filter, "element out of range", {e});
        m[e] = true;
    }
    return make_filter(A, std::move(m));
}

/// Smallest filter containing `seed`: close under products, then upward.
[[nodiscard]] inline FilterSet filter_generated(const AlgebraPtr& A, const std::vector<Element>& seed)
{
    const auto& X = *A;
    const std::size_t n = X.size();
    std::vector<bool> m(n, false);
    m[X.top()] = true;
    for (Element e : seed)
        m[e] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                if (m[a] && m[b] && !m[X.times(a, b)]) {
                    m[X.times(a, b)] = true;
                    changed = true;
                }
    }
    // Products of up-closed sets stay above products, so one upward pass suffices.
    for (Element a = 0; a < n; ++a)
        if (m[a])
            for (Element b = 0; b < n; ++b)
                if (X.leq(a, b))
                    m[b] = true;
    return make_filter(A, std::move(m));
}

struct FilterProps {
    bool proper = false;
    bool prime = false;
    bool maximal = false;
    std::vector<Element> prime_witness;   // a, b with a v b in F but neither in F
    std::vector<Element> maximal_witness; // element whose adjunction stays proper
};

[[nodiscard]] inline FilterProps filter_props(const FilterSet& F)
{
    const auto& X = *F.alg;
    if (!is_filter(X, F.members))
        throw Error(ErrorKind::not_a_filter, "not a filter");
    const std::size_t n = X.size();
    FilterProps p;
    p.proper = !F.contains(X.bot());
    if (!p.proper)
        return p;

    p.prime = true;
    for (Element a = 0; a < n && p.prime; ++a)
        for (Element b = 0; b < n; ++b)
            if (F.contains(X.join(a, b)) && !F.contains(a) && !F.contains(b)) {
                p.prime = false;
                p.prime_witness = {a, b};
                break;
            }

    // By definition: every strictly larger filter is improper.
    bool by_scan = true;
    std::vector<Element> scan_witness;
    for (Element a = 0; a < n && by_scan; ++a) {
        if (F.contains(a))
            continue;
        auto seed = F.elements();
        seed.push_back(a);
        if (!filter_generated(F.alg, seed).contains(X.bot())) {
            by_scan = false;
            scan_witness = {a};
        }
    }
    // By powers: every a outside F has some neg(a^k) in F. Powers stabilise
    // within n steps, so k <= n suffices.
    bool by_power = true;
    for (Element a = 0; a < n && by_power; ++a) {
        if (F.contains(a))
            continue;
        bool found = false;
        for (std::size_t k = 1; k <= n && !found; ++k)
            found = F.contains(X.neg(power(X, a, k)));
        by_power = found;
    }
    if (by_scan != by_power)
        throw Error(ErrorKind::internal_assertion, "maximality criteria disagree", scan_witness);
    p.maximal = by_scan;
    p.maximal_witness = scan_witness;
    return p;
}

/// {a : s(a) = 1} for an order-preserving type I or a type II state.
[[nodiscard]] inline FilterSet kernel(const StateMap& s)
{
    const auto c = classify_state(s);
    detail::require(c.op_type_i() || c.type_ii, "kernel needs an order-preserving type I or a type II state");
    const auto& A = *s.dom;
    std::vector<bool> m(A.size());
    for (Element a = 0; a < A.size(); ++a)
        m[a] = s(a) == s.cod->top();
    if (auto v = filter_violation(A, m))
        throw Error(ErrorKind::internal_assertion, "kernel is not a filter: " + v->first, v->second);
    detail::internal(!m[A.bot()], "kernel is not proper");
    return FilterSet{s.dom, std::move(m)};
}

} // namespace resl
