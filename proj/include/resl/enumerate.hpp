#pragma once

#include "resl/parallel.hpp"
#include "resl/state.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace resl {

struct EnumerationOptions {
    std::uint64_t budget = 100'000'000; // raw candidate maps
    unsigned jobs = 1;
};

/// A check over a partially assigned table, run once every element in
/// `elems` has a value.
struct PartialConstraint {
    std::vector<Element> elems;
    std::function<bool(const Element*)> ok;
};

/// |L|^free, saturating.
[[nodiscard]] inline std::uint64_t candidate_count(std::size_t m, std::size_t free)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / std::max<std::size_t>(m, 1))
            return std::numeric_limits<std::uint64_t>::max();
        total *= m;
    }
    return total;
}

/// Depth-first search over maps A -> L with some values pinned. Free
/// elements are assigned along a linear extension of the order so that
/// constraints over comparable pairs fire early. Every map that survives
/// all constraints and `accept` is returned, sorted lexicographically.
[[nodiscard]] inline std::vector<std::vector<Element>> search_maps(const FiniteResiduatedLattice& A,
    const FiniteResiduatedLattice& L, const std::vector<std::optional<Element>>& pinned,
    const std::vector<PartialConstraint>& constraints, const std::function<bool(const std::vector<Element>&)>& accept,
    const EnumerationOptions& opt)
{
    const std::size_t n = A.size();
    const std::size_t m = L.size();
    std::vector<Element> order;
    for (Element a = 0; a < n; ++a)
        if (!pinned[a])
            order.push_back(a);
    auto below = [&](Element a) {
        std::size_t k = 0;
        for (Element b = 0; b < n; ++b)
            k += A.leq(b, a) ? 1 : 0;
        return k;
    };
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) { return below(x) < below(y); });

    if (candidate_count(m, order.size()) > opt.budget)
        throw Error(ErrorKind::budget_exceeded,
            "candidate space " + std::to_string(m) + "^" + std::to_string(order.size()) + " exceeds budget "
                + std::to_string(opt.budget));

    // Depth at which an element becomes known: 0 for pinned, i+1 for order[i].
    std::vector<std::size_t> depth(n, 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        depth[order[i]] = i + 1;
    std::vector<std::vector<const PartialConstraint*>> bucket(order.size() + 1);
    for (const auto& c : constraints) {
        std::size_t d = 0;
        for (Element e : c.elems)
            d = std::max(d, depth[e]);
        bucket[d].push_back(&c);
    }

    std::vector<Element> base(n, 0);
    for (Element a = 0; a < n; ++a)
        if (pinned[a])
            base[a] = *pinned[a];
    for (const auto* c : bucket[0])
        if (!c->ok(base.data()))
            return {};

    auto run = [&](std::vector<Element> t, std::size_t start, std::vector<std::vector<Element>>& out) {
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == order.size()) {
                if (accept(t))
                    out.push_back(t);
                return;
            }
            for (Element v = 0; v < m; ++v) {
                t[order[i]] = v;
                bool ok = true;
                for (const auto* c : bucket[i + 1])
                    if (!c->ok(t.data())) {
                        ok = false;
                        break;
                    }
                if (ok)
                    rec(i + 1);
            }
        };
        rec(start);
    };

    std::vector<std::vector<Element>> out;
    if (order.empty()) {
        if (accept(base))
            out.push_back(base);
        return out;
    }
    // Partition on the first free element's value.
    std::vector<std::vector<std::vector<Element>>> parts(m);
    parallel_for(m, opt.jobs, [&](std::size_t v) {
        std::vector<Element> t = base;
        t[order[0]] = static_cast<Element>(v);
        for (const auto* c : bucket[1])
            if (!c->ok(t.data()))
                return;
        run(std::move(t), 1, parts[v]);
    });
    for (auto& p : parts)
        for (auto& t : p)
            out.push_back(std::move(t));
    std::sort(out.begin(), out.end());
    return out;
}

/// Constraints that every state of class `cls` must satisfy on partial tables.
[[nodiscard]] inline std::vector<PartialConstraint> state_constraints(
    const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& L, StateClass cls)
{
    std::vector<PartialConstraint> out;
    const std::size_t n = A.size();
    const bool need_i = cls == StateClass::type_i || cls == StateClass::type_iii
        || cls == StateClass::order_preserving_type_i || cls == StateClass::state_morphism;
    const bool need_ii = cls == StateClass::type_ii || cls == StateClass::type_iii;
    const bool need_order = cls == StateClass::order_preserving_type_i || cls == StateClass::state_morphism;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = A.imp(a, b);
            if (A.leq(b, a) && need_i)
                out.push_back({{a, b, ab}, [&L, a, b, ab](const Element* t) { return t[ab] == L.imp(t[a], t[b]); }});
            if (A.leq(b, a) && need_ii)
                out.push_back({{a, b, ab}, [&L, a, b, ab](const Element* t) { return t[a] == L.imp(t[ab], t[b]); }});
            if (A.leq(a, b) && need_order)
                out.push_back({{a, b}, [&L, a, b](const Element* t) { return L.leq(t[a], t[b]); }});
            if (cls == StateClass::state_morphism) {
                const Element j = A.join(a, b), mt = A.meet(a, b);
                out.push_back({{a, b, j}, [&L, a, b, j](const Element* t) { return t[j] == L.join(t[a], t[b]); }});
                out.push_back({{a, b, mt}, [&L, a, b, mt](const Element* t) { return t[mt] == L.meet(t[a], t[b]); }});
                out.push_back({{a, b, ab}, [&L, a, b, ab](const Element* t) { return t[ab] == L.imp(t[a], t[b]); }});
            }
        }
    return out;
}

/// All maps with s(0)=0, s(1)=1 in the requested class, in lexicographic
/// table order. Riecan states have their own enumerator.
[[nodiscard]] inline std::vector<StateMap> enumerate_states(
    const AlgebraPtr& A, const AlgebraPtr& L, StateClass cls, const EnumerationOptions& opt = {})
{
    if (cls == StateClass::riecan)
        throw Error(ErrorKind::precondition_not_met, "use enumerate_riecan for the riecan class");
    std::vector<std::optional<Element>> pinned(A->size());
    pinned[A->bot()] = L->bot();
    pinned[A->top()] = L->top();
    const auto constraints = state_constraints(*A, *L, cls);
    const FiniteResiduatedLattice& dom = *A;
    const FiniteResiduatedLattice& cod = *L;
    auto tables = search_maps(dom, cod, pinned, constraints,
        [&](const std::vector<Element>& t) {
            return in_class(classify_map(dom, cod, std::span<const Element>(t)), cls);
        },
        opt);
    std::vector<StateMap> out;
    out.reserve(tables.size());
    for (auto& t : tables)
        out.push_back(StateMap{A, L, std::move(t)});
    return out;
}

} // namespace resl
