#pragma once

#include "resl/codomain.hpp"
#include "resl/morphism.hpp"

#include <array>
#include <optional>
#include <string>

namespace resl {

/// Total map from the carrier of `dom` to the carrier of `cod`.
struct StateMap {
    AlgebraPtr dom;
    AlgebraPtr cod;
    std::vector<Element> table;

    [[nodiscard]] Element operator()(Element a) const { return table[a]; }
    [[nodiscard]] std::span<const Element> values() const noexcept { return table; }
};

[[nodiscard]] inline StateMap make_state(AlgebraPtr dom, AlgebraPtr cod, std::vector<Element> table)
{
    if (table.size() != dom->size())
        throw Error(ErrorKind::malformed_tables, "state table must have one entry per domain element");
    for (Element e : table)
        if (e >= cod->size())
            throw Error(ErrorKind::malformed_tables, "state value out of range");
    return StateMap{std::move(dom), std::move(cod), std::move(table)};
}

template <std::size_t N>
struct ConditionSet {
    std::array<bool, N> holds{};
    std::array<std::vector<Element>, N> witness{};

    [[nodiscard]] bool all() const
    {
        for (bool h : holds)
            if (!h)
                return false;
        return true;
    }
    [[nodiscard]] bool agree() const
    {
        for (bool h : holds)
            if (h != holds[0])
                return false;
        return true;
    }
};

template <ResiduatedCodomain L, class V = typename L::value_type>
[[nodiscard]] bool endpoints_ok(const FiniteResiduatedLattice& A, const L& cod, std::span<const V> s)
{
    return s[A.bot()] == cod.bot() && s[A.top()] == cod.top();
}

template <ResiduatedCodomain L, class V = typename L::value_type>
void require_endpoints(const FiniteResiduatedLattice& A, const L& cod, std::span<const V> s)
{
    if (!(s[A.bot()] == cod.bot()))
        throw Error(ErrorKind::endpoint_violation, "s(0) must be 0", {A.bot()});
    if (!(s[A.top()] == cod.top()))
        throw Error(ErrorKind::endpoint_violation, "s(1) must be 1", {A.top()});
}

namespace detail {

    template <std::size_t N, class P>
    void record(ConditionSet<N>& c, std::size_t k, Element a, Element b, P&& ok)
    {
        if (c.holds[k] && !ok()) {
            c.holds[k] = false;
            c.witness[k] = {a, b};
        }
    }

} // namespace detail

/// The four equivalent type I conditions, evaluated separately.
template <ResiduatedCodomain L, class V = typename L::value_type>
[[nodiscard]] ConditionSet<4> type_i_conditions(const FiniteResiduatedLattice& A, const L& cod, std::span<const V> s)
{
    require_endpoints(A, cod, s);
    ConditionSet<4> c;
    c.holds.fill(true);
    const std::size_t n = A.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const V& sj = s[A.join(a, b)];
            const V& sm = s[A.meet(a, b)];
            const V& si = s[A.imp(a, b)];
            detail::record(c, 0, a, b, [&] { return s[A.bires(a, b)] == cod.imp(sj, sm); });
            if (A.leq(b, a))
                detail::record(c, 1, a, b, [&] { return si == cod.imp(s[a], s[b]); });
            detail::record(c, 2, a, b, [&] { return si == cod.imp(s[a], sm); });
            detail::record(c, 3, a, b, [&] { return si == cod.imp(sj, s[b]); });
        }
    return c;
}

/// The five equivalent type II conditions, evaluated separately.
template <ResiduatedCodomain L, class V = typename L::value_type>
[[nodiscard]] ConditionSet<5> type_ii_conditions(const FiniteResiduatedLattice& A, const L& cod, std::span<const V> s)
{
    require_endpoints(A, cod, s);
    ConditionSet<5> c;
    c.holds.fill(true);
    const std::size_t n = A.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const V& sj = s[A.join(a, b)];
            const V& sm = s[A.meet(a, b)];
            const V& si = s[A.imp(a, b)];
            detail::record(c, 0, a, b, [&] { return sj == cod.imp(s[A.bires(a, b)], sm); });
            detail::record(c, 1, a, b, [&] { return s[a] == cod.imp(si, sm); });
            if (A.leq(b, a))
                detail::record(c, 2, a, b, [&] { return s[a] == cod.imp(si, s[b]); });
            detail::record(c, 3, a, b, [&] { return sj == cod.imp(si, s[b]); });
            detail::record(c, 4, a, b, [&] { return cod.imp(si, s[b]) == cod.imp(s[A.imp(b, a)], s[a]); });
        }
    return c;
}

/// First (a,b) with a <= b but s(a) not below s(b).
template <ResiduatedCodomain L, class V = typename L::value_type>
[[nodiscard]] std::optional<std::vector<Element>> order_violation(
    const FiniteResiduatedLattice& A, const L& cod, std::span<const V> s)
{
    const std::size_t n = A.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (A.leq(a, b) && !cod.leq(s[a], s[b]))
                return std::vector<Element>{a, b};
    return std::nullopt;
}

/// Preservation of join, meet, imp and times (alpha, beta, gamma, delta).
template <ResiduatedCodomain L, class V = typename L::value_type>
[[nodiscard]] ConditionSet<4> preservation_conditions(
    const FiniteResiduatedLattice& A, const L& cod, std::span<const V> s)
{
    ConditionSet<4> c;
    c.holds.fill(true);
    const std::size_t n = A.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            detail::record(c, 0, a, b, [&] { return s[A.join(a, b)] == cod.join(s[a], s[b]); });
            detail::record(c, 1, a, b, [&] { return s[A.meet(a, b)] == cod.meet(s[a], s[b]); });
            detail::record(c, 2, a, b, [&] { return s[A.imp(a, b)] == cod.imp(s[a], s[b]); });
            detail::record(c, 3, a, b, [&] { return s[A.times(a, b)] == cod.times(s[a], s[b]); });
        }
    return c;
}

struct StateClassification {
    ConditionSet<4> type_i_conditions;
    ConditionSet<5> type_ii_conditions;
    ConditionSet<4> preservation; // alpha, beta, gamma, delta
    bool type_i = false;
    bool type_ii = false;
    bool type_iii = false;
    bool order_preserving = false;
    bool state_morphism = false;
    bool faithful = false;
    std::optional<bool> riecan; // filled by the Riecan module
    std::optional<std::vector<Element>> order_witness;
    std::optional<Element> faithful_witness;

    [[nodiscard]] bool alpha() const { return preservation.holds[0]; }
    [[nodiscard]] bool beta() const { return preservation.holds[1]; }
    [[nodiscard]] bool gamma() const { return preservation.holds[2]; }
    [[nodiscard]] bool delta() const { return preservation.holds[3]; }
    [[nodiscard]] bool op_type_i() const { return type_i && order_preserving; }
};

template <ResiduatedCodomain L, class V = typename L::value_type>
[[nodiscard]] StateClassification classify_map(const FiniteResiduatedLattice& A, const L& cod, std::span<const V> s)
{
    StateClassification c;
    c.type_i_conditions = type_i_conditions(A, cod, s);
    c.type_ii_conditions = type_ii_conditions(A, cod, s);
    c.preservation = preservation_conditions(A, cod, s);
    c.type_i = c.type_i_conditions.all();
    c.type_ii = c.type_ii_conditions.all();
    c.type_iii = c.type_i && c.type_ii;
    c.order_witness = order_violation(A, cod, s);
    c.order_preserving = !c.order_witness.has_value();
    c.state_morphism = c.alpha() && c.beta() && c.gamma();
    c.faithful = true;
    for (Element a = 0; a < A.size(); ++a)
        if (s[a] == cod.top() && a != A.top()) {
            c.faithful = false;
            c.faithful_witness = a;
            break;
        }
    return c;
}

[[nodiscard]] inline ConditionSet<4> check_type_i_conditions(const StateMap& s)
{
    return type_i_conditions(*s.dom, *s.cod, s.values());
}

[[nodiscard]] inline ConditionSet<5> check_type_ii_conditions(const StateMap& s)
{
    return type_ii_conditions(*s.dom, *s.cod, s.values());
}

[[nodiscard]] inline StateClassification classify_state(const StateMap& s)
{
    return classify_map(*s.dom, *s.cod, s.values());
}

enum class StateClass { all, type_i, type_ii, type_iii, order_preserving_type_i, state_morphism, riecan };

[[nodiscard]] inline std::string_view to_string(StateClass c)
{
    switch (c) {
    case StateClass::all: return "all";
    case StateClass::type_i: return "type1";
    case StateClass::type_ii: return "type2";
    case StateClass::type_iii: return "type3";
    case StateClass::order_preserving_type_i: return "op-type1";
    case StateClass::state_morphism: return "state-morphism";
    case StateClass::riecan: return "riecan";
    }
    return "?";
}

[[nodiscard]] inline std::optional<StateClass> parse_state_class(std::string_view s)
{
    for (StateClass c : {StateClass::all, StateClass::type_i, StateClass::type_ii, StateClass::type_iii,
             StateClass::order_preserving_type_i, StateClass::state_morphism, StateClass::riecan})
        if (to_string(c) == s)
            return c;
    return std::nullopt;
}

/// Membership for every class except riecan, which lives in its own module.
[[nodiscard]] inline bool in_class(const StateClassification& c, StateClass cls)
{
    switch (cls) {
    case StateClass::all: return true;
    case StateClass::type_i: return c.type_i;
    case StateClass::type_ii: return c.type_ii;
    case StateClass::type_iii: return c.type_iii;
    case StateClass::order_preserving_type_i: return c.op_type_i();
    case StateClass::state_morphism: return c.state_morphism;
    case StateClass::riecan: return c.riecan.value_or(false);
    }
    return false;
}

} // namespace resl
