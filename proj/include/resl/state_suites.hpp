#pragma once

#include "resl/classify.hpp"
#include "resl/report.hpp"
#include "resl/state.hpp"

namespace resl {

namespace detail {

    inline void require(bool cond, const std::string& what)
    {
        if (!cond)
            throw Error(ErrorKind::precondition_not_met, what);
    }

    inline void internal(bool cond, const std::string& what, std::vector<Element> w = {})
    {
        if (!cond)
            throw Error(ErrorKind::internal_assertion, what, std::move(w));
    }

} // namespace detail

/// Consequences of the type I conditions alone.
[[nodiscard]] inline SuiteReport type_i_consequences(const StateMap& s)
{
    const auto& A = *s.dom;
    const auto& L = *s.cod;
    detail::require(classify_state(s).type_i, "state is not type I");
    const std::size_t n = A.size();
    using T = std::span<const Element>;
    SuiteReport r("type I consequences");
    r.add(check_all("preserves_negation", n, 1, [&](T t) { return s(A.neg(t[0])) == L.neg(s(t[0])); }));
    r.add(check_all("join_meet_residua_balance", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        return L.imp(s(A.join(a, b)), s(a)) == L.imp(s(b), s(A.meet(a, b)));
    }));
    r.add(check_all("double_residuum_splits", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        return s(A.imp(A.imp(a, b), b)) == L.imp(s(A.imp(a, b)), s(b));
    }));
    r.add(check_all("double_residuum_via_join", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        return s(A.imp(A.imp(a, b), b)) == L.imp(L.imp(s(A.join(a, b)), s(b)), s(b));
    }));
    r.add(check_all("join_meet_cross_residua", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        return L.imp(s(A.join(a, b)), L.meet(s(a), s(b))) == L.imp(L.join(s(a), s(b)), s(A.meet(a, b)));
    }));
    r.add(check_all("product_lower_bound", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        return L.leq(L.times(s(a), s(A.imp(a, A.times(a, b)))), s(A.times(a, b)));
    }));
    return r;
}

/// Consequences for order-preserving type I states, with the extra items
/// whose hypotheses on A and L hold.
[[nodiscard]] inline SuiteReport order_preserving_consequences(const StateMap& s)
{
    const auto& A = *s.dom;
    const auto& L = *s.cod;
    const auto c = classify_state(s);
    detail::require(c.type_i, "state is not type I");
    detail::require(c.order_preserving, "state is not order-preserving");
    const auto ca = classify(A);
    const auto cl = classify(L);
    const std::size_t n = A.size();
    using T = std::span<const Element>;
    auto dA = [&](Element x, Element y) { return A.bires(x, y); };
    auto dL = [&](Element x, Element y) { return L.bires(x, y); };
    SuiteReport r("order-preserving type I consequences");

    r.add(check_all("supermultiplicative", n, 2, [&](T t) {
        return L.leq(L.times(s(t[0]), s(t[1])), s(A.times(t[0], t[1])));
    }));
    r.add(check_all("monus_lower_bound", n, 2, [&](T t) {
        return L.leq(ops::monus(L, s(t[0]), s(t[1])), s(ops::monus(A, t[0], t[1])));
    }));
    r.add(check_all("imp_upper_bound", n, 2, [&](T t) {
        return L.leq(s(A.imp(t[0], t[1])), L.imp(s(t[0]), s(t[1])));
    }));
    r.add(check_all("residua_product_below_bires", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        return L.leq(L.times(s(A.imp(a, b)), s(A.imp(b, a))), dL(s(a), s(b)));
    }));
    r.add(check_all("bires_contracts", n, 2, [&](T t) { return L.leq(s(dA(t[0], t[1])), dL(s(t[0]), s(t[1]))); }));
    r.add(check_all("bires_of_bires_contracts", n, 4, [&](T t) {
        const Element a = t[0], b = t[1], x = t[2], y = t[3];
        return L.leq(L.times(s(dA(a, x)), s(dA(b, y))), dL(s(dA(a, b)), s(dA(x, y))));
    }));

    if (ca.divisible && cl.divisible) {
        r.add(check_all("divisible_product_formula", n, 2, [&](T t) {
            const Element a = t[0], b = t[1];
            return s(A.times(a, b)) == L.times(s(a), s(A.imp(a, A.times(a, b))));
        }));
        r.add(check_all("divisible_meet_formula", n, 2, [&](T t) {
            const Element a = t[0], b = t[1];
            return s(A.meet(a, b)) == L.times(s(a), s(A.imp(a, b)));
        }));
    } else {
        r.skip("divisible_formulas", "needs divisible domain and codomain");
    }

    if (cl.mv) {
        r.add(check_all("mv_codomain_join_formula", n, 2, [&](T t) {
            const Element a = t[0], b = t[1];
            const Element x = s(A.join(a, b));
            return x == s(A.imp(A.imp(a, b), b)) && x == s(A.imp(A.imp(b, a), a));
        }));
        r.expect("mv_codomain_forces_type_ii", c.type_ii);
    } else {
        r.skip("mv_codomain_items", "codomain is not MV");
    }

    if (ca.mv) {
        r.add(check_all("mv_domain_negation", n, 1, [&](T t) { return s(A.neg(t[0])) == L.neg(s(t[0])); }));
        r.add(check_all("mv_domain_imp_bound", n, 2, [&](T t) {
            return L.imp(s(A.imp(t[0], t[1])), L.imp(s(t[0]), s(t[1]))) == L.top();
        }));
        r.add(check_all("mv_domain_sum_formula", n, 2, [&](T t) {
            const Element a = t[0], b = t[1];
            return s(ops::oplus(A, a, b)) == L.imp(L.imp(s(a), s(A.times(a, b))), s(b));
        }));
    } else {
        r.skip("mv_domain_items", "domain is not MV");
    }
    return r;
}

/// Type I consequences plus, when s is order-preserving, the stronger ones.
[[nodiscard]] inline SuiteReport consequence_suite_type_i(const StateMap& s)
{
    SuiteReport r = type_i_consequences(s);
    if (classify_state(s).order_preserving)
        r.append(order_preserving_consequences(s));
    else
        r.skip("order_preserving_items", "state is not order-preserving");
    return r;
}

[[nodiscard]] inline SuiteReport consequence_suite_type_ii(const StateMap& s)
{
    const auto& A = *s.dom;
    const auto& L = *s.cod;
    const auto c = classify_state(s);
    detail::require(c.type_ii, "state is not type II");
    const std::size_t n = A.size();
    using T = std::span<const Element>;
    SuiteReport r("type II consequences");
    r.expect("order_preserving", c.order_preserving, c.order_witness.value_or(std::vector<Element>{}));
    r.add(check_all("value_is_neg_of_neg_image", n, 1, [&](T t) { return s(t[0]) == L.neg(s(A.neg(t[0]))); }));
    r.add(check_all("double_negation_invariant", n, 1, [&](T t) {
        const Element a = t[0];
        return s(A.neg(A.neg(a))) == s(a) && s(a) == L.neg(L.neg(s(a)));
    }));
    r.add(check_all("imp_via_double_residuum", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        return s(A.imp(a, b)) == L.imp(s(A.imp(A.imp(a, b), b)), s(b));
    }));
    r.add(check_all("preserves_negation", n, 1, [&](T t) { return s(A.neg(t[0])) == L.neg(s(t[0])); }));
    r.add(check_all("product_via_negated_imp", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        return s(A.times(a, b)) == L.neg(s(A.imp(a, A.neg(b))));
    }));
    if (c.type_iii) {
        r.add(check_all("type_iii_double_residuum_symmetric", n, 2, [&](T t) {
            const Element a = t[0], b = t[1];
            return s(A.imp(A.imp(a, b), b)) == s(A.imp(A.imp(b, a), a));
        }));
    } else {
        r.skip("type_iii_double_residuum_symmetric", "state is not type III");
    }
    if (classify(L).mv)
        r.expect("mv_codomain_forces_op_type_i", c.op_type_i());
    else
        r.skip("mv_codomain_forces_op_type_i", "codomain is not MV");
    return r;
}

/// x |-> a -> x on a Heyting algebra. a = 0 would send 0 to 1, so it is rejected.
[[nodiscard]] inline StateMap heyting_section_state(const AlgebraPtr& A, Element a)
{
    detail::require(classify(*A).heyting, "algebra is not Heyting");
    detail::require(a < A->size(), "element out of range");
    detail::require(a != A->bot(), "a = 0 gives s(0) = 1");
    std::vector<Element> t(A->size());
    for (Element x = 0; x < A->size(); ++x)
        t[x] = A->imp(a, x);
    StateMap s{A, A, std::move(t)};
    if (s(A->bot()) != A->bot())
        throw Error(ErrorKind::precondition_not_met, "a -> 0 must be 0 for an endpoint-correct map", {a});
    detail::internal(classify_state(s).op_type_i(), "section state is not order-preserving type I", {a});
    return s;
}

/// f below a, 1 from a upward, on a chain with Goedel implication.
/// `f` is indexed by element and must be defined exactly on {x : x < a}.
[[nodiscard]] inline StateMap chain_state(const AlgebraPtr& A, Element a, const std::vector<std::optional<Element>>& f)
{
    const auto& X = *A;
    const std::size_t n = X.size();
    detail::require(classify(X).chain, "algebra is not a chain");
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            detail::require(X.imp(x, y) == (X.leq(x, y) ? X.top() : y), "implication is not the Goedel one");
    detail::require(a < n && a != X.bot(), "a must be a nonzero element");
    detail::require(f.size() == n, "f must be indexed by element");
    for (Element x = 0; x < n; ++x) {
        const bool below = X.leq(x, a) && x != a;
        detail::require(f[x].has_value() == below, "f must be defined exactly below a");
        if (below && *f[x] >= n)
            throw Error(ErrorKind::precondition_not_met, "f value out of range", {x});
    }
    detail::require(*f[X.bot()] == X.bot(), "f(0) must be 0");
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (f[x] && f[y] && x != y && X.leq(x, y) && !(X.leq(*f[x], *f[y]) && *f[x] != *f[y]))
                throw Error(ErrorKind::not_strict, "f is not strictly order-preserving", {x, y});
    std::vector<Element> t(n);
    for (Element x = 0; x < n; ++x)
        t[x] = f[x] ? *f[x] : X.top();
    StateMap s{A, A, std::move(t)};
    detail::internal(classify_state(s).op_type_i(), "chain state is not order-preserving type I", {a});
    return s;
}

/// s o f for a morphism f : A -> dom(s). Classes carried over by composition
/// are re-checked on the result.
[[nodiscard]] inline StateMap compose_with_morphism(const StateMap& s, const AlgebraPtr& A, std::span<const Element> f)
{
    require_morphism(*A, *s.dom, f);
    std::vector<Element> t(A->size());
    for (Element x = 0; x < A->size(); ++x)
        t[x] = s(f[x]);
    StateMap out{A, s.cod, std::move(t)};
    const auto before = classify_state(s);
    const auto after = classify_state(out);
    detail::internal(!before.type_i || after.type_i, "composite lost type I");
    detail::internal(!before.op_type_i() || after.op_type_i(), "composite lost order-preserving type I");
    detail::internal(!before.type_ii || after.type_ii, "composite lost type II");
    detail::internal(!before.type_iii || after.type_iii, "composite lost type III");
    return out;
}

} // namespace resl
