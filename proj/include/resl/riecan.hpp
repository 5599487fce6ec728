#pragma once

#include "resl/classify.hpp"
#include "resl/enumerate.hpp"
#include "resl/report.hpp"
#include "resl/state_suites.hpp"

#include <algorithm>
#include <map>

namespace resl {

/// Regular elements {a : not not a = a} as an algebra in their own right,
/// with doubly negated join, meet and product.
struct RegularAlgebra {
    AlgebraPtr base;
    std::vector<Element> elements; // base index of each regular element, ascending
    AlgebraPtr ops;                // element i of ops is elements[i] of base
    std::vector<Element> dn;       // base element -> index of its double negation
};

/// First (a,b) where not not (a -> b) differs from a -> not not b.
[[nodiscard]] inline std::optional<std::vector<Element>> glivenko_violation(const FiniteResiduatedLattice& A)
{
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (A.neg(A.neg(A.imp(a, b))) != A.imp(a, A.neg(A.neg(b))))
                return std::vector<Element>{a, b};
    return std::nullopt;
}

[[nodiscard]] inline RegularAlgebra regular_algebra(const AlgebraPtr& A)
{
    const auto& X = *A;
    if (auto w = glivenko_violation(X))
        throw Error(ErrorKind::no_glivenko, "double negation does not commute with imp", *w);
    RegularAlgebra r{A, {}, nullptr, {}};
    constexpr Element unset = ~Element{0};
    std::vector<Element> index(X.size(), unset);
    for (Element a = 0; a < X.size(); ++a)
        if (X.neg(X.neg(a)) == a) {
            index[a] = static_cast<Element>(r.elements.size());
            r.elements.push_back(a);
        }
    auto dn = [&](Element a) { return X.neg(X.neg(a)); };
    auto idx = [&](Element a) {
        if (index[a] == unset)
            throw Error(ErrorKind::internal_assertion, "operation leaves the regular elements", {a});
        return index[a];
    };
    const std::size_t k = r.elements.size();
    RawTables raw;
    raw.n = k;
    raw.bot = idx(X.bot());
    raw.top = idx(X.top());
    Matrix leq(k, std::vector<Element>(k)), join(k, std::vector<Element>(k)), meet(k, std::vector<Element>(k));
    Matrix imp(k, std::vector<Element>(k));
    raw.times.assign(k, std::vector<Element>(k));
    for (Element i = 0; i < k; ++i) {
        raw.labels.push_back(X.label(r.elements[i]));
        for (Element j = 0; j < k; ++j) {
            const Element a = r.elements[i], b = r.elements[j];
            leq[i][j] = X.leq(a, b) ? 1 : 0;
            join[i][j] = idx(dn(X.join(a, b)));
            meet[i][j] = idx(dn(X.meet(a, b)));
            raw.times[i][j] = idx(dn(X.times(a, b)));
            imp[i][j] = idx(X.imp(a, b));
        }
    }
    raw.leq = std::move(leq);
    raw.join = std::move(join);
    raw.meet = std::move(meet);
    raw.imp = std::move(imp);
    r.ops = make_algebra(raw);
    detail::internal(classify(*r.ops).involutive, "regular algebra is not involutive");
    r.dn.resize(X.size());
    for (Element a = 0; a < X.size(); ++a)
        r.dn[a] = idx(dn(a));
    if (auto v = morphism_violation(X, *r.ops, r.dn))
        throw Error(ErrorKind::internal_assertion, "double negation does not preserve " + v->op, v->witness);
    return r;
}

struct OplusStructure {
    Table oplus;
    std::vector<bool> perp; // row-major n x n
    SuiteReport lemma;

    [[nodiscard]] bool orthogonal(Element a, Element b) const { return perp[a * oplus.size() + b]; }
};

[[nodiscard]] inline OplusStructure oplus_structure(const FiniteResiduatedLattice& A)
{
    const std::size_t n = A.size();
    OplusStructure o{Table(n), std::vector<bool>(n * n), SuiteReport("sum and orthogonality")};
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            o.oplus(a, b) = ops::oplus(A, a, b);
            o.perp[a * n + b] = ops::perp(A, a, b);
        }
    auto dn = [&](Element a) { return A.neg(A.neg(a)); };
    const auto& S = o.oplus;
    using T = std::span<const Element>;
    auto& r = o.lemma;
    r.add(check_all("sum_with_zero_is_double_negation", n, 1, [&](T t) { return S(t[0], A.bot()) == dn(t[0]); }));

    // Recorded, not asserted: the value of a (+) 1 is reported as computed.
    {
        bool all_top = true, all_self = true;
        for (Element a = 0; a < n; ++a) {
            all_top = all_top && S(a, A.top()) == A.top();
            all_self = all_self && S(a, A.top()) == a;
        }
        std::string note = all_top ? "a(+)1 = 1 for every a" : "a(+)1 differs from 1 somewhere";
        note += all_self ? "; equals a for every a" : "; differs from a for some a";
        r.add({"sum_with_top", ItemStatus::recorded, n, {}, note});
    }
    r.add(check_all("sum_commutative", n, 2, [&](T t) { return S(t[0], t[1]) == S(t[1], t[0]); }));
    r.add(check_all("sum_associative", n, 3, [&](T t) {
        return S(S(t[0], t[1]), t[2]) == S(t[0], S(t[1], t[2]));
    }));
    r.add(check_all("sum_monotone", n, 3, [&](T t) { return !A.leq(t[0], t[1]) || A.leq(S(t[0], t[2]), S(t[1], t[2])); }));
    r.add(check_all("join_below_sum", n, 2, [&](T t) { return A.leq(A.join(t[0], t[1]), S(t[0], t[1])); }));
    r.add(check_all("sum_is_regular_and_ignores_double_negation", n, 2, [&](T t) {
        const Element x = S(t[0], t[1]);
        return x == dn(x) && x == S(dn(t[0]), dn(t[1]));
    }));
    r.add(check_all("orthogonality_symmetric", n, 2, [&](T t) { return o.orthogonal(t[0], t[1]) == o.orthogonal(t[1], t[0]); }));
    r.add(check_all("sum_has_symmetric_form", n, 2, [&](T t) {
        return S(t[0], t[1]) == A.imp(A.neg(t[1]), dn(t[0]));
    }));
    return o;
}

struct RiecanCheck {
    bool ok = true;
    std::string failed; // "top", "perp" or "sum"
    std::vector<Element> witness;
};

/// m(1) = 1, and for a perp b: m(a) perp m(b) and m(a (+) b) = m(a) (+) m(b).
template <ResiduatedCodomain L, class V = typename L::value_type>
[[nodiscard]] RiecanCheck check_generalized_riecan(const FiniteResiduatedLattice& A, const L& cod, std::span<const V> m)
{
    if (!(m[A.top()] == cod.top()))
        return {false, "top", {A.top()}};
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b) {
            if (!ops::perp(A, a, b))
                continue;
            if (!ops::perp(cod, m[a], m[b]))
                return {false, "perp", {a, b}};
            if (!(m[ops::oplus(A, a, b)] == ops::oplus(cod, m[a], m[b])))
                return {false, "sum", {a, b}};
        }
    return {};
}

template <ResiduatedCodomain L, class V = typename L::value_type>
[[nodiscard]] bool is_generalized_riecan(const FiniteResiduatedLattice& A, const L& cod, std::span<const V> m)
{
    return check_generalized_riecan(A, cod, m).ok;
}

[[nodiscard]] inline bool is_generalized_riecan(const StateMap& m)
{
    return is_generalized_riecan(*m.dom, *m.cod, m.values());
}

/// All generalized Riecan maps A -> L, lexicographic. Only m(1) is pinned;
/// m(0) = 0 is forced by the conditions and left to the search.
[[nodiscard]] inline std::vector<StateMap> enumerate_riecan(
    const AlgebraPtr& A, const AlgebraPtr& L, const EnumerationOptions& opt = {})
{
    const auto& X = *A;
    const auto& Y = *L;
    std::vector<std::optional<Element>> pinned(X.size());
    pinned[X.top()] = Y.top();
    std::vector<PartialConstraint> cs;
    for (Element a = 0; a < X.size(); ++a)
        for (Element b = 0; b < X.size(); ++b)
            if (ops::perp(X, a, b)) {
                const Element c = ops::oplus(X, a, b);
                cs.push_back({{a, b, c}, [&Y, a, b, c](const Element* t) {
                                  return ops::perp(Y, t[a], t[b]) && t[c] == ops::oplus(Y, t[a], t[b]);
                              }});
            }
    auto tables = search_maps(X, Y, pinned, cs,
        [&](const std::vector<Element>& t) { return is_generalized_riecan(X, Y, std::span<const Element>(t)); }, opt);
    std::vector<StateMap> out;
    for (auto& t : tables)
        out.push_back(StateMap{A, L, std::move(t)});
    return out;
}

/// classify_state with the Riecan flag filled in. Maps with wrong endpoints
/// still fail with EndpointViolation.
[[nodiscard]] inline StateClassification classify_state_with_riecan(const StateMap& s)
{
    auto c = classify_state(s);
    c.riecan = is_generalized_riecan(s);
    return c;
}

/// States of any class, Riecan included.
[[nodiscard]] inline std::vector<StateMap> enumerate_class(
    const AlgebraPtr& A, const AlgebraPtr& L, StateClass cls, const EnumerationOptions& opt = {})
{
    return cls == StateClass::riecan ? enumerate_riecan(A, L, opt) : enumerate_states(A, L, cls, opt);
}

/// Relations between Riecan states, order-preserving type I states and the
/// lift along double negation, over full enumerations of A -> L.
[[nodiscard]] inline SuiteReport transfer_suite(const AlgebraPtr& A, const AlgebraPtr& L, const EnumerationOptions& opt = {})
{
    const auto& X = *A;
    const auto& Y = *L;
    const auto cx = classify(X);
    const auto cy = classify(Y);
    const auto op = enumerate_states(A, L, StateClass::order_preserving_type_i, opt);
    const auto rs = enumerate_riecan(A, L, opt);
    auto tables = [](const std::vector<StateMap>& v) {
        std::vector<std::vector<Element>> t;
        for (const auto& s : v)
            t.push_back(s.table);
        return t;
    };
    const auto opt_t = tables(op);
    const auto rs_t = tables(rs);
    SuiteReport r("Riecan transfer");

    {
        std::vector<Element> w;
        const bool ok = std::includes(rs_t.begin(), rs_t.end(), opt_t.begin(), opt_t.end());
        if (!ok)
            for (const auto& t : opt_t)
                if (!std::binary_search(rs_t.begin(), rs_t.end(), t)) {
                    w = t;
                    break;
                }
        r.expect("order_preserving_type_i_is_riecan", ok, w, std::to_string(opt_t.size()) + " states");
    }

    const std::size_t n = X.size();
    ItemResult neg_rel{"riecan_negation_relation", ItemStatus::pass, 0, {}, {}};
    ItemResult zero{"riecan_fixes_zero", ItemStatus::pass, 0, {}, {}};
    ItemResult anti{"riecan_negation_antitone", ItemStatus::pass, 0, {}, {}};
    ItemResult inv{"riecan_involutive_codomain_items", ItemStatus::pass, 0, {}, {}};
    auto fail = [](ItemResult& it, std::vector<Element> w) {
        if (it.status == ItemStatus::pass) {
            it.status = ItemStatus::fail;
            it.witness = std::move(w);
        }
    };
    for (const auto& m : rs) {
        ++zero.checked;
        if (m(X.bot()) != Y.bot())
            fail(zero, m.table);
        for (Element a = 0; a < n; ++a) {
            ++neg_rel.checked;
            if (Y.neg(Y.neg(m(X.neg(a)))) != Y.neg(m(a)))
                fail(neg_rel, {a});
            if (cy.involutive) {
                ++inv.checked;
                if (m(X.neg(a)) != Y.neg(m(a)) || m(X.neg(X.neg(a))) != m(a))
                    fail(inv, {a});
            }
            for (Element b = 0; b < n; ++b)
                if (X.leq(b, a)) {
                    ++anti.checked;
                    if (!Y.leq(Y.neg(m(a)), Y.neg(m(b))))
                        fail(anti, {a, b});
                    if (cy.involutive && !Y.leq(m(b), m(a)))
                        fail(inv, {a, b});
                }
        }
    }
    r.add(neg_rel);
    r.add(zero);
    r.add(anti);
    if (cy.involutive)
        r.add(inv);
    else
        r.skip(inv.name, "codomain is not involutive");

    if (cx.glivenko && cy.involutive)
        r.expect("glivenko_involutive_riecan_equals_order_preserving_type_i", rs_t == opt_t,
            {}, std::to_string(rs_t.size()) + " Riecan states");
    else
        r.skip("glivenko_involutive_riecan_equals_order_preserving_type_i", "needs Glivenko A and involutive L");

    if (cx.involutive) {
        bool ok_neg = true, ok_ii = true;
        std::vector<Element> w_neg, w_ii;
        for (const auto& m : rs) {
            bool keeps_neg = true;
            for (Element a = 0; a < n; ++a)
                keeps_neg = keeps_neg && m(X.neg(a)) == Y.neg(m(a));
            const auto c = classify_state(m);
            if (keeps_neg && !c.op_type_i() && ok_neg) {
                ok_neg = false;
                w_neg = m.table;
            }
            if (c.type_ii && !c.op_type_i() && ok_ii) {
                ok_ii = false;
                w_ii = m.table;
            }
        }
        r.expect("involutive_riecan_keeping_negation_is_order_preserving_type_i", ok_neg, w_neg);
        r.expect("involutive_riecan_type_ii_is_order_preserving_type_i", ok_ii, w_ii);
    } else {
        r.skip("involutive_domain_items", "domain is not involutive");
    }

    if (cx.glivenko && cy.involutive) {
        const auto reg = regular_algebra(A);
        for (StateClass cls : {StateClass::type_i, StateClass::type_ii}) {
            const auto on_reg = enumerate_states(reg.ops, L, cls, opt);
            const auto on_a = enumerate_states(A, L, cls, opt);
            bool lift_ok = true, unique_ok = true;
            std::vector<Element> w;
            for (const auto& t : on_reg) {
                std::vector<Element> lifted(n);
                for (Element a = 0; a < n; ++a)
                    lifted[a] = t(reg.dn[a]);
                const StateMap ls{A, L, lifted};
                if (!in_class(classify_state(ls), cls) && lift_ok) {
                    lift_ok = false;
                    w = t.table;
                }
                std::size_t extensions = 0;
                bool is_lift = false;
                for (const auto& u : on_a) {
                    bool restricts = true;
                    for (Element i = 0; i < reg.elements.size(); ++i)
                        restricts = restricts && u(reg.elements[i]) == t(i);
                    if (restricts) {
                        ++extensions;
                        is_lift = is_lift || u.table == lifted;
                    }
                }
                if (!(extensions == 1 && is_lift) && unique_ok) {
                    unique_ok = false;
                    if (w.empty())
                        w = t.table;
                }
            }
            const std::string tag = cls == StateClass::type_i ? "type_i" : "type_ii";
            r.expect("lift_along_double_negation_keeps_" + tag, lift_ok, w,
                std::to_string(on_reg.size()) + " states on the regular algebra");
            r.expect("lift_is_unique_" + tag + "_extension", unique_ok, w);
        }
    } else {
        r.skip("lift_along_double_negation", "needs Glivenko A and involutive L");
    }
    return r;
}

} // namespace resl
