#pragma once

#include "resl/filter.hpp"

namespace resl {

struct QuotientAlgebra {
    AlgebraPtr base;
    FilterSet filter;
    std::vector<std::vector<Element>> classes; // sorted, ordered by least member
    AlgebraPtr ops;
    std::vector<Element> proj; // element -> class index

    [[nodiscard]] Element representative(Element k) const { return classes[k].front(); }
};

/// Element whose label names a class: top or bot if present, else the least member.
[[nodiscard]] inline Element class_label_source(const FiniteResiduatedLattice& A, const std::vector<Element>& members)
{
    for (Element e : members)
        if (e == A.top())
            return e;
    for (Element e : members)
        if (e == A.bot())
            return e;
    return members.front();
}

/// A/F with a == b iff d(a,b) in F. Tables are read off the least member of
/// each class and then rechecked against every member.
[[nodiscard]] inline QuotientAlgebra quotient(const FilterSet& F)
{
    const auto& A = *F.alg;
    if (auto v = filter_violation(A, F.members))
        throw Error(ErrorKind::not_a_filter, "filter axiom fails: " + v->first, v->second);
    if (F.contains(A.bot()))
        throw Error(ErrorKind::not_a_filter, "quotient needs a proper filter", {A.bot()});
    const std::size_t n = A.size();
    constexpr Element unset = ~Element{0};

    QuotientAlgebra q{F.alg, F, {}, nullptr, std::vector<Element>(n, unset)};
    for (Element a = 0; a < n; ++a) {
        if (q.proj[a] != unset)
            continue;
        const auto k = static_cast<Element>(q.classes.size());
        q.classes.emplace_back();
        for (Element b = a; b < n; ++b)
            if (F.contains(A.bires(a, b))) {
                if (q.proj[b] != unset)
                    throw Error(ErrorKind::internal_assertion, "congruence is not transitive", {a, b});
                q.proj[b] = k;
                q.classes.back().push_back(b);
            }
    }
    const std::size_t m = q.classes.size();

    RawTables raw;
    raw.n = m;
    raw.bot = q.proj[A.bot()];
    raw.top = q.proj[A.top()];
    Matrix leq(m, std::vector<Element>(m)), join(m, std::vector<Element>(m)), meet(m, std::vector<Element>(m));
    Matrix imp(m, std::vector<Element>(m));
    raw.times.assign(m, std::vector<Element>(m));
    for (Element k = 0; k < m; ++k) {
        raw.labels.push_back(A.label(class_label_source(A, q.classes[k])));
        for (Element l = 0; l < m; ++l) {
            const Element x = q.representative(k), y = q.representative(l);
            leq[k][l] = F.contains(A.imp(x, y)) ? 1 : 0;
            join[k][l] = q.proj[A.join(x, y)];
            meet[k][l] = q.proj[A.meet(x, y)];
            raw.times[k][l] = q.proj[A.times(x, y)];
            imp[k][l] = q.proj[A.imp(x, y)];
        }
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element k = q.proj[a], l = q.proj[b];
            const bool same = join[k][l] == q.proj[A.join(a, b)] && meet[k][l] == q.proj[A.meet(a, b)]
                && raw.times[k][l] == q.proj[A.times(a, b)] && imp[k][l] == q.proj[A.imp(a, b)]
                && (leq[k][l] != 0) == F.contains(A.imp(a, b));
            if (!same)
                throw Error(ErrorKind::internal_assertion, "quotient operation depends on the representative", {a, b});
        }
    raw.leq = std::move(leq);
    raw.join = std::move(join);
    raw.meet = std::move(meet);
    raw.imp = std::move(imp);
    q.ops = make_algebra(raw);
    if (auto v = morphism_violation(A, *q.ops, q.proj))
        throw Error(ErrorKind::internal_assertion, "projection does not preserve " + v->op, v->witness);
    return q;
}

struct InducedState {
    QuotientAlgebra quotient;
    StateMap state; // on quotient.ops
};

/// s-bar on A/Ker(s), with s-bar(a/Ker) = s(a).
[[nodiscard]] inline InducedState induced_state(const StateMap& s)
{
    const auto c = classify_state(s);
    auto q = quotient(kernel(s));
    const auto& A = *s.dom;
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (q.proj[a] == q.proj[b]) {
                const Element v = s(a);
                const bool ok = s(b) == v && s(A.join(a, b)) == v && s(A.meet(a, b)) == v;
                detail::internal(ok, "state is not constant on a kernel class", {a, b});
            }
    std::vector<Element> t(q.classes.size());
    for (Element k = 0; k < t.size(); ++k)
        t[k] = s(q.representative(k));
    StateMap bar{q.ops, s.cod, std::move(t)};
    const auto cb = classify_state(bar);
    detail::internal(!c.op_type_i() || cb.op_type_i(), "induced state lost order-preserving type I");
    detail::internal(!c.type_ii || cb.type_ii, "induced state lost type II");
    return InducedState{std::move(q), std::move(bar)};
}

} // namespace resl
