#pragma once

#include "resl/quotient.hpp"

#include <numeric>

namespace resl {

/// L-valued binary relation on a finite set.
struct SimilarityTable {
    std::size_t set_size = 0;
    AlgebraPtr target;
    Table table;
    bool equality = false; // E(a,b) = 1 only for a = b

    [[nodiscard]] Element operator()(Element a, Element b) const { return table(a, b); }
};

/// First failure of reflexivity ("reflexive"), symmetry ("symmetric") or
/// times-transitivity ("transitive").
[[nodiscard]] inline std::optional<std::pair<std::string, std::vector<Element>>> similarity_violation(
    const SimilarityTable& E)
{
    const auto& L = *E.target;
    const std::size_t n = E.set_size;
    for (Element a = 0; a < n; ++a)
        if (E(a, a) != L.top())
            return std::pair<std::string, std::vector<Element>>{"reflexive", {a}};
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (E(a, b) != E(b, a))
                return std::pair<std::string, std::vector<Element>>{"symmetric", {a, b}};
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (!L.leq(L.times(E(a, b), E(b, c)), E(a, c)))
                    return std::pair<std::string, std::vector<Element>>{"transitive", {a, b, c}};
    return std::nullopt;
}

namespace detail {

    inline bool compute_equality(const SimilarityTable& E)
    {
        for (Element a = 0; a < E.set_size; ++a)
            for (Element b = 0; b < E.set_size; ++b)
                if (a != b && E(a, b) == E.target->top())
                    return false;
        return true;
    }

} // namespace detail

/// The biresiduum of L as an L-relation on L.
[[nodiscard]] inline SimilarityTable biresiduum_similarity(const AlgebraPtr& L)
{
    SimilarityTable E{L->size(), L, Table(L->size()), false};
    for (Element a = 0; a < L->size(); ++a)
        for (Element b = 0; b < L->size(); ++b)
            E.table(a, b) = L->bires(a, b);
    E.equality = detail::compute_equality(E);
    return E;
}

/// rho_s(a,b) = s(d(a,b)) for an order-preserving type I state.
[[nodiscard]] inline SimilarityTable similarity_of_state(const StateMap& s)
{
    const auto c = classify_state(s);
    detail::require(c.op_type_i(), "rho_s needs an order-preserving type I state");
    const auto& A = *s.dom;
    SimilarityTable E{A.size(), s.cod, Table(A.size()), false};
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            E.table(a, b) = s(A.bires(a, b));
    if (auto v = similarity_violation(E))
        throw Error(ErrorKind::internal_assertion, "rho_s is not " + v->first, v->second);
    E.equality = detail::compute_equality(E);
    detail::internal(E.equality == c.faithful, "rho_s equality flag disagrees with faithfulness");
    return E;
}

/// Eventually periodic sequence: prefix, then cycle repeated forever. A
/// one-element cycle gives an eventually constant sequence.
struct Sequence {
    std::vector<Element> prefix;
    std::vector<Element> cycle; // nonempty

    [[nodiscard]] Element at(std::size_t i) const
    {
        return i < prefix.size() ? prefix[i] : cycle[(i - prefix.size()) % cycle.size()];
    }

    [[nodiscard]] static Sequence constant(Element a) { return {{}, {a}}; }
    [[nodiscard]] static Sequence stable(std::vector<Element> prefix, Element tail) { return {std::move(prefix), {tail}}; }

    /// Same infinite sequence, whatever the presentation.
    [[nodiscard]] bool same_terms(const Sequence& o) const
    {
        const std::size_t p = std::max(prefix.size(), o.prefix.size());
        const std::size_t c = std::lcm(cycle.size(), o.cycle.size());
        for (std::size_t i = 0; i < p + c; ++i)
            if (at(i) != o.at(i))
                return false;
        return true;
    }
};

/// Termwise f(x_n, y_n), presented with the longer prefix and the lcm cycle.
template <class F>
[[nodiscard]] Sequence combine(const Sequence& x, const Sequence& y, F&& f)
{
    const std::size_t p = std::max(x.prefix.size(), y.prefix.size());
    const std::size_t c = std::lcm(x.cycle.size(), y.cycle.size());
    Sequence r;
    for (std::size_t i = 0; i < p; ++i)
        r.prefix.push_back(f(x.at(i), y.at(i)));
    for (std::size_t j = 0; j < c; ++j)
        r.cycle.push_back(f(x.at(p + j), y.at(p + j)));
    return r;
}

template <class F>
[[nodiscard]] Sequence map_terms(const Sequence& x, F&& f)
{
    Sequence r;
    for (Element e : x.prefix)
        r.prefix.push_back(f(e));
    for (Element e : x.cycle)
        r.cycle.push_back(f(e));
    return r;
}

/// Similarity limit in a finite L. An increasing sequence with join 1 is
/// eventually 1 there, so a_n -> a iff a_n = a eventually. The limit exists
/// iff the cycle is constant, and is then unique.
[[nodiscard]] inline std::optional<Element> seq_limit(const FiniteResiduatedLattice& L, const Sequence& x)
{
    const Element a = x.cycle.front();
    for (Element c : x.cycle)
        if (L.bires(c, a) != L.top())
            return std::nullopt;
    return a;
}

/// lim E(x_n, a) = 1.
[[nodiscard]] inline bool is_E_convergent(const SimilarityTable& E, const Sequence& x, Element a)
{
    for (Element c : x.cycle)
        if (E(c, a) != E.target->top())
            return false;
    return true;
}

/// lim_n lim_m E(x_n, x_m) = 1. The prefix never matters; within the cycle
/// every pair must be at similarity 1.
[[nodiscard]] inline bool is_E_cauchy(const SimilarityTable& E, const Sequence& x)
{
    for (Element c : x.cycle)
        for (Element d : x.cycle)
            if (E(c, d) != E.target->top())
                return false;
    return true;
}

/// Every sequence with prefix length <= max_prefix and cycle length in
/// [1, max_cycle], in a fixed order.
[[nodiscard]] inline std::vector<Sequence> generate_sequences(std::size_t n, std::size_t max_prefix, std::size_t max_cycle)
{
    std::vector<Sequence> out;
    auto tuples = [n](std::size_t len) {
        std::vector<std::vector<Element>> v;
        std::vector<Element> t(len, 0);
        while (true) {
            v.push_back(t);
            std::size_t k = len;
            while (k > 0 && ++t[k - 1] == n)
                t[--k] = 0;
            if (k == 0)
                return v;
        }
    };
    for (std::size_t p = 0; p <= max_prefix; ++p)
        for (std::size_t c = 1; c <= max_cycle; ++c)
            for (const auto& pre : tuples(p))
                for (const auto& cyc : tuples(c))
                    out.push_back({pre, cyc});
    return out;
}

/// Similarity axioms for rho_s and its relation to d_L.
[[nodiscard]] inline SuiteReport similarity_suite(const StateMap& s, std::size_t max_prefix = 1, std::size_t max_cycle = 2)
{
    SuiteReport r("similarity of a state");
    const auto c = classify_state(s);
    if (!c.op_type_i()) {
        r.skip("similarity_items", "state is not order-preserving type I");
        return r;
    }
    const auto& A = *s.dom;
    const auto& L = *s.cod;
    const auto E = similarity_of_state(s);
    const std::size_t n = A.size();
    using T = std::span<const Element>;
    const auto v = similarity_violation(E);
    r.expect("rho_is_similarity", !v.has_value(), v ? v->second : std::vector<Element>{}, v ? v->first : "");
    r.expect("rho_equality_iff_faithful", E.equality == c.faithful);
    r.add(check_all("rho_below_rho_of_negations", n, 2, [&](T t) {
        return L.leq(E(t[0], t[1]), E(A.neg(t[0]), A.neg(t[1])));
    }));
    const std::pair<const char*, Element (*)(const FiniteResiduatedLattice&, Element, Element)> binops[] = {
        {"join", [](const FiniteResiduatedLattice& X, Element a, Element b) { return X.join(a, b); }},
        {"meet", [](const FiniteResiduatedLattice& X, Element a, Element b) { return X.meet(a, b); }},
        {"times", [](const FiniteResiduatedLattice& X, Element a, Element b) { return X.times(a, b); }},
        {"imp", [](const FiniteResiduatedLattice& X, Element a, Element b) { return X.imp(a, b); }},
        {"bires", [](const FiniteResiduatedLattice& X, Element a, Element b) { return X.bires(a, b); }},
    };
    for (const auto& [name, op] : binops)
        r.add(check_all(std::string("rho_compatible_with_") + name, n, 4, [&](T t) {
            const Element a = t[0], b = t[1], x = t[2], y = t[3];
            return L.leq(L.times(E(a, b), E(x, y)), E(op(A, a, x), op(A, b, y)));
        }));
    r.add(check_all("rho_below_value_bires", n, 2, [&](T t) { return L.leq(E(t[0], t[1]), L.bires(s(t[0]), s(t[1]))); }));
    r.add(check_all("rho_equals_value_bires_when_comparable", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        return !(A.leq(a, b) || A.leq(b, a)) || E(a, b) == L.bires(s(a), s(b));
    }));
    r.add(check_all("rho_of_rho_contracts", n, 4, [&](T t) {
        const Element a = t[0], b = t[1], x = t[2], y = t[3];
        return L.leq(L.times(E(a, x), E(b, y)), L.bires(E(a, b), E(x, y)));
    }));

    // Cauchy for rho_s against the direct description through Ker(s) classes.
    const auto q = quotient(kernel(s));
    ItemResult cauchy{"rho_cauchy_iff_eventually_in_one_kernel_class", ItemStatus::pass, 0, {}, {}};
    for (const auto& x : generate_sequences(n, max_prefix, max_cycle)) {
        ++cauchy.checked;
        bool one_class = true;
        for (Element e : x.cycle)
            one_class = one_class && q.proj[e] == q.proj[x.cycle.front()];
        if (is_E_cauchy(E, x) != one_class && cauchy.status == ItemStatus::pass) {
            cauchy.status = ItemStatus::fail;
            cauchy.witness = x.prefix;
            cauchy.witness.insert(cauchy.witness.end(), x.cycle.begin(), x.cycle.end());
        }
    }
    r.add(cauchy);
    return r;
}

namespace detail {

    // Join or meet of every term: for an eventually periodic sequence this
    // is the join or meet over the prefix and one cycle.
    inline Element fold_terms(const FiniteResiduatedLattice& A, const Sequence& x, bool join)
    {
        Element acc = join ? A.bot() : A.top();
        for (Element e : x.prefix)
            acc = join ? A.join(acc, e) : A.meet(acc, e);
        for (Element e : x.cycle)
            acc = join ? A.join(acc, e) : A.meet(acc, e);
        return acc;
    }

    inline bool monotone(const FiniteResiduatedLattice& A, const Sequence& x, bool up)
    {
        const std::size_t len = x.prefix.size() + 2 * x.cycle.size();
        for (std::size_t i = 0; i + 1 < len; ++i) {
            const Element a = x.at(i), b = x.at(i + 1);
            if (!(up ? A.leq(a, b) : A.leq(b, a)))
                return false;
        }
        return true;
    }

} // namespace detail

struct ContinuityFlags {
    bool up = true;         // up-continuous everywhere
    bool down = true;       // down-continuous everywhere
    bool up_at_top = true;  // up-continuous at 1
    bool down_at_bot = true;
    bool rho = true;        // rho_s-continuous, only meaningful for order-preserving type I
    std::size_t sequences = 0;
};

/// Continuity of s over every monotone sequence produced by
/// generate_sequences(n, max_prefix, max_cycle). Monotone periodic
/// sequences are eventually constant, so this exercises the machinery
/// rather than hard analysis.
[[nodiscard]] inline ContinuityFlags continuity_flags(const StateMap& s, std::size_t max_prefix, std::size_t max_cycle)
{
    const auto& A = *s.dom;
    const auto& L = *s.cod;
    ContinuityFlags f;
    const bool op = classify_state(s).op_type_i();
    std::optional<SimilarityTable> E;
    if (op)
        E = similarity_of_state(s);
    for (const auto& x : generate_sequences(A.size(), max_prefix, max_cycle)) {
        ++f.sequences;
        const auto image = map_terms(x, [&](Element e) { return s(e); });
        const auto lim = seq_limit(L, image);
        for (bool up : {true, false}) {
            if (!detail::monotone(A, x, up))
                continue;
            const Element bound = detail::fold_terms(A, x, up);
            const bool ok = lim && *lim == s(bound);
            if (up) {
                f.up = f.up && ok;
                if (bound == A.top())
                    f.up_at_top = f.up_at_top && ok;
            } else {
                f.down = f.down && ok;
                if (bound == A.bot())
                    f.down_at_bot = f.down_at_bot && ok;
            }
        }
        if (E)
            for (Element a = 0; a < A.size(); ++a)
                if (is_E_convergent(*E, x, a))
                    f.rho = f.rho && lim && *lim == s(a);
    }
    return f;
}

[[nodiscard]] inline SuiteReport continuity_suite(const StateMap& s, std::size_t max_prefix = 3, std::size_t max_cycle = 1)
{
    SuiteReport r("continuity");
    const auto& A = *s.dom;
    const auto& L = *s.cod;
    const auto c = classify_state(s);
    const auto ca = classify(A);
    const auto cl = classify(L);
    const auto f = continuity_flags(s, max_prefix, max_cycle);
    const std::string count = std::to_string(f.sequences) + " sequences";
    // Finite carriers: every monotone sequence stabilises, so these hold outright.
    r.expect("up_continuous", f.up, {}, count);
    r.expect("down_continuous", f.down, {}, count);
    r.expect("sigma_complete", true, {}, "finite lattice");
    if (c.type_i && cl.involutive)
        r.expect("involutive_type_i_down_gives_up", !f.down || f.up);
    else
        r.skip("involutive_type_i_down_gives_up", "needs type I and involutive L");
    if (c.type_ii)
        r.expect("type_ii_down_gives_up", !f.down || f.up);
    else
        r.skip("type_ii_down_gives_up", "state is not type II");
    if (c.op_type_i())
        r.expect("rho_continuous", f.rho, {}, count);
    else
        r.skip("rho_continuous", "state is not order-preserving type I");
    if (ca.mv && c.op_type_i()) {
        r.expect("mv_up_at_top_iff_up", f.up_at_top == f.up);
        r.expect("mv_up_at_top_gives_down", !f.up_at_top || f.down);
        r.expect("mv_down_gives_down_at_bot", !f.down || f.down_at_bot);
        if (cl.involutive)
            r.expect("mv_involutive_all_continuity_agree",
                f.up_at_top == f.up && f.up == f.down && f.down == f.down_at_bot);
        else
            r.skip("mv_involutive_all_continuity_agree", "codomain is not involutive");
    } else {
        r.skip("mv_continuity_items", "needs MV A and order-preserving type I");
    }
    if (c.op_type_i() && c.faithful) {
        const auto E = similarity_of_state(s);
        bool complete = true;
        for (const auto& x : generate_sequences(A.size(), 1, 2)) {
            if (!is_E_cauchy(E, x))
                continue;
            bool converges = false;
            for (Element a = 0; a < A.size() && !converges; ++a)
                converges = is_E_convergent(E, x, a);
            complete = complete && converges;
        }
        r.expect("faithful_rho_complete", complete);
        r.expect("faithful_up_continuous_at_top", f.up_at_top);
    } else {
        r.skip("faithful_items", "needs a faithful order-preserving type I state");
    }
    return r;
}

} // namespace resl
