#pragma once

#include "resl/convergence.hpp"

#include <array>
#include <map>

namespace resl {

struct CompletionResult {
    AlgebraPtr completed;
    std::vector<Element> embed;     // A -> completed
    StateMap lifted_state;          // completed -> L
    SimilarityTable rho_tilde;      // limit of rho_s along representatives
    std::vector<std::vector<Sequence>> members; // Cauchy sequences of each class, in carrier order
    std::size_t sequence_count = 0; // sequences examined
    std::size_t cauchy_count = 0;
    SuiteReport clauses{"completion clauses"};
    std::optional<std::vector<Element>> iso_to_quotient; // completed -> A/Ker(s)

    [[nodiscard]] bool embed_injective() const
    {
        auto sorted = embed;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
};

namespace detail {

    // Sequences with one prefix term and a 2-cycle. Termwise operations
    // keep this shape, so the set is a subalgebra of the power A^N.
    using Seq3 = std::array<Element, 3>;

    inline Sequence to_sequence(const Seq3& x) { return Sequence{{x[0]}, {x[1], x[2]}}; }

    template <class F>
    Seq3 termwise(const Seq3& x, const Seq3& y, F&& f)
    {
        return {f(x[0], y[0]), f(x[1], y[1]), f(x[2], y[2])};
    }

    inline bool same_tables(const FiniteResiduatedLattice& X, const FiniteResiduatedLattice& Y)
    {
        if (X.size() != Y.size() || X.bot() != Y.bot() || X.top() != Y.top())
            return false;
        for (Element a = 0; a < X.size(); ++a)
            for (Element b = 0; b < X.size(); ++b)
                if (X.leq(a, b) != Y.leq(a, b) || X.times(a, b) != Y.times(a, b) || X.imp(a, b) != Y.imp(a, b))
                    return false;
        return true;
    }

} // namespace detail

/// Cauchy sequences modulo limit equivalence, built from every sequence of
/// shape (p; c0, c1) over A. Each class turns out to contain a constant
/// sequence; classes are indexed by their least constant term.
[[nodiscard]] inline CompletionResult completion(const StateMap& s)
{
    const auto cs = classify_state(s);
    detail::require(cs.op_type_i(), "completion needs an order-preserving type I state");
    const auto& A = *s.dom;
    const auto& L = *s.cod;
    const auto E = similarity_of_state(s);
    const std::size_t n = A.size();
    const Element top = L.top();
    using detail::Seq3;

    std::vector<Seq3> cauchy;
    for (Element p = 0; p < n; ++p)
        for (Element c0 = 0; c0 < n; ++c0)
            for (Element c1 = 0; c1 < n; ++c1)
                if (E(c0, c1) == top)
                    cauchy.push_back({p, c0, c1});

    // lim rho_s(x_n, y_n) exists iff the two cycle terms agree.
    auto rho_limit = [&](const Seq3& x, const Seq3& y) {
        const Element u = E(x[1], y[1]), v = E(x[2], y[2]);
        if (u != v)
            throw Error(ErrorKind::internal_assertion, "rho_s along two Cauchy sequences has no limit", {x[0], x[1], x[2], y[0], y[1], y[2]});
        return u;
    };
    auto index = [n](const Seq3& x) { return (x[0] * n + x[1]) * n + x[2]; };
    constexpr Element none = ~Element{0};
    std::vector<Element> key_table(n * n * n, none);
    for (const auto& x : cauchy) {
        for (Element a = 0; a < n && key_table[index(x)] == none; ++a)
            if (rho_limit(x, Seq3{a, a, a}) == top)
                key_table[index(x)] = a;
        if (key_table[index(x)] == none)
            throw Error(ErrorKind::internal_assertion, "Cauchy class without a constant sequence", {x[0], x[1], x[2]});
    }
    std::vector<Element> key(cauchy.size());
    std::map<Element, Element> class_of_key;
    for (std::size_t i = 0; i < cauchy.size(); ++i) {
        key[i] = key_table[index(cauchy[i])];
        class_of_key.emplace(key[i], 0);
    }
    std::vector<Element> reps;
    for (auto& [k, idx] : class_of_key) {
        idx = static_cast<Element>(reps.size());
        reps.push_back(k);
    }
    const std::size_t m = reps.size();
    auto class_of = [&](const Seq3& x) {
        const Element k = key_table[index(x)];
        if (k == none)
            throw Error(ErrorKind::internal_assertion, "operation left the Cauchy sequences", {x[0], x[1], x[2]});
        return class_of_key.at(k);
    };

    // The relation is the kernel of `key` iff it is an equivalence; rho-tilde
    // is read off along the way.
    Table rt(m);
    std::vector<bool> rt_set(m * m, false);
    for (std::size_t i = 0; i < cauchy.size(); ++i)
        for (std::size_t j = 0; j < cauchy.size(); ++j) {
            const Element lim = rho_limit(cauchy[i], cauchy[j]);
            const Element k = class_of_key.at(key[i]), l = class_of_key.at(key[j]);
            detail::internal((lim == top) == (k == l), "limit equivalence is not an equivalence relation");
            if (!rt_set[k * m + l]) {
                rt(k, l) = lim;
                rt_set[k * m + l] = true;
            }
            if (rt(k, l) != lim)
                throw Error(ErrorKind::internal_assertion, "rho-tilde depends on the representatives", {reps[k], reps[l]});
        }

    RawTables raw;
    raw.n = m;
    Matrix join(m, std::vector<Element>(m)), meet(m, std::vector<Element>(m)), imp(m, std::vector<Element>(m));
    Matrix leq(m, std::vector<Element>(m));
    raw.times.assign(m, std::vector<Element>(m));
    auto constant = [](Element a) { return Seq3{a, a, a}; };
    for (Element k = 0; k < m; ++k) {
        for (Element l = 0; l < m; ++l) {
            const Seq3 x = constant(reps[k]), y = constant(reps[l]);
            join[k][l] = class_of(detail::termwise(x, y, [&](Element a, Element b) { return A.join(a, b); }));
            meet[k][l] = class_of(detail::termwise(x, y, [&](Element a, Element b) { return A.meet(a, b); }));
            raw.times[k][l] = class_of(detail::termwise(x, y, [&](Element a, Element b) { return A.times(a, b); }));
            imp[k][l] = class_of(detail::termwise(x, y, [&](Element a, Element b) { return A.imp(a, b); }));
        }
    }
    for (Element k = 0; k < m; ++k)
        for (Element l = 0; l < m; ++l)
            leq[k][l] = meet[k][l] == k ? 1 : 0;
    for (std::size_t i = 0; i < cauchy.size(); ++i)
        for (std::size_t j = 0; j < cauchy.size(); ++j) {
            const Seq3 &x = cauchy[i], &y = cauchy[j];
            const Element k = class_of_key.at(key[i]), l = class_of_key.at(key[j]);
            const bool ok = class_of(detail::termwise(x, y, [&](Element a, Element b) { return A.join(a, b); })) == join[k][l]
                && class_of(detail::termwise(x, y, [&](Element a, Element b) { return A.meet(a, b); })) == meet[k][l]
                && class_of(detail::termwise(x, y, [&](Element a, Element b) { return A.times(a, b); })) == raw.times[k][l]
                && class_of(detail::termwise(x, y, [&](Element a, Element b) { return A.imp(a, b); })) == imp[k][l];
            if (!ok)
                throw Error(ErrorKind::internal_assertion, "termwise operation is not compatible with limit equivalence",
                    {x[0], x[1], x[2], y[0], y[1], y[2]});
        }
    raw.bot = class_of(constant(A.bot()));
    raw.top = class_of(constant(A.top()));
    raw.leq = std::move(leq);
    raw.join = std::move(join);
    raw.meet = std::move(meet);
    raw.imp = std::move(imp);

    std::vector<std::vector<Element>> constants(m);
    for (Element a = 0; a < n; ++a)
        constants[class_of(constant(a))].push_back(a);
    for (Element k = 0; k < m; ++k)
        raw.labels.push_back(A.label(class_label_source(A, constants[k])));

    CompletionResult res;
    res.sequence_count = n * n * n;
    res.cauchy_count = cauchy.size();
    res.members.resize(m);
    for (std::size_t i = 0; i < cauchy.size(); ++i)
        res.members[class_of_key.at(key[i])].push_back(detail::to_sequence(cauchy[i]));
    auto& r = res.clauses;
    try {
        res.completed = make_algebra(raw);
    } catch (const Error& e) {
        throw Error(ErrorKind::internal_assertion, std::string("completed tables are not a residuated lattice: ") + e.what(), e.witness());
    }
    const auto& C = *res.completed;

    // s-tilde: limit of s along any member.
    std::vector<Element> st(m);
    for (Element k = 0; k < m; ++k) {
        st[k] = s(reps[k]);
        for (const auto& x : res.members[k]) {
            const auto lim = seq_limit(L, map_terms(x, [&](Element e) { return s(e); }));
            detail::internal(lim && *lim == st[k], "s-tilde depends on the representative", {reps[k]});
        }
    }
    res.lifted_state = StateMap{res.completed, s.cod, st};
    res.rho_tilde = SimilarityTable{m, s.cod, rt, false};
    res.rho_tilde.equality = detail::compute_equality(res.rho_tilde);
    for (Element a = 0; a < n; ++a)
        res.embed.push_back(class_of(constant(a)));

    r.expect("completed_is_residuated_lattice", true, {}, std::to_string(m) + " classes from " + std::to_string(res.cauchy_count) + " Cauchy sequences");
    const bool l_inv = classify(L).involutive;
    if (l_inv)
        r.expect("completed_involutive_when_codomain_involutive", classify(C).involutive);
    else
        r.skip("completed_involutive_when_codomain_involutive", "codomain is not involutive");
    const auto cl = classify_state(res.lifted_state);
    r.expect("lifted_state_faithful_order_preserving_type_i", cl.op_type_i() && cl.faithful,
        cl.faithful_witness ? std::vector<Element>{*cl.faithful_witness} : std::vector<Element>{});
    bool commutes = true;
    for (Element a = 0; a < n; ++a)
        commutes = commutes && st[res.embed[a]] == s(a);
    const auto mv = morphism_violation(A, C, res.embed);
    r.expect("embedding_is_morphism_and_lifts_state", !mv && commutes, mv ? mv->witness : std::vector<Element>{},
        mv ? "embedding does not preserve " + mv->op : "");
    r.expect("embedding_injective_iff_faithful", res.embed_injective() == cs.faithful);
    bool rho_match = true;
    std::vector<Element> rho_witness;
    for (Element k = 0; k < m && rho_match; ++k)
        for (Element l = 0; l < m; ++l)
            if (rt(k, l) != st[C.bires(k, l)]) {
                rho_match = false;
                rho_witness = {k, l};
                break;
            }
    r.expect("rho_tilde_is_similarity_of_lifted_state", rho_match, rho_witness);
    ItemResult conv{"embedding_preserves_rho_convergence", ItemStatus::pass, 0, {}, {}};
    for (const auto& x : generate_sequences(n, 1, 2))
        for (Element a = 0; a < n; ++a) {
            if (!is_E_convergent(E, x, a))
                continue;
            ++conv.checked;
            const auto image = map_terms(x, [&](Element e) { return res.embed[e]; });
            if (!is_E_convergent(res.rho_tilde, image, res.embed[a]) && conv.status == ItemStatus::pass) {
                conv.status = ItemStatus::fail;
                conv.witness = {a};
            }
        }
    r.add(conv);

    res.iso_to_quotient = find_isomorphism(C, *quotient(kernel(s)).ops);
    r.expect("isomorphic_to_kernel_quotient", res.iso_to_quotient.has_value());
    return res;
}

struct UniversalResult {
    std::vector<Element> f_tilde;  // completed -> C
    std::size_t solutions = 0;     // morphisms g with m.g = s-tilde and g.embed = f
    [[nodiscard]] bool unique() const { return solutions == 1; }
};

/// Factor f : A -> C through the completion. m must be a faithful
/// order-preserving type I state on C into the same L, with m.f = s.
[[nodiscard]] inline UniversalResult universal_property_check(
    const StateMap& s, const CompletionResult& comp, const StateMap& m, std::span<const Element> f)
{
    const auto& A = *s.dom;
    const auto& C = *m.dom;
    const auto& L = *s.cod;
    detail::require(detail::same_tables(L, *m.cod), "m and s need the same codomain");
    const auto cm = classify_state(m);
    detail::require(cm.op_type_i() && cm.faithful, "m must be a faithful order-preserving type I state");
    if (auto v = morphism_violation(A, C, f))
        throw Error(ErrorKind::precondition_not_met, "f does not preserve " + v->op, v->witness);
    for (Element a = 0; a < A.size(); ++a)
        if (m(f[a]) != s(a))
            throw Error(ErrorKind::precondition_not_met, "m after f differs from s", {a});

    const auto Em = similarity_of_state(m);
    const auto& X = *comp.completed;
    UniversalResult out;
    out.f_tilde.resize(X.size());
    for (Element k = 0; k < X.size(); ++k) {
        std::optional<Element> value;
        for (const auto& x : comp.members[k]) {
            const auto image = map_terms(x, [&](Element e) { return f[e]; });
            std::optional<Element> lim;
            for (Element c = 0; c < C.size(); ++c)
                if (is_E_convergent(Em, image, c)) {
                    if (lim)
                        throw Error(ErrorKind::internal_assertion, "rho_m limit is not unique", {k, *lim, c});
                    lim = c;
                }
            if (!lim)
                throw Error(ErrorKind::no_such_morphism, "image of a Cauchy sequence does not converge in C", {k});
            if (value && *value != *lim)
                throw Error(ErrorKind::no_such_morphism, "limit depends on the representative", {k});
            value = lim;
        }
        out.f_tilde[k] = *value;
    }
    if (auto v = morphism_violation(X, C, out.f_tilde))
        throw Error(ErrorKind::no_such_morphism, "factor map does not preserve " + v->op, v->witness);
    auto factors = [&](std::span<const Element> g) {
        for (Element k = 0; k < X.size(); ++k)
            if (m(g[k]) != comp.lifted_state(k))
                return false;
        for (Element a = 0; a < A.size(); ++a)
            if (g[comp.embed[a]] != f[a])
                return false;
        return true;
    };
    if (!factors(out.f_tilde))
        throw Error(ErrorKind::no_such_morphism, "factor map does not commute with the states and embedding");
    for (const auto& g : all_morphisms(X, C))
        out.solutions += factors(g) ? 1 : 0;
    return out;
}

/// Text report: carrier, embedding, lifted state and clause verdicts.
[[nodiscard]] inline std::string completion_text(const StateMap& s, const CompletionResult& comp)
{
    const auto& A = *s.dom;
    const auto& X = *comp.completed;
    std::string out = "completed carrier (" + std::to_string(X.size()) + "):";
    for (Element k = 0; k < X.size(); ++k)
        out += " " + X.label(k);
    out += "\nembed:";
    for (Element a = 0; a < A.size(); ++a)
        out += " " + A.label(a) + "->" + X.label(comp.embed[a]);
    out += "\nlifted state:";
    for (Element k = 0; k < X.size(); ++k)
        out += " " + X.label(k) + "->" + s.cod->label(comp.lifted_state(k));
    out += "\nembedding injective: " + std::string(comp.embed_injective() ? "yes" : "no");
    out += "\nCauchy sequences: " + std::to_string(comp.cauchy_count) + " of " + std::to_string(comp.sequence_count) + "\n";
    out += comp.clauses.to_text();
    return out;
}

} // namespace resl
