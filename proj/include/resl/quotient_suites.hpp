#pragma once

#include "resl/quotient.hpp"

namespace resl {

/// Facts about Ker(s) and A/Ker(s). Each item runs only under its own
/// hypotheses on s, A and L; the rest are reported as skipped.
[[nodiscard]] inline SuiteReport quotient_theorem_suite(const StateMap& s)
{
    const auto& A = *s.dom;
    const auto& L = *s.cod;
    const auto c = classify_state(s);
    detail::require(c.op_type_i() || c.type_ii, "needs an order-preserving type I or a type II state");
    const auto ca = classify(A);
    const auto cl = classify(L);
    const auto F = kernel(s);
    const auto q = quotient(F);
    const auto cq = classify(*q.ops);
    const std::size_t n = A.size();
    using T = std::span<const Element>;
    SuiteReport r("kernel and quotient");

    r.expect("kernel_is_proper_filter", is_filter(A, F.members) && !F.contains(A.bot()));
    r.add(check_all("kernel_class_fixes_values", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        if (q.proj[a] != q.proj[b])
            return true;
        const Element v = s(a);
        return s(b) == v && s(A.join(a, b)) == v && s(A.meet(a, b)) == v;
    }));

    if (c.op_type_i()) {
        r.add(check_all("same_class_four_way_equivalence", n, 2, [&](T t) {
            const Element a = t[0], b = t[1];
            const Element j = s(A.join(a, b)), m = s(A.meet(a, b));
            const bool c1 = q.proj[a] == q.proj[b];
            const bool c2 = j == m;
            const bool c3 = s(a) == s(b) && s(b) == j;
            const bool c4 = s(a) == s(b) && s(b) == m;
            return c1 == c2 && c2 == c3 && c3 == c4;
        }));
    } else {
        r.skip("same_class_four_way_equivalence", "state is not order-preserving type I");
    }

    if (c.op_type_i() && cl.involutive)
        r.expect("involutive_codomain_gives_involutive_quotient", cq.involutive);
    else
        r.skip("involutive_codomain_gives_involutive_quotient", "needs order-preserving type I and involutive L");

    if (c.op_type_i() && ca.divisible && cl.involutive)
        r.expect("divisible_domain_gives_mv_quotient", cq.mv);
    else
        r.skip("divisible_domain_gives_mv_quotient", "needs order-preserving type I, divisible A, involutive L");

    if (c.op_type_i() && ca.mtl && cl.mv)
        r.expect("mtl_domain_mv_codomain_gives_mv_quotient", cq.mv);
    else
        r.skip("mtl_domain_mv_codomain_gives_mv_quotient", "needs order-preserving type I, MTL A, MV L");

    if (c.type_iii)
        r.expect("type_iii_gives_involutive_quotient", cq.involutive);
    else
        r.skip("type_iii_gives_involutive_quotient", "state is not type III");
    return r;
}

/// Relations between preservation of join (alpha), meet (beta), imp
/// (gamma) and times (delta), and their link to Ker(s).
[[nodiscard]] inline SuiteReport state_morphism_suite(const StateMap& s)
{
    SuiteReport r("state-morphism conditions");
    const auto c = classify_state(s);
    if (!c.op_type_i()) {
        r.skip("state_morphism_items", "state is not order-preserving type I");
        return r;
    }
    const auto& A = *s.dom;
    const auto& L = *s.cod;
    const auto ca = classify(A);
    const auto cl = classify(L);
    const auto F = kernel(s);
    const auto fp = filter_props(F);
    const auto cq = classify(*quotient(F).ops);
    const bool al = c.alpha(), be = c.beta(), ga = c.gamma(), de = c.delta();
    const bool sm = c.state_morphism;
    using T = std::span<const Element>;

    r.expect("join_preservation_gives_imp_preservation", !al || ga, c.preservation.witness[2]);
    r.expect("meet_preservation_gives_imp_preservation", !be || ga, c.preservation.witness[2]);
    if (cl.involutive) {
        r.expect("involutive_meet_gives_join", !be || al, c.preservation.witness[0]);
        r.expect("involutive_imp_gives_times", !ga || de, c.preservation.witness[3]);
    } else {
        r.skip("involutive_codomain_items", "codomain is not involutive");
    }
    if (ga)
        r.add(check_all("imp_preservation_fixes_negated_product", A.size(), 2, [&](T t) {
            const Element a = t[0], b = t[1];
            return L.neg(s(A.times(a, b))) == L.neg(L.times(s(a), s(b)));
        }));
    else
        r.skip("imp_preservation_fixes_negated_product", "state does not preserve imp");
    if (cl.mv)
        r.expect("mv_codomain_join_iff_imp", al == ga);
    else
        r.skip("mv_codomain_join_iff_imp", "codomain is not MV");
    if (ca.divisible && cl.mv)
        r.expect("divisible_mv_join_meet_imp_equivalent", al == be && be == ga);
    else
        r.skip("divisible_mv_join_meet_imp_equivalent", "needs divisible A and MV L");

    if (sm)
        r.expect("state_morphism_is_order_preserving_type_i", c.op_type_i());
    if (cq.chain)
        r.expect("chain_quotient_gives_state_morphism", sm);
    else
        r.skip("chain_quotient_gives_state_morphism", "quotient is not a chain");
    if (cq.mv && fp.maximal)
        r.expect("maximal_kernel_mv_quotient_gives_state_morphism", sm);
    else
        r.skip("maximal_kernel_mv_quotient_gives_state_morphism", "needs MV quotient and maximal kernel");
    if (cl.chain) {
        r.expect("chain_codomain_state_morphism_gives_chain_quotient", !sm || cq.chain);
        r.expect("chain_codomain_state_morphism_iff_chain_quotient", sm == cq.chain);
        r.expect("chain_codomain_state_morphism_gives_prime_kernel", !sm || fp.prime, fp.prime_witness);
        if (ca.mtl)
            r.expect("mtl_chain_state_morphism_iff_prime_kernel", sm == fp.prime, fp.prime_witness);
        else
            r.skip("mtl_chain_state_morphism_iff_prime_kernel", "domain is not MTL");
    } else {
        r.skip("chain_codomain_items", "codomain is not a chain");
    }
    if (cl.simple && sm)
        r.expect("simple_codomain_state_morphism_gives_maximal_kernel", fp.maximal, fp.maximal_witness);
    else
        r.skip("simple_codomain_state_morphism_gives_maximal_kernel", "needs simple L and a state-morphism");
    return r;
}

} // namespace resl
