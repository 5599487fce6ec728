#pragma once

#include "resl/classify.hpp"
#include "resl/report.hpp"

namespace resl {

// Exhaustive identity checks that every residuated lattice must pass, plus
// the prelinear and MV extras when the algebra has those flags.
[[nodiscard]] inline SuiteReport identity_suite(const FiniteResiduatedLattice& A)
{
    const std::size_t n = A.size();
    const Element one = A.top();
    const Element zero = A.bot();
    auto le = [&](Element x, Element y) { return A.leq(x, y); };
    auto neg = [&](Element x) { return A.neg(x); };
    auto d = [&](Element x, Element y) { return A.bires(x, y); };
    using T = std::span<const Element>;

    SuiteReport r("identities");

    // Basic arithmetic of residuation.
    r.add(check_all("imp_into_top", n, 1, [&](T t) { return A.imp(t[0], one) == one; }));
    r.add(check_all("imp_from_top", n, 1, [&](T t) { return A.imp(one, t[0]) == t[0]; }));
    r.add(check_all("order_via_imp", n, 2, [&](T t) { return le(t[0], t[1]) == (A.imp(t[0], t[1]) == one); }));
    r.add(check_all("imp_antitone_then_monotone", n, 3, [&](T t) {
        const Element a = t[0], b = t[1], c = t[2];
        return !le(a, b) || (le(A.imp(b, c), A.imp(a, c)) && le(A.imp(c, a), A.imp(c, b)));
    }));
    r.add(check_all("times_meet_bires_imp_chain", n, 2, [&](T t) {
        const Element a = t[0], b = t[1];
        return le(A.times(a, b), A.meet(a, b)) && le(A.meet(a, b), d(a, b)) && le(d(a, b), A.imp(a, b));
    }));
    r.add(check_all("b_below_a_imp_b", n, 2, [&](T t) { return le(t[1], A.imp(t[0], t[1])); }));
    r.add(check_all("modus_ponens", n, 2, [&](T t) { return le(A.times(t[0], A.imp(t[0], t[1])), t[1]); }));
    r.add(check_all("times_monotone", n, 4, [&](T t) {
        return !(le(t[0], t[2]) && le(t[1], t[3])) || le(A.times(t[0], t[1]), A.times(t[2], t[3]));
    }));
    r.add(check_all("exportation", n, 3, [&](T t) {
        const Element a = t[0], b = t[1], c = t[2];
        const Element x = A.imp(a, A.imp(b, c));
        return x == A.imp(A.times(a, b), c) && x == A.imp(b, A.imp(a, c));
    }));
    r.add(check_all("times_distributes_over_join", n, 3, [&](T t) {
        const Element a = t[0], b = t[1], c = t[2];
        return A.times(A.join(a, b), c) == A.join(A.times(a, c), A.times(b, c));
    }));
    r.add(check_all("imp_turns_join_into_meet", n, 3, [&](T t) {
        const Element a = t[0], b = t[1], c = t[2];
        return A.imp(A.join(a, b), c) == A.meet(A.imp(a, c), A.imp(b, c))
            && A.imp(c, A.meet(a, b)) == A.meet(A.imp(c, a), A.imp(c, b));
    }));
    // Finite families reduce to the binary case by induction; check all subsets anyway when small.
    if (n <= 10) {
        ItemResult fam{"imp_from_join_of_family", ItemStatus::pass, 0, {}, {}};
        for (std::uint32_t mask = 1; mask < (1u << n) && fam.status == ItemStatus::pass; ++mask) {
            Element sup = zero;
            for (Element a = 0; a < n; ++a)
                if (mask >> a & 1u)
                    sup = A.join(sup, a);
            for (Element c = 0; c < n; ++c) {
                ++fam.checked;
                Element inf = one;
                for (Element a = 0; a < n; ++a)
                    if (mask >> a & 1u)
                        inf = A.meet(inf, A.imp(a, c));
                if (A.imp(sup, c) != inf) {
                    fam.status = ItemStatus::fail;
                    fam.witness = {mask, c};
                    break;
                }
            }
        }
        r.add(fam);
    }

    // Biresiduum.
    r.add(check_all("bires_top_iff_equal", n, 2, [&](T t) { return (d(t[0], t[1]) == one) == (t[0] == t[1]); }));
    r.add(check_all("bires_symmetric", n, 2, [&](T t) { return d(t[0], t[1]) == d(t[1], t[0]); }));
    r.add(check_all("bires_transitive", n, 3, [&](T t) {
        return le(A.times(d(t[0], t[1]), d(t[1], t[2])), d(t[0], t[2]));
    }));
    r.add(check_all("bires_under_negation", n, 2, [&](T t) { return le(d(t[0], t[1]), d(neg(t[0]), neg(t[1]))); }));
    r.add(check_all("bires_compatible_with_ops", n, 4, [&](T t) {
        const Element a = t[0], b = t[1], x = t[2], y = t[3];
        const Element lhs = A.times(d(a, b), d(x, y));
        return le(lhs, d(A.join(a, x), A.join(b, y))) && le(lhs, d(A.meet(a, x), A.meet(b, y)))
            && le(lhs, d(A.times(a, x), A.times(b, y))) && le(lhs, d(A.imp(a, x), A.imp(b, y)))
            && le(lhs, d(d(a, x), d(b, y)));
    }));

    // Negation.
    r.expect("neg_of_bounds", neg(zero) == one && neg(one) == zero);
    r.add(check_all("below_neg_iff_product_zero", n, 2, [&](T t) {
        return le(t[0], neg(t[1])) == (A.times(t[0], t[1]) == zero);
    }));
    // The triple-negation law is asserted as not not not a = not a.
    r.add(check_all("double_neg_expansive_triple_neg_collapses", n, 1, [&](T t) {
        return le(t[0], neg(neg(t[0]))) && neg(neg(neg(t[0]))) == neg(t[0]);
    }));
    r.add(check_all("neg_antitone", n, 2, [&](T t) { return !le(t[0], t[1]) || le(neg(t[1]), neg(t[0])); }));
    r.add(check_all("contraposition", n, 2, [&](T t) {
        return le(A.imp(t[0], t[1]), A.imp(neg(t[1]), neg(t[0])));
    }));
    r.add(check_all("neg_of_product", n, 2, [&](T t) {
        const Element x = neg(A.times(t[0], t[1]));
        return x == A.imp(t[0], neg(t[1])) && x == A.imp(t[1], neg(t[0]));
    }));

    const ClassificationReport cls = classify(A);
    if (cls.mtl) {
        r.add(check_all("prelinear_join_formula", n, 2, [&](T t) {
            const Element a = t[0], b = t[1];
            return A.join(a, b) == A.meet(A.imp(A.imp(a, b), b), A.imp(A.imp(b, a), a));
        }));
    } else {
        r.skip("prelinear_join_formula", "algebra is not prelinear");
    }

    if (cls.mv) {
        auto op = [&](Element a, Element b) { return A.imp(neg(a), b); };
        r.add(check_all("mv_join_is_double_residuum", n, 2, [&](T t) {
            const Element a = t[0], b = t[1];
            return A.join(a, b) == A.imp(A.imp(a, b), b) && A.join(a, b) == A.imp(A.imp(b, a), a);
        }));
        r.add(check_all("mv_sum_with_negation", n, 1, [&](T t) { return op(t[0], neg(t[0])) == one; }));
        r.add(check_all("mv_de_morgan_product", n, 2, [&](T t) {
            return neg(A.times(t[0], t[1])) == op(neg(t[0]), neg(t[1]));
        }));
        r.add(check_all("mv_de_morgan_sum", n, 2, [&](T t) {
            return neg(op(t[0], t[1])) == A.times(neg(t[0]), neg(t[1]));
        }));
        r.add(check_all("mv_sum_distributes_over_meet", n, 3, [&](T t) {
            return op(t[0], A.meet(t[1], t[2])) == A.meet(op(t[0], t[1]), op(t[0], t[2]));
        }));
        r.add(check_all("mv_imp_into_join", n, 3, [&](T t) {
            return A.imp(t[2], A.join(t[0], t[1])) == A.join(A.imp(t[2], t[0]), A.imp(t[2], t[1]));
        }));
        r.add(check_all("mv_imp_from_meet", n, 3, [&](T t) {
            return A.imp(A.meet(t[0], t[1]), t[2]) == A.join(A.imp(t[0], t[2]), A.imp(t[1], t[2]));
        }));
        // Sum from the MV signature agrees with the general not a -> not not b.
        r.add(check_all("mv_sum_matches_general_sum", n, 2, [&](T t) {
            return op(t[0], t[1]) == A.imp(neg(t[0]), neg(neg(t[1])));
        }));
    } else {
        r.skip("mv_identities", "algebra is not MV");
    }
    return r;
}

/// Residuation law, exhaustively.
[[nodiscard]] inline bool residuation_holds(const FiniteResiduatedLattice& A)
{
    const std::size_t n = A.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (A.leq(a, A.imp(b, c)) != A.leq(A.times(a, b), c))
                    return false;
    return true;
}

} // namespace resl
