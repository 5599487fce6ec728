#pragma once

#include "resl/derived.hpp"
#include "resl/lattice.hpp"

#include <array>
#include <map>
#include <string>

namespace resl {

struct ClassificationReport {
    bool mtl = false;
    bool bl = false;
    bool mv = false;
    bool heyting = false;
    bool goedel = false;
    bool product = false;
    bool involutive = false;
    bool divisible = false;
    bool glivenko = false;
    bool simple = false;
    bool chain = false;

    /// First counterexample for each flag that came out false.
    std::map<std::string, std::vector<Element>> witnesses;

    static constexpr std::array<const char*, 11> names{"mtl", "bl", "mv", "heyting", "goedel", "product",
        "involutive", "divisible", "glivenko", "simple", "chain"};

    [[nodiscard]] std::array<bool, 11> flags() const
    {
        return {mtl, bl, mv, heyting, goedel, product, involutive, divisible, glivenko, simple, chain};
    }
};

namespace detail {

    // First pair (a,b) with !pred(a,b), lexicographically.
    template <class P>
    std::optional<std::vector<Element>> first_failing_pair(std::size_t n, P&& pred)
    {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                if (!pred(a, b))
                    return std::vector<Element>{a, b};
        return std::nullopt;
    }

} // namespace detail

[[nodiscard]] inline ClassificationReport classify(const FiniteResiduatedLattice& A)
{
    const std::size_t n = A.size();
    const Element one = A.top();
    const Element zero = A.bot();
    ClassificationReport r;
    auto decide = [&r](const char* name, std::optional<std::vector<Element>> w) {
        if (w)
            r.witnesses[name] = std::move(*w);
        return !w.has_value();
    };

    r.chain = decide("chain", detail::first_failing_pair(n, [&](Element a, Element b) {
        return A.leq(a, b) || A.leq(b, a);
    }));
    const bool prelinear = decide("mtl", detail::first_failing_pair(n, [&](Element a, Element b) {
        return A.join(A.imp(a, b), A.imp(b, a)) == one;
    }));
    r.mtl = prelinear;
    r.divisible = decide("divisible", detail::first_failing_pair(n, [&](Element a, Element b) {
        return A.meet(a, b) == A.times(a, A.imp(a, b));
    }));
    r.bl = r.mtl && r.divisible;
    if (!r.bl && !r.witnesses.count("bl"))
        r.witnesses["bl"] = r.witnesses.count("mtl") ? r.witnesses["mtl"] : r.witnesses["divisible"];

    r.mv = decide("mv", detail::first_failing_pair(n, [&](Element a, Element b) {
        return A.imp(A.imp(a, b), b) == A.imp(A.imp(b, a), a);
    }));
    r.heyting = decide("heyting", detail::first_failing_pair(n, [&](Element a, Element b) {
        return A.times(a, b) == A.meet(a, b);
    }));
    r.goedel = r.bl && r.heyting;
    if (!r.goedel)
        r.witnesses["goedel"] = r.witnesses.count("bl") ? r.witnesses["bl"] : r.witnesses["heyting"];

    std::optional<std::vector<Element>> inv;
    for (Element a = 0; a < n && !inv; ++a)
        if (A.neg(A.neg(a)) != a)
            inv = std::vector<Element>{a};
    r.involutive = decide("involutive", inv);

    r.glivenko = decide("glivenko", detail::first_failing_pair(n, [&](Element a, Element b) {
        return A.neg(A.neg(A.imp(a, b))) == A.imp(a, A.neg(A.neg(b)));
    }));

    std::optional<std::vector<Element>> nonsimple;
    for (Element a = 0; a < n && !nonsimple; ++a)
        if (a != one && nilpotency_index(A, a) == 0)
            nonsimple = std::vector<Element>{a};
    r.simple = decide("simple", nonsimple);

    // Product: BL, a meet not a = 0, and the cancellation identity over triples.
    std::optional<std::vector<Element>> prod_fail;
    if (!r.bl)
        prod_fail = r.witnesses["bl"];
    for (Element a = 0; a < n && !prod_fail; ++a)
        if (A.meet(a, A.neg(a)) != zero)
            prod_fail = std::vector<Element>{a};
    for (Element a = 0; a < n && !prod_fail; ++a)
        for (Element b = 0; b < n && !prod_fail; ++b)
            for (Element c = 0; c < n && !prod_fail; ++c) {
                const Element lhs = A.times(A.neg(A.neg(c)), A.imp(A.times(a, c), A.times(b, c)));
                if (A.imp(lhs, A.imp(a, b)) != one)
                    prod_fail = std::vector<Element>{a, b, c};
            }
    r.product = decide("product", prod_fail);
    return r;
}

} // namespace resl
