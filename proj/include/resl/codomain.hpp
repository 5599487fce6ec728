#pragma once

#include "resl/lattice.hpp"

#include <concepts>

namespace resl {

// Anything a state can take values in: a finite algebra, or an infinite
// model such as the rational unit interval.
template <class L>
concept ResiduatedCodomain = requires(const L& l, typename L::value_type a) {
    { l.top() } -> std::convertible_to<typename L::value_type>;
    { l.bot() } -> std::convertible_to<typename L::value_type>;
    { l.join(a, a) } -> std::convertible_to<typename L::value_type>;
    { l.meet(a, a) } -> std::convertible_to<typename L::value_type>;
    { l.times(a, a) } -> std::convertible_to<typename L::value_type>;
    { l.imp(a, a) } -> std::convertible_to<typename L::value_type>;
    { l.leq(a, a) } -> std::convertible_to<bool>;
};

static_assert(ResiduatedCodomain<FiniteResiduatedLattice>);

namespace ops {

    template <ResiduatedCodomain L>
    [[nodiscard]] auto neg(const L& l, const typename L::value_type& a)
    {
        return l.imp(a, l.bot());
    }

    template <ResiduatedCodomain L>
    [[nodiscard]] auto bires(const L& l, const typename L::value_type& a, const typename L::value_type& b)
    {
        return l.meet(l.imp(a, b), l.imp(b, a));
    }

    template <ResiduatedCodomain L>
    [[nodiscard]] auto monus(const L& l, const typename L::value_type& a, const typename L::value_type& b)
    {
        return l.times(a, neg(l, b));
    }

    // a (+) b = not a -> not not b
    template <ResiduatedCodomain L>
    [[nodiscard]] auto oplus(const L& l, const typename L::value_type& a, const typename L::value_type& b)
    {
        return l.imp(neg(l, a), neg(l, neg(l, b)));
    }

    template <ResiduatedCodomain L>
    [[nodiscard]] bool perp(const L& l, const typename L::value_type& a, const typename L::value_type& b)
    {
        return l.leq(neg(l, neg(l, a)), neg(l, b));
    }

    template <ResiduatedCodomain L>
    [[nodiscard]] bool involutive_at(const L& l, const typename L::value_type& a)
    {
        return neg(l, neg(l, a)) == a;
    }

} // namespace ops

} // namespace resl
