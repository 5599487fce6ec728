#pragma once

#include "resl/lattice.hpp"

namespace resl {

struct DerivedOps {
    std::vector<Element> neg;
    Table bires;
    Table monus;
};

[[nodiscard]] inline DerivedOps derived(const FiniteResiduatedLattice& A)
{
    const std::size_t n = A.size();
    DerivedOps d{std::vector<Element>(n), Table(n), Table(n)};
    for (Element a = 0; a < n; ++a)
        d.neg[a] = A.neg(a);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            d.bires(a, b) = A.bires(a, b);
            d.monus(a, b) = A.times(a, d.neg[b]);
        }
    return d;
}

/// a^k under times, with a^0 = top.
[[nodiscard]] inline Element power(const FiniteResiduatedLattice& A, Element a, std::size_t k)
{
    Element r = A.top();
    for (std::size_t i = 0; i < k; ++i)
        r = A.times(r, a);
    return r;
}

/// Least k >= 1 with a^k = 0, or 0 if the powers never reach bot.
[[nodiscard]] inline std::size_t nilpotency_index(const FiniteResiduatedLattice& A, Element a)
{
    Element r = a;
    // Powers form a decreasing chain, so n steps suffice.
    for (std::size_t k = 1; k <= A.size(); ++k) {
        if (r == A.bot())
            return k;
        r = A.times(r, a);
    }
    return 0;
}

} // namespace resl
