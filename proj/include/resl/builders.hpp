#pragma once

#include "resl/lattice.hpp"

#include <algorithm>
#include <string>

namespace resl {

namespace detail {

    inline std::vector<std::string> fraction_labels(std::size_t n)
    {
        std::vector<std::string> labels;
        const std::size_t q = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == 0)
                labels.emplace_back("0");
            else if (i == q)
                labels.emplace_back("1");
            else
                labels.push_back(std::to_string(i) + "/" + std::to_string(q));
        }
        return labels;
    }

    inline Matrix chain_order(std::size_t n)
    {
        Matrix leq(n, std::vector<Element>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                leq[i][j] = 1;
        return leq;
    }

} // namespace detail

/// The n-element Lukasiewicz chain {0, 1/(n-1), ..., 1}.
[[nodiscard]] inline FiniteResiduatedLattice lukasiewicz_chain(std::size_t n)
{
    RawTables raw;
    raw.n = n;
    raw.bot = 0;
    raw.top = static_cast<Element>(n - 1);
    raw.leq = detail::chain_order(n);
    raw.times.assign(n, std::vector<Element>(n));
    raw.imp = Matrix(n, std::vector<Element>(n));
    const long q = static_cast<long>(n) - 1;
    for (long i = 0; i <= q; ++i)
        for (long j = 0; j <= q; ++j) {
            raw.times[i][j] = static_cast<Element>(std::max(0L, i + j - q));
            (*raw.imp)[i][j] = static_cast<Element>(std::min(q, q - i + j));
        }
    raw.labels = detail::fraction_labels(n);
    return validate_lattice(raw);
}

/// The n-element Goedel chain: times is min, residuum is 1 or b.
[[nodiscard]] inline FiniteResiduatedLattice goedel_chain(std::size_t n)
{
    RawTables raw;
    raw.n = n;
    raw.bot = 0;
    raw.top = static_cast<Element>(n - 1);
    raw.leq = detail::chain_order(n);
    raw.times.assign(n, std::vector<Element>(n));
    raw.imp = Matrix(n, std::vector<Element>(n));
    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j) {
            raw.times[i][j] = std::min(i, j);
            (*raw.imp)[i][j] = i <= j ? raw.top : j;
        }
    raw.labels = detail::fraction_labels(n);
    return validate_lattice(raw);
}

/// The two-element Boolean algebra.
[[nodiscard]] inline FiniteResiduatedLattice boolean_algebra()
{
    return goedel_chain(2);
}

/// Direct product A x B, element (a,b) stored at index a*|B|+b.
[[nodiscard]] inline FiniteResiduatedLattice direct_product(const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& B)
{
    const std::size_t na = A.size();
    const std::size_t nb = B.size();
    const std::size_t n = na * nb;
    auto idx = [nb](Element a, Element b) { return static_cast<Element>(a * nb + b); };
    RawTables raw;
    raw.n = n;
    raw.bot = idx(A.bot(), B.bot());
    raw.top = idx(A.top(), B.top());
    Matrix leq(n, std::vector<Element>(n));
    raw.times.assign(n, std::vector<Element>(n));
    raw.imp = Matrix(n, std::vector<Element>(n));
    for (Element a1 = 0; a1 < na; ++a1)
        for (Element b1 = 0; b1 < nb; ++b1)
            for (Element a2 = 0; a2 < na; ++a2)
                for (Element b2 = 0; b2 < nb; ++b2) {
                    const Element x = idx(a1, b1);
                    const Element y = idx(a2, b2);
                    leq[x][y] = (A.leq(a1, a2) && B.leq(b1, b2)) ? 1 : 0;
                    raw.times[x][y] = idx(A.times(a1, a2), B.times(b1, b2));
                    (*raw.imp)[x][y] = idx(A.imp(a1, a2), B.imp(b1, b2));
                }
    raw.leq = std::move(leq);
    for (Element a = 0; a < na; ++a)
        for (Element b = 0; b < nb; ++b)
            raw.labels.push_back("(" + A.label(a) + "," + B.label(b) + ")");
    return validate_lattice(raw);
}

} // namespace resl
