#pragma once

#include "resl/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

namespace resl {

struct MorphismViolation {
    std::string op;
    std::vector<Element> witness;
};

/// First failure of f : A -> B to be a residuated lattice morphism.
[[nodiscard]] inline std::optional<MorphismViolation> morphism_violation(
    const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& B, std::span<const Element> f)
{
    if (f.size() != A.size())
        return MorphismViolation{"size", {}};
    for (Element e : f)
        if (e >= B.size())
            return MorphismViolation{"range", {}};
    if (f[A.bot()] != B.bot())
        return MorphismViolation{"bot", {A.bot()}};
    if (f[A.top()] != B.top())
        return MorphismViolation{"top", {A.top()}};
    const std::size_t n = A.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (f[A.join(a, b)] != B.join(f[a], f[b]))
                return MorphismViolation{"join", {a, b}};
            if (f[A.meet(a, b)] != B.meet(f[a], f[b]))
                return MorphismViolation{"meet", {a, b}};
            if (f[A.times(a, b)] != B.times(f[a], f[b]))
                return MorphismViolation{"times", {a, b}};
            if (f[A.imp(a, b)] != B.imp(f[a], f[b]))
                return MorphismViolation{"imp", {a, b}};
        }
    return std::nullopt;
}

[[nodiscard]] inline bool is_morphism(
    const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& B, std::span<const Element> f)
{
    return !morphism_violation(A, B, f).has_value();
}

inline void require_morphism(
    const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& B, std::span<const Element> f)
{
    if (auto v = morphism_violation(A, B, f))
        throw Error(ErrorKind::not_a_morphism, "map does not preserve " + v->op, v->witness);
}

/// Copy of A in which element a is renamed perm[a].
[[nodiscard]] inline FiniteResiduatedLattice relabel(const FiniteResiduatedLattice& A, std::span<const Element> perm)
{
    const std::size_t n = A.size();
    RawTables raw;
    raw.n = n;
    raw.bot = perm[A.bot()];
    raw.top = perm[A.top()];
    Matrix leq(n, std::vector<Element>(n));
    Matrix imp(n, std::vector<Element>(n));
    raw.times.assign(n, std::vector<Element>(n));
    raw.labels.assign(n, "");
    for (Element a = 0; a < n; ++a) {
        raw.labels[perm[a]] = A.label(a);
        for (Element b = 0; b < n; ++b) {
            leq[perm[a]][perm[b]] = A.leq(a, b) ? 1 : 0;
            raw.times[perm[a]][perm[b]] = perm[A.times(a, b)];
            imp[perm[a]][perm[b]] = perm[A.imp(a, b)];
        }
    }
    raw.leq = std::move(leq);
    raw.imp = std::move(imp);
    return validate_lattice(raw);
}

namespace detail {

    // Backtracking search over maps A -> B. `injective` restricts to
    // bijections. Calls `visit` for every full map consistent with all
    // checks; stops when visit returns false.
    inline void search_morphisms(const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& B, bool bijective,
        const std::function<bool(const std::vector<Element>&)>& visit)
    {
        const std::size_t n = A.size();
        const std::size_t m = B.size();
        if (bijective && n != m)
            return;
        constexpr Element unset = ~Element{0};
        std::vector<Element> f(n, unset);
        std::vector<bool> used(m, false);
        f[A.bot()] = B.bot();
        f[A.top()] = B.top();
        used[B.bot()] = true;
        used[B.top()] = true;
        std::vector<Element> order;
        for (Element a = 0; a < n; ++a)
            if (a != A.bot() && a != A.top())
                order.push_back(a);

        auto consistent = [&](Element a) {
            for (Element b = 0; b < n; ++b) {
                if (f[b] == unset)
                    continue;
                const Element pairs[2][2] = {{a, b}, {b, a}};
                for (const auto& p : pairs) {
                    const Element x = p[0], y = p[1];
                    const Element r[4] = {A.join(x, y), A.meet(x, y), A.times(x, y), A.imp(x, y)};
                    const Element s[4] = {B.join(f[x], f[y]), B.meet(f[x], f[y]), B.times(f[x], f[y]), B.imp(f[x], f[y])};
                    for (int k = 0; k < 4; ++k)
                        if (f[r[k]] != unset && f[r[k]] != s[k])
                            return false;
                }
            }
            return true;
        };
        bool stop = false;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (stop)
                return;
            if (i == order.size()) {
                if (is_morphism(A, B, f))
                    stop = !visit(f);
                return;
            }
            const Element a = order[i];
            for (Element v = 0; v < m && !stop; ++v) {
                if (bijective && used[v])
                    continue;
                f[a] = v;
                if (bijective)
                    used[v] = true;
                if (consistent(a))
                    rec(i + 1);
                if (bijective)
                    used[v] = false;
                f[a] = unset;
            }
        };
        // Endpoints themselves must already be consistent.
        if (consistent(A.bot()) && consistent(A.top()))
            rec(0);
    }

} // namespace detail

/// Some isomorphism A -> B, if one exists.
[[nodiscard]] inline std::optional<std::vector<Element>> find_isomorphism(
    const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& B)
{
    if (A.size() != B.size())
        return std::nullopt;
    std::optional<std::vector<Element>> found;
    detail::search_morphisms(A, B, true, [&](const std::vector<Element>& f) {
        found = f;
        return false;
    });
    return found;
}

/// Every residuated lattice morphism A -> B, in lexicographic order.
[[nodiscard]] inline std::vector<std::vector<Element>> all_morphisms(
    const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& B)
{
    std::vector<std::vector<Element>> out;
    detail::search_morphisms(A, B, false, [&](const std::vector<Element>& f) {
        out.push_back(f);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

[[nodiscard]] inline std::vector<Element> identity_map(std::size_t n)
{
    std::vector<Element> id(n);
    std::iota(id.begin(), id.end(), Element{0});
    return id;
}

} // namespace resl
