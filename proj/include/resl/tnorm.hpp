#pragma once

#include "resl/builders.hpp"
#include "resl/morphism.hpp"
#include "resl/report.hpp"
#include "resl/riecan.hpp"
#include "resl/state.hpp"

#include <boost/rational.hpp>

#include <array>
#include <charconv>
#include <cstdint>
#include <random>
#include <span>

namespace resl {

// Compare only Rational against Rational. With Boost 1.74 under C++20 the
// mixed rational == int overloads rewrite into each other and never return.
using Rational = boost::rational<std::int64_t>;

/// Always "p/q", including "0/1" and "1/1".
[[nodiscard]] inline std::string to_string(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "p/q" or a bare integer.
[[nodiscard]] inline Rational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
            throw Error(ErrorKind::parse_error, "not a rational: " + std::string(text));
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw Error(ErrorKind::parse_error, "zero denominator: " + std::string(text));
    return Rational(parse_int(text.substr(0, slash)), den);
}

enum class TNormKind { lukasiewicz, goedel, product };

inline constexpr std::array<TNormKind, 3> all_tnorm_kinds{TNormKind::lukasiewicz, TNormKind::goedel, TNormKind::product};

[[nodiscard]] inline std::string_view to_string(TNormKind k)
{
    switch (k) {
    case TNormKind::lukasiewicz: return "lukasiewicz";
    case TNormKind::goedel: return "goedel";
    case TNormKind::product: return "product";
    }
    return "?";
}

namespace detail {

    inline void require_unit(const Rational& a)
    {
        if (a < 0 || a > 1)
            throw Error(ErrorKind::out_of_unit_interval, "value outside [0,1]: " + to_string(a));
    }

} // namespace detail

[[nodiscard]] inline Rational tnorm_eval(TNormKind k, const Rational& a, const Rational& b)
{
    detail::require_unit(a);
    detail::require_unit(b);
    switch (k) {
    case TNormKind::lukasiewicz: return std::max(Rational(0), a + b - 1);
    case TNormKind::goedel: return std::min(a, b);
    case TNormKind::product: return a * b;
    }
    return {};
}

[[nodiscard]] inline Rational residuum_eval(TNormKind k, const Rational& a, const Rational& b)
{
    detail::require_unit(a);
    detail::require_unit(b);
    switch (k) {
    case TNormKind::lukasiewicz: return std::min(Rational(1), 1 - a + b);
    case TNormKind::goedel: return a <= b ? Rational(1) : b;
    case TNormKind::product: return a <= b ? Rational(1) : b / a;
    }
    return {};
}

/// [0,1] under one of the three t-norms, usable as a state codomain.
struct RationalUnitAlgebra {
    using value_type = Rational;
    TNormKind kind = TNormKind::lukasiewicz;

    [[nodiscard]] Rational top() const { return 1; }
    [[nodiscard]] Rational bot() const { return 0; }
    [[nodiscard]] Rational join(const Rational& a, const Rational& b) const { return std::max(a, b); }
    [[nodiscard]] Rational meet(const Rational& a, const Rational& b) const { return std::min(a, b); }
    [[nodiscard]] Rational times(const Rational& a, const Rational& b) const { return tnorm_eval(kind, a, b); }
    [[nodiscard]] Rational imp(const Rational& a, const Rational& b) const { return residuum_eval(kind, a, b); }
    [[nodiscard]] bool leq(const Rational& a, const Rational& b) const { return a <= b; }
};

static_assert(ResiduatedCodomain<RationalUnitAlgebra>);

[[nodiscard]] inline std::vector<Rational> unit_grid(std::int64_t q)
{
    std::vector<Rational> g;
    for (std::int64_t i = 0; i <= q; ++i)
        g.emplace_back(i, q);
    return g;
}

/// Residuation and t-norm axioms over every triple of the grid {i/q}.
[[nodiscard]] inline SuiteReport tnorm_grid_suite(TNormKind k, std::int64_t q)
{
    const RationalUnitAlgebra U{k};
    const auto g = unit_grid(q);
    SuiteReport r("t-norm " + std::string(to_string(k)) + " on grid 1/" + std::to_string(q));
    auto triples = [&](std::string name, auto&& pred) {
        ItemResult item{std::move(name), ItemStatus::pass, 0, {}, {}};
        for (Element i = 0; i < g.size(); ++i)
            for (Element j = 0; j < g.size(); ++j)
                for (Element l = 0; l < g.size(); ++l) {
                    ++item.checked;
                    if (item.status == ItemStatus::pass && !pred(g[i], g[j], g[l])) {
                        item.status = ItemStatus::fail;
                        item.witness = {i, j, l};
                    }
                }
        r.add(std::move(item));
    };
    triples("residuation", [&](const Rational& a, const Rational& b, const Rational& c) {
        return (U.times(a, b) <= c) == (a <= U.imp(b, c));
    });
    triples("associative", [&](const Rational& a, const Rational& b, const Rational& c) {
        return U.times(U.times(a, b), c) == U.times(a, U.times(b, c));
    });
    triples("monotone", [&](const Rational& a, const Rational& b, const Rational& c) {
        return !(a <= b) || U.times(a, c) <= U.times(b, c);
    });
    triples("commutative_with_identity", [&](const Rational& a, const Rational& b, const Rational&) {
        return U.times(a, b) == U.times(b, a) && U.times(a, 1) == a;
    });
    triples("closed_in_unit_interval", [&](const Rational& a, const Rational& b, const Rational&) {
        const auto t = U.times(a, b), i = U.imp(a, b);
        return t >= 0 && t <= 1 && i >= 0 && i <= 1;
    });
    return r;
}

/// Residuation on `samples` random triples of {i/q}; the generator is
/// seeded, so the report is reproducible.
[[nodiscard]] inline ItemResult tnorm_residuation_sample(TNormKind k, std::int64_t q, std::size_t samples, std::uint64_t seed)
{
    const RationalUnitAlgebra U{k};
    std::mt19937_64 rng(seed);
    const auto pick = [&] { return Rational(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q + 1)), q); };
    ItemResult item{"residuation_sampled_1/" + std::to_string(q), ItemStatus::pass, 0, {}, {}};
    for (std::size_t t = 0; t < samples; ++t) {
        const Rational a = pick(), b = pick(), c = pick();
        ++item.checked;
        if (item.status == ItemStatus::pass && (U.times(a, b) <= c) != (a <= U.imp(b, c))) {
            item.status = ItemStatus::fail;
            item.note = to_string(a) + " " + to_string(b) + " " + to_string(c);
        }
    }
    return item;
}

struct BosbachReport {
    bool bosbach = false;
    std::array<bool, 3> conditions{};           // the three additive identities
    std::array<std::vector<Element>, 3> witness; // first failing pair per identity
    SuiteReport theorems{"bosbach"};
};

/// The three additive identities for s : A -> [0,1], their consequences
/// and the coincidence with generalized states into Lukasiewicz [0,1].
[[nodiscard]] inline BosbachReport bosbach_check(const FiniteResiduatedLattice& A, std::span<const Rational> s)
{
    if (s.size() != A.size())
        throw Error(ErrorKind::malformed_tables, "state table must have one entry per domain element");
    for (const auto& v : s)
        detail::require_unit(v);
    const RationalUnitAlgebra U{TNormKind::lukasiewicz};
    require_endpoints(A, U, s);
    const std::size_t n = A.size();
    BosbachReport out;
    out.conditions = {true, true, true};
    auto rec = [&](std::size_t k, Element a, Element b, bool ok) {
        if (out.conditions[k] && !ok) {
            out.conditions[k] = false;
            out.witness[k] = {a, b};
        }
    };
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            rec(0, a, b, 1 + s[A.meet(a, b)] == s[A.join(a, b)] + s[A.bires(a, b)]);
            rec(1, a, b, 1 + s[A.meet(a, b)] == s[a] + s[A.imp(a, b)]);
            rec(2, a, b, s[a] + s[A.imp(a, b)] == s[b] + s[A.imp(b, a)]);
        }
    out.bosbach = out.conditions[1];
    auto& r = out.theorems;
    r.expect("additive_identities_agree", out.conditions[0] == out.conditions[1] && out.conditions[1] == out.conditions[2]);
    using T = std::span<const Element>;
    if (out.bosbach) {
        r.add(check_all("negation_is_complement", n, 1, [&](T t) { return s[A.neg(t[0])] == 1 - s[t[0]]; }));
        r.add(check_all("order_preserving", n, 2, [&](T t) { return !A.leq(t[0], t[1]) || s[t[0]] <= s[t[1]]; }));
        r.add(check_all("join_meet_sum", n, 2, [&](T t) {
            const Element a = t[0], b = t[1];
            return s[a] + s[b] == s[A.join(a, b)] + s[A.meet(a, b)];
        }));
        r.add(check_all("differences_are_lukasiewicz_residua", n, 2, [&](T t) {
            const Element a = t[0], b = t[1];
            const auto j = s[A.join(a, b)], m = s[A.meet(a, b)], d = s[A.bires(a, b)], x = s[a], i = s[A.imp(a, b)];
            return 1 - j + m == U.imp(j, m) && 1 - d + m == U.imp(d, m) && 1 - x + m == U.imp(x, m)
                && 1 - i + m == U.imp(i, m) && 1 - i + s[b] == U.imp(i, s[b]);
        }));
    } else {
        r.skip("bosbach_consequences", "map is not a Bosbach state");
    }
    const auto c = classify_map(A, U, s);
    r.expect("bosbach_iff_order_preserving_type_i", out.bosbach == c.op_type_i());
    r.expect("bosbach_iff_type_ii", out.bosbach == c.type_ii);
    return out;
}

[[nodiscard]] inline bool is_bosbach(const FiniteResiduatedLattice& A, std::span<const Rational> s)
{
    return bosbach_check(A, s).bosbach;
}

struct PseudoMetricTable {
    AlgebraPtr base;
    std::vector<Rational> values; // n x n, row-major
    bool metric = false;
    std::vector<Element> zero_pair; // distinct pair at distance 0 when not a metric

    [[nodiscard]] const Rational& operator()(Element a, Element b) const { return values[a * base->size() + b]; }
};

/// delta_s(a,b) = 1 - s(d(a,b)) for a Bosbach state s.
[[nodiscard]] inline PseudoMetricTable pseudo_metric(const AlgebraPtr& A, std::span<const Rational> s)
{
    detail::require(is_bosbach(*A, s), "pseudo-metric needs a Bosbach state");
    const auto& X = *A;
    const std::size_t n = X.size();
    PseudoMetricTable d{A, std::vector<Rational>(n * n), true, {}};
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            d.values[a * n + b] = 1 - s[X.bires(a, b)];
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            detail::internal(d(a, b) == d(b, a), "delta is not symmetric", {a, b});
            detail::internal(a != b || d(a, b) == Rational(0), "delta has a nonzero diagonal", {a});
            if (a != b && d(a, b) == Rational(0) && d.metric) {
                d.metric = false;
                d.zero_pair = {a, b};
            }
            for (Element c = 0; c < n; ++c)
                detail::internal(d(a, c) <= d(a, b) + d(b, c), "triangle inequality fails", {a, b, c});
        }
    bool faithful = true;
    for (Element a = 0; a < n; ++a)
        faithful = faithful && (s[a] != Rational(1) || a == X.top());
    detail::internal(d.metric == faithful, "metric flag disagrees with faithfulness");
    return d;
}

struct IsometryResult {
    bool commutes = false; // s2(h(a)) = s1(a) for all a
    bool isometry = false; // delta_s2(h a, h b) = delta_s1(a, b) for all a, b
};

[[nodiscard]] inline IsometryResult isometry_check(const AlgebraPtr& A1, std::span<const Rational> s1,
    const AlgebraPtr& A2, std::span<const Rational> s2, std::span<const Element> h)
{
    require_morphism(*A1, *A2, h);
    const auto d1 = pseudo_metric(A1, s1);
    const auto d2 = pseudo_metric(A2, s2);
    IsometryResult r{true, true};
    for (Element a = 0; a < A1->size(); ++a) {
        r.commutes = r.commutes && s2[h[a]] == s1[a];
        for (Element b = 0; b < A1->size(); ++b)
            r.isometry = r.isometry && d2(h[a], h[b]) == d1(a, b);
    }
    detail::internal(r.commutes == r.isometry, "state compatibility and isometry disagree");
    return r;
}

struct RiecanComparison {
    bool classical = false;   // m(1) = 1 and m(a (+) b) = m(a) + m(b) for orthogonal a, b
    bool generalized = false; // generalized Riecan into Lukasiewicz [0,1]
};

[[nodiscard]] inline RiecanComparison compare_riecan(const FiniteResiduatedLattice& A, std::span<const Rational> m)
{
    for (const auto& v : m)
        detail::require_unit(v);
    RiecanComparison out;
    out.classical = m[A.top()] == Rational(1);
    for (Element a = 0; a < A.size() && out.classical; ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (ops::perp(A, a, b) && m[ops::oplus(A, a, b)] != m[a] + m[b]) {
                out.classical = false;
                break;
            }
    out.generalized = is_generalized_riecan(A, RationalUnitAlgebra{TNormKind::lukasiewicz}, m);
    return out;
}

/// Every map A -> {i/q} with s(0) = 0 and s(1) = 1, in lexicographic order
/// of the interior values.
template <class F>
void for_each_grid_map(const FiniteResiduatedLattice& A, std::int64_t q, F&& fn)
{
    const auto g = unit_grid(q);
    std::vector<Element> free;
    for (Element a = 0; a < A.size(); ++a)
        if (a != A.bot() && a != A.top())
            free.push_back(a);
    std::vector<std::size_t> idx(free.size(), 0);
    std::vector<Rational> s(A.size());
    s[A.bot()] = 0;
    s[A.top()] = 1;
    while (true) {
        for (std::size_t i = 0; i < free.size(); ++i)
            s[free[i]] = g[idx[i]];
        fn(std::span<const Rational>(s));
        std::size_t k = free.size();
        while (k > 0 && ++idx[k - 1] == g.size())
            idx[--k] = 0;
        if (k == 0)
            return;
    }
}

/// Bosbach theorems over every grid-valued map on A, plus the classical
/// versus generalized Riecan comparison.
[[nodiscard]] inline SuiteReport grid_state_suite(const FiniteResiduatedLattice& A, std::int64_t q)
{
    SuiteReport r("grid-valued maps, step 1/" + std::to_string(q));
    ItemResult agree{"additive_identities_agree", ItemStatus::pass, 0, {}, {}};
    ItemResult coincide{"bosbach_op_type_i_type_ii_coincide", ItemStatus::pass, 0, {}, {}};
    ItemResult consequences{"bosbach_consequences", ItemStatus::pass, 0, {}, {}};
    ItemResult riecan{"classical_riecan_iff_generalized", ItemStatus::pass, 0, {}, {}};
    std::size_t bosbach = 0;
    auto fail = [](ItemResult& item, std::span<const Rational> s) {
        if (item.status != ItemStatus::pass)
            return;
        item.status = ItemStatus::fail;
        for (const auto& v : s)
            item.note += (item.note.empty() ? "" : ",") + to_string(v);
    };
    for_each_grid_map(A, q, [&](std::span<const Rational> s) {
        const auto b = bosbach_check(A, s);
        bosbach += b.bosbach ? 1 : 0;
        ++agree.checked;
        ++coincide.checked;
        ++riecan.checked;
        if (b.theorems.find("additive_identities_agree")->status != ItemStatus::pass)
            fail(agree, s);
        const bool co = b.theorems.find("bosbach_iff_order_preserving_type_i")->status == ItemStatus::pass
            && b.theorems.find("bosbach_iff_type_ii")->status == ItemStatus::pass;
        if (!co)
            fail(coincide, s);
        if (b.bosbach) {
            ++consequences.checked;
            if (!b.theorems.passed())
                fail(consequences, s);
        }
        const auto rc = compare_riecan(A, s);
        if (rc.classical != rc.generalized)
            fail(riecan, s);
    });
    coincide.note = coincide.note.empty() ? std::to_string(bosbach) + " Bosbach states" : coincide.note;
    r.add(agree);
    r.add(coincide);
    r.add(consequences);
    r.add(riecan);
    return r;
}

/// A grid-valued state as a state into the (q+1)-element Lukasiewicz chain,
/// which is the subalgebra {i/q} of Lukasiewicz [0,1].
[[nodiscard]] inline StateMap to_lukasiewicz_chain(const AlgebraPtr& A, std::span<const Rational> s, std::int64_t q)
{
    auto L = share(lukasiewicz_chain(static_cast<std::size_t>(q + 1)));
    std::vector<Element> t;
    for (const auto& v : s) {
        detail::require_unit(v);
        const Rational scaled = v * q;
        if (scaled.denominator() != 1)
            throw Error(ErrorKind::precondition_not_met, "value " + to_string(v) + " is not on the grid");
        t.push_back(static_cast<Element>(scaled.numerator()));
    }
    return StateMap{A, L, std::move(t)};
}

} // namespace resl
