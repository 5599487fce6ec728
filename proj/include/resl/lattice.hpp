#pragma once

#include "resl/types.hpp"

#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace resl {

using Matrix = std::vector<std::vector<Element>>;

/// Unvalidated input. Either `leq` or both `join` and `meet` must be given;
/// `imp` may be omitted, in which case it is derived as max{c : c*a <= b}.
struct RawTables {
    std::size_t n = 0;
    Element bot = 0;
    Element top = 0;
    std::optional<Matrix> leq;
    std::optional<Matrix> join;
    std::optional<Matrix> meet;
    Matrix times;
    std::optional<Matrix> imp;
    std::vector<std::string> labels;
};

class FiniteResiduatedLattice;
using AlgebraPtr = std::shared_ptr<const FiniteResiduatedLattice>;

FiniteResiduatedLattice validate_lattice(const RawTables& raw);

/// A validated finite commutative integral residuated lattice with 0 != 1.
/// Immutable once built; only `validate_lattice` constructs one.
class FiniteResiduatedLattice {
public:
    using value_type = Element;

    [[nodiscard]] std::size_t size() const noexcept { return _n; }
    [[nodiscard]] Element bot() const noexcept { return _bot; }
    [[nodiscard]] Element top() const noexcept { return _top; }

    [[nodiscard]] bool leq(Element a, Element b) const noexcept { return _leq[a * _n + b] != 0; }
    [[nodiscard]] Element join(Element a, Element b) const noexcept { return _join(a, b); }
    [[nodiscard]] Element meet(Element a, Element b) const noexcept { return _meet(a, b); }
    [[nodiscard]] Element times(Element a, Element b) const noexcept { return _times(a, b); }
    [[nodiscard]] Element imp(Element a, Element b) const noexcept { return _imp(a, b); }

    [[nodiscard]] Element neg(Element a) const noexcept { return _imp(a, _bot); }
    [[nodiscard]] Element bires(Element a, Element b) const noexcept { return _meet(_imp(a, b), _imp(b, a)); }

    [[nodiscard]] const Table& join_table() const noexcept { return _join; }
    [[nodiscard]] const Table& meet_table() const noexcept { return _meet; }
    [[nodiscard]] const Table& times_table() const noexcept { return _times; }
    [[nodiscard]] const Table& imp_table() const noexcept { return _imp; }

    [[nodiscard]] const std::string& label(Element a) const { return _labels.at(a); }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return _labels; }

    /// Element whose label is `name`, if any.
    [[nodiscard]] std::optional<Element> find_label(std::string_view name) const
    {
        for (Element a = 0; a < _n; ++a)
            if (_labels[a] == name)
                return a;
        return std::nullopt;
    }

    [[nodiscard]] RawTables to_raw() const
    {
        RawTables raw;
        raw.n = _n;
        raw.bot = _bot;
        raw.top = _top;
        raw.labels = _labels;
        Matrix order(_n, std::vector<Element>(_n));
        Matrix t(_n, std::vector<Element>(_n));
        Matrix i(_n, std::vector<Element>(_n));
        for (Element a = 0; a < _n; ++a)
            for (Element b = 0; b < _n; ++b) {
                order[a][b] = leq(a, b) ? 1 : 0;
                t[a][b] = times(a, b);
                i[a][b] = imp(a, b);
            }
        raw.leq = std::move(order);
        raw.times = std::move(t);
        raw.imp = std::move(i);
        return raw;
    }

    friend bool operator==(const FiniteResiduatedLattice& x, const FiniteResiduatedLattice& y)
    {
        return x._n == y._n && x._bot == y._bot && x._top == y._top && x._leq == y._leq && x._times == y._times
            && x._imp == y._imp;
    }

private:
    friend FiniteResiduatedLattice validate_lattice(const RawTables& raw);
    FiniteResiduatedLattice() = default;

    std::size_t _n = 0;
    Element _bot = 0;
    Element _top = 0;
    std::vector<std::uint8_t> _leq;
    Table _join;
    Table _meet;
    Table _times;
    Table _imp;
    std::vector<std::string> _labels;
};

namespace detail {

    inline std::string witness_text(std::initializer_list<Element> w)
    {
        std::ostringstream out;
        out << "(";
        bool first = true;
        for (Element e : w) {
            out << (first ? "" : ",") << e;
            first = false;
        }
        out << ")";
        return out.str();
    }

    inline void check_square(const Matrix& m, std::size_t n, const char* name, Element bound)
    {
        if (m.size() != n)
            throw Error(ErrorKind::malformed_tables, std::string(name) + " must have n rows");
        for (const auto& row : m) {
            if (row.size() != n)
                throw Error(ErrorKind::malformed_tables, std::string(name) + " must have n columns");
            for (Element e : row)
                if (e >= bound)
                    throw Error(ErrorKind::malformed_tables, std::string(name) + " entry out of range");
        }
    }

    inline Table to_table(const Matrix& m)
    {
        Table t(m.size());
        for (Element a = 0; a < m.size(); ++a)
            for (Element b = 0; b < m.size(); ++b)
                t(a, b) = m[a][b];
        return t;
    }

} // namespace detail

inline FiniteResiduatedLattice validate_lattice(const RawTables& raw)
{
    using detail::witness_text;
    const std::size_t n = raw.n;
    if (n == 0)
        throw Error(ErrorKind::malformed_tables, "empty carrier");
    if (raw.bot >= n || raw.top >= n)
        throw Error(ErrorKind::malformed_tables, "bot/top out of range");
    detail::check_square(raw.times, n, "times", static_cast<Element>(n));
    if (raw.leq)
        detail::check_square(*raw.leq, n, "leq", 2);
    if (raw.join)
        detail::check_square(*raw.join, n, "join", static_cast<Element>(n));
    if (raw.meet)
        detail::check_square(*raw.meet, n, "meet", static_cast<Element>(n));
    if (raw.imp)
        detail::check_square(*raw.imp, n, "imp", static_cast<Element>(n));
    if (!raw.leq && !(raw.join && raw.meet))
        throw Error(ErrorKind::malformed_tables, "need leq or both join and meet");
    if (!raw.labels.empty() && raw.labels.size() != n)
        throw Error(ErrorKind::malformed_tables, "labels must have n entries");

    if (n == 1 || raw.bot == raw.top)
        throw Error(ErrorKind::bounds_wrong, "carrier must be nontrivial (0 != 1)", {raw.bot, raw.top});

    FiniteResiduatedLattice A;
    A._n = n;
    A._bot = raw.bot;
    A._top = raw.top;
    A._leq.assign(n * n, 0);
    auto le = [&](Element a, Element b) { return A._leq[a * n + b] != 0; };

    if (raw.leq) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                A._leq[a * n + b] = static_cast<std::uint8_t>((*raw.leq)[a][b]);
    } else {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                A._leq[a * n + b] = (*raw.meet)[a][b] == a ? 1 : 0;
    }

    // Partial order.
    for (Element a = 0; a < n; ++a)
        if (!le(a, a))
            throw Error(ErrorKind::not_a_lattice, "leq not reflexive at " + witness_text({a}), {a});
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (a != b && le(a, b) && le(b, a))
                throw Error(ErrorKind::not_a_lattice, "leq not antisymmetric at " + witness_text({a, b}), {a, b});
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (le(a, b) && le(b, c) && !le(a, c))
                    throw Error(
                        ErrorKind::not_a_lattice, "leq not transitive at " + witness_text({a, b, c}), {a, b, c});

    for (Element a = 0; a < n; ++a) {
        if (!le(raw.bot, a))
            throw Error(ErrorKind::bounds_wrong, "bot is not below " + witness_text({a}), {a});
        if (!le(a, raw.top))
            throw Error(ErrorKind::bounds_wrong, "top is not above " + witness_text({a}), {a});
    }

    // Binary sup and inf from the order, cross-checked against given tables.
    A._join = Table(n);
    A._meet = Table(n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            std::optional<Element> sup;
            std::optional<Element> inf;
            for (Element c = 0; c < n; ++c) {
                if (le(a, c) && le(b, c)) {
                    bool least = true;
                    for (Element d = 0; d < n && least; ++d)
                        if (le(a, d) && le(b, d) && !le(c, d))
                            least = false;
                    if (least)
                        sup = c;
                }
                if (le(c, a) && le(c, b)) {
                    bool greatest = true;
                    for (Element d = 0; d < n && greatest; ++d)
                        if (le(d, a) && le(d, b) && !le(d, c))
                            greatest = false;
                    if (greatest)
                        inf = c;
                }
            }
            if (!sup || !inf)
                throw Error(ErrorKind::not_a_lattice, "no sup/inf for " + witness_text({a, b}), {a, b});
            A._join(a, b) = *sup;
            A._meet(a, b) = *inf;
        }
    if (raw.join || raw.meet) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                if (raw.join && (*raw.join)[a][b] != A._join(a, b))
                    throw Error(
                        ErrorKind::not_a_lattice, "join table disagrees with order at " + witness_text({a, b}), {a, b});
                if (raw.meet && (*raw.meet)[a][b] != A._meet(a, b))
                    throw Error(
                        ErrorKind::not_a_lattice, "meet table disagrees with order at " + witness_text({a, b}), {a, b});
            }
    }

    // Commutative monoid with identity top.
    A._times = detail::to_table(raw.times);
    const Table& t = A._times;
    for (Element a = 0; a < n; ++a)
        if (t(a, raw.top) != a || t(raw.top, a) != a)
            throw Error(ErrorKind::not_a_monoid, "top is not the identity at " + witness_text({a}), {a});
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (t(a, b) != t(b, a))
                throw Error(ErrorKind::not_a_monoid, "times not commutative at " + witness_text({a, b}), {a, b});
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (t(t(a, b), c) != t(a, t(b, c)))
                    throw Error(
                        ErrorKind::not_a_monoid, "times not associative at " + witness_text({a, b, c}), {a, b, c});

    if (raw.imp) {
        A._imp = detail::to_table(*raw.imp);
    } else {
        A._imp = Table(n);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                std::optional<Element> best;
                for (Element c = 0; c < n; ++c)
                    if (le(t(c, a), b) && (!best || le(*best, c)))
                        best = c;
                bool greatest = best.has_value();
                for (Element c = 0; c < n && greatest; ++c)
                    if (le(t(c, a), b) && !le(c, *best))
                        greatest = false;
                if (!greatest)
                    throw Error(ErrorKind::residuation_fails, "no residuum for " + witness_text({a, b}), {a, b});
                A._imp(a, b) = *best;
            }
    }

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (le(a, A._imp(b, c)) != le(t(a, b), c))
                    throw Error(
                        ErrorKind::residuation_fails, "residuation fails at " + witness_text({a, b, c}), {a, b, c});

    if (raw.labels.empty()) {
        A._labels.reserve(n);
        for (Element a = 0; a < n; ++a)
            A._labels.push_back(std::to_string(a));
    } else {
        A._labels = raw.labels;
    }
    return A;
}

[[nodiscard]] inline AlgebraPtr make_algebra(const RawTables& raw)
{
    return std::make_shared<const FiniteResiduatedLattice>(validate_lattice(raw));
}

[[nodiscard]] inline AlgebraPtr share(FiniteResiduatedLattice A)
{
    return std::make_shared<const FiniteResiduatedLattice>(std::move(A));
}

} // namespace resl
