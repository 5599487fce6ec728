#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace resl {

/// Carrier elements are indices 0..n-1 into the algebra's tables.
using Element = std::uint32_t;

enum class ErrorKind {
    malformed_tables,
    not_a_lattice,
    not_a_monoid,
    residuation_fails,
    bounds_wrong,
    endpoint_violation,
    precondition_not_met,
    budget_exceeded,
    not_a_filter,
    not_a_morphism,
    not_strict,
    no_glivenko,
    no_such_morphism,
    out_of_unit_interval,
    internal_assertion,
    parse_error,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::malformed_tables: return "MalformedTables";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::not_a_monoid: return "NotAMonoid";
    case ErrorKind::residuation_fails: return "ResiduationFails";
    case ErrorKind::bounds_wrong: return "BoundsWrong";
    case ErrorKind::endpoint_violation: return "EndpointViolation";
    case ErrorKind::precondition_not_met: return "PreconditionNotMet";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::not_a_filter: return "NotAFilter";
    case ErrorKind::not_a_morphism: return "NotAMorphism";
    case ErrorKind::not_strict: return "NotStrict";
    case ErrorKind::no_glivenko: return "NoGlivenko";
    case ErrorKind::no_such_morphism: return "NoSuchMorphism";
    case ErrorKind::out_of_unit_interval: return "OutOfUnitInterval";
    case ErrorKind::internal_assertion: return "InternalAssertion";
    case ErrorKind::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Structured failure carrying the violated condition and, where one exists,
/// the lexicographically first witness tuple.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<Element> witness = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message)
        , _kind(kind)
        , _witness(std::move(witness))
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return _kind; }
    [[nodiscard]] const std::vector<Element>& witness() const noexcept { return _witness; }

private:
    ErrorKind _kind;
    std::vector<Element> _witness;
};

/// Dense n-by-n table of elements, row-major.
class Table {
public:
    Table() = default;
    explicit Table(std::size_t n, Element fill = 0)
        : _n(n)
        , _data(n * n, fill)
    {
    }

    [[nodiscard]] std::size_t size() const noexcept { return _n; }

    [[nodiscard]] Element operator()(Element a, Element b) const noexcept { return _data[a * _n + b]; }
    Element& operator()(Element a, Element b) noexcept { return _data[a * _n + b]; }

    [[nodiscard]] const std::vector<Element>& data() const noexcept { return _data; }

    friend bool operator==(const Table&, const Table&) = default;

private:
    std::size_t _n = 0;
    std::vector<Element> _data;
};

} // namespace resl
