#pragma once

#include "resl/types.hpp"

#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace resl {

enum class ItemStatus { pass, fail, skipped, recorded };

[[nodiscard]] constexpr std::string_view to_string(ItemStatus s)
{
    switch (s) {
    case ItemStatus::pass: return "pass";
    case ItemStatus::fail: return "FAIL";
    case ItemStatus::skipped: return "skipped";
    case ItemStatus::recorded: return "recorded";
    }
    return "?";
}

struct ItemResult {
    std::string name;
    ItemStatus status = ItemStatus::pass;
    std::size_t checked = 0;
    std::vector<Element> witness;
    std::string note;
};

/// Ordered list of named checks. Failures are data, not exceptions.
class SuiteReport {
public:
    SuiteReport() = default;
    explicit SuiteReport(std::string title)
        : _title(std::move(title))
    {
    }

    void add(ItemResult item) { _items.push_back(std::move(item)); }

    void skip(std::string name, std::string reason)
    {
        _items.push_back({std::move(name), ItemStatus::skipped, 0, {}, std::move(reason)});
    }

    /// Single boolean fact.
    void expect(std::string name, bool ok, std::vector<Element> witness = {}, std::string note = {})
    {
        _items.push_back({std::move(name), ok ? ItemStatus::pass : ItemStatus::fail, 1,
            ok ? std::vector<Element>{} : std::move(witness), std::move(note)});
    }

    void append(const SuiteReport& other)
    {
        for (const auto& item : other._items)
            _items.push_back(item);
    }

    [[nodiscard]] const std::string& title() const noexcept { return _title; }
    [[nodiscard]] const std::vector<ItemResult>& items() const noexcept { return _items; }

    [[nodiscard]] std::size_t count(ItemStatus s) const
    {
        std::size_t k = 0;
        for (const auto& i : _items)
            k += i.status == s ? 1 : 0;
        return k;
    }

    [[nodiscard]] bool passed() const { return count(ItemStatus::fail) == 0; }

    [[nodiscard]] const ItemResult* find(std::string_view name) const
    {
        for (const auto& i : _items)
            if (i.name == name)
                return &i;
        return nullptr;
    }

    [[nodiscard]] std::string to_text() const
    {
        std::ostringstream out;
        if (!_title.empty())
            out << "# " << _title << "\n";
        for (const auto& i : _items) {
            out << to_string(i.status) << "  " << i.name;
            if (i.checked > 1)
                out << "  [" << i.checked << " cases]";
            if (!i.witness.empty()) {
                out << "  witness=(";
                for (std::size_t k = 0; k < i.witness.size(); ++k)
                    out << (k ? "," : "") << i.witness[k];
                out << ")";
            }
            if (!i.note.empty())
                out << "  " << i.note;
            out << "\n";
        }
        return out.str();
    }

private:
    std::string _title;
    std::vector<ItemResult> _items;
};

/// Evaluates `pred` on every tuple in {0..n-1}^arity in lexicographic order and
/// records the first failing tuple.
template <class Pred>
[[nodiscard]] ItemResult check_all(std::string name, std::size_t n, std::size_t arity, Pred&& pred)
{
    ItemResult r{std::move(name), ItemStatus::pass, 0, {}, {}};
    std::vector<Element> t(arity, 0);
    if (n == 0)
        return r;
    while (true) {
        ++r.checked;
        if (!pred(std::span<const Element>(t))) {
            r.status = ItemStatus::fail;
            r.witness = t;
            return r;
        }
        std::size_t k = arity;
        while (k > 0) {
            --k;
            if (++t[k] < n)
                break;
            t[k] = 0;
            if (k == 0)
                return r;
        }
        if (arity == 0)
            return r;
    }
}

} // namespace resl
