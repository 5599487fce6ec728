#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share nothing with the library beyond the algebra type itself.

#include "resl/resl.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using resl::AlgebraPtr;
using resl::Element;
using resl::FiniteResiduatedLattice;

inline std::string fixture(const std::string& name) { return std::string(RESL_FIXTURES) + "/" + name; }

// Kind of the resl::Error thrown by fn, if any.
template <class F>
std::optional<resl::ErrorKind> error_kind(F&& fn)
{
    try {
        fn();
    } catch (const resl::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline AlgebraPtr r36() { return resl::load_algebra(fixture("r36.json")); }

// Carrier order of the bundled fixture: 0, a, b, c, d, 1.
enum R36 : Element { Z = 0, A_ = 1, B_ = 2, C_ = 3, D_ = 4, T_ = 5 };

// Rows of a state table written with fixture labels, e.g. "0 a 0 1 a 1".
inline std::vector<Element> r36_row(const std::string& text)
{
    static const std::map<char, Element> idx{{'0', 0}, {'a', 1}, {'b', 2}, {'c', 3}, {'d', 4}, {'1', 5}};
    std::vector<Element> t;
    for (char ch : text)
        if (ch != ' ')
            t.push_back(idx.at(ch));
    return t;
}

// Every map with s(0) = 0 and s(1) = 1, lexicographic in table order.
inline void for_each_endpoint_map(
    const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& L, const std::function<void(const std::vector<Element>&)>& fn)
{
    std::vector<Element> free;
    for (Element a = 0; a < A.size(); ++a)
        if (a != A.bot() && a != A.top())
            free.push_back(a);
    std::vector<Element> t(A.size(), 0);
    t[A.bot()] = L.bot();
    t[A.top()] = L.top();
    std::vector<Element> digits(free.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < free.size(); ++i)
            t[free[i]] = digits[i];
        fn(t);
        std::size_t k = free.size();
        while (k > 0 && ++digits[k - 1] == L.size())
            digits[--k] = 0;
        if (k == 0)
            return;
    }
}

inline std::vector<std::vector<Element>> sorted(std::vector<std::vector<Element>> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

// s(a -> b) = s(a) -> s(a meet b) for all a, b.
inline bool type_i(const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& L, const std::vector<Element>& s)
{
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (s[A.imp(a, b)] != L.imp(s[a], s[A.meet(a, b)]))
                return false;
    return true;
}

// s(a -> b) -> s(b) = s(b -> a) -> s(a) for all a, b.
inline bool type_ii(const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& L, const std::vector<Element>& s)
{
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (L.imp(s[A.imp(a, b)], s[b]) != L.imp(s[A.imp(b, a)], s[a]))
                return false;
    return true;
}

inline bool monotone(const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& L, const std::vector<Element>& s)
{
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (A.leq(a, b) && !L.leq(s[a], s[b]))
                return false;
    return true;
}

inline Element neg(const FiniteResiduatedLattice& X, Element a) { return X.imp(a, X.bot()); }
inline Element sum(const FiniteResiduatedLattice& X, Element a, Element b) { return X.imp(neg(X, a), neg(X, neg(X, b))); }
inline bool orth(const FiniteResiduatedLattice& X, Element a, Element b) { return X.leq(neg(X, neg(X, a)), neg(X, b)); }

inline bool riecan(const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& L, const std::vector<Element>& m)
{
    if (m[A.top()] != L.top())
        return false;
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (orth(A, a, b) && (!orth(L, m[a], m[b]) || m[sum(A, a, b)] != sum(L, m[a], m[b])))
                return false;
    return true;
}

// All maps A -> L with m(1) = 1 that are generalized Riecan; m(0) is free here.
inline std::vector<std::vector<Element>> riecan_maps(const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& L)
{
    std::vector<std::vector<Element>> out;
    std::vector<Element> t(A.size(), 0);
    std::function<void(Element)> rec = [&](Element i) {
        if (i == A.size()) {
            if (riecan(A, L, t))
                out.push_back(t);
            return;
        }
        if (i == A.top()) {
            t[i] = L.top();
            rec(i + 1);
            return;
        }
        for (Element v = 0; v < L.size(); ++v) {
            t[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// Unpruned generator: every order on {0..n-1} with 0 least and n-1 greatest
// that is a lattice, every commutative monotone associative product with
// identity n-1 that has residua. Deduplicated by explicit isomorphism search.
inline std::vector<AlgebraPtr> naive_catalog(std::size_t n)
{
    using resl::Matrix;
    const Element top = static_cast<Element>(n - 1);
    std::vector<std::pair<Element, Element>> pairs; // interior unordered pairs
    for (Element i = 1; i < top; ++i)
        for (Element j = i + 1; j < top; ++j)
            pairs.emplace_back(i, j);
    std::vector<AlgebraPtr> found;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (2 * pairs.size())); ++mask) {
        Matrix leq(n, std::vector<Element>(n, 0));
        for (Element i = 0; i < n; ++i) {
            leq[i][i] = 1;
            leq[0][i] = 1;
            leq[i][top] = 1;
        }
        bool ok = true;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto code = (mask >> (2 * p)) & 3;
            if (code == 3)
                ok = false;
            if (code == 1)
                leq[pairs[p].first][pairs[p].second] = 1;
            if (code == 2)
                leq[pairs[p].second][pairs[p].first] = 1;
        }
        for (Element a = 0; a < n && ok; ++a)
            for (Element b = 0; b < n; ++b)
                for (Element c = 0; c < n; ++c)
                    if (leq[a][b] && leq[b][c] && !leq[a][c])
                        ok = false;
        if (!ok)
            continue;
        // Least upper bound and greatest lower bound of every pair.
        Matrix join(n, std::vector<Element>(n)), meet(n, std::vector<Element>(n));
        for (Element a = 0; a < n && ok; ++a)
            for (Element b = 0; b < n && ok; ++b) {
                std::optional<Element> j, m;
                for (Element c = 0; c < n; ++c) {
                    if (leq[a][c] && leq[b][c]) {
                        bool least = true;
                        for (Element d = 0; d < n; ++d)
                            if (leq[a][d] && leq[b][d] && !leq[c][d])
                                least = false;
                        if (least)
                            j = c;
                    }
                    if (leq[c][a] && leq[c][b]) {
                        bool greatest = true;
                        for (Element d = 0; d < n; ++d)
                            if (leq[d][a] && leq[d][b] && !leq[d][c])
                                greatest = false;
                        if (greatest)
                            m = c;
                    }
                }
                if (!j || !m)
                    ok = false;
                else {
                    join[a][b] = *j;
                    meet[a][b] = *m;
                }
            }
        if (!ok)
            continue;
        std::vector<std::pair<Element, Element>> cells; // i <= j, both below top
        for (Element i = 0; i < top; ++i)
            for (Element j = i; j < top; ++j)
                cells.emplace_back(i, j);
        std::vector<Element> digits(cells.size(), 0);
        while (true) {
            Matrix t(n, std::vector<Element>(n));
            for (Element i = 0; i < n; ++i) {
                t[i][top] = i;
                t[top][i] = i;
            }
            for (std::size_t k = 0; k < cells.size(); ++k) {
                t[cells[k].first][cells[k].second] = digits[k];
                t[cells[k].second][cells[k].first] = digits[k];
            }
            bool good = true;
            for (Element a = 0; a < n && good; ++a)
                for (Element b = 0; b < n && good; ++b)
                    for (Element c = 0; c < n && good; ++c) {
                        if (t[t[a][b]][c] != t[a][t[b][c]])
                            good = false;
                        if (leq[a][b] && !leq[t[a][c]][t[b][c]])
                            good = false;
                    }
            Matrix imp(n, std::vector<Element>(n));
            for (Element a = 0; a < n && good; ++a)
                for (Element b = 0; b < n && good; ++b) {
                    std::optional<Element> best;
                    for (Element c = 0; c < n; ++c) {
                        if (!leq[t[c][a]][b])
                            continue;
                        bool above_all = true;
                        for (Element d = 0; d < n; ++d)
                            if (leq[t[d][a]][b] && !leq[d][c])
                                above_all = false;
                        if (above_all)
                            best = c;
                    }
                    if (!best)
                        good = false;
                    else
                        imp[a][b] = *best;
                }
            if (good) {
                resl::RawTables raw;
                raw.n = n;
                raw.bot = 0;
                raw.top = top;
                raw.leq = leq;
                raw.times = t;
                raw.imp = imp;
                for (Element i = 0; i < n; ++i)
                    raw.labels.push_back(std::to_string(i));
                auto A = resl::make_algebra(raw);
                bool fresh = true;
                for (const auto& B : found)
                    if (resl::find_isomorphism(*A, *B)) {
                        fresh = false;
                        break;
                    }
                if (fresh)
                    found.push_back(A);
            }
            std::size_t k = cells.size();
            while (k > 0 && ++digits[k - 1] == n)
                digits[--k] = 0;
            if (k == 0)
                break;
        }
    }
    return found;
}

} // namespace oracle
