#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>

using namespace resl;
using namespace oracle;

namespace {

const std::vector<LatticeCatalogEntry>& catalog6()
{
    static const auto cat = build_catalog(6);
    return cat;
}

std::vector<LatticeCatalogEntry> up_to(std::size_t order)
{
    std::vector<LatticeCatalogEntry> out;
    for (const auto& e : catalog6())
        if (e.algebra->size() <= order)
            out.push_back(e);
    return out;
}

const LatticeCatalogEntry& by_id(const std::vector<LatticeCatalogEntry>& cat, const std::string& id)
{
    for (const auto& e : cat)
        if (e.id == id)
            return e;
    throw std::runtime_error("no entry " + id);
}

std::filesystem::path scratch_dir(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("resl_test_" + name + "_" + std::to_string(std::random_device{}()));
    std::filesystem::remove_all(p);
    return p;
}

// Every endpoint map with the given property, counted by brute force.
template <class P>
std::size_t brute_count(const FiniteResiduatedLattice& A, const FiniteResiduatedLattice& L, P&& pred)
{
    std::size_t n = 0;
    for_each_endpoint_map(A, L, [&](const std::vector<Element>& s) { n += pred(s) ? 1 : 0; });
    return n;
}

} // namespace

TEST(Catalog, CountsPerOrder)
{
    std::map<std::size_t, std::size_t> count;
    for (const auto& e : catalog6())
        ++count[e.algebra->size()];
    EXPECT_EQ(count, (std::map<std::size_t, std::size_t>{{2, 1}, {3, 2}, {4, 7}, {5, 26}, {6, 129}}));
    EXPECT_EQ(catalog6().front().id, "2-1");
    EXPECT_EQ(enumerate_lattices(5).size(), 26U);
}

TEST(Catalog, MatchesUnprunedGenerator)
{
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto naive = naive_catalog(n);
        const auto cat = enumerate_lattices(n);
        ASSERT_EQ(naive.size(), cat.size()) << n;
        for (const auto& A : naive) {
            std::size_t hits = 0;
            for (const auto& e : cat)
                hits += find_isomorphism(*A, *e.algebra).has_value() ? 1 : 0;
            EXPECT_EQ(hits, 1U) << n;
        }
    }
}

TEST(Catalog, EntriesArePairwiseNonIsomorphic)
{
    const auto cat = up_to(5);
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j)
            if (cat[i].algebra->size() == cat[j].algebra->size()) {
                EXPECT_FALSE(find_isomorphism(*cat[i].algebra, *cat[j].algebra).has_value()) << cat[i].id << " " << cat[j].id;
            }
    for (const auto& e : catalog6())
        EXPECT_TRUE(classify(*e.algebra).flags() == e.classification.flags()) << e.id;
}

TEST(Catalog, ContainsKnownAlgebras)
{
    const auto& cat = catalog6();
    const auto r = find_in_catalog(cat, *r36());
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(cat[*r].algebra->size(), 6U);
    EXPECT_FALSE(cat[*r].classification.mtl);
    EXPECT_TRUE(find_isomorphism(*cat[*r].algebra, *r36()).has_value());
    for (auto A : {boolean_algebra(), lukasiewicz_chain(5), goedel_chain(6), direct_product(lukasiewicz_chain(3), boolean_algebra())})
        EXPECT_TRUE(find_in_catalog(cat, A).has_value());
}

TEST(Catalog, CanonicalFormIgnoresLabels)
{
    std::mt19937_64 rng(11);
    for (const auto& e : up_to(5)) {
        const auto& A = *e.algebra;
        auto perm = identity_map(A.size());
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto B = relabel(A, perm);
        EXPECT_EQ(canonical_form(B).first, e.canonical_form) << e.id;
        const auto C = canonical_algebra(B);
        EXPECT_EQ(canonical_form(*C).first, e.canonical_form) << e.id;
        EXPECT_EQ(C->bot(), 0U);
        EXPECT_EQ(C->top(), A.size() - 1);
    }
}

TEST(Catalog, SaveAndLoadRoundTrip)
{
    const auto dir = scratch_dir("catalog");
    const auto cat = up_to(5);
    save_catalog(dir, cat);
    EXPECT_TRUE(std::filesystem::exists(dir / "index.json"));
    EXPECT_TRUE(std::filesystem::exists(dir / "5-26.json"));
    const auto back = load_catalog(dir);
    ASSERT_EQ(back.size(), cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        EXPECT_EQ(back[i].id, cat[i].id);
        EXPECT_EQ(back[i].canonical_form, cat[i].canonical_form);
        EXPECT_EQ(back[i].classification.flags(), cat[i].classification.flags());
    }
    EXPECT_EQ(index_json(back).dump(), index_json(cat).dump());

    // A table edited on disk no longer matches its stored form.
    write_text_file(dir / "3-1.json", algebra_to_json(*by_id(cat, "3-2").algebra).dump());
    EXPECT_EQ(error_kind([&] { (void)load_catalog(dir); }), ErrorKind::parse_error);
    std::filesystem::remove_all(dir);
}

TEST(Catalog, DirectoryFromEnvironment)
{
    ::setenv("RESL_CATALOG_DIR", "/tmp/some/where", 1);
    EXPECT_EQ(catalog_dir(), std::filesystem::path("/tmp/some/where"));
    ::unsetenv("RESL_CATALOG_DIR");
    EXPECT_EQ(catalog_dir("fallback"), std::filesystem::path("fallback"));
}

TEST(Scan, TypeTwoNotTypeOneFindingsReverify)
{
    const auto cat = up_to(4);
    const auto r = run_scan("type2-subset-type1", cat, 4);
    EXPECT_EQ(r.pairs, cat.size() * cat.size());
    std::size_t type_ii_total = 0;
    for (const auto& A : cat)
        for (const auto& L : cat)
            type_ii_total += brute_count(*A.algebra, *L.algebra, [&](const std::vector<Element>& s) {
                return type_ii(*A.algebra, *L.algebra, s);
            });
    EXPECT_EQ(r.states, type_ii_total);
    for (const auto& f : r.findings) {
        const auto& A = by_id(cat, f.domain_id);
        const auto& L = by_id(cat, f.codomain_id);
        EXPECT_TRUE(type_ii(*A.algebra, *L.algebra, f.state));
        EXPECT_FALSE(classify_state(make_state(A.algebra, L.algebra, f.state)).type_i);
        ASSERT_EQ(f.witness.size(), 2U);
    }
    EXPECT_NE(r.csv().find("# an empty finding list is evidence, not proof"), std::string::npos);
}

TEST(Scan, TypeThreeJoinFindingsReverify)
{
    const auto cat = up_to(4);
    const auto r = run_scan("type3-join", cat, 4);
    for (const auto& f : r.findings) {
        const auto& A = *by_id(cat, f.domain_id).algebra;
        const auto& s = f.state;
        const Element a = f.witness[0], b = f.witness[1];
        const Element x = s[A.imp(A.imp(a, b), b)], y = s[A.imp(A.imp(b, a), a)], j = s[A.join(a, b)];
        EXPECT_TRUE(x != y || y != j);
        EXPECT_EQ(f.failed, x == y ? "join" : "double-residuum");
        const auto& L = *by_id(cat, f.codomain_id).algebra;
        EXPECT_TRUE(type_ii(A, L, s) && type_i(A, L, s));
    }
    EXPECT_NE(r.csv().find("evidence, not proof"), std::string::npos);
}

TEST(Scan, MvCorollary)
{
    const auto cat = up_to(4);
    const auto r = run_scan("mv-corollary", cat, 4);
    EXPECT_EQ(r.pairs, cat.size());
    for (const auto& f : r.findings) {
        const auto& e = by_id(cat, f.domain_id);
        const bool all_ii = std::ranges::all_of(enumerate_states(e.algebra, e.algebra, StateClass::order_preserving_type_i),
            [](const StateMap& s) { return classify_state(s).type_ii; });
        EXPECT_NE(all_ii, e.classification.mv) << e.id;
    }
    for (auto A : {share(boolean_algebra()), share(lukasiewicz_chain(4))}) {
        for (const auto& s : enumerate_states(A, A, StateClass::order_preserving_type_i))
            EXPECT_TRUE(classify_state(s).type_ii);
    }
    const auto R = r36();
    const auto states = enumerate_states(R, R, StateClass::order_preserving_type_i);
    EXPECT_FALSE(std::ranges::all_of(states, [](const StateMap& s) { return classify_state(s).type_ii; }));
    EXPECT_EQ(error_kind([&] { (void)run_scan("no-such-problem", cat, 4); }), ErrorKind::parse_error);
}

TEST(Scan, ParallelMatchesSequential)
{
    const auto cat = up_to(4);
    EnumerationOptions par;
    par.jobs = 4;
    for (const char* p : scan_problems) {
        const auto a = run_scan(p, cat, 4).csv();
        EXPECT_EQ(a, run_scan(p, cat, 4, par).csv()) << p;
        EXPECT_EQ(a, run_scan(p, cat, 4).csv()) << p;
    }
    CatalogOptions copt;
    copt.jobs = 4;
    EXPECT_EQ(index_json(build_catalog(5, copt)).dump(), index_json(up_to(5)).dump());
}
