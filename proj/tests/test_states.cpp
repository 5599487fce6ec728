#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace resl;
using namespace oracle;

namespace {

const std::vector<std::vector<Element>> type_i_rows{
    r36_row("0a01a1"), r36_row("0abcd1"), r36_row("010111"),
    r36_row("01bcc1"), r36_row("01cbb1"), r36_row("011001")};

StateMap on_r36(const AlgebraPtr& A, const std::string& row) { return make_state(A, A, r36_row(row)); }

std::vector<std::vector<Element>> tables(const std::vector<StateMap>& v)
{
    std::vector<std::vector<Element>> out;
    for (const auto& s : v)
        out.push_back(s.table);
    return out;
}

const std::vector<LatticeCatalogEntry>& catalog6()
{
    static const auto cat = build_catalog(6);
    return cat;
}

} // namespace

TEST(Census, TypeOneOnFixture)
{
    const auto A = r36();
    EXPECT_EQ(tables(enumerate_states(A, A, StateClass::type_i)), type_i_rows);
}

TEST(Census, OrderPreservingTypeOneOnFixture)
{
    const auto A = r36();
    const std::vector<std::vector<Element>> want(type_i_rows.begin() + 1, type_i_rows.end());
    EXPECT_EQ(tables(enumerate_states(A, A, StateClass::order_preserving_type_i)), want);
}

TEST(Census, TypeTwoAndThreeOnFixture)
{
    const auto A = r36();
    const std::vector<std::vector<Element>> want(type_i_rows.begin() + 2, type_i_rows.end());
    EXPECT_EQ(tables(enumerate_states(A, A, StateClass::type_ii)), want);
    EXPECT_EQ(tables(enumerate_states(A, A, StateClass::type_iii)), want);
}

TEST(Census, ParallelMatchesSequential)
{
    const auto A = r36();
    for (auto cls : {StateClass::all, StateClass::type_i, StateClass::type_ii, StateClass::state_morphism})
        EXPECT_EQ(tables(enumerate_states(A, A, cls, {100'000'000, 1})), tables(enumerate_states(A, A, cls, {100'000'000, 4})));
}

TEST(Census, BudgetIsEnforced)
{
    const auto A = r36();
    EXPECT_EQ(error_kind([&] { (void)enumerate_states(A, A, StateClass::type_i, {10, 1}); }), ErrorKind::budget_exceeded);
}

TEST(Census, MatchesBruteForceOracle)
{
    std::vector<const LatticeCatalogEntry*> small, six;
    for (const auto& e : catalog6())
        (e.algebra->size() <= 5 ? small : six).push_back(&e);
    const auto fixture_alg = r36();
    auto check_pair = [](const AlgebraPtr& A, const AlgebraPtr& L) {
        std::vector<std::vector<Element>> t1, op, t2, sm;
        for_each_endpoint_map(*A, *L, [&](const std::vector<Element>& s) {
            const bool i = type_i(*A, *L, s);
            if (i)
                t1.push_back(s);
            if (i && monotone(*A, *L, s))
                op.push_back(s);
            if (type_ii(*A, *L, s))
                t2.push_back(s);
            bool hom = true;
            for (Element a = 0; a < A->size(); ++a)
                for (Element b = 0; b < A->size(); ++b)
                    hom = hom && s[A->join(a, b)] == L->join(s[a], s[b]) && s[A->meet(a, b)] == L->meet(s[a], s[b])
                        && s[A->imp(a, b)] == L->imp(s[a], s[b]);
            if (hom)
                sm.push_back(s);
        });
        EXPECT_EQ(tables(enumerate_states(A, L, StateClass::type_i)), t1);
        EXPECT_EQ(tables(enumerate_states(A, L, StateClass::order_preserving_type_i)), op);
        EXPECT_EQ(tables(enumerate_states(A, L, StateClass::type_ii)), t2);
        EXPECT_EQ(tables(enumerate_states(A, L, StateClass::state_morphism)), sm);
    };
    for (const auto* a : small)
        for (const auto* l : small)
            check_pair(a->algebra, l->algebra);
    for (const auto* e : six) {
        check_pair(fixture_alg, e->algebra);
        check_pair(e->algebra, fixture_alg);
    }
}

TEST(Conditions, TypeOneExamples)
{
    const auto A = r36();
    EXPECT_TRUE(check_type_i_conditions(on_r36(A, "0a01a1")).all());
    EXPECT_TRUE(check_type_i_conditions(make_state(A, A, identity_map(6))).all());
    const auto m1 = check_type_i_conditions(on_r36(A, "0a0111"));
    EXPECT_FALSE(m1.all());
    EXPECT_TRUE(m1.agree());
}

TEST(Conditions, TypeTwoExamples)
{
    const auto A = r36();
    EXPECT_TRUE(check_type_ii_conditions(on_r36(A, "010111")).all());
    const auto id = check_type_ii_conditions(make_state(A, A, identity_map(6)));
    EXPECT_FALSE(id.all());
    EXPECT_TRUE(id.agree());
    const auto B = share(boolean_algebra());
    EXPECT_TRUE(check_type_ii_conditions(make_state(B, B, identity_map(2))).all());
}

TEST(Conditions, EndpointsAreEnforced)
{
    const auto A = r36();
    EXPECT_EQ(error_kind([&] { (void)classify_state(on_r36(A, "1abcd1")); }), ErrorKind::endpoint_violation);
    EXPECT_EQ(error_kind([&] { (void)check_type_ii_conditions(on_r36(A, "0abcd0")); }), ErrorKind::endpoint_violation);
}

TEST(Classification, NonMonotoneTypeOne)
{
    const auto c = classify_state(on_r36(r36(), "0a01a1"));
    EXPECT_TRUE(c.type_i);
    EXPECT_FALSE(c.order_preserving);
    ASSERT_TRUE(c.order_witness.has_value());
    EXPECT_EQ(*c.order_witness, (std::vector<Element>{C_, A_}));
}

TEST(Classification, KernelNontrivialTypeThree)
{
    const auto c = classify_state(on_r36(r36(), "011001"));
    EXPECT_TRUE(c.type_i);
    EXPECT_TRUE(c.type_ii);
    EXPECT_TRUE(c.type_iii);
    EXPECT_TRUE(c.order_preserving);
    EXPECT_FALSE(c.faithful);
    EXPECT_EQ(c.faithful_witness, std::optional<Element>(A_));
}

TEST(Classification, IdentityAndGeneralLaws)
{
    for (const auto& e : catalog6()) {
        if (e.algebra->size() > 5)
            continue;
        const auto& A = e.algebra;
        const auto idc = classify_state(make_state(A, A, identity_map(A->size())));
        EXPECT_TRUE(idc.type_i && idc.order_preserving && idc.faithful && idc.state_morphism) << e.id;
        EXPECT_EQ(idc.type_ii, e.classification.mv) << e.id;
        for (const auto& f : catalog6()) {
            if (f.algebra->size() > 4 || A->size() > 4)
                continue;
            const bool mv_cod = f.classification.mv;
            EnumerationOptions opt;
            for (const auto& s : enumerate_states(A, f.algebra, StateClass::all, opt)) {
                const auto c = classify_state(s);
                EXPECT_TRUE(!c.type_ii || c.order_preserving) << e.id << " " << f.id;
                EXPECT_TRUE(!c.state_morphism || c.op_type_i()) << e.id << " " << f.id;
                EXPECT_TRUE(!mv_cod || c.op_type_i() == c.type_ii) << e.id << " " << f.id;
                EXPECT_TRUE(c.type_i_conditions.agree());
                EXPECT_TRUE(c.type_ii_conditions.agree());
            }
        }
    }
}

TEST(Suites, TypeOneConsequences)
{
    const auto A = r36();
    const auto r = consequence_suite_type_i(on_r36(A, "01bcc1"));
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_EQ(r.find("preserves_negation")->status, ItemStatus::pass);
    EXPECT_EQ(r.find("supermultiplicative")->status, ItemStatus::pass);
    const auto s1 = on_r36(A, "0a01a1");
    EXPECT_EQ(error_kind([&] { (void)order_preserving_consequences(s1); }), ErrorKind::precondition_not_met);
    EXPECT_EQ(consequence_suite_type_i(s1).find("order_preserving_items")->status, ItemStatus::skipped);
}

TEST(Suites, MvDomainItems)
{
    const auto L4 = share(lukasiewicz_chain(4));
    const auto r = consequence_suite_type_i(make_state(L4, L4, identity_map(4)));
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_EQ(r.find("mv_domain_sum_formula")->status, ItemStatus::pass);
    EXPECT_EQ(r.find("mv_codomain_forces_type_ii")->status, ItemStatus::pass);
}

TEST(Suites, TypeTwoConsequences)
{
    const auto A = r36();
    const auto r5 = consequence_suite_type_ii(on_r36(A, "01cbb1"));
    EXPECT_TRUE(r5.passed()) << r5.to_text();
    const auto r3 = consequence_suite_type_ii(on_r36(A, "010111"));
    EXPECT_EQ(r3.find("type_iii_double_residuum_symmetric")->status, ItemStatus::pass);
    EXPECT_EQ(error_kind([&] { (void)consequence_suite_type_ii(on_r36(A, "0abcd1")); }), ErrorKind::precondition_not_met);
}

TEST(Suites, EveryStateOnSmallCatalog)
{
    for (const auto& e : catalog6())
        for (const auto& f : catalog6()) {
            if (e.algebra->size() > 4 || f.algebra->size() > 4)
                continue;
            for (const auto& s : enumerate_states(e.algebra, f.algebra, StateClass::type_i))
                EXPECT_TRUE(consequence_suite_type_i(s).passed()) << e.id << " " << f.id;
            for (const auto& s : enumerate_states(e.algebra, f.algebra, StateClass::type_ii))
                EXPECT_TRUE(consequence_suite_type_ii(s).passed()) << e.id << " " << f.id;
        }
}

TEST(Families, HeytingSection)
{
    const auto G3 = share(goedel_chain(3));
    EXPECT_EQ(heyting_section_state(G3, 1).table, (std::vector<Element>{0, 2, 2}));
    EXPECT_EQ(heyting_section_state(G3, 2).table, identity_map(3));
    EXPECT_EQ(error_kind([&] { (void)heyting_section_state(G3, 0); }), ErrorKind::precondition_not_met);
    EXPECT_EQ(error_kind([&] { (void)heyting_section_state(r36(), 1); }), ErrorKind::precondition_not_met);
}

TEST(Families, ChainState)
{
    const auto G4 = share(goedel_chain(4));
    using F = std::vector<std::optional<Element>>;
    const auto s = chain_state(G4, 2, F{0, 1, std::nullopt, std::nullopt});
    EXPECT_EQ(s.table, (std::vector<Element>{0, 1, 3, 3}));
    EXPECT_TRUE(classify_state(s).op_type_i());
    EXPECT_EQ(chain_state(G4, 3, F{0, 1, 2, std::nullopt}).table, identity_map(4));
    EXPECT_EQ(error_kind([&] { (void)chain_state(G4, 3, F{0, 1, 1, std::nullopt}); }), ErrorKind::not_strict);
    EXPECT_EQ(error_kind([&] { (void)chain_state(share(lukasiewicz_chain(4)), 2, F{0, 1, std::nullopt, std::nullopt}); }),
        ErrorKind::precondition_not_met);
}

TEST(Families, CompositionWithMorphisms)
{
    const auto A = r36();
    const auto s3 = on_r36(A, "010111");
    const auto same = compose_with_morphism(s3, A, identity_map(6));
    EXPECT_EQ(same.table, s3.table);
    EXPECT_TRUE(classify_state(same).type_ii);

    const auto B = share(boolean_algebra());
    const std::vector<Element> inclusion{Z, T_};
    const auto id = make_state(A, A, identity_map(6));
    const auto composite = compose_with_morphism(id, B, inclusion);
    EXPECT_EQ(composite.table, inclusion);
    EXPECT_TRUE(classify_state(composite).op_type_i());

    const auto L4 = share(lukasiewicz_chain(4));
    const std::vector<Element> bad{Z, A_, A_, T_};
    EXPECT_EQ(error_kind([&] { (void)compose_with_morphism(id, L4, bad); }), ErrorKind::not_a_morphism);
}

TEST(StateFiles, LoadByPathAndInline)
{
    const auto s = load_state_file(fixture("s6_state.json"));
    EXPECT_EQ(s.table, r36_row("011001"));
    EXPECT_EQ(s.dom->size(), 6U);
    const auto A = r36();
    EXPECT_EQ(select_state(A, A, fixture("s6_state.json")).table, r36_row("011001"));
    EXPECT_EQ(select_state(A, A, "s6").table, r36_row("011001"));

    const auto path = std::filesystem::temp_directory_path() / "resl_inline_state.json";
    write_text_file(path, state_to_json(s).dump());
    EXPECT_EQ(load_state_file(path).table, s.table);
    const auto B = share(boolean_algebra());
    EXPECT_EQ(error_kind([&] { (void)select_state(B, B, path.string()); }), ErrorKind::precondition_not_met);

    write_text_file(path, R"({"dom": "r36.json", "table": [0, 1]})");
    EXPECT_EQ(error_kind([&] { (void)load_state_file(path); }), ErrorKind::parse_error);
    std::filesystem::remove(path);
}
