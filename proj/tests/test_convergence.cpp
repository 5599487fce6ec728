#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace resl;
using namespace oracle;

namespace {

StateMap on_r36(const AlgebraPtr& A, const std::string& row) { return make_state(A, A, r36_row(row)); }

// x and y are identified by s exactly when s(d(x, y)) = 1.
bool same_kernel_class(const StateMap& s, Element x, Element y)
{
    return s(s.dom->bires(x, y)) == s.cod->top();
}

// The cycle of an eventually periodic sequence is what a tail sees.
bool cauchy_oracle(const StateMap& s, const Sequence& x)
{
    for (Element a : x.cycle)
        for (Element b : x.cycle)
            if (!same_kernel_class(s, a, b))
                return false;
    return true;
}

std::size_t kernel_class_count(const StateMap& s)
{
    std::vector<Element> reps;
    for (Element a = 0; a < s.dom->size(); ++a) {
        bool fresh = true;
        for (Element r : reps)
            fresh = fresh && !same_kernel_class(s, a, r);
        if (fresh)
            reps.push_back(a);
    }
    return reps.size();
}

const std::vector<LatticeCatalogEntry>& catalog4()
{
    static const auto cat = build_catalog(4);
    return cat;
}

std::vector<StateMap> op_type_i_self_states(const AlgebraPtr& A)
{
    return enumerate_states(A, A, StateClass::order_preserving_type_i);
}

} // namespace

TEST(Similarity, BiresiduumIsAnEquality)
{
    for (const auto& e : catalog4()) {
        const auto E = biresiduum_similarity(e.algebra);
        EXPECT_FALSE(similarity_violation(E).has_value()) << e.id;
        EXPECT_TRUE(E.equality) << e.id;
    }
    const auto A = r36();
    const auto E = biresiduum_similarity(A);
    EXPECT_EQ(E(C_, D_), A_);
    const auto id = similarity_of_state(make_state(A, A, identity_map(6)));
    for (Element a = 0; a < 6; ++a)
        for (Element b = 0; b < 6; ++b)
            EXPECT_EQ(id(a, b), E(a, b));
}

TEST(Similarity, StateSimilarityOnFixture)
{
    const auto A = r36();
    const auto s6 = on_r36(A, "011001");
    const auto E = similarity_of_state(s6);
    EXPECT_EQ(E(C_, Z), T_);
    EXPECT_FALSE(E.equality);
    EXPECT_FALSE(similarity_violation(E).has_value());
    for (Element a = 0; a < 6; ++a)
        for (Element b = 0; b < 6; ++b)
            EXPECT_EQ(E(a, b), s6(A->bires(a, b)));
    EXPECT_EQ(error_kind([&] { (void)similarity_of_state(on_r36(A, "0a01a1")); }), ErrorKind::precondition_not_met);
}

TEST(Sequences, Limits)
{
    const auto A = r36();
    EXPECT_EQ(seq_limit(*A, Sequence::constant(C_)), C_);
    const auto x = Sequence::stable({Z, B_}, A_);
    EXPECT_EQ(seq_limit(*A, x), A_);
    EXPECT_EQ(seq_limit(*A, Sequence::stable({T_, T_, D_}, A_)), A_);
    EXPECT_EQ(seq_limit(*A, Sequence{{}, {Z, T_}}), std::nullopt);
    // A cycle of repeated terms is still constant.
    EXPECT_EQ(seq_limit(*A, Sequence{{B_}, {D_, D_}}), D_);
}

TEST(Sequences, Presentations)
{
    const Sequence x{{Z}, {A_, B_}};
    const Sequence y{{Z, A_}, {B_, A_, B_, A_}};
    EXPECT_TRUE(x.same_terms(y));
    EXPECT_FALSE(x.same_terms(Sequence{{Z}, {B_, A_}}));
    const auto z = combine(x, Sequence::constant(C_), [](Element a, Element b) { return std::max(a, b); });
    for (std::size_t i = 0; i < 10; ++i)
        EXPECT_EQ(z.at(i), std::max(x.at(i), Element{C_}));
    EXPECT_EQ(generate_sequences(3, 1, 2).size(), (1 + 3) * (3 + 9));
}

TEST(Sequences, CauchyOnFixture)
{
    const auto A = r36();
    const auto s6 = on_r36(A, "011001");
    const auto E = similarity_of_state(s6);
    EXPECT_TRUE(is_E_cauchy(E, Sequence::constant(B_)));
    EXPECT_TRUE(is_E_cauchy(E, Sequence{{T_}, {Z, C_, D_}}));
    EXPECT_FALSE(is_E_cauchy(E, Sequence{{}, {C_, A_}}));
    EXPECT_TRUE(is_E_convergent(E, Sequence{{}, {Z, C_}}, D_));
    EXPECT_FALSE(is_E_convergent(E, Sequence{{}, {Z, C_}}, A_));
    const auto id = biresiduum_similarity(A);
    EXPECT_FALSE(is_E_cauchy(id, Sequence{{}, {Z, C_}}));
    EXPECT_TRUE(is_E_convergent(id, Sequence::stable({C_}, Z), Z));
}

TEST(Sequences, CauchyMatchesKernelClasses)
{
    const auto A = r36();
    for (const auto& s : op_type_i_self_states(A)) {
        const auto E = similarity_of_state(s);
        for (const auto& x : generate_sequences(6, 1, 3))
            EXPECT_EQ(is_E_cauchy(E, x), cauchy_oracle(s, x));
    }
    for (const auto& e : catalog4())
        for (const auto& s : op_type_i_self_states(e.algebra)) {
            const auto E = similarity_of_state(s);
            for (const auto& x : generate_sequences(e.algebra->size(), 1, 2))
                EXPECT_EQ(is_E_cauchy(E, x), cauchy_oracle(s, x)) << e.id;
        }
}

TEST(SimilaritySuite, FixtureAndSmallCatalog)
{
    const auto A = r36();
    for (const auto& s : op_type_i_self_states(A)) {
        const auto r = similarity_suite(s);
        EXPECT_TRUE(r.passed()) << r.to_text();
    }
    const auto skipped = similarity_suite(on_r36(A, "0a01a1"));
    EXPECT_EQ(skipped.find("similarity_items")->status, ItemStatus::skipped);
    for (const auto& e : catalog4())
        for (const auto& f : catalog4())
            for (const auto& s : enumerate_states(e.algebra, f.algebra, StateClass::order_preserving_type_i)) {
                const auto r = similarity_suite(s);
                EXPECT_TRUE(r.passed()) << e.id << " " << f.id << "\n" << r.to_text();
            }
}

TEST(Continuity, FixtureStates)
{
    const auto A = r36();
    const auto r4 = continuity_suite(on_r36(A, "01bcc1"));
    EXPECT_TRUE(r4.passed()) << r4.to_text();
    EXPECT_EQ(r4.find("rho_continuous")->status, ItemStatus::pass);
    const auto r1 = continuity_suite(on_r36(A, "0a01a1"));
    EXPECT_TRUE(r1.passed()) << r1.to_text();
    EXPECT_EQ(r1.find("rho_continuous")->status, ItemStatus::skipped);
    const auto f = continuity_flags(on_r36(A, "011001"), 2, 1);
    EXPECT_TRUE(f.up && f.down && f.rho);
    EXPECT_EQ(f.sequences, (1U + 6U + 36U) * 6U);
}

TEST(Continuity, SmallCatalog)
{
    for (const auto& e : catalog4())
        for (const auto& s : enumerate_states(e.algebra, e.algebra, StateClass::all)) {
            const auto r = continuity_suite(s, 2, 1);
            EXPECT_TRUE(r.passed()) << e.id << "\n" << r.to_text();
        }
}

TEST(Completion, TwoClassKernelGivesBoolean)
{
    const auto A = r36();
    const auto s6 = on_r36(A, "011001");
    const auto c = completion(s6);
    EXPECT_EQ(c.completed->size(), 2U);
    EXPECT_TRUE(find_isomorphism(*c.completed, boolean_algebra()).has_value());
    EXPECT_FALSE(c.embed_injective());
    EXPECT_TRUE(c.clauses.passed()) << c.clauses.to_text();
    ASSERT_TRUE(c.iso_to_quotient.has_value());
    EXPECT_EQ(c.sequence_count, 6U * 6U * 6U);
    // Cauchy for rho_s6: the two cycle terms share a class.
    EXPECT_EQ(c.cauchy_count, 6U * (3U * 3U + 3U * 3U));
    EXPECT_EQ(c.embed, (std::vector<Element>{0, 1, 1, 0, 0, 1}));
    EXPECT_EQ(c.lifted_state.table, (std::vector<Element>{Z, T_}));
    EXPECT_TRUE(classify_state(c.lifted_state).faithful);
    EXPECT_NE(completion_text(s6, c).find("embedding injective: no"), std::string::npos);
}

TEST(Completion, FaithfulStateGivesCopy)
{
    const auto A = r36();
    const auto c = completion(make_state(A, A, identity_map(6)));
    EXPECT_EQ(c.completed->size(), 6U);
    EXPECT_TRUE(c.embed_injective());
    EXPECT_TRUE(is_morphism(*A, *c.completed, c.embed));
    EXPECT_TRUE(c.clauses.passed()) << c.clauses.to_text();
}

TEST(Completion, TypeThreeState)
{
    const auto A = r36();
    const auto c = completion(on_r36(A, "010111"));
    EXPECT_EQ(c.completed->size(), 2U);
    EXPECT_TRUE(classify_state(c.lifted_state).faithful);
    EXPECT_EQ(c.embed, (std::vector<Element>{0, 1, 0, 1, 1, 1}));
    EXPECT_TRUE(c.clauses.passed()) << c.clauses.to_text();
}

TEST(Completion, RejectsNonMonotoneState)
{
    const auto A = r36();
    EXPECT_EQ(error_kind([&] { (void)completion(on_r36(A, "0a01a1")); }), ErrorKind::precondition_not_met);
}

TEST(Completion, ClassesMatchKernelOnSmallCatalog)
{
    for (const auto& e : catalog4())
        for (const auto& f : catalog4())
            for (const auto& s : enumerate_states(e.algebra, f.algebra, StateClass::order_preserving_type_i)) {
                const auto c = completion(s);
                EXPECT_EQ(c.completed->size(), kernel_class_count(s)) << e.id << " " << f.id;
                EXPECT_TRUE(c.clauses.passed()) << e.id << " " << f.id << "\n" << c.clauses.to_text();
                EXPECT_TRUE(c.iso_to_quotient.has_value());
                EXPECT_TRUE(is_morphism(*e.algebra, *c.completed, c.embed));
                for (Element a = 0; a < e.algebra->size(); ++a)
                    EXPECT_EQ(c.lifted_state(c.embed[a]), s(a));
            }
}

TEST(Universal, CompletionFactorsThroughItself)
{
    const auto A = r36();
    const auto s6 = on_r36(A, "011001");
    const auto c = completion(s6);
    const auto u = universal_property_check(s6, c, c.lifted_state, c.embed);
    EXPECT_EQ(u.f_tilde, identity_map(c.completed->size()));
    EXPECT_TRUE(u.unique());
}

TEST(Universal, BooleanTargetThroughQuotient)
{
    const auto A = r36();
    const auto s3 = on_r36(A, "010111");
    const auto c = completion(s3);
    const auto B = share(boolean_algebra());
    const auto m = make_state(B, A, std::vector<Element>{Z, T_});
    const std::vector<Element> f{0, 1, 0, 1, 1, 1};
    const auto u = universal_property_check(s3, c, m, f);
    EXPECT_EQ(u.f_tilde, (std::vector<Element>{0, 1}));
    EXPECT_TRUE(u.unique());
}

TEST(Universal, RejectsMapThatDoesNotFactorState)
{
    const auto A = r36();
    const auto s3 = on_r36(A, "010111");
    const auto c = completion(s3);
    const auto B = share(boolean_algebra());
    const auto m = make_state(B, A, std::vector<Element>{Z, T_});
    // The projection for s6 is a morphism onto B but m after it is s6, not s3.
    const std::vector<Element> f{0, 1, 1, 0, 0, 1};
    EXPECT_EQ(error_kind([&] { (void)universal_property_check(s3, c, m, f); }), ErrorKind::precondition_not_met);
}

TEST(Universal, SmallCatalogSelfStates)
{
    for (const auto& e : catalog4())
        for (const auto& s : op_type_i_self_states(e.algebra)) {
            const auto c = completion(s);
            const auto u = universal_property_check(s, c, c.lifted_state, c.embed);
            EXPECT_EQ(u.f_tilde, identity_map(c.completed->size())) << e.id;
            EXPECT_TRUE(u.unique()) << e.id;
        }
}
