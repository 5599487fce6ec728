#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace resl;
using namespace oracle;

namespace {

const std::vector<std::string> riecan_rows{"0a01a1", "0a0111", "0abcc1", "0abcd1", "0acbb1", "0a1001",
    "0101a1", "010111", "01bcc1", "01bcd1", "01cbb1", "011001"};
// Rows of the census above that are not among the type I states.
const std::vector<std::size_t> extra_rows{1, 2, 4, 5, 6, 9};

bool glivenko_brute(const FiniteResiduatedLattice& A)
{
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (neg(A, neg(A, A.imp(a, b))) != A.imp(a, neg(A, neg(A, b))))
                return false;
    return true;
}

std::vector<std::vector<Element>> tables(const std::vector<StateMap>& v)
{
    std::vector<std::vector<Element>> out;
    for (const auto& s : v)
        out.push_back(s.table);
    return out;
}

const std::vector<LatticeCatalogEntry>& catalog4()
{
    static const auto cat = build_catalog(4);
    return cat;
}

} // namespace

TEST(Regular, GoedelChainCollapsesToBoolean)
{
    const auto R = regular_algebra(share(goedel_chain(3)));
    EXPECT_EQ(R.elements, (std::vector<Element>{0, 2}));
    EXPECT_TRUE(find_isomorphism(*R.ops, boolean_algebra()).has_value());
    EXPECT_EQ(R.dn, (std::vector<Element>{0, 1, 1}));
}

TEST(Regular, InvolutiveAlgebraIsItsOwnRegularPart)
{
    const auto L4 = share(lukasiewicz_chain(4));
    const auto R = regular_algebra(L4);
    EXPECT_EQ(R.elements, identity_map(4));
    EXPECT_EQ(R.dn, identity_map(4));
}

TEST(Regular, GlivenkoDecidedByDefinition)
{
    for (const auto& e : catalog4()) {
        const bool g = glivenko_brute(*e.algebra);
        EXPECT_EQ(e.classification.glivenko, g) << e.id;
        EXPECT_EQ(error_kind([&] { (void)regular_algebra(e.algebra); }).has_value(), !g) << e.id;
        EXPECT_TRUE(g || !(e.classification.heyting || e.classification.bl)) << e.id;
    }
    const auto A = r36();
    const auto k = error_kind([&] { (void)regular_algebra(A); });
    EXPECT_EQ(k.has_value(), !glivenko_brute(*A));
    EXPECT_TRUE(!k || *k == ErrorKind::no_glivenko);
}

TEST(Oplus, FixtureValues)
{
    const auto A = r36();
    const auto o = oplus_structure(*A);
    EXPECT_EQ(o.oplus(B_, B_), B_);
    EXPECT_TRUE(o.orthogonal(B_, C_));
    EXPECT_FALSE(o.orthogonal(B_, B_));
    EXPECT_TRUE(o.lemma.passed()) << o.lemma.to_text();
    EXPECT_EQ(o.lemma.find("sum_with_top")->status, ItemStatus::recorded);
    for (Element a = 0; a < 6; ++a)
        EXPECT_EQ(o.oplus(a, T_), T_);
}

TEST(Oplus, LemmaOnEveryCatalogAlgebra)
{
    for (const auto& e : catalog4()) {
        const auto o = oplus_structure(*e.algebra);
        EXPECT_EQ(o.oplus(e.algebra->bot(), e.algebra->bot()), e.algebra->bot());
        EXPECT_TRUE(o.lemma.passed()) << e.id << "\n" << o.lemma.to_text();
        for (Element a = 0; a < e.algebra->size(); ++a)
            for (Element b = 0; b < e.algebra->size(); ++b) {
                EXPECT_EQ(o.oplus(a, b), sum(*e.algebra, a, b));
                EXPECT_EQ(o.orthogonal(a, b), orth(*e.algebra, a, b));
            }
    }
}

TEST(Riecan, FixtureMembership)
{
    const auto A = r36();
    for (const auto& row : riecan_rows)
        EXPECT_TRUE(is_generalized_riecan(make_state(A, A, r36_row(row)))) << row;
    EXPECT_FALSE(is_generalized_riecan(make_state(A, A, r36_row("011111"))));
}

TEST(Riecan, FixtureCensus)
{
    const auto A = r36();
    std::vector<std::vector<Element>> want;
    for (const auto& row : riecan_rows)
        want.push_back(r36_row(row));
    EXPECT_EQ(tables(enumerate_riecan(A, A)), want);
    EXPECT_EQ(tables(enumerate_riecan(A, A, {100'000'000, 4})), want);
    for (std::size_t k : extra_rows) {
        const auto c = classify_state_with_riecan(make_state(A, A, want[k]));
        EXPECT_FALSE(c.type_i) << riecan_rows[k];
        EXPECT_FALSE(c.type_ii) << riecan_rows[k];
        EXPECT_TRUE(c.riecan.value_or(false));
    }
}

TEST(Riecan, BooleanHasOnlyIdentity)
{
    const auto B = share(boolean_algebra());
    EXPECT_EQ(tables(enumerate_riecan(B, B)), (std::vector<std::vector<Element>>{{0, 1}}));
}

TEST(Riecan, MatchesBruteForceOracle)
{
    const auto A = r36();
    const auto B = share(boolean_algebra());
    EXPECT_EQ(tables(enumerate_riecan(A, B)), riecan_maps(*A, *B));
    for (const auto& e : catalog4()) {
        EXPECT_EQ(tables(enumerate_riecan(A, e.algebra)), riecan_maps(*A, *e.algebra)) << e.id;
        EXPECT_EQ(tables(enumerate_riecan(e.algebra, A)), riecan_maps(*e.algebra, *A)) << e.id;
        for (const auto& f : catalog4())
            EXPECT_EQ(tables(enumerate_riecan(e.algebra, f.algebra)), riecan_maps(*e.algebra, *f.algebra)) << e.id << " " << f.id;
    }
}

TEST(Riecan, EveryRiecanStateFixesZero)
{
    for (const auto& e : catalog4())
        for (const auto& f : catalog4())
            for (const auto& m : enumerate_riecan(e.algebra, f.algebra))
                EXPECT_EQ(m(e.algebra->bot()), f.algebra->bot());
}

TEST(Transfer, Fixture)
{
    const auto A = r36();
    const auto r = transfer_suite(A, A);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_EQ(r.find("order_preserving_type_i_is_riecan")->status, ItemStatus::pass);
}

TEST(Transfer, GlivenkoIntoInvolutive)
{
    const auto G3 = share(goedel_chain(3));
    const auto B = share(boolean_algebra());
    const auto r = transfer_suite(G3, B);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_EQ(r.find("glivenko_involutive_riecan_equals_order_preserving_type_i")->status, ItemStatus::pass);
    EXPECT_EQ(tables(enumerate_riecan(G3, B)), tables(enumerate_states(G3, B, StateClass::order_preserving_type_i)));
}

TEST(Transfer, InvolutiveDomain)
{
    const auto L4 = share(lukasiewicz_chain(4));
    const auto r = transfer_suite(L4, L4);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_EQ(r.find("involutive_riecan_keeping_negation_is_order_preserving_type_i")->status, ItemStatus::pass);
}

TEST(Transfer, SmallCatalog)
{
    for (const auto& e : catalog4())
        for (const auto& f : catalog4()) {
            const auto r = transfer_suite(e.algebra, f.algebra);
            EXPECT_TRUE(r.passed()) << e.id << " " << f.id << "\n" << r.to_text();
        }
}
