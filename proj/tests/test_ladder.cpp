#include <gtest/gtest.h>
#include <qweb/ladder.hpp>

using namespace qweb;

namespace {

std::vector<int> target_of(const std::optional<Web>& w) {
    EXPECT_TRUE(w.has_value());
    return w ? w->target() : std::vector<int>{};
}

} // namespace

TEST(Cartan, TypeTables) {
    CartanDatum c3 = CartanDatum::make(LieType::C, 3);
    std::vector<std::vector<int>> c3a{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
    EXPECT_EQ(c3.a, c3a);
    EXPECT_EQ(c3.d, (std::vector<int>{1, 1, 2}));

    CartanDatum d4 = CartanDatum::make(LieType::D, 4);
    std::vector<std::vector<int>> d4a{
        {2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    EXPECT_EQ(d4.a, d4a);
    EXPECT_EQ(d4.d, (std::vector<int>{1, 1, 1, 1}));

    // so_4 is a product of two commuting ranks.
    CartanDatum d2 = CartanDatum::make(LieType::D, 2);
    EXPECT_EQ(d2.a[0][1], 0);
    EXPECT_EQ(d2.a[1][0], 0);

    CartanDatum a2 = CartanDatum::make(LieType::A, 2);
    EXPECT_EQ(a2.a, (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));

    EXPECT_THROW(CartanDatum::make(LieType::D, 1), LadderError);
}

TEST(Cartan, Pairings) {
    CartanDatum c2 = CartanDatum::make(LieType::C, 2);
    EXPECT_EQ(c2.pairing(1, {3, 1}), 2);  // lam_1 - lam_2
    EXPECT_EQ(c2.pairing(2, {3, 1}), 1);  // lam_2
    CartanDatum d3 = CartanDatum::make(LieType::D, 3);
    EXPECT_EQ(d3.pairing(3, {0, 2, -1}), 1); // lam_2 + lam_3
}

TEST(Ladder, ObjectsAndRungs) {
    // Empty word: just the shifted object.
    auto obj = ladder_so({{0, 0}, {}}, 4);
    ASSERT_TRUE(obj.has_value());
    EXPECT_EQ(obj->source, (std::vector<int>{2, 2}));
    EXPECT_TRUE(obj->slices.empty());

    auto rung = ladder_so({{0, 0}, {uqE(1)}}, 4);
    EXPECT_EQ(target_of(rung), (std::vector<int>{3, 1}));

    auto sp_obj = ladder_sp({{1, 1}, {}}, 2);
    ASSERT_TRUE(sp_obj.has_value());
    EXPECT_EQ(sp_obj->source, (std::vector<int>{2, 2}));
}

TEST(Ladder, ZeroRule) {
    // Second F_1 would drive the first label below zero.
    EXPECT_FALSE(ladder_so({{0, 0}, {uqF(1), uqF(1)}}, 2).has_value());
    // Negative shifted label already at the object.
    EXPECT_FALSE(ladder_so({{-2, 0}, {}}, 2).has_value());
    // Dot gadget needs label at least 2.
    EXPECT_FALSE(ladder_sp({{0}, {uqF(1)}}, 2).has_value());
    // Pair gadget needs both labels positive.
    EXPECT_FALSE(ladder_so({{-1, -1}, {uqF(2)}}, 2).has_value());
}

TEST(Ladder, GadgetShapes) {
    auto up = ladder_sp({{0}, {uqE(1)}}, 2);
    ASSERT_TRUE(up.has_value());
    EXPECT_EQ(up->source, (std::vector<int>{1}));
    EXPECT_EQ(up->target(), (std::vector<int>{3}));

    auto pair = ladder_so({{0, 0}, {uqE(2)}}, 2);
    EXPECT_EQ(target_of(pair), (std::vector<int>{2, 2}));

    // Divided powers ride thick rungs for the A-type letters only.
    auto thick = ladder_so({{1, 1}, {uqE(1, 2)}}, 4);
    EXPECT_EQ(target_of(thick), (std::vector<int>{5, 1}));
    // E_1^(2) needs the donor strand to carry at least 2: dead below that.
    EXPECT_EQ(ladder_so({{1, -1}, {uqE(1, 2)}}, 4), std::nullopt);
    EXPECT_THROW(ladder_so({{0, 0}, {uqE(2, 2)}}, 4), LadderError);
}

TEST(Ladder, Guards) {
    EXPECT_THROW(ladder_so({{0}, {}}, 2), LadderError);
    EXPECT_THROW(ladder_so({{0, 0}, {}}, 3), LadderError);
    EXPECT_THROW(ladder_sp({{0}, {uqE(2)}}, 2), LadderError);
    EXPECT_THROW(ladder(LieType::A, {{0, 0}, {}}, 2), LadderError);
}

TEST(Howe, EmptyWordIsIdentity) {
    EvalCache cache;
    auto m = howe(FunctorKind::BDExt, {{0, 0}, {}}, 2, cache);
    EXPECT_EQ(m.rows(), 4);
    EXPECT_EQ(m.cols(), 4);
    EXPECT_TRUE(m == SparseMat<RatFunc>::identity(4));
}

TEST(Howe, ThinRungMatchesGenerator) {
    EvalCache cache;
    auto m = howe(FunctorKind::BDExt, {{0, 0}, {uqE(1)}}, 2, cache);
    Evaluator& ev = cache.get(Flavor::Ext, 2);
    EXPECT_TRUE(m == ev.gen_matrix(WebFamily::CupCap, GenKind::Merge, 1, 1));
}

TEST(Howe, StartDotValue) {
    EvalCache cache;
    auto m = howe(FunctorKind::CExt, {{-1}, {uqE(1)}}, 2, cache);
    ASSERT_EQ(m.rows(), 1);
    ASSERT_EQ(m.cols(), 1);
    EXPECT_EQ(m.get(0, 0).str(), "1");
}

TEST(Howe, ZeroWordHasZeroMatrix) {
    EvalCache cache;
    auto m = howe(FunctorKind::BDExt, {{0, 0}, {uqF(1), uqF(1)}}, 2, cache);
    EXPECT_EQ(m.cols(), 4);
    EXPECT_EQ(m.rows(), 0);
    EXPECT_THROW(howe(FunctorKind::CExt, {{0}, {}}, 3, cache), LadderError);
}

TEST(UqCheck, CommutatorScalarIsDetected) {
    // Drop the [<h,lambda>] term on purpose: the runner must produce a witness.
    EvalCache cache;
    uqdetail::UqInstance bad;
    bad.tag = "lambda=(1,0)";
    auto w1 = ladder_so({{1, 0}, {uqF(1), uqE(1)}}, 2);
    auto w2 = ladder_so({{1, 0}, {uqE(1), uqF(1)}}, 2);
    ASSERT_TRUE(w1 && w2);
    bad.lhs.push_back({RatFunc(1), *w1});
    bad.lhs.push_back({RatFunc(-1), *w2});
    ReportRow row = run_uq_instances("ef-missing-scalar", FunctorKind::BDExt, 2, {bad},
                                     cache, column_budget());
    EXPECT_FALSE(row.pass);
    ASSERT_TRUE(row.witness.has_value());
    EXPECT_EQ(row.witness->instance, "lambda=(1,0)");
}

TEST(UqCheck, SmallRanksPass) {
    EvalCache cache;
    for (auto [kase, k] : {std::pair{FunctorKind::BDExt, 2}, {FunctorKind::CExt, 1},
                           {FunctorKind::CExt, 2}}) {
        auto rows = check_uq_relations(kase, 2, k, 1, 0, cache);
        ASSERT_FALSE(rows.empty());
        for (const ReportRow& r : rows) {
            EXPECT_TRUE(r.pass) << r.fixture << " under " << functor_name(r.functor)
                                << " n=" << r.n
                                << (r.witness ? " witness: " + r.witness->instance : "");
            EXPECT_GT(r.run, 0) << r.fixture;
        }
    }
}

TEST(UqCheck, SymmetricFlavorWithCutoff) {
    EvalCache cache;
    auto rows = check_uq_relations(FunctorKind::BDSym, 2, 2, 1, 6, cache);
    for (const ReportRow& r : rows) {
        EXPECT_TRUE(r.pass) << r.fixture
                            << (r.witness ? " witness: " + r.witness->instance : "");
        EXPECT_GT(r.run, 0) << r.fixture;
    }
    auto rows3 = check_uq_relations(FunctorKind::CSym, 2, 2, 1, 6, cache);
    for (const ReportRow& r : rows3)
        EXPECT_TRUE(r.pass) << r.fixture
                            << (r.witness ? " witness: " + r.witness->instance : "");
    // The half-n weight shift only lands on integral labels for even n.
    EXPECT_THROW(check_uq_relations(FunctorKind::CSym, 3, 2, 1, 6, cache), LadderError);
}
