#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "maymust/error.hpp"
#include "maymust/generate.hpp"
#include "maymust/semantics.hpp"

using namespace maymust;
using namespace fixtures;

namespace {

const Labelling L1{I, O, I, O, I};
const Labelling L2{I, I, U, O, I};
const Labelling L3{I, U, I, O, I};
const Labelling L4{I, U, U, O, I};

std::set<Labelling> got(const SemanticsResult& r) { return as_set(r.labellings); }

}  // namespace

TEST(Semantics, ChainExact) {
    const auto r = exact_semantics(chain5());
    EXPECT_EQ(r.labellings, (std::vector<Labelling>{L2, L1, L3}));
}

TEST(Semantics, ChainMaxi) {
    const Framework f = chain5();
    EXPECT_EQ(got(maxi_complete(f)), (std::set<Labelling>{L1, L2, L3}));
    EXPECT_EQ(got(maxi_preferred(f)), (std::set<Labelling>{L1, L2}));
    EXPECT_EQ(got(maxi_stable(f)), (std::set<Labelling>{L1}));
    EXPECT_EQ(got(maxi_grounded(f)), (std::set<Labelling>{L4}));
    EXPECT_FALSE(maxi_complete(f).contains(L4));
}

TEST(Semantics, SelfLoop) {
    const Framework f = self_loop();
    EXPECT_TRUE(exact_semantics(f).empty());
    const auto m = maxi_complete(f);
    EXPECT_EQ(m.labellings, (std::vector<Labelling>{{U}}));
    ASSERT_TRUE(m.proper_set.has_value());
    EXPECT_TRUE(m.proper_set->empty());
    EXPECT_TRUE(maxi_stable(f).empty());
    EXPECT_EQ(maxi_grounded(f).labellings, (std::vector<Labelling>{{U}}));
}

TEST(Semantics, EmptyFramework) {
    const Framework f = make({}, {});
    EXPECT_EQ(exact_semantics(f).size(), 1u);
    EXPECT_EQ(maxi_complete(f).size(), 1u);
}

TEST(Semantics, NoMaximallyProperWitness) {
    // a2 self-attacks and is attacked by a1; the pre-maximally proper sets
    // {a1} and {a2} have no common upper bound.
    const Framework f = make({{1, 1, 0, 0}, {2, 2, 0, 0}}, {{0, 1}, {1, 1}});
    EXPECT_TRUE(oracle_maxi(f).empty());
    EXPECT_TRUE(maximally_proper_unchecked(f).empty());
    try {
        maximally_proper_semantics(f);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoMaximallyProper);
    }
}

TEST(Semantics, PreMaximallyProperIncludesAllUndecWhenProper) {
    const auto r = pre_maximally_proper(self_loop());
    EXPECT_EQ(r.labellings, (std::vector<Labelling>{{U}}));
}

TEST(Semantics, AgreesWithOracleOnRandomInstances) {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        GeneratorParams p;
        p.n = 1 + seed % 5;
        p.seed = seed;
        const Framework f = generate_random(p);
        EXPECT_EQ(got(exact_semantics(f)), oracle_exact(f)) << seed;
        EXPECT_EQ(got(maximally_proper_unchecked(f)), oracle_maxi(f)) << seed;
        for (const auto& l : exact_semantics(f).labellings) EXPECT_TRUE(is_exact(f, l));
    }
}

TEST(Semantics, ThreadedScanMatchesInline) {
    GeneratorParams p;
    p.n = 7;
    p.seed = 77;
    const Framework f = generate_random(p);
    SolveOptions many{Engine::Brute, 4};
    EXPECT_EQ(exact_semantics(f).labellings, exact_semantics(f, many).labellings);
    EXPECT_EQ(maximally_proper_unchecked(f).labellings, maximally_proper_unchecked(f, many).labellings);
}

TEST(Semantics, PreferredStableGroundedRelations) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GeneratorParams p;
        p.n = 1 + seed % 6;
        p.seed = seed;
        const Framework f = generate_random(p);
        const auto c = maximally_proper_unchecked(f);
        if (c.empty()) continue;
        const auto pr = preferred_of(c, Semantics::MaxiPreferred);
        const auto st = stable_of(c, Semantics::MaxiStable);
        for (const auto& l : pr.labellings) EXPECT_TRUE(c.contains(l));
        std::set<Labelling> undec_free;
        for (const auto& l : pr.labellings)
            if (l.count(U) == 0) undec_free.insert(l);
        EXPECT_EQ(got(st), undec_free);
        const auto g = grounded_of(c, Semantics::MaxiGrounded);
        ASSERT_EQ(g.size(), 1u);
        for (const auto& l : c.labellings) EXPECT_TRUE(labelling_leq(g.labellings[0], l));
    }
}

TEST(Semantics, NamesRoundTrip) {
    for (Semantics s : {Semantics::Exact, Semantics::MaxiComplete, Semantics::MaxiGrounded, Semantics::AdfPreferred})
        EXPECT_EQ(parse_semantics(to_string(s)), s);
    EXPECT_EQ(parse_semantics("bogus"), std::nullopt);
    EXPECT_EQ(parse_engine("scc"), Engine::Scc);
}

TEST(Semantics, SolveDispatch) {
    const Framework f = chain5();
    EXPECT_EQ(solve(f, Semantics::MaxiStable).labellings, (std::vector<Labelling>{L1}));
    EXPECT_EQ(solve(f, Semantics::MaxiPreferred, {Engine::Scc, 1}).labellings,
              maxi_preferred(f).labellings);
    EXPECT_EQ(solve(f, Semantics::Exact, {Engine::Scc, 1}).engine, Engine::Scc);
}
