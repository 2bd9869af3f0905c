#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "maymust/dung.hpp"
#include "maymust/generate.hpp"
#include "maymust/semantics.hpp"

using namespace maymust;
using namespace fixtures;

TEST(Dung, Instantiation) {
    const DungFramework d{{"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 2}, {1, 2}}};
    const Framework f = dung_to_maymust(d);
    EXPECT_EQ(f.tuple(0), (NuanceTuple{0, 0, 1, 1}));
    EXPECT_EQ(f.tuple(2), (NuanceTuple{2, 2, 1, 1}));
    EXPECT_TRUE(is_dung_instance(f));
    EXPECT_FALSE(is_dung_instance(chain5()));
    const DungFramework back = underlying_dung(f);
    EXPECT_EQ(back.arguments, d.arguments);
    EXPECT_EQ(back.attacks.size(), 3u);
}

TEST(Dung, OracleKnownResults) {
    // a <-> b: complete {in,out},{out,in},{undec,undec}
    const DungFramework d{{"a", "b"}, {{0, 1}, {1, 0}}};
    const auto s = dung_complete_oracle(d);
    EXPECT_EQ(s.complete.labellings, (std::vector<Labelling>{{I, O}, {O, I}, {U, U}}));
    EXPECT_EQ(s.preferred.labellings, (std::vector<Labelling>{{I, O}, {O, I}}));
    EXPECT_EQ(s.stable.labellings, s.preferred.labellings);
    EXPECT_EQ(s.grounded.labellings, (std::vector<Labelling>{{U, U}}));
    // odd cycle: no stable labelling
    const DungFramework odd{{"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}}};
    EXPECT_TRUE(dung_complete_oracle(odd).stable.empty());
}

TEST(Dung, CorrespondenceOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        GeneratorParams p;
        p.n = 1 + seed % 6;
        p.seed = seed;
        p.tuples.mode = TupleMode::Dung;
        const Framework f = generate_random(p);
        ASSERT_TRUE(is_dung_instance(f));
        const auto o = dung_complete_oracle(underlying_dung(f));
        EXPECT_EQ(maxi_complete(f).labellings, o.complete.labellings) << seed;
        EXPECT_EQ(maxi_preferred(f).labellings, o.preferred.labellings) << seed;
        EXPECT_EQ(maxi_stable(f).labellings, o.stable.labellings) << seed;
        EXPECT_EQ(maxi_grounded(f).labellings, o.grounded.labellings) << seed;
        EXPECT_EQ(exact_semantics(f).labellings, o.complete.labellings) << seed;
    }
}
