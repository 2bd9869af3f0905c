#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "maymust/error.hpp"
#include "maymust/semantics.hpp"

using namespace maymust;
using namespace fixtures;

namespace {

std::vector<Labelling> partials(std::size_t n) {
    // every partial labelling over n arguments: 4^n
    std::vector<Labelling> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 4;
    for (std::size_t k = 0; k < total; ++k) {
        Labelling l(n);
        std::size_t x = k;
        for (std::size_t i = 0; i < n; ++i, x /= 4)
            if (x % 4 != 3) l.set(i, static_cast<Label>(x % 4));
        out.push_back(l);
    }
    return out;
}

}  // namespace

TEST(Labelling, BasicAccess) {
    Labelling l(3);
    EXPECT_EQ(l.domain_size(), 0u);
    l.set(1, O);
    EXPECT_TRUE(l.defined(1));
    EXPECT_FALSE(l.defined(0));
    EXPECT_EQ(l.at(1), O);
    EXPECT_THROW(l.at(0), Error);
    EXPECT_EQ(l.get(2), std::nullopt);
    l.set(5, I);
    EXPECT_EQ(l.universe(), 6u);
    EXPECT_EQ(l.domain(), (std::vector<ArgIndex>{1, 5}));
    l.unset(1);
    EXPECT_EQ(l.count(O), 0u);
}

TEST(Labelling, CanonicalOrder) {
    std::vector<Labelling> v{{U, I}, {I, O}, {O, I}, {I, I}, {I, O}};
    canonicalize(v);
    ASSERT_EQ(v.size(), 4u);
    EXPECT_EQ(v[0], (Labelling{I, I}));
    EXPECT_EQ(v[1], (Labelling{I, O}));
    EXPECT_EQ(v[2], (Labelling{O, I}));
    EXPECT_EQ(v[3], (Labelling{U, I}));
}

TEST(Labelling, LeqExamples) {
    EXPECT_TRUE(labelling_leq({U, U}, {I, O}));
    EXPECT_TRUE(labelling_leq({I, U}, {I, O}));
    EXPECT_FALSE(labelling_leq({I, O}, {I, U}));
    EXPECT_FALSE(labelling_leq({O}, {I}));
    EXPECT_TRUE(labelling_lt({I, U, U, O, I}, {I, O, I, O, I}));
    EXPECT_FALSE(labelling_lt({I, O}, {I, O}));
    Labelling partial(2);
    partial.set(0, I);
    EXPECT_THROW(labelling_leq(partial, {I, O}), Error);
}

TEST(Labelling, LeqIsPartialOrderExhaustive) {
    const auto ls = all_labellings(3);
    for (const auto& a : ls) {
        EXPECT_TRUE(labelling_leq(a, a));
        for (const auto& b : ls) {
            EXPECT_EQ(labelling_leq(a, b), oracle_leq(a, b));
            if (labelling_leq(a, b) && labelling_leq(b, a)) EXPECT_EQ(a, b);
            if (!labelling_leq(a, b)) continue;
            for (const auto& c : ls)
                if (labelling_leq(b, c)) EXPECT_TRUE(labelling_leq(a, c));
        }
    }
}

TEST(Labelling, MeetIsGreatestLowerBound) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto ls = all_labellings(n);
        for (const auto& a : ls)
            for (const auto& b : ls) {
                const std::vector<Labelling> pair{a, b};
                const Labelling m = labelling_meet(pair);
                EXPECT_TRUE(labelling_leq(m, a));
                EXPECT_TRUE(labelling_leq(m, b));
                for (const auto& c : ls)
                    if (labelling_leq(c, a) && labelling_leq(c, b)) EXPECT_TRUE(labelling_leq(c, m));
            }
    }
}

TEST(Labelling, MeetErrors) {
    EXPECT_THROW(labelling_meet(std::span<const Labelling>{}), Error);
    const std::vector<Labelling> mixed{{I}, {I, O}};
    EXPECT_THROW(labelling_meet(mixed), Error);
    const std::vector<Labelling> chain{{I, O, I, O, I}, {I, I, U, O, I}, {I, U, I, O, I}};
    EXPECT_EQ(labelling_meet(chain), (Labelling{I, U, U, O, I}));
}

TEST(Labelling, RestrictComposeRoundTrip) {
    for (const auto& l : all_labellings(4)) {
        for (unsigned mask = 0; mask < 16; ++mask) {
            std::vector<ArgIndex> s, rest;
            for (ArgIndex i = 0; i < 4; ++i) (mask >> i & 1 ? s : rest).push_back(i);
            const Labelling a = restrict(l, s), b = restrict(l, rest);
            EXPECT_EQ(a.domain(), s);
            EXPECT_EQ(compose(a, b, ComposeMode::Strict), l);
            EXPECT_EQ(compose(b, a), l);
        }
    }
}

TEST(Labelling, ComposeSymmetricDifference) {
    Labelling a(3), b(3);
    a.set(0, I);
    a.set(1, O);
    b.set(1, I);
    b.set(2, U);
    const Labelling c = compose(a, b);
    EXPECT_EQ(c.domain(), (std::vector<ArgIndex>{0, 2}));
    EXPECT_EQ(c.at(0), I);
    EXPECT_EQ(c.at(2), U);
    EXPECT_THROW(compose(a, b, ComposeMode::Strict), Error);
}

TEST(Labelling, MaximalElements) {
    const std::vector<Labelling> v{{I, O, I, O, I}, {I, I, U, O, I}, {I, U, I, O, I}};
    const auto m = maximal_elements(v);
    EXPECT_EQ(m, (std::vector<Labelling>{{I, I, U, O, I}, {I, O, I, O, I}}));
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto all = all_labellings(n);
        for (const auto& x : maximal_elements(all)) EXPECT_EQ(x.count(U), 0u);
    }
}

TEST(Labelling, ExhaustivePartialsOrderedConsistently) {
    const auto ps = partials(2);
    EXPECT_EQ(ps.size(), 16u);
    for (const auto& a : ps)
        for (const auto& b : ps) EXPECT_EQ(a == b, !(a < b) && !(b < a));
}
