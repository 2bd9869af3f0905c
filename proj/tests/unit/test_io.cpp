#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "maymust/error.hpp"
#include "maymust/generate.hpp"
#include "maymust/io.hpp"
#include "maymust/semantics.hpp"

using namespace maymust;
using namespace fixtures;

namespace {

constexpr const char* kChain = R"(# chain
arg a1 0 0 1 1
arg a2 0 1 1 2
arg a3 1 1 1 1   # trailing comment
arg a4 1 1 1 1
arg a5 0 0 1 1

att a1 a2
att a2 a3
att a4 a3
att a5 a4
)";

ErrorKind parse_error(std::string_view text, std::size_t* line = nullptr) {
    try {
        parse_mmaf(text);
    } catch (const SyntaxError& e) {
        if (line) *line = e.line();
        return e.kind();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ErrorKind::EmptyInput;
}

}  // namespace

TEST(Io, ParsesChain) {
    const Framework f = parse_mmaf(kChain);
    const Framework want = chain5();
    EXPECT_EQ(f, want);
}

TEST(Io, DungDirective) {
    const Framework f = parse_mmaf("arg a dung\natt a a\n");
    EXPECT_EQ(f.tuple(0), (NuanceTuple{1, 1, 1, 1}));
}

TEST(Io, RatioDirective) {
    const Framework f = parse_mmaf("arg t ratio 0.8 0.9 0.4 0.5 floor 1\narg x 0 0 1 1\narg y 0 0 1 1\natt x t\natt y t\n");
    EXPECT_EQ(f.tuple(0), (NuanceTuple{2, 2, 1, 1}));
}

TEST(Io, Errors) {
    EXPECT_EQ(parse_error("arg a 2 1 0 0\n"), ErrorKind::MayExceedsMust);
    EXPECT_EQ(parse_error("arg a 0 0 1 1\narg a 0 0 1 1\n"), ErrorKind::DuplicateArgument);
    EXPECT_EQ(parse_error("arg a 0 0 1 1\natt a b\n"), ErrorKind::UnknownArgumentInAttack);
    std::size_t line = 0;
    EXPECT_EQ(parse_error("arg a 0 0 1 1\narg b 0 x 1 1\n", &line), ErrorKind::SyntaxError);
    EXPECT_EQ(line, 2u);
    EXPECT_EQ(parse_error("foo bar\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("arg a 0 0 1\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("arg a ratio 0.8 0.9 0.4 1.5\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("arg a ratio 0.9 0.8 0.4 0.5\n"), ErrorKind::FractionOrderViolation);
}

TEST(Io, SerializeRoundTrip) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GeneratorParams p;
        p.n = seed % 8;
        p.seed = seed;
        p.tuples.mode = static_cast<TupleMode>(seed % 3);
        const InstanceDocument doc = generate_document(p);
        const Framework f = resolve(doc);
        EXPECT_EQ(parse_mmaf(serialize_document(doc)), f);
        EXPECT_EQ(parse_mmaf(serialize_mmaf(f)), f);
    }
}

TEST(Io, JsonSchema) {
    const Framework f = chain5();
    const auto j = nlohmann::json::parse(render_json(f, exact_semantics(f)));
    EXPECT_EQ(j["semantics"], "exact");
    EXPECT_EQ(j["engine"], "brute");
    EXPECT_EQ(j["count"], 3);
    ASSERT_EQ(j["labellings"].size(), 3u);
    EXPECT_EQ(j["labellings"][1]["a2"], "out");
    EXPECT_EQ(j["labellings"][0]["a3"], "undec");
}

TEST(Io, TextAndDot) {
    const Framework f = chain5();
    EXPECT_NE(render_text(f, maxi_stable(f)).find("[a1:in, a2:out, a3:in, a4:out, a5:in]"), std::string::npos);
    EXPECT_NE(render_text(self_loop(), maxi_stable(self_loop())).find("STABLE: none"), std::string::npos);
    const std::string dot = render_dot(f, maxi_grounded(f));
    EXPECT_NE(dot.find("\"a1\" [style=filled, fillcolor=green"), std::string::npos);
    EXPECT_NE(dot.find("\"a4\" [style=filled, fillcolor=red"), std::string::npos);
    EXPECT_NE(dot.find("\"a2\" [style=filled, fillcolor=gray"), std::string::npos);
    EXPECT_NE(dot.find("\"a5\" -> \"a4\""), std::string::npos);
}
