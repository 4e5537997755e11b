#include "hball/cli_spec.hpp"
#include "hball/suites.hpp"

#include <gtest/gtest.h>

using namespace hball;

TEST(CliSpec, ParsesGeneratorNames) {
    const auto a = parse_generator_spec("example1:chi=2");
    EXPECT_EQ(a.kind, BuiltinKind::Example1);
    EXPECT_EQ(a.chi, 2.0);
    EXPECT_EQ(a.dim, 1u);
    EXPECT_EQ(parse_generator_spec("example2").dim, 2u);
    EXPECT_EQ(parse_generator_spec("example3@m=3").dim, 4u);
    EXPECT_EQ(parse_generator_spec("zero@n=5").dim, 5u);
    const auto s = parse_generator_spec("scaled:c=0.5@n=3");
    EXPECT_EQ(s.scale, 0.5);
    EXPECT_EQ(s.dim, 3u);
}

TEST(CliSpec, RoundTrip) {
    for (const char* text : {"example1:chi=0.25", "example2@m=2", "example5", "scaled:c=3@n=2", "zero@n=4"}) {
        const auto s = parse_generator_spec(text);
        const auto back = parse_generator_spec(generator_spec_text(s));
        EXPECT_EQ(back.kind, s.kind);
        EXPECT_EQ(back.dim, s.dim);
        EXPECT_EQ(back.chi, s.chi);
        EXPECT_EQ(back.scale, s.scale);
    }
}

TEST(CliSpec, RejectsBadInput) {
    for (const char* text : {"example9", "example1:c=2", "example1:chi=x", "example4@m=2", "example4@n=2",
                             "zero@n=0", "zero@k=2", "example1:chi"}) {
        EXPECT_THROW(parse_generator_spec(text), UsageError) << text;
    }
}

TEST(CliSpec, Points) {
    EXPECT_EQ(parse_boundary_point("e1", 2).vec(), CVec({1.0, 0.0}));
    EXPECT_EQ(parse_boundary_point("(i, 0)", 2).vec(), CVec({Complex(0, 1), 0.0}));
    EXPECT_THROW(parse_boundary_point("(0.5, 0)", 2), UsageError);
    EXPECT_THROW(parse_boundary_point("(1, 0, 0)", 2), UsageError);
    EXPECT_EQ(parse_ball_point("0.3+0.4i", 1).vec(), CVec({Complex(0.3, 0.4)}));
    EXPECT_THROW(parse_ball_point("1", 1), UsageError);
    EXPECT_THROW(parse_ball_point("(", 1), UsageError);
}

TEST(Suites, UnknownExample) {
    EXPECT_THROW(verify_example(0, {}), UsageError);
    EXPECT_THROW(verify_example(6, {}), UsageError);
    RunOptions bad;
    bad.tol_scale = -1.0;
    EXPECT_THROW(bad.validate(), UsageError);
}

class ExampleSuite : public ::testing::TestWithParam<int> {};

TEST_P(ExampleSuite, PassesAtDefaultSeed) {
    const auto rep = verify_example(GetParam(), {});
    for (const auto& c : rep.checks) {
        EXPECT_FALSE(c.failed()) << c.name << " = " << c.value << " " << c.note;
    }
    for (const auto& a : rep.analyses) {
        EXPECT_TRUE(a.pass()) << a.generator;
    }
    EXPECT_TRUE(rep.pass());
    const auto j = to_json(rep, {});
    EXPECT_EQ(j["schema"], kSuiteSchema);
}

INSTANTIATE_TEST_SUITE_P(AllExamples, ExampleSuite, ::testing::Range(1, 6));

TEST(Suites, CriterionLineFormat) {
    const auto r = run_criterion(1, {});
    const auto line = criterion_line(r);
    EXPECT_EQ(line.rfind("[PASS] 1.", 0), 0u) << line;
    EXPECT_THROW(run_criterion(12, {}), UsageError);
}

TEST(Suites, AcceptanceJsonOmitsTimings) {
    RunOptions opts;
    opts.parallel = false;
    std::vector<CriterionResult> rs{run_criterion(1, opts), run_criterion(6, opts)};
    const auto a = acceptance_json(rs, opts).dump();
    rs[0].seconds = 123.0;
    EXPECT_EQ(acceptance_json(rs, opts).dump(), a);
    EXPECT_EQ(acceptance_json(rs, opts)["schema"], kAcceptanceSchema);
}
