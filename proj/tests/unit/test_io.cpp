#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "okounkov/io/json.hpp"

using namespace fixtures;
using namespace okounkov::io;

namespace {

const std::filesystem::path kDir = OKOUNKOV_INSTANCE_DIR;

Json p1_base()
{
    return Json::parse(R"({"frame": {"rays": [[1], [-1]], "boundary": [1]}, "boundary_divisor": [0, 1],
                           "divisors": {}})");
}

} // namespace

TEST(JsonRational, RoundTripAndCanonicalForm)
{
    for (const Rational& r : {q(0), q(-3, 4), q(6, 8), q(5)})
        EXPECT_EQ(rational_from_json(to_json(r)), r);
    EXPECT_EQ(to_json(q(6, -8)).dump(), "[-3,4]");
    EXPECT_EQ(rational_from_json(Json::parse("[2, -4]")), q(-1, 2));
    EXPECT_EQ(rational_from_json(Json(7)), 7);

    const Rational huge = make_rational(Integer("123456789012345678901234567891"), Integer(2));
    EXPECT_EQ(to_json(huge)[0], "123456789012345678901234567891");
    EXPECT_EQ(rational_from_json(to_json(huge)), huge);
}

TEST(JsonRational, RejectsDecimalsAndJunk)
{
    EXPECT_THROW(rational_from_json(Json::parse("0.5")), SchemaError);
    EXPECT_THROW(rational_from_json(Json::parse("[1, 0.5]")), SchemaError);
    EXPECT_THROW(rational_from_json(Json::parse("[1, 0]")), SchemaError);
    EXPECT_THROW(rational_from_json(Json::parse("[1, 2, 3]")), SchemaError);
    EXPECT_THROW(rational_from_json(Json("1/2")), SchemaError);
}

TEST(JsonRational, ReportRendering)
{
    auto r = rational_report(q(-1, 3));
    EXPECT_EQ(r["fraction"], "-1/3");
    EXPECT_EQ(r["decimal"], "-0.333333333333");
    EXPECT_EQ(rational_report(q(4))["fraction"], "4");
}

TEST(JsonPolytope, RoundTrip)
{
    auto p = geom::convex_hull({rv({0, 0}), rv({1, 0}), rv({0, 1})});
    Json j = to_json(p);
    EXPECT_EQ(j["vertices"].size(), 3u);
    EXPECT_EQ(j["dim"], 2);
    EXPECT_EQ(polytope_from_json(j), p);
    EXPECT_EQ(polytope_from_json(to_json(segment(q(1, 3), q(2)))), segment(q(1, 3), q(2)));
    auto empty = geom::RatPolytope::empty(2);
    EXPECT_EQ(polytope_from_json(to_json(empty)), empty);
    EXPECT_THROW(polytope_from_json(Json::object()), SchemaError);
}

TEST(JsonSection, RoundTrip)
{
    LaurentSection<Rational> s(2);
    s.add_term({0, 0}, 1);
    s.add_term({-1, 2}, q(-2, 3));
    Json j = to_json(s);
    EXPECT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(section_from_json(j, 2), s);
    EXPECT_THROW(section_from_json(j, 3), SchemaError);
}

TEST(Instances, IntervalLoads)
{
    auto inst = load_instance(kDir / "interval.json");
    EXPECT_EQ(inst.name, "interval");
    EXPECT_EQ(inst.divisor("D").stage(3).divisor.coeffs, (RatVec{0, q(7, 8)}));
    EXPECT_EQ(inst.divisor("D").stage(3).q, q(1, 8));
    EXPECT_EQ(inst.divisor("E").chart_polytope(), segment(0, 1));
    EXPECT_FALSE(inst.divisor("Z").is_big());
    EXPECT_EQ(inst.amples.size(), 2u);
    EXPECT_EQ(inst.experiments.ts.size(), 11u);
    EXPECT_EQ(inst.experiments.ts[10], q(1, 1024));
    EXPECT_THROW(inst.divisor("nope"), SchemaError);
}

TEST(Instances, OneBasedFlagsAndFlats)
{
    auto inst = load_instance(kDir / "p1xp1.json");
    EXPECT_EQ(inst.flat("F"), (std::vector<std::size_t>{0}));
    const Flag& r = inst.flags.at("restricted");
    EXPECT_EQ(r.order(), (std::vector<std::size_t>{1}));
    EXPECT_EQ(r.mask(), (std::vector<std::size_t>{0}));
    EXPECT_EQ(inst.flags.at("standard").order(), (std::vector<std::size_t>{0, 1}));
}

TEST(Instances, ExplicitSeriesLoads)
{
    auto inst = load_instance(kDir / "p2_o1.json");
    const auto& w = inst.series.at("W");
    EXPECT_EQ(w.at(1).dim(), 2u);
    EXPECT_EQ(w.at(2).dim(), 2u);
    EXPECT_THROW(w.at(3), SeriesError);
    EXPECT_EQ(inst.flags.at("swapped").order(), (std::vector<std::size_t>{1, 0}));
}

TEST(Instances, SchemaViolations)
{
    auto with = [](const char* patch) {
        Json j = p1_base();
        j.merge_patch(Json::parse(patch));
        return j;
    };
    EXPECT_NO_THROW(instance_from_json(with(R"({"divisors": {"D": {"limit": [0, 1]}}})")));
    EXPECT_THROW(instance_from_json(Json::object()), SchemaError);
    EXPECT_THROW(instance_from_json(with(R"({"divisors": {"D": {"stages": "constant"}}})")), SchemaError);
    EXPECT_THROW(instance_from_json(with(R"({"divisors": {"D": {"limit": [0, 0.5]}}})")), SchemaError);
    // stage 1 sits a full unit below the limit while claiming q = 0
    EXPECT_THROW(instance_from_json(with(R"({"divisors": {"D": {"limit": [0, 1], "stages": {"list": [
                     {"coeffs": [0, 0], "q": 0}, {"coeffs": [0, 1], "q": 0}]}}}})")),
                 SchemaError);
    EXPECT_THROW(instance_from_json(with(R"({"divisors": {"D": {"limit": [0, 1], "stages": {"closed_form":
                     {"coeffs": [[0, 0, [1, 2]], [2, 1, [1, 2]]], "q": [1, [1, 2]]}}}}})")),
                 SchemaError);
    EXPECT_THROW(instance_from_json(with(R"({"flags": {"f": {"order": [], "mask": [1]}}})")), SchemaError);
    EXPECT_THROW(instance_from_json(with(R"({"flags": {"f": {"order": [2]}}})")), SchemaError);
    EXPECT_THROW(instance_from_json(with(R"({"flags": {"f": {"order": [0]}}})")), SchemaError);
    EXPECT_THROW(instance_from_json(with(R"({"ample": [[0, 0]]})")), SchemaError);
    EXPECT_THROW(instance_from_json(with(R"({"experiments": {"max_degree": 0}})")), SchemaError);
}

TEST(Output, DumpIsDeterministic)
{
    auto inst = load_instance(kDir / "p2_o1.json");
    Json a{{"body", to_json(inst.divisor("D").chart_polytope())}, {"vol", rational_report(q(1, 2))}};
    Json b{{"vol", rational_report(q(1, 2))}, {"body", to_json(inst.divisor("D").chart_polytope())}};
    EXPECT_EQ(dump(a), dump(b));
}
