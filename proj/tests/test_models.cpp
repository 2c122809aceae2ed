#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <chrotop/error.hpp>
#include <chrotop/models.hpp>

#include <cmath>

using namespace chrotop;

namespace {

auto W(const char * text) -> Word
{
    return parse_word(text, 2);
}

}

TEST_CASE("round schedules are ordered partitions")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(enumerate_round_schedules(n).size() == oracle::ordered_partitions(n));
    auto two = enumerate_round_schedules(2);
    CHECK(to_display(two[0]) == "<->");
    CHECK(to_display(two[1]) == "->");
    CHECK(to_display(two[2]) == "<-");
    CHECK(two[1].view_of(0) == std::vector<ProcessId>{0});
    CHECK(two[1].view_of(1) == std::vector<ProcessId>{0, 1});
    CHECK_THROWS_AS(enumerate_round_schedules(6), Error);
}

TEST_CASE("schedule syntax")
{
    CHECK(parse_schedule("→", 2) == parse_schedule("0|1", 2));
    CHECK(parse_schedule("[1|0]", 2) == parse_schedule("<-", 2));
    CHECK(parse_schedule("0,1,2", 3).blocks.size() == 1);
    CHECK(to_string(parse_schedule("2|0,1", 3)) == "2|0,1");
    CHECK(W("<->,->").size() == 2);
    CHECK(parse_word("[0|1][0,1]", 2) == W("->,<->"));
    CHECK(W("").empty());
    CHECK_THROWS_AS(parse_schedule("0|0", 2), Error);
    CHECK_THROWS_AS(parse_schedule("0", 2), Error);
    CHECK_THROWS_AS(parse_schedule("x", 2), Error);
}

TEST_CASE("prefix counts")
{
    for (int d = 0; d <= 4; ++d) {
        auto full = static_cast<std::size_t>(std::pow(3, d));
        CHECK(enumerate_prefixes(iis_model(2), d).size() == full);
        CHECK(enumerate_prefixes(m2_model(), d).size() == full);
        CHECK(enumerate_prefixes(builtin_model("ll"), d).size() == full);
        CHECK(enumerate_prefixes(m1_model(), d).size() == (d == 0 ? 1 : 2 * full / 3));
    }
    CHECK(enumerate_prefixes(iis_model(3), 2).size() == 169);
    CHECK(enumerate_prefixes(m1_model(), 3).size() == 18);
}

TEST_CASE("normal forms identify equal infinite words")
{
    ExecutionWord a{W("<->,<-"), W("<-")};
    ExecutionWord b{W("<->"), W("<-,<-")};
    CHECK(normalize(a) == normalize(b));
    CHECK(normalize(a) == ExecutionWord{W("<->"), W("<-")});
    ExecutionWord c{W("->,<-"), W("->,<-")};
    CHECK(normalize(c) == ExecutionWord{{}, W("->,<-")});
    CHECK(to_display(ExecutionWord{W("<->"), W("<-")}) == "<->,(<-)^w");
    CHECK_THROWS_AS(normalize(ExecutionWord{W("<->"), {}}), Error);
}

TEST_CASE("model membership")
{
    auto m2 = m2_model();
    CHECK(m2.saturation_depth() == 0);
    CHECK_FALSE(is_model_execution(m2, ExecutionWord{W("<->,<-,<-"), W("<-")}));
    CHECK(is_model_execution(m2, ExecutionWord{W("->"), W("<-")}));
    CHECK(is_model_execution(m2, ExecutionWord{W("<->,<-,->"), W("<-")}));
    CHECK(is_model_execution(iis_model(2), ExecutionWord{W("<->"), W("<-")}));

    auto m1 = m1_model();
    CHECK(m1.saturation_depth() == 1);
    CHECK_FALSE(m1.allowed_prefix(W("<->")));
    CHECK(m1.allowed_prefix(W("->,<->")));
    CHECK_FALSE(is_model_execution(m1, ExecutionWord{{}, W("<->")}));
    CHECK(is_model_execution(m1, ExecutionWord{W("<-"), W("<->")}));
}

TEST_CASE("custom models extend their stems")
{
    ModelSpec m(2, "stems", ModelKind::Custom, {}, {W("->,<-"), W("<->")});
    CHECK(m.saturation_depth() == 2);
    CHECK(m.allowed_prefix(W("->")));
    CHECK_FALSE(m.allowed_prefix(W("->,->")));
    CHECK(m.allowed_prefix(W("->,<-,->,<->")));
    CHECK(m.allowed_prefix(W("<->,->")));
    CHECK(enumerate_prefixes(m, 2).size() == 1 + 3);
    CHECK(validate_model(m, 4).empty());
}

TEST_CASE("validation catches bad exclusions")
{
    ModelSpec bad(2, "bad", ModelKind::FirstRoundRestricted, {parse_schedule("->", 2)}, {},
        {ExecutionWord{W("<->"), W("<-")}});
    CHECK_FALSE(validate_model(bad, 3).empty());
    CHECK(validate_model(m2_model(), 4).empty());
    CHECK(validate_model(m1_model(), 4).empty());
}

TEST_CASE("builtin names")
{
    for (auto name : {"iis2", "iis3", "ll", "m1", "m2"})
        CHECK(builtin_model(name).name() == name);
    CHECK(builtin_model("iis3").process_count() == 3);
    try {
        builtin_model("m3");
        FAIL("expected ParseError");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}
