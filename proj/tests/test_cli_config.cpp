#include "config.hpp"
#include "output.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <limits>
#include <sstream>

using namespace lis::cli;

TEST_CASE("config defaults and parsing") {
    const Config d;
    CHECK(d.quadrature_m == 80);
    CHECK(d.truncation == 14.0);
    CHECK(d.digits == 15);
    CHECK(d.format == "csv");
    const auto c = parse_config("# comment\n\nquadrature_m = 120\n truncation=20\nformat = json\nseed=7\n");
    CHECK(c.quadrature_m == 120);
    CHECK(c.truncation == 20.0);
    CHECK(c.format == "json");
    CHECK(c.seed == 7u);
    CHECK(c.thread_count() >= 1);
}

TEST_CASE("config rejects bad input") {
    CHECK_THROWS_AS(parse_config("bogus = 1\n"), UsageError);
    CHECK_THROWS_AS(parse_config("quadrature_m = 0\n"), UsageError);
    CHECK_THROWS_AS(parse_config("quadrature_m = 8x\n"), UsageError);
    CHECK_THROWS_AS(parse_config("digits = 30\n"), UsageError);
    CHECK_THROWS_AS(parse_config("format = xml\n"), UsageError);
    CHECK_THROWS_AS(parse_config("no equals sign\n"), UsageError);
    CHECK_THROWS_AS(parse_config("truncation = -1\n"), UsageError);
}

TEST_CASE("CSV output") {
    Table t;
    t.columns = {"t", "value", "name"};
    t.add({-1.5, 1.0 / 3.0, std::string("a")});
    t.add({2LL, std::monostate{}, true});
    std::ostringstream os;
    t.write(os, "csv", 6);
    CHECK(os.str() == "t,value,name\n-1.5,0.333333,a\n2,,true\n");
}

TEST_CASE("JSON output round-trips") {
    Table t;
    t.columns = {"n", "x"};
    t.add({3LL, 0.1234567890123456789});
    t.add({4LL, std::nan("")});
    std::ostringstream os;
    t.write(os, "json", 15);
    const auto j = nlohmann::json::parse(os.str());
    REQUIRE(j.is_array());
    CHECK(j.size() == 2);
    CHECK(j[0]["n"] == 3);
    CHECK(j[0]["x"].get<double>() == doctest::Approx(0.123456789012346).epsilon(1e-15));
    CHECK(j[1]["x"].is_null());

    Record r;
    r("S", 0.5)("r_n", 61.25)("ok", true);
    std::ostringstream rs;
    r.write(rs, "json", 15);
    const auto o = nlohmann::json::parse(rs.str());
    CHECK(o["S"] == 0.5);
    CHECK(o["ok"] == true);
    std::ostringstream rc;
    r.write(rc, "csv", 15);
    CHECK(rc.str() == "S,r_n,ok\n0.5,61.25,true\n");
}

TEST_CASE("significant-digit formatting") {
    CHECK(format_double(1.0 / 3.0, 3) == "0.333");
    CHECK(format_double(-1.7710868074116016, 15) == "-1.7710868074116");
    CHECK(format_double(std::numeric_limits<double>::infinity(), 5) == "inf");
    CHECK(round_digits(123.456, 2) == 120.0);
}
