#include "doctest.h"

#include "oracles.hpp"
#include "swim/contact_log.hpp"
#include "swim/error.hpp"

using namespace swim;

TEST_CASE("parse_contact_trace")
{
    SUBCASE("ids are remapped by first appearance, then oriented")
    {
        const auto log = parse_contact_trace("12 7 3600 3720\n");
        CHECK(log.num_nodes == 2);
        REQUIRE(log.records.size() == 1);
        CHECK(log.records[0] == ContactRecord{0, 1, 3600.0, 3720.0});
        CHECK(log.span_start == 3600.0);
        CHECK(log.span_end == 3720.0);
    }

    SUBCASE("overlapping records of a pair merge regardless of orientation")
    {
        const auto log = parse_contact_trace("1 2 0 10\n2 1 5 20\n");
        REQUIRE(log.records.size() == 1);
        CHECK(log.records[0] == ContactRecord{0, 1, 0.0, 20.0});
    }

    SUBCASE("comments, blank lines and extra columns")
    {
        const auto log = parse_contact_trace("# crawdad dump\n\n3 4 10 20 17 extra\n  4 5 30 40\n");
        CHECK(log.num_nodes == 3);
        CHECK(log.records.size() == 2);
    }

    SUBCASE("t0 shifts timestamps")
    {
        const auto log = parse_contact_trace("1 2 1000 1010\n", 1000.0);
        CHECK(log.records[0].t_start == 0.0);
        CHECK(log.records[0].t_end == 10.0);
    }

    SUBCASE("errors carry the line number")
    {
        auto line_of = [](const char* text) {
            try {
                parse_contact_trace(text);
            } catch (const ParseError& e) {
                return e.line();
            }
            return std::size_t{0};
        };
        CHECK(line_of("1 1 0 10\n") == 1);
        CHECK(line_of("1 2 0 10\n1 2 30 20\n") == 2);
        CHECK(line_of("1 2 0\n") == 1);
        CHECK(line_of("# c\n1 x 0 10\n") == 2);
        CHECK(line_of("1 2 zero 10\n") == 1);
    }

    SUBCASE("empty input")
    {
        const auto log = parse_contact_trace("");
        CHECK(log.empty());
        CHECK(log.num_nodes == 0);
    }
}

TEST_CASE("write_contact_trace")
{
    ContactLog log;
    log.num_nodes = 3;
    log.span_end = 100.0;
    CHECK(write_contact_trace(log) == "# nodes=3 span=0.000,100.000\n");

    log.records = {{0, 1, 0.0, 10.0}};
    CHECK(write_contact_trace(log) == "# nodes=3 span=0.000,100.000\n0 1 0.000 10.000\n");

    // Sorted by start time, then ids.
    log.records = {{1, 2, 5.0, 6.0}, {0, 2, 1.25, 2.5}, {0, 1, 5.0, 7.0}};
    CHECK(write_contact_trace(log)
          == "# nodes=3 span=0.000,100.000\n0 2 1.250 2.500\n0 1 5.000 7.000\n1 2 5.000 6.000\n");
}

TEST_CASE("parse of write is the identity on normalized logs")
{
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto log = oracle::random_log(rng);
        CHECK(parse_contact_trace(write_contact_trace(log)) == log);
    }
}

TEST_CASE("parsing ignores record order and orientation")
{
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const auto log = oracle::random_log(rng);
        const auto text = write_contact_trace(log);
        // Reverse the records and swap every pair's ids.
        std::string shuffled = text.substr(0, text.find('\n') + 1);
        for (auto it = log.records.rbegin(); it != log.records.rend(); ++it) {
            const auto& r = *it;
            shuffled += std::to_string(r.b) + " " + std::to_string(r.a) + " "
                        + std::to_string(r.t_start) + " " + std::to_string(r.t_end) + "\n";
        }
        CHECK(parse_contact_trace(shuffled) == log);
    }
}
