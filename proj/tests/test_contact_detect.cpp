#include "doctest.h"

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "swim/contact_detect.hpp"
#include "swim/pipeline.hpp"

using namespace swim;

namespace {

MovementTimeline two_nodes(Point pa, double sa, double ea, Point pb, double sb, double eb)
{
    MovementTimeline t;
    t.span_end = 1000.0;
    t.per_node = {{{0, pa, sa, ea}}, {{1, pb, sb, eb}}};
    return t;
}

ContactLog one_contact(double s, double e)
{
    ContactLog log;
    log.num_nodes = 2;
    log.span_end = 1e6;
    log.records = {{0, 1, s, e}};
    return log;
}

// Scan times of period p inside [s, e], by walking k = 0, 1, 2, ...
std::vector<double> enumerate_scans(double s, double e, double p)
{
    std::vector<double> out;
    for (int k = 0; k * p <= e; ++k)
        if (k * p >= s)
            out.push_back(k * p);
    return out;
}

ScenarioConfig small_config(std::uint64_t seed)
{
    ScenarioConfig c = cambridge_default();
    c.num_mobile = 8;
    c.num_stationary = 3;
    c.num_locations = 6;
    c.map_width = 300.0;
    c.map_height = 300.0;
    c.sim_duration = 2 * 86400.0;
    c.rng_seed = seed;
    c.node_classes = {{"m", 8, true, 11.0, 600.0},
                      {"long", 1, false, 22.0, 120.0},
                      {"short", 2, false, 11.0, 360.0}};
    return c;
}

} // namespace

TEST_CASE("detect_contacts basic cases")
{
    const std::vector<double> r11{11.0, 11.0};

    SUBCASE("interval intersection at the same place")
    {
        const auto log = detect_contacts(two_nodes({5, 5}, 0, 100, {5, 5}, 50, 150), r11);
        REQUIRE(log.records.size() == 1);
        CHECK(log.records[0] == ContactRecord{0, 1, 50.0, 100.0});
        CHECK(log.num_nodes == 2);
    }

    SUBCASE("the larger radio range decides")
    {
        const std::vector<double> mixed{11.0, 22.0};
        CHECK(detect_contacts(two_nodes({0, 0}, 0, 100, {15, 0}, 0, 100), mixed).records.size() == 1);
        CHECK(detect_contacts(two_nodes({0, 0}, 0, 100, {30, 0}, 0, 100), mixed).records.empty());
    }

    SUBCASE("touching intervals are not a contact")
    {
        CHECK(detect_contacts(two_nodes({0, 0}, 0, 100, {0, 0}, 100, 200), r11).records.empty());
    }

    SUBCASE("abutting raw contacts of a pair merge")
    {
        MovementTimeline t;
        t.span_end = 300;
        // a moves between two spots 5 m apart, both within range of b.
        t.per_node = {{{0, {0, 0}, 0, 100}, {0, {5, 0}, 100, 200}}, {{1, {2, 0}, 0, 300}}};
        const auto log = detect_contacts(t, r11);
        REQUIRE(log.records.size() == 1);
        CHECK(log.records[0] == ContactRecord{0, 1, 0.0, 200.0});
    }
}

TEST_CASE("parallel detection equals the serial reference and brute force")
{
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto c = small_config(seed);
        Rng rng = Rng::derive(seed, 0);
        const auto w = generate_world(c, rng);
        const auto t = run_mobility(c, w);
        const auto ranges = c.radio_ranges();
        const auto par = detect_contacts(t, ranges);
        const auto ser = detect_contacts_serial(t, ranges);
        CHECK(par == ser);
        CHECK(par.records == oracle::brute_force_contacts(t, ranges));
        for (const auto& r : par.records) {
            CHECK(r.a < r.b);
            CHECK(r.t_start < r.t_end);
        }
    }
}

TEST_CASE("quantize_to_beacons")
{
    const std::vector<double> p600{600.0, 600.0};

    SUBCASE("no scan inside the contact")
    {
        CHECK(quantize_to_beacons(one_contact(50, 100), p600, 1e6).records.empty());
    }

    SUBCASE("last scan plus period, clipped to the experiment end")
    {
        const auto scans = enumerate_scans(0, 1250, 600);
        REQUIRE(scans == std::vector<double>{0, 600, 1200});
        const double expected_end = scans.back() + 600; // 1800

        auto log = quantize_to_beacons(one_contact(0, 1250), p600, 1e6);
        REQUIRE(log.records.size() == 1);
        CHECK(log.records[0] == ContactRecord{0, 1, 0.0, expected_end});

        log = quantize_to_beacons(one_contact(0, 1250), p600, 1500);
        REQUIRE(log.records.size() == 1);
        CHECK(log.records[0].t_end == 1500.0);
    }

    SUBCASE("either scanner can observe")
    {
        const std::vector<double> mixed{600.0, 120.0};
        // Only node 1 scans inside [610, 730], at 720.
        const auto log = quantize_to_beacons(one_contact(610, 730), mixed, 1e6);
        REQUIRE(log.records.size() == 1);
        CHECK(log.records[0] == ContactRecord{0, 1, 720.0, 840.0});
    }

    SUBCASE("observed contacts closer than the larger period merge")
    {
        ContactLog log;
        log.num_nodes = 2;
        log.span_end = 1e6;
        log.records = {{0, 1, 0, 10}, {0, 1, 1190, 1210}, {0, 1, 5000, 5500}};
        const auto q = quantize_to_beacons(log, p600, 1e6);
        // [0,600] and [1200,1800] are 600 apart -> merged; [5400,6000] stays.
        REQUIRE(q.records.size() == 2);
        CHECK(q.records[0] == ContactRecord{0, 1, 0, 1800});
        CHECK(q.records[1] == ContactRecord{0, 1, 5400, 6000});
        CHECK(quantize_to_beacons(log, p600, 1e6, false).records.size() == 3);
    }

    SUBCASE("dense sampling reproduces ground truth")
    {
        const auto c = small_config(8);
        const auto gt = simulate(c, true).contacts;
        const std::vector<double> dense(c.num_nodes(), 1e-3);
        const auto q = quantize_to_beacons(gt, dense, c.sim_duration);
        REQUIRE(q.records.size() == gt.records.size());
        for (std::size_t i = 0; i < gt.records.size(); ++i) {
            CHECK(q.records[i].a == gt.records[i].a);
            CHECK(q.records[i].b == gt.records[i].b);
            CHECK(std::abs(q.records[i].t_start - gt.records[i].t_start) <= 1e-3 + 1e-6);
            CHECK(std::abs(q.records[i].t_end - gt.records[i].t_end) <= 1e-3 + 1e-6);
        }
    }
}

TEST_CASE("observed contacts trace back to ground truth")
{
    for (std::uint64_t seed = 10; seed < 14; ++seed) {
        const auto c = small_config(seed);
        const auto gt = simulate(c, true).contacts;
        const auto beacons = c.beacon_intervals();
        const auto observed = quantize_to_beacons(gt, beacons, c.sim_duration);

        for (const auto& o : observed.records) {
            bool overlaps = false;
            for (const auto& g : gt.records)
                if (g.a == o.a && g.b == o.b && g.t_start <= o.t_end && o.t_start <= g.t_end)
                    overlaps = true;
            CHECK(overlaps);
        }

        std::map<std::pair<NodeId, NodeId>, int> before, after;
        for (const auto& g : gt.records)
            ++before[{g.a, g.b}];
        for (const auto& o : quantize_to_beacons(gt, beacons, c.sim_duration, false).records)
            ++after[{o.a, o.b}];
        for (auto [pair, n] : after)
            CHECK(n <= before[pair]);
        CHECK(observed.records.size() <= gt.records.size());
    }
}
