#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swim/geometry.hpp"
#include "swim/rng.hpp"

namespace swim {

using NodeId = std::size_t;

/// A group of nodes sharing radio hardware settings.
struct NodeClass {
    std::string name;
    std::size_t count = 0;
    bool mobile = true;
    double radio_range = 0.0;     // meters
    double beacon_interval = 0.0; // seconds

    friend bool operator==(const NodeClass&, const NodeClass&) = default;
};

/// Full parameterization of one SWIM run.
///
/// Node ids are laid out with mobile nodes first: [0, num_mobile) are
/// mobile, [num_mobile, num_nodes()) are stationary. Mobile classes are
/// assigned to mobile ids in list order, likewise for stationary classes.
struct ScenarioConfig {
    std::size_t num_mobile = 0;
    std::size_t num_stationary = 0;
    double map_width = 0.0;
    double map_height = 0.0;
    std::size_t num_locations = 0;
    double neighborhood_radius = 0.0;
    double alpha = 0.0;
    double wait_time_mean = 0.0;
    double trip_duration = 0.0;
    double sim_duration = 0.0;
    std::uint64_t rng_seed = 0;
    std::vector<NodeClass> node_classes;
    double hour_of_day_offset = 0.0;

    std::size_t num_nodes() const { return num_mobile + num_stationary; }

    // Throws swim::Error naming the violated constraint.
    void validate() const;

    // Per-node class lookups, indexed by node id.
    std::vector<double> radio_ranges() const;
    std::vector<double> beacon_intervals() const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// 36 students and 18 stationary iMotes over 11 days.
ScenarioConfig cambridge_default();

/// Parses a `key=value` document on top of cambridge_default(). Any
/// `node_class=` line replaces the default class list as a whole.
/// Throws ParseError (with line number) or Error on invalid configs.
ScenarioConfig load_scenario(std::string_view text);

/// Inverse of load_scenario: every field is written, doubles in shortest
/// round-trip form.
std::string serialize_scenario(const ScenarioConfig& config);

struct World {
    std::vector<Point> locations;                   // cell centers
    std::vector<Point> homes;                       // one per mobile node
    std::vector<std::size_t> stationary_placement;  // stationary node k -> location index

    friend bool operator==(const World&, const World&) = default;
};

World generate_world(const ScenarioConfig& config, Rng& rng);

} // namespace swim
