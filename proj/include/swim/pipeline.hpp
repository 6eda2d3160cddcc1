#pragma once

#include "swim/contact_log.hpp"
#include "swim/mobility.hpp"
#include "swim/scenario.hpp"

namespace swim {

struct SimulationOutput {
    World world;
    MovementTimeline timeline;
    ContactLog contacts;
};

/// generate_world -> run_mobility -> detect_contacts, then
/// quantize_to_beacons unless `ground_truth`. Seeded by config.rng_seed.
SimulationOutput simulate(const ScenarioConfig& config, bool ground_truth = false);

/// Movement dump, one `node_id,x,y,t_start,t_end` row per interval.
std::string movement_csv(const MovementTimeline& timeline);

} // namespace swim
