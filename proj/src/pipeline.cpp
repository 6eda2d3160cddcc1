#include "swim/pipeline.hpp"

#include "swim/contact_detect.hpp"
#include "swim/text.hpp"

namespace swim {

SimulationOutput simulate(const ScenarioConfig& config, bool ground_truth)
{
    config.validate();
    SimulationOutput out;
    Rng world_rng = Rng::derive(config.rng_seed, 0);
    out.world = generate_world(config, world_rng);
    out.timeline = run_mobility(config, out.world);
    const auto ranges = config.radio_ranges();
    out.contacts = detect_contacts(out.timeline, ranges);
    if (!ground_truth) {
        const auto beacons = config.beacon_intervals();
        out.contacts = quantize_to_beacons(out.contacts, beacons, config.sim_duration);
    }
    return out;
}

std::string movement_csv(const MovementTimeline& timeline)
{
    std::string out = "node_id,x,y,t_start,t_end\n";
    for (const auto& intervals : timeline.per_node)
        for (const auto& p : intervals)
            out += std::to_string(p.node) + "," + format_fixed3(p.position.x) + ","
                   + format_fixed3(p.position.y) + "," + format_fixed3(p.t_start) + ","
                   + format_fixed3(p.t_end) + "\n";
    return out;
}

} // namespace swim
