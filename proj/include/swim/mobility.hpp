#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "swim/geometry.hpp"
#include "swim/rng.hpp"
#include "swim/scenario.hpp"

namespace swim {

// Cell index reserved for a node's own home.
inline constexpr std::size_t kHome = std::numeric_limits<std::size_t>::max();

enum class Phase { waiting, traveling };

struct NodeState {
    NodeId id = 0;
    Point home;
    std::size_t current_cell = kHome;
    // Sparse: only cells the node has arrived at have an entry.
    std::map<std::size_t, std::uint64_t> seen;
    std::uint64_t seen_total = 0;
    Phase phase = Phase::waiting;
    double phase_end = 0.0;

    std::uint64_t seen_at(std::size_t cell) const
    {
        auto it = seen.find(cell);
        return it == seen.end() ? 0 : it->second;
    }
};

struct PresenceInterval {
    NodeId node = 0;
    Point position;
    double t_start = 0.0;
    double t_end = 0.0;

    friend bool operator==(const PresenceInterval&, const PresenceInterval&) = default;
};

struct MovementTimeline {
    std::vector<std::vector<PresenceInterval>> per_node;
    double span_end = 0.0;

    std::size_t num_nodes() const { return per_node.size(); }

    friend bool operator==(const MovementTimeline&, const MovementTimeline&) = default;
};

/// Power-law proximity term, 1 / (1 + d/r0)^2.
double distance_decay(double d, double r0);

Point cell_position(const NodeState& node, std::size_t cell, const World& world);

/// Destination weight of `cell` (or kHome) for `node`: alpha * proximity to
/// home plus (1 - alpha) * seen(cell) / (1 + total seen).
double cell_weight(const NodeState& node, std::size_t cell, const World& world, double alpha,
                   double r0);

/// Candidates for the next trip: every cell plus kHome, minus the current
/// position. Weights are aligned with the returned candidates.
struct DestinationWeights {
    std::vector<std::size_t> candidates;
    std::vector<double> weights;
};

DestinationWeights destination_weights(const NodeState& node, const World& world, double alpha,
                                       double r0);

/// Samples proportionally to cell_weight; uniform if every weight is zero.
std::size_t choose_destination(const NodeState& node, const World& world, double alpha,
                               double r0, Rng& rng);

void update_seen(NodeState& node, std::size_t cell, std::uint64_t encountered);

/// Event-driven SWIM run. Mobile nodes start at home at t = 0; stationary
/// nodes hold one interval spanning the whole run. The random stream is
/// derived from config.rng_seed, so (config, world) fixes the output.
MovementTimeline run_mobility(const ScenarioConfig& config, const World& world);

} // namespace swim
