#include "swim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <tuple>

namespace swim {

double distance_decay(double d, double r0)
{
    const double s = 1.0 + d / r0;
    return 1.0 / (s * s);
}

Point cell_position(const NodeState& node, std::size_t cell, const World& world)
{
    return cell == kHome ? node.home : world.locations.at(cell);
}

double cell_weight(const NodeState& node, std::size_t cell, const World& world, double alpha,
                   double r0)
{
    const double proximity = distance_decay(distance(node.home, cell_position(node, cell, world)), r0);
    const double popularity = static_cast<double>(node.seen_at(cell))
                              / (1.0 + static_cast<double>(node.seen_total));
    return alpha * proximity + (1.0 - alpha) * popularity;
}

DestinationWeights destination_weights(const NodeState& node, const World& world, double alpha,
                                       double r0)
{
    DestinationWeights out;
    out.candidates.reserve(world.locations.size() + 1);
    out.weights.reserve(world.locations.size() + 1);
    auto add = [&](std::size_t cell) {
        if (cell == node.current_cell)
            return;
        out.candidates.push_back(cell);
        out.weights.push_back(cell_weight(node, cell, world, alpha, r0));
    };
    for (std::size_t c = 0; c < world.locations.size(); ++c)
        add(c);
    add(kHome);
    return out;
}

std::size_t choose_destination(const NodeState& node, const World& world, double alpha,
                               double r0, Rng& rng)
{
    const auto dw = destination_weights(node, world, alpha, r0);
    if (dw.candidates.size() == 1)
        return dw.candidates.front();

    double total = 0.0;
    for (double w : dw.weights)
        total += w;
    if (!(total > 0.0))
        return dw.candidates[rng.below(dw.candidates.size())];

    const double u = rng.uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < dw.candidates.size(); ++i) {
        acc += dw.weights[i];
        if (u < acc)
            return dw.candidates[i];
    }
    // Rounding left u at or above the final partial sum; take the last
    // candidate with positive weight.
    for (std::size_t i = dw.candidates.size(); i-- > 0;)
        if (dw.weights[i] > 0.0)
            return dw.candidates[i];
    return dw.candidates.back();
}

void update_seen(NodeState& node, std::size_t cell, std::uint64_t encountered)
{
    // The entry is created on arrival even with zero encounters: it marks
    // the cell as visited.
    node.seen[cell] += encountered;
    node.seen_total += encountered;
}

namespace {

enum class EventKind { depart, arrive };

struct Event {
    double time;
    NodeId node;
    EventKind kind;
    std::size_t target;

    // Min-heap on (time, node).
    bool operator>(const Event& o) const
    {
        return std::tie(time, node) > std::tie(o.time, o.node);
    }
};

} // namespace

MovementTimeline run_mobility(const ScenarioConfig& config, const World& world)
{
    config.validate();
    const std::size_t n = config.num_nodes();
    const double end = config.sim_duration;
    const double r0 = config.neighborhood_radius;
    const auto ranges = config.radio_ranges();

    MovementTimeline timeline;
    timeline.per_node.resize(n);
    timeline.span_end = end;

    // Current resting position of every node; empty while in transit.
    std::vector<std::optional<Point>> present(n);
    for (std::size_t k = 0; k < config.num_stationary; ++k) {
        const NodeId id = config.num_mobile + k;
        const Point p = world.locations.at(world.stationary_placement.at(k));
        present[id] = p;
        timeline.per_node[id].push_back({id, p, 0.0, end});
    }

    std::vector<NodeState> nodes(config.num_mobile);
    Rng rng = Rng::derive(config.rng_seed, 1);
    std::priority_queue<Event, std::vector<Event>, std::greater<>> queue;

    for (NodeId id = 0; id < config.num_mobile; ++id) {
        nodes[id].id = id;
        nodes[id].home = world.homes.at(id);
        queue.push({0.0, id, EventKind::arrive, kHome});
    }

    auto encountered_at = [&](NodeId self, Point p) {
        std::uint64_t count = 0;
        for (NodeId other = 0; other < n; ++other)
            if (other != self && present[other] && distance(*present[other], p) <= ranges[self])
                ++count;
        return count;
    };

    while (!queue.empty()) {
        const Event ev = queue.top();
        queue.pop();
        NodeState& node = nodes[ev.node];
        auto& intervals = timeline.per_node[ev.node];

        if (ev.kind == EventKind::arrive) {
            if (ev.time >= end)
                continue;
            const Point p = cell_position(node, ev.target, world);
            update_seen(node, ev.target, encountered_at(ev.node, p));
            node.current_cell = ev.target;
            node.phase = Phase::waiting;
            present[ev.node] = p;
            const double leave = ev.time + rng.exponential(config.wait_time_mean);
            node.phase_end = leave;
            intervals.push_back({ev.node, p, ev.time, std::min(leave, end)});
            if (leave < end)
                queue.push({leave, ev.node, EventKind::depart, 0});
        } else {
            present[ev.node].reset();
            const std::size_t dest = choose_destination(node, world, config.alpha, r0, rng);
            node.phase = Phase::traveling;
            node.phase_end = ev.time + config.trip_duration;
            queue.push({node.phase_end, ev.node, EventKind::arrive, dest});
        }
    }
    return timeline;
}

} // namespace swim
