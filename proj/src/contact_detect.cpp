#include "swim/contact_detect.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

#include "swim/error.hpp"

namespace swim {

std::vector<ContactRecord> detect_pair(const std::vector<PresenceInterval>& ai,
                                       const std::vector<PresenceInterval>& bi, NodeId a,
                                       NodeId b, double range)
{
    std::vector<ContactRecord> out;
    std::size_t i = 0, j = 0;
    while (i < ai.size() && j < bi.size()) {
        const auto& x = ai[i];
        const auto& y = bi[j];
        const double s = std::max(x.t_start, y.t_start);
        const double e = std::min(x.t_end, y.t_end);
        if (s < e && distance(x.position, y.position) <= range) {
            if (!out.empty() && s <= out.back().t_end)
                out.back().t_end = std::max(out.back().t_end, e);
            else
                out.push_back({a, b, s, e});
        }
        if (x.t_end < y.t_end)
            ++i;
        else if (y.t_end < x.t_end)
            ++j;
        else {
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

struct Pair {
    NodeId a, b;
};

std::vector<Pair> all_pairs(std::size_t n)
{
    std::vector<Pair> pairs;
    pairs.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            pairs.push_back({a, b});
    return pairs;
}

void check_ranges(const MovementTimeline& t, std::span<const double> ranges)
{
    if (ranges.size() != t.num_nodes())
        throw Error("radio range list does not match node count");
}

ContactLog assemble(const MovementTimeline& t, std::vector<std::vector<ContactRecord>>& per_pair)
{
    ContactLog log;
    log.num_nodes = t.num_nodes();
    log.span_start = 0.0;
    log.span_end = t.span_end;
    std::size_t total = 0;
    for (const auto& v : per_pair)
        total += v.size();
    log.records.reserve(total);
    for (auto& v : per_pair)
        log.records.insert(log.records.end(), v.begin(), v.end());
    sort_by_time(log.records);
    return log;
}

} // namespace

ContactLog detect_contacts_serial(const MovementTimeline& t, std::span<const double> ranges)
{
    check_ranges(t, ranges);
    const auto pairs = all_pairs(t.num_nodes());
    std::vector<std::vector<ContactRecord>> per_pair(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [a, b] = pairs[k];
        per_pair[k] = detect_pair(t.per_node[a], t.per_node[b], a, b, std::max(ranges[a], ranges[b]));
    }
    return assemble(t, per_pair);
}

ContactLog detect_contacts(const MovementTimeline& t, std::span<const double> ranges)
{
    check_ranges(t, ranges);
    const auto pairs = all_pairs(t.num_nodes());
    std::vector<std::vector<ContactRecord>> per_pair(pairs.size());
    const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const auto [a, b] = pairs[static_cast<std::size_t>(k)];
        per_pair[static_cast<std::size_t>(k)] =
            detect_pair(t.per_node[a], t.per_node[b], a, b, std::max(ranges[a], ranges[b]));
    }
    return assemble(t, per_pair);
}

namespace {

// Scan times of one node inside [s, e], if any.
struct ScanWindow {
    double first;
    double last;
};

std::optional<ScanWindow> scans_within(double s, double e, double period)
{
    const double k0 = std::ceil(s / period);
    const double k1 = std::floor(e / period);
    if (k0 > k1)
        return std::nullopt;
    return ScanWindow{k0 * period, k1 * period};
}

} // namespace

ContactLog quantize_to_beacons(const ContactLog& log, std::span<const double> beacon_intervals,
                               double experiment_end, bool merge)
{
    if (beacon_intervals.size() < log.num_nodes)
        throw Error("beacon interval list does not cover every node");
    for (double p : beacon_intervals)
        if (!(p > 0.0))
            throw Error("beacon intervals must be > 0");

    std::vector<ContactRecord> observed;
    observed.reserve(log.records.size());
    for (const auto& r : log.records) {
        const double pa = beacon_intervals[r.a];
        const double pb = beacon_intervals[r.b];
        const auto wa = scans_within(r.t_start, r.t_end, pa);
        const auto wb = scans_within(r.t_start, r.t_end, pb);
        if (!wa && !wb)
            continue;
        double first = std::min(wa ? wa->first : INFINITY, wb ? wb->first : INFINITY);
        double last = std::max(wa ? wa->last : -INFINITY, wb ? wb->last : -INFINITY);
        // On a tie the earlier follow-up scan ends visibility.
        double follow = INFINITY;
        if (wa && wa->last == last)
            follow = std::min(follow, pa);
        if (wb && wb->last == last)
            follow = std::min(follow, pb);
        observed.push_back({r.a, r.b, first, std::min(last + follow, experiment_end)});
    }

    if (merge) {
        std::sort(observed.begin(), observed.end(), [](const ContactRecord& l, const ContactRecord& r) {
            return std::tie(l.a, l.b, l.t_start, l.t_end) < std::tie(r.a, r.b, r.t_start, r.t_end);
        });
        std::vector<ContactRecord> merged;
        merged.reserve(observed.size());
        for (const auto& r : observed) {
            if (!merged.empty()) {
                auto& last = merged.back();
                const double gap_limit =
                    std::max(beacon_intervals[r.a], beacon_intervals[r.b]);
                if (last.a == r.a && last.b == r.b && r.t_start - last.t_end <= gap_limit) {
                    last.t_end = std::max(last.t_end, r.t_end);
                    continue;
                }
            }
            merged.push_back(r);
        }
        observed = std::move(merged);
    }
    sort_by_time(observed);

    ContactLog out;
    out.records = std::move(observed);
    out.num_nodes = log.num_nodes;
    out.span_start = log.span_start;
    out.span_end = log.span_end;
    return out;
}

} // namespace swim
