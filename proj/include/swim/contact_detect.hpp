#pragma once

#include <span>

#include "swim/contact_log.hpp"
#include "swim/mobility.hpp"

namespace swim {

/// Ground-truth contacts: maximal intervals during which both nodes of a
/// pair are at rest within max(range_a, range_b) of each other. Only
/// overlaps of positive length count. Pairs are scanned in parallel; the
/// result is independent of the thread count.
ContactLog detect_contacts(const MovementTimeline& timeline, std::span<const double> radio_ranges);

/// Single-threaded reference for detect_contacts.
ContactLog detect_contacts_serial(const MovementTimeline& timeline,
                                  std::span<const double> radio_ranges);

/// Contacts of one pair (a < b), time-ordered and merged.
std::vector<ContactRecord> detect_pair(const std::vector<PresenceInterval>& a_intervals,
                                       const std::vector<PresenceInterval>& b_intervals,
                                       NodeId a, NodeId b, double range);

/// Beacon-sampling measurement model. Node n scans at k * interval(n),
/// k = 0, 1, ...; a contact is observed iff some scan of either node
/// falls inside it. Observed contacts run from the first such scan to the
/// last scan plus that scanner's interval, clipped to `experiment_end`,
/// and are merged per pair across gaps up to max(interval_a, interval_b)
/// unless `merge` is false.
ContactLog quantize_to_beacons(const ContactLog& log, std::span<const double> beacon_intervals,
                               double experiment_end, bool merge = true);

} // namespace swim
