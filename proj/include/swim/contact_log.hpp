#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "swim/scenario.hpp"

namespace swim {

/// One contact interval between two nodes, stored with a < b.
struct ContactRecord {
    NodeId a = 0;
    NodeId b = 0;
    double t_start = 0.0;
    double t_end = 0.0;

    double duration() const { return t_end - t_start; }

    friend bool operator==(const ContactRecord&, const ContactRecord&) = default;
};

struct ContactLog {
    std::vector<ContactRecord> records; // sorted by (t_start, a, b)
    std::size_t num_nodes = 0;
    double span_start = 0.0;
    double span_end = 0.0;

    bool empty() const { return records.empty(); }

    friend bool operator==(const ContactLog&, const ContactLog&) = default;
};

/// Orients every record as a < b, merges overlapping or touching records
/// of the same pair, and sorts by (t_start, a, b). Span and node count are
/// left alone. Throws swim::Error on a self-contact or a reversed interval.
void normalize(ContactLog& log);

/// Sort order of a normalized log.
void sort_by_time(std::vector<ContactRecord>& records);

/// Parses `a b t_start t_end [ignored...]` lines.
///
/// If the document starts with the `# nodes=N span=S,E` header written by
/// write_contact_trace, ids are taken as already dense in [0, N) and the
/// span is read from the header. Otherwise ids are remapped densely in
/// order of first appearance and the span is [min start, max end].
/// `t0` is subtracted from every timestamp.
ContactLog parse_contact_trace(std::string_view text, double t0 = 0.0);

/// Header line plus one record per line, times with three decimals.
std::string write_contact_trace(const ContactLog& log);

} // namespace swim
