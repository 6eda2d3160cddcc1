#include "swim/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "swim/csv.hpp"
#include "swim/error.hpp"

namespace swim {

void ContactCountMatrix::add(std::size_t i, std::size_t j, std::uint64_t c)
{
    if (i == j)
        throw Error("self-contact in count matrix");
    counts_[i * n_ + j] += c;
    counts_[j * n_ + i] += c;
}

std::uint64_t ContactCountMatrix::upper_sum() const
{
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            s += (*this)(i, j);
    return s;
}

ContactCountMatrix ContactCountMatrix::scaled(std::uint64_t factor) const
{
    ContactCountMatrix out = *this;
    for (auto& c : out.counts_)
        c *= factor;
    return out;
}

ContactCountMatrix contact_count_matrix(const ContactLog& log)
{
    ContactCountMatrix m(log.num_nodes);
    for (const auto& r : log.records) {
        if (r.a >= log.num_nodes || r.b >= log.num_nodes)
            throw Error("contact record references node outside the log");
        m.add(r.a, r.b);
    }
    return m;
}

PairProbabilityMatrix pair_probability(const ContactCountMatrix& counts)
{
    const auto total = counts.upper_sum();
    if (total == 0)
        throw Error("no contacts in log");
    const auto n = counts.size();
    const auto denom = static_cast<double>(total);
    std::vector<double> probs(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            probs[i * n + j] = static_cast<double>(counts(i, j)) / denom;
    return {n, std::move(probs)};
}

SortedPairCurve sorted_pair_curve(const PairProbabilityMatrix& probs)
{
    SortedPairCurve curve;
    const auto n = probs.size();
    curve.values.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            curve.values.push_back(probs(i, j));
    std::sort(curve.values.begin(), curve.values.end());
    return curve;
}

CcdfSeries empirical_ccdf(std::vector<double> samples)
{
    CcdfSeries out;
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    for (std::size_t i = 0; i < samples.size();) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i])
            ++j;
        out.push_back({samples[i], static_cast<double>(samples.size() - j) / n});
        i = j;
    }
    return out;
}

CcdfSeries contact_duration_ccdf(const ContactLog& log)
{
    if (log.empty())
        throw Error("no contacts in log");
    std::vector<double> d;
    d.reserve(log.records.size());
    for (const auto& r : log.records)
        d.push_back(r.duration());
    return empirical_ccdf(std::move(d));
}

std::vector<double> intercontact_gaps(const ContactLog& log)
{
    std::vector<ContactRecord> recs = log.records;
    std::sort(recs.begin(), recs.end(), [](const ContactRecord& l, const ContactRecord& r) {
        return std::tie(l.a, l.b, l.t_start) < std::tie(r.a, r.b, r.t_start);
    });
    std::vector<double> gaps;
    for (std::size_t i = 1; i < recs.size(); ++i)
        if (recs[i].a == recs[i - 1].a && recs[i].b == recs[i - 1].b)
            gaps.push_back(recs[i].t_start - recs[i - 1].t_end);
    return gaps;
}

CcdfSeries intercontact_ccdf(const ContactLog& log)
{
    if (log.empty())
        throw Error("no contacts in log");
    auto gaps = intercontact_gaps(log);
    if (gaps.empty())
        throw Error("no node pair has two or more contacts");
    return empirical_ccdf(std::move(gaps));
}

std::size_t hour_grid_size(const ContactLog& log)
{
    double end = log.span_end;
    for (const auto& r : log.records)
        end = std::max(end, r.t_start);
    if (!(end > 0.0))
        return log.records.empty() ? 0 : 1;
    auto hours = static_cast<std::size_t>(std::ceil(end / 3600.0));
    // A contact starting exactly on the grid end still needs its cell.
    for (const auto& r : log.records)
        hours = std::max(hours, static_cast<std::size_t>(std::floor(r.t_start / 3600.0)) + 1);
    return hours;
}

CountHistogram contacts_per_hour_per_node(const ContactLog& log)
{
    const std::size_t hours = hour_grid_size(log);
    std::vector<std::uint64_t> cells(log.num_nodes * hours, 0);
    for (const auto& r : log.records) {
        if (r.t_start < 0.0)
            throw Error("contact starts before t = 0; shift the trace with t0");
        const auto h = static_cast<std::size_t>(std::floor(r.t_start / 3600.0));
        ++cells[r.a * hours + h];
        ++cells[r.b * hours + h];
    }
    CountHistogram hist;
    for (auto c : cells)
        ++hist[c];
    return hist;
}

std::array<std::uint64_t, 24> contacts_by_hour_of_day(const ContactLog& log, double offset_hours)
{
    std::array<std::uint64_t, 24> buckets{};
    for (const auto& r : log.records) {
        double h = std::floor(r.t_start / 3600.0 + offset_hours);
        double m = std::fmod(h, 24.0);
        if (m < 0.0)
            m += 24.0;
        ++buckets[static_cast<std::size_t>(m)];
    }
    return buckets;
}

std::string pair_curve_csv(const SortedPairCurve& curve)
{
    std::string out = "pair_index,probability\n";
    for (std::size_t i = 0; i < curve.values.size(); ++i)
        out += std::to_string(i) + "," + format_value(curve.values[i]) + "\n";
    return out;
}

std::string ccdf_csv(const CcdfSeries& series)
{
    std::string out = "seconds,ccdf\n";
    for (const auto& p : series)
        out += format_value(p.x) + "," + format_value(p.ccdf) + "\n";
    return out;
}

std::string per_hour_csv(const CountHistogram& hist)
{
    // Each contact is credited to both of its endpoints.
    std::string out = "contacts,frequency\n";
    for (const auto& [value, freq] : hist)
        out += std::to_string(value) + "," + std::to_string(freq) + "\n";
    return out;
}

std::string hour_of_day_csv(const std::array<std::uint64_t, 24>& buckets)
{
    std::string out = "hour,contacts\n";
    for (std::size_t h = 0; h < buckets.size(); ++h)
        out += std::to_string(h) + "," + std::to_string(buckets[h]) + "\n";
    return out;
}

std::string pair_matrix_csv(const PairProbabilityMatrix& probs)
{
    std::string out = "node";
    for (std::size_t j = 0; j < probs.size(); ++j)
        out += "," + std::to_string(j);
    out += "\n";
    for (std::size_t i = 0; i < probs.size(); ++i) {
        out += std::to_string(i);
        for (std::size_t j = 0; j < probs.size(); ++j)
            out += "," + format_value(probs(i, j));
        out += "\n";
    }
    return out;
}

void write_metric_bundle(const ContactLog& log, double offset_hours,
                         const std::filesystem::path& outdir)
{
    if (log.empty())
        throw Error("no contacts in log");
    // Compute everything first so a failing metric leaves no partial bundle.
    const auto probs = pair_probability(contact_count_matrix(log));
    const auto curve = sorted_pair_curve(probs);
    const auto durations = contact_duration_ccdf(log);
    const auto gaps = intercontact_gaps(log);
    const auto per_hour = contacts_per_hour_per_node(log);
    const auto by_hour = contacts_by_hour_of_day(log, offset_hours);

    std::filesystem::create_directories(outdir);
    write_file(outdir / "pair_curve.csv", pair_curve_csv(curve));
    write_file(outdir / "contact_duration_ccdf.csv", ccdf_csv(durations));
    write_file(outdir / "intercontact_ccdf.csv", ccdf_csv(empirical_ccdf(gaps)));
    write_file(outdir / "contacts_per_hour_per_node.csv", per_hour_csv(per_hour));
    write_file(outdir / "hour_of_day.csv", hour_of_day_csv(by_hour));
    write_file(outdir / "pair_matrix.csv", pair_matrix_csv(probs));
}

} // namespace swim
