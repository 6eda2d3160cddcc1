#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

#include "swim/contact_log.hpp"

namespace swim {

/// Symmetric N x N pairwise contact counts with a zero diagonal.
class ContactCountMatrix {
public:
    explicit ContactCountMatrix(std::size_t n) : n_(n), counts_(n * n, 0) {}

    std::size_t size() const { return n_; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return counts_[i * n_ + j]; }

    // Adds to both (i, j) and (j, i).
    void add(std::size_t i, std::size_t j, std::uint64_t c = 1);

    std::uint64_t upper_sum() const;
    ContactCountMatrix scaled(std::uint64_t factor) const;

private:
    std::size_t n_;
    std::vector<std::uint64_t> counts_;
};

/// Counts normalized so the upper triangle sums to one.
class PairProbabilityMatrix {
public:
    PairProbabilityMatrix(std::size_t n, std::vector<double> probs)
        : n_(n), probs_(std::move(probs))
    {
    }

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return probs_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> probs_;
};

/// Ascending upper triangle of a PairProbabilityMatrix.
struct SortedPairCurve {
    std::vector<double> values;
};

struct CcdfPoint {
    double x;
    double ccdf;

    friend bool operator==(const CcdfPoint&, const CcdfPoint&) = default;
};

using CcdfSeries = std::vector<CcdfPoint>;

// contacts-per-hour value -> number of (node, hour) cells with that value
using CountHistogram = std::map<std::uint64_t, std::uint64_t>;

ContactCountMatrix contact_count_matrix(const ContactLog& log);

/// Divides every entry by the upper-triangle sum. Throws swim::Error
/// ("no contacts in log") when the matrix is all zero.
PairProbabilityMatrix pair_probability(const ContactCountMatrix& counts);

SortedPairCurve sorted_pair_curve(const PairProbabilityMatrix& probs);

/// Fraction of samples strictly greater than x, at each distinct sample.
CcdfSeries empirical_ccdf(std::vector<double> samples);

CcdfSeries contact_duration_ccdf(const ContactLog& log);

/// Per pair, the gaps between consecutive contacts, pooled.
std::vector<double> intercontact_gaps(const ContactLog& log);
CcdfSeries intercontact_ccdf(const ContactLog& log);

/// Number of whole hours on the [0, span_end] grid; a partial last hour
/// counts as a full one.
std::size_t hour_grid_size(const ContactLog& log);

/// Contacts are credited to both endpoints in the hour of their start.
CountHistogram contacts_per_hour_per_node(const ContactLog& log);

std::array<std::uint64_t, 24> contacts_by_hour_of_day(const ContactLog& log, double offset_hours);

/// Writes pair_curve.csv, contact_duration_ccdf.csv, intercontact_ccdf.csv,
/// contacts_per_hour_per_node.csv, hour_of_day.csv and pair_matrix.csv.
void write_metric_bundle(const ContactLog& log, double offset_hours,
                         const std::filesystem::path& outdir);

std::string pair_curve_csv(const SortedPairCurve& curve);
std::string ccdf_csv(const CcdfSeries& series);
std::string per_hour_csv(const CountHistogram& hist);
std::string hour_of_day_csv(const std::array<std::uint64_t, 24>& buckets);
std::string pair_matrix_csv(const PairProbabilityMatrix& probs);

} // namespace swim
