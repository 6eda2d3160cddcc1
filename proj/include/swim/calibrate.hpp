#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "swim/metrics.hpp"
#include "swim/scenario.hpp"

namespace swim {

inline constexpr std::size_t kResamplePoints = 1001;

/// Shape descriptors of a sorted pair curve, used to apply the alpha thumb
/// rule: a flat curve suggests a low alpha, a sharp late rise a high one.
struct CurveFeatures {
    double zero_fraction = 0.0;
    double tail_max = 0.0;
    // First index whose value exceeds twice the curve mean, divided by the
    // curve length; 1 when no value does.
    double knee_index_fraction = 0.0;
    // Mean step over the top decile divided by mean step below the knee.
    // 0 when the top decile is flat, +inf when only the sub-knee part is.
    double tail_slope_ratio = 0.0;
};

/// Throws swim::Error for curves shorter than 10 values.
CurveFeatures thumb_rule_features(const std::vector<double>& curve);
inline CurveFeatures thumb_rule_features(const SortedPairCurve& curve)
{
    return thumb_rule_features(curve.values);
}

/// Nearest-index lookup at `points` evenly spaced quantiles, first and
/// last value included.
std::vector<double> resample_curve(const std::vector<double>& curve,
                                   std::size_t points = kResamplePoints);

/// Mean absolute difference of two equally long resampled curves.
double resampled_distance(const std::vector<double>& r1, const std::vector<double>& r2);

double curve_distance(const SortedPairCurve& c1, const SortedPairCurve& c2);

enum class Execution { serial, parallel };

struct SweepPoint {
    double alpha = 0.0;
    std::vector<double> mean_curve;           // resampled, averaged over replications
    double distance = 0.0;                    // mean_curve vs resampled target
    CurveFeatures features;                   // of mean_curve
    std::vector<CurveFeatures> replications;  // of each replication's full curve
};

struct SweepResult {
    std::vector<SweepPoint> points; // in the order of the requested alphas
    double recommended_alpha = 0.0;
};

/// Sorted pair curve of one beacon-sampled simulation of `config`.
SortedPairCurve simulated_curve(const ScenarioConfig& config);

/// Runs `replications` simulations per alpha. Replication r of every alpha
/// uses seed replication_seed(config.rng_seed, r), so alphas are compared
/// on the same worlds. The recommendation is the argmin distance, ties
/// going to the smaller alpha.
SweepResult alpha_sweep(const ScenarioConfig& config, const SortedPairCurve& target,
                        const std::vector<double>& alphas, std::size_t replications,
                        Execution exec = Execution::parallel);

std::vector<double> default_alpha_grid();

std::string alpha_label(double alpha);
std::string sweep_report_csv(const SweepResult& result);
void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& outdir);

} // namespace swim
