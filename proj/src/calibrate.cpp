#include "swim/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>

#include "swim/csv.hpp"
#include "swim/error.hpp"
#include "swim/pipeline.hpp"

namespace swim {

CurveFeatures thumb_rule_features(const std::vector<double>& v)
{
    const std::size_t n = v.size();
    if (n < 10)
        throw Error("curve too short for feature extraction (need >= 10 values)");

    CurveFeatures f;
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
    f.zero_fraction = static_cast<double>(std::count(v.begin(), v.end(), 0.0)) / static_cast<double>(n);
    f.tail_max = *std::max_element(v.begin(), v.end());

    std::size_t knee = n;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] > 2.0 * mean) {
            knee = i;
            break;
        }
    f.knee_index_fraction = static_cast<double>(knee) / static_cast<double>(n);

    const std::size_t decile = std::max<std::size_t>(1, (n + 9) / 10);
    const std::size_t top_start = n - decile;
    const double top_slope = (v[n - 1] - v[top_start - 1]) / static_cast<double>(decile);
    const double sub_slope =
        knee >= 2 ? (v[knee - 1] - v[0]) / static_cast<double>(knee - 1) : 0.0;

    if (top_slope == 0.0)
        f.tail_slope_ratio = 0.0;
    else if (sub_slope == 0.0)
        f.tail_slope_ratio = std::numeric_limits<double>::infinity();
    else
        f.tail_slope_ratio = top_slope / sub_slope;
    return f;
}

std::vector<double> resample_curve(const std::vector<double>& curve, std::size_t points)
{
    if (curve.empty())
        throw Error("cannot resample an empty curve");
    if (points < 2)
        throw Error("resampling needs at least two points");
    std::vector<double> out(points);
    const std::size_t last = curve.size() - 1;
    const std::size_t span = points - 1;
    for (std::size_t i = 0; i < points; ++i)
        out[i] = curve[(i * last + span / 2) / span];
    return out;
}

double resampled_distance(const std::vector<double>& r1, const std::vector<double>& r2)
{
    if (r1.size() != r2.size() || r1.empty())
        throw Error("resampled curves differ in length");
    double s = 0.0;
    for (std::size_t i = 0; i < r1.size(); ++i)
        s += std::abs(r1[i] - r2[i]);
    return s / static_cast<double>(r1.size());
}

double curve_distance(const SortedPairCurve& c1, const SortedPairCurve& c2)
{
    return resampled_distance(resample_curve(c1.values), resample_curve(c2.values));
}

SortedPairCurve simulated_curve(const ScenarioConfig& config)
{
    const auto out = simulate(config, false);
    return sorted_pair_curve(pair_probability(contact_count_matrix(out.contacts)));
}

namespace {

struct Job {
    std::vector<double> resampled;
    CurveFeatures features;
    std::exception_ptr error;
};

void run_job(const ScenarioConfig& base, double alpha, std::size_t rep, Job& job)
{
    try {
        ScenarioConfig cfg = base;
        cfg.alpha = alpha;
        cfg.rng_seed = replication_seed(base.rng_seed, rep);
        const auto curve = simulated_curve(cfg);
        job.resampled = resample_curve(curve.values);
        job.features = thumb_rule_features(curve);
    } catch (...) {
        job.error = std::current_exception();
    }
}

} // namespace

SweepResult alpha_sweep(const ScenarioConfig& config, const SortedPairCurve& target,
                        const std::vector<double>& alphas, std::size_t replications,
                        Execution exec)
{
    if (alphas.empty())
        throw Error("alpha list is empty");
    if (replications == 0)
        throw Error("replications must be >= 1");
    for (double a : alphas)
        if (!(a >= 0.0 && a <= 1.0))
            throw Error("alpha " + format_value(a) + " out of [0,1]");
    config.validate();
    const auto target_resampled = resample_curve(target.values);

    const std::size_t total = alphas.size() * replications;
    std::vector<Job> jobs(total);
    if (exec == Execution::parallel) {
        const auto count = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t k = 0; k < count; ++k) {
            const auto j = static_cast<std::size_t>(k);
            run_job(config, alphas[j / replications], j % replications, jobs[j]);
        }
    } else {
        for (std::size_t j = 0; j < total; ++j)
            run_job(config, alphas[j / replications], j % replications, jobs[j]);
    }
    for (const auto& job : jobs)
        if (job.error)
            std::rethrow_exception(job.error);

    SweepResult result;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        SweepPoint p;
        p.alpha = alphas[ai];
        p.mean_curve.assign(kResamplePoints, 0.0);
        for (std::size_t r = 0; r < replications; ++r) {
            const auto& job = jobs[ai * replications + r];
            for (std::size_t i = 0; i < kResamplePoints; ++i)
                p.mean_curve[i] += job.resampled[i];
            p.replications.push_back(job.features);
        }
        for (auto& v : p.mean_curve)
            v /= static_cast<double>(replications);
        p.distance = resampled_distance(p.mean_curve, target_resampled);
        p.features = thumb_rule_features(p.mean_curve);
        if (p.distance < best || (p.distance == best && p.alpha < result.recommended_alpha)) {
            best = p.distance;
            result.recommended_alpha = p.alpha;
        }
        result.points.push_back(std::move(p));
    }
    return result;
}

std::vector<double> default_alpha_grid()
{
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i)
        grid.push_back(i / 10.0);
    return grid;
}

std::string alpha_label(double alpha)
{
    return format_value(alpha);
}

std::string sweep_report_csv(const SweepResult& result)
{
    std::string out = "alpha,distance,zero_fraction,tail_max,knee_index_fraction,tail_slope_ratio\n";
    for (const auto& p : result.points)
        out += format_value(p.alpha) + "," + format_value(p.distance) + ","
               + format_value(p.features.zero_fraction) + "," + format_value(p.features.tail_max)
               + "," + format_value(p.features.knee_index_fraction) + ","
               + format_value(p.features.tail_slope_ratio) + "\n";
    return out;
}

void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& outdir)
{
    std::filesystem::create_directories(outdir);
    write_file(outdir / "sweep_report.csv", sweep_report_csv(result));
    for (const auto& p : result.points)
        write_file(outdir / ("pair_curve_alpha_" + alpha_label(p.alpha) + ".csv"),
                   pair_curve_csv(SortedPairCurve{p.mean_curve}));
}

} // namespace swim
