// swimcal: simulate SWIM contact traces, analyze traces, compare two traces
// and calibrate alpha against a target trace.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "swim/calibrate.hpp"
#include "swim/contact_log.hpp"
#include "swim/csv.hpp"
#include "swim/error.hpp"
#include "swim/metrics.hpp"
#include "swim/pipeline.hpp"
#include "swim/scenario.hpp"

namespace fs = std::filesystem;
using namespace swim;

namespace {

ScenarioConfig load_config_file(const std::string& path)
{
    try {
        return load_scenario(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ":" + std::to_string(e.line()) + ": "
                    + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
}

ContactLog load_trace(const std::string& path, double t0)
{
    try {
        return parse_contact_trace(read_file(path), t0);
    } catch (const ParseError& e) {
        throw Error(path + ":" + std::to_string(e.line()) + ": "
                    + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
}

SortedPairCurve curve_of(const ContactLog& log)
{
    return sorted_pair_curve(pair_probability(contact_count_matrix(log)));
}

// Value of a right-continuous step function at x; 1 left of the first point.
double step_at(const CcdfSeries& s, double x)
{
    auto it = std::upper_bound(s.begin(), s.end(), x,
                               [](double v, const CcdfPoint& p) { return v < p.x; });
    if (it == s.begin())
        return 1.0;
    return std::prev(it)->ccdf;
}

std::string joined_ccdf_csv(const CcdfSeries& a, const CcdfSeries& b)
{
    std::set<double> xs;
    for (const auto& p : a)
        xs.insert(p.x);
    for (const auto& p : b)
        xs.insert(p.x);
    std::string out = "seconds,ccdf_a,ccdf_b\n";
    for (double x : xs)
        out += format_value(x) + "," + format_value(step_at(a, x)) + ","
               + format_value(step_at(b, x)) + "\n";
    return out;
}

std::string joined_curve_csv(const SortedPairCurve& a, const SortedPairCurve& b)
{
    const auto ra = resample_curve(a.values);
    const auto rb = resample_curve(b.values);
    std::string out = "quantile,probability_a,probability_b\n";
    for (std::size_t i = 0; i < ra.size(); ++i)
        out += format_value(static_cast<double>(i) / static_cast<double>(ra.size() - 1)) + ","
               + format_value(ra[i]) + "," + format_value(rb[i]) + "\n";
    return out;
}

std::string joined_histogram_csv(const CountHistogram& a, const CountHistogram& b)
{
    std::set<std::uint64_t> keys;
    for (const auto& [k, v] : a)
        keys.insert(k);
    for (const auto& [k, v] : b)
        keys.insert(k);
    auto get = [](const CountHistogram& h, std::uint64_t k) {
        auto it = h.find(k);
        return it == h.end() ? std::uint64_t{0} : it->second;
    };
    std::string out = "contacts,frequency_a,frequency_b\n";
    for (auto k : keys)
        out += std::to_string(k) + "," + std::to_string(get(a, k)) + "," + std::to_string(get(b, k))
               + "\n";
    return out;
}

std::string joined_hours_csv(const std::array<std::uint64_t, 24>& a,
                             const std::array<std::uint64_t, 24>& b)
{
    std::string out = "hour,contacts_a,contacts_b\n";
    for (std::size_t h = 0; h < 24; ++h)
        out += std::to_string(h) + "," + std::to_string(a[h]) + "," + std::to_string(b[h]) + "\n";
    return out;
}

CcdfSeries gaps_ccdf(const ContactLog& log)
{
    return empirical_ccdf(intercontact_gaps(log));
}

int cmd_simulate(const std::string& config_path, std::optional<std::uint64_t> seed,
                 const std::string& out_path, bool ground_truth, const std::string& movement_path)
{
    ScenarioConfig config = load_config_file(config_path);
    if (seed)
        config.rng_seed = *seed;
    const auto sim = simulate(config, ground_truth);
    write_file(out_path, write_contact_trace(sim.contacts));
    if (!movement_path.empty())
        write_file(movement_path, movement_csv(sim.timeline));
    std::cout << "nodes=" << sim.contacts.num_nodes << " records=" << sim.contacts.records.size()
              << " span=" << format_value(sim.contacts.span_start) << ","
              << format_value(sim.contacts.span_end) << "\n";
    return 0;
}

int cmd_analyze(const std::string& trace_path, double t0, double hour_offset,
                const std::string& outdir)
{
    const auto log = load_trace(trace_path, t0);
    write_metric_bundle(log, hour_offset, outdir);
    std::cout << "nodes=" << log.num_nodes << " records=" << log.records.size() << "\n";
    return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, double t0,
                double hour_offset, const std::string& outdir)
{
    const auto a = load_trace(path_a, t0);
    const auto b = load_trace(path_b, t0);
    for (const auto* log : {&a, &b})
        if (log->empty())
            throw Error("no contacts in log");

    const auto ca = curve_of(a);
    const auto cb = curve_of(b);
    const auto fa = thumb_rule_features(resample_curve(ca.values));
    const auto fb = thumb_rule_features(resample_curve(cb.values));

    fs::create_directories(outdir);
    const fs::path dir(outdir);
    write_file(dir / "pair_curve.csv", joined_curve_csv(ca, cb));
    write_file(dir / "contact_duration_ccdf.csv",
               joined_ccdf_csv(contact_duration_ccdf(a), contact_duration_ccdf(b)));
    write_file(dir / "intercontact_ccdf.csv", joined_ccdf_csv(gaps_ccdf(a), gaps_ccdf(b)));
    write_file(dir / "contacts_per_hour_per_node.csv",
               joined_histogram_csv(contacts_per_hour_per_node(a), contacts_per_hour_per_node(b)));
    write_file(dir / "hour_of_day.csv", joined_hours_csv(contacts_by_hour_of_day(a, hour_offset),
                                                         contacts_by_hour_of_day(b, hour_offset)));

    // Deltas are |a - b| so swapping the inputs leaves the summary unchanged.
    std::string summary = "metric,value\n";
    auto row = [&](const std::string& name, double v) {
        summary += name + "," + format_value(v) + "\n";
    };
    const double dist = curve_distance(ca, cb);
    row("curve_distance", dist);
    row("zero_fraction_delta", std::abs(fa.zero_fraction - fb.zero_fraction));
    row("tail_max_delta", std::abs(fa.tail_max - fb.tail_max));
    row("knee_index_fraction_delta", std::abs(fa.knee_index_fraction - fb.knee_index_fraction));
    const double ratio_delta = (fa.tail_slope_ratio == fb.tail_slope_ratio)
                                   ? 0.0
                                   : std::abs(fa.tail_slope_ratio - fb.tail_slope_ratio);
    row("tail_slope_ratio_delta", ratio_delta);
    write_file(dir / "summary.csv", summary);
    std::cout << "curve_distance=" << format_value(dist) << "\n";
    return 0;
}

std::vector<double> parse_alphas(const std::string& text)
{
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error("--alphas: cannot parse '" + tok + "'");
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

int cmd_sweep(const std::string& config_path, const std::string& target_path,
              const std::string& alphas_text, std::size_t reps, double t0,
              const std::string& outdir)
{
    const auto config = load_config_file(config_path);
    const auto target = load_trace(target_path, t0);
    const auto alphas = alphas_text.empty() ? default_alpha_grid() : parse_alphas(alphas_text);
    const auto result = alpha_sweep(config, curve_of(target), alphas, reps);
    write_sweep_outputs(result, outdir);
    std::cout << "recommended_alpha=" << format_value(result.recommended_alpha) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"SWIM mobility simulation, contact-trace metrics and alpha calibration"};
    app.require_subcommand(1);

    std::string config_path, out_path = "sim.trace", movement_path;
    std::uint64_t seed = 0;
    bool ground_truth = false;
    auto* sim = app.add_subcommand("simulate", "Run SWIM and write a contact trace");
    sim->add_option("--config", config_path, "Scenario file (key=value)")->required();
    auto* seed_opt = sim->add_option("--seed", seed, "Override rng_seed");
    sim->add_option("--out", out_path, "Output trace");
    sim->add_flag("--ground-truth", ground_truth, "Skip beacon sampling");
    sim->add_option("--movement", movement_path, "Optional movement CSV dump");

    std::string trace_path, outdir = ".";
    double t0 = 0.0, hour_offset = 0.0;
    auto* analyze = app.add_subcommand("analyze", "Write the metric CSVs of a trace");
    analyze->add_option("--trace", trace_path, "Contact trace")->required();
    analyze->add_option("--t0", t0, "Epoch subtracted from every timestamp");
    analyze->add_option("--hour-offset", hour_offset, "Wall-clock hour at t = 0");
    analyze->add_option("--outdir", outdir, "Output directory");

    std::string trace_a, trace_b;
    auto* compare = app.add_subcommand("compare", "Side-by-side metrics of two traces");
    compare->add_option("--trace-a", trace_a, "First trace")->required();
    compare->add_option("--trace-b", trace_b, "Second trace")->required();
    compare->add_option("--t0", t0, "Epoch subtracted from every timestamp");
    compare->add_option("--hour-offset", hour_offset, "Wall-clock hour at t = 0");
    compare->add_option("--outdir", outdir, "Output directory")->required();

    std::string target_path, alphas_text;
    std::size_t reps = 10;
    auto* sweep = app.add_subcommand("sweep", "Recommend alpha for a target trace");
    sweep->add_option("--config", config_path, "Scenario file (key=value)")->required();
    sweep->add_option("--target", target_path, "Target contact trace")->required();
    sweep->add_option("--alphas", alphas_text, "Comma-separated alpha grid (default 0,0.1,...,1)");
    sweep->add_option("--reps", reps, "Replications per alpha")->check(CLI::PositiveNumber);
    sweep->add_option("--t0", t0, "Epoch subtracted from target timestamps");
    sweep->add_option("--outdir", outdir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (sim->parsed())
            return cmd_simulate(config_path, seed_opt->count() ? std::optional(seed) : std::nullopt,
                                out_path, ground_truth, movement_path);
        if (analyze->parsed())
            return cmd_analyze(trace_path, t0, hour_offset, outdir);
        if (compare->parsed())
            return cmd_compare(trace_a, trace_b, t0, hour_offset, outdir);
        if (sweep->parsed())
            return cmd_sweep(config_path, target_path, alphas_text, reps, t0, outdir);
    } catch (const std::exception& e) {
        std::cerr << "swimcal: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
