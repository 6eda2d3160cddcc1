#include "swim/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "swim/error.hpp"
#include "swim/text.hpp"

namespace swim {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error("invalid scenario: " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, next - pos)));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return out;
}

NodeClass parse_node_class(std::string_view value, std::size_t line)
{
    auto fields = split(value, ',');
    if (fields.size() != 5)
        throw ParseError(line, "node_class: expected <name>,<count>,<mobile|stationary>,<radio_range>,<beacon_interval>");
    NodeClass c;
    c.name = std::string(fields[0]);
    if (c.name.empty())
        throw ParseError(line, "node_class: empty name");
    auto count = parse_number<std::size_t>(fields[1]);
    if (!count)
        throw ParseError(line, "node_class: unparsable count '" + std::string(fields[1]) + "'");
    c.count = *count;
    if (fields[2] == "mobile")
        c.mobile = true;
    else if (fields[2] == "stationary")
        c.mobile = false;
    else
        throw ParseError(line, "node_class: kind must be mobile or stationary");
    auto range = parse_number<double>(fields[3]);
    auto beacon = parse_number<double>(fields[4]);
    if (!range || !beacon)
        throw ParseError(line, "node_class: unparsable radio_range or beacon_interval");
    c.radio_range = *range;
    c.beacon_interval = *beacon;
    if (!(c.radio_range > 0.0))
        throw ParseError(line, "node_class: radio_range must be > 0");
    if (!(c.beacon_interval > 0.0))
        throw ParseError(line, "node_class: beacon_interval must be > 0");
    return c;
}

template <class T>
void assign(T& field, std::string_view key, std::string_view value, std::size_t line)
{
    auto v = parse_number<T>(value);
    if (!v)
        throw ParseError(line, std::string(key) + ": unparsable value '" + std::string(value) + "'");
    field = *v;
}

} // namespace

void ScenarioConfig::validate() const
{
    require(alpha >= 0.0 && alpha <= 1.0, "alpha out of [0,1]");
    require(map_width > 0.0, "map_width must be > 0");
    require(map_height > 0.0, "map_height must be > 0");
    require(neighborhood_radius > 0.0, "neighborhood_radius must be > 0");
    require(wait_time_mean > 0.0, "wait_time_mean must be > 0");
    require(sim_duration > 0.0, "sim_duration must be > 0");
    require(trip_duration >= 0.0, "trip_duration must be >= 0");
    require(std::isfinite(map_width) && std::isfinite(map_height) && std::isfinite(sim_duration)
                && std::isfinite(trip_duration) && std::isfinite(wait_time_mean)
                && std::isfinite(neighborhood_radius),
            "non-finite value");
    require(num_stationary <= num_locations,
            "num_stationary exceeds num_locations");
    require(num_mobile == 0 || num_locations > 0, "mobile nodes need at least one location");
    require(hour_of_day_offset >= 0.0 && hour_of_day_offset < 24.0,
            "hour_of_day_offset out of [0,24)");

    std::size_t mobile = 0, stationary = 0;
    for (const auto& c : node_classes) {
        require(c.radio_range > 0.0, "node_class " + c.name + ": radio_range must be > 0");
        require(c.beacon_interval > 0.0, "node_class " + c.name + ": beacon_interval must be > 0");
        (c.mobile ? mobile : stationary) += c.count;
    }
    require(mobile == num_mobile,
            "mobile node classes cover " + std::to_string(mobile) + " nodes, num_mobile is "
                + std::to_string(num_mobile));
    require(stationary == num_stationary,
            "stationary node classes cover " + std::to_string(stationary)
                + " nodes, num_stationary is " + std::to_string(num_stationary));
}

namespace {

template <class F>
std::vector<double> per_node(const ScenarioConfig& config, F field)
{
    std::vector<double> out;
    out.reserve(config.num_nodes());
    for (bool mobile : {true, false})
        for (const auto& c : config.node_classes)
            if (c.mobile == mobile)
                out.insert(out.end(), c.count, field(c));
    return out;
}

} // namespace

std::vector<double> ScenarioConfig::radio_ranges() const
{
    return per_node(*this, [](const NodeClass& c) { return c.radio_range; });
}

std::vector<double> ScenarioConfig::beacon_intervals() const
{
    return per_node(*this, [](const NodeClass& c) { return c.beacon_interval; });
}

ScenarioConfig cambridge_default()
{
    ScenarioConfig c;
    c.num_mobile = 36;
    c.num_stationary = 18;
    c.map_width = 2000.0;
    c.map_height = 2000.0;
    c.num_locations = 38;
    c.neighborhood_radius = 100.0;
    c.alpha = 0.9;
    c.wait_time_mean = 1800.0;
    c.trip_duration = 1.0;
    c.sim_duration = 11.0 * 86400.0;
    c.rng_seed = 1;
    c.hour_of_day_offset = 0.0;
    c.node_classes = {
        {"mobile", 36, true, 11.0, 600.0},
        {"stationary-long", 4, false, 22.0, 120.0},
        {"stationary-short-fast", 2, false, 11.0, 360.0},
        {"stationary-short", 12, false, 11.0, 600.0},
    };
    return c;
}

ScenarioConfig load_scenario(std::string_view text)
{
    ScenarioConfig c = cambridge_default();
    std::vector<NodeClass> classes;
    bool saw_class = false;

    std::size_t line_no = 0;
    for (std::string_view line : lines(text)) {
        ++line_no;
        line = trim(strip_comment(line));
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, "expected key=value");
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));

        if (key == "num_mobile") assign(c.num_mobile, key, value, line_no);
        else if (key == "num_stationary") assign(c.num_stationary, key, value, line_no);
        else if (key == "map_width") assign(c.map_width, key, value, line_no);
        else if (key == "map_height") assign(c.map_height, key, value, line_no);
        else if (key == "num_locations") assign(c.num_locations, key, value, line_no);
        else if (key == "neighborhood_radius") assign(c.neighborhood_radius, key, value, line_no);
        else if (key == "alpha") assign(c.alpha, key, value, line_no);
        else if (key == "wait_time_mean") assign(c.wait_time_mean, key, value, line_no);
        else if (key == "trip_duration") assign(c.trip_duration, key, value, line_no);
        else if (key == "sim_duration") assign(c.sim_duration, key, value, line_no);
        else if (key == "rng_seed") assign(c.rng_seed, key, value, line_no);
        else if (key == "hour_of_day_offset") assign(c.hour_of_day_offset, key, value, line_no);
        else if (key == "node_class") {
            saw_class = true;
            classes.push_back(parse_node_class(value, line_no));
        } else
            throw ParseError(line_no, "unknown key '" + std::string(key) + "'");

        // Range checks that belong to a single key are reported at its line.
        try {
            if (key == "alpha")
                require(c.alpha >= 0.0 && c.alpha <= 1.0, "alpha out of [0,1]");
            else if (key == "hour_of_day_offset")
                require(c.hour_of_day_offset >= 0.0 && c.hour_of_day_offset < 24.0,
                        "hour_of_day_offset out of [0,24)");
            else if (key == "trip_duration")
                require(c.trip_duration >= 0.0, "trip_duration must be >= 0");
            else if (key == "map_width" || key == "map_height" || key == "neighborhood_radius"
                     || key == "wait_time_mean" || key == "sim_duration") {
                double v = *parse_number<double>(value);
                require(v > 0.0 && std::isfinite(v), std::string(key) + " must be > 0");
            }
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (saw_class)
        c.node_classes = std::move(classes);
    c.validate();
    return c;
}

std::string serialize_scenario(const ScenarioConfig& c)
{
    std::ostringstream out;
    out << "num_mobile=" << c.num_mobile << '\n'
        << "num_stationary=" << c.num_stationary << '\n'
        << "map_width=" << format_shortest(c.map_width) << '\n'
        << "map_height=" << format_shortest(c.map_height) << '\n'
        << "num_locations=" << c.num_locations << '\n'
        << "neighborhood_radius=" << format_shortest(c.neighborhood_radius) << '\n'
        << "alpha=" << format_shortest(c.alpha) << '\n'
        << "wait_time_mean=" << format_shortest(c.wait_time_mean) << '\n'
        << "trip_duration=" << format_shortest(c.trip_duration) << '\n'
        << "sim_duration=" << format_shortest(c.sim_duration) << '\n'
        << "rng_seed=" << c.rng_seed << '\n'
        << "hour_of_day_offset=" << format_shortest(c.hour_of_day_offset) << '\n';
    for (const auto& k : c.node_classes)
        out << "node_class=" << k.name << ',' << k.count << ','
            << (k.mobile ? "mobile" : "stationary") << ',' << format_shortest(k.radio_range)
            << ',' << format_shortest(k.beacon_interval) << '\n';
    return out.str();
}

World generate_world(const ScenarioConfig& config, Rng& rng)
{
    config.validate();
    World w;
    auto draw = [&] {
        double x = rng.uniform(0.0, config.map_width);
        double y = rng.uniform(0.0, config.map_height);
        return Point{x, y};
    };
    w.locations.reserve(config.num_locations);
    for (std::size_t i = 0; i < config.num_locations; ++i)
        w.locations.push_back(draw());
    w.homes.reserve(config.num_mobile);
    for (std::size_t i = 0; i < config.num_mobile; ++i)
        w.homes.push_back(draw());

    // Partial Fisher-Yates: first num_stationary slots are a uniform sample
    // without replacement.
    std::vector<std::size_t> idx(config.num_locations);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < config.num_stationary; ++i) {
        auto j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
        std::swap(idx[i], idx[j]);
    }
    w.stationary_placement.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(config.num_stationary));
    return w;
}

} // namespace swim
