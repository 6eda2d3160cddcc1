#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "swim/contact_log.hpp"
#include "swim/csv.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string output;
};

Result run(const std::string& args, const fs::path& dir)
{
    const auto log = dir / "cli_output.txt";
    const std::string cmd = "cd '" + dir.string() + "' && '" SWIMCAL_EXE "' " + args + " > '"
                            + log.string() + "' 2>&1";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, swim::read_file(log)};
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        static int counter = 0;
        path = fs::temp_directory_path()
               / ("swimcal_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) { swim::write_file(p, text); }

const char* kSmallConfig = "sim_duration=172800\nrng_seed=3\n";

} // namespace

TEST_CASE("cli simulate")
{
    TempDir tmp;
    write(tmp.path / "cambridge.cfg", "# defaults\n");
    write(tmp.path / "small.cfg", kSmallConfig);

    SUBCASE("identical seeds give byte-identical traces")
    {
        REQUIRE(run("simulate --config small.cfg --seed 1 --out a.trace", tmp.path).code == 0);
        REQUIRE(run("simulate --config small.cfg --seed 1 --out b.trace", tmp.path).code == 0);
        REQUIRE(run("simulate --config small.cfg --seed 2 --out c.trace", tmp.path).code == 0);
        const auto a = swim::read_file(tmp.path / "a.trace");
        CHECK(a == swim::read_file(tmp.path / "b.trace"));
        CHECK(a != swim::read_file(tmp.path / "c.trace"));
    }

    SUBCASE("ground truth keeps at least as many records")
    {
        REQUIRE(run("simulate --config small.cfg --out s.trace", tmp.path).code == 0);
        REQUIRE(run("simulate --config small.cfg --ground-truth --out g.trace --movement m.csv",
                    tmp.path)
                    .code
                == 0);
        const auto s = swim::parse_contact_trace(swim::read_file(tmp.path / "s.trace"));
        const auto g = swim::parse_contact_trace(swim::read_file(tmp.path / "g.trace"));
        CHECK(g.records.size() >= s.records.size());
        const auto movement = swim::read_file(tmp.path / "m.csv");
        CHECK(movement.rfind("node_id,x,y,t_start,t_end\n", 0) == 0);
    }

    SUBCASE("default scenario")
    {
        const auto r = run("simulate --config cambridge.cfg --out d.trace", tmp.path);
        REQUIRE(r.code == 0);
        CHECK(r.output.find("nodes=54") != std::string::npos);
        const auto log = swim::parse_contact_trace(swim::read_file(tmp.path / "d.trace"));
        CHECK(log.num_nodes == 54);
        CHECK(log.span_start == 0.0);
        CHECK(log.span_end == 950400.0);
    }

    SUBCASE("config errors")
    {
        write(tmp.path / "bad.cfg", "alpha=0.5\nalpha=1.5\n");
        const auto r = run("simulate --config bad.cfg", tmp.path);
        CHECK(r.code != 0);
        CHECK(r.output.find("bad.cfg:2") != std::string::npos);
        CHECK(r.output.find("alpha") != std::string::npos);
        CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 1);

        CHECK(run("simulate --config missing.cfg", tmp.path).code != 0);
        CHECK(run("simulate --config small.cfg --out no/such/dir/x.trace", tmp.path).code != 0);
    }
}

TEST_CASE("cli analyze")
{
    TempDir tmp;
    write(tmp.path / "small.cfg", kSmallConfig);
    REQUIRE(run("simulate --config small.cfg --out t.trace", tmp.path).code == 0);

    SUBCASE("writes the six metric files")
    {
        REQUIRE(run("analyze --trace t.trace --outdir out", tmp.path).code == 0);
        for (const char* name : {"pair_curve.csv", "contact_duration_ccdf.csv",
                                 "intercontact_ccdf.csv", "contacts_per_hour_per_node.csv",
                                 "hour_of_day.csv", "pair_matrix.csv"})
            CHECK(fs::exists(tmp.path / "out" / name));
        const auto curve = swim::read_file(tmp.path / "out" / "pair_curve.csv");
        CHECK(curve.rfind("pair_index,probability\n", 0) == 0);
        CHECK(std::count(curve.begin(), curve.end(), '\n') == 1 + 1431);
    }

    SUBCASE("hour offset rotates the hour-of-day table")
    {
        REQUIRE(run("analyze --trace t.trace --outdir h0", tmp.path).code == 0);
        REQUIRE(run("analyze --trace t.trace --hour-offset 8 --outdir h8", tmp.path).code == 0);
        auto rows = [&](const char* dir) {
            std::istringstream in(swim::read_file(tmp.path / dir / "hour_of_day.csv"));
            std::string line;
            std::getline(in, line);
            std::vector<std::string> counts;
            while (std::getline(in, line))
                counts.push_back(line.substr(line.find(',') + 1));
            return counts;
        };
        const auto h0 = rows("h0");
        const auto h8 = rows("h8");
        REQUIRE(h0.size() == 24);
        REQUIRE(h8.size() == 24);
        for (std::size_t h = 0; h < 24; ++h)
            CHECK(h8[(h + 8) % 24] == h0[h]);
    }

    SUBCASE("empty trace")
    {
        write(tmp.path / "empty.trace", "");
        const auto r = run("analyze --trace empty.trace --outdir e", tmp.path);
        CHECK(r.code != 0);
        CHECK(r.output.find("no contacts") != std::string::npos);
    }

    SUBCASE("parse error reports the line")
    {
        write(tmp.path / "broken.trace", "1 2 0 10\n3 3 0 1\n");
        const auto r = run("analyze --trace broken.trace --outdir e", tmp.path);
        CHECK(r.code != 0);
        CHECK(r.output.find("broken.trace:2") != std::string::npos);
    }

    SUBCASE("t0 shifts absolute timestamps")
    {
        write(tmp.path / "abs.trace", "5 6 1000000 1000100\n5 6 1003600 1003700\n");
        REQUIRE(run("analyze --trace abs.trace --t0 1000000 --outdir a", tmp.path).code == 0);
        const auto hist = swim::read_file(tmp.path / "a" / "contacts_per_hour_per_node.csv");
        CHECK(hist == "contacts,frequency\n1,4\n");
    }
}

TEST_CASE("cli compare")
{
    TempDir tmp;
    write(tmp.path / "a.cfg", std::string(kSmallConfig) + "alpha=0.9\n");
    write(tmp.path / "b.cfg", std::string(kSmallConfig) + "alpha=0.2\n");
    REQUIRE(run("simulate --config a.cfg --out a.trace", tmp.path).code == 0);
    REQUIRE(run("simulate --config b.cfg --out b.trace", tmp.path).code == 0);

    SUBCASE("self comparison has zero distance")
    {
        const auto r = run("compare --trace-a a.trace --trace-b a.trace --outdir same", tmp.path);
        REQUIRE(r.code == 0);
        const auto summary = swim::read_file(tmp.path / "same" / "summary.csv");
        CHECK(summary.find("curve_distance,0\n") != std::string::npos);
        for (const char* name : {"pair_curve.csv", "contact_duration_ccdf.csv",
                                 "intercontact_ccdf.csv", "contacts_per_hour_per_node.csv",
                                 "hour_of_day.csv"})
            CHECK(fs::exists(tmp.path / "same" / name));
    }

    SUBCASE("summary is symmetric")
    {
        REQUIRE(run("compare --trace-a a.trace --trace-b b.trace --outdir ab", tmp.path).code == 0);
        REQUIRE(run("compare --trace-a b.trace --trace-b a.trace --outdir ba", tmp.path).code == 0);
        const auto ab = swim::read_file(tmp.path / "ab" / "summary.csv");
        CHECK(ab == swim::read_file(tmp.path / "ba" / "summary.csv"));
        CHECK(ab.find("curve_distance,0\n") == std::string::npos);
    }

    SUBCASE("CCDFs are joined on the union of x values")
    {
        REQUIRE(run("compare --trace-a a.trace --trace-b b.trace --outdir j", tmp.path).code == 0);
        const auto joined = swim::read_file(tmp.path / "j" / "contact_duration_ccdf.csv");
        CHECK(joined.rfind("seconds,ccdf_a,ccdf_b\n", 0) == 0);
    }
}

TEST_CASE("cli sweep")
{
    TempDir tmp;
    write(tmp.path / "small.cfg", kSmallConfig);
    REQUIRE(run("simulate --config small.cfg --seed 77 --out target.trace", tmp.path).code == 0);

    const auto r = run("sweep --config small.cfg --target target.trace --alphas 0.4 --reps 2 --outdir s1",
                       tmp.path);
    REQUIRE(r.code == 0);
    CHECK(r.output.find("recommended_alpha=0.4") != std::string::npos);
    CHECK(fs::exists(tmp.path / "s1" / "pair_curve_alpha_0.4.csv"));
    const auto report = swim::read_file(tmp.path / "s1" / "sweep_report.csv");
    CHECK(report.rfind("alpha,distance,zero_fraction,tail_max,knee_index_fraction,tail_slope_ratio\n", 0)
          == 0);

    REQUIRE(run("sweep --config small.cfg --target target.trace --alphas 0.1,0.9 --reps 2 --outdir s2",
                tmp.path)
                .code
            == 0);
    REQUIRE(run("sweep --config small.cfg --target target.trace --alphas 0.1,0.9 --reps 2 --outdir s3",
                tmp.path)
                .code
            == 0);
    CHECK(swim::read_file(tmp.path / "s2" / "sweep_report.csv")
          == swim::read_file(tmp.path / "s3" / "sweep_report.csv"));

    CHECK(run("sweep --config small.cfg --target target.trace --alphas 0.1,x --outdir s4", tmp.path).code
          != 0);
}
