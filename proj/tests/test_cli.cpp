// End-to-end checks of the command-line surface: JSON shapes, skip strings,
// error exits, and rerun stability. Takes --cli <path-to-hlspec>.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlspec/graph.hpp"
#include "hlspec/projective_plane.hpp"

using nlohmann::json;

namespace {

std::string g_cli_path;
int g_failures = 0;

struct CommandResult {
    int exit_code = -1;
    std::string stdout_text;
};

CommandResult run_command(const std::string& args, const std::string& env_prefix = "") {
    CommandResult result;
    const std::string command = env_prefix + "\"" + g_cli_path + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        std::fprintf(stderr, "popen failed: %s\n", command.c_str());
        exit(2);
    }
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.stdout_text.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::printf("[ok] %s\n", what.c_str());
    } else {
        std::printf("[FAILED] %s\n", what.c_str());
        ++g_failures;
    }
}

std::filesystem::path write_temp_graph(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << contents;
    return path;
}

json strip_timing(json j) {
    j.erase("duration_ms");
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--cli" && i + 1 < argc) g_cli_path = argv[++i];
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "usage: test_cli --cli <path>\n");
        return 2;
    }

    // hl on a 6-cycle: median magnitude 1, bound check skipped on degree.
    const auto c6 = write_temp_graph("hlspec_cli_c6.graph",
                                     "v 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 0\n");
    {
        const CommandResult r = run_command("hl --input \"" + c6.string() + "\"");
        expect(r.exit_code == 0, "hl on the 6-cycle exits cleanly");
        const json out = json::parse(r.stdout_text);
        expect(std::fabs(out.at("R").get<double>() - 1.0) < 1e-9, "6-cycle median magnitude is 1");
        expect(out.at("mainres") == "skipped: Δ < 3", "max-degree verdict skipped below degree 3");
        expect(out.at("deltamed") == "bound-holds", "min-degree verdict runs");

        const CommandResult again = run_command("hl --input \"" + c6.string() + "\"");
        expect(strip_timing(json::parse(again.stdout_text)) == strip_timing(out),
               "hl output is stable under rerun");
    }

    // hl on an odd-order bipartite graph: median exactly zero.
    const auto p5 = write_temp_graph("hlspec_cli_p5.graph", "v 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n");
    {
        const json out = json::parse(run_command("hl --input \"" + p5.string() + "\"").stdout_text);
        expect(out.at("R").get<double>() == 0.0, "odd-order bipartite median magnitude is exactly 0");
    }

    // hl on a non-bipartite graph: both verdicts skipped.
    const auto c5 = write_temp_graph("hlspec_cli_c5.graph", "v 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n");
    {
        const json out = json::parse(run_command("hl --input \"" + c5.string() + "\"").stdout_text);
        expect(out.at("mainres") == "skipped: not bipartite", "non-bipartite skips the degree bound");
        expect(out.at("deltamed") == "skipped: not bipartite", "non-bipartite skips the min-degree bound");
    }

    // lift with t = 1 reproduces the base spectrum.
    const auto c4v = write_temp_graph("hlspec_cli_c4v.graph", "v 4\ne 0 1 1\ne 1 2\ne 2 3\ne 3 0\n");
    {
        const json out = json::parse(run_command("lift --input \"" + c4v.string() + "\" --t 1").stdout_text);
        expect(out.at("lift_order") == 4, "t = 1 keeps the base order");
        expect(std::fabs(out.at("spectrum_max").get<double>() - 2.0) < 1e-9 &&
                   std::fabs(out.at("spectrum_min").get<double>() + 2.0) < 1e-9,
               "t = 1 lift spectrum is the base spectrum");
    }

    // lift with verification on the charged 4-cycle.
    {
        const json out =
            json::parse(run_command("lift --input \"" + c4v.string() + "\" --t 2 --verify").stdout_text);
        expect(out.at("verify").get<bool>(), "factored and explicit spectra agree");
        expect(out.at("max_discrepancy").get<double>() <= 1e-6, "spectrum discrepancy within 1e-6");
        expect(std::fabs(out.at("R").get<double>()) < 1e-9, "8-cycle median magnitude is 0");
    }

    // Charged plane graph: the 6-lift median equals the 2-lift median.
    {
        const hlspec::Graph g = hlspec::pg2_incidence_graph(2);
        std::vector<long long> voltages(g.edges.size(), 0);
        for (size_t id = 0; id < g.edges.size(); ++id)
            if (g.edges[id].u == 7 || g.edges[id].v == 7) {
                voltages[id] = 1;
                break;
            }
        const auto path = std::filesystem::temp_directory_path() / "hlspec_cli_pp2v.graph";
        hlspec::write_graph_file(path.string(), g, voltages);

        const json two = json::parse(run_command("lift --input \"" + path.string() + "\" --t 2").stdout_text);
        const json six = json::parse(run_command("lift --input \"" + path.string() + "\" --t 6").stdout_text);
        expect(std::fabs(two.at("R").get<double>() - six.at("R").get<double>()) <= 1e-6,
               "even-lift medians agree between t = 2 and t = 6");
        std::filesystem::remove(path);
    }

    // pp writes a parseable graph and reports the expected shape.
    {
        const auto out_path = std::filesystem::temp_directory_path() / "hlspec_cli_pp3.graph";
        const json out =
            json::parse(run_command("pp --q 3 --output \"" + out_path.string() + "\"").stdout_text);
        expect(out.at("vertices") == 26 && out.at("edges") == 52, "order-3 plane has 26 vertices, 52 edges");
        expect(out.at("degree") == 4 && out.at("regular") == true, "order-3 plane is 4-regular");
        expect(out.at("girth") == 6, "order-3 plane has girth 6");
        expect(out.at("spectrum_ok") == true, "order-3 plane spectrum verified");
        const hlspec::ParsedGraph parsed = hlspec::read_graph_file(out_path.string());
        expect(parsed.graph.vertex_count == 26, "written graph file parses back");
        std::filesystem::remove(out_path);
    }

    // infinit end to end.
    {
        const CommandResult r = run_command("infinit --q 2 --tmax 6");
        expect(r.exit_code == 0, "infinit exits cleanly");
        const json out = json::parse(r.stdout_text);
        expect(out.at("checks").at("bounds") == true && out.at("checks").at("eigenvector") == true,
               "infinit checks all pass");
        expect(std::fabs(out.at("R").get<double>() - out.at("lambda_star").get<double>()) <= 1e-6,
               "lift median matches the cubic root");
    }

    // refined signs.
    {
        const json pos = json::parse(run_command("refined --t 1.4142135623730951 --h 2").stdout_text);
        expect(pos.at("sign") == "positive", "margin positive at h = 2, t = sqrt(2)");
        const json neg = json::parse(run_command("refined --t 10 --h 3").stdout_text);
        expect(neg.at("sign") == "negative", "margin negative at h = 3, t = 10");
    }

    // sweep is insensitive to the worker cap.
    {
        const json par = json::parse(run_command("sweep --n 10 --trials 40 --seed 5").stdout_text);
        const json ser =
            json::parse(run_command("sweep --n 10 --trials 40 --seed 5", "HLSPEC_THREADS=1 ").stdout_text);
        expect(strip_timing(par) == strip_timing(ser), "sweep counts match with HLSPEC_THREADS=1");
    }

    // Rejections exit nonzero.
    expect(run_command("pp --q 6 --output /tmp/hlspec_never.graph").exit_code != 0,
           "pp rejects a non prime power");
    const auto loop = write_temp_graph("hlspec_cli_loop.graph", "v 2\ne 1 1\n");
    expect(run_command("hl --input \"" + loop.string() + "\"").exit_code != 0,
           "hl rejects a loop edge");
    expect(run_command("refined --t 0 --h 2").exit_code != 0, "refined rejects t = 0");
    expect(run_command("lift --input /nonexistent.graph --t 2").exit_code != 0,
           "lift rejects a missing file");

    for (const auto& p : {c6, p5, c5, c4v, loop}) std::filesystem::remove(p);

    if (g_failures == 0) {
        std::printf("all cli checks passed\n");
        return 0;
    }
    std::printf("%d cli check(s) failed\n", g_failures);
    return 1;
}
