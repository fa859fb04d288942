// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "systems.hpp"
#include "tangentlab/conditions.hpp"
#include "tangentlab/fibres.hpp"
#include "tangentlab/scenery.hpp"
#include "tangentlab/setmetric.hpp"
#include "tangentlab/views.hpp"
#include "tangentlab_tools/cli.hpp"

using namespace tangentlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = TANGENTLAB_FIXTURE_DIR;
constexpr int kGrid = 512;
const double kSlack = 2.0 * std::sqrt(2.0) / kGrid;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    return tools::run(args, out, err);
}

const SelfAffineSystem& e6() {
    static const SelfAffineSystem sys = testsys::e6();
    return sys;
}

ZoomParams zoom_params(int K) {
    ZoomParams p;
    p.ladder = {0.1, 0.2, 6};
    p.K = K;
    p.grid = kGrid;
    return p;
}

const std::vector<Word>& points() {
    static const std::vector<Word> pts = sample_points(ProbVector::uniform(6), 0, 50, kDefaultDepthCap);
    return pts;
}

std::vector<ZoomReport> g_reports;

Outcome constants() {
    const auto r = check_hypotheses(e6(), std::vector<double>(6, 1.0 / 6.0));
    bool ok = r.delta_exact && *r.delta_exact == Rational(1, 20) && r.M == 4 && r.n_tilde == 1 &&
              r.q == Rational(5, 3) && r.k_tilde == 2 && r.hypotheses_hold();

    double sampled = std::numeric_limits<double>::infinity();
    const auto& maps = e6().maps();
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j)
            sampled = std::min(sampled, oracle::sampled_gap(maps[i].rect(), maps[j].rect(), 24));
    ok = ok && std::abs(sampled - 0.05) <= 1e-9;

    int sweep = 0;
    for (int i = 0; i <= 3600; ++i) sweep = std::max(sweep, oracle::projections_containing(e6(), i / 3600.0));
    ok = ok && sweep == 4;

    const fs::path dir = fs::temp_directory_path() / "tangentlab_acceptance_check";
    fs::remove_all(dir);
    const int code = run_cli({"check", "--config", (kFixtures / "e6.json").string(), "--out", dir.string()});
    const json j = json::parse(slurp(dir / "check.json"));
    ok = ok && code == 0 && j["delta"] == "1/20" && j["M"] == 4 && j["n_tilde"] == 1 && j["q"] == "5/3" &&
         j["k_tilde"] == 2;
    return {ok, "delta=" + to_string(*r.delta_exact) + " M=" + std::to_string(r.M) +
                    " n~=" + std::to_string(r.n_tilde.value_or(-1)) + " q=" + to_string(r.q) +
                    " k~=" + std::to_string(r.k_tilde) + " oracle delta=" + fmt("%.12f", sampled) +
                    " oracle M=" + std::to_string(sweep)};
}

Outcome section_diameter() {
    const double bound = separation_delta(e6()) * std::pow(e6().s_min(), 0);
    int violations = 0;
    double worst = 1.0;
    for (int i = 0; i < 1000; ++i) {
        const auto d = vertical_section_diameter(e6(), i / 999.0, 3);
        worst = std::min(worst, d.lower);
        violations += d.lower >= bound ? 0 : 1;
    }
    return {violations == 0, "1000 values, min lower bound " + fmt("%.6f", worst) + ", violations " +
                                 std::to_string(violations)};
}

Outcome approximation() {
    g_reports = zoom_experiment(e6(), points(), zoom_params(3));
    const double eps = epsilon_K(e6(), 3);
    int height_bad = 0, distance_bad = 0;
    double worst_h = 0, worst_d = 0;
    std::string where;
    for (std::size_t i = 0; i < g_reports.size(); ++i) {
        for (const auto& row : g_reports[i].rows) {
            worst_h = std::max(worst_h, row.max_rect_height);
            worst_d = std::max(worst_d, row.view_distance);
            height_bad += row.max_rect_height <= eps ? 0 : 1;
            if (row.view_distance >= eps + kSlack) {
                ++distance_bad;
                where += " (sample " + std::to_string(i) + ", k=" + std::to_string(row.k) + ")";
            }
        }
    }
    return {height_bad == 0 && distance_bad == 0,
            "eps_3=" + fmt("%.6f", eps) + " max height " + fmt("%.6f", worst_h) + " max distance " +
                fmt("%.6f", worst_d) + ", violations " + std::to_string(height_bad + distance_bad) + where};
}

Outcome pattern_area() {
    int patterns3 = 0, bad3 = 0;
    const double bound3 = pattern_area_bound(e6(), 3).bound;
    for (const auto& rep : g_reports) {
        for (const auto& row : rep.rows) {
            if (!row.is_pattern) continue;
            ++patterns3;
            bad3 += row.pattern_area <= bound3 ? 0 : 1;
        }
    }
    const double bound6 = pattern_area_bound(e6(), 6).bound;
    const double eps6 = epsilon_K(e6(), 6);
    std::vector<int> patterns(points().size()), bad(points().size());
    parallel_for(points().size(), [&](std::size_t i) {
        for (double t : ScaleLadder{0.1, 0.2, 6}.scales()) {
            Window w(e6(), points()[i], t);
            const auto rep = is_pattern(approx_view(e6(), w, 6), eps6);
            if (!rep.is_pattern) continue;
            ++patterns[i];
            bad[i] += rep.area <= bound6 ? 0 : 1;
        }
    });
    int patterns6 = 0, bad6 = 0;
    for (std::size_t i = 0; i < points().size(); ++i) {
        patterns6 += patterns[i];
        bad6 += bad[i];
    }
    return {bad3 == 0 && bad6 == 0, "K=3: " + std::to_string(patterns3) + " patterns, bound " + fmt("%.4f", bound3) +
                                        "; K=6: " + std::to_string(patterns6) + " patterns, bound " +
                                        fmt("%.8f", bound6) + "; violations " + std::to_string(bad3 + bad6)};
}

Outcome scenery_flattening() {
    const json manifest = json::parse(slurp(kFixtures / "acceptance_manifest.json"));
    const double threshold = manifest["criterion_5"]["threshold"].get<double>();
    const double limit = epsilon_K(e6(), 3) + kSlack;
    std::size_t final_ok = 0, monotone = 0;
    for (const auto& rep : g_reports) {
        final_ok += rep.rows.back().product_deviation <= limit ? 1 : 0;
        bool mono = true;
        for (std::size_t k = rep.first_pattern() + 1; k < rep.rows.size(); ++k)
            mono = mono && rep.rows[k].product_deviation <= rep.rows[k - 1].product_deviation + kSlack;
        monotone += mono ? 1 : 0;
    }
    const double fraction = static_cast<double>(final_ok) / static_cast<double>(g_reports.size());
    return {fraction >= threshold && monotone == g_reports.size(),
            "final deviation <= " + fmt("%.6f", limit) + " for " + fmt("%.2f", fraction) + " (threshold " +
                fmt("%.2f", threshold) + "); monotone " + std::to_string(monotone) + "/" +
                std::to_string(g_reports.size())};
}

Outcome boundary() {
    const auto rep = boundary_demo(e6(), kGrid, BorderSide::Left, 4, 0.1, 3);
    std::size_t violations = 0, patterns = 0;
    for (const auto& v : rep.views) {
        violations += v.violations;
        patterns += v.is_pattern ? 1 : 0;
    }
    const bool at_origin = std::abs(rep.point.x) < 1e-12 && std::abs(rep.point.y) < 1e-12;
    return {rep.holds() && at_origin && rep.views.size() == 4,
            "x=(" + fmt("%g", rep.point.x) + "," + fmt("%g", rep.point.y) + "), 4 scales, occupied cells left of 1/2-1/N: " +
                std::to_string(violations) + ", patterns " + std::to_string(patterns)};
}

Outcome fibres() {
    const auto gl = *gl_alignment(e6());
    int violations = 0, ambiguous = 0;
    double worst = 0;
    bool seams = true;
    for (int i = 0; i <= 99; ++i) {
        const Rational x1(i, 99);
        const auto cmp = fibre_vs_section(e6(), gl, x1, 4, 1024);
        violations += cmp.within_bound() ? 0 : 1;
        ambiguous += cmp.ambiguous ? 1 : 0;
        worst = std::max(worst, cmp.distance);
        if (i == 33 || i == 66) seams = seams && cmp.ambiguous;
    }
    return {violations == 0 && seams, "100 values, max distance " + fmt("%.6f", worst) + " (bound " +
                                          fmt("%.6f", 2 * std::pow(0.2, 4) + 2.0 / 1024) + "), ambiguous " +
                                          std::to_string(ambiguous) + ", violations " + std::to_string(violations)};
}

Outcome galleries() {
    const auto p = ProbVector::uniform(6);
    const auto scales = ScaleLadder{0.1, 0.2, 8}.scales();
    std::vector<Gallery> g;
    bool typical = true;
    for (std::uint64_t seed : {1, 2}) {
        const Word w = sample_points(p, seed, 1, 10000).front();
        typical = typical && contains_all_words(w, 6, 2);
        g.push_back(gallery_collect(e6(), w, scales, kGrid));
    }
    std::vector<double> d;
    for (std::size_t depth = 1; depth <= scales.size(); ++depth) {
        Gallery a{kGrid, {}, {}}, b{kGrid, {}, {}};
        a.views.assign(g[0].views.begin(), g[0].views.begin() + static_cast<std::ptrdiff_t>(depth));
        b.views.assign(g[1].views.begin(), g[1].views.begin() + static_cast<std::ptrdiff_t>(depth));
        d.push_back(gallery_distance(a, b).symmetric);
    }
    bool monotone = true;
    std::string seq;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (k > 0) monotone = monotone && d[k] <= d[k - 1] + kSlack;
        seq += (k ? "," : "") + fmt("%.4f", d[k]);
    }
    const double budget = 4 * epsilon_K(e6(), 3) + 4 * std::sqrt(2.0) / kGrid;
    return {typical && monotone && d.back() <= budget,
            "distances [" + seq + "], monotone " + (monotone ? "yes" : "no") + ", final <= " + fmt("%.4f", budget) +
                (d.back() <= budget ? " yes" : " no") + ", typical " + (typical ? "yes" : "no")};
}

Outcome metric() {
    std::mt19937_64 gen(2024);
    int mismatches = 0;
    for (int k = 0; k < 200; ++k) {
        const int n = 8 << (k % 4);
        std::bernoulli_distribution bit(0.02 + 0.2 * ((k / 4) % 5) / 4.0);
        GridSet a(n), b(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                if (bit(gen)) a.set(i, j);
                if (bit(gen)) b.set(i, j);
            }
        if (a.empty()) a.set(0, 0);
        if (b.empty()) b.set(n - 1, n - 1);
        mismatches += hausdorff_squared_cells(a, b) == oracle::hausdorff_squared(a, b) ? 0 : 1;
    }
    return {mismatches == 0, "200 pairs at N in {8,16,32,64}, mismatches " + std::to_string(mismatches)};
}

Outcome determinism() {
    const std::string cfg = (kFixtures / "e6.json").string();
    const std::vector<std::string> commands = {"check", "sample", "view", "zoom", "fibre", "gallery", "render",
                                               "boundary-demo"};
    std::vector<std::string> differing;
    std::size_t files = 0;
    for (const auto& cmd : commands) {
        std::vector<fs::path> dirs;
        for (int rep = 0; rep < 2; ++rep) {
            const fs::path dir = fs::temp_directory_path() / ("tangentlab_acceptance_" + cmd + std::to_string(rep));
            fs::remove_all(dir);
            if (run_cli({cmd, "--config", cfg, "--out", dir.string()}) != 0) differing.push_back(cmd + "(exit)");
            dirs.push_back(dir);
        }
        for (const auto& entry : fs::directory_iterator(dirs[0])) {
            ++files;
            const fs::path other = dirs[1] / entry.path().filename();
            if (!fs::exists(other) || slurp(entry.path()) != slurp(other))
                differing.push_back(cmd + "/" + entry.path().filename().string());
        }
    }
    std::string detail = std::to_string(commands.size()) + " commands, " + std::to_string(files) + " files compared";
    for (const auto& d : differing) detail += "; differs: " + d;
    return {differing.empty(), detail};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "hypothesis constants", 1, constants},
        {2, "vertical section diameter", 5, section_diameter},
        {3, "approximating views", 60, approximation},
        {4, "pattern area bound", 0, pattern_area},
        {5, "flattening under zoom", 0, scenery_flattening},
        {6, "boundary counterexample", 0, boundary},
        {7, "fibres against sections", 30, fibres},
        {8, "gallery convergence", 120, galleries},
        {9, "metric exactness", 10, metric},
        {10, "determinism", 0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
        const bool pass = o.pass && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s %d %s: %s [%.2f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                    in_time ? "" : ", over time limit");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
