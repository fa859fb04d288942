#include "tangentlab_tools/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tangentlab/conditions.hpp"
#include "tangentlab/error.hpp"
#include "tangentlab/fibres.hpp"
#include "tangentlab/scenery.hpp"
#include "tangentlab/setmetric.hpp"
#include "tangentlab/views.hpp"
#include "tangentlab_tools/config.hpp"
#include "tangentlab_tools/json_io.hpp"
#include "tangentlab_tools/render.hpp"

namespace tangentlab::tools {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string command;
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<int> grid;
    std::optional<int> level;
    std::optional<std::string> scales;
};

/// Raised for hypothesis failures detected by the tool itself.
struct HypothesisFailure {
    std::string message;
    json report;
};

class OutputSet {
public:
    OutputSet(fs::path dir, const Options& opts, const ExperimentConfig& config) : dir_(std::move(dir)) {
        fs::create_directories(dir_);
        manifest_ = {{"tool", "tangentlab"},
                     {"version", kVersion},
                     {"command", opts.command},
                     {"config_hash", config_hash(config)},
                     {"seed", config.seed},
                     {"outputs", json::array()}};
        write("config.json", to_json(config).dump(2) + "\n");
    }

    void write(const std::string& name, const std::string& bytes) {
        std::ofstream f(dir_ / name, std::ios::binary);
        if (!f) throw Error(ErrorKind::Validation, "cannot write " + (dir_ / name).string());
        f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        manifest_["outputs"].push_back(name);
    }

    void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

    void finish() {
        std::ofstream f(dir_ / "manifest.json", std::ios::binary);
        f << manifest_.dump(2) << "\n";
    }

private:
    fs::path dir_;
    json manifest_;
};

Word parse_word(const std::string& text) {
    Word w;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, '.')) {
        if (item.empty()) continue;
        int v = 0;
        try {
            v = std::stoi(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Validation, "bad address letter '" + item + "'");
        }
        if (v < 1 || v > 255) throw Error(ErrorKind::Alphabet, "address letter " + item + " out of range");
        w.push_back(static_cast<Letter>(v));
    }
    return w;
}

void apply_overrides(const Options& o, ExperimentConfig& c) {
    if (o.seed) c.seed = *o.seed;
    if (o.grid) {
        c.zoom.grid = c.view.grid = c.fibre.grid = c.render.grid = c.boundary.grid = *o.grid;
    }
    if (o.level) {
        if (o.command == "view") c.view.K = *o.level;
        if (o.command == "zoom" || o.command == "gallery") c.zoom.K = *o.level;
        if (o.command == "fibre") c.fibre.n = *o.level;
        if (o.command == "render") c.render.max_level = *o.level;
        if (o.command == "boundary-demo") c.boundary.K = *o.level;
    }
    if (o.scales) {
        std::stringstream in(*o.scales);
        std::string a, b, n;
        if (!std::getline(in, a, ',') || !std::getline(in, b, ',') || !std::getline(in, n, ',')) {
            throw Error(ErrorKind::Validation, "--scales expects t0,rho,count");
        }
        const double t0 = to_double(parse_rational(a));
        const double rho = to_double(parse_rational(b));
        const auto count = static_cast<int>(floor_to_int(parse_rational(n)));
        c.zoom.t0 = t0;
        c.zoom.rho = rho;
        c.zoom.count = count;
        c.gallery.count = count;
        c.boundary.t0 = t0;
        c.boundary.count = count;
    }
}

std::string explain(const HypothesisReport& r, const ExperimentConfig& c) {
    std::string why;
    if (r.p_admissible && !*r.p_admissible) {
        why = "p is not admissible: every p_j must satisfy p_j < 1/M = " + to_string(r.admissible_p_bound) +
              " (M = " + std::to_string(r.M) + ")";
        if (c.p) {
            for (std::size_t j = 0; j < c.p->size(); ++j) {
                if (!((*c.p)[j] < r.admissible_p_bound)) {
                    why += "; p_" + std::to_string(j + 1) + " = " + to_string((*c.p)[j]) + " violates it";
                    break;
                }
            }
        }
    }
    if (!r.n_tilde) {
        if (!why.empty()) why += "; ";
        why += "some vertical line meets fewer than two cylinders at every checked level";
    }
    return why;
}

HypothesisReport validate(const SelfAffineSystem& sys, const ExperimentConfig& c) {
    auto report = check_hypotheses(sys, probability_values(c));
    if (!report.hypotheses_hold()) throw HypothesisFailure{explain(report, c), to_json(report)};
    return report;
}

ZoomParams zoom_params(const SelfAffineSystem& sys, const ExperimentConfig& c) {
    ZoomParams zp;
    zp.ladder = {c.zoom.t0, c.zoom.rho > 0.0 ? c.zoom.rho : sys.s_min(), c.zoom.count};
    zp.K = c.zoom.K;
    zp.grid = c.zoom.grid;
    zp.depth_cap = c.depth_cap;
    return zp;
}

int cmd_check(const SelfAffineSystem& sys, const ExperimentConfig& c, OutputSet& outs, std::ostream& out,
              std::ostream& err) {
    auto report = check_hypotheses(sys, probability_values(c));
    json j = to_json(report);
    const bool ok = report.hypotheses_hold();
    if (!ok) j["explanation"] = explain(report, c);
    outs.write_json("check.json", j);
    out << j.dump(2) << "\n";
    if (!ok) {
        err << "hypothesis failure: " << j["explanation"].get<std::string>() << "\n";
        return kExitHypothesis;
    }
    return kExitOk;
}

int cmd_sample(const SelfAffineSystem& sys, const ExperimentConfig& c, OutputSet& outs, std::ostream& out) {
    validate(sys, c);
    const auto points = sample_points(make_probabilities(c), c.seed, c.samples, c.address_length);
    std::string csv = "sample,x,y,address\n";
    char buf[64];
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& w = points[i];
        Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(
                                               std::min(w.size(), static_cast<std::size_t>(c.depth_cap))));
        const Point x = point_of_address(sys, prefix).center;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", x.x, x.y);
        csv += std::to_string(i) + "," + buf + "," + to_string(w) + "\n";
    }
    outs.write("samples.csv", csv);
    out << "sampled " << points.size() << " addresses of length " << c.address_length << "\n";
    return kExitOk;
}

int cmd_view(const SelfAffineSystem& sys, const ExperimentConfig& c, OutputSet& outs, std::ostream& out) {
    validate(sys, c);
    const Word address = c.view.address.empty()
                             ? sample_points(make_probabilities(c), c.seed, 1, c.address_length).front()
                             : parse_word(c.view.address);
    sys.check_word(address);
    Window window(sys, address, c.view.t, c.depth_cap);
    ViewCover approx = approx_view(sys, window, c.view.K, c.depth_cap);
    ViewCover fine = reference_view(sys, window, c.view.grid, c.depth_cap);
    const double eps = epsilon_K(sys, c.view.K);
    PatternReport pattern = is_pattern(approx, eps);
    GridSet fine_raster = rasterize(fine.rects, c.view.grid);
    GridSet approx_raster = rasterize(approx.rects, c.view.grid);
    json j = {{"address_prefix", to_string(window.prefix())},
              {"eps", eps},
              {"approx", to_json(approx)},
              {"pattern", to_json(pattern)},
              {"reference_level", fine.level_K},
              {"product_deviation", product_deviation(fine_raster)},
              {"view_distance", hausdorff(fine_raster, approx_raster)}};
    outs.write_json("view.json", j);
    outs.write("view.pgm", to_pgm(fine_raster));
    outs.write("approx.pgm", to_pgm(approx_raster));
    out << "view: n=" << approx.depth_n << " pattern=" << (pattern.is_pattern ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_zoom(const SelfAffineSystem& sys, const ExperimentConfig& c, OutputSet& outs, std::ostream& out) {
    validate(sys, c);
    const auto points = sample_points(make_probabilities(c), c.seed, c.samples, c.address_length);
    const ZoomParams zp = zoom_params(sys, c);
    const auto reports = zoom_experiment(sys, points, zp);
    std::string csv = zoom_csv_header();
    for (std::size_t i = 0; i < reports.size(); ++i) csv += zoom_csv_rows(reports[i], i);
    outs.write("zoom.csv", csv);

    const double slack = 2.0 * std::sqrt(2.0) / zp.grid;
    const double threshold = epsilon_K(sys, zp.K) + slack;
    json per_step = json::array();
    for (int k = 0; k < zp.ladder.count; ++k) {
        std::size_t patterns = 0;
        for (const auto& r : reports) patterns += r.rows[static_cast<std::size_t>(k)].is_pattern ? 1 : 0;
        per_step.push_back({{"k", k}, {"pattern_fraction", static_cast<double>(patterns) / reports.size()}});
    }
    std::size_t final_ok = 0;
    for (const auto& r : reports) final_ok += r.rows.back().product_deviation <= threshold ? 1 : 0;
    json summary = {{"samples", reports.size()},
                    {"scales", zp.ladder.scales()},
                    {"K", zp.K},
                    {"N", zp.grid},
                    {"eps", epsilon_K(sys, zp.K)},
                    {"deviation_threshold", threshold},
                    {"final_deviation_fraction", reports.empty() ? 0.0 : static_cast<double>(final_ok) / reports.size()},
                    {"per_step", per_step}};
    outs.write_json("zoom_summary.json", summary);
    out << "zoom: " << reports.size() << " samples x " << zp.ladder.count << " scales\n";
    return kExitOk;
}

int cmd_fibre(const SelfAffineSystem& sys, const ExperimentConfig& c, OutputSet& outs, std::ostream& out) {
    const auto gl = gl_alignment(sys);
    if (!gl) throw HypothesisFailure{"system is not column aligned; fibres need aligned columns", json::object()};
    const auto cmp = fibre_vs_section(sys, *gl, c.fibre.x1, c.fibre.n, c.fibre.grid);
    json j = to_json(cmp);
    j["x1"] = to_string(c.fibre.x1);
    j["n"] = c.fibre.n;
    j["N"] = c.fibre.grid;
    if (c.fibre.n >= 1) {
        const auto addr = column_address(*gl, c.fibre.x1, c.fibre.n);
        json a = {{"letters", to_string(addr.letters)}, {"ambiguous", addr.ambiguous}};
        if (addr.ambiguous) a["alternative"] = to_string(addr.alternative);
        j["column_address"] = a;
    }
    j["fibre_mask"] = mask_string(rasterize_intervals(cmp.fibre, c.fibre.grid));
    j["section_mask"] = mask_string(rasterize_intervals(cmp.section, c.fibre.grid));
    outs.write_json("fibre.json", j);

    std::string csv = "i,x1,ambiguous,distance,bound,within_bound\n";
    std::size_t violations = 0;
    for (int i = 0; i < 100; ++i) {
        const Rational x1(i, 99);
        const auto sweep = fibre_vs_section(sys, *gl, x1, c.fibre.n, c.fibre.grid);
        violations += sweep.within_bound() ? 0 : 1;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", sweep.distance, sweep.bound);
        csv += std::to_string(i) + "," + to_string(x1) + "," + (sweep.ambiguous ? "1" : "0") + "," + buf + "," +
               (sweep.within_bound() ? "1" : "0") + "\n";
    }
    outs.write("fibre_sweep.csv", csv);
    out << "fibre: distance " << cmp.distance << " bound " << cmp.bound << "; sweep violations " << violations << "\n";
    return kExitOk;
}

int cmd_gallery(const SelfAffineSystem& sys, const ExperimentConfig& c, OutputSet& outs, std::ostream& out) {
    validate(sys, c);
    if (c.gallery.seeds.size() < 2) throw Error(ErrorKind::Validation, "gallery needs at least two seeds");
    ZoomParams zp = zoom_params(sys, c);
    zp.ladder.count = c.gallery.count;
    const auto scales = zp.ladder.scales();
    const auto p = make_probabilities(c);

    json points = json::array();
    std::vector<Gallery> galleries;
    for (std::uint64_t seed : c.gallery.seeds) {
        const Word w = sample_points(p, seed, 1, c.gallery.address_length).front();
        const bool typical = contains_all_words(w, sys.m(), c.gallery.word_k);
        points.push_back({{"seed", seed}, {"contains_all_words", typical}});
        if (!typical) {
            throw HypothesisFailure{"sampled address for seed " + std::to_string(seed) +
                                        " misses some word of length " + std::to_string(c.gallery.word_k),
                                    points};
        }
        galleries.push_back(gallery_collect(sys, w, scales, zp.grid, zp.depth_cap));
    }

    auto truncated = [](const Gallery& g, std::size_t d) {
        Gallery out;
        out.grid = g.grid;
        out.scales.assign(g.scales.begin(), g.scales.begin() + static_cast<std::ptrdiff_t>(d));
        out.views.assign(g.views.begin(), g.views.begin() + static_cast<std::ptrdiff_t>(d));
        return out;
    };
    json ladder = json::array();
    for (std::size_t d = 1; d <= scales.size(); ++d) {
        const auto gd = gallery_distance(truncated(galleries[0], d), truncated(galleries[1], d));
        ladder.push_back({{"depth", d}, {"one_sided", gd.one_sided}, {"symmetric", gd.symmetric}});
    }
    const auto matrix = gallery_matrix(galleries[0], galleries[1]);
    std::string csv = "i,j,t_i,t_j,distance\n";
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = 0; j < matrix[i].size(); ++j) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", scales[i], scales[j], matrix[i][j]);
            csv += std::to_string(i) + "," + std::to_string(j) + "," + buf + "\n";
        }
    }
    outs.write("gallery_matrix.csv", csv);
    json j = {{"points", points},
              {"scales", scales},
              {"N", zp.grid},
              {"K", zp.K},
              {"budget", 4.0 * epsilon_K(sys, zp.K) + 4.0 * std::sqrt(2.0) / zp.grid},
              {"ladder", ladder}};
    outs.write_json("gallery.json", j);
    out << "gallery: final symmetric distance " << ladder.back()["symmetric"].get<double>() << "\n";
    return kExitOk;
}

int cmd_render(const SelfAffineSystem& sys, const ExperimentConfig& c, OutputSet& outs, std::ostream& out) {
    const auto img = render_levels(sys, c.render.max_level, c.render.grid, c.render.window);
    outs.write("render.pgm", to_pgm(img));
    out << "render: " << c.render.grid << "x" << c.render.grid << " max_level " << c.render.max_level << "\n";
    return kExitOk;
}

int cmd_boundary(const SelfAffineSystem& sys, const ExperimentConfig& c, OutputSet& outs, std::ostream& out,
                 std::ostream& err) {
    const auto side = c.boundary.side == "right" ? BorderSide::Right : BorderSide::Left;
    const auto report = boundary_demo(sys, c.boundary.grid, side, c.boundary.count, c.boundary.t0, c.boundary.K);
    outs.write_json("boundary.json", to_json(report));
    out << "boundary-demo: " << (report.holds() ? "holds" : "fails") << "\n";
    if (!report.holds()) {
        err << "boundary views are not confined to one half of the window\n";
        return kExitHypothesis;
    }
    return kExitOk;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Hypothesis: return kExitHypothesis;
        case ErrorKind::DepthCap:
        case ErrorKind::EnumerationCap:
        case ErrorKind::Enclosure: return kExitNumeric;
        default: return kExitUsage;
    }
}

int dispatch(const Options& opts, std::ostream& out, std::ostream& err) {
    ExperimentConfig config = load_config(opts.config_path);
    apply_overrides(opts, config);
    const SelfAffineSystem sys = make_system(config);
    OutputSet outs(opts.out_dir, opts, config);
    int code = kExitOk;
    try {
        const auto& cmd = opts.command;
        if (cmd == "check") code = cmd_check(sys, config, outs, out, err);
        else if (cmd == "sample") code = cmd_sample(sys, config, outs, out);
        else if (cmd == "view") code = cmd_view(sys, config, outs, out);
        else if (cmd == "zoom") code = cmd_zoom(sys, config, outs, out);
        else if (cmd == "fibre") code = cmd_fibre(sys, config, outs, out);
        else if (cmd == "gallery") code = cmd_gallery(sys, config, outs, out);
        else if (cmd == "render") code = cmd_render(sys, config, outs, out);
        else if (cmd == "boundary-demo") code = cmd_boundary(sys, config, outs, out, err);
    } catch (const HypothesisFailure& failure) {
        json j = {{"error", "hypothesis"}, {"explanation", failure.message}, {"report", failure.report}};
        outs.write_json("failure.json", j);
        outs.finish();
        err << "hypothesis failure: " << failure.message << "\n";
        return kExitHypothesis;
    }
    outs.finish();
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tangentlab: self-affine carpets, tangent sets and scenery", "tangentlab"};
    app.require_subcommand(1);
    Options opts;
    std::uint64_t seed = 0;
    int grid = 0, level = 0;
    std::string scales;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"check", "verify hypotheses and report the derived constants"},
        {"sample", "sample addresses from the Bernoulli measure"},
        {"view", "normalized view and pattern test at one point and scale"},
        {"zoom", "zoom sequences at sampled points"},
        {"fibre", "fibre cover against the vertical section"},
        {"gallery", "gallery distance between two sampled points"},
        {"render", "greyscale rendering of cylinder levels"},
        {"boundary-demo", "views at a border fixed point"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opts.config_path, "experiment config (JSON)")->required();
        sub->add_option("--out", opts.out_dir, "output directory");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--grid", grid, "raster resolution N");
        sub->add_option("--level", level, "level K (view, zoom, boundary), n (fibre) or max level (render)");
        sub->add_option("--scales", scales, "scale ladder t0,rho,count");
        subs.push_back(sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    for (CLI::App* sub : subs) {
        if (!sub->parsed()) continue;
        opts.command = sub->get_name();
        if (sub->count("--seed")) opts.seed = seed;
        if (sub->count("--grid")) opts.grid = grid;
        if (sub->count("--level")) opts.level = level;
        if (sub->count("--scales")) opts.scales = scales;
    }

    try {
        return dispatch(opts, out, err);
    } catch (const Error& e) {
        err << to_string(e.kind()) << " error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace tangentlab::tools
