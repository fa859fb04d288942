#include "tangentlab_tools/config.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "tangentlab/error.hpp"

namespace tangentlab::tools {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorKind::Validation, "config: " + what);
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) invalid(where + " must be an object");
    std::set<std::string> names(allowed.begin(), allowed.end());
    for (const auto& item : j.items()) {
        if (!names.count(item.key())) invalid("unknown key '" + item.key() + "' in " + where);
    }
}

Rational rational_value(const json& v, const std::string& key) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) return rational_from_decimal_double(v.get<double>());
    invalid(key + " must be a number or a numeric string");
}

double double_value(const json& v, const std::string& key) {
    if (v.is_number()) return v.get<double>();
    return to_double(rational_value(v, key));
}

template <class Int>
Int int_value(const json& v, const std::string& key) {
    if (!v.is_number_integer()) invalid(key + " must be an integer");
    if (v.is_number_unsigned()) return static_cast<Int>(v.get<std::uint64_t>());
    const auto x = v.get<long long>();
    if (x < 0 && std::is_unsigned_v<Int>) invalid(key + " must be nonnegative");
    return static_cast<Int>(x);
}

template <class T, class Fn>
void read(const json& j, const char* key, T& out, Fn&& convert) {
    if (j.contains(key)) out = convert(j.at(key), std::string(key));
}

void read_double(const json& j, const char* key, double& out) { read(j, key, out, double_value); }
void read_int(const json& j, const char* key, int& out) { read(j, key, out, int_value<int>); }
void read_size(const json& j, const char* key, std::size_t& out) { read(j, key, out, int_value<std::size_t>); }

}  // namespace

ExperimentConfig parse_config(const json& j) {
    only_keys(j, "config",
              {"name", "system", "p", "seed", "samples", "address_length", "depth_cap", "zoom", "view", "fibre",
               "gallery", "render", "boundary"});
    ExperimentConfig c;
    if (j.contains("name")) c.name = j.at("name").get<std::string>();

    if (!j.contains("system")) invalid("missing 'system'");
    const json& sys = j.at("system");
    only_keys(sys, "system", {"maps"});
    if (!sys.contains("maps") || !sys.at("maps").is_array()) invalid("system.maps must be an array");
    for (const auto& m : sys.at("maps")) {
        only_keys(m, "map", {"r", "s", "a", "b"});
        for (const char* key : {"r", "s", "a", "b"}) {
            if (!m.contains(key)) invalid(std::string("map is missing '") + key + "'");
        }
        c.maps.push_back({rational_value(m.at("r"), "r"), rational_value(m.at("s"), "s"), rational_value(m.at("a"), "a"),
                          rational_value(m.at("b"), "b")});
    }

    if (j.contains("p") && !j.at("p").is_null()) {
        if (!j.at("p").is_array()) invalid("p must be an array");
        std::vector<Rational> p;
        for (const auto& v : j.at("p")) p.push_back(rational_value(v, "p"));
        c.p = std::move(p);
    }
    if (j.contains("seed")) c.seed = int_value<std::uint64_t>(j.at("seed"), "seed");
    read_size(j, "samples", c.samples);
    read_size(j, "address_length", c.address_length);
    read_int(j, "depth_cap", c.depth_cap);

    if (j.contains("zoom")) {
        const json& z = j.at("zoom");
        only_keys(z, "zoom", {"t0", "rho", "count", "K", "N"});
        read_double(z, "t0", c.zoom.t0);
        read_double(z, "rho", c.zoom.rho);
        read_int(z, "count", c.zoom.count);
        read_int(z, "K", c.zoom.K);
        read_int(z, "N", c.zoom.grid);
    }
    if (j.contains("view")) {
        const json& v = j.at("view");
        only_keys(v, "view", {"t", "K", "N", "address"});
        read_double(v, "t", c.view.t);
        read_int(v, "K", c.view.K);
        read_int(v, "N", c.view.grid);
        if (v.contains("address")) c.view.address = v.at("address").get<std::string>();
    }
    if (j.contains("fibre")) {
        const json& f = j.at("fibre");
        only_keys(f, "fibre", {"x1", "n", "N"});
        if (f.contains("x1")) c.fibre.x1 = rational_value(f.at("x1"), "x1");
        read_int(f, "n", c.fibre.n);
        read_int(f, "N", c.fibre.grid);
    }
    if (j.contains("gallery")) {
        const json& g = j.at("gallery");
        only_keys(g, "gallery", {"seeds", "address_length", "word_k", "count"});
        if (g.contains("seeds")) {
            c.gallery.seeds.clear();
            for (const auto& s : g.at("seeds")) c.gallery.seeds.push_back(int_value<std::uint64_t>(s, "seeds"));
        }
        read_size(g, "address_length", c.gallery.address_length);
        read_int(g, "word_k", c.gallery.word_k);
        read_int(g, "count", c.gallery.count);
    }
    if (j.contains("render")) {
        const json& r = j.at("render");
        only_keys(r, "render", {"max_level", "N", "window"});
        read_int(r, "max_level", c.render.max_level);
        read_int(r, "N", c.render.grid);
        if (r.contains("window")) {
            const json& w = r.at("window");
            if (!w.is_array() || w.size() != 4) invalid("render.window must be [x0, x1, y0, y1]");
            c.render.window = {double_value(w[0], "window"), double_value(w[1], "window"), double_value(w[2], "window"),
                               double_value(w[3], "window")};
        }
    }
    if (j.contains("boundary")) {
        const json& b = j.at("boundary");
        only_keys(b, "boundary", {"N", "count", "t0", "K", "side"});
        read_int(b, "N", c.boundary.grid);
        read_int(b, "count", c.boundary.count);
        read_double(b, "t0", c.boundary.t0);
        read_int(b, "K", c.boundary.K);
        if (b.contains("side")) c.boundary.side = b.at("side").get<std::string>();
        if (c.boundary.side != "left" && c.boundary.side != "right") invalid("boundary.side must be left or right");
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Validation, "cannot open config " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Validation, "config " + path.string() + ": " + e.what());
    }
    return parse_config(j);
}

json to_json(const ExperimentConfig& c) {
    json maps = json::array();
    for (const auto& m : c.maps) {
        maps.push_back({{"r", to_string(m.r)}, {"s", to_string(m.s)}, {"a", to_string(m.a)}, {"b", to_string(m.b)}});
    }
    json j = {
        {"name", c.name},
        {"system", {{"maps", maps}}},
        {"seed", c.seed},
        {"samples", c.samples},
        {"address_length", c.address_length},
        {"depth_cap", c.depth_cap},
        {"zoom", {{"t0", c.zoom.t0}, {"rho", c.zoom.rho}, {"count", c.zoom.count}, {"K", c.zoom.K}, {"N", c.zoom.grid}}},
        {"view", {{"t", c.view.t}, {"K", c.view.K}, {"N", c.view.grid}, {"address", c.view.address}}},
        {"fibre", {{"x1", to_string(c.fibre.x1)}, {"n", c.fibre.n}, {"N", c.fibre.grid}}},
        {"gallery",
         {{"seeds", c.gallery.seeds}, {"address_length", c.gallery.address_length}, {"word_k", c.gallery.word_k}, {"count", c.gallery.count}}},
        {"render",
         {{"max_level", c.render.max_level},
          {"N", c.render.grid},
          {"window", {c.render.window.x0, c.render.window.x1, c.render.window.y0, c.render.window.y1}}}},
        {"boundary",
         {{"N", c.boundary.grid},
          {"count", c.boundary.count},
          {"t0", c.boundary.t0},
          {"K", c.boundary.K},
          {"side", c.boundary.side}}},
    };
    if (c.p) {
        json p = json::array();
        for (const auto& v : *c.p) p.push_back(to_string(v));
        j["p"] = p;
    } else {
        j["p"] = nullptr;
    }
    return j;
}

std::string config_hash(const ExperimentConfig& config) {
    const std::string text = to_json(config).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SelfAffineSystem make_system(const ExperimentConfig& config) {
    std::vector<AffineMapSpec> maps;
    maps.reserve(config.maps.size());
    for (const auto& m : config.maps) maps.emplace_back(m.r, m.s, m.a, m.b);
    return SelfAffineSystem(std::move(maps));
}

std::vector<double> probability_values(const ExperimentConfig& config) {
    std::vector<double> p;
    if (!config.p) {
        p.assign(config.maps.size(), 1.0 / static_cast<double>(config.maps.size()));
        return p;
    }
    if (config.p->size() != config.maps.size()) {
        throw Error(ErrorKind::Shape, "p has " + std::to_string(config.p->size()) + " entries for " +
                                          std::to_string(config.maps.size()) + " maps");
    }
    for (const auto& v : *config.p) p.push_back(to_double(v));
    return p;
}

ProbVector make_probabilities(const ExperimentConfig& config) {
    if (!config.p) return ProbVector::uniform(config.maps.size());
    return ProbVector(probability_values(config));
}

}  // namespace tangentlab::tools
