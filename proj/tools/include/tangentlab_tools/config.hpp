#ifndef TANGENTLAB_TOOLS_CONFIG_HPP
#define TANGENTLAB_TOOLS_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tangentlab/ifs.hpp"
#include "tangentlab/measure.hpp"
#include "tangentlab/rational.hpp"

namespace tangentlab::tools {

inline constexpr const char* kVersion = "0.1.0";

struct MapConfig {
    Rational r, s, a, b;
    bool operator==(const MapConfig&) const = default;
};

struct ZoomConfig {
    double t0 = 0.1;
    /// Zero selects s_* (the smallest vertical ratio).
    double rho = 0.0;
    int count = 6;
    int K = 3;
    int grid = 512;
    bool operator==(const ZoomConfig&) const = default;
};

struct ViewConfig {
    double t = 0.01;
    int K = 3;
    int grid = 512;
    /// Dot-separated address; empty means the first sampled point.
    std::string address;
    bool operator==(const ViewConfig&) const = default;
};

struct FibreConfig {
    Rational x1{1, 10};
    int n = 4;
    int grid = 1024;
    bool operator==(const FibreConfig&) const = default;
};

struct GalleryConfig {
    std::vector<std::uint64_t> seeds{1, 2};
    std::size_t address_length = 10000;
    int word_k = 2;
    /// Ladder length; t0 and rho come from the zoom section.
    int count = 8;
    bool operator==(const GalleryConfig&) const = default;
};

struct RenderConfig {
    int max_level = 3;
    int grid = 512;
    Rect window = kUnitSquare;
    bool operator==(const RenderConfig&) const = default;
};

struct BoundaryConfig {
    int grid = 512;
    int count = 4;
    double t0 = 0.1;
    int K = 3;
    std::string side = "left";
    bool operator==(const BoundaryConfig&) const = default;
};

struct ExperimentConfig {
    std::string name;
    std::vector<MapConfig> maps;
    /// Bernoulli weights; uniform when absent.
    std::optional<std::vector<Rational>> p;
    std::uint64_t seed = 0;
    std::size_t samples = 50;
    std::size_t address_length = kDefaultDepthCap;
    int depth_cap = kDefaultDepthCap;
    ZoomConfig zoom;
    ViewConfig view;
    FibreConfig fibre;
    GalleryConfig gallery;
    RenderConfig render;
    BoundaryConfig boundary;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Numbers may be JSON numbers, decimal strings or "p/q" fractions.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const ExperimentConfig& config);

/// FNV-1a (64-bit) of the canonical JSON serialization, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

SelfAffineSystem make_system(const ExperimentConfig& config);
ProbVector make_probabilities(const ExperimentConfig& config);
std::vector<double> probability_values(const ExperimentConfig& config);

}  // namespace tangentlab::tools

#endif
