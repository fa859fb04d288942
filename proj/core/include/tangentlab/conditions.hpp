#ifndef TANGENTLAB_CONDITIONS_HPP
#define TANGENTLAB_CONDITIONS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tangentlab/ifs.hpp"
#include "tangentlab/rational.hpp"

namespace tangentlab {

inline constexpr int kDefaultSegmentOrderMax = 4;
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Column decomposition of a system whose level-1 projections either coincide
/// or have disjoint interiors and tile [0,1].
struct GLStructure {
    /// 0 = a_1 < ... < a_{k+1} = 1.
    std::vector<Rational> breakpoints;
    /// groups[i] lists the (1-based) maps whose projection is column i.
    std::vector<std::vector<Letter>> groups;
    /// Vertical parts g_j(y) = s_j y + b_j, indexed by j - 1.
    std::vector<Rational> vertical_scale;
    std::vector<Rational> vertical_shift;

    std::size_t k() const { return groups.size(); }
    Rational width(std::size_t i) const { return breakpoints[i + 1] - breakpoints[i]; }
};

struct HypothesisReport {
    std::size_t m = 0;
    Rational delta_squared;
    double delta = 0.0;
    std::optional<Rational> delta_exact;
    int M = 0;
    std::optional<int> n_tilde;
    Rational q;
    int k_tilde = 0;
    Rational s_min, s_max, r_min, r_max;
    /// Bernoulli weights must stay strictly below this (1/M).
    Rational admissible_p_bound;
    std::optional<GLStructure> gl;
    /// Present when a probability vector was checked.
    std::optional<bool> p_admissible;

    bool hypotheses_hold() const { return n_tilde.has_value() && p_admissible.value_or(true); }
};

/// Minimum distance between distinct level-1 rectangles.
double separation_delta(const SelfAffineSystem& sys);
Rational separation_delta_squared(const SelfAffineSystem& sys);

/// Maximum number of closed level-1 projections sharing a point x1 in [0,1].
int column_count_M(const SelfAffineSystem& sys);

/// Least n <= n_max such that every x1 in [0,1] lies in at least two closed
/// projections of level-n cylinders; nullopt when no such n exists.
std::optional<int> vertical_segment_order(const SelfAffineSystem& sys, int n_max = kDefaultSegmentOrderMax,
                                          std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Whether the level-n projections cover every point of [0,1] at least twice.
bool vertical_segments_hit_twice(const SelfAffineSystem& sys, int n,
                                 std::uint64_t enumeration_cap = kDefaultEnumerationCap);

Rational anisotropy_q(const SelfAffineSystem& sys);

/// Sum to one within 1e-12, every p_j > 0 and every p_j < 1/M.
bool bernoulli_admissible(const SelfAffineSystem& sys, std::span<const double> p);

/// Integer part of log(delta/2) / log(s^*).
int k_tilde(const SelfAffineSystem& sys);

std::optional<GLStructure> gl_alignment(const SelfAffineSystem& sys);

HypothesisReport check_hypotheses(const SelfAffineSystem& sys, std::optional<std::vector<double>> p = std::nullopt,
                                  int n_max = kDefaultSegmentOrderMax,
                                  std::uint64_t enumeration_cap = kDefaultEnumerationCap);

// Interval-arrangement sweep over closed, weighted intervals restricted to [0,1].
struct WeightedInterval {
    Rational lo;
    Rational hi;
    std::uint64_t weight = 1;
};

struct Multiplicity {
    std::uint64_t min = 0;
    std::uint64_t max = 0;
};

/// Minimum and maximum total weight of intervals containing a point, over all x in [0,1].
Multiplicity sweep_multiplicity(std::vector<WeightedInterval> intervals);

/// Distinct x-projections of the level-n cylinders, with multiplicity.
std::vector<WeightedInterval> level_projections(const SelfAffineSystem& sys, int n);

}  // namespace tangentlab

#endif
