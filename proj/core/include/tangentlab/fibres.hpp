#ifndef TANGENTLAB_FIBRES_HPP
#define TANGENTLAB_FIBRES_HPP

#include <optional>
#include <vector>

#include "tangentlab/conditions.hpp"
#include "tangentlab/measure.hpp"

namespace tangentlab {

inline constexpr std::uint64_t kDefaultFibreCap = 1U << 22;

/// Finite prefix of the address of x1 under the column maps h_1..h_k.
struct ColumnAddress {
    /// 1-based column indices; the lexicographically smaller address when ambiguous.
    std::vector<Letter> letters;
    /// x1 reached an interior breakpoint within the first `depth` steps.
    bool ambiguous = false;
    /// The other address of an ambiguous point.
    std::vector<Letter> alternative;
};

ColumnAddress column_address(const GLStructure& gl, const Rational& x1, int depth);

struct ExactInterval {
    Rational lo;
    Rational hi;
};

/// Union over choices j_k in J_{i_k} of g_{j_1} o ... o g_{j_n}([0,1]), sorted and
/// with touching intervals merged.
std::vector<ExactInterval> fibre_cover_exact(const GLStructure& gl, const std::vector<Letter>& column_letters, int n,
                                             std::uint64_t cap = kDefaultFibreCap);
std::vector<Interval> fibre_cover(const GLStructure& gl, const std::vector<Letter>& column_letters, int n,
                                  std::uint64_t cap = kDefaultFibreCap);

/// y-extents of the level-n cylinders whose closed rectangles meet {x1} x [0,1].
std::vector<ExactInterval> section_cover_exact(const SelfAffineSystem& sys, const Rational& x1, int n,
                                               std::uint64_t cap = kDefaultFibreCap);

struct FibreComparison {
    double distance = 0.0;
    /// 2 (s^*)^n + 2/N.
    double bound = 0.0;
    bool ambiguous = false;
    std::vector<Interval> fibre;
    std::vector<Interval> section;

    bool within_bound() const { return distance <= bound; }
};

/// 1-D Hausdorff distance at resolution N between the fibre cover (both branches
/// at ambiguous points) and the direct section cover.
FibreComparison fibre_vs_section(const SelfAffineSystem& sys, const GLStructure& gl, const Rational& x1, int n,
                                 int grid, std::uint64_t cap = kDefaultFibreCap);

/// P_i = sum of p_j over j in J_i.
std::vector<double> column_weights(const GLStructure& gl, const ProbVector& p);
std::vector<Rational> column_weights(const GLStructure& gl, const std::vector<Rational>& p);

std::vector<Interval> to_double(const std::vector<ExactInterval>& intervals);

}  // namespace tangentlab

#endif
