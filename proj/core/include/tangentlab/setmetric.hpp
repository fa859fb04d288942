#ifndef TANGENTLAB_SETMETRIC_HPP
#define TANGENTLAB_SETMETRIC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tangentlab/ifs.hpp"

namespace tangentlab {

inline constexpr int kMinGrid = 8;
inline constexpr int kMaxGrid = 4096;

/// Power of two in [kMinGrid, kMaxGrid].
bool valid_resolution(int n);

/// N x N raster of closed cells [i/N,(i+1)/N] x [j/N,(j+1)/N]; column i, row j,
/// row 0 at the bottom.
class GridSet {
public:
    explicit GridSet(int n);

    int n() const { return n_; }
    bool at(int i, int j) const { return cells_[index(i, j)] != 0; }
    void set(int i, int j, bool value = true) { cells_[index(i, j)] = value ? 1 : 0; }
    void fill_block(int i0, int i1, int j0, int j1);

    std::size_t count() const;
    bool empty() const { return count() == 0; }

    bool operator==(const GridSet&) const = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
    }

    int n_;
    std::vector<std::uint8_t> cells_;
};

/// A cell is occupied iff its closed cell rectangle meets some member rectangle.
GridSet rasterize(const RectUnion& rects, int n);

/// Exact squared Euclidean distance (in cell units) from every cell center to the
/// nearest occupied cell center; row-major, row 0 first. Separable two-pass
/// transform in integer arithmetic.
std::vector<std::int64_t> squared_distance_transform(const GridSet& set);

/// max over occupied cells of `from` of the squared cell distance to `to`.
std::int64_t directed_squared_cells(const GridSet& from, const GridSet& to);

/// Squared Hausdorff distance between the cell-center clouds, in cell units.
std::int64_t hausdorff_squared_cells(const GridSet& a, const GridSet& b);

/// Hausdorff distance between cell-center clouds: sqrt(integer) / N.
double hausdorff(const GridSet& a, const GridSet& b);

/// Row j is occupied iff some cell in row j is.
std::vector<bool> y_projection(const GridSet& set);

/// The product set [0,1] x y_projection(set) as a grid.
GridSet row_completion(const GridSet& set);

/// d_H(set, [0,1] x y_projection(set)); zero iff every occupied row is full.
double product_deviation(const GridSet& set);

/// Binary PGM (P5): occupied cells black, top image row is the highest y.
std::string to_pgm(const GridSet& set);

/// Run-length text: "gridset N" then one line "j start:len ..." per nonempty row.
std::string to_rle(const GridSet& set);
GridSet from_rle(std::string_view text);

// One-dimensional analogues on N closed cells [j/N,(j+1)/N].
std::vector<bool> rasterize_intervals(const std::vector<Interval>& intervals, int n);
std::int64_t hausdorff_cells_1d(const std::vector<bool>& a, const std::vector<bool>& b);
double hausdorff_1d(const std::vector<bool>& a, const std::vector<bool>& b);

}  // namespace tangentlab

#endif
