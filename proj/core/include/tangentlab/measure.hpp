#ifndef TANGENTLAB_MEASURE_HPP
#define TANGENTLAB_MEASURE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "tangentlab/ifs.hpp"

namespace tangentlab {

/// Bernoulli weights p_1..p_m: all positive, summing to one within 1e-12.
class ProbVector {
public:
    explicit ProbVector(std::vector<double> p);

    static ProbVector uniform(std::size_t m);

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t j) const { return p_[j]; }
    /// Weight of 1-based letter j.
    double of(Letter j) const { return p_[j - 1]; }
    std::span<const double> values() const { return p_; }
    /// Running sums in letter order; the last entry is the total.
    std::span<const double> cumulative() const { return cumulative_; }

    double max() const;
    double min() const;

private:
    std::vector<double> p_;
    std::vector<double> cumulative_;
};

/// Counter-based generator (splitmix64 output function over a per-stream counter).
/// Identical (seed, stream) pairs give identical sequences on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

    /// Independent substream for worker/sample `index`.
    RandomSource substream(std::uint64_t index) const;

    std::uint64_t next_u64();
    /// Uniform on [0,1) with 53 random bits.
    double next_unit();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// nu_p of the cylinder [u]: the product of letter weights.
double cylinder_measure(const ProbVector& p, const Word& u);

/// n i.i.d. letters drawn from p.
Word sample_address(const ProbVector& p, std::size_t n, RandomSource& rng);

inline constexpr std::uint64_t kDefaultWordCap = 10'000'000;

/// Whether every word of length k over {1..m} occurs as a factor of u.
bool contains_all_words(const Word& u, std::size_t m, int k, std::uint64_t cap = kDefaultWordCap);

}  // namespace tangentlab

#endif
