#include "tangentlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tangentlab/error.hpp"

namespace tangentlab {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

ProbVector::ProbVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw Error(ErrorKind::Validation, "probability vector is empty");
    double sum = 0.0;
    for (std::size_t j = 0; j < p_.size(); ++j) {
        if (!std::isfinite(p_[j]) || !(p_[j] > 0.0)) {
            throw Error(ErrorKind::Validation, "p_" + std::to_string(j + 1) + " must be positive");
        }
        sum += p_[j];
        cumulative_.push_back(sum);
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw Error(ErrorKind::Validation, "probability vector sums to " + std::to_string(sum) + ", not 1");
    }
}

ProbVector ProbVector::uniform(std::size_t m) {
    return ProbVector(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

double ProbVector::max() const { return *std::max_element(p_.begin(), p_.end()); }
double ProbVector::min() const { return *std::min_element(p_.begin(), p_.end()); }

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), key_(mix64(seed ^ mix64(stream + kGamma))) {}

RandomSource RandomSource::substream(std::uint64_t index) const {
    return RandomSource(seed_, mix64(stream_ * kGamma + index + 1));
}

std::uint64_t RandomSource::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGamma);
}

double RandomSource::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double cylinder_measure(const ProbVector& p, const Word& u) {
    double mu = 1.0;
    for (Letter j : u) {
        if (j < 1 || j > p.size()) throw Error(ErrorKind::Alphabet, "letter outside the probability vector");
        mu *= p.of(j);
    }
    return mu;
}

Word sample_address(const ProbVector& p, std::size_t n, RandomSource& rng) {
    if (n < 1) throw Error(ErrorKind::Precondition, "sample_address needs n >= 1");
    Word out(n);
    const auto c = p.cumulative();
    for (auto& letter : out) {
        double u = rng.next_unit();
        auto it = std::upper_bound(c.begin(), c.end() - 1, u);
        letter = static_cast<Letter>(it - c.begin() + 1);
    }
    return out;
}

bool contains_all_words(const Word& u, std::size_t m, int k, std::uint64_t cap) {
    if (k < 1) throw Error(ErrorKind::Precondition, "contains_all_words needs k >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > cap / m) throw Error(ErrorKind::EnumerationCap, "m^k exceeds the word enumeration cap");
        total *= m;
    }
    if (u.size() < static_cast<std::size_t>(k) || u.size() - static_cast<std::size_t>(k) + 1 < total) return false;

    std::vector<bool> seen(total, false);
    std::uint64_t found = 0;
    std::uint64_t code = 0;
    const std::uint64_t top = total / m;  // m^(k-1)
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 1 || u[i] > m) throw Error(ErrorKind::Alphabet, "letter outside alphabet");
        code = (code % top) * m + (u[i] - 1);
        if (i + 1 >= static_cast<std::size_t>(k) && !seen[code]) {
            seen[code] = true;
            if (++found == total) return true;
        }
    }
    return false;
}

}  // namespace tangentlab
