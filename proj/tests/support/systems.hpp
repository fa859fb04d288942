#ifndef TANGENTLAB_TEST_SYSTEMS_HPP
#define TANGENTLAB_TEST_SYSTEMS_HPP

#include <array>
#include <string>
#include <vector>

#include "tangentlab/ifs.hpp"
#include "tangentlab/rational.hpp"

namespace testsys {

using tangentlab::AffineMapSpec;
using tangentlab::SelfAffineSystem;

struct MapText {
    const char* r;
    const char* s;
    const char* a;
    const char* b;
};

inline SelfAffineSystem build(const std::vector<MapText>& maps) {
    std::vector<AffineMapSpec> specs;
    for (const auto& m : maps) {
        specs.emplace_back(tangentlab::parse_rational(m.r), tangentlab::parse_rational(m.s),
                           tangentlab::parse_rational(m.a), tangentlab::parse_rational(m.b));
    }
    return SelfAffineSystem(std::move(specs));
}

/// Three columns of width 1/3, two maps each, all heights 1/5.
inline SelfAffineSystem e6() {
    return build({{"1/3", "1/5", "0", "0"},
                  {"1/3", "1/5", "0", "4/5"},
                  {"1/3", "1/5", "1/3", "3/10"},
                  {"1/3", "1/5", "1/3", "11/20"},
                  {"1/3", "1/5", "2/3", "0"},
                  {"1/3", "1/5", "2/3", "4/5"}});
}

/// E6 mirrored in x1 = 1/2.
inline SelfAffineSystem e6_mirrored() {
    return build({{"1/3", "1/5", "2/3", "0"},
                  {"1/3", "1/5", "2/3", "4/5"},
                  {"1/3", "1/5", "1/3", "3/10"},
                  {"1/3", "1/5", "1/3", "11/20"},
                  {"1/3", "1/5", "0", "0"},
                  {"1/3", "1/5", "0", "4/5"}});
}

/// Two columns with a gap between them, one map each.
inline SelfAffineSystem two_single_columns() {
    return build({{"2/5", "1/5", "0", "0"}, {"2/5", "1/5", "3/5", "2/5"}});
}

/// Two columns with a gap, two maps each.
inline SelfAffineSystem two_double_columns() {
    return build({{"2/5", "1/5", "0", "0"},
                  {"2/5", "1/5", "0", "4/5"},
                  {"2/5", "1/5", "3/5", "0"},
                  {"2/5", "1/5", "3/5", "4/5"}});
}

/// One column of three stacked maps.
inline SelfAffineSystem stacked_three() {
    return build({{"1/2", "1/5", "0", "0"}, {"1/2", "1/5", "0", "2/5"}, {"1/2", "1/5", "0", "4/5"}});
}

/// Projections overlap without coinciding.
inline SelfAffineSystem staggered() {
    return build({{"1/2", "1/5", "0", "0"}, {"1/2", "1/5", "1/4", "2/5"}, {"1/2", "1/5", "1/2", "4/5"}});
}

/// Four maps whose projections all contain x1 = 1/2.
inline SelfAffineSystem four_stacked() {
    return build({{"1/2", "1/5", "0", "0"},
                  {"1/2", "1/5", "1/6", "4/15"},
                  {"1/2", "1/5", "1/3", "8/15"},
                  {"1/2", "1/5", "1/2", "4/5"}});
}

}  // namespace testsys

#endif
