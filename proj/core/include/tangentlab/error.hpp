#ifndef TANGENTLAB_ERROR_HPP
#define TANGENTLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tangentlab {

enum class ErrorKind {
    Validation,      // system or probability vector violates an invariant
    Alphabet,        // word letter outside 1..m
    Precondition,    // caller broke an operation precondition
    Shape,           // length or resolution mismatch
    DepthCap,        // word length would exceed the configured depth cap
    EnumerationCap,  // combinatorial enumeration exceeds the configured cap
    Enclosure,       // address prefix too short to certify a decision
    Emptiness,       // empty set where a nonempty one is required
    Hypothesis,      // a structural hypothesis (vertical segments, admissibility) fails
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Thrown when a depth cap stops a descent; carries the depth that was reached.
class DepthCapError : public Error {
public:
    DepthCapError(int reached, int cap, const std::string& what)
        : Error(ErrorKind::DepthCap, what), reached_(reached), cap_(cap) {}

    int reached() const noexcept { return reached_; }
    int cap() const noexcept { return cap_; }

private:
    int reached_;
    int cap_;
};

}  // namespace tangentlab

#endif
