#pragma once

#include <stdexcept>
#include <string>

namespace weylheat {

/// Root-system or group data fails a structural invariant (closure, multiplicity,
/// degenerate check vector, inconsistent simple roots, non-finite closure).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A singular base kernel was evaluated at (numerically) zero separation.
class singularity_error : public std::runtime_error {
public:
    explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace weylheat
