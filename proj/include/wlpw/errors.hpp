#pragma once

#include <stdexcept>
#include <string>

namespace wlpw {

// Bases that match no cell of the catalog.
class NotAPositroid : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateBoundary : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A four-bracket of a propagator vanishes on the data.
class PhysicalSingularity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A spurious factor of the denominator vanishes exactly.
class SpuriousPole : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wlpw
