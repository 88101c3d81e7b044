#pragma once

#include <cstdint>
#include <stdexcept>

namespace shufflelab {

// An enumeration or search refused to run because it would exceed the
// configured work cap.
class resource_cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent routes to the same quantity disagreed. This always means a
// bug in this library, never bad user input.
class identity_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Work cap used when a caller passes cap = 0: SHUFFLELAB_CAP from the
// environment if set, otherwise ~1e8 work units (pattern visits, swept
// words, memo entries).
std::uint64_t default_cap();

// Object-count cap for the object generators (lower than the work cap):
// SHUFFLELAB_CAP if set, otherwise 1e7 objects.
std::uint64_t default_generator_cap();

}  // namespace shufflelab
