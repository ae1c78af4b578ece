#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphlines {

/// Malformed graph6 input. offset() is the byte position of the problem.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string &what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }

    auto offset() const -> std::size_t { return offset_; }

private:
    std::size_t offset_;
};

/// Request beyond what an exhaustive routine is built to handle (e.g. n too large).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace graphlines
