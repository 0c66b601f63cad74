#pragma once

#include <stdexcept>
#include <string>

namespace beliefnet {

/// Thrown on any contract violation: bad frame construction, frame
/// mismatch between operands, unnormalized input masses, total conflict.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace beliefnet
