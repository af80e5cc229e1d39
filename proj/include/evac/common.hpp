#pragma once

#include <stdexcept>
#include <string>

namespace evac {

/// Bad configuration or bad input data. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Runtime fault (NaN state, violated internal invariant, oracle misuse).
/// The CLI maps this to exit code 3.
class SimFault : public std::runtime_error {
  public:
    explicit SimFault(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require_config(bool cond, const std::string& msg) {
    if (!cond) throw ConfigError(msg);
}

inline void require_state(bool cond, const std::string& msg) {
    if (!cond) throw SimFault(msg);
}

}  // namespace evac
