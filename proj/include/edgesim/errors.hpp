#pragma once

#include <stdexcept>
#include <string>

namespace edgesim {

/// Invalid or out-of-range configuration. Carries the field path
/// ("scenario.alpha_range", "sweep.step_mb", ...) that failed.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// The simulation engine disagreed with the closed-form latency model.
/// This is a bug indicator, never a user error.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& message) : std::runtime_error(message) {}
};

/// File read/write failure, with the path in the message.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace edgesim
