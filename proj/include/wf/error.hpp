#pragma once

#include <stdexcept>
#include <string>

namespace wf {

// Exit-code contract used by the CLI: 0 ok, 2 config, 3 IO, 4 checkpoint mismatch.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CheckpointError : std::runtime_error {
    explicit CheckpointError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingCheckpoint : CheckpointError {
    explicit MissingCheckpoint(const std::string& msg) : CheckpointError(msg) {}
};

struct DegenerateCamera : std::runtime_error {
    explicit DegenerateCamera(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace wf
