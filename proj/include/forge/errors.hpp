#pragma once

#include <stdexcept>

namespace forge {

// Error taxonomy shared by the library and the CLI. The exit_code constants
// are the process exit statuses the CLI maps each class to:
//   1 usage, 2 spec/config validation, 3 generation infeasibility,
//   4 data corruption, 5 internal invariant breach.

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
    static constexpr int exit_code = 2;
};

struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
    static constexpr int exit_code = 3;
};

struct corruption_error : std::runtime_error {
    using std::runtime_error::runtime_error;
    static constexpr int exit_code = 4;
};

struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
    static constexpr int exit_code = 5;
};

}  // namespace forge
