#pragma once

#include <stdexcept>
#include <string>

namespace domlab {

// Error taxonomy mirrors the CLI exit codes:
//   invalid_instance / invalid_argument / schema -> 2
//   capacity (caps, budgets, timeouts)           -> 3
//   verification failure                         -> 1
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_instance_error : error {
    using error::error;
};

struct invalid_argument_error : error {
    using error::error;
};

struct capacity_error : error {
    using error::error;
};

struct schema_error : error {
    using error::error;
};

struct verification_error : error {
    using error::error;
};

}  // namespace domlab
