#pragma once

#include <stdexcept>

namespace sdo {

// Configuration file / usage problems (CLI exit code 1).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dataset ingestion failures: missing files, bad IDX headers, count
// mismatches (CLI exit code 2).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weight checkpoint failures: bad magic, shape mismatch, truncation
// (CLI exit code 3).
struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sdo
