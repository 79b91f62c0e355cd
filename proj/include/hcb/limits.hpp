#pragma once

#include <stdexcept>
#include <string>

namespace hcb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input could not be parsed or fails schema validation (CLI exit code 2).
struct InputError : Error {
    using Error::Error;
};

// A truncated presentation cannot answer the question at the requested
// window; never silently truncate.
struct WindowError : Error {
    using Error::Error;
};

struct DimLimitError : Error {
    using Error::Error;
};

// Global dimension cap, read once from HCB_MAX_DIM (default 512).
long max_dim();

// Throws DimLimitError if n exceeds the cap.
void guard_dim(long n, const std::string& what);

}  // namespace hcb
