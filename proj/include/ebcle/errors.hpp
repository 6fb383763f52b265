#pragma once

#include <stdexcept>
#include <string>

namespace ebcle {

// Error taxonomy shared by the whole library. The CLI maps kinds onto
// process exit codes (usage/config -> 1, data/format -> 2, numeric -> 3)
// and the C API maps them onto ebcle_status values.
enum class ErrorKind {
    usage,        // bad arguments or configuration supplied by the caller
    config,       // structurally invalid model/plan configuration
    format,       // malformed input file
    consistency,  // files disagree with each other (e.g. image/label counts)
    io,           // filesystem failure
    domain,       // value outside the mathematical domain of an operation
    degenerate,   // statistically degenerate input (zero variance, ...)
    numeric,      // non-finite intermediate or divergence
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ebcle
