#pragma once

#include <stdexcept>
#include <string>

namespace qcb {

// Invariant violation on data. The message starts with the name of the
// violated invariant ("trace", "hermitian", "psd", ...).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document. Kept distinct from validation_error so callers
// can tell a broken file from a well-formed file holding an invalid state.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Jacobi sweep cap reached before the off-diagonal mass target.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcb
