// One exception type with a machine-readable kind, so the C boundary can
// map failures onto status codes without string matching.

#ifndef PICOD_ERROR_HPP
#define PICOD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace picod {

enum class errc {
    invalid_argument,   // bad (m, s), bad flag value, non-prime modulus
    dimension,          // width mismatch, block index out of range
    parse,              // malformed document
    window_violation,   // row support does not fit any sender window
    degenerate_row,     // zero row where a nonzero row is required
    regime,             // operation not defined for the instance's regime
    construction_invalid,  // a built scheme failed verification
    no_scheme,          // no known construction for the instance
    unsupported,        // operation refused (e.g. range accounting at t > 1)
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

}  // namespace picod

#endif
