#pragma once

#include <stdexcept>

namespace coprime {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// gcd(M, N) != 1.
struct NotCoprimeError : Error {
    using Error::Error;
};

/// A parameter is outside its admissible range (rho, r, M/N ordering, Q).
struct RangeError : Error {
    using Error::Error;
};

/// rho > 0 but the quantization grid k/Q holds no nonzero point inside (-rho, rho),
/// so every draw would collapse to the ideal sampler.
struct DegenerateGridError : Error {
    using Error::Error;
};

/// Jitter array lengths do not match rN / rM.
struct LengthMismatchError : Error {
    using Error::Error;
};

/// Malformed config file or rational literal.
struct ParseError : Error {
    using Error::Error;
};

} // namespace coprime
