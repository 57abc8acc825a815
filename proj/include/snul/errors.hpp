#pragma once

#include <stdexcept>
#include <string>

namespace snul {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// AC = 0 with a centered conic, or a parametrization that needs AC != 0.
struct DegenerateConic : Error {
    using Error::Error;
};

// A = 0: the conic is linear in y, the two-ordinate scheme fails.
struct LinearInY : Error {
    using Error::Error;
};

// phi1(x) == phi2(x): the pointwise divided difference is undefined.
struct CoincidentRoots : Error {
    using Error::Error;
};

// frac(rho) == 0: the approximation sequences are undefined.
struct IntegerRho : Error {
    using Error::Error;
};

// eps == iota to working precision (rational rho signature).
struct TieBreak : Error {
    using Error::Error;
};

struct MeasureTooSmall : Error {
    using Error::Error;
};

struct LossOfOrthogonality : Error {
    using Error::Error;
};

struct PoleAtNode : Error {
    using Error::Error;
};

// A propagated mass came out nonpositive.
struct SignViolation : Error {
    using Error::Error;
};

struct ZeroDivision : Error {
    using Error::Error;
};

} // namespace snul
