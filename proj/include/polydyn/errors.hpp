#pragma once

#include <stdexcept>
#include <string>

namespace polydyn {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateCrossRatio : Error {
    using Error::Error;
};
struct DegenerateTriple : Error {
    using Error::Error;
};
struct CoincidentAxis : Error {
    using Error::Error;
};
struct DegenerateWindow : Error {
    using Error::Error;
};
struct DegenerateReconstruction : Error {
    using Error::Error;
};
struct DegenerateStep : Error {
    using Error::Error;
};
struct ParabolicStep : Error {
    using Error::Error;
};
struct ExcludedParameter : Error {
    using Error::Error;
};
struct ZeroPolynomial : Error {
    using Error::Error;
};
struct DegenerateEdge : Error {
    using Error::Error;
};
struct NoCyclicPlacement : Error {
    using Error::Error;
};

} // namespace polydyn
