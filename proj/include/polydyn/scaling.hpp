#pragma once

// Scaling symmetries of the three systems, acting on cross-ratio
// coordinates and curvature data, their logarithmic derivatives at t = 1,
// and the deformation of a closed polygon into a family of twisted ones.

#include <string>
#include <vector>

#include "polydyn/dynamics.hpp"

namespace polydyn {

struct SystemSpec {
    enum class Kind { Staircase, Flat, Leapfrog } kind = Kind::Staircase;
    cplx eta{1.0}; // staircase only, nonzero

    static SystemSpec staircase(cplx eta = 1.0);
    static SystemSpec flat() { return {Kind::Flat, 1.0}; }
    static SystemSpec leapfrog() { return {Kind::Leapfrog, 1.0}; }
    static SystemSpec parse(const std::string& name, cplx eta = 1.0);
    std::string name() const;
};

/// Coordinates and curvature after applying a scaling at parameter t.  For
/// the leapfrog system c holds the 2n interleaved coordinates and curvature
/// is empty.
struct ScaledCoordinates {
    std::vector<cplx> c;
    std::vector<cplx> curvature;
    cplx t{1.0};
};

/// mu_i(t) = t mu_i / (1 + (t-1) eta mu_i), c_i(t) = c_i (1 + (t-1) eta mu_i).
/// Excluded parameters: t = 1 - 1/(eta mu_i).
ScaledCoordinates scale_staircase(const std::vector<cplx>& c, const std::vector<cplx>& mu,
                                  cplx eta, cplx t);

/// alpha_i(t) = 1 + kappa_i (t alpha_1 - 1) with kappa_i = (1-alpha_i)/(1-alpha_1),
/// c_i(t) = c_i alpha_i(t)/alpha_i.  Excluded: t = 1/alpha_1 and
/// t = (kappa_i - 1)/(kappa_i alpha_1).
ScaledCoordinates scale_flat(const std::vector<cplx>& c, const std::vector<cplx>& alpha, cplx t);

/// o_minus_i(t) = t o_minus_i, o_i(t) = o_i on the interleaved coordinates;
/// t must be nonzero.
ScaledCoordinates scale_leapfrog(const std::vector<cplx>& o_minus, const std::vector<cplx>& o,
                                 cplx t);

/// Per-edge logarithmic derivatives c_i'(1)/c_i of the scaled coordinates.
std::vector<cplx> log_derivative(const StaircaseState& s, cplx eta);
std::vector<cplx> log_derivative(const FlatState& s);
/// For the leapfrog the result has 2n entries aligned with the interleaved
/// polygon's coordinates: 1 on (s_i-, s_i) edges, 0 on (s_i, s_{i+1}-) edges.
std::vector<cplx> log_derivative(const LeapfrogState& s);

/// Scale the closed state's coordinates by z and reconstruct in the
/// normalized chart; the canonical smooth lift of the deformation family.
TwistedPolygon deform_family(const StaircaseState& s, cplx eta, cplx z);
TwistedPolygon deform_family(const FlatState& s, cplx z);
TwistedPolygon deform_family(const LeapfrogState& s, cplx z);

} // namespace polydyn
