#pragma once

// Infinitesimal monodromy of a closed polygon in closed form, the I/J/K
// invariants and their discriminant Delta, the collapse polynomial chi and
// its roots, the G_k multiratio invariants, the 2-form Omega, the PGL(2)
// transformation laws of [I, 2J, K], and a central-difference oracle for
// the infinitesimal monodromy.

#include <array>
#include <span>

#include "polydyn/scaling.hpp"

namespace polydyn {

struct InfinitesimalMonodromy {
    Mobius matrix; // trace-normalized form ((n/2 + J, -K), (I, n/2 - J))
    cplx I{}, J{}, K{};
    cplx Delta{}; // J^2 - I K
    int n = 0;

    /// The traceless part ((J, -K), (I, -J)).
    Mobius traceless() const { return {J, -K, I, -J}; }
};

/// Closed form of the infinitesimal monodromy from the per-edge logarithmic
/// derivatives; assembled homogeneously so vertices at infinity are fine.
InfinitesimalMonodromy infinitesimal_monodromy(const TwistedPolygon& P,
                                               std::span<const cplx> logderiv);

/// Central difference (M_{1+h} - M_{1-h}) / (2h) of the monodromy along the
/// scaling deformation, mapped back to the frame of the input polygon.  Only
/// the traceless part is meaningful for comparison against the closed form.
Mobius finite_diff_monodromy(const StaircaseState& s, cplx eta, double h = 1e-4);
Mobius finite_diff_monodromy(const FlatState& s, double h = 1e-4);
Mobius finite_diff_monodromy(const LeapfrogState& s, double h = 1e-4);

/// M - (tr M / 2) Id.
Mobius traceless_part(const Mobius& m);

/// Richardson combination (4 D(h/2) - D(h)) / 3 of two central differences,
/// cancelling the h^2 truncation term; opt-in refinement of the oracle.
Mobius richardson_combine(const Mobius& d_h, const Mobius& d_half);

/// Projective roots of chi(X, Y) = I X^2 - 2 J X Y + K Y^2; one entry when
/// the discriminant vanishes.
struct CollapseCandidates {
    std::vector<ProjPoint> roots;
    bool double_root = false;
};

CollapseCandidates chi_roots(cplx I, cplx J, cplx K);

/// Generators of the Möbius action on the triple [I, 2J, K].
struct IjkGenerator {
    enum class Kind { Translate, Dilate, Invert } kind;
    cplx lambda{};

    static IjkGenerator translate(cplx l) { return {Kind::Translate, l}; }
    static IjkGenerator dilate(cplx l);
    static IjkGenerator invert() { return {Kind::Invert, 0.0}; }

    /// The Möbius map whose action on polygons induces this generator.
    Mobius mobius() const;
};

std::array<cplx, 3> ijk_transform(const IjkGenerator& g, const std::array<cplx, 3>& ijk);

/// G_k multiratio invariant; requires 1 <= k <= n/2 and all window vertices
/// finite.  Enumeration is the plain sum over increasing index tuples.
cplx g_invariant(const TwistedPolygon& P, std::span<const cplx> logderiv, int k);

/// Omega(d1, d2) = sum ld_i (d1_i d2_{i+1} - d1_{i+1} d2_i) / (p_i - p_{i+1})^2,
/// the tangent vectors being affine perturbations of the vertices.
cplx omega_eval(const TwistedPolygon& P, std::span<const cplx> logderiv,
                std::span<const cplx> d1, std::span<const cplx> d2);

/// Collapse candidates of a closed state together with the classification of
/// its infinitesimal monodromy; when the latter is loxodromic the candidates
/// carry attracting/repelling labels (indices into roots).
struct CollapsePrediction {
    InfinitesimalMonodromy im;
    CollapseCandidates candidates;
    MobiusClass mobius_class;
    int attracting_index = -1;
    int repelling_index = -1;
};

CollapsePrediction predict_collapse(const TwistedPolygon& P, std::span<const cplx> logderiv);
CollapsePrediction predict_collapse(const StaircaseState& s, cplx eta);
CollapsePrediction predict_collapse(const FlatState& s);
CollapsePrediction predict_collapse(const LeapfrogState& s);

} // namespace polydyn
