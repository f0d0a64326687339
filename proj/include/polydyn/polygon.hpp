#pragma once

// Twisted and closed polygons on the projective line.
//
// A twisted n-gon stores one fundamental window of vertices p_1..p_n and a
// monodromy M; the bi-infinite vertex sequence satisfies p_{i+n} = M p_i.
// Code indexes the window 0-based: vertex(0..n-1) is the window and
// vertex(i) for any integer i applies the appropriate monodromy power, so
// vertex(-1) plays the role of p_0 = M^{-1} p_n..

#include <vector>

#include "polydyn/projgeom.hpp"

namespace polydyn {

/// Default tolerance for closedness of the monodromy.
inline constexpr double kClosedTol = 1e-8;

using CrossRatioCoords = std::vector<cplx>;

class TwistedPolygon {
  public:
    /// Throws DegenerateWindow unless p_i != p_{i+1}, p_{i+2} holds across
    /// the whole window including the monodromy seam.
    TwistedPolygon(std::vector<ProjPoint> window, Mobius monodromy = Mobius::identity());

    int n() const { return static_cast<int>(window_.size()); }
    const std::vector<ProjPoint>& window() const { return window_; }
    const Mobius& monodromy() const { return mono_; }

    /// Vertex at any integer index; indices beyond the window multiply by
    /// monodromy powers on demand.
    ProjPoint vertex(long i) const;

    bool closed(double tol = kClosedTol) const {
        return proj_matrix_distance(mono_, Mobius::identity()) <= tol;
    }

    /// Same polygon with every vertex moved by g and monodromy conjugated.
    TwistedPolygon transformed(const Mobius& g) const;

    /// Same polygon with one window vertex replaced (no revalidation).
    TwistedPolygon with_vertex(int i, const ProjPoint& p) const;

  private:
    std::vector<ProjPoint> window_;
    Mobius mono_;
};

/// Cross-ratio coordinates c_i = [p_i, p_{i+1}, p_{i-1}, p_{i+2}], i over the
/// window; n-periodic and invariant under the Möbius action.
CrossRatioCoords coords(const TwistedPolygon& P);

/// The Möbius map g with (g P) having vertex(-1) = 1, vertex(0) = inf,
/// vertex(1) = 0, together with the transformed polygon.
std::pair<Mobius, TwistedPolygon> normalize_chart(const TwistedPolygon& P);

/// Monodromy of a polygon in the normalized chart, as the raw product of the
/// per-coordinate matrices ((0, c_i), (-1, 1)).  Not rescaled.
Mobius monodromy_product(const CrossRatioCoords& c);

/// Polygon in the normalized chart whose coordinates are c; the monodromy is
/// taken from monodromy_product.  If expected is given, the product must
/// projectively match it.
TwistedPolygon reconstruct(const CrossRatioCoords& c, const Mobius* expected = nullptr);

bool is_closed(const TwistedPolygon& P, double tol = kClosedTol);

} // namespace polydyn
