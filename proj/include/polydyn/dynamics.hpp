#pragma once

// The three polygonal transformations on the projective line: staircase
// flips driven by a discrete curvature mu, the flat cross-ratio step pairing
// a polygon with its two alpha-related neighbours, and the leapfrog map on
// interleaved polygon pairs.

#include <utility>
#include <vector>

#include "polydyn/polygon.hpp"

namespace polydyn {

/// Polygon with discrete curvature mu; mu[i] sits on the edge
/// (vertex(i), vertex(i+1)) and is n-periodic.
struct StaircaseState {
    TwistedPolygon polygon;
    std::vector<cplx> mu;

    StaircaseState(TwistedPolygon P, std::vector<cplx> mu_);
};

/// Polygon with discrete curvature alpha, alpha[i] on edge
/// (vertex(i), vertex(i+1)), each alpha[i] outside {0, 1}.
struct FlatState {
    TwistedPolygon polygon;
    std::vector<cplx> alpha;

    FlatState(TwistedPolygon P, std::vector<cplx> alpha_);
};

/// Two n-gons with a common monodromy, interleaved into a 2n-gon
/// (s_minus[0], s[0], s_minus[1], s[1], ...).
struct LeapfrogState {
    std::vector<ProjPoint> s_minus;
    std::vector<ProjPoint> s;
    Mobius monodromy;

    LeapfrogState(std::vector<ProjPoint> s_minus_, std::vector<ProjPoint> s_,
                  Mobius monodromy_ = Mobius::identity());

    int n() const { return static_cast<int>(s.size()); }

    /// The interleaved 2n-gon; its cross-ratio coordinates alternate
    /// (o_minus[0], o[0], o_minus[1], o[1], ...).
    TwistedPolygon interleaved() const;
};

/// A word in the flip generators; letters are 1-based indices in Z/nZ.
struct FlipWord {
    std::vector<int> letters;

    static FlipWord sweep(int n);
    /// Parse "1,4,2" or the keyword "sweep".
    static FlipWord parse(const std::string& text, int n);
};

/// Flip at index j (1-based): vertex j is replaced by its mu_j/mu_{j-1}
/// conjugate with respect to (p_{j+1}, p_{j-1}) and the two curvatures swap.
/// Monodromy and all other data are unchanged.
StaircaseState staircase_flip(const StaircaseState& s, int j);

/// Left-to-right application; the first letter acts first.
StaircaseState apply_word(const StaircaseState& s, const FlipWord& w);

/// The two polygons alpha-related to the input, as (Q+, Q-); branches are
/// ordered by the affine value of the solved x_1 (lexicographic on
/// (re, im), infinity last).  Throws ParabolicStep when the two branches
/// coincide and DegenerateStep when a solved vertex degenerates.
std::pair<FlatState, FlatState> flat_step(const FlatState& s);

/// (S-, S) -> (S, S+) where s_i+ is the image of s_i- under the unique
/// Möbius map fixing s_i and exchanging s_{i-1} with s_{i+1}.
LeapfrogState leapfrog_step(const LeapfrogState& s);

/// Reverse evolution (S-, S) -> (S--, S-): the same local moves built from
/// the neighbour triples of S-.
LeapfrogState leapfrog_step_backward(const LeapfrogState& s);

} // namespace polydyn
