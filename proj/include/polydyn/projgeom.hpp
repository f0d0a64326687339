#pragma once

// Projective-line primitives over the complex numbers.
//
// Points are homogeneous pairs [h0 : h1], kept at unit Euclidean norm; the
// affine value is h0/h1 and infinity is [1 : 0].  Möbius maps are 2x2
// complex matrices up to a nonzero scalar.  Equality of points and of maps
// is always projective, measured by the chordal metric resp. the
// phase-invariant Frobenius angle.

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "polydyn/errors.hpp"

namespace polydyn {

using cplx = std::complex<double>;

/// Default projective equality threshold (chordal distance).
inline constexpr double kProjTol = 1e-9;
/// Construction-level degeneracy threshold.
inline constexpr double kDegenTol = 1e-12;

inline double sq(double x) { return x * x; }

/// A point of the projective line as a unit-norm homogeneous pair.
class ProjPoint {
  public:
    ProjPoint() : h0_(0.0), h1_(1.0) {}

    /// From an affine value z = h0/h1.
    ProjPoint(cplx affine) : h0_(affine), h1_(1.0) { normalize(); } // NOLINT(google-explicit-constructor)
    ProjPoint(double affine) : ProjPoint(cplx(affine)) {}           // NOLINT(google-explicit-constructor)

    ProjPoint(cplx h0, cplx h1) : h0_(h0), h1_(h1) {
        if (h0 == 0.0 && h1 == 0.0)
            throw Error("ProjPoint: zero homogeneous pair");
        normalize();
    }

    static ProjPoint infinity() { return ProjPoint(cplx(1.0), cplx(0.0)); }

    cplx h0() const { return h0_; }
    cplx h1() const { return h1_; }

    /// True when the point is (numerically) [1 : 0].
    bool is_infinite(double tol = kDegenTol) const { return std::abs(h1_) <= tol; }

    /// Affine value h0/h1; undefined (huge) at infinity.
    cplx affine() const { return h0_ / h1_; }

  private:
    void normalize() {
        double n = std::sqrt(std::norm(h0_) + std::norm(h1_));
        h0_ /= n;
        h1_ /= n;
    }

    cplx h0_, h1_;
};

/// det of the 2x2 matrix with columns (p, q).
inline cplx pdet(const ProjPoint& p, const ProjPoint& q) {
    return p.h0() * q.h1() - p.h1() * q.h0();
}

/// Chordal metric |p0 q1 - p1 q0| / (|p| |q|); in [0,1], zero iff equal.
inline double chordal_distance(const ProjPoint& p, const ProjPoint& q) {
    return std::abs(pdet(p, q)); // both pairs are unit-norm
}

inline bool projectively_equal(const ProjPoint& p, const ProjPoint& q, double tol = kProjTol) {
    return chordal_distance(p, q) <= tol;
}

/// A Möbius transformation, stored as the matrix ((a, b), (c, d)) acting by
/// z -> (a z + b) / (c z + d), considered up to scalar.
struct Mobius {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Mobius() = default;
    Mobius(cplx a_, cplx b_, cplx c_, cplx d_) : a(a_), b(b_), c(c_), d(d_) {}

    static Mobius identity() { return {}; }
    static Mobius scaling(cplx k) { return {k, 0.0, 0.0, 1.0}; }
    static Mobius translation(cplx t) { return {1.0, t, 0.0, 1.0}; }

    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }

    /// Adjugate; equals the inverse up to scalar.
    Mobius inverse() const { return {d, -b, -c, a}; }

    double frobenius_norm() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }

    /// Same map with Frobenius norm 1.
    Mobius normalized() const {
        double n = frobenius_norm();
        return {a / n, b / n, c / n, d / n};
    }

    ProjPoint apply(const ProjPoint& p) const {
        cplx u = a * p.h0() + b * p.h1();
        cplx v = c * p.h0() + d * p.h1();
        if (u == 0.0 && v == 0.0)
            throw Error("Mobius::apply: singular matrix");
        return {u, v};
    }

    ProjPoint operator()(const ProjPoint& p) const { return apply(p); }

    Mobius operator*(const Mobius& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mobius operator+(const Mobius& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mobius operator-(const Mobius& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mobius operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }

    /// Integer power, renormalized along the way; k may be negative.
    Mobius power(long k) const;
};

/// Phase-invariant projective distance 1 - |<A,B>_F| / (|A|_F |B|_F).
inline double proj_matrix_distance(const Mobius& A, const Mobius& B) {
    cplx inner = std::conj(A.a) * B.a + std::conj(A.b) * B.b + std::conj(A.c) * B.c +
                 std::conj(A.d) * B.d;
    double v = 1.0 - std::abs(inner) / (A.frobenius_norm() * B.frobenius_norm());
    return v < 0.0 ? 0.0 : v;
}

enum class MobiusKind { Identity, Parabolic, Elliptic, Loxodromic };

/// Fixed-point structure of a Möbius map.
struct MobiusClass {
    MobiusKind kind = MobiusKind::Identity;
    std::vector<ProjPoint> fixed_points; // empty for identity, 1 parabolic, 2 otherwise
    std::optional<ProjPoint> attracting; // loxodromic only
    std::optional<ProjPoint> repelling;  // loxodromic only
    cplx multiplier{1.0};                // derivative at fixed_points[0]
};

/// Cross-ratio [a,b,c,d] = (a-c)(b-d) / ((a-d)(b-c)), evaluated homogeneously.
/// Throws DegenerateCrossRatio when a denominator pair {a,d} or {b,c} coincides.
cplx cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);

/// Solve [a,b,c,x] = w for x.  w may be any point of the projective line.
ProjPoint solve_cross_ratio_last(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                 const ProjPoint& w);
ProjPoint solve_cross_ratio_last(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                 cplx w);

/// The unique Möbius map with m(src[k]) = dst[k] for pairwise-distinct triples.
Mobius mobius_from_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst);

/// Projective roots of qa z^2 + qb z + qc = 0, with the cancellation-free
/// branch choice; qa ~ 0 yields a root at infinity.
std::pair<ProjPoint, ProjPoint> projective_quadratic_roots(cplx qa, cplx qb, cplx qc);

/// Fixed points and dynamic type of a nondegenerate Möbius map.
MobiusClass classify(const Mobius& m);

/// The map fixing b and d with characteristic constant alpha/beta; its
/// inverse is conjugation_map(beta, alpha, b, d).
Mobius conjugation_map(cplx alpha, cplx beta, const ProjPoint& b, const ProjPoint& d);

} // namespace polydyn
