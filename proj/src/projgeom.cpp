#include "polydyn/projgeom.hpp"

#include <algorithm>

namespace polydyn {

Mobius Mobius::power(long k) const {
    Mobius base = k >= 0 ? *this : inverse();
    long e = k >= 0 ? k : -k;
    Mobius acc = Mobius::identity();
    for (long i = 0; i < e; ++i)
        acc = (acc * base).normalized();
    return acc;
}

cplx cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
    cplx dac = pdet(a, c);
    cplx dbd = pdet(b, d);
    cplx dad = pdet(a, d);
    cplx dbc = pdet(b, c);
    if (std::abs(dad) <= kDegenTol || std::abs(dbc) <= kDegenTol)
        throw DegenerateCrossRatio("cross_ratio: coincident denominator pair");
    return (dac * dbd) / (dad * dbc);
}

ProjPoint solve_cross_ratio_last(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                 const ProjPoint& w) {
    // [a,b,c,x] = w  <=>  det(a,c) det(b,x) w1 = w0 det(a,x) det(b,c),
    // which is linear in the homogeneous pair of x.
    cplx dac = pdet(a, c);
    cplx dbc = pdet(b, c);
    cplx u = dac * b.h0() * w.h1() - w.h0() * dbc * a.h0();
    cplx v = dac * b.h1() * w.h1() - w.h0() * dbc * a.h1();
    if (std::abs(u) <= kDegenTol && std::abs(v) <= kDegenTol)
        throw DegenerateCrossRatio("solve_cross_ratio_last: degenerate configuration");
    return {u, v};
}

ProjPoint solve_cross_ratio_last(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                 cplx w) {
    return solve_cross_ratio_last(a, b, c, ProjPoint(w));
}

namespace {

// Matrix sending [1:0] -> p1, [0:1] -> p2, [1:1] -> p3.
Mobius basis_for_triple(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
    cplx den = pdet(p1, p2);
    if (std::abs(den) <= kDegenTol)
        throw DegenerateTriple("mobius_from_triples: coincident points in triple");
    cplx l1 = pdet(p3, p2) / den;
    cplx l2 = pdet(p1, p3) / den;
    if (std::abs(l1) <= kDegenTol || std::abs(l2) <= kDegenTol)
        throw DegenerateTriple("mobius_from_triples: coincident points in triple");
    return {l1 * p1.h0(), l2 * p2.h0(), l1 * p1.h1(), l2 * p2.h1()};
}

cplx eigenvalue_at(const Mobius& m, const ProjPoint& f) {
    if (std::abs(f.h0()) >= std::abs(f.h1()))
        return (m.a * f.h0() + m.b * f.h1()) / f.h0();
    return (m.c * f.h0() + m.d * f.h1()) / f.h1();
}

} // namespace

std::pair<ProjPoint, ProjPoint> projective_quadratic_roots(cplx qa, cplx qb, cplx qc) {
    double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc)});
    if (scale == 0.0)
        throw Error("projective_quadratic_roots: zero polynomial");
    if (std::abs(qa) <= 1e-14 * scale) {
        if (std::abs(qb) <= 1e-14 * scale)
            return {ProjPoint::infinity(), ProjPoint::infinity()};
        return {ProjPoint::infinity(), ProjPoint(-qc, qb)};
    }
    cplx s = std::sqrt(qb * qb - 4.0 * qa * qc);
    if (std::real(std::conj(qb) * s) < 0.0)
        s = -s;
    cplx q = -0.5 * (qb + s);
    if (std::abs(q) <= 1e-14 * scale) // qb ~ 0 and disc ~ 0: double root at 0
        return {ProjPoint(cplx(0.0)), ProjPoint(cplx(0.0))};
    return {ProjPoint(q, qa), ProjPoint(qc, q)};
}

Mobius mobius_from_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst) {
    Mobius A = basis_for_triple(src[0], src[1], src[2]);
    Mobius B = basis_for_triple(dst[0], dst[1], dst[2]);
    return (B * A.inverse()).normalized();
}

MobiusClass classify(const Mobius& m) {
    if (std::abs(m.det()) <= kDegenTol * sq(m.frobenius_norm()))
        throw Error("classify: degenerate matrix");

    MobiusClass out;
    if (proj_matrix_distance(m, Mobius::identity()) <= kDegenTol) {
        out.kind = MobiusKind::Identity;
        out.multiplier = 1.0;
        return out;
    }

    // Fixed points solve c z^2 + (d - a) z - b = 0.
    cplx tau = m.trace() * m.trace() / m.det();
    if (std::abs(tau - 4.0) <= 1e-9) {
        out.kind = MobiusKind::Parabolic;
        double scale = std::max({std::abs(m.c), std::abs(m.d - m.a), std::abs(m.b)});
        if (std::abs(m.c) <= 1e-14 * scale)
            out.fixed_points.push_back(ProjPoint::infinity());
        else
            out.fixed_points.push_back(ProjPoint(m.a - m.d, 2.0 * m.c));
        out.multiplier = 1.0;
        return out;
    }

    auto [f1, f2] = projective_quadratic_roots(m.c, m.d - m.a, -m.b);
    cplx l1 = eigenvalue_at(m, f1);
    cplx l2 = eigenvalue_at(m, f2);
    cplx k1 = l2 / l1; // multiplier of the map at f1
    out.fixed_points = {f1, f2};
    out.multiplier = k1;
    if (std::abs(std::abs(k1) - 1.0) <= 1e-9) {
        out.kind = MobiusKind::Elliptic;
    } else {
        out.kind = MobiusKind::Loxodromic;
        if (std::abs(k1) < 1.0) {
            out.attracting = f1;
            out.repelling = f2;
        } else {
            out.attracting = f2;
            out.repelling = f1;
        }
    }
    return out;
}

Mobius conjugation_map(cplx alpha, cplx beta, const ProjPoint& b, const ProjPoint& d) {
    if (alpha == 0.0 || beta == 0.0)
        throw Error("conjugation_map: alpha and beta must be nonzero");
    if (chordal_distance(b, d) <= kDegenTol)
        throw CoincidentAxis("conjugation_map: coincident axis points");
    // g sends (b, d) to (inf, 0); the map is g^{-1} diag(alpha, beta) g.
    Mobius g{d.h1(), -d.h0(), b.h1(), -b.h0()};
    Mobius diag{alpha, 0.0, 0.0, beta};
    return (g.inverse() * diag * g).normalized();
}

} // namespace polydyn
