#include "polydyn/invariants.hpp"

#include <algorithm>
#include <functional>

namespace polydyn {

namespace {

constexpr double kFiniteTol = 1e-6; // |h1| above this counts as a finite vertex

bool all_window_finite(const TwistedPolygon& P) {
    for (const auto& p : P.window())
        if (std::abs(p.h1()) < kFiniteTol)
            return false;
    return true;
}

} // namespace

Mobius traceless_part(const Mobius& m) {
    cplx half_tr = 0.5 * m.trace();
    return {m.a - half_tr, m.b, m.c, m.d - half_tr};
}

Mobius richardson_combine(const Mobius& d_h, const Mobius& d_half) {
    return (d_half * 4.0 - d_h) * (1.0 / 3.0);
}

InfinitesimalMonodromy infinitesimal_monodromy(const TwistedPolygon& P,
                                               std::span<const cplx> logderiv) {
    int n = P.n();
    if (static_cast<int>(logderiv.size()) != n)
        throw Error("infinitesimal_monodromy: logderiv length must equal n");
    if (!P.closed(1e-6))
        throw Error("infinitesimal_monodromy: polygon must be closed");

    // Rank-one assembly: V -> ld_i det(V, V_{i+1}) / det(V_i, V_{i+1}) V_i,
    // independent of the choice of lifts.
    Mobius raw{0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        ProjPoint vi = P.vertex(i);
        ProjPoint vj = P.vertex(i + 1);
        cplx den = pdet(vi, vj);
        if (std::abs(den) <= kDegenTol)
            throw DegenerateEdge("infinitesimal_monodromy: coincident edge endpoints");
        cplx f = logderiv[i] / den;
        // column vi times row (vj.h1, -vj.h0)
        raw = raw + Mobius{f * vi.h0() * vj.h1(), -f * vi.h0() * vj.h0(),
                           f * vi.h1() * vj.h1(), -f * vi.h1() * vj.h0()};
    }

    InfinitesimalMonodromy out;
    out.n = n;
    if (all_window_finite(P)) {
        cplx I = 0.0, J = 0.0, K = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx pi = P.vertex(i).affine();
            cplx pj = P.vertex(i + 1).affine();
            cplx diff = pi - pj;
            I += logderiv[i] / diff;
            J += 0.5 * logderiv[i] * (pi + pj) / diff;
            K += logderiv[i] * pi * pj / diff;
        }
        out.I = I;
        out.J = J;
        out.K = K;
    } else {
        out.I = raw.c;
        out.J = 0.5 * (raw.a - raw.d);
        out.K = -raw.b;
    }
    out.Delta = out.J * out.J - out.I * out.K;
    cplx half_n = 0.5 * static_cast<double>(n);
    out.matrix = Mobius{half_n + out.J, -out.K, out.I, half_n - out.J};
    return out;
}

namespace {

// Shared oracle: differentiate the raw chart monodromy product along the
// scaling, divide out the scalar at t = 1, and conjugate back to the frame
// of the input polygon.
Mobius finite_diff_impl(const TwistedPolygon& P,
                        const std::function<CrossRatioCoords(cplx)>& scaled_coords, double h) {
    if (!P.closed(1e-6))
        throw Error("finite_diff_monodromy: polygon must be closed");
    Mobius g = normalize_chart(P).first;

    Mobius m_plus = monodromy_product(scaled_coords(1.0 + h));
    Mobius m_minus = monodromy_product(scaled_coords(1.0 - h));
    Mobius m_one = monodromy_product(scaled_coords(1.0));
    cplx s = 0.5 * m_one.trace();
    if (std::abs(s) <= kDegenTol)
        throw Error("finite_diff_monodromy: degenerate monodromy scalar");

    Mobius diff = (m_plus - m_minus) * (1.0 / (2.0 * h * s));
    // true inverse, not the adjugate, so the absolute scale survives
    Mobius back = (g.inverse() * diff * g) * (1.0 / g.det());
    return back;
}

} // namespace

Mobius finite_diff_monodromy(const StaircaseState& s, cplx eta, double h) {
    CrossRatioCoords c = coords(s.polygon);
    auto scaled = [&](cplx t) { return scale_staircase(c, s.mu, eta, t).c; };
    return finite_diff_impl(s.polygon, scaled, h);
}

Mobius finite_diff_monodromy(const FlatState& s, double h) {
    CrossRatioCoords c = coords(s.polygon);
    auto scaled = [&](cplx t) { return scale_flat(c, s.alpha, t).c; };
    return finite_diff_impl(s.polygon, scaled, h);
}

Mobius finite_diff_monodromy(const LeapfrogState& s, double h) {
    TwistedPolygon il = s.interleaved();
    CrossRatioCoords c = coords(il);
    std::vector<cplx> om(s.n()), o(s.n());
    for (int i = 0; i < s.n(); ++i) {
        om[i] = c[2 * i];
        o[i] = c[2 * i + 1];
    }
    auto scaled = [&](cplx t) { return scale_leapfrog(om, o, t).c; };
    return finite_diff_impl(il, scaled, h);
}

CollapseCandidates chi_roots(cplx I, cplx J, cplx K) {
    double scale = std::max({std::abs(I), std::abs(J), std::abs(K)});
    if (scale == 0.0)
        throw ZeroPolynomial("chi_roots: I = J = K = 0");

    CollapseCandidates out;
    cplx delta = J * J - I * K;
    out.double_root = std::abs(delta) <= 1e-12 * scale * scale;
    auto [r1, r2] = projective_quadratic_roots(I, -2.0 * J, K);
    if (out.double_root) {
        out.roots = {r1};
    } else {
        out.roots = {r1, r2};
    }
    return out;
}

IjkGenerator IjkGenerator::dilate(cplx l) {
    if (l == 0.0)
        throw Error("IjkGenerator: dilation factor must be nonzero");
    return {Kind::Dilate, l};
}

Mobius IjkGenerator::mobius() const {
    switch (kind) {
    case Kind::Translate:
        return Mobius::translation(-lambda); // z -> z - lambda
    case Kind::Dilate:
        return Mobius::scaling(lambda);
    case Kind::Invert:
        return {0.0, -1.0, 1.0, 0.0}; // z -> -1/z
    }
    return Mobius::identity();
}

std::array<cplx, 3> ijk_transform(const IjkGenerator& g, const std::array<cplx, 3>& ijk) {
    cplx I = ijk[0], twoJ = ijk[1], K = ijk[2];
    switch (g.kind) {
    case IjkGenerator::Kind::Translate: {
        cplx l = g.lambda;
        return {I, -(2.0 * I * l - twoJ), I * l * l - twoJ * l + K};
    }
    case IjkGenerator::Kind::Dilate:
        return {I / g.lambda, twoJ, K * g.lambda};
    case IjkGenerator::Kind::Invert:
        return {K, -twoJ, I};
    }
    return ijk;
}

cplx g_invariant(const TwistedPolygon& P, std::span<const cplx> logderiv, int k) {
    int n = P.n();
    if (static_cast<int>(logderiv.size()) != n)
        throw Error("g_invariant: logderiv length must equal n");
    if (k < 1 || 2 * k > n)
        throw Error("g_invariant: need 1 <= k <= n/2");
    if (!all_window_finite(P))
        throw DegenerateEdge("g_invariant: vertex at infinity; move the chart first");

    // p[i] for i = 0..n; p[n] crosses the seam via the monodromy.
    std::vector<cplx> p(n + 1);
    for (int i = 0; i <= n; ++i)
        p[i] = P.vertex(i).affine();

    std::vector<int> idx(k);
    for (int j = 0; j < k; ++j)
        idx[j] = j;

    cplx total = 0.0;
    while (true) {
        cplx term = 1.0;
        for (int j = 0; j < k; ++j)
            term *= logderiv[idx[j]];
        cplx num = p[idx[0]] - p[idx[k - 1] + 1];
        for (int j = 1; j < k; ++j)
            num *= p[idx[j]] - p[idx[j - 1] + 1];
        cplx den = 1.0;
        for (int j = 0; j < k; ++j) {
            cplx e = p[idx[j]] - p[idx[j] + 1];
            if (std::abs(e) <= kDegenTol)
                throw DegenerateEdge("g_invariant: coincident edge endpoints");
            den *= e;
        }
        total += term * num / den;

        // next k-combination of {0..n-1}
        int j = k - 1;
        while (j >= 0 && idx[j] == n - k + j)
            --j;
        if (j < 0)
            break;
        ++idx[j];
        for (int l = j + 1; l < k; ++l)
            idx[l] = idx[l - 1] + 1;
    }
    return total;
}

cplx omega_eval(const TwistedPolygon& P, std::span<const cplx> logderiv, std::span<const cplx> d1,
                std::span<const cplx> d2) {
    int n = P.n();
    if (static_cast<int>(logderiv.size()) != n || static_cast<int>(d1.size()) != n ||
        static_cast<int>(d2.size()) != n)
        throw Error("omega_eval: all lists must have length n");
    if (!all_window_finite(P))
        throw DegenerateEdge("omega_eval: vertex at infinity; move the chart first");

    cplx total = 0.0;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        cplx diff = P.vertex(i).affine() - P.vertex(i + 1).affine();
        if (std::abs(diff) <= kDegenTol)
            throw DegenerateEdge("omega_eval: coincident edge endpoints");
        total += logderiv[i] * (d1[i] * d2[j] - d1[j] * d2[i]) / (diff * diff);
    }
    return total;
}

CollapsePrediction predict_collapse(const TwistedPolygon& P, std::span<const cplx> logderiv) {
    CollapsePrediction out;
    out.im = infinitesimal_monodromy(P, logderiv);
    out.candidates = chi_roots(out.im.I, out.im.J, out.im.K);
    out.mobius_class = classify(out.im.matrix);
    if (out.mobius_class.kind == MobiusKind::Loxodromic) {
        for (size_t r = 0; r < out.candidates.roots.size(); ++r) {
            if (projectively_equal(out.candidates.roots[r], *out.mobius_class.attracting, 1e-6))
                out.attracting_index = static_cast<int>(r);
            if (projectively_equal(out.candidates.roots[r], *out.mobius_class.repelling, 1e-6))
                out.repelling_index = static_cast<int>(r);
        }
    }
    return out;
}

CollapsePrediction predict_collapse(const StaircaseState& s, cplx eta) {
    return predict_collapse(s.polygon, log_derivative(s, eta));
}

CollapsePrediction predict_collapse(const FlatState& s) {
    return predict_collapse(s.polygon, log_derivative(s));
}

CollapsePrediction predict_collapse(const LeapfrogState& s) {
    return predict_collapse(s.interleaved(), log_derivative(s));
}

} // namespace polydyn
