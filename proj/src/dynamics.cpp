#include "polydyn/dynamics.hpp"

#include <algorithm>
#include <sstream>

namespace polydyn {

namespace {

void check_curvature(const std::vector<cplx>& k, int n, bool forbid_one, const char* what) {
    if (static_cast<int>(k.size()) != n)
        throw Error(std::string(what) + ": curvature length must equal n");
    for (cplx v : k) {
        if (std::abs(v) <= kDegenTol)
            throw Error(std::string(what) + ": curvature entries must be nonzero");
        if (forbid_one && std::abs(v - 1.0) <= kDegenTol)
            throw Error(std::string(what) + ": curvature entries must avoid 1");
    }
}

} // namespace

StaircaseState::StaircaseState(TwistedPolygon P, std::vector<cplx> mu_)
    : polygon(std::move(P)), mu(std::move(mu_)) {
    check_curvature(mu, polygon.n(), false, "StaircaseState");
}

FlatState::FlatState(TwistedPolygon P, std::vector<cplx> alpha_)
    : polygon(std::move(P)), alpha(std::move(alpha_)) {
    check_curvature(alpha, polygon.n(), true, "FlatState");
}

LeapfrogState::LeapfrogState(std::vector<ProjPoint> s_minus_, std::vector<ProjPoint> s_,
                             Mobius monodromy_)
    : s_minus(std::move(s_minus_)), s(std::move(s_)), monodromy(monodromy_.normalized()) {
    if (s_minus.size() != s.size() || s.size() < 3)
        throw Error("LeapfrogState: need two n-gons of equal size, n >= 3");
    interleaved(); // validates the 2n-gon constraints
}

TwistedPolygon LeapfrogState::interleaved() const {
    std::vector<ProjPoint> w;
    w.reserve(2 * s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        w.push_back(s_minus[i]);
        w.push_back(s[i]);
    }
    return {std::move(w), monodromy};
}

FlipWord FlipWord::sweep(int n) {
    FlipWord w;
    w.letters.resize(n);
    for (int i = 0; i < n; ++i)
        w.letters[i] = i + 1;
    return w;
}

FlipWord FlipWord::parse(const std::string& text, int n) {
    if (text == "sweep")
        return sweep(n);
    FlipWord w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        w.letters.push_back(std::stoi(tok));
    }
    if (w.letters.empty())
        throw Error("FlipWord: empty word");
    return w;
}

StaircaseState staircase_flip(const StaircaseState& s, int j) {
    int n = s.polygon.n();
    int j0 = ((j - 1) % n + n) % n;
    int jm = (j0 + n - 1) % n;

    Mobius h = conjugation_map(s.mu[j0], s.mu[jm], s.polygon.vertex(j0 + 1),
                               s.polygon.vertex(j0 - 1));
    ProjPoint moved = h.apply(s.polygon.window()[j0]);

    std::vector<cplx> mu = s.mu;
    std::swap(mu[jm], mu[j0]);
    return {s.polygon.with_vertex(j0, moved), std::move(mu)};
}

StaircaseState apply_word(const StaircaseState& s, const FlipWord& w) {
    StaircaseState out = s;
    for (int j : w.letters)
        out = staircase_flip(out, j);
    return out;
}

namespace {

// Deterministic total order for branch labelling: finite values by (re, im),
// infinity last.
bool branch_less(const ProjPoint& a, const ProjPoint& b) {
    bool ia = a.is_infinite(1e-9), ib = b.is_infinite(1e-9);
    if (ia != ib)
        return ib;
    if (ia)
        return false;
    cplx za = a.affine(), zb = b.affine();
    if (std::real(za) != std::real(zb))
        return std::real(za) < std::real(zb);
    return std::imag(za) < std::imag(zb);
}

FlatState flat_branch(const FlatState& s, const std::vector<Mobius>& L, const ProjPoint& x1) {
    int n = s.polygon.n();
    std::vector<ProjPoint> x(n);
    x[0] = x1;
    for (int i = 0; i + 1 < n; ++i)
        x[i + 1] = L[i].apply(x[i]);

    std::vector<ProjPoint> q(n);
    for (int i = 0; i < n; ++i) {
        try {
            q[i] = solve_cross_ratio_last(s.polygon.vertex(i), s.polygon.vertex(i + 1),
                                          s.polygon.vertex(i - 1), x[i]);
        } catch (const DegenerateCrossRatio&) {
            throw DegenerateStep("flat_step: degenerate solve for q");
        }
    }
    try {
        return {TwistedPolygon(std::move(q), s.polygon.monodromy()), s.alpha};
    } catch (const DegenerateWindow&) {
        throw DegenerateStep("flat_step: output polygon degenerate");
    }
}

} // namespace

std::pair<FlatState, FlatState> flat_step(const FlatState& s) {
    int n = s.polygon.n();
    CrossRatioCoords c = coords(s.polygon);

    // x_{i+1} = 1 - c_i / (alpha_i x_i), accumulated as a matrix product so
    // that x may pass through 0 or infinity mid-recursion.
    std::vector<Mobius> L(n);
    Mobius F = Mobius::identity();
    for (int i = 0; i < n; ++i) {
        L[i] = Mobius{s.alpha[i], -c[i], s.alpha[i], 0.0}.normalized();
        F = (L[i] * F).normalized();
    }

    MobiusClass cls = classify(F);
    if (cls.kind == MobiusKind::Parabolic || cls.kind == MobiusKind::Identity)
        throw ParabolicStep("flat_step: the two branches coincide");

    ProjPoint x_plus = cls.fixed_points[0];
    ProjPoint x_minus = cls.fixed_points[1];
    if (branch_less(x_minus, x_plus))
        std::swap(x_plus, x_minus);

    return {flat_branch(s, L, x_plus), flat_branch(s, L, x_minus)};
}

namespace {

std::vector<ProjPoint> leapfrog_images(const std::vector<ProjPoint>& axis,
                                       const std::vector<ProjPoint>& moving, const Mobius& mono) {
    int n = static_cast<int>(axis.size());
    auto at = [&](int i) -> ProjPoint {
        if (i < 0)
            return mono.inverse().apply(axis[i + n]);
        if (i >= n)
            return mono.apply(axis[i - n]);
        return axis[i];
    };
    std::vector<ProjPoint> out(n);
    for (int i = 0; i < n; ++i) {
        ProjPoint prev = at(i - 1), cur = at(i), next = at(i + 1);
        Mobius g = mobius_from_triples({prev, cur, next}, {next, cur, prev});
        out[i] = g.apply(moving[i]);
    }
    return out;
}

} // namespace

LeapfrogState leapfrog_step(const LeapfrogState& st) {
    return {st.s, leapfrog_images(st.s, st.s_minus, st.monodromy), st.monodromy};
}

LeapfrogState leapfrog_step_backward(const LeapfrogState& st) {
    return {leapfrog_images(st.s_minus, st.s, st.monodromy), st.s_minus, st.monodromy};
}

} // namespace polydyn
