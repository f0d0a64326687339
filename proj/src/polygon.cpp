#include "polydyn/polygon.hpp"

namespace polydyn {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0))
        --q;
    return q;
}

} // namespace

TwistedPolygon::TwistedPolygon(std::vector<ProjPoint> window, Mobius monodromy)
    : window_(std::move(window)), mono_(monodromy.normalized()) {
    int n = static_cast<int>(window_.size());
    if (n < 3)
        throw DegenerateWindow("TwistedPolygon: need n >= 3");
    if (std::abs(mono_.det()) <= kDegenTol)
        throw DegenerateWindow("TwistedPolygon: singular monodromy");
    for (int i = 0; i < n; ++i) {
        ProjPoint p1 = vertex(i + 1);
        ProjPoint p2 = vertex(i + 2);
        if (chordal_distance(window_[i], p1) <= kDegenTol ||
            chordal_distance(window_[i], p2) <= kDegenTol)
            throw DegenerateWindow("TwistedPolygon: coincident neighbours in window");
    }
}

ProjPoint TwistedPolygon::vertex(long i) const {
    long n = window_.size();
    long k = floor_div(i, n);
    long j = i - k * n;
    if (k == 0)
        return window_[j];
    return mono_.power(k).apply(window_[j]);
}

TwistedPolygon TwistedPolygon::transformed(const Mobius& g) const {
    std::vector<ProjPoint> w;
    w.reserve(window_.size());
    for (const auto& p : window_)
        w.push_back(g.apply(p));
    return {std::move(w), (g * mono_ * g.inverse()).normalized()};
}

TwistedPolygon TwistedPolygon::with_vertex(int i, const ProjPoint& p) const {
    TwistedPolygon out = *this;
    out.window_[i] = p;
    return out;
}

CrossRatioCoords coords(const TwistedPolygon& P) {
    CrossRatioCoords c(P.n());
    for (int i = 0; i < P.n(); ++i)
        c[i] = cross_ratio(P.vertex(i), P.vertex(i + 1), P.vertex(i - 1), P.vertex(i + 2));
    return c;
}

std::pair<Mobius, TwistedPolygon> normalize_chart(const TwistedPolygon& P) {
    Mobius g = mobius_from_triples({P.vertex(-1), P.vertex(0), P.vertex(1)},
                                   {ProjPoint(1.0), ProjPoint::infinity(), ProjPoint(0.0)});
    return {g, P.transformed(g)};
}

Mobius monodromy_product(const CrossRatioCoords& c) {
    Mobius m = Mobius::identity();
    for (cplx ci : c)
        m = m * Mobius{0.0, ci, -1.0, 1.0};
    return m;
}

TwistedPolygon reconstruct(const CrossRatioCoords& c, const Mobius* expected) {
    int n = static_cast<int>(c.size());
    if (n < 3)
        throw DegenerateReconstruction("reconstruct: need n >= 3 coordinates");
    for (cplx ci : c)
        if (std::abs(ci) <= kDegenTol)
            throw DegenerateReconstruction("reconstruct: zero coordinate");

    std::vector<ProjPoint> verts(n);
    ProjPoint prev = ProjPoint(1.0); // vertex(-1)
    verts[0] = ProjPoint::infinity();
    verts[1] = ProjPoint(0.0);
    for (int k = 0; k + 2 < n; ++k) {
        // c_k = [v_k, v_{k+1}, v_{k-1}, v_{k+2}]
        const ProjPoint& before = (k == 0) ? prev : verts[k - 1];
        ProjPoint next = solve_cross_ratio_last(verts[k], verts[k + 1], before, c[k]);
        if (chordal_distance(next, verts[k + 1]) <= kDegenTol ||
            chordal_distance(next, verts[k]) <= kDegenTol)
            throw DegenerateReconstruction("reconstruct: solved vertex hits a forbidden neighbour");
        verts[k + 2] = next;
    }

    Mobius mono = monodromy_product(c);
    if (expected != nullptr && proj_matrix_distance(mono, *expected) > 1e-6)
        throw DegenerateReconstruction("reconstruct: monodromy does not match the expected one");

    try {
        return {std::move(verts), mono};
    } catch (const DegenerateWindow&) {
        throw DegenerateReconstruction("reconstruct: degenerate window");
    }
}

bool is_closed(const TwistedPolygon& P, double tol) { return P.closed(tol); }

} // namespace polydyn
