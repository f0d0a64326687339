#include <doctest.h>

#include <random>

#include "polydyn/polygon.hpp"

using namespace polydyn;

namespace {

std::mt19937_64 rng(91521);

cplx rand_cplx(double radius = 2.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double r = radius * std::sqrt(u(rng));
    return std::polar(r, 6.283185307179586 * u(rng));
}

Mobius rand_mobius() {
    for (;;) {
        Mobius m{rand_cplx(1.0), rand_cplx(1.0), rand_cplx(1.0), rand_cplx(1.0)};
        if (std::abs(m.det()) >= 0.1)
            return m.normalized();
    }
}

TwistedPolygon rand_closed(int n) {
    for (;;) {
        std::vector<ProjPoint> w(n);
        for (auto& p : w)
            p = ProjPoint(rand_cplx());
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = chordal_distance(w[i], w[(i + 1) % n]) > 1e-2 &&
                 chordal_distance(w[i], w[(i + 2) % n]) > 1e-2;
        if (!ok)
            continue;
        return {std::move(w), Mobius::identity()};
    }
}

TwistedPolygon rand_twisted(int n) {
    for (;;) {
        std::vector<ProjPoint> w(n);
        for (auto& p : w)
            p = ProjPoint(rand_cplx());
        Mobius m = rand_mobius();
        try {
            TwistedPolygon P(w, m);
            bool ok = true;
            for (int i = 0; i < n + 2 && ok; ++i)
                ok = chordal_distance(P.vertex(i), P.vertex(i + 1)) > 1e-2 &&
                     chordal_distance(P.vertex(i), P.vertex(i + 2)) > 1e-2;
            if (ok)
                return P;
        } catch (const DegenerateWindow&) {
        }
    }
}

double coords_distance(const CrossRatioCoords& a, const CrossRatioCoords& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(a[i])));
    return worst;
}

} // namespace

TEST_CASE("polygon construction rejects degenerate windows") {
    std::vector<ProjPoint> w{ProjPoint(0.0), ProjPoint(0.0), ProjPoint(1.0)};
    CHECK_THROWS_AS(TwistedPolygon(w, Mobius::identity()), DegenerateWindow);
    std::vector<ProjPoint> w2{ProjPoint(0.0), ProjPoint(1.0)};
    CHECK_THROWS_AS(TwistedPolygon(w2, Mobius::identity()), DegenerateWindow);
}

TEST_CASE("vertex indexing runs through monodromy powers") {
    std::vector<ProjPoint> w{ProjPoint(1.0), ProjPoint(2.0), ProjPoint(3.0)};
    TwistedPolygon P(w, Mobius::scaling(5.0));
    CHECK(projectively_equal(P.vertex(3), ProjPoint(5.0))); // M p_0
    CHECK(projectively_equal(P.vertex(5), ProjPoint(15.0)));
    CHECK(projectively_equal(P.vertex(-1), ProjPoint(0.6))); // M^{-1} p_2
    CHECK(projectively_equal(P.vertex(-3), ProjPoint(0.2)));
}

TEST_CASE("coords of the closed triangle are (1,1,1)") {
    TwistedPolygon tri({ProjPoint(1.0), ProjPoint::infinity(), ProjPoint(0.0)},
                       Mobius::identity());
    for (cplx c : coords(tri))
        CHECK(std::abs(c - 1.0) < 1e-12);
}

TEST_CASE("coords of the square are constant") {
    cplx i(0.0, 1.0);
    TwistedPolygon sq({ProjPoint(1.0), ProjPoint(i), ProjPoint(-1.0), ProjPoint(-i)},
                      Mobius::identity());
    CrossRatioCoords c = coords(sq);
    cplx expected = cross_ratio(ProjPoint(1.0), ProjPoint(i), ProjPoint(-i), ProjPoint(-1.0));
    CHECK(std::abs(expected - 0.5) < 1e-14); // direct evaluation
    for (cplx v : c)
        CHECK(std::abs(v - expected) < 1e-12);
}

TEST_CASE("coords are invariant under the Mobius action") {
    for (int trial = 0; trial < 50; ++trial) {
        TwistedPolygon P = rand_twisted(3 + trial % 7);
        CrossRatioCoords c = coords(P);
        CrossRatioCoords cg = coords(P.transformed(rand_mobius()));
        CHECK(coords_distance(c, cg) < 1e-10);
    }
}

TEST_CASE("normalize_chart fixes the chart and round trips") {
    for (int trial = 0; trial < 30; ++trial) {
        TwistedPolygon P = rand_twisted(4 + trial % 6);
        auto [g, Q] = normalize_chart(P);
        CHECK(projectively_equal(Q.vertex(-1), ProjPoint(1.0)));
        CHECK(Q.vertex(0).is_infinite(1e-9));
        CHECK(projectively_equal(Q.vertex(1), ProjPoint(0.0)));
        CHECK(coords_distance(coords(P), coords(Q)) < 1e-10);

        TwistedPolygon back = Q.transformed(g.inverse());
        for (int i = 0; i < P.n(); ++i)
            CHECK(chordal_distance(back.window()[i], P.window()[i]) < 1e-10);
    }

    // already normalized polygon: g is the identity
    TwistedPolygon tri({ProjPoint::infinity(), ProjPoint(0.0), ProjPoint(1.0)},
                       Mobius::identity());
    auto [g, Q] = normalize_chart(tri);
    CHECK(proj_matrix_distance(g, Mobius::identity()) < 1e-10);
}

TEST_CASE("monodromy_product frozen example (1,1,1) -> -Id") {
    Mobius m = monodromy_product({1.0, 1.0, 1.0});
    CHECK(std::abs(m.a - cplx(-1.0)) < 1e-14);
    CHECK(std::abs(m.b) < 1e-14);
    CHECK(std::abs(m.c) < 1e-14);
    CHECK(std::abs(m.d - cplx(-1.0)) < 1e-14);
}

TEST_CASE("monodromy_product of closed coords is scalar") {
    for (int trial = 0; trial < 20; ++trial) {
        TwistedPolygon P = rand_closed(4 + trial % 6);
        Mobius m = monodromy_product(coords(P));
        CHECK(proj_matrix_distance(m, Mobius::identity()) < 1e-9);
    }
}

TEST_CASE("monodromy_product matches the chart-normalized monodromy") {
    for (int trial = 0; trial < 60; ++trial) {
        TwistedPolygon P = rand_twisted(3 + trial % 10); // n up to 12
        Mobius prod = monodromy_product(coords(P));
        Mobius norm = normalize_chart(P).second.monodromy();
        CHECK(proj_matrix_distance(prod, norm) < 1e-8);
    }
}

TEST_CASE("reconstruct frozen examples") {
    TwistedPolygon tri = reconstruct({1.0, 1.0, 1.0});
    CHECK(tri.vertex(0).is_infinite(1e-9));
    CHECK(projectively_equal(tri.vertex(1), ProjPoint(0.0)));
    CHECK(projectively_equal(tri.vertex(2), ProjPoint(1.0)));
    CHECK(tri.closed());

    // first solved vertex is c_0 in the chart
    CrossRatioCoords c{cplx(2.0, 0.5), cplx(1.5, -0.25), cplx(0.8, 0.1), cplx(1.2, 0.0),
                       cplx(0.9, -0.4)};
    TwistedPolygon P = reconstruct(c);
    CHECK(std::abs(P.vertex(2).affine() - c[0]) < 1e-12);
}

TEST_CASE("reconstruct is a section of coords") {
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + trial % 7;
        CrossRatioCoords c(n);
        for (auto& v : c)
            v = rand_cplx() + cplx(2.0, 1.0);
        TwistedPolygon P = [&] {
            try {
                return reconstruct(c);
            } catch (const DegenerateReconstruction&) {
                return reconstruct(CrossRatioCoords(n, cplx(1.7, 0.3)));
            }
        }();
        CHECK(coords_distance(coords(P), c) < 1e-8);
    }
}

TEST_CASE("reconstruct of coords is projectively equivalent to the source") {
    for (int trial = 0; trial < 20; ++trial) {
        TwistedPolygon P = rand_twisted(4 + trial % 5);
        TwistedPolygon R = reconstruct(coords(P));
        Mobius g = mobius_from_triples({R.vertex(0), R.vertex(1), R.vertex(2)},
                                       {P.vertex(0), P.vertex(1), P.vertex(2)});
        for (int i = 0; i < P.n(); ++i)
            CHECK(chordal_distance(g(R.window()[i]), P.window()[i]) < 1e-8);
    }
}

TEST_CASE("reconstruct cross-checks an expected monodromy") {
    TwistedPolygon P = rand_twisted(5);
    CrossRatioCoords c = coords(P);
    Mobius good = normalize_chart(P).second.monodromy();
    CHECK_NOTHROW(reconstruct(c, &good));
    Mobius bad = Mobius::scaling(17.0);
    CHECK_THROWS_AS(reconstruct(c, &bad), DegenerateReconstruction);
}

TEST_CASE("is_closed") {
    std::vector<ProjPoint> w{ProjPoint(1.0), ProjPoint(2.0), ProjPoint(3.0)};
    CHECK(is_closed(TwistedPolygon(w, Mobius::identity() * cplx(-2.0)), 1e-8));
    CHECK_FALSE(is_closed(TwistedPolygon(w, Mobius::scaling(5.0)), 1e-8));

    TwistedPolygon P = rand_closed(6);
    CHECK(is_closed(reconstruct(coords(P)), 1e-6));
}

TEST_CASE("commuting maps share fixed points") {
    for (int trial = 0; trial < 40; ++trial) {
        Mobius m = rand_mobius();
        MobiusClass cm;
        try {
            cm = classify(m);
        } catch (const Error&) {
            continue;
        }
        if (cm.kind != MobiusKind::Loxodromic && cm.kind != MobiusKind::Elliptic)
            continue;
        // a scalar combination of powers commutes with m
        cplx a = rand_cplx() + cplx(2.0, 0.0);
        cplx b = rand_cplx() + cplx(2.0, 0.0);
        Mobius poly = (m * m) * a + m * b;
        if (std::abs(poly.det()) < 1e-6)
            continue;
        MobiusClass cp;
        try {
            cp = classify(poly);
        } catch (const Error&) {
            continue;
        }
        if (cp.fixed_points.size() != 2)
            continue;
        for (const auto& f : cm.fixed_points) {
            double best = 2.0;
            for (const auto& g : cp.fixed_points)
                best = std::min(best, chordal_distance(f, g));
            CHECK(best < 1e-7);
        }
    }
}
