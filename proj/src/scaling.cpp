#include "polydyn/scaling.hpp"

namespace polydyn {

namespace {

constexpr double kPoleTol = 1e-12;

void require_closed(const TwistedPolygon& P, const char* what) {
    if (!P.closed(1e-6))
        throw Error(std::string(what) + ": polygon must be closed");
}

} // namespace

SystemSpec SystemSpec::staircase(cplx eta) {
    if (eta == 0.0)
        throw Error("SystemSpec: staircase eta must be nonzero");
    return {Kind::Staircase, eta};
}

SystemSpec SystemSpec::parse(const std::string& name, cplx eta) {
    if (name == "staircase")
        return staircase(eta);
    if (name == "flat")
        return flat();
    if (name == "leapfrog")
        return leapfrog();
    throw Error("SystemSpec: unknown system '" + name + "'");
}

std::string SystemSpec::name() const {
    switch (kind) {
    case Kind::Staircase:
        return "staircase";
    case Kind::Flat:
        return "flat";
    case Kind::Leapfrog:
        return "leapfrog";
    }
    return "?";
}

ScaledCoordinates scale_staircase(const std::vector<cplx>& c, const std::vector<cplx>& mu,
                                  cplx eta, cplx t) {
    if (c.size() != mu.size())
        throw Error("scale_staircase: c and mu must have equal length");
    ScaledCoordinates out;
    out.t = t;
    out.c.resize(c.size());
    out.curvature.resize(mu.size());
    for (size_t i = 0; i < c.size(); ++i) {
        cplx pole = 1.0 - 1.0 / (eta * mu[i]);
        if (std::abs(t - pole) <= kPoleTol)
            throw ExcludedParameter("scale_staircase: t hits 1 - 1/(eta mu_i)");
        cplx denom = 1.0 + (t - 1.0) * eta * mu[i];
        out.curvature[i] = t * mu[i] / denom;
        out.c[i] = c[i] * denom;
    }
    return out;
}

ScaledCoordinates scale_flat(const std::vector<cplx>& c, const std::vector<cplx>& alpha, cplx t) {
    if (c.size() != alpha.size() || alpha.empty())
        throw Error("scale_flat: c and alpha must have equal nonzero length");
    ScaledCoordinates out;
    out.t = t;
    out.c.resize(c.size());
    out.curvature.resize(alpha.size());
    cplx a1 = alpha[0];
    if (std::abs(t - 1.0 / a1) <= kPoleTol)
        throw ExcludedParameter("scale_flat: t hits 1/alpha_1");
    for (size_t i = 0; i < c.size(); ++i) {
        cplx kappa = (1.0 - alpha[i]) / (1.0 - a1);
        if (std::abs(t - (kappa - 1.0) / (kappa * a1)) <= kPoleTol)
            throw ExcludedParameter("scale_flat: t hits (kappa_i - 1)/(kappa_i alpha_1)");
        cplx at = 1.0 + kappa * (t * a1 - 1.0);
        out.curvature[i] = at;
        out.c[i] = c[i] * at / alpha[i];
    }
    return out;
}

ScaledCoordinates scale_leapfrog(const std::vector<cplx>& o_minus, const std::vector<cplx>& o,
                                 cplx t) {
    if (o_minus.size() != o.size())
        throw Error("scale_leapfrog: coordinate lists must have equal length");
    if (std::abs(t) <= kPoleTol)
        throw ExcludedParameter("scale_leapfrog: t must be nonzero");
    ScaledCoordinates out;
    out.t = t;
    out.c.resize(2 * o.size());
    for (size_t i = 0; i < o.size(); ++i) {
        out.c[2 * i] = t * o_minus[i];
        out.c[2 * i + 1] = o[i];
    }
    return out;
}

std::vector<cplx> log_derivative(const StaircaseState& s, cplx eta) {
    std::vector<cplx> ld(s.mu.size());
    for (size_t i = 0; i < s.mu.size(); ++i)
        ld[i] = eta * s.mu[i];
    return ld;
}

std::vector<cplx> log_derivative(const FlatState& s) {
    cplx a1 = s.alpha[0];
    std::vector<cplx> ld(s.alpha.size());
    for (size_t i = 0; i < s.alpha.size(); ++i)
        ld[i] = (1.0 - s.alpha[i]) * a1 / ((1.0 - a1) * s.alpha[i]);
    return ld;
}

std::vector<cplx> log_derivative(const LeapfrogState& s) {
    std::vector<cplx> ld(2 * s.n());
    for (int i = 0; i < s.n(); ++i) {
        ld[2 * i] = 1.0;
        ld[2 * i + 1] = 0.0;
    }
    return ld;
}

TwistedPolygon deform_family(const StaircaseState& s, cplx eta, cplx z) {
    require_closed(s.polygon, "deform_family");
    ScaledCoordinates sc = scale_staircase(coords(s.polygon), s.mu, eta, z);
    return reconstruct(sc.c);
}

TwistedPolygon deform_family(const FlatState& s, cplx z) {
    require_closed(s.polygon, "deform_family");
    ScaledCoordinates sc = scale_flat(coords(s.polygon), s.alpha, z);
    return reconstruct(sc.c);
}

TwistedPolygon deform_family(const LeapfrogState& s, cplx z) {
    TwistedPolygon il = s.interleaved();
    require_closed(il, "deform_family");
    CrossRatioCoords c = coords(il);
    std::vector<cplx> om(s.n()), o(s.n());
    for (int i = 0; i < s.n(); ++i) {
        om[i] = c[2 * i];
        o[i] = c[2 * i + 1];
    }
    ScaledCoordinates sc = scale_leapfrog(om, o, z);
    return reconstruct(sc.c);
}

} // namespace polydyn
