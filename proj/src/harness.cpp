#include "polydyn/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>

namespace polydyn {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kSeparationGuard = 1e-3; // sampler-level window separation
// Invariant evaluation degrades like eps/sep^2 once edges coalesce; below
// this separation the values are dominated by rounding noise, so recording
// stops rather than polluting the drift series.
constexpr double kInvariantGuard = 3e-3;
constexpr double kPeriodicTol = 1e-6;

std::vector<ProjPoint> live_points(const AnyState& st) {
    return std::visit(
        overloaded{[](const StaircaseState& s) { return s.polygon.window(); },
                   [](const FlatState& s) { return s.polygon.window(); },
                   [](const LeapfrogState& s) {
                       std::vector<ProjPoint> v = s.s_minus;
                       v.insert(v.end(), s.s.begin(), s.s.end());
                       return v;
                   }},
        st);
}

TwistedPolygon underlying_polygon(const AnyState& st) {
    return std::visit(overloaded{[](const StaircaseState& s) { return s.polygon; },
                                 [](const FlatState& s) { return s.polygon; },
                                 [](const LeapfrogState& s) { return s.interleaved(); }},
                      st);
}

std::vector<cplx> logderiv_of(const AnyState& st, const SystemSpec& spec) {
    return std::visit(
        overloaded{[&](const StaircaseState& s) { return log_derivative(s, spec.eta); },
                   [](const FlatState& s) { return log_derivative(s); },
                   [](const LeapfrogState& s) { return log_derivative(s); }},
        st);
}

bool window_all_finite(const TwistedPolygon& P) {
    for (const auto& p : P.window())
        if (std::abs(p.h1()) < 1e-6)
            return false;
    return true;
}

double points_deviation(const std::vector<ProjPoint>& a, const std::vector<ProjPoint>& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, chordal_distance(a[i], b[i]));
    return worst;
}

} // namespace

// --- Sampler ---

double Sampler::unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

cplx Sampler::disk(double radius) {
    double r = radius * std::sqrt(unit());
    double th = 2.0 * kPi * unit();
    return std::polar(r, th);
}

cplx Sampler::annulus(double rmin, double rmax, bool avoid_one) {
    for (;;) {
        double r = std::sqrt(rmin * rmin + (rmax * rmax - rmin * rmin) * unit());
        cplx z = std::polar(r, 2.0 * kPi * unit());
        if (avoid_one && std::abs(z - 1.0) < 0.05)
            continue;
        return z;
    }
}

Mobius Sampler::mobius() {
    for (;;) {
        Mobius m{disk(1.0), disk(1.0), disk(1.0), disk(1.0)};
        if (std::abs(m.det()) >= 0.1)
            return m.normalized();
    }
}

std::vector<cplx> Sampler::tangent(int n) {
    std::vector<cplx> d(n);
    for (auto& v : d)
        v = disk(1.0);
    return d;
}

TwistedPolygon Sampler::closed_polygon(int n) {
    for (;;) {
        std::vector<ProjPoint> w(n);
        for (auto& p : w)
            p = ProjPoint(disk(2.0));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            ok = chordal_distance(w[i], w[(i + 1) % n]) > kSeparationGuard &&
                 chordal_distance(w[i], w[(i + 2) % n]) > kSeparationGuard;
        }
        if (!ok)
            continue;
        return {std::move(w), Mobius::identity()};
    }
}

std::vector<cplx> Sampler::curvature(int n, bool avoid_one) {
    std::vector<cplx> k(n);
    for (auto& v : k)
        v = annulus(0.5, 2.0, avoid_one);
    return k;
}

StaircaseState Sampler::staircase_state(int n) { return {closed_polygon(n), curvature(n, false)}; }

FlatState Sampler::flat_state(int n) { return {closed_polygon(n), curvature(n, true)}; }

LeapfrogState Sampler::leapfrog_state(int n) {
    for (;;) {
        std::vector<ProjPoint> w(2 * n);
        for (auto& p : w)
            p = ProjPoint(disk(2.0));
        bool ok = true;
        for (int i = 0; i < 2 * n && ok; ++i) {
            ok = chordal_distance(w[i], w[(i + 1) % (2 * n)]) > kSeparationGuard &&
                 chordal_distance(w[i], w[(i + 2) % (2 * n)]) > kSeparationGuard;
        }
        if (!ok)
            continue;
        std::vector<ProjPoint> sm(n), s(n);
        for (int i = 0; i < n; ++i) {
            sm[i] = w[2 * i];
            s[i] = w[2 * i + 1];
        }
        return {std::move(sm), std::move(s), Mobius::identity()};
    }
}

AnyState Sampler::state(const SystemSpec& spec, int n) {
    switch (spec.kind) {
    case SystemSpec::Kind::Staircase:
        return staircase_state(n);
    case SystemSpec::Kind::Flat:
        return flat_state(n);
    case SystemSpec::Kind::Leapfrog:
        return leapfrog_state(n);
    }
    throw Error("Sampler::state: unknown system");
}

// --- collapse runs ---

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Collapsed:
        return "collapsed-to-candidate";
    case Verdict::Periodic:
        return "periodic";
    case Verdict::Recurrent:
        return "recurrent";
    case Verdict::Diverged:
        return "diverged-from-candidates";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

namespace {

void measure_invariants(const AnyState& st, const SystemSpec& spec, const Mobius& chart_move,
                        IterationRecord& rec) {
    rec.invariants_valid = false;
    try {
        TwistedPolygon P = underlying_polygon(st);
        std::vector<cplx> ld = logderiv_of(st, spec);
        double minsep = 2.0;
        for (int i = 0; i < P.n(); ++i)
            minsep = std::min(minsep, chordal_distance(P.vertex(i), P.vertex(i + 1)));
        if (minsep < kInvariantGuard)
            return;
        InfinitesimalMonodromy im = infinitesimal_monodromy(P, ld);
        rec.I = im.I;
        rec.J = im.J;
        rec.K = im.K;
        rec.Delta = im.Delta;
        rec.invariants_valid = true;

        // G_k wants finite vertices; a fixed chart move keeps the values
        // comparable since G_k is projectively invariant.
        TwistedPolygon Q = P;
        if (!window_all_finite(Q))
            Q = P.transformed(chart_move);
        if (window_all_finite(Q)) {
            int kmax = std::min(3, P.n() / 2);
            for (int k = 1; k <= kmax; ++k)
                rec.G.push_back(g_invariant(Q, ld, k));
        }
    } catch (const Error&) {
        rec.invariants_valid = false;
    }
}

double drift_between(const IterationRecord& base, const IterationRecord& rec) {
    auto rel = [](cplx now, cplx ref) {
        return std::abs(now - ref) / std::max(1.0, std::abs(ref));
    };
    double d = std::max({rel(rec.I, base.I), rel(rec.J, base.J), rel(rec.K, base.K),
                         rel(rec.Delta, base.Delta)});
    if (rec.G.size() == base.G.size())
        for (size_t k = 0; k < rec.G.size(); ++k)
            d = std::max(d, rel(rec.G[k], base.G[k]));
    return d;
}

class Stepper {
  public:
    Stepper(const ExperimentConfig& cfg, int n) : backward_(cfg.backward) {
        word_ = cfg.word.letters.empty() ? FlipWord::sweep(n) : cfg.word;
        if (backward_)
            std::reverse(word_.letters.begin(), word_.letters.end());
    }

    AnyState advance(const AnyState& st, const std::vector<ProjPoint>& prev_pts, bool first) {
        return std::visit(
            overloaded{
                [&](const StaircaseState& s) -> AnyState { return apply_word(s, word_); },
                [&](const FlatState& s) -> AnyState {
                    auto [plus, minus] = flat_step(s);
                    if (first)
                        return backward_ ? AnyState(minus) : AnyState(plus);
                    // continue away from where we came from
                    double dp = points_deviation(plus.polygon.window(), prev_pts);
                    double dm = points_deviation(minus.polygon.window(), prev_pts);
                    return dp >= dm ? AnyState(plus) : AnyState(minus);
                },
                [&](const LeapfrogState& s) -> AnyState {
                    return backward_ ? AnyState(leapfrog_step_backward(s))
                                     : AnyState(leapfrog_step(s));
                }},
            st);
    }

  private:
    FlipWord word_;
    bool backward_;
};

// Non-increasing up to the measurement resolution: deep below the collapse
// tolerance the distance jitters at the accuracy floor of the predicted
// candidate itself, so increases below 1% of the tolerance do not count.
bool tail_non_increasing(const std::vector<IterationRecord>& trace, int candidate, int len,
                         double collapse_tol) {
    if (static_cast<int>(trace.size()) < len)
        return false;
    for (size_t i = trace.size() - len; i + 1 < trace.size(); ++i) {
        double a = trace[i].distance[candidate];
        double b = trace[i + 1].distance[candidate];
        if (b > a + 0.01 * collapse_tol)
            return false;
    }
    return true;
}

} // namespace

CollapseReport run_collapse(const ExperimentConfig& config) {
    Sampler sampler(config.seed);
    AnyState st = config.start ? *config.start : sampler.state(config.system, config.n);
    Mobius chart_move = sampler.mobius();

    CollapseReport rep;
    rep.system = config.system;
    rep.prediction = std::visit(
        overloaded{[&](const StaircaseState& s) { return predict_collapse(s, config.system.eta); },
                   [](const FlatState& s) { return predict_collapse(s); },
                   [](const LeapfrogState& s) { return predict_collapse(s); }},
        st);
    const auto& roots = rep.prediction.candidates.roots;

    auto record = [&](int iter, const AnyState& s) -> IterationRecord& {
        IterationRecord rec;
        rec.iteration = iter;
        rec.points = live_points(s);
        rec.distance.resize(roots.size());
        for (size_t j = 0; j < roots.size(); ++j) {
            double worst = 0.0;
            for (const auto& p : rec.points)
                worst = std::max(worst, chordal_distance(p, roots[j]));
            rec.distance[j] = worst;
        }
        measure_invariants(s, config.system, chart_move, rec);
        rep.trace.push_back(std::move(rec));
        return rep.trace.back();
    };

    record(0, st);
    const std::vector<ProjPoint> initial_pts = rep.trace.front().points;
    std::vector<ProjPoint> prev_pts = initial_pts;

    Stepper stepper(config, underlying_polygon(st).n());
    bool recurrent_left = false, recurrent_back = false;

    for (int it = 1; it <= config.iterations; ++it) {
        AnyState next = st;
        try {
            next = stepper.advance(st, prev_pts, it == 1);
        } catch (const Error& e) {
            rep.note = std::string("aborted at iteration ") + std::to_string(it) + ": " + e.what();
            break;
        }
        prev_pts = live_points(st);
        st = std::move(next);
        IterationRecord& rec = record(it, st);

        if (rec.invariants_valid && rep.trace.front().invariants_valid) {
            double d = drift_between(rep.trace.front(), rec);
            rep.max_invariant_drift = std::max(rep.max_invariant_drift, d);
            if (d > config.drift_tol) {
                rep.invalid = true;
                rep.note = "invariant drift exceeded tolerance at iteration " + std::to_string(it);
                break;
            }
        }

        for (size_t j = 0; j < roots.size(); ++j) {
            if (rec.distance[j] <= config.collapse_tol &&
                tail_non_increasing(rep.trace, static_cast<int>(j), 10, config.collapse_tol)) {
                rep.verdict = Verdict::Collapsed;
                rep.collapsed_candidate = static_cast<int>(j);
                rep.final_distance = rec.distance[j];
                return rep;
            }
        }

        double from_start = points_deviation(rec.points, initial_pts);
        if (from_start <= kPeriodicTol) {
            rep.verdict = Verdict::Periodic;
            rep.final_distance = *std::min_element(rec.distance.begin(), rec.distance.end());
            return rep;
        }
        if (from_start > 0.3)
            recurrent_left = true;
        else if (recurrent_left && from_start < 1e-2)
            recurrent_back = true;
    }

    const IterationRecord& last = rep.trace.back();
    rep.final_distance = *std::min_element(last.distance.begin(), last.distance.end());
    if (recurrent_back)
        rep.verdict = Verdict::Recurrent;
    else if (rep.final_distance > 0.5)
        rep.verdict = Verdict::Diverged;
    else
        rep.verdict = Verdict::Inconclusive;
    return rep;
}

void write_csv_trace(const CollapseReport& report, std::ostream& out) {
    out << "iteration,vertex_index,re,im,dist_candidate_0,dist_candidate_1,"
           "I_re,I_im,J_re,J_im,K_re,K_im\n";
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    size_t ncand = report.prediction.candidates.roots.size();
    for (const auto& rec : report.trace) {
        for (size_t vi = 0; vi < rec.points.size(); ++vi) {
            const ProjPoint& p = rec.points[vi];
            out << rec.iteration << ',' << vi << ',';
            if (p.is_infinite())
                out << "inf,inf,";
            else
                out << num(std::real(p.affine())) << ',' << num(std::imag(p.affine())) << ',';
            // distances are per-candidate maxima over all points
            double d0 = 0.0;
            if (!rec.distance.empty())
                d0 = chordal_distance(p, report.prediction.candidates.roots[0]);
            out << num(d0) << ',';
            if (ncand > 1)
                out << num(chordal_distance(p, report.prediction.candidates.roots[1]));
            out << ',';
            if (rec.invariants_valid) {
                out << num(std::real(rec.I)) << ',' << num(std::imag(rec.I)) << ','
                    << num(std::real(rec.J)) << ',' << num(std::imag(rec.J)) << ','
                    << num(std::real(rec.K)) << ',' << num(std::imag(rec.K));
            } else {
                out << ",,,,,";
            }
            out << '\n';
        }
    }
}

// --- special configurations ---

std::vector<cplx> qn_polynomial(int n, cplx lambda) {
    if (n < 3)
        throw Error("qn_polynomial: need n >= 3");
    int deg = 2 * n - 4;
    std::vector<cplx> coef(deg + 1);
    for (int m = 0; m <= deg; ++m)
        coef[m] = static_cast<double>(std::min(m, deg - m) + 1);
    coef[n - 2] -= lambda;
    return coef;
}

std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-300)
        coeffs.pop_back();
    int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1)
        throw ZeroPolynomial("polynomial_roots: degree must be at least 1");
    cplx lead = coeffs.back();
    for (auto& c : coeffs)
        c /= lead;
    auto eval = [&](cplx z) {
        cplx v = 0.0;
        for (int k = deg; k >= 0; --k)
            v = v * z + coeffs[k];
        return v;
    };
    // Durand-Kerner from a non-real geometric start
    std::vector<cplx> w(deg);
    cplx seed(0.4, 0.9), acc = 1.0;
    for (int k = 0; k < deg; ++k) {
        acc *= seed;
        w[k] = acc;
    }
    for (int iter = 0; iter < 2000; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < deg; ++i) {
            cplx den = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i)
                    den *= w[i] - w[j];
            cplx delta = eval(w[i]) / den;
            w[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14)
            break;
    }
    return w;
}

SpecialReport special_staircase(int n, const SpecialRequest& req) {
    if (n < 3)
        throw Error("special_staircase: need n >= 3");
    SpecialReport rep;
    rep.n = n;

    bool parabolic = false;
    cplx q = 1.0, lambda = 0.0;
    switch (req.kind) {
    case SpecialKind::Parabolic:
        parabolic = true;
        lambda = static_cast<double>((n - 1) * (n - 1));
        break;
    case SpecialKind::Geometric: {
        q = req.q;
        if (std::abs(q) <= kDegenTol || std::abs(q - 1.0) <= kDegenTol)
            throw Error("special_staircase: geometric ratio must avoid 0 and 1");
        cplx qn1 = std::pow(q, n - 1), qn = qn1 * q;
        lambda = (1.0 - qn1) * (qn - q) / ((qn1 - qn) * (q - 1.0));
        break;
    }
    case SpecialKind::FromLambda: {
        lambda = req.lambda;
        if (lambda == 0.0)
            throw Error("special_staircase: lambda must be nonzero");
        rep.qn_roots = polynomial_roots(qn_polynomial(n, lambda));
        rep.palindrome_error = 0.0;
        for (cplx r : rep.qn_roots) {
            cplx inv = 1.0 / r;
            double best = 1e300;
            for (cplx s : rep.qn_roots)
                best = std::min(best, std::abs(s - inv) / std::max(1.0, std::abs(inv)));
            rep.palindrome_error = std::max(rep.palindrome_error, best);
        }
        q = rep.qn_roots.front();
        for (cplx r : rep.qn_roots)
            if (std::abs(r) > std::abs(q))
                q = r;
        // root finding resolves a double root at 1 only to ~sqrt(eps), and a
        // ratio that close to 1 is indistinguishable from the parabolic case
        if (std::abs(q - 1.0) <= 1e-5) {
            parabolic = true;
            q = 1.0;
        }
        break;
    }
    }
    rep.q = q;
    rep.lambda = lambda;

    {
        auto coef = qn_polynomial(n, lambda);
        cplx v = 0.0;
        for (int k = static_cast<int>(coef.size()) - 1; k >= 0; --k)
            v = v * q + coef[k];
        rep.qn_residual = std::abs(v);
    }

    std::vector<ProjPoint> verts(n);
    std::vector<cplx> expected(n);
    for (int k = 0; k < n; ++k) {
        if (parabolic) {
            verts[k] = ProjPoint(cplx(static_cast<double>(k)));
            expected[k] = static_cast<double>(k + n);
        } else {
            verts[k] = ProjPoint(std::pow(q, k));
            expected[k] = std::pow(q, k + n);
        }
    }

    FlipWord sweep = FlipWord::sweep(n);
    double best_err = 1e300;
    int best_pos = -1;
    std::optional<StaircaseState> best_state;
    std::optional<StaircaseState> best_out;
    for (int pos = 0; pos < n; ++pos) {
        std::vector<cplx> mu(n, 1.0);
        mu[pos] = lambda;
        try {
            StaircaseState st(TwistedPolygon(verts, Mobius::identity()), mu);
            StaircaseState out = apply_word(st, sweep);
            double err = 0.0;
            for (int k = 0; k < n; ++k) {
                const ProjPoint& v = out.polygon.window()[k];
                if (v.is_infinite(1e-12)) {
                    err = 1e300;
                    break;
                }
                double scale = parabolic ? 1.0 : std::abs(expected[k]);
                err = std::max(err, std::abs(v.affine() - expected[k]) / scale);
            }
            if (err < best_err) {
                best_err = err;
                best_pos = pos;
                best_state = st;
                best_out = out;
            }
        } catch (const Error&) {
            continue;
        }
    }

    if (!best_state || best_err > 1e-9)
        throw NoCyclicPlacement("special_staircase: no lambda placement reproduces the image"
                                " (best error " +
                                std::to_string(best_err) + ")");

    rep.state = best_state;
    rep.placement = best_pos;
    rep.worst_error = best_err;
    rep.realized = mobius_from_triples({best_state->polygon.window()[0],
                                        best_state->polygon.window()[1],
                                        best_state->polygon.window()[2]},
                                       {best_out->polygon.window()[0],
                                        best_out->polygon.window()[1],
                                        best_out->polygon.window()[2]});
    rep.realized_class = classify(rep.realized);
    rep.expected_class = classify(parabolic ? Mobius::translation(static_cast<double>(n))
                                            : Mobius::scaling(std::pow(q, n)));

    if (parabolic) {
        rep.orbit_type = "parabolic";
    } else if (std::abs(std::abs(q) - 1.0) > 1e-9) {
        rep.orbit_type = "loxodromic";
    } else {
        bool unity = false;
        cplx p = 1.0;
        for (int m = 1; m <= 4096 && !unity; ++m) {
            p *= q;
            unity = std::abs(p - 1.0) <= 1e-9;
        }
        rep.orbit_type = unity ? "periodic" : "recurrent";
    }
    return rep;
}

// --- aggregate runs ---

ScanSummary scan_conjecture(const ExperimentConfig& base, int trials, int workers) {
    // each trial is self-contained, so they can run on any number of workers;
    // aggregation happens afterwards in trial order
    std::vector<std::optional<CollapseReport>> slots(trials);
    auto run_one = [&](int t) -> std::optional<CollapseReport> {
        ExperimentConfig cfg = base;
        cfg.seed = base.seed + static_cast<std::uint64_t>(t);
        try {
            return run_collapse(cfg);
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    if (workers <= 1) {
        for (int t = 0; t < trials; ++t)
            slots[t] = run_one(t);
    } else {
        std::vector<std::future<std::optional<CollapseReport>>> futures;
        futures.reserve(trials);
        for (int t = 0; t < trials; ++t)
            futures.push_back(std::async(std::launch::async, run_one, t));
        for (int t = 0; t < trials; ++t)
            slots[t] = futures[t].get();
    }

    ScanSummary sum;
    sum.trials = trials;
    sum.candidate_counts.assign(2, 0);
    for (int t = 0; t < trials; ++t) {
        if (!slots[t]) {
            ++sum.degenerate;
            continue;
        }
        CollapseReport rep = std::move(*slots[t]);
        sum.max_invariant_drift = std::max(sum.max_invariant_drift, rep.max_invariant_drift);
        if (rep.invalid) {
            ++sum.invalid;
            sum.reports.push_back(std::move(rep));
            continue;
        }
        if (rep.verdict == Verdict::Collapsed) {
            ++sum.collapsed;
            if (rep.collapsed_candidate >= 0 &&
                rep.collapsed_candidate < static_cast<int>(sum.candidate_counts.size()))
                ++sum.candidate_counts[rep.collapsed_candidate];
            sum.worst_final_distance = std::max(sum.worst_final_distance, rep.final_distance);
        }
        sum.reports.push_back(std::move(rep));
    }
    int effective = trials - sum.degenerate - sum.invalid;
    sum.fraction_collapsed = effective > 0 ? static_cast<double>(sum.collapsed) / effective : 0.0;
    sum.warning = sum.fraction_collapsed < 0.9;
    return sum;
}

double state_deviation(const StaircaseState& a, const StaircaseState& b) {
    double worst = 0.0;
    for (int i = 0; i < a.polygon.n(); ++i)
        worst = std::max(worst, chordal_distance(a.polygon.window()[i], b.polygon.window()[i]));
    for (size_t i = 0; i < a.mu.size(); ++i)
        worst = std::max(worst, std::abs(a.mu[i] - b.mu[i]));
    return worst;
}

RelationsReport relations_suite(int n, int trials, std::uint64_t seed) {
    RelationsReport rep;
    rep.n = n;
    rep.trials = trials;
    Sampler smp(seed);
    for (int t = 0; t < trials; ++t) {
        StaircaseState st = smp.staircase_state(n);
        int i = 1 + static_cast<int>(smp.unit() * n) % n;

        FlipWord twice;
        twice.letters = {i, i};
        rep.worst_involution = std::max(rep.worst_involution, state_deviation(apply_word(st, twice), st));

        FlipWord lhs, rhs;
        lhs.letters = {i, i + 1, i};
        rhs.letters = {i + 1, i, i + 1};
        rep.worst_braid =
            std::max(rep.worst_braid, state_deviation(apply_word(st, lhs), apply_word(st, rhs)));

        if (n >= 4) {
            int offset = 2 + static_cast<int>(smp.unit() * (n - 3)) % (n - 3);
            int j = i + offset;
            FlipWord ij, ji;
            ij.letters = {i, j};
            ji.letters = {j, i};
            rep.worst_commutation = std::max(rep.worst_commutation,
                                             state_deviation(apply_word(st, ij), apply_word(st, ji)));
        }
    }
    rep.pass = rep.worst_involution <= 1e-9 && rep.worst_commutation <= 1e-9 &&
               rep.worst_braid <= 1e-9;
    return rep;
}

} // namespace polydyn
