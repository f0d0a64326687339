#pragma once

// Experiment engine: seeded random states, collapse simulations against the
// predicted candidates, special staircase configurations, group-relation
// suites, conjecture scans and CSV traces.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <variant>

#include "polydyn/invariants.hpp"

namespace polydyn {

using AnyState = std::variant<StaircaseState, FlatState, LeapfrogState>;

/// Seeded random generation of experiment inputs.  Vertices are sampled
/// i.i.d. uniform on a disk and degenerate windows are rejected; curvature
/// entries are uniform on the annulus 0.5 <= |z| <= 2 with a rejection
/// neighbourhood around 1 when required.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double unit();
    cplx disk(double radius = 2.0);
    cplx annulus(double rmin = 0.5, double rmax = 2.0, bool avoid_one = false);
    Mobius mobius();
    std::vector<cplx> tangent(int n); // i.i.d. disk(1) perturbations

    TwistedPolygon closed_polygon(int n);
    std::vector<cplx> curvature(int n, bool avoid_one);
    StaircaseState staircase_state(int n);
    FlatState flat_state(int n);
    LeapfrogState leapfrog_state(int n);
    AnyState state(const SystemSpec& spec, int n);

  private:
    std::mt19937_64 rng_;
};

struct ExperimentConfig {
    SystemSpec system;
    int n = 5;
    std::uint64_t seed = 1;
    int iterations = 200;
    bool backward = false;
    double collapse_tol = 1e-4; // final distance for a collapsed verdict
    double drift_tol = 1e-6;    // invariant drift beyond this flags the trial invalid
    FlipWord word;              // staircase only; empty means sweep

    std::optional<AnyState> start; // explicit start; otherwise sampled from seed
};

enum class Verdict { Collapsed, Periodic, Recurrent, Diverged, Inconclusive };

std::string verdict_name(Verdict v);

struct IterationRecord {
    int iteration = 0;
    std::vector<ProjPoint> points;    // all live points at this iteration
    std::vector<double> distance;     // per candidate, max over points
    cplx I{}, J{}, K{}, Delta{};
    std::vector<cplx> G;              // G_k for k <= min(3, n/2), when computable
    bool invariants_valid = false;
};

struct CollapseReport {
    SystemSpec system;
    CollapsePrediction prediction;
    std::vector<IterationRecord> trace; // trace[0] is the initial state
    Verdict verdict = Verdict::Inconclusive;
    int collapsed_candidate = -1;
    double final_distance = -1.0;
    double max_invariant_drift = 0.0;
    bool invalid = false; // invariant drift exceeded drift_tol
    std::string note;
};

/// Iterate the configured dynamic from a closed start, recording distances
/// to the predicted candidates and invariant drift.  The collapsed verdict
/// requires final distance <= collapse_tol and a non-increasing tail of the
/// last 10 recorded distances.
CollapseReport run_collapse(const ExperimentConfig& config);

/// CSV trace, one row per (iteration, point); columns
/// iteration,vertex_index,re,im,dist_candidate_0,dist_candidate_1,
/// I_re,I_im,J_re,J_im,K_re,K_im.  Infinite vertices print "inf" for re,im.
void write_csv_trace(const CollapseReport& report, std::ostream& out);

// --- special staircase configurations ---

enum class SpecialKind { Parabolic, Geometric, FromLambda };

struct SpecialRequest {
    SpecialKind kind = SpecialKind::Parabolic;
    cplx q{2.0};      // Geometric
    cplx lambda{0.0}; // FromLambda
};

struct SpecialReport {
    std::optional<StaircaseState> state; // configuration with the working placement
    int n = 0;
    cplx q{1.0};
    cplx lambda{0.0};
    int placement = -1;        // index of the edge carrying lambda
    double worst_error = -1.0; // sweep image error (affine / relative)
    Mobius realized;           // Möbius realizing the sweep on the window
    MobiusClass realized_class;
    MobiusClass expected_class;
    std::string orbit_type;            // loxodromic | periodic | recurrent | parabolic
    std::vector<cplx> qn_roots;        // FromLambda: all roots of Q_n
    double palindrome_error = -1.0;    // FromLambda: worst (q, 1/q) pairing error
    double qn_residual = -1.0;         // |Q_n(q, lambda)| at the chosen q
};

/// Build and verify a special configuration; one sweep must reproduce the
/// shifted window for some cyclic placement of lambda, else
/// NoCyclicPlacement is thrown.
SpecialReport special_staircase(int n, const SpecialRequest& req);

/// Coefficients of Q_n(q, lambda) = (sum_{k<n-1} q^k)^2 - lambda q^{n-2},
/// index = power of q.
std::vector<cplx> qn_polynomial(int n, cplx lambda);

/// All complex roots, Durand-Kerner iteration; fine at desk-scale degrees.
std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs);

// --- aggregate runs ---

struct ScanSummary {
    int trials = 0;
    int degenerate = 0; // aborted by degeneracy errors
    int invalid = 0;    // invariant drift blow-up
    int collapsed = 0;
    std::vector<int> candidate_counts;
    double fraction_collapsed = 0.0; // of non-degenerate, non-invalid trials
    double max_invariant_drift = 0.0;
    double worst_final_distance = 0.0; // among collapsed trials
    bool warning = false;              // fraction below 0.9
    std::vector<CollapseReport> reports;
};

/// Run `trials` seeded collapse experiments (seed, seed+1, ...) and
/// aggregate.  Emits data; never asserts the conjecture.  Trials are
/// independent; with workers > 1 they run concurrently and the aggregate is
/// identical to the sequential one (reports are keyed by trial index).
ScanSummary scan_conjecture(const ExperimentConfig& base, int trials, int workers = 1);

struct RelationsReport {
    int n = 0;
    int trials = 0;
    double worst_involution = 0.0;  // vertexwise chordal + curvature deviation
    double worst_commutation = 0.0; // cyclic distance >= 2 (needs n >= 4)
    double worst_braid = 0.0;
    bool pass = false; // all three below 1e-9
};

/// Property-run of the flip group relations on random states.
RelationsReport relations_suite(int n, int trials, std::uint64_t seed);

/// Max of vertexwise chordal distance and curvature difference.
double state_deviation(const StaircaseState& a, const StaircaseState& b);

} // namespace polydyn
