#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hlspec/graph.hpp"
#include "hlspec/random.hpp"

namespace hlspec {

// The cubic whose root in (sqrt(q-1)-1, sqrt(q)-1) is the median eigenvalue
// of the 2-lift of the order-q projective plane incidence graph:
// lambda^3 + (1-q) lambda^2 - 3q lambda + q^2 - q.
struct LiftMedianCubic {
    int q = 0;
    std::array<double, 4> coefficients{};  // leading coefficient first
    double bracket_lo = 0.0;               // sqrt(q-1) - 1; cubic value 2 there
    double bracket_hi = 0.0;               // sqrt(q) - 1; cubic value sqrt(q) - q
    double value_at_lo = 0.0;
    double value_at_hi = 0.0;
    double root = 0.0;                     // bisected to |interval| <= 1e-12
};

double lift_median_cubic_value(int q, double lambda);

// Bisects the bracket after asserting the endpoint identities to 1e-9.
LiftMedianCubic lift_median_cubic(int q);

// Margin of the sharpened median bound at probe lambda = t - 1 - 1/(h t):
// the quintic-in-t closed form and the cubic (with q = t^2) evaluated at the
// probe must agree to 1e-8 relative; disagreement throws.
struct RefinedBoundReport {
    double t = 0.0;
    double h = 0.0;
    double probe_lambda = 0.0;
    double margin_value = 0.0;  // closed form, scaled by (h t)^-3
    double cubic_value = 0.0;   // independent evaluation path
    int sign = 0;               // sign of margin_value
};

RefinedBoundReport refined_margin(double t, double h);

// Full 2-lift experiment over the order-q projective plane incidence graph:
// single charged edge into the first line vertex, median of the 2-lift
// bracketed by (sqrt(q-1)-1, sqrt(q)-1), matched against the cubic root,
// certified by an explicit eigenvector, and the lift median series checked
// for even-lift stability and odd-lift monotonicity up to t_max.
struct ProjectiveLiftReport {
    int q = 0;
    int k = 0;          // q + 1
    int lift_order = 0; // 4 (q^2 + q + 1)
    LiftMedianCubic cubic;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    double r_2lift = 0.0;
    double eigvec_a = 0.0;
    double eigvec_b = 0.0;
    double eigenvector_residual = 0.0;
    double near_median_eigenvalue = 0.0;  // position lift_order/2 - 1, descending; equals sqrt(q)
    std::vector<std::pair<int, double>> series;

    bool bounds_ok = false;
    bool cubic_match_ok = false;
    bool eigenvector_ok = false;
    bool even_stable_ok = false;
    bool odd_monotone_ok = false;
    bool near_median_ok = false;
};

// Throws with the violated clause named on any failed check.
ProjectiveLiftReport projective_lift_experiment(int q, int t_max);

// Randomized validation of the degree bounds over seeded random connected
// balanced bipartite graphs. Any violated verdict is a hard failure (throw).
struct BoundSweepReport {
    int n_max = 0;
    int trials = 0;
    uint64_t seed = 0;
    int mainres_bound_holds = 0;
    int mainres_extremal = 0;
    int mainres_skipped_low_degree = 0;
    int deltamed_strict_holds = 0;
    int deltamed_equality_case = 0;  // K2-exception graphs; the generator cannot produce one
    int violations = 0;
};

BoundSweepReport run_bound_sweep(int n_max, int trials, uint64_t seed);

// One sweep trial's graph: balanced parts of half vertices each, every cross
// edge present independently with probability edge_prob, resampled until
// connected.
Graph random_connected_balanced_bipartite(Rng& rng, int half, double edge_prob);

}  // namespace hlspec
