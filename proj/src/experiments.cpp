#include "hlspec/experiments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hlspec/hl_index.hpp"
#include "hlspec/lifts.hpp"
#include "hlspec/parallel.hpp"
#include "hlspec/projective_plane.hpp"

namespace hlspec {

namespace {

constexpr double kStrictMargin = 1e-9;

[[noreturn]] void clause_fail(const std::string& clause, const std::string& detail) {
    throw std::runtime_error("violated: " + clause + " (" + detail + ")");
}

}  // namespace

double lift_median_cubic_value(int q, double lambda) {
    const double qd = q;
    return ((lambda + (1.0 - qd)) * lambda - 3.0 * qd) * lambda + qd * qd - qd;
}

LiftMedianCubic lift_median_cubic(int q) {
    if (q < 2) throw std::invalid_argument("plane order must be at least 2");
    LiftMedianCubic cubic;
    cubic.q = q;
    cubic.coefficients = {1.0, 1.0 - q, -3.0 * q, static_cast<double>(q) * q - q};
    cubic.bracket_lo = std::sqrt(q - 1.0) - 1.0;
    cubic.bracket_hi = std::sqrt(static_cast<double>(q)) - 1.0;
    cubic.value_at_lo = lift_median_cubic_value(q, cubic.bracket_lo);
    cubic.value_at_hi = lift_median_cubic_value(q, cubic.bracket_hi);

    if (std::fabs(cubic.value_at_lo - 2.0) > 1e-9)
        clause_fail("cubic endpoint value 2 at sqrt(q-1)-1", std::to_string(cubic.value_at_lo));
    const double expected_hi = std::sqrt(static_cast<double>(q)) - q;
    if (std::fabs(cubic.value_at_hi - expected_hi) > 1e-9)
        clause_fail("cubic endpoint value sqrt(q)-q at sqrt(q)-1", std::to_string(cubic.value_at_hi));
    if (!(cubic.value_at_lo > 0.0 && cubic.value_at_hi < 0.0))
        clause_fail("cubic bracket sign change", "values " + std::to_string(cubic.value_at_lo) + ", " +
                                                     std::to_string(cubic.value_at_hi));

    double lo = cubic.bracket_lo, hi = cubic.bracket_hi;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (lift_median_cubic_value(q, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    cubic.root = 0.5 * (lo + hi);
    return cubic;
}

RefinedBoundReport refined_margin(double t, double h) {
    if (!(t > 0.0) || !(h > 0.0)) throw std::invalid_argument("refined_margin requires t > 0 and h > 0");
    RefinedBoundReport rep;
    rep.t = t;
    rep.h = h;
    rep.probe_lambda = t - 1.0 - 1.0 / (h * t);

    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    const double h2 = h * h, h3 = h2 * h;
    const double poly = (2.0 * h2 - h3) * t5 + (h3 - 2.0 * h2) * t4 + (4.0 * h2 - h) * t3 +
                        (3.0 * h - h2) * t2 - 2.0 * h * t - 1.0;
    rep.margin_value = poly / (h3 * t3);

    const double q = t2;
    rep.cubic_value = ((rep.probe_lambda + (1.0 - q)) * rep.probe_lambda - 3.0 * q) * rep.probe_lambda +
                      q * q - q;

    const double scale = std::max({1.0, std::fabs(rep.margin_value), std::fabs(rep.cubic_value)});
    if (std::fabs(rep.margin_value - rep.cubic_value) > 1e-8 * scale)
        clause_fail("closed form equals cubic at the probe point",
                    std::to_string(rep.margin_value) + " vs " + std::to_string(rep.cubic_value));

    rep.sign = (rep.margin_value > 0.0) - (rep.margin_value < 0.0);
    return rep;
}

ProjectiveLiftReport projective_lift_experiment(int q, int t_max) {
    if (t_max < 2) throw std::invalid_argument("t_max must be at least 2");

    ProjectiveLiftReport rep;
    rep.q = q;
    rep.k = q + 1;

    const Graph g = pg2_incidence_graph(q);
    const int m = q * q + q + 1;  // one side of the bipartition
    rep.lift_order = 4 * m;

    // Charged edge: the first record incident to the first line vertex,
    // oriented into it.
    const int first_line_vertex = m;
    int e0 = -1;
    for (size_t id = 0; id < g.edges.size(); ++id) {
        if (g.edges[id].u == first_line_vertex || g.edges[id].v == first_line_vertex) {
            e0 = static_cast<int>(id);
            break;
        }
    }
    if (e0 < 0) throw std::runtime_error("first line vertex has no incident edge");
    const int v0 = first_line_vertex;
    const int v1 = g.edges[e0].u == v0 ? g.edges[e0].v : g.edges[e0].u;
    const std::vector<OrientedEdge> charged{{e0, v1, v0}};

    rep.cubic = lift_median_cubic(q);
    rep.lower_bound = rep.cubic.bracket_lo;
    rep.upper_bound = rep.cubic.bracket_hi;

    const CyclicVoltageGraph two_lift = make_cyclic_voltage(g, charged, 2);
    const Spectrum two_lift_spectrum = lift_spectrum_factored(two_lift);
    rep.r_2lift = median_report(two_lift_spectrum).r;

    if (!(rep.r_2lift > rep.lower_bound + kStrictMargin && rep.r_2lift < rep.upper_bound - kStrictMargin))
        clause_fail("sqrt(q-1)-1 < R(2-lift) < sqrt(q)-1", "R = " + std::to_string(rep.r_2lift));
    rep.bounds_ok = true;

    if (std::fabs(rep.r_2lift - rep.cubic.root) > 1e-6)
        clause_fail("R(2-lift) equals the cubic root",
                    std::to_string(rep.r_2lift) + " vs " + std::to_string(rep.cubic.root));
    rep.cubic_match_ok = true;

    // Eigenvector certificate: value 1 on the charged edge's endpoints, a on
    // their other neighbours, b elsewhere; negated on the second layer.
    const double lambda = rep.cubic.root;
    rep.eigvec_a = (lambda + 1.0) / q;
    rep.eigvec_b = (rep.eigvec_a * lambda - 1.0) / q;
    if (std::fabs(rep.eigvec_b * lambda - (q * rep.eigvec_b + rep.eigvec_a)) > 1e-8)
        clause_fail("eigenvector parameters solve b*lambda = q*b + a",
                    "a = " + std::to_string(rep.eigvec_a) + ", b = " + std::to_string(rep.eigvec_b));

    std::vector<double> x(g.vertex_count, rep.eigvec_b);
    x[v0] = 1.0;
    x[v1] = 1.0;
    for (const EdgeRecord& e : g.edges) {
        if (e.u == v0 || e.u == v1) {
            if (e.v != v0 && e.v != v1) x[e.v] = rep.eigvec_a;
        } else if (e.v == v0 || e.v == v1) {
            if (e.u != v0 && e.u != v1) x[e.u] = rep.eigvec_a;
        }
    }
    const Graph lift = build_lift(two_lift);
    std::vector<double> y(lift.vertex_count);
    for (int u = 0; u < g.vertex_count; ++u) {
        y[2 * u] = x[u];
        y[2 * u + 1] = -x[u];
    }
    std::vector<double> ay(lift.vertex_count, 0.0);
    for (const EdgeRecord& e : lift.edges) {
        ay[e.u] += y[e.v];
        ay[e.v] += y[e.u];
    }
    double residual = 0.0, y_norm = 0.0;
    for (int i = 0; i < lift.vertex_count; ++i) {
        residual = std::max(residual, std::fabs(ay[i] - lambda * y[i]));
        y_norm = std::max(y_norm, std::fabs(y[i]));
    }
    rep.eigenvector_residual = residual;
    if (residual > 1e-6 * y_norm)
        clause_fail("2-lift eigenvector residual within 1e-6", std::to_string(residual));
    rep.eigenvector_ok = true;

    rep.near_median_eigenvalue = two_lift_spectrum[static_cast<size_t>(rep.lift_order / 2 - 1) - 1];
    if (std::fabs(rep.near_median_eigenvalue - std::sqrt(static_cast<double>(q))) > 1e-6)
        clause_fail("eigenvalue at position lift_order/2 - 1 equals sqrt(q)",
                    std::to_string(rep.near_median_eigenvalue));
    rep.near_median_ok = true;

    rep.series = median_series(g, charged, t_max);

    double even_min = rep.r_2lift, even_max = rep.r_2lift;
    for (const auto& [t, r] : rep.series) {
        if (t % 2 != 0) continue;
        even_min = std::min(even_min, r);
        even_max = std::max(even_max, r);
    }
    if (even_max - even_min > 1e-6)
        clause_fail("even-lift medians all equal R(2-lift)", "spread " + std::to_string(even_max - even_min));
    rep.even_stable_ok = true;

    double prev_odd = -1.0;
    bool have_prev = false;
    for (const auto& [t, r] : rep.series) {
        if (t % 2 == 0) continue;
        if (have_prev && r > prev_odd + 1e-8)
            clause_fail("odd-lift medians non-increasing",
                        std::to_string(prev_odd) + " -> " + std::to_string(r) + " at t = " + std::to_string(t));
        prev_odd = r;
        have_prev = true;
    }
    rep.odd_monotone_ok = true;

    return rep;
}

Graph random_connected_balanced_bipartite(Rng& rng, int half, double edge_prob) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < half; ++u)
            for (int w = 0; w < half; ++w)
                if (rng.bernoulli(edge_prob)) edges.emplace_back(u, half + w);
        Graph g = from_edge_list(2 * half, edges);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("could not sample a connected bipartite graph");
}

BoundSweepReport run_bound_sweep(int n_max, int trials, uint64_t seed) {
    if (n_max < 4) throw std::invalid_argument("sweep needs n_max >= 4");
    if (trials < 1) throw std::invalid_argument("sweep needs at least one trial");

    BoundSweepReport rep;
    rep.n_max = n_max;
    rep.trials = trials;
    rep.seed = seed;

    struct Counts {
        int holds = 0, extremal = 0, skipped = 0, strict = 0, equality = 0, violated = 0;
    };
    std::vector<Counts> per_trial(trials);

    parallel_for(static_cast<size_t>(trials), [&](size_t i) {
        Rng rng(mix_seed(seed, i));
        const int half = rng.uniform_int(2, n_max / 2);
        const double edge_prob = rng.uniform(0.3, 0.9);
        const Graph g = random_connected_balanced_bipartite(rng, half, edge_prob);
        Counts& c = per_trial[i];

        if (degree_stats(g).max_degree >= 3) {
            const BoundVerdict verdict = classify_mainres(g);
            switch (verdict.outcome) {
                case BoundOutcome::kBoundHolds: ++c.holds; break;
                case BoundOutcome::kExtremalProjectivePlane: ++c.extremal; break;
                case BoundOutcome::kViolated: ++c.violated; break;
            }
        } else {
            ++c.skipped;
        }

        const BoundVerdict deltamed = check_deltamed(g);
        if (deltamed.outcome == BoundOutcome::kViolated)
            ++c.violated;
        else if (deltamed.strict_applied)
            ++c.strict;
        else
            ++c.equality;
    });

    for (const Counts& c : per_trial) {
        rep.mainres_bound_holds += c.holds;
        rep.mainres_extremal += c.extremal;
        rep.mainres_skipped_low_degree += c.skipped;
        rep.deltamed_strict_holds += c.strict;
        rep.deltamed_equality_case += c.equality;
        rep.violations += c.violated;
    }
    if (rep.violations > 0)
        throw std::runtime_error("degree-bound violation observed: " + std::to_string(rep.violations) +
                                 " verdicts out of " + std::to_string(trials) + " trials");
    return rep;
}

}  // namespace hlspec
