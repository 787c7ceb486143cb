#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hlspec/experiments.hpp"
#include "hlspec/graph.hpp"
#include "hlspec/random.hpp"

using namespace hlspec;

TEST_CASE("cubic endpoint values and bracketed root") {
    const LiftMedianCubic cubic = lift_median_cubic(2);
    CHECK(cubic.coefficients == std::array<double, 4>{1.0, -1.0, -6.0, 2.0});
    CHECK(cubic.bracket_lo == doctest::Approx(0.0));
    CHECK(cubic.bracket_hi == doctest::Approx(std::sqrt(2.0) - 1.0));
    CHECK(cubic.value_at_lo == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(cubic.value_at_hi == doctest::Approx(std::sqrt(2.0) - 2.0).epsilon(1e-12));
    CHECK(cubic.root > cubic.bracket_lo);
    CHECK(cubic.root < cubic.bracket_hi);
    CHECK(std::fabs(lift_median_cubic_value(2, cubic.root)) < 1e-10);

    for (int q = 2; q <= 9; ++q) {
        const LiftMedianCubic c = lift_median_cubic(q);
        CHECK(std::fabs(c.value_at_lo - 2.0) <= 1e-9);
        CHECK(std::fabs(c.value_at_hi - (std::sqrt(static_cast<double>(q)) - q)) <= 1e-9);
        CHECK(std::fabs(lift_median_cubic_value(q, c.root)) < 1e-9);
    }

    CHECK_THROWS_AS(lift_median_cubic(1), std::invalid_argument);
}

TEST_CASE("refined margin signs") {
    for (double t : {std::sqrt(2.0), std::sqrt(3.0), 2.0, 3.0, 10.0}) {
        CHECK(refined_margin(t, 2.0).sign == 1);
    }
    CHECK(refined_margin(10.0, 3.0).sign == -1);
    CHECK_THROWS_AS(refined_margin(0.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(refined_margin(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("refined margin evaluates both paths consistently") {
    Rng rng(83);
    for (int trial = 0; trial < 200; ++trial) {
        const double t = rng.uniform(1.2, 20.0);
        const double h = rng.uniform(0.5, 10.0);
        const RefinedBoundReport rep = refined_margin(t, h);
        const double scale = std::max({1.0, std::fabs(rep.margin_value), std::fabs(rep.cubic_value)});
        CHECK(std::fabs(rep.margin_value - rep.cubic_value) <= 1e-8 * scale);
        CHECK(rep.probe_lambda == doctest::Approx(t - 1.0 - 1.0 / (h * t)));
    }
}

TEST_CASE("projective 2-lift experiment for the smallest plane") {
    const ProjectiveLiftReport rep = projective_lift_experiment(2, 11);
    CHECK(rep.k == 3);
    CHECK(rep.lift_order == 28);
    CHECK(rep.bounds_ok);
    CHECK(rep.cubic_match_ok);
    CHECK(rep.eigenvector_ok);
    CHECK(rep.even_stable_ok);
    CHECK(rep.odd_monotone_ok);
    CHECK(rep.near_median_ok);

    CHECK(rep.r_2lift > 0.0);
    CHECK(rep.r_2lift < std::sqrt(2.0) - 1.0);
    CHECK(rep.r_2lift == doctest::Approx(rep.cubic.root).epsilon(1e-6));
    CHECK(rep.near_median_eigenvalue == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
    CHECK(rep.eigenvector_residual <= 1e-6);

    REQUIRE(rep.series.size() == 11);
    CHECK(rep.series[0].second == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));  // t=1 is the base
    for (const auto& [t, r] : rep.series)
        if (t % 2 == 0) CHECK(r == doctest::Approx(rep.r_2lift).epsilon(1e-6));
}

TEST_CASE("projective 2-lift experiment for q = 3") {
    const ProjectiveLiftReport rep = projective_lift_experiment(3, 6);
    CHECK(rep.lift_order == 52);
    CHECK(rep.r_2lift > std::sqrt(2.0) - 1.0);
    CHECK(rep.r_2lift < std::sqrt(3.0) - 1.0);
    CHECK(rep.r_2lift == doctest::Approx(rep.cubic.root).epsilon(1e-6));
}

TEST_CASE("sweep finds no violations and reproduces with a fixed seed") {
    const BoundSweepReport a = run_bound_sweep(12, 60, 42);
    CHECK(a.violations == 0);
    CHECK(a.mainres_bound_holds + a.mainres_extremal + a.mainres_skipped_low_degree == 60);
    CHECK(a.deltamed_strict_holds + a.deltamed_equality_case == 60);
    CHECK(a.deltamed_equality_case == 0);  // connected graphs of order >= 4 are never K2

    const BoundSweepReport b = run_bound_sweep(12, 60, 42);
    CHECK(a.mainres_bound_holds == b.mainres_bound_holds);
    CHECK(a.mainres_extremal == b.mainres_extremal);
    CHECK(a.mainres_skipped_low_degree == b.mainres_skipped_low_degree);
    CHECK(a.deltamed_strict_holds == b.deltamed_strict_holds);

    const BoundSweepReport c = run_bound_sweep(12, 60, 43);
    const bool differs = c.mainres_bound_holds != a.mainres_bound_holds ||
                         c.mainres_skipped_low_degree != a.mainres_skipped_low_degree;
    CHECK(differs);  // different seed, different sample

    CHECK_THROWS_AS(run_bound_sweep(2, 10, 1), std::invalid_argument);
}

TEST_CASE("random bipartite trial graphs are connected and balanced") {
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_connected_balanced_bipartite(rng, 4, 0.5);
        CHECK(g.vertex_count == 8);
        CHECK(is_connected(g));
        const auto bip = bipartition(g);
        REQUIRE(bip.has_value());
        CHECK(bip->u.size() == 4);
    }
}
