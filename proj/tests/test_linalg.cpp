#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hlspec/graph.hpp"
#include "hlspec/linalg.hpp"
#include "hlspec/random.hpp"

using namespace hlspec;
using std::numbers::pi;

namespace {

RealSymmetricMatrix complete_graph_adjacency(int n) {
    RealSymmetricMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a.set(i, j, 1.0);
    return a;
}

// Closed-form cycle spectrum 2 cos(2 pi j / n), the oracle for lift tests too.
std::vector<double> cycle_spectrum(int n) {
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = 2.0 * std::cos(2.0 * pi * j / n);
    return v;
}

Graph random_simple_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return from_edge_list(n, edges);
}

HermitianMatrix random_hermitian(Rng& rng, int n) {
    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i) {
        h.set(i, i, {rng.uniform(-1.0, 1.0), 0.0});
        for (int j = i + 1; j < n; ++j) h.set(i, j, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    }
    return h;
}

}  // namespace

TEST_CASE("complete graph spectrum is n-1 with -1 repeated") {
    const Spectrum s = symmetric_spectrum(complete_graph_adjacency(3));
    REQUIRE(s.size() == 3);
    CHECK(s[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(s[1] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(s[2] == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("4-cycle spectrum") {
    const Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Spectrum s = symmetric_spectrum(adjacency_matrix(c4));
    const Spectrum expected(cycle_spectrum(4));
    CHECK(multiset_close(s, expected, 1e-9));
}

TEST_CASE("cycle spectra match the closed form up to n = 12") {
    for (int n = 3; n <= 12; ++n) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        const Spectrum s = symmetric_spectrum(adjacency_matrix(from_edge_list(n, edges)));
        CHECK(multiset_close(s, Spectrum(cycle_spectrum(n)), 1e-9));
    }
}

TEST_CASE("path spectra match the closed form 2 cos(k pi / (n+1))") {
    for (int n = 2; n <= 10; ++n) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        std::vector<double> expected(n);
        for (int k = 1; k <= n; ++k) expected[k - 1] = 2.0 * std::cos(k * pi / (n + 1));
        const Spectrum s = symmetric_spectrum(adjacency_matrix(from_edge_list(n, edges)));
        CHECK(multiset_close(s, Spectrum(std::move(expected)), 1e-9));
    }
}

TEST_CASE("pauli-type hermitian matrix has spectrum {1, -1}") {
    HermitianMatrix h(2);
    h.set(0, 1, {0.0, 1.0});
    const Spectrum s = hermitian_spectrum(h);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s[1] == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("hermitian solver agrees with the symmetric solver on real input") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(1, 10);
        RealSymmetricMatrix m(n);
        HermitianMatrix h(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = rng.uniform(-2.0, 2.0);
                m.set(i, j, v);
                h.set(i, j, {v, 0.0});
            }
        CHECK(multiset_close(symmetric_spectrum(m), hermitian_spectrum(h), 1e-8));
    }
}

TEST_CASE("signed 4-cycle factor at alpha = -1 has spectrum +-sqrt(2) doubled") {
    // 4-cycle with one -1 entry pair: the frustrated cycle.
    HermitianMatrix h(4);
    h.set(0, 1, {-1.0, 0.0});
    h.set(1, 2, {1.0, 0.0});
    h.set(2, 3, {1.0, 0.0});
    h.set(3, 0, {1.0, 0.0});
    const Spectrum s = hermitian_spectrum(h);
    const double r2 = std::sqrt(2.0);
    CHECK(multiset_close(s, Spectrum({r2, r2, -r2, -r2}), 1e-9));
}

TEST_CASE("hermitian spectrum equals the deduplicated real embedding spectrum") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform_int(1, 12);
        const HermitianMatrix h = random_hermitian(rng, n);

        RealSymmetricMatrix embed(2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const std::complex<double> z = h(i, j);
                embed.set(i, j, z.real());
                embed.set(n + i, n + j, z.real());
                embed.set(i, n + j, -z.imag());
                embed.set(j, n + i, z.imag());
            }
        const Spectrum big = symmetric_spectrum(embed);
        const Spectrum small = hermitian_spectrum(h);
        std::vector<double> doubled;
        for (double v : small.values()) {
            doubled.push_back(v);
            doubled.push_back(v);
        }
        CHECK(multiset_close(big, Spectrum(std::move(doubled)), 1e-8));
    }
}

TEST_CASE("determinant basics") {
    ComplexMatrix id(3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1.0;
    CHECK(std::abs(complex_determinant(id) - std::complex<double>{1.0, 0.0}) < 1e-12);

    ComplexMatrix diag(2);
    diag.at(0, 0) = 2.0;
    diag.at(1, 1) = {0.0, 1.0};
    CHECK(std::abs(complex_determinant(diag) - std::complex<double>{0.0, 2.0}) < 1e-12);

    // lambda I - A(K2) at lambda = 0
    ComplexMatrix m(2);
    m.at(0, 1) = -1.0;
    m.at(1, 0) = -1.0;
    CHECK(std::abs(complex_determinant(m) - std::complex<double>{-1.0, 0.0}) < 1e-12);

    ComplexMatrix singular(2);
    singular.at(0, 0) = 1.0;
    singular.at(0, 1) = 2.0;
    singular.at(1, 0) = 2.0;
    singular.at(1, 1) = 4.0;
    CHECK(complex_determinant(singular) == std::complex<double>{0.0, 0.0});
}

TEST_CASE("determinant of lambda I - M is the product over eigenvalues") {
    Rng rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = rng.uniform_int(1, 8);
        const HermitianMatrix h = random_hermitian(rng, n);
        const Spectrum s = hermitian_spectrum(h);
        const double lambda = rng.uniform(-3.0, 3.0);

        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = (i == j ? lambda : 0.0) - h(i, j);
        const std::complex<double> det = complex_determinant(std::move(m));

        double expected = 1.0;
        for (double v : s.values()) expected *= lambda - v;
        CHECK(std::abs(det - std::complex<double>{expected, 0.0}) <=
              1e-6 * (1.0 + std::abs(expected)));
    }
}

TEST_CASE("multiset comparison sorts and checks lengths") {
    CHECK(multiset_close(Spectrum({1.0, 0.0}), Spectrum({0.0, 1.0}), 1e-12));
    CHECK_FALSE(multiset_close(Spectrum({1.0}), Spectrum({1.0, 1.0}), 1.0));
    CHECK_FALSE(multiset_close(Spectrum({1.0, 0.0}), Spectrum({1.0, 0.1}), 1e-3));
}

TEST_CASE("trace identities on random simple graphs") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform_int(2, 14);
        const Graph g = random_simple_graph(rng, n, rng.uniform(0.2, 0.8));
        const Spectrum s = symmetric_spectrum(adjacency_matrix(g));
        double sum = 0.0, sum_sq = 0.0;
        for (double v : s.values()) {
            sum += v;
            sum_sq += v * v;
        }
        const double scale = 1.0 + 2.0 * g.edge_multiplicity_total();
        CHECK(std::fabs(sum) <= 1e-8 * scale);
        CHECK(std::fabs(sum_sq - 2.0 * g.edge_multiplicity_total()) <= 1e-8 * scale);
    }
}

TEST_CASE("bipartite spectra are symmetric about zero") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int half = rng.uniform_int(1, 6);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < half; ++u)
            for (int w = 0; w < half; ++w)
                if (rng.bernoulli(0.6)) edges.emplace_back(u, half + w);
        const Graph g = from_edge_list(2 * half, edges);
        const Spectrum s = symmetric_spectrum(adjacency_matrix(g));
        const size_t n = s.size();
        for (size_t i = 0; i < n; ++i) CHECK(std::fabs(s[i] + s[n - 1 - i]) <= 1e-8);
    }
}

TEST_CASE("vertex deletion interlaces the spectrum") {
    Rng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform_int(2, 10);
        const Graph g = random_simple_graph(rng, n, rng.uniform(0.3, 0.9));
        const int drop = rng.uniform_int(0, n - 1);

        std::vector<std::pair<int, int>> kept;
        for (const EdgeRecord& e : g.edges) {
            if (e.u == drop || e.v == drop) continue;
            auto shift = [drop](int v) { return v > drop ? v - 1 : v; };
            kept.emplace_back(shift(e.u), shift(e.v));
        }
        const Graph h = from_edge_list(n - 1, kept);
        const Spectrum sg = symmetric_spectrum(adjacency_matrix(g));
        const Spectrum sh = symmetric_spectrum(adjacency_matrix(h));
        for (int i = 0; i < n - 1; ++i) {
            CHECK(sg[i] >= sh[i] - 1e-8);
            CHECK(sh[i] >= sg[i + 1] - 1e-8);
        }
    }
}
