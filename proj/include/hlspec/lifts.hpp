#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "hlspec/graph.hpp"
#include "hlspec/linalg.hpp"

namespace hlspec {

// A base graph with one voltage per edge record, an integer mod t applying
// to the record's stored orientation (u -> v). The reverse orientation
// carries the negated voltage, so the assignment is antisymmetric.
struct CyclicVoltageGraph {
    Graph base;
    int modulus = 1;                  // t >= 1
    std::vector<int> voltage;         // per record, reduced into [0, t)

    // Reduces raw voltages mod t. reduced_any_out_of_range reports whether a
    // raw value fell outside [0, t), which callers may warn about.
    static CyclicVoltageGraph from_raw(Graph base, const std::vector<long long>& raw, int t,
                                       bool* reduced_any_out_of_range = nullptr);

    // Voltage of (tail -> head) for record edge_id; resolves the stored
    // orientation and negates mod t when traversed backwards.
    int oriented_voltage(int edge_id, int tail, int head) const;
};

// One character of the cyclic group C_t: alpha = exp(2*pi*i*j/t) and the
// associated real parameter nu = 2 cos(2*pi*j/t) in [-2, 2].
struct FactorIndex {
    int j = 0;
    int modulus = 1;
    std::complex<double> alpha;
    double nu = 2.0;
};

FactorIndex factor_index(int t, int j);

// Linear-in-nu form of the per-factor characteristic value at a fixed
// lambda: value(nu) = p - nu * s, recovered from evaluations at nu = +-2.
struct FactorPolyLinearForm {
    double lambda = 0.0;
    double at_nu_plus2 = 0.0;
    double at_nu_minus2 = 0.0;
    double p = 0.0;
    double s = 0.0;
    std::optional<double> nu0;  // p / s when s != 0; root in nu of the form
};

// Voltage 1 on each member of F, -1 on its reversal, 0 elsewhere. Rejects an
// F containing both orientations (or two copies) of one edge.
CyclicVoltageGraph make_cyclic_voltage(const Graph& g, const std::vector<OrientedEdge>& f, int t);

// Explicit covering graph on vertex_count * t vertices; (u, i) -> u*t + i.
// A record {u, v} with voltage k yields edges {(u,i), (v, (i+k) mod t)}.
Graph build_lift(const CyclicVoltageGraph& cvg);

// Hermitian factor matrix for character j: entry (u, v) sums alpha^voltage
// over parallel records. j = 0 reproduces the base adjacency matrix exactly.
HermitianMatrix factor_matrix(const CyclicVoltageGraph& cvg, const FactorIndex& idx);

// Lift spectrum as the multiset union of all t factor spectra, re-sorted.
// Factor solves fan out across threads; see parallel.hpp for the cap.
Spectrum lift_spectrum_factored(const CyclicVoltageGraph& cvg);

// True iff the factored spectrum matches the directly built lift's spectrum
// elementwise within tol.
bool verify_factorization(const CyclicVoltageGraph& cvg, double tol);

// Per-factor characteristic value det(lambda I - A_alpha) with
// alpha = exp(i*theta). Voltages act through their symmetric signed
// representative in (-t/2, t/2], which agrees with every representative at
// the t-th roots of unity and keeps the value a function of nu = 2 cos theta
// off the lattice. The determinant must come out real; a surviving imaginary
// part flags a construction bug and throws.
double factor_poly_eval(const CyclicVoltageGraph& cvg, double lambda, double theta);

// Requires the single-head voltage pattern: some vertex v0 heads every
// voltage-1 oriented edge and all other voltages vanish. Recovers p and s
// from nu = +-2 and cross-checks linearity at nu = 0.
FactorPolyLinearForm factor_poly_linear_form(const CyclicVoltageGraph& cvg, double lambda);

// Median eigenvalue magnitude R of the t-lift of a bipartite base, for
// t = 1..t_max, computed from factor matrices. Lifts with t <= 4 are
// cross-checked against the explicit covering graph.
std::vector<std::pair<int, double>> median_series(const Graph& g, const std::vector<OrientedEdge>& f,
                                                  int t_max);

}  // namespace hlspec
