#include "hlspec/lifts.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hlspec/hl_index.hpp"
#include "hlspec/parallel.hpp"

namespace hlspec {

namespace {

// exp(2*pi*i * m / t) with the quarter-turn values made exact.
std::complex<double> root_of_unity(long long m, int t) {
    m %= t;
    if (m < 0) m += t;
    if (m == 0) return {1.0, 0.0};
    if (4 * m == 2LL * t) return {-1.0, 0.0};
    if (4 * m == t) return {0.0, 1.0};
    if (4 * m == 3LL * t) return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / t;
    return std::polar(1.0, angle);
}

int signed_representative(int voltage, int t) {
    return voltage > t / 2 ? voltage - t : voltage;
}

// Hermitian matrix with entry (u, v) summing weight(k) over records, where
// k is the signed voltage of the record read from low endpoint to high.
// Mirroring through set() keeps conjugate symmetry exact.
template <typename WeightFn>
HermitianMatrix voltage_matrix(const CyclicVoltageGraph& cvg, WeightFn weight) {
    const int n = cvg.base.vertex_count;
    std::vector<std::complex<double>> upper(static_cast<size_t>(n) * n, {0.0, 0.0});
    for (size_t id = 0; id < cvg.base.edges.size(); ++id) {
        const EdgeRecord& e = cvg.base.edges[id];
        const int k = signed_representative(cvg.voltage[id], cvg.modulus);
        const int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
        const int k_lo_hi = (e.u == lo) ? k : -k;
        upper[static_cast<size_t>(lo) * n + hi] += weight(k_lo_hi);
    }
    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto z = upper[static_cast<size_t>(i) * n + j];
            if (z != std::complex<double>{0.0, 0.0}) h.set(i, j, z);
        }
    return h;
}

double median_r_of(const Spectrum& spectrum) {
    return median_report(spectrum).r;
}

}  // namespace

CyclicVoltageGraph CyclicVoltageGraph::from_raw(Graph base, const std::vector<long long>& raw, int t,
                                                bool* reduced_any_out_of_range) {
    if (t < 1) throw std::invalid_argument("lift modulus must be at least 1");
    if (raw.size() != base.edges.size())
        throw std::invalid_argument("voltage list length does not match edge count");
    CyclicVoltageGraph cvg;
    cvg.modulus = t;
    cvg.voltage.resize(raw.size());
    bool out_of_range = false;
    for (size_t i = 0; i < raw.size(); ++i) {
        long long k = raw[i] % t;
        if (k < 0) k += t;
        if (raw[i] >= t || raw[i] < 0) out_of_range = true;
        cvg.voltage[i] = static_cast<int>(k);
    }
    cvg.base = std::move(base);
    if (reduced_any_out_of_range) *reduced_any_out_of_range = out_of_range;
    return cvg;
}

int CyclicVoltageGraph::oriented_voltage(int edge_id, int tail, int head) const {
    const EdgeRecord& e = base.edges[edge_id];
    if (tail == e.u && head == e.v) return voltage[edge_id];
    if (tail == e.v && head == e.u) return (modulus - voltage[edge_id]) % modulus;
    throw std::invalid_argument("oriented edge does not match record " + std::to_string(edge_id));
}

FactorIndex factor_index(int t, int j) {
    if (t < 1 || j < 0 || j >= t)
        throw std::invalid_argument("factor index " + std::to_string(j) + " out of range for modulus " +
                                    std::to_string(t));
    FactorIndex idx;
    idx.j = j;
    idx.modulus = t;
    idx.alpha = root_of_unity(j, t);
    idx.nu = 2.0 * idx.alpha.real();
    return idx;
}

CyclicVoltageGraph make_cyclic_voltage(const Graph& g, const std::vector<OrientedEdge>& f, int t) {
    if (t < 1) throw std::invalid_argument("lift modulus must be at least 1");
    CyclicVoltageGraph cvg;
    cvg.base = g;
    cvg.modulus = t;
    cvg.voltage.assign(g.edges.size(), 0);
    std::vector<bool> used(g.edges.size(), false);
    for (const OrientedEdge& oe : f) {
        if (oe.edge_id < 0 || oe.edge_id >= static_cast<int>(g.edges.size()))
            throw std::invalid_argument("edge id " + std::to_string(oe.edge_id) + " out of range");
        const EdgeRecord& e = g.edges[oe.edge_id];
        if (used[oe.edge_id])
            throw std::invalid_argument("edge " + std::to_string(oe.edge_id) +
                                        " appears twice in the selected orientation set");
        used[oe.edge_id] = true;
        if (oe.tail == e.u && oe.head == e.v) {
            cvg.voltage[oe.edge_id] = 1 % t;
        } else if (oe.tail == e.v && oe.head == e.u) {
            cvg.voltage[oe.edge_id] = (t - 1) % t;
        } else {
            throw std::invalid_argument("oriented edge endpoints do not match record " +
                                        std::to_string(oe.edge_id));
        }
    }
    return cvg;
}

Graph build_lift(const CyclicVoltageGraph& cvg) {
    const int t = cvg.modulus;
    Graph lift;
    lift.vertex_count = cvg.base.vertex_count * t;
    lift.edges.reserve(cvg.base.edges.size() * static_cast<size_t>(t));
    for (size_t id = 0; id < cvg.base.edges.size(); ++id) {
        const EdgeRecord& e = cvg.base.edges[id];
        const int k = cvg.voltage[id];
        for (int i = 0; i < t; ++i)
            lift.edges.push_back({e.u * t + i, e.v * t + (i + k) % t});
    }
    return lift;
}

HermitianMatrix factor_matrix(const CyclicVoltageGraph& cvg, const FactorIndex& idx) {
    if (idx.modulus != cvg.modulus)
        throw std::invalid_argument("factor index modulus does not match the voltage graph");
    const int t = cvg.modulus;
    const int j = idx.j;
    return voltage_matrix(cvg, [t, j](int k) { return root_of_unity(static_cast<long long>(j) * k, t); });
}

Spectrum lift_spectrum_factored(const CyclicVoltageGraph& cvg) {
    const int t = cvg.modulus;
    const int n = cvg.base.vertex_count;
    std::vector<double> all(static_cast<size_t>(n) * t);
    parallel_for(static_cast<size_t>(t), [&](size_t j) {
        Spectrum part;
        try {
            part = hermitian_spectrum(factor_matrix(cvg, factor_index(t, static_cast<int>(j))));
        } catch (const std::exception& ex) {
            throw std::runtime_error("factor " + std::to_string(j) + ": " + ex.what());
        }
        std::copy(part.values().begin(), part.values().end(), all.begin() + static_cast<size_t>(j) * n);
    });
    return Spectrum(std::move(all));
}

bool verify_factorization(const CyclicVoltageGraph& cvg, double tol) {
    const Spectrum factored = lift_spectrum_factored(cvg);
    const Spectrum direct = symmetric_spectrum(adjacency_matrix(build_lift(cvg)));
    return multiset_close(factored, direct, tol);
}

double factor_poly_eval(const CyclicVoltageGraph& cvg, double lambda, double theta) {
    const HermitianMatrix a =
        voltage_matrix(cvg, [theta](int k) { return std::polar(1.0, theta * k); });
    const int n = a.order();
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = (i == j ? lambda : 0.0) - a(i, j);
    const std::complex<double> det = complex_determinant(std::move(m));
    if (std::fabs(det.imag()) > 1e-8 * (1.0 + std::abs(det)))
        throw std::runtime_error("characteristic value has imaginary residue " +
                                 std::to_string(det.imag()));
    return det.real();
}

FactorPolyLinearForm factor_poly_linear_form(const CyclicVoltageGraph& cvg, double lambda) {
    const int t = cvg.modulus;
    // Hypothesis check: voltages only 0 or +-1, with all +1-oriented edges
    // sharing one head. For t = 2 both orientations carry voltage 1, so a
    // common endpoint of all voltage-1 records suffices.
    std::vector<int> heads;
    std::vector<size_t> charged;
    for (size_t id = 0; id < cvg.voltage.size(); ++id) {
        const int k = cvg.voltage[id];
        if (k == 0) continue;
        const EdgeRecord& e = cvg.base.edges[id];
        if (t == 2) {
            charged.push_back(id);
        } else if (k == 1) {
            heads.push_back(e.v);
        } else if (k == t - 1) {
            heads.push_back(e.u);
        } else {
            throw std::invalid_argument("voltage " + std::to_string(k) + " on edge " +
                                        std::to_string(id) + " breaks the single-head pattern");
        }
    }
    if (t == 2 && !charged.empty()) {
        for (int candidate : {cvg.base.edges[charged[0]].u, cvg.base.edges[charged[0]].v}) {
            bool all = true;
            for (size_t id : charged) {
                const EdgeRecord& e = cvg.base.edges[id];
                if (e.u != candidate && e.v != candidate) {
                    all = false;
                    break;
                }
            }
            if (all) {
                heads.assign(charged.size(), candidate);
                break;
            }
        }
        if (heads.empty())
            throw std::invalid_argument("voltage-1 edges share no common vertex");
    }
    for (size_t i = 1; i < heads.size(); ++i)
        if (heads[i] != heads[0])
            throw std::invalid_argument("voltage-1 oriented edges have different heads " +
                                        std::to_string(heads[0]) + " and " + std::to_string(heads[i]));

    FactorPolyLinearForm form;
    form.lambda = lambda;
    form.at_nu_plus2 = factor_poly_eval(cvg, lambda, 0.0);
    form.at_nu_minus2 = factor_poly_eval(cvg, lambda, std::numbers::pi);
    form.p = (form.at_nu_plus2 + form.at_nu_minus2) / 2.0;
    form.s = (form.at_nu_minus2 - form.at_nu_plus2) / 4.0;
    if (form.s != 0.0) form.nu0 = form.p / form.s;

    const double at_nu_zero = factor_poly_eval(cvg, lambda, std::numbers::pi / 2.0);
    if (std::fabs(at_nu_zero - form.p) > 1e-6 * (1.0 + std::fabs(form.p)))
        throw std::runtime_error("characteristic value is not linear in nu: midpoint " +
                                 std::to_string(at_nu_zero) + " vs p " + std::to_string(form.p));
    return form;
}

std::vector<std::pair<int, double>> median_series(const Graph& g, const std::vector<OrientedEdge>& f,
                                                  int t_max) {
    if (t_max < 1) throw std::invalid_argument("t_max must be at least 1");
    if (!bipartition(g)) throw std::invalid_argument("median_series needs a bipartite base");
    std::vector<std::pair<int, double>> series;
    series.reserve(static_cast<size_t>(t_max));
    for (int t = 1; t <= t_max; ++t) {
        const CyclicVoltageGraph cvg = make_cyclic_voltage(g, f, t);
        const double r = median_r_of(lift_spectrum_factored(cvg));
        if (t <= 4) {
            const double direct = median_r_of(symmetric_spectrum(adjacency_matrix(build_lift(cvg))));
            if (std::fabs(r - direct) > 1e-6)
                throw std::runtime_error("factored median " + std::to_string(r) +
                                         " disagrees with explicit lift " + std::to_string(direct) +
                                         " at t=" + std::to_string(t));
        }
        series.emplace_back(t, r);
    }
    return series;
}

}  // namespace hlspec
