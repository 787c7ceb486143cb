#include "hlspec/hl_index.hpp"

#include <cmath>
#include <stdexcept>

namespace hlspec {

namespace {

constexpr double kStrictMargin = 1e-9;

bool component_is_k2(const std::vector<int>& component, const std::vector<int>& degree) {
    return component.size() == 2 && degree[component[0]] == 1 && degree[component[1]] == 1;
}

}  // namespace

const char* to_string(BoundTheorem t) {
    switch (t) {
        case BoundTheorem::kRegular: return "regular-max-degree";
        case BoundTheorem::kNonregular: return "nonregular-max-degree";
        case BoundTheorem::kMinDegree: return "min-degree";
    }
    return "?";
}

const char* to_string(BoundOutcome o) {
    switch (o) {
        case BoundOutcome::kBoundHolds: return "bound-holds";
        case BoundOutcome::kExtremalProjectivePlane: return "extremal-projective-plane";
        case BoundOutcome::kViolated: return "violated";
    }
    return "?";
}

std::vector<int> WalkDecomposition::diagonal() const {
    std::vector<int> d(part_size);
    for (int i = 0; i < part_size; ++i) d[i] = e_shifted[i][i];
    return d;
}

MedianReport median_report(const Spectrum& spectrum) {
    const int n = static_cast<int>(spectrum.size());
    if (n < 1) throw std::invalid_argument("median of an empty spectrum");
    MedianReport rep;
    rep.n = n;
    rep.lower_index = (n + 1) / 2;
    rep.upper_index = (n + 2) / 2;
    rep.lower_value = spectrum[rep.lower_index - 1];
    rep.upper_value = spectrum[rep.upper_index - 1];
    rep.r = std::max(std::fabs(rep.lower_value), std::fabs(rep.upper_value));
    return rep;
}

MedianReport hl_index(const Graph& g) {
    if (g.vertex_count < 1) throw std::invalid_argument("hl_index needs at least one vertex");
    MedianReport rep = median_report(symmetric_spectrum(adjacency_matrix(g)));
    if (g.vertex_count % 2 == 1 && bipartition(g)) {
        // Odd-order bipartite spectra are symmetric about zero, so the single
        // median eigenvalue is exactly 0.
        rep.lower_value = 0.0;
        rep.upper_value = 0.0;
        rep.r = 0.0;
    }
    return rep;
}

WalkDecomposition walk_decomposition(const Graph& g, const Bipartition& bip, int shift) {
    if (bip.u.size() != bip.w.size())
        throw std::invalid_argument("unbalanced bipartition: |U|=" + std::to_string(bip.u.size()) +
                                    ", |W|=" + std::to_string(bip.w.size()));
    std::vector<int> side(g.vertex_count, -1), pos(g.vertex_count, -1);
    for (size_t i = 0; i < bip.u.size(); ++i) {
        side[bip.u[i]] = 0;
        pos[bip.u[i]] = static_cast<int>(i);
    }
    for (size_t i = 0; i < bip.w.size(); ++i) {
        side[bip.w[i]] = 1;
        pos[bip.w[i]] = static_cast<int>(i);
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (side[v] == -1) throw std::invalid_argument("bipartition does not cover vertex " + std::to_string(v));

    const int m = static_cast<int>(bip.u.size());
    WalkDecomposition wd;
    wd.part_size = m;
    wd.shift = shift;
    wd.b.assign(m, std::vector<int>(m, 0));
    for (const EdgeRecord& e : g.edges) {
        if (side[e.u] == side[e.v])
            throw std::invalid_argument("bipartition violated by edge " + std::to_string(e.u) + " " +
                                        std::to_string(e.v));
        const int row = side[e.u] == 0 ? pos[e.u] : pos[e.v];
        const int col = side[e.u] == 0 ? pos[e.v] : pos[e.u];
        ++wd.b[row][col];
    }
    wd.bbt.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            int s = 0;
            for (int k = 0; k < m; ++k) s += wd.b[i][k] * wd.b[j][k];
            wd.bbt[i][j] = wd.bbt[j][i] = s;
        }
    wd.e_shifted = wd.bbt;
    for (int i = 0; i < m; ++i) wd.e_shifted[i][i] -= shift;
    return wd;
}

std::optional<int> is_projective_plane_incidence(const Graph& g) {
    if (g.vertex_count == 0 || !is_connected(g)) return std::nullopt;
    const auto bip = bipartition(g);
    if (!bip || bip->u.size() != bip->w.size()) return std::nullopt;

    const DegreeStats deg = degree_stats(g);
    const int k = deg.max_degree;
    if (k < 3 || deg.min_degree != k) return std::nullopt;

    const WalkDecomposition wd = walk_decomposition(g, *bip, 0);
    for (int i = 0; i < wd.part_size; ++i)
        for (int j = 0; j < wd.part_size; ++j) {
            const int expected = (i == j) ? k : 1;
            if (wd.bbt[i][j] != expected) return std::nullopt;
        }
    return k - 1;
}

BoundVerdict classify_mainres(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("classify_mainres: graph is not connected");
    if (!bipartition(g)) throw std::invalid_argument("classify_mainres: graph is not bipartite");
    if (!is_simple(g)) throw std::invalid_argument("classify_mainres: graph has parallel edges");
    const DegreeStats deg = degree_stats(g);
    if (deg.max_degree < 3)
        throw std::invalid_argument("classify_mainres: maximum degree " +
                                    std::to_string(deg.max_degree) + " is below 3");

    BoundVerdict verdict;
    verdict.theorem =
        (deg.min_degree == deg.max_degree) ? BoundTheorem::kRegular : BoundTheorem::kNonregular;
    verdict.r = hl_index(g).r;

    if (const auto q = is_projective_plane_incidence(g)) {
        verdict.outcome = BoundOutcome::kExtremalProjectivePlane;
        verdict.projective_order = *q;
        verdict.bound = std::sqrt(static_cast<double>(deg.max_degree - 1));
        if (std::fabs(verdict.r - verdict.bound) > 1e-6)
            throw std::runtime_error("projective-plane incidence graph with median eigenvalue " +
                                     std::to_string(verdict.r) + ", expected sqrt(" +
                                     std::to_string(deg.max_degree - 1) + ")");
        return verdict;
    }

    verdict.bound = std::sqrt(static_cast<double>(deg.max_degree - 2));
    if (verdict.r <= verdict.bound + kStrictMargin) {
        verdict.outcome = BoundOutcome::kBoundHolds;
    } else {
        verdict.outcome = BoundOutcome::kViolated;
        verdict.detail = "R=" + std::to_string(verdict.r) + " exceeds sqrt(max_degree-2)=" +
                         std::to_string(verdict.bound);
    }
    return verdict;
}

BoundVerdict check_deltamed(const Graph& g) {
    if (!bipartition(g)) throw std::invalid_argument("check_deltamed: graph is not bipartite");
    if (!is_simple(g)) throw std::invalid_argument("check_deltamed: graph has parallel edges");

    const DegreeStats deg = degree_stats(g);
    const int delta = deg.min_degree;

    BoundVerdict verdict;
    verdict.theorem = BoundTheorem::kMinDegree;
    verdict.bound = std::sqrt(static_cast<double>(delta));
    verdict.r = hl_index(g).r;

    if (delta >= 2) {
        verdict.strict_applied = true;
    } else if (delta == 1) {
        for (const auto& comp : connected_components(g)) {
            int comp_min = g.vertex_count;
            for (int v : comp) comp_min = std::min(comp_min, deg.sequence[v]);
            if (comp_min == 1 && !component_is_k2(comp, deg.sequence)) {
                verdict.strict_applied = true;
                break;
            }
        }
    }

    const double allowance = verdict.strict_applied ? -kStrictMargin : kStrictMargin;
    if (verdict.r <= verdict.bound + allowance) {
        verdict.outcome = BoundOutcome::kBoundHolds;
    } else {
        verdict.outcome = BoundOutcome::kViolated;
        verdict.detail = "R=" + std::to_string(verdict.r) + " against sqrt(min_degree)=" +
                         std::to_string(verdict.bound) +
                         (verdict.strict_applied ? " (strict case)" : "");
    }
    return verdict;
}

}  // namespace hlspec
