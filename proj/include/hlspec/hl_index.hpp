#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlspec/graph.hpp"
#include "hlspec/linalg.hpp"

namespace hlspec {

// Median positions and values of a descending spectrum. Indices are 1-based
// to match the lambda_1 >= ... >= lambda_n ordering; they coincide for odd n.
struct MedianReport {
    int n = 0;
    int lower_index = 0;  // floor((n+1)/2)
    int upper_index = 0;  // ceil((n+1)/2)
    double lower_value = 0.0;
    double upper_value = 0.0;
    double r = 0.0;  // max(|lower_value|, |upper_value|)
};

// Biadjacency view of a balanced bipartite graph plus the shifted walk
// matrix E = B B^T - shift * I. Off-diagonal entries of B B^T count common
// neighbours; diagonal entries are degrees.
struct WalkDecomposition {
    int part_size = 0;
    int shift = 0;
    std::vector<std::vector<int>> b;            // rows: U ascending, cols: W ascending
    std::vector<std::vector<int>> bbt;          // B B^T
    std::vector<std::vector<int>> e_shifted;    // B B^T - shift I

    std::vector<int> diagonal() const;
};

enum class BoundTheorem { kRegular, kNonregular, kMinDegree };
enum class BoundOutcome { kBoundHolds, kExtremalProjectivePlane, kViolated };

struct BoundVerdict {
    BoundTheorem theorem = BoundTheorem::kRegular;
    BoundOutcome outcome = BoundOutcome::kBoundHolds;
    double bound = 0.0;
    double r = 0.0;
    bool strict_applied = false;              // min-degree verdicts only
    std::optional<int> projective_order;      // set for the extremal outcome
    std::string detail;                       // human-readable witness info
};

const char* to_string(BoundTheorem t);
const char* to_string(BoundOutcome o);

// Median positions/values of an already computed spectrum.
MedianReport median_report(const Spectrum& spectrum);

// Median eigenvalues of a graph. Bipartite graphs of odd order have median
// eigenvalue exactly 0; the report pins that value to avoid solver noise.
MedianReport hl_index(const Graph& g);

// Requires a balanced bipartition; throws otherwise, reporting both sizes.
WalkDecomposition walk_decomposition(const Graph& g, const Bipartition& bip, int shift);

// Returns the plane order q = k-1 when g is connected, bipartite with equal
// parts, k-regular with k >= 3, and every two vertices on a side share
// exactly one common neighbour; absent otherwise. Integer-only test.
std::optional<int> is_projective_plane_incidence(const Graph& g);

// Verdict for the maximum-degree bound sqrt(max_degree - 2) with the
// projective-plane extremal exception. Requires a simple connected bipartite
// graph with max degree >= 3; throws naming any violated precondition.
BoundVerdict classify_mainres(const Graph& g);

// Verdict for the minimum-degree bound sqrt(min_degree), strict unless every
// minimum-degree-1 component is a K2. Requires a simple bipartite graph.
BoundVerdict check_deltamed(const Graph& g);

}  // namespace hlspec
