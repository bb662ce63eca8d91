#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlpw/basis_set.hpp"

namespace wlpw {

/// A propagator joining boundary edges i and j of the n-gon (1-based, i < j).
///
/// Edge e joins vertex e and vertex e+1 (cyclically), so the propagator's
/// support is {i, i+1, j, j+1}.
struct Propagator {
    int i = 0;
    int j = 0;

    auto operator<=>(const Propagator&) const = default;
};

/// A diagram on n vertices; propagators are kept sorted lexicographically.
///
/// The constructor canonicalizes endpoint order and rejects duplicates,
/// equal endpoints and indices outside [n]. Admissibility is a separate
/// predicate; inadmissible diagrams are representable.
class Diagram {
public:
    Diagram() = default;
    Diagram(int n, std::vector<Propagator> props);

    int n() const { return n_; }
    int k() const { return static_cast<int>(props_.size()); }
    const std::vector<Propagator>& props() const { return props_; }
    const Propagator& prop(int index) const { return props_.at(index); }

    /// Index of p in props(); throws std::invalid_argument if absent.
    int index_of(const Propagator& p) const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram& a, const Diagram& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        return a.props_ <=> b.props_;
    }

private:
    int n_ = 0;
    std::vector<Propagator> props_;
};

/// Successor of vertex v on the n-gon.
int next_vertex(int v, int n);

/// Support of a propagator as a vertex mask.
SubsetMask support_mask(const Propagator& p, int n);

/// Support {i, i+1, j, j+1} of a propagator of W, as sorted vertices.
/// Throws std::invalid_argument if p is not a propagator of W.
std::vector<int> support(const Diagram& w, const Propagator& p);

/// Union of the supports of the propagators selected by `subset` (bit b = row b).
SubsetMask support_of_subset(const Diagram& w, unsigned subset);

/// Whether two propagators strictly interleave. Sharing an edge is not a crossing.
bool crosses(const Propagator& p, const Propagator& q);

enum class AdmissibilityReason { Admissible, TooFewVertices, SmallSupport, Crossing };

struct Admissibility {
    bool admissible = false;
    AdmissibilityReason reason = AdmissibilityReason::Admissible;
    /// Offending propagator subset (bit b = row b); zero when admissible.
    unsigned witness = 0;

    explicit operator bool() const { return admissible; }
};

std::string to_string(AdmissibilityReason r);

/// Checks n >= k+4, |V_Q| >= |Q|+3 for every non-empty Q, and no crossings.
Admissibility is_admissible(const Diagram& w);

/// Non-empty propagator subsets Q with |V_Q| = |Q|+3, as row bit masks in increasing order.
std::vector<unsigned> exact_subdiagrams(const Diagram& w);

/// Diagram equivalence: the diagrams differ only in parts R, R' with equal
/// support, each of which splits into exact blocks with pairwise disjoint supports.
bool equivalent(const Diagram& a, const Diagram& b);

/// All admissible diagrams with k propagators on n vertices, sorted.
std::vector<Diagram> enumerate_admissible(int k, int n);

/// Rotation of every index by r (mod n).
Diagram rotate(const Diagram& w, int r);

/// Rows of W incident to edge e, ordered from vertex e toward vertex e+1.
///
/// The propagator whose other endpoint is reached last when walking
/// counterclockwise from e sits closest to vertex e.
std::vector<int> edge_order(const Diagram& w, int e);

/// Canonical row indices in matrix-row order: walk edges 1..n and number
/// each propagator at its first encounter, using edge_order on shared edges.
std::vector<int> row_order(const Diagram& w);

enum class BoundaryKind { VertexDrop, PropagatorTouch };

/// The diagram obtained by sliding the endpoint of a propagator away from
/// one of its support vertices.
struct BoundaryDiagram {
    Diagram parent;
    int prop = -1;    ///< row index in parent.props()
    int vertex = 0;   ///< support vertex the endpoint moves away from
    int edge = 0;     ///< edge of the moving endpoint
    BoundaryKind kind = BoundaryKind::VertexDrop;
    int touched = -1; ///< row met on the edge for PropagatorTouch, else -1
    bool degenerate = false;
    /// Per-row supports after the move (only VertexDrop shrinks one).
    std::vector<SubsetMask> supports;
    /// Every (row, vertex) label that produces this same diagram.
    std::vector<std::pair<int, int>> labels;

    /// Combinatorial identity: supports plus the touching pair and edge.
    bool same_diagram(const BoundaryDiagram& other) const;
};

/// The boundary diagram for a single (row, vertex) label.
BoundaryDiagram boundary_diagram(const Diagram& w, int prop, int vertex);

/// All boundary diagrams of W, one per distinct combinatorial object, in the
/// order of their first label (rows in canonical order, vertices ascending).
std::vector<BoundaryDiagram> boundary_diagrams(const Diagram& w);

/// Text form "n=6;props=1-3,1-5".
std::string format_diagram(const Diagram& w);
Diagram parse_diagram(const std::string& text);

}  // namespace wlpw
