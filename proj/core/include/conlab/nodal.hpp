#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conlab/rational.hpp"

namespace conlab {

// Projective nodal curve assembled from rational components. Differentials on
// a component are sums of dz/(z - p) over its marked points, so everything
// reduces to exact linear algebra on residue vectors.
class NodalCurve {
public:
    struct Component {
        std::string label;
        std::vector<Rational> points;
    };
    struct PointRef {
        int component = 0;
        int point = 0;
    };
    using Node = std::pair<PointRef, PointRef>;

    NodalCurve(std::vector<Component> components, std::vector<Node> nodes);

    // JSON: {"components":[{"label":..,"points":["p/q",..]},..],
    //        "nodes":[[["label",idx],["label",idx]],..]}
    static NodalCurve from_json(const std::string& text);

    const std::vector<Component>& components() const { return components_; }
    const std::vector<Node>& nodes() const { return nodes_; }

    // Scales every marked point by a nonzero rational (test hook; h0 and all
    // residue ranks are invariant).
    NodalCurve scaled(const Rational& c) const;

private:
    void validate() const;

    std::vector<Component> components_;
    std::vector<Node> nodes_;
};

struct DualGraphInfo {
    long vertices = 0;
    long edges = 0;
    long connected_components = 0;
    bool connected = false;
    long cycle_rank = 0; // E - V + components
};

DualGraphInfo dual_graph(const NodalCurve& x);

// Dimension of the space of balanced differentials: per-node residue
// cancellation plus the residue theorem on every component.
long nodal_h0_omega(const NodalCurve& x);

// One chosen preimage per selected node.
struct NodeSelection {
    int node = 0;
    int side = 0; // 0 or 1
};

// Rank of the residue-at-chosen-preimage functionals restricted to the
// solution space of nodal_h0_omega.
long residue_rank(const NodalCurve& x, const std::vector<NodeSelection>& selection);

// Raw arithmetic of the claimed exact-sequence dimensions: rank delta - 1 and
// h0 = g - delta + 1, reported verbatim with sign flags instead of clamping.
struct SequenceBookkeeping {
    long claimed_res_rank = 0;
    long claimed_h0 = 0;
    bool res_rank_negative = false;
    bool h0_negative = false;
};

SequenceBookkeeping sequence_bookkeeping(long genus, long delta);

} // namespace conlab
