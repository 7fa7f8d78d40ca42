#include "conlab/nodal.hpp"

#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "conlab/error.hpp"
#include "conlab/matrix.hpp"

namespace conlab {

NodalCurve::NodalCurve(std::vector<Component> components, std::vector<Node> nodes)
    : components_(std::move(components)), nodes_(std::move(nodes)) {
    validate();
}

void NodalCurve::validate() const {
    if (components_.empty())
        throw Error(ErrorKind::MalformedCurve, "curve has no components");
    std::set<std::string> labels;
    for (const auto& c : components_) {
        if (!labels.insert(c.label).second)
            throw Error(ErrorKind::MalformedCurve, "duplicate component label '" + c.label + "'");
        for (std::size_t i = 0; i < c.points.size(); ++i)
            for (std::size_t j = i + 1; j < c.points.size(); ++j)
                if (c.points[i] == c.points[j])
                    throw Error(ErrorKind::MalformedCurve,
                                "coincident marked points on component '" + c.label + "'");
    }
    std::set<std::pair<int, int>> used;
    for (const auto& [a, b] : nodes_) {
        for (const PointRef& p : {a, b}) {
            if (p.component < 0 || p.component >= static_cast<int>(components_.size()))
                throw Error(ErrorKind::MalformedCurve, "node references a missing component");
            const auto& comp = components_[static_cast<std::size_t>(p.component)];
            if (p.point < 0 || p.point >= static_cast<int>(comp.points.size()))
                throw Error(ErrorKind::MalformedCurve,
                            "node references a missing point on component '" + comp.label + "'");
            if (!used.insert({p.component, p.point}).second)
                throw Error(ErrorKind::MalformedCurve,
                            "marked point reused by more than one node on component '" +
                                comp.label + "'");
        }
        if (a.component == b.component && a.point == b.point)
            throw Error(ErrorKind::MalformedCurve, "node glues a point to itself");
    }
    // Marked points and node slots are in bijection.
    std::size_t total = 0;
    for (const auto& c : components_)
        total += c.points.size();
    if (total != 2 * nodes_.size())
        throw Error(ErrorKind::MalformedCurve,
                    "every marked point must belong to exactly one node");
}

NodalCurve NodalCurve::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedCurve, std::string("bad curve JSON: ") + e.what());
    }
    std::vector<Component> comps;
    std::map<std::string, int> index;
    try {
        for (const auto& c : j.at("components")) {
            Component comp;
            comp.label = c.at("label").get<std::string>();
            for (const auto& p : c.at("points")) {
                try {
                    comp.points.push_back(Rational::parse(p.get<std::string>()));
                } catch (const Error&) {
                    throw Error(ErrorKind::MalformedCurve,
                                "bad point coordinate '" + p.get<std::string>() +
                                    "' (points at infinity are not supported; "
                                    "apply a coordinate change)");
                }
            }
            index[comp.label] = static_cast<int>(comps.size());
            comps.push_back(std::move(comp));
        }
        std::vector<Node> nodes;
        for (const auto& n : j.at("nodes")) {
            if (!n.is_array() || n.size() != 2)
                throw Error(ErrorKind::MalformedCurve, "each node needs exactly two endpoints");
            Node node;
            for (int side = 0; side < 2; ++side) {
                const auto& ep = n.at(side);
                const std::string label = ep.at(0).get<std::string>();
                if (!index.count(label))
                    throw Error(ErrorKind::MalformedCurve,
                                "node references unknown component '" + label + "'");
                PointRef ref;
                ref.component = index.at(label);
                ref.point = ep.at(1).get<int>();
                (side == 0 ? node.first : node.second) = ref;
            }
            nodes.push_back(node);
        }
        return NodalCurve(std::move(comps), std::move(nodes));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedCurve, std::string("bad curve JSON: ") + e.what());
    }
}

NodalCurve NodalCurve::scaled(const Rational& c) const {
    if (c.is_zero())
        throw Error(ErrorKind::BadInput, "scaling factor must be nonzero");
    std::vector<Component> comps = components_;
    for (auto& comp : comps)
        for (auto& p : comp.points)
            p *= c;
    return NodalCurve(std::move(comps), nodes_);
}

DualGraphInfo dual_graph(const NodalCurve& x) {
    DualGraphInfo g;
    g.vertices = static_cast<long>(x.components().size());
    g.edges = static_cast<long>(x.nodes().size());
    std::vector<int> parent(x.components().size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (const auto& [a, b] : x.nodes())
        parent[static_cast<std::size_t>(find(a.component))] = find(b.component);
    std::set<int> roots;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v)
        roots.insert(find(v));
    g.connected_components = static_cast<long>(roots.size());
    g.connected = g.connected_components == 1;
    g.cycle_rank = g.edges - g.vertices + g.connected_components;
    return g;
}

namespace {

// Rows: one balance equation per node, one residue-theorem equation per
// component. Columns: one residue unknown per (node, side).
RatMatrix constraint_matrix(const NodalCurve& x) {
    const std::size_t unknowns = 2 * x.nodes().size();
    RatMatrix m(x.nodes().size() + x.components().size(), unknowns);
    for (std::size_t k = 0; k < x.nodes().size(); ++k) {
        m(k, 2 * k) = Rational(1);
        m(k, 2 * k + 1) = Rational(1);
    }
    for (std::size_t k = 0; k < x.nodes().size(); ++k) {
        const auto& [a, b] = x.nodes()[k];
        m(x.nodes().size() + static_cast<std::size_t>(a.component), 2 * k) += Rational(1);
        m(x.nodes().size() + static_cast<std::size_t>(b.component), 2 * k + 1) += Rational(1);
    }
    return m;
}

} // namespace

long nodal_h0_omega(const NodalCurve& x) {
    return static_cast<long>(kernel_basis(constraint_matrix(x)).size());
}

long residue_rank(const NodalCurve& x, const std::vector<NodeSelection>& selection) {
    for (const auto& s : selection) {
        if (s.node < 0 || s.node >= static_cast<int>(x.nodes().size()))
            throw Error(ErrorKind::MalformedCurve, "selection references a missing node");
        if (s.side != 0 && s.side != 1)
            throw Error(ErrorKind::MalformedCurve, "node preimage side must be 0 or 1");
    }
    const auto solutions = kernel_basis(constraint_matrix(x));
    RatMatrix m(selection.size(), solutions.size());
    for (std::size_t i = 0; i < selection.size(); ++i) {
        const std::size_t col =
            2 * static_cast<std::size_t>(selection[i].node) + static_cast<std::size_t>(selection[i].side);
        for (std::size_t k = 0; k < solutions.size(); ++k)
            m(i, k) = solutions[k][col];
    }
    return static_cast<long>(rank(m));
}

SequenceBookkeeping sequence_bookkeeping(long genus, long delta) {
    if (genus < 0 || delta < 0)
        throw Error(ErrorKind::BadInput, "genus and delta must be non-negative");
    SequenceBookkeeping s;
    s.claimed_res_rank = delta - 1;
    s.claimed_h0 = genus - delta + 1;
    s.res_rank_negative = s.claimed_res_rank < 0;
    s.h0_negative = s.claimed_h0 < 0;
    return s;
}

} // namespace conlab
