#include "conlab/germ.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "conlab/error.hpp"

namespace conlab {

namespace {

std::string semigroup_name(const NumericalSemigroup& s) {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < s.generators().size(); ++i)
        os << (i ? "," : "") << s.generators()[i];
    os << ">";
    return os.str();
}

} // namespace

CurveGerm CurveGerm::from_semigroup(const NumericalSemigroup& s, std::optional<int> truncation) {
    CurveGerm g;
    g.name_ = semigroup_name(s);
    g.branches_ = 1;
    g.semigroup_ = s;
    for (long a : s.generators())
        g.gens_.push_back({{{static_cast<int>(a), Rational(1)}}});
    g.finish(truncation.value_or(static_cast<int>(2 * s.conductor()) + 6));
    return g;
}

const std::vector<std::string>& CurveGerm::preset_names() {
    static const std::vector<std::string> names = {"node", "cusp", "tacnode", "triple_point",
                                                   "smooth"};
    return names;
}

CurveGerm CurveGerm::preset(std::string_view name, std::optional<int> truncation) {
    CurveGerm g;
    g.name_ = std::string(name);
    const Rational one(1);
    if (name == "node") {
        g.branches_ = 2;
        g.gens_ = {{{{1, one}}, {}}, {{}, {{1, one}}}}; // x=(u,0), y=(0,v)
        g.finish(truncation.value_or(10));
    } else if (name == "cusp") {
        g.branches_ = 1;
        g.gens_ = {{{{2, one}}}, {{{3, one}}}}; // t^2, t^3
        g.finish(truncation.value_or(10));
    } else if (name == "tacnode") {
        g.branches_ = 2;
        g.gens_ = {{{{1, one}}, {{1, one}}},          // x=(t,s)
                   {{{2, one}}, {{2, Rational(-1)}}}}; // y=(t^2,-s^2)
        g.finish(truncation.value_or(14));
    } else if (name == "triple_point") {
        g.branches_ = 3;
        g.gens_ = {{{{1, one}}, {}, {}}, {{}, {{1, one}}, {}}, {{}, {}, {{1, one}}}};
        g.finish(truncation.value_or(12));
    } else if (name == "smooth") {
        g.branches_ = 1;
        g.gens_ = {{{{1, one}}}};
        g.finish(truncation.value_or(6));
    } else {
        throw Error(ErrorKind::UnknownPreset, "unknown germ preset '" + std::string(name) + "'");
    }
    return g;
}

CurveGerm CurveGerm::from_parametrization(std::string name, int branches,
                                          std::vector<GeneratorSpec> generators,
                                          std::optional<int> truncation) {
    if (branches < 1)
        throw Error(ErrorKind::InvalidParametrization, "need at least one branch");
    if (generators.empty())
        throw Error(ErrorKind::InvalidParametrization, "need at least one generator");
    for (auto& gen : generators) {
        if (static_cast<int>(gen.size()) != branches)
            throw Error(ErrorKind::InvalidParametrization,
                        "every generator needs one series per branch");
        // Remove a shared constant: constants are already in O.
        const Rational c0 = gen.front().count(0) ? gen.front().at(0) : Rational(0);
        for (auto& b : gen) {
            const Rational c = b.count(0) ? b.at(0) : Rational(0);
            if (c != c0)
                throw Error(ErrorKind::InvalidParametrization,
                            "constant terms must agree across branches");
            b.erase(0);
        }
    }
    CurveGerm g;
    g.name_ = std::move(name);
    g.branches_ = branches;
    g.gens_ = std::move(generators);
    g.finish(truncation.value_or(24));
    return g;
}

std::vector<SeriesTuple> CurveGerm::generator_tuples() const {
    std::vector<SeriesTuple> out;
    out.reserve(gens_.size());
    for (const auto& gen : gens_) {
        std::vector<TruncatedSeries> parts;
        parts.reserve(gen.size());
        for (const auto& terms : gen)
            parts.push_back(TruncatedSeries::from_terms(trunc_, terms));
        out.push_back(SeriesTuple(std::move(parts)));
    }
    return out;
}

CurveGerm::Analysis CurveGerm::analyze(int trunc) const {
    const std::size_t width =
        static_cast<std::size_t>(branches_) * static_cast<std::size_t>(trunc);

    std::vector<SeriesTuple> gens;
    for (const auto& gen : gens_) {
        std::vector<TruncatedSeries> parts;
        for (const auto& terms : gen)
            parts.push_back(TruncatedSeries::from_terms(trunc, terms));
        gens.push_back(SeriesTuple(std::move(parts)));
    }

    // Subalgebra closure: span of all monomials in the generators, seeded by
    // the diagonal constant. Every vector that enlarges the span is multiplied
    // by each generator in turn, so the final span is multiplication-closed.
    RowReducer red(width);
    SeriesTuple unit(branches_, trunc);
    for (int b = 0; b < branches_; ++b)
        unit.branch(b).set_coeff(0, Rational(1));
    red.insert(unit.to_vector());
    std::deque<SeriesTuple> queue{unit};
    while (!queue.empty()) {
        const SeriesTuple s = std::move(queue.front());
        queue.pop_front();
        for (const auto& gen : gens) {
            SeriesTuple p = s * gen;
            if (p.is_zero())
                continue;
            if (red.insert(p.to_vector()))
                queue.push_back(p);
        }
    }

    Analysis a;
    a.rows = red.sorted_rows();
    a.delta = static_cast<long>(width) - static_cast<long>(red.rank());

    // Branch conductor exponent: least c such that every pure monomial of the
    // branch at exponent >= c lies in the closure.
    a.conductor.resize(static_cast<std::size_t>(branches_), 0);
    for (int b = 0; b < branches_; ++b) {
        int c = trunc;
        while (c > 0) {
            std::vector<Rational> e(width);
            e[static_cast<std::size_t>(b) * static_cast<std::size_t>(trunc) +
              static_cast<std::size_t>(c - 1)] = Rational(1);
            if (!red.contains(e))
                break;
            --c;
        }
        a.conductor[static_cast<std::size_t>(b)] = c;
    }
    return a;
}

void CurveGerm::finish(int trunc) {
    if (trunc < 2)
        throw Error(ErrorKind::TruncationTooSmall, "truncation order " + std::to_string(trunc) +
                                                       " is too small for germ '" + name_ + "'");
    for (const auto& gen : gens_)
        for (const auto& b : gen)
            for (const auto& [e, c] : b)
                if (e <= 0 && !c.is_zero())
                    throw Error(ErrorKind::InvalidParametrization,
                                "generators must have positive valuation on every branch");

    Analysis now = analyze(trunc);
    Analysis next = analyze(trunc + 2);
    if (now.delta != next.delta || now.conductor != next.conductor)
        throw Error(ErrorKind::TruncationTooSmall,
                    "invariants of germ '" + name_ + "' not stable at truncation " +
                        std::to_string(trunc) + "; raise the truncation");

    trunc_ = trunc;
    rows_ = std::move(now.rows);
    delta_ = now.delta;
    conductor_ = std::move(now.conductor);
}

RatMatrix CurveGerm::closure() const { return RatMatrix::from_rows(rows_); }

long CurveGerm::conductor_colength() const {
    return std::accumulate(conductor_.begin(), conductor_.end(), 0L);
}

bool CurveGerm::gorenstein() const { return conductor_colength() == 2 * delta_; }

} // namespace conlab
