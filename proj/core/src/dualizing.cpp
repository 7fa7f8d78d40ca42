#include "conlab/dualizing.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "conlab/error.hpp"
#include "conlab/matrix.hpp"

namespace conlab {

PolarPart PolarPart::zero(int branch_count) {
    PolarPart p;
    p.branches.resize(static_cast<std::size_t>(branch_count));
    return p;
}

PolarPart PolarPart::parse(const std::string& text, int branch_count) {
    PolarPart p = zero(branch_count);
    std::size_t branch = 0;
    std::istringstream bs(text);
    std::string chunk;
    while (std::getline(bs, chunk, ';')) {
        if (branch >= p.branches.size())
            throw Error(ErrorKind::BadInput, "polar part has more branches than the germ");
        if (chunk != "0" && !chunk.empty()) {
            std::istringstream ts(chunk);
            std::string term;
            while (std::getline(ts, term, ',')) {
                const auto colon = term.find(':');
                if (colon == std::string::npos)
                    throw Error(ErrorKind::BadInput, "polar term '" + term + "' is not exp:coeff");
                int exp = 0;
                try {
                    exp = std::stoi(term.substr(0, colon));
                } catch (const std::exception&) {
                    throw Error(ErrorKind::BadInput, "bad exponent in polar term '" + term + "'");
                }
                if (exp >= 0)
                    throw Error(ErrorKind::BadInput,
                                "polar exponents must be negative, got " + std::to_string(exp));
                const Rational c = Rational::parse(term.substr(colon + 1));
                if (!c.is_zero())
                    p.branches[branch][exp] += c;
            }
        }
        ++branch;
    }
    return p;
}

std::string PolarPart::str() const {
    std::ostringstream os;
    for (std::size_t b = 0; b < branches.size(); ++b) {
        if (b)
            os << ";";
        if (branches[b].empty()) {
            os << "0";
            continue;
        }
        bool first = true;
        // Highest exponent (shallowest pole) first.
        for (auto it = branches[b].rbegin(); it != branches[b].rend(); ++it) {
            if (!first)
                os << ",";
            os << it->first << ":" << it->second.str();
            first = false;
        }
    }
    return os.str();
}

bool PolarPart::is_zero() const {
    for (const auto& b : branches)
        for (const auto& [e, c] : b)
            if (!c.is_zero())
                return false;
    return true;
}

int PolarPart::pole_order(int branch) const {
    int order = 0;
    for (const auto& [e, c] : branches[static_cast<std::size_t>(branch)])
        if (!c.is_zero())
            order = std::max(order, -e);
    return order;
}

std::string DifferentialElement::str() const {
    std::ostringstream os;
    for (std::size_t b = 0; b < branches.size(); ++b) {
        if (b)
            os << ";";
        if (branches[b].empty()) {
            os << "0";
            continue;
        }
        bool first = true;
        for (auto it = branches[b].rbegin(); it != branches[b].rend(); ++it) {
            if (!first)
                os << ",";
            os << it->first << ":" << it->second.str();
            first = false;
        }
    }
    return os.str();
}

std::vector<long> canonical_ideal(const NumericalSemigroup& s, long lo, long hi) {
    if (lo > hi)
        throw Error(ErrorKind::BadInput, "empty window");
    std::vector<long> out;
    const long f = s.frobenius();
    for (long n = lo; n <= hi; ++n)
        if (!s.contains(f - n))
            out.push_back(n);
    return out;
}

std::vector<long> rosenlicht_exponents(const NumericalSemigroup& s, long lo, long hi) {
    if (lo > hi)
        throw Error(ErrorKind::BadInput, "empty window");
    std::vector<long> out;
    for (long n = lo; n <= hi; ++n)
        if (!s.contains(-1 - n))
            out.push_back(n);
    return out;
}

namespace {

// Column layout of the polar window: branch-major, exponents -1 down to -c_i.
struct PolarColumns {
    std::vector<std::pair<int, int>> cols; // (branch, exponent)
    std::map<std::pair<int, int>, std::size_t> index;

    explicit PolarColumns(const CurveGerm& g) {
        for (int b = 0; b < g.branches(); ++b)
            for (int n = -1; n >= -g.conductor_exponents()[static_cast<std::size_t>(b)]; --n) {
                index[{b, n}] = cols.size();
                cols.push_back({b, n});
            }
    }
};

// Residue pairing matrix: rows are the closure basis elements of O, columns
// the polar monomials t^n dt. A function coefficient at exponent -1-n on the
// same branch is exactly what multiplies t^n dt into residue position.
RatMatrix residue_pairing_matrix(const CurveGerm& g, const PolarColumns& pc) {
    const auto& rows = g.closure_rows();
    RatMatrix m(rows.size(), pc.cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < pc.cols.size(); ++j) {
            const auto [b, n] = pc.cols[j];
            m(i, j) = rows[i][g.coord(b, -1 - n)];
        }
    return m;
}

Rational residue_pairing(const CurveGerm& g, const std::vector<Rational>& row,
                         const PolarPart& eta) {
    Rational acc;
    for (int b = 0; b < g.branches(); ++b)
        for (const auto& [n, c] : eta.branches[static_cast<std::size_t>(b)]) {
            if (c.is_zero())
                continue;
            const int fe = -1 - n;
            if (fe >= g.truncation())
                throw Error(ErrorKind::TruncationTooSmall,
                            "pole order exceeds the truncation window of germ '" + g.name() + "'");
            acc += row[g.coord(b, fe)] * c;
        }
    return acc;
}

} // namespace

std::vector<PolarPart> omega_polar_basis(const CurveGerm& g) {
    const PolarColumns pc(g);
    const auto kernel = kernel_basis(residue_pairing_matrix(g, pc));
    std::vector<PolarPart> out;
    out.reserve(kernel.size());
    for (const auto& v : kernel) {
        PolarPart p = PolarPart::zero(g.branches());
        for (std::size_t j = 0; j < pc.cols.size(); ++j)
            if (!v[j].is_zero())
                p.branches[static_cast<std::size_t>(pc.cols[j].first)][pc.cols[j].second] = v[j];
        out.push_back(std::move(p));
    }
    return out;
}

bool conductor_level_test(const CurveGerm& g, const PolarPart& eta) {
    if (static_cast<int>(eta.branches.size()) != g.branches())
        throw Error(ErrorKind::BadInput, "polar part branch count mismatch");
    for (int b = 0; b < g.branches(); ++b)
        if (eta.pole_order(b) > g.conductor_exponents()[static_cast<std::size_t>(b)])
            return false;
    return true;
}

bool descent_test(const CurveGerm& g, const PolarPart& eta) {
    if (static_cast<int>(eta.branches.size()) != g.branches())
        throw Error(ErrorKind::BadInput, "polar part branch count mismatch");
    for (const auto& row : g.closure_rows())
        if (!residue_pairing(g, row, eta).is_zero())
            return false;
    return true;
}

namespace {

// Quotient window for omega/(m*omega): per branch, exponents [-c_b, hi) with
// hi = max(c) + 1. Everything at exponent >= c_b + 1 is conductor-monomial
// times a regular differential, hence in m*omega, so the window sees the
// whole quotient.
struct QuotientWindow {
    int hi;
    std::vector<int> lo;                 // -c_b per branch
    std::vector<std::size_t> offset;     // coordinate origin per branch
    std::size_t width = 0;

    explicit QuotientWindow(const CurveGerm& g) {
        int cmax = 0;
        for (int c : g.conductor_exponents())
            cmax = std::max(cmax, c);
        hi = cmax + 1;
        for (int b = 0; b < g.branches(); ++b) {
            offset.push_back(width);
            lo.push_back(-g.conductor_exponents()[static_cast<std::size_t>(b)]);
            width += static_cast<std::size_t>(hi - lo.back());
        }
    }

    std::size_t coord(int branch, int exp) const {
        return offset[static_cast<std::size_t>(branch)] +
               static_cast<std::size_t>(exp - lo[static_cast<std::size_t>(branch)]);
    }

    bool in_range(int branch, int exp) const {
        return exp >= lo[static_cast<std::size_t>(branch)] && exp < hi;
    }
};

// Laurent representative of an omega element on the quotient window.
using WindowVec = std::vector<Rational>;

WindowVec window_vec_of_polar(const QuotientWindow& w, const PolarPart& p) {
    WindowVec v(w.width);
    for (std::size_t b = 0; b < p.branches.size(); ++b)
        for (const auto& [e, c] : p.branches[b])
            if (w.in_range(static_cast<int>(b), e))
                v[w.coord(static_cast<int>(b), e)] = c;
    return v;
}

// Basis of m = {f in O : constant term zero} on the closure window.
std::vector<std::vector<Rational>> maximal_ideal_rows(const CurveGerm& g) {
    const auto& rows = g.closure_rows();
    // Kernel of the transpose of the constant-coordinate block: combinations
    // of closure rows whose constant terms all vanish.
    RatMatrix ct(static_cast<std::size_t>(g.branches()), rows.size());
    for (int b = 0; b < g.branches(); ++b)
        for (std::size_t i = 0; i < rows.size(); ++i)
            ct(static_cast<std::size_t>(b), i) = rows[i][g.coord(b, 0)];
    std::vector<std::vector<Rational>> out;
    for (const auto& combo : kernel_basis(ct)) {
        std::vector<Rational> row(rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (combo[i].is_zero())
                continue;
            for (std::size_t j = 0; j < row.size(); ++j)
                if (!rows[i][j].is_zero())
                    row[j] += combo[i] * rows[i][j];
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

MinGenerators omega_min_generators(const CurveGerm& g) {
    const QuotientWindow w(g);
    const int n = g.truncation();
    if (w.hi + (w.hi - 1) > n)
        throw Error(ErrorKind::TruncationTooSmall,
                    "truncation window of germ '" + g.name() +
                        "' too small for the generator computation");

    const std::vector<PolarPart> polar = omega_polar_basis(g);

    // Candidates spanning omega on the window: the polar kernel, then the
    // regular monomials branch by branch.
    struct Candidate {
        DifferentialElement elem;
        WindowVec vec;
    };
    std::vector<Candidate> candidates;
    for (const auto& p : polar) {
        DifferentialElement d;
        d.branches = p.branches;
        candidates.push_back({std::move(d), window_vec_of_polar(w, p)});
    }
    for (int b = 0; b < g.branches(); ++b)
        for (int e = 0; e < w.hi; ++e) {
            DifferentialElement d;
            d.branches.resize(static_cast<std::size_t>(g.branches()));
            d.branches[static_cast<std::size_t>(b)][e] = Rational(1);
            WindowVec v(w.width);
            v[w.coord(b, e)] = Rational(1);
            candidates.push_back({std::move(d), std::move(v)});
        }

    // Span of m*omega on the window. Products of a maximal-ideal element with
    // an omega candidate; coefficients below the window top are exact because
    // the closure window is at least twice as wide.
    RowReducer m_omega(w.width);
    std::set<std::vector<std::string>> seen;
    for (const auto& f : maximal_ideal_rows(g)) {
        for (const auto& cand : candidates) {
            WindowVec prod(w.width);
            bool any = false;
            for (int b = 0; b < g.branches(); ++b) {
                for (const auto& [e2, c2] : cand.elem.branches[static_cast<std::size_t>(b)]) {
                    if (c2.is_zero())
                        continue;
                    for (int e1 = 1; e1 < n; ++e1) {
                        const Rational& c1 = f[g.coord(b, e1)];
                        if (c1.is_zero())
                            continue;
                        const int e = e1 + e2;
                        if (w.in_range(b, e)) {
                            prod[w.coord(b, e)] += c1 * c2;
                            any = true;
                        }
                    }
                }
            }
            if (!any)
                continue;
            std::vector<std::string> key;
            key.reserve(prod.size());
            for (const auto& x : prod)
                key.push_back(x.str());
            if (seen.insert(std::move(key)).second)
                m_omega.insert(std::move(prod));
        }
    }

    MinGenerators out;
    RowReducer span(w.width);
    for (const auto& row : m_omega.rows())
        span.insert(row);
    const std::size_t base = span.rank();
    for (const auto& cand : candidates)
        if (span.insert(cand.vec))
            out.generators.push_back(cand.elem);
    out.cm_type = static_cast<long>(span.rank() - base);

    if (g.branches() == 1 && g.semigroup()) {
        for (long f : g.semigroup()->pseudo_frobenius())
            out.semigroup_exponents.push_back(-1 - f);
        std::sort(out.semigroup_exponents.begin(), out.semigroup_exponents.end());
    }
    return out;
}

long cm_type(const CurveGerm& g) { return omega_min_generators(g).cm_type; }

} // namespace conlab
