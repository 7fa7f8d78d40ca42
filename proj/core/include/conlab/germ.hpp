#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conlab/matrix.hpp"
#include "conlab/semigroup.hpp"
#include "conlab/series.hpp"

namespace conlab {

// A reduced curve germ O inside its normalization, a product of truncated
// power-series rings (one factor per branch). The germ is given by finitely
// many polynomial parametrizations; delta, the branch conductor exponents and
// the Gorenstein flag are computed at construction and re-checked at a larger
// truncation so unstable windows fail loudly instead of lying.
class CurveGerm {
public:
    // Generator exponents/coefficients per branch; generators are exact
    // polynomials and can be re-truncated at any window.
    using GeneratorSpec = std::vector<std::map<int, Rational>>;

    // One-branch germ k[t^{a_1},...,t^{a_r}] for the given semigroup.
    static CurveGerm from_semigroup(const NumericalSemigroup& s,
                                    std::optional<int> truncation = std::nullopt);

    // node, cusp, tacnode, triple_point, smooth.
    static CurveGerm preset(std::string_view name, std::optional<int> truncation = std::nullopt);
    static const std::vector<std::string>& preset_names();

    // Arbitrary polynomial parametrizations; each generator must have positive
    // valuation on every branch (after removing a shared constant term).
    static CurveGerm from_parametrization(std::string name, int branches,
                                          std::vector<GeneratorSpec> generators,
                                          std::optional<int> truncation = std::nullopt);

    const std::string& name() const { return name_; }
    int branches() const { return branches_; }
    int truncation() const { return trunc_; }
    const std::optional<NumericalSemigroup>& semigroup() const { return semigroup_; }

    // Row-reduced k-basis of the image of O in the truncation window,
    // branch-major coordinates (branch * N + exponent), rows sorted by pivot.
    RatMatrix closure() const;
    const std::vector<std::vector<Rational>>& closure_rows() const { return rows_; }

    long delta() const { return delta_; }
    const std::vector<int>& conductor_exponents() const { return conductor_; }
    long conductor_colength() const;
    bool gorenstein() const; // conductor colength equals 2*delta

    std::size_t coord(int branch, int exp) const {
        return static_cast<std::size_t>(branch) * static_cast<std::size_t>(trunc_) +
               static_cast<std::size_t>(exp);
    }

    // Generators at the working truncation.
    std::vector<SeriesTuple> generator_tuples() const;

private:
    CurveGerm() = default;

    struct Analysis {
        std::vector<std::vector<Rational>> rows;
        long delta = 0;
        std::vector<int> conductor;
    };
    Analysis analyze(int trunc) const;
    void finish(int trunc);

    std::string name_;
    int branches_ = 1;
    int trunc_ = 0;
    std::vector<GeneratorSpec> gens_;
    std::optional<NumericalSemigroup> semigroup_;

    std::vector<std::vector<Rational>> rows_;
    long delta_ = 0;
    std::vector<int> conductor_;
};

} // namespace conlab
