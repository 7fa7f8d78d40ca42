#pragma once

#include <map>
#include <vector>

#include "conlab/rational.hpp"

namespace conlab {

// Truncated power series: coefficients on exponents [0, N), everything at or
// above N discarded. Ring operations take the minimum truncation order of the
// operands, so precision never silently improves.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int trunc);
    static TruncatedSeries monomial(int trunc, int exp, Rational coeff = Rational(1));
    static TruncatedSeries from_terms(int trunc, const std::map<int, Rational>& terms);

    int truncation() const { return trunc_; }
    const Rational& coeff(int e) const;
    void set_coeff(int e, Rational c);

    bool is_zero() const;
    int valuation() const; // trunc() when zero

    TruncatedSeries retruncated(int trunc) const; // keeps known coefficients only

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rational& c) const;

private:
    int trunc_;
    std::vector<Rational> coeff_;
};

// One series per branch of the normalization; all at the same truncation.
class SeriesTuple {
public:
    SeriesTuple(int branches, int trunc);
    explicit SeriesTuple(std::vector<TruncatedSeries> branches);

    int branches() const { return static_cast<int>(b_.size()); }
    int truncation() const;
    const TruncatedSeries& branch(int i) const { return b_[static_cast<std::size_t>(i)]; }
    TruncatedSeries& branch(int i) { return b_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    // Smallest branch valuation; truncation order when the tuple is zero.
    int min_valuation() const;

    SeriesTuple operator+(const SeriesTuple& o) const;
    SeriesTuple operator*(const SeriesTuple& o) const;
    SeriesTuple scaled(const Rational& c) const;

    // Window coordinates: branch-major, coordinate = branch * N + exponent.
    std::vector<Rational> to_vector() const;

private:
    std::vector<TruncatedSeries> b_;
};

} // namespace conlab
