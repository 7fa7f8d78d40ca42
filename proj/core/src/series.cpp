#include "conlab/series.hpp"

#include <algorithm>

#include "conlab/error.hpp"

namespace conlab {

TruncatedSeries::TruncatedSeries(int trunc) : trunc_(trunc) {
    if (trunc < 1)
        throw Error(ErrorKind::BadInput, "truncation order must be positive");
    coeff_.resize(static_cast<std::size_t>(trunc));
}

TruncatedSeries TruncatedSeries::monomial(int trunc, int exp, Rational coeff) {
    TruncatedSeries s(trunc);
    if (exp < 0)
        throw Error(ErrorKind::BadInput, "negative exponent in a power series");
    if (exp < trunc)
        s.coeff_[static_cast<std::size_t>(exp)] = std::move(coeff);
    return s;
}

TruncatedSeries TruncatedSeries::from_terms(int trunc, const std::map<int, Rational>& terms) {
    TruncatedSeries s(trunc);
    for (const auto& [e, c] : terms) {
        if (e < 0)
            throw Error(ErrorKind::BadInput, "negative exponent in a power series");
        if (e < trunc)
            s.coeff_[static_cast<std::size_t>(e)] = c;
    }
    return s;
}

const Rational& TruncatedSeries::coeff(int e) const {
    static const Rational zero;
    if (e < 0 || e >= trunc_)
        return zero;
    return coeff_[static_cast<std::size_t>(e)];
}

void TruncatedSeries::set_coeff(int e, Rational c) {
    if (e < 0 || e >= trunc_)
        throw Error(ErrorKind::BadInput, "exponent outside the truncation window");
    coeff_[static_cast<std::size_t>(e)] = std::move(c);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c.is_zero(); });
}

int TruncatedSeries::valuation() const {
    for (int e = 0; e < trunc_; ++e)
        if (!coeff_[static_cast<std::size_t>(e)].is_zero())
            return e;
    return trunc_;
}

TruncatedSeries TruncatedSeries::retruncated(int trunc) const {
    TruncatedSeries s(trunc);
    const int n = std::min(trunc, trunc_);
    for (int e = 0; e < n; ++e)
        s.coeff_[static_cast<std::size_t>(e)] = coeff_[static_cast<std::size_t>(e)];
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries s(std::min(trunc_, o.trunc_));
    for (int e = 0; e < s.trunc_; ++e)
        s.coeff_[static_cast<std::size_t>(e)] = coeff(e) + o.coeff(e);
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries s(std::min(trunc_, o.trunc_));
    for (int e = 0; e < s.trunc_; ++e)
        s.coeff_[static_cast<std::size_t>(e)] = coeff(e) - o.coeff(e);
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries s(std::min(trunc_, o.trunc_));
    for (int i = 0; i < std::min(trunc_, s.trunc_); ++i) {
        const Rational& a = coeff_[static_cast<std::size_t>(i)];
        if (a.is_zero())
            continue;
        const int jmax = std::min(o.trunc_, s.trunc_ - i);
        for (int j = 0; j < jmax; ++j) {
            const Rational& b = o.coeff_[static_cast<std::size_t>(j)];
            if (b.is_zero())
                continue;
            s.coeff_[static_cast<std::size_t>(i + j)] += a * b;
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries s(trunc_);
    if (c.is_zero())
        return s;
    for (int e = 0; e < trunc_; ++e)
        if (!coeff_[static_cast<std::size_t>(e)].is_zero())
            s.coeff_[static_cast<std::size_t>(e)] = coeff_[static_cast<std::size_t>(e)] * c;
    return s;
}

SeriesTuple::SeriesTuple(int branches, int trunc) {
    if (branches < 1)
        throw Error(ErrorKind::BadInput, "a series tuple needs at least one branch");
    b_.assign(static_cast<std::size_t>(branches), TruncatedSeries(trunc));
}

SeriesTuple::SeriesTuple(std::vector<TruncatedSeries> branches) : b_(std::move(branches)) {
    if (b_.empty())
        throw Error(ErrorKind::BadInput, "a series tuple needs at least one branch");
    for (const auto& s : b_)
        if (s.truncation() != b_.front().truncation())
            throw Error(ErrorKind::BadInput, "branches must share one truncation order");
}

int SeriesTuple::truncation() const { return b_.front().truncation(); }

bool SeriesTuple::is_zero() const {
    return std::all_of(b_.begin(), b_.end(), [](const TruncatedSeries& s) { return s.is_zero(); });
}

int SeriesTuple::min_valuation() const {
    int v = truncation();
    for (const auto& s : b_)
        v = std::min(v, s.valuation());
    return v;
}

SeriesTuple SeriesTuple::operator+(const SeriesTuple& o) const {
    if (branches() != o.branches())
        throw Error(ErrorKind::BadInput, "branch count mismatch");
    std::vector<TruncatedSeries> out;
    out.reserve(b_.size());
    for (std::size_t i = 0; i < b_.size(); ++i)
        out.push_back(b_[i] + o.b_[i]);
    return SeriesTuple(std::move(out));
}

SeriesTuple SeriesTuple::operator*(const SeriesTuple& o) const {
    if (branches() != o.branches())
        throw Error(ErrorKind::BadInput, "branch count mismatch");
    std::vector<TruncatedSeries> out;
    out.reserve(b_.size());
    for (std::size_t i = 0; i < b_.size(); ++i)
        out.push_back(b_[i] * o.b_[i]);
    return SeriesTuple(std::move(out));
}

SeriesTuple SeriesTuple::scaled(const Rational& c) const {
    std::vector<TruncatedSeries> out;
    out.reserve(b_.size());
    for (const auto& s : b_)
        out.push_back(s.scaled(c));
    return SeriesTuple(std::move(out));
}

std::vector<Rational> SeriesTuple::to_vector() const {
    const int n = truncation();
    std::vector<Rational> v(static_cast<std::size_t>(branches()) * static_cast<std::size_t>(n));
    for (int b = 0; b < branches(); ++b)
        for (int e = 0; e < n; ++e)
            v[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e)] =
                b_[static_cast<std::size_t>(b)].coeff(e);
    return v;
}

} // namespace conlab
