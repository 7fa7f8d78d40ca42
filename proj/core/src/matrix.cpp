#include "conlab/matrix.hpp"

#include <cstddef>
#include <utility>

#include "conlab/error.hpp"

namespace conlab {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorKind::BadInput, "ragged matrix initializer");
        for (const auto& x : r)
            data_.push_back(x);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw Error(ErrorKind::BadInput, "ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

std::vector<Rational> RatMatrix::row(std::size_t i) const {
    std::vector<Rational> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r[j] = at(i, j);
    return r;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_)
        throw Error(ErrorKind::BadInput, "vector length does not match matrix columns");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

namespace {

// Clears denominators row by row; row scaling preserves rank, row space and
// kernel, so all three queries can run on the integer matrix.
std::vector<std::vector<mpz_class>> to_integer_rows(const RatMatrix& m) {
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m.at(i, j).numerator() * (l / m.at(i, j).denominator());
    }
    return rows;
}

// Fraction-free elimination with rank profile. Divisions by the previous
// pivot are exact (Sylvester identity); a tdiv here would corrupt results,
// which the minor-enumeration oracle test would catch.
struct BareissResult {
    std::vector<std::vector<mpz_class>> ref;
    std::vector<std::size_t> pivot_cols;
};

BareissResult bareiss_ref(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
    BareissResult out;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.ref = std::move(a);
    return out;
}

} // namespace

std::size_t rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return bareiss_ref(to_integer_rows(m), m.cols()).pivot_cols.size();
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<std::vector<Rational>> basis;
    if (n == 0)
        return basis;
    BareissResult ref = m.rows() == 0 ? BareissResult{} : bareiss_ref(to_integer_rows(m), n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : ref.pivot_cols)
        is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(n);
        v[f] = Rational(1);
        // Back-substitute through the pivot rows, bottom-up.
        for (std::size_t k = ref.pivot_cols.size(); k-- > 0;) {
            const std::size_t p = ref.pivot_cols[k];
            Rational acc;
            for (std::size_t j = p + 1; j < n; ++j)
                if (ref.ref[k][j] != 0 && !v[j].is_zero())
                    acc += Rational(mpq_class(ref.ref[k][j])) * v[j];
            v[p] = -acc / Rational(mpq_class(ref.ref[k][p]));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool row_space_membership(const RatMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.cols())
        throw Error(ErrorKind::BadInput, "vector length does not match matrix columns");
    RowReducer red(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        red.insert(m.row(i));
    return red.contains(v);
}

std::vector<Rational> RowReducer::reduce(std::vector<Rational> v) const {
    for (std::size_t j = 0; j < width_; ++j) {
        if (v[j].is_zero())
            continue;
        auto it = pivot_of_col_.find(j);
        if (it == pivot_of_col_.end())
            continue; // no pivot in this column; coordinate survives
        const auto& row = rows_[it->second];
        const Rational factor = v[j];
        for (std::size_t k = j; k < width_; ++k)
            if (!row[k].is_zero())
                v[k] -= factor * row[k];
    }
    return v;
}

bool RowReducer::insert(std::vector<Rational> v) {
    // Full reduction (not just until the first pivot gap) keeps the basis in
    // reduced echelon form.
    for (std::size_t j = 0; j < width_; ++j) {
        if (v[j].is_zero())
            continue;
        auto it = pivot_of_col_.find(j);
        if (it == pivot_of_col_.end())
            continue;
        const auto& row = rows_[it->second];
        const Rational factor = v[j];
        for (std::size_t k = j; k < width_; ++k)
            if (!row[k].is_zero())
                v[k] -= factor * row[k];
    }
    std::size_t lead = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (!v[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead == width_)
        return false;
    const Rational inv = Rational(1) / v[lead];
    for (std::size_t k = lead; k < width_; ++k)
        if (!v[k].is_zero())
            v[k] *= inv;
    // Eliminate the new pivot column from existing rows.
    for (auto& row : rows_) {
        if (row[lead].is_zero())
            continue;
        const Rational factor = row[lead];
        for (std::size_t k = lead; k < width_; ++k)
            if (!v[k].is_zero())
                row[k] -= factor * v[k];
    }
    pivot_of_col_[lead] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
}

bool RowReducer::contains(const std::vector<Rational>& v) const {
    std::vector<Rational> r = reduce(v);
    for (std::size_t j = 0; j < width_; ++j)
        if (!r[j].is_zero())
            return false;
    return true;
}

std::vector<std::vector<Rational>> RowReducer::sorted_rows() const {
    std::vector<std::vector<Rational>> out;
    out.reserve(rows_.size());
    for (const auto& [col, idx] : pivot_of_col_)
        out.push_back(rows_[idx]);
    return out;
}

} // namespace conlab
