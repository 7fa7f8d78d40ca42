#include "conlab/rational.hpp"

#include <ostream>

#include "conlab/error.hpp"

namespace conlab {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw Error(ErrorKind::BadInput, "rational with zero denominator");
    q_ = mpq_class((signed long)num, (signed long)den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    mpz_class n, d;
    if (num.empty() || n.set_str(num, 10) != 0)
        throw Error(ErrorKind::BadInput, "malformed rational '" + text + "'");
    if (den.empty() || d.set_str(den, 10) != 0)
        throw Error(ErrorKind::BadInput, "malformed rational '" + text + "'");
    if (d == 0)
        throw Error(ErrorKind::BadInput, "zero denominator in '" + text + "'");
    mpq_class q(n);
    q /= mpq_class(d);
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error(ErrorKind::BadInput, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace conlab
