#include "conlab/formulas.hpp"

#include <numeric>

#include "conlab/error.hpp"

namespace conlab {

std::optional<BundleKind> bundle_kind_from_string(const std::string& s) {
    if (s == "general") return BundleKind::general;
    if (s == "structure") return BundleKind::structure;
    if (s == "canonical") return BundleKind::canonical;
    if (s == "bicanonical") return BundleKind::bicanonical;
    if (s == "anticanonical") return BundleKind::anticanonical;
    return std::nullopt;
}

const char* to_string(BundleKind k) {
    switch (k) {
    case BundleKind::general: return "general";
    case BundleKind::structure: return "structure";
    case BundleKind::canonical: return "canonical";
    case BundleKind::bicanonical: return "bicanonical";
    case BundleKind::anticanonical: return "anticanonical";
    }
    return "general";
}

RRDims rr_dims(const RRQuery& q) {
    if (q.genus < 0)
        throw Error(ErrorKind::BadInput, "genus must be non-negative");
    const long g = q.genus;
    long d = 0;
    switch (q.kind) {
    case BundleKind::general:
        if (!q.degree)
            throw Error(ErrorKind::BadInput, "a general bundle needs a degree");
        d = *q.degree;
        break;
    case BundleKind::structure: d = 0; break;
    case BundleKind::canonical: d = 2 * g - 2; break;
    case BundleKind::bicanonical: d = 4 * g - 4; break;
    case BundleKind::anticanonical: d = 2 - 2 * g; break;
    }

    RRDims out;
    out.degree = d;
    switch (q.kind) {
    case BundleKind::structure:
        out.h0 = 1;
        out.h1 = g;
        return out;
    case BundleKind::canonical:
        out.h0 = g;
        out.h1 = 1;
        return out;
    case BundleKind::bicanonical:
        if (g >= 2) {
            out.h0 = 3 * g - 3;
            out.h1 = 0;
            return out;
        }
        break;
    default:
        break;
    }
    if (d < 0) {
        out.h0 = 0;
        out.h1 = g - 1 - d;
    } else if (d > 2 * g - 2) {
        out.h0 = d - g + 1;
        out.h1 = 0;
    }
    // Otherwise the special range: left undetermined.
    return out;
}

std::optional<long> ribbon_ext_dim(long genus, long deg_i) {
    RRQuery q;
    q.genus = genus;
    q.degree = 2 * genus - 2 - deg_i;
    q.kind = BundleKind::general;
    return rr_dims(q).h0;
}

long ribbon_local_defect(bool split) { return split ? 0 : 1; }

CyclicQuotient cyclic_quotient_gorenstein(long r, long a, long b) {
    if (r < 1)
        throw Error(ErrorKind::BadInput, "quotient order must be at least 1");
    CyclicQuotient q;
    q.r = r;
    q.a = ((a % r) + r) % r;
    q.b = ((b % r) + r) % r;
    q.gorenstein = (1 + q.a + q.b) % r == 0;
    q.claimed_defect = q.gorenstein ? 0 : r - 1;
    q.gcd_ra = std::gcd(q.r, q.a);
    q.gcd_rb = std::gcd(q.r, q.b);
    return q;
}

} // namespace conlab
