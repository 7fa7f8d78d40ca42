#pragma once

#include <optional>
#include <string>

namespace conlab {

enum class BundleKind { general, structure, canonical, bicanonical, anticanonical };

std::optional<BundleKind> bundle_kind_from_string(const std::string& s);
const char* to_string(BundleKind k);

struct RRQuery {
    long genus = 0;
    std::optional<long> degree; // required for BundleKind::general
    BundleKind kind = BundleKind::general;
};

// "undetermined" is a value, never a guess: h0/h1 stay empty outside the
// ranges where Riemann-Roch plus the named special cases decide them.
struct RRDims {
    std::optional<long> h0;
    std::optional<long> h1;
    long degree = 0;
};

RRDims rr_dims(const RRQuery& q);

// h1 of the ribbon ideal sheaf of degree deg_i, via Serre duality:
// h0 of a degree 2g-2-deg_i bundle. Determined exactly when rr_dims is.
std::optional<long> ribbon_ext_dim(long genus, long deg_i);

// Catalog constant: a non-split ribbon carries one extra descent constraint
// at every point; the split ribbon carries none.
long ribbon_local_defect(bool split = false);

struct CyclicQuotient {
    long r = 1, a = 0, b = 0; // weights reduced mod r
    bool gorenstein = false;  // 1 + a + b = 0 (mod r)
    long claimed_defect = 0;  // r - 1 when non-Gorenstein; a recorded claim,
                              // no independent oracle is implemented
    long gcd_ra = 1, gcd_rb = 1; // reported, not enforced
};

CyclicQuotient cyclic_quotient_gorenstein(long r, long a, long b);

} // namespace conlab
