#pragma once

#include <map>
#include <string>
#include <vector>

#include "conlab/germ.hpp"
#include "conlab/rational.hpp"
#include "conlab/semigroup.hpp"

namespace conlab {

// Polar part of a meromorphic differential on the normalization: one finite
// map {negative exponent -> coefficient} per branch, representing
// sum a_n t^n dt on that branch.
struct PolarPart {
    std::vector<std::map<int, Rational>> branches;

    static PolarPart zero(int branch_count);

    // Text syntax: terms "exp:coeff" comma-separated, branches separated by
    // ';'. Example: "-1:1" is dt/t; "-1:1,-2:3/2;-1:-1" has two branches.
    static PolarPart parse(const std::string& text, int branch_count);

    std::string str() const;
    bool is_zero() const;
    int pole_order(int branch) const; // 0 when the branch has no pole
};

// Differential germ with arbitrary (possibly non-negative) exponents; used
// for module generators of omega.
struct DifferentialElement {
    std::vector<std::map<int, Rational>> branches;
    std::string str() const;
};

// {n in [lo,hi] : F - n not in S} -- the semigroup model of the canonical
// ideal. Contains S and equals it exactly when S is symmetric.
std::vector<long> canonical_ideal(const NumericalSemigroup& s, long lo, long hi);

// Exponent support of the regular differentials t^n dt in the residue
// normalization: {n in [lo,hi] : -1-n not in S}. Equals the canonical ideal
// translated by -conductor.
std::vector<long> rosenlicht_exponents(const NumericalSemigroup& s, long lo, long hi);

// Basis of the polar parts of regular differentials: pole order at most the
// branch conductor exponent, residue pairing against every element of O zero.
std::vector<PolarPart> omega_polar_basis(const CurveGerm& g);

// Weak test: pole order <= conductor exponent on every branch, i.e. the
// conductor annihilates the polar part.
bool conductor_level_test(const CurveGerm& g, const PolarPart& eta);

// Full descent: the residue pairing of eta against every closure basis
// element vanishes, so eta extends to a section of the dualizing module.
bool descent_test(const CurveGerm& g, const PolarPart& eta);

struct MinGenerators {
    std::vector<DifferentialElement> generators;
    long cm_type = 0;
    // One-branch closed form {-1-f : f pseudo-Frobenius}; empty for
    // multi-branch germs or germs without an attached semigroup.
    std::vector<long> semigroup_exponents;
};

// Minimal generators of omega as an O-module, computed as a basis of
// omega/(m*omega) on a finite exponent window.
MinGenerators omega_min_generators(const CurveGerm& g);

// Cohen-Macaulay type: number of minimal generators of omega.
long cm_type(const CurveGerm& g);

} // namespace conlab
