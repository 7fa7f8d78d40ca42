#pragma once

#include <vector>

namespace conlab {

// Numerical semigroup <a1,...,ar>: the set of non-negative integer
// combinations of coprime positive generators. Immutable after construction;
// the membership table is computed once up to the conductor.
//
// Conventions: F (Frobenius number) is the largest non-member, c = F + 1 the
// conductor; <1> has c = 0, F = -1 and no gaps.
class NumericalSemigroup {
public:
    static NumericalSemigroup from_generators(std::vector<long> generators);

    const std::vector<long>& generators() const { return gens_; }
    long conductor() const { return conductor_; }
    long frobenius() const { return conductor_ - 1; }

    bool contains(long n) const;

    // Positive integers not in the semigroup, ascending.
    std::vector<long> gaps() const;

    // Gap count: the delta invariant of the one-branch germ k[t^{a_i}].
    long delta() const;

    // Least member in each residue class mod m; m must be a nonzero member.
    std::vector<long> apery(long m) const;

    // All f not in the semigroup with f + s a member for every nonzero
    // member s. Returns {-1} for <1> so the type of a smooth point is 1.
    std::vector<long> pseudo_frobenius() const;

    // Cohen-Macaulay type = number of pseudo-Frobenius elements.
    long type() const;

    // n in S  <=>  F - n not in S, for all n in [0, F].
    bool symmetric() const;

private:
    NumericalSemigroup() = default;

    std::vector<long> gens_;
    long conductor_ = 0;
    std::vector<char> member_; // membership on [0, conductor)
};

} // namespace conlab
