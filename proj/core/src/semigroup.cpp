#include "conlab/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "conlab/error.hpp"

namespace conlab {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long> generators) {
    if (generators.empty())
        throw Error(ErrorKind::EmptyGenerators, "a numerical semigroup needs at least one generator");
    for (long g : generators)
        if (g < 1)
            throw Error(ErrorKind::BadInput, "generator " + std::to_string(g) + " is not positive");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    long g = 0;
    for (long a : generators)
        g = std::gcd(g, a);
    if (g != 1)
        throw Error(ErrorKind::NotCoprime, "generators have gcd " + std::to_string(g));

    NumericalSemigroup s;
    s.gens_ = std::move(generators);

    const long amin = s.gens_.front();
    const long amax = s.gens_.back();

    // Coin-problem closure, growing the table until a run of amin consecutive
    // members appears; from there every larger integer is reachable.
    std::vector<char> table{1};
    long bound = (amin - 1) * (amax - 1) + amin + 2;
    long run_end = -1; // first index past a full run of amin members
    while (run_end < 0) {
        const long old = static_cast<long>(table.size());
        table.resize(static_cast<std::size_t>(bound), 0);
        for (long n = std::max<long>(old, 1); n < bound; ++n)
            for (long a : s.gens_)
                if (n >= a && table[static_cast<std::size_t>(n - a)]) {
                    table[static_cast<std::size_t>(n)] = 1;
                    break;
                }
        long run = 0;
        for (long n = 0; n < bound; ++n) {
            run = table[static_cast<std::size_t>(n)] ? run + 1 : 0;
            if (run == amin) {
                run_end = n + 1;
                break;
            }
        }
        bound *= 2;
    }

    long c = run_end - amin;
    s.conductor_ = c;
    s.member_.assign(table.begin(), table.begin() + c);
    return s;
}

bool NumericalSemigroup::contains(long n) const {
    if (n < 0)
        return false;
    if (n >= conductor_)
        return true;
    return member_[static_cast<std::size_t>(n)] != 0;
}

std::vector<long> NumericalSemigroup::gaps() const {
    std::vector<long> out;
    for (long n = 1; n < conductor_; ++n)
        if (!contains(n))
            out.push_back(n);
    return out;
}

long NumericalSemigroup::delta() const {
    long d = 0;
    for (long n = 1; n < conductor_; ++n)
        if (!contains(n))
            ++d;
    return d;
}

std::vector<long> NumericalSemigroup::apery(long m) const {
    if (m <= 0 || !contains(m))
        throw Error(ErrorKind::NotAMember, std::to_string(m) + " is not a nonzero member");
    std::vector<long> out(static_cast<std::size_t>(m), -1);
    long found = 0;
    for (long n = 0; found < m; ++n)
        if (contains(n) && out[static_cast<std::size_t>(n % m)] < 0) {
            out[static_cast<std::size_t>(n % m)] = n;
            ++found;
        }
    return out;
}

std::vector<long> NumericalSemigroup::pseudo_frobenius() const {
    if (conductor_ == 0)
        return {-1};
    std::vector<long> out;
    const long f_max = frobenius();
    for (long f = 1; f <= f_max; ++f) {
        if (contains(f))
            continue;
        bool ok = true;
        // Members beyond c + F shift f past the conductor automatically.
        for (long s = 1; s <= conductor_ + f_max && ok; ++s)
            if (contains(s) && !contains(f + s))
                ok = false;
        if (ok)
            out.push_back(f);
    }
    return out;
}

long NumericalSemigroup::type() const {
    return static_cast<long>(pseudo_frobenius().size());
}

bool NumericalSemigroup::symmetric() const {
    const long f = frobenius();
    for (long n = 0; n <= f; ++n)
        if (contains(n) == contains(f - n))
            return false;
    return true;
}

} // namespace conlab
