#pragma once

#include <cstdint>
#include <vector>

#include "poteq/exactnum/integer.hpp"

namespace poteq::density {

using exactnum::Rational;

/// A set of primes, all at most `cutoff`.
struct PrimeSet {
    std::vector<std::uint64_t> members;
    std::uint64_t cutoff = 0;

    /// Sorts and validates (every member prime, <= cutoff, no duplicates).
    static PrimeSet make(std::vector<std::uint64_t> members, std::uint64_t cutoff);
};

struct Checkpoint {
    std::uint64_t bound;
    std::uint64_t count;
    std::uint64_t total;
};

struct DensityReport {
    std::uint64_t count = 0;
    std::uint64_t total = 0;
    /// count / total at the final checkpoint (0 when total is 0).
    Rational empirical;
    /// Largest prefix density over the checkpoints with a nonempty prefix,
    /// the finite-scale stand-in for limsup.
    Rational running_sup;
    std::vector<Checkpoint> checkpoints;
};

/// Deciles of the cutoff: {X/10, 2X/10, ..., X}, deduplicated.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t cutoff);

/// Density of `members` inside `universe`, both sorted ascending, with
/// prefix counts at every checkpoint. Members must lie in the universe.
DensityReport relative_density(const std::vector<std::uint64_t>& members,
                               const std::vector<std::uint64_t>& universe,
                               const std::vector<std::uint64_t>& checkpoints);

/// Density of S among all primes; checkpoints ascending, the last equal to S.cutoff.
DensityReport empirical_upper_density(const PrimeSet& s, const std::vector<std::uint64_t>& checkpoints);

/// min(1 - 1/c1, 1 - 1/c2)
Rational threshold(std::uint64_t c1, std::uint64_t c2);

/// d * (delta - (1 - 1/d)). Positive exactly when delta > 1 - 1/d.
Rational lift_density(const Rational& delta, std::uint64_t d);

}  // namespace poteq::density
