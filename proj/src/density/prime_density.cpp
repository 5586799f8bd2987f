#include "poteq/density/prime_density.hpp"

#include <algorithm>
#include <string>

#include "poteq/error.hpp"

namespace poteq::density {

PrimeSet PrimeSet::make(std::vector<std::uint64_t> members, std::uint64_t cutoff)
{
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw InvalidArgument("prime set has duplicate members");
    }
    for (std::uint64_t p : members) {
        if (p > cutoff) {
            throw InvalidArgument("prime " + std::to_string(p) + " exceeds the cutoff " + std::to_string(cutoff));
        }
        if (!exactnum::is_prime(p)) {
            throw InvalidArgument(std::to_string(p) + " is not prime");
        }
    }
    return {std::move(members), cutoff};
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t cutoff)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 1; i <= 10; ++i) {
        const std::uint64_t c = cutoff / 10 * i + (cutoff % 10) * i / 10;
        if (c > 0 && (out.empty() || out.back() != c)) {
            out.push_back(c);
        }
    }
    if (out.empty() || out.back() != cutoff) {
        out.push_back(cutoff);
    }
    return out;
}

DensityReport relative_density(const std::vector<std::uint64_t>& members,
                               const std::vector<std::uint64_t>& universe,
                               const std::vector<std::uint64_t>& checkpoints)
{
    if (checkpoints.empty()) {
        throw InvalidArgument("at least one checkpoint is required");
    }
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
        throw InvalidArgument("checkpoints must be ascending");
    }
    if (!std::includes(universe.begin(), universe.end(), members.begin(), members.end())) {
        throw InvalidArgument("members are not contained in the universe");
    }
    DensityReport report;
    bool have_sup = false;
    for (std::uint64_t bound : checkpoints) {
        const auto count = static_cast<std::uint64_t>(
            std::upper_bound(members.begin(), members.end(), bound) - members.begin());
        const auto total = static_cast<std::uint64_t>(
            std::upper_bound(universe.begin(), universe.end(), bound) - universe.begin());
        report.checkpoints.push_back({bound, count, total});
        if (total == 0) {
            continue;
        }
        Rational d(count, total);
        d.canonicalize();
        if (!have_sup || d > report.running_sup) {
            report.running_sup = d;
            have_sup = true;
        }
    }
    const Checkpoint& last = report.checkpoints.back();
    report.count = last.count;
    report.total = last.total;
    if (last.total > 0) {
        report.empirical = Rational(last.count, last.total);
        report.empirical.canonicalize();
    }
    return report;
}

DensityReport empirical_upper_density(const PrimeSet& s, const std::vector<std::uint64_t>& checkpoints)
{
    if (checkpoints.empty() || checkpoints.back() != s.cutoff) {
        throw InvalidArgument("the last checkpoint must equal the cutoff " + std::to_string(s.cutoff));
    }
    return relative_density(s.members, exactnum::primes_up_to(s.cutoff), checkpoints);
}

Rational threshold(std::uint64_t c1, std::uint64_t c2)
{
    if (c1 == 0 || c2 == 0) {
        throw InvalidArgument("component counts must be positive");
    }
    const Rational t1 = 1 - Rational(1, c1);
    const Rational t2 = 1 - Rational(1, c2);
    return t1 < t2 ? t1 : t2;
}

Rational lift_density(const Rational& delta, std::uint64_t d)
{
    if (d == 0) {
        throw InvalidArgument("extension degree must be positive");
    }
    if (delta < 0 || delta > 1) {
        throw InvalidArgument("density must lie in [0, 1]");
    }
    Rational out = Rational(d) * (delta - (1 - Rational(1, d)));
    out.canonicalize();
    return out;
}

}  // namespace poteq::density
