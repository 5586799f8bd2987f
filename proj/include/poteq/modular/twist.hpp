#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "poteq/density/prime_density.hpp"
#include "poteq/error.hpp"
#include "poteq/modular/character.hpp"
#include "poteq/modular/table.hpp"

namespace poteq::modular {

/// Primes where some power of a_p(f) equals the same power of a_p(g).
struct PowerLocus {
    /// p -> smallest n_p >= 1 with a_p(f)^n_p = a_p(g)^n_p.
    std::map<std::uint64_t, std::uint64_t> exponents;
    /// Primes present in both tables.
    std::vector<std::uint64_t> common_primes;
    /// Locus size relative to common_primes.
    density::DensityReport density_report;
};

/// Smallest n >= 1 with x^n = y^n, if any. For rationals this is 1 when
/// x = y, 2 when x = -y != y, and nothing otherwise; a zero only matches a
/// zero. In Q(zeta_m) the ratio can only be a root of unity of order
/// dividing lcm(m, 2), so those divisors are tried.
std::optional<std::uint64_t> minimal_power_match(const CyclotomicNumber& x, const CyclotomicNumber& y);

/// Checkpoints default to deciles of the largest common prime.
PowerLocus power_locus(const EigenvalueTable& f, const EigenvalueTable& g,
                       const std::vector<std::uint64_t>& checkpoints = {});

struct TwistMatch {
    DirichletCharacter character;
    std::uint64_t conductor;
    /// Common primes coprime to the conductor, all verified.
    std::uint64_t primes_verified;
};

struct TwistReport {
    std::vector<TwistMatch> matches;
    /// Number of primes present in both tables.
    std::uint64_t primes_checked = 0;
    /// Largest conductor searched.
    std::uint64_t search_bound = 0;
};

/// Whether a_p(g) = chi(p) a_p(f) at every common prime coprime to the modulus of chi.
bool is_twist_by(const EigenvalueTable& f, const EigenvalueTable& g, const DirichletCharacter& chi,
                 std::uint64_t* verified = nullptr);

/// Every primitive character of conductor <= max_conductor relating the
/// two tables, ordered by conductor then by exponent vector.
TwistReport find_twist(const EigenvalueTable& f, const EigenvalueTable& g, std::uint64_t max_conductor);

class EmptyIntersection : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Locus density at or above this, with no character found, is flagged.
inline const density::Rational kDenseLocusLevel{1, 2};

struct PipelineResult {
    PowerLocus locus;
    /// min(1 - 1/c1, 1 - 1/c2) with c1 = 1 for non-CM input: zero.
    density::Rational threshold;
    /// Present when the locus density exceeded the threshold.
    std::optional<TwistReport> twist;
    /// Declared, not checked: the first table comes from a non-CM form.
    bool non_cm_assumed = true;
    /// Dense locus, non-CM declared, yet no character found.
    bool anomaly = false;
};

/// power_locus, then find_twist when the locus density is above the
/// threshold. Throws EmptyIntersection when the tables share no prime.
PipelineResult twist_pipeline(const EigenvalueTable& f, const EigenvalueTable& g, std::uint64_t max_conductor,
                              bool non_cm_assumed = true);

}  // namespace poteq::modular
