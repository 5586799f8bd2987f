#include "poteq/modular/twist.hpp"

#include <algorithm>

namespace poteq::modular {

using exactnum::Rational;

std::optional<std::uint64_t> minimal_power_match(const CyclotomicNumber& x, const CyclotomicNumber& y)
{
    const bool xz = x.is_zero();
    const bool yz = y.is_zero();
    if (xz || yz) {
        return xz && yz ? std::optional<std::uint64_t>(1) : std::nullopt;
    }
    auto xr = x.to_rational();
    auto yr = y.to_rational();
    if (xr && yr) {
        if (*xr == *yr) {
            return 1;
        }
        if (*xr == -*yr) {
            return 2;
        }
        return std::nullopt;
    }
    const std::uint64_t roots = exactnum::lcm(exactnum::lcm(x.order(), y.order()), 2);
    for (std::uint64_t n : exactnum::divisors(roots)) {
        if (x.pow(n) == y.pow(n)) {
            return n;
        }
    }
    return std::nullopt;
}

PowerLocus power_locus(const EigenvalueTable& f, const EigenvalueTable& g, const std::vector<std::uint64_t>& checkpoints)
{
    PowerLocus locus;
    std::vector<std::uint64_t> members;
    for (const auto& [p, ap] : f.entries) {
        auto it = g.entries.find(p);
        if (it == g.entries.end()) {
            continue;
        }
        locus.common_primes.push_back(p);
        if (auto n = minimal_power_match(ap, it->second)) {
            locus.exponents.emplace(p, *n);
            members.push_back(p);
        }
    }
    const std::uint64_t cutoff = locus.common_primes.empty() ? 0 : locus.common_primes.back();
    locus.density_report = density::relative_density(
        members, locus.common_primes, checkpoints.empty() ? density::default_checkpoints(cutoff) : checkpoints);
    return locus;
}

bool is_twist_by(const EigenvalueTable& f, const EigenvalueTable& g, const DirichletCharacter& chi,
                 std::uint64_t* verified)
{
    const std::uint64_t q = chi.modulus();
    std::uint64_t checked = 0;
    for (const auto& [p, fp] : f.entries) {
        auto it = g.entries.find(p);
        if (it == g.entries.end() || (q > 1 && p % q == 0)) {
            continue;
        }
        const CyclotomicNumber& gp = it->second;
        const RootOfUnity v = *chi.value(static_cast<std::int64_t>(p % q));
        auto fr = fp.to_rational();
        auto gr = gp.to_rational();
        bool ok = false;
        if (fr && gr) {
            // v * a = b with a, b rational: b = 0 = a, or v = b / a = +-1.
            if (*fr == 0) {
                ok = *gr == 0;
            } else if (*gr == *fr) {
                ok = v == RootOfUnity::one();
            } else if (*gr == -*fr) {
                ok = v == RootOfUnity::minus_one();
            }
        } else {
            ok = CyclotomicNumber(v) * fp == gp;
        }
        if (!ok) {
            return false;
        }
        ++checked;
    }
    if (verified != nullptr) {
        *verified = checked;
    }
    return true;
}

TwistReport find_twist(const EigenvalueTable& f, const EigenvalueTable& g, std::uint64_t max_conductor)
{
    if (max_conductor == 0) {
        throw InvalidArgument("find_twist: max conductor must be at least 1");
    }
    TwistReport report;
    report.search_bound = max_conductor;
    for (const auto& [p, ap] : f.entries) {
        report.primes_checked += g.entries.contains(p) ? 1 : 0;
    }
    for (std::uint64_t q = 1; q <= max_conductor; ++q) {
        for (auto& chi : primitive_characters(q)) {
            std::uint64_t verified = 0;
            if (is_twist_by(f, g, chi, &verified)) {
                report.matches.push_back({std::move(chi), q, verified});
            }
        }
    }
    return report;
}

PipelineResult twist_pipeline(const EigenvalueTable& f, const EigenvalueTable& g, std::uint64_t max_conductor,
                              bool non_cm_assumed)
{
    PipelineResult result;
    result.non_cm_assumed = non_cm_assumed;
    result.locus = power_locus(f, g);
    if (result.locus.common_primes.empty()) {
        throw EmptyIntersection("tables '" + f.label + "' and '" + g.label + "' share no prime");
    }
    // Non-CM: connected monodromy, c1 = 1. CM forms (and their twists) have
    // two components on each side.
    const std::uint64_t components = non_cm_assumed ? 1 : 2;
    result.threshold = density::threshold(components, components);
    if (result.locus.density_report.empirical > result.threshold) {
        result.twist = find_twist(f, g, max_conductor);
        result.anomaly = non_cm_assumed && result.twist->matches.empty() &&
                         result.locus.density_report.empirical >= kDenseLocusLevel;
    }
    return result;
}

}  // namespace poteq::modular
