#include "poteq/localfield/exponent.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "poteq/exactnum/polynomial.hpp"

namespace poteq::localfield {

using exactnum::integer_pow;
using exactnum::RationalPolynomial;

LocalFieldSpec LocalFieldSpec::make(std::uint64_t ell, std::uint64_t degree)
{
    if (!exactnum::is_prime(ell)) {
        throw InvalidArgument("ell = " + std::to_string(ell) + " is not prime");
    }
    if (degree == 0) {
        throw InvalidArgument("local field degree must be at least 1");
    }
    return {ell, degree};
}

namespace {

// phi(ell^a), with phi(ell^0) = 1; saturates instead of overflowing.
std::uint64_t phi_prime_power(std::uint64_t ell, std::uint64_t a)
{
    if (a == 0) {
        return 1;
    }
    std::uint64_t v = ell - 1;
    for (std::uint64_t i = 1; i < a; ++i) {
        if (v > std::numeric_limits<std::uint64_t>::max() / ell) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        v *= ell;
    }
    return v;
}

void check_degree_bound(std::uint64_t degree_bound)
{
    if (degree_bound == 0) {
        throw InvalidArgument("degree bound must be at least 1");
    }
    if (degree_bound > kMaxDegreeBound) {
        throw InvalidArgument("degree bound " + std::to_string(degree_bound) + " exceeds the supported maximum " +
                              std::to_string(kMaxDegreeBound));
    }
}

}  // namespace

std::vector<RootWitness> achievable_fields(std::uint64_t ell, std::uint64_t degree_bound)
{
    check_degree_bound(degree_bound);
    std::vector<RootWitness> out;
    for (std::uint64_t f = 1; f <= degree_bound; ++f) {
        for (std::uint64_t a = 0;; ++a) {
            const std::uint64_t phi = phi_prime_power(ell, a);
            if (phi > degree_bound / f) {
                break;
            }
            out.push_back({f, a});
        }
    }
    return out;
}

Integer root_group_order(std::uint64_t ell, const RootWitness& w)
{
    return (integer_pow(ell, w.residue_degree) - 1) * integer_pow(ell, w.ell_power);
}

MaxRoots max_roots_of_unity(std::uint64_t ell, std::uint64_t degree_bound)
{
    if (!exactnum::is_prime(ell)) {
        throw InvalidArgument("ell = " + std::to_string(ell) + " is not prime");
    }
    MaxRoots best{Integer(0), {}};
    for (const RootWitness& w : achievable_fields(ell, degree_bound)) {
        Integer order = root_group_order(ell, w);
        if (order > best.m0) {
            best = {std::move(order), w};
        }
    }
    return best;
}

ExponentReport uniform_exponent(std::uint64_t n, const LocalFieldSpec& field)
{
    if (n == 0) {
        throw InvalidArgument("n must be at least 1");
    }
    const LocalFieldSpec checked = LocalFieldSpec::make(field.ell, field.degree);
    const Integer nf = exactnum::factorial(n);
    const Integer bound = Integer(nf * nf) * checked.degree;
    if (bound > kMaxDegreeBound) {
        throw InvalidArgument("degree bound d_F*(n!)^2 = " + bound.get_str() + " exceeds the supported maximum " +
                              std::to_string(kMaxDegreeBound));
    }

    ExponentReport report;
    report.n = n;
    report.field = checked;
    report.degree_bound = bound.get_ui();
    auto [m0, witness] = max_roots_of_unity(checked.ell, report.degree_bound);
    report.m0 = m0;
    report.witness = witness;
    report.sharp_exponent = 1;
    for (const RootWitness& w : achievable_fields(checked.ell, report.degree_bound)) {
        const Integer order = root_group_order(checked.ell, w);
        mpz_lcm(report.sharp_exponent.get_mpz_t(), report.sharp_exponent.get_mpz_t(), order.get_mpz_t());
    }
    if (report.m0 <= kMaxFactorialArgument) {
        report.paper_exponent = exactnum::factorial(report.m0.get_ui());
    }
    return report;
}

std::vector<std::uint64_t> exponents_with_phi_at_most(std::uint64_t bound)
{
    // w = prod p^k has phi(w) = prod p^(k-1) (p-1), so only primes with
    // p - 1 <= bound can occur. Depth-first over primes in increasing order.
    const std::vector<std::uint64_t> primes = exactnum::primes_up_to(bound + 1);
    std::vector<std::uint64_t> out;
    std::function<void(std::size_t, std::uint64_t, std::uint64_t)> visit =
        [&](std::size_t start, std::uint64_t w, std::uint64_t phi) {
            out.push_back(w);
            for (std::size_t i = start; i < primes.size(); ++i) {
                const std::uint64_t p = primes[i];
                if (phi * (p - 1) > bound) {
                    break;
                }
                std::uint64_t pw = w * p;
                std::uint64_t pphi = phi * (p - 1);
                while (pphi <= bound) {
                    visit(i + 1, pw, pphi);
                    pw *= p;
                    pphi *= p;
                }
            }
        };
    visit(0, 1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> candidate_global_exponents(std::uint64_t n)
{
    if (n == 0) {
        throw InvalidArgument("n must be at least 1");
    }
    if (n > 6) {
        throw InvalidArgument("candidate exponents are only enumerated for n <= 6");
    }
    const std::uint64_t nf = exactnum::factorial(n).get_ui();
    return exponents_with_phi_at_most(nf * nf);
}

Integer lcm_of(const std::vector<std::uint64_t>& values)
{
    Integer acc = 1;
    for (std::uint64_t v : values) {
        const Integer z(static_cast<unsigned long>(v));
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), z.get_mpz_t());
    }
    return acc;
}

bool is_semisimple(const RationalMatrix& a)
{
    const RationalPolynomial radical = exactnum::squarefree_part(a.characteristic_polynomial());
    return a.evaluate(radical).is_zero();
}

bool powers_share_charpoly(const RationalMatrix& a, const RationalMatrix& b, std::uint64_t m)
{
    return a.pow(m).characteristic_polynomial() == b.pow(m).characteristic_polynomial();
}

std::optional<std::uint64_t> power_conjugate_exponent(const RationalMatrix& a, const RationalMatrix& b)
{
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n) {
        throw InvalidArgument("power_conjugate_exponent: matrices must be square of the same positive size");
    }
    if (a.determinant() == 0 || b.determinant() == 0) {
        throw NotInvertible("power_conjugate_exponent: matrix is not invertible");
    }
    if (!is_semisimple(a) || !is_semisimple(b)) {
        throw NotSemisimple("power_conjugate_exponent: matrix is not semisimple");
    }
    if (a.characteristic_polynomial() == b.characteristic_polynomial()) {
        return 1;
    }

    const RationalPolynomial ratios = kronecker(a, b.inverse()).characteristic_polynomial();
    std::vector<std::uint64_t> orders;
    // Ratios have degree <= n^2 over Q, a subset of the (n!)^2 search bound.
    for (std::uint64_t w : exponents_with_phi_at_most(static_cast<std::uint64_t>(ratios.degree()))) {
        if ((ratios % exactnum::cyclotomic_polynomial(w)).is_zero()) {
            orders.push_back(w);
        }
    }
    if (orders.empty()) {
        return std::nullopt;
    }
    const Integer ceiling = lcm_of(orders);
    if (!ceiling.fits_ulong_p()) {
        throw InvalidArgument("power_conjugate_exponent: exponent search space exceeds 64 bits");
    }
    for (std::uint64_t m : exactnum::divisors(ceiling.get_ui())) {
        if (powers_share_charpoly(a, b, m)) {
            return m;
        }
    }
    return std::nullopt;
}

}  // namespace poteq::localfield
