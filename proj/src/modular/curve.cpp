#include "poteq/modular/curve.hpp"

#include <algorithm>
#include <thread>

namespace poteq::modular {

using exactnum::pow_mod;

Integer EllipticCurve::discriminant_part() const
{
    return Integer(4 * a * a * a + 27 * b * b);
}

void EllipticCurve::validate() const
{
    if (discriminant_part() == 0) {
        throw SingularCurve("curve " + label() + " is singular (4a^3 + 27b^2 = 0)");
    }
}

std::string EllipticCurve::label() const { return "E[" + a.get_str() + "," + b.get_str() + "]"; }

namespace {

std::uint64_t residue(const Integer& z, std::uint64_t p)
{
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

}  // namespace

int legendre(const Integer& a, std::uint64_t p)
{
    if (p < 3 || !exactnum::is_prime(p)) {
        throw InvalidArgument("legendre: " + std::to_string(p) + " is not an odd prime");
    }
    const std::uint64_t r = pow_mod(residue(a, p), (p - 1) / 2, p);
    if (r == 0) {
        return 0;
    }
    return r == 1 ? 1 : -1;
}

int kronecker(const Integer& a, std::uint64_t n)
{
    if (n == 0) {
        throw InvalidArgument("kronecker: n must be positive");
    }
    const Integer nz(static_cast<unsigned long>(n));
    return mpz_kronecker(a.get_mpz_t(), nz.get_mpz_t());
}

std::vector<Integer> bad_primes(const EllipticCurve& e)
{
    Integer rest = abs(Integer(6 * e.discriminant_part()));
    std::vector<Integer> out;
    for (unsigned long p = 2; p <= 1000000 && rest > 1; ++p) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) {
            continue;
        }
        out.emplace_back(p);
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
    }
    if (rest > 1) {
        out.push_back(rest);
    }
    return out;
}

namespace {

// The character table is one byte per residue.
constexpr std::uint64_t kMaxLegendrePrime = 1ULL << 27U;

// -sum_x chi(x^3 + ax + b) with chi read from a table of squares mod p.
std::int64_t legendre_sum(std::uint64_t a, std::uint64_t b, std::uint64_t p, std::vector<signed char>& chi)
{
    chi.assign(p, -1);
    chi[0] = 0;
    for (std::uint64_t x = 1; x <= p / 2; ++x) {
        chi[x * x % p] = 1;
    }
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t x2 = x * x % p;
        const std::uint64_t y2 = (x2 * x % p + a * x % p + b) % p;
        sum += chi[y2];
    }
    return -sum;
}

}  // namespace

Integer trace_of_frobenius(const EllipticCurve& e, std::uint64_t p)
{
    if (p < 3 || !exactnum::is_prime(p) || residue(e.discriminant_part(), p) == 0) {
        throw InvalidArgument("trace_of_frobenius: " + std::to_string(p) + " is not an odd prime of good reduction");
    }
    if (p > kMaxLegendrePrime) {
        throw InvalidArgument("trace_of_frobenius: prime too large for the Legendre sum");
    }
    std::vector<signed char> chi;
    return Integer(static_cast<long>(legendre_sum(residue(e.a, p), residue(e.b, p), p, chi)));
}

EigenvalueTable ap_table(const EllipticCurve& e, std::uint64_t max_prime, unsigned threads)
{
    e.validate();
    if (max_prime < 5) {
        throw InvalidArgument("ap_table: max prime must be at least 5");
    }
    if (max_prime > kMaxLegendrePrime) {
        throw InvalidArgument("ap_table: max prime too large for the Legendre sum");
    }
    const Integer disc = e.discriminant_part();
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : exactnum::primes_up_to(max_prime)) {
        if (p >= 5 && residue(disc, p) != 0) {
            primes.push_back(p);
        }
    }

    std::vector<std::int64_t> traces(primes.size());
    auto work = [&](unsigned worker, unsigned stride) {
        std::vector<signed char> chi;
        for (std::size_t i = worker; i < primes.size(); i += stride) {
            const std::uint64_t p = primes[i];
            traces[i] = legendre_sum(residue(e.a, p), residue(e.b, p), p, chi);
        }
    };
    const unsigned pool = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(primes.size())));
    if (pool == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < pool; ++w) {
            workers.emplace_back(work, w, pool);
        }
    }

    EigenvalueTable table;
    table.label = e.label();
    table.weight = 2;
    table.level_hint = 1;
    for (const Integer& q : bad_primes(e)) {
        table.level_hint *= q;
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        const std::int64_t ap = traces[i];
        if (static_cast<std::uint64_t>(ap * ap) > 4 * p) {
            throw HasseViolation("a_" + std::to_string(p) + " = " + std::to_string(ap) + " violates the Hasse bound");
        }
        table.entries.emplace(p, CyclotomicNumber(static_cast<long>(ap)));
    }
    return table;
}

bool is_squarefree(std::int64_t d)
{
    if (d == 0) {
        return false;
    }
    const std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
    for (const auto& [p, e] : exactnum::factorize(m)) {
        if (e > 1) {
            return false;
        }
    }
    return true;
}

EllipticCurve quadratic_twist(const EllipticCurve& e, std::int64_t d)
{
    if (!is_squarefree(d)) {
        throw InvalidArgument("quadratic_twist: d = " + std::to_string(d) + " is not a nonzero squarefree integer");
    }
    const Integer dz(static_cast<long>(d));
    return {Integer(e.a * dz * dz), Integer(e.b * dz * dz * dz)};
}

}  // namespace poteq::modular
