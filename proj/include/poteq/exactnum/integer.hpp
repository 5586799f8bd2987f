#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace poteq::exactnum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Prime power factorization, primes ascending.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Reduces a signed value into [0, m).
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m);

Integer factorial(std::uint64_t n);
Integer integer_pow(std::uint64_t base, std::uint64_t exp);

/// Parses "a", "-a" or "a/b"; throws InvalidArgument on anything else.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

/// "n" when the denominator is 1, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace poteq::exactnum
