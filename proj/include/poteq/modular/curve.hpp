#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poteq/error.hpp"
#include "poteq/modular/table.hpp"

namespace poteq::modular {

class SingularCurve : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class HasseViolation : public Anomaly {
public:
    using Anomaly::Anomaly;
};

/// y^2 = x^3 + a x + b
struct EllipticCurve {
    Integer a;
    Integer b;

    /// 4a^3 + 27b^2, nonzero for a valid curve.
    Integer discriminant_part() const;
    /// Throws SingularCurve when the discriminant part vanishes.
    void validate() const;
    std::string label() const;
};

/// Legendre symbol (a/p) by Euler's criterion, p an odd prime.
int legendre(const Integer& a, std::uint64_t p);
/// Kronecker symbol (a/n), n >= 1.
int kronecker(const Integer& a, std::uint64_t n);

/// Primes dividing 6 * (4a^3 + 27b^2), with the cofactor left after trial
/// division up to 10^6 included as a single factor.
std::vector<Integer> bad_primes(const EllipticCurve& e);

/// a_p = -sum_x (x^3 + ax + b / p) for every prime 5 <= p <= max_prime not
/// dividing 6 * (4a^3 + 27b^2). Primes are split across `threads` workers
/// and merged in order. Every a_p is checked against |a_p| <= 2 sqrt(p).
EigenvalueTable ap_table(const EllipticCurve& e, std::uint64_t max_prime, unsigned threads = 1);

/// a_p by the same Legendre sum at any odd prime not dividing 4a^3 + 27b^2
/// (including p = 3, which ap_table leaves out).
Integer trace_of_frobenius(const EllipticCurve& e, std::uint64_t p);

/// (a d^2, b d^3) for a nonzero squarefree d.
EllipticCurve quadratic_twist(const EllipticCurve& e, std::int64_t d);

bool is_squarefree(std::int64_t d);

}  // namespace poteq::modular
