#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poteq/exactnum/integer.hpp"
#include "poteq/exactnum/polynomial.hpp"
#include "poteq/exactnum/root_of_unity.hpp"

namespace poteq::exactnum {

/// An element of Q(zeta_m), stored as phi(m) rational coordinates in the
/// power basis 1, zeta_m, ..., zeta_m^(phi(m)-1).
///
/// Binary operations between different orders first embed both operands
/// into Q(zeta_lcm). Equality is equality of complex numbers, so the same
/// value may be held at several orders.
class CyclotomicNumber {
public:
    /// Zero in Q.
    CyclotomicNumber();
    CyclotomicNumber(const Rational& q);  // NOLINT(google-explicit-constructor)
    CyclotomicNumber(const Integer& z) : CyclotomicNumber(Rational(z)) {}  // NOLINT
    CyclotomicNumber(long z) : CyclotomicNumber(Rational(z)) {}  // NOLINT
    CyclotomicNumber(const RootOfUnity& z);  // NOLINT

    /// Reduces an arbitrary polynomial in zeta_m modulo the m-th cyclotomic polynomial.
    static CyclotomicNumber from_polynomial(std::uint64_t order, const RationalPolynomial& p);
    /// Takes coordinates verbatim; their count must equal phi(order).
    static CyclotomicNumber from_coordinates(std::uint64_t order, std::vector<Rational> coordinates);

    std::uint64_t order() const { return order_; }
    const std::vector<Rational>& coordinates() const { return coeffs_; }

    bool is_zero() const;
    /// The value as a rational number, if it is one.
    std::optional<Rational> to_rational() const;

    /// Same value in Q(zeta_target); `order()` must divide `target`.
    CyclotomicNumber embed(std::uint64_t target) const;
    /// Same value in Q(zeta_target) for `target` dividing `order()`,
    /// or nothing when the value does not lie in that subfield.
    std::optional<CyclotomicNumber> retract(std::uint64_t target) const;

    CyclotomicNumber pow(std::uint64_t k) const;

    friend CyclotomicNumber operator+(const CyclotomicNumber& x, const CyclotomicNumber& y);
    friend CyclotomicNumber operator-(const CyclotomicNumber& x, const CyclotomicNumber& y);
    friend CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y);
    CyclotomicNumber operator-() const;

    friend bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y);

    /// "3/2" for rationals, otherwise "[c0,c1,...]@m".
    std::string to_string() const;

private:
    CyclotomicNumber(std::uint64_t order, std::vector<Rational> coeffs);

    RationalPolynomial as_polynomial() const { return RationalPolynomial(coeffs_); }

    std::uint64_t order_;
    std::vector<Rational> coeffs_;
};

inline bool cyclo_eq(const CyclotomicNumber& x, const CyclotomicNumber& y) { return x == y; }

}  // namespace poteq::exactnum
