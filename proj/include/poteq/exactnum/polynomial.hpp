#pragma once

#include <string>
#include <utility>
#include <vector>

#include "poteq/exactnum/integer.hpp"

namespace poteq::exactnum {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first with no trailing zeros (the zero polynomial is empty).
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    static RationalPolynomial constant(const Rational& c);
    /// c * x^k
    static RationalPolynomial monomial(const Rational& c, std::size_t k);
    static RationalPolynomial x() { return monomial(Rational(1), 1); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^k (zero past the degree).
    Rational coefficient(std::size_t k) const;
    Rational leading() const;

    Rational operator()(const Rational& at) const;

    RationalPolynomial derivative() const;
    RationalPolynomial monic() const;
    RationalPolynomial compose_power(std::size_t k) const;  ///< p(x^k)

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rational& c);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
    RationalPolynomial operator-() const;

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    /// Human-readable, highest degree first, e.g. "x^2 - 3/2*x + 1".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws InvalidArgument on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator%(const RationalPolynomial& a, const RationalPolynomial& b);
/// Monic gcd (zero only if both inputs are zero).
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
/// p / gcd(p, p'): the product of the distinct irreducible factors, made monic.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

/// The m-th cyclotomic polynomial, from x^m - 1 with every proper-divisor
/// factor divided out. Results are memoized process-wide.
const RationalPolynomial& cyclotomic_polynomial(std::uint64_t m);

}  // namespace poteq::exactnum
