#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poteq/exactnum/integer.hpp"

namespace poteq::exactnum {

using ExponentVector = std::vector<std::int64_t>;

/// Integer-coefficient Laurent polynomial in `rank` variables. Terms are
/// keyed by exponent vector in lexicographic order; zero coefficients are
/// never stored.
class LaurentPolynomial {
public:
    using Terms = std::map<ExponentVector, Integer>;

    explicit LaurentPolynomial(std::size_t rank = 0) : rank_(rank) {}

    static LaurentPolynomial constant(std::size_t rank, const Integer& c);
    static LaurentPolynomial monomial(const ExponentVector& exponent, const Integer& c = 1);

    std::size_t rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const ExponentVector& exponent) const;
    /// Value at the identity of the torus: the sum of all coefficients.
    Integer coefficient_sum() const;

    /// Adds c * x^exponent in place.
    void add_term(const ExponentVector& exponent, const Integer& c);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    LaurentPolynomial pow(std::uint64_t k) const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    /// Terms in descending lexicographic order, e.g. "x^2 + 2*x + 1" for
    /// rank 1 and "x1^2*x2^-1 + 3" for higher ranks.
    std::string to_string() const;

private:
    void check_rank(const LaurentPolynomial& o) const;

    std::size_t rank_;
    Terms terms_;
};

/// Whether f^m == g^m, by exact expansion. Throws InvalidArgument when the
/// ranks differ or m == 0.
bool laurent_pow_eq(const LaurentPolynomial& f, const LaurentPolynomial& g, std::uint64_t m);

}  // namespace poteq::exactnum
