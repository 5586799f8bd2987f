#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "poteq/exactnum/integer.hpp"
#include "poteq/exactnum/polynomial.hpp"

namespace poteq::exactnum {

/// Square matrix over Q, row-major.
class RationalMatrix {
public:
    explicit RationalMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix diagonal(const std::vector<Rational>& entries);

    std::size_t size() const { return n_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
    friend RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y);
    RationalMatrix scaled(const Rational& c) const;
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    bool is_zero() const;
    /// Exponentiation by squaring, k >= 0.
    RationalMatrix pow(std::uint64_t k) const;
    Rational determinant() const;
    /// Throws InvalidArgument when singular.
    RationalMatrix inverse() const;

    /// det(xI - A) by fraction-free (Bareiss) elimination over Q[x].
    RationalPolynomial characteristic_polynomial() const;
    /// p(A) by Horner's rule.
    RationalMatrix evaluate(const RationalPolynomial& p) const;

    std::string to_string() const;

private:
    std::size_t n_;
    std::vector<Rational> a_;
};

/// The Kronecker product; its eigenvalues are all products of eigenvalues.
RationalMatrix kronecker(const RationalMatrix& x, const RationalMatrix& y);

}  // namespace poteq::exactnum
