#include "poteq/exactnum/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "poteq/error.hpp"

namespace poteq::exactnum {

namespace {

std::vector<Rational> padded(const RationalPolynomial& p, std::size_t size)
{
    std::vector<Rational> v = p.coefficients();
    v.resize(size);
    return v;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber() : order_(1), coeffs_(1) {}

CyclotomicNumber::CyclotomicNumber(const Rational& q) : order_(1), coeffs_{q} {}

CyclotomicNumber::CyclotomicNumber(const RootOfUnity& z)
    : CyclotomicNumber(from_polynomial(z.order(), RationalPolynomial::monomial(Rational(1), z.exponent())))
{
}

CyclotomicNumber::CyclotomicNumber(std::uint64_t order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs))
{
}

CyclotomicNumber CyclotomicNumber::from_polynomial(std::uint64_t order, const RationalPolynomial& p)
{
    const RationalPolynomial& modulus = cyclotomic_polynomial(order);
    const auto dim = static_cast<std::size_t>(modulus.degree());
    return {order, padded(p % modulus, dim)};
}

CyclotomicNumber CyclotomicNumber::from_coordinates(std::uint64_t order, std::vector<Rational> coordinates)
{
    if (order == 0) {
        throw InvalidArgument("cyclotomic order must be positive");
    }
    if (coordinates.size() != euler_phi(order)) {
        throw InvalidArgument("expected " + std::to_string(euler_phi(order)) + " coordinates for order " +
                              std::to_string(order) + ", got " + std::to_string(coordinates.size()));
    }
    return {order, std::move(coordinates)};
}

bool CyclotomicNumber::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> CyclotomicNumber::to_rational() const
{
    if (std::any_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c != 0; })) {
        return std::nullopt;
    }
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::embed(std::uint64_t target) const
{
    if (target == 0 || target % order_ != 0) {
        throw InvalidArgument("cannot embed order " + std::to_string(order_) + " into order " + std::to_string(target));
    }
    if (target == order_) {
        return *this;
    }
    // zeta_order = zeta_target^(target/order)
    return from_polynomial(target, as_polynomial().compose_power(target / order_));
}

std::optional<CyclotomicNumber> CyclotomicNumber::retract(std::uint64_t target) const
{
    if (target == 0 || order_ % target != 0) {
        throw InvalidArgument("cannot retract order " + std::to_string(order_) + " to order " + std::to_string(target));
    }
    const std::size_t rows = coeffs_.size();
    const std::size_t cols = euler_phi(target);
    // Solve sum_j c_j * embed(zeta_target^j) = *this by Gauss-Jordan elimination.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        const CyclotomicNumber basis = CyclotomicNumber(RootOfUnity(target, static_cast<std::int64_t>(j))).embed(order_);
        for (std::size_t i = 0; i < rows; ++i) {
            a[i][j] = basis.coeffs_[i];
        }
    }
    for (std::size_t i = 0; i < rows; ++i) {
        a[i][cols] = coeffs_[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) {
                continue;
            }
            const Rational f = a[i][c];
            for (std::size_t k = c; k <= cols; ++k) {
                a[i][k] -= f * a[r][k];
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (a[i][cols] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> out(cols);
    for (std::size_t i = 0; i < r; ++i) {
        out[pivot_col[i]] = a[i][cols];
    }
    return CyclotomicNumber(target, std::move(out));
}

CyclotomicNumber CyclotomicNumber::pow(std::uint64_t k) const
{
    CyclotomicNumber result = CyclotomicNumber(Rational(1)).embed(order_);
    CyclotomicNumber base = *this;
    while (k != 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k != 0) {
            base = base * base;
        }
    }
    return result;
}

CyclotomicNumber operator+(const CyclotomicNumber& x, const CyclotomicNumber& y)
{
    const std::uint64_t m = lcm(x.order_, y.order_);
    CyclotomicNumber a = x.embed(m);
    const CyclotomicNumber b = y.embed(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        a.coeffs_[i] += b.coeffs_[i];
    }
    return a;
}

CyclotomicNumber operator-(const CyclotomicNumber& x, const CyclotomicNumber& y) { return x + (-y); }

CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y)
{
    const std::uint64_t m = lcm(x.order_, y.order_);
    if (m == 1) {
        return CyclotomicNumber(Rational(x.coeffs_[0] * y.coeffs_[0]));
    }
    return CyclotomicNumber::from_polynomial(m, x.embed(m).as_polynomial() * y.embed(m).as_polynomial());
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y)
{
    if (x.order_ == y.order_) {
        return x.coeffs_ == y.coeffs_;
    }
    const std::uint64_t m = lcm(x.order_, y.order_);
    return x.embed(m).coeffs_ == y.embed(m).coeffs_;
}

std::string CyclotomicNumber::to_string() const
{
    if (auto q = to_rational()) {
        return exactnum::to_string(*q);
    }
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        os << (i ? "," : "") << exactnum::to_string(coeffs_[i]);
    }
    os << "]@" << order_;
    return os.str();
}

}  // namespace poteq::exactnum
