#include "poteq/exactnum/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "poteq/error.hpp"

namespace poteq::exactnum {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational RationalPolynomial::coefficient(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPolynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational RationalPolynomial::operator()(const Rational& at) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    }
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const
{
    if (is_zero()) {
        return {};
    }
    RationalPolynomial out = *this;
    const Rational lead = leading();
    for (auto& c : out.coeffs_) {
        c /= lead;
    }
    return out;
}

RationalPolynomial RationalPolynomial::compose_power(std::size_t k) const
{
    if (is_zero() || k == 1) {
        return *this;
    }
    if (k == 0) {
        return constant((*this)(Rational(1)));
    }
    std::vector<Rational> v((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        v[i * k] = coeffs_[i];
    }
    return RationalPolynomial(std::move(v));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            v[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(v);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

RationalPolynomial RationalPolynomial::operator-() const
{
    RationalPolynomial out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

std::string RationalPolynomial::to_string(const std::string& var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << exactnum::to_string(mag);
            continue;
        }
        if (mag != 1) {
            os << exactnum::to_string(mag) << "*";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b)
{
    if (b.is_zero()) {
        throw InvalidArgument("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {RationalPolynomial{}, a};
    }
    std::vector<Rational> rem = a.coefficients();
    const auto& den = b.coefficients();
    const std::size_t db = den.size() - 1;
    std::vector<Rational> quot(rem.size() - db);
    const Rational lead = den.back();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) {
            continue;
        }
        const Rational factor = rem[i] / lead;
        quot[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] -= factor * den[j];
        }
    }
    rem.resize(db);
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial operator%(const RationalPolynomial& a, const RationalPolynomial& b) { return divmod(a, b).second; }

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b)
{
    RationalPolynomial x = a;
    RationalPolynomial y = b;
    while (!y.is_zero()) {
        RationalPolynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

RationalPolynomial squarefree_part(const RationalPolynomial& p)
{
    if (p.degree() <= 0) {
        return p.monic();
    }
    return divmod(p, gcd(p, p.derivative())).first.monic();
}

const RationalPolynomial& cyclotomic_polynomial(std::uint64_t m)
{
    if (m == 0) {
        throw InvalidArgument("cyclotomic polynomial order must be positive");
    }
    static std::mutex mutex;
    static std::map<std::uint64_t, const RationalPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) {
            return it->second;
        }
    }
    RationalPolynomial value = RationalPolynomial::monomial(Rational(1), m) - RationalPolynomial::constant(Rational(1));
    for (std::uint64_t d : divisors(m)) {
        if (d == m) {
            continue;
        }
        auto [q, r] = divmod(value, cyclotomic_polynomial(d));
        value = std::move(q);
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(m, std::move(value));
    return it->second;
}

}  // namespace poteq::exactnum
