#include "poteq/exactnum/laurent.hpp"

#include <sstream>

#include "poteq/error.hpp"

namespace poteq::exactnum {

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, const Integer& c)
{
    LaurentPolynomial p(rank);
    p.add_term(ExponentVector(rank, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& exponent, const Integer& c)
{
    LaurentPolynomial p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

Integer LaurentPolynomial::coefficient(const ExponentVector& exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPolynomial::coefficient_sum() const
{
    Integer sum = 0;
    for (const auto& [e, c] : terms_) {
        sum += c;
    }
    return sum;
}

void LaurentPolynomial::add_term(const ExponentVector& exponent, const Integer& c)
{
    if (exponent.size() != rank_) {
        throw InvalidArgument("exponent vector of length " + std::to_string(exponent.size()) +
                              " in a rank " + std::to_string(rank_) + " Laurent polynomial");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void LaurentPolynomial::check_rank(const LaurentPolynomial& o) const
{
    if (o.rank_ != rank_) {
        throw InvalidArgument("Laurent polynomial rank mismatch: " + std::to_string(rank_) + " vs " +
                              std::to_string(o.rank_));
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o)
{
    check_rank(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o)
{
    check_rank(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    a.check_rank(b);
    LaurentPolynomial out(a.rank_);
    ExponentVector e(a.rank_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::pow(std::uint64_t k) const
{
    LaurentPolynomial result = constant(rank_, 1);
    LaurentPolynomial base = *this;
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

std::string LaurentPolynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            mono << (any ? "*" : "") << "x";
            if (rank_ > 1) {
                mono << (i + 1);
            }
            if (e[i] != 1) {
                mono << "^" << e[i];
            }
            any = true;
        }
        if (!any) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << mono.str();
        } else {
            os << mag.get_str() << "*" << mono.str();
        }
    }
    return os.str();
}

bool laurent_pow_eq(const LaurentPolynomial& f, const LaurentPolynomial& g, std::uint64_t m)
{
    if (f.rank() != g.rank()) {
        throw InvalidArgument("laurent_pow_eq: rank mismatch " + std::to_string(f.rank()) + " vs " +
                              std::to_string(g.rank()));
    }
    if (m == 0) {
        throw InvalidArgument("laurent_pow_eq: exponent must be positive");
    }
    if (f == g) {
        return true;
    }
    return f.pow(m) == g.pow(m);
}

}  // namespace poteq::exactnum
