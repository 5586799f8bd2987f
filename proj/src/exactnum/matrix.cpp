#include "poteq/exactnum/matrix.hpp"

#include <sstream>

#include "poteq/error.hpp"

namespace poteq::exactnum {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) : RationalMatrix(rows.size())
{
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw InvalidArgument("matrix literal is not square");
        }
        std::size_t j = 0;
        for (long v : row) {
            (*this)(i, j++) = v;
        }
        ++i;
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries)
{
    RationalMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y)
{
    if (x.n_ != y.n_) {
        throw InvalidArgument("matrix size mismatch");
    }
    const std::size_t n = x.n_;
    RationalMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& xik = x(i, k);
            if (xik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += xik * y(k, j);
            }
        }
    }
    return out;
}

RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y)
{
    if (x.n_ != y.n_) {
        throw InvalidArgument("matrix size mismatch");
    }
    RationalMatrix out = x;
    for (std::size_t i = 0; i < out.a_.size(); ++i) {
        out.a_[i] += y.a_[i];
    }
    return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const
{
    RationalMatrix out = *this;
    for (auto& v : out.a_) {
        v *= c;
    }
    return out;
}

bool RationalMatrix::is_zero() const
{
    for (const auto& v : a_) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

RationalMatrix RationalMatrix::pow(std::uint64_t k) const
{
    RationalMatrix result = identity(n_);
    RationalMatrix base = *this;
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

Rational RationalMatrix::determinant() const
{
    std::vector<Rational> m = a_;
    Rational det = 1;
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t p = c;
        while (p < n_ && m[p * n_ + c] == 0) {
            ++p;
        }
        if (p == n_) {
            return 0;
        }
        if (p != c) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(m[p * n_ + j], m[c * n_ + j]);
            }
            det = -det;
        }
        const Rational pivot = m[c * n_ + c];
        det *= pivot;
        for (std::size_t i = c + 1; i < n_; ++i) {
            if (m[i * n_ + c] == 0) {
                continue;
            }
            const Rational f = m[i * n_ + c] / pivot;
            for (std::size_t j = c; j < n_; ++j) {
                m[i * n_ + j] -= f * m[c * n_ + j];
            }
        }
    }
    return det;
}

RationalMatrix RationalMatrix::inverse() const
{
    RationalMatrix left = *this;
    RationalMatrix right = identity(n_);
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t p = c;
        while (p < n_ && left(p, c) == 0) {
            ++p;
        }
        if (p == n_) {
            throw InvalidArgument("matrix is singular");
        }
        for (std::size_t j = 0; j < n_; ++j) {
            std::swap(left(p, j), left(c, j));
            std::swap(right(p, j), right(c, j));
        }
        const Rational inv = 1 / left(c, c);
        for (std::size_t j = 0; j < n_; ++j) {
            left(c, j) *= inv;
            right(c, j) *= inv;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == c || left(i, c) == 0) {
                continue;
            }
            const Rational f = left(i, c);
            for (std::size_t j = 0; j < n_; ++j) {
                left(i, j) -= f * left(c, j);
                right(i, j) -= f * right(c, j);
            }
        }
    }
    return right;
}

RationalPolynomial RationalMatrix::characteristic_polynomial() const
{
    if (n_ == 0) {
        return RationalPolynomial::constant(1);
    }
    std::vector<RationalPolynomial> m(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            m[i * n_ + j] = RationalPolynomial::constant(-(*this)(i, j));
            if (i == j) {
                m[i * n_ + j] += RationalPolynomial::x();
            }
        }
    }
    // The k-th Bareiss pivot is the leading principal minor of xI - A of
    // size k+1, a monic polynomial, so no row exchanges are ever needed.
    RationalPolynomial previous = RationalPolynomial::constant(1);
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        const RationalPolynomial& pivot = m[k * n_ + k];
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j) {
                RationalPolynomial num = pivot * m[i * n_ + j] - m[i * n_ + k] * m[k * n_ + j];
                auto [q, r] = divmod(num, previous);
                if (!r.is_zero()) {
                    throw Anomaly("Bareiss elimination produced an inexact division");
                }
                m[i * n_ + j] = std::move(q);
            }
        }
        previous = pivot;
    }
    return m[n_ * n_ - 1];
}

RationalMatrix RationalMatrix::evaluate(const RationalPolynomial& p) const
{
    RationalMatrix acc(n_);
    const auto& c = p.coefficients();
    const RationalMatrix id = identity(n_);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * (*this) + id.scaled(*it);
    }
    return acc;
}

std::string RationalMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < n_; ++j) {
            os << (j ? "," : "") << exactnum::to_string((*this)(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

RationalMatrix kronecker(const RationalMatrix& x, const RationalMatrix& y)
{
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    RationalMatrix out(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                for (std::size_t l = 0; l < m; ++l) {
                    out(i * m + k, j * m + l) = x(i, j) * y(k, l);
                }
            }
        }
    }
    return out;
}

}  // namespace poteq::exactnum
