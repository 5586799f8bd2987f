#include "poteq/exactnum/root_of_unity.hpp"

#include <numeric>

#include "poteq/error.hpp"

namespace poteq::exactnum {

namespace {

std::uint64_t mod_i128(__int128 value, std::uint64_t m)
{
    const auto sm = static_cast<__int128>(m);
    __int128 r = value % sm;
    if (r < 0) {
        r += sm;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

RootOfUnity::RootOfUnity(std::uint64_t order, std::int64_t exponent)
{
    if (order == 0) {
        throw InvalidArgument("root of unity order must be positive");
    }
    const std::uint64_t e = mod_i128(exponent, order);
    if (e == 0) {
        return;
    }
    const std::uint64_t g = std::gcd(e, order);
    order_ = order / g;
    exponent_ = e / g;
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const
{
    const std::uint64_t e = mod_i128(static_cast<__int128>(exponent_) * k, order_);
    return {order_, static_cast<std::int64_t>(e)};
}

RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y)
{
    const std::uint64_t g = std::gcd(x.order_, y.order_);
    const std::uint64_t order = x.order_ / g * y.order_;
    const auto e = static_cast<unsigned __int128>(x.exponent_) * (order / x.order_) +
                   static_cast<unsigned __int128>(y.exponent_) * (order / y.order_);
    return {order, static_cast<std::int64_t>(e % order)};
}

std::string RootOfUnity::to_string() const
{
    if (order_ == 1) {
        return "1";
    }
    if (order_ == 2) {
        return "-1";
    }
    return "z" + std::to_string(order_) + "^" + std::to_string(exponent_);
}

}  // namespace poteq::exactnum
