#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace poteq::exactnum {

/// exp(2*pi*i * exponent / order), kept in lowest terms so that two
/// values are equal iff their fields are equal.
class RootOfUnity {
public:
    /// The identity, order 1.
    RootOfUnity() = default;
    /// zeta_order^exponent, canonicalized. `order` must be positive.
    RootOfUnity(std::uint64_t order, std::int64_t exponent);

    static RootOfUnity one() { return {}; }
    static RootOfUnity minus_one() { return {2, 1}; }

    std::uint64_t order() const { return order_; }
    std::uint64_t exponent() const { return exponent_; }

    RootOfUnity pow(std::int64_t k) const;
    RootOfUnity inverse() const { return pow(-1); }

    friend RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y);
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

    /// "1", "-1" or "z<order>^<exponent>".
    std::string to_string() const;

private:
    std::uint64_t order_ = 1;
    std::uint64_t exponent_ = 0;
};

/// Free-function spelling of RootOfUnity::pow.
inline RootOfUnity rou_pow(const RootOfUnity& z, std::int64_t k) { return z.pow(k); }

}  // namespace poteq::exactnum
