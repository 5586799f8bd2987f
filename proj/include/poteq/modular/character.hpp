#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "poteq/exactnum/cyclotomic.hpp"
#include "poteq/exactnum/root_of_unity.hpp"

namespace poteq::modular {

using exactnum::RootOfUnity;

/// (Z/qZ)^* as a product of cyclic factors, one per odd prime power
/// p^e || q, plus <-1> and <5> for 2^e with e >= 3 (<-1> alone for e = 2).
/// Generators are lifted by CRT to be 1 modulo the other prime powers.
class UnitGroup {
public:
    struct Factor {
        std::uint64_t prime_power;  ///< the p^e this factor lives in
        std::uint64_t generator;    ///< residue mod q
        std::uint64_t order;
    };

    static std::shared_ptr<const UnitGroup> make(std::uint64_t modulus);

    std::uint64_t modulus() const { return modulus_; }
    const std::vector<Factor>& factors() const { return factors_; }
    /// phi(q)
    std::uint64_t order() const { return order_; }

    /// Exponents of `a` on each factor's generator, or nothing when
    /// gcd(a, q) > 1. Looked up in tables built by brute force.
    std::optional<std::vector<std::uint64_t>> discrete_log(std::uint64_t a) const;

private:
    explicit UnitGroup(std::uint64_t modulus);

    std::uint64_t modulus_;
    std::uint64_t order_ = 1;
    std::vector<Factor> factors_;
    // logs_[r] for r in [0, q): exponent vector, empty for non-units.
    std::vector<std::vector<std::uint64_t>> logs_;
};

/// chi(g_i) = zeta_{ord g_i}^{exponents[i]} on the UnitGroup generators,
/// extended by zero to non-units.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents);

    static DirichletCharacter trivial(std::uint64_t modulus);

    std::uint64_t modulus() const { return group_->modulus(); }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }
    const UnitGroup& unit_group() const { return *group_; }
    std::uint64_t order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    /// chi(a) for a unit, nothing when gcd(a, q) > 1.
    std::optional<RootOfUnity> value(std::int64_t a) const;
    /// chi(a) with 0 for non-units.
    exactnum::CyclotomicNumber value_number(std::int64_t a) const;

    friend bool operator==(const DirichletCharacter& x, const DirichletCharacter& y)
    {
        return x.modulus() == y.modulus() && x.exponents_ == y.exponents_;
    }

    /// e.g. "chi_4[1]"
    std::string to_string() const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::uint64_t> exponents_;
    std::uint64_t order_;
};

/// All phi(q) characters modulo q.
std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q);

/// Smallest q' | q with chi trivial on units congruent to 1 mod q'.
std::uint64_t conductor(const DirichletCharacter& chi);

/// Characters modulo q whose conductor is q.
std::vector<DirichletCharacter> primitive_characters(std::uint64_t q);

/// The character modulo `modulus` (a multiple of chi's modulus) agreeing
/// with chi on its units.
DirichletCharacter induce(const DirichletCharacter& chi, std::uint64_t modulus);

}  // namespace poteq::modular
