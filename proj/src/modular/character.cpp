#include "poteq/modular/character.hpp"

#include <numeric>
#include <sstream>

#include "poteq/error.hpp"

namespace poteq::modular {

using exactnum::euler_phi;
using exactnum::mul_mod;
using exactnum::pow_mod;

namespace {

std::uint64_t primitive_root_mod_prime(std::uint64_t p)
{
    if (p == 2) {
        return 1;
    }
    const auto factors = exactnum::factorize(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return g;
        }
    }
    throw Anomaly("no primitive root modulo " + std::to_string(p));
}

// x with x = g (mod pe) and x = 1 (mod q / pe).
std::uint64_t crt_lift(std::uint64_t g, std::uint64_t pe, std::uint64_t q)
{
    const std::uint64_t rest = q / pe;
    if (rest == 1) {
        return g % q;
    }
    // rest^-1 mod pe by brute force: the moduli here are small.
    std::uint64_t inv = 0;
    for (std::uint64_t t = 1; t < pe; ++t) {
        if (mul_mod(rest % pe, t, pe) == 1) {
            inv = t;
            break;
        }
    }
    const std::uint64_t k = mul_mod((g + pe - 1) % pe, inv, pe);
    return (1 + rest * k) % q;
}

}  // namespace

std::shared_ptr<const UnitGroup> UnitGroup::make(std::uint64_t modulus)
{
    return std::shared_ptr<const UnitGroup>(new UnitGroup(modulus));
}

UnitGroup::UnitGroup(std::uint64_t modulus) : modulus_(modulus)
{
    if (modulus == 0) {
        throw InvalidArgument("character modulus must be positive");
    }
    if (modulus > 1000000) {
        throw InvalidArgument("character modulus " + std::to_string(modulus) + " is too large for table lookup");
    }
    order_ = euler_phi(modulus);

    // Per factor: generator residue mod its prime power, order.
    struct Local {
        std::uint64_t pe;
        std::uint64_t g;
        std::uint64_t order;
    };
    std::vector<Local> locals;
    for (const auto& [p, e] : exactnum::factorize(modulus)) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) {
            pe *= p;
        }
        if (p == 2) {
            if (e >= 2) {
                locals.push_back({pe, pe - 1, 2});
            }
            if (e >= 3) {
                locals.push_back({pe, 5, pe / 4});
            }
            continue;
        }
        std::uint64_t g = primitive_root_mod_prime(p);
        if (e >= 2 && pow_mod(g, p - 1, p * p) == 1) {
            g += p;
        }
        locals.push_back({pe, g, pe / p * (p - 1)});
    }
    for (const Local& l : locals) {
        factors_.push_back({l.pe, crt_lift(l.g, l.pe, modulus), l.order});
    }

    // Enumerate every exponent vector once; the products hit each unit once.
    logs_.assign(modulus, {});
    std::vector<bool> seen(modulus, false);
    std::vector<std::uint64_t> exps(factors_.size(), 0);
    for (std::uint64_t count = 0; count < order_; ++count) {
        std::uint64_t value = 1 % modulus;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            value = mul_mod(value, pow_mod(factors_[i].generator, exps[i], modulus), modulus);
        }
        if (seen[value]) {
            throw Anomaly("unit group generators of modulus " + std::to_string(modulus) + " are not independent");
        }
        seen[value] = true;
        logs_[value] = exps;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (++exps[i] < factors_[i].order) {
                break;
            }
            exps[i] = 0;
        }
    }
}

std::optional<std::vector<std::uint64_t>> UnitGroup::discrete_log(std::uint64_t a) const
{
    const std::uint64_t r = a % modulus_;
    if (std::gcd(r, modulus_) != 1) {
        return std::nullopt;
    }
    return logs_[r];
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)), order_(1)
{
    const auto& factors = group_->factors();
    if (exponents_.size() != factors.size()) {
        throw InvalidArgument("character needs one exponent per unit-group generator");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        exponents_[i] %= factors[i].order;
        order_ = exactnum::lcm(order_, factors[i].order / std::gcd(exponents_[i], factors[i].order));
    }
}

DirichletCharacter DirichletCharacter::trivial(std::uint64_t modulus)
{
    auto group = UnitGroup::make(modulus);
    std::vector<std::uint64_t> zeros(group->factors().size(), 0);
    return {std::move(group), std::move(zeros)};
}

std::optional<RootOfUnity> DirichletCharacter::value(std::int64_t a) const
{
    auto logs = group_->discrete_log(exactnum::reduce_mod(a, modulus()));
    if (!logs) {
        return std::nullopt;
    }
    RootOfUnity out;
    const auto& factors = group_->factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto e = static_cast<unsigned __int128>(exponents_[i]) * (*logs)[i] % factors[i].order;
        out = out * RootOfUnity(factors[i].order, static_cast<std::int64_t>(e));
    }
    return out;
}

exactnum::CyclotomicNumber DirichletCharacter::value_number(std::int64_t a) const
{
    if (auto v = value(a)) {
        return {*v};
    }
    return {};
}

std::string DirichletCharacter::to_string() const
{
    std::ostringstream os;
    os << "chi_" << modulus() << "[";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        os << (i ? "," : "") << exponents_[i];
    }
    os << "]";
    return os.str();
}

std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q)
{
    auto group = UnitGroup::make(q);
    const auto& factors = group->factors();
    std::vector<DirichletCharacter> out;
    out.reserve(group->order());
    std::vector<std::uint64_t> exps(factors.size(), 0);
    for (std::uint64_t count = 0; count < group->order(); ++count) {
        out.emplace_back(group, exps);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (++exps[i] < factors[i].order) {
                break;
            }
            exps[i] = 0;
        }
    }
    return out;
}

std::uint64_t conductor(const DirichletCharacter& chi)
{
    const std::uint64_t q = chi.modulus();
    for (std::uint64_t d : exactnum::divisors(q)) {
        bool trivial_on_kernel = true;
        for (std::uint64_t a = 1 % d; a < q && trivial_on_kernel; a += d) {
            if (a == 0) {
                continue;
            }
            auto v = chi.value(static_cast<std::int64_t>(a));
            if (v && *v != RootOfUnity::one()) {
                trivial_on_kernel = false;
            }
        }
        if (trivial_on_kernel) {
            return d;
        }
    }
    return q;
}

std::vector<DirichletCharacter> primitive_characters(std::uint64_t q)
{
    std::vector<DirichletCharacter> out;
    for (auto& chi : enumerate_characters(q)) {
        if (conductor(chi) == q) {
            out.push_back(std::move(chi));
        }
    }
    return out;
}

DirichletCharacter induce(const DirichletCharacter& chi, std::uint64_t modulus)
{
    if (modulus == 0 || modulus % chi.modulus() != 0) {
        throw InvalidArgument("induce: target modulus must be a multiple of " + std::to_string(chi.modulus()));
    }
    auto group = UnitGroup::make(modulus);
    // Values on the generators pin the induced character down.
    std::vector<std::uint64_t> exps;
    for (const auto& f : group->factors()) {
        const RootOfUnity v = *chi.value(static_cast<std::int64_t>(f.generator));
        if (f.order % v.order() != 0) {
            throw Anomaly("induce: value order does not divide generator order");
        }
        exps.push_back(v.exponent() * (f.order / v.order()));
    }
    return {std::move(group), std::move(exps)};
}

}  // namespace poteq::modular
