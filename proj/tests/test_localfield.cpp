#include <doctest.h>

#include <random>

#include "poteq/error.hpp"
#include "poteq/localfield/exponent.hpp"

using namespace poteq::localfield;
using poteq::exactnum::Rational;

namespace {

// Largest |mu(F)| over extensions of Q_ell of degree <= D, by scanning every
// unramified degree f and every ell-power a directly.
std::uint64_t brute_max_roots(std::uint64_t ell, std::uint64_t d)
{
    std::uint64_t best = 0;
    for (std::uint64_t f = 1; f <= d; ++f) {
        std::uint64_t q = 1;
        for (std::uint64_t i = 0; i < f; ++i) q *= ell;
        std::uint64_t ell_a = 1;
        std::uint64_t phi = 1;  // phi(ell^a) with a = 0
        while (f * phi <= d) {
            best = std::max(best, (q - 1) * ell_a);
            phi = ell_a * (ell - 1);
            ell_a *= ell;
        }
    }
    return best;
}

std::uint64_t factorial_mod(std::uint64_t n, std::uint64_t m)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r = r * i % m;
    return r;
}

std::uint64_t phi_naive(std::uint64_t w)
{
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= w; ++k) c += std::gcd(k, w) == 1;
    return c;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> e(-3, 3);
    RationalMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = e(rng);
    return a;
}

RationalMatrix random_semisimple_invertible(std::mt19937& rng, std::size_t n)
{
    for (;;) {
        auto a = random_matrix(rng, n);
        if (a.determinant() != 0 && is_semisimple(a)) return a;
    }
}

// First m <= limit with charpoly(A^m) == charpoly(B^m), computed directly.
std::optional<std::uint64_t> first_shared_power(const RationalMatrix& a, const RationalMatrix& b, std::uint64_t limit)
{
    RationalMatrix pa = a, pb = b;
    for (std::uint64_t m = 1; m <= limit; ++m) {
        if (pa.characteristic_polynomial() == pb.characteristic_polynomial()) return m;
        pa = pa * a;
        pb = pb * b;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("max roots of unity examples")
{
    auto r = max_roots_of_unity(2, 4);
    CHECK(r.m0 == 30);
    CHECK(r.witness == RootWitness{4, 1});
    r = max_roots_of_unity(3, 1);
    CHECK(r.m0 == 2);
    CHECK(r.witness == RootWitness{1, 0});
    r = max_roots_of_unity(5, 4);
    CHECK(r.m0 == 624);
    CHECK(r.witness == RootWitness{4, 0});
}

TEST_CASE("max roots agrees with a direct scan")
{
    for (std::uint64_t ell : {2, 3, 5, 7, 11}) {
        for (std::uint64_t d = 1; d <= 12; ++d) {
            const auto r = max_roots_of_unity(ell, d);
            CHECK(r.m0 == brute_max_roots(ell, d));
            CHECK(r.m0 == root_group_order(ell, r.witness));
        }
    }
}

TEST_CASE("max roots is monotone in D and divides the sharp lcm")
{
    for (std::uint64_t ell : {2, 3, 5}) {
        Integer prev = 0;
        for (std::uint64_t d = 1; d <= 30; ++d) {
            const auto r = max_roots_of_unity(ell, d);
            CHECK(r.m0 >= prev);
            prev = r.m0;
            // Every achievable group order divides the sharp lcm, so m0 does too.
            Integer l = 1;
            for (const auto& w : achievable_fields(ell, d)) {
                const auto o = root_group_order(ell, w);
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), o.get_mpz_t());
                CHECK(w.residue_degree * (w.ell_power == 0 ? 1 : poteq::exactnum::euler_phi(
                    static_cast<std::uint64_t>(poteq::exactnum::integer_pow(ell, w.ell_power).get_ui()))) <= d);
            }
            CHECK(l % r.m0 == 0);
        }
    }
}

TEST_CASE("uniform exponent for n = 2 over Q_2")
{
    const auto rep = uniform_exponent(2, LocalFieldSpec::make(2, 1));
    CHECK(rep.degree_bound == 4);
    CHECK(rep.m0 == 30);
    CHECK(rep.sharp_exponent == 840);
    REQUIRE(rep.paper_exponent.has_value());
    CHECK(rep.paper_exponent->get_str().size() == 33);
    const Integer mod = 1000000007;
    const Integer residue = *rep.paper_exponent % mod;
    CHECK(residue.get_ui() == factorial_mod(30, 1000000007));
    CHECK(*rep.paper_exponent % rep.sharp_exponent == 0);
}

TEST_CASE("trivial degree over Q_3")
{
    const auto rep = uniform_exponent(1, LocalFieldSpec::make(3, 1));
    CHECK(rep.degree_bound == 1);
    CHECK(rep.m0 == 2);
    CHECK(rep.sharp_exponent == 2);
    CHECK(rep.paper_exponent == std::optional<Integer>(2));
}

TEST_CASE("sharp exponent divides m0 factorial")
{
    for (std::uint64_t n = 1; n <= 2; ++n)
        for (std::uint64_t ell : {2, 3, 5, 7})
            for (std::uint64_t d = 1; d <= 3; ++d) {
                const auto rep = uniform_exponent(n, LocalFieldSpec::make(ell, d));
                CHECK(rep.sharp_exponent % rep.m0 == 0);
                if (!rep.paper_exponent) {
                    CHECK(rep.m0 > kMaxFactorialArgument);
                    continue;
                }
                CHECK(*rep.paper_exponent % rep.sharp_exponent == 0);
            }
}

TEST_CASE("invalid local fields and bounds")
{
    CHECK_THROWS_AS(LocalFieldSpec::make(4, 1), poteq::InvalidArgument);
    CHECK_THROWS_AS(LocalFieldSpec::make(2, 0), poteq::InvalidArgument);
    CHECK_THROWS_AS(uniform_exponent(0, LocalFieldSpec::make(2, 1)), poteq::InvalidArgument);
    CHECK_THROWS_AS(uniform_exponent(5, LocalFieldSpec::make(2, 1)), poteq::InvalidArgument);
}

TEST_CASE("candidate global exponents")
{
    CHECK(candidate_global_exponents(1) == std::vector<std::uint64_t>{1, 2});
    const auto two = candidate_global_exponents(2);
    CHECK(two == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 10, 12});
    CHECK(lcm_of(two) == 120);
    for (std::uint64_t bound : {1, 4, 16, 36}) {
        std::vector<std::uint64_t> naive;
        for (std::uint64_t w = 1; w <= 4 * bound * bound + 10; ++w)
            if (phi_naive(w) <= bound) naive.push_back(w);
        CHECK(exponents_with_phi_at_most(bound) == naive);
    }
}

TEST_CASE("power conjugacy examples")
{
    const RationalMatrix rot{{0, -1}, {1, 0}};
    const RationalMatrix flip{{1, 0}, {0, -1}};
    CHECK(power_conjugate_exponent(rot, flip) == std::optional<std::uint64_t>(4));
    CHECK(power_conjugate_exponent(rot, rot) == std::optional<std::uint64_t>(1));

    const auto a = RationalMatrix::diagonal({2, 3});
    const auto b = RationalMatrix::diagonal({2, 5});
    CHECK_FALSE(power_conjugate_exponent(a, b).has_value());
    CHECK_FALSE(first_shared_power(a, b, 120).has_value());

    const RationalMatrix singular{{1, 1}, {1, 1}};
    CHECK_THROWS_AS(power_conjugate_exponent(singular, rot), NotInvertible);
    const RationalMatrix jordan{{1, 1}, {0, 1}};
    CHECK_THROWS_AS(power_conjugate_exponent(jordan, rot), NotSemisimple);
    CHECK_THROWS_AS(power_conjugate_exponent(rot, RationalMatrix::identity(3)), poteq::InvalidArgument);
}

TEST_CASE("power conjugacy against direct comparison on random pairs")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = dim(rng);
        const auto a = random_semisimple_invertible(rng, n);
        // Half the pairs are built to share a power.
        RationalMatrix b = random_semisimple_invertible(rng, n);
        if (trial % 2 == 0) {
            auto p = random_matrix(rng, n);
            while (p.determinant() == 0) p = random_matrix(rng, n);
            b = p * a * p.inverse();
            if (n == 2 && trial % 4 == 0) b = b * RationalMatrix::diagonal({-1, -1});
        }
        const auto m = power_conjugate_exponent(a, b);
        CHECK(m == power_conjugate_exponent(b, a));
        CHECK(m == first_shared_power(a, b, 120));
        if (m) {
            for (std::uint64_t k = 1; k <= 4; ++k) CHECK(powers_share_charpoly(a, b, *m * k));
        }
    }
}

TEST_CASE("semisimplicity")
{
    CHECK(is_semisimple(RationalMatrix{{0, -1}, {1, 0}}));
    CHECK(is_semisimple(RationalMatrix::identity(3)));
    CHECK_FALSE(is_semisimple(RationalMatrix{{2, 1}, {0, 2}}));
    CHECK_FALSE(is_semisimple(RationalMatrix{{0, 1}, {0, 0}}));
}
