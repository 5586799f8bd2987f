#include <doctest.h>
#include <algorithm>
#include <numeric>

#include <random>

#include "poteq/error.hpp"
#include "poteq/exactnum/cyclotomic.hpp"
#include "poteq/exactnum/laurent.hpp"
#include "poteq/exactnum/matrix.hpp"
#include "poteq/exactnum/polynomial.hpp"
#include "poteq/exactnum/root_of_unity.hpp"

using namespace poteq::exactnum;

namespace {

int mobius(std::uint64_t n)
{
    int mu = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) {
            return 0;
        }
        mu = -mu;
    }
    return mu;
}

// Phi_m = prod_{d | m} (x^d - 1)^mu(m/d): multiply the positive factors,
// then divide out the negative ones.
RationalPolynomial cyclotomic_by_mobius(std::uint64_t m)
{
    RationalPolynomial num = RationalPolynomial::constant(1);
    RationalPolynomial den = RationalPolynomial::constant(1);
    for (std::uint64_t d = 1; d <= m; ++d) {
        if (m % d != 0) {
            continue;
        }
        const RationalPolynomial f = RationalPolynomial::monomial(1, d) - RationalPolynomial::constant(1);
        const int mu = mobius(m / d);
        if (mu == 1) {
            num *= f;
        } else if (mu == -1) {
            den *= f;
        }
    }
    return divmod(num, den).first;
}

// det(xI - A) by the Leibniz permutation expansion, n <= 4.
RationalPolynomial charpoly_leibniz(const RationalMatrix& a)
{
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
    }
    RationalPolynomial total;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (perm[i] > perm[j]) {
                    sign = -sign;
                }
            }
        }
        RationalPolynomial term = RationalPolynomial::constant(sign);
        for (std::size_t i = 0; i < n; ++i) {
            RationalPolynomial entry = RationalPolynomial::constant(Rational(-a(i, perm[i])));
            if (perm[i] == i) {
                entry += RationalPolynomial::x();
            }
            term *= entry;
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

CyclotomicNumber random_cyclotomic(std::mt19937& rng, std::uint64_t order)
{
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Rational> c(euler_phi(order));
    for (auto& x : c) {
        x = Rational(coeff(rng), 1 + std::abs(coeff(rng)));
        x.canonicalize();
    }
    return CyclotomicNumber::from_coordinates(order, c);
}

}  // namespace

TEST_SUITE("integer")
{
    TEST_CASE("number theory helpers")
    {
        CHECK(euler_phi(1) == 1);
        CHECK(euler_phi(12) == 4);
        CHECK(euler_phi(97) == 96);
        CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
        CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
        CHECK(primes_up_to(100000).size() == 9592);
        CHECK(is_prime(1000000007));
        CHECK_FALSE(is_prime(1000000007ULL * 3));
        CHECK(reduce_mod(-7, 5) == 3);
    }

    TEST_CASE("rational parsing")
    {
        CHECK(parse_rational("9/10") == Rational(9, 10));
        CHECK(parse_rational("-6/4") == Rational(-3, 2));
        CHECK(to_string(parse_rational("4/2")) == "2");
        CHECK_THROWS_AS(parse_rational("1/0"), poteq::InvalidArgument);
        CHECK_THROWS_AS(parse_rational("0.5"), poteq::InvalidArgument);
        CHECK_THROWS_AS(parse_integer(""), poteq::InvalidArgument);
    }
}

TEST_SUITE("root of unity")
{
    TEST_CASE("rou_pow examples")
    {
        CHECK(rou_pow(RootOfUnity(4, 1), 2) == RootOfUnity(2, 1));
        const RootOfUnity id = rou_pow(RootOfUnity(6, 1), 6);
        CHECK(id.order() == 1);
        CHECK(id.exponent() == 0);
        const RootOfUnity z = rou_pow(RootOfUnity(12, 5), 3);
        CHECK(z.order() == 4);
        CHECK(z.exponent() == 1);
    }

    TEST_CASE("canonical form")
    {
        const RootOfUnity z(12, 8);
        CHECK(z.order() == 3);
        CHECK(z.exponent() == 2);
        CHECK(RootOfUnity(5, -1) == RootOfUnity(5, 4));
        CHECK(RootOfUnity(7, 14) == RootOfUnity::one());
        CHECK_THROWS_AS(RootOfUnity(0, 1), poteq::InvalidArgument);
    }

    TEST_CASE("power laws on random roots")
    {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> order(1, 60);
        std::uniform_int_distribution<int> exp(-100, 100);
        for (int trial = 0; trial < 500; ++trial) {
            const RootOfUnity z(static_cast<std::uint64_t>(order(rng)), exp(rng));
            const int a = exp(rng);
            const int b = exp(rng);
            CHECK(z.pow(static_cast<std::int64_t>(z.order())) == RootOfUnity::one());
            CHECK(z.pow(a).pow(b) == z.pow(static_cast<std::int64_t>(a) * b));
            CHECK(z.pow(a) * z.pow(b) == z.pow(a + b));
            CHECK(std::gcd(z.exponent(), z.order()) == 1);
        }
    }
}

TEST_SUITE("polynomial")
{
    TEST_CASE("cyclotomic polynomials agree with the Mobius product")
    {
        for (std::uint64_t m = 1; m <= 60; ++m) {
            const RationalPolynomial& phi = cyclotomic_polynomial(m);
            CHECK(phi == cyclotomic_by_mobius(m));
            CHECK(phi.degree() == static_cast<long>(euler_phi(m)));
        }
        CHECK(cyclotomic_polynomial(4).to_string() == "x^2 + 1");
        CHECK(cyclotomic_polynomial(6).to_string() == "x^2 - x + 1");
    }

    TEST_CASE("division identity")
    {
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> c(-5, 5);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rational> av(7), bv(4);
            for (auto& x : av) x = c(rng);
            for (auto& x : bv) x = c(rng);
            const RationalPolynomial a(av), b(bv);
            if (b.is_zero()) {
                continue;
            }
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }

    TEST_CASE("gcd and squarefree part")
    {
        const RationalPolynomial x = RationalPolynomial::x();
        const RationalPolynomial one = RationalPolynomial::constant(1);
        const RationalPolynomial p = (x - one) * (x - one) * (x + one);
        CHECK(squarefree_part(p) == (x - one) * (x + one));
        CHECK(gcd(p, x - one) == x - one);
        CHECK(gcd(x, x + one) == one);
    }
}

TEST_SUITE("cyclotomic")
{
    TEST_CASE("cyclo_eq examples")
    {
        const CyclotomicNumber z3(RootOfUnity(3, 1));
        CHECK(cyclo_eq(CyclotomicNumber(1) + z3 + z3 * z3, CyclotomicNumber(0)));
        CHECK(cyclo_eq(z3.embed(6), CyclotomicNumber(RootOfUnity(6, 2))));
        CHECK_FALSE(cyclo_eq(CyclotomicNumber(RootOfUnity(5, 1)), CyclotomicNumber(RootOfUnity(5, 2))));
    }

    TEST_CASE("coordinate count is phi(m)")
    {
        for (std::uint64_t m : {1, 2, 3, 4, 5, 8, 12, 15}) {
            CHECK(CyclotomicNumber(RootOfUnity(m, 1)).coordinates().size() == euler_phi(m));
        }
        CHECK_THROWS_AS(CyclotomicNumber::from_coordinates(5, {1, 2}), poteq::InvalidArgument);
    }

    TEST_CASE("roots of unity multiply like RootOfUnity")
    {
        for (std::uint64_t a = 1; a <= 12; ++a) {
            for (std::uint64_t b = 1; b <= 12; ++b) {
                const RootOfUnity x(a, 1);
                const RootOfUnity y(b, -1);
                CHECK(CyclotomicNumber(x) * CyclotomicNumber(y) == CyclotomicNumber(x * y));
            }
        }
        CHECK(CyclotomicNumber(RootOfUnity(4, 1)).pow(2) == CyclotomicNumber(-1));
        CHECK(CyclotomicNumber(RootOfUnity(2, 1)).to_rational() == std::optional<Rational>(-1));
        CHECK_FALSE(CyclotomicNumber(RootOfUnity(3, 1)).to_rational().has_value());
    }

    TEST_CASE("ring axioms on random triples")
    {
        std::mt19937 rng(5);
        const std::vector<std::uint64_t> orders{1, 3, 4, 5, 6, 8, 12};
        std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = random_cyclotomic(rng, orders[pick(rng)]);
            const auto b = random_cyclotomic(rng, orders[pick(rng)]);
            const auto c = random_cyclotomic(rng, orders[pick(rng)]);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
        }
    }

    TEST_CASE("embedding then retracting is the identity")
    {
        std::mt19937 rng(8);
        const std::vector<std::pair<std::uint64_t, std::uint64_t>> towers{{1, 4}, {3, 12}, {4, 12}, {5, 15}, {4, 8}};
        for (const auto& [small, big] : towers) {
            for (int trial = 0; trial < 10; ++trial) {
                const auto x = random_cyclotomic(rng, small);
                auto back = x.embed(big).retract(small);
                REQUIRE(back.has_value());
                CHECK(back->coordinates() == x.coordinates());
            }
        }
        // zeta_8 is not in Q(zeta_4).
        CHECK_FALSE(CyclotomicNumber(RootOfUnity(8, 1)).retract(4).has_value());
        CHECK_THROWS_AS(CyclotomicNumber(RootOfUnity(3, 1)).embed(4), poteq::InvalidArgument);
    }
}

TEST_SUITE("laurent")
{
    const auto x = LaurentPolynomial::monomial({1});
    const auto xinv = LaurentPolynomial::monomial({-1});
    const auto one = LaurentPolynomial::constant(1, 1);

    TEST_CASE("laurent_pow_eq examples")
    {
        const auto f = x + xinv;
        CHECK(laurent_pow_eq(f, f, 5));
        CHECK(laurent_pow_eq(x, LaurentPolynomial::monomial({1}, -1), 2));
        // (x + x^-1)^2 = x^2 + 2 + x^-2, (x + 1)^2 = x^2 + 2x + 1
        CHECK((f * f).to_string() == "x^2 + 2 + x^-2");
        CHECK(((x + one) * (x + one)).to_string() == "x^2 + 2*x + 1");
        CHECK_FALSE(laurent_pow_eq(f, x + one, 2));
    }

    TEST_CASE("errors")
    {
        CHECK_THROWS_AS(laurent_pow_eq(x, LaurentPolynomial::monomial({1, 0}), 2), poteq::InvalidArgument);
        CHECK_THROWS_AS(laurent_pow_eq(x, x, 0), poteq::InvalidArgument);
    }

    TEST_CASE("canonical terms")
    {
        auto p = x + xinv - x;
        CHECK(p == xinv);
        CHECK(p.terms().size() == 1);
        CHECK((x - x).is_zero());
        CHECK(((x + one).pow(3)).coefficient({1}) == 3);
    }

    TEST_CASE("m = 1 compares the term maps")
    {
        std::mt19937 rng(21);
        std::uniform_int_distribution<int> e(-2, 2);
        std::uniform_int_distribution<int> c(-1, 1);
        for (int trial = 0; trial < 200; ++trial) {
            LaurentPolynomial f(2), g(2);
            for (int t = 0; t < 3; ++t) {
                f.add_term({e(rng), e(rng)}, c(rng));
                g.add_term({e(rng), e(rng)}, c(rng));
            }
            CHECK(laurent_pow_eq(f, g, 1) == (f.terms() == g.terms()));
        }
    }
}

TEST_SUITE("matrix")
{
    TEST_CASE("characteristic polynomial matches the Leibniz expansion")
    {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> entry(-4, 4);
        for (std::size_t n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 25; ++trial) {
                RationalMatrix a(n);
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        a(i, j) = Rational(entry(rng), 1 + trial % 3);
                        a(i, j).canonicalize();
                    }
                }
                CHECK(a.characteristic_polynomial() == charpoly_leibniz(a));
                CHECK(a.characteristic_polynomial()(Rational(0)) * (n % 2 ? -1 : 1) == a.determinant());
            }
        }
    }

    TEST_CASE("inverse and powers")
    {
        const RationalMatrix a{{2, 1}, {1, 1}};
        CHECK(a * a.inverse() == RationalMatrix::identity(2));
        CHECK(a.pow(5) == a * a * a * a * a);
        CHECK(a.pow(0) == RationalMatrix::identity(2));
        CHECK_THROWS_AS((RationalMatrix{{1, 2}, {2, 4}}).inverse(), poteq::InvalidArgument);
        // Cayley-Hamilton
        CHECK(a.evaluate(a.characteristic_polynomial()).is_zero());
    }

    TEST_CASE("kronecker eigenvalues are products")
    {
        const auto a = RationalMatrix::diagonal({2, 3});
        const auto b = RationalMatrix::diagonal({5, 7});
        const auto x = RationalPolynomial::x();
        auto lin = [&](long r) { return x - RationalPolynomial::constant(r); };
        CHECK(kronecker(a, b).characteristic_polynomial() == lin(10) * lin(14) * lin(15) * lin(21));
    }
}
