#include "poteq/exactnum/integer.hpp"

#include <algorithm>
#include <numeric>

#include "poteq/error.hpp"

namespace poteq::exactnum {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0) {
        return 0;
    }
    return a / std::gcd(a, b) * b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    if (m == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m)
{
    const auto sm = static_cast<__int128>(m);
    __int128 r = static_cast<__int128>(a) % sm;
    if (r < 0) {
        r += sm;
    }
    return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

Factorization factorize(std::uint64_t n)
{
    Factorization out;
    if (n < 2) {
        return out;
    }
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) {
            continue;
        }
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    if (n == 0) {
        return 0;
    }
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n)) {
        phi = phi / p * (p - 1);
    }
    return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> primes;
    if (limit < 2) {
        return primes;
    }
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

Integer factorial(std::uint64_t n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer integer_pow(std::uint64_t base, std::uint64_t exp)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

namespace {

bool is_decimal(const std::string& s)
{
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) {
        return false;
    }
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Integer parse_integer(const std::string& text)
{
    if (!is_decimal(text)) {
        throw InvalidArgument("not an integer: '" + text + "'");
    }
    const std::string digits = text[0] == '+' ? text.substr(1) : text;
    return Integer(digits, 10);
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(text));
    }
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+') {
        throw InvalidArgument("bad denominator in '" + text + "'");
    }
    const Integer den = parse_integer(den_text);
    if (den == 0) {
        throw InvalidArgument("zero denominator in '" + text + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace poteq::exactnum
