#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "poteq/error.hpp"
#include "poteq/exactnum/integer.hpp"
#include "poteq/exactnum/matrix.hpp"

namespace poteq::localfield {

using exactnum::Integer;
using exactnum::RationalMatrix;

/// A finite extension F of Q_ell, known only through ell and [F : Q_ell].
struct LocalFieldSpec {
    std::uint64_t ell;
    std::uint64_t degree;

    /// Validates that ell is prime and degree >= 1.
    static LocalFieldSpec make(std::uint64_t ell, std::uint64_t degree);
};

/// The field Q_ell(zeta_{ell^f - 1}, zeta_{ell^a}): unramified of degree f,
/// then adjoin the ell^a-th roots of unity. Its degree is f * phi(ell^a).
struct RootWitness {
    std::uint64_t residue_degree = 1;  ///< f
    std::uint64_t ell_power = 0;       ///< a
    friend bool operator==(const RootWitness&, const RootWitness&) = default;
};

struct MaxRoots {
    Integer m0;
    RootWitness witness;
};

struct ExponentReport {
    std::uint64_t n = 1;
    LocalFieldSpec field{};
    /// d_F * (n!)^2
    std::uint64_t degree_bound = 1;
    Integer m0;
    RootWitness witness;
    /// m0!, omitted when m0 exceeds kMaxFactorialArgument.
    std::optional<Integer> paper_exponent;
    /// lcm of every achievable root-of-unity group order.
    Integer sharp_exponent;
};

/// Degree bounds beyond this are rejected; the enumeration is over all
/// residue degrees f <= D and the integers involved have ~D*log2(ell) bits.
inline constexpr std::uint64_t kMaxDegreeBound = 5000;
inline constexpr std::uint64_t kMaxFactorialArgument = 200000;

/// Size of the largest group of roots of unity in an extension of Q_ell of
/// degree at most D, with a field attaining it (smallest f on ties).
MaxRoots max_roots_of_unity(std::uint64_t ell, std::uint64_t degree_bound);

/// Every (f, a) with f * phi(ell^a) <= D, in increasing (f, a) order.
std::vector<RootWitness> achievable_fields(std::uint64_t ell, std::uint64_t degree_bound);

/// (ell^f - 1) * ell^a
Integer root_group_order(std::uint64_t ell, const RootWitness& w);

ExponentReport uniform_exponent(std::uint64_t n, const LocalFieldSpec& field);

/// {w >= 1 : phi(w) <= bound}, ascending.
std::vector<std::uint64_t> exponents_with_phi_at_most(std::uint64_t bound);
/// {w >= 1 : phi(w) <= (n!)^2}, ascending.
std::vector<std::uint64_t> candidate_global_exponents(std::uint64_t n);
Integer lcm_of(const std::vector<std::uint64_t>& values);

class NotInvertible : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotSemisimple : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Minimal polynomial squarefree, tested as: the squarefree part of the
/// characteristic polynomial annihilates the matrix.
bool is_semisimple(const RationalMatrix& a);

/// charpoly(A^m) == charpoly(B^m).
bool powers_share_charpoly(const RationalMatrix& a, const RationalMatrix& b, std::uint64_t m);

/// Smallest m >= 1 with A^m and B^m conjugate over the algebraic closure,
/// or nothing when no power of A is conjugate to the same power of B.
///
/// Eigenvalue ratios alpha_i / beta_j are the roots of the characteristic
/// polynomial of A (x) B^-1. Only roots of unity among them can pair up
/// eigenvalues, and their orders w (phi(w) <= n^2 <= (n!)^2) are found by
/// testing which cyclotomic polynomials divide it. The minimal exponent is
/// the lcm of the ratio orders along some pairing, hence a divisor of the
/// lcm of the orders found; those divisors are tried in ascending order.
std::optional<std::uint64_t> power_conjugate_exponent(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace poteq::localfield
