#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "poteq/exactnum/cyclotomic.hpp"
#include "poteq/exactnum/integer.hpp"

namespace poteq::modular {

using exactnum::CyclotomicNumber;
using exactnum::Integer;

/// Hecke eigenvalues a_p indexed by prime. Integer data is held as
/// order-1 cyclotomic numbers, so tables with cyclotomic coefficients load
/// through the same type.
struct EigenvalueTable {
    std::string label;
    /// Product of the primes excluded as bad.
    Integer level_hint = 1;
    int weight = 2;
    std::map<std::uint64_t, CyclotomicNumber> entries;

    std::vector<std::uint64_t> primes() const;
    /// Throws InvalidArgument when an entry's prime divides level_hint or is not prime.
    void validate() const;
};

/// JSON-lines: a header {"label","level_hint","weight"}, then one
/// {"p": int, "ap": "<integer>"} per prime, strictly ascending. A
/// cyclotomic a_p is written {"p": int, "ap": ["c0", "c1", ...], "order": m}
/// with phi(m) rational coordinates in the power basis of zeta_m.
EigenvalueTable read_table(std::istream& in);
void write_table(std::ostream& out, const EigenvalueTable& table);

}  // namespace poteq::modular
