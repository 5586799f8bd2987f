#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

#include "poteq/error.hpp"
#include "poteq/exactnum/laurent.hpp"

namespace poteq::weights {

using Weight = std::vector<std::int64_t>;
using exactnum::LaurentPolynomial;

/// Torus weights of a representation, with multiplicity. Stored in
/// descending lexicographic order, so equality is list equality.
class WeightMultiset {
public:
    /// Throws InvalidArgument when empty or when weight lengths differ.
    explicit WeightMultiset(std::vector<Weight> weights);
    /// Same, but also pins the rank (needed for rank 0 and for checks).
    WeightMultiset(std::size_t rank, std::vector<Weight> weights);

    std::size_t rank() const { return rank_; }
    std::size_t size() const { return weights_.size(); }
    const std::vector<Weight>& weights() const { return weights_; }
    const Weight& leading() const { return weights_.front(); }

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
    void normalize();

    std::size_t rank_;
    std::vector<Weight> weights_;
};

class NonIntegralLeadingWeight : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class VerificationFailed : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Raised when char_power_equal holds for multisets that differ.
class TheoremViolation : public Anomaly {
public:
    using Anomaly::Anomaly;
};

/// Sum of x^lambda over the weights.
LaurentPolynomial character(const WeightMultiset& w);

/// All sums of ordered k-tuples; n^k weights.
WeightMultiset tensor_power(const WeightMultiset& w, std::uint64_t k);

/// All sums over k-element sub-multisets of weight positions; C(n+k-1, k) weights.
WeightMultiset symmetric_power(const WeightMultiset& w, std::uint64_t k);

/// C(n+k-1, k), throwing on overflow.
std::uint64_t symmetric_power_size(std::uint64_t n, std::uint64_t k);

/// Inverts symmetric_power: finds the size-n multiset whose k-th symmetric
/// power is `s`.
WeightMultiset recover_from_symmetric_power(const WeightMultiset& s, std::uint64_t k, std::uint64_t n);

bool char_power_equal(const WeightMultiset& w1, const WeightMultiset& w2, std::uint64_t m);

/// char_power_equal, plus the rigidity check: a true result for multisets
/// that differ raises TheoremViolation.
bool conclude_equivalence(const WeightMultiset& w1, const WeightMultiset& w2, std::uint64_t m);

/// One weight per line, comma-separated integers; '#' starts a comment and
/// blank lines are skipped. Multiplicity is repetition.
WeightMultiset read_multiset(std::istream& in);
/// Writes in descending lexicographic order, one weight per line.
void write_multiset(std::ostream& out, const WeightMultiset& w);

}  // namespace poteq::weights
