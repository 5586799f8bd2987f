#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <vector>

#include "poteq/density/prime_density.hpp"

namespace poteq::density {

/// Images of 0..d-1. Composition is (p * q)(i) = p[q[i]].
using Permutation = std::vector<std::uint32_t>;

/// A finite permutation group, fully enumerated. Element 0 is the identity.
class PermutationGroup {
public:
    static constexpr std::size_t kMaxOrder = 10000;

    /// Closes the generators under multiplication. Throws InvalidArgument on
    /// malformed permutations or when the group exceeds `max_order`.
    static PermutationGroup generate(std::size_t degree, std::vector<Permutation> generators,
                                     std::size_t max_order = kMaxOrder);
    static PermutationGroup symmetric(std::size_t degree);
    static PermutationGroup alternating(std::size_t degree);

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const Permutation& element(std::size_t i) const { return elements_.at(i); }

    std::optional<std::size_t> find(const Permutation& p) const;
    /// Like find, but throws InvalidArgument when p is not in the group.
    std::size_t index_of(const Permutation& p) const;

    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;
    /// g x g^-1
    std::size_t conjugate(std::size_t g, std::size_t x) const;

    /// Indices of the subgroup generated by the given elements.
    std::vector<std::size_t> subgroup(const std::vector<Permutation>& generators) const;
    std::vector<std::size_t> conjugacy_class(std::size_t x) const;

private:
    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::map<Permutation, std::size_t> index_;
};

bool is_even(const Permutation& p);

/// Gamma with a normal subgroup N standing in for the identity component;
/// the cosets of N are the components, numbered by first appearance in the
/// group's element order so that N itself is component 0.
class ComponentModel {
public:
    /// Throws InvalidArgument when N is not normal in Gamma.
    ComponentModel(PermutationGroup group, const std::vector<Permutation>& normal_generators);

    const PermutationGroup& group() const { return group_; }
    const std::vector<std::size_t>& normal_subgroup() const { return components_.front(); }
    std::size_t component_count() const { return components_.size(); }
    const std::vector<std::vector<std::size_t>>& components() const { return components_; }
    std::size_t component_of(std::size_t element) const { return component_of_.at(element); }

private:
    PermutationGroup group_;
    std::vector<std::vector<std::size_t>> components_;
    std::vector<std::size_t> component_of_;
};

/// A subset of Gamma closed under conjugation.
class ClassStableSet {
public:
    /// Throws InvalidArgument unless the set is closed under conjugation by
    /// every generator of the group.
    ClassStableSet(const ComponentModel& model, std::vector<std::size_t> elements);

    static ClassStableSet all(const ComponentModel& model);
    static ClassStableSet empty(const ComponentModel& model);
    /// The conjugacy class of an element.
    static ClassStableSet conjugacy_class(const ComponentModel& model, std::size_t element);
    /// One component. Throws InvalidArgument unless the coset is stable
    /// under conjugation, i.e. its image in Gamma/N is central.
    static ClassStableSet component(const ComponentModel& model, std::size_t component);
    static ClassStableSet join(const ComponentModel& model, const ClassStableSet& a, const ClassStableSet& b);

    const std::vector<std::size_t>& elements() const { return elements_; }
    bool contains(std::size_t element) const { return member_.at(element); }
    bool is_coset_union() const { return coset_union_; }
    std::size_t size() const { return elements_.size(); }

private:
    std::vector<std::size_t> elements_;
    std::vector<bool> member_;
    bool coset_union_ = false;
};

/// |Psi| / |Phi|, Psi the components contained in X.
Rational chebotarev_density(const ComponentModel& model, const ClassStableSet& x);

/// Lowest-numbered component contained in X.
std::optional<std::size_t> find_component_in(const ComponentModel& model, const ClassStableSet& x);

/// Trials per independently seeded shard.
inline constexpr std::uint64_t kSampleShardSize = 1U << 14U;

/// Seed of shard `shard` derived from the user seed with SplitMix64.
std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard);

/// Draws `trials` uniform elements of Gamma and counts those in X. Each
/// shard of kSampleShardSize trials runs its own std::mt19937_64 seeded by
/// shard_seed, and indices are drawn by rejection so the output depends
/// only on (seed, trials), never on `threads`. Checkpoints sit at shard
/// boundaries.
DensityReport sample_frobenius(const ComponentModel& model, const ClassStableSet& x, std::uint64_t trials,
                               std::uint64_t seed, unsigned threads = 1);

/// A group description read from text. See read_group_spec.
struct GroupSpec {
    ComponentModel model;
    ClassStableSet target;
};

/// Line-oriented format, '#' comments:
///   degree D            number of points, required first
///   gen i0 i1 ...       generator of Gamma as 0-based images
///   normal i0 i1 ...    generator of N (none: N trivial)
///   class i0 i1 ...     add the conjugacy class of this element to X
///   coset i0 i1 ...     add the component containing this element to X
///                       (it must be conjugation stable)
///   all                 X = Gamma
/// X starts empty.
GroupSpec read_group_spec(std::istream& in);

}  // namespace poteq::density
