#include "poteq/density/component.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "poteq/error.hpp"

namespace poteq::density {

namespace {

Permutation compose(const Permutation& p, const Permutation& q)
{
    Permutation out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        out[i] = p[q[i]];
    }
    return out;
}

Permutation identity_permutation(std::size_t degree)
{
    Permutation id(degree);
    for (std::size_t i = 0; i < degree; ++i) {
        id[i] = static_cast<std::uint32_t>(i);
    }
    return id;
}

void validate_permutation(const Permutation& p, std::size_t degree)
{
    if (p.size() != degree) {
        throw InvalidArgument("permutation has " + std::to_string(p.size()) + " images, expected " +
                              std::to_string(degree));
    }
    std::vector<bool> seen(degree, false);
    for (std::uint32_t v : p) {
        if (v >= degree || seen[v]) {
            throw InvalidArgument("images do not form a permutation of 0.." + std::to_string(degree - 1));
        }
        seen[v] = true;
    }
}

}  // namespace

PermutationGroup PermutationGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                                            std::size_t max_order)
{
    if (degree == 0) {
        throw InvalidArgument("permutation degree must be positive");
    }
    for (const auto& g : generators) {
        validate_permutation(g, degree);
    }
    PermutationGroup group;
    group.degree_ = degree;
    group.generators_ = std::move(generators);
    group.elements_.push_back(identity_permutation(degree));
    group.index_.emplace(group.elements_.front(), 0);
    // Breadth-first closure under right multiplication by generators.
    for (std::size_t i = 0; i < group.elements_.size(); ++i) {
        for (const auto& g : group.generators_) {
            Permutation next = compose(group.elements_[i], g);
            if (group.index_.contains(next)) {
                continue;
            }
            if (group.elements_.size() >= max_order) {
                throw InvalidArgument("group order exceeds " + std::to_string(max_order));
            }
            group.index_.emplace(next, group.elements_.size());
            group.elements_.push_back(std::move(next));
        }
    }
    return group;
}

PermutationGroup PermutationGroup::symmetric(std::size_t degree)
{
    std::vector<Permutation> gens;
    if (degree >= 2) {
        Permutation swap = identity_permutation(degree);
        std::swap(swap[0], swap[1]);
        gens.push_back(swap);
    }
    if (degree >= 3) {
        Permutation cycle(degree);
        for (std::size_t i = 0; i < degree; ++i) {
            cycle[i] = static_cast<std::uint32_t>((i + 1) % degree);
        }
        gens.push_back(cycle);
    }
    return generate(degree, std::move(gens));
}

PermutationGroup PermutationGroup::alternating(std::size_t degree)
{
    // 3-cycles (0 1 i) generate A_n.
    std::vector<Permutation> gens;
    for (std::size_t i = 2; i < degree; ++i) {
        Permutation c = identity_permutation(degree);
        c[0] = 1;
        c[1] = static_cast<std::uint32_t>(i);
        c[i] = 0;
        gens.push_back(c);
    }
    return generate(degree, std::move(gens));
}

std::optional<std::size_t> PermutationGroup::find(const Permutation& p) const
{
    auto it = index_.find(p);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t PermutationGroup::index_of(const Permutation& p) const
{
    validate_permutation(p, degree_);
    if (auto i = find(p)) {
        return *i;
    }
    throw InvalidArgument("permutation is not an element of the group");
}

std::size_t PermutationGroup::multiply(std::size_t a, std::size_t b) const
{
    return index_.at(compose(elements_.at(a), elements_.at(b)));
}

std::size_t PermutationGroup::inverse(std::size_t a) const
{
    const Permutation& p = elements_.at(a);
    Permutation inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        inv[p[i]] = static_cast<std::uint32_t>(i);
    }
    return index_.at(inv);
}

std::size_t PermutationGroup::conjugate(std::size_t g, std::size_t x) const
{
    return multiply(multiply(g, x), inverse(g));
}

std::vector<std::size_t> PermutationGroup::subgroup(const std::vector<Permutation>& generators) const
{
    std::vector<std::size_t> gens;
    for (const auto& g : generators) {
        gens.push_back(index_of(g));
    }
    std::vector<std::size_t> out{0};
    std::vector<bool> seen(order(), false);
    seen[0] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t g : gens) {
            const std::size_t next = multiply(out[i], g);
            if (!seen[next]) {
                seen[next] = true;
                out.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> PermutationGroup::conjugacy_class(std::size_t x) const
{
    // Orbit of x under conjugation by the generators.
    std::vector<std::size_t> out{x};
    std::vector<bool> seen(order(), false);
    seen[x] = true;
    std::vector<std::size_t> gens;
    for (const auto& g : generators_) {
        gens.push_back(index_.at(g));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t g : gens) {
            const std::size_t next = conjugate(g, out[i]);
            if (!seen[next]) {
                seen[next] = true;
                out.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_even(const Permutation& p)
{
    std::vector<bool> seen(p.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        std::size_t length = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++length;
        }
        transpositions += length - 1;
    }
    return transpositions % 2 == 0;
}

ComponentModel::ComponentModel(PermutationGroup group, const std::vector<Permutation>& normal_generators)
    : group_(std::move(group))
{
    const std::vector<std::size_t> normal = group_.subgroup(normal_generators);
    std::vector<bool> in_normal(group_.order(), false);
    for (std::size_t n : normal) {
        in_normal[n] = true;
    }
    for (const auto& g : group_.generators()) {
        const std::size_t gi = group_.index_of(g);
        for (std::size_t n : normal) {
            if (!in_normal[group_.conjugate(gi, n)]) {
                throw InvalidArgument("the given subgroup is not normal");
            }
        }
    }
    constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();
    component_of_.assign(group_.order(), unassigned);
    for (std::size_t g = 0; g < group_.order(); ++g) {
        if (component_of_[g] != unassigned) {
            continue;
        }
        const std::size_t id = components_.size();
        std::vector<std::size_t> coset;
        for (std::size_t n : normal) {
            const std::size_t e = group_.multiply(g, n);
            component_of_[e] = id;
            coset.push_back(e);
        }
        std::sort(coset.begin(), coset.end());
        components_.push_back(std::move(coset));
    }
}

ClassStableSet::ClassStableSet(const ComponentModel& model, std::vector<std::size_t> elements)
    : elements_(std::move(elements)), member_(model.group().order(), false)
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    const auto& group = model.group();
    for (std::size_t e : elements_) {
        if (e >= group.order()) {
            throw InvalidArgument("element index out of range");
        }
        member_[e] = true;
    }
    for (const auto& g : group.generators()) {
        const std::size_t gi = group.index_of(g);
        for (std::size_t e : elements_) {
            if (!member_[group.conjugate(gi, e)]) {
                throw InvalidArgument("set is not stable under conjugation");
            }
        }
    }
    coset_union_ = true;
    for (const auto& component : model.components()) {
        const auto hits = std::count_if(component.begin(), component.end(), [&](std::size_t e) { return member_[e]; });
        if (hits != 0 && static_cast<std::size_t>(hits) != component.size()) {
            coset_union_ = false;
            break;
        }
    }
}

ClassStableSet ClassStableSet::all(const ComponentModel& model)
{
    std::vector<std::size_t> every(model.group().order());
    for (std::size_t i = 0; i < every.size(); ++i) {
        every[i] = i;
    }
    return {model, std::move(every)};
}

ClassStableSet ClassStableSet::empty(const ComponentModel& model) { return {model, {}}; }

ClassStableSet ClassStableSet::conjugacy_class(const ComponentModel& model, std::size_t element)
{
    return {model, model.group().conjugacy_class(element)};
}

ClassStableSet ClassStableSet::component(const ComponentModel& model, std::size_t component)
{
    return {model, model.components().at(component)};
}

ClassStableSet ClassStableSet::join(const ComponentModel& model, const ClassStableSet& a, const ClassStableSet& b)
{
    std::vector<std::size_t> elements = a.elements_;
    elements.insert(elements.end(), b.elements_.begin(), b.elements_.end());
    return {model, std::move(elements)};
}

Rational chebotarev_density(const ComponentModel& model, const ClassStableSet& x)
{
    std::size_t contained = 0;
    for (const auto& component : model.components()) {
        if (std::all_of(component.begin(), component.end(), [&](std::size_t e) { return x.contains(e); })) {
            ++contained;
        }
    }
    Rational d(contained, model.component_count());
    d.canonicalize();
    return d;
}

std::optional<std::size_t> find_component_in(const ComponentModel& model, const ClassStableSet& x)
{
    const auto& components = model.components();
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        if (std::all_of(c.begin(), c.end(), [&](std::size_t e) { return x.contains(e); })) {
            return i;
        }
    }
    return std::nullopt;
}

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard)
{
    std::uint64_t z = seed + (shard + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

namespace {

std::uint64_t run_shard(const ClassStableSet& x, std::uint64_t order, std::uint64_t trials, std::uint64_t seed)
{
    std::mt19937_64 engine(seed);
    // Draws at or above 2^64 - (2^64 mod order) are rejected so that
    // draw % order is exactly uniform.
    const std::uint64_t excess = (std::numeric_limits<std::uint64_t>::max() % order + 1) % order;
    const std::uint64_t limit = 0 - excess;
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::uint64_t draw = engine();
        while (excess != 0 && draw >= limit) {
            draw = engine();
        }
        if (x.contains(static_cast<std::size_t>(draw % order))) {
            ++hits;
        }
    }
    return hits;
}

}  // namespace

DensityReport sample_frobenius(const ComponentModel& model, const ClassStableSet& x, std::uint64_t trials,
                               std::uint64_t seed, unsigned threads)
{
    if (trials == 0) {
        throw InvalidArgument("sample_frobenius: trials must be positive");
    }
    const std::uint64_t order = model.group().order();
    const std::uint64_t shards = (trials + kSampleShardSize - 1) / kSampleShardSize;
    std::vector<std::uint64_t> hits(shards, 0);
    auto shard_trials = [&](std::uint64_t s) { return std::min(kSampleShardSize, trials - s * kSampleShardSize); };
    auto work = [&](unsigned worker, unsigned stride) {
        for (std::uint64_t s = worker; s < shards; s += stride) {
            hits[s] = run_shard(x, order, shard_trials(s), shard_seed(seed, s));
        }
    };
    const unsigned pool = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(shards)));
    if (pool == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < pool; ++w) {
            workers.emplace_back(work, w, pool);
        }
    }

    DensityReport report;
    std::uint64_t done = 0;
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < shards; ++s) {
        done += shard_trials(s);
        count += hits[s];
        report.checkpoints.push_back({done, count, done});
        Rational d(count, done);
        d.canonicalize();
        if (s == 0 || d > report.running_sup) {
            report.running_sup = d;
        }
    }
    report.count = count;
    report.total = trials;
    report.empirical = Rational(count, trials);
    report.empirical.canonicalize();
    return report;
}

namespace {

Permutation parse_images(std::istringstream& fields, std::size_t line_no)
{
    Permutation p;
    long long v = 0;
    while (fields >> v) {
        if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": image out of range");
        }
        p.push_back(static_cast<std::uint32_t>(v));
    }
    if (!fields.eof()) {
        throw InvalidArgument("line " + std::to_string(line_no) + ": expected integer images");
    }
    return p;
}

}  // namespace

GroupSpec read_group_spec(std::istream& in)
{
    std::size_t degree = 0;
    std::vector<Permutation> gens;
    std::vector<Permutation> normal;
    std::vector<std::pair<std::string, Permutation>> selectors;
    bool all = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (keyword == "degree") {
            long long d = 0;
            if (!(fields >> d) || d <= 0 || degree != 0) {
                throw InvalidArgument(where + "bad or repeated degree");
            }
            degree = static_cast<std::size_t>(d);
            continue;
        }
        if (degree == 0) {
            throw InvalidArgument(where + "'degree' must come first");
        }
        if (keyword == "all") {
            all = true;
        } else if (keyword == "gen") {
            gens.push_back(parse_images(fields, line_no));
        } else if (keyword == "normal") {
            normal.push_back(parse_images(fields, line_no));
        } else if (keyword == "class" || keyword == "coset") {
            selectors.emplace_back(keyword, parse_images(fields, line_no));
        } else {
            throw InvalidArgument(where + "unknown keyword '" + keyword + "'");
        }
    }
    if (degree == 0) {
        throw InvalidArgument("group description has no 'degree' line");
    }

    ComponentModel model(PermutationGroup::generate(degree, std::move(gens)), normal);
    ClassStableSet target = all ? ClassStableSet::all(model) : ClassStableSet::empty(model);
    for (const auto& [kind, perm] : selectors) {
        const std::size_t e = model.group().index_of(perm);
        target = ClassStableSet::join(model, target, kind == "class"
                                                  ? ClassStableSet::conjugacy_class(model, e)
                                                  : ClassStableSet::component(model, model.component_of(e)));
    }
    return {std::move(model), std::move(target)};
}

}  // namespace poteq::density
