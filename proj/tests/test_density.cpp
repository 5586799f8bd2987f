#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "poteq/density/component.hpp"
#include "poteq/density/prime_density.hpp"
#include "poteq/error.hpp"
#include "poteq/exactnum/integer.hpp"

using namespace poteq::density;

namespace {

// Independent density: build each coset gN by hand and count the cosets
// lying entirely inside X.
Rational coset_density(const PermutationGroup& g, const std::vector<std::size_t>& n, const ClassStableSet& x)
{
    std::set<std::set<std::size_t>> cosets;
    for (std::size_t e = 0; e < g.order(); ++e) {
        std::set<std::size_t> c;
        for (auto k : n) c.insert(g.multiply(e, k));
        cosets.insert(c);
    }
    std::size_t inside = 0;
    for (const auto& c : cosets) {
        bool all = true;
        for (auto e : c) all = all && x.contains(e);
        inside += all;
    }
    Rational d(inside, cosets.size());
    d.canonicalize();
    return d;
}

// The distinct conjugacy classes of a group, by smallest member.
std::vector<std::vector<std::size_t>> classes(const PermutationGroup& g)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(g.order());
    for (std::size_t e = 0; e < g.order(); ++e) {
        if (seen[e]) continue;
        auto c = g.conjugacy_class(e);
        for (auto k : c) seen[k] = true;
        out.push_back(c);
    }
    return out;
}

ComponentModel s3_model() { return ComponentModel(PermutationGroup::symmetric(3), {{1, 2, 0}}); }

ComponentModel s4_model(bool klein)
{
    if (klein) return ComponentModel(PermutationGroup::symmetric(4), {{1, 0, 3, 2}, {2, 3, 0, 1}});
    return ComponentModel(PermutationGroup::symmetric(4), {{1, 2, 0, 3}, {0, 2, 3, 1}});
}

}  // namespace

TEST_SUITE("thresholds")
{
    TEST_CASE("exact values")
    {
        CHECK(threshold(2, 3) == Rational(1, 2));
        CHECK(threshold(3, 3) == Rational(2, 3));
        CHECK(threshold(1, 5) == 0);
        CHECK(lift_density(Rational(9, 10), 2) == Rational(4, 5));
        CHECK(lift_density(Rational(1, 2), 2) == 0);
        CHECK(lift_density(1, 7) == 1);
        CHECK_THROWS_AS(threshold(0, 2), poteq::InvalidArgument);
        CHECK_THROWS_AS(lift_density(Rational(3, 2), 2), poteq::InvalidArgument);
        CHECK_THROWS_AS(lift_density(Rational(1, 2), 0), poteq::InvalidArgument);
    }

    TEST_CASE("lift is positive exactly above 1 - 1/d")
    {
        for (std::uint64_t d = 1; d <= 12; ++d) {
            CHECK(lift_density(1 - Rational(1, d), d) == 0);
            for (long num = 0; num <= 60; ++num) {
                const Rational delta(num, 60);
                const Rational lifted = lift_density(delta, d);
                CHECK((lifted > 0) == (delta > 1 - Rational(1, d)));
                CHECK(lifted <= delta);
            }
        }
    }

    TEST_CASE("threshold is symmetric and below 1")
    {
        for (std::uint64_t a = 1; a <= 10; ++a)
            for (std::uint64_t b = 1; b <= 10; ++b) {
                CHECK(threshold(a, b) == threshold(b, a));
                CHECK(threshold(a, b) == std::min(1 - Rational(1, a), 1 - Rational(1, b)));
            }
    }
}

TEST_SUITE("groups")
{
    TEST_CASE("orders and classes")
    {
        CHECK(PermutationGroup::symmetric(4).order() == 24);
        CHECK(PermutationGroup::alternating(4).order() == 12);
        CHECK(PermutationGroup::symmetric(5).order() == 120);
        CHECK(classes(PermutationGroup::symmetric(4)).size() == 5);
        CHECK(classes(PermutationGroup::alternating(4)).size() == 4);
        const auto s3 = PermutationGroup::symmetric(3);
        CHECK(s3.element(0) == Permutation{0, 1, 2});
        for (std::size_t a = 0; a < s3.order(); ++a) CHECK(s3.multiply(a, s3.inverse(a)) == 0);
        CHECK(is_even({1, 2, 0}));
        CHECK_FALSE(is_even({1, 0, 2}));
    }

    TEST_CASE("malformed input")
    {
        CHECK_THROWS_AS(PermutationGroup::generate(3, {{0, 0, 1}}), poteq::InvalidArgument);
        CHECK_THROWS_AS(PermutationGroup::generate(3, {{0, 1}}), poteq::InvalidArgument);
        CHECK_THROWS_AS(PermutationGroup::generate(8, {{1, 0, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7, 0}}, 100),
                        poteq::InvalidArgument);
        // <(0 1)> is not normal in S3.
        CHECK_THROWS_AS(ComponentModel(PermutationGroup::symmetric(3), {{1, 0, 2}}), poteq::InvalidArgument);
        const auto m = s3_model();
        // A single transposition is not conjugation stable.
        CHECK_THROWS_AS(ClassStableSet(m, {m.group().index_of({1, 0, 2})}), poteq::InvalidArgument);
    }

    TEST_CASE("component numbering")
    {
        const auto m = s4_model(true);
        CHECK(m.component_count() == 6);
        CHECK(m.normal_subgroup().size() == 4);
        CHECK(m.component_of(0) == 0);
    }
}

TEST_SUITE("chebotarev")
{
    TEST_CASE("S3 odd coset")
    {
        const auto m = s3_model();
        const auto x = ClassStableSet::component(m, m.component_of(m.group().index_of({1, 0, 2})));
        CHECK(x.is_coset_union());
        CHECK(chebotarev_density(m, x) == Rational(1, 2));
        CHECK(find_component_in(m, x) == std::optional<std::size_t>(1));
    }

    TEST_CASE("S4 four-cycles")
    {
        const auto m = s4_model(false);
        const auto x = ClassStableSet::conjugacy_class(m, m.group().index_of({1, 2, 3, 0}));
        CHECK(x.size() == 6);
        CHECK_FALSE(x.is_coset_union());
        CHECK(chebotarev_density(m, x) == 0);
        CHECK_FALSE(find_component_in(m, x).has_value());
    }

    TEST_CASE("every class union of S4 against the coset oracle")
    {
        for (bool klein : {false, true}) {
            const auto m = s4_model(klein);
            const auto cls = classes(m.group());
            for (unsigned mask = 0; mask < (1U << cls.size()); ++mask) {
                std::vector<std::size_t> el;
                for (std::size_t i = 0; i < cls.size(); ++i)
                    if (mask & (1U << i)) el.insert(el.end(), cls[i].begin(), cls[i].end());
                const ClassStableSet x(m, el);
                const Rational d = chebotarev_density(m, x);
                CHECK(d == coset_density(m.group(), m.normal_subgroup(), x));
                const auto c = find_component_in(m, x);
                CHECK(c.has_value() == (d > 0));
                if (c) {
                    for (auto e : m.components()[*c]) CHECK(x.contains(e));
                }
            }
        }
    }

    TEST_CASE("trivial and full sets")
    {
        const auto m = s4_model(true);
        CHECK(chebotarev_density(m, ClassStableSet::all(m)) == 1);
        CHECK(chebotarev_density(m, ClassStableSet::empty(m)) == 0);
        const auto n = ClassStableSet::component(m, 0);
        const auto three_cycles = ClassStableSet::conjugacy_class(m, m.group().index_of({1, 2, 0, 3}));
        const auto j = ClassStableSet::join(m, n, three_cycles);
        CHECK(j.is_coset_union());
        CHECK(chebotarev_density(m, j) == Rational(1, 2));
        // The quotient is S3, so a transposition coset is not conjugation stable.
        const auto t = m.component_of(m.group().index_of({1, 0, 2, 3}));
        CHECK_THROWS_AS(ClassStableSet::component(m, t), poteq::InvalidArgument);
    }
}

TEST_SUITE("sampling")
{
    TEST_CASE("S3 sample lands near one half")
    {
        const auto m = s3_model();
        const auto x = ClassStableSet::component(m, 1);
        const auto r = sample_frobenius(m, x, 100000, 7, 1);
        CHECK(r.total == 100000);
        const double p = static_cast<double>(r.count) / 100000.0;
        CHECK(std::abs(p - 0.5) < 0.005);
        CHECK(std::abs(p - 0.5) < 3 * std::sqrt(0.25 / 100000.0));
        Rational expected(r.count, r.total);
        expected.canonicalize();
        CHECK(r.empirical == expected);
    }

    TEST_CASE("sampling is reproducible and thread independent")
    {
        const auto m = s4_model(true);
        const auto x = ClassStableSet::join(m, ClassStableSet::conjugacy_class(m, m.group().index_of({1, 0, 2, 3})),
                                            ClassStableSet::conjugacy_class(m, m.group().index_of({1, 2, 0, 3})));
        const auto base = sample_frobenius(m, x, 70000, 99, 1);
        for (unsigned t : {1U, 2U, 3U, 8U}) {
            const auto r = sample_frobenius(m, x, 70000, 99, t);
            CHECK(r.count == base.count);
            CHECK(r.running_sup == base.running_sup);
            REQUIRE(r.checkpoints.size() == base.checkpoints.size());
            for (std::size_t i = 0; i < r.checkpoints.size(); ++i) CHECK(r.checkpoints[i].count == base.checkpoints[i].count);
        }
        CHECK(sample_frobenius(m, x, 70000, 100, 1).count != base.count);
        CHECK(shard_seed(1, 0) != shard_seed(1, 1));
        CHECK(shard_seed(1, 0) != shard_seed(2, 0));
    }
}

TEST_SUITE("prime sets")
{
    TEST_CASE("empty and full sets")
    {
        const auto primes = poteq::exactnum::primes_up_to(1000);
        const auto cps = default_checkpoints(1000);
        CHECK(cps.back() == 1000);
        CHECK(cps.size() == 10);
        auto r = empirical_upper_density(PrimeSet::make({}, 1000), cps);
        CHECK(r.empirical == 0);
        CHECK(r.total == primes.size());
        r = empirical_upper_density(PrimeSet::make(primes, 1000), cps);
        CHECK(r.empirical == 1);
        CHECK(r.running_sup == 1);
    }

    TEST_CASE("primes congruent to 1 mod 4")
    {
        std::vector<std::uint64_t> s;
        for (auto p : poteq::exactnum::primes_up_to(100000))
            if (p % 4 == 1) s.push_back(p);
        const auto r = empirical_upper_density(PrimeSet::make(s, 100000), default_checkpoints(100000));
        CHECK(r.count == 4783);
        CHECK(r.total == 9592);
        CHECK(std::abs(r.empirical.get_d() - 0.5) < 0.02);
        CHECK(r.running_sup >= r.empirical);
    }

    TEST_CASE("running sup is the largest prefix ratio")
    {
        const std::vector<std::uint64_t> universe{2, 3, 5, 7, 11, 13};
        const auto r = relative_density({2, 3}, universe, {3, 7, 13});
        CHECK(r.checkpoints[0].count == 2);
        CHECK(r.checkpoints[0].total == 2);
        CHECK(r.running_sup == 1);
        CHECK(r.empirical == Rational(1, 3));
    }

    TEST_CASE("invalid sets")
    {
        CHECK_THROWS_AS(PrimeSet::make({4}, 10), poteq::InvalidArgument);
        CHECK_THROWS_AS(PrimeSet::make({11}, 10), poteq::InvalidArgument);
        CHECK_THROWS_AS(PrimeSet::make({3, 3}, 10), poteq::InvalidArgument);
        CHECK_THROWS_AS(empirical_upper_density(PrimeSet::make({3}, 10), {5}), poteq::InvalidArgument);
    }
}

TEST_SUITE("group files")
{
    TEST_CASE("bundled files parse to the expected models")
    {
        std::ifstream s3(POTEQ_DATA_DIR "/s3_odd_coset.group");
        REQUIRE(s3);
        const auto a = read_group_spec(s3);
        CHECK(a.model.group().order() == 6);
        CHECK(chebotarev_density(a.model, a.target) == Rational(1, 2));
        std::ifstream s4(POTEQ_DATA_DIR "/s4_four_cycles.group");
        REQUIRE(s4);
        const auto b = read_group_spec(s4);
        CHECK(b.model.group().order() == 24);
        CHECK(b.target.size() == 6);
        CHECK(chebotarev_density(b.model, b.target) == 0);
    }

    TEST_CASE("parse errors")
    {
        std::istringstream no_degree("gen 1 0\n");
        CHECK_THROWS_AS(read_group_spec(no_degree), poteq::InvalidArgument);
        std::istringstream bad_keyword("degree 2\ngen 1 0\nfoo 1\n");
        CHECK_THROWS_AS(read_group_spec(bad_keyword), poteq::InvalidArgument);
        std::istringstream outside("degree 3\ngen 1 0 2\nclass 1 2 0\n");
        CHECK_THROWS_AS(read_group_spec(outside), poteq::InvalidArgument);
        std::istringstream all("degree 2\ngen 1 0\nall\n");
        const auto spec = read_group_spec(all);
        CHECK(chebotarev_density(spec.model, spec.target) == 1);
    }
}
