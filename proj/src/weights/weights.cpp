#include "poteq/weights/weights.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

namespace poteq::weights {

namespace {

void sort_descending(std::vector<Weight>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

Weight add(const Weight& a, const Weight& b)
{
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

void check_same_rank(const WeightMultiset& w1, const WeightMultiset& w2, const char* what)
{
    if (w1.rank() != w2.rank()) {
        throw InvalidArgument(std::string(what) + ": rank mismatch " + std::to_string(w1.rank()) + " vs " +
                              std::to_string(w2.rank()));
    }
}

std::string format_weight(const Weight& w)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        os << (i ? "," : "") << w[i];
    }
    return os.str();
}

std::size_t leading_rank(const std::vector<Weight>& weights) { return weights.empty() ? 0 : weights.front().size(); }

}  // namespace

WeightMultiset::WeightMultiset(std::vector<Weight> weights)
    : rank_(leading_rank(weights)), weights_(std::move(weights))
{
    normalize();
}

WeightMultiset::WeightMultiset(std::size_t rank, std::vector<Weight> weights) : rank_(rank), weights_(std::move(weights))
{
    normalize();
}

void WeightMultiset::normalize()
{
    if (weights_.empty()) {
        throw InvalidArgument("a weight multiset needs at least one weight");
    }
    for (const Weight& w : weights_) {
        if (w.size() != rank_) {
            throw InvalidArgument("weight (" + format_weight(w) + ") has length " + std::to_string(w.size()) +
                                  ", expected rank " + std::to_string(rank_));
        }
    }
    sort_descending(weights_);
}

LaurentPolynomial character(const WeightMultiset& w)
{
    LaurentPolynomial chi(w.rank());
    for (const Weight& lambda : w.weights()) {
        chi.add_term(lambda, 1);
    }
    return chi;
}

WeightMultiset tensor_power(const WeightMultiset& w, std::uint64_t k)
{
    if (k == 0) {
        throw InvalidArgument("tensor_power: k must be positive");
    }
    std::vector<Weight> current = w.weights();
    for (std::uint64_t step = 1; step < k; ++step) {
        std::vector<Weight> next;
        next.reserve(current.size() * w.size());
        for (const Weight& a : current) {
            for (const Weight& b : w.weights()) {
                next.push_back(add(a, b));
            }
        }
        current = std::move(next);
    }
    return WeightMultiset(w.rank(), std::move(current));
}

std::uint64_t symmetric_power_size(std::uint64_t n, std::uint64_t k)
{
    // C(n+k-1, k) computed incrementally; each prefix is itself a binomial.
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - 1 + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max()) {
            throw InvalidArgument("symmetric power dimension overflows");
        }
    }
    return static_cast<std::uint64_t>(c);
}

WeightMultiset symmetric_power(const WeightMultiset& w, std::uint64_t k)
{
    if (k == 0) {
        throw InvalidArgument("symmetric_power: k must be positive");
    }
    const auto& ws = w.weights();
    std::vector<Weight> out;
    out.reserve(symmetric_power_size(ws.size(), k));
    Weight partial(w.rank(), 0);
    // Non-decreasing index sequences i_1 <= ... <= i_k.
    std::function<void(std::size_t, std::uint64_t)> visit = [&](std::size_t from, std::uint64_t left) {
        if (left == 0) {
            out.push_back(partial);
            return;
        }
        for (std::size_t i = from; i < ws.size(); ++i) {
            for (std::size_t c = 0; c < partial.size(); ++c) {
                partial[c] += ws[i][c];
            }
            visit(i, left - 1);
            for (std::size_t c = 0; c < partial.size(); ++c) {
                partial[c] -= ws[i][c];
            }
        }
    };
    visit(0, k);
    return WeightMultiset(w.rank(), std::move(out));
}

WeightMultiset recover_from_symmetric_power(const WeightMultiset& s, std::uint64_t k, std::uint64_t n)
{
    if (k == 0 || n == 0) {
        throw InvalidArgument("recover_from_symmetric_power: k and n must be positive");
    }
    if (s.size() != symmetric_power_size(n, k)) {
        throw VerificationFailed("recover_from_symmetric_power: |S| = " + std::to_string(s.size()) +
                                 " but a k-th symmetric power of n weights has " +
                                 std::to_string(symmetric_power_size(n, k)));
    }
    const auto sk = static_cast<std::int64_t>(k);
    Weight lead = s.leading();
    for (auto& c : lead) {
        if (c % sk != 0) {
            throw NonIntegralLeadingWeight("leading weight (" + format_weight(s.leading()) + ") is not divisible by " +
                                           std::to_string(k));
        }
        c /= sk;
    }
    // (k-1) * lambda_1, the common part of every peeled sum.
    Weight shift = lead;
    for (auto& c : shift) {
        c *= sk - 1;
    }

    const auto& target = s.weights();
    std::vector<Weight> recovered{lead};
    while (recovered.size() < n) {
        const auto explained = symmetric_power(WeightMultiset(s.rank(), recovered), k);
        const auto& e = explained.weights();
        // First element of S (descending) not matched by E is the lexmax of S - E.
        std::size_t i = 0;
        std::size_t j = 0;
        while (j < e.size() && target[i] == e[j]) {
            ++i;
            ++j;
        }
        if (j < e.size() && target[i] < e[j]) {
            throw VerificationFailed("recover_from_symmetric_power: (" + format_weight(e[j]) +
                                     ") is forced by the recovered weights but missing from S");
        }
        Weight next = target[i];
        for (std::size_t c = 0; c < next.size(); ++c) {
            next[c] -= shift[c];
        }
        recovered.push_back(std::move(next));
    }

    WeightMultiset result(s.rank(), std::move(recovered));
    if (symmetric_power(result, k) != s) {
        throw VerificationFailed("recover_from_symmetric_power: S is not the symmetric power of any " +
                                 std::to_string(n) + "-element multiset");
    }
    return result;
}

bool char_power_equal(const WeightMultiset& w1, const WeightMultiset& w2, std::uint64_t m)
{
    check_same_rank(w1, w2, "char_power_equal");
    if (m == 0) {
        throw InvalidArgument("char_power_equal: m must be positive");
    }
    return exactnum::laurent_pow_eq(character(w1), character(w2), m);
}

bool conclude_equivalence(const WeightMultiset& w1, const WeightMultiset& w2, std::uint64_t m)
{
    check_same_rank(w1, w2, "conclude_equivalence");
    if (w1.size() != w2.size()) {
        throw InvalidArgument("conclude_equivalence: sizes differ (" + std::to_string(w1.size()) + " vs " +
                              std::to_string(w2.size()) + ")");
    }
    const bool equal_powers = char_power_equal(w1, w2, m);
    if (equal_powers && w1 != w2) {
        throw TheoremViolation("character powers agree at m = " + std::to_string(m) +
                               " but the weight multisets differ");
    }
    return equal_powers;
}

WeightMultiset read_multiset(std::istream& in)
{
    std::vector<Weight> weights;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        Weight w;
        std::stringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            const auto first = field.find_first_not_of(" \t\r");
            const auto last = field.find_last_not_of(" \t\r");
            if (first == std::string::npos) {
                throw InvalidArgument("line " + std::to_string(line_no) + ": empty weight component");
            }
            const std::string token = field.substr(first, last - first + 1);
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) {
                throw InvalidArgument("line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
            }
            w.push_back(v);
        }
        weights.push_back(std::move(w));
    }
    return WeightMultiset(std::move(weights));
}

void write_multiset(std::ostream& out, const WeightMultiset& w)
{
    for (const Weight& lambda : w.weights()) {
        out << format_weight(lambda) << '\n';
    }
}

}  // namespace poteq::weights
