#include "poteq/cli/cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "poteq/density/component.hpp"
#include "poteq/density/prime_density.hpp"
#include "poteq/error.hpp"
#include "poteq/localfield/exponent.hpp"
#include "poteq/modular/curve.hpp"
#include "poteq/modular/twist.hpp"
#include "poteq/weights/weights.hpp"

namespace poteq::cli {

namespace {

using json = nlohmann::ordered_json;
using exactnum::Integer;
using exactnum::Rational;
using exactnum::to_string;

/// Opens a named file, or hands back `in` for "-".
class Input {
public:
    Input(const std::string& path, std::istream& in)
    {
        if (path == "-") {
            stream_ = &in;
            return;
        }
        file_ = std::make_unique<std::ifstream>(path);
        if (!*file_) {
            throw InvalidArgument("cannot open '" + path + "'");
        }
        stream_ = file_.get();
    }
    std::istream& get() { return *stream_; }

private:
    std::unique_ptr<std::ifstream> file_;
    std::istream* stream_ = nullptr;
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

/// "a,b;c,d" -> 2x2 rational matrix.
exactnum::RationalMatrix parse_matrix(const std::string& text)
{
    const auto rows = split(text, ';');
    exactnum::RationalMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto cells = split(rows[i], ',');
        if (cells.size() != rows.size()) {
            throw InvalidArgument("matrix '" + text + "' is not square");
        }
        for (std::size_t j = 0; j < cells.size(); ++j) {
            m(i, j) = exactnum::parse_rational(trim(cells[j]));
        }
    }
    return m;
}

std::pair<Integer, Integer> parse_curve(const std::string& text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 2) {
        throw InvalidArgument("--curve expects 'a,b'");
    }
    return {exactnum::parse_integer(trim(parts[0])), exactnum::parse_integer(trim(parts[1]))};
}

json density_json(const density::DensityReport& r)
{
    json checkpoints = json::array();
    for (const auto& c : r.checkpoints) {
        checkpoints.push_back({{"bound", c.bound}, {"count", c.count}, {"total", c.total}});
    }
    return {{"count", r.count},
            {"total", r.total},
            {"empirical", to_string(r.empirical)},
            {"running_sup", to_string(r.running_sup)},
            {"checkpoints", checkpoints}};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- bound

struct BoundArgs {
    std::uint64_t n = 0;
    std::uint64_t ell = 0;
    std::uint64_t degree = 1;
    std::string matrix_a;
    std::string matrix_b;
    bool json = false;
};

int cmd_bound(const BoundArgs& a, std::ostream& out)
{
    const auto report = localfield::uniform_exponent(a.n, localfield::LocalFieldSpec::make(a.ell, a.degree));
    std::optional<std::optional<std::uint64_t>> conj;
    if (!a.matrix_a.empty() || !a.matrix_b.empty()) {
        if (a.matrix_a.empty() || a.matrix_b.empty()) {
            throw InvalidArgument("--matrix-a and --matrix-b go together");
        }
        conj = localfield::power_conjugate_exponent(parse_matrix(a.matrix_a), parse_matrix(a.matrix_b));
    }
    const std::string paper = report.m0.get_str() + "!";
    if (a.json) {
        json j = {{"n", report.n},
                  {"ell", report.field.ell},
                  {"degree", report.field.degree},
                  {"degree_bound", report.degree_bound},
                  {"m0", report.m0.get_str()},
                  {"witness", {{"f", report.witness.residue_degree}, {"a", report.witness.ell_power}}},
                  {"sharp_exponent", report.sharp_exponent.get_str()},
                  {"paper_exponent", {{"factorial_of", report.m0.get_str()}}}};
        if (report.paper_exponent) {
            j["paper_exponent"]["digits"] = report.paper_exponent->get_str().size();
            j["paper_exponent"]["value"] = report.paper_exponent->get_str();
        }
        if (conj) {
            j["power_conjugate_exponent"] = *conj ? json(**conj) : json(nullptr);
        }
        print_json(out, j);
        return kExitOk;
    }
    out << "n=" << report.n << " ell=" << report.field.ell << " degree=" << report.field.degree << '\n'
        << "degree_bound=" << report.degree_bound << '\n'
        << "m0=" << report.m0.get_str() << '\n'
        << "witness=f:" << report.witness.residue_degree << ",a:" << report.witness.ell_power << '\n'
        << "sharp=" << report.sharp_exponent.get_str() << '\n'
        << "paper=" << paper << '\n';
    if (report.paper_exponent) {
        out << "paper_digits=" << report.paper_exponent->get_str().size() << '\n'
            << "paper_value=" << report.paper_exponent->get_str() << '\n';
    }
    if (conj) {
        out << "power_conjugate_exponent=" << (*conj ? std::to_string(**conj) : "absent") << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- ap

struct ApArgs {
    std::string curve;
    std::uint64_t max_prime = 0;
    std::int64_t twist = 1;
    unsigned threads = 1;
    std::string label;
    std::string out_path;
};

int cmd_ap(const ApArgs& a, std::ostream& out)
{
    auto [ca, cb] = parse_curve(a.curve);
    modular::EllipticCurve curve{ca, cb};
    if (a.twist != 1) {
        curve = modular::quadratic_twist(curve, a.twist);
    }
    auto table = modular::ap_table(curve, a.max_prime, a.threads);
    if (!a.label.empty()) {
        table.label = a.label;
    }
    if (a.out_path.empty()) {
        modular::write_table(out, table);
        return kExitOk;
    }
    std::ofstream file(a.out_path);
    if (!file) {
        throw InvalidArgument("cannot write '" + a.out_path + "'");
    }
    modular::write_table(file, table);
    return kExitOk;
}

// ---------------------------------------------------------------- locus / twist

struct PairArgs {
    std::string f_path;
    std::string g_path;
    std::uint64_t max_conductor = 1;
    std::vector<std::uint64_t> checkpoints;
    bool list = false;
    bool cm = false;
    bool json = false;
};

json locus_json(const modular::PowerLocus& locus, bool list)
{
    std::uint64_t ones = 0;
    std::uint64_t twos = 0;
    std::uint64_t others = 0;
    json exponents = json::object();
    for (const auto& [p, n] : locus.exponents) {
        (n == 1 ? ones : n == 2 ? twos : others) += 1;
        if (list) {
            exponents[std::to_string(p)] = n;
        }
    }
    json j = {{"common_primes", locus.common_primes.size()},
              {"locus_size", locus.exponents.size()},
              {"n_p_counts", {{"1", ones}, {"2", twos}, {"other", others}}},
              {"density", density_json(locus.density_report)}};
    if (list) {
        j["exponents"] = exponents;
    }
    return j;
}

void print_locus_text(std::ostream& out, const modular::PowerLocus& locus, bool list)
{
    const json j = locus_json(locus, false);
    out << "common_primes=" << locus.common_primes.size() << '\n'
        << "locus_size=" << locus.exponents.size() << '\n'
        << "density=" << to_string(locus.density_report.empirical) << '\n'
        << "running_sup=" << to_string(locus.density_report.running_sup) << '\n'
        << "n_p=1:" << j["n_p_counts"]["1"].get<std::uint64_t>()
        << " n_p=2:" << j["n_p_counts"]["2"].get<std::uint64_t>()
        << " other:" << j["n_p_counts"]["other"].get<std::uint64_t>() << '\n';
    if (list) {
        for (const auto& [p, n] : locus.exponents) {
            out << "p=" << p << " n_p=" << n << '\n';
        }
    }
}

std::pair<modular::EigenvalueTable, modular::EigenvalueTable> read_pair(const PairArgs& a, std::istream& in)
{
    if (a.f_path == "-" && a.g_path == "-") {
        throw InvalidArgument("at most one table may come from standard input");
    }
    Input f(a.f_path, in);
    auto tf = modular::read_table(f.get());
    Input g(a.g_path, in);
    auto tg = modular::read_table(g.get());
    return {std::move(tf), std::move(tg)};
}

int cmd_locus(const PairArgs& a, std::istream& in, std::ostream& out)
{
    auto [f, g] = read_pair(a, in);
    const auto locus = modular::power_locus(f, g, a.checkpoints);
    if (a.json) {
        print_json(out, locus_json(locus, a.list));
    } else {
        print_locus_text(out, locus, a.list);
    }
    return kExitOk;
}

json character_json(const modular::TwistMatch& m)
{
    json generators = json::array();
    for (const auto& factor : m.character.unit_group().factors()) {
        generators.push_back({{"generator", factor.generator},
                              {"value", m.character.value(static_cast<std::int64_t>(factor.generator))->to_string()}});
    }
    return {{"character", m.character.to_string()},
            {"modulus", m.character.modulus()},
            {"conductor", m.conductor},
            {"order", m.character.order()},
            {"generators", generators},
            {"primes_verified", m.primes_verified}};
}

int cmd_twist(const PairArgs& a, std::istream& in, std::ostream& out)
{
    auto [f, g] = read_pair(a, in);
    const auto result = modular::twist_pipeline(f, g, a.max_conductor, !a.cm);
    if (a.json) {
        json j = {{"locus", locus_json(result.locus, a.list)},
                  {"threshold", to_string(result.threshold)},
                  {"non_cm_assumed", result.non_cm_assumed},
                  {"searched", result.twist.has_value()}};
        json matches = json::array();
        if (result.twist) {
            for (const auto& m : result.twist->matches) {
                matches.push_back(character_json(m));
            }
            j["primes_checked"] = result.twist->primes_checked;
            j["search_bound"] = result.twist->search_bound;
        }
        j["matches"] = matches;
        j["anomaly"] = result.anomaly;
        print_json(out, j);
    } else {
        print_locus_text(out, result.locus, a.list);
        out << "threshold=" << to_string(result.threshold) << '\n'
            << "non_cm_assumed=" << (result.non_cm_assumed ? "true" : "false") << '\n';
        if (!result.twist) {
            out << "search=skipped\n";
        } else {
            out << "primes_checked=" << result.twist->primes_checked << '\n'
                << "search_bound=" << result.twist->search_bound << '\n'
                << "matches=" << result.twist->matches.size() << '\n';
            for (const auto& m : result.twist->matches) {
                out << "match conductor=" << m.conductor << " character=" << m.character.to_string()
                    << " order=" << m.character.order() << " primes_verified=" << m.primes_verified;
                for (const auto& factor : m.character.unit_group().factors()) {
                    out << ' ' << factor.generator << "->"
                        << m.character.value(static_cast<std::int64_t>(factor.generator))->to_string();
                }
                out << '\n';
            }
        }
        if (result.anomaly) {
            out << "anomaly=dense locus without a matching character\n";
        }
    }
    return result.anomaly ? kExitAnomaly : kExitOk;
}

// ---------------------------------------------------------------- density

struct DensityArgs {
    std::vector<std::uint64_t> threshold;
    std::vector<std::string> lift;
    std::vector<std::uint64_t> primes_mod;
    std::uint64_t max_prime = 0;
    std::vector<std::uint64_t> checkpoints;
    bool json = false;
};

int cmd_density(const DensityArgs& a, std::ostream& out)
{
    const int modes = static_cast<int>(!a.threshold.empty()) + static_cast<int>(!a.lift.empty()) +
                      static_cast<int>(!a.primes_mod.empty());
    if (modes != 1) {
        throw InvalidArgument("density needs exactly one of --threshold, --lift, --primes-mod");
    }
    if (!a.threshold.empty()) {
        const Rational t = density::threshold(a.threshold[0], a.threshold[1]);
        if (a.json) {
            print_json(out, {{"c1", a.threshold[0]}, {"c2", a.threshold[1]}, {"threshold", to_string(t)}});
        } else {
            out << to_string(t) << '\n';
        }
        return kExitOk;
    }
    if (!a.lift.empty()) {
        const Rational delta = exactnum::parse_rational(a.lift[0]);
        const Integer d = exactnum::parse_integer(a.lift[1]);
        if (d <= 0 || !d.fits_ulong_p()) {
            throw InvalidArgument("--lift degree must be a positive integer");
        }
        const Rational lifted = density::lift_density(delta, d.get_ui());
        if (a.json) {
            print_json(out, {{"delta", to_string(delta)},
                             {"d", d.get_ui()},
                             {"lifted", to_string(lifted)},
                             {"hypothesis_holds", lifted > 0}});
        } else {
            out << to_string(lifted) << '\n';
        }
        return kExitOk;
    }
    const std::uint64_t q = a.primes_mod[0];
    const std::uint64_t r = a.primes_mod[1];
    if (q == 0) {
        throw InvalidArgument("--primes-mod modulus must be positive");
    }
    if (a.max_prime < 2) {
        throw InvalidArgument("--primes-mod needs --max-prime >= 2");
    }
    std::vector<std::uint64_t> members;
    for (std::uint64_t p : exactnum::primes_up_to(a.max_prime)) {
        if (p % q == r % q) {
            members.push_back(p);
        }
    }
    const auto set = density::PrimeSet::make(std::move(members), a.max_prime);
    const auto report = density::empirical_upper_density(
        set, a.checkpoints.empty() ? density::default_checkpoints(a.max_prime) : a.checkpoints);
    if (a.json) {
        print_json(out, density_json(report));
    } else {
        out << "count=" << report.count << '\n'
            << "total=" << report.total << '\n'
            << "empirical=" << to_string(report.empirical) << '\n'
            << "running_sup=" << to_string(report.running_sup) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- cheb

struct ChebArgs {
    std::string group_path;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool json = false;
};

int cmd_cheb(const ChebArgs& a, std::istream& in, std::ostream& out)
{
    Input input(a.group_path, in);
    const auto spec = density::read_group_spec(input.get());
    const auto& model = spec.model;
    const Rational exact = density::chebotarev_density(model, spec.target);
    const auto component = density::find_component_in(model, spec.target);
    std::optional<density::DensityReport> sampled;
    if (a.trials > 0) {
        sampled = density::sample_frobenius(model, spec.target, a.trials, a.seed, a.threads);
    }
    Rational proportion(spec.target.size(), model.group().order());
    proportion.canonicalize();
    if (a.json) {
        json j = {{"group_order", model.group().order()},
                  {"components", model.component_count()},
                  {"target_size", spec.target.size()},
                  {"target_proportion", to_string(proportion)},
                  {"coset_union", spec.target.is_coset_union()},
                  {"density", to_string(exact)},
                  {"component", component ? json(*component) : json(nullptr)}};
        if (sampled) {
            j["sample"] = density_json(*sampled);
            j["sample"]["seed"] = a.seed;
        }
        print_json(out, j);
        return kExitOk;
    }
    out << "group_order=" << model.group().order() << '\n'
        << "components=" << model.component_count() << '\n'
        << "target_size=" << spec.target.size() << '\n'
        << "target_proportion=" << to_string(proportion) << '\n'
        << "coset_union=" << (spec.target.is_coset_union() ? "true" : "false") << '\n'
        << "density=" << to_string(exact) << '\n'
        << "component=" << (component ? std::to_string(*component) : "none") << '\n';
    if (sampled) {
        out << "sampled=" << sampled->count << "/" << sampled->total << '\n'
            << "sampled_density=" << to_string(sampled->empirical) << '\n'
            << "sample_running_sup=" << to_string(sampled->running_sup) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- weights

struct WeightsArgs {
    std::string action;
    std::vector<std::string> files;
    std::uint64_t sym = 0;
    std::uint64_t tensor = 0;
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    bool json = false;
};

json multiset_json(const weights::WeightMultiset& w)
{
    json list = json::array();
    for (const auto& lambda : w.weights()) {
        list.push_back(lambda);
    }
    return {{"rank", w.rank()}, {"size", w.size()}, {"weights", list}};
}

void emit_multiset(std::ostream& out, const weights::WeightMultiset& w, bool as_json)
{
    if (as_json) {
        print_json(out, multiset_json(w));
    } else {
        weights::write_multiset(out, w);
    }
}

int cmd_weights(const WeightsArgs& a, std::istream& in, std::ostream& out)
{
    auto read = [&](std::size_t i) {
        Input input(i < a.files.size() ? a.files[i] : "-", in);
        return weights::read_multiset(input.get());
    };
    if (a.action == "expand") {
        if ((a.sym == 0) == (a.tensor == 0)) {
            throw InvalidArgument("expand needs exactly one of --sym K, --tensor K");
        }
        const auto w = read(0);
        emit_multiset(out, a.sym ? weights::symmetric_power(w, a.sym) : weights::tensor_power(w, a.tensor), a.json);
        return kExitOk;
    }
    if (a.action == "character") {
        const auto chi = weights::character(read(0));
        if (a.json) {
            print_json(out, {{"character", chi.to_string()}, {"dimension", chi.coefficient_sum().get_str()}});
        } else {
            out << chi.to_string() << '\n';
        }
        return kExitOk;
    }
    if (a.action == "recover") {
        if (a.k == 0 || a.n == 0) {
            throw InvalidArgument("recover needs --k and --n");
        }
        emit_multiset(out, weights::recover_from_symmetric_power(read(0), a.k, a.n), a.json);
        return kExitOk;
    }
    if (a.action == "power-check") {
        if (a.m == 0 || a.files.size() != 2) {
            throw InvalidArgument("power-check needs --m and two multiset files");
        }
        if (a.files[0] == "-" && a.files[1] == "-") {
            throw InvalidArgument("at most one multiset may come from standard input");
        }
        const auto w1 = read(0);
        const auto w2 = read(1);
        const bool equal_powers = w1.size() == w2.size() ? weights::conclude_equivalence(w1, w2, a.m)
                                                         : weights::char_power_equal(w1, w2, a.m);
        if (a.json) {
            print_json(out, {{"m", a.m}, {"char_power_equal", equal_powers}, {"multisets_equal", w1 == w2}});
        } else {
            out << "char_power_equal=" << (equal_powers ? "true" : "false") << '\n'
                << "multisets_equal=" << (w1 == w2 ? "true" : "false") << '\n';
        }
        return kExitOk;
    }
    throw InvalidArgument("unknown weights action '" + a.action + "' (expand, character, recover, power-check)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact tools for potentially equivalent Galois representations", "poteq"};
    app.require_subcommand(1);

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Root-of-unity bounds and the uniform power-conjugacy exponent");
    bound_cmd->add_option("--n", bound.n, "Matrix size n")->required();
    bound_cmd->add_option("--ell", bound.ell, "Residue characteristic (prime)")->required();
    bound_cmd->add_option("--degree", bound.degree, "[F : Q_ell]")->capture_default_str();
    bound_cmd->add_option("--matrix-a", bound.matrix_a, "Rows ';'-separated, entries ','-separated");
    bound_cmd->add_option("--matrix-b", bound.matrix_b, "Second matrix, same format");
    bound_cmd->add_flag("--json", bound.json, "JSON report");

    ApArgs ap;
    auto* ap_cmd = app.add_subcommand("ap", "Eigenvalue table of an elliptic curve as JSON lines");
    ap_cmd->add_option("--curve", ap.curve, "Coefficients a,b of y^2 = x^3 + ax + b")->required();
    ap_cmd->add_option("--max-prime", ap.max_prime, "Largest prime X")->required();
    ap_cmd->add_option("--twist", ap.twist, "Quadratic twist by squarefree d first")->capture_default_str();
    ap_cmd->add_option("--threads", ap.threads, "Worker threads for the prime sweep")->capture_default_str();
    ap_cmd->add_option("--label", ap.label, "Table label (default E[a,b])");
    ap_cmd->add_option("--out", ap.out_path, "Write to a file instead of standard output");

    PairArgs pair;
    auto* locus_cmd = app.add_subcommand("locus", "Primes where a power of a_p(f) equals that of a_p(g)");
    locus_cmd->add_option("f", pair.f_path, "First table ('-' for stdin)")->required();
    locus_cmd->add_option("g", pair.g_path, "Second table")->required();
    locus_cmd->add_option("--checkpoints", pair.checkpoints, "Prefix bounds for the running supremum")->delimiter(',');
    locus_cmd->add_flag("--list", pair.list, "List every locus prime with its exponent");
    locus_cmd->add_flag("--json", pair.json, "JSON report");

    auto* twist_cmd = app.add_subcommand("twist", "Search for a Dirichlet character relating two tables");
    twist_cmd->add_option("f", pair.f_path, "First table ('-' for stdin)")->required();
    twist_cmd->add_option("g", pair.g_path, "Second table")->required();
    twist_cmd->add_option("--max-conductor", pair.max_conductor, "Largest conductor searched")->required();
    twist_cmd->add_flag("--cm", pair.cm, "Declare the first form CM (drops the non-CM assumption)");
    twist_cmd->add_flag("--list", pair.list, "List every locus prime with its exponent");
    twist_cmd->add_flag("--json", pair.json, "JSON report");

    DensityArgs dens;
    auto* density_cmd = app.add_subcommand("density", "Density thresholds, lifts and prime-set densities");
    density_cmd->add_option("--threshold", dens.threshold, "c1 c2: min(1 - 1/c1, 1 - 1/c2)")->expected(2);
    density_cmd->add_option("--lift", dens.lift, "delta d: d (delta - (1 - 1/d))")->expected(2);
    density_cmd->add_option("--primes-mod", dens.primes_mod, "q r: primes congruent to r mod q")->expected(2);
    density_cmd->add_option("--max-prime", dens.max_prime, "Cutoff for --primes-mod");
    density_cmd->add_option("--checkpoints", dens.checkpoints, "Prefix bounds; the last must be the cutoff")->delimiter(',');
    density_cmd->add_flag("--json", dens.json, "JSON report");

    ChebArgs cheb;
    auto* cheb_cmd = app.add_subcommand("cheb", "Exact and sampled densities in a finite component model");
    cheb_cmd->add_option("--group", cheb.group_path, "Group description file ('-' for stdin)")->required();
    cheb_cmd->add_option("--trials", cheb.trials, "Uniform samples to draw (0: none)")->capture_default_str();
    cheb_cmd->add_option("--seed", cheb.seed, "Sampler seed")->capture_default_str();
    cheb_cmd->add_option("--threads", cheb.threads, "Sampler threads")->capture_default_str();
    cheb_cmd->add_flag("--json", cheb.json, "JSON report");

    WeightsArgs wts;
    auto* weights_cmd = app.add_subcommand("weights", "Torus weight multisets: expand, character, recover, power-check");
    weights_cmd->add_option("action", wts.action, "expand | character | recover | power-check")->required();
    weights_cmd->add_option("files", wts.files, "Multiset files ('-' or none: stdin)");
    weights_cmd->add_option("--sym", wts.sym, "expand: k-th symmetric power");
    weights_cmd->add_option("--tensor", wts.tensor, "expand: k-th tensor power");
    weights_cmd->add_option("--k", wts.k, "recover: symmetric power degree");
    weights_cmd->add_option("--n", wts.n, "recover: number of weights to recover");
    weights_cmd->add_option("--m", wts.m, "power-check: exponent");
    weights_cmd->add_flag("--json", wts.json, "JSON report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (bound_cmd->parsed()) {
            return cmd_bound(bound, out);
        }
        if (ap_cmd->parsed()) {
            return cmd_ap(ap, out);
        }
        if (locus_cmd->parsed()) {
            return cmd_locus(pair, in, out);
        }
        if (twist_cmd->parsed()) {
            return cmd_twist(pair, in, out);
        }
        if (density_cmd->parsed()) {
            return cmd_density(dens, out);
        }
        if (cheb_cmd->parsed()) {
            return cmd_cheb(cheb, in, out);
        }
        return cmd_weights(wts, in, out);
    } catch (const Anomaly& e) {
        err << "anomaly: " << e.what() << '\n';
        return kExitAnomaly;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace poteq::cli
