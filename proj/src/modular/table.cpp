#include "poteq/modular/table.hpp"

#include <json.hpp>

#include "poteq/error.hpp"

namespace poteq::modular {

using nlohmann::json;

std::vector<std::uint64_t> EigenvalueTable::primes() const
{
    std::vector<std::uint64_t> out;
    out.reserve(entries.size());
    for (const auto& [p, ap] : entries) {
        out.push_back(p);
    }
    return out;
}

void EigenvalueTable::validate() const
{
    for (const auto& [p, ap] : entries) {
        if (!exactnum::is_prime(p)) {
            throw InvalidArgument("table '" + label + "': " + std::to_string(p) + " is not prime");
        }
        if (mpz_divisible_ui_p(level_hint.get_mpz_t(), p) != 0) {
            throw InvalidArgument("table '" + label + "': prime " + std::to_string(p) + " divides the level hint");
        }
    }
}

namespace {

Integer json_integer(const json& v, const std::string& what)
{
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                      : Integer(std::to_string(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
        return exactnum::parse_integer(v.get<std::string>());
    }
    throw InvalidArgument(what + " must be an integer");
}

nlohmann::ordered_json integer_json(const Integer& z)
{
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return z.get_str();
}

}  // namespace

EigenvalueTable read_table(std::istream& in)
{
    EigenvalueTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t last_prime = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            throw InvalidArgument(where + "invalid JSON (" + e.what() + ")");
        }
        if (!record.is_object()) {
            throw InvalidArgument(where + "expected a JSON object");
        }
        if (!have_header) {
            if (!record.contains("label") || !record["label"].is_string()) {
                throw InvalidArgument(where + "header needs a string 'label'");
            }
            table.label = record["label"].get<std::string>();
            table.level_hint = json_integer(record.value("level_hint", json(1)), where + "level_hint");
            const json weight = record.value("weight", json(2));
            if (!weight.is_number_integer()) {
                throw InvalidArgument(where + "weight must be an integer");
            }
            table.weight = weight.get<int>();
            have_header = true;
            continue;
        }
        if (!record.contains("p") || !record["p"].is_number_unsigned()) {
            throw InvalidArgument(where + "record needs a nonnegative integer 'p'");
        }
        const auto p = record["p"].get<std::uint64_t>();
        if (p <= last_prime) {
            throw InvalidArgument(where + "primes must be strictly ascending");
        }
        last_prime = p;
        if (!record.contains("ap")) {
            throw InvalidArgument(where + "record needs 'ap'");
        }
        const json& ap = record["ap"];
        if (ap.is_string()) {
            table.entries.emplace(p, CyclotomicNumber(exactnum::parse_integer(ap.get<std::string>())));
        } else if (ap.is_array()) {
            if (!record.contains("order") || !record["order"].is_number_unsigned()) {
                throw InvalidArgument(where + "a cyclotomic 'ap' needs a positive integer 'order'");
            }
            std::vector<exactnum::Rational> coords;
            for (const json& c : ap) {
                if (!c.is_string()) {
                    throw InvalidArgument(where + "cyclotomic coordinates must be decimal strings");
                }
                coords.push_back(exactnum::parse_rational(c.get<std::string>()));
            }
            table.entries.emplace(
                p, CyclotomicNumber::from_coordinates(record["order"].get<std::uint64_t>(), std::move(coords)));
        } else {
            throw InvalidArgument(where + "'ap' must be a decimal string or an array of them");
        }
    }
    if (!have_header) {
        throw InvalidArgument("eigenvalue file is empty");
    }
    table.validate();
    return table;
}

void write_table(std::ostream& out, const EigenvalueTable& table)
{
    using ordered = nlohmann::ordered_json;
    ordered header = {{"label", table.label}, {"level_hint", integer_json(table.level_hint)}, {"weight", table.weight}};
    out << header.dump() << '\n';
    for (const auto& [p, ap] : table.entries) {
        ordered record = {{"p", p}};
        if (auto q = ap.to_rational(); q && q->get_den() == 1) {
            record["ap"] = q->get_num().get_str();
        } else {
            ordered coords = ordered::array();
            for (const auto& c : ap.coordinates()) {
                coords.push_back(exactnum::to_string(c));
            }
            record["ap"] = coords;
            record["order"] = ap.order();
        }
        out << record.dump() << '\n';
    }
}

}  // namespace poteq::modular
