#include "fdecomp/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fdecomp/decompose.hpp"
#include "fdecomp/errors.hpp"
#include "fdecomp/recurrence.hpp"
#include "fdecomp/rule.hpp"
#include "fdecomp/sequence.hpp"
#include "fdecomp/stats.hpp"

namespace fdecomp {

namespace {

using nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

FRule load_rule(const std::string& spec) {
    if (spec.find(':') != std::string::npos || spec == "factorial") {
        return FRule::parse(spec);
    }
    std::ifstream in(spec);
    if (in.good()) {
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::parse_error& e) {
            throw parse_error("rule file '" + spec + "': " + e.what());
        }
        return FRule::from_json(doc);
    }
    throw parse_error("rule '" + spec + "' is neither a shorthand nor a readable file");
}

std::size_t oracle_budget() {
    const char* env = std::getenv("FDECOMP_ORACLE_BUDGET");
    if (env == nullptr) return kDefaultOracleBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        throw parse_error("FDECOMP_ORACLE_BUDGET must be a positive integer");
    }
    return static_cast<std::size_t>(v);
}

BigInt parse_bigint(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw parse_error("expected a nonnegative decimal integer, got '" + text + "'");
    }
    return BigInt(text);
}

// Arbitrary-precision values go out as decimal strings; the recurrence
// coefficient array follows the documented shape and uses plain JSON numbers
// whenever the value fits, falling back to strings beyond 2^53.
ordered_json coefficient_json(const BigInt& c) {
    if (c.fits_slong_p()) {
        const long v = c.get_si();
        if (v < (1L << 53) && v > -(1L << 53)) return ordered_json(v);
    }
    return ordered_json(c.get_str());
}

struct StatsSystem {
    bool factorial = false;
    std::size_t b = 0;
};

StatsSystem parse_system(const std::string& text) {
    if (text == "factorial") return {true, 0};
    if (text.rfind("bbin:", 0) == 0) {
        const std::string rest = text.substr(5);
        if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos) {
            const std::size_t b = std::stoull(rest);
            if (b < 3) throw parse_error("--system bbin:<b> requires b >= 3");
            return {false, b};
        }
    }
    throw parse_error("--system must be bbin:<b> or factorial, got '" + text + "'");
}

int cmd_seq(const FRule& rule, std::size_t count, const std::string& format, std::ostream& out) {
    FSequence seq(rule);
    if (format == "json") {
        ordered_json doc;
        doc["rule"] = rule.spec_string();
        doc["count"] = count;
        auto terms = ordered_json::array();
        for (std::size_t n = 0; n < count; ++n) terms.push_back(to_decimal(seq.term(n)));
        doc["terms"] = std::move(terms);
        out << doc.dump() << "\n";
    } else if (format == "csv") {
        out << "index,value\n";
        for (std::size_t n = 0; n < count; ++n) out << n << "," << to_decimal(seq.term(n)) << "\n";
    } else {
        for (std::size_t n = 0; n < count; ++n) out << to_decimal(seq.term(n)) << "\n";
    }
    return 0;
}

int cmd_decomp(const FRule& rule, const BigInt& x, const std::string& format, std::ostream& out) {
    FSequence seq(rule);
    const Decomposition d = decompose(seq, x);
    if (format == "json") {
        ordered_json doc;
        doc["x"] = to_decimal(x);
        doc["indices"] = d.indices;
        auto summands = ordered_json::array();
        for (std::size_t n : d.indices) summands.push_back(to_decimal(seq.term(n)));
        doc["summands"] = std::move(summands);
        out << doc.dump() << "\n";
    } else if (format == "csv") {
        out << "index,summand\n";
        for (std::size_t n : d.indices) out << n << "," << to_decimal(seq.term(n)) << "\n";
    } else {
        for (std::size_t i = 0; i < d.indices.size(); ++i) {
            out << (i ? " " : "") << to_decimal(seq.term(d.indices[i]));
        }
        out << "\n";
    }
    return 0;
}

int cmd_check_unique(const FRule& rule, const BigInt& x_max, std::size_t index_cap,
                     const std::string& format, std::ostream& out) {
    FSequence seq(rule);
    const std::size_t budget = oracle_budget();
    ordered_json doc;
    doc["rule"] = rule.spec_string();
    doc["x_max"] = to_decimal(x_max);
    int exit_code = 0;
    BigInt checked = 0;
    try {
        for (BigInt x = 0; x <= x_max; ++x) {
            const Decomposition greedy = decompose(seq, x);
            std::size_t max_index = x >= 1 ? seq.index_of_floor(x) : 0;
            if (index_cap > 0 && index_cap < max_index) max_index = index_cap;
            const auto all = all_legal_decompositions(seq, x, max_index, budget);
            if (all.size() != 1 || all[0] != greedy.indices) {
                doc["status"] = "counterexample";
                doc["x"] = to_decimal(x);
                doc["greedy"] = greedy.indices;
                doc["oracle"] = all;
                exit_code = 2;
                break;
            }
            ++checked;
        }
    } catch (const budget_exceeded&) {
        doc["status"] = "budget_exceeded";
        doc["x"] = to_decimal(checked);
        exit_code = 2;
    }
    if (!doc.contains("status")) {
        doc["status"] = "ok";
        doc["checked"] = to_decimal(checked);
    }
    if (format == "json") {
        out << doc.dump() << "\n";
    } else {
        out << doc["status"].get<std::string>() << "\n";
    }
    return exit_code;
}

int cmd_recurrence(const FRule& rule, bool minimize, std::size_t verify_horizon,
                   std::size_t nonneg_max_degree, const std::string& format, std::ostream& out) {
    LinearRecurrence rec = synthesize_recurrence(rule);
    if (minimize) {
        FSequence seq(rule);
        const std::size_t need = std::max(3 * rec.order() + 4, rec.valid_from + rec.order() + 2);
        std::vector<BigInt> terms;
        terms.reserve(need);
        for (std::size_t n = 0; n < need; ++n) terms.push_back(seq.term(n));
        auto minimal = minimal_recurrence(terms, rec.order());
        if (!minimal) throw synthesis_error("minimization failed to reproduce a recurrence");
        rec = *minimal;
    }
    {
        FSequence seq(rule);
        if (!verify_recurrence(seq, rec, verify_horizon)) {
            throw synthesis_error("recurrence failed verification over the requested horizon");
        }
    }
    const std::size_t effective_degree = std::max(nonneg_max_degree, rec.order());
    const auto search = nonnegative_multiple_search(characteristic_polynomial(rec), effective_degree);

    ordered_json doc;
    doc["order"] = rec.order();
    auto coeffs = ordered_json::array();
    for (const BigInt& c : rec.coefficients) coeffs.push_back(coefficient_json(c));
    doc["coefficients"] = std::move(coeffs);
    doc["valid_from"] = rec.valid_from;
    if (search.feasible) {
        doc["nonneg_feasible"] = true;
    } else {
        doc["nonneg_feasible"] = "unknown_beyond_" + std::to_string(effective_degree);
    }
    if (format == "json") {
        out << doc.dump() << "\n";
    } else if (format == "csv") {
        out << "i,coefficient\n";
        for (std::size_t i = 0; i < rec.order(); ++i) {
            out << (i + 1) << "," << rec.coefficients[i].get_str() << "\n";
        }
    } else {
        out << "s(n) =";
        bool first = true;
        for (std::size_t i = 0; i < rec.order(); ++i) {
            const BigInt& c = rec.coefficients[i];
            if (c == 0) continue;
            const BigInt mag = abs(c);
            out << (first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + "));
            if (mag != 1) out << mag.get_str() << "*";
            out << "s(n-" << (i + 1) << ")";
            first = false;
        }
        out << "  for n >= " << rec.valid_from << "\n";
    }
    return 0;
}

int cmd_stats(const StatsSystem& system, std::size_t n_max, const std::string& emit,
              const std::string& format, std::ostream& out) {
    const CountTable table =
        system.factorial ? CountTable::factorial(n_max) : CountTable::bbin(system.b, n_max);
    const std::string system_name =
        system.factorial ? "factorial" : "bbin:" + std::to_string(system.b);

    if (format == "json") {
        ordered_json doc;
        doc["system"] = system_name;
        doc["n_max"] = n_max;
        doc["emit"] = emit;
        auto rows = ordered_json::array();
        if (emit == "table") {
            for (std::size_t n = 0; n <= n_max; ++n) {
                for (std::size_t k = 0; k < table.row(n).size(); ++k) {
                    rows.push_back(ordered_json{{"n", n}, {"k", k}, {"count", to_decimal(table.row(n)[k])}});
                }
            }
        } else if (emit == "moments") {
            for (std::size_t n = 0; n <= n_max; ++n) {
                const auto m = moments(table, n);
                rows.push_back(ordered_json{{"n", n},
                                            {"mean", to_fraction_string(m.mean)},
                                            {"variance", to_fraction_string(m.variance)}});
            }
        } else {
            for (std::size_t n = 1; n <= n_max; ++n) {
                const auto m = moments(table, n);
                const auto report = standardized_distribution(table, n);
                rows.push_back(ordered_json{{"n", n},
                                            {"mean", to_fraction_string(m.mean)},
                                            {"variance", to_fraction_string(m.variance)},
                                            {"ks", report.ks_statistic}});
            }
        }
        doc["rows"] = std::move(rows);
        out << doc.dump() << "\n";
        return 0;
    }
    if (emit == "table") {
        out << "n,k,count\n";
        for (std::size_t n = 0; n <= n_max; ++n) {
            for (std::size_t k = 0; k < table.row(n).size(); ++k) {
                out << n << "," << k << "," << to_decimal(table.row(n)[k]) << "\n";
            }
        }
    } else if (emit == "moments") {
        out << "n,mean,variance\n";
        for (std::size_t n = 0; n <= n_max; ++n) {
            const auto m = moments(table, n);
            out << n << "," << to_fraction_string(m.mean) << "," << to_fraction_string(m.variance) << "\n";
        }
    } else {
        out << "n,mean,variance,ks\n";
        for (std::size_t n = 1; n <= n_max; ++n) {
            const auto m = moments(table, n);
            const auto report = standardized_distribution(table, n);
            out << n << "," << to_fraction_string(m.mean) << "," << to_fraction_string(m.variance)
                << "," << format_double(report.ks_statistic) << "\n";
        }
    }
    return 0;
}

IntPoly parse_poly(const std::string& text) {
    std::vector<BigInt> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string body = item;
        bool negative = false;
        if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
            negative = body[0] == '-';
            body = body.substr(1);
        }
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos) {
            throw parse_error("--poly expects comma-separated integers, got '" + item + "'");
        }
        BigInt v(body);
        coeffs.push_back(negative ? BigInt(-v) : v);
    }
    if (coeffs.empty()) throw parse_error("--poly expects at least one coefficient");
    return IntPoly(std::move(coeffs));
}

int cmd_nonneg(const IntPoly& charpoly, std::size_t max_degree, const std::string& format,
               std::ostream& out) {
    const auto result = nonnegative_multiple_search(charpoly, max_degree);
    if (format == "json") {
        ordered_json doc;
        auto poly = ordered_json::array();
        for (const BigInt& c : charpoly.coefficients) poly.push_back(c.get_str());
        doc["charpoly"] = std::move(poly);
        doc["degree"] = charpoly.degree();
        doc["max_degree"] = max_degree;
        doc["feasible"] = result.feasible;
        if (result.feasible) {
            doc["h"] = result.degree;
            auto mult = ordered_json::array();
            for (const Rat& q : result.multiplier) mult.push_back(to_fraction_string(q));
            doc["multiplier"] = std::move(mult);
        } else {
            doc["searched_up_to"] = result.degree;
        }
        out << doc.dump() << "\n";
    } else if (result.feasible) {
        out << "feasible at degree " << result.degree << "\n";
    } else {
        out << "infeasible up to degree " << result.degree << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Zeckendorf f-decompositions: sequences, decompositions,\n"
                 "recurrence synthesis and exact summand statistics"};
    app.fallthrough(true);

    std::string format = "";
    app.add_option("--format", format, "Output format: json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain", ""}));

    std::string rule_spec;
    std::size_t count = 10;
    auto* seq_cmd = app.add_subcommand("seq", "Emit terms of the f-sequence of a rule");
    seq_cmd->add_option("--rule", rule_spec, "Rule shorthand or rule file")->required();
    seq_cmd->add_option("--count", count, "Number of terms to emit");

    std::string x_text = "0";
    auto* decomp_cmd = app.add_subcommand("decomp", "Decompose an integer under a rule");
    decomp_cmd->add_option("--rule", rule_spec, "Rule shorthand or rule file")->required();
    decomp_cmd->add_option("--x", x_text, "Nonnegative integer (decimal)")->required();

    std::string x_max_text = "2000";
    std::size_t index_cap = 0;
    auto* check_cmd = app.add_subcommand(
        "check-unique", "Exhaustively verify decomposition uniqueness up to a bound");
    check_cmd->add_option("--rule", rule_spec, "Rule shorthand or rule file")->required();
    check_cmd->add_option("--x-max", x_max_text, "Largest integer to verify");
    check_cmd->add_option("--index-cap", index_cap, "Cap on oracle indices (0 = automatic)");

    bool minimize = true;
    std::size_t verify_horizon = 300;
    std::size_t nonneg_max_degree = 30;
    auto* rec_cmd = app.add_subcommand("recurrence", "Synthesize the linear recurrence of a periodic rule");
    rec_cmd->add_option("--rule", rule_spec, "Rule shorthand or rule file")->required();
    rec_cmd->add_flag("--minimize,!--no-minimize", minimize, "Reduce to the minimal recurrence (default on)");
    rec_cmd->add_option("--verify-horizon", verify_horizon, "Terms checked when verifying");
    rec_cmd->add_option("--nonneg-max-degree", nonneg_max_degree,
                        "Degree bound for the nonnegative-coefficient search");

    std::string system_text;
    std::size_t stats_n = 30;
    std::string emit = "table";
    auto* stats_cmd = app.add_subcommand("stats", "Exact summand-count tables, moments and KS distances");
    stats_cmd->add_option("--system", system_text, "bbin:<b> or factorial")->required();
    stats_cmd->add_option("--n", stats_n, "Largest bin count n");
    stats_cmd->add_option("--emit", emit, "table, moments or ks")
        ->check(CLI::IsMember({"table", "moments", "ks"}));

    std::string poly_text;
    std::string nonneg_rule_spec;
    std::size_t max_degree = 30;
    auto* nonneg_cmd = app.add_subcommand(
        "nonneg", "Search for a nonnegative-coefficient recurrence multiple");
    nonneg_cmd->add_option("--poly", poly_text, "Characteristic polynomial, ascending coefficients");
    nonneg_cmd->add_option("--rule", nonneg_rule_spec, "Rule whose minimal recurrence to analyze");
    nonneg_cmd->add_option("--max-degree", max_degree, "Largest multiple degree to try");

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("fdecomp");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (seq_cmd->parsed()) {
            if (format.empty()) format = "plain";
            return cmd_seq(load_rule(rule_spec), count, format, out);
        }
        if (decomp_cmd->parsed()) {
            if (format.empty()) format = "json";
            return cmd_decomp(load_rule(rule_spec), parse_bigint(x_text), format, out);
        }
        if (check_cmd->parsed()) {
            if (format.empty()) format = "json";
            return cmd_check_unique(load_rule(rule_spec), parse_bigint(x_max_text), index_cap,
                                    format, out);
        }
        if (rec_cmd->parsed()) {
            if (format.empty()) format = "json";
            return cmd_recurrence(load_rule(rule_spec), minimize, verify_horizon,
                                  nonneg_max_degree, format, out);
        }
        if (stats_cmd->parsed()) {
            if (format.empty()) format = "csv";
            return cmd_stats(parse_system(system_text), stats_n, emit, format, out);
        }
        if (nonneg_cmd->parsed()) {
            if (format.empty()) format = "json";
            if (poly_text.empty() == nonneg_rule_spec.empty()) {
                throw parse_error("nonneg requires exactly one of --poly or --rule");
            }
            IntPoly charpoly;
            if (!poly_text.empty()) {
                charpoly = parse_poly(poly_text);
            } else {
                const FRule rule = load_rule(nonneg_rule_spec);
                LinearRecurrence rec = synthesize_recurrence(rule);
                FSequence seq(rule);
                const std::size_t need = std::max(3 * rec.order() + 4, rec.valid_from + rec.order() + 2);
                std::vector<BigInt> terms;
                for (std::size_t n = 0; n < need; ++n) terms.push_back(seq.term(n));
                auto minimal = minimal_recurrence(terms, rec.order());
                if (minimal) rec = *minimal;
                charpoly = characteristic_polynomial(rec);
            }
            if (max_degree < static_cast<std::size_t>(charpoly.degree())) {
                max_degree = static_cast<std::size_t>(charpoly.degree());
            }
            return cmd_nonneg(charpoly, max_degree, format, out);
        }
        err << "error: no subcommand selected\n";
        return 1;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const synthesis_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const unsupported_rule& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fdecomp
