// divseq — exact arithmetic for divisibility sequences, their
// characteristic sequences, generalized binomials, cyclotomic
// factorizations, and a property-audit suite over all of it.
//
// Every command prints one JSON record (fixed key order, big integers as
// decimal strings); `audit` prints one report per line. Exit codes:
//   0  all expectations met
//   1  unexpected property violation, value-size cap exceeded, or internal error
//   2  usage or parse error

#include <cstdint>
#include <exception>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divseq/charseq.hpp"
#include "divseq/exact_int.hpp"
#include "divseq/harness.hpp"
#include "divseq/numtheory.hpp"
#include "divseq/polynomial.hpp"
#include "divseq/product.hpp"
#include "divseq/report_json.hpp"
#include "divseq/sequence.hpp"

namespace {

using nlohmann::ordered_json;

void emit(const ordered_json& record) { std::cout << record.dump() << "\n"; }

ordered_json record_shell(const std::string& command, ordered_json inputs) {
    ordered_json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = nullptr;
    j["status"] = "ok";
    return j;
}

ordered_json rational_payload(const divseq::ExactRational& value) {
    ordered_json j;
    j["integral"] = value.is_integer();
    if (value.is_integer()) {
        j["value"] = value.numerator().to_string();
    } else {
        j["num"] = value.numerator().to_string();
        j["den"] = value.denominator().to_string();
    }
    return j;
}

ordered_json stats_payload(const divseq::OperandStats& stats) {
    ordered_json j;
    j["multiplications"] = stats.multiplications;
    j["total_bits"] = stats.total_bits;
    j["peak_bits"] = stats.peak_bits;
    return j;
}

int cmd_term(const std::string& seq, std::uint64_t n) {
    divseq::SequenceSpec spec = divseq::parse_spec(seq);
    ordered_json rec = record_shell("term", {{"seq", spec.label()}, {"n", n}});
    rec["result"] = ordered_json{{"value", divseq::term(spec, n).to_string()}};
    emit(rec);
    return 0;
}

int cmd_charseq(const std::string& seq, std::uint64_t max_n, const std::string& method) {
    divseq::SequenceSpec spec = divseq::parse_spec(seq);
    ordered_json rec =
        record_shell("charseq", {{"seq", spec.label()}, {"max", max_n}, {"method", method}});
    ordered_json entries = ordered_json::array();
    if (method == "mobius") {
        for (std::uint64_t n = 1; n <= max_n; ++n) {
            ordered_json e = rational_payload(divseq::char_term_mobius(spec, n));
            ordered_json row{{"n", n}};
            row.update(e);
            entries.push_back(std::move(row));
        }
    } else {
        divseq::CharacteristicTable table = divseq::extract(spec, max_n);
        for (std::uint64_t n = 1; n <= max_n; ++n) {
            ordered_json e = rational_payload(table.entry(n));
            ordered_json row{{"n", n}};
            row.update(e);
            entries.push_back(std::move(row));
        }
    }
    ordered_json result;
    result["entries"] = std::move(entries);
    if (method == "both") {
        divseq::CheckResult agreement = divseq::agreement_check(spec, max_n);
        ordered_json a;
        a["agree"] = agreement.ok;
        if (!agreement.ok) a["first_disagreement"] = agreement.first_failure;
        result["agreement"] = std::move(a);
    }
    rec["result"] = std::move(result);
    emit(rec);
    return 0;
}

int cmd_binomial(const std::string& seq, std::uint64_t m, std::uint64_t n,
                 const std::string& method, bool with_stats) {
    divseq::SequenceSpec spec = divseq::parse_spec(seq);
    ordered_json rec = record_shell(
        "binomial",
        {{"seq", spec.label()}, {"m", m}, {"n", n}, {"method", method}, {"stats", with_stats}});
    divseq::ProductEngine engine(spec);
    ordered_json result;
    bool agreement = true;
    try {
        divseq::OperandStats quotient_stats, factored_stats;
        std::optional<divseq::ExactRational> value;
        if (method == "quotient" || method == "both") {
            value = engine.generalized_binomial(m, n, divseq::BinomialMethod::quotient,
                                                with_stats ? &quotient_stats : nullptr);
        }
        if (method == "factored" || method == "both") {
            divseq::ExactRational factored = engine.generalized_binomial(
                m, n, divseq::BinomialMethod::factored, with_stats ? &factored_stats : nullptr);
            if (value)
                agreement = *value == factored;
            else
                value = factored;
        }
        result = rational_payload(*value);
        if (method == "both") result["agreement"] = agreement;
        if (with_stats) {
            ordered_json stats;
            if (method == "quotient" || method == "both")
                stats["quotient"] = stats_payload(quotient_stats);
            if (method == "factored" || method == "both")
                stats["factored"] = stats_payload(factored_stats);
            result["stats"] = std::move(stats);
        }
    } catch (const divseq::nonintegral_error& e) {
        rec["result"] = ordered_json{{"error", e.what()}};
        rec["status"] = "error";
        emit(rec);
        return 1;
    }
    rec["result"] = std::move(result);
    if (!agreement) {
        rec["status"] = "violated";
        emit(rec);
        return 1;
    }
    emit(rec);
    return 0;
}

int cmd_cyclotomic(std::uint64_t n, bool verify) {
    ordered_json rec = record_shell("cyclotomic", {{"n", n}, {"verify", verify}});
    divseq::IntPolynomial phi = divseq::cyclotomic(n);
    ordered_json result;
    result["polynomial"] = phi.to_string();
    result["degree"] = phi.degree();
    if (verify) result["verified"] = divseq::verify_cyclotomic_product(n);
    bool ok = !verify || result["verified"].get<bool>();
    rec["result"] = std::move(result);
    if (!ok) {
        rec["status"] = "violated";
        emit(rec);
        return 1;
    }
    emit(rec);
    return 0;
}

int cmd_polygcd(std::uint64_t m, std::uint64_t n) {
    ordered_json rec = record_shell("polygcd", {{"m", m}, {"n", n}});
    divseq::IntPolynomial g = divseq::poly_gcd(divseq::binomial_xn(m), divseq::binomial_xn(n));
    divseq::IntPolynomial expected = divseq::binomial_xn(std::gcd(m, n));
    bool matches = g == expected;
    rec["result"] = ordered_json{{"gcd", g.to_string()},
                                 {"expected", expected.to_string()},
                                 {"matches", matches}};
    if (!matches) {
        rec["status"] = "violated";
        emit(rec);
        return 1;
    }
    emit(rec);
    return 0;
}

int cmd_window(std::optional<std::string> seq, bool poly, std::uint64_t m, std::uint64_t n) {
    if (seq.has_value() == poly) {
        std::cerr << "window: pass exactly one of --seq or --poly\n";
        return 2;
    }
    if (seq) {
        divseq::SequenceSpec spec = divseq::parse_spec(*seq);
        ordered_json rec =
            record_shell("window", {{"seq", spec.label()}, {"m", m}, {"n", n}});
        rec["result"] =
            ordered_json{{"product", divseq::window_product(spec, m, n).to_string()}};
        emit(rec);
        return 0;
    }
    ordered_json rec = record_shell("window", {{"poly", true}, {"m", m}, {"n", n}});
    bool division = divseq::window_divisibility_poly(m, n, divseq::WindowMode::division);
    bool exponent = divseq::window_divisibility_poly(m, n, divseq::WindowMode::exponent);
    rec["result"] = ordered_json{
        {"division", division}, {"exponent", exponent}, {"agree", division == exponent}};
    if (!division || !exponent) {
        rec["status"] = "violated";
        emit(rec);
        return 1;
    }
    emit(rec);
    return 0;
}

int cmd_radical(std::uint64_t n) {
    ordered_json rec = record_shell("radical", {{"n", n}});
    divseq::Index rad = divseq::radical(n);
    // Cross-check value: prod over d | n of d^mu(n/d), as a reduced fraction.
    divseq::ExactRational product(1);
    for (divseq::Index d : divseq::divisors(n)) {
        int mu = divseq::mobius(n / d);
        if (mu == 0) continue;
        divseq::ExactRational factor{divseq::ExactInt(static_cast<unsigned long>(d))};
        if (mu > 0)
            product *= factor;
        else
            product /= factor;
    }
    bool matches =
        product == divseq::ExactRational(divseq::ExactInt(static_cast<unsigned long>(rad)));
    rec["result"] = ordered_json{{"radical", std::to_string(rad)},
                                 {"mobius_product", product.to_string()},
                                 {"matches", matches}};
    emit(rec);
    return 0;
}

int cmd_audit(std::optional<std::string> claim, const std::vector<std::string>& seq_args,
              std::optional<std::uint64_t> max, unsigned jobs, const std::string& format) {
    std::vector<divseq::AuditCell> plan;
    if (claim) {
        std::vector<divseq::SequenceSpec> specs;
        for (const auto& text : seq_args) specs.push_back(divseq::parse_spec(text));
        try {
            plan = divseq::claim_plan(*claim, specs, max);
        } catch (const std::invalid_argument& e) {
            std::cerr << "audit: " << e.what() << "\n";
            return 2;
        }
    } else {
        plan = divseq::default_audit_plan();
    }
    divseq::SuiteResult result = divseq::run_audit_suite(std::move(plan), jobs);
    if (format == "csv") {
        std::cout << divseq::csv_header() << "\n";
        for (const auto& r : result.reports) std::cout << divseq::report_to_csv_row(r) << "\n";
    } else if (format == "plain") {
        for (const auto& r : result.reports) std::cout << divseq::report_to_plain(r) << "\n";
        std::cout << (result.all_expected ? "suite: all expectations met"
                                          : "suite: unexpected outcomes present")
                  << "\n";
    } else {
        std::cout << divseq::reports_to_json_lines(result.reports);
    }
    return result.all_expected ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact divisibility-sequence toolkit"};
    app.require_subcommand(1);

    std::string seq;
    std::string charseq_method;
    std::string binomial_method;
    std::string format = "json";
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t max_n = 0;
    bool flag_verify = false;
    bool flag_stats = false;
    bool flag_poly = false;
    unsigned jobs = 1;
    std::string claim;
    std::vector<std::string> audit_seqs;
    std::optional<std::uint64_t> audit_max;

    const CLI::Validator positive_index(
        [](std::string& value) {
            if (!value.empty() && value[0] != '-' && value != "0" &&
                value.find_first_not_of("0123456789") == std::string::npos)
                return std::string{};
            return "must be a positive integer, got '" + value + "'";
        },
        "POSITIVE");

    auto* term_cmd = app.add_subcommand("term", "n-th term of a sequence");
    term_cmd->add_option("--seq", seq, "sequence spec")->required();
    term_cmd->add_option("--n", n, "index (from 1)")->required()->check(positive_index);

    auto* charseq_cmd = app.add_subcommand("charseq", "characteristic terms c_1..c_N");
    charseq_cmd->add_option("--seq", seq, "sequence spec")->required();
    charseq_cmd->add_option("--max", max_n, "last index")->required()->check(positive_index);
    charseq_cmd->add_option("--method", charseq_method, "construction route")
        ->default_val("iterative")
        ->check(CLI::IsMember({"iterative", "mobius", "both"}));

    auto* binomial_cmd = app.add_subcommand("binomial", "generalized binomial coefficient");
    binomial_cmd->add_option("--seq", seq, "sequence spec")->required();
    binomial_cmd->add_option("--m", m, "window offset")->required();
    binomial_cmd->add_option("--n", n, "window length")->required();
    binomial_cmd->add_option("--method", binomial_method, "computation route")
        ->default_val("quotient")
        ->check(CLI::IsMember({"quotient", "factored", "both"}));
    binomial_cmd->add_flag("--stats", flag_stats, "report operand bit-size counters");

    auto* cyclotomic_cmd = app.add_subcommand("cyclotomic", "n-th cyclotomic polynomial");
    cyclotomic_cmd->add_option("--n", n, "index")->required()->check(positive_index);
    cyclotomic_cmd->add_flag("--verify", flag_verify, "re-multiply all divisors' factors");

    auto* polygcd_cmd = app.add_subcommand("polygcd", "gcd of x^m - 1 and x^n - 1");
    polygcd_cmd->add_option("--m", m, "first exponent")->required()->check(positive_index);
    polygcd_cmd->add_option("--n", n, "second exponent")->required()->check(positive_index);

    auto* window_cmd = app.add_subcommand("window", "window products and their divisibility");
    window_cmd->add_option("--seq", seq, "sequence spec (numeric window product)");
    window_cmd->add_flag("--poly", flag_poly, "polynomial window divisibility");
    window_cmd->add_option("--m", m, "window offset")->required();
    window_cmd->add_option("--n", n, "window length")->required();

    auto* radical_cmd = app.add_subcommand("radical", "rad(n) and its Moebius-product check");
    radical_cmd->add_option("--n", n, "argument")->required()->check(positive_index);

    auto* audit_cmd = app.add_subcommand("audit", "run property audits");
    std::string suite_name;
    audit_cmd->add_option("--suite", suite_name, "suite to run")
        ->check(CLI::IsMember({"default"}));
    audit_cmd->add_option("--claim", claim, "audit one claim id");
    audit_cmd->add_option("--seq", audit_seqs, "sequence specs for the claim");
    std::uint64_t max_raw = 0;
    auto* max_opt = audit_cmd->add_option("--max", max_raw, "scan bound override")
                        ->check(positive_index);
    audit_cmd->add_option("--jobs", jobs, "worker count (results are unaffected)")
        ->default_val(1u);
    audit_cmd->add_option("--format", format, "output format")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (term_cmd->parsed()) return cmd_term(seq, n);
        if (charseq_cmd->parsed()) return cmd_charseq(seq, max_n, charseq_method);
        if (binomial_cmd->parsed()) return cmd_binomial(seq, m, n, binomial_method, flag_stats);
        if (cyclotomic_cmd->parsed()) return cmd_cyclotomic(n, flag_verify);
        if (polygcd_cmd->parsed()) return cmd_polygcd(m, n);
        if (window_cmd->parsed())
            return cmd_window(window_cmd->count("--seq") ? std::optional(seq) : std::nullopt,
                              flag_poly, m, n);
        if (radical_cmd->parsed()) return cmd_radical(n);
        if (audit_cmd->parsed()) {
            if (max_opt->count()) audit_max = max_raw;
            return cmd_audit(claim.empty() ? std::nullopt : std::optional(claim), audit_seqs,
                             audit_max, jobs, format);
        }
    } catch (const divseq::spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const divseq::limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
