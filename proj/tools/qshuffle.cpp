#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qshuffle/qshuffle.hpp"

using namespace qshuffle;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_at(const std::string& text) {
    std::string s = text;
    if (s.rfind("q=", 0) == 0) s = s.substr(2);
    return parse_rational(s);
}

std::vector<Rational> parse_q_list(const std::vector<std::string>& items) {
    std::vector<Rational> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) out.push_back(parse_rational(part));
    }
    return out;
}

std::string factor_line(const SpectrumFactor& f) {
    std::string line = f.eigenvalue.to_string() + "  mult " + std::to_string(f.multiplicity) + "  from";
    for (const auto& s : f.merged_from) line += " " + s.to_string();
    return line;
}

int run_element(const std::string& expr, const std::string& at, int n, const std::string& format) {
    HeckeElement a = evaluate_expression(expr, n);
    if (format == "json") {
        std::cout << to_json(a).dump(2) << "\n";
        return 0;
    }
    auto lines = at.empty() ? pretty_terms(a) : pretty_terms_at(a, parse_at(at));
    if (lines.empty()) std::cout << "0\n";
    for (const auto& l : lines) std::cout << l << "\n";
    return 0;
}

int run_eigentable(int n, const std::string& format) {
    auto t = eigen_table(n);
    if (format == "csv") std::cout << eigen_table_csv(t);
    else if (format == "json") std::cout << eigen_table_json(t).dump(2) << "\n";
    else std::cout << eigen_table_markdown(t);
    return 0;
}

int run_eigen(const std::string& lambda, const std::string& mu, int k, const std::string& format) {
    SkewShape s(Partition::parse(lambda), Partition::parse(mu));
    auto e = eigenvalue_direct(s, k);
    auto rep = structural_report(s, k);
    if (format == "json") {
        nlohmann::json j{{"shape", s.to_string()},
                         {"k", k},
                         {"eigenvalue", e.to_string()},
                         {"coefficients", to_json(e)},
                         {"degree", e.degree()},
                         {"monic", !e.is_zero() && e.leading_coefficient().is_one()},
                         {"nonnegative", rep.nonnegative},
                         {"checks_passed", rep.ok()},
                         {"failures", rep.failures}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "E_" << s.to_string() << "(" << k << ") = " << e.to_string() << "\n";
        std::cout << "degree " << e.degree() << ", " << (!e.is_zero() && e.leading_coefficient().is_one() ? "monic" : "not monic") << ", "
                  << (rep.nonnegative ? "nonnegative coefficients" : "has negative coefficients") << "\n";
        if (rep.single_row) std::cout << (rep.palindromic && rep.unimodal ? "palindromic and unimodal" : "palindromicity/unimodality fails") << "\n";
        for (const auto& f : rep.failures) std::cout << "check failed: " << f << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int run_charpoly(int n, int k, const std::string& lambda, const std::string& at, Caps caps) {
    if (!lambda.empty()) {
        Partition lam = Partition::parse(lambda);
        if (lam.size() != n) throw UsageError("--lambda must be a partition of --n");
        for (const auto& f : charpoly_factors_specht(lam, k)) std::cout << factor_line(f) << "\n";
        if (at.empty()) return 0;
        auto rep = specht_charpoly_check(lam, k, parse_at(at));
        std::cout << "computed:  " << poly_to_string(rep.computed) << "\npredicted: " << poly_to_string(rep.predicted) << "\n"
                  << (rep.passed ? "match" : "MISMATCH") << "\n";
        return rep.passed ? 0 : 1;
    }
    for (const auto& f : charpoly_factors_regular(n, k)) std::cout << factor_line(f) << "\n";
    if (at.empty()) return 0;
    Rational q0 = parse_at(at);
    auto got = charpoly_at_q(regular_matrix(default_session().r(n, k), q0, caps));
    auto want = predicted_regular_charpoly(n, k, q0);
    std::cout << "computed:  " << poly_to_string(got) << "\npredicted: " << poly_to_string(want) << "\n" << (got == want ? "match" : "MISMATCH") << "\n";
    return got == want ? 0 : 1;
}

int run_verify(const std::string& suite, SuiteOptions opt, const std::string& format) {
    VerificationReport all;
    all.suite = suite;
    bool any = false;
    if (suite == "identities" || suite == "all") {
        all.append(identity_suite(opt));
        any = true;
    }
    if (suite == "spectra" || suite == "all") {
        all.append(spectra_suite(opt));
        any = true;
    }
    if (suite == "nesting" || suite == "all") {
        all.append(nesting_suite(opt));
        any = true;
    }
    if (!any) throw UsageError("unknown suite '" + suite + "'");
    all.parameters = {{"max_n", opt.max_n}, {"q_samples", q_list(opt.q_samples)}, {"seed", opt.seed}, {"workers", opt.workers}};
    if (format == "json") std::cout << all.to_json().dump(2) << "\n";
    else std::cout << all.to_text();
    return all.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with q-deformed random-to-random shuffle elements"};
    app.require_subcommand(1);

    int n = 0;
    int k = 0;
    std::string expr;
    std::string at;
    std::string format = "text";
    std::string lambda;
    std::string mu;
    std::string suite = "all";
    std::vector<std::string> q_samples;
    SuiteOptions opt;
    int symbolic_cap = opt.caps.symbolic;
    int numeric_cap = opt.caps.numeric;
    unsigned workers = opt.workers;
    std::uint64_t seed = opt.seed;
    bool n6 = false;

    auto* element = app.add_subcommand("element", "Expand an expression in the T_w basis");
    element->add_option("expr", expr, "e.g. \"R(3,1)\" or \"B(3)*Bs(3) - 3\"")->required();
    element->add_option("--at", at, "specialize at q=Q");
    element->add_option("--n", n, "ambient rank");
    element->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("eigentable", "Eigenvalue grid and expanded list");
    table->add_option("--n", n, "size")->required()->check(CLI::Range(1, 12));
    auto* table_format = table->add_option("--format", format, "md | csv | json | text")->check(CLI::IsMember({"md", "csv", "json", "text"}));

    auto* eigen = app.add_subcommand("eigen", "One eigenvalue with its structural checks");
    eigen->add_option("--lambda", lambda, "outer partition, e.g. 3,1 or 2^2,1")->required();
    eigen->add_option("--mu", mu, "inner partition, empty for ∅")->required();
    eigen->add_option("--k", k, "k")->required()->check(CLI::NonNegativeNumber);
    eigen->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* charpoly = app.add_subcommand("charpoly", "Predicted characteristic polynomial factors");
    charpoly->add_option("--n", n, "size")->required()->check(CLI::Range(0, 12));
    charpoly->add_option("--k", k, "k")->required()->check(CLI::NonNegativeNumber);
    charpoly->add_option("--lambda", lambda, "restrict to the Specht module S^lambda");
    charpoly->add_option("--at", at, "compare against the matrix oracle at q=Q");
    charpoly->add_option("--symbolic-cap", symbolic_cap)->check(CLI::Range(0, kHardSymbolicCap));
    charpoly->add_option("--numeric-cap", numeric_cap)->check(CLI::Range(0, kHardNumericCap));

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "identities | spectra | nesting | all")->check(CLI::IsMember({"identities", "spectra", "nesting", "all"}));
    verify->add_option("--max-n", opt.max_n, "largest n")->check(CLI::Range(1, kHardSymbolicCap));
    verify->add_option("--q-samples", q_samples, "comma separated rationals");
    verify->add_option("--workers", workers, "worker threads (default from QSHUFFLE_WORKERS)")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed for randomized sub-checks");
    verify->add_flag("--commutativity-n6", n6, "also check commutativity at n = 6");
    verify->add_option("--symbolic-cap", symbolic_cap)->check(CLI::Range(0, kHardSymbolicCap));
    verify->add_option("--numeric-cap", numeric_cap)->check(CLI::Range(0, kHardNumericCap));
    verify->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* packets = app.add_subcommand("packets", "Count distinct eigenvalue packets (exploratory)");
    packets->add_option("--n", n, "size")->required()->check(CLI::Range(1, 12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Caps caps{symbolic_cap, numeric_cap};
    try {
        if (element->parsed()) return run_element(expr, at, n, format);
        if (table->parsed()) return run_eigentable(n, table_format->count() ? format : "md");
        if (eigen->parsed()) return run_eigen(lambda, mu, k, format);
        if (charpoly->parsed()) return run_charpoly(n, k, lambda, at, caps);
        if (verify->parsed()) {
            opt.caps = caps;
            opt.workers = workers;
            opt.seed = seed;
            opt.commutativity_n6 = n6;
            if (!q_samples.empty()) opt.q_samples = parse_q_list(q_samples);
            return run_verify(suite, opt, format);
        }
        if (packets->parsed()) {
            std::cout << "n = " << n << ": " << eigenvalue_packet_count(n) << " distinct eigenvalue packets (exploratory, no reference values)\n";
            return 0;
        }
    } catch (const CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
