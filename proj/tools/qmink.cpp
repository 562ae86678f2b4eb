// Command-line front end: parse noncommutative expressions, normal order,
// specialize, conjugate, apply operators, and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmx/op_config.hpp"
#include "qmx/parser.hpp"
#include "qmx/repr_spaces.hpp"
#include "qmx/verify.hpp"

namespace {

using namespace qmx;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

param_substitution preset_by_name(const std::string& name) {
    if (name == "relq") return presets::relq();
    if (name == "sl4-split") return presets::sl4_split();
    if (name == "conj-2param") return presets::conj_2param();
    if (name == "one-param") return presets::one_param();
    throw std::invalid_argument("unknown preset '" + name +
                                "' (expected one-param | sl4-split | conj-2param | relq)");
}

// fault spec "left,right", e.g. "zb,z"
rewrite_system apply_fault(const rewrite_system& sys, const std::string& spec) {
    auto sep = spec.find_first_of(",.*");
    if (sep == std::string::npos)
        throw std::invalid_argument("fault spec must look like 'zb,z'");
    auto find_gen = [](const std::string& n) {
        for (int g = 0; g < n_generators; ++g)
            if (n == generator_names[g]) return static_cast<generator>(g);
        throw std::invalid_argument("unknown generator '" + n + "' in fault spec");
    };
    generator left = find_gen(spec.substr(0, sep));
    generator right = find_gen(spec.substr(sep + 1));
    if (rank(left) <= rank(right))
        throw std::invalid_argument("fault spec must name an inverted pair");
    return sys.with_fault(left, right);
}

std::string read_input(const std::optional<std::string>& arg) {
    if (arg) return *arg;
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
}

json poly_to_json(const nc_poly& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        json exps = json::array();
        for (int g = 0; g < n_generators; ++g) exps.push_back(m[g]);
        terms.push_back({{"monomial", monomial_to_string(m)},
                         {"exponents", exps},
                         {"coefficient", c.to_string()}});
    }
    return terms;
}

void print_poly_result(const std::string& command, const std::string& input,
                       const nc_poly& result, const std::string& format) {
    if (format == "json") {
        json out = {{"command", command},
                    {"input", input},
                    {"result", result.to_string()},
                    {"terms", poly_to_json(result)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << result.to_string() << "\n";
    }
}

void print_report(const suite_report& rep, const std::string& format) {
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        json out = {{"suite", rep.suite},
                    {"pass", rep.pass},
                    {"seed", rep.seed},
                    {"trials", rep.trials},
                    {"checks", checks}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.to_text();
    }
}

struct cli_options {
    std::string format = "text";
    std::string fault;
    std::optional<std::string> expr;
    std::string expr2;
    std::string preset;
    std::string op_file;
    std::string suite;
    std::string sign = "+";
    int trials = 0;
    int max_len = 6;
    int level = -1;
    int truncate_degree = 1;
    std::uint64_t seed = 20260809;
};

int run_verify(const cli_options& opt, const rewrite_system& sys) {
    suite_report rep;
    const bool preset_given = !opt.preset.empty();
    if (opt.suite == "confluence") {
        const rewrite_system s =
            preset_given ? sys.specialized(preset_by_name(opt.preset)) : sys;
        rep = verify_confluence(s, opt.trials > 0 ? opt.trials : 1000, opt.max_len, opt.seed);
    } else if (preset_given) {
        throw std::invalid_argument("--preset only applies to the confluence suite");
    } else if (opt.suite == "relations-omega") {
        rep = verify_relations_omega(sys, opt.trials > 0 ? opt.trials : 200, opt.seed);
    } else if (opt.suite == "specialization") {
        rep = verify_specialization(sys, opt.trials > 0 ? opt.trials : 100, opt.seed);
    } else if (opt.suite == "classical-maxwell") {
        rep = verify_classical_maxwell();
    } else if (opt.suite == "operator-identity") {
        rep = verify_operator_identity();
    } else if (opt.suite == "q-limit") {
        rep = verify_q_limit(sys);
    } else {
        throw std::invalid_argument(
            "unknown suite '" + opt.suite +
            "' (expected confluence | relations-omega | specialization | "
            "classical-maxwell | operator-identity | q-limit)");
    }
    print_report(rep, opt.format);
    return rep.pass ? exit_ok : exit_verify_failed;
}

int run_apply_op(const cli_options& opt, const rewrite_system& base) {
    const rewrite_system sys =
        opt.preset.empty() ? base : base.specialized(preset_by_name(opt.preset));

    json desc;
    if (!opt.op_file.empty()) {
        std::ifstream in(opt.op_file);
        if (!in) throw std::invalid_argument("cannot open operator file '" + opt.op_file + "'");
        std::ostringstream os;
        os << in.rdbuf();
        desc = json::parse(os.str());
    }

    if (opt.level >= 0) {
        // hierarchy mode: triple from the file (fields I1, I2, I3) or default
        op_triple t = classical_limit_ops(sys);
        if (!desc.is_null()) {
            if (desc.contains("I1")) t.I1 = load_operator(desc.at("I1"), sys);
            if (desc.contains("I2")) t.I2 = load_operator(desc.at("I2"), sys);
            if (desc.contains("I3")) t.I3 = load_operator(desc.at("I3"), sys);
        }
        const pm_sign s = opt.sign == "-" ? pm_sign::minus : pm_sign::plus;
        const level_kind k = s == pm_sign::plus ? level_kind::plus : level_kind::minus;
        nc_poly input;
        if (opt.expr) {
            input = normal_order(parse_expression(*opt.expr).to_word_sum(), sys);
        } else {
            input = make_hierarchy_element(opt.level, k, opt.truncate_degree).body;
        }
        nc_poly out = quantum_hierarchy_apply(s, opt.level, t, input);
        c_chi_element target{signature_for_level(opt.level, level_kind::zero), out};
        if (opt.format == "json") {
            json j = {{"command", "apply-op"},
                      {"level", opt.level},
                      {"sign", opt.sign},
                      {"signature", target.sig.to_string()},
                      {"result", out.to_string()},
                      {"terms", poly_to_json(out)}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << serialize(target);
        }
        return exit_ok;
    }

    if (desc.is_null())
        throw std::invalid_argument("apply-op needs --op-file (or --level for hierarchy mode)");
    linear_operator op = load_operator(desc, sys);
    std::string text = read_input(opt.expr);
    nc_poly input = normal_order(parse_expression(text).to_word_sum(), sys);
    print_poly_result("apply-op", text, op.apply(input), opt.format);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for the multiparameter quantum Minkowski "
                 "coordinate algebra"};
    app.require_subcommand(1);
    cli_options opt;

    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--inject-fault", opt.fault,
                   "testing hook: corrupt one rule coefficient, e.g. 'zb,z'");

    auto* norm = app.add_subcommand("normalize", "normal order an expression");
    norm->add_option("expr", opt.expr, "expression (stdin when omitted)");

    auto* mul = app.add_subcommand("mul", "multiply two expressions and normal order");
    std::string mul_a, mul_b;
    mul->add_option("a", mul_a, "left factor")->required();
    mul->add_option("b", mul_b, "right factor")->required();

    auto* spec = app.add_subcommand("specialize", "normal order, then apply a preset");
    spec->add_option("expr", opt.expr, "expression (stdin when omitted)");
    spec->add_option("--preset", opt.preset, "one-param | sl4-split | conj-2param | relq")
        ->required();

    auto* om = app.add_subcommand("omega", "apply the conjugation anti-involution");
    om->add_option("expr", opt.expr, "expression (stdin when omitted)");

    auto* ap = app.add_subcommand("apply-op", "apply an operator from a description file");
    ap->add_option("expr", opt.expr, "expression (template when omitted in hierarchy mode)");
    ap->add_option("--op-file", opt.op_file, "operator description (JSON)");
    ap->add_option("--preset", opt.preset, "specialize the rewrite system first");
    ap->add_option("--level", opt.level, "hierarchy level n (enables hierarchy mode)");
    ap->add_option("--sign", opt.sign, "hierarchy sign")->check(CLI::IsMember({"+", "-"}));
    ap->add_option("--truncate-degree", opt.truncate_degree,
                   "Minkowski truncation degree for generated templates")
        ->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", opt.suite,
                    "confluence | relations-omega | specialization | classical-maxwell | "
                    "operator-identity | q-limit")
        ->required();
    ver->add_option("--trials", opt.trials, "randomized trial count (suite default when 0)");
    ver->add_option("--max-len", opt.max_len, "maximum random word length")
        ->capture_default_str();
    ver->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    ver->add_option("--preset", opt.preset, "specialize the table (confluence suite only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        rewrite_system sys =
            opt.fault.empty() ? default_system() : apply_fault(default_system(), opt.fault);

        if (*norm) {
            std::string text = read_input(opt.expr);
            print_poly_result("normalize", text,
                              normal_order(parse_expression(text).to_word_sum(), sys),
                              opt.format);
            return exit_ok;
        }
        if (*mul) {
            raw_poly prod = parse_expression(mul_a) * parse_expression(mul_b);
            print_poly_result("mul", mul_a + " , " + mul_b,
                              normal_order(prod.to_word_sum(), sys), opt.format);
            return exit_ok;
        }
        if (*spec) {
            std::string text = read_input(opt.expr);
            nc_poly p = normal_order(parse_expression(text).to_word_sum(), sys);
            print_poly_result("specialize", text, specialize(p, preset_by_name(opt.preset)),
                              opt.format);
            return exit_ok;
        }
        if (*om) {
            std::string text = read_input(opt.expr);
            word_sum raw = parse_expression(text).to_word_sum();
            print_poly_result("omega", text, normal_order(omega_raw(raw), sys), opt.format);
            return exit_ok;
        }
        if (*ap) return run_apply_op(opt, sys);
        if (*ver) return run_verify(opt, sys);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
