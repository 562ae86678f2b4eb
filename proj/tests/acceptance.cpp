// Acceptance runner: executes every acceptance criterion at its stated scale
// and prints one PASS/FAIL line per criterion.  Exit code is the number of
// failed criteria.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qmx/op_config.hpp"
#include "qmx/parser.hpp"
#include "qmx/repr_spaces.hpp"
#include "qmx/verify.hpp"

using namespace qmx;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << number << " [" << name << "]: " << (pass ? "PASS" : "FAIL")
              << "\n";
    if (!detail.empty()) std::cout << "    " << detail << "\n";
    if (!pass) ++failures;
}

void note(const std::string& text) { std::cout << "    note: " << text << "\n"; }

laurent_poly M(std::initializer_list<std::pair<param, int>> f) { return presets::mono(f); }

normal_monomial NM(std::initializer_list<generator> gs) {
    normal_monomial m = unit_monomial_nc();
    for (generator g : gs) ++m[rank(g)];
    return m;
}

// --- criterion 1: relation fidelity -----------------------------------------

bool relation_fidelity(std::string& detail) {
    using g = generator;
    using enum param;
    const laurent_poly lam = lambda_const();
    struct expected {
        generator b, a;
        laurent_poly swap_coeff;
        nc_poly extra;
    };
    const std::vector<expected> table = {
        {g::xp, g::v, M({{q23, 1}, {q34, 1}, {q24, -1}}), nc_poly::zero()},
        {g::vb, g::xp, M({{q14, 1}, {q12, -1}, {q24, -1}}), nc_poly::zero()},
        {g::xm, g::v, M({{q13, 1}, {q12, -1}, {q23, -1}}), nc_poly::zero()},
        {g::vb, g::xm, M({{q13, 1}, {q34, 1}, {q14, -1}}), nc_poly::zero()},
        {g::vb, g::v, M({{q13, 1}, {q34, 1}, {q12, -1}, {q24, -1}}), nc_poly::zero()},
        {g::xp, g::xm, M({{q12, 1}, {q23, 1}, {q34, 1}, {q, -2}, {q14, -1}}),
         nc_poly::monomial(NM({g::v, g::vb}),
                           lam * M({{q23, 1}, {q34, 1}, {q, -1}, {q24, -1}}))},
        {g::zb, g::z, M({{q13, 1}, {q24, 1}, {q14, -1}, {q23, -1}}), nc_poly::zero()},
        {g::zb, g::xp, M({{q13, 1}, {q34, 1}, {q14, -1}}), nc_poly::zero()},
        {g::zb, g::xm, M({{q23, 1}, {q34, 1}, {q, -2}, {q24, -1}}),
         nc_poly::monomial(NM({g::vb}), lam)},
        {g::zb, g::vb, M({{q23, 1}, {q34, 1}, {q24, -1}}), nc_poly::zero()},
        {g::zb, g::v, M({{q13, 1}, {q34, 1}, {q, -2}, {q14, -1}}),
         nc_poly::monomial(NM({g::xp}), lam)},
        {g::xp, g::z, M({{q14, 1}, {q12, -1}, {q24, -1}}), nc_poly::zero()},
        {g::xm, g::z, M({{q, 2}, {q13, 1}, {q12, -1}, {q23, -1}}),
         nc_poly::monomial(NM({g::v}), -lam)},
        {g::v, g::z, M({{q13, 1}, {q12, -1}, {q23, -1}}), nc_poly::zero()},
        {g::vb, g::z, M({{q, 2}, {q14, 1}, {q12, -1}, {q24, -1}}),
         nc_poly::monomial(NM({g::xp}), -lam)},
    };
    const auto& sys = default_system();
    if (sys.rules().size() != 15) {
        detail = "rule count != 15";
        return false;
    }
    for (const auto& e : table) {
        nc_poly want = nc_poly::monomial(NM({e.a, e.b}), e.swap_coeff) + e.extra;
        if (sys.rule(e.b, e.a).replacement != want) {
            detail = std::string("rule ") + generator_names[rank(e.b)] + "*" +
                     generator_names[rank(e.a)] + " differs from the golden table";
            return false;
        }
    }
    // back-substitution regenerates the implicit form of the xp*xm relation
    word_sum s;
    s.emplace_back(M({{q, 1}, {q24, 1}, {q23, -1}, {q34, -1}}), word{g::xp, g::xm});
    s.emplace_back(-M({{q12, 1}, {q24, 1}, {q, -1}, {q14, -1}}), word{g::xm, g::xp});
    s.emplace_back(-lam, word{g::v, g::vb});
    if (!normal_order(s, sys).is_zero()) {
        detail = "xp*xm back-substitution does not vanish";
        return false;
    }
    return true;
}

// --- criterion 8: signatures, templates, degree contract ---------------------

bool signature_bookkeeping(std::string& detail) {
    for (int n = 0; n <= 10; ++n) {
        if (signature_for_level(n, level_kind::plus) != signature{n + 2, n, 2} ||
            signature_for_level(n, level_kind::minus) != signature{n, n + 2, 2} ||
            signature_for_level(n, level_kind::zero) != signature{n + 1, n + 1, 3}) {
            detail = "signature mismatch at n=" + std::to_string(n);
            return false;
        }
        for (level_kind k : {level_kind::plus, level_kind::minus, level_kind::zero})
            if (!validate(make_hierarchy_element(n, k, 1))) {
                detail = "template fails validation at n=" + std::to_string(n);
                return false;
            }
    }
    const auto sys1 = default_system().specialized(presets::one_param());
    const auto t3 = classical_limit_ops(sys1);
    for (int n = 0; n <= 5; ++n)
        for (level_kind k : {level_kind::plus, level_kind::minus}) {
            pm_sign s = k == level_kind::plus ? pm_sign::plus : pm_sign::minus;
            auto tmpl = make_hierarchy_element(n, k, 1);
            try {
                nc_poly out = quantum_hierarchy_apply(s, n, t3, tmpl.body);
                if (!validate({signature_for_level(n, level_kind::zero), out})) {
                    detail = "target bounds violated at n=" + std::to_string(n);
                    return false;
                }
            } catch (const std::exception& e) {
                detail = std::string("level ") + std::to_string(n) + ": " + e.what();
                return false;
            }
        }
    return true;
}

// --- criterion 9: CLI round trip and exit codes -------------------------------

#ifndef QMINK_CLI_PATH
#define QMINK_CLI_PATH "qmink"
#endif

struct run_result {
    int exit_code = -1;
    std::string output;
};

run_result run_cli(const std::string& args) {
    std::string cmd = std::string(QMINK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    run_result r;
    if (!f) return r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, f)) r.output.append(buf, n);
    int status = pclose(f);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string chomp(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

const std::vector<std::string> corpus = {
    "z", "v", "xm", "xp", "vb", "zb", "1", "0", "q", "q14^-3",
    "zb*z", "zb*v", "zb*xm", "zb*vb", "zb*xp", "xp*xm", "xp*v", "xm*v", "vb*v", "vb*xm",
    "vb*xp", "xp*z", "xm*z", "v*z", "vb*z",
    "zb*v*z", "zb*xm*z", "zb*zb*z*z", "vb*vb*xp", "zb*v - (q13*q34*q^-2*q14^-1)*v*zb - (q-q^-1)*xp",
    "(q - q^-1)*vb + 2*z*zb", "3/2*q13^2*q24^-1", "z + v + zb*z", "(z + vb)^3",
    "x₊*x₋", "z̄*z", "v̄*v", "2/3", "-z - -v",
    "q*q12*q13*q14*q23*q24*q34", "(q13*q24)^-2", "zb^2*xm^2*z", "vb*xm*v*z",
    "z^4", "zb*z^3", "(1/2)*xp*xm*v", "q^2*zb*v*zb", "xm*xp*xm", "vb*z*vb*z", "zb*vb*xp*xm*v*z",
};

// expressions go through stdin so that leading '-' is never taken for a flag
run_result run_normalize(const std::string& expr) {
    std::string cmd = "printf '%s' '" + expr + "' | " + QMINK_CLI_PATH + " normalize 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    run_result r;
    if (!f) return r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, f)) r.output.append(buf, n);
    int status = pclose(f);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

bool cli_round_trip(std::string& detail) {
    for (const auto& expr : corpus) {
        run_result first = run_normalize(expr);
        if (first.exit_code != 0) {
            detail = "normalize failed on '" + expr + "'";
            return false;
        }
        std::string once = chomp(first.output);
        run_result second = run_normalize(once);
        if (second.exit_code != 0 || chomp(second.output) != once) {
            detail = "not a fixed point: '" + expr + "' -> '" + once + "' -> '" +
                     chomp(second.output) + "'";
            return false;
        }
    }
    return true;
}

bool cli_golden_outputs(std::string& detail) {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"normalize 'zb*z'", "(q13*q24*q14^-1*q23^-1) * z*zb"},
        {"specialize --preset conj-2param 'q23*q34*q24^-1'", "q^3*q14^-2"},
        {"specialize --preset relq 'q13*q24*q14^-1*q23^-1'", "1"},
        {"omega 'v'", "vb"},
        {"omega 'xp'", "xp"},
    };
    for (const auto& [args, want] : cases) {
        run_result r = run_cli(args);
        if (r.exit_code != 0 || chomp(r.output) != want) {
            detail = "'" + args + "' printed '" + chomp(r.output) + "', want '" + want + "'";
            return false;
        }
    }
    return true;
}

bool cli_exit_codes(std::string& detail) {
    const std::vector<std::pair<std::string, int>> cases = {
        {"verify --suite relations-omega", 0},
        {"verify --suite specialization", 0},
        {"verify --suite classical-maxwell", 0},
        {"verify --suite confluence --preset relq --trials 200", 0},
        {"--inject-fault zb,z verify --suite relations-omega", 1},
        {"--inject-fault zb,z verify --suite specialization", 1},
        {"--inject-fault zb,z verify --suite confluence --preset relq --trials 200", 1},
        {"normalize 'zb*(('", 2},
        {"normalize 'unknown*z'", 2},
        {"verify --suite no-such-suite", 2},
        {"--no-such-flag normalize z", 2},
    };
    for (const auto& [args, want] : cases) {
        run_result r = run_cli(args);
        if (r.exit_code != want) {
            detail = "'" + args + "' exited " + std::to_string(r.exit_code) + ", want " +
                     std::to_string(want);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::cout << "acceptance run (cli: " << QMINK_CLI_PATH << ")\n";

    {
        std::string d;
        bool ok = relation_fidelity(d);
        criterion(1, "relation fidelity", ok, d);
    }

    {
        confluence_report rep = confluence_check(1000, 6, 20260809, default_system());
        criterion(2, "confluence/PBW, generic seven-parameter table", rep.pass, rep.detail);
        if (!rep.pass) {
            note("the table exactly as printed is not confluent for generic parameters; "
                 "the overlap above forces q13*q24 = q14*q23");
            param_substitution consistent;
            consistent.set(param::q13, M({{param::q14, 1}, {param::q23, 1}, {param::q24, -1}}));
            struct named { const char* name; param_substitution s; };
            const std::vector<named> cases = {{"q13 -> q14*q23/q24", consistent},
                                              {"relq", presets::relq()},
                                              {"conj-2param", presets::conj_2param()},
                                              {"one-param", presets::one_param()}};
            for (const auto& c : cases) {
                confluence_report r =
                    confluence_check(1000, 6, 20260809, default_system().specialized(c.s));
                note(std::string("specialized table '") + c.name + "': " +
                     (r.pass ? "confluent (20 overlaps + 1000 random words)" : "NOT confluent"));
            }
        }
    }

    {
        suite_report rep = verify_specialization(default_system(), 100, 20260809);
        criterion(3, "specialization (conj-2param table, relq coefficient)", rep.pass,
                  rep.pass ? "" : rep.to_text());
    }

    {
        suite_report rep = verify_relations_omega(default_system(), 200, 20260809);
        // criterion 4 is the omega part; the golden part doubles criterion 1
        criterion(4, "conjugation under relq (15 relations, 200 involutions, 200 pairs)",
                  rep.pass, rep.pass ? "" : rep.to_text());
    }

    {
        suite_report rep = verify_operator_identity();
        criterion(5, "classical operator identity (direct == factored)", rep.pass,
                  rep.pass ? "" : rep.to_text());
    }

    {
        suite_report rep = verify_classical_maxwell();
        criterion(6, "classical Maxwell reproduction", rep.pass, rep.pass ? "" : rep.to_text());
    }

    {
        suite_report rep = verify_q_limit(default_system());
        criterion(7, "quantum-classical consistency (n <= 5, degree <= 4)", rep.pass,
                  rep.pass ? "" : rep.to_text());
    }

    {
        std::string d;
        bool ok = signature_bookkeeping(d);
        criterion(8, "degree/signature bookkeeping", ok, d);
    }

    {
        std::string d;
        bool ok = cli_round_trip(d);
        bool golden = cli_golden_outputs(d);
        bool codes = cli_exit_codes(d);
        criterion(9, "CLI round trip, golden outputs and exit codes", ok && golden && codes, d);
    }

    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures;
}
