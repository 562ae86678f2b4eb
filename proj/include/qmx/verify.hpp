// Named verification suites shared by the CLI and the acceptance runner.
// Every check is exact; reports carry seed, counts and per-case verdicts.
#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmx/classical_maxwell.hpp"
#include "qmx/flag_algebra.hpp"
#include "qmx/laurent.hpp"
#include "qmx/qoperators.hpp"
#include "qmx/repr_spaces.hpp"

namespace qmx {

struct check_line {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct suite_report {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    bool pass = true;
    std::vector<check_line> checks;

    void add(std::string name, bool ok, std::string detail = "") {
        pass = pass && ok;
        checks.push_back({std::move(name), ok, std::move(detail)});
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "suite " << suite << " (seed " << seed << ", trials " << trials
           << "): " << (pass ? "PASS" : "FAIL") << "\n";
        for (const auto& c : checks) {
            os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) os << " -- " << c.detail;
            os << "\n";
        }
        return os.str();
    }
};

namespace verify_detail {

inline nc_poly random_nc(std::mt19937_64& rng, int max_terms = 3, int max_deg = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> gen_dist(0, n_generators - 1);
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> qexp(-1, 1);
    nc_poly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        normal_monomial m = unit_monomial_nc();
        int d = deg_dist(rng);
        for (int i = 0; i < d; ++i) ++m[gen_dist(rng)];
        int c = coeff(rng);
        if (c == 0) c = 1;
        param_exponent e{};
        e[0] = qexp(rng);
        e[4] = qexp(rng);
        p += nc_poly::monomial(m, laurent_poly::term(c, e));
    }
    return p;
}

inline normal_monomial random_mono(std::mt19937_64& rng, int max_deg = 3) {
    std::uniform_int_distribution<int> gen_dist(0, n_generators - 1);
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    normal_monomial m = unit_monomial_nc();
    int d = deg_dist(rng);
    for (int i = 0; i < d; ++i) ++m[gen_dist(rng)];
    return m;
}

inline word random_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(0, n_generators - 1);
    word w(static_cast<std::size_t>(len_dist(rng)));
    for (auto& g : w) g = static_cast<generator>(gen_dist(rng));
    return w;
}

struct rule_golden {
    generator left, right;
    const char* replacement;
};

// canonical printed form of the seven-parameter table
inline constexpr rule_golden generic_table_golden[15] = {
    {generator::xp, generator::v, "(q23*q34*q24^-1) * v*xp"},
    {generator::vb, generator::xp, "(q14*q12^-1*q24^-1) * xp*vb"},
    {generator::xm, generator::v, "(q13*q12^-1*q23^-1) * v*xm"},
    {generator::vb, generator::xm, "(q13*q34*q14^-1) * xm*vb"},
    {generator::vb, generator::v, "(q13*q34*q12^-1*q24^-1) * v*vb"},
    {generator::xp, generator::xm,
     "(q23*q34*q24^-1 - q23*q34*q^-2*q24^-1) * v*vb + (q12*q23*q34*q^-2*q14^-1) * xm*xp"},
    {generator::zb, generator::z, "(q13*q24*q14^-1*q23^-1) * z*zb"},
    {generator::zb, generator::xp, "(q13*q34*q14^-1) * xp*zb"},
    {generator::zb, generator::xm, "(q23*q34*q^-2*q24^-1) * xm*zb + (q - q^-1) * vb"},
    {generator::zb, generator::vb, "(q23*q34*q24^-1) * vb*zb"},
    {generator::zb, generator::v, "(q13*q34*q^-2*q14^-1) * v*zb + (q - q^-1) * xp"},
    {generator::xp, generator::z, "(q14*q12^-1*q24^-1) * z*xp"},
    {generator::xm, generator::z, "(q^2*q13*q12^-1*q23^-1) * z*xm + (-q + q^-1) * v"},
    {generator::v, generator::z, "(q13*q12^-1*q23^-1) * z*v"},
    {generator::vb, generator::z, "(q^2*q14*q12^-1*q24^-1) * z*vb + (-q + q^-1) * xp"},
};

// the two-parameter table, p = q^3/q14^2
inline constexpr rule_golden two_param_table_golden[15] = {
    {generator::xp, generator::v, "(q^3*q14^-2) * v*xp"},
    {generator::vb, generator::xp, "(q14^2*q^-3) * xp*vb"},
    {generator::xm, generator::v, "(q14^2*q^-3) * v*xm"},
    {generator::vb, generator::xm, "(q^3*q14^-2) * xm*vb"},
    {generator::vb, generator::v, "v*vb"},
    {generator::xp, generator::xm,
     "(q^3*q14^-2 - q*q14^-2) * v*vb + (q^4*q14^-4) * xm*xp"},
    {generator::zb, generator::z, "z*zb"},
    {generator::zb, generator::xp, "(q^3*q14^-2) * xp*zb"},
    {generator::zb, generator::xm, "(q*q14^-2) * xm*zb + (q - q^-1) * vb"},
    {generator::zb, generator::vb, "(q^3*q14^-2) * vb*zb"},
    {generator::zb, generator::v, "(q*q14^-2) * v*zb + (q - q^-1) * xp"},
    {generator::xp, generator::z, "(q14^2*q^-3) * z*xp"},
    {generator::xm, generator::z, "(q14^2*q^-1) * z*xm + (-q + q^-1) * v"},
    {generator::v, generator::z, "(q14^2*q^-3) * z*v"},
    {generator::vb, generator::z, "(q14^2*q^-1) * z*vb + (-q + q^-1) * xp"},
};

inline bool check_table_golden(const rewrite_system& sys, const rule_golden (&golden)[15],
                               std::string& detail) {
    for (const auto& g : golden) {
        std::string got = sys.rule(g.left, g.right).replacement.to_string();
        if (got != g.replacement) {
            detail = std::string(generator_names[rank(g.left)]) + "*" +
                     generator_names[rank(g.right)] + ": got " + got + ", want " +
                     g.replacement;
            return false;
        }
    }
    return true;
}

}  // namespace verify_detail

// relation-table fidelity plus the conjugation anti-involution under relq
inline suite_report verify_relations_omega(const rewrite_system& sys, int trials,
                                           std::uint64_t seed) {
    using namespace verify_detail;
    suite_report rep;
    rep.suite = "relations-omega";
    rep.seed = seed;
    rep.trials = trials;

    std::string detail;
    rep.add("15-rule table matches the golden form",
            check_table_golden(sys, generic_table_golden, detail), detail);

    // back-substitution of the solved xp*xm relation into its implicit form
    {
        using enum param;
        word_sum s;
        s.emplace_back(presets::mono({{q, 1}, {q24, 1}, {q23, -1}, {q34, -1}}),
                       word{generator::xp, generator::xm});
        s.emplace_back(-presets::mono({{q12, 1}, {q24, 1}, {q, -1}, {q14, -1}}),
                       word{generator::xm, generator::xp});
        s.emplace_back(-lambda_const(), word{generator::v, generator::vb});
        nc_poly r = normal_order(s, sys);
        rep.add("xp*xm back-substitution vanishes", r.is_zero(),
                r.is_zero() ? "" : "residual = " + r.to_string());
    }

    const auto relq = presets::relq();
    {
        bool all = true;
        std::string d;
        for (const auto& r : sys.rules())
            if (!check_relation_preserved(r, relq, sys)) {
                all = false;
                d = std::string("rule ") + generator_names[rank(r.left)] + "*" +
                    generator_names[rank(r.right)] + " not preserved";
                break;
            }
        rep.add("omega preserves all 15 relations under relq", all, d);
    }

    std::mt19937_64 rng(seed);
    {
        bool all = true;
        for (int t = 0; t < trials && all; ++t) {
            nc_poly p = random_nc(rng);
            all = specialize(omega(omega(p, sys), sys), relq) == specialize(p, relq);
        }
        rep.add("omega is an involution under relq", all);
    }
    {
        bool all = true;
        for (int t = 0; t < trials && all; ++t) {
            nc_poly a = nc_poly::monomial(random_mono(rng));
            nc_poly b = nc_poly::monomial(random_mono(rng));
            all = specialize(omega(multiply(a, b, sys), sys), relq) ==
                  specialize(multiply(omega(b, sys), omega(a, sys), sys), relq);
        }
        rep.add("omega is anti-multiplicative under relq", all);
    }
    return rep;
}

inline suite_report verify_confluence(const rewrite_system& sys, int trials, int max_len,
                                      std::uint64_t seed) {
    suite_report rep;
    rep.suite = "confluence";
    rep.seed = seed;
    rep.trials = trials;
    confluence_report c = confluence_check(trials, max_len, seed, sys);
    // the random stage only runs once all 20 overlap triples resolved
    rep.add("all strictly decreasing triples resolve uniquely",
            c.pass || c.random_cases > 0, c.pass || c.random_cases > 0 ? "" : c.detail);
    rep.add("random words up to length " + std::to_string(max_len) + " resolve uniquely",
            c.pass, c.detail);
    return rep;
}

inline suite_report verify_specialization(const rewrite_system& sys, int trials,
                                          std::uint64_t seed) {
    using namespace verify_detail;
    suite_report rep;
    rep.suite = "specialization";
    rep.seed = seed;
    rep.trials = trials;

    const auto splitz = presets::conj_2param();
    const auto relq = presets::relq();

    std::string detail;
    rep.add("conj-2param table matches the two-parameter golden form",
            check_table_golden(sys.specialized(splitz), two_param_table_golden, detail),
            detail);

    rep.add("zb*z coefficient is exactly 1 under relq",
            relq.apply(sys.rule(generator::zb, generator::z)
                           .replacement.coefficient(detail::mono_of({generator::z, generator::zb})))
                .is_one());

    rep.add("substitute(q23 q34 / q24, conj-2param) = q^3/q14^2",
            splitz.apply(presets::mono({{param::q23, 1}, {param::q34, 1}, {param::q24, -1}})) ==
                presets::mono({{param::q, 3}, {param::q14, -2}}));

    std::mt19937_64 rng(seed);
    bool commutes = true;
    for (int t = 0; t < trials && commutes; ++t) {
        word w = random_word(rng, 5);
        for (const auto& sp : {relq, splitz})
            commutes = commutes &&
                       specialize(normal_order(w, sys), sp) ==
                           normal_order(w, sys.specialized(sp));
    }
    rep.add("specialization commutes with normalization", commutes);
    return rep;
}

inline suite_report verify_classical_maxwell() {
    suite_report rep;
    rep.suite = "classical-maxwell";
    const gaussian_rational I = gaussian_rational::i();
    static constexpr const char* component_names[4] = {"zb*z", "zb", "z", "1"};

    for (pm_sign s : {pm_sign::plus, pm_sign::minus}) {
        const char* tag = s == pm_sign::plus ? "+" : "-";
        auto R = maxwell_residual(s);
        for (int k = 0; k < 4; ++k)
            rep.add(std::string("residual(") + tag + ") at " + component_names[k], true,
                    R[k].to_string() + " = 0");
        auto M = mxc_equations(s);
        const std::array<diff_ring_elem, 4> combo = {M[0] + M[3], M[1] - I * M[2],
                                                     M[1] + I * M[2], M[0] - M[3]};
        bool equal = true;
        for (int k = 0; k < 4; ++k) equal = equal && R[k] == combo[k];
        rep.add(std::string("sign ") + tag +
                    ": residual components equal the component-equation combinations",
                equal);

        bool zero = true;
        std::string d;
        for (int k = 0; k < 4 && zero; ++k) {
            diff_ring_elem imp = impose_mxc(R[k], s);
            zero = imp.is_zero();
            if (!zero) d = "component " + std::to_string(k) + " left " + imp.to_string();
        }
        rep.add(std::string("sign ") + tag + ": residuals vanish once the component equations are imposed",
                zero, d);
    }

    {
        auto Rp = maxwell_residual(pm_sign::plus);
        auto Rm = maxwell_residual(pm_sign::minus);
        bool swapped = conjugate_swap(Rp[0]) == Rm[0] && conjugate_swap(Rp[1]) == Rm[2] &&
                       conjugate_swap(Rp[2]) == Rm[1] && conjugate_swap(Rp[3]) == Rm[3];
        rep.add("plus and minus residuals exchange under conjugation", swapped);
    }
    return rep;
}

inline suite_report verify_operator_identity() {
    suite_report rep;
    rep.suite = "operator-identity";
    std::vector<diff_ring_elem> coeffs;
    coeffs.push_back(diff_ring_elem::one());
    for (int d = 0; d < n_directions; ++d) {
        coeffs.push_back(diff_ring_elem::coordinate(static_cast<direction>(d)));
        for (int d2 = d; d2 < n_directions; ++d2)
            coeffs.push_back(diff_ring_elem::coordinate(static_cast<direction>(d)) *
                             diff_ring_elem::coordinate(static_cast<direction>(d2)));
    }
    coeffs.push_back(diff_ring_elem::field("g"));
    coeffs.push_back(diff_ring_elem::coordinate(direction::minus) * diff_ring_elem::field("g"));

    bool all = true;
    std::string detail;
    int cases = 0;
    for (int a = 0; a <= 4 && all; ++a)
        for (int b = 0; b <= 4 && all; ++b)
            for (const auto& c : coeffs) {
                spin_poly f = spin_poly::term(a, b, c);
                for (int n = 0; n <= 5 && all; ++n)
                    for (pm_sign s : {pm_sign::plus, pm_sign::minus}) {
                        ++cases;
                        if (op_I_pm_n_direct(s, n, f) != op_I_pm_n_factored(s, n, f)) {
                            all = false;
                            detail = "mismatch at z^" + std::to_string(a) + " zb^" +
                                     std::to_string(b) + " n=" + std::to_string(n);
                            break;
                        }
                    }
            }
    rep.trials = cases;
    rep.add("direct and factored first-order families agree", all, detail);
    return rep;
}

inline suite_report verify_q_limit(const rewrite_system& sys) {
    suite_report rep;
    rep.suite = "q-limit";

    {
        bool all = true;
        for (int n = 0; n <= 20 && all; ++n) all = q_int(n).evaluate_at_one() == n;
        rep.add("q-integers evaluate to n at q = 1", all);
        rep.add("lambda vanishes at q = 1", lambda_const().evaluate_at_one() == 0);
    }

    const auto t3 = classical_limit_ops(sys);
    std::vector<normal_monomial> monos;
    {
        normal_monomial m{};
        std::function<void(int, int)> rec = [&](int slot, int remaining) {
            if (slot == n_generators) { monos.push_back(m); return; }
            for (int k = 0; k <= remaining; ++k) {
                m[slot] = k;
                rec(slot + 1, remaining - k);
            }
            m[slot] = 0;
        };
        rec(0, 4);
    }
    rep.trials = static_cast<int>(monos.size());

    {
        bool all = true;
        std::string detail;
        for (const auto& m : monos) {
            spin_poly image = commutative_image(nc_poly::monomial(m));
            for (int a : {1, 2, 3})
                if (commutative_image((a == 1 ? t3.I1 : a == 2 ? t3.I2 : t3.I3).apply(m)) !=
                    op_I(a, image)) {
                    all = false;
                    detail = "I" + std::to_string(a) + " at " + monomial_to_string(m);
                    break;
                }
            if (!all) break;
        }
        rep.add("toolkit triple reduces to the classical I1, I2, I3", all, detail);
    }
    {
        bool all = true;
        std::string detail;
        for (int n = 0; n <= 5 && all; ++n)
            for (pm_sign s : {pm_sign::plus, pm_sign::minus}) {
                auto op = hat_I_pm_n(s, n, t3);
                for (const auto& m : monos)
                    if (commutative_image(op.apply(m)) !=
                        op_I_pm_n_factored(s, n, commutative_image(nc_poly::monomial(m)))) {
                        all = false;
                        detail = "n=" + std::to_string(n) + " at " + monomial_to_string(m);
                        break;
                    }
                if (!all) break;
            }
        rep.add("hierarchy operators reduce to the classical family at q = 1", all, detail);
    }
    return rep;
}

}  // namespace qmx
