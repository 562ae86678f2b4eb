// Noncommutative coordinate algebra of the quantum flag manifold: six
// generators, the 15-rule rewrite system, normal ordering to the PBW basis
// z^i v^j xm^k xp^l vb^m zb^n, specialization and the conjugation
// anti-involution omega.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmx/laurent.hpp"

namespace qmx {

// Normal-order rank is the enum value: z < v < xm < xp < vb < zb.
enum class generator : int { z = 0, v, xm, xp, vb, zb };
inline constexpr int n_generators = 6;

inline constexpr std::array<const char*, n_generators> generator_names = {
    "z", "v", "xm", "xp", "vb", "zb"};

inline int rank(generator g) { return static_cast<int>(g); }

// omega's generator map: z <-> zb, v <-> vb, xm and xp fixed
inline generator omega_image(generator g) {
    switch (g) {
        case generator::z:  return generator::zb;
        case generator::zb: return generator::z;
        case generator::v:  return generator::vb;
        case generator::vb: return generator::v;
        default:            return g;
    }
}

using word = std::vector<generator>;

// exponent 6-tuple (i,j,k,l,m,n) for z^i v^j xm^k xp^l vb^m zb^n
using normal_monomial = std::array<int, n_generators>;

inline constexpr normal_monomial unit_monomial_nc() { return {0, 0, 0, 0, 0, 0}; }

inline int total_degree(const normal_monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

// graded-lexicographic order, used for the canonical term order
struct graded_lex_less {
    bool operator()(const normal_monomial& a, const normal_monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

inline word monomial_to_word(const normal_monomial& m) {
    word w;
    w.reserve(total_degree(m));
    for (int g = 0; g < n_generators; ++g)
        for (int k = 0; k < m[g]; ++k) w.push_back(static_cast<generator>(g));
    return w;
}

inline std::optional<normal_monomial> word_to_monomial(const word& w) {
    normal_monomial m = unit_monomial_nc();
    int last = -1;
    for (generator g : w) {
        if (rank(g) < last) return std::nullopt;  // not normally ordered
        last = rank(g);
        ++m[rank(g)];
    }
    return m;
}

inline std::string monomial_to_string(const normal_monomial& m) {
    std::string s;
    for (int g = 0; g < n_generators; ++g) {
        if (m[g] == 0) continue;
        if (!s.empty()) s += "*";
        s += generator_names[g];
        if (m[g] != 1) s += "^" + std::to_string(m[g]);
    }
    return s.empty() ? "1" : s;
}

// --- noncommutative polynomials in the PBW basis ----------------------------

class nc_poly {
public:
    using term_map = std::map<normal_monomial, laurent_poly, graded_lex_less>;

    nc_poly() = default;

    static nc_poly zero() { return nc_poly{}; }

    static nc_poly monomial(const normal_monomial& m,
                            laurent_poly c = laurent_poly::one()) {
        nc_poly p;
        p.add_term(m, std::move(c));
        return p;
    }

    static nc_poly one() { return monomial(unit_monomial_nc()); }

    static nc_poly gen(generator g) {
        normal_monomial m = unit_monomial_nc();
        m[rank(g)] = 1;
        return monomial(m);
    }

    static nc_poly constant(laurent_poly c) {
        return monomial(unit_monomial_nc(), std::move(c));
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const normal_monomial& m, const laurent_poly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    laurent_poly coefficient(const normal_monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? laurent_poly::zero() : it->second;
    }

    friend nc_poly operator+(const nc_poly& a, const nc_poly& b) {
        nc_poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend nc_poly operator-(const nc_poly& a) {
        nc_poly r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend nc_poly operator-(const nc_poly& a, const nc_poly& b) { return a + (-b); }

    friend nc_poly operator*(const laurent_poly& c, const nc_poly& a) {
        nc_poly r;
        for (const auto& [m, cm] : a.terms_) r.add_term(m, c * cm);
        return r;
    }

    nc_poly& operator+=(const nc_poly& b) { return *this = *this + b; }
    nc_poly& operator-=(const nc_poly& b) { return *this = *this - b; }

    friend bool operator==(const nc_poly& a, const nc_poly& b) = default;

    // max exponent of one generator over all terms
    int max_exponent(generator g) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[rank(g)]);
        return d;
    }

    std::string to_string() const;

private:
    term_map terms_;
};

// linear combination of free words, not yet normally ordered
using word_sum = std::vector<std::pair<laurent_poly, word>>;

// --- rewrite rules -----------------------------------------------------------

// One oriented relation g_b g_a -> replacement, rank(g_b) > rank(g_a); the
// replacement has the swapped pair plus at most one extra normally ordered term.
struct rewrite_rule {
    generator left;   // higher rank
    generator right;  // lower rank
    nc_poly replacement;
};

namespace detail {

inline laurent_poly pmono(std::initializer_list<std::pair<param, int>> f) {
    return presets::mono(f);
}

inline normal_monomial mono_of(std::initializer_list<generator> gs) {
    normal_monomial m = unit_monomial_nc();
    for (generator g : gs) ++m[rank(g)];
    return m;
}

}  // namespace detail

// The 15 oriented relations.  The xp*xm relation is stated implicitly in the
// source presentation (coefficients on both sides) and is solved for xp*xm
// here at table-construction time.
inline std::vector<rewrite_rule> relation_table() {
    using namespace detail;
    using enum param;
    using g = generator;
    std::vector<rewrite_rule> rules;
    auto add = [&](g b, g a, laurent_poly swap_coeff, nc_poly extra = nc_poly::zero()) {
        nc_poly rep = nc_poly::monomial(mono_of({a, b}), std::move(swap_coeff)) + extra;
        rules.push_back({b, a, std::move(rep)});
    };
    const laurent_poly lam = lambda_const();

    // quantum Minkowski block
    add(g::xp, g::v, pmono({{q23, 1}, {q34, 1}, {q24, -1}}));
    add(g::vb, g::xp, pmono({{q14, 1}, {q12, -1}, {q24, -1}}));
    add(g::xm, g::v, pmono({{q13, 1}, {q12, -1}, {q23, -1}}));
    add(g::vb, g::xm, pmono({{q13, 1}, {q34, 1}, {q14, -1}}));
    add(g::vb, g::v, pmono({{q13, 1}, {q34, 1}, {q12, -1}, {q24, -1}}));
    // (q q24/(q23 q34)) xp*xm = (q12 q24/(q q14)) xm*xp + lam v*vb, solved:
    add(g::xp, g::xm,
        pmono({{q12, 1}, {q23, 1}, {q34, 1}, {q, -2}, {q14, -1}}),
        nc_poly::monomial(mono_of({g::v, g::vb}),
                          lam * pmono({{q23, 1}, {q34, 1}, {q, -1}, {q24, -1}})));

    // spin-variable block
    add(g::zb, g::z, pmono({{q13, 1}, {q24, 1}, {q14, -1}, {q23, -1}}));
    add(g::zb, g::xp, pmono({{q13, 1}, {q34, 1}, {q14, -1}}));
    add(g::zb, g::xm, pmono({{q23, 1}, {q34, 1}, {q, -2}, {q24, -1}}),
        nc_poly::monomial(mono_of({g::vb}), lam));
    add(g::zb, g::vb, pmono({{q23, 1}, {q34, 1}, {q24, -1}}));
    add(g::zb, g::v, pmono({{q13, 1}, {q34, 1}, {q, -2}, {q14, -1}}),
        nc_poly::monomial(mono_of({g::xp}), lam));
    add(g::xp, g::z, pmono({{q14, 1}, {q12, -1}, {q24, -1}}));
    add(g::xm, g::z, pmono({{q, 2}, {q13, 1}, {q12, -1}, {q23, -1}}),
        nc_poly::monomial(mono_of({g::v}), -lam));
    add(g::v, g::z, pmono({{q13, 1}, {q12, -1}, {q23, -1}}));
    add(g::vb, g::z, pmono({{q, 2}, {q14, 1}, {q12, -1}, {q24, -1}}),
        nc_poly::monomial(mono_of({g::xp}), -lam));

    return rules;
}

// --- the rewrite system -------------------------------------------------------

enum class strategy { leftmost, rightmost };

class rewrite_system {
public:
    rewrite_system() : rewrite_system(relation_table()) {}

    explicit rewrite_system(std::vector<rewrite_rule> rules) {
        for (auto& i : index_) i = -1;
        rules_ = std::move(rules);
        if (rules_.size() != 15)
            throw std::invalid_argument("rewrite_system: expected 15 rules");
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            const auto& r = rules_[i];
            if (rank(r.left) <= rank(r.right))
                throw std::invalid_argument("rewrite_system: rule not oriented");
            index_[slot(r.left, r.right)] = static_cast<int>(i);
        }
        for (int b = 0; b < n_generators; ++b)
            for (int a = 0; a < b; ++a)
                if (index_[slot(static_cast<generator>(b), static_cast<generator>(a))] < 0)
                    throw std::invalid_argument("rewrite_system: missing rule");
    }

    const std::vector<rewrite_rule>& rules() const { return rules_; }

    const rewrite_rule& rule(generator b, generator a) const {
        return rules_[static_cast<std::size_t>(index_[slot(b, a)])];
    }

    // coefficient-wise substitution applied to every replacement
    rewrite_system specialized(const param_substitution& s) const {
        std::vector<rewrite_rule> rs;
        rs.reserve(rules_.size());
        for (const auto& r : rules_) {
            nc_poly rep;
            for (const auto& [m, c] : r.replacement.terms()) rep.add_term(m, s.apply(c));
            rs.push_back({r.left, r.right, std::move(rep)});
        }
        return rewrite_system(std::move(rs));
    }

    // testing hook: multiply the swap coefficient of one rule by q
    rewrite_system with_fault(generator b, generator a) const {
        std::vector<rewrite_rule> rs = rules_;
        auto& r = rs[static_cast<std::size_t>(index_[slot(b, a)])];
        nc_poly rep;
        const normal_monomial swapped = detail::mono_of({a, b});
        for (const auto& [m, c] : r.replacement.terms())
            rep.add_term(m, m == swapped ? laurent_poly::parameter(param::q) * c : c);
        r.replacement = std::move(rep);
        return rewrite_system(std::move(rs));
    }

private:
    static int slot(generator b, generator a) { return rank(b) * n_generators + rank(a); }

    std::vector<rewrite_rule> rules_;
    std::array<int, n_generators * n_generators> index_;
};

inline const rewrite_system& default_system() {
    static const rewrite_system sys;
    return sys;
}

// --- normal ordering ----------------------------------------------------------

// Each rewrite strictly decreases the word in the degree-then-leftmost-rank
// order, so the loop terminates; the step cap only guards against a corrupted
// rule table.
inline constexpr std::uint64_t rewrite_step_cap = 50'000'000;

inline nc_poly normal_order(const word_sum& input, const rewrite_system& sys,
                            strategy strat = strategy::leftmost,
                            std::uint64_t* steps_out = nullptr) {
    nc_poly result;
    std::vector<std::pair<laurent_poly, word>> work(input.begin(), input.end());
    std::uint64_t steps = 0;
    while (!work.empty()) {
        auto [c, w] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;

        int pos = -1;
        const int len = static_cast<int>(w.size());
        if (strat == strategy::leftmost) {
            for (int i = 0; i + 1 < len; ++i)
                if (rank(w[i]) > rank(w[i + 1])) { pos = i; break; }
        } else {
            for (int i = len - 2; i >= 0; --i)
                if (rank(w[i]) > rank(w[i + 1])) { pos = i; break; }
        }

        if (pos < 0) {
            result.add_term(*word_to_monomial(w), c);
            continue;
        }
        if (++steps > rewrite_step_cap)
            throw std::runtime_error("normal_order: rewrite step cap exceeded");

        const rewrite_rule& r = sys.rule(w[pos], w[pos + 1]);
        for (const auto& [m, rc] : r.replacement.terms()) {
            word nw;
            const word mid = monomial_to_word(m);
            nw.reserve(w.size() - 2 + mid.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            work.emplace_back(c * rc, std::move(nw));
        }
    }
    if (steps_out) *steps_out = steps;
    return result;
}

inline nc_poly normal_order(const word& w,
                            const rewrite_system& sys = default_system(),
                            strategy strat = strategy::leftmost) {
    return normal_order(word_sum{{laurent_poly::one(), w}}, sys, strat);
}

inline nc_poly multiply(const nc_poly& a, const nc_poly& b,
                        const rewrite_system& sys = default_system()) {
    nc_poly r;
    for (const auto& [ma, ca] : a.terms()) {
        const word wa = monomial_to_word(ma);
        for (const auto& [mb, cb] : b.terms()) {
            word w = wa;
            const word wb = monomial_to_word(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            r += (ca * cb) * normal_order(w, sys);
        }
    }
    return r;
}

inline nc_poly specialize(const nc_poly& p, const param_substitution& s) {
    nc_poly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, s.apply(c));
    return r;
}

// --- conjugation anti-involution omega ----------------------------------------

// generator map + word reversal, no normalization
inline word omega_word(const word& w) {
    word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(omega_image(*it));
    return r;
}

inline word_sum omega_raw(const word_sum& s) {
    word_sum r;
    r.reserve(s.size());
    for (const auto& [c, w] : s) r.emplace_back(c.conj(), omega_word(w));
    return r;
}

inline nc_poly omega(const nc_poly& p, const rewrite_system& sys = default_system()) {
    nc_poly r;
    for (const auto& [m, c] : p.terms())
        r += c.conj() * normal_order(omega_word(monomial_to_word(m)), sys);
    return r;
}

// Forms r = LHS - RHS of the rule, applies omega to the raw words, normal
// orders, specializes the coefficients, and tests for zero.
inline bool check_relation_preserved(const rewrite_rule& rule,
                                     const param_substitution& s,
                                     const rewrite_system& sys = default_system()) {
    word_sum r;
    r.emplace_back(laurent_poly::one(), word{rule.left, rule.right});
    for (const auto& [m, c] : rule.replacement.terms())
        r.emplace_back(-c, monomial_to_word(m));
    return specialize(normal_order(omega_raw(r), sys), s).is_zero();
}

// --- confluence ---------------------------------------------------------------

struct confluence_report {
    bool pass = true;
    int overlap_cases = 0;
    int random_cases = 0;
    std::optional<word> counterexample;
    std::string detail;
};

inline std::string word_to_string(const word& w) {
    std::string s;
    for (generator g : w) {
        if (!s.empty()) s += "*";
        s += generator_names[rank(g)];
    }
    return s.empty() ? "1" : s;
}

// compares leftmost vs rightmost rewriting on one word
inline bool strategies_agree(const word& w, const rewrite_system& sys,
                             nc_poly* difference = nullptr) {
    nc_poly a = normal_order(w, sys, strategy::leftmost);
    nc_poly b = normal_order(w, sys, strategy::rightmost);
    if (difference) *difference = a - b;
    return a == b;
}

// Exhaustive check of the 20 strictly rank-decreasing triples plus seeded
// random words.  Failure reports the first counterexample.
inline confluence_report confluence_check(int trials, int max_len, std::uint64_t seed,
                                          const rewrite_system& sys = default_system()) {
    confluence_report rep;
    for (int c = 0; c < n_generators && rep.pass; ++c)
        for (int b = 0; b < c && rep.pass; ++b)
            for (int a = 0; a < b && rep.pass; ++a) {
                word w{static_cast<generator>(c), static_cast<generator>(b),
                       static_cast<generator>(a)};
                ++rep.overlap_cases;
                nc_poly diff;
                if (!strategies_agree(w, sys, &diff)) {
                    rep.pass = false;
                    rep.counterexample = w;
                    rep.detail = "overlap " + word_to_string(w) +
                                 " resolves differently; difference = " + diff.to_string();
                }
            }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> gen_dist(0, n_generators - 1);
    for (int t = 0; t < trials && rep.pass; ++t) {
        word w(static_cast<std::size_t>(len_dist(rng)));
        for (auto& g : w) g = static_cast<generator>(gen_dist(rng));
        ++rep.random_cases;
        nc_poly diff;
        if (!strategies_agree(w, sys, &diff)) {
            rep.pass = false;
            rep.counterexample = w;
            rep.detail = "random word " + word_to_string(w) +
                         " resolves differently; difference = " + diff.to_string();
        }
    }
    return rep;
}

// --- printing -------------------------------------------------------------
//
// Canonical form: terms in descending graded-lex order joined by " + ".
// A term prints as "(coeff) * mono", the coefficient parens dropped for a
// unit coefficient; a constant term prints bare when it is the only term.

inline std::string nc_poly::to_string() const {
    if (terms_.empty()) return "0";
    if (terms_.size() == 1 && terms_.begin()->first == unit_monomial_nc())
        return terms_.begin()->second.to_string();
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!s.empty()) s += " + ";
        if (m == unit_monomial_nc()) {
            s += "(" + c.to_string() + ")";
        } else if (c.is_one()) {
            s += monomial_to_string(m);
        } else {
            s += "(" + c.to_string() + ") * " + monomial_to_string(m);
        }
    }
    return s;
}

}  // namespace qmx
