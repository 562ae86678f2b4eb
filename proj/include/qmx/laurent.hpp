// Exact coefficient arithmetic: Laurent polynomials over the rationals in the
// seven deformation parameters q, q12, q13, q14, q23, q24, q34.
#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmx {

using rational = boost::multiprecision::cpp_rational;

// Fixed parameter order; serialization and term ordering rely on it.
enum class param : int { q = 0, q12, q13, q14, q23, q24, q34 };
inline constexpr int n_params = 7;

inline constexpr std::array<const char*, n_params> param_names = {
    "q", "q12", "q13", "q14", "q23", "q24", "q34"};

// Integer exponent vector of one parameter monomial.  Exponents may be
// negative; the all-zero vector is the unit monomial.
using param_exponent = std::array<int, n_params>;

inline constexpr param_exponent unit_exponent() { return {0, 0, 0, 0, 0, 0, 0}; }

inline param_exponent operator+(const param_exponent& a, const param_exponent& b) {
    param_exponent r{};
    for (int i = 0; i < n_params; ++i) r[i] = a[i] + b[i];
    return r;
}

inline param_exponent operator-(const param_exponent& a) {
    param_exponent r{};
    for (int i = 0; i < n_params; ++i) r[i] = -a[i];
    return r;
}

inline param_exponent operator*(int k, const param_exponent& a) {
    param_exponent r{};
    for (int i = 0; i < n_params; ++i) r[i] = k * a[i];
    return r;
}

class laurent_poly {
public:
    // canonical form: no zero coefficients stored
    using term_map = std::map<param_exponent, rational>;

    laurent_poly() = default;

    static laurent_poly zero() { return laurent_poly{}; }

    static laurent_poly constant(rational c) {
        laurent_poly p;
        p.add_term(unit_exponent(), std::move(c));
        return p;
    }

    static laurent_poly one() { return constant(1); }

    static laurent_poly term(rational c, const param_exponent& e) {
        laurent_poly p;
        p.add_term(e, std::move(c));
        return p;
    }

    // the monomial p^k
    static laurent_poly parameter(param p, int k = 1) {
        param_exponent e = unit_exponent();
        e[static_cast<int>(p)] = k;
        return term(1, e);
    }

    const term_map& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == unit_exponent() &&
               terms_.begin()->second == 1;
    }

    // single term with nonzero rational coefficient (an invertible element)
    bool is_unit_monomial() const { return terms_.size() == 1; }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == unit_exponent());
    }

    rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw std::logic_error("laurent_poly: not a constant");
        return terms_.begin()->second;
    }

    void add_term(const param_exponent& e, const rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend laurent_poly operator+(const laurent_poly& a, const laurent_poly& b) {
        laurent_poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend laurent_poly operator-(const laurent_poly& a) {
        laurent_poly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend laurent_poly operator-(const laurent_poly& a, const laurent_poly& b) {
        return a + (-b);
    }

    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
        laurent_poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend laurent_poly operator*(const rational& c, const laurent_poly& a) {
        return constant(c) * a;
    }

    laurent_poly& operator+=(const laurent_poly& b) { return *this = *this + b; }
    laurent_poly& operator-=(const laurent_poly& b) { return *this = *this - b; }
    laurent_poly& operator*=(const laurent_poly& b) { return *this = *this * b; }

    friend bool operator==(const laurent_poly& a, const laurent_poly& b) = default;

    // integer power; negative powers require a unit monomial
    laurent_poly pow(int k) const {
        if (k == 0) return one();
        if (k < 0) {
            if (!is_unit_monomial())
                throw std::domain_error("laurent_poly: negative power of a non-unit");
            const auto& [e, c] = *terms_.begin();
            return term(rational(1) / c, -e).pow(-k);
        }
        laurent_poly r = one();
        laurent_poly base = *this;
        for (int i = 0; i < k; ++i) r *= base;
        return r;
    }

    // exponent negation termwise; an involutive ring automorphism (phases:
    // conjugating a parameter inverts it, rational coefficients untouched)
    laurent_poly conj() const {
        laurent_poly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    // value at q = q_ij = 1 for all parameters
    rational evaluate_at_one() const {
        rational v = 0;
        for (const auto& [e, c] : terms_) v += c;
        return v;
    }

    std::string to_string() const;

private:
    term_map terms_;
};

// lambda = q - q^-1
inline laurent_poly lambda_const() {
    return laurent_poly::parameter(param::q, 1) - laurent_poly::parameter(param::q, -1);
}

// symmetric q-integer [n] = (q^n - q^-n)/(q - q^-1), expanded: sum_{k} q^{n-1-2k}
inline laurent_poly q_int(int n) {
    if (n < 0) throw std::domain_error("q_int: n must be non-negative");
    laurent_poly r;
    for (int k = 0; k < n; ++k)
        r += laurent_poly::parameter(param::q, n - 1 - 2 * k);
    return r;
}

// --- substitution homomorphisms ------------------------------------------

// one invertible monomial c * prod p^e, c != 0
struct unit_monomial {
    rational coeff = 1;
    param_exponent exps = unit_exponent();

    static unit_monomial from(const laurent_poly& p) {
        if (!p.is_unit_monomial())
            throw std::invalid_argument("substitution values must be unit monomials");
        const auto& [e, c] = *p.terms().begin();
        return unit_monomial{c, e};
    }

    laurent_poly as_poly() const { return laurent_poly::term(coeff, exps); }

    unit_monomial pow(int k) const {
        unit_monomial r;
        const rational base = k >= 0 ? coeff : rational(1) / coeff;
        r.coeff = 1;
        for (int i = 0; i < std::abs(k); ++i) r.coeff *= base;
        r.exps = k * exps;
        return r;
    }
};

// assignment of some parameters to unit monomials; a ring homomorphism
class param_substitution {
public:
    param_substitution() = default;

    param_substitution& set(param p, const laurent_poly& value) {
        assign_[static_cast<int>(p)] = unit_monomial::from(value);
        return *this;
    }

    const std::optional<unit_monomial>& assignment(param p) const {
        return assign_[static_cast<int>(p)];
    }

    laurent_poly apply(const laurent_poly& a) const {
        laurent_poly r;
        for (const auto& [e, c] : a.terms()) {
            unit_monomial m{c, unit_exponent()};
            for (int i = 0; i < n_params; ++i) {
                if (e[i] == 0) continue;
                if (assign_[i]) {
                    unit_monomial f = assign_[i]->pow(e[i]);
                    m.coeff *= f.coeff;
                    m.exps = m.exps + f.exps;
                } else {
                    m.exps[i] += e[i];
                }
            }
            r.add_term(m.exps, m.coeff);
        }
        return r;
    }

    // apply `first`, then `second`
    static param_substitution composed(const param_substitution& first,
                                       const param_substitution& second) {
        param_substitution r = second;
        for (int i = 0; i < n_params; ++i) {
            if (first.assign_[i])
                r.assign_[i] =
                    unit_monomial::from(second.apply(first.assign_[i]->as_poly()));
        }
        return r;
    }

private:
    std::array<std::optional<unit_monomial>, n_params> assign_{};
};

inline laurent_poly substitute(const laurent_poly& a, const param_substitution& s) {
    return s.apply(a);
}

namespace presets {

inline laurent_poly mono(std::initializer_list<std::pair<param, int>> factors,
                         rational c = 1) {
    param_exponent e = unit_exponent();
    for (auto [p, k] : factors) e[static_cast<int>(p)] += k;
    return laurent_poly::term(std::move(c), e);
}

// q13 -> q12 q24 / q34,  q14 -> q12 q24^2 / (q23 q34)
inline param_substitution relq() {
    param_substitution s;
    s.set(param::q13, mono({{param::q12, 1}, {param::q24, 1}, {param::q34, -1}}));
    s.set(param::q14, mono({{param::q12, 1}, {param::q24, 2}, {param::q23, -1}, {param::q34, -1}}));
    return s;
}

// q12 -> q^3/(q13 q14),  q23 -> q^4/(q13 q14 q24),  q34 -> q^3/(q14 q24)
inline param_substitution sl4_split() {
    param_substitution s;
    s.set(param::q12, mono({{param::q, 3}, {param::q13, -1}, {param::q14, -1}}));
    s.set(param::q23, mono({{param::q, 4}, {param::q13, -1}, {param::q14, -1}, {param::q24, -1}}));
    s.set(param::q34, mono({{param::q, 3}, {param::q14, -1}, {param::q24, -1}}));
    return s;
}

// q12 = q23 = q34 -> q^2/q14,  q13 = q24 -> q
inline param_substitution conj_2param() {
    param_substitution s;
    laurent_poly w = mono({{param::q, 2}, {param::q14, -1}});
    s.set(param::q12, w);
    s.set(param::q23, w);
    s.set(param::q34, w);
    s.set(param::q13, laurent_poly::parameter(param::q));
    s.set(param::q24, laurent_poly::parameter(param::q));
    return s;
}

// every q_ij -> q
inline param_substitution one_param() {
    param_substitution s;
    for (param p : {param::q12, param::q13, param::q14, param::q23, param::q24, param::q34})
        s.set(p, laurent_poly::parameter(param::q));
    return s;
}

// every parameter -> 1 (classical limit)
inline param_substitution all_one() {
    param_substitution s;
    for (int i = 0; i < n_params; ++i)
        s.set(static_cast<param>(i), laurent_poly::one());
    return s;
}

}  // namespace presets

// --- printing --------------------------------------------------------------
//
// Canonical textual form, e.g. "q - q^-1", "-1/2*q13^2*q24", "3".  Terms are
// ordered by descending exponent vector; rational factors of magnitude 1 are
// omitted when parameter factors are present.

inline std::string rational_to_string(const rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string laurent_poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        rational mag = c < 0 ? rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        // positive exponents first, then negative (numerator-then-denominator)
        std::string factors;
        auto emit = [&](bool positive) {
            for (int i = 0; i < n_params; ++i) {
                if (e[i] == 0 || (e[i] > 0) != positive) continue;
                if (!factors.empty()) factors += "*";
                factors += param_names[i];
                if (e[i] != 1) factors += "^" + std::to_string(e[i]);
            }
        };
        emit(true);
        emit(false);
        if (factors.empty()) {
            os << rational_to_string(mag);
        } else {
            if (mag != 1) os << rational_to_string(mag) << "*";
            os << factors;
        }
    }
    return os.str();
}

}  // namespace qmx
