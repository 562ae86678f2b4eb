// Classical side: light-cone coordinates, the operators I1, I2, I3 and the
// first-order family I+-_n, the field/current polynomials in the spin
// variables z, zb, and the scalar form of the Maxwell system.
#pragma once

#include <array>
#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmx/laurent.hpp"  // rational

namespace qmx {

// exact element of Q(i)
struct gaussian_rational {
    rational re = 0;
    rational im = 0;

    gaussian_rational() = default;
    gaussian_rational(rational r) : re(std::move(r)) {}
    gaussian_rational(rational r, rational i) : re(std::move(r)), im(std::move(i)) {}
    gaussian_rational(int r) : re(r) {}

    static gaussian_rational i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }

    gaussian_rational conj() const { return {re, -im}; }

    friend gaussian_rational operator+(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend gaussian_rational operator-(const gaussian_rational& a) { return {-a.re, -a.im}; }
    friend gaussian_rational operator-(const gaussian_rational& a, const gaussian_rational& b) {
        return a + (-b);
    }
    friend gaussian_rational operator*(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const gaussian_rational&, const gaussian_rational&) = default;

    std::string to_string() const {
        std::ostringstream os;
        if (im == 0) { os << re; return os.str(); }
        if (re == 0) {
            if (im == 1) return "i";
            if (im == -1) return "-i";
            os << im << "*i";
            return os.str();
        }
        os << re << (im > 0 ? "+" : "-");
        rational m = im > 0 ? im : rational(-im);
        if (m != 1) os << m << "*";
        os << "i";
        return os.str();
    }
};

// the four light-cone directions, in multi-index slot order
enum class direction : int { plus = 0, minus, v, vbar };
inline constexpr int n_directions = 4;
inline constexpr std::array<const char*, n_directions> direction_names = {"d+", "d-",
                                                                          "dv", "dvb"};
inline constexpr std::array<const char*, n_directions> coordinate_names = {"x+", "x-",
                                                                           "v", "vb"};

// a field symbol under a (commuting) derivative multi-index
struct field_factor {
    std::string name;
    std::array<int, n_directions> deriv{0, 0, 0, 0};

    friend auto operator<=>(const field_factor&, const field_factor&) = default;
};

// commutative monomial: coordinate powers times a sorted bag of field factors
struct diff_mono {
    std::array<int, n_directions> coord{0, 0, 0, 0};
    std::vector<field_factor> fields;

    friend auto operator<=>(const diff_mono&, const diff_mono&) = default;
};

class diff_ring_elem {
public:
    using term_map = std::map<diff_mono, gaussian_rational>;

    diff_ring_elem() = default;

    static diff_ring_elem zero() { return {}; }

    static diff_ring_elem constant(gaussian_rational c) {
        diff_ring_elem e;
        e.add_term(diff_mono{}, std::move(c));
        return e;
    }

    static diff_ring_elem one() { return constant(1); }

    // a bare field symbol
    static diff_ring_elem field(std::string name) {
        diff_mono m;
        m.fields.push_back({std::move(name), {0, 0, 0, 0}});
        diff_ring_elem e;
        e.add_term(m, 1);
        return e;
    }

    // one coordinate symbol
    static diff_ring_elem coordinate(direction d) {
        diff_mono m;
        m.coord[static_cast<int>(d)] = 1;
        diff_ring_elem e;
        e.add_term(m, 1);
        return e;
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const diff_mono& m, const gaussian_rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend diff_ring_elem operator+(const diff_ring_elem& a, const diff_ring_elem& b) {
        diff_ring_elem r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend diff_ring_elem operator-(const diff_ring_elem& a) {
        diff_ring_elem r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend diff_ring_elem operator-(const diff_ring_elem& a, const diff_ring_elem& b) {
        return a + (-b);
    }
    friend diff_ring_elem operator*(const gaussian_rational& c, const diff_ring_elem& a) {
        diff_ring_elem r;
        for (const auto& [m, cm] : a.terms_) r.add_term(m, c * cm);
        return r;
    }
    friend diff_ring_elem operator*(const diff_ring_elem& a, const diff_ring_elem& b) {
        diff_ring_elem r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                diff_mono m = ma;
                for (int d = 0; d < n_directions; ++d) m.coord[d] += mb.coord[d];
                m.fields.insert(m.fields.end(), mb.fields.begin(), mb.fields.end());
                std::sort(m.fields.begin(), m.fields.end());
                r.add_term(m, ca * cb);
            }
        return r;
    }

    diff_ring_elem& operator+=(const diff_ring_elem& b) { return *this = *this + b; }
    diff_ring_elem& operator-=(const diff_ring_elem& b) { return *this = *this - b; }

    friend bool operator==(const diff_ring_elem&, const diff_ring_elem&) = default;

    std::string to_string() const;

private:
    term_map terms_;
};

// formal derivation: Leibniz over every factor; coordinates differentiate to
// delta, field symbols raise the matching multi-index slot
inline diff_ring_elem partial(const diff_ring_elem& e, direction dir) {
    const int d = static_cast<int>(dir);
    diff_ring_elem r;
    for (const auto& [m, c] : e.terms()) {
        if (m.coord[d] > 0) {
            diff_mono n = m;
            --n.coord[d];
            r.add_term(n, gaussian_rational(rational(m.coord[d])) * c);
        }
        for (std::size_t i = 0; i < m.fields.size(); ++i) {
            diff_mono n = m;
            ++n.fields[i].deriv[d];
            std::sort(n.fields.begin(), n.fields.end());
            r.add_term(n, c);
        }
    }
    return r;
}

inline diff_ring_elem partial_multi(diff_ring_elem e, const std::array<int, n_directions>& idx) {
    for (int d = 0; d < n_directions; ++d)
        for (int k = 0; k < idx[d]; ++k) e = partial(e, static_cast<direction>(d));
    return e;
}

// replaces every occurrence of the named field symbol, pushing any stored
// derivative multi-index onto the replacement
inline diff_ring_elem substitute_field(const diff_ring_elem& e, const std::string& name,
                                       const diff_ring_elem& replacement) {
    diff_ring_elem r;
    for (const auto& [m, c] : e.terms()) {
        diff_ring_elem factor = diff_ring_elem::constant(c);
        diff_mono rest;
        rest.coord = m.coord;
        for (const auto& f : m.fields) {
            if (f.name == name)
                factor = factor * partial_multi(replacement, f.deriv);
            else
                rest.fields.push_back(f);
        }
        diff_ring_elem rest_elem;
        rest_elem.add_term(rest, 1);
        r += factor * rest_elem;
    }
    return r;
}

// --- polynomials in the spin variables z, zb --------------------------------

class spin_poly {
public:
    using degree = std::pair<int, int>;  // (z-degree, zb-degree)
    using term_map = std::map<degree, diff_ring_elem>;

    spin_poly() = default;

    static spin_poly zero() { return {}; }

    static spin_poly term(int dz, int dzb, diff_ring_elem e) {
        spin_poly p;
        p.add_term({dz, dzb}, std::move(e));
        return p;
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    diff_ring_elem coefficient(int dz, int dzb) const {
        auto it = terms_.find({dz, dzb});
        return it == terms_.end() ? diff_ring_elem::zero() : it->second;
    }

    void add_term(degree d, const diff_ring_elem& e) {
        if (e.is_zero()) return;
        if (d.first < 0 || d.second < 0)
            throw std::logic_error("spin_poly: negative degree");
        auto [it, inserted] = terms_.try_emplace(d, e);
        if (!inserted) {
            it->second += e;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend spin_poly operator+(const spin_poly& a, const spin_poly& b) {
        spin_poly r = a;
        for (const auto& [d, e] : b.terms_) r.add_term(d, e);
        return r;
    }
    friend spin_poly operator-(const spin_poly& a) {
        spin_poly r;
        for (const auto& [d, e] : a.terms_) r.terms_.emplace(d, -e);
        return r;
    }
    friend spin_poly operator-(const spin_poly& a, const spin_poly& b) { return a + (-b); }
    friend spin_poly operator*(const gaussian_rational& c, const spin_poly& a) {
        spin_poly r;
        for (const auto& [d, e] : a.terms_) r.add_term(d, c * e);
        return r;
    }
    friend bool operator==(const spin_poly&, const spin_poly&) = default;

    std::string to_string() const;

private:
    term_map terms_;
};

// degree shifts and derivatives
inline spin_poly mul_z(const spin_poly& f) {
    spin_poly r;
    for (const auto& [d, e] : f.terms()) r.add_term({d.first + 1, d.second}, e);
    return r;
}
inline spin_poly mul_zb(const spin_poly& f) {
    spin_poly r;
    for (const auto& [d, e] : f.terms()) r.add_term({d.first, d.second + 1}, e);
    return r;
}
inline spin_poly deriv_z(const spin_poly& f) {
    spin_poly r;
    for (const auto& [d, e] : f.terms())
        if (d.first > 0)
            r.add_term({d.first - 1, d.second}, gaussian_rational(rational(d.first)) * e);
    return r;
}
inline spin_poly deriv_zb(const spin_poly& f) {
    spin_poly r;
    for (const auto& [d, e] : f.terms())
        if (d.second > 0)
            r.add_term({d.first, d.second - 1}, gaussian_rational(rational(d.second)) * e);
    return r;
}
inline spin_poly deriv_coeff(const spin_poly& f, direction dir) {
    spin_poly r;
    for (const auto& [d, e] : f.terms()) r.add_term(d, partial(e, dir));
    return r;
}

// I1 = dz,  I2 = zb z d+ + z dv + zb dvb + d-,  I3 = dzb
inline spin_poly op_I(int a, const spin_poly& f) {
    switch (a) {
        case 1: return deriv_z(f);
        case 3: return deriv_zb(f);
        case 2:
            return mul_zb(mul_z(deriv_coeff(f, direction::plus))) +
                   mul_z(deriv_coeff(f, direction::v)) +
                   mul_zb(deriv_coeff(f, direction::vbar)) + deriv_coeff(f, direction::minus);
        default: throw std::invalid_argument("op_I: a must be 1, 2 or 3");
    }
}

enum class pm_sign { plus, minus };

// I+-_n exactly as written in the first-order form
inline spin_poly op_I_pm_n_direct(pm_sign sign, int n, const spin_poly& f) {
    if (n < 0) throw std::invalid_argument("op_I_pm_n: n must be non-negative");
    const gaussian_rational half_np2{rational(n + 2, 2)};
    const gaussian_rational minus_half{rational(-1, 2)};
    if (sign == pm_sign::plus) {
        spin_poly first = mul_zb(deriv_coeff(f, direction::plus)) + deriv_coeff(f, direction::v);
        return half_np2 * first + minus_half * op_I(2, deriv_z(f));
    }
    spin_poly first = mul_z(deriv_coeff(f, direction::plus)) + deriv_coeff(f, direction::vbar);
    return half_np2 * first + minus_half * op_I(2, deriv_zb(f));
}

// the factored form (1/2)((n+2) I_a I2 - (n+3) I2 I_a), a = 1 for '+', 3 for '-'
inline spin_poly op_I_pm_n_factored(pm_sign sign, int n, const spin_poly& f) {
    if (n < 0) throw std::invalid_argument("op_I_pm_n: n must be non-negative");
    const int a = sign == pm_sign::plus ? 1 : 3;
    const gaussian_rational cf{rational(n + 2, 2)};
    const gaussian_rational cb{rational(-(n + 3), 2)};
    return cf * op_I(a, op_I(2, f)) + cb * op_I(2, op_I(a, f));
}

// --- field content -----------------------------------------------------------

// F+(z) = z^2 (F1 + i F2) - 2 z F3 - (F1 - i F2)
inline spin_poly build_F_plus(const diff_ring_elem& f1, const diff_ring_elem& f2,
                              const diff_ring_elem& f3) {
    const gaussian_rational i = gaussian_rational::i();
    spin_poly p;
    p.add_term({2, 0}, f1 + i * f2);
    p.add_term({1, 0}, gaussian_rational(-2) * f3);
    p.add_term({0, 0}, -(f1 - i * f2));
    return p;
}

// F-(zb) = zb^2 (F1 - i F2) - 2 zb F3 - (F1 + i F2)
inline spin_poly build_F_minus(const diff_ring_elem& f1, const diff_ring_elem& f2,
                               const diff_ring_elem& f3) {
    const gaussian_rational i = gaussian_rational::i();
    spin_poly p;
    p.add_term({0, 2}, f1 - i * f2);
    p.add_term({0, 1}, gaussian_rational(-2) * f3);
    p.add_term({0, 0}, -(f1 + i * f2));
    return p;
}

// J(z,zb) = zb z (J0+J3) + zb (J1-iJ2) + z (J1+iJ2) + (J0-J3)
inline spin_poly build_J(const diff_ring_elem& j0, const diff_ring_elem& j1,
                         const diff_ring_elem& j2, const diff_ring_elem& j3) {
    const gaussian_rational i = gaussian_rational::i();
    spin_poly p;
    p.add_term({1, 1}, j0 + j3);
    p.add_term({0, 1}, j1 - i * j2);
    p.add_term({1, 0}, j1 + i * j2);
    p.add_term({0, 0}, j0 - j3);
    return p;
}

inline std::array<const char*, 3> field_names(pm_sign sign) {
    if (sign == pm_sign::plus) return {"F1+", "F2+", "F3+"};
    return {"F1-", "F2-", "F3-"};
}

inline spin_poly physical_F(pm_sign sign) {
    auto n = field_names(sign);
    auto f1 = diff_ring_elem::field(n[0]);
    auto f2 = diff_ring_elem::field(n[1]);
    auto f3 = diff_ring_elem::field(n[2]);
    return sign == pm_sign::plus ? build_F_plus(f1, f2, f3) : build_F_minus(f1, f2, f3);
}

inline spin_poly physical_J() {
    return build_J(diff_ring_elem::field("J0"), diff_ring_elem::field("J1"),
                   diff_ring_elem::field("J2"), diff_ring_elem::field("J3"));
}

// --- the scalar Maxwell system -------------------------------------------------
//
// The scalar form implemented is  -2 I+- F+- = J : with that normalization its
// four components, read in the light-cone derivatives, are exactly integer /
// Gaussian combinations of the component equations (divergence and curl), and
// imposing those makes every residual vanish identically.

// coefficients of -2 I+-(F+-) - J at zb z, zb, z, 1
inline std::array<diff_ring_elem, 4> maxwell_residual(pm_sign sign) {
    spin_poly r = gaussian_rational(-2) * op_I_pm_n_direct(sign, 0, physical_F(sign)) -
                  physical_J();
    return {r.coefficient(1, 1), r.coefficient(0, 1), r.coefficient(1, 0),
            r.coefficient(0, 0)};
}

// derivatives in the original coordinates, translated through
// x+- = x0 +- x3, v = x1 - i x2, vb = x1 + i x2
inline diff_ring_elem partial_x(int mu, const diff_ring_elem& e) {
    const gaussian_rational i = gaussian_rational::i();
    switch (mu) {
        case 0: return partial(e, direction::plus) + partial(e, direction::minus);
        case 3: return partial(e, direction::plus) - partial(e, direction::minus);
        case 1: return partial(e, direction::v) + partial(e, direction::vbar);
        case 2: return i * (partial(e, direction::vbar) - partial(e, direction::v));
        default: throw std::invalid_argument("partial_x: mu must be 0..3");
    }
}

// left-hand side minus right-hand side of the component equations:
//   M0 = dk Fk - J0,   Mk = d0 Fk +- i eps_{klm} dl Fm - Jk
inline std::array<diff_ring_elem, 4> mxc_equations(pm_sign sign) {
    const gaussian_rational i = gaussian_rational::i();
    const gaussian_rational s = sign == pm_sign::plus ? i : -i;
    auto names = field_names(sign);
    std::array<diff_ring_elem, 3> F = {diff_ring_elem::field(names[0]),
                                       diff_ring_elem::field(names[1]),
                                       diff_ring_elem::field(names[2])};
    auto J = [](int k) { return diff_ring_elem::field("J" + std::to_string(k)); };

    std::array<diff_ring_elem, 4> M;
    M[0] = partial_x(1, F[0]) + partial_x(2, F[1]) + partial_x(3, F[2]) - J(0);
    // eps_{1 2 3} = 1 and cyclic
    M[1] = partial_x(0, F[0]) + s * (partial_x(2, F[2]) - partial_x(3, F[1])) - J(1);
    M[2] = partial_x(0, F[1]) + s * (partial_x(3, F[0]) - partial_x(1, F[2])) - J(2);
    M[3] = partial_x(0, F[2]) + s * (partial_x(1, F[1]) - partial_x(2, F[0])) - J(3);
    return M;
}

// rewrite J0..J3 by their component-equation values for the given sign
inline diff_ring_elem impose_mxc(const diff_ring_elem& e, pm_sign sign) {
    auto M = mxc_equations(sign);
    diff_ring_elem r = e;
    for (int k = 0; k < 4; ++k) {
        // J_k -> M_k's derivative part == M_k + J_k
        diff_ring_elem value = M[k] + diff_ring_elem::field("J" + std::to_string(k));
        r = substitute_field(r, "J" + std::to_string(k), value);
    }
    return r;
}

// --- the +/- exchange --------------------------------------------------------
//
// z <-> zb, v <-> vb, i -> -i, F+_k <-> F-_k; x+- and J fixed.

inline std::string swap_field_name(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'F') {
        std::string r = name;
        r.back() = name.back() == '+' ? '-' : '+';
        return r;
    }
    return name;
}

inline diff_ring_elem conjugate_swap(const diff_ring_elem& e) {
    diff_ring_elem r;
    for (const auto& [m, c] : e.terms()) {
        diff_mono n = m;
        std::swap(n.coord[static_cast<int>(direction::v)],
                  n.coord[static_cast<int>(direction::vbar)]);
        for (auto& f : n.fields) {
            f.name = swap_field_name(f.name);
            std::swap(f.deriv[static_cast<int>(direction::v)],
                      f.deriv[static_cast<int>(direction::vbar)]);
        }
        std::sort(n.fields.begin(), n.fields.end());
        r.add_term(n, c.conj());
    }
    return r;
}

inline spin_poly conjugate_swap(const spin_poly& f) {
    spin_poly r;
    for (const auto& [d, e] : f.terms())
        r.add_term({d.second, d.first}, conjugate_swap(e));
    return r;
}

// --- printing ---------------------------------------------------------------

inline std::string diff_mono_to_string(const diff_mono& m) {
    std::string s;
    auto append = [&](const std::string& f) {
        if (!s.empty()) s += "*";
        s += f;
    };
    for (int d = 0; d < n_directions; ++d) {
        if (m.coord[d] == 0) continue;
        std::string f = coordinate_names[d];
        if (m.coord[d] != 1) f += "^" + std::to_string(m.coord[d]);
        append(f);
    }
    for (const auto& ff : m.fields) {
        std::string f;
        for (int d = 0; d < n_directions; ++d)
            for (int k = 0; k < ff.deriv[d]; ++k) f += std::string(direction_names[d]) + " ";
        f += ff.name;
        append(f);
    }
    return s.empty() ? "1" : s;
}

inline std::string diff_ring_elem::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string mono = diff_mono_to_string(m);
        if (c == gaussian_rational(1) && mono != "1") {
            s += mono;
        } else if (mono == "1") {
            s += "(" + c.to_string() + ")";
        } else {
            s += "(" + c.to_string() + ")*" + mono;
        }
    }
    return s;
}

inline std::string spin_poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [d, e] = *it;
        if (!s.empty()) s += " + ";
        std::string zs;
        if (d.first > 0) zs += "z" + (d.first > 1 ? "^" + std::to_string(d.first) : "");
        if (d.second > 0) {
            if (!zs.empty()) zs += "*";
            zs += "zb" + (d.second > 1 ? "^" + std::to_string(d.second) : "");
        }
        if (zs.empty())
            s += "[" + e.to_string() + "]";
        else
            s += zs + "*[" + e.to_string() + "]";
    }
    return s;
}

}  // namespace qmx
