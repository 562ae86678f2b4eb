// Deformed operator toolkit: linear operators on the PBW basis built from
// q-derivative, scaling and generator-multiplication primitives, composed into
// the hierarchy skeleton (1/2)([n+2] Ia I2 - [n+3] I2 Ia), with an exact
// classical limit.
#pragma once

#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "qmx/classical_maxwell.hpp"
#include "qmx/flag_algebra.hpp"
#include "qmx/laurent.hpp"

namespace qmx {

// A linear map on nc_poly, defined by its action on basis monomials and
// extended linearly.  Operators are immutable values.
class linear_operator {
public:
    using mono_fn = std::function<nc_poly(const normal_monomial&)>;

    linear_operator() : fn_([](const normal_monomial&) { return nc_poly::zero(); }) {}
    explicit linear_operator(mono_fn f) : fn_(std::move(f)) {}

    static linear_operator zero() { return linear_operator{}; }

    static linear_operator identity() {
        return linear_operator([](const normal_monomial& m) { return nc_poly::monomial(m); });
    }

    nc_poly apply(const normal_monomial& m) const { return fn_(m); }

    nc_poly apply(const nc_poly& p) const {
        nc_poly r;
        for (const auto& [m, c] : p.terms()) r += c * fn_(m);
        return r;
    }

    nc_poly operator()(const nc_poly& p) const { return apply(p); }

private:
    mono_fn fn_;
};

inline linear_operator add(const linear_operator& a, const linear_operator& b) {
    return linear_operator(
        [a, b](const normal_monomial& m) { return a.apply(m) + b.apply(m); });
}

inline linear_operator scale(const laurent_poly& c, const linear_operator& a) {
    return linear_operator([c, a](const normal_monomial& m) { return c * a.apply(m); });
}

// (compose(a, b))(p) = a(b(p))
inline linear_operator compose(const linear_operator& a, const linear_operator& b) {
    return linear_operator([a, b](const normal_monomial& m) { return a.apply(b.apply(m)); });
}

// --- q-derivative primitive ----------------------------------------------------

// Parameter weight attached to a q-derivative: a monomial exponent vector that
// is linear in the exponents strictly to the left of the slot, plus a constant
// offset.  With trivial weights the primitive reduces to the plain symmetric
// q-derivative in that coordinate.
struct q_deriv_weights {
    std::array<param_exponent, n_generators> per_slot{};  // only entries left of the slot act
    param_exponent offset = unit_exponent();

    param_exponent evaluate(const normal_monomial& m, int slot) const {
        param_exponent e = offset;
        for (int j = 0; j < slot; ++j) e = e + m[j] * per_slot[j];
        return e;
    }
};

// On a monomial with slot exponent k: lowers the slot to k-1 with coefficient
// [k]_q times the weight monomial; annihilates k = 0.
inline linear_operator q_deriv(generator slot, q_deriv_weights weights = {}) {
    const int s = rank(slot);
    return linear_operator([s, weights](const normal_monomial& m) {
        const int k = m[s];
        if (k == 0) return nc_poly::zero();
        normal_monomial n = m;
        --n[s];
        laurent_poly c = q_int(k) * laurent_poly::term(1, weights.evaluate(m, s));
        return nc_poly::monomial(n, std::move(c));
    });
}

// left multiplication by one generator, re-normal-ordered
inline linear_operator mult_op(generator g, const rewrite_system& sys = default_system()) {
    auto shared = std::make_shared<const rewrite_system>(sys);
    return linear_operator([g, shared](const normal_monomial& m) {
        word w{g};
        const word mw = monomial_to_word(m);
        w.insert(w.end(), mw.begin(), mw.end());
        return normal_order(w, *shared);
    });
}

// --- the hierarchy skeleton ----------------------------------------------------

struct op_triple {
    linear_operator I1, I2, I3;
};

// Candidate triple whose q = q_ij = 1 limit is the classical I1, I2, I3:
//   I1 = Dz,  I2 = Mzb Mz Dx+ + Mz Dv + Mzb Dvb + Dx-,  I3 = Dzb.
inline op_triple classical_limit_ops(const rewrite_system& sys = default_system()) {
    linear_operator I2 =
        add(add(compose(mult_op(generator::zb, sys),
                        compose(mult_op(generator::z, sys), q_deriv(generator::xp))),
                compose(mult_op(generator::z, sys), q_deriv(generator::v))),
            add(compose(mult_op(generator::zb, sys), q_deriv(generator::vb)),
                q_deriv(generator::xm)));
    return {q_deriv(generator::z), I2, q_deriv(generator::zb)};
}

// (1/2)([n+2]_q Ia I2 - [n+3]_q I2 Ia) with a = 1 for '+', a = 3 for '-'
inline linear_operator hat_I_pm_n(pm_sign sign, int n, const linear_operator& I1,
                                  const linear_operator& I2, const linear_operator& I3) {
    if (n < 0) throw std::invalid_argument("hat_I_pm_n: n must be non-negative");
    const linear_operator& Ia = sign == pm_sign::plus ? I1 : I3;
    const laurent_poly half = laurent_poly::constant(rational(1, 2));
    const laurent_poly minus_half = laurent_poly::constant(rational(-1, 2));
    return add(scale(half * q_int(n + 2), compose(Ia, I2)),
               scale(minus_half * q_int(n + 3), compose(I2, Ia)));
}

inline linear_operator hat_I_pm_n(pm_sign sign, int n, const op_triple& t) {
    return hat_I_pm_n(sign, n, t.I1, t.I2, t.I3);
}

// output bounds violated although the input was in range: the supplied triple
// does not satisfy the hierarchy degree contract
struct degree_contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Applies the level-n hierarchy operator.  The input must lie in the level-n
// source space (z-degree <= n+2, zb-degree <= n for '+', mirrored for '-');
// the result is checked against the target bounds (n+1, n+1).
inline nc_poly quantum_hierarchy_apply(pm_sign sign, int n, const op_triple& t,
                                       const nc_poly& f) {
    if (n < 0) throw std::invalid_argument("quantum_hierarchy_apply: n must be non-negative");
    const int zmax = sign == pm_sign::plus ? n + 2 : n;
    const int zbmax = sign == pm_sign::plus ? n : n + 2;
    if (f.max_exponent(generator::z) > zmax || f.max_exponent(generator::zb) > zbmax)
        throw std::invalid_argument(
            "quantum_hierarchy_apply: input exceeds the level-" + std::to_string(n) +
            " degree bounds (" + std::to_string(zmax) + ", " + std::to_string(zbmax) + ")");
    nc_poly r = hat_I_pm_n(sign, n, t).apply(f);
    if (r.max_exponent(generator::z) > n + 1 || r.max_exponent(generator::zb) > n + 1)
        throw degree_contract_error(
            "quantum_hierarchy_apply: result exceeds the target bounds (" +
            std::to_string(n + 1) + ", " + std::to_string(n + 1) + ")");
    return r;
}

// --- classical correspondence ---------------------------------------------------

// Commutative image of a PBW element: coefficients evaluated at q = q_ij = 1,
// z/zb exponents become spin degrees, the Minkowski block becomes a coordinate
// monomial.
inline spin_poly commutative_image(const nc_poly& p) {
    spin_poly r;
    for (const auto& [m, c] : p.terms()) {
        rational v = c.evaluate_at_one();
        if (v == 0) continue;
        diff_mono dm;
        dm.coord[static_cast<int>(direction::plus)] = m[rank(generator::xp)];
        dm.coord[static_cast<int>(direction::minus)] = m[rank(generator::xm)];
        dm.coord[static_cast<int>(direction::v)] = m[rank(generator::v)];
        dm.coord[static_cast<int>(direction::vbar)] = m[rank(generator::vb)];
        diff_ring_elem e;
        e.add_term(dm, gaussian_rational(v));
        r.add_term({m[rank(generator::z)], m[rank(generator::zb)]}, e);
    }
    return r;
}

}  // namespace qmx
