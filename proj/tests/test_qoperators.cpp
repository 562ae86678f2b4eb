#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qmx/qoperators.hpp"
#include "qmx/repr_spaces.hpp"

using namespace qmx;

namespace {

laurent_poly M(std::initializer_list<std::pair<param, int>> f) { return presets::mono(f); }

normal_monomial NM(std::initializer_list<generator> gs) {
    normal_monomial m = unit_monomial_nc();
    for (generator g : gs) ++m[rank(g)];
    return m;
}

nc_poly random_nc(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> gen_dist(0, n_generators - 1);
    std::uniform_int_distribution<int> deg_dist(0, 3);
    std::uniform_int_distribution<int> coeff(-2, 2);
    nc_poly p;
    for (int t = 0; t < 2; ++t) {
        normal_monomial m = unit_monomial_nc();
        int d = deg_dist(rng);
        for (int i = 0; i < d; ++i) ++m[gen_dist(rng)];
        int c = coeff(rng);
        p += nc_poly::monomial(m, laurent_poly::constant(c == 0 ? 1 : c));
    }
    return p;
}

std::vector<normal_monomial> monomials_up_to_degree(int dmax) {
    std::vector<normal_monomial> out;
    normal_monomial m{};
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == n_generators) {
            out.push_back(m);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            m[slot] = k;
            rec(slot + 1, remaining - k);
        }
        m[slot] = 0;
    };
    rec(0, dmax);
    return out;
}

}  // namespace

TEST_CASE("q-derivative primitive") {
    auto dz = q_deriv(generator::z);
    normal_monomial z2 = unit_monomial_nc();
    z2[rank(generator::z)] = 2;
    CHECK(dz.apply(z2) == nc_poly::monomial(NM({generator::z}), q_int(2)));
    CHECK(dz.apply(unit_monomial_nc()).is_zero());
    CHECK(dz.apply(NM({generator::v})).is_zero());

    // annihilation then reconstruction: [k]_q (q - q^-1) = q^k - q^-k
    normal_monomial z5 = unit_monomial_nc();
    z5[rank(generator::z)] = 5;
    nc_poly d = dz.apply(z5);
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms().begin()->second * lambda_const() ==
          laurent_poly::parameter(param::q, 5) - laurent_poly::parameter(param::q, -5));
}

TEST_CASE("q-derivative left weights") {
    // weight q^{j} on the xm-derivative, j = exponent of v (left of xm)
    q_deriv_weights w;
    w.per_slot[rank(generator::v)] = param_exponent{1, 0, 0, 0, 0, 0, 0};
    auto dxm = q_deriv(generator::xm, w);
    normal_monomial m = unit_monomial_nc();
    m[rank(generator::v)] = 2;
    m[rank(generator::xm)] = 3;
    nc_poly r = dxm.apply(m);
    normal_monomial expect_m = m;
    --expect_m[rank(generator::xm)];
    CHECK(r == nc_poly::monomial(expect_m, q_int(3) * laurent_poly::parameter(param::q, 2)));

    // slots right of the derivative have no effect
    q_deriv_weights wr;
    wr.per_slot[rank(generator::zb)] = param_exponent{1, 0, 0, 0, 0, 0, 0};
    auto dv = q_deriv(generator::v, wr);
    normal_monomial mv = unit_monomial_nc();
    mv[rank(generator::v)] = 1;
    mv[rank(generator::zb)] = 4;
    normal_monomial ev = mv;
    --ev[rank(generator::v)];
    CHECK(dv.apply(mv) == nc_poly::monomial(ev));
}

TEST_CASE("multiplication operators") {
    using g = generator;
    using enum param;
    auto mz = mult_op(g::zb);
    CHECK(mz.apply(nc_poly::gen(g::z)) ==
          nc_poly::monomial(NM({g::z, g::zb}),
                            M({{q13, 1}, {q24, 1}, {q14, -1}, {q23, -1}})));
    CHECK(mult_op(g::z).apply(nc_poly::one()) == nc_poly::gen(g::z));
    CHECK(mult_op(g::v).apply(mult_op(g::xp).apply(nc_poly::one())) ==
          nc_poly::monomial(NM({g::v, g::xp})));
}

TEST_CASE("operator algebra laws") {
    std::mt19937_64 rng(43);
    auto a = compose(mult_op(generator::zb), q_deriv(generator::z));
    auto b = q_deriv(generator::v);
    for (int t = 0; t < 25; ++t) {
        nc_poly p = random_nc(rng);
        CHECK(compose(linear_operator::identity(), a).apply(p) == a.apply(p));
        CHECK(scale(laurent_poly::zero(), a).apply(p).is_zero());
        CHECK(add(a, b).apply(p) == a.apply(p) + b.apply(p));
        CHECK(scale(lambda_const(), a).apply(p) == lambda_const() * a.apply(p));
    }
}

TEST_CASE("constructed operators are linear") {
    std::mt19937_64 rng(47);
    const auto t3 = classical_limit_ops();
    for (const linear_operator* op : {&t3.I1, &t3.I2, &t3.I3}) {
        for (int t = 0; t < 10; ++t) {
            nc_poly p = random_nc(rng), q = random_nc(rng);
            laurent_poly a = lambda_const(), b = laurent_poly::constant(rational(3, 2));
            CHECK(op->apply(a * p + b * q) == a * op->apply(p) + b * op->apply(q));
        }
    }
}

TEST_CASE("hierarchy skeleton scalar check") {
    // n = 0, '+', I1 = I2 = identity: (1/2)([2]_q - [3]_q) id
    auto id = linear_operator::identity();
    auto op = hat_I_pm_n(pm_sign::plus, 0, id, id, id);
    laurent_poly expect = laurent_poly::constant(rational(1, 2)) * (q_int(2) - q_int(3));
    nc_poly r = op.apply(nc_poly::one());
    CHECK(r == nc_poly::constant(expect));
    CHECK_THROWS_AS(hat_I_pm_n(pm_sign::plus, -1, id, id, id), std::invalid_argument);
}

TEST_CASE("minus skeleton swaps I1 and I3") {
    const auto t3 = classical_limit_ops();
    auto a = hat_I_pm_n(pm_sign::minus, 2, t3.I1, t3.I2, t3.I3);
    auto b = hat_I_pm_n(pm_sign::plus, 2, t3.I3, t3.I2, t3.I1);
    std::mt19937_64 rng(53);
    for (int t = 0; t < 15; ++t) {
        nc_poly p = random_nc(rng);
        CHECK(a.apply(p) == b.apply(p));
    }
}

TEST_CASE("classical limit of the default triple") {
    const auto t3 = classical_limit_ops();
    const auto monos = monomials_up_to_degree(4);
    for (const auto& m : monos) {
        spin_poly image = commutative_image(nc_poly::monomial(m));
        CHECK(commutative_image(t3.I1.apply(m)) == op_I(1, image));
        CHECK(commutative_image(t3.I2.apply(m)) == op_I(2, image));
        CHECK(commutative_image(t3.I3.apply(m)) == op_I(3, image));
    }
}

TEST_CASE("hierarchy operators reduce to the classical family at q = 1") {
    const auto t3 = classical_limit_ops();
    const auto monos = monomials_up_to_degree(4);
    for (int n = 0; n <= 5; ++n)
        for (pm_sign s : {pm_sign::plus, pm_sign::minus}) {
            auto op = hat_I_pm_n(s, n, t3);
            for (const auto& m : monos) {
                spin_poly image = commutative_image(nc_poly::monomial(m));
                if (commutative_image(op.apply(m)) != op_I_pm_n_factored(s, n, image)) {
                    CAPTURE(n, static_cast<int>(s), monomial_to_string(m));
                    FAIL("classical limit mismatch");
                }
            }
        }
    SUCCEED("classical limit verified");
}

TEST_CASE("quantum hierarchy application") {
    const auto t3 = classical_limit_ops();
    // quantum analog of z x-: image of the classical value -1/2
    nc_poly zxm = nc_poly::monomial(NM({generator::z, generator::xm}));
    nc_poly r = quantum_hierarchy_apply(pm_sign::plus, 0, t3, zxm);
    spin_poly expect =
        spin_poly::term(0, 0, diff_ring_elem::constant({rational(-1, 2), 0}));
    CHECK(commutative_image(r) == expect);

    CHECK(quantum_hierarchy_apply(pm_sign::plus, 0, t3, nc_poly::zero()).is_zero());

    // z^3 exceeds the level-0 source bound (2, 0)
    normal_monomial z3 = unit_monomial_nc();
    z3[rank(generator::z)] = 3;
    CHECK_THROWS_AS(quantum_hierarchy_apply(pm_sign::plus, 0, t3, nc_poly::monomial(z3)),
                    std::invalid_argument);
}

TEST_CASE("degree contract holds at the one-parameter specialization") {
    const auto sys1 = default_system().specialized(presets::one_param());
    const auto t3 = classical_limit_ops(sys1);
    for (int n = 0; n <= 2; ++n)
        for (level_kind k : {level_kind::plus, level_kind::minus}) {
            pm_sign s = k == level_kind::plus ? pm_sign::plus : pm_sign::minus;
            auto tmpl = make_hierarchy_element(n, k, 1);
            nc_poly out = quantum_hierarchy_apply(s, n, t3, tmpl.body);
            c_chi_element target{signature_for_level(n, level_kind::zero), out};
            CHECK(validate(target));
        }
}

TEST_CASE("degree contract fails for the generic-parameter table") {
    // with fully generic parameters the top-degree cancellation breaks down,
    // which the apply step reports
    const auto t3 = classical_limit_ops();
    auto tmpl = make_hierarchy_element(0, level_kind::plus, 1);
    CHECK_THROWS_AS(quantum_hierarchy_apply(pm_sign::plus, 0, t3, tmpl.body),
                    degree_contract_error);
}
