// Operator descriptions: a JSON expression tree of primitives (identity,
// qderiv, mult, scale, add, compose, classicalI, hatI) from which the CLI
// loads user-defined operators.
#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qmx/parser.hpp"
#include "qmx/qoperators.hpp"

namespace qmx {

struct op_config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline generator generator_by_name(const std::string& name) {
    for (int g = 0; g < n_generators; ++g)
        if (name == generator_names[g]) return static_cast<generator>(g);
    throw op_config_error("unknown generator '" + name + "'");
}

inline param_exponent exponent_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != n_params)
        throw op_config_error("parameter exponent must be an array of 7 integers");
    param_exponent e{};
    for (int i = 0; i < n_params; ++i) e[i] = j[static_cast<std::size_t>(i)].get<int>();
    return e;
}

}  // namespace detail

inline linear_operator load_operator(const nlohmann::json& j, const rewrite_system& sys) {
    if (!j.is_object() || !j.contains("op"))
        throw op_config_error("operator description needs an \"op\" field");
    const std::string kind = j.at("op").get<std::string>();

    if (kind == "identity") return linear_operator::identity();
    if (kind == "zero") return linear_operator::zero();

    if (kind == "qderiv") {
        generator slot = detail::generator_by_name(j.at("slot").get<std::string>());
        q_deriv_weights w;
        if (j.contains("weights")) {
            for (const auto& [name, vec] : j.at("weights").items()) {
                generator g = detail::generator_by_name(name);
                if (rank(g) >= rank(slot))
                    throw op_config_error("weight slot '" + name +
                                          "' is not left of the derivative slot");
                w.per_slot[rank(g)] = detail::exponent_from_json(vec);
            }
        }
        if (j.contains("offset")) w.offset = detail::exponent_from_json(j.at("offset"));
        return q_deriv(slot, w);
    }

    if (kind == "mult")
        return mult_op(detail::generator_by_name(j.at("gen").get<std::string>()), sys);

    if (kind == "scale") {
        laurent_poly c = parse_laurent(j.at("coeff").get<std::string>());
        return scale(c, load_operator(j.at("arg"), sys));
    }

    if (kind == "add" || kind == "compose") {
        const auto& args = j.at("args");
        if (!args.is_array() || args.empty())
            throw op_config_error("\"" + kind + "\" needs a non-empty \"args\" array");
        linear_operator r = load_operator(args[0], sys);
        for (std::size_t i = 1; i < args.size(); ++i) {
            linear_operator next = load_operator(args[i], sys);
            r = kind == "add" ? add(r, next) : compose(r, next);
        }
        return r;
    }

    if (kind == "classicalI") {
        const int a = j.at("a").get<int>();
        auto t = classical_limit_ops(sys);
        switch (a) {
            case 1: return t.I1;
            case 2: return t.I2;
            case 3: return t.I3;
            default: throw op_config_error("classicalI: \"a\" must be 1, 2 or 3");
        }
    }

    if (kind == "hatI") {
        const std::string sign = j.at("sign").get<std::string>();
        if (sign != "+" && sign != "-") throw op_config_error("hatI: sign must be '+' or '-'");
        const int n = j.at("n").get<int>();
        if (n < 0) throw op_config_error("hatI: n must be non-negative");
        linear_operator i1 = j.contains("I1") ? load_operator(j.at("I1"), sys)
                                              : classical_limit_ops(sys).I1;
        linear_operator i2 = j.contains("I2") ? load_operator(j.at("I2"), sys)
                                              : classical_limit_ops(sys).I2;
        linear_operator i3 = j.contains("I3") ? load_operator(j.at("I3"), sys)
                                              : classical_limit_ops(sys).I3;
        return hat_I_pm_n(sign == "+" ? pm_sign::plus : pm_sign::minus, n, i1, i2, i3);
    }

    throw op_config_error("unknown operator kind '" + kind + "'");
}

inline linear_operator load_operator_text(const std::string& text, const rewrite_system& sys) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw op_config_error(std::string("invalid operator file: ") + e.what());
    }
    try {
        return load_operator(j, sys);
    } catch (const nlohmann::json::exception& e) {
        throw op_config_error(std::string("invalid operator description: ") + e.what());
    }
}

}  // namespace qmx
