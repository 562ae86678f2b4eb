// Representation-space bookkeeping: signatures [n1, n2; d], degree-bounded
// elements, and the hierarchy source/target templates.
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "qmx/flag_algebra.hpp"
#include "qmx/laurent.hpp"

namespace qmx {

struct signature {
    int n1 = 0;
    int n2 = 0;
    rational d = 0;  // conformal dimension, an inert label

    friend bool operator==(const signature&, const signature&) = default;

    std::string to_string() const {
        std::ostringstream os;
        os << "[" << n1 << "," << n2 << ";" << d << "]";
        return os.str();
    }
};

enum class level_kind { plus, minus, zero };

// [n+2,n;2], [n,n+2;2] and [n+1,n+1;3]
inline signature signature_for_level(int n, level_kind kind) {
    if (n < 0) throw std::invalid_argument("signature_for_level: n must be non-negative");
    switch (kind) {
        case level_kind::plus:  return {n + 2, n, 2};
        case level_kind::minus: return {n, n + 2, 2};
        case level_kind::zero:  return {n + 1, n + 1, 3};
    }
    throw std::invalid_argument("signature_for_level: bad kind");
}

// polynomial in z, zb of bidegree at most (n1, n2) with formal power series
// coefficients in the Minkowski block (kept at finite support here)
struct c_chi_element {
    signature sig;
    nc_poly body;
};

inline bool validate(const c_chi_element& e) {
    for (const auto& [m, c] : e.body.terms())
        if (m[rank(generator::z)] > e.sig.n1 || m[rank(generator::zb)] > e.sig.n2)
            return false;
    return true;
}

// Generic element of the level-n space: every admissible (z, zb) degree pair,
// Minkowski block enumerated up to the truncation degree, one distinct
// placeholder coefficient per basis monomial.  The coefficient ring has no
// free symbols beyond the deformation parameters, so placeholders are distinct
// integer tags; every check made on templates is linear in the coefficients.
inline c_chi_element make_hierarchy_element(int n, level_kind kind, int truncate_degree) {
    if (truncate_degree < 0)
        throw std::invalid_argument("make_hierarchy_element: negative truncation");
    const signature sig = signature_for_level(n, kind);
    nc_poly body;
    int tag = 1;
    for (int i = 0; i <= sig.n1; ++i)
        for (int nn = 0; nn <= sig.n2; ++nn)
            for (int j = 0; j <= truncate_degree; ++j)
                for (int k = 0; j + k <= truncate_degree; ++k)
                    for (int l = 0; j + k + l <= truncate_degree; ++l)
                        for (int m = 0; j + k + l + m <= truncate_degree; ++m) {
                            normal_monomial mono{i, j, k, l, m, nn};
                            body.add_term(mono, laurent_poly::constant(tag++));
                        }
    return {sig, std::move(body)};
}

// signature header plus body, e.g. "chi [2,0;2]\n(1) * z^2 + ..."
inline std::string serialize(const c_chi_element& e) {
    return "chi " + e.sig.to_string() + "\n" + e.body.to_string() + "\n";
}

}  // namespace qmx
