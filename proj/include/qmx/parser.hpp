// Expression front end.  Grammar: generators {z, v, xm, xp, vb, zb} (with
// Unicode aliases), parameters {q, q12, q13, q14, q23, q24, q34}, rational
// literals, '*', '+', '-', '^' with integer exponents, parentheses;
// juxtaposition order is word order.  Parsing does not normal order.
#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmx/flag_algebra.hpp"
#include "qmx/laurent.hpp"

namespace qmx {

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// linear combination of free (unordered) words
class raw_poly {
public:
    using term_map = std::map<word, laurent_poly>;

    raw_poly() = default;

    static raw_poly scalar(laurent_poly c) {
        raw_poly p;
        p.add_term({}, std::move(c));
        return p;
    }

    static raw_poly letter(generator g) {
        raw_poly p;
        p.add_term(word{g}, laurent_poly::one());
        return p;
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    laurent_poly scalar_value() const {
        if (terms_.empty()) return laurent_poly::zero();
        if (!is_scalar()) throw std::logic_error("raw_poly: not a scalar");
        return terms_.begin()->second;
    }

    void add_term(const word& w, const laurent_poly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend raw_poly operator+(const raw_poly& a, const raw_poly& b) {
        raw_poly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend raw_poly operator-(const raw_poly& a) {
        raw_poly r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend raw_poly operator-(const raw_poly& a, const raw_poly& b) { return a + (-b); }
    friend raw_poly operator*(const raw_poly& a, const raw_poly& b) {
        raw_poly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        return r;
    }

    // negative exponents require an invertible scalar (single unit monomial)
    raw_poly pow(int k) const {
        if (k < 0) {
            if (!is_scalar() || !scalar_value().is_unit_monomial())
                throw std::domain_error("negative exponent of a non-invertible expression");
            return scalar(scalar_value().pow(k));
        }
        raw_poly r = scalar(laurent_poly::one());
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    word_sum to_word_sum() const {
        word_sum s;
        s.reserve(terms_.size());
        for (const auto& [w, c] : terms_) s.emplace_back(c, w);
        return s;
    }

private:
    term_map terms_;
};

namespace detail {

enum class tok_kind { number, gen, par, star, plus, minus, caret, lparen, rparen, end };

struct token {
    tok_kind kind;
    std::size_t pos;
    rational value;   // number
    generator g{};    // gen
    param p{};        // par
};

class lexer {
public:
    explicit lexer(std::string_view text) : text_(text) { advance(); }

    const token& peek() const { return tok_; }

    token next() {
        token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= text_.size()) { tok_.kind = tok_kind::end; return; }
        char c = text_[i_];
        switch (c) {
            case '*': tok_.kind = tok_kind::star; ++i_; return;
            case '+': tok_.kind = tok_kind::plus; ++i_; return;
            case '-': tok_.kind = tok_kind::minus; ++i_; return;
            case '^': tok_.kind = tok_kind::caret; ++i_; return;
            case '(': tok_.kind = tok_kind::lparen; ++i_; return;
            case ')': tok_.kind = tok_kind::rparen; ++i_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) { lex_number(); return; }
        lex_symbol();
    }

    void lex_number() {
        std::size_t start = i_;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
        rational num(std::string(text_.substr(start, i_ - start)));
        // a '/' directly between digits is part of a rational literal
        if (i_ < text_.size() && text_[i_] == '/' && i_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[i_ + 1]))) {
            ++i_;
            std::size_t dstart = i_;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            rational den(std::string(text_.substr(dstart, i_ - dstart)));
            if (den == 0) throw parse_error("zero denominator", start);
            num /= den;
        }
        tok_.kind = tok_kind::number;
        tok_.value = std::move(num);
    }

    bool try_alias(std::string_view alias, generator g) {
        if (text_.substr(i_, alias.size()) == alias) {
            tok_.kind = tok_kind::gen;
            tok_.g = g;
            i_ += alias.size();
            return true;
        }
        return false;
    }

    void lex_symbol() {
        // Unicode aliases for the mangled generator names
        if (try_alias("x₊", generator::xp)) return;   // subscript plus
        if (try_alias("x₋", generator::xm)) return;   // subscript minus
        if (try_alias("v̄", generator::vb)) return;   // combining macron
        if (try_alias("z̄", generator::zb)) return;
        if (try_alias("v̅", generator::vb)) return;   // combining overline
        if (try_alias("z̅", generator::zb)) return;

        if (!std::isalpha(static_cast<unsigned char>(text_[i_])))
            throw parse_error("unexpected character '" + std::string(1, text_[i_]) + "'", i_);
        std::size_t start = i_;
        while (i_ < text_.size() &&
               std::isalnum(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::string name(text_.substr(start, i_ - start));
        for (int g = 0; g < n_generators; ++g)
            if (name == generator_names[g]) {
                tok_.kind = tok_kind::gen;
                tok_.g = static_cast<generator>(g);
                return;
            }
        for (int p = 0; p < n_params; ++p)
            if (name == param_names[p]) {
                tok_.kind = tok_kind::par;
                tok_.p = static_cast<param>(p);
                return;
            }
        throw parse_error("unknown symbol '" + name + "'", start);
    }

    std::string_view text_;
    std::size_t i_ = 0;
    token tok_{};
};

class parser {
public:
    explicit parser(std::string_view text) : lex_(text) {}

    raw_poly parse() {
        raw_poly r = expression();
        if (lex_.peek().kind != tok_kind::end)
            throw parse_error("unexpected trailing input", lex_.peek().pos);
        return r;
    }

private:
    raw_poly signed_term() {
        bool negate = false;
        while (lex_.peek().kind == tok_kind::minus) { lex_.next(); negate = !negate; }
        raw_poly r = term();
        return negate ? -r : r;
    }

    raw_poly expression() {
        raw_poly r = signed_term();
        while (lex_.peek().kind == tok_kind::plus || lex_.peek().kind == tok_kind::minus) {
            bool minus = lex_.next().kind == tok_kind::minus;
            raw_poly t = signed_term();
            r = minus ? r - t : r + t;
        }
        return r;
    }

    static bool starts_factor(tok_kind k) {
        return k == tok_kind::number || k == tok_kind::gen || k == tok_kind::par ||
               k == tok_kind::lparen;
    }

    raw_poly term() {
        raw_poly r = factor();
        for (;;) {
            if (lex_.peek().kind == tok_kind::star) {
                lex_.next();
                r = r * factor();
            } else if (starts_factor(lex_.peek().kind)) {
                r = r * factor();  // juxtaposition
            } else {
                return r;
            }
        }
    }

    raw_poly factor() {
        token t = lex_.next();
        raw_poly base;
        switch (t.kind) {
            case tok_kind::number: base = raw_poly::scalar(laurent_poly::constant(t.value)); break;
            case tok_kind::gen:    base = raw_poly::letter(t.g); break;
            case tok_kind::par:    base = raw_poly::scalar(laurent_poly::parameter(t.p)); break;
            case tok_kind::lparen: {
                base = expression();
                if (lex_.peek().kind != tok_kind::rparen)
                    throw parse_error("expected ')'", lex_.peek().pos);
                lex_.next();
                break;
            }
            default: throw parse_error("expected a value", t.pos);
        }
        if (lex_.peek().kind == tok_kind::caret) {
            std::size_t caret_pos = lex_.next().pos;
            int sign = 1;
            if (lex_.peek().kind == tok_kind::minus) { lex_.next(); sign = -1; }
            token e = lex_.next();
            if (e.kind != tok_kind::number || denominator(e.value) != 1)
                throw parse_error("expected an integer exponent", e.pos);
            int k = sign * static_cast<int>(numerator(e.value));
            try {
                base = base.pow(k);
            } catch (const std::domain_error& err) {
                throw parse_error(err.what(), caret_pos);
            }
        }
        return base;
    }

    lexer lex_;
};

}  // namespace detail

inline raw_poly parse_expression(std::string_view text) {
    return detail::parser(text).parse();
}

// parse and normal order
inline nc_poly parse_nc(std::string_view text,
                        const rewrite_system& sys = default_system(),
                        strategy strat = strategy::leftmost) {
    return normal_order(parse_expression(text).to_word_sum(), sys, strat);
}

// parse an expression that must contain no generators
inline laurent_poly parse_laurent(std::string_view text) {
    raw_poly p = parse_expression(text);
    if (!p.is_scalar())
        throw parse_error("expected a pure coefficient expression", 0);
    return p.scalar_value();
}

}  // namespace qmx
