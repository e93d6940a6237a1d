#pragma once

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpic/presentation.hpp"
#include "hyperpic/tower.hpp"

namespace hyperpic {

struct ParseError : std::runtime_error {
    std::size_t offset;
    std::vector<std::string> expected;

    ParseError(std::size_t off, std::string found, std::vector<std::string> exp)
        : std::runtime_error(format(off, found, exp)), offset(off), expected(std::move(exp)) {}

    static std::string format(std::size_t off, const std::string& found,
                              const std::vector<std::string>& exp) {
        std::ostringstream os;
        os << "syntax error at byte " << off << ": found " << found;
        if (!exp.empty()) {
            os << ", expected ";
            for (std::size_t i = 0; i < exp.size(); ++i) os << (i ? " | " : "") << exp[i];
        }
        return os.str();
    }
};

struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& m) : std::runtime_error(m) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { rational, symbol, kappa, add, sub, mul, pow, pushpi, pushgamma };
    Kind kind;
    Rational lit;
    std::string sym;
    long ki = 0, kj = 0;
    ExprPtr lhs, rhs;
    unsigned exp = 0;

    static ExprPtr rational(Rational v) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::rational;
        e->lit = std::move(v);
        return e;
    }
    static ExprPtr symbol(std::string s) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::symbol;
        e->sym = std::move(s);
        return e;
    }
    static ExprPtr kappa(long i, long j) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::kappa;
        e->ki = i;
        e->kj = j;
        return e;
    }
    static ExprPtr node(Kind k, ExprPtr a, ExprPtr b = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }
    static ExprPtr power(ExprPtr a, unsigned n) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::pow;
        e->lhs = std::move(a);
        e->exp = n;
        return e;
    }
};

namespace detail {

struct Token {
    enum class Type { number, ident, plus, minus, star, caret, slash, lparen, rparen, comma, end };
    Type type;
    std::string text;
    std::size_t offset;

    std::string describe() const {
        if (type == Type::end) return "end of input";
        return "'" + text + "'";
    }
};

inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (c >= '0' && c <= '9') {
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
            out.push_back({Token::Type::number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') ||
                                    (s[i] >= 'A' && s[i] <= 'Z') ||
                                    (s[i] >= '0' && s[i] <= '9')))
                ++i;
            out.push_back({Token::Type::ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Token::Type t;
        switch (c) {
            case '+': t = Token::Type::plus; break;
            case '-': t = Token::Type::minus; break;
            case '*': t = Token::Type::star; break;
            case '^': t = Token::Type::caret; break;
            case '/': t = Token::Type::slash; break;
            case '(': t = Token::Type::lparen; break;
            case ')': t = Token::Type::rparen; break;
            case ',': t = Token::Type::comma; break;
            default:
                throw ParseError(start, "'" + std::string(1, c) + "'",
                                 {"a token from the expression grammar"});
        }
        out.push_back({t, std::string(1, c), start});
        ++i;
    }
    out.push_back({Token::Type::end, "", s.size()});
    return out;
}

inline const std::vector<std::string>& symbol_names() {
    static const std::vector<std::string> names = {"a1", "a2", "a2p", "b1", "c2",
                                                   "z",  "zeta", "n1", "n2", "u"};
    return names;
}

inline bool is_symbol_name(const std::string& s) {
    for (const auto& n : symbol_names())
        if (n == s) return true;
    return false;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (peek().type != Token::Type::end)
            fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
        return e;
    }

private:
    using T = Token::Type;

    const Token& peek() const { return toks_[pos_]; }
    const Token& get() { return toks_[pos_++]; }
    bool accept(T t) {
        if (peek().type != t) return false;
        ++pos_;
        return true;
    }
    void expect(T t, const char* what) {
        if (!accept(t)) fail({what});
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(peek().offset, peek().describe(), std::move(expected));
    }

    // a leading '-' on the first term is accepted so canonical renders reparse
    ExprPtr expr() {
        bool neg = false;
        if (peek().type == T::minus && !(toks_[pos_ + 1].type == T::number)) {
            ++pos_;
            neg = true;
        }
        ExprPtr e = term();
        if (neg) e = Expr::node(Expr::Kind::sub, Expr::rational(Rational(0)), e);
        while (peek().type == T::plus || peek().type == T::minus) {
            bool add = get().type == T::plus;
            e = Expr::node(add ? Expr::Kind::add : Expr::Kind::sub, e, term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (accept(T::star)) e = Expr::node(Expr::Kind::mul, e, factor());
        return e;
    }

    ExprPtr factor() {
        ExprPtr e = atom();
        if (accept(T::caret)) {
            if (peek().type != T::number) fail({"a nonnegative integer exponent"});
            Token t = get();
            unsigned long v;
            try {
                v = std::stoul(t.text);
            } catch (const std::out_of_range&) {
                throw ParseError(t.offset, "'" + t.text + "'", {"a smaller exponent"});
            }
            e = Expr::power(e, static_cast<unsigned>(v));
        }
        return e;
    }

    ExprPtr atom() {
        if (peek().type == T::minus && toks_[pos_ + 1].type == T::number) {
            ++pos_;
            return Expr::rational(-literal());
        }
        if (peek().type == T::number) return Expr::rational(literal());
        if (peek().type == T::ident) {
            Token t = get();
            if (t.text == "kappa") return kappa_call();
            if (t.text == "pushpi" || t.text == "pushgamma") {
                bool pi = t.text == "pushpi";
                expect(T::lparen, "'('");
                ExprPtr inner = expr();
                expect(T::rparen, "')'");
                return Expr::node(pi ? Expr::Kind::pushpi : Expr::Kind::pushgamma, inner);
            }
            if (is_symbol_name(t.text)) return Expr::symbol(t.text);
            throw ParseError(t.offset, "'" + t.text + "'",
                             {"a symbol (a1, a2, a2p, b1, c2, z, zeta, n1, n2, u)",
                              "kappa", "pushpi", "pushgamma"});
        }
        if (accept(T::lparen)) {
            ExprPtr e = expr();
            expect(T::rparen, "')'");
            return e;
        }
        fail({"a rational literal", "a symbol", "kappa", "pushpi", "pushgamma", "'('"});
    }

    // RATIONAL := INT ("/" UINT)?   (sign already consumed by the caller)
    Rational literal() {
        Token num = get();
        Integer n(num.text);
        if (peek().type == T::slash) {
            ++pos_;
            if (peek().type != T::number) fail({"an unsigned integer denominator"});
            Token den = get();
            Integer dv(den.text);
            if (dv == 0)
                throw ParseError(den.offset, "'0'", {"a nonzero denominator"});
            return Rational(n, dv);
        }
        return Rational(n);
    }

    ExprPtr kappa_call() {
        expect(T::lparen, "'('");
        bool neg = accept(T::minus);
        if (peek().type != T::number) fail({"an integer index"});
        Token it = get();
        long i = index_of(it) * (neg ? -1 : 1);
        if (i < -1)
            throw ParseError(it.offset, "'" + std::string(neg ? "-" : "") + it.text + "'",
                             {"an index i >= -1"});
        expect(T::comma, "','");
        if (peek().type != T::number) fail({"a nonnegative integer index"});
        Token jt = get();
        long j = index_of(jt);
        expect(T::rparen, "')'");
        return Expr::kappa(i, j);
    }

    static long index_of(const detail::Token& t) {
        try {
            return std::stol(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError(t.offset, "'" + t.text + "'", {"a smaller index"});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).run(); }

// Per-flavor symbol images over one tower ring.
class Evaluator {
public:
    Evaluator(TowerRingPtr ring, int g, long d) : ring_(std::move(ring)), g_(g), d_(d) {}

    TowerElement evaluate(const ExprPtr& e) const {
        switch (e->kind) {
            case Expr::Kind::rational:
                return ring_->constant(e->lit);
            case Expr::Kind::symbol:
                return symbol(e->sym);
            case Expr::Kind::kappa:
                return kappa_value(e->ki, e->kj);
            case Expr::Kind::add:
                return evaluate(e->lhs) + evaluate(e->rhs);
            case Expr::Kind::sub:
                return evaluate(e->lhs) - evaluate(e->rhs);
            case Expr::Kind::mul:
                return evaluate(e->lhs) * evaluate(e->rhs);
            case Expr::Kind::pow:
                return ring_->pow(evaluate(e->lhs), e->exp);
            case Expr::Kind::pushpi: {
                TowerElement x = evaluate(e->lhs);
                try {
                    return ring_->from_base(ring_->push_pi(x));
                } catch (const std::domain_error& err) {
                    throw EvalError(err.what());
                }
            }
            case Expr::Kind::pushgamma: {
                TowerElement x = evaluate(e->lhs);
                try {
                    return ring_->push_gamma(x);
                } catch (const std::domain_error& err) {
                    throw EvalError(err.what());
                }
            }
        }
        throw std::logic_error("unreachable");
    }

private:
    TowerElement symbol(const std::string& s) const {
        if (s == "u") throw EvalError("symbol u is only meaningful in the rigidification ring");
        switch (ring_->flavor()) {
            case Flavor::full:
                if (s == "n1" || s == "n2")
                    throw EvalError("symbol " + s + " requires the splitting flavor");
                return ring_->sym(s);
            case Flavor::reduced:
                if (s == "n1" || s == "n2")
                    throw EvalError("symbol " + s + " requires the splitting flavor");
                if (s == "b1" || s == "c2") return ring_->zero();
                if (s == "a2") {
                    TowerElement a1 = ring_->sym("a1");
                    return Rational(1, 4) * a1 * a1;
                }
                return ring_->sym(s);
            case Flavor::splitting: {
                if (s == "zeta")
                    throw EvalError("symbol zeta is not defined on the splitting-locus ring");
                if (s == "n1" || s == "n2" || s == "b1" || s == "c2" || s == "z")
                    return ring_->sym(s);
                const Rational i(ring_->splitting_i()), j(ring_->splitting_j());
                TowerElement n1 = ring_->sym("n1"), n2 = ring_->sym("n2");
                if (s == "a1") return n1 + n2;
                if (s == "a2") return n1 * n2 - i * j * ring_->sym("c2");
                if (s == "a2p") return i * n2 + j * n1;
                throw EvalError("symbol " + s + " is not defined in this flavor");
            }
        }
        throw std::logic_error("unreachable");
    }

    TowerElement kappa_value(long i, long j) const {
        if (i == -1 && j == 0)
            throw EvalError("kappa(-1,0) is excluded: it would have degree -1");
        GradedPolynomial v = kappa(i, j, g_, d_).value;  // in Q[a1, a2p]
        if (ring_->flavor() != Flavor::splitting) return ring_->from_base(v);
        TablePtr target = ring_->table();
        const Rational i_(ring_->splitting_i()), j_(ring_->splitting_j());
        GradedPolynomial n1 = GradedPolynomial::variable(target, "n1");
        GradedPolynomial n2 = GradedPolynomial::variable(target, "n2");
        std::map<std::string, GradedPolynomial> images;
        images.emplace("a1", n1 + n2);
        images.emplace("a2p", i_ * n2 + j_ * n1);
        return TowerElement(ring_, v.substitute(images, target));
    }

    TowerRingPtr ring_;
    int g_;
    long d_;
};

inline std::string evaluate_to_string(std::string_view text, TowerRingPtr ring, int g, long d) {
    return Evaluator(std::move(ring), g, d).evaluate(parse(text)).render();
}

}  // namespace hyperpic
