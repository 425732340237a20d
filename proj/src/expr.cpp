#include "oscalg/expr.hpp"

#include <cctype>

namespace oscalg {

namespace {

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        const size_t start = i_;
        if (i_ >= s_.size()) {
            cur_ = {Token::Type::End, "", start};
            return;
        }
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            cur_ = {Token::Type::Number, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            cur_ = {Token::Type::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': cur_ = {Token::Type::Plus, "+", start}; return;
            case '-': cur_ = {Token::Type::Minus, "-", start}; return;
            case '*': cur_ = {Token::Type::Star, "*", start}; return;
            case '/': cur_ = {Token::Type::Slash, "/", start}; return;
            case '^': cur_ = {Token::Type::Caret, "^", start}; return;
            case '(': cur_ = {Token::Type::LParen, "(", start}; return;
            case ')': cur_ = {Token::Type::RParen, ")", start}; return;
            default:
                throw std::invalid_argument("expression: unexpected character '" +
                                            std::string(1, c) + "' at position " +
                                            std::to_string(start));
        }
    }

    const std::string& s_;
    size_t i_ = 0;
    Token cur_{Token::Type::End, "", 0};
};

Expr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

Expr make_const(Rat v) {
    ExprNode n;
    n.kind = ExprNode::Kind::Const;
    n.value = std::move(v);
    return make(std::move(n));
}

Expr make_binary(ExprNode::Kind k, Expr a, Expr b) {
    ExprNode n;
    n.kind = k;
    n.lhs = std::move(a);
    n.rhs = std::move(b);
    return make(std::move(n));
}

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) {}

    Expr parse() {
        Expr e = sum();
        if (lex_.peek().type != Token::Type::End)
            throw std::invalid_argument("expression: trailing input at position " +
                                        std::to_string(lex_.peek().pos));
        return e;
    }

private:
    Expr sum() {
        Expr e = term();
        while (true) {
            const auto t = lex_.peek().type;
            if (t == Token::Type::Plus) {
                lex_.next();
                e = make_binary(ExprNode::Kind::Add, e, term());
            } else if (t == Token::Type::Minus) {
                lex_.next();
                e = make_binary(ExprNode::Kind::Sub, e, term());
            } else {
                return e;
            }
        }
    }

    Expr term() {
        Expr e = factor();
        while (true) {
            const auto t = lex_.peek().type;
            if (t == Token::Type::Star) {
                lex_.next();
                e = make_binary(ExprNode::Kind::Mul, e, factor());
            } else if (t == Token::Type::Slash) {
                lex_.next();
                e = make_binary(ExprNode::Kind::Div, e, factor());
            } else if (t == Token::Type::Ident || t == Token::Type::Number ||
                       t == Token::Type::LParen) {
                // implicit multiplication: "2n", "n(n+1)", "3(x0+1)"
                e = make_binary(ExprNode::Kind::Mul, e, factor());
            } else {
                return e;
            }
        }
    }

    Expr factor() {
        const auto t = lex_.peek().type;
        if (t == Token::Type::Minus) {
            lex_.next();
            ExprNode n;
            n.kind = ExprNode::Kind::Neg;
            n.lhs = factor();
            return make(std::move(n));
        }
        if (t == Token::Type::Plus) {
            lex_.next();
            return factor();
        }
        Expr base = primary();
        if (lex_.peek().type == Token::Type::Caret) {
            lex_.next();
            ExprNode n;
            n.kind = ExprNode::Kind::Pow;
            n.lhs = base;
            n.exponent = exponent_literal();
            return make(std::move(n));
        }
        return base;
    }

    long exponent_literal() {
        bool neg = false;
        while (lex_.peek().type == Token::Type::Minus || lex_.peek().type == Token::Type::Plus) {
            if (lex_.next().type == Token::Type::Minus) neg = !neg;
        }
        const Token t = lex_.next();
        if (t.type != Token::Type::Number)
            throw std::invalid_argument("expression: exponent must be an integer literal "
                                        "(position " + std::to_string(t.pos) + ")");
        const long v = std::stol(t.text);
        return neg ? -v : v;
    }

    Expr primary() {
        const Token t = lex_.next();
        switch (t.type) {
            case Token::Type::Number:
                return make_const(Rat::from_string(t.text));
            case Token::Type::Ident: {
                ExprNode n;
                n.kind = ExprNode::Kind::Var;
                n.name = t.text;
                return make(std::move(n));
            }
            case Token::Type::LParen: {
                Expr e = sum();
                const Token close = lex_.next();
                if (close.type != Token::Type::RParen)
                    throw std::invalid_argument("expression: expected ')' at position " +
                                                std::to_string(close.pos));
                return e;
            }
            default:
                throw std::invalid_argument("expression: unexpected token at position " +
                                            std::to_string(t.pos));
        }
    }

    Lexer lex_;
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

Rat eval_expr(const Expr& e, const std::map<std::string, Rat>& env) {
    switch (e->kind) {
        case ExprNode::Kind::Const: return e->value;
        case ExprNode::Kind::Var: {
            auto it = env.find(e->name);
            if (it == env.end())
                throw std::invalid_argument("expression: unknown variable '" + e->name + "'");
            return it->second;
        }
        case ExprNode::Kind::Add: return eval_expr(e->lhs, env) + eval_expr(e->rhs, env);
        case ExprNode::Kind::Sub: return eval_expr(e->lhs, env) - eval_expr(e->rhs, env);
        case ExprNode::Kind::Mul: return eval_expr(e->lhs, env) * eval_expr(e->rhs, env);
        case ExprNode::Kind::Div: {
            const Rat d = eval_expr(e->rhs, env);
            if (d.is_zero()) throw ExprUndefined("expression: division by zero");
            return eval_expr(e->lhs, env) / d;
        }
        case ExprNode::Kind::Neg: return -eval_expr(e->lhs, env);
        case ExprNode::Kind::Pow: {
            const Rat b = eval_expr(e->lhs, env);
            if (e->exponent < 0 && b.is_zero())
                throw ExprUndefined("expression: zero to a negative power");
            return b.pow(e->exponent);
        }
    }
    throw std::logic_error("expression: corrupt node");
}

RatFun expr_to_ratfun(const Expr& e, const std::string& var) {
    switch (e->kind) {
        case ExprNode::Kind::Const: return RatFun(e->value);
        case ExprNode::Kind::Var:
            if (e->name != var)
                throw std::invalid_argument("expression: unexpected variable '" + e->name +
                                            "' (expected '" + var + "')");
            return RatFun(Poly::variable());
        case ExprNode::Kind::Add: return expr_to_ratfun(e->lhs, var) + expr_to_ratfun(e->rhs, var);
        case ExprNode::Kind::Sub: return expr_to_ratfun(e->lhs, var) - expr_to_ratfun(e->rhs, var);
        case ExprNode::Kind::Mul: return expr_to_ratfun(e->lhs, var) * expr_to_ratfun(e->rhs, var);
        case ExprNode::Kind::Div: return expr_to_ratfun(e->lhs, var) / expr_to_ratfun(e->rhs, var);
        case ExprNode::Kind::Neg: return -expr_to_ratfun(e->lhs, var);
        case ExprNode::Kind::Pow: return expr_to_ratfun(e->lhs, var).pow(e->exponent);
    }
    throw std::logic_error("expression: corrupt node");
}

RatFun parse_ratfun(const std::string& text, const std::string& var) {
    return expr_to_ratfun(parse_expr(text), var);
}

}  // namespace oscalg
