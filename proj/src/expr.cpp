#include "diffalg/expr.hpp"

#include <cctype>

#include "diffalg/errors.hpp"

namespace diffalg {

namespace {

struct Token {
    enum class Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t line, col;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        const std::size_t line = line_, col = col_;
        if (pos_ >= text_.size()) {
            current_ = {Token::Kind::End, "", line, col};
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s += text_[pos_];
                bump();
            }
            current_ = {Token::Kind::Int, s, line, col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_];
                bump();
            }
            current_ = {Token::Kind::Ident, s, line, col};
            return;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '/': k = Token::Kind::Slash; break;
            case '^': k = Token::Kind::Caret; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        bump();
        current_ = {k, std::string(1, c), line, col};
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
    Token current_{Token::Kind::End, "", 1, 1};
};

class Parser {
public:
    Parser(std::string_view text, bool allow_diff) : lex_(text), allow_diff_(allow_diff) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError("unexpected trailing input", t.line, t.col);
        return e;
    }

private:
    static ExprPtr node(ExprAst::Kind k, std::size_t line, std::size_t col) {
        auto n = std::make_unique<ExprAst>();
        n->kind = k;
        n->line = line;
        n->col = col;
        return n;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (lex_.peek().kind == Token::Kind::Plus ||
               lex_.peek().kind == Token::Kind::Minus) {
            Token op = lex_.take();
            ExprPtr rhs = term();
            ExprPtr n = node(op.kind == Token::Kind::Plus ? ExprAst::Kind::Add
                                                          : ExprAst::Kind::Sub,
                             op.line, op.col);
            n->children.push_back(std::move(lhs));
            n->children.push_back(std::move(rhs));
            lhs = std::move(n);
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (lex_.peek().kind == Token::Kind::Star ||
               lex_.peek().kind == Token::Kind::Slash) {
            Token op = lex_.take();
            ExprPtr rhs = factor();
            ExprPtr n = node(op.kind == Token::Kind::Star ? ExprAst::Kind::Mul
                                                          : ExprAst::Kind::Div,
                             op.line, op.col);
            n->children.push_back(std::move(lhs));
            n->children.push_back(std::move(rhs));
            lhs = std::move(n);
        }
        return lhs;
    }

    ExprPtr factor() {
        bool negated = false;
        Token first = lex_.peek();
        if (first.kind == Token::Kind::Minus) {
            lex_.take();
            negated = true;
        }
        ExprPtr a = atom();
        if (lex_.peek().kind == Token::Kind::Caret) {
            Token caret = lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::Int)
                throw ParseError("exponent must be a nonnegative integer", e.line, e.col);
            ExprPtr n = node(ExprAst::Kind::Pow, caret.line, caret.col);
            n->exponent = static_cast<std::uint32_t>(std::stoul(e.text));
            n->children.push_back(std::move(a));
            a = std::move(n);
        }
        if (negated) {
            ExprPtr n = node(ExprAst::Kind::Neg, first.line, first.col);
            n->children.push_back(std::move(a));
            a = std::move(n);
        }
        return a;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Int: {
                ExprPtr n = node(ExprAst::Kind::Int, t.line, t.col);
                n->int_value = Int(t.text);
                return n;
            }
            case Token::Kind::Ident: {
                if (allow_diff_ && t.text == "d" &&
                    lex_.peek().kind == Token::Kind::LParen) {
                    lex_.take();
                    ExprPtr inner = expr();
                    expect_rparen();
                    ExprPtr n = node(ExprAst::Kind::Diff, t.line, t.col);
                    n->children.push_back(std::move(inner));
                    return n;
                }
                ExprPtr n = node(ExprAst::Kind::Var, t.line, t.col);
                n->name = t.text;
                return n;
            }
            case Token::Kind::LParen: {
                ExprPtr e = expr();
                expect_rparen();
                return e;
            }
            default:
                throw ParseError("expected integer, identifier or '('", t.line, t.col);
        }
    }

    void expect_rparen() {
        Token t = lex_.take();
        if (t.kind != Token::Kind::RParen)
            throw ParseError("expected ')'", t.line, t.col);
    }

    Lexer lex_;
    bool allow_diff_;
};

}  // namespace

ExprPtr parse_expr_ast(std::string_view text, bool allow_diff) {
    return Parser(text, allow_diff).parse();
}

RatFunc eval_expr_ast(const ExprAst& ast, const std::vector<std::string>& vars) {
    switch (ast.kind) {
        case ExprAst::Kind::Int:
            return rf_constant(vars, Rat(ast.int_value));
        case ExprAst::Kind::Var: {
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == ast.name) return rf_var(vars, i);
            throw ParseError("unknown identifier '" + ast.name + "'", ast.line, ast.col);
        }
        case ExprAst::Kind::Neg:
            return -eval_expr_ast(*ast.children[0], vars);
        case ExprAst::Kind::Add:
            return eval_expr_ast(*ast.children[0], vars) +
                   eval_expr_ast(*ast.children[1], vars);
        case ExprAst::Kind::Sub:
            return eval_expr_ast(*ast.children[0], vars) -
                   eval_expr_ast(*ast.children[1], vars);
        case ExprAst::Kind::Mul:
            return eval_expr_ast(*ast.children[0], vars) *
                   eval_expr_ast(*ast.children[1], vars);
        case ExprAst::Kind::Div: {
            RatFunc den = eval_expr_ast(*ast.children[1], vars);
            if (den.is_zero())
                throw ParseError("division by the zero function", ast.line, ast.col);
            return eval_expr_ast(*ast.children[0], vars) / den;
        }
        case ExprAst::Kind::Pow:
            return eval_expr_ast(*ast.children[0], vars).pow(ast.exponent);
        case ExprAst::Kind::Diff:
            throw ParseError("d(...) is only allowed in differential-form expressions",
                             ast.line, ast.col);
    }
    throw Error("unreachable expression kind");
}

RatFunc parse_expr(std::string_view text, const std::vector<std::string>& vars) {
    return eval_expr_ast(*parse_expr_ast(text, false), vars);
}

}  // namespace diffalg
