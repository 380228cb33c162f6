#include "orthant/parser.hpp"

#include <cctype>

#include "orthant/errors.hpp"

namespace orthant {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            const int tl = line_, tc = col_;
            if (eof()) {
                out.push_back({Token::Kind::End, "", tl, tc});
                break;
            }
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) num += get();
                out.push_back({Token::Kind::Number, num, tl, tc});
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id;
                while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                    id += get();
                out.push_back({Token::Kind::Ident, id, tl, tc});
            } else {
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
                        throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
                }
                get();
                out.push_back({k, std::string(1, c), tl, tc});
            }
        }
        return out;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_space() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

    std::unique_ptr<AstNode> run() {
        auto e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    const Token& cur() const { return t_[i_]; }
    void advance() { ++i_; }
    bool accept(Token::Kind k) {
        if (cur().kind == k) {
            advance();
            return true;
        }
        return false;
    }
    void expect(Token::Kind k, const std::string& what) {
        if (cur().kind != k)
            throw ParseError("expected " + what + ", found '" + cur().text + "'", cur().line,
                             cur().col);
        advance();
    }

    std::unique_ptr<AstNode> make(AstNode::Kind k, const Token& at) {
        auto n = std::make_unique<AstNode>();
        n->kind = k;
        n->line = at.line;
        n->col = at.col;
        return n;
    }

    std::unique_ptr<AstNode> expr() {
        auto lhs = term();
        while (cur().kind == Token::Kind::Plus || cur().kind == Token::Kind::Minus) {
            const Token op = cur();
            advance();
            auto n = make(op.kind == Token::Kind::Plus ? AstNode::Kind::Add : AstNode::Kind::Sub, op);
            n->children.push_back(std::move(lhs));
            n->children.push_back(term());
            lhs = std::move(n);
        }
        return lhs;
    }

    std::unique_ptr<AstNode> term() {
        auto lhs = factor();
        while (true) {
            if (cur().kind == Token::Kind::Star || cur().kind == Token::Kind::Slash) {
                const Token op = cur();
                advance();
                auto n = make(op.kind == Token::Kind::Star ? AstNode::Kind::Mul : AstNode::Kind::Div, op);
                n->children.push_back(std::move(lhs));
                n->children.push_back(factor());
                lhs = std::move(n);
            } else if (cur().kind == Token::Kind::LParen) {
                // implicit multiplication, allowed only directly before '('
                const Token op = cur();
                auto n = make(AstNode::Kind::Mul, op);
                n->children.push_back(std::move(lhs));
                n->children.push_back(factor());
                lhs = std::move(n);
            } else {
                break;
            }
        }
        return lhs;
    }

    std::unique_ptr<AstNode> factor() {
        if (cur().kind == Token::Kind::Minus) {
            const Token op = cur();
            advance();
            auto n = make(AstNode::Kind::Neg, op);
            n->children.push_back(factor());
            return n;
        }
        if (cur().kind == Token::Kind::Plus) {
            advance();
            return factor();
        }
        auto a = atom();
        if (cur().kind == Token::Kind::Caret) {
            const Token op = cur();
            advance();
            if (cur().kind != Token::Kind::Number)
                throw ParseError("exponent must be a nonnegative integer literal", cur().line,
                                 cur().col);
            auto n = make(AstNode::Kind::Pow, op);
            try {
                n->power = std::stoll(cur().text);
            } catch (const std::out_of_range&) {
                throw ParseError("exponent too large", cur().line, cur().col);
            }
            if (n->power > 4096)
                throw ParseError("exponent too large", cur().line, cur().col);
            advance();
            n->children.push_back(std::move(a));
            return n;
        }
        return a;
    }

    std::unique_ptr<AstNode> atom() {
        const Token at = cur();
        switch (at.kind) {
            case Token::Kind::Number: {
                advance();
                auto n = make(AstNode::Kind::Number, at);
                n->text = at.text;
                return n;
            }
            case Token::Kind::Ident: {
                advance();
                auto n = make(AstNode::Kind::Variable, at);
                n->text = at.text;
                return n;
            }
            case Token::Kind::LParen: {
                advance();
                auto e = expr();
                expect(Token::Kind::RParen, "')'");
                return e;
            }
            default:
                throw ParseError("expected a number, variable, or '('; found '" + at.text + "'",
                                 at.line, at.col);
        }
    }

    std::vector<Token> t_;
    std::size_t i_ = 0;
};

}  // namespace

std::unique_ptr<AstNode> parse_expression(const std::string& text) {
    return Parser(Lexer(text).run()).run();
}

void collect_variables(const AstNode& node, std::vector<std::string>& out) {
    if (node.kind == AstNode::Kind::Variable && node.text != "Z") {
        for (const auto& v : out)
            if (v == node.text) return;
        out.push_back(node.text);
        return;
    }
    for (const auto& ch : node.children) collect_variables(*ch, out);
}

}  // namespace orthant
