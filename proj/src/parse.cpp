#include "fpalg/parse.hpp"

#include <cctype>

namespace fpalg {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

    Kind kind;
    std::string text;
    std::size_t pos; // 1-based position in the input
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < text.size()) {
        char c = text[k];
        std::size_t pos = k + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = k;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                ++k;
            out.push_back({Token::Kind::Number,
                           std::string(text.substr(start, k - start)), pos});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = k;
            while (k < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_'))
                ++k;
            out.push_back({Token::Kind::Ident,
                           std::string(text.substr(start, k - start)), pos});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '^': kind = Token::Kind::Caret; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        out.push_back({kind, std::string(1, c), pos});
        ++k;
    }
    out.push_back({Token::Kind::End, "", text.size() + 1});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    ExprNode run() {
        ExprNode node = expr();
        if (peek().kind != Token::Kind::End)
            throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
        return node;
    }

private:
    const Token& peek() const { return tokens_[next_]; }
    Token take() { return tokens_[next_++]; }
    bool accept(Token::Kind kind) {
        if (peek().kind != kind) return false;
        ++next_;
        return true;
    }

    ExprNode expr() {
        ExprNode node = term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            Token op = take();
            ExprNode rhs = term();
            ExprNode parent;
            parent.kind = op.kind == Token::Kind::Plus ? ExprNode::Kind::Sum
                                                       : ExprNode::Kind::Difference;
            parent.pos = op.pos;
            parent.children.push_back(std::move(node));
            parent.children.push_back(std::move(rhs));
            node = std::move(parent);
        }
        return node;
    }

    ExprNode term() {
        ExprNode node = factor();
        while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
            Token op = take();
            ExprNode rhs = factor();
            ExprNode parent;
            parent.kind = op.kind == Token::Kind::Star ? ExprNode::Kind::Product
                                                       : ExprNode::Kind::Quotient;
            parent.pos = op.pos;
            parent.children.push_back(std::move(node));
            parent.children.push_back(std::move(rhs));
            node = std::move(parent);
        }
        return node;
    }

    ExprNode factor() {
        if (peek().kind == Token::Kind::Minus) {
            Token op = take();
            ExprNode parent;
            parent.kind = ExprNode::Kind::Negation;
            parent.pos = op.pos;
            parent.children.push_back(factor());
            return parent;
        }
        return power();
    }

    ExprNode power() {
        ExprNode node = primary();
        while (peek().kind == Token::Kind::Caret) {
            Token op = take();
            if (peek().kind != Token::Kind::Number)
                throw ParseError("expected a nonnegative integer exponent after '^'",
                                 peek().pos);
            Token exp = take();
            mpz_class value(exp.text);
            if (!value.fits_ulong_p() || value.get_ui() > 4096)
                throw ParseError("exponent '" + exp.text + "' is too large", exp.pos);
            ExprNode parent;
            parent.kind = ExprNode::Kind::Power;
            parent.pos = op.pos;
            parent.exponent = value.get_ui();
            parent.children.push_back(std::move(node));
            node = std::move(parent);
        }
        return node;
    }

    ExprNode primary() {
        const Token& token = peek();
        switch (token.kind) {
            case Token::Kind::Number: {
                Token t = take();
                ExprNode node;
                node.kind = ExprNode::Kind::Literal;
                node.pos = t.pos;
                node.value = Scalar(Rational::from_string(t.text));
                return node;
            }
            case Token::Kind::Ident: {
                Token t = take();
                ExprNode node;
                node.pos = t.pos;
                if (t.text == "i") {
                    node.kind = ExprNode::Kind::Literal;
                    node.value = Scalar::i();
                } else {
                    node.kind = ExprNode::Kind::Generator;
                    node.name = t.text;
                }
                return node;
            }
            case Token::Kind::LParen: {
                Token open = take();
                ExprNode node = expr();
                if (!accept(Token::Kind::RParen))
                    throw ParseError("unbalanced '(' opened", open.pos);
                return node;
            }
            case Token::Kind::End:
                throw ParseError("unexpected end of input", token.pos);
            default:
                throw ParseError("unexpected token '" + token.text + "'", token.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t next_ = 0;
};

} // namespace

ExprNode parse_expr_ast(std::string_view text) {
    return Parser(text).run();
}

Poly lower_expr(const ExprNode& node, const Alphabet& alphabet) {
    switch (node.kind) {
        case ExprNode::Kind::Literal:
            return Poly(node.value);
        case ExprNode::Kind::Generator: {
            auto g = alphabet.index_of(node.name);
            if (!g) throw ParseError("unknown generator '" + node.name + "'", node.pos);
            return Poly::gen(*g);
        }
        case ExprNode::Kind::Sum:
            return lower_expr(node.children[0], alphabet) +
                   lower_expr(node.children[1], alphabet);
        case ExprNode::Kind::Difference:
            return lower_expr(node.children[0], alphabet) -
                   lower_expr(node.children[1], alphabet);
        case ExprNode::Kind::Product:
            return lower_expr(node.children[0], alphabet) *
                   lower_expr(node.children[1], alphabet);
        case ExprNode::Kind::Quotient: {
            Poly divisor = lower_expr(node.children[1], alphabet);
            if (!divisor.is_zero() && divisor.term_count() == 1 &&
                divisor.terms().begin()->first.empty()) {
                Scalar c = divisor.terms().begin()->second;
                return lower_expr(node.children[0], alphabet) * c.inverse();
            }
            if (divisor.is_zero()) throw ParseError("division by zero", node.pos);
            throw ParseError("division by a non-scalar expression", node.pos);
        }
        case ExprNode::Kind::Power: {
            Poly base = lower_expr(node.children[0], alphabet);
            Poly out(1);
            for (unsigned long k = 0; k < node.exponent; ++k) out = out * base;
            return out;
        }
        case ExprNode::Kind::Negation:
            return -lower_expr(node.children[0], alphabet);
    }
    throw Error("corrupt expression tree");
}

Poly parse_expr(std::string_view text, const Alphabet& alphabet) {
    return lower_expr(parse_expr_ast(text), alphabet);
}

} // namespace fpalg
