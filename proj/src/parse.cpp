#include "gl2skein/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace gl2skein {

namespace {

enum class TokenKind { number, ident, plus, minus, star, caret, slash, lparen, rparen, comma, end };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t position;
};

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < input.size()) {
        char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            out.push_back({TokenKind::number, input.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < input.size() && std::isalpha(static_cast<unsigned char>(input[i]))) ++i;
            out.push_back({TokenKind::ident, input.substr(start, i - start), start});
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+': kind = TokenKind::plus; break;
            case '-': kind = TokenKind::minus; break;
            case '*': kind = TokenKind::star; break;
            case '^': kind = TokenKind::caret; break;
            case '/': kind = TokenKind::slash; break;
            case '(': kind = TokenKind::lparen; break;
            case ')': kind = TokenKind::rparen; break;
            case ',': kind = TokenKind::comma; break;
            default:
                throw ParseError(start, "a valid token, found '" + std::string(1, c) + "'");
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({TokenKind::end, "", input.size()});
    return out;
}

enum class Sort { scalar, torus, annulus };

// Sort-tagged intermediate value; scalars promote into either algebra.
struct Value {
    Sort sort = Sort::scalar;
    Scalar scalar = Scalar(0);
    TorusElement torus;
    AnnulusElement annulus;

    static Value of(const Scalar& s) {
        Value v;
        v.scalar = s;
        return v;
    }
    static Value of(const TorusElement& e) {
        Value v;
        v.sort = Sort::torus;
        v.torus = e;
        return v;
    }
    static Value of(const AnnulusElement& e) {
        Value v;
        v.sort = Sort::annulus;
        v.annulus = e;
        return v;
    }
};

constexpr int kMaxDepth = 200;

class Parser {
public:
    explicit Parser(const std::string& input) : tokens_(tokenize(input)) {}

    Value parse_expression_all() {
        Value v = parse_expr();
        expect(TokenKind::end, "end of input");
        return v;
    }

    std::vector<std::pair<Value, std::optional<Value>>> parse_lens_all() {
        std::vector<std::pair<Value, std::optional<Value>>> out;
        bool negate = accept(TokenKind::minus);
        auto [left, right] = parse_ltens();
        if (negate) left = negate_value(left);
        out.emplace_back(left, right);
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            bool minus = next().kind == TokenKind::minus;
            auto [l2, r2] = parse_ltens();
            if (minus) l2 = negate_value(l2);
            out.emplace_back(l2, r2);
        }
        expect(TokenKind::end, "end of input");
        return out;
    }

    TorusElement to_torus(const Value& v) {
        if (v.sort == Sort::annulus) {
            throw SortError("annulus atoms cannot appear in a torus expression");
        }
        return v.sort == Sort::torus ? v.torus : v.scalar * TorusElement::identity();
    }

    AnnulusElement to_annulus(const Value& v) {
        if (v.sort == Sort::torus) {
            throw SortError("torus atoms cannot appear in an annulus expression");
        }
        return v.sort == Sort::annulus ? v.annulus : v.scalar * AnnulusElement::identity();
    }

private:
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    int depth_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = index_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& next() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }
    bool accept(TokenKind kind) {
        if (peek().kind != kind) return false;
        next();
        return true;
    }
    void expect(TokenKind kind, const std::string& what) {
        if (!accept(kind)) throw ParseError(peek().position, what);
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(peek().position, expected);
    }

    long parse_long(const std::string& text, std::size_t position, bool negative) {
        long value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw ParseError(position, "an integer within range");
        }
        return negative ? -value : value;
    }

    long parse_signed_int() {
        bool negative = false;
        if (accept(TokenKind::minus)) {
            negative = true;
        } else {
            accept(TokenKind::plus);
        }
        const Token& tok = peek();
        expect(TokenKind::number, "an integer");
        return parse_long(tok.text, tok.position, negative);
    }

    Value parse_expr() {
        if (++depth_ > kMaxDepth) throw ParseError(peek().position, "shallower nesting");
        bool negate = accept(TokenKind::minus);
        Value v = parse_term();
        if (negate) v = negate_value(v);
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            bool minus = next().kind == TokenKind::minus;
            Value rhs = parse_term();
            v = combine_add(v, minus ? negate_value(rhs) : rhs);
        }
        --depth_;
        return v;
    }

    Value parse_term() {
        Value v = parse_factor();
        while (accept(TokenKind::star)) {
            v = combine_mul(v, parse_factor());
        }
        return v;
    }

    Value parse_factor() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokenKind::number: {
                next();
                long numerator = parse_long(tok.text, tok.position, false);
                if (accept(TokenKind::slash)) {
                    const Token& den = peek();
                    expect(TokenKind::number, "a denominator");
                    long d = parse_long(den.text, den.position, false);
                    if (d == 0) throw ParseError(den.position, "a nonzero denominator");
                    return Value::of(Scalar(Rational(numerator, d)));
                }
                return Value::of(Scalar(numerator));
            }
            case TokenKind::lparen: {
                next();
                Value v = parse_expr();
                expect(TokenKind::rparen, "')'");
                return v;
            }
            case TokenKind::ident:
                return parse_atom();
            default:
                fail("a number, 't', an atom, or '('");
        }
    }

    std::vector<long> parse_args(std::size_t arity) {
        expect(TokenKind::lparen, "'('");
        std::vector<long> args;
        args.push_back(parse_signed_int());
        while (args.size() < arity) {
            expect(TokenKind::comma, "','");
            args.push_back(parse_signed_int());
        }
        expect(TokenKind::rparen, "')'");
        return args;
    }

    Value parse_atom() {
        const Token& tok = next();
        const std::string& name = tok.text;
        if (name == "t") {
            long e = 1;
            if (accept(TokenKind::caret)) e = parse_signed_int();
            return Value::of(Scalar::t_pow(e));
        }
        if (name == "T") {
            auto a = parse_args(2);
            return Value::of(t_curve(a[0], a[1]));
        }
        if (name == "W") {
            auto a = parse_args(2);
            return Value::of(wedge(a[0], a[1]));
        }
        if (name == "c") {
            auto a = parse_args(1);
            return Value::of(core(a[0]));
        }
        if (name == "w") {
            auto a = parse_args(1);
            return Value::of(wedge1(a[0]));
        }
        if (name == "xT") {
            auto a = parse_args(1);
            return Value::of(t_core(a[0]));
        }
        if (name == "x") {
            auto a = parse_args(2);
            return Value::of(x(a[0], a[1]));
        }
        if (name == "y") {
            auto a = parse_args(2);
            return Value::of(y(a[0], a[1]));
        }
        throw ParseError(tok.position, "an atom name (t, T, W, c, w, xT, x, y)");
    }

    std::pair<Value, std::optional<Value>> parse_ltens() {
        Value left = parse_term();
        // "(x)" at product level separates the two tensor factors.
        if (peek().kind == TokenKind::lparen && peek(1).kind == TokenKind::ident &&
            peek(1).text == "x" && peek(2).kind == TokenKind::rparen) {
            next();
            next();
            next();
            Value right = parse_term();
            return {left, right};
        }
        return {left, std::nullopt};
    }

    static Value negate_value(const Value& v) {
        Value out = v;
        switch (v.sort) {
            case Sort::scalar: out.scalar = -v.scalar; break;
            case Sort::torus: out.torus = -v.torus; break;
            case Sort::annulus: out.annulus = -v.annulus; break;
        }
        return out;
    }

    Value combine_add(const Value& a, const Value& b) {
        if (a.sort == Sort::scalar && b.sort == Sort::scalar) {
            return Value::of(a.scalar + b.scalar);
        }
        if (a.sort == Sort::torus || b.sort == Sort::torus) {
            return Value::of(to_torus(a) + to_torus(b));
        }
        return Value::of(to_annulus(a) + to_annulus(b));
    }

    Value combine_mul(const Value& a, const Value& b) {
        if (a.sort == Sort::scalar && b.sort == Sort::scalar) {
            return Value::of(a.scalar * b.scalar);
        }
        if (a.sort == Sort::scalar) {
            if (b.sort == Sort::torus) return Value::of(a.scalar * b.torus);
            return Value::of(a.scalar * b.annulus);
        }
        if (b.sort == Sort::scalar) {
            if (a.sort == Sort::torus) return Value::of(b.scalar * a.torus);
            return Value::of(b.scalar * a.annulus);
        }
        if (a.sort != b.sort) {
            throw SortError("torus and annulus atoms mixed in one product");
        }
        if (a.sort == Sort::torus) return Value::of(mul(a.torus, b.torus));
        return Value::of(mul(a.annulus, b.annulus));
    }
};

// One printed summand: sign split off so sums join as " + " / " - ".
struct PrintedTerm {
    bool negative;
    std::string body;
};

PrintedTerm coefficient_term(const Scalar& c, const std::string& word) {
    if (word.empty()) {
        if (c.is_monomial()) {
            long e = c.min_exponent();
            Rational q = c.coefficient(e);
            bool neg = q < 0;
            Scalar mag = neg ? -c : c;
            return {neg, mag.to_string()};
        }
        return {false, "(" + c.to_string() + ")"};
    }
    if (c.is_one()) return {false, word};
    if (c == Scalar(-1)) return {true, word};
    if (c.is_monomial()) {
        long e = c.min_exponent();
        Rational q = c.coefficient(e);
        bool neg = q < 0;
        Scalar mag = neg ? -c : c;
        return {neg, mag.to_string() + "*" + word};
    }
    return {false, "(" + c.to_string() + ")*" + word};
}

std::string join_terms(const std::vector<PrintedTerm>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (first) {
            if (t.negative) os << '-';
        } else {
            os << (t.negative ? " - " : " + ");
        }
        os << t.body;
        first = false;
    }
    return os.str();
}

std::string torus_word_text(const TorusWord& w) {
    std::ostringstream os;
    if (w.has_t) os << "T(" << w.tm << "," << w.tn << ")";
    if (w.wr != 0 || w.ws != 0) {
        if (w.has_t) os << "*";
        os << "W(" << w.wr << "," << w.ws << ")";
    }
    return os.str();
}

std::string annulus_word_text(const AnnulusWord& w) {
    std::ostringstream os;
    if (w.n != 0) os << "c(" << w.n << ")";
    if (w.r != 0) {
        if (w.n != 0) os << "*";
        os << "w(" << w.r << ")";
    }
    return os.str();
}

}  // namespace

TorusElement parse_torus(const std::string& text) {
    Parser parser(text);
    Value v = parser.parse_expression_all();
    return parser.to_torus(v);
}

AnnulusElement parse_annulus(const std::string& text) {
    Parser parser(text);
    Value v = parser.parse_expression_all();
    return parser.to_annulus(v);
}

LensElement parse_lens(const std::string& text) {
    Parser parser(text);
    auto pairs = parser.parse_lens_all();
    LensElement out;
    AnnulusElement one = AnnulusElement::identity();
    for (const auto& [l, r] : pairs) {
        out.add_term(parser.to_annulus(l), r ? parser.to_annulus(*r) : one, Scalar(1));
    }
    return out;
}

std::string print_element(const TorusElement& e) {
    std::vector<PrintedTerm> terms;
    for (const auto& [w, c] : e.terms()) terms.push_back(coefficient_term(c, torus_word_text(w)));
    return join_terms(terms);
}

std::string print_element(const AnnulusElement& e) {
    std::vector<PrintedTerm> terms;
    for (const auto& [w, c] : e.terms()) {
        terms.push_back(coefficient_term(c, annulus_word_text(w)));
    }
    return join_terms(terms);
}

std::string print_element(const LensElement& e) {
    std::vector<PrintedTerm> terms;
    for (const auto& term : e.terms()) {
        AnnulusElement left = term.coeff * term.left;
        if (left.is_zero() || term.right.is_zero()) continue;
        std::string lhs = print_element(left);
        std::string rhs = print_element(term.right);
        bool wrap_left = left.terms().size() > 1 || lhs.front() == '-';
        bool wrap_right = term.right.terms().size() > 1 || rhs.front() == '-';
        std::string body = (wrap_left ? "(" + lhs + ")" : lhs) + " (x) " +
                           (wrap_right ? "(" + rhs + ")" : rhs);
        terms.push_back({false, body});
    }
    return join_terms(terms);
}

}  // namespace gl2skein
