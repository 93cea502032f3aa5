#include "wzpi/term_parser.hpp"

#include "wzpi/errors.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace wzpi {

namespace {

enum class Tok { Int, Ident, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        // U+2212 MINUS SIGN reads as '-'.
        if (src.substr(i, 3) == "\xE2\x88\x92") {
            out.push_back({Tok::Punct, "-", line, col});
            i += 3;
            ++col;
            continue;
        }
        const int start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Int, std::string(src.substr(i, j - i)), line, start_col});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, start_col});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::string_view("()*/^+-,:{}").find(c) != std::string_view::npos) {
            out.push_back({Tok::Punct, std::string(1, c), line, col});
            ++col;
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

/// Factors collected while parsing a (sub-)expression.
struct Product {
    BigRational constant = 1;
    std::vector<PochFactor> poch;
    std::vector<ExpFactor> exps;
    std::vector<PolyFactor> polys;

    void absorb(const Product& o) {
        constant *= o.constant;
        poch.insert(poch.end(), o.poch.begin(), o.poch.end());
        exps.insert(exps.end(), o.exps.begin(), o.exps.end());
        polys.insert(polys.end(), o.polys.begin(), o.polys.end());
    }
    bool is_constant() const { return poch.empty() && exps.empty() && polys.empty(); }
};

class Parser {
public:
    Parser(std::vector<Token> toks, TermVars vars) : toks_(std::move(toks)), vars_(std::move(vars)) {}

    const TermVars& vars() const { return vars_; }

    void header(const TermVars& fallback) {
        if (!(peek().kind == Tok::Ident && peek().text == "vars" && peek(1).text == ":")) {
            vars_ = fallback;
            return;
        }
        pos_ += 2;
        TermVars v;
        v.rec.reset();
        v.has_z = false;
        v.sum = expect_ident("summation variable").text;
        if (v.sum == "z") fail("z cannot be the summation variable", toks_[pos_ - 1]);
        while (accept(",")) {
            const Token& t = expect_ident("variable name");
            if (t.text == "z") v.has_z = true;
            else if (v.rec || t.text == v.sum) fail("too many or repeated variables in header", t);
            else v.rec = t.text;
        }
        vars_ = v;
    }

    Product expr() {
        Product p = factor();
        while (true) {
            if (accept("*")) p.absorb(factor());
            else if (accept("/")) p.absorb(invert(factor(), toks_[pos_ - 1]));
            else break;
        }
        return p;
    }

    Polynomial polyform() {
        Polynomial acc;
        bool negate = false;
        if (accept("-")) negate = true;
        else accept("+");
        while (true) {
            Polynomial term = poly_term();
            acc += negate ? -term : term;
            if (accept("+")) negate = false;
            else if (accept("-")) negate = true;
            else break;
        }
        return acc;
    }

    void expect_end() {
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    bool accept(std::string_view punct) {
        if (peek().kind == Tok::Punct && peek().text == punct) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(std::string_view punct) {
        if (!accept(punct)) fail("expected '" + std::string(punct) + "'", peek());
    }
    const Token& expect_ident(const char* what) {
        if (peek().kind != Tok::Ident) fail(std::string("expected ") + what, peek());
        return toks_[pos_++];
    }
    [[noreturn]] static void fail(const std::string& msg, const Token& at) {
        throw ParseError(msg, at.line, at.column);
    }

    Var variable(const Token& t) const {
        const auto v = vars_.lookup(t.text);
        if (!v) fail("undeclared variable '" + t.text + "'", t);
        return *v;
    }

    BigRational rational() {
        if (peek().kind != Tok::Int) fail("expected a number", peek());
        BigInt num(toks_[pos_++].text);
        if (peek().text == "/" && peek(1).kind == Tok::Int) {
            pos_ += 1;
            const Token& d = toks_[pos_++];
            BigInt den(d.text);
            if (den == 0) fail("zero denominator", d);
            return rational(std::move(num), std::move(den));
        }
        return BigRational(num);
    }
    static BigRational rational(BigInt num, BigInt den) {
        BigRational r(num, den);
        r.canonicalize();
        return r;
    }

    // factors: rational or var [^INT] [/INT], joined by *
    Polynomial poly_term() {
        Polynomial term(1);
        bool need_factor = true;
        while (need_factor) {
            if (peek().kind == Tok::Int) {
                term *= rational();
            } else if (peek().kind == Tok::Ident && peek().text != "poch") {
                const Token& t = toks_[pos_++];
                Polynomial v = Polynomial::variable(variable(t));
                if (accept("^")) {
                    if (peek().kind != Tok::Int) fail("expected integer power", peek());
                    v = v.pow(static_cast<unsigned>(std::stoul(toks_[pos_++].text)));
                }
                term *= v;
                while (peek().text == "/" && peek(1).kind == Tok::Int) {
                    const Token& d = toks_[pos_ + 1];
                    BigInt den(d.text);
                    if (den == 0) fail("zero denominator", d);
                    pos_ += 2;
                    term *= rational(1, std::move(den));
                }
            } else {
                fail("expected a polynomial term", peek());
            }
            need_factor = peek().text == "*" && (peek(1).kind == Tok::Int || (peek(1).kind == Tok::Ident && peek(1).text != "poch"));
            if (need_factor) ++pos_;
        }
        return term;
    }

    Polynomial exponent() {
        const Token& at = peek();
        Polynomial e;
        if (accept("(") || accept("{")) {
            const bool brace = toks_[pos_ - 1].text == "{";
            e = polyform();
            expect(brace ? "}" : ")");
        } else {
            const bool neg = accept("-");
            if (peek().kind == Tok::Int) e = Polynomial(BigRational(BigInt(toks_[pos_++].text)));
            else if (peek().kind == Tok::Ident) e = Polynomial::variable(variable(toks_[pos_++]));
            else fail("expected an exponent", peek());
            if (neg) e = -e;
        }
        const VarMask discrete = vars_.discrete();
        if (e.total_degree() > 1 || (e.vars() & static_cast<VarMask>(~discrete)) != 0)
            fail("exponent must be linear in the discrete variables", at);
        for (const auto& [m, c] : e.terms())
            if (!is_integer(c)) fail("exponent must have integer coefficients", at);
        return e;
    }

    static Product invert(Product p, const Token& at) {
        if (p.constant == 0) fail("division by zero", at);
        p.constant = 1 / p.constant;
        for (auto& f : p.poch) f.power = -f.power;
        for (auto& f : p.exps) f.exponent = -f.exponent;
        for (auto& f : p.polys) f.power = -f.power;
        return p;
    }

    static Product raise(Product p, const Polynomial& e, const Token& at) {
        if (e.is_constant()) {
            const BigRational ev = e.constant_value();
            if (!ev.get_num().fits_slong_p()) fail("exponent too large", at);
            const long n = ev.get_num().get_si();
            if (n < 0 && p.constant == 0) fail("zero raised to a negative power", at);
            BigRational c = 1;
            const BigRational b = n >= 0 ? p.constant : 1 / p.constant;
            for (long i = 0; i < std::labs(n); ++i) c *= b;
            p.constant = c;
            for (auto& f : p.poch) f.power *= static_cast<int>(n);
            for (auto& f : p.exps) f.exponent *= BigRational(n);
            for (auto& f : p.polys) f.power *= static_cast<int>(n);
            return p;
        }
        if (!p.poch.empty()) fail("Pochhammer factor raised to a symbolic power is not hypergeometric", at);
        Product out;
        if (p.constant == 0) fail("zero base in exponential factor", at);
        if (p.constant != 1) out.exps.push_back({Polynomial(p.constant), e});
        for (const auto& f : p.exps) {
            if (!f.exponent.is_constant()) fail("nested symbolic exponents are not hypergeometric", at);
            out.exps.push_back({f.base, e * f.exponent});
        }
        for (const auto& f : p.polys) {
            if (f.value.involves(Var::N) || f.value.involves(Var::K))
                fail("polynomial in a discrete variable raised to a symbolic power is not hypergeometric", at);
            out.exps.push_back({f.value, e * Polynomial(BigRational(f.power))});
        }
        return out;
    }

    Product factor() {
        if (accept("-")) {
            Product p = factor();
            p.constant = -p.constant;
            return p;
        }
        const Token& at = peek();
        Product p = atom();
        if (accept("^")) p = raise(std::move(p), exponent(), at);
        return p;
    }

    static Product from_polynomial(const Polynomial& poly) {
        Product p;
        if (poly.is_constant()) p.constant = poly.constant_value();
        else p.polys.push_back({poly, 1});
        return p;
    }

    Product atom() {
        const Token& t = peek();
        if (t.kind == Tok::Int) return from_polynomial(Polynomial(rational()));
        if (t.kind == Tok::Ident && t.text == "poch") {
            ++pos_;
            expect("(");
            const Token& base_at = peek();
            const Polynomial base = polyform();
            expect(",");
            const Token& run_tok = expect_ident("Pochhammer index");
            const Var run = variable(run_tok);
            if (run == Var::Z) fail("Pochhammer index must be a discrete variable", run_tok);
            expect(")");
            if (base.total_degree() > 1) fail("Pochhammer base must be linear", base_at);
            if (base.involves(run)) fail("Pochhammer base involves its own index", base_at);
            Product p;
            p.poch.push_back({base, run, 1});
            return p;
        }
        if (t.kind == Tok::Ident) {
            ++pos_;
            return from_polynomial(Polynomial::variable(variable(t)));
        }
        if (accept("(")) {
            // A polynomial group if it parses as one, otherwise a sub-expression.
            const std::size_t save = pos_;
            try {
                Polynomial poly = polyform();
                if (accept(")")) return from_polynomial(poly);
            } catch (const ParseError&) {
            }
            pos_ = save;
            Product p = expr();
            expect(")");
            return p;
        }
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    TermVars vars_;
};

} // namespace

HyperTerm parse_term(std::string_view text, const TermVars& fallback) {
    Parser parser(tokenize(text), fallback);
    parser.header(fallback);
    Product p = parser.expr();
    parser.expect_end();
    try {
        return HyperTerm(parser.vars(), p.constant, std::move(p.poch), std::move(p.exps), std::move(p.polys));
    } catch (const UsageError& e) {
        throw ParseError(e.what(), 1, 1);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

Polynomial parse_polynomial(std::string_view text, const TermVars& vars) {
    Parser parser(tokenize(text), vars);
    Polynomial p = parser.polyform();
    parser.expect_end();
    return p;
}

} // namespace wzpi
