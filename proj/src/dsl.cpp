#include "tamefield/dsl.hpp"
#include "tamefield/error.hpp"

#include <cctype>

namespace tamefield {

namespace {

enum class Tok { Int, Ident, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto step = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
                ++col;
            }
        }
    };
    while (true) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) step(1);
        const int l = line, c = col;
        if (i >= s.size()) {
            out.push_back({Tok::End, "end of input", l, c});
            return out;
        }
        const unsigned char ch = static_cast<unsigned char>(s[i]);
        std::size_t j = i;
        if (std::isdigit(ch)) {
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Int, s.substr(i, j - i), l, c});
        } else if (std::isalpha(ch) || ch == '_') {
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), l, c});
        } else if (s.compare(i, 2, "×") == 0) {
            j = i + 2;
            out.push_back({Tok::Ident, "x", l, c});
        } else if (std::string("()[]+-*/^,").find(static_cast<char>(ch)) != std::string::npos) {
            j = i + 1;
            out.push_back({Tok::Sym, s.substr(i, 1), l, c});
        } else {
            throw ParseError(ErrorKind::SyntaxError, std::string("unexpected character '") + s[i] + "'", l, c);
        }
        step(j - i);
    }
}

// Sparse polynomial in named variables with coefficients in K.
using Mono = std::map<std::string, long>;
using Expr = std::map<Mono, Element>;

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    const Token& peek() const { return toks_[pos_]; }
    bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
    bool at_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const {
        throw ParseError(ErrorKind::SyntaxError, msg, at.line, at.col);
    }
    [[noreturn]] void semantic(const std::string& msg, const Token& at) const {
        throw ParseError(ErrorKind::SemanticError, msg, at.line, at.col);
    }
    Token expect_sym(const char* s) {
        if (!at_sym(s)) fail(std::string("expected '") + s + "', found '" + peek().text + "'", peek());
        return take();
    }
    Token expect_ident(const char* s) {
        if (!at_ident(s)) fail(std::string("expected '") + s + "', found '" + peek().text + "'", peek());
        return take();
    }
    Token expect_int() {
        if (peek().kind != Tok::Int) fail("expected an integer, found '" + peek().text + "'", peek());
        return take();
    }
    void finish() {
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
    }

    static std::int64_t small_int(const Token& t, const Parser& p) {
        if (t.text.size() > 12) p.semantic("integer " + t.text + " is too large", t);
        return std::stoll(t.text);
    }

    // ------------------------------------------------------------ groups

    Atom atom() {
        const Token t = peek();
        if (at_ident("Q")) {
            take();
            return Atom::rationals();
        }
        expect_ident("Z");
        if (!at_sym("[")) return Atom::integers();
        take();
        const Token one = expect_int();
        if (one.text != "1") fail("expected 'Z[1/n]'", one);
        expect_sym("/");
        const Token n = expect_int();
        expect_sym("]");
        const std::int64_t v = small_int(n, *this);
        if (v < 2) semantic("Z[1/n] needs n >= 2", n);
        (void)t;
        return Atom::localized(prime_factors(v));
    }

    OGroupDesc group() {
        if (peek().kind == Tok::Int && peek().text == "0") {
            take();
            return OGroupDesc();
        }
        std::vector<Atom> atoms{atom()};
        while (at_ident("x")) {
            take();
            atoms.push_back(atom());
        }
        return OGroupDesc(std::move(atoms));
    }

    // ------------------------------------------------------------ fields

    ValuedField field(const Rational& prec) {
        ResidueField k = ResidueField::rationals();
        if (at_ident("Q")) {
            take();
        } else {
            expect_ident("F");
            expect_sym("(");
            const Token q = expect_int();
            expect_sym(")");
            std::int64_t p = 0;
            int n = 0;
            if (!prime_power(small_int(q, *this), p, n) || n < 1)
                semantic(q.text + " is not a prime power", q);
            if (n > 12) semantic("F(" + q.text + ") is too large", q);
            k = fq_make(p, n);
        }
        expect_sym("(");
        if (at_sym("(")) {
            take();
            expect_ident("t");
            expect_sym("^");
            const Token gt = peek();
            OGroupDesc g = group();
            expect_sym(")");
            expect_sym(")");
            if (g.trivial()) semantic("Hahn fields need a nontrivial value group", gt);
            return ValuedField(HahnField(k, g, OGroupElem::unit(g.rank(), 0) * prec));
        }
        const Token tt = expect_ident("t");
        if (at_sym(")")) {
            take();
            return ValuedField(RatFuncField(k, 0));
        }
        if (!k.is_finite()) semantic("radical towers need residue characteristic p", tt);
        expect_sym("^");
        expect_sym("(");
        const Token one = expect_int();
        if (one.text != "1") fail("expected 't^(1/p^k)'", one);
        expect_sym("/");
        const Token pt = expect_int();
        if (small_int(pt, *this) != k.characteristic())
            semantic("root tower must use the characteristic " + std::to_string(k.characteristic()), pt);
        std::optional<int> level = 1;
        if (at_sym("^")) {
            take();
            if (at_ident("inf")) {
                take();
                level = std::nullopt;
            } else {
                const Token lv = expect_int();
                const std::int64_t v = small_int(lv, *this);
                if (v > 60) semantic("tower level " + lv.text + " is too large", lv);
                level = static_cast<int>(v);
            }
        }
        expect_sym(")");
        expect_sym(")");
        return ValuedField(RatFuncField(k, level));
    }

    // ------------------------------------------------------------ expressions

    enum class Mode { Element, Poly, MPoly };

    const ValuedField* K_ = nullptr;
    Mode mode_ = Mode::Element;

    Expr constant(const Element& c) const {
        Expr e;
        if (!(K_->is_zero(c) && K_->is_exact(c))) e[Mono{}] = c;
        return e;
    }
    Expr add(const Expr& a, const Expr& b) const {
        Expr r = a;
        for (const auto& [m, c] : b) {
            auto it = r.find(m);
            if (it == r.end()) {
                r[m] = c;
                continue;
            }
            it->second = K_->add(it->second, c);
            if (K_->is_zero(it->second) && K_->is_exact(it->second)) r.erase(it);
        }
        return r;
    }
    Expr neg(const Expr& a) const {
        Expr r;
        for (const auto& [m, c] : a) r[m] = K_->neg(c);
        return r;
    }
    Expr mul(const Expr& a, const Expr& b) const {
        Expr r;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                Mono m = ma;
                for (const auto& [v, k] : mb) {
                    m[v] += k;
                    if (m[v] == 0) m.erase(v);
                }
                r = add(r, Expr{{m, K_->mul(ca, cb)}});
            }
        return r;
    }
    // Inverse of a single term c * x^mu.
    Expr inverse(const Expr& a, const Token& at) const {
        if (a.size() != 1) semantic("can only divide by a single term", at);
        const auto& [m, c] = *a.begin();
        if (K_->is_zero(c)) throw ParseError(ErrorKind::SemanticError, "division by zero", at.line, at.col);
        Mono inv;
        for (const auto& [v, k] : m) {
            if (!laurent(v)) semantic("cannot divide by " + v, at);
            inv[v] = -k;
        }
        return Expr{{inv, K_->inv(c)}};
    }
    bool laurent(const std::string& v) const { return mode_ == Mode::MPoly && v[0] == 'x'; }

    Element guarded(const std::function<Element()>& f, const Token& at) const {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(ErrorKind::SemanticError, e.what(), at.line, at.col);
        }
    }

    Rational signed_rational() {
        bool neg = false;
        if (at_sym("-")) {
            take();
            neg = true;
        }
        Rational q(Integer(expect_int().text));
        if (at_sym("/")) {
            take();
            const Token d = expect_int();
            Integer den(d.text);
            if (den == 0) semantic("zero denominator", d);
            q /= Rational(den);
        }
        return neg ? Rational(-q) : q;
    }

    OGroupElem t_exponent() {
        std::vector<Rational> coords;
        if (at_sym("(")) {
            take();
            coords.push_back(signed_rational());
            while (at_sym(",")) {
                take();
                coords.push_back(signed_rational());
            }
            expect_sym(")");
        } else {
            bool neg = false;
            if (at_sym("-")) {
                take();
                neg = true;
            }
            Rational q(Integer(expect_int().text));
            coords.push_back(neg ? Rational(-q) : q);
        }
        return OGroupElem(coords);
    }

    long int_exponent() {
        bool paren = false, neg = false;
        if (at_sym("(")) {
            take();
            paren = true;
        }
        if (at_sym("-")) {
            take();
            neg = true;
        }
        const Token n = expect_int();
        if (paren) expect_sym(")");
        const long v = static_cast<long>(small_int(n, *this));
        return neg ? -v : v;
    }

    Element integer(const Token& t) const {
        const auto& k = K_->residue_field();
        Integer z(t.text);
        if (!k.is_finite()) return K_->constant(k.from_rational(Rational(z)));
        Integer r = z % Integer(k.characteristic());
        return K_->from_int(r.get_si());
    }

    Expr primary() {
        const Token t = peek();
        if (at_sym("(")) {
            take();
            Expr e = expr();
            expect_sym(")");
            return e;
        }
        if (t.kind == Tok::Int) {
            take();
            return constant(integer(t));
        }
        if (t.kind != Tok::Ident) fail("expected a term, found '" + t.text + "'", t);
        take();
        const std::string& name = t.text;
        if (name == "t") {
            OGroupElem e = OGroupElem::unit(K_->rank(), 0);
            if (at_sym("^")) {
                take();
                e = t_exponent();
            }
            if (e.rank() != K_->rank())
                semantic("exponent " + e.to_string() + " does not have rank " + std::to_string(K_->rank()), t);
            return constant(guarded([&] { return K_->monomial(K_->residue_field().one(), e); }, t));
        }
        if (name == "g") {
            const auto& k = K_->residue_field();
            if (!k.is_finite() || k.size() == k.characteristic()) semantic("g names the generator of F(p^n), n > 1", t);
            std::vector<std::int64_t> c(static_cast<std::size_t>(k.modulus().size() - 1), 0);
            c[1] = 1;
            return constant(K_->constant(ResidueElem(c)));
        }
        if (name == "O") {
            if (!K_->is_hahn()) semantic("O(...) needs a Hahn series field", t);
            expect_sym("(");
            const Token at = peek();
            Expr inner = expr();
            expect_sym(")");
            if (inner.size() != 1 || !inner.begin()->first.empty()) semantic("O(...) takes t^e", at);
            const auto& h = std::get<HahnSeries>(inner.begin()->second);
            if (h.terms().size() != 1 || !h.is_exact() || !K_->residue_field().is_one(h.terms()[0].coeff))
                semantic("O(...) takes t^e", at);
            Element z = K_->hahn().zero_to(h.terms()[0].exp);
            Expr e;
            e[Mono{}] = z;
            return e;
        }
        if (name == "X" && mode_ == Mode::Poly) return Expr{{Mono{{"X", 1}}, K_->one()}};
        if (mode_ == Mode::MPoly && name.size() >= 2 && (name[0] == 'x' || name[0] == 'y') &&
            std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
            name[1] != '0')
            return Expr{{Mono{{name, 1}}, K_->one()}};
        semantic("unknown name '" + name + "'", t);
    }

    Expr power() {
        Expr base = primary();
        if (!at_sym("^")) return base;
        const Token caret = take();
        const long n = int_exponent();
        if (n < 0) {
            base = inverse(base, caret);
            return power_of(base, -n);
        }
        return power_of(base, n);
    }
    Expr power_of(const Expr& base, long n) const {
        Expr r = constant(K_->one());
        for (long i = 0; i < n; ++i) r = mul(r, base);
        return r;
    }

    Expr unary() {
        if (at_sym("-")) {
            take();
            return neg(unary());
        }
        return power();
    }

    Expr term() {
        Expr acc = unary();
        while (at_sym("*") || at_sym("/")) {
            const Token op = take();
            Expr rhs = unary();
            acc = op.text == "*" ? mul(acc, rhs) : mul(acc, inverse(rhs, op));
        }
        return acc;
    }

    Expr expr() {
        Expr acc = term();
        while (at_sym("+") || at_sym("-")) {
            const bool minus = take().text == "-";
            Expr rhs = term();
            acc = add(acc, minus ? neg(rhs) : rhs);
        }
        return acc;
    }

    Token first() const { return toks_.front(); }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

long var_index(const std::string& name) { return std::stol(name.substr(1)); }

}  // namespace

ValuedField parse_field(const std::string& text, const Rational& prec) {
    Parser p(text);
    ValuedField K = p.field(prec);
    p.finish();
    return K;
}

OGroupDesc parse_group(const std::string& text) {
    Parser p(text);
    OGroupDesc g = p.group();
    p.finish();
    return g;
}

Element parse_element(const ValuedField& K, const std::string& text) {
    Parser p(text);
    p.K_ = &K;
    Expr e = p.expr();
    p.finish();
    if (e.empty()) return K.zero();
    if (e.size() != 1 || !e.begin()->first.empty()) p.semantic("not an element of " + K.name(), p.first());
    return e.begin()->second;
}

PolyOverK parse_poly(const ValuedField& K, const std::string& text) {
    Parser p(text);
    p.K_ = &K;
    p.mode_ = Parser::Mode::Poly;
    Expr e = p.expr();
    p.finish();
    long deg = -1;
    for (const auto& [m, c] : e) {
        const long k = m.empty() ? 0 : m.begin()->second;
        if (k < 0) p.semantic("negative power of X", p.first());
        deg = std::max(deg, k);
    }
    std::vector<Element> cs(static_cast<std::size_t>(deg + 1), K.zero());
    for (const auto& [m, c] : e) cs[static_cast<std::size_t>(m.empty() ? 0 : m.begin()->second)] = c;
    return kp_make(K, cs);
}

MPoly parse_mpoly(const ValuedField& K, const std::string& text, int nx, int ny) {
    Parser p(text);
    p.K_ = &K;
    p.mode_ = Parser::Mode::MPoly;
    Expr e = p.expr();
    p.finish();
    long mx = 0, my = 0;
    for (const auto& [m, c] : e)
        for (const auto& [v, k] : m) {
            if (v[0] == 'x')
                mx = std::max(mx, var_index(v));
            else
                my = std::max(my, var_index(v));
            if (v[0] == 'y' && k < 0) p.semantic("negative power of " + v, p.first());
        }
    if (nx < 0) nx = static_cast<int>(mx);
    if (ny < 0) ny = static_cast<int>(my);
    if (mx > nx || my > ny) p.semantic("variable index beyond x" + std::to_string(nx) + ", y" + std::to_string(ny), p.first());
    std::vector<std::pair<MonoExp, Element>> terms;
    for (const auto& [m, c] : e) {
        MonoExp ex(static_cast<std::size_t>(nx + ny), 0);
        for (const auto& [v, k] : m)
            ex[static_cast<std::size_t>(v[0] == 'x' ? var_index(v) - 1 : nx + var_index(v) - 1)] = k;
        terms.emplace_back(ex, c);
    }
    return mpoly_make(K, nx, ny, terms);
}

ParsedValue parse_input(InputKind kind, const std::string& text, const ValuedField* K) {
    auto need = [&]() -> const ValuedField& {
        if (!K) throw Error(ErrorKind::PreconditionFailed, "this input kind needs a field");
        return *K;
    };
    switch (kind) {
        case InputKind::Field: return parse_field(text);
        case InputKind::Group: return parse_group(text);
        case InputKind::Poly: return parse_poly(need(), text);
        case InputKind::Element: return parse_element(need(), text);
        case InputKind::MPoly: return parse_mpoly(need(), text);
        case InputKind::Formula: return parse_formula(text);
    }
    throw Error(ErrorKind::PreconditionFailed, "unknown input kind");
}

std::string print_value(const ParsedValue& v, const ValuedField* K) {
    auto need = [&]() -> const ValuedField& {
        if (!K) throw Error(ErrorKind::PreconditionFailed, "printing this value needs its field");
        return *K;
    };
    switch (v.index()) {
        case 0: return std::get<ValuedField>(v).name();
        case 1: return std::get<OGroupDesc>(v).to_string();
        case 2: return kp_to_string(need(), std::get<PolyOverK>(v));
        case 3: return need().to_string(std::get<Element>(v));
        case 4: return mpoly_to_string(need(), std::get<MPoly>(v));
        case 5: return to_string(std::get<FormulaPtr>(v));
    }
    return "?";
}

InputKind input_kind_from_string(const std::string& name) {
    if (name == "field") return InputKind::Field;
    if (name == "group") return InputKind::Group;
    if (name == "poly") return InputKind::Poly;
    if (name == "element") return InputKind::Element;
    if (name == "mpoly") return InputKind::MPoly;
    if (name == "formula") return InputKind::Formula;
    throw Error(ErrorKind::PreconditionFailed, "unknown input kind '" + name + "'");
}

}  // namespace tamefield
