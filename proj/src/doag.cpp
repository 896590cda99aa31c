#include "tamefield/doag.hpp"
#include "tamefield/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace tamefield {

// ---------------------------------------------------------------- terms

Rational LinTerm::coeff(const std::string& var) const {
    auto it = coeffs.find(var);
    return it == coeffs.end() ? Rational(0) : it->second;
}

LinTerm LinTerm::operator+(const LinTerm& o) const {
    LinTerm r = *this;
    for (const auto& [v, c] : o.coeffs) {
        Rational s = r.coeff(v) + c;
        if (s == 0)
            r.coeffs.erase(v);
        else
            r.coeffs[v] = s;
    }
    return r;
}

LinTerm LinTerm::operator-(const LinTerm& o) const { return *this + o * Rational(-1); }

LinTerm LinTerm::operator*(const Rational& k) const {
    LinTerm r;
    if (k == 0) return r;
    for (const auto& [v, c] : coeffs) r.coeffs[v] = c * k;
    return r;
}

namespace {

std::string sum_text(const std::vector<std::pair<std::string, Rational>>& parts) {
    std::string out;
    for (const auto& [v, c] : parts) {
        Rational a = abs(c);
        std::string mono = a == 1 ? v : to_string(a) + "*" + v;
        if (out.empty())
            out = c < 0 ? "-" + mono : mono;
        else
            out += (c < 0 ? " - " : " + ") + mono;
    }
    return out.empty() ? "0" : out;
}

// Positive multiple with coprime integer coefficients.
LinTerm primitive(const LinTerm& t) {
    if (t.is_zero()) return t;
    Integer den = 1, num = 0;
    for (const auto& [v, c] : t.coeffs) den = lcm(den, c.get_den());
    for (const auto& [v, c] : t.coeffs) {
        Integer n = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    return t * Rational(den, num);
}

}  // namespace

std::string to_string(const LinTerm& t) {
    std::vector<std::pair<std::string, Rational>> parts(t.coeffs.begin(), t.coeffs.end());
    return sum_text(parts);
}

// ---------------------------------------------------------------- formulas

FormulaPtr OGFormula::truth(bool v) {
    auto f = std::make_shared<OGFormula>();
    f->kind_ = v ? Kind::TRUE : Kind::FALSE;
    return f;
}

FormulaPtr OGFormula::eq(LinTerm t) {
    if (t.is_zero()) return truth(true);
    t = primitive(t);
    if (t.coeffs.begin()->second < 0) t = t * Rational(-1);
    auto f = std::make_shared<OGFormula>();
    f->kind_ = Kind::EQ;
    f->term_ = std::move(t);
    return f;
}

FormulaPtr OGFormula::lt(LinTerm t) {
    if (t.is_zero()) return truth(false);
    auto f = std::make_shared<OGFormula>();
    f->kind_ = Kind::LT;
    f->term_ = primitive(t);
    return f;
}

FormulaPtr OGFormula::negate(FormulaPtr a) {
    auto f = std::make_shared<OGFormula>();
    f->kind_ = Kind::NOT;
    f->children_ = {std::move(a)};
    return f;
}

FormulaPtr OGFormula::conj(std::vector<FormulaPtr> parts) {
    if (parts.empty()) return truth(true);
    if (parts.size() == 1) return parts[0];
    auto f = std::make_shared<OGFormula>();
    f->kind_ = Kind::AND;
    f->children_ = std::move(parts);
    return f;
}

FormulaPtr OGFormula::disj(std::vector<FormulaPtr> parts) {
    if (parts.empty()) return truth(false);
    if (parts.size() == 1) return parts[0];
    auto f = std::make_shared<OGFormula>();
    f->kind_ = Kind::OR;
    f->children_ = std::move(parts);
    return f;
}

FormulaPtr OGFormula::implies(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<OGFormula>();
    f->kind_ = Kind::IMPLIES;
    f->children_ = {std::move(a), std::move(b)};
    return f;
}

FormulaPtr OGFormula::forall(std::string var, FormulaPtr body) {
    auto f = std::make_shared<OGFormula>();
    f->kind_ = Kind::FORALL;
    f->var_ = std::move(var);
    f->children_ = {std::move(body)};
    return f;
}

FormulaPtr OGFormula::exists(std::string var, FormulaPtr body) {
    auto f = std::make_shared<OGFormula>();
    f->kind_ = Kind::EXISTS;
    f->var_ = std::move(var);
    f->children_ = {std::move(body)};
    return f;
}

bool OGFormula::quantifier_free() const {
    if (is_quantifier()) return false;
    return std::all_of(children_.begin(), children_.end(), [](const FormulaPtr& c) { return c->quantifier_free(); });
}

int OGFormula::quantifier_depth() const {
    int d = 0;
    for (const auto& c : children_) d = std::max(d, c->quantifier_depth());
    return d + (is_quantifier() ? 1 : 0);
}

std::set<std::string> OGFormula::free_vars() const {
    std::set<std::string> out;
    if (is_atom()) {
        for (const auto& [v, c] : term_.coeffs) out.insert(v);
        return out;
    }
    for (const auto& c : children_) {
        auto s = c->free_vars();
        out.insert(s.begin(), s.end());
    }
    if (is_quantifier()) out.erase(var_);
    return out;
}

bool OGFormula::operator==(const OGFormula& o) const {
    if (kind_ != o.kind_ || var_ != o.var_ || !(term_ == o.term_) || children_.size() != o.children_.size())
        return false;
    for (std::size_t i = 0; i < children_.size(); ++i)
        if (!(*children_[i] == *o.children_[i])) return false;
    return true;
}

// ---------------------------------------------------------------- printing

namespace {

std::string atom_text(const OGFormula& f) {
    std::vector<std::pair<std::string, Rational>> pos, neg;
    for (const auto& [v, c] : f.term().coeffs) (c > 0 ? pos : neg).emplace_back(v, c > 0 ? c : Rational(-c));
    const std::string rel = f.kind() == OGFormula::Kind::EQ ? " = " : " < ";
    if (pos.empty()) return sum_text(neg) + (f.kind() == OGFormula::Kind::EQ ? " = 0" : " > 0");
    return sum_text(pos) + rel + sum_text(neg);
}

std::string print(const FormulaPtr& f) {
    using K = OGFormula::Kind;
    const auto& ch = f->children();
    auto joined = [&](const char* op) {
        std::string s = "(";
        for (std::size_t i = 0; i < ch.size(); ++i) s += (i ? op : "") + print(ch[i]);
        return s + ")";
    };
    switch (f->kind()) {
        case K::TRUE: return "true";
        case K::FALSE: return "false";
        case K::EQ:
        case K::LT: return atom_text(*f);
        case K::NOT: return "!" + (ch[0]->is_atom() ? "(" + print(ch[0]) + ")" : print(ch[0]));
        case K::AND: return joined(" & ");
        case K::OR: return joined(" | ");
        case K::IMPLIES: return "(" + print(ch[0]) + " -> " + print(ch[1]) + ")";
        case K::FORALL:
        case K::EXISTS: {
            std::string body = ch[0]->is_atom() ? "(" + print(ch[0]) + ")" : print(ch[0]);
            return std::string(f->kind() == K::FORALL ? "forall " : "exists ") + f->var() + " " + body;
        }
    }
    return "?";
}

}  // namespace

std::string to_string(const FormulaPtr& f) { return print(f); }

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Ident, Int, Forall, Exists, Not, And, Or, Implies, LParen, RParen, Comma, Plus, Minus, Star, Rel, True, False, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            const int line = line_, col = col_;
            if (i_ >= s_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            Token t = next();
            t.line = line;
            t.col = col;
            out.push_back(t);
        }
    }

private:
    void advance(std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (s_[i_] == '\n') {
                ++line_;
                col_ = 1;
            } else if ((static_cast<unsigned char>(s_[i_]) & 0xC0) != 0x80) {
                ++col_;
            }
            ++i_;
        }
    }
    void skip_space() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance(1);
    }
    bool starts(const char* lit) const { return s_.compare(i_, std::char_traits<char>::length(lit), lit) == 0; }

    Token next() {
        static const std::vector<std::pair<const char*, std::pair<Tok, const char*>>> symbols = {
            {"->", {Tok::Implies, "->"}}, {"<=", {Tok::Rel, "<="}}, {">=", {Tok::Rel, ">="}},
            {"!=", {Tok::Rel, "!="}},     {"<", {Tok::Rel, "<"}},   {">", {Tok::Rel, ">"}},
            {"=", {Tok::Rel, "="}},       {"!", {Tok::Not, "!"}},   {"&", {Tok::And, "&"}},
            {"|", {Tok::Or, "|"}},        {"(", {Tok::LParen, "("}}, {")", {Tok::RParen, ")"}},
            {",", {Tok::Comma, ","}},     {"+", {Tok::Plus, "+"}},  {"-", {Tok::Minus, "-"}},
            {"*", {Tok::Star, "*"}},      {"∀", {Tok::Forall, "forall"}}, {"∃", {Tok::Exists, "exists"}},
            {"¬", {Tok::Not, "!"}},  {"∧", {Tok::And, "&"}}, {"∨", {Tok::Or, "|"}},
            {"→", {Tok::Implies, "->"}}, {"≤", {Tok::Rel, "<="}}, {"≥", {Tok::Rel, ">="}},
            {"≠", {Tok::Rel, "!="}},
        };
        for (const auto& [lit, tok] : symbols) {
            if (starts(lit)) {
                advance(std::char_traits<char>::length(lit));
                return {tok.first, tok.second, 0, 0};
            }
        }
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            std::string text = s_.substr(i_, j - i_);
            advance(j - i_);
            return {Tok::Int, text, 0, 0};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '\''))
                ++j;
            std::string text = s_.substr(i_, j - i_);
            advance(j - i_);
            if (text == "forall") return {Tok::Forall, text, 0, 0};
            if (text == "exists") return {Tok::Exists, text, 0, 0};
            if (text == "true") return {Tok::True, text, 0, 0};
            if (text == "false") return {Tok::False, text, 0, 0};
            return {Tok::Ident, text, 0, 0};
        }
        throw ParseError(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'", line_, col_);
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    FormulaPtr run() {
        FormulaPtr f = formula();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(ErrorKind::SyntaxError, msg, peek().line, peek().col);
    }
    Token expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        return take();
    }

    FormulaPtr formula() {
        FormulaPtr lhs = disjunction();
        if (peek().kind == Tok::Implies) {
            take();
            return OGFormula::implies(lhs, formula());
        }
        return lhs;
    }
    FormulaPtr disjunction() {
        std::vector<FormulaPtr> parts{conjunction()};
        while (peek().kind == Tok::Or) {
            take();
            parts.push_back(conjunction());
        }
        return OGFormula::disj(std::move(parts));
    }
    FormulaPtr conjunction() {
        std::vector<FormulaPtr> parts{unary()};
        while (peek().kind == Tok::And) {
            take();
            parts.push_back(unary());
        }
        return OGFormula::conj(std::move(parts));
    }
    FormulaPtr unary() {
        switch (peek().kind) {
            case Tok::Not: take(); return OGFormula::negate(unary());
            case Tok::True: take(); return OGFormula::truth(true);
            case Tok::False: take(); return OGFormula::truth(false);
            case Tok::LParen: {
                take();
                FormulaPtr f = formula();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Forall:
            case Tok::Exists: return quantified();
            default: return comparison();
        }
    }
    FormulaPtr quantified() {
        const bool all = take().kind == Tok::Forall;
        std::vector<Token> vars{expect(Tok::Ident, "a variable after the quantifier")};
        while (peek().kind == Tok::Comma) {
            take();
            vars.push_back(expect(Tok::Ident, "a variable after ','"));
        }
        for (const auto& v : vars) {
            if (std::find(bound_.begin(), bound_.end(), v.text) != bound_.end())
                throw ParseError(ErrorKind::SemanticError, "variable '" + v.text + "' is already bound", v.line, v.col);
            bound_.push_back(v.text);
        }
        FormulaPtr body = unary();
        for (std::size_t k = vars.size(); k-- > 0;) {
            bound_.pop_back();
            body = all ? OGFormula::forall(vars[k].text, body) : OGFormula::exists(vars[k].text, body);
        }
        return body;
    }
    FormulaPtr comparison() {
        LinTerm a = term();
        if (peek().kind != Tok::Rel) fail("expected a comparison");
        const std::string rel = take().text;
        LinTerm b = term();
        LinTerm d = a - b;
        if (rel == "=") return OGFormula::eq(d);
        if (rel == "<") return OGFormula::lt(d);
        if (rel == ">") return OGFormula::lt(b - a);
        if (rel == "<=") return OGFormula::disj({OGFormula::lt(d), OGFormula::eq(d)});
        if (rel == ">=") return OGFormula::disj({OGFormula::lt(b - a), OGFormula::eq(d)});
        return OGFormula::negate(OGFormula::eq(d));  // !=
    }
    LinTerm term() {
        LinTerm t;
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            take();
            neg = true;
        }
        t = summand(neg);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            neg = take().kind == Tok::Minus;
            t = t + summand(neg);
        }
        return t;
    }
    LinTerm summand(bool neg) {
        LinTerm t;
        if (peek().kind == Tok::Int) {
            Token n = take();
            Integer c(n.text);
            if (peek().kind == Tok::Star) take();
            if (peek().kind != Tok::Ident) {
                if (c != 0)
                    throw ParseError(ErrorKind::SemanticError, "constant " + n.text + " is not a term; only 0 is",
                                     n.line, n.col);
                return t;
            }
            Token v = take();
            if (c != 0) t.coeffs[v.text] = Rational(neg ? Integer(-c) : c);
            return t;
        }
        Token v = expect(Tok::Ident, "a term");
        t.coeffs[v.text] = Rational(neg ? -1 : 1);
        return t;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> bound_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
    Lexer lx(text);
    Parser p(lx.run());
    return p.run();
}

// ---------------------------------------------------------------- evaluation

namespace {

Rational eval_term(const LinTerm& t, const std::map<std::string, Rational>& a) {
    Rational s = 0;
    for (const auto& [v, c] : t.coeffs) {
        auto it = a.find(v);
        if (it == a.end()) throw Error(ErrorKind::NotClosed, "variable '" + v + "' has no value");
        s += c * it->second;
    }
    return s;
}

// Every variable ranges over {0}: atoms t = 0 hold and t < 0 fail.
bool eval_trivial(const FormulaPtr& f) {
    using K = OGFormula::Kind;
    const auto& ch = f->children();
    switch (f->kind()) {
        case K::TRUE:
        case K::EQ: return true;
        case K::FALSE:
        case K::LT: return false;
        case K::NOT: return !eval_trivial(ch[0]);
        case K::AND: return std::all_of(ch.begin(), ch.end(), eval_trivial);
        case K::OR: return std::any_of(ch.begin(), ch.end(), eval_trivial);
        case K::IMPLIES: return !eval_trivial(ch[0]) || eval_trivial(ch[1]);
        case K::FORALL:
        case K::EXISTS: return eval_trivial(ch[0]);
    }
    return false;
}

}  // namespace

bool og_eval_qf(const FormulaPtr& f, const std::map<std::string, Rational>& a) {
    using K = OGFormula::Kind;
    const auto& ch = f->children();
    switch (f->kind()) {
        case K::TRUE: return true;
        case K::FALSE: return false;
        case K::EQ: return eval_term(f->term(), a) == 0;
        case K::LT: return eval_term(f->term(), a) < 0;
        case K::NOT: return !og_eval_qf(ch[0], a);
        case K::AND:
            return std::all_of(ch.begin(), ch.end(), [&](const FormulaPtr& c) { return og_eval_qf(c, a); });
        case K::OR:
            return std::any_of(ch.begin(), ch.end(), [&](const FormulaPtr& c) { return og_eval_qf(c, a); });
        case K::IMPLIES: return !og_eval_qf(ch[0], a) || og_eval_qf(ch[1], a);
        case K::FORALL:
        case K::EXISTS: throw Error(ErrorKind::PreconditionFailed, "og_eval_qf needs a quantifier-free formula");
    }
    return false;
}

// ---------------------------------------------------------------- Fourier-Motzkin

namespace {

struct Constraint {
    LinTerm t;
    bool strict;  // t < 0, otherwise t = 0

    auto operator<=>(const Constraint&) const = default;
    bool operator==(const Constraint&) const = default;
};

Constraint make_constraint(const LinTerm& t, bool strict) {
    FormulaPtr f = strict ? OGFormula::lt(t) : OGFormula::eq(t);
    return {f->term(), strict};
}

using Conj = std::set<Constraint>;
using Dnf = std::vector<Conj>;

// Adds c to the conjunction; false when the conjunction became unsatisfiable.
bool add_constraint(Conj& k, const LinTerm& t, bool strict) {
    if (t.is_zero()) return !strict;
    Constraint c = make_constraint(t, strict);
    const LinTerm neg = c.t * Rational(-1);
    if (strict) {
        if (k.count({neg, true}) || k.count(make_constraint(c.t, false))) return false;
    } else {
        if (k.count({c.t, true}) || k.count({neg, true})) return false;
    }
    k.insert(c);
    return true;
}

void push_unique(Dnf& d, Conj k) {
    if (std::find(d.begin(), d.end(), k) == d.end()) d.push_back(std::move(k));
}

Dnf dnf_product(const Dnf& a, const Dnf& b) {
    Dnf out;
    for (const auto& x : a)
        for (const auto& y : b) {
            Conj k = x;
            bool ok = true;
            for (const auto& c : y)
                if (!add_constraint(k, c.t, c.strict)) {
                    ok = false;
                    break;
                }
            if (ok) push_unique(out, std::move(k));
        }
    return out;
}

Dnf to_dnf(const FormulaPtr& f, bool negated) {
    using K = OGFormula::Kind;
    const auto& ch = f->children();
    auto single = [](const LinTerm& t, bool strict) {
        Conj k;
        add_constraint(k, t, strict);
        return k;
    };
    switch (f->kind()) {
        case K::TRUE: return negated ? Dnf{} : Dnf{Conj{}};
        case K::FALSE: return negated ? Dnf{Conj{}} : Dnf{};
        case K::EQ:
            if (!negated) return {single(f->term(), false)};
            return {single(f->term(), true), single(f->term() * Rational(-1), true)};
        case K::LT:
            if (!negated) return {single(f->term(), true)};
            return {single(f->term(), false), single(f->term() * Rational(-1), true)};
        case K::NOT: return to_dnf(ch[0], !negated);
        case K::AND:
        case K::OR: {
            const bool product = (f->kind() == K::AND) != negated;
            Dnf acc = product ? Dnf{Conj{}} : Dnf{};
            for (const auto& c : ch) {
                Dnf d = to_dnf(c, negated);
                if (product) {
                    acc = dnf_product(acc, d);
                    if (acc.empty()) break;
                } else {
                    for (auto& k : d) push_unique(acc, std::move(k));
                }
            }
            return acc;
        }
        case K::IMPLIES: {
            // a -> b  ==  !a | b
            auto alt = OGFormula::disj({OGFormula::negate(ch[0]), ch[1]});
            return to_dnf(alt, negated);
        }
        case K::FORALL:
        case K::EXISTS: break;
    }
    throw Error(ErrorKind::PreconditionFailed, "to_dnf needs a quantifier-free formula");
}

std::optional<Conj> eliminate(const Conj& k, const std::string& y) {
    // an equation in y: substitute it into the rest
    for (const auto& e : k) {
        if (e.strict) continue;
        const Rational cy = e.t.coeff(y);
        if (cy == 0) continue;
        Conj out;
        for (const auto& c : k) {
            if (c == e) continue;
            LinTerm t = c.t - e.t * (c.t.coeff(y) / cy);
            if (!add_constraint(out, t, c.strict)) return std::nullopt;
        }
        return out;
    }
    std::vector<const Constraint*> lower, upper;
    Conj out;
    for (const auto& c : k) {
        const Rational cy = c.t.coeff(y);
        if (cy == 0) {
            if (!add_constraint(out, c.t, c.strict)) return std::nullopt;
        } else {
            (cy > 0 ? upper : lower).push_back(&c);
        }
    }
    for (const auto* l : lower)
        for (const auto* u : upper) {
            const Rational cl = l->t.coeff(y), cu = u->t.coeff(y);
            LinTerm t = u->t * Rational(-cl) + l->t * cu;
            if (!add_constraint(out, t, true)) return std::nullopt;
        }
    return out;
}

Dnf exists_dnf(const std::string& y, const Dnf& d) {
    Dnf out;
    for (const auto& k : d) {
        auto r = eliminate(k, y);
        if (!r) continue;
        if (r->empty()) return {Conj{}};
        push_unique(out, std::move(*r));
    }
    return out;
}

FormulaPtr from_dnf(const Dnf& d) {
    std::vector<FormulaPtr> ors;
    for (const auto& k : d) {
        std::vector<FormulaPtr> ands;
        for (const auto& c : k) ands.push_back(c.strict ? OGFormula::lt(c.t) : OGFormula::eq(c.t));
        ors.push_back(OGFormula::conj(std::move(ands)));
    }
    return OGFormula::disj(std::move(ors));
}

FormulaPtr qe(const FormulaPtr& f) {
    using K = OGFormula::Kind;
    if (f->quantifier_free()) return f;
    const auto& ch = f->children();
    switch (f->kind()) {
        case K::NOT: return OGFormula::negate(qe(ch[0]));
        case K::AND:
        case K::OR: {
            std::vector<FormulaPtr> parts;
            for (const auto& c : ch) parts.push_back(qe(c));
            return f->kind() == K::AND ? OGFormula::conj(std::move(parts)) : OGFormula::disj(std::move(parts));
        }
        case K::IMPLIES: return OGFormula::implies(qe(ch[0]), qe(ch[1]));
        case K::EXISTS: return from_dnf(exists_dnf(f->var(), to_dnf(qe(ch[0]), false)));
        case K::FORALL: {
            // forall y B  ==  !exists y !B
            Dnf inner = exists_dnf(f->var(), to_dnf(qe(ch[0]), true));
            return from_dnf(to_dnf(from_dnf(inner), true));
        }
        default: return f;
    }
}

// Folds TRUE/FALSE through the connectives.
FormulaPtr simplify(const FormulaPtr& f) {
    using K = OGFormula::Kind;
    const auto& ch = f->children();
    auto is = [](const FormulaPtr& g, K k) { return g->kind() == k; };
    switch (f->kind()) {
        case K::NOT: {
            FormulaPtr c = simplify(ch[0]);
            if (is(c, K::TRUE)) return OGFormula::truth(false);
            if (is(c, K::FALSE)) return OGFormula::truth(true);
            return OGFormula::negate(c);
        }
        case K::AND:
        case K::OR: {
            const K unit = f->kind() == K::AND ? K::TRUE : K::FALSE;
            const K zero = f->kind() == K::AND ? K::FALSE : K::TRUE;
            std::vector<FormulaPtr> parts;
            for (const auto& c : ch) {
                FormulaPtr s = simplify(c);
                if (is(s, zero)) return s;
                if (!is(s, unit)) parts.push_back(s);
            }
            return f->kind() == K::AND ? OGFormula::conj(std::move(parts)) : OGFormula::disj(std::move(parts));
        }
        case K::IMPLIES: {
            FormulaPtr a = simplify(ch[0]), b = simplify(ch[1]);
            if (is(a, K::FALSE) || is(b, K::TRUE)) return OGFormula::truth(true);
            if (is(a, K::TRUE)) return b;
            if (is(b, K::FALSE)) return simplify(OGFormula::negate(a));
            return OGFormula::implies(a, b);
        }
        default: return f;
    }
}

}  // namespace

FormulaPtr doag_qe(const FormulaPtr& f) { return simplify(qe(f)); }

bool doag_decide_sentence(const FormulaPtr& f, bool nontrivial) {
    auto fv = f->free_vars();
    if (!fv.empty()) throw Error(ErrorKind::NotClosed, "free variable '" + *fv.begin() + "' in sentence");
    const bool in_nontrivial = og_eval_qf(doag_qe(f), {});
    if (nontrivial) return in_nontrivial;
    return in_nontrivial && eval_trivial(f);
}

// ---------------------------------------------------------------- direct interpretation

namespace {

using Assignment = std::map<std::string, OGroupElem>;

OGroupElem value_of(const LinTerm& t, const Assignment& a, std::size_t rank) {
    OGroupElem s = OGroupElem::zero(rank);
    for (const auto& [v, c] : t.coeffs) s += a.at(v) * c;
    return s;
}

std::optional<Rational> strictly_between(const Atom& atom, const std::optional<Rational>& lo,
                                         const std::optional<Rational>& hi) {
    auto floor_of = [](const Rational& q) {
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return r;
    };
    if (!lo && !hi) return Rational(0);
    if (!hi) return Rational(floor_of(*lo) + 1);
    if (!lo) return Rational(-floor_of(-*hi) - 1);
    switch (atom.kind()) {
        case Atom::Kind::Rationals: return (*lo + *hi) / 2;
        case Atom::Kind::Integers: {
            Rational n(floor_of(*lo) + 1);
            if (n < *hi) return n;
            return std::nullopt;
        }
        case Atom::Kind::Localized: {
            const Integer s = atom.primes().front();
            for (Integer d = 1;; d *= s) {
                Rational n(floor_of(*lo * d) + 1, d);
                n.canonicalize();
                if (n < *hi) return n;
            }
        }
    }
    return std::nullopt;
}

// An element g of the group with lo < g < hi (lex order), coordinates from i on.
bool between(const OGroupDesc& g, std::size_t i, const OGroupElem* lo, const OGroupElem* hi,
             std::vector<Rational>& out) {
    const std::size_t r = g.rank();
    if (i == r) return false;
    const Atom& atom = g.factors()[i];
    if (lo && hi && (*lo)[i] == (*hi)[i]) {
        if (!atom.contains((*lo)[i])) return false;
        out.push_back((*lo)[i]);
        if (between(g, i + 1, lo, hi, out)) return true;
        out.pop_back();
        return false;
    }
    std::optional<Rational> L, H;
    if (lo) L = (*lo)[i];
    if (hi) H = (*hi)[i];
    if (auto a = strictly_between(atom, L, H)) {
        out.push_back(*a);
        out.resize(r, Rational(0));
        return true;
    }
    if (lo && atom.contains(*L)) {
        out.push_back(*L);
        if (between(g, i + 1, lo, nullptr, out)) return true;
        out.pop_back();
    }
    if (hi && atom.contains(*H)) {
        out.push_back(*H);
        if (between(g, i + 1, nullptr, hi, out)) return true;
        out.pop_back();
    }
    return false;
}

std::optional<OGroupElem> element_between(const OGroupDesc& g, const OGroupElem* lo, const OGroupElem* hi) {
    std::vector<Rational> out;
    if (!between(g, 0, lo, hi, out)) return std::nullopt;
    return OGroupElem(out);
}

void collect_atoms(const FormulaPtr& f, std::vector<const OGFormula*>& out) {
    if (f->is_atom()) out.push_back(f.get());
    for (const auto& c : f->children()) collect_atoms(c, out);
}

struct Evaluator {
    const OGroupDesc& g;
    std::vector<OGroupElem> samples;

    struct Result {
        bool value;
        bool exact;
    };

    Result eval(const FormulaPtr& f, Assignment& a) const {
        using K = OGFormula::Kind;
        const auto& ch = f->children();
        switch (f->kind()) {
            case K::TRUE: return {true, true};
            case K::FALSE: return {false, true};
            case K::EQ: return {value_of(f->term(), a, g.rank()).is_zero(), true};
            case K::LT: return {value_of(f->term(), a, g.rank()).sign() < 0, true};
            case K::NOT: {
                Result r = eval(ch[0], a);
                return {!r.value, r.exact};
            }
            case K::AND:
            case K::OR: {
                const bool stop = f->kind() == K::OR;  // value that decides the connective
                bool exact = true;
                for (const auto& c : ch) {
                    Result r = eval(c, a);
                    if (r.value == stop && r.exact) return {stop, true};
                    exact = exact && r.exact;
                    if (r.value == stop) return {stop, false};
                }
                return {!stop, exact};
            }
            case K::IMPLIES: {
                Result l = eval(ch[0], a);
                if (!l.value && l.exact) return {true, true};
                Result r = eval(ch[1], a);
                if (r.value && r.exact) return {true, true};
                return {!l.value || r.value, l.exact && r.exact};
            }
            case K::FORALL:
            case K::EXISTS: {
                const bool want = f->kind() == K::EXISTS;
                if (ch[0]->quantifier_free()) return {exact_exists(f->var(), ch[0], !want, a) == want, true};
                auto saved = a.find(f->var()) == a.end() ? std::nullopt : std::optional<OGroupElem>(a.at(f->var()));
                bool found_inexact = false;
                for (const auto& s : samples) {
                    a[f->var()] = s;
                    Result r = eval(ch[0], a);
                    if (r.value == want) {
                        if (r.exact) {
                            restore(a, f->var(), saved);
                            return {want, true};
                        }
                        found_inexact = true;
                    }
                }
                restore(a, f->var(), saved);
                return {found_inexact ? want : !want, false};
            }
        }
        return {false, false};
    }

    static void restore(Assignment& a, const std::string& v, const std::optional<OGroupElem>& saved) {
        if (saved)
            a[v] = *saved;
        else
            a.erase(v);
    }

    // exists y with body (or !body when `negate`) true, decided over the cells the atoms cut out.
    bool exact_exists(const std::string& y, const FormulaPtr& body, bool negate, Assignment& a) const {
        std::vector<const OGFormula*> atoms;
        collect_atoms(body, atoms);
        std::vector<OGroupElem> points;
        for (const auto* at : atoms) {
            const Rational c = at->term().coeff(y);
            if (c == 0) continue;
            LinTerm rest = at->term();
            rest.coeffs.erase(y);
            points.push_back(-value_of(rest, a, g.rank()) / c);
        }
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        std::vector<OGroupElem> tries;
        for (const auto& p : points)
            if (g.contains(p)) tries.push_back(p);
        if (points.empty()) {
            tries.push_back(g.zero());
        } else {
            if (auto e = element_between(g, nullptr, &points.front())) tries.push_back(*e);
            if (auto e = element_between(g, &points.back(), nullptr)) tries.push_back(*e);
            for (std::size_t i = 0; i + 1 < points.size(); ++i)
                if (auto e = element_between(g, &points[i], &points[i + 1])) tries.push_back(*e);
        }
        auto saved = a.find(y) == a.end() ? std::nullopt : std::optional<OGroupElem>(a.at(y));
        bool found = false;
        for (const auto& t : tries) {
            a[y] = t;
            if (eval(body, a).value != negate) {
                found = true;
                break;
            }
        }
        restore(a, y, saved);
        return found;
    }
};

Integer coefficient_lcm(const FormulaPtr& f) {
    std::vector<const OGFormula*> atoms;
    collect_atoms(f, atoms);
    Integer l = 2;
    for (const auto* at : atoms)
        for (const auto& [v, c] : at->term().coeffs) l = lcm(l, abs(c.get_num()));
    return l;
}

std::vector<OGroupElem> sample_elements(const OGroupDesc& g, const Integer& l) {
    std::vector<OGroupElem> out{g.zero()};
    const long m_max = std::min<long>(2 * l.get_si(), 24);
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const Atom& atom = g.factors()[i];
        std::vector<long> dens{1};
        if (atom.kind() == Atom::Kind::Localized)
            for (auto s : atom.primes()) {
                dens.push_back(s);
                dens.push_back(s * s);
            }
        if (atom.kind() == Atom::Kind::Rationals)
            for (long d = 2; d <= std::min<long>(l.get_si(), 12); ++d) dens.push_back(d);
        for (long d : dens)
            for (long m = 1; m <= m_max; ++m) {
                Rational q(m, d);
                q.canonicalize();
                if (q.get_den() != d) continue;
                OGroupElem e = OGroupElem::unit(g.rank(), i) * q;
                out.push_back(e);
                out.push_back(-e);
            }
    }
    if (g.rank() > 1) {
        const OGroupElem a = OGroupElem::unit(g.rank(), 0), b = OGroupElem::unit(g.rank(), g.rank() - 1);
        for (const auto& e : {a + b, a - b}) {
            out.push_back(e);
            out.push_back(-e);
        }
    }
    return out;
}

}  // namespace

OGEvaluation og_evaluate(const OGroupDesc& g, const FormulaPtr& sentence, bool use_theory) {
    auto fv = sentence->free_vars();
    if (!fv.empty()) throw Error(ErrorKind::NotClosed, "free variable '" + *fv.begin() + "' in sentence");
    if (sentence->quantifier_depth() > kOGEvalDepth)
        throw Error(ErrorKind::DepthBoundExceeded, "quantifier depth " + std::to_string(sentence->quantifier_depth()) +
                                                       " exceeds the evaluable fragment (depth " +
                                                       std::to_string(kOGEvalDepth) + ")");
    if (g.trivial()) return {eval_trivial(sentence), true};
    if (use_theory && g.divisible()) return {doag_decide_sentence(sentence, true), true};
    Evaluator ev{g, sample_elements(g, coefficient_lcm(sentence))};
    Assignment a;
    auto r = ev.eval(sentence, a);
    return {r.value, r.exact};
}

std::string to_string(SentenceEquivalence::Kind k) {
    switch (k) {
        case SentenceEquivalence::Kind::PROVED_EQUIVALENT: return "PROVED_EQUIVALENT";
        case SentenceEquivalence::Kind::EQUIVALENT_ON_BATTERY: return "EQUIVALENT_ON_BATTERY";
        case SentenceEquivalence::Kind::DISTINGUISHED: return "DISTINGUISHED";
    }
    return "?";
}

SentenceEquivalence og_sentence_equiv(const OGroupDesc& g1, const OGroupDesc& g2, const std::vector<FormulaPtr>& battery) {
    using K = SentenceEquivalence::Kind;
    if (g1.divisible() && g2.divisible())
        return {K::PROVED_EQUIVALENT, nullptr, false, false,
                "both groups are nontrivial divisible; the theory of divisible ordered abelian groups is complete"};
    if (g1.trivial() && g2.trivial()) return {K::PROVED_EQUIVALENT, nullptr, false, false, "both groups are trivial"};
    for (const auto& phi : battery) {
        auto v1 = og_evaluate(g1, phi);
        auto v2 = og_evaluate(g2, phi);
        if (v1.value != v2.value) {
            std::string how = v1.exact && v2.exact ? "both values exact" : "values from sampled outer quantifiers";
            return {K::DISTINGUISHED, phi, v1.value, v2.value, how};
        }
    }
    return {K::EQUIVALENT_ON_BATTERY, nullptr, false, false,
            "agree on " + std::to_string(battery.size()) + " battery sentences"};
}

}  // namespace tamefield
