#include "frobrw/term.hpp"

#include <cctype>
#include <sstream>

namespace frobrw {

namespace {

TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }

}  // namespace

TermPtr t_gen(const Signature& sig, GenId g) {
    const Generator& gen = sig.generator(g);
    Term t;
    t.kind = Term::Kind::Gen;
    t.gen = g;
    t.dom = gen.arity;
    t.cod = gen.coarity;
    return make(std::move(t));
}

TermPtr t_gen(const Signature& sig, const std::string& name) {
    auto g = sig.generator_by_name(name);
    if (!g) throw Error("unknown generator: " + name);
    return t_gen(sig, *g);
}

TermPtr t_id(const Signature& sig, const Word& w) {
    for (ColourId c : w) sig.colour(c);
    Term t;
    t.kind = Term::Kind::Id;
    t.w1 = w;
    t.dom = w;
    t.cod = w;
    return make(std::move(t));
}

TermPtr t_sym(const Signature& sig, const Word& v, const Word& w) {
    for (ColourId c : v) sig.colour(c);
    for (ColourId c : w) sig.colour(c);
    Term t;
    t.kind = Term::Kind::Sym;
    t.w1 = v;
    t.w2 = w;
    t.dom = v;
    t.dom.insert(t.dom.end(), w.begin(), w.end());
    t.cod = w;
    t.cod.insert(t.cod.end(), v.begin(), v.end());
    return make(std::move(t));
}

TermPtr t_frob(const Signature& sig, ColourId c, FrobKind kind) {
    if (!sig.is_frobenius(c))
        throw Error("colour " + sig.colour(c).name + " carries no Frobenius structure");
    Term t;
    t.kind = Term::Kind::Frob;
    t.colour = c;
    t.frob = kind;
    switch (kind) {
        case FrobKind::Mult: t.dom = {c, c}; t.cod = {c}; break;
        case FrobKind::Unit: t.cod = {c}; break;
        case FrobKind::Comult: t.dom = {c}; t.cod = {c, c}; break;
        case FrobKind::Counit: t.dom = {c}; break;
    }
    return make(std::move(t));
}

TermPtr t_chg(const Signature& sig, ColourId from, ColourId to) {
    auto g = sig.generator_by_name(changer_name(sig, from, to));
    if (!g) throw Error("signature has no changer " + changer_name(sig, from, to));
    return t_gen(sig, *g);
}

TermPtr t_seq(const Signature& sig, TermPtr a, TermPtr b) {
    if (a->cod != b->dom)
        throw Error("sequential composition type mismatch: " + sig.word_str(a->cod) +
                    " vs " + sig.word_str(b->dom));
    Term t;
    t.kind = Term::Kind::Seq;
    t.dom = a->dom;
    t.cod = b->cod;
    t.a = std::move(a);
    t.b = std::move(b);
    return make(std::move(t));
}

TermPtr t_par(const Signature& /*sig*/, TermPtr a, TermPtr b) {
    Term t;
    t.kind = Term::Kind::Par;
    t.dom = a->dom;
    t.dom.insert(t.dom.end(), b->dom.begin(), b->dom.end());
    t.cod = a->cod;
    t.cod.insert(t.cod.end(), b->cod.begin(), b->cod.end());
    t.a = std::move(a);
    t.b = std::move(b);
    return make(std::move(t));
}

namespace {

struct Token {
    enum class Kind { Name, Int, Semi, Plus, LParen, RParen, LBrack, RBrack, Comma, End };
    Kind kind;
    std::string text;
    long value = 0;
    int pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        int p = static_cast<int>(i_);
        if (i_ >= src_.size()) return {Token::Kind::End, "", 0, p};
        char c = src_[i_];
        switch (c) {
            case ';': ++i_; return {Token::Kind::Semi, ";", 0, p};
            case '+': ++i_; return {Token::Kind::Plus, "+", 0, p};
            case '(': ++i_; return {Token::Kind::LParen, "(", 0, p};
            case ')': ++i_; return {Token::Kind::RParen, ")", 0, p};
            case '[': ++i_; return {Token::Kind::LBrack, "[", 0, p};
            case ']': ++i_; return {Token::Kind::RBrack, "]", 0, p};
            case ',': ++i_; return {Token::Kind::Comma, ",", 0, p};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            Token t{Token::Kind::Int, src_.substr(i_, j - i_), 0, p};
            t.value = std::stol(t.text);
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_' ||
                    src_[j] == '.'))
                ++j;
            Token t{Token::Kind::Name, src_.substr(i_, j - i_), 0, p};
            i_ = j;
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", p);
    }

private:
    const std::string& src_;
    size_t i_ = 0;
};

class Parser {
public:
    Parser(const Signature& sig, const std::string& src) : sig_(sig), lex_(src) {
        advance();
    }

    TermPtr parse() {
        TermPtr t = parse_seq();
        expect(Token::Kind::End, "end of input");
        return t;
    }

private:
    const Signature& sig_;
    Lexer lex_;
    Token tok_{Token::Kind::End, "", 0, 0};

    void advance() { tok_ = lex_.next(); }

    void expect(Token::Kind k, const char* what) {
        if (tok_.kind != k)
            throw ParseError(std::string("expected ") + what + ", got '" + tok_.text + "'",
                             tok_.pos);
        advance();
    }

    TermPtr parse_seq() {
        TermPtr t = parse_par();
        while (tok_.kind == Token::Kind::Semi) {
            int p = tok_.pos;
            advance();
            TermPtr rhs = parse_par();
            try {
                t = t_seq(sig_, t, rhs);
            } catch (const Error& e) {
                throw ParseError(e.what(), p);
            }
        }
        return t;
    }

    TermPtr parse_par() {
        TermPtr t = parse_atom();
        while (tok_.kind == Token::Kind::Plus) {
            advance();
            t = t_par(sig_, t, parse_atom());
        }
        return t;
    }

    ColourId parse_colour() {
        if (tok_.kind == Token::Kind::Int) {
            ColourId c = static_cast<ColourId>(tok_.value);
            sig_.colour(c);
            advance();
            return c;
        }
        if (tok_.kind == Token::Kind::Name) {
            auto c = sig_.colour_by_name(tok_.text);
            if (!c) throw ParseError("unknown colour: " + tok_.text, tok_.pos);
            advance();
            return *c;
        }
        throw ParseError("expected a colour, got '" + tok_.text + "'", tok_.pos);
    }

    // A word is read up to ']' or ','. It is either a single integer
    // (monochrome repetition sugar; 0 is the empty word anywhere) or a
    // space separated list of colour names.
    Word parse_word() {
        Word w;
        if (tok_.kind == Token::Kind::Int) {
            long n = tok_.value;
            int p = tok_.pos;
            advance();
            if (n != 0 && !sig_.monochrome())
                throw ParseError("integer word sugar needs a monochrome signature", p);
            for (long i = 0; i < n; ++i) w.push_back(0);
            return w;
        }
        while (tok_.kind == Token::Kind::Name) {
            auto c = sig_.colour_by_name(tok_.text);
            if (!c) throw ParseError("unknown colour: " + tok_.text, tok_.pos);
            w.push_back(*c);
            advance();
        }
        return w;
    }

    TermPtr parse_atom() {
        int p = tok_.pos;
        if (tok_.kind == Token::Kind::LParen) {
            advance();
            TermPtr t = parse_seq();
            expect(Token::Kind::RParen, "')'");
            return t;
        }
        if (tok_.kind != Token::Kind::Name)
            throw ParseError("expected a term, got '" + tok_.text + "'", p);
        std::string name = tok_.text;
        if (name == "id") {
            advance();
            expect(Token::Kind::LBrack, "'['");
            Word w = parse_word();
            expect(Token::Kind::RBrack, "']'");
            return t_id(sig_, w);
        }
        if (name == "sym") {
            advance();
            expect(Token::Kind::LBrack, "'['");
            Word v = parse_word();
            expect(Token::Kind::Comma, "','");
            Word w = parse_word();
            expect(Token::Kind::RBrack, "']'");
            return t_sym(sig_, v, w);
        }
        if (name == "frob.mult" || name == "frob.unit" || name == "frob.comult" ||
            name == "frob.counit") {
            FrobKind k = name == "frob.mult"     ? FrobKind::Mult
                         : name == "frob.unit"   ? FrobKind::Unit
                         : name == "frob.comult" ? FrobKind::Comult
                                                 : FrobKind::Counit;
            advance();
            expect(Token::Kind::LBrack, "'['");
            ColourId c = parse_colour();
            expect(Token::Kind::RBrack, "']'");
            try {
                return t_frob(sig_, c, k);
            } catch (const Error& e) {
                throw ParseError(e.what(), p);
            }
        }
        if (name == "chg") {
            advance();
            expect(Token::Kind::LBrack, "'['");
            ColourId c1 = parse_colour();
            expect(Token::Kind::Comma, "','");
            ColourId c2 = parse_colour();
            expect(Token::Kind::RBrack, "']'");
            try {
                return t_chg(sig_, c1, c2);
            } catch (const Error& e) {
                throw ParseError(e.what(), p);
            }
        }
        auto g = sig_.generator_by_name(name);
        if (!g) throw ParseError("unknown generator: " + name, p);
        advance();
        return t_gen(sig_, *g);
    }
};

const char* frob_name(FrobKind k) {
    switch (k) {
        case FrobKind::Mult: return "frob.mult";
        case FrobKind::Unit: return "frob.unit";
        case FrobKind::Comult: return "frob.comult";
        case FrobKind::Counit: return "frob.counit";
    }
    return "?";
}

void print(const Signature& sig, const Term& t, std::ostream& os, int parent_prec) {
    // prec: 0 = seq, 1 = par, 2 = atom
    switch (t.kind) {
        case Term::Kind::Gen:
            os << sig.generator(t.gen).name;
            break;
        case Term::Kind::Id:
            os << "id[" << (sig.monochrome() ? std::to_string(t.w1.size())
                                             : sig.word_str(t.w1))
               << "]";
            break;
        case Term::Kind::Sym:
            if (sig.monochrome())
                os << "sym[" << t.w1.size() << "," << t.w2.size() << "]";
            else
                os << "sym[" << sig.word_str(t.w1) << "," << sig.word_str(t.w2) << "]";
            break;
        case Term::Kind::Frob:
            os << frob_name(t.frob) << "[" << sig.colour(t.colour).name << "]";
            break;
        case Term::Kind::Seq:
            if (parent_prec > 0) os << "(";
            print(sig, *t.a, os, 0);
            os << " ; ";
            print(sig, *t.b, os, 0);
            if (parent_prec > 0) os << ")";
            break;
        case Term::Kind::Par:
            if (parent_prec > 1) os << "(";
            print(sig, *t.a, os, 1);
            os << " + ";
            print(sig, *t.b, os, 1);
            if (parent_prec > 1) os << ")";
            break;
    }
}

}  // namespace

TermPtr parse_term(const Signature& sig, const std::string& src) {
    return Parser(sig, src).parse();
}

std::string term_str(const Signature& sig, const Term& t) {
    std::ostringstream os;
    print(sig, t, os, 0);
    return os.str();
}

Cospan interp(const Signature& sig, const Term& t) {
    switch (t.kind) {
        case Term::Kind::Gen: return generator_cospan(sig, t.gen);
        case Term::Kind::Id: return identity_cospan(sig, t.w1);
        case Term::Kind::Sym: return symmetry_cospan(sig, t.w1, t.w2);
        case Term::Kind::Frob: return frobenius_cospan(sig, t.colour, t.frob);
        case Term::Kind::Seq: return compose(interp(sig, *t.a), interp(sig, *t.b));
        case Term::Kind::Par: return tensor(interp(sig, *t.a), interp(sig, *t.b));
    }
    throw Error("corrupt term");
}

bool term_equal_mod_frobenius(const Signature& sig, const Term& a, const Term& b) {
    return cospan_iso(interp(sig, a), interp(sig, b));
}

}  // namespace frobrw
