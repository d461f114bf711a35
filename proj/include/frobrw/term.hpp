#pragma once

#include <memory>

#include "frobrw/cospan.hpp"

namespace frobrw {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Syntax of coloured symmetric monoidal terms with chosen Frobenius
/// structure. Colour changers are generators carrying a changer marker in
/// the signature, so Kind::Gen covers them too. Every term is type checked
/// at construction; dom and cod are cached on the node.
struct Term {
    enum class Kind { Gen, Id, Sym, Frob, Seq, Par };

    Kind kind;
    GenId gen = -1;                    // Gen
    Word w1, w2;                       // Id: w1; Sym: w1 then w2
    ColourId colour = -1;              // Frob
    FrobKind frob = FrobKind::Mult;    // Frob
    TermPtr a, b;                      // Seq, Par
    Word dom, cod;
    int pos = -1;                      // source offset when parsed
};

TermPtr t_gen(const Signature& sig, GenId g);
TermPtr t_gen(const Signature& sig, const std::string& name);
TermPtr t_id(const Signature& sig, const Word& w);
TermPtr t_sym(const Signature& sig, const Word& v, const Word& w);
TermPtr t_frob(const Signature& sig, ColourId c, FrobKind kind);
TermPtr t_chg(const Signature& sig, ColourId from, ColourId to);
TermPtr t_seq(const Signature& sig, TermPtr a, TermPtr b);
TermPtr t_par(const Signature& sig, TermPtr a, TermPtr b);

class ParseError : public Error {
public:
    int pos;
    ParseError(const std::string& what, int p)
        : Error(what + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

/// Grammar:
///   t ::= name | id[word] | sym[word,word] | frob.mult[c] | frob.unit[c]
///       | frob.comult[c] | frob.counit[c] | chg[c1,c2] | t ; t | t + t | (t)
/// ';' binds looser than '+'; both are left associative. Words are colour
/// names separated by spaces; in a monochrome signature a bare integer n
/// abbreviates n copies of the unique colour, and 0 is the empty word in
/// any signature.
TermPtr parse_term(const Signature& sig, const std::string& src);

std::string term_str(const Signature& sig, const Term& t);

/// The cospan interpretation: generators and Frobenius nodes become the
/// basic cospans, ';' composes by pushout and '+' tensors.
Cospan interp(const Signature& sig, const Term& t);

/// Equality in the free FROP: isomorphism of interpreting cospans.
bool term_equal_mod_frobenius(const Signature& sig, const Term& a, const Term& b);

}  // namespace frobrw
