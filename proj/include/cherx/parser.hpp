#pragma once

#include <memory>

#include "cherx/cherednik.hpp"

namespace cherx {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ['^' int]
// atom   := rational | 'c' [int] | 'x' int | 'D' int | 'e' | 'h'
//         | 's(' int ',' int ')' | 't' int ['^' int via factor] | 'z' int
//         | '[' expr ',' expr ']' | '(' expr ')' | '-' atom
struct ExprAST {
  enum Kind { Rat, Zeta, Param, XVar, DVar, SymE, SymH, Transposition, TGen, Sum, Prod, Pow, Bracket, Neg };
  Kind kind;
  Rational rat;                 // Rat
  unsigned index = 0;           // Param, XVar, DVar, TGen, Zeta (conductor)
  unsigned index2 = 0;          // Transposition second index
  int power = 1;                // Pow
  std::vector<std::unique_ptr<ExprAST>> children;
};

std::unique_ptr<ExprAST> parse(const std::string& input, const GroupData& g);

PBWElement elaborate(const ExprAST& ast, const GroupData& g);

PBWElement parse_element(const std::string& input, const GroupData& g);

// Parses a string that must denote a plain polynomial in the x variables.
MultiPoly parse_polynomial(const std::string& input, const GroupData& g);

}  // namespace cherx
