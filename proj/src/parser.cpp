#include "cherx/parser.hpp"

#include <cctype>

#include "cherx/errors.hpp"

namespace cherx {

namespace {

using Node = std::unique_ptr<ExprAST>;

Node make(ExprAST::Kind k) {
  auto n = std::make_unique<ExprAST>();
  n->kind = k;
  return n;
}

class Parser {
 public:
  Parser(const std::string& s, const GroupData& g) : s_(s), g_(g) {}

  Node run() {
    Node e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return e;
  }

 private:
  const std::string& s_;
  const GroupData& g_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  unsigned integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw SyntaxError("expected an integer", pos_);
    return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
  }

  Node expr() {
    Node acc = term();
    while (true) {
      skip_ws();
      if (eat('+')) {
        Node rhs = term();
        Node sum = make(ExprAST::Sum);
        sum->children.push_back(std::move(acc));
        sum->children.push_back(std::move(rhs));
        acc = std::move(sum);
      } else if (pos_ < s_.size() && s_[pos_] == '-') {
        ++pos_;
        Node rhs = term();
        Node neg = make(ExprAST::Neg);
        neg->children.push_back(std::move(rhs));
        Node sum = make(ExprAST::Sum);
        sum->children.push_back(std::move(acc));
        sum->children.push_back(std::move(neg));
        acc = std::move(sum);
      } else {
        return acc;
      }
    }
  }

  Node term() {
    Node acc = factor();
    while (eat('*')) {
      Node rhs = factor();
      Node prod = make(ExprAST::Prod);
      prod->children.push_back(std::move(acc));
      prod->children.push_back(std::move(rhs));
      acc = std::move(prod);
    }
    return acc;
  }

  Node factor() {
    Node a = atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      unsigned p = integer();
      Node pw = make(ExprAST::Pow);
      pw->power = neg ? -static_cast<int>(p) : static_cast<int>(p);
      pw->children.push_back(std::move(a));
      return pw;
    }
    return a;
  }

  Node atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      Node n = make(ExprAST::Neg);
      n->children.push_back(factor());
      return n;
    }
    if (c == '(') {
      ++pos_;
      Node e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      Node a = expr();
      expect(',');
      Node b = expr();
      expect(']');
      Node br = make(ExprAST::Bracket);
      br->children.push_back(std::move(a));
      br->children.push_back(std::move(b));
      return br;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      unsigned num = integer();
      Node n = make(ExprAST::Rat);
      if (eat('/')) {
        unsigned den = integer();
        if (den == 0) throw SyntaxError("zero denominator", start);
        n->rat = Rational(num, den);
        n->rat.canonicalize();
      } else {
        n->rat = Rational(num);
      }
      return n;
    }
    size_t sympos = pos_;
    if (c == 'x' || c == 'D' || c == 't' || c == 'z' || c == 'c') {
      ++pos_;
      bool has_index = pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
      if (!has_index && (c == 'x' || c == 'D' || c == 't' || c == 'z')) {
        if (c == 'z') throw SyntaxError("z requires a conductor, e.g. z4", sympos);
        // Rank-1 shorthand: x, D, t without an index.
        if (g_.rank() != 1) throw UnknownSymbol(std::string(1, c), sympos);
        Node n = make(c == 'x' ? ExprAST::XVar : (c == 'D' ? ExprAST::DVar : ExprAST::TGen));
        n->index = 0;
        return n;
      }
      if (!has_index && c == 'c') {
        Node n = make(ExprAST::Param);
        n->index = 0;
        if (g_.num_params() == 0) throw UnknownSymbol("c", sympos);
        return n;
      }
      unsigned idx = integer();
      Node n = make(ExprAST::Rat);
      switch (c) {
        case 'x':
          n = make(ExprAST::XVar);
          if (idx < 1 || idx > g_.rank()) throw IndexOutOfRange("x" + std::to_string(idx), sympos);
          n->index = idx - 1;
          break;
        case 'D':
          n = make(ExprAST::DVar);
          if (idx < 1 || idx > g_.rank()) throw IndexOutOfRange("D" + std::to_string(idx), sympos);
          n->index = idx - 1;
          break;
        case 't':
          n = make(ExprAST::TGen);
          if (idx < 1 || idx > g_.rank()) throw IndexOutOfRange("t" + std::to_string(idx), sympos);
          if (g_.phase_mod() <= 1) throw UnknownSymbol("t" + std::to_string(idx), sympos);
          n->index = idx - 1;
          break;
        case 'z':
          n = make(ExprAST::Zeta);
          if (idx == 0) throw IndexOutOfRange("z0", sympos);
          n->index = idx;
          break;
        case 'c':
          n = make(ExprAST::Param);
          if (idx >= g_.num_params()) throw IndexOutOfRange("c" + std::to_string(idx), sympos);
          n->index = idx;
          break;
      }
      return n;
    }
    if (c == 'e') {
      ++pos_;
      return make(ExprAST::SymE);
    }
    if (c == 'h') {
      ++pos_;
      return make(ExprAST::SymH);
    }
    if (c == 's') {
      ++pos_;
      expect('(');
      unsigned i = integer();
      expect(',');
      unsigned j = integer();
      expect(')');
      if (i < 1 || j < 1 || i > g_.rank() || j > g_.rank() || i == j)
        throw IndexOutOfRange("s(" + std::to_string(i) + "," + std::to_string(j) + ")", sympos);
      Node n = make(ExprAST::Transposition);
      n->index = i - 1;
      n->index2 = j - 1;
      return n;
    }
    throw UnknownSymbol(std::string(1, c), pos_);
  }
};

}  // namespace

std::unique_ptr<ExprAST> parse(const std::string& input, const GroupData& g) {
  return Parser(input, g).run();
}

PBWElement elaborate(const ExprAST& ast, const GroupData& g) {
  switch (ast.kind) {
    case ExprAST::Rat:
      return PBWElement::scalar(g, Scalar(ast.rat));
    case ExprAST::Zeta:
      return PBWElement::scalar(g, Scalar(Cyclotomic::zeta(ast.index)));
    case ExprAST::Param:
      return PBWElement::scalar(g, g.param(ast.index));
    case ExprAST::XVar:
      return PBWElement::xvar(g, ast.index);
    case ExprAST::DVar:
      return PBWElement::yvar(g, ast.index);
    case ExprAST::SymE:
      return symmetrizer(g);
    case ExprAST::SymH:
      return grading_element(g);
    case ExprAST::Transposition: {
      MonomialMatrix t = MonomialMatrix::identity(g.rank(), g.phase_mod());
      t.perm[ast.index] = ast.index2;
      t.perm[ast.index2] = ast.index;
      return PBWElement::group_element(g, g.index_of(t));
    }
    case ExprAST::TGen: {
      MonomialMatrix t = MonomialMatrix::identity(g.rank(), g.phase_mod());
      t.phase[ast.index] = 1 % g.phase_mod();
      return PBWElement::group_element(g, g.index_of(t));
    }
    case ExprAST::Sum: {
      PBWElement acc = elaborate(*ast.children[0], g);
      for (size_t i = 1; i < ast.children.size(); ++i) acc += elaborate(*ast.children[i], g);
      return acc;
    }
    case ExprAST::Prod: {
      PBWElement acc = elaborate(*ast.children[0], g);
      for (size_t i = 1; i < ast.children.size(); ++i) acc = multiply(acc, elaborate(*ast.children[i], g));
      return acc;
    }
    case ExprAST::Pow: {
      PBWElement base = elaborate(*ast.children[0], g);
      if (ast.power < 0) {
        // Inversion only for pure scalars.
        if (base.terms().size() == 1) {
          const auto& [k, s] = *base.terms().begin();
          if (k.w == 0 && expo_total(k.xe) == 0 && expo_total(k.ye) == 0) {
            Scalar inv = s.inverse();
            PBWElement r = PBWElement::scalar(base.group(), inv);
            return r.power(static_cast<unsigned>(-ast.power));
          }
        }
        throw MathError("negative powers are only defined for scalars");
      }
      return base.power(static_cast<unsigned>(ast.power));
    }
    case ExprAST::Bracket:
      return commutator(elaborate(*ast.children[0], g), elaborate(*ast.children[1], g));
    case ExprAST::Neg:
      return -elaborate(*ast.children[0], g);
  }
  throw MathError("unreachable AST node");
}

PBWElement parse_element(const std::string& input, const GroupData& g) {
  return elaborate(*parse(input, g), g);
}

MultiPoly parse_polynomial(const std::string& input, const GroupData& g) {
  PBWElement e = parse_element(input, g);
  MultiPoly out(g.rank());
  for (const auto& [k, s] : e.terms()) {
    if (k.w != 0 || expo_total(k.ye) != 0)
      throw MathError("expression is not a plain polynomial in the x variables");
    out.add_term(k.xe, s);
  }
  return out;
}

}  // namespace cherx
