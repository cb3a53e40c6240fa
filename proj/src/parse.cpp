#include "witt/parse.hpp"

#include <cctype>
#include <vector>

namespace witt {

namespace {

enum class Tok { kNumber, kT, kD, kLBrack, kRBrack, kComma, kPlus, kMinus,
                 kStar, kOtimes, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) : in_(input) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_])))
      bump();
    const int line = line_, col = col_;
    if (pos_ >= in_.size()) {
      current_ = {Tok::kEnd, "", line, col};
      return;
    }
    const char c = in_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
        text += in_[pos_];
        bump();
      }
      if (pos_ < in_.size() && in_[pos_] == '/') {
        text += '/';
        bump();
        if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_])))
          throw ParseError("digits expected after '/'", line_, col_);
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
          text += in_[pos_];
          bump();
        }
      }
      current_ = {Tok::kNumber, text, line, col};
      return;
    }
    switch (c) {
      case 't': bump(); current_ = {Tok::kT, "t", line, col}; return;
      case 'd': bump(); current_ = {Tok::kD, "d", line, col}; return;
      case '[': bump(); current_ = {Tok::kLBrack, "[", line, col}; return;
      case ']': bump(); current_ = {Tok::kRBrack, "]", line, col}; return;
      case ',': bump(); current_ = {Tok::kComma, ",", line, col}; return;
      case '+': bump(); current_ = {Tok::kPlus, "+", line, col}; return;
      case '-': bump(); current_ = {Tok::kMinus, "-", line, col}; return;
      case '*': bump(); current_ = {Tok::kStar, "*", line, col}; return;
      case '(':
        if (pos_ + 2 < in_.size() && in_[pos_ + 1] == '*' && in_[pos_ + 2] == ')') {
          bump(); bump(); bump();
          current_ = {Tok::kOtimes, "(*)", line, col};
          return;
        }
        throw ParseError("expected '(*)'", line, col);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

  void bump() {
    if (in_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& in_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token current_{Tok::kEnd, "", 1, 1};
};

class Parser {
 public:
  Parser(const std::string& text, int rank) : lex_(text), rank_(rank) {}

  Scalar scalar_only() {
    const Scalar c = signed_rational();
    expect_end();
    return c;
  }

  LatticePoint point_only() {
    const LatticePoint p = LatticePoint(tuple());
    expect_end();
    return p;
  }

  WittElement element_only() {
    WittElement u(rank_);
    if (zero_input()) return u;
    bool negative = leading_sign();
    for (;;) {
      const auto [c, x, d] = term();
      u.add_term(x, (negative ? -c : c) * d);
      if (lex_.peek().kind == Tok::kPlus) { lex_.take(); negative = false; continue; }
      if (lex_.peek().kind == Tok::kMinus) { lex_.take(); negative = true; continue; }
      break;
    }
    expect_end();
    return u;
  }

  Tensor2 tensor2_only() {
    Tensor2 t(rank_);
    if (zero_input()) return t;
    collect_tensor_terms(2, &t, nullptr);
    expect_end();
    return t;
  }

  Tensor3 tensor3_only() {
    Tensor3 t(rank_);
    if (zero_input()) return t;
    collect_tensor_terms(3, nullptr, &t);
    expect_end();
    return t;
  }

  std::variant<Tensor2, Tensor3> tensor_any() {
    if (zero_input()) return Tensor2(rank_);
    Tensor2 t2(rank_);
    Tensor3 t3(rank_);
    const int arity = collect_tensor_terms(0, &t2, &t3);
    expect_end();
    if (arity == 2) return t2;
    return t3;
  }

 private:
  struct Factor {
    LatticePoint x;
    TorusVector d;
  };

  bool zero_input() {
    if (lex_.peek().kind != Tok::kNumber || lex_.peek().text != "0") return false;
    // lone literal zero
    Lexer probe = lex_;
    probe.take();
    if (probe.peek().kind != Tok::kEnd) return false;
    lex_.take();
    return true;
  }

  bool leading_sign() {
    if (lex_.peek().kind == Tok::kMinus) { lex_.take(); return true; }
    if (lex_.peek().kind == Tok::kPlus) lex_.take();
    return false;
  }

  // Fixed arity when requested (2 or 3); otherwise locked by the first term.
  int collect_tensor_terms(int arity, Tensor2* t2, Tensor3* t3) {
    bool negative = leading_sign();
    for (;;) {
      const Token at = lex_.peek();
      Scalar c = coefficient();
      if (negative) c = -c;
      std::vector<Factor> factors;
      factors.push_back(factor());
      while (lex_.peek().kind == Tok::kOtimes) {
        lex_.take();
        factors.push_back(factor());
      }
      if (arity == 0) arity = static_cast<int>(factors.size());
      if (static_cast<int>(factors.size()) != arity || arity < 2 || arity > 3)
        throw ParseError("expected a " + std::to_string(arity == 0 ? 2 : arity) +
                             "-fold tensor term",
                         at.line, at.column);
      if (arity == 2 && t2) {
        for (int k = 0; k < rank_; ++k)
          for (int l = 0; l < rank_; ++l)
            t2->add_entry(factors[0].x, factors[1].x, k, l,
                          c * factors[0].d[k] * factors[1].d[l]);
      } else if (arity == 3 && t3) {
        for (int k = 0; k < rank_; ++k)
          for (int l = 0; l < rank_; ++l)
            for (int m = 0; m < rank_; ++m)
              t3->add_entry(factors[0].x, factors[1].x, factors[2].x, k, l, m,
                            c * factors[0].d[k] * factors[1].d[l] * factors[2].d[m]);
      }
      if (lex_.peek().kind == Tok::kPlus) { lex_.take(); negative = false; continue; }
      if (lex_.peek().kind == Tok::kMinus) { lex_.take(); negative = true; continue; }
      break;
    }
    return arity;
  }

  std::tuple<Scalar, LatticePoint, TorusVector> term() {
    const Scalar c = coefficient();
    const Factor f = factor();
    return {c, f.x, f.d};
  }

  // A rational is a coefficient only when '*' follows.
  Scalar coefficient() {
    if (lex_.peek().kind != Tok::kNumber) return Scalar(1);
    const Token num = lex_.take();
    if (lex_.peek().kind != Tok::kStar)
      throw ParseError("expected '*' after coefficient", lex_.peek().line,
                       lex_.peek().column);
    lex_.take();
    return Scalar::from_string(num.text);
  }

  Factor factor() {
    LatticePoint x(rank_);
    if (lex_.peek().kind == Tok::kT) {
      lex_.take();
      x = LatticePoint(tuple());
    }
    if (lex_.peek().kind != Tok::kD)
      throw ParseError("expected 'd[...]'", lex_.peek().line, lex_.peek().column);
    lex_.take();
    return Factor{x, TorusVector(tuple())};
  }

  std::vector<Scalar> tuple() {
    const Token open = lex_.peek();
    if (open.kind != Tok::kLBrack)
      throw ParseError("expected '['", open.line, open.column);
    lex_.take();
    std::vector<Scalar> out;
    for (;;) {
      out.push_back(signed_rational());
      if (lex_.peek().kind == Tok::kComma) { lex_.take(); continue; }
      break;
    }
    if (lex_.peek().kind != Tok::kRBrack)
      throw ParseError("expected ']' or ','", lex_.peek().line, lex_.peek().column);
    lex_.take();
    if (static_cast<int>(out.size()) != rank_)
      throw ParseError("tuple of length " + std::to_string(out.size()) +
                           " does not match rank " + std::to_string(rank_),
                       open.line, open.column);
    return out;
  }

  Scalar signed_rational() {
    bool neg = false;
    if (lex_.peek().kind == Tok::kMinus) { lex_.take(); neg = true; }
    else if (lex_.peek().kind == Tok::kPlus) lex_.take();
    if (lex_.peek().kind != Tok::kNumber)
      throw ParseError("expected a rational literal", lex_.peek().line,
                       lex_.peek().column);
    const Token num = lex_.take();
    Scalar c = Scalar::from_string(num.text);
    return neg ? -c : c;
  }

  void expect_end() {
    if (lex_.peek().kind != Tok::kEnd)
      throw ParseError("unexpected trailing input", lex_.peek().line,
                       lex_.peek().column);
  }

  Lexer lex_;
  int rank_;
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
  return Parser(text, 1).scalar_only();
}

LatticePoint parse_point(const std::string& text, int rank) {
  return Parser(text, rank).point_only();
}

WittElement parse_element(const std::string& text, int rank) {
  return Parser(text, rank).element_only();
}

Tensor2 parse_tensor2(const std::string& text, int rank) {
  return Parser(text, rank).tensor2_only();
}

Tensor3 parse_tensor3(const std::string& text, int rank) {
  return Parser(text, rank).tensor3_only();
}

std::variant<Tensor2, Tensor3> parse_tensor_any(const std::string& text,
                                                int rank) {
  return Parser(text, rank).tensor_any();
}

DerivationTable parse_derivation_table(const std::string& text, int rank) {
  DerivationTable table;
  table.rank = rank;
  std::size_t start = 0;
  int line_no = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::size_t sep = line.find(" : ");
    if (sep == std::string::npos)
      throw ParseError("expected 'monomial : tensor'", line_no, 1);
    const WittElement u = parse_element(line.substr(0, sep), rank);
    const auto terms = monomial_terms(u);
    if (terms.size() != 1 || !terms.front().first.is_one())
      throw ParseError("window entry must be a single basis monomial",
                       line_no, 1);
    const Monomial m = terms.front().second;
    if (table.values.count(m))
      throw ParseError("duplicate window monomial", line_no, 1);
    table.window.push_back(m);
    table.values.emplace(m, parse_tensor2(line.substr(sep + 3), rank));
  }
  return table;
}

}  // namespace witt
