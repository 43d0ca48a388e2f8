#include "qsem/formula.hpp"

#include <cctype>
#include <optional>
#include <unordered_set>
#include <utility>

namespace qsem {

FormulaPtr Formula::atom(std::string name) {
  return FormulaPtr(new Formula(Kind::atom, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::negation(FormulaPtr child) {
  return FormulaPtr(
      new Formula(Kind::negation, {}, std::move(child), nullptr));
}

FormulaPtr Formula::conjunction(FormulaPtr left, FormulaPtr right) {
  return FormulaPtr(
      new Formula(Kind::conjunction, {}, std::move(left), std::move(right)));
}

FormulaPtr Formula::disjunction(FormulaPtr left, FormulaPtr right) {
  return FormulaPtr(
      new Formula(Kind::disjunction, {}, std::move(left), std::move(right)));
}

FormulaPtr Formula::implication(FormulaPtr left, FormulaPtr right) {
  return FormulaPtr(
      new Formula(Kind::implication, {}, std::move(left), std::move(right)));
}

bool Formula::equals(const Formula& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::atom:
      return name_ == other.name_;
    case Kind::negation:
      return left_->equals(*other.left_);
    default:
      return left_->equals(*other.left_) && right_->equals(*other.right_);
  }
}

namespace {

enum class TokenKind {
  atom,
  bang,
  ampersand,
  pipe,
  arrow,
  lparen,
  rparen,
  end,
  bad
};

struct Token {
  TokenKind kind;
  std::string text;      // identifier text for atoms
  std::size_t position;  // character offset
};

/// Byte-level lexer. Multi-byte glyph aliases each count as one character
/// so that reported offsets match what a reader sees.
class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  Token next() {
    skip_whitespace();
    const std::size_t pos = chars_;
    if (byte_ >= input_.size()) {
      return {TokenKind::end, {}, pos};
    }
    const unsigned char c = input_[byte_];
    if (std::isalpha(c)) {
      std::size_t start = byte_;
      while (byte_ < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[byte_])) ||
              input_[byte_] == '_')) {
        ++byte_;
        ++chars_;
      }
      return {TokenKind::atom,
              std::string(input_.substr(start, byte_ - start)), pos};
    }
    switch (c) {
      case '!':
        advance(1);
        return {TokenKind::bang, {}, pos};
      case '&':
        advance(1);
        return {TokenKind::ampersand, {}, pos};
      case '|':
        advance(1);
        return {TokenKind::pipe, {}, pos};
      case '(':
        advance(1);
        return {TokenKind::lparen, {}, pos};
      case ')':
        advance(1);
        return {TokenKind::rparen, {}, pos};
      case '-':
        if (byte_ + 1 < input_.size() && input_[byte_ + 1] == '>') {
          advance(2);
          return {TokenKind::arrow, {}, pos};
        }
        return {TokenKind::bad, {}, pos};
      default:
        break;
    }
    if (match_bytes("\xc2\xac")) return {TokenKind::bang, {}, pos};
    if (match_bytes("\xe2\x8a\x93")) return {TokenKind::ampersand, {}, pos};
    if (match_bytes("\xe2\x8a\x94")) return {TokenKind::pipe, {}, pos};
    if (match_bytes("\xe2\x86\x92")) return {TokenKind::arrow, {}, pos};
    return {TokenKind::bad, {}, pos};
  }

 private:
  void skip_whitespace() {
    while (byte_ < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[byte_]))) {
      ++byte_;
      ++chars_;
    }
  }

  void advance(std::size_t nbytes) {
    byte_ += nbytes;
    chars_ += nbytes;
  }

  bool match_bytes(std::string_view seq) {
    if (input_.substr(byte_, seq.size()) != seq) return false;
    byte_ += seq.size();
    chars_ += 1;
    return true;
  }

  std::string_view input_;
  std::size_t byte_ = 0;
  std::size_t chars_ = 0;
};

class Parser {
 public:
  // Caps `!`/`(` nesting so arbitrarily long inputs cannot exhaust the
  // stack; generous for any formula written by hand.
  static constexpr int kMaxNesting = 2000;

  explicit Parser(std::string_view input) : lexer_(input) { shift(); }

  ParseResult run() {
    FormulaPtr f = implication();
    if (!f) return *error_;
    if (current_.kind != TokenKind::end) {
      return ParseError{current_.position, "unexpected trailing input"};
    }
    return f;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  FormulaPtr fail(std::string message) {
    if (!error_) {
      error_ = ParseError{current_.position, std::move(message)};
    }
    return nullptr;
  }

  FormulaPtr implication() {
    FormulaPtr left = disjunction();
    if (!left) return nullptr;
    if (current_.kind == TokenKind::arrow) {
      shift();
      FormulaPtr right = implication();  // right-associative
      if (!right) return nullptr;
      return Formula::implication(std::move(left), std::move(right));
    }
    return left;
  }

  FormulaPtr disjunction() {
    FormulaPtr left = conjunction();
    if (!left) return nullptr;
    while (current_.kind == TokenKind::pipe) {
      shift();
      FormulaPtr right = conjunction();
      if (!right) return nullptr;
      left = Formula::disjunction(std::move(left), std::move(right));
    }
    return left;
  }

  FormulaPtr conjunction() {
    FormulaPtr left = unary();
    if (!left) return nullptr;
    while (current_.kind == TokenKind::ampersand) {
      shift();
      FormulaPtr right = unary();
      if (!right) return nullptr;
      left = Formula::conjunction(std::move(left), std::move(right));
    }
    return left;
  }

  FormulaPtr unary() {
    if (current_.kind == TokenKind::bang) {
      if (++depth_ > kMaxNesting) return fail("formula nesting too deep");
      shift();
      FormulaPtr child = unary();
      --depth_;
      if (!child) return nullptr;
      return Formula::negation(std::move(child));
    }
    return primary();
  }

  FormulaPtr primary() {
    switch (current_.kind) {
      case TokenKind::atom: {
        FormulaPtr f = Formula::atom(current_.text);
        shift();
        return f;
      }
      case TokenKind::lparen: {
        if (++depth_ > kMaxNesting) return fail("formula nesting too deep");
        shift();
        FormulaPtr inner = implication();
        --depth_;
        if (!inner) return nullptr;
        if (current_.kind != TokenKind::rparen) {
          return fail("expected ')'");
        }
        shift();
        return inner;
      }
      case TokenKind::bad:
        return fail("unexpected character");
      default:
        return fail("expected an atom, '!' or '('");
    }
  }

  Lexer lexer_;
  Token current_{TokenKind::end, {}, 0};
  std::optional<ParseError> error_;
  int depth_ = 0;
};

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::implication:
      return 1;
    case Formula::Kind::disjunction:
      return 2;
    case Formula::Kind::conjunction:
      return 3;
    case Formula::Kind::negation:
      return 4;
    case Formula::Kind::atom:
      return 5;
  }
  return 5;
}

void render_into(const Formula& f, int min_prec, std::string& out) {
  const bool parens = precedence(f.kind()) < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::atom:
      out += f.name();
      break;
    case Formula::Kind::negation:
      out += '!';
      render_into(*f.left(), 4, out);
      break;
    case Formula::Kind::conjunction:
      render_into(*f.left(), 3, out);
      out += " & ";
      render_into(*f.right(), 4, out);
      break;
    case Formula::Kind::disjunction:
      render_into(*f.left(), 2, out);
      out += " | ";
      render_into(*f.right(), 3, out);
      break;
    case Formula::Kind::implication:
      render_into(*f.left(), 2, out);
      out += " -> ";
      render_into(*f.right(), 1, out);
      break;
  }
  if (parens) out += ')';
}

void collect_atoms(const Formula& f, std::vector<std::string>& out,
                   std::unordered_set<std::string>& seen) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      if (seen.insert(f.name()).second) {
        out.push_back(f.name());
      }
      break;
    case Formula::Kind::negation:
      collect_atoms(*f.left(), out, seen);
      break;
    default:
      collect_atoms(*f.left(), out, seen);
      collect_atoms(*f.right(), out, seen);
      break;
  }
}

}  // namespace

ParseResult parse(std::string_view input) { return Parser(input).run(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, 1, out);
  return out;
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_atoms(f, out, seen);
  return out;
}

}  // namespace qsem
