#include "sp2brst/expression.hpp"

#include <cctype>
#include <vector>

namespace sp2brst {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExpressionContext& ctx)
      : text_(text), ctx_(ctx) {}

  GradedPoly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    GradedPoly out = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    if (line == 1) col += ctx_.column_offset;
    throw ParseError(msg, line + ctx_.line_offset, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'" +
           (at_end() ? " at end of input" : ""));
    }
  }

  GradedPoly expr() {
    GradedPoly out = term();
    for (;;) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  GradedPoly term() {
    GradedPoly out = unary();
    while (accept('*')) out = out * unary();
    return out;
  }

  GradedPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  GradedPoly power() {
    skip_space();
    const std::size_t start = pos_;
    auto [base, generator] = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t exp_pos = pos_;
    const long e = integer();
    if (e < 0) fail_at(exp_pos, "negative exponent");
    if (generator && generator->odd && e > 1) {
      fail_at(start, "Grassmann-odd generator " + to_string(*generator) +
                         " raised to power " + std::to_string(e));
    }
    GradedPoly out = GradedPoly::constant(1);
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail_at(start, "integer too large here");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<GradedPoly, std::optional<Variable>> atom() {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      GradedPoly inner = expr();
      expect(')');
      return {inner, std::nullopt};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(digits());
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t den_pos = pos_;
        const std::string den = digits();
        if (den.empty()) fail("expected denominator");
        Rational d(den);
        if (d == 0) fail_at(den_pos, "zero denominator");
        q /= d;
      }
      q.canonicalize();
      return {GradedPoly(q), std::nullopt};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) ||
             peek() == '_' || peek() == '\'') {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      const Variable v = generator(name, start);
      return {GradedPoly(v), v};
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  std::vector<int> indices() {
    std::vector<int> out;
    expect('[');
    do {
      skip_space();
      const long v = integer();
      out.push_back(static_cast<int>(v));
    } while (accept(','));
    expect(']');
    return out;
  }

  Variable generator(const std::string& name, std::size_t start) {
    skip_space();
    if (peek() != '[') {
      if (auto it = ctx_.aliases.find(name); it != ctx_.aliases.end()) {
        return it->second;
      }
      fail_at(start, "unknown name '" + name + "'");
    }
    static const std::map<std::string, int, std::less<>> arity = {
        {"xi", 1}, {"xip", 1}, {"P", 2}, {"C", 2}, {"lam", 1}, {"pi", 1}};
    const auto ar = arity.find(name);
    if (ar == arity.end()) fail_at(start, "unknown generator '" + name + "'");
    const std::vector<int> idx = indices();
    if (static_cast<int>(idx.size()) != ar->second) {
      fail_at(start, name + " takes " + std::to_string(ar->second) +
                         " index(es)");
    }
    if (!ctx_.spec) fail_at(start, "no theory to resolve '" + name + "'");
    const TheorySpec& s = *ctx_.spec;
    const int i = idx[0];
    if (name == "xip") {
      if (i < 1 || i > s.n_physical()) {
        fail_at(start, "physical index " + std::to_string(i) +
                           " out of range 1.." +
                           std::to_string(s.n_physical()));
      }
      return s.xip(i);
    }
    if (i < 1 || i > s.m()) {
      fail_at(start, "constraint index " + std::to_string(i) +
                         " out of range 1.." + std::to_string(s.m()));
    }
    if (ar->second == 2 && idx[1] != 1 && idx[1] != 2) {
      fail_at(start, "Sp(2) index must be 1 or 2");
    }
    if (name == "xi") return s.xi(i);
    if (name == "P") return s.P(i, idx[1]);
    if (name == "C") return s.C(i, idx[1]);
    if (name == "lam") return s.lam(i);
    return s.pi(i);
  }

  std::string_view text_;
  const ExpressionContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly parse_expression(std::string_view text,
                            const ExpressionContext& ctx) {
  return Parser(text, ctx).parse();
}

GradedPoly parse_expression(std::string_view text, const TheorySpec& spec) {
  ExpressionContext ctx;
  ctx.spec = &spec;
  return parse_expression(text, ctx);
}

std::string serialize(const GradedPoly& x) { return to_string(x); }

}  // namespace sp2brst
