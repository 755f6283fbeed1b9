#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "anfgb/problem.hpp"

namespace anfgb {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Recursive descent over
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | identifier | '(' expr ')'
class PolyParser {
public:
  PolyParser(std::string_view src, const RingQ& ring, std::size_t line, std::size_t col0)
      : src_(src), ring_(ring), line_(line), col0_(col0) {}

  PolyQ parse() {
    PolyQ p = expr();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::ParseError) const {
    throw ParseError(code, line_, col0_ + pos_ + 1, msg);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  std::optional<char> peek() {
    skip_ws();
    if (pos_ >= src_.size()) return std::nullopt;
    return src_[pos_];
  }

  PolyQ expr() {
    PolyQ acc = term();
    for (auto c = peek(); c && (*c == '+' || *c == '-'); c = peek()) {
      ++pos_;
      PolyQ rhs = term();
      acc = *c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  PolyQ term() {
    PolyQ acc = unary();
    for (auto c = peek(); c && (*c == '*' || *c == '/'); c = peek()) {
      const std::size_t at = pos_++;
      PolyQ rhs = unary();
      if (*c == '*') {
        acc = acc * rhs;
      } else {
        if (!rhs.is_constant() || rhs.is_zero()) {
          pos_ = at;
          fail("division is only allowed by a nonzero rational constant");
        }
        acc = acc.scaled(1 / rhs.lc());
      }
    }
    return acc;
  }

  PolyQ unary() {
    auto c = peek();
    if (c && (*c == '-' || *c == '+')) {
      ++pos_;
      PolyQ inner = unary();
      return *c == '-' ? -inner : inner;
    }
    return power();
  }

  PolyQ power() {
    PolyQ base = atom();
    if (auto c = peek(); c && *c == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      const std::string digits(src_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      const int e = std::stoi(digits);
      PolyQ r = PolyQ::constant(ring_, 1);
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  PolyQ atom() {
    auto c = peek();
    if (!c) fail("unexpected end of expression");
    if (*c == '(') {
      ++pos_;
      PolyQ inner = expr();
      if (auto close = peek(); !close || *close != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(*c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return PolyQ::constant(ring_, Rational(Integer(std::string(src_.substr(start, pos_ - start)))));
    }
    if (is_ident_start(*c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      const auto& names = ring_->names;
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        pos_ = start;
        fail("undeclared variable '" + name + "'", ErrorCode::UndeclaredVariable);
      }
      return PolyQ::variable(ring_, static_cast<std::size_t>(it - names.begin()));
    }
    fail("unexpected '" + std::string(1, *c) + "'");
  }

  std::string_view src_;
  const RingQ& ring_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

bool valid_identifier(const std::string& s) {
  return !s.empty() && is_ident_start(s[0]) && std::all_of(s.begin(), s.end(), is_ident_char);
}

}  // namespace

PolyQ parse_polynomial(std::string_view text, const RingQ& ring) {
  return PolyParser(text, ring, 1, 0).parse();
}

Problem parse_problem(std::string_view text) {
  Problem prob;
  bool have_vars = false, have_minvar = false, have_order = false;
  std::optional<PolyQ> minpoly;
  std::size_t minpoly_line = 0;
  struct PendingGen {
    std::string text;
    std::size_t line, col;
  };
  std::vector<PendingGen> pending;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t kw_begin = 0;
    while (kw_begin < line.size() && std::isspace(static_cast<unsigned char>(line[kw_begin]))) ++kw_begin;
    if (kw_begin == line.size()) continue;
    std::size_t kw_end = kw_begin;
    while (kw_end < line.size() && !std::isspace(static_cast<unsigned char>(line[kw_end]))) ++kw_end;
    const std::string keyword(line.substr(kw_begin, kw_end - kw_begin));
    const std::string_view rest = line.substr(kw_end);
    const std::size_t rest_col = kw_end;
    auto fail = [&](const std::string& msg, ErrorCode code = ErrorCode::ParseError,
                    std::size_t col = 0) -> void {
      throw ParseError(code, line_no, col ? col : kw_begin + 1, msg);
    };
    auto words = [&] {
      std::vector<std::pair<std::string, std::size_t>> out;
      std::size_t i = 0;
      while (i < rest.size()) {
        while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        const std::size_t b = i;
        while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        if (b < i) out.emplace_back(std::string(rest.substr(b, i - b)), rest_col + b + 1);
      }
      return out;
    };

    if (keyword == "vars") {
      if (have_vars) fail("duplicate 'vars' line");
      auto ws = words();
      if (ws.empty()) fail("'vars' needs at least one name");
      for (const auto& [name, col] : ws) {
        if (!valid_identifier(name)) fail("invalid variable name '" + name + "'", ErrorCode::ParseError, col);
        if (std::find(prob.vars.begin(), prob.vars.end(), name) != prob.vars.end()) {
          fail("variable '" + name + "' declared twice", ErrorCode::DuplicateVariable, col);
        }
        prob.vars.push_back(name);
      }
      if (prob.vars.size() + 1 > kMaxVariables) fail("too many variables");
      have_vars = true;
    } else if (keyword == "minvar") {
      if (have_minvar) fail("duplicate 'minvar' line");
      auto ws = words();
      if (ws.size() != 1) fail("'minvar' takes exactly one name");
      if (!valid_identifier(ws[0].first)) fail("invalid name '" + ws[0].first + "'", ErrorCode::ParseError, ws[0].second);
      prob.minvar = ws[0].first;
      have_minvar = true;
    } else if (keyword == "order") {
      if (have_order) fail("duplicate 'order' line");
      auto ws = words();
      if (ws.size() != 1) fail("'order' takes exactly one of degrevlex, lex");
      if (ws[0].first == "degrevlex") {
        prob.order = BaseOrder::DegRevLex;
      } else if (ws[0].first == "lex") {
        prob.order = BaseOrder::Lex;
      } else {
        fail("unknown order '" + ws[0].first + "'", ErrorCode::ParseError, ws[0].second);
      }
      have_order = true;
    } else if (keyword == "minpoly" || keyword == "gen") {
      if (!have_vars || !have_minvar) fail("'vars' and 'minvar' must precede '" + keyword + "'");
      if (!prob.ring) {
        if (std::find(prob.vars.begin(), prob.vars.end(), prob.minvar) != prob.vars.end()) {
          fail("'" + prob.minvar + "' is both a variable and the minvar", ErrorCode::DuplicateVariable);
        }
        std::vector<std::string> names = prob.vars;
        names.push_back(prob.minvar);
        // The order is fixed up below once the 'order' line has been seen.
        prob.ring = make_ring(RationalField{}, names, MonomialOrder::degrevlex());
      }
      if (keyword == "minpoly") {
        if (minpoly) fail("duplicate 'minpoly' line");
        minpoly = PolyParser(rest, prob.ring, line_no, rest_col).parse();
        minpoly_line = line_no;
      } else {
        pending.push_back({std::string(rest), line_no, rest_col});
      }
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }

  if (!have_vars) throw ParseError(ErrorCode::ParseError, line_no, 1, "missing 'vars' line");
  if (!have_minvar) throw ParseError(ErrorCode::ParseError, line_no, 1, "missing 'minvar' line");
  if (!minpoly) throw ParseError(ErrorCode::ParseError, line_no, 1, "missing 'minpoly' line");

  const std::size_t n = prob.vars.size();
  prob.ring = make_ring(RationalField{}, prob.ring->names, MonomialOrder::product(prob.order, n));

  // minpoly must live in the minvar alone.
  std::vector<Rational> fc;
  for (const auto& t : minpoly->terms()) {
    if (t.mono.degree(0, n) != 0) {
      throw ParseError(ErrorCode::ParseError, minpoly_line, 1,
                       "minpoly may only involve '" + prob.minvar + "'");
    }
    const std::size_t d = t.mono[n];
    if (fc.size() <= d) fc.resize(d + 1, 0);
    fc[d] = t.coef;
  }
  UniPolyQ f(RationalField{}, std::move(fc));
  if (f.degree() < 1) {
    throw ParseError(ErrorCode::NonMonicMinpoly, minpoly_line, 1,
                     "minpoly must have degree >= 1 to be normalised to monic");
  }
  prob.minpoly = monic(f);

  for (const auto& g : pending) {
    PolyQ p = PolyParser(g.text, prob.ring, g.line, g.col).parse();
    // Re-sort under the final order.
    p = PolyQ::from_terms(prob.ring, p.terms());
    for (const auto& t : p.terms()) {
      if (static_cast<int>(t.mono[n]) >= prob.minpoly.degree()) {
        throw ParseError(ErrorCode::ParseError, g.line, g.col + 1,
                         "'" + prob.minvar + "' appears with degree >= deg minpoly");
      }
    }
    prob.generators.push_back(std::move(p));
  }
  return prob;
}

}  // namespace anfgb
