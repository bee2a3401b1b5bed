#include "mulprob/ket.hpp"

#include <cctype>

#include "mulprob/errors.hpp"

namespace mulprob {

std::string format(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::atom:
      return v.name();
    case Value::Kind::tuple: {
      std::string out = "(";
      bool first = true;
      for (const auto& x : v.items()) {
        if (!first) out += ',';
        first = false;
        out += format(x);
      }
      return out + ')';
    }
    case Value::Kind::multiset:
      return format(v.multiset());
    case Value::Kind::dist:
      return format(v.dist());
  }
  return {};
}

std::string format(const Multiset& m) {
  std::string out = "[";
  bool first = true;
  for (const auto& [x, n] : m.entries()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(n) + ' ' + format(x);
  }
  return out + ']';
}

std::string format(const Dist& d) {
  std::string out = "<";
  bool first = true;
  for (const auto& [x, w] : d.entries()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(w) + ' ' + format(x);
  }
  return out + '>';
}

std::string format(const Predicate& p) {
  std::string out = "(";
  bool first = true;
  for (const auto& [x, v] : p.entries()) {
    if (!first) out += ", ";
    first = false;
    out += format(x) + ':' + to_string(v);
  }
  return out + ')';
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Parsed top() {
    skip_space();
    Parsed result = peek() == '(' && looks_like_predicate() ? Parsed(predicate())
                                                             : Parsed(value());
    finish();
    return result;
  }

  Value value() {
    skip_space();
    switch (peek()) {
      case '[':
        return Value(multiset());
      case '<':
        return Value(dist());
      case '(':
        return tuple();
      default:
        return Value::atom(ident());
    }
  }

  Multiset multiset() {
    expect('[');
    std::vector<Multiset::Entry> entries;
    skip_space();
    if (peek() == ']') {
      ++pos_;
      return Multiset();
    }
    for (;;) {
      skip_space();
      const std::size_t n = natural();
      Value x = value();
      entries.emplace_back(std::move(x), n);
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    return Multiset(std::move(entries));
  }

  Dist dist() {
    const std::size_t start = pos_;
    expect('<');
    std::vector<Dist::Entry> entries;
    for (;;) {
      Rational w = rational();
      Value x = value();
      entries.emplace_back(std::move(x), std::move(w));
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('>');
      break;
    }
    try {
      return Dist(std::move(entries));
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid distribution: ") + e.what(), start);
    }
  }

  Predicate predicate() {
    const std::size_t start = pos_;
    expect('(');
    std::vector<Predicate::Entry> entries;
    for (;;) {
      skip_space();
      Value x = Value::atom(ident());
      expect(':');
      Rational v = rational();
      entries.emplace_back(std::move(x), std::move(v));
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    try {
      return Predicate(std::move(entries));
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid predicate: ") + e.what(), start);
    }
  }

  ChannelTable channel() {
    expect('{');
    ChannelTable rows;
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      Value x = value();
      for (const auto& row : rows) {
        if (row.first == x) throw ParseError("channel defined twice on " + format(x), at);
      }
      expect(':');
      skip_space();
      Dist d = dist();
      rows.emplace_back(std::move(x), std::move(d));
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      break;
    }
    return rows;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

 private:
  Value tuple() {
    expect('(');
    std::vector<Value> items;
    skip_space();
    if (peek() == ')') {
      ++pos_;
      return Value::tuple({});
    }
    for (;;) {
      items.push_back(value());
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    return Value::tuple(std::move(items));
  }

  bool looks_like_predicate() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    while (p < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_')) {
      ++p;
    }
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == ':';
  }

  std::string ident() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() ||
        !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      fail("expected identifier");
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t natural() {
    skip_space();
    const std::size_t start = pos_;
    const std::string ds = digits();
    if (ds.size() > 18) throw ParseError("multiplicity too large", start);
    return static_cast<std::size_t>(std::stoull(ds));
  }

  Rational rational() {
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    Natural num(digits());
    Natural den = 1;
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      den = Natural(digits());
      if (den == 0) throw ParseError("zero denominator", at);
    }
    if (negative) num = -num;
    return make_rational(num, den);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Parsed parse(std::string_view text) { return Parser(text).top(); }

Value parse_value(std::string_view text) {
  Parser p(text);
  Value v = p.value();
  p.finish();
  return v;
}

Multiset parse_multiset(std::string_view text) {
  Parser p(text);
  Multiset m = p.multiset();
  p.finish();
  return m;
}

Dist parse_dist(std::string_view text) {
  Parser p(text);
  Dist d = p.dist();
  p.finish();
  return d;
}

Predicate parse_predicate(std::string_view text) {
  Parser p(text);
  Predicate q = p.predicate();
  p.finish();
  return q;
}

ChannelTable parse_channel(std::string_view text) {
  Parser p(text);
  ChannelTable rows = p.channel();
  p.finish();
  return rows;
}

}  // namespace mulprob
