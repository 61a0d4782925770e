#include "fsk/parse.hpp"

#include <cctype>

#include "fsk/error.hpp"

namespace fsk {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : Error(ErrorKind::Parse,
            std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column)
      : s_(text), ring_(ring), line0_(line), col0_(column) {}

  Polynomial parse_all() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    skip_ws();
    if (pos_ >= s_.size()) return out;
    out.push_back(expr());
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      out.push_back(expr());
      skip_ws();
    }
    if (pos_ < s_.size()) fail("expected ',' or end of list");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = line0_, col = col0_;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(ring_);
    bool negate = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
      bool minus = s_[pos_] == '-';
      ++pos_;
      Polynomial u = term();
      acc = minus ? acc - u : acc + u;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  std::uint64_t integer() {
    std::uint64_t v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100000000000000000ULL) fail("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      std::uint64_t e = integer();
      b = b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of polynomial");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = integer();
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v % ring_->p()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t line0_, col0_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line,
                            std::size_t column) {
  return PolyParser(text, ring, line, column).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              std::size_t line, std::size_t column) {
  return PolyParser(text, ring, line, column).parse_list();
}

}  // namespace fsk
