#include "itin/literal.hpp"

#include <string>

#include "itin/error.hpp"

namespace itin {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s, std::size_t base = 0) : s_(s), base_(base) {}

  bool at_end() const { return pos_ == s_.size(); }
  std::size_t pos() const { return pos_; }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) {
      if (at_end()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    }
    ++pos_;
  }

  Word word() {
    Word w;
    while (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '1' || s_[pos_] == '2'))
      w.push_back(symbol_from_char(s_[pos_++]));
    return w;
  }

  void finish() {
    if (!at_end()) fail(std::string("unexpected character '") + s_[pos_] + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(base_ + pos_, what); }

  ForwardSeq forward() {
    Word prefix = word();
    expect('(');
    Word period = word();
    expect(')');
    expect('#');
    if (period.empty()) throw Error(ErrorKind::EmptyPeriod, "forward literal has an empty period");
    return ForwardSeq(std::move(prefix), std::move(period));
  }

  BackSeq back() {
    expect('#');
    expect('(');
    Word period = word();
    expect(')');
    Word suffix = word();
    if (period.empty()) throw Error(ErrorKind::EmptyPeriod, "backward literal has an empty period");
    return BackSeq(std::move(period), std::move(suffix));
  }

 private:
  std::string_view s_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

ForwardSeq parse_forward(std::string_view s) {
  Parser p(s);
  ForwardSeq x = p.forward();
  p.finish();
  return x;
}

BackSeq parse_back(std::string_view s) {
  Parser p(s);
  BackSeq e = p.back();
  p.finish();
  return e;
}

BiSeq parse_biseq(std::string_view s) {
  Parser p(s);
  BackSeq e = p.back();
  p.expect('.');
  ForwardSeq x = p.forward();
  p.finish();
  return {std::move(e), std::move(x)};
}

KneadingSeq parse_kneading(std::string_view s) { return KneadingSeq(parse_forward(s)); }

Literal parse_literal(std::string_view s) {
  if (s.empty()) throw SyntaxError(0, "empty literal");
  if (s.front() != '#') return parse_forward(s);
  if (s.find('.') != std::string_view::npos) return parse_biseq(s);
  return parse_back(s);
}

std::string to_string(const Literal& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

}  // namespace itin
