#include <dequiv/expr.hpp>

#include <cctype>

namespace dequiv::sheaf {

namespace {

std::string describe(std::size_t position, const std::vector<std::string>& expected, std::string_view input) {
  std::string msg = "parse error at position " + std::to_string(position) + " in \"" + std::string(input) +
                    "\": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += (i + 1 == expected.size()) ? " or " : ", ";
    msg += expected[i];
  }
  return msg;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FilteredBundle bundle() {
    FilteredBundle v = expr();
    skip();
    if (pos_ != text_.size()) fail({"'*'", "'('", "end of input"});
    return v;
  }

  LineClass line_class() {
    LineClass c = lin();
    skip();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "end of input"});
    return c;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const { throw ParseError(pos_, std::move(expected), text_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail({"'" + std::string(token) + "'"});
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  FilteredBundle expr() {
    FilteredBundle v = term();
    while (accept("*")) v = tensor(v, term());
    return v;
  }

  FilteredBundle term() {
    FilteredBundle v = prim();
    while (accept("(")) {
      v = twist(v, lin());
      expect(")");
    }
    return v;
  }

  FilteredBundle prim() {
    skip();
    if (accept("O")) {
      if (!accept("(")) return FilteredBundle::line({});
      LineClass c = lin();
      expect(")");
      return FilteredBundle::line(c);
    }
    if (accept("dual")) {
      expect("(");
      FilteredBundle v = expr();
      expect(")");
      return dual(v);
    }
    if (accept("Sprime")) return FilteredBundle::Sprime();
    if (accept("Ud")) return FilteredBundle::Ud();
    if (accept("U")) return FilteredBundle::U();
    if (accept("Kd")) return FilteredBundle::Kd();
    if (accept("K")) return FilteredBundle::K();
    fail({"'O('", "'U'", "'Ud'", "'K'", "'Kd'", "'Sprime'", "'dual('"});
  }

  // lin := ["+"|"-"] mono (("+"|"-") mono)*, mono := [digits] ("h"|"H") | digits
  LineClass lin() {
    LineClass c;
    bool first = true;
    for (;;) {
      skip();
      Int sign = 1;
      if (accept("-"))
        sign = -1;
      else if (accept("+") || first)
        ;
      else
        break;
      skip();
      std::size_t start = pos_;
      Int coeff = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        coeff = coeff * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      const bool has_digits = pos_ > start;
      skip();
      if (peek('h') || peek('H')) {
        const char sym = text_[pos_++];
        const Int k = sign * (has_digits ? coeff : Int(1));
        if (sym == 'h')
          c.a += k;
        else
          c.b += k;
      } else if (has_digits) {
        if (coeff != 0) fail({"'h'", "'H'"});
      } else {
        fail({"integer", "'h'", "'H'"});
      }
      first = false;
      skip();
      if (!peek('+') && !peek('-')) break;
    }
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string_view input)
    : std::runtime_error(describe(position, expected, input)), position_(position), expected_(std::move(expected)) {}

FilteredBundle parse_bundle(std::string_view text) { return Parser(text).bundle(); }

LineClass parse_line_class(std::string_view text) { return Parser(text).line_class(); }

}  // namespace dequiv::sheaf
