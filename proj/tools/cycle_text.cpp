#include "cycle_text.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "chowsq/error.hpp"
#include "chowsq/pn_models.hpp"

namespace chowsq::cli {

namespace {

struct Factor {
  char letter;
  int index;
  std::size_t column;
};

using Term = std::vector<Factor>;

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view letters) : text_(text), letters_(letters) {}

  std::vector<Term> parse() {
    skip_space();
    if (at_end()) throw ParseError("empty cycle expression", column());
    if (peek() == '0') {
      ++pos_;
      skip_space();
      if (!at_end()) throw ParseError("unexpected '" + std::string(1, peek()) + "'", column());
      return {};
    }
    std::vector<Term> terms;
    terms.push_back(term());
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+') throw ParseError("expected '+' or end of input, got '" + std::string(1, peek()) + "'", column());
      ++pos_;
      terms.push_back(term());
    }
    return terms;
  }

 private:
  Term term() {
    Term t{factor()};
    skip_space();
    if (!at_end() && peek() == 'x') {
      ++pos_;
      t.push_back(factor());
    }
    return t;
  }

  Factor factor() {
    skip_space();
    if (at_end()) throw ParseError("expected a factor, got end of input", column());
    const char c = peek();
    if (letters_.find(c) == std::string_view::npos) {
      throw ParseError("expected one of '" + std::string(letters_) + "', got '" + std::string(1, c) + "'", column());
    }
    const std::size_t start = column();
    ++pos_;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(at_end() ? std::string("expected an unsigned integer, got end of input")
                                : "expected an unsigned integer, got '" + std::string(1, peek()) + "'",
                       column());
    }
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) throw ParseError("index too large", start);
      ++pos_;
    }
    return {c, static_cast<int>(value), start};
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t column() const { return pos_ + 1; }

  std::string_view text_;
  std::string_view letters_;
  std::size_t pos_ = 0;
};

QuadricBasisElement element(const Factor& f, const QuadricContext& ctx) {
  QuadricBasisElement e{f.letter == 'h' ? BasisKind::H : BasisKind::L, f.index};
  if (e.index > ctx.d) {
    throw ParseError(str(e) + " out of range for a quadric of dimension " + std::to_string(ctx.D) +
                         " (indices 0.." + std::to_string(ctx.d) + ")",
                     f.column);
  }
  return e;
}

int pn_index(const Factor& f, int n) {
  if (f.index > n) {
    throw ParseError(std::string(1, f.letter) + std::to_string(f.index) + " out of range for P^" + std::to_string(n),
                     f.column);
  }
  return f.index;
}

void require_single(const Term& t) {
  if (t.size() != 1) throw ParseError("product term not allowed here", t[1].column);
}

}  // namespace

QuadricF2Cycle parse_quadric_cycle(std::string_view text, const QuadricContext& ctx) {
  QuadricF2Cycle out;
  for (const auto& t : Lexer(text, "hl").parse()) {
    require_single(t);
    out.toggle(element(t[0], ctx));
  }
  return out;
}

ProductF2Cycle parse_product_cycle(std::string_view text, const QuadricContext& ctx) {
  ProductF2Cycle out;
  for (const auto& t : Lexer(text, "hl").parse()) {
    if (t.size() != 2) throw ParseError("expected a product term 'a x b'", t[0].column);
    out.toggle({element(t[0], ctx), element(t[1], ctx)});
  }
  return out;
}

bool is_product_expression(std::string_view text) { return text.find('x') != std::string_view::npos; }

ModTwoCycle parse_pn_cycle(std::string_view text, int n) {
  ModTwoCycle out(std::vector<std::size_t>(n + 1, 1));
  for (const auto& t : Lexer(text, "p").parse()) {
    require_single(t);
    out.flip(pn_index(t[0], n), 0);
  }
  return out;
}

K0Vector parse_pn_class(std::string_view text, const VarietyModel& model) {
  K0Vector out;
  for (const auto& t : Lexer(text, "o").parse()) {
    require_single(t);
    const int j = pn_index(t[0], model.dim());
    out.add(model.generator_index("O_P" + std::to_string(j)), 1);
  }
  return out;
}

}  // namespace chowsq::cli
