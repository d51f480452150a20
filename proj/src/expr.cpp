#include "expr.hpp"

#include <cctype>
#include <charconv>

namespace mcgb {

namespace {

template <class T>
ExprPtr make_node(T node) {
  return std::make_shared<Expression>(Expression::Node(std::move(node)));
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[nodiscard]] bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected `") + c + "` " + what, pos);
  }

  int parse_int() {
    skip_ws();
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("expected integer", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }

  // Leading alphabetic run; empty when the next character is not a letter.
  std::string_view peek_ident() {
    skip_ws();
    std::size_t end = pos;
    while (end < text.size() &&
           std::isalpha(static_cast<unsigned char>(text[end])))
      ++end;
    return text.substr(pos, end - pos);
  }

  // R<k> or R{i,j} inside h(...)/t(...); returns the handle span.
  std::pair<int, int> parse_curve_spec() {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'R')
      throw ParseError("expected curve `R<k>` or `R{i,j}`", pos);
    ++pos;
    skip_ws();
    if (pos < text.size() && text[pos] == '{') {
      ++pos;
      const int i = parse_int();
      expect(',', "between span indices");
      const int j = parse_int();
      expect('}', "after span indices");
      if (i < 1 || j < i) throw ParseError("curve span needs 1 <= i <= j", pos);
      return {i, j};
    }
    const int k = parse_int();
    if (k < 1) throw ParseError("curve index must be >= 1", pos);
    return {k, k};
  }

  // Raw text up to the parenthesis matching an already-consumed `(`.
  std::string_view parse_raw_parens() {
    const std::size_t start = pos;
    int depth = 1;
    while (pos < text.size()) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')' && --depth == 0) {
        auto inner = text.substr(start, pos - start);
        ++pos;
        return inner;
      }
      ++pos;
    }
    throw ParseError("missing `)`", pos);
  }

  ExprPtr parse_atom() {
    skip_ws();
    const std::size_t at = pos;
    const std::string_view ident = peek_ident();
    if (ident.empty()) throw ParseError("expected an atom", pos);

    if (ident == "a" || ident == "b" || ident == "w") {
      pos += 1;
      if (pos >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected index after twist letter", pos);
      const int index = parse_int();
      const auto name = ident == "a"   ? McgGenerator::Name::A
                        : ident == "b" ? McgGenerator::Name::B
                                       : McgGenerator::Name::W;
      return make_node(Expression::DehnAtom{name, index});
    }
    if (ident == "beta") {
      pos += 4;
      expect('(', "after beta");
      const int first = parse_int();
      skip_ws();
      if (eat(',')) {
        const int second = parse_int();
        expect(')', "after beta arguments");
        return make_node(Expression::BetaRsAtom{first, second});
      }
      expect(')', "after beta argument");
      return make_node(Expression::BetaAtom{first});
    }
    if (ident == "hR") {
      pos += 2;
      const TwistDir dir = eat('\'') ? TwistDir::Reverse : TwistDir::Forward;
      return make_node(Expression::TwistAtom{true, 0, 0, dir});
    }
    if (ident == "hA") {
      pos += 2;
      const TwistDir dir = eat('\'') ? TwistDir::Reverse : TwistDir::Forward;
      return make_node(Expression::ArmsAtom{dir});
    }
    if (ident == "h") {
      pos += 1;
      const TwistDir dir = eat('\'') ? TwistDir::Reverse : TwistDir::Forward;
      expect('(', "after half-twist name");
      auto [p, q] = parse_curve_spec();
      expect(')', "after curve");
      return make_node(Expression::TwistAtom{false, p, q, dir});
    }
    if (ident == "t") {
      pos += 1;
      expect('(', "after full-twist name");
      auto [p, q] = parse_curve_spec();
      expect(')', "after curve");
      return make_node(Expression::FullTwistAtom{p, q});
    }
    if (ident == "phi" || ident == "harer") {
      pos += ident.size();
      expect('(', "after braid map name");
      const std::string_view inner = parse_raw_parens();
      BraidWord word = parse_braid_word(inner);
      if (ident == "phi") return make_node(Expression::PhiAtom{std::move(word)});
      return make_node(Expression::HarerAtom{std::move(word)});
    }
    throw ParseError("unknown atom `" + std::string(ident) + "`", at);
  }

  // exponent := '^' ['-'] digits, nonzero; absent means 1
  int parse_exponent() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '^') return 1;
    ++pos;
    const int n = parse_int();
    if (n == 0) throw ParseError("zero power is not allowed", pos);
    if (n > 100000 || n < -100000)
      throw ParseError("power out of range (|n| <= 100000)", pos);
    return n;
  }

  ExprPtr parse_factor() {
    skip_ws();
    ExprPtr base;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      base = parse_product(true);
      expect(')', "to close the group");
    } else {
      base = parse_atom();
    }
    const int n = parse_exponent();
    if (n == 1) return base;
    return make_node(Expression::Power{std::move(base), n});
  }

  ExprPtr parse_product(bool inside_parens) {
    std::vector<ExprPtr> factors;
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      if (text[pos] == ')') {
        if (!inside_parens) throw ParseError("unmatched `)`", pos);
        break;
      }
      factors.push_back(parse_factor());
    }
    if (factors.size() == 1) return factors[0];
    return make_node(Expression::Product{std::move(factors)});
  }
};

struct Formatter {
  static std::string curve(int p, int q) {
    if (p == q) return "R" + std::to_string(p);
    return "R{" + std::to_string(p) + "," + std::to_string(q) + "}";
  }

  static bool needs_parens(const ExprPtr& e) {
    return std::holds_alternative<Expression::Product>(e->node()) ||
           std::holds_alternative<Expression::Power>(e->node());
  }

  static std::string run(const ExprPtr& e) {
    return std::visit(
        [&](const auto& node) -> std::string {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Expression::DehnAtom>) {
            const char c = node.name == McgGenerator::Name::A   ? 'a'
                           : node.name == McgGenerator::Name::B ? 'b'
                                                                : 'w';
            return c + std::to_string(node.index);
          } else if constexpr (std::is_same_v<T, Expression::BetaAtom>) {
            return "beta(" + std::to_string(node.i) + ")";
          } else if constexpr (std::is_same_v<T, Expression::BetaRsAtom>) {
            return "beta(" + std::to_string(node.r) + "," +
                   std::to_string(node.s) + ")";
          } else if constexpr (std::is_same_v<T, Expression::TwistAtom>) {
            const std::string tick = node.dir == TwistDir::Reverse ? "'" : "";
            if (node.boundary) return "hR" + tick;
            return "h" + tick + "(" + curve(node.p, node.q) + ")";
          } else if constexpr (std::is_same_v<T, Expression::FullTwistAtom>) {
            return "t(" + curve(node.p, node.q) + ")";
          } else if constexpr (std::is_same_v<T, Expression::ArmsAtom>) {
            return node.dir == TwistDir::Reverse ? "hA'" : "hA";
          } else if constexpr (std::is_same_v<T, Expression::PhiAtom>) {
            return "phi(" + format_braid_word(node.word) + ")";
          } else if constexpr (std::is_same_v<T, Expression::HarerAtom>) {
            return "harer(" + format_braid_word(node.word) + ")";
          } else if constexpr (std::is_same_v<T, Expression::Product>) {
            std::string out;
            for (const auto& f : node.factors) {
              if (!out.empty()) out += ' ';
              out += needs_parens(f) ? "(" + run(f) + ")" : run(f);
            }
            return out;
          } else {
            static_assert(std::is_same_v<T, Expression::Power>);
            const std::string base = needs_parens(node.base)
                                         ? "(" + run(node.base) + ")"
                                         : run(node.base);
            return base + "^" + std::to_string(node.exponent);
          }
        },
        e->node());
  }
};

}  // namespace

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->node().index() != b->node().index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b->node());
        if constexpr (std::is_same_v<T, Expression::Product>) {
          if (lhs.factors.size() != rhs.factors.size()) return false;
          for (std::size_t i = 0; i < lhs.factors.size(); ++i)
            if (!expr_equal(lhs.factors[i], rhs.factors[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Expression::Power>) {
          return lhs.exponent == rhs.exponent && expr_equal(lhs.base, rhs.base);
        } else {
          return lhs == rhs;
        }
      },
      a->node());
}

ExprPtr parse_expression(std::string_view text) {
  Parser p{text};
  ExprPtr e = p.parse_product(false);
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return e;
}

std::string format_expression(const ExprPtr& e) { return Formatter::run(e); }

namespace {

MappingClass evaluate_node(const ExprPtr& e, int genus) {
  return std::visit(
      [&](const auto& node) -> MappingClass {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expression::DehnAtom>) {
          return catalog_class(McgGenerator{node.name, node.index, 1}, genus);
        } else if constexpr (std::is_same_v<T, Expression::BetaAtom>) {
          return beta_local(node.i, genus);
        } else if constexpr (std::is_same_v<T, Expression::BetaRsAtom>) {
          MappingClass block = beta_rs_direct(node.r, node.s);
          if (block.genus() > genus)
            throw InvalidIndexError("beta(" + std::to_string(node.r) + "," +
                                    std::to_string(node.s) +
                                    ") needs genus >= " +
                                    std::to_string(block.genus()));
          if (block.genus() < genus)
            block = free_product(block, identity_class(genus - block.genus()));
          return block;
        } else if constexpr (std::is_same_v<T, Expression::TwistAtom>) {
          if (node.boundary) return span_half_twist(1, genus, node.dir, genus);
          return span_half_twist(node.p, node.q, node.dir, genus);
        } else if constexpr (std::is_same_v<T, Expression::FullTwistAtom>) {
          const MappingClass h =
              span_half_twist(node.p, node.q, TwistDir::Forward, genus);
          return compose(h, h);
        } else if constexpr (std::is_same_v<T, Expression::ArmsAtom>) {
          return arms_twist(node.dir, genus);
        } else if constexpr (std::is_same_v<T, Expression::PhiAtom>) {
          return phi(node.word, genus);
        } else if constexpr (std::is_same_v<T, Expression::HarerAtom>) {
          return harer(node.word, genus);
        } else if constexpr (std::is_same_v<T, Expression::Product>) {
          MappingClass acc = identity_class(genus);
          for (const auto& f : node.factors) acc = compose(acc, evaluate(f, genus));
          return acc;
        } else {
          static_assert(std::is_same_v<T, Expression::Power>);
          const MappingClass base = evaluate(node.base, genus);
          const MappingClass step =
              node.exponent > 0 ? base : base.inverse();
          const long long reps = node.exponent > 0
                                     ? node.exponent
                                     : -static_cast<long long>(node.exponent);
          MappingClass acc = identity_class(genus);
          for (long long k = 0; k < reps; ++k) acc = compose(acc, step);
          return acc;
        }
      },
      e->node());
}

}  // namespace

MappingClass evaluate(const ExprPtr& e, int genus) {
  if (genus < 1)
    throw InvalidGenusError("evaluation needs genus >= 1, got " +
                            std::to_string(genus));
  return evaluate_node(e, genus);
}

}  // namespace mcgb
