#include "word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace mcgb {

namespace {

void check_gen(const GenSymbol& g) {
  if (g.index < 1) throw InvalidIndexError("generator index must be >= 1");
  if (g.sign != 1 && g.sign != -1)
    throw InvalidIndexError("generator sign must be +1 or -1");
}

}  // namespace

GenSymbol x_gen(int index, int sign) {
  GenSymbol g{GenKind::X, index, static_cast<std::int8_t>(sign)};
  check_gen(g);
  return g;
}

GenSymbol y_gen(int index, int sign) {
  GenSymbol g{GenKind::Y, index, static_cast<std::int8_t>(sign)};
  check_gen(g);
  return g;
}

void Word::push(const GenSymbol& g) {
  check_gen(g);
  if (!letters_.empty() && letters_.back().cancels(g)) {
    letters_.pop_back();
  } else {
    letters_.push_back(g);
  }
}

Word::Word(std::span<const GenSymbol> letters) {
  letters_.reserve(letters.size());
  for (const auto& g : letters) push(g);
}

Word::Word(std::initializer_list<GenSymbol> letters)
    : Word(std::span<const GenSymbol>(letters.begin(), letters.size())) {}

Word Word::generator(GenKind kind, int index, int sign) {
  Word w;
  w.push(GenSymbol{kind, index, static_cast<std::int8_t>(sign)});
  return w;
}

int Word::max_index() const {
  int m = 0;
  for (const auto& g : letters_) m = std::max(m, static_cast<int>(g.index));
  return m;
}

Word reduce(std::span<const GenSymbol> letters) { return Word(letters); }

Word concat(const Word& u, const Word& v) {
  Word out = u;
  for (const auto& g : v.letters()) out.push(g);
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push(it->inverse());
  return out;
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert_word(u), invert_word(v)));
}

Word partial_relator(int i, int j) {
  if (i < 1 || j < i)
    throw InvalidRangeError("partial relator needs 1 <= i <= j, got i=" +
                            std::to_string(i) + " j=" + std::to_string(j));
  Word out;
  for (int k = i; k <= j; ++k)
    out = concat(out, commutator(Word::generator(GenKind::Y, k),
                                 Word::generator(GenKind::X, k)));
  return out;
}

Word relator(int g) {
  if (g < 1) throw InvalidGenusError("genus must be >= 1, got " + std::to_string(g));
  return partial_relator(1, g);
}

std::string format_gen(const GenSymbol& g) {
  std::string s(g.kind == GenKind::X ? "x" : "y");
  s += std::to_string(g.index);
  if (g.sign < 0) s += "^-1";
  return s;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w.letters()) {
    if (!out.empty()) out += ' ';
    out += format_gen(g);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  // A lone `1` denotes the empty word.
  if (i < n && text[i] == '1') {
    std::size_t j = i + 1;
    while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == n) return out;
  }
  while (skip_ws(), i < n) {
    char c = text[i];
    if (c != 'x' && c != 'y')
      throw ParseError("expected generator token `x<k>` or `y<k>`", i);
    GenKind kind = (c == 'x') ? GenKind::X : GenKind::Y;
    ++i;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected index after generator letter", i);
    int index = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + n, index);
    if (ec != std::errc{} || index < 1)
      throw ParseError("bad generator index", i);
    i = static_cast<std::size_t>(ptr - text.data());
    int sign = +1;
    if (i < n && text[i] == '^') {
      if (text.substr(i, 3) == "^-1") {
        sign = -1;
        i += 3;
      } else {
        throw ParseError("only `^-1` is allowed on word letters", i);
      }
    }
    out.push(GenSymbol{kind, index, static_cast<std::int8_t>(sign)});
  }
  return out;
}

}  // namespace mcgb
