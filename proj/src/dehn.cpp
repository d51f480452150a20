#include "dehn.hpp"

#include <cctype>
#include <charconv>

namespace mcgb {

namespace {

void check_index(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi)
    throw InvalidIndexError(std::string(what) + " index " + std::to_string(i) +
                            " out of range [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
}

std::vector<Word> identity_images(int genus) {
  return Endo::identity(genus).images();
}

}  // namespace

McgWord::McgWord(std::span<const McgGenerator> letters) {
  for (const auto& g : letters) push(g);
}

void McgWord::push(const McgGenerator& g) {
  if (g.index < 1) throw InvalidIndexError("twist generator index must be >= 1");
  if (!letters_.empty() && letters_.back().cancels(g)) {
    letters_.pop_back();
  } else {
    letters_.push_back(g);
  }
}

void McgWord::append(const McgWord& other) {
  for (const auto& g : other.letters_) push(g);
}

void McgWord::append_power(const McgWord& other, int n) {
  const long long reps = n >= 0 ? n : -static_cast<long long>(n);
  if (n >= 0) {
    for (long long k = 0; k < reps; ++k) append(other);
  } else {
    const McgWord inv = other.inverse();
    for (long long k = 0; k < reps; ++k) append(inv);
  }
}

McgWord McgWord::inverse() const {
  McgWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push(it->inverse());
  return out;
}

MappingClass dehn_a(int i, int genus) {
  check_index(i, 1, genus, "a");
  auto fwd = identity_images(genus);
  auto bwd = identity_images(genus);
  fwd[slot(GenKind::Y, i)] =
      concat(Word::generator(GenKind::Y, i), Word::generator(GenKind::X, i, -1));
  bwd[slot(GenKind::Y, i)] =
      concat(Word::generator(GenKind::Y, i), Word::generator(GenKind::X, i));
  return MappingClass(Endo(genus, std::move(fwd)), Endo(genus, std::move(bwd)));
}

MappingClass dehn_b(int i, int genus) {
  check_index(i, 1, genus, "b");
  auto fwd = identity_images(genus);
  auto bwd = identity_images(genus);
  fwd[slot(GenKind::X, i)] =
      concat(Word::generator(GenKind::X, i), Word::generator(GenKind::Y, i));
  bwd[slot(GenKind::X, i)] =
      concat(Word::generator(GenKind::X, i), Word::generator(GenKind::Y, i, -1));
  return MappingClass(Endo(genus, std::move(fwd)), Endo(genus, std::move(bwd)));
}

MappingClass dehn_w(int i, int genus) {
  check_index(i, 1, genus - 1, "w");
  const Word xi = Word::generator(GenKind::X, i);
  const Word yi = Word::generator(GenKind::Y, i);
  const Word xq = Word::generator(GenKind::X, i + 1);
  const Word yq = Word::generator(GenKind::Y, i + 1);
  // z = x_i^-1 y_{i+1} x_{i+1} y_{i+1}^-1
  const Word z = concat(invert_word(xi),
                        concat(yq, concat(xq, invert_word(yq))));
  const Word zinv = invert_word(z);

  auto fwd = identity_images(genus);
  fwd[slot(GenKind::X, i)] = concat(zinv, concat(yq, concat(xq, invert_word(yq))));
  fwd[slot(GenKind::Y, i)] = concat(yi, z);
  fwd[slot(GenKind::Y, i + 1)] = concat(zinv, yq);

  // Solving h for (fwd then h) = id gives the reversed twist:
  //   x_i -> z x_i z^-1,  y_i -> y_i z^-1,  y_{i+1} -> z y_{i+1}.
  auto bwd = identity_images(genus);
  bwd[slot(GenKind::X, i)] = concat(z, concat(xi, zinv));
  bwd[slot(GenKind::Y, i)] = concat(yi, zinv);
  bwd[slot(GenKind::Y, i + 1)] = concat(z, yq);

  return MappingClass(Endo(genus, std::move(fwd)), Endo(genus, std::move(bwd)));
}

MappingClass catalog_class(const McgGenerator& g, int genus) {
  MappingClass mc = [&] {
    switch (g.name) {
      case McgGenerator::Name::A:
        return dehn_a(g.index, genus);
      case McgGenerator::Name::B:
        return dehn_b(g.index, genus);
      default:
        return dehn_w(g.index, genus);
    }
  }();
  return g.sign > 0 ? mc : mc.inverse();
}

MappingClass evaluate_mcg_word(const McgWord& word, int genus) {
  MappingClass acc = identity_class(genus);
  for (const auto& g : word.letters())
    acc = compose(acc, catalog_class(g, genus));
  return acc;
}

bool preserves_relator(const Endo& f, int genus) {
  if (f.genus() != genus)
    throw RankMismatchError("endomorphism genus " + std::to_string(f.genus()) +
                            " does not match " + std::to_string(genus));
  const Word r = relator(genus);
  return apply(r, f) == r;
}

namespace {

struct McgParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  int parse_int() {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("expected integer", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }

  // exponent := '^' ['-'] digits ; absent exponent means 1
  int parse_exponent() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '^') return 1;
    ++pos;
    skip_ws();
    int n = parse_int();
    if (n == 0) throw ParseError("zero power is not allowed", pos);
    if (n > 100000 || n < -100000)
      throw ParseError("power out of range (|n| <= 100000)", pos);
    return n;
  }

  McgWord parse_sequence(bool inside_parens) {
    McgWord out;
    while (!at_end()) {
      char c = text[pos];
      if (c == ')') {
        if (!inside_parens) throw ParseError("unmatched `)`", pos);
        return out;
      }
      if (c == '(') {
        ++pos;
        McgWord group = parse_sequence(true);
        skip_ws();
        if (pos >= text.size() || text[pos] != ')')
          throw ParseError("missing `)`", pos);
        ++pos;
        out.append_power(group, parse_exponent());
        continue;
      }
      McgGenerator::Name name;
      if (c == 'a')
        name = McgGenerator::Name::A;
      else if (c == 'b')
        name = McgGenerator::Name::B;
      else if (c == 'w')
        name = McgGenerator::Name::W;
      else
        throw ParseError("expected twist token `a<k>`, `b<k>` or `w<k>`", pos);
      ++pos;
      if (pos >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected index after twist letter", pos);
      int index = parse_int();
      if (index < 1) throw ParseError("twist index must be >= 1", pos);
      int n = parse_exponent();
      McgWord single;
      single.push(McgGenerator{name, index, 1});
      out.append_power(single, n);
    }
    if (inside_parens) throw ParseError("missing `)`", pos);
    return out;
  }
};

}  // namespace

McgWord parse_mcg_word(std::string_view text) {
  McgParser p{text};
  return p.parse_sequence(false);
}

std::string format_mcg_word(const McgWord& w) {
  std::string out;
  for (const auto& g : w.letters()) {
    if (!out.empty()) out += ' ';
    out += (g.name == McgGenerator::Name::A   ? 'a'
            : g.name == McgGenerator::Name::B ? 'b'
                                              : 'w');
    out += std::to_string(g.index);
    if (g.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace mcgb
