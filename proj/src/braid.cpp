#include "braid.hpp"

#include <cctype>
#include <charconv>

namespace mcgb {

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands_ < 1)
    throw InvalidRangeError("braid word needs at least one strand");
}

BraidWord::BraidWord(int strands, std::span<const BraidLetter> letters)
    : BraidWord(strands) {
  for (const auto& l : letters) push(l);
}

void BraidWord::push(const BraidLetter& l) {
  if (l.index < 1 || l.index > strands_ - 1)
    throw InvalidIndexError("braid generator s" + std::to_string(l.index) +
                            " does not exist on " + std::to_string(strands_) +
                            " strands");
  if (!letters_.empty() && letters_.back().cancels(l)) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

void BraidWord::append(const BraidWord& other) {
  if (other.strands_ > strands_)
    throw RankMismatchError("cannot append a braid word on more strands");
  for (const auto& l : other.letters_) push(l);
}

void BraidWord::append_power(const BraidWord& other, int n) {
  const long long reps = n >= 0 ? n : -static_cast<long long>(n);
  if (n >= 0) {
    for (long long k = 0; k < reps; ++k) append(other);
  } else {
    const BraidWord inv = other.inverse();
    for (long long k = 0; k < reps; ++k) append(inv);
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push(it->inverse());
  return out;
}

BraidWord sigma_rs(int r, int s) {
  if (r < 1 || s < 1)
    throw InvalidRangeError("block crossing needs r, s >= 1, got r=" +
                            std::to_string(r) + " s=" + std::to_string(s));
  BraidWord out(r + s);
  for (int t = 1; t <= s; ++t)
    for (int idx = r + t - 1; idx >= t; --idx)
      out.push(BraidLetter{idx, 1});
  return out;
}

FreeAut::FreeAut(int rank) : rank_(rank) {
  if (rank_ < 1) throw InvalidRangeError("free group rank must be >= 1");
  images_.reserve(static_cast<std::size_t>(rank_));
  for (int i = 1; i <= rank_; ++i)
    images_.push_back(Word::generator(GenKind::X, i));
}

FreeAut::FreeAut(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank_ < 1) throw InvalidRangeError("free group rank must be >= 1");
  if (images_.size() != static_cast<std::size_t>(rank_))
    throw InvalidRangeError("expected " + std::to_string(rank_) + " images");
  for (const auto& w : images_) {
    if (w.max_index() > rank_)
      throw RankMismatchError("image exceeds the free group rank");
    for (const auto& l : w.letters())
      if (l.kind != GenKind::X)
        throw InvalidRangeError("rank-n automorphisms use the x alphabet only");
  }
}

Word FreeAut::apply_to(const Word& w) const {
  Word out;
  for (const auto& g : w.letters()) {
    if (g.kind != GenKind::X || g.index > rank_)
      throw RankMismatchError("word is not over x_1..x_n");
    const Word& img = images_[static_cast<std::size_t>(g.index - 1)];
    if (g.sign > 0) {
      for (const auto& l : img.letters()) out.push(l);
    } else {
      const auto& ls = img.letters();
      for (auto it = ls.rbegin(); it != ls.rend(); ++it)
        out.push(it->inverse());
    }
  }
  return out;
}

bool FreeAut::is_identity() const { return *this == FreeAut(rank_); }

FreeAut compose(const FreeAut& f, const FreeAut& h) {
  if (f.rank() != h.rank())
    throw RankMismatchError("cannot compose automorphisms of different rank");
  std::vector<Word> images;
  images.reserve(f.images().size());
  for (const auto& w : f.images()) images.push_back(h.apply_to(w));
  return FreeAut(f.rank(), std::move(images));
}

FreeAut artin(const BraidWord& b) {
  const int n = b.strands();
  FreeAut acc(n);
  for (const auto& l : b.letters()) {
    std::vector<Word> images = FreeAut(n).images();
    const Word xi = Word::generator(GenKind::X, l.index);
    const Word xn = Word::generator(GenKind::X, l.index + 1);
    if (l.sign > 0) {
      images[static_cast<std::size_t>(l.index - 1)] =
          concat(xi, concat(xn, invert_word(xi)));
      images[static_cast<std::size_t>(l.index)] = xi;
    } else {
      images[static_cast<std::size_t>(l.index - 1)] = xn;
      images[static_cast<std::size_t>(l.index)] =
          concat(invert_word(xn), concat(xi, xn));
    }
    acc = compose(acc, FreeAut(n, std::move(images)));
  }
  return acc;
}

MappingClass phi(const BraidWord& b, int genus) {
  if (b.strands() > genus)
    throw InvalidIndexError("braid word on " + std::to_string(b.strands()) +
                            " strands does not fit at genus " +
                            std::to_string(genus));
  MappingClass acc = identity_class(genus);
  for (const auto& l : b.letters()) {
    const MappingClass beta = beta_local(l.index, genus);
    acc = compose(acc, l.sign > 0 ? beta : beta.inverse());
  }
  return acc;
}

MappingClass harer(const BraidWord& b, int genus) {
  MappingClass acc = identity_class(genus);
  for (const auto& l : b.letters()) {
    MappingClass img = (l.index % 2 == 1) ? dehn_b((l.index + 1) / 2, genus)
                                          : dehn_w(l.index / 2, genus);
    acc = compose(acc, l.sign > 0 ? img : img.inverse());
  }
  return acc;
}

Report injectivity_smoke(int strands, int max_len) {
  if (strands < 2) throw InvalidRangeError("need at least 2 strands");
  if (max_len < 1) throw InvalidRangeError("need max length >= 1");

  Report report;
  report.suite = "injectivity-smoke";
  report.header = {{"strands", std::to_string(strands)},
                   {"max-len", std::to_string(max_len)}};

  long total = 0;
  long artin_nontrivial = 0;
  std::vector<std::string> violations;

  // Breadth-first over freely reduced words: extend each word of length L
  // by every letter that does not cancel its last one.
  std::vector<std::vector<BraidLetter>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<BraidLetter>> next;
    for (const auto& word : frontier) {
      for (int idx = 1; idx <= strands - 1; ++idx) {
        for (int sign : {+1, -1}) {
          const BraidLetter l{idx, static_cast<std::int8_t>(sign)};
          if (!word.empty() && word.back().cancels(l)) continue;
          auto extended = word;
          extended.push_back(l);
          ++total;
          BraidWord b(strands, std::span<const BraidLetter>(extended.data(),
                                                            extended.size()));
          if (!artin(b).is_identity()) {
            ++artin_nontrivial;
            if (endo_equal(phi(b, strands).endo(), Endo::identity(strands)))
              violations.push_back(format_braid_word(b));
          }
          next.push_back(std::move(extended));
        }
      }
    }
    frontier = std::move(next);
  }

  CheckResult c;
  c.name = "braid/injectivity-smoke";
  c.params = {{"strands", std::to_string(strands)},
              {"max-len", std::to_string(max_len)},
              {"words", std::to_string(total)},
              {"artin-nontrivial", std::to_string(artin_nontrivial)}};
  c.claim =
      "every reduced braid word with non-identity Artin image has "
      "non-identity image under s_i -> beta(i)";
  c.passed = violations.empty();
  if (!violations.empty()) c.witness = "trivialised words: " + violations[0];
  report.add(std::move(c));
  return report;
}

namespace {

struct BraidParser {
  std::string_view text;
  std::size_t pos = 0;
  int needed = 1;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  int parse_int() {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("expected integer", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }

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

  // Collect raw letters with power expansion; strand count fixed afterwards.
  std::vector<BraidLetter> parse_sequence(bool inside_parens) {
    std::vector<BraidLetter> out;
    auto append_pow = [&](const std::vector<BraidLetter>& part, int n) {
      auto push = [&](const BraidLetter& l) {
        if (!out.empty() && out.back().cancels(l))
          out.pop_back();
        else
          out.push_back(l);
      };
      const long long reps = n >= 0 ? n : -static_cast<long long>(n);
      if (n >= 0) {
        for (long long k = 0; k < reps; ++k)
          for (const auto& l : part) push(l);
      } else {
        for (long long k = 0; k < reps; ++k)
          for (auto it = part.rbegin(); it != part.rend(); ++it)
            push(it->inverse());
      }
    };
    while (skip_ws(), pos < text.size()) {
      char c = text[pos];
      if (c == ')') {
        if (!inside_parens) throw ParseError("unmatched `)`", pos);
        return out;
      }
      if (c == '(') {
        ++pos;
        auto group = parse_sequence(true);
        skip_ws();
        if (pos >= text.size() || text[pos] != ')')
          throw ParseError("missing `)`", pos);
        ++pos;
        append_pow(group, parse_exponent());
        continue;
      }
      if (c == 's' && pos + 4 < text.size() && text.substr(pos, 5) == "sigma") {
        pos += 5;
        skip_ws();
        if (pos >= text.size() || text[pos] != '(')
          throw ParseError("expected `(` after sigma", pos);
        ++pos;
        skip_ws();
        int r = parse_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != ',')
          throw ParseError("sigma needs two arguments", pos);
        ++pos;
        skip_ws();
        int s = parse_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != ')')
          throw ParseError("missing `)` after sigma arguments", pos);
        ++pos;
        const BraidWord block = sigma_rs(r, s);
        needed = std::max(needed, block.strands());
        std::vector<BraidLetter> part(block.letters().begin(),
                                      block.letters().end());
        append_pow(part, parse_exponent());
        continue;
      }
      if (c == 's') {
        ++pos;
        if (pos >= text.size() ||
            !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw ParseError("expected index after `s`", pos);
        int index = parse_int();
        if (index < 1) throw ParseError("braid index must be >= 1", pos);
        needed = std::max(needed, index + 1);
        int n = parse_exponent();
        append_pow({BraidLetter{index, 1}}, n);
        continue;
      }
      throw ParseError("expected braid token `s<k>` or `sigma(r,s)`", pos);
    }
    if (inside_parens) throw ParseError("missing `)`", pos);
    return out;
  }
};

}  // namespace

BraidWord parse_braid_word(std::string_view text, int min_strands) {
  BraidParser p{text};
  auto letters = p.parse_sequence(false);
  const int strands = std::max(p.needed, std::max(min_strands, 1));
  return BraidWord(strands,
                   std::span<const BraidLetter>(letters.data(), letters.size()));
}

std::string format_braid_word(const BraidWord& b) {
  if (b.letters().empty()) return "1";
  std::string out;
  for (const auto& l : b.letters()) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace mcgb
