#include <doctest.h>

#include <random>

#include "word.hpp"

using namespace mcgb;

namespace {

Word W(const char* text) { return parse_word(text); }

// Hand-rolled generator for property checks; deterministic.
struct Gen {
  std::mt19937_64 rng{0xC0FFEE};
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }
  std::vector<GenSymbol> raw(int genus, int max_len) {
    std::vector<GenSymbol> out;
    const int len = pick(0, max_len);
    for (int k = 0; k < len; ++k) {
      GenSymbol g{pick(0, 1) ? GenKind::X : GenKind::Y, pick(1, genus),
                  static_cast<std::int8_t>(pick(0, 1) ? 1 : -1)};
      out.push_back(g);
      if (pick(0, 2) == 0) out.push_back(g.inverse());  // force cancellations
    }
    return out;
  }
  Word word(int genus, int max_len) {
    auto r = raw(genus, max_len);
    return Word(std::span<const GenSymbol>(r.data(), r.size()));
  }
};

}  // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  const std::vector<GenSymbol> letters{x_gen(1), y_gen(1), y_gen(1, -1),
                                       x_gen(2)};
  CHECK(reduce(letters) == W("x1 x2"));
  CHECK(reduce(std::vector<GenSymbol>{}) == Word());
  CHECK(reduce(std::vector<GenSymbol>{x_gen(1), x_gen(1, -1)}) == Word());
}

TEST_CASE("reduction handles nested cancellation") {
  const std::vector<GenSymbol> letters{x_gen(1), y_gen(1), y_gen(1, -1),
                                       x_gen(1, -1)};
  CHECK(reduce(letters).empty());
}

TEST_CASE("concat reduces across the seam") {
  CHECK(concat(W("x1"), W("x1^-1")).empty());
  CHECK(concat(W("x1 y1"), W("y1^-1 x2")) == W("x1 x2"));
  CHECK(concat(Word(), W("y1 x1 y1^-1 x1^-1")) == W("y1 x1 y1^-1 x1^-1"));
  CHECK(concat(W("y1 x1 y1^-1 x1^-1"), Word()) == W("y1 x1 y1^-1 x1^-1"));
}

TEST_CASE("inversion reverses and flips") {
  CHECK(invert_word(W("x1 y1")) == W("y1^-1 x1^-1"));
  CHECK(invert_word(Word()) == Word());
  CHECK(invert_word(W("x1")) == W("x1^-1"));
}

TEST_CASE("commutator convention is u v u^-1 v^-1") {
  const Word w = W("x1 y2");
  CHECK(commutator(w, w).empty());
  CHECK(commutator(W("y1"), W("x1")) == W("y1 x1 y1^-1 x1^-1"));
  CHECK(commutator(W("y1"), Word()).empty());
}

TEST_CASE("partial relators") {
  CHECK(partial_relator(1, 1) == W("y1 x1 y1^-1 x1^-1"));
  CHECK(partial_relator(1, 2) == W("y1 x1 y1^-1 x1^-1 y2 x2 y2^-1 x2^-1"));
  CHECK(partial_relator(2, 2) == W("y2 x2 y2^-1 x2^-1"));
  CHECK_THROWS_AS((void)partial_relator(2, 1), InvalidRangeError);
  CHECK_THROWS_AS((void)partial_relator(0, 1), InvalidRangeError);
}

TEST_CASE("boundary relator") {
  CHECK(relator(1) == W("y1 x1 y1^-1 x1^-1"));
  CHECK(relator(2) == W("y1 x1 y1^-1 x1^-1 y2 x2 y2^-1 x2^-1"));
  CHECK(relator(2) == concat(partial_relator(1, 1), partial_relator(2, 2)));
  CHECK_THROWS_AS((void)relator(0), InvalidGenusError);
  CHECK_THROWS_AS((void)relator(-3), InvalidGenusError);
}

TEST_CASE("properties: reduction, monoid laws, inversion") {
  Gen gen;
  for (int k = 0; k < 200; ++k) {
    auto raw = gen.raw(3, 12);
    const Word once(std::span<const GenSymbol>(raw.data(), raw.size()));
    const Word twice(
        std::span<const GenSymbol>(once.letters().data(), once.size()));
    CHECK(once == twice);  // idempotent

    const Word u = gen.word(3, 10);
    const Word v = gen.word(3, 10);
    const Word w = gen.word(3, 10);
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    CHECK(concat(u, Word()) == u);
    CHECK(concat(Word(), u) == u);
    CHECK(invert_word(invert_word(u)) == u);
    CHECK(concat(u, invert_word(u)).empty());
    CHECK(concat(invert_word(u), u).empty());
  }
}

TEST_CASE("no adjacent inverse pair survives in any reduced word") {
  Gen gen;
  for (int k = 0; k < 100; ++k) {
    const Word u = gen.word(4, 16);
    const auto& ls = u.letters();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
      CHECK(!ls[i].cancels(ls[i + 1]));
  }
}

TEST_CASE("word text format round-trips") {
  Gen gen;
  CHECK(format_word(Word()) == "1");
  CHECK(parse_word("1") == Word());
  CHECK(format_word(W("y1 x1 y1^-1 x1^-1")) == "y1 x1 y1^-1 x1^-1");
  for (int k = 0; k < 100; ++k) {
    const Word u = gen.word(5, 12);
    CHECK(parse_word(format_word(u)) == u);
  }
}

TEST_CASE("word parser rejects malformed input") {
  CHECK_THROWS_AS((void)parse_word("z1"), ParseError);
  CHECK_THROWS_AS((void)parse_word("x"), ParseError);
  CHECK_THROWS_AS((void)parse_word("x0"), ParseError);
  CHECK_THROWS_AS((void)parse_word("x1^2"), ParseError);
  CHECK_THROWS_AS((void)parse_word("x1 q"), ParseError);
  // parser input reduces as well: non-canonical text is still a valid word
  CHECK(parse_word("x1 x1^-1") == Word());
}

TEST_CASE("max_index scans every letter") {
  CHECK(Word().max_index() == 0);
  CHECK(W("x1 y3 x2").max_index() == 3);
}
