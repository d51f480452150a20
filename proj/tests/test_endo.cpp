#include <doctest.h>

#include <random>

#include "dehn.hpp"
#include "endo.hpp"

using namespace mcgb;

namespace {

Word W(const char* text) { return parse_word(text); }

// Independent substitution oracle: splice image letters into a buffer and
// reduce with a separate scan, avoiding the library's apply/push path.
Word naive_apply(const Word& w, const Endo& f) {
  std::vector<GenSymbol> buffer;
  for (const auto& g : w.letters()) {
    std::vector<GenSymbol> img(f.image(g.kind, g.index).letters());
    if (g.sign < 0) {
      std::reverse(img.begin(), img.end());
      for (auto& l : img) l = l.inverse();
    }
    buffer.insert(buffer.end(), img.begin(), img.end());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < buffer.size(); ++i) {
      if (buffer[i].cancels(buffer[i + 1])) {
        buffer.erase(buffer.begin() + static_cast<std::ptrdiff_t>(i),
                     buffer.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return Word(std::span<const GenSymbol>(buffer.data(), buffer.size()));
}

struct Gen {
  std::mt19937_64 rng{0xBEEF};
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }
  Word word(int genus, int max_len) {
    Word out;
    const int len = pick(0, max_len);
    for (int k = 0; k < len; ++k)
      out.push(GenSymbol{pick(0, 1) ? GenKind::X : GenKind::Y, pick(1, genus),
                         static_cast<std::int8_t>(pick(0, 1) ? 1 : -1)});
    return out;
  }
};

}  // namespace

TEST_CASE("identity endomorphism") {
  const Endo id1 = Endo::identity(1);
  CHECK(id1.image(GenKind::X, 1) == W("x1"));
  CHECK(id1.image(GenKind::Y, 1) == W("y1"));
  const Endo id2 = Endo::identity(2);
  for (int i = 1; i <= 2; ++i) {
    CHECK(id2.image(GenKind::X, i) == Word::generator(GenKind::X, i));
    CHECK(id2.image(GenKind::Y, i) == Word::generator(GenKind::Y, i));
  }
  CHECK_THROWS_AS((void)Endo::identity(0), InvalidGenusError);
}

TEST_CASE("endo construction validates shape and rank") {
  CHECK_THROWS_AS(Endo(1, {W("x1")}), InvalidRangeError);
  CHECK_THROWS_AS(Endo(1, {W("x2"), W("y1")}), RankMismatchError);
}

TEST_CASE("apply substitutes and reduces") {
  const MappingClass a1 = dehn_a(1, 2);
  CHECK(apply(W("y1"), a1.endo()) == W("y1 x1^-1"));
  CHECK(apply(W("x2"), a1.endo()) == W("x2"));
  // substitution oracle: y1 -> y1 x1^-1 inside the genus-1 relator
  const MappingClass a11 = dehn_a(1, 1);
  CHECK(naive_apply(relator(1), a11.endo()) == relator(1));
  CHECK(apply(relator(1), a11.endo()) == relator(1));
  CHECK_THROWS_AS((void)apply(W("x3"), a1.endo()), RankMismatchError);
}

TEST_CASE("apply agrees with the naive substitution oracle") {
  Gen gen;
  std::vector<Endo> pool{dehn_a(1, 3).endo(), dehn_b(2, 3).endo(),
                         dehn_w(1, 3).endo(), dehn_w(2, 3).endo(),
                         dehn_a(3, 3).inverse_endo()};
  for (int k = 0; k < 100; ++k) {
    const Word w = gen.word(3, 10);
    for (const auto& f : pool) CHECK(apply(w, f) == naive_apply(w, f));
  }
}

TEST_CASE("compose applies left factor first") {
  const MappingClass a1 = dehn_a(1, 2);
  const MappingClass b1 = dehn_b(1, 2);
  const Endo both = compose(a1.endo(), b1.endo());
  // two-step substitution oracle
  Gen gen;
  for (int k = 0; k < 50; ++k) {
    const Word w = gen.word(2, 8);
    CHECK(apply(w, both) == apply(apply(w, a1.endo()), b1.endo()));
  }
  CHECK(endo_equal(compose(a1.endo(), Endo::identity(2)), a1.endo()));
  CHECK_THROWS_AS((void)compose(a1.endo(), Endo::identity(3)),
                  RankMismatchError);
}

TEST_CASE("endo equality is letterwise on reduced images") {
  CHECK(endo_equal(Endo::identity(2), Endo::identity(2)));
  CHECK(!endo_equal(dehn_a(1, 1).endo(), dehn_b(1, 1).endo()));
  CHECK(!endo_equal(Endo::identity(1), Endo::identity(2)));
}

TEST_CASE("free product shifts the second block") {
  CHECK(endo_equal(free_product(Endo::identity(1), Endo::identity(1)),
                   Endo::identity(2)));
  const Endo f = free_product(dehn_a(1, 1).endo(), dehn_a(1, 1).endo());
  CHECK(f.genus() == 2);
  CHECK(f.image(GenKind::Y, 1) == W("y1 x1^-1"));
  CHECK(f.image(GenKind::Y, 2) == W("y2 x2^-1"));
  CHECK(f.image(GenKind::X, 1) == W("x1"));
  CHECK(f.image(GenKind::X, 2) == W("x2"));

  // block structure: the first slot acts alone on low-index words
  Gen gen;
  const Endo g = free_product(dehn_b(1, 1).endo(), Endo::identity(1));
  for (int k = 0; k < 50; ++k) {
    const Word w = gen.word(1, 8);
    CHECK(apply(w, g) == apply(w, dehn_b(1, 1).endo()));
  }
}

TEST_CASE("free product is functorial in both slots") {
  const Endo f = dehn_a(1, 2).endo();
  const Endo f2 = dehn_b(2, 2).endo();
  const Endo h = dehn_b(1, 1).endo();
  const Endo h2 = dehn_a(1, 1).endo();
  CHECK(endo_equal(free_product(compose(f, f2), compose(h, h2)),
                   compose(free_product(f, h), free_product(f2, h2))));
}

TEST_CASE("verify_inverse demands both orders") {
  CHECK(verify_inverse(Endo::identity(1), Endo::identity(1)));
  const MappingClass a = dehn_a(1, 1);
  auto candidate = Endo::identity(1).images();
  candidate[slot(GenKind::Y, 1)] = W("y1 x1");
  CHECK(verify_inverse(a.endo(), Endo(1, candidate)));
  auto wrong = Endo::identity(1).images();
  wrong[slot(GenKind::Y, 1)] = W("y1 x1^-1");
  CHECK(!verify_inverse(a.endo(), Endo(1, wrong)));
}

TEST_CASE("mapping class construction is certified") {
  // a non-inverse pair is rejected
  CHECK_THROWS_AS(MappingClass(dehn_a(1, 1).endo(), dehn_a(1, 1).endo()),
                  Error);
  // a relator-breaking automorphism is rejected even with a valid inverse
  auto doubler = Endo::identity(1).images();
  doubler[slot(GenKind::X, 1)] = W("x1 x1");
  // x1 -> x1^2 is not even invertible; pair it with itself
  CHECK_THROWS_AS(MappingClass(Endo(1, doubler), Endo(1, doubler)), Error);
}

TEST_CASE("apply is a homomorphism") {
  Gen gen;
  const Endo f = dehn_w(1, 2).endo();
  for (int k = 0; k < 100; ++k) {
    const Word u = gen.word(2, 8);
    const Word v = gen.word(2, 8);
    CHECK(apply(concat(u, v), f) == concat(apply(u, f), apply(v, f)));
    CHECK(apply(invert_word(u), f) == invert_word(apply(u, f)));
  }
}

TEST_CASE("squares of inverse classes are mutually inverse") {
  const MappingClass hr = dehn_a(1, 2);  // any certified class
  const MappingClass sq = compose(hr, hr);
  const MappingClass sq_inv = compose(hr.inverse(), hr.inverse());
  CHECK(verify_inverse(sq.endo(), sq_inv.endo()));
}

TEST_CASE("endo fixture format round-trips") {
  const Endo f = dehn_w(1, 3).endo();
  const std::string text = format_endo(f);
  CHECK(text.rfind("genus 3", 0) == 0);
  CHECK(endo_equal(parse_endo(text), f));
  CHECK_THROWS_AS((void)parse_endo("genus 1\nx1 -> x1\n"), ParseError);
  CHECK_THROWS_AS((void)parse_endo("nope"), ParseError);
}
