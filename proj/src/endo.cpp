#include "endo.hpp"

#include <sstream>

namespace mcgb {

Endo::Endo(int genus, std::vector<Word> images)
    : genus_(genus), images_(std::move(images)) {
  if (genus_ < 1)
    throw InvalidGenusError("genus must be >= 1, got " + std::to_string(genus_));
  if (images_.size() != static_cast<std::size_t>(2 * genus_))
    throw InvalidRangeError("expected " + std::to_string(2 * genus_) +
                            " generator images, got " +
                            std::to_string(images_.size()));
  for (const auto& w : images_)
    if (w.max_index() > genus_)
      throw RankMismatchError("image word mentions handle index " +
                              std::to_string(w.max_index()) +
                              " above genus " + std::to_string(genus_));
}

Endo Endo::identity(int genus) {
  if (genus < 1)
    throw InvalidGenusError("genus must be >= 1, got " + std::to_string(genus));
  std::vector<Word> images;
  images.reserve(2 * static_cast<std::size_t>(genus));
  for (int i = 1; i <= genus; ++i) {
    images.push_back(Word::generator(GenKind::X, i));
    images.push_back(Word::generator(GenKind::Y, i));
  }
  return Endo(genus, std::move(images));
}

const Word& Endo::image(GenKind kind, int index) const {
  if (index < 1 || index > genus_)
    throw RankMismatchError("generator index " + std::to_string(index) +
                            " out of range for genus " + std::to_string(genus_));
  return images_[slot(kind, index)];
}

Word apply(const Word& w, const Endo& f) {
  Word out;
  for (const auto& g : w.letters()) {
    const Word& img = f.image(g.kind, g.index);
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

Endo compose(const Endo& f, const Endo& h) {
  if (f.genus() != h.genus())
    throw RankMismatchError("cannot compose endomorphisms of genus " +
                            std::to_string(f.genus()) + " and " +
                            std::to_string(h.genus()));
  std::vector<Word> images;
  images.reserve(f.images().size());
  for (const auto& w : f.images()) images.push_back(apply(w, h));
  return Endo(f.genus(), std::move(images));
}

bool endo_equal(const Endo& f, const Endo& h) {
  return f.genus() == h.genus() && f.images() == h.images();
}

Word shift_word(const Word& w, int offset) {
  Word out;
  for (const auto& g : w.letters())
    out.push(GenSymbol{g.kind, g.index + offset, g.sign});
  return out;
}

Endo free_product(const Endo& f, const Endo& h) {
  std::vector<Word> images = f.images();
  images.reserve(images.size() + h.images().size());
  for (const auto& w : h.images()) images.push_back(shift_word(w, f.genus()));
  return Endo(f.genus() + h.genus(), std::move(images));
}

bool verify_inverse(const Endo& f, const Endo& h) {
  if (f.genus() != h.genus()) return false;
  const Endo id = Endo::identity(f.genus());
  return endo_equal(compose(f, h), id) && endo_equal(compose(h, f), id);
}

MappingClass::MappingClass(Endo forward, Endo backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  if (!verify_inverse(forward_, backward_))
    throw InvalidRangeError(
        "mapping class construction: the stated inverse does not invert the "
        "automorphism");
  const Word r = relator(forward_.genus());
  if (apply(r, forward_) != r)
    throw InvalidRangeError(
        "mapping class construction: the automorphism does not fix the "
        "boundary relator");
}

MappingClass MappingClass::inverse() const {
  return MappingClass(backward_, forward_);
}

MappingClass compose(const MappingClass& f, const MappingClass& h) {
  return MappingClass(compose(f.endo(), h.endo()),
                      compose(h.inverse_endo(), f.inverse_endo()));
}

MappingClass free_product(const MappingClass& f, const MappingClass& h) {
  return MappingClass(free_product(f.endo(), h.endo()),
                      free_product(f.inverse_endo(), h.inverse_endo()));
}

MappingClass identity_class(int genus) {
  return MappingClass(Endo::identity(genus), Endo::identity(genus));
}

std::optional<std::string> first_difference(const Endo& f, const Endo& h) {
  if (f.genus() != h.genus())
    return "genus: " + std::to_string(f.genus()) + " vs " +
           std::to_string(h.genus());
  for (int i = 1; i <= f.genus(); ++i) {
    for (GenKind kind : {GenKind::X, GenKind::Y}) {
      const Word& a = f.image(kind, i);
      const Word& b = h.image(kind, i);
      if (a != b)
        return format_gen(GenSymbol{kind, i, 1}) + ": " + format_word(a) +
               " vs " + format_word(b);
    }
  }
  return std::nullopt;
}

std::string format_endo(const Endo& f) {
  std::string out = "genus " + std::to_string(f.genus()) + "\n";
  for (int i = 1; i <= f.genus(); ++i) {
    out += "x" + std::to_string(i) + " -> " +
           format_word(f.image(GenKind::X, i)) + "\n";
    out += "y" + std::to_string(i) + " -> " +
           format_word(f.image(GenKind::Y, i)) + "\n";
  }
  return out;
}

Endo parse_endo(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok) || tok != "genus")
    throw ParseError("endomorphism fixture must start with `genus <g>`", 0);
  int genus = 0;
  if (!(in >> genus) || genus < 1)
    throw ParseError("bad genus in endomorphism fixture", 0);
  std::vector<Word> images(2 * static_cast<std::size_t>(genus));
  std::vector<bool> seen(2 * static_cast<std::size_t>(genus), false);
  std::string line;
  std::getline(in, line);  // rest of the header line
  while (std::getline(in, line)) {
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      // blank or trailing junk-free line
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) continue;
      throw ParseError("fixture line missing `->`", 0);
    }
    Word lhs = parse_word(line.substr(0, arrow));
    if (lhs.size() != 1 || lhs.letters()[0].sign != 1)
      throw ParseError("fixture left-hand side must be a single generator", 0);
    const GenSymbol g = lhs.letters()[0];
    if (g.index > genus)
      throw ParseError("fixture generator index above genus", 0);
    images[slot(g.kind, g.index)] = parse_word(line.substr(arrow + 2));
    seen[slot(g.kind, g.index)] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw ParseError("fixture is missing a generator image", 0);
  return Endo(genus, std::move(images));
}

}  // namespace mcgb
