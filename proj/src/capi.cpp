#include "mcgbraid.h"

#include <cstring>
#include <string>

#include "endo.hpp"
#include "expr.hpp"
#include "verify.hpp"
#include "word.hpp"

struct mcgb_word {
  mcgb::Word value;
};
struct mcgb_class {
  mcgb::MappingClass value;
};
struct mcgb_report {
  mcgb::Report value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mcgb_status classify(const std::exception& e) {
  g_last_error = e.what();
  if (dynamic_cast<const mcgb::ParseError*>(&e)) return MCGB_ERR_PARSE;
  if (dynamic_cast<const mcgb::InvalidGenusError*>(&e))
    return MCGB_ERR_INVALID_GENUS;
  if (dynamic_cast<const mcgb::InvalidIndexError*>(&e))
    return MCGB_ERR_INVALID_INDEX;
  if (dynamic_cast<const mcgb::InvalidRangeError*>(&e))
    return MCGB_ERR_INVALID_RANGE;
  if (dynamic_cast<const mcgb::RankMismatchError*>(&e))
    return MCGB_ERR_RANK_MISMATCH;
  return MCGB_ERR_INTERNAL;
}

template <class F>
mcgb_status guarded(F&& body) {
  try {
    body();
    return MCGB_OK;
  } catch (const std::exception& e) {
    return classify(e);
  } catch (...) {
    g_last_error = "unknown error";
    return MCGB_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* mcgb_version(void) { return "1.0.0"; }

const char* mcgb_last_error(void) { return g_last_error.c_str(); }

void mcgb_string_free(char* s) { delete[] s; }

mcgb_status mcgb_word_parse(const char* text, mcgb_word** out) {
  if (!text || !out) return MCGB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new mcgb_word{mcgb::parse_word(text)}; });
}

char* mcgb_word_format(const mcgb_word* w) {
  if (!w) return nullptr;
  return dup_string(mcgb::format_word(w->value));
}

mcgb_status mcgb_word_concat(const mcgb_word* u, const mcgb_word* v,
                             mcgb_word** out) {
  if (!u || !v || !out) return MCGB_ERR_NULL_ARGUMENT;
  return guarded(
      [&] { *out = new mcgb_word{mcgb::concat(u->value, v->value)}; });
}

mcgb_status mcgb_word_invert(const mcgb_word* w, mcgb_word** out) {
  if (!w || !out) return MCGB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new mcgb_word{mcgb::invert_word(w->value)}; });
}

mcgb_status mcgb_relator(int genus, mcgb_word** out) {
  if (!out) return MCGB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new mcgb_word{mcgb::relator(genus)}; });
}

mcgb_status mcgb_partial_relator(int i, int j, mcgb_word** out) {
  if (!out) return MCGB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new mcgb_word{mcgb::partial_relator(i, j)}; });
}

int mcgb_word_equal(const mcgb_word* u, const mcgb_word* v) {
  if (!u || !v) return 0;
  return u->value == v->value ? 1 : 0;
}

size_t mcgb_word_length(const mcgb_word* w) {
  return w ? w->value.size() : 0;
}

void mcgb_word_free(mcgb_word* w) { delete w; }

mcgb_status mcgb_class_eval(const char* expr, int genus, mcgb_class** out) {
  if (!expr || !out) return MCGB_ERR_NULL_ARGUMENT;
  return guarded([&] {
    *out = new mcgb_class{mcgb::evaluate(mcgb::parse_expression(expr), genus)};
  });
}

mcgb_status mcgb_class_apply(const mcgb_class* mc, const mcgb_word* w,
                             mcgb_word** out) {
  if (!mc || !w || !out) return MCGB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new mcgb_word{mc->value.apply_to(w->value)}; });
}

mcgb_status mcgb_class_invert(const mcgb_class* mc, mcgb_class** out) {
  if (!mc || !out) return MCGB_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new mcgb_class{mc->value.inverse()}; });
}

int mcgb_class_genus(const mcgb_class* mc) {
  return mc ? mc->value.genus() : 0;
}

int mcgb_class_equal(const mcgb_class* a, const mcgb_class* b) {
  if (!a || !b) return 0;
  return mcgb::endo_equal(a->value.endo(), b->value.endo()) ? 1 : 0;
}

char* mcgb_class_first_difference(const mcgb_class* a, const mcgb_class* b) {
  if (!a || !b) return nullptr;
  auto diff = mcgb::first_difference(a->value.endo(), b->value.endo());
  return diff ? dup_string(*diff) : nullptr;
}

char* mcgb_class_format(const mcgb_class* mc) {
  if (!mc) return nullptr;
  return dup_string(mcgb::format_endo(mc->value.endo()));
}

void mcgb_class_free(mcgb_class* mc) { delete mc; }

mcgb_status mcgb_artin_format(const char* braid_text, int strands, char** out) {
  if (!braid_text || !out) return MCGB_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const mcgb::BraidWord b =
        mcgb::parse_braid_word(braid_text, strands > 0 ? strands : 1);
    if (strands > 0 && b.strands() > strands)
      throw mcgb::InvalidIndexError("braid word needs " +
                                    std::to_string(b.strands()) + " strands");
    const mcgb::FreeAut aut = mcgb::artin(b);
    std::string text = "strands " + std::to_string(aut.rank()) + "\n";
    for (int i = 1; i <= aut.rank(); ++i)
      text += "x" + std::to_string(i) + " -> " +
              mcgb::format_word(aut.images()[static_cast<std::size_t>(i - 1)]) +
              "\n";
    *out = dup_string(text);
  });
}

void mcgb_suite_config_init(mcgb_suite_config* cfg) {
  if (!cfg) return;
  const mcgb::SuiteConfig defaults;
  cfg->max_genus = defaults.max_genus;
  cfg->max_rs = defaults.max_rs;
  cfg->max_rst = defaults.max_rst;
  cfg->max_naturality = defaults.max_naturality;
  cfg->max_strands = defaults.max_strands;
  cfg->max_braid_len = defaults.max_braid_len;
  cfg->seed = defaults.seed;
  cfg->inject_fault = 0;
  cfg->filter = nullptr;
}

mcgb_status mcgb_suite_run(const mcgb_suite_config* cfg, mcgb_report** out) {
  if (!cfg || !out) return MCGB_ERR_NULL_ARGUMENT;
  return guarded([&] {
    mcgb::SuiteConfig config;
    config.max_genus = cfg->max_genus;
    config.max_rs = cfg->max_rs;
    config.max_rst = cfg->max_rst;
    config.max_naturality = cfg->max_naturality;
    config.max_strands = cfg->max_strands;
    config.max_braid_len = cfg->max_braid_len;
    config.seed = cfg->seed;
    config.inject_fault = cfg->inject_fault != 0;
    if (cfg->filter) config.filter = cfg->filter;
    *out = new mcgb_report{mcgb::run_suite(config)};
  });
}

int mcgb_report_passed(const mcgb_report* r) {
  return r && r->value.all_passed() ? 1 : 0;
}

int mcgb_report_total(const mcgb_report* r) {
  return r ? static_cast<int>(r->value.total()) : 0;
}

int mcgb_report_failures(const mcgb_report* r) {
  return r ? static_cast<int>(r->value.failures()) : 0;
}

char* mcgb_report_render(const mcgb_report* r, int structured) {
  if (!r) return nullptr;
  return dup_string(structured ? mcgb::render_structured(r->value)
                               : mcgb::render_text(r->value));
}

void mcgb_report_free(mcgb_report* r) { delete r; }

}  // extern "C"
