// Command-line front end. Talks to the library exclusively through the
// public C interface.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>
#include <mcgbraid.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotEqual = 1;  // also: verification failures
constexpr int kExitUsage = 2;     // parse or usage errors

int fail() {
  std::fprintf(stderr, "error: %s\n", mcgb_last_error());
  return kExitUsage;
}

void print_and_free(char* s) {
  if (!s) return;
  std::fputs(s, stdout);
  mcgb_string_free(s);
}

int run_act(const std::string& expr, const std::string& word_text, int genus) {
  mcgb_class* mc = nullptr;
  if (mcgb_class_eval(expr.c_str(), genus, &mc) != MCGB_OK)
    return fail();
  mcgb_word* w = nullptr;
  if (mcgb_word_parse(word_text.c_str(), &w) != MCGB_OK) {
    mcgb_class_free(mc);
    return fail();
  }
  mcgb_word* image = nullptr;
  const mcgb_status status = mcgb_class_apply(mc, w, &image);
  mcgb_word_free(w);
  mcgb_class_free(mc);
  if (status != MCGB_OK) return fail();
  char* text = mcgb_word_format(image);
  mcgb_word_free(image);
  print_and_free(text);
  std::fputc('\n', stdout);
  return kExitOk;
}

int run_eq(const std::string& lhs, const std::string& rhs, int genus) {
  mcgb_class* a = nullptr;
  mcgb_class* b = nullptr;
  if (mcgb_class_eval(lhs.c_str(), genus, &a) != MCGB_OK)
    return fail();
  if (mcgb_class_eval(rhs.c_str(), genus, &b) != MCGB_OK) {
    mcgb_class_free(a);
    return fail();
  }
  char* diff = mcgb_class_first_difference(a, b);
  mcgb_class_free(a);
  mcgb_class_free(b);
  if (!diff) {
    std::puts("equal");
    return kExitOk;
  }
  std::printf("not-equal\nfirst difference %s\n", diff);
  mcgb_string_free(diff);
  return kExitNotEqual;
}

int run_eval(const std::string& expr, int genus) {
  mcgb_class* mc = nullptr;
  if (mcgb_class_eval(expr.c_str(), genus, &mc) != MCGB_OK)
    return fail();
  char* text = mcgb_class_format(mc);
  mcgb_class_free(mc);
  print_and_free(text);
  return kExitOk;
}

int run_artin(const std::string& braid, int strands) {
  char* text = nullptr;
  if (mcgb_artin_format(braid.c_str(), strands, &text) != MCGB_OK)
    return fail();
  print_and_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mapping-class computations: braidings, Dehn twists and "
               "half twists acting on the surface group"};
  app.require_subcommand(1);

  int genus = 0;
  std::string expr, expr_rhs, word_text;

  auto* act = app.add_subcommand(
      "act", "Apply an expression to a word and print the image");
  act->add_option("--genus", genus, "surface genus")->required();
  act->add_option("--word", word_text, "word in x<k>/y<k> letters")->required();
  act->add_option("expr", expr, "mapping-class expression")->required();

  auto* eq = app.add_subcommand(
      "eq", "Decide whether two expressions denote the same mapping class");
  eq->add_option("--genus", genus, "surface genus")->required();
  eq->add_option("lhs", expr, "left expression")->required();
  eq->add_option("rhs", expr_rhs, "right expression")->required();

  auto* eval = app.add_subcommand(
      "eval", "Print the generator images of an expression");
  eval->add_option("--genus", genus, "surface genus")->required();
  eval->add_option("expr", expr, "mapping-class expression")->required();

  int strands = 0;
  auto* artin = app.add_subcommand(
      "artin", "Print the braid-group action of a braid word on x1..xn");
  artin->add_option("--strands", strands, "strand count (inferred if absent)");
  artin->add_option("braid", expr, "braid word, e.g. `s1 s2^-1` or `sigma(2,3)`")
      ->required();

  mcgb_suite_config cfg;
  mcgb_suite_config_init(&cfg);
  std::string format = "text";
  std::string filter;
  bool inject_fault = false;
  auto* verify = app.add_subcommand(
      "verify", "Run the verification suite and print its report");
  verify->add_option("--max-genus", cfg.max_genus, "genus bound for sweeps");
  verify->add_option("--max-rs", cfg.max_rs, "r+s bound for block braidings");
  verify->add_option("--max-rst", cfg.max_rst, "r+s+t bound for axiom checks");
  verify->add_option("--max-braid-len", cfg.max_braid_len,
                     "word length bound for the injectivity sweep");
  verify->add_option("--max-strands", cfg.max_strands,
                     "strand bound for the injectivity sweep");
  verify->add_option("--seed", cfg.seed, "seed for randomized law checks");
  verify->add_option("--suite", filter, "only run checks with this name prefix");
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
  verify->add_flag("--inject-fault", inject_fault,
                   "test-only: corrupt one braiding fixture")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (act->parsed()) return run_act(expr, word_text, genus);
  if (eq->parsed()) return run_eq(expr, expr_rhs, genus);
  if (eval->parsed()) return run_eval(expr, genus);
  if (artin->parsed()) return run_artin(expr, strands);

  // verify
  cfg.inject_fault = inject_fault ? 1 : 0;
  cfg.filter = filter.empty() ? nullptr : filter.c_str();
  mcgb_report* report = nullptr;
  if (mcgb_suite_run(&cfg, &report) != MCGB_OK) return fail();
  char* rendered = mcgb_report_render(report, format == "structured" ? 1 : 0);
  const bool passed = mcgb_report_passed(report) == 1;
  mcgb_report_free(report);
  print_and_free(rendered);
  return passed ? kExitOk : kExitNotEqual;
}
