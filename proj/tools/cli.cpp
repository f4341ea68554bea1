#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <map>
#include <memory>
#include <sstream>

#include "clusterhodge/clusterhodge.h"

namespace clusterhodge::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitOpen = 2;
constexpr int kExitVerifyFail = 3;

struct SeedDeleter {
  void operator()(clh_seed* s) const { clh_seed_free(s); }
};
using SeedHandle = std::unique_ptr<clh_seed, SeedDeleter>;

struct Text {
  char* p = nullptr;
  ~Text() { clh_string_free(p); }
};

int report_status(clh_status s, std::ostream& err) {
  if (s == CLH_OK) return kExitOk;
  if (s == CLH_OPEN_CASE) {
    err << "open case: " << clh_last_error() << '\n';
    return kExitOpen;
  }
  err << "error: " << clh_status_name(s) << ": " << clh_last_error() << '\n';
  return kExitError;
}

bool read_input(const std::string& path, std::istream& in, std::string& text, std::ostream& err) {
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open input file '" << path << "'\n";
    return false;
  }
  text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  return true;
}

void emit(std::ostream& out, const char* text) {
  if (!text) return;
  std::string s(text);
  out << s;
  if (!s.empty() && s.back() != '\n') out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed Hodge numbers, log-form bases and point counts of small cluster varieties"};
  app.require_subcommand(1, 1);

  std::string input;
  clh_format format = CLH_FORMAT_TEXT;
  const std::map<std::string, clh_format> formats{
      {"text", CLH_FORMAT_TEXT}, {"json", CLH_FORMAT_JSON}, {"csv", CLH_FORMAT_CSV}};
  app.add_option("--format", format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("FORMAT");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Quiver JSON file (default: stdin)");
    sub->fallthrough();
  };

  auto* classify = app.add_subcommand("classify", "Classify the seed");
  add_input(classify);

  bool ih = false;
  auto* table = app.add_subcommand("table", "Mixed Hodge table");
  add_input(table);
  table->add_flag("--ih", ih, "Intersection cohomology table");

  clh_basis_variant variant = CLH_BASIS_STATEMENT;
  const std::map<std::string, clh_basis_variant> variants{{"statement", CLH_BASIS_STATEMENT},
                                                          {"eq21", CLH_BASIS_EQ21}};
  auto* basis = app.add_subcommand("basis", "Log-form basis of every Deligne piece");
  add_input(basis);
  basis->add_option("--variant", variant, "Second H^{2,(1,1)} family for two mutable vertices: statement or eq21")
      ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));

  std::uint64_t prime = 0;
  auto* count = app.add_subcommand("count", "Number of points over F_p");
  add_input(count);
  count->add_option("--prime", prime, "Prime p")->required()->check(CLI::PositiveNumber);

  std::vector<std::uint64_t> primes;
  auto* verify = app.add_subcommand("verify", "Compare the point count polynomial with the E-polynomial");
  add_input(verify);
  verify->add_option("--primes", primes, "Primes to sample, last one held out (default: automatic)")
      ->delimiter(',')
      ->expected(2, 64);

  auto* finite = app.add_subcommand("finite-type", "Finite-type check for 3 mutable vertices");
  add_input(finite);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  std::string text;
  if (!read_input(input, in, text, err)) return kExitError;
  clh_seed* raw = nullptr;
  const clh_status parsed = clh_seed_from_json(text.c_str(), &raw);
  if (parsed != CLH_OK) return report_status(parsed, err);
  SeedHandle seed(raw);

  Text result;
  if (classify->parsed()) {
    const clh_status s = clh_classify(seed.get(), format, &result.p);
    emit(out, result.p);
    return report_status(s, err);
  }
  if (table->parsed()) {
    const clh_status s = clh_table(seed.get(), ih ? 1 : 0, format, &result.p);
    emit(out, result.p);
    return report_status(s, err);
  }
  if (basis->parsed()) {
    const clh_status s = clh_basis(seed.get(), variant, format, &result.p);
    emit(out, result.p);
    return report_status(s, err);
  }
  if (count->parsed()) {
    std::uint64_t n = 0;
    const clh_status s = clh_count(seed.get(), prime, &n);
    if (s != CLH_OK) return report_status(s, err);
    if (format == CLH_FORMAT_JSON) {
      out << nlohmann::json{{"prime", prime}, {"count", n}}.dump() << '\n';
    } else if (format == CLH_FORMAT_CSV) {
      out << "prime,count\n" << prime << ',' << n << '\n';
    } else {
      out << n << '\n';
    }
    return kExitOk;
  }
  if (verify->parsed()) {
    clh_verdict verdict = CLH_VERDICT_FAIL;
    const clh_status s = clh_verify(seed.get(), primes.empty() ? nullptr : primes.data(), primes.size(), format,
                                    &result.p, &verdict);
    emit(out, result.p);
    if (s != CLH_OK) return report_status(s, err);
    return verdict == CLH_VERDICT_FAIL ? kExitVerifyFail : kExitOk;
  }
  const clh_status s = clh_finite_type(seed.get(), format, &result.p);
  emit(out, result.p);
  return report_status(s, err);
}

}  // namespace clusterhodge::cli
