// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "basis.hpp"
#include "classify.hpp"
#include "fixtures.hpp"
#include "hodge.hpp"
#include "logform.hpp"
#include "oracles.hpp"
#include "pointcount.hpp"
#include "quiver.hpp"

using namespace clusterhodge;

namespace {

constexpr int kGrid = 6;
constexpr double kTableBudgetSeconds = 1.0;

struct Outcome {
  bool pass;
  std::string detail;
};

struct GridCase {
  std::string name;
  Seed seed;
  MixedHodgeTable expected;
};

MixedHodgeTable threefold(std::array<std::int64_t, 4> diag, std::int64_t h21, std::int64_t h32) {
  MixedHodgeTable t(3);
  for (int k = 0; k < 4; ++k) t.set(k, k, diag[static_cast<std::size_t>(k)]);
  t.set(2, 1, h21);
  t.set(3, 2, h32);
  return t;
}

std::string tuple_name(const std::string& name, std::vector<long> v) {
  std::string out = name + "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

/// Every smooth grid case with its expected table, built from brute-force gcds.
std::vector<GridCase> smooth_grid() {
  using oracle::gcd;
  std::vector<GridCase> out;
  for (long a = 1; a <= kGrid; ++a) {
    MixedHodgeTable t2(2);
    t2.set(0, 0, 1);
    t2.set(1, 1, 1);
    t2.set(2, 2, 1);
    t2.set(2, 1, a - 1);
    out.push_back({tuple_name("TwoDimensional", {a}), fixtures::two_dim(a), t2});
    out.push_back({tuple_name("Prod2DxTorus", {a}), fixtures::one_mutable(a, 0), threefold({1, 2, 2, 1}, a - 1, a - 1)});
  }
  for (long a = 1; a <= kGrid; ++a)
    for (long b = 1; b <= kGrid; ++b) {
      const long g = gcd(a, b);
      out.push_back({tuple_name("OneMutable", {a, b}), fixtures::one_mutable(a, b), threefold({1, 2, 2, 1}, g - 1, g - 1)});
    }
  for (long a = 1; a <= kGrid; ++a)
    for (long b = 1; b <= kGrid; ++b)
      for (long c = 1; c <= kGrid; ++c) {
        const long two = gcd(a, b) + gcd(a, c) - 2;
        out.push_back({tuple_name("TwoMutable", {a, b, c}), fixtures::two_mutable(a, b, c),
                       threefold({1, 1, 1, 1}, two, two)});
        const long three = gcd(a, b) + gcd(a, c) + gcd(b, c) - 3;
        out.push_back({tuple_name("ThreeMutableAcyclic", {a, b, c}), fixtures::three_acyclic(a, b, c),
                       threefold({1, 0, 1, 1}, three, three + 1)});
      }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome criterion_tables() {
  const auto start = std::chrono::steady_clock::now();
  const auto grid = smooth_grid();
  std::size_t bad = 0;
  std::string first;
  for (const auto& g : grid) {
    if (table_for(classify(g.seed)) != g.expected) {
      if (!bad++) first = g.name;
    }
  }
  MixedHodgeTable h(3, false);
  h.set(0, 0, 1);
  h.set(1, 1, 1);
  h.set(2, 2, 2);
  h.set(3, 3, 1);
  MixedHodgeTable ih = h.with_variant(CohomologyVariant::IntersectionCohomology);
  ih.set(2, 1, 1);
  const Classification sing = classify(fixtures::singular_case1());
  if (table_for(sing) != h) bad++, first = first.empty() ? "singular H" : first;
  if (table_for(sing, CohomologyVariant::IntersectionCohomology) != ih) bad++, first = first.empty() ? "singular IH" : first;
  const double secs = seconds_since(start);
  const bool pass = bad == 0 && secs < kTableBudgetSeconds;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu tables, %zu mismatches%s%s, %.3f s (budget %.0f s)", grid.size() + 2, bad,
                first.empty() ? "" : ", first ", first.c_str(), secs, kTableBudgetSeconds);
  return {pass, buf};
}

struct OracleRun {
  std::size_t pass = 0, total = 0;
  std::vector<std::string> failures;
  double seconds = 0;
};

OracleRun run_oracle(const std::function<std::optional<PrimePlan>(const Seed&)>& plan_for) {
  const auto start = std::chrono::steady_clock::now();
  OracleRun run;
  for (const auto& g : smooth_grid()) {
    const VerificationReport r = verify_table(g.seed, plan_for(g.seed));
    ++run.total;
    if (r.verdict == Verdict::Pass) {
      ++run.pass;
      continue;
    }
    std::string line = g.name + ": counts";
    for (const auto& s : r.samples) line += " " + std::to_string(s.q) + ":" + std::to_string(s.count);
    run.failures.push_back(line);
  }
  run.seconds = seconds_since(start);
  return run;
}

Outcome criterion_oracle_fixed(const OracleRun& run) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "primes 5,7,11,13 held-out 17: %zu/%zu PASS, %.2f s", run.pass, run.total,
                run.seconds);
  std::string detail = buf;
  if (!run.failures.empty()) {
    detail += "; not polynomial-count on these primes when a gcd >= 2, e.g. " + run.failures.front();
  }
  return {run.pass == run.total, detail};
}

/// Two-mutable points where the statement and the printed basis list disagree:
/// which prediction do the adapted-prime counts confirm?
std::string adjudicate_two_mutable() {
  std::size_t differ = 0, statement_ok = 0, printed_ok = 0;
  for (long a = 1; a <= kGrid; ++a)
    for (long b = 1; b <= kGrid; ++b)
      for (long c = 1; c <= kGrid; ++c) {
        const long stmt = oracle::gcd(a, b) + oracle::gcd(a, c) - 2;
        const long printed = oracle::gcd(a, c) + oracle::gcd(b, c) - 2;
        if (stmt == printed) continue;
        ++differ;
        const VerificationReport r = verify_table(fixtures::two_mutable(a, b, c));
        if (!r.observed) continue;
        if (*r.observed == e_polynomial(threefold({1, 1, 1, 1}, stmt, stmt))) ++statement_ok;
        if (*r.observed == e_polynomial(threefold({1, 1, 1, 1}, printed, printed))) ++printed_ok;
      }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "two-mutable grid points where gcd(a,b) and gcd(b,c) formulas differ: %zu; counts confirm "
                "gcd(a,b)+gcd(a,c)-2 at %zu, gcd(a,c)+gcd(b,c)-2 at %zu",
                differ, statement_ok, printed_ok);
  return buf;
}

Outcome criterion_singular() {
  const PrimePlan plan = PrimePlan::fixed_default();
  const VerificationReport r = verify_table(fixtures::singular_case1(), plan);
  bool ok = r.verdict == Verdict::CountOnly && r.observed && r.observed->degree() == 3 &&
            r.observed->leading_coefficient() == 1;
  for (const auto& s : r.samples) ok = ok && s.count == oracle::count_singular(s.q);
  const auto h = table_singular_case1(CohomologyVariant::Cohomology);
  const auto ih = table_singular_case1(CohomologyVariant::IntersectionCohomology);
  ok = ok && h.betti_numbers() == std::vector<std::int64_t>{1, 1, 2, 1, 0, 0, 0};
  ok = ok && h.at(2, 2) == 2 && h.at(2, 1) == 0 && ih.at(2, 1) == 1 && ih.at(2, 2) == 2;
  const bool chl = numerical_chl(h) || numerical_chl(ih);
  ok = ok && !chl;
  std::string detail = std::string(verdict_name(r.verdict)) + ", counted polynomial " +
                       (r.observed ? r.observed->to_string() : "none") + ", numerical CHL " +
                       (chl ? "holds" : "fails on H and IH");
  return {ok, detail};
}

Outcome criterion_mutation() {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<long> entry(-5, 5);
  std::uniform_int_distribution<std::size_t> pick_n(1, 3), pick_m(0, 3);
  const int trials = 10000;
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const std::size_t n = pick_n(rng), m = pick_m(rng);
    std::vector<std::vector<long>> rows(n + m, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        rows[i][j] = entry(rng);
        rows[j][i] = -rows[i][j];
      }
    for (std::size_t i = n; i < n + m; ++i)
      for (auto& v : rows[i]) v = entry(rng);
    const auto b = ExtendedExchangeMatrix::from_rows(n, m, rows);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const auto mu = mutate_matrix(b, k);
    if (!mu.principal_part_skew_symmetric() || mutate_matrix(mu, k) != b) ++failures;
  }
  return {failures == 0, std::to_string(trials) + " random (B, k) pairs, " + std::to_string(failures) + " failures"};
}

Outcome criterion_finite_type() {
  bool ok = finite_type_check(fixtures::cyclic(2, 2, 2)).verdict == FiniteTypeVerdict::NotFiniteType;
  ok = ok && finite_type_check(fixtures::cyclic(3, 3, 3)).verdict == FiniteTypeVerdict::NotFiniteType;
  ok = ok && finite_type_check(fixtures::cyclic(1, 1, 1)).verdict == FiniteTypeVerdict::FiniteLouise;
  std::size_t acyclic = 0, cyclic = 0, longest = 0, disagree = 0;
  for (long a = 1; a <= kGrid; ++a)
    for (long b = 1; b <= kGrid; ++b)
      for (long c = 1; c <= kGrid; ++c) {
        ++acyclic;
        ok = ok && finite_type_check(fixtures::three_acyclic(a, b, c)).verdict == FiniteTypeVerdict::FiniteLouise;
        ++cyclic;
        const auto r = finite_type_check(fixtures::cyclic(a, b, c));
        longest = std::max(longest, r.mutations.size());
        if ((r.verdict == FiniteTypeVerdict::NotFiniteType) != oracle::markov_mutation_cyclic(a, b, c)) ++disagree;
      }
  ok = ok && longest <= 100;
  return {ok, std::to_string(acyclic) + " acyclic, " + std::to_string(cyclic) + " cyclic triangles; longest descent " +
                  std::to_string(longest) + " mutations; " + std::to_string(disagree) +
                  " disagreements with the Markov-constant oracle"};
}

Outcome criterion_basis() {
  std::size_t checked = 0, bad = 0;
  for (const auto& g : smooth_grid()) {
    const Classification c = classify(g.seed);
    const Basis b = basis_for(c);
    const MixedHodgeTable t = table_for(c);
    for (int k = 0; k <= 2 * t.dim(); ++k)
      for (int p = 0; p <= t.dim(); ++p) {
        ++checked;
        if (static_cast<std::int64_t>(b.size(k, p)) != t.at(k, p)) ++bad;
        if (!b.symbolic) continue;
        auto it = b.pieces.find({k, p});
        if (it != b.pieces.end() && rational_rank(it->second) != it->second.size()) ++bad;
      }
  }
  const std::vector<std::string> yz{"y", "z"}, vw{"v", "w"}, xyz{"x", "y", "z"}, uvw{"u", "v", "w"};
  auto term = [](const std::vector<std::string>& g, std::vector<std::size_t> order) {
    return LogForm::term(g, Exponents(g.size(), 0), order);
  };
  std::size_t identities = 0, broken = 0;
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = 1; b <= 12; ++b) {
      const auto bz = bezout_change(a, b);
      const mpq_class ap(bz.a_prime), bp(bz.b_prime), s(bz.s), t(bz.t);
      const auto lifted = prepend_identity(bz.inverse, "u", "x");
      const bool ok = pullback(bz.inverse, term(vw, {0})) == ap * term(yz, {0}) + bp * term(yz, {1}) &&
                      pullback(bz.inverse, term(vw, {1})) == t * term(yz, {0}) - s * term(yz, {1}) &&
                      pullback(lifted, term(uvw, {0, 1})) == ap * term(xyz, {0, 1}) + bp * term(xyz, {0, 2}) &&
                      pullback(lifted, term(uvw, {0, 1, 2})) == mpq_class(-1) * term(xyz, {0, 1, 2});
      identities += 4;
      if (!ok) ++broken;
    }
  return {bad == 0 && broken == 0,
          std::to_string(checked) + " (case, k, p) pieces, " + std::to_string(bad) + " mismatches; " +
              std::to_string(identities) + " pullback identities, " + std::to_string(broken) + " broken pairs"};
}

Outcome criterion_mayer_vietoris() {
  std::size_t assembled = 0, bad = 0, euler = 0;
  for (long a = 1; a <= kGrid; ++a)
    for (long b = 1; b <= kGrid; ++b)
      for (long c = 1; c <= kGrid; ++c) {
        for (const Seed& s : {fixtures::two_mutable(a, b, c), fixtures::three_acyclic(a, b, c)}) {
          ++assembled;
          if (assemble_via_louise(louise_decompose(s)) != table_for(classify(s))) ++bad;
        }
      }
  for (const auto& g : smooth_grid()) {
    const auto t = table_for(classify(g.seed));
    if (t.dim() == 3 && t.euler_characteristic() != 0) ++euler;
  }
  // the singular variety is not a torus bundle: chi = 1, matching q^3 + q - 1 at q = 1
  const auto sing = table_singular_case1(CohomologyVariant::Cohomology).euler_characteristic();
  return {bad == 0 && euler == 0, std::to_string(assembled) + " Louise assemblies, " + std::to_string(bad) +
                                      " differ from closed forms; " + std::to_string(euler) +
                                      " smooth three-dimensional tables with nonzero Euler characteristic"
                                      " (singular case: chi = " + std::to_string(sing) + ")"};
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = body();
    all = all && o.pass;
    std::printf("criterion %d [%s] %s: %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
  };

  report(1, "golden tables", criterion_tables);

  OracleRun fixed;
  report(2, "point-count oracle", [&] {
    fixed = run_oracle([](const Seed&) { return PrimePlan::fixed_default(); });
    return criterion_oracle_fixed(fixed);
  });
  {
    const OracleRun adapted = run_oracle([](const Seed&) { return std::optional<PrimePlan>{}; });
    std::printf("  info: primes p >= 5 with p = 1 mod 2L (L from the exchange exponents): %zu/%zu PASS, %.2f s\n",
                adapted.pass, adapted.total, adapted.seconds);
    for (const auto& f : adapted.failures) std::printf("  info: adapted-prime FAIL %s\n", f.c_str());
    std::printf("  info: %zu of %zu fixed-prime failures listed below\n", std::min<std::size_t>(5, fixed.failures.size()),
                fixed.failures.size());
    for (std::size_t i = 0; i < fixed.failures.size() && i < 5; ++i)
      std::printf("  info: fixed-prime FAIL %s\n", fixed.failures[i].c_str());
    std::printf("  info: %s\n", adjudicate_two_mutable().c_str());
  }

  report(3, "singular case", criterion_singular);
  report(4, "mutation involution", criterion_mutation);
  report(5, "finite type", criterion_finite_type);
  report(6, "basis/table consistency", criterion_basis);
  report(7, "Mayer-Vietoris assembly", criterion_mayer_vietoris);
  std::printf("overall: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
