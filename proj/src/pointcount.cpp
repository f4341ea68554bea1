#include "pointcount.hpp"

#include <future>
#include <limits>
#include <numeric>

#include "error.hpp"

namespace clusterhodge {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32)) throw Error(ErrorCode::Domain, "prime modulus must fit in 32 bits");
  if (!is_prime(p)) throw Error(ErrorCode::Domain, std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::Domain, "zero has no inverse");
  return pow(a, p_ - 2);
}

namespace {

using u128 = unsigned __int128;

std::uint64_t checked(u128 v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorCode::Overflow, "point count exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > ~u128{0} / a) throw Error(ErrorCode::Overflow, "point count overflow");
  return a * b;
}

std::uint64_t reduce_exponent(const Integer& e, std::uint64_t order) {
  Integer r = e % Integer(static_cast<unsigned long>(order));
  if (r < 0) r += static_cast<unsigned long>(order);
  return r.get_ui();
}

/// Solutions of x x' = r: q - 1 if r != 0, else 2q - 1.
u128 fiber(std::uint64_t q, bool zero) { return zero ? 2 * u128{q} - 1 : u128{q} - 1; }

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

/// gcd of all k x k minors (D_0 = 1).
Integer determinantal_divisor(const std::vector<std::vector<Integer>>& rows, std::size_t cols, std::size_t k) {
  if (k == 0) return 1;
  Integer g = 0;
  for (const auto& rs : subsets(rows.size(), k)) {
    for (const auto& cs : subsets(cols, k)) {
      std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = rows[rs[i]][cs[j]];
      const Integer d = determinant(std::move(minor));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  }
  return g;
}

Integer largest_invariant_factor(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  std::size_t rank = std::min(rows.size(), cols);
  Integer top;
  while (rank > 0 && (top = determinantal_divisor(rows, cols, rank)) == 0) --rank;
  if (rank == 0) return 1;
  return top / determinantal_divisor(rows, cols, rank - 1);
}

/// Mutates a cyclic 3-vertex seed to the seed where the descent stops.
Seed louise_ready(const Seed& seed) {
  if (seed.mutable_count() == 3 && seed.frozen_count() == 0 && is_cyclic_triangle(seed.matrix())) {
    FiniteTypeResult ft = finite_type_check(seed);
    if (ft.verdict == FiniteTypeVerdict::NotFiniteType) {
      throw Error(ErrorCode::NotFiniteType, "cyclic quiver is not of finite type; no Louise cover exists");
    }
    return ft.seed;
  }
  return seed;
}

void collect_leaves(const LouiseTree& t, std::vector<const Seed*>& out) {
  if (t.is_leaf()) {
    out.push_back(&t.seed);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

}  // namespace

std::uint64_t count_isolated(const VarietyPresentation& pres, const PrimeField& field) {
  const std::uint64_t q = field.p();
  const std::size_t m = pres.frozen_labels.size();
  const std::size_t n = pres.equations.size();

  // pos/neg[i][j][y] = y^e for frozen variable j in equation i.
  std::vector<std::vector<std::vector<std::uint64_t>>> pos(n), neg(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& eq = pres.equations[i];
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t ep = reduce_exponent(eq.positive[j], q - 1);
      const std::uint64_t en = reduce_exponent(eq.negative[j], q - 1);
      std::vector<std::uint64_t> tp(q), tn(q);
      for (std::uint64_t y = 1; y < q; ++y) {
        tp[y] = field.pow(y, ep);
        tn[y] = field.pow(y, en);
      }
      pos[i].push_back(std::move(tp));
      neg[i].push_back(std::move(tn));
    }
  }

  std::vector<std::uint64_t> histogram(n + 1, 0);
  std::vector<std::uint64_t> tuple(m, 1);
  while (true) {
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t a = 1, b = 1;
      for (std::size_t j = 0; j < m; ++j) {
        a = field.mul(a, pos[i][j][tuple[j]]);
        b = field.mul(b, neg[i][j][tuple[j]]);
      }
      if (field.add(a, b) == 0) ++zeros;
    }
    ++histogram[zeros];
    std::size_t j = 0;
    while (j < m && ++tuple[j] == q) tuple[j++] = 1;
    if (j == m) break;
  }

  u128 total = 0;
  for (std::size_t z = 0; z <= n; ++z) {
    if (histogram[z] == 0) continue;
    u128 term = histogram[z];
    for (std::size_t i = 0; i < n; ++i) term = checked_mul(term, fiber(q, i < z));
    total += term;
    checked(total);
  }
  return checked(total);
}

std::uint64_t count_singular_case1(const PrimeField& field) {
  const std::uint64_t q = field.p();
  u128 total = 0;
  for (std::uint64_t z = 1; z < q; ++z) {
    const u128 f = fiber(q, field.add(z, 1) == 0);
    total += f * f;
  }
  return checked(total);
}

std::uint64_t count_tree(const LouiseTree& tree, const PrimeField& field, std::vector<ChartCount>* leaves) {
  if (tree.is_leaf()) {
    const std::uint64_t c = count_isolated(isolated_presentation(tree.seed), field);
    if (leaves) leaves->push_back(ChartCount{tree.seed, field.p(), c});
    return c;
  }
  const u128 u = count_tree(tree.children.at(0), field, leaves);
  const u128 v = count_tree(tree.children.at(1), field, leaves);
  const u128 uv = count_tree(tree.children.at(2), field, leaves);
  if (u + v < uv) throw Error(ErrorCode::Domain, "inclusion-exclusion produced a negative count");
  return checked(u + v - uv);
}

std::uint64_t count_variety(const Seed& seed, const PrimeField& field,
                            std::optional<std::pair<std::size_t, std::size_t>> preferred) {
  const std::size_t total = seed.vertex_count();
  if (total == 2 || total == 3) {
    const Classification c = classify(seed);
    if (c.tag == CaseTag::Unsupported) throw Error(ErrorCode::OpenCase, c.reason);
    if (c.tag == CaseTag::NotFiniteType) throw Error(ErrorCode::NotFiniteType, c.reason);
    if (c.tag == CaseTag::SingularCase1_11) return count_singular_case1(field);
  }
  return count_tree(louise_decompose(louise_ready(seed), preferred), field);
}

PrimePlan PrimePlan::fixed_default() { return PrimePlan{{5, 7, 11, 13}, 17, 2}; }

PrimePlan PrimePlan::from_list(std::vector<std::uint64_t> primes) {
  if (primes.size() < 2) throw Error(ErrorCode::InsufficientSamples, "need at least one fit prime and a held-out prime");
  PrimePlan plan;
  plan.held_out = primes.back();
  primes.pop_back();
  plan.fit = std::move(primes);
  plan.modulus = 0;
  for (auto p : plan.fit) plan.modulus = std::gcd(plan.modulus, p - 1);
  plan.modulus = std::gcd(plan.modulus, plan.held_out - 1);
  return plan;
}

std::uint64_t exponent_modulus(const Seed& seed) {
  const LouiseTree tree = louise_decompose(louise_ready(seed));
  std::vector<const Seed*> leaves;
  collect_leaves(tree, leaves);
  Integer lcm = 1;
  for (const Seed* leaf : leaves) {
    const VarietyPresentation pres = isolated_presentation(*leaf);
    const std::size_t n = pres.equations.size();
    const std::size_t m = pres.frozen_labels.size();
    std::vector<std::vector<Integer>> vectors;
    for (const auto& eq : pres.equations) {
      std::vector<Integer> v(m);
      for (std::size_t j = 0; j < m; ++j) v[j] = eq.positive[j] - eq.negative[j];
      vectors.push_back(std::move(v));
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::vector<Integer>> rows;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) rows.push_back(vectors[i]);
      const Integer d = largest_invariant_factor(rows, m);
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
  }
  if (!lcm.fits_ulong_p() || lcm > (1u << 20)) throw Error(ErrorCode::Overflow, "exponent modulus too large for small-prime counting");
  return lcm.get_ui();
}

PrimePlan PrimePlan::adaptive(const Seed& seed, std::size_t fit_count) {
  const std::uint64_t modulus = 2 * exponent_modulus(seed);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 5; primes.size() < fit_count + 1; ++p)
    if (p % modulus == 1 && is_prime(p)) primes.push_back(p);
  PrimePlan plan;
  plan.held_out = primes.back();
  primes.pop_back();
  plan.fit = std::move(primes);
  plan.modulus = modulus;
  return plan;
}

CountingPolynomial interpolate(const std::vector<Sample>& fit, const Sample& held_out, int degree) {
  if (degree < 0) throw Error(ErrorCode::Domain, "degree bound must be nonnegative");
  const std::size_t need = static_cast<std::size_t>(degree) + 1;
  if (fit.size() < need) {
    throw Error(ErrorCode::InsufficientSamples, "need " + std::to_string(need) + " samples for degree " +
                                                    std::to_string(degree) + ", got " + std::to_string(fit.size()));
  }
  for (std::size_t i = 0; i < fit.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (fit[i].q == fit[j].q) throw Error(ErrorCode::InsufficientSamples, "sample points must be distinct");

  std::vector<mpq_class> coeffs(need, 0);
  for (std::size_t i = 0; i < need; ++i) {
    // Numerator polynomial prod_{j != i} (q - q_j), ascending.
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t j = 0; j < need; ++j) {
      if (j == i) continue;
      const mpq_class qj(static_cast<unsigned long>(fit[j].q));
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * qj;
      }
      basis = std::move(next);
      denom *= mpq_class(static_cast<unsigned long>(fit[i].q)) - qj;
    }
    const mpq_class scale = mpq_class(mpz_class(std::to_string(fit[i].count))) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * scale;
  }
  std::vector<mpz_class> integral;
  for (auto& c : coeffs) {
    c.canonicalize();
    if (c.get_den() != 1) {
      throw Error(ErrorCode::NonIntegral, "interpolated coefficient " + c.get_str() +
                                              " is not an integer: the count is not a polynomial in q");
    }
    integral.push_back(c.get_num());
  }
  CountingPolynomial poly(std::move(integral));
  auto check = [&](const Sample& s, const char* what) {
    const mpz_class expected = poly(mpz_class(static_cast<unsigned long>(s.q)));
    if (expected != mpz_class(std::to_string(s.count))) {
      throw Error(ErrorCode::HeldOutMismatch, std::string(what) + " q=" + std::to_string(s.q) + ": counted " +
                                                  std::to_string(s.count) + ", polynomial " + poly.to_string() +
                                                  " gives " + expected.get_str());
    }
  };
  for (std::size_t i = need; i < fit.size(); ++i) check(fit[i], "extra sample");
  check(held_out, "held-out sample");
  return poly;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::CountOnly: return "COUNT_ONLY";
  }
  return "FAIL";
}

VerificationReport verify_table(const Seed& seed, std::optional<PrimePlan> plan) {
  const Classification c = classify(seed);
  if (c.tag == CaseTag::Unsupported) throw Error(ErrorCode::OpenCase, c.reason);
  if (c.tag == CaseTag::NotFiniteType) throw Error(ErrorCode::NotFiniteType, c.reason);
  const PrimePlan pl = plan ? *plan : PrimePlan::adaptive(seed);

  std::vector<std::uint64_t> primes = pl.fit;
  primes.push_back(pl.held_out);
  std::vector<std::future<std::uint64_t>> jobs;
  for (auto p : primes) {
    jobs.push_back(std::async(std::launch::async, [&seed, p] { return count_variety(seed, PrimeField(p)); }));
  }
  VerificationReport report;
  report.case_name = case_name(c.tag);
  report.params = c.params;
  for (std::size_t i = 0; i < primes.size(); ++i) report.samples.push_back(Sample{primes[i], jobs[i].get()});

  const Sample held = report.samples.back();
  const std::vector<Sample> fit(report.samples.begin(), report.samples.end() - 1);
  try {
    report.observed = interpolate(fit, held, c.dim);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonIntegral && e.code() != ErrorCode::HeldOutMismatch) throw;
    report.note = e.what();
  }
  if (!c.smooth()) {
    report.verdict = report.observed ? Verdict::CountOnly : Verdict::Fail;
    return report;
  }
  report.predicted = e_polynomial(table_for(c));
  report.verdict = report.observed && *report.observed == *report.predicted ? Verdict::Pass : Verdict::Fail;
  if (report.verdict == Verdict::Fail && report.note.empty()) {
    report.note = "observed " + report.observed->to_string() + " differs from predicted " + report.predicted->to_string();
  }
  return report;
}

}  // namespace clusterhodge
