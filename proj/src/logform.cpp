#include "logform.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "error.hpp"

namespace clusterhodge {

namespace {

constexpr std::size_t kMaxGenerators = 32;

/// Sign of moving the dlogs of `rhs` past those of `lhs` into sorted order.
int merge_sign(std::uint32_t lhs, std::uint32_t rhs) {
  int swaps = 0;
  for (std::uint32_t r = rhs; r != 0; r &= r - 1) {
    const int j = std::countr_zero(r);
    swaps += std::popcount(lhs >> (j + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

std::string render_monomial(const std::vector<std::string>& gens, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string render_dlogs(const std::vector<std::string>& gens, std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string out = "_";
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (mask & (1u << i)) out += gens[i];
  return out + "_";
}

std::string render_coefficient(const mpq_class& c, const std::string& body) {
  if (body == "1") return c.get_str();
  if (c == 1) return body;
  if (c == -1) return "-" + body;
  return c.get_str() + body;
}

}  // namespace

LogForm::LogForm(std::vector<std::string> generators) : generators_(std::move(generators)) {
  if (generators_.size() > kMaxGenerators) throw Error(ErrorCode::Domain, "too many generators for a log form");
}

LogForm LogForm::constant(std::vector<std::string> generators, const mpq_class& c) {
  const std::size_t g = generators.size();
  return term(std::move(generators), Exponents(g, 0), {}, c);
}

LogForm LogForm::term(std::vector<std::string> generators, Exponents e, const std::vector<std::size_t>& order,
                      const mpq_class& c) {
  LogForm f(std::move(generators));
  if (e.size() != f.generators_.size()) throw Error(ErrorCode::Domain, "exponent vector length mismatch");
  std::uint32_t mask = 0;
  int sign = 1;
  for (std::size_t i : order) {
    if (i >= f.generators_.size()) throw Error(ErrorCode::InvalidIndex, "dlog index out of range");
    const std::uint32_t bit = 1u << i;
    if (mask & bit) return f;
    sign *= merge_sign(mask, bit);
    mask |= bit;
  }
  f.add_term(Key{std::move(e), mask}, sign * c);
  return f;
}

LogForm LogForm::dlog(std::vector<std::string> generators, std::size_t i) {
  const std::size_t g = generators.size();
  return term(std::move(generators), Exponents(g, 0), {i});
}

int LogForm::degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) {
    const int k = std::popcount(key.dlogs);
    if (d >= 0 && d != k) return -1;
    d = k;
  }
  return d;
}

void LogForm::add_term(const Key& key, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LogForm::require_same_generators(const LogForm& other) const {
  if (generators_ != other.generators_) throw Error(ErrorCode::Domain, "log forms over different generators");
}

LogForm& LogForm::operator+=(const LogForm& other) {
  require_same_generators(other);
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

LogForm& LogForm::operator-=(const LogForm& other) {
  require_same_generators(other);
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

LogForm& LogForm::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

LogForm LogForm::times_monomial(const Exponents& e) const {
  if (e.size() != generators_.size()) throw Error(ErrorCode::Domain, "exponent vector length mismatch");
  LogForm out(generators_);
  for (const auto& [key, c] : terms_) {
    Key k = key;
    for (std::size_t i = 0; i < e.size(); ++i) k.exponents[i] += e[i];
    out.add_term(k, c);
  }
  return out;
}

LogForm wedge(const LogForm& lhs, const LogForm& rhs) {
  lhs.require_same_generators(rhs);
  LogForm out(lhs.generators_);
  for (const auto& [k1, c1] : lhs.terms_) {
    for (const auto& [k2, c2] : rhs.terms_) {
      if (k1.dlogs & k2.dlogs) continue;
      LogForm::Key k{k1.exponents, k1.dlogs | k2.dlogs};
      for (std::size_t i = 0; i < k.exponents.size(); ++i) k.exponents[i] += k2.exponents[i];
      out.add_term(k, merge_sign(k1.dlogs, k2.dlogs) * c1 * c2);
    }
  }
  return out;
}

std::string LogForm::to_string() const {
  if (terms_.empty()) return "0";
  // Group by monomial, preserving the map order.
  std::vector<std::pair<Exponents, std::vector<std::pair<std::uint32_t, mpq_class>>>> groups;
  for (const auto& [key, c] : terms_) {
    if (groups.empty() || groups.back().first != key.exponents) groups.push_back({key.exponents, {}});
    groups.back().second.push_back({key.dlogs, c});
  }
  std::string out;
  for (const auto& [e, parts] : groups) {
    std::string inner;
    for (const auto& [mask, c] : parts) {
      std::string piece = render_coefficient(c, render_dlogs(generators_, mask));
      if (!inner.empty() && piece.front() != '-') inner += '+';
      inner += piece;
    }
    const std::string mono = render_monomial(generators_, e);
    std::string group;
    if (mono.empty()) {
      group = parts.size() > 1 ? "(" + inner + ")" : inner;
    } else if (parts.size() == 1 && parts[0].first == 0) {
      const mpq_class& c = parts[0].second;
      group = c == 1 ? mono : c == -1 ? "-" + mono : c.get_str() + "*" + mono;
    } else {
      group = mono + "*" + (parts.size() > 1 || parts[0].second != 1 ? "(" + inner + ")" : inner);
    }
    if (!out.empty()) out += " + ";
    out += group;
  }
  return out;
}

MonomialMap::MonomialMap(std::vector<std::string> sources, std::vector<std::string> targets,
                         std::vector<Exponents> rows)
    : sources_(std::move(sources)), targets_(std::move(targets)), rows_(std::move(rows)) {
  if (rows_.size() != sources_.size()) throw Error(ErrorCode::Domain, "one exponent row per source generator");
  for (const auto& r : rows_)
    if (r.size() != targets_.size()) throw Error(ErrorCode::Domain, "exponent row length must match targets");
}

MonomialMap MonomialMap::then(const MonomialMap& inner) const {
  if (inner.sources_ != targets_) throw Error(ErrorCode::Domain, "maps do not compose");
  std::vector<Exponents> rows(sources_.size(), Exponents(inner.targets_.size(), 0));
  for (std::size_t i = 0; i < sources_.size(); ++i)
    for (std::size_t j = 0; j < targets_.size(); ++j)
      for (std::size_t k = 0; k < inner.targets_.size(); ++k) rows[i][k] += rows_[i][j] * inner.rows_[j][k];
  return MonomialMap(sources_, inner.targets_, std::move(rows));
}

bool MonomialMap::is_identity() const {
  if (sources_.size() != targets_.size()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

MonomialMap prepend_identity(const MonomialMap& map, std::string source, std::string target) {
  std::vector<std::string> sources{std::move(source)};
  std::vector<std::string> targets{std::move(target)};
  sources.insert(sources.end(), map.sources().begin(), map.sources().end());
  targets.insert(targets.end(), map.targets().begin(), map.targets().end());
  std::vector<Exponents> rows;
  Exponents first(targets.size(), 0);
  first[0] = 1;
  rows.push_back(std::move(first));
  for (const auto& r : map.exponent_matrix()) {
    Exponents row{0};
    row.insert(row.end(), r.begin(), r.end());
    rows.push_back(std::move(row));
  }
  return MonomialMap(std::move(sources), std::move(targets), std::move(rows));
}

LogForm pullback(const MonomialMap& map, const LogForm& form) {
  if (form.generators() != map.sources()) throw Error(ErrorCode::Domain, "form generators differ from map sources");
  const auto& targets = map.targets();
  const auto& rows = map.exponent_matrix();
  std::vector<LogForm> images;  // dlog source_i in target generators
  for (const auto& row : rows) {
    LogForm d(targets);
    for (std::size_t j = 0; j < targets.size(); ++j)
      if (row[j] != 0) d += mpq_class(static_cast<long>(row[j])) * LogForm::dlog(targets, j);
    images.push_back(std::move(d));
  }
  LogForm out(targets);
  for (const auto& [key, c] : form.terms()) {
    Exponents e(targets.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < targets.size(); ++j) e[j] += key.exponents[i] * rows[i][j];
    LogForm piece = LogForm::term(targets, e, {}, c);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (key.dlogs & (1u << i)) piece = wedge(piece, images[i]);
    out += piece;
  }
  return out;
}

BezoutChange bezout_change(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw Error(ErrorCode::Domain, "Bezout change needs positive a and b");
  // Extended Euclid.
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  const std::int64_t g = r0;
  const std::int64_t ap = a / g;
  const std::int64_t bp = b / g;
  // All solutions: (s0 + k b', t0 - k a').
  const std::int64_t k0 = t0 / ap;
  std::int64_t best_s = s0, best_t = t0;
  for (std::int64_t k = k0 - 2; k <= k0 + 2; ++k) {
    const std::int64_t s = s0 + k * bp;
    const std::int64_t t = t0 - k * ap;
    if (std::abs(t) < std::abs(best_t) || (std::abs(t) == std::abs(best_t) && std::abs(s) < std::abs(best_s))) {
      best_s = s;
      best_t = t;
    }
  }
  MonomialMap forward({"y", "z"}, {"v", "w"}, {{best_s, bp}, {best_t, -ap}});
  MonomialMap inverse({"v", "w"}, {"y", "z"}, {{ap, bp}, {best_t, -best_s}});
  return BezoutChange{g, best_s, best_t, ap, bp, std::move(forward), std::move(inverse)};
}

std::size_t rational_rank(const std::vector<LogForm>& forms) {
  if (forms.empty()) return 0;
  std::map<LogForm::Key, std::size_t> column;
  for (const auto& f : forms) {
    if (f.generators() != forms.front().generators()) throw Error(ErrorCode::Domain, "forms over different generators");
    for (const auto& [key, c] : f.terms()) column.try_emplace(key, column.size());
  }
  std::vector<std::vector<mpq_class>> m(forms.size(), std::vector<mpq_class>(column.size(), 0));
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (const auto& [key, c] : forms[i].terms()) m[i][column[key]] = c;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const mpq_class f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < column.size(); ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace clusterhodge
