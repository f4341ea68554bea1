#include "io.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "error.hpp"

namespace clusterhodge {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Integer integer_from_json(const json& j, const char* what) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorCode::Parse, std::string(what) + ": '" + s + "' is not an integer");
    return v;
  }
  throw Error(ErrorCode::Parse, std::string(what) + " must be an integer");
}

std::size_t count_from_json(const json& obj, const char* key) {
  if (!obj.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  const json& j = obj.at(key);
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw Error(ErrorCode::Parse, std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

const char* variant_name(CohomologyVariant v) {
  return v == CohomologyVariant::Cohomology ? "Cohomology" : "IntersectionCohomology";
}

json polynomial_json(const std::optional<CountingPolynomial>& p) {
  json out = json::array();
  if (p)
    for (const auto& c : p->coefficients()) out.push_back(integer_to_json(c));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <typename T>
std::vector<std::string> strings(const std::vector<T>& v, long offset = 0) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(std::to_string(static_cast<long long>(x) + offset));
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

json seed_json(const Seed& seed) {
  const auto& B = seed.matrix();
  json matrix = json::array();
  for (std::size_t r = 0; r < B.vertex_count(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < B.mutable_count(); ++c) row.push_back(integer_to_json(B.at(r, c)));
    matrix.push_back(std::move(row));
  }
  return json{{"n", B.mutable_count()}, {"m", B.frozen_count()}, {"matrix", matrix}, {"labels", seed.labels()}};
}

std::string piece_name(int k, int p, CohomologyVariant v = CohomologyVariant::Cohomology) {
  return std::string(v == CohomologyVariant::Cohomology ? "H" : "IH") + "^{" + std::to_string(k) + ",(" +
         std::to_string(p) + "," + std::to_string(p) + ")}";
}

json form_json(const LogForm& f) {
  json terms = json::array();
  for (const auto& [key, c] : f.terms()) {
    std::vector<std::size_t> dlog;
    for (std::size_t i = 0; i < f.generators().size(); ++i)
      if (key.dlogs & (1u << i)) dlog.push_back(i);
    terms.push_back(json{{"coeff", c.get_str()}, {"dlog", dlog}, {"exponents", key.exponents}});
  }
  return json{{"text", f.to_string()}, {"terms", terms}};
}

}  // namespace

Seed seed_from_json(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "quiver JSON must be an object");
  const std::size_t n = count_from_json(doc, "n");
  const std::size_t m = count_from_json(doc, "m");
  if (!doc.contains("matrix") || !doc.at("matrix").is_array()) throw Error(ErrorCode::Parse, "missing array \"matrix\"");
  const json& rows = doc.at("matrix");
  // A seed without mutable vertices may list no rows at all.
  const bool empty_ok = n == 0 && rows.empty();
  if (!empty_ok && rows.size() != n + m) {
    throw Error(ErrorCode::Parse, "\"matrix\" must have n+m = " + std::to_string(n + m) + " rows, got " +
                                      std::to_string(rows.size()));
  }
  std::vector<Integer> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::Parse, "every matrix row must be an array of n = " + std::to_string(n) + " integers");
    }
    for (const auto& v : row) entries.push_back(integer_from_json(v, "matrix entry"));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_array()) throw Error(ErrorCode::Parse, "\"labels\" must be an array of strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw Error(ErrorCode::Parse, "\"labels\" must be an array of strings");
      labels.push_back(s.get<std::string>());
    }
    if (labels.size() != n + m) {
      throw Error(ErrorCode::Parse, "\"labels\" must have n+m = " + std::to_string(n + m) + " entries");
    }
  }
  return Seed(ExtendedExchangeMatrix(n, m, std::move(entries)), std::move(labels));
}

std::string seed_to_json(const Seed& seed) { return seed_json(seed).dump(); }

std::string table_to_json(const MixedHodgeTable& t) {
  json entries = json::array();
  for (int k = 0; k <= t.max_degree(); ++k)
    for (int p = 0; p <= t.dim(); ++p)
      if (t.at(k, p) != 0) entries.push_back(json{{"k", k}, {"p", p}, {"h", t.at(k, p)}});
  return json{{"dim", t.dim()}, {"smooth", t.smooth()}, {"variant", variant_name(t.variant())}, {"entries", entries}}
      .dump();
}

MixedHodgeTable table_from_json(std::string_view text) {
  const json doc = parse_document(text);
  try {
    const auto variant = doc.at("variant").get<std::string>();
    CohomologyVariant v;
    if (variant == "Cohomology") {
      v = CohomologyVariant::Cohomology;
    } else if (variant == "IntersectionCohomology") {
      v = CohomologyVariant::IntersectionCohomology;
    } else {
      throw Error(ErrorCode::Parse, "unknown variant '" + variant + "'");
    }
    MixedHodgeTable t(doc.at("dim").get<int>(), doc.at("smooth").get<bool>(), v);
    for (const auto& e : doc.at("entries")) t.set(e.at("k").get<int>(), e.at("p").get<int>(), e.at("h").get<std::int64_t>());
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed table JSON: ") + e.what());
  }
}

std::string table_to_ascii(const MixedHodgeTable& t) {
  int rows = std::min(1, t.dim());
  int cols = t.dim();
  for (int k = 0; k <= t.max_degree(); ++k)
    for (int p = 0; p <= t.dim(); ++p)
      if (t.at(k, p) != 0) {
        rows = std::max(rows, k - p);
        cols = std::max(cols, k);
      }
  const std::string prefix = t.variant() == CohomologyVariant::Cohomology ? "H^" : "IH^";
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"k-p"};
  for (int k = 0; k <= cols; ++k) header.push_back(prefix + std::to_string(k));
  cells.push_back(header);
  for (int r = 0; r <= rows; ++r) {
    std::vector<std::string> line{std::to_string(r)};
    for (int k = 0; k <= cols; ++k) line.push_back(std::to_string(t.at(k, k - r)));
    cells.push_back(line);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

  std::ostringstream out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string line = cells[i][0] + std::string(width[0] - cells[i][0].size(), ' ') + " |";
    for (std::size_t c = 1; c < cells[i].size(); ++c)
      line += (c == 1 ? " " : "  ") + cells[i][c] + std::string(width[c] - cells[i][c].size(), ' ');
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
    if (i == 0) out << std::string(width[0] + 1, '-') << '+' << std::string(line.size() - width[0] - 2, '-') << '\n';
  }
  return out.str();
}

std::string table_to_csv(const MixedHodgeTable& t) {
  std::ostringstream out;
  out << "k,p,h\n";
  for (int k = 0; k <= t.max_degree(); ++k)
    for (int p = 0; p <= t.dim(); ++p)
      if (t.at(k, p) != 0) out << k << ',' << p << ',' << t.at(k, p) << '\n';
  return out.str();
}

std::string classification_to_json(const Classification& c) {
  json j{{"case", case_name(c.tag)},
         {"dim", c.dim},
         {"params", c.params},
         {"seed", seed_json(c.seed)}};
  json muts = json::array();
  for (auto k : c.mutations) muts.push_back(k + 1);
  j["mutations"] = muts;
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j.dump();
}

std::string classification_to_text(const Classification& c) {
  std::ostringstream out;
  out << case_name(c.tag);
  if (!c.params.empty()) out << '(' << join(strings(c.params), ",") << ')';
  out << '\n' << "dimension: " << c.dim << '\n';
  if (!c.mutations.empty()) out << "mutations: " << join(strings(c.mutations, 1), ",") << '\n';
  out << "labels: " << join(c.seed.labels(), ",") << '\n';
  if (!c.reason.empty()) out << "reason: " << c.reason << '\n';
  return out.str();
}

std::string classification_to_csv(const Classification& c) {
  std::ostringstream out;
  out << "case,dim,params,mutations,reason\n";
  out << case_name(c.tag) << ',' << c.dim << ',' << csv_quote(join(strings(c.params), " ")) << ','
      << csv_quote(join(strings(c.mutations, 1), " ")) << ',' << csv_quote(c.reason) << '\n';
  return out.str();
}

std::string basis_to_json(const Basis& b) {
  json pieces = json::array();
  for (int k = 0; k <= 2 * b.dim; ++k) {
    for (int p = 0; p <= std::min(k, b.dim); ++p) {
      const std::size_t count = b.size(k, p);
      if (count == 0) continue;
      json piece{{"k", k}, {"p", p}, {"count", count}};
      if (b.symbolic) {
        json forms = json::array();
        for (const auto& f : b.pieces.at({k, p})) forms.push_back(form_json(f));
        piece["forms"] = forms;
      }
      pieces.push_back(std::move(piece));
    }
  }
  return json{{"generators", b.generators}, {"symbolic", b.symbolic}, {"pieces", pieces}}.dump();
}

std::string basis_to_text(const Basis& b) {
  std::ostringstream out;
  for (int k = 0; k <= 2 * b.dim; ++k) {
    for (int p = 0; p <= std::min(k, b.dim); ++p) {
      const std::size_t count = b.size(k, p);
      if (count == 0) continue;
      out << piece_name(k, p) << ": ";
      if (!b.symbolic) {
        out << "dimension " << count << " (forms not available)\n";
        continue;
      }
      std::vector<std::string> forms;
      for (const auto& f : b.pieces.at({k, p})) forms.push_back(f.to_string());
      out << join(forms, ", ") << '\n';
    }
  }
  return out.str();
}

std::string basis_to_csv(const Basis& b) {
  std::ostringstream out;
  out << "k,p,index,form\n";
  for (int k = 0; k <= 2 * b.dim; ++k) {
    for (int p = 0; p <= std::min(k, b.dim); ++p) {
      const std::size_t count = b.size(k, p);
      for (std::size_t i = 0; i < count; ++i) {
        out << k << ',' << p << ',' << i << ','
            << csv_quote(b.symbolic ? b.pieces.at({k, p})[i].to_string() : std::string()) << '\n';
      }
    }
  }
  return out.str();
}

std::string report_to_json(const VerificationReport& r) {
  return json{{"case", r.case_name},
              {"params", r.params},
              {"predicted", polynomial_json(r.predicted)},
              {"observed", polynomial_json(r.observed)},
              {"verdict", verdict_name(r.verdict)}}
      .dump();
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "case: " << r.case_name;
  if (!r.params.empty()) out << '(' << join(strings(r.params), ",") << ')';
  out << '\n';
  out << "predicted: " << (r.predicted ? r.predicted->to_string() : "-") << '\n';
  out << "observed: " << (r.observed ? r.observed->to_string() : "-") << '\n';
  std::vector<std::string> samples;
  for (const auto& s : r.samples) samples.push_back(std::to_string(s.q) + ":" + std::to_string(s.count));
  out << "counts: " << join(samples, " ") << " (last held out)\n";
  if (!r.note.empty()) out << "note: " << r.note << '\n';
  out << "verdict: " << verdict_name(r.verdict) << '\n';
  return out.str();
}

std::string report_to_csv(const VerificationReport& r) {
  auto poly = [](const std::optional<CountingPolynomial>& p) { return p ? p->to_string() : std::string(); };
  std::ostringstream out;
  out << "case,params,predicted,observed,verdict\n";
  out << r.case_name << ',' << csv_quote(join(strings(r.params), " ")) << ',' << csv_quote(poly(r.predicted)) << ','
      << csv_quote(poly(r.observed)) << ',' << verdict_name(r.verdict) << '\n';
  return out.str();
}

namespace {
const char* ft_name(FiniteTypeVerdict v) {
  return v == FiniteTypeVerdict::FiniteLouise ? "FiniteLouise" : "NotFiniteType";
}
}  // namespace

std::string finite_type_to_json(const FiniteTypeResult& r) {
  json muts = json::array();
  for (auto k : r.mutations) muts.push_back(k + 1);
  return json{{"verdict", ft_name(r.verdict)}, {"mutations", muts}, {"seed", seed_json(r.seed)}}.dump();
}

std::string finite_type_to_text(const FiniteTypeResult& r) {
  std::ostringstream out;
  out << ft_name(r.verdict) << '\n';
  if (!r.mutations.empty()) out << "mutations: " << join(strings(r.mutations, 1), ",") << '\n';
  return out.str();
}

std::string finite_type_to_csv(const FiniteTypeResult& r) {
  std::ostringstream out;
  out << "verdict,mutations\n" << ft_name(r.verdict) << ',' << csv_quote(join(strings(r.mutations, 1), " ")) << '\n';
  return out.str();
}

}  // namespace clusterhodge
