#include <doctest.h>

#include <json.hpp>
#include <string>
#include <thread>

#include "clusterhodge/clusterhodge.h"

namespace {

const char* kProp3m = R"({"n":3,"m":0,"matrix":[[0,-1,-1],[1,0,-1],[1,1,0]]})";
const char* kMarkov = R"({"n":3,"m":0,"matrix":[[0,2,-2],[-2,0,2],[2,-2,0]]})";
const char* kSingular = R"({"n":2,"m":1,"matrix":[[0,0],[0,0],[1,1]]})";
const char* kOpen = R"({"n":2,"m":1,"matrix":[[0,0],[0,0],[1,2]]})";

struct Seed {
  clh_seed* p = nullptr;
  explicit Seed(const char* json) { REQUIRE(clh_seed_from_json(json, &p) == CLH_OK); }
  Seed() = default;
  ~Seed() { clh_seed_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  clh_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and status names") {
  CHECK(std::string(clh_version()) == "0.1.0");
  CHECK(std::string(clh_status_name(CLH_OPEN_CASE)) == "open case");
  CHECK(std::string(clh_status_name(static_cast<clh_status>(99))) == "unknown status");
}

TEST_CASE("parse errors leave the handle null and set the message") {
  clh_seed* s = reinterpret_cast<clh_seed*>(0x1);
  CHECK(clh_seed_from_json("{", &s) == CLH_ERR_PARSE);
  CHECK(s == nullptr);
  CHECK(std::string(clh_last_error()).find("malformed JSON") != std::string::npos);
  CHECK(clh_seed_from_json(R"({"n":2,"m":0,"matrix":[[0,1],[1,0]]})", &s) == CLH_ERR_NOT_SKEW_SYMMETRIC);
  CHECK(clh_seed_from_json(nullptr, &s) == CLH_ERR_INVALID_ARGUMENT);
  CHECK(clh_seed_from_json(kProp3m, nullptr) == CLH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("shape, mutate and freeze use 1-based indices") {
  Seed s(kProp3m);
  size_t n = 0, m = 0;
  REQUIRE(clh_seed_shape(s.p, &n, &m) == CLH_OK);
  CHECK(n == 3);
  CHECK(m == 0);

  Seed mu;
  CHECK(clh_seed_mutate(s.p, 0, &mu.p) == CLH_ERR_INVALID_INDEX);
  CHECK(clh_seed_mutate(s.p, 4, &mu.p) == CLH_ERR_INVALID_INDEX);
  REQUIRE(clh_seed_mutate(s.p, 1, &mu.p) == CLH_OK);
  char* text = nullptr;
  REQUIRE(clh_seed_to_json(mu.p, &text) == CLH_OK);
  const auto j = nlohmann::json::parse(take(text));
  CHECK(j.at("matrix") == nlohmann::json::parse("[[0,1,1],[-1,0,-1],[-1,1,0]]"));

  Seed frozen;
  const size_t idx[] = {2, 3};
  REQUIRE(clh_seed_freeze(s.p, idx, 2, &frozen.p) == CLH_OK);
  REQUIRE(clh_seed_shape(frozen.p, &n, &m) == CLH_OK);
  CHECK(n == 1);
  CHECK(m == 2);
  const size_t zero[] = {0};
  Seed bad;
  CHECK(clh_seed_freeze(s.p, zero, 1, &bad.p) == CLH_ERR_INVALID_INDEX);
  CHECK(bad.p == nullptr);
}

TEST_CASE("table, classify and basis") {
  Seed s(kProp3m);
  char* out = nullptr;
  REQUIRE(clh_table(s.p, 0, CLH_FORMAT_TEXT, &out) == CLH_OK);
  CHECK(take(out).find("0   | 1    0    1    1") != std::string::npos);
  REQUIRE(clh_classify(s.p, CLH_FORMAT_JSON, &out) == CLH_OK);
  CHECK(nlohmann::json::parse(take(out)).at("case") == "ThreeMutableAcyclic");
  REQUIRE(clh_basis(s.p, CLH_BASIS_STATEMENT, CLH_FORMAT_JSON, &out) == CLH_OK);
  CHECK(nlohmann::json::parse(take(out)).at("symbolic") == false);
  CHECK(clh_table(s.p, 0, static_cast<clh_format>(7), &out) == CLH_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
}

TEST_CASE("open cases and infinite type") {
  Seed open(kOpen);
  char* out = nullptr;
  CHECK(clh_classify(open.p, CLH_FORMAT_TEXT, &out) == CLH_OPEN_CASE);
  CHECK(take(out).rfind("Unsupported", 0) == 0);
  CHECK(clh_table(open.p, 0, CLH_FORMAT_TEXT, &out) == CLH_OPEN_CASE);
  CHECK(out == nullptr);

  Seed markov(kMarkov);
  CHECK(clh_table(markov.p, 0, CLH_FORMAT_TEXT, &out) == CLH_ERR_NOT_FINITE_TYPE);
  REQUIRE(clh_finite_type(markov.p, CLH_FORMAT_TEXT, &out) == CLH_OK);
  CHECK(take(out).rfind("NotFiniteType", 0) == 0);

  Seed sing(kSingular);
  CHECK(clh_basis(sing.p, CLH_BASIS_STATEMENT, CLH_FORMAT_TEXT, &out) == CLH_OPEN_CASE);
  CHECK(clh_finite_type(sing.p, CLH_FORMAT_TEXT, &out) == CLH_ERR_PRECONDITION);
}

TEST_CASE("count and verify") {
  Seed s(kProp3m);
  uint64_t n = 0;
  REQUIRE(clh_count(s.p, 5, &n) == CLH_OK);
  CHECK(n == 124);
  CHECK(clh_count(s.p, 6, &n) == CLH_ERR_DOMAIN);

  char* out = nullptr;
  clh_verdict v = CLH_VERDICT_FAIL;
  REQUIRE(clh_verify(s.p, nullptr, 0, CLH_FORMAT_JSON, &out, &v) == CLH_OK);
  CHECK(v == CLH_VERDICT_PASS);
  CHECK(nlohmann::json::parse(take(out)).at("observed") == nlohmann::json::array({-1, 0, 0, 1}));

  const uint64_t one[] = {5};
  CHECK(clh_verify(s.p, one, 1, CLH_FORMAT_JSON, &out, &v) == CLH_ERR_INTERPOLATION);

  Seed sing(kSingular);
  REQUIRE(clh_verify(sing.p, nullptr, 0, CLH_FORMAT_TEXT, &out, &v) == CLH_OK);
  take(out);
  CHECK(v == CLH_VERDICT_COUNT_ONLY);
}

TEST_CASE("last error is per thread") {
  clh_seed* s = nullptr;
  CHECK(clh_seed_from_json("{", &s) == CLH_ERR_PARSE);
  std::string other;
  std::thread([&] { other = clh_last_error(); }).join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(clh_last_error()).empty());
}

}  // TEST_SUITE
