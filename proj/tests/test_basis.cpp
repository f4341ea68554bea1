#include <doctest.h>

#include "basis.hpp"
#include "classify.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace clusterhodge;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};

LogForm dl(std::vector<std::size_t> order, Exponents e = {0, 0, 0}) { return LogForm::term(XYZ, e, order); }

/// Every piece matches the table and is linearly independent.
void check_against(const Basis& b, const MixedHodgeTable& t) {
  for (int k = 0; k <= 2 * t.dim(); ++k)
    for (int p = 0; p <= t.dim(); ++p) {
      CAPTURE(k);
      CAPTURE(p);
      CHECK(static_cast<std::int64_t>(b.size(k, p)) == t.at(k, p));
      if (!b.symbolic) continue;
      auto it = b.pieces.find({k, p});
      if (it == b.pieces.end()) continue;
      CHECK(rational_rank(it->second) == it->second.size());
      for (const auto& f : it->second) CHECK(f.degree() == k);
    }
}

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("examples") {
  const auto b22 = basis_prop_1m(2, 2);
  REQUIRE(b22.size(2, 1) == 1);
  CHECK(b22.pieces.at({2, 1})[0] == (mpq_class(2) * dl({0, 1}) + mpq_class(2) * dl({0, 2})).times_monomial({0, 1, 1}));
  CHECK(b22.pieces.at({2, 1})[0].to_string() == "y*z*(2_xy_+2_xz_)");

  CHECK(basis_prop_1m(1, 1).size(2, 1) == 0);

  const auto b2d = basis_2d(3);
  REQUIRE(b2d.size(2, 1) == 2);
  const std::vector<std::string> XY{"x", "y"};
  CHECK(b2d.pieces.at({2, 1})[0] == LogForm::term(XY, {0, 1}, {0, 1}));
  CHECK(b2d.pieces.at({2, 1})[1] == LogForm::term(XY, {0, 2}, {0, 1}));
  CHECK(b2d.pieces.at({2, 1})[1].to_string() == "y^2*_xy_");
}

TEST_CASE("domain errors") {
  CHECK(error_of([] { basis_2d(0); }) == ErrorCode::Domain);
  CHECK(error_of([] { basis_prop_1m(0, 0); }) == ErrorCode::Domain);
  CHECK(error_of([] { basis_prop_2m(0, 1, 1, Prop2mVariant::Statement); }) == ErrorCode::Domain);
  CHECK(error_of([] { basis_prop_10(2, {"x", "y"}); }) == ErrorCode::Domain);
  CHECK(error_of([] { basis_for(classify(fixtures::singular_case1())); }) == ErrorCode::OpenCase);
}

TEST_CASE("cardinalities and independence over the grid") {
  for (int r = 0; r <= 3; ++r) {
    std::vector<std::string> g;
    for (int i = 0; i < r; ++i) g.push_back("y" + std::to_string(i));
    check_against(basis_torus(g), table_torus(r));
  }
  for (std::int64_t a = 1; a <= 6; ++a) {
    check_against(basis_2d(a), table_2d(a));
    check_against(basis_prop_10(a), table_one_mutable(a, 0));
    for (std::int64_t b = 1; b <= 6; ++b) {
      check_against(basis_prop_1m(a, b), table_one_mutable(a, b));
      for (std::int64_t c = 1; c <= 6; ++c) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        check_against(basis_prop_2m(a, b, c, Prop2mVariant::Statement), table_two_mutable(a, b, c));
        check_against(basis_prop_3m(a, b, c), table_three_mutable(a, b, c));
      }
    }
  }
}

TEST_CASE("printed two-mutable list counts gcd(b,c) instead of gcd(a,b)") {
  // (2,4,6): gcd(a,b) = 2 and gcd(b,c) = 2 agree; (2,2,1) they do not.
  CHECK(basis_prop_2m(2, 4, 6, Prop2mVariant::Eq21).size(2, 1) == 2);
  CHECK(basis_prop_2m(2, 2, 1, Prop2mVariant::Statement).size(2, 1) == 1);
  CHECK(basis_prop_2m(2, 2, 1, Prop2mVariant::Eq21).size(2, 1) == 0);
  CHECK(basis_prop_2m(2, 2, 1, Prop2mVariant::Statement).size(2, 1) == table_two_mutable(2, 2, 1).at(2, 1));
}

TEST_CASE("one-mutable forms are pullbacks along the Bezout change") {
  // On the chart xx' = v^g + 1 the forms v^i u_v_ pull back to the listed ones
  // up to the scalar g.
  for (std::int64_t a = 1; a <= 8; ++a)
    for (std::int64_t b = 1; b <= 8; ++b) {
      const auto bz = bezout_change(a, b);
      const auto lifted = prepend_identity(bz.inverse, "u", "x");
      const auto basis = basis_prop_1m(a, b);
      const auto& h21 = basis.size(2, 1) ? basis.pieces.at({2, 1}) : std::vector<LogForm>{};
      for (std::int64_t i = 1; i < bz.g; ++i) {
        const LogForm source = LogForm::term({"u", "v", "w"}, {0, i, 0}, {0, 1});
        CHECK(mpq_class(bz.g) * pullback(lifted, source) == h21[static_cast<std::size_t>(i - 1)]);
      }
    }
}

TEST_CASE("dispatch through classification") {
  CHECK(basis_for(classify(fixtures::two_mutable(2, 4, 6))).size(2, 1) == 2);
  const auto p10 = basis_for(classify(fixtures::make(1, 2, {{0}, {0}, {3}}, {"x", "y", "z"})));
  CHECK(p10.generators == std::vector<std::string>{"x", "z", "y"});
  CHECK(p10.size(2, 1) == 2);
  const auto tri = basis_for(classify(fixtures::three_acyclic(2, 2, 2)));
  CHECK_FALSE(tri.symbolic);
  CHECK(tri.size(3, 2) == 4);
  CHECK(basis_for(classify(fixtures::torus(3))).size(2, 2) == 3);
}

}  // TEST_SUITE
