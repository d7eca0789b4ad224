#include "doctest.h"
#include "support/properties.hpp"

using namespace wordeq;
using namespace wqtest;

namespace {

LinRow row(std::map<LinVar, std::int64_t> coeffs, LinRow::Rel rel, std::int64_t bound) {
  LinRow r;
  r.coeffs = std::move(coeffs);
  r.rel = rel;
  r.bound = bound;
  return r;
}

const LinVar X = LinVar::len_of("X");
const LinVar Y = LinVar::len_of("Y");

}  // namespace

TEST_CASE("length systems from a definition") {
  LinSystem sys;
  sys.add(row({{X, 1}, {Y, -1}}, LinRow::Rel::Eq, 2));
  sys.add(row({{Y, -1}}, LinRow::Rel::Le, -2));
  auto m = lia_sat(sys);
  REQUIRE(m.has_value());
  CHECK(satisfies(sys, *m));
  CHECK((*m)[X] == (*m)[Y] + 2);
  CHECK((*m)[Y] >= 2);
  sys.add(row({{X, 1}}, LinRow::Rel::Le, 2));
  CHECK_FALSE(lia_sat(sys).has_value());
}

TEST_CASE("empty system") {
  auto m = lia_sat(LinSystem{});
  REQUIRE(m.has_value());
  CHECK(m->empty());
}

TEST_CASE("progression with an upper bound") {
  LinSystem sys;
  LinVar k = LinVar::fresh_ap(0);
  sys.add(row({{X, 1}, {k, -2}}, LinRow::Rel::Eq, 1));
  sys.add(row({{X, 1}}, LinRow::Rel::Le, 3));
  auto m = lia_sat(sys);
  REQUIRE(m.has_value());
  CHECK(((*m)[X] == 1 || (*m)[X] == 3));
}

TEST_CASE("divisibility without real solutions gap") {
  // 3x + 3y = 7 has rational but no integer solutions.
  LinSystem sys;
  sys.add(row({{X, 3}, {Y, 3}}, LinRow::Rel::Eq, 7));
  CHECK_FALSE(lia_sat(sys).has_value());
  // 2 <= 3x - 3y <= 2 likewise (dark shadow territory).
  LinSystem gap;
  gap.add(row({{X, 3}, {Y, -3}}, LinRow::Rel::Le, 2));
  gap.add(row({{X, -3}, {Y, 3}}, LinRow::Rel::Le, -1));
  CHECK_FALSE(lia_sat(gap).has_value());
  // 1 <= 2x - 3y <= 1 has x = 2, y = 1.
  LinSystem ok;
  ok.add(row({{X, 2}, {Y, -3}}, LinRow::Rel::Eq, 1));
  auto m = lia_sat(ok);
  REQUIRE(m.has_value());
  CHECK(2 * (*m)[X] - 3 * (*m)[Y] == 1);
}

TEST_CASE("coefficient overflow is reported") {
  LinSystem sys;
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
  sys.add(row({{X, big}, {Y, big - 1}}, LinRow::Rel::Eq, big));
  sys.add(row({{X, big - 3}, {Y, big}}, LinRow::Rel::Le, 5));
  bool clean = false;
  try {
    auto m = lia_sat(sys);
    clean = !m || satisfies(sys, *m);
  } catch (const CoefficientOverflow&) {
    clean = true;
  } catch (const ResourceExhausted&) {
    clean = true;
  }
  CHECK(clean);
}

TEST_CASE("agrees with box enumeration") {
  PropertyResult r = lia_matches_box(51, 300);
  INFO(r.summary());
  CHECK(r.ok());
}
