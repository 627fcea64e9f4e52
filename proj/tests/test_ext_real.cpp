#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "subsmooth/ext_real.hpp"
#include "subsmooth/vec.hpp"
#include "subsmooth/verdict.hpp"

using namespace subsmooth;

TEST_CASE("total order: -inf < finite < +inf") {
  ExtReal ninf = ExtReal::neg_inf(), pinf = ExtReal::pos_inf();
  CHECK(ninf < ExtReal(-1e300));
  CHECK(ExtReal(1e300) < pinf);
  CHECK(ninf < pinf);
  CHECK(ExtReal(1.0) < ExtReal(2.0));
  CHECK(pinf <= pinf);
  CHECK(ninf >= ninf);
  CHECK(max(ninf, ExtReal(3.0)) == ExtReal(3.0));
  CHECK(min(pinf, ExtReal(3.0)) == ExtReal(3.0));
}

TEST_CASE("finite arithmetic is exact real arithmetic") {
  CHECK((ExtReal(2.5) + ExtReal(0.5)).value() == 3.0);
  CHECK((ExtReal(2.5) - ExtReal(0.5)).value() == 2.0);
  CHECK((ExtReal(2.0) * 3.0).value() == 6.0);
}

TEST_CASE("opposite infinities never add silently") {
  CHECK_THROWS_AS(ExtReal::pos_inf() + ExtReal::neg_inf(), ContractError);
  CHECK_THROWS_AS(ExtReal::pos_inf() - ExtReal::pos_inf(), ContractError);
  CHECK((ExtReal::pos_inf() + ExtReal(5.0)).is_pos_inf());
  CHECK((ExtReal::neg_inf() + ExtReal(5.0)).is_neg_inf());
}

TEST_CASE("scaling flips infinities on negative factors and kills them at zero") {
  CHECK((ExtReal::pos_inf() * -2.0).is_neg_inf());
  CHECK((ExtReal::neg_inf() * -1.0).is_pos_inf());
  CHECK((ExtReal::pos_inf() * 0.0) == ExtReal(0.0));
  CHECK((-ExtReal::pos_inf()).is_neg_inf());
}

TEST_CASE("ieee infinities normalize; nan is rejected") {
  ExtReal v(std::numeric_limits<double>::infinity());
  CHECK(v.is_pos_inf());
  CHECK_THROWS_AS(ExtReal(std::nan("")), ContractError);
  CHECK_THROWS_AS(ExtReal::pos_inf().value(), ContractError);
}

TEST_CASE("slack comparison treats infinities by kind") {
  CHECK(leq_with_slack(ExtReal(1.0), ExtReal(1.0), 1e-9));
  CHECK(leq_with_slack(ExtReal(1.0), ExtReal::pos_inf(), 0.0));
  CHECK(leq_with_slack(ExtReal::pos_inf(), ExtReal::pos_inf(), 0.0));
  CHECK_FALSE(leq_with_slack(ExtReal::pos_inf(), ExtReal(1.0), 1e9));
  CHECK_FALSE(leq_with_slack(ExtReal(1.0), ExtReal::neg_inf(), 1e9));
  CHECK(close(ExtReal::neg_inf(), ExtReal::neg_inf(), 0.0));
  CHECK_FALSE(close(ExtReal::neg_inf(), ExtReal::pos_inf(), 1e9));
}

TEST_CASE("vec basics") {
  Vec a{1.0, 2.0};
  Vec b{3.0, -1.0};
  CHECK(dot(a, b) == 1.0);
  CHECK((a + b) == Vec{4.0, 1.0});
  CHECK((2.0 * a) == Vec{2.0, 4.0});
  CHECK(Vec{3.0, 4.0}.norm() == 5.0);
  CHECK(Vec{0.0, 0.0}.is_zero());
  CHECK_THROWS_AS(dot(a, Vec{1.0}), ContractError);
  CHECK_THROWS_AS(Vec(std::vector<double>(6, 0.0)), ContractError);
  CHECK_THROWS_AS(Vec{0.0}.normalized(), ContractError);
}

TEST_CASE("verdict margins and notes") {
  Verdict v = Verdict::make_holds();
  v.margin("a", 1.5).note("note");
  CHECK(v.holds());
  CHECK(v.margins.at("a") == 1.5);
  CHECK(v.notes.size() == 1);
}
