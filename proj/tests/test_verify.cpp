#include <doctest.h>

#include "fixtures.hpp"
#include "geohom/verify.hpp"

using namespace geohom;

TEST_CASE("criterion names and formatting") {
  CHECK(Verifier::criterion_name(3) == "parity");
  CHECK_THROWS_AS(Verifier::criterion_name(11), std::out_of_range);
  Verifier v({});
  CHECK_THROWS_AS(v.run(0), std::out_of_range);
  CHECK(format_result({2, "x", true, "ok"}) == "[PASS] 2 x: ok");
  CHECK(format_result({2, "x", false, "bad"}) == "[FAIL] 2 x: bad");
}

TEST_CASE("a truncated atlas fails the class count") {
  VerifyInputs in;
  in.k33_atlas = fixtures::k33();
  in.k33_atlas->classes.pop_back();
  in.k6_atlas = fixtures::k6();
  Verifier v(std::move(in));
  const CheckResult r = v.run(1);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("18 classes") != std::string::npos);
  CHECK_FALSE(v.run(2).passed);
  const CheckResult labels = v.run(6);
  CHECK_FALSE(labels.passed);
  CHECK(labels.detail.find("catalog labels unavailable") != std::string::npos);
}

TEST_CASE("a corrupted order fails the poset check") {
  VerifyInputs in;
  in.k33_atlas = fixtures::k33();
  in.poset = fixtures::poset();
  const std::size_t lo = in.poset->index_of("3.4");
  const std::size_t hi = in.poset->index_of("9.1");
  in.poset->leq[lo][hi] = false;
  Verifier v(std::move(in));
  const CheckResult r = v.run(8);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("Hasse closure") != std::string::npos);
}

TEST_CASE("stale signatures fail completeness") {
  VerifyInputs in;
  in.k33_atlas = fixtures::k33();
  in.k33_atlas->classes[0].signature.cr = 3;
  in.k6_atlas = fixtures::k6();
  Verifier v(std::move(in));
  CHECK_FALSE(v.run(1).passed);
}

TEST_CASE("checks that hold on the default atlas") {
  VerifyInputs in;
  in.k33_atlas = fixtures::k33();
  in.k6_atlas = fixtures::k6();
  in.poset = fixtures::poset();
  Verifier v(std::move(in));
  for (int id : {2, 6, 8, 9}) {
    const CheckResult r = v.run(id);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}
