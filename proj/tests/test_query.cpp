#include <doctest.h>

#include "luka/query.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace luka;

namespace {

TruthValue tv(long n, long d = 1) { return TruthValue(oracle::frac(n, d)); }

}  // namespace

TEST_CASE("formatted values") {
  CHECK(make_query_result(tv(1, 5)).format() == "1/5 (0.2)");
  CHECK(make_query_result(tv(9, 10)).format() == "9/10 (0.9)");
  CHECK(make_query_result(tv(0)).format() == "0/1 (0)");
  CHECK(make_query_result(tv(1)).format() == "1/1 (1)");
  CHECK(make_query_result(tv(17, 20)).format() == "17/20 (0.85)");
  CHECK(make_query_result(tv(1, 3)).format() == "1/3 (~0.333333)");
  CHECK(make_query_result(tv(2, 3)).format() == "2/3 (~0.666667)");
  CHECK(make_query_result(tv(1, 7)).decimal == "~0.142857");
}

TEST_CASE("crispness flag") {
  CHECK(make_query_result(tv(0)).crisp == false);
  CHECK(make_query_result(tv(1)).crisp == true);
  CHECK_FALSE(make_query_result(tv(1, 2)).crisp.has_value());
}

TEST_CASE("terminating expansions") {
  CHECK(exact_decimal(oracle::frac(1, 8)) == "0.125");
  CHECK(exact_decimal(oracle::frac(1, 1024)) == "0.0009765625");
  CHECK(exact_decimal(oracle::frac(3, 50)) == "0.06");
  CHECK_FALSE(exact_decimal(oracle::frac(1, 6)).has_value());
}

TEST_CASE("decimals round-trip or are marked approximate") {
  gen::Rng rng(97);
  const Rational tolerance(1, 2000000);
  for (int i = 0; i < 2000; ++i) {
    int d = 1 + gen::below(rng, 400);
    TruthValue v(oracle::frac(gen::below(rng, d + 1), d));
    auto q = make_query_result(v);
    CHECK(q.exact == rational_fraction(v.value()));
    if (q.decimal.front() == '~') {
      Rational approx = parse_rational(q.decimal.substr(1));
      Rational diff = approx - v.value();
      CHECK(abs(diff) <= tolerance);
    } else {
      CHECK(parse_rational(q.decimal) == v.value());
    }
  }
}
