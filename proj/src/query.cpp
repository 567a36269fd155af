#include "luka/query.hpp"

namespace luka {

namespace {

constexpr int kApproxPlaces = 6;

std::string fixed_places(const Rational& r, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  // Round half up; r is nonnegative here.
  mpz_class scaled = (r.get_num() * scale * 2 + r.get_den()) / (r.get_den() * 2);
  mpz_class whole = scaled / scale;
  if (places == 0) return whole.get_str();
  mpz_class frac = scaled % scale;
  std::string digits = frac.get_str();
  digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  return digits.empty() ? whole.get_str() : whole.get_str() + "." + digits;
}

}  // namespace

std::optional<std::string> exact_decimal(const Rational& r) {
  mpz_class den = r.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  return fixed_places(abs(r), std::max(twos, fives));
}

QueryResult make_query_result(const TruthValue& v) {
  QueryResult q;
  q.exact = rational_fraction(v.value());
  if (auto d = exact_decimal(v.value())) {
    q.decimal = *d;
  } else {
    q.decimal = "~" + fixed_places(v.value(), kApproxPlaces);
  }
  if (v.is_crisp()) q.crisp = v.is_one();
  return q;
}

}  // namespace luka
