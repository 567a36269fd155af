#include "luka/core.hpp"

#include <algorithm>
#include <cctype>

namespace luka {

namespace detail {

Rational checked_unit(Rational v) {
  v.canonicalize();
  if (sgn(v) < 0 || v > 1) {
    throw RangeError("value " + v.get_str() + " outside [0,1]");
  }
  return v;
}

}  // namespace detail

TruthValue tv_neg(const TruthValue& x) { return TruthValue(1 - x.value()); }

TruthValue tv_conj(const TruthValue& x, const TruthValue& y) {
  Rational s = x.value() + y.value() - 1;
  return sgn(s) > 0 ? TruthValue(std::move(s)) : TruthValue::zero();
}

TruthValue tv_impl(const TruthValue& x, const TruthValue& y) {
  if (x.value() <= y.value()) return TruthValue::one();
  return TruthValue(1 - x.value() + y.value());
}

TruthValue tv_geq(const TruthValue& x, const Threshold& g) {
  return x.value() >= g.value() ? TruthValue::one() : TruthValue::zero();
}

TruthValue tv_min(const TruthValue& x, const TruthValue& y) {
  return x.value() <= y.value() ? x : y;
}

TruthValue tv_max(const TruthValue& x, const TruthValue& y) {
  return x.value() >= y.value() ? x : y;
}

TruthValue tv_sdisj(const TruthValue& x, const TruthValue& y) {
  Rational s = x.value() + y.value();
  return s >= 1 ? TruthValue::one() : TruthValue(std::move(s));
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string shown(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw NumberFormatError("malformed rational '" + shown + "'");
    }
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) throw NumberFormatError("zero denominator in '" + shown + "'");
    Rational r(mpz_class(std::string(num), 10), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw NumberFormatError("malformed decimal '" + shown + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    Rational r(digits, scale);
    r.canonicalize();
    return r;
  }
  if (!all_digits(text)) throw NumberFormatError("malformed number '" + shown + "'");
  return Rational(mpz_class(shown, 10));
}

std::string rational_text(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_fraction(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace luka
