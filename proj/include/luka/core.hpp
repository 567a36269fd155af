// Exact truth-value algebra of Łukasiewicz logic over rationals in [0,1].
#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace luka {

using Rational = mpq_class;

/// Thrown when a rational leaves [0,1] where the unit interval is required.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Thrown on malformed numeric literals.
class NumberFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

Rational checked_unit(Rational v);

// Shared storage for the two [0,1]-valued strong types. Comparisons are only
// defined between values of the same derived type.
template <class Derived>
class UnitRational {
 public:
  UnitRational() = default;
  explicit UnitRational(Rational v) : value_(checked_unit(std::move(v))) {}

  const Rational& value() const { return value_; }

  friend bool operator==(const Derived& a, const Derived& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Derived& a, const Derived& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

}  // namespace detail

/// A semantic value: exact rational in [0,1].
class TruthValue : public detail::UnitRational<TruthValue> {
 public:
  TruthValue() = default;
  explicit TruthValue(Rational v) : UnitRational(std::move(v)) {}

  static TruthValue zero() { return TruthValue(); }
  static TruthValue one() { return TruthValue(Rational(1)); }

  bool is_zero() const { return sgn(value()) == 0; }
  bool is_one() const { return value() == 1; }
  bool is_crisp() const { return is_zero() || is_one(); }
};

/// The rational g of a threshold test `φ >= g`.
class Threshold : public detail::UnitRational<Threshold> {
 public:
  Threshold() = default;
  explicit Threshold(Rational v) : UnitRational(std::move(v)) {}
};

TruthValue tv_neg(const TruthValue& x);
TruthValue tv_conj(const TruthValue& x, const TruthValue& y);
TruthValue tv_impl(const TruthValue& x, const TruthValue& y);
TruthValue tv_geq(const TruthValue& x, const Threshold& g);
TruthValue tv_min(const TruthValue& x, const TruthValue& y);
TruthValue tv_max(const TruthValue& x, const TruthValue& y);
TruthValue tv_sdisj(const TruthValue& x, const TruthValue& y);

/// Parses `n/d`, a decimal such as `0.95`, or an integer. The result is
/// canonicalized; no range check is applied.
Rational parse_rational(std::string_view text);

/// `n` when the denominator is 1, otherwise `n/d`.
std::string rational_text(const Rational& r);

/// Always `n/d`, e.g. `0/1`.
std::string rational_fraction(const Rational& r);

}  // namespace luka
