#pragma once

// Runtime-tagged semifield values for the I/O layer. The algorithms are
// templates over a concrete instance; this variant is what files and the
// command line speak.

#include <string>
#include <string_view>
#include <variant>

#include "tropical/error.hpp"
#include "tropical/semifield.hpp"

namespace tropical {

enum class SemifieldKind { maxplus, minplus, f1 };

inline std::string to_string(SemifieldKind k) {
  switch (k) {
    case SemifieldKind::maxplus: return "maxplus";
    case SemifieldKind::minplus: return "minplus";
    case SemifieldKind::f1: return "f1";
  }
  return "?";
}

inline SemifieldKind parse_semifield_kind(std::string_view s) {
  if (s == "maxplus") return SemifieldKind::maxplus;
  if (s == "minplus") return SemifieldKind::minplus;
  if (s == "f1") return SemifieldKind::f1;
  throw ParseError("unknown semifield '" + std::string(s) + "' (expected maxplus, minplus or f1)");
}

template <class K>
constexpr SemifieldKind kind_of();
template <>
constexpr SemifieldKind kind_of<MaxPlus>() { return SemifieldKind::maxplus; }
template <>
constexpr SemifieldKind kind_of<MinPlus>() { return SemifieldKind::minplus; }
template <>
constexpr SemifieldKind kind_of<F1>() { return SemifieldKind::f1; }

/// Parses "p/q", "p" or a decimal-free integer string into a canonical rational.
inline Rational parse_rational(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational literal");
  Rational r;
  if (r.set_str(std::string(s), 10) != 0) throw ParseError("malformed rational literal '" + std::string(s) + "'");
  if (s.find('/') != std::string_view::npos && r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

inline std::string format_rational(const Rational& r) { return r.get_str(10); }

/// Textual form: rationals as "p/q" or "p", 0̄ as "-inf" / "+inf", F1 as "0"/"1".
inline std::string format_value(const MaxPlus& v) { return v.is_zero() ? "-inf" : format_rational(v.magnitude()); }
inline std::string format_value(const MinPlus& v) { return v.is_zero() ? "+inf" : format_rational(v.magnitude()); }
inline std::string format_value(const F1& v) { return v.bit() ? "1" : "0"; }

template <class K>
K parse_value(std::string_view s);

template <>
inline MaxPlus parse_value<MaxPlus>(std::string_view s) {
  if (s == "-inf") return MaxPlus::zero();
  if (s == "+inf" || s == "inf") throw ParseError("+inf is not an element of max-plus");
  return MaxPlus(parse_rational(s));
}

template <>
inline MinPlus parse_value<MinPlus>(std::string_view s) {
  if (s == "+inf" || s == "inf") return MinPlus::zero();
  if (s == "-inf") throw ParseError("-inf is not an element of min-plus");
  return MinPlus(parse_rational(s));
}

template <>
inline F1 parse_value<F1>(std::string_view s) {
  if (s == "0") return F1(false);
  if (s == "1") return F1(true);
  throw ParseError("F1 values are 0 or 1, got '" + std::string(s) + "'");
}

/// Variant-tagged element of one of the selectable instances.
using SemifieldValue = std::variant<MaxPlus, MinPlus, F1>;

inline SemifieldKind kind_of(const SemifieldValue& v) {
  return std::visit([](const auto& x) { return kind_of<std::decay_t<decltype(x)>>(); }, v);
}

namespace detail {
template <class F>
SemifieldValue binary(const SemifieldValue& x, const SemifieldValue& y, F f) {
  if (x.index() != y.index()) {
    throw DomainMismatch("operands from different semifields: " + to_string(kind_of(x)) + " and " +
                         to_string(kind_of(y)));
  }
  return std::visit(
      [&](const auto& a) -> SemifieldValue {
        using K = std::decay_t<decltype(a)>;
        return f(a, std::get<K>(y));
      },
      x);
}
}  // namespace detail

inline SemifieldValue sf_add(const SemifieldValue& x, const SemifieldValue& y) {
  return detail::binary(x, y, [](const auto& a, const auto& b) { return add(a, b); });
}
inline SemifieldValue sf_mul(const SemifieldValue& x, const SemifieldValue& y) {
  return detail::binary(x, y, [](const auto& a, const auto& b) { return mul(a, b); });
}
inline SemifieldValue sf_inv(const SemifieldValue& x) {
  return std::visit([](const auto& a) -> SemifieldValue { return inv(a); }, x);
}
inline bool sf_natural_leq(const SemifieldValue& x, const SemifieldValue& y) {
  return sf_add(x, y) == y;
}
inline SemifieldValue sf_quasi_opposite(const SemifieldValue& x) { return x; }

inline std::string format_value(const SemifieldValue& v) {
  return std::visit([](const auto& a) { return format_value(a); }, v);
}

inline SemifieldValue parse_value(SemifieldKind k, std::string_view s) {
  switch (k) {
    case SemifieldKind::maxplus: return parse_value<MaxPlus>(s);
    case SemifieldKind::minplus: return parse_value<MinPlus>(s);
    case SemifieldKind::f1: return parse_value<F1>(s);
  }
  throw ParseError("unknown semifield");
}

}  // namespace tropical
