#include "poncelet/rational.hpp"

#include <cctype>
#include <cmath>

#include "poncelet/error.hpp"

namespace poncelet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NegativePExponent: return "NegativePExponent";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::NotQuartic: return "NotQuartic";
    case ErrorCode::DegenerateParabola: return "DegenerateParabola";
    case ErrorCode::OnLatusRectumLine: return "OnLatusRectumLine";
    case ErrorCode::OnUnitCircle: return "OnUnitCircle";
    case ErrorCode::AtFocus: return "AtFocus";
    case ErrorCode::ExcludedCenter: return "ExcludedCenter";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::NotOnCircle: return "NotOnCircle";
    case ErrorCode::NotOnLine: return "NotOnLine";
    case ErrorCode::DegenerateStep: return "DegenerateStep";
    case ErrorCode::BranchPoint: return "BranchPoint";
    case ErrorCode::Pole: return "Pole";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorCode::Parse, "empty number in '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::Parse, "bad number '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty rational");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), whole);
    Integer den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      Integer mag = parse_integer(exp_part, whole);
      if (!mag.fits_slong_p() || abs(mag) > 4096) throw Error(ErrorCode::Parse, "exponent out of range");
      exponent = exp_negative ? -mag.get_si() : mag.get_si();
      text = text.substr(0, e);
    }
    std::string digits;
    long frac_digits = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
      frac_digits = static_cast<long>(text.size() - dot - 1);
      if (digits.empty()) throw Error(ErrorCode::Parse, "bad number '" + std::string(whole) + "'");
    } else {
      digits = std::string(text);
    }
    Integer mantissa = parse_integer(digits, whole);
    long shift = exponent - frac_digits;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    value = shift < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

int sign(const Rational& r) { return sgn(r); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::Parse, "non-finite value");
  return Rational(value);
}

}  // namespace poncelet
