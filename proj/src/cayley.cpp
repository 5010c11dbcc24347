#include "poncelet/cayley.hpp"

#include <map>
#include <mutex>

#include "poncelet/error.hpp"
#include "poncelet/polycore.hpp"

namespace poncelet {

PencilCoeffs pencil_coeffs() {
  const auto p = LaurentPoly3::p();
  const auto x = LaurentPoly3::x();
  const auto y = LaurentPoly3::y();
  PencilCoeffs c;
  c.delta1 = LaurentPoly3(-1);
  c.theta1 = -p * p - Rational(2) * p * x + y * y - LaurentPoly3(1);
  c.theta2 = Rational(-2) * p * p - Rational(2) * p * x;
  c.delta2 = -p * p;
  return c;
}

namespace {

Rational binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

AtildeSequence atilde_sequence(int count) {
  if (count < 1) throw Error(ErrorCode::UnsupportedN, "atilde_sequence needs count >= 1");
  static std::vector<LaurentPoly3> cache;
  std::lock_guard lock(cache_mutex());

  if (cache.empty()) {
    const PencilCoeffs pc = pencil_coeffs();
    cache.push_back(pc.theta2 / Rational(2));
  }
  const PencilCoeffs pc = pencil_coeffs();
  // Half of the (k+1)-th derivative of the cubic at 0.
  auto half_derivative = [&](int order) -> LaurentPoly3 {
    switch (order) {
      case 1: return pc.theta2 / Rational(2);
      case 2: return pc.theta1;
      case 3: return Rational(3) * pc.delta1;
      default: return {};
    }
  };
  while (static_cast<int>(cache.size()) < count) {
    const int k = static_cast<int>(cache.size());  // computing entry k+1
    LaurentPoly3 sum;
    for (int l = 1; l <= k; ++l) {
      sum += binomial(k, l) * (cache[static_cast<std::size_t>(l - 1)] * cache[static_cast<std::size_t>(k - l)]);
    }
    cache.push_back(half_derivative(k + 1) - poly_div_exact(sum, pc.delta2));
  }
  return AtildeSequence(std::vector<LaurentPoly3>(cache.begin(), cache.begin() + count));
}

LaurentPoly3 hankel_raw(int n) {
  if (n < 3) throw Error(ErrorCode::UnsupportedN, "hankel_raw needs n >= 3");
  static std::map<int, LaurentPoly3> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }

  const bool odd = n % 2 == 1;
  const int size = odd ? (n - 1) / 2 : n / 2 - 1;
  const int offset = odd ? 0 : 1;  // entry (i, j) uses index i + j + offset, i, j >= 1
  const AtildeSequence seq = atilde_sequence(2 * size + offset);
  PolyMatrix m(static_cast<std::size_t>(size), std::vector<LaurentPoly3>(static_cast<std::size_t>(size)));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      const int k = i + j + offset;
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = seq.at(k) / factorial(k);
    }
  }
  LaurentPoly3 det = poly_det(m);

  std::lock_guard lock(cache_mutex());
  return cache.emplace(n, std::move(det)).first->second;
}

const LocusPolynomial& locus(int n) {
  if (n < 3 || n > kMaxLocusN) throw Error(ErrorCode::UnsupportedN, "locus supports 3 <= n <= 12");
  static std::map<int, LocusPolynomial> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }

  LocusPolynomial out;
  out.n = n;
  out.raw_hankel = hankel_raw(n);
  LaurentPoly3 quotient = out.raw_hankel;
  // One primitive factor Q^k per proper divisor k. Q^3 already sits inside
  // the n = 6 determinant, so n = 12 is not divisible by the raw product.
  for (int k = 3; k < n; ++k) {
    if (n % k != 0) continue;
    quotient = poly_div_exact(quotient, locus(k).canonical);
    out.divisors_removed.push_back(k);
  }
  out.canonical = canonicalize(quotient);

  std::lock_guard lock(cache_mutex());
  return cache.emplace(n, std::move(out)).first->second;
}

LaurentPoly3 locus_at_p(int n, const Rational& p) {
  if (p == 0) throw Error(ErrorCode::DegenerateParabola, "p = 0 is not a parabola");
  return canonicalize(locus(n).canonical.substitute_p(p));
}

}  // namespace poncelet
