#include "poncelet/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

#include "poncelet/error.hpp"

namespace poncelet {

namespace {

bool descending(const LaurentPoly3::Term& a, const LaurentPoly3::Term& b) { return a.first > b.first; }

template <typename T>
T power(T base, int e) {
  T out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

template <typename T>
T power_signed(const T& base, int e) {
  return e >= 0 ? power(base, e) : T(1) / power(base, -e);
}

}  // namespace

LaurentPoly3::LaurentPoly3(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

LaurentPoly3 LaurentPoly3::monomial(const Rational& c, Monomial m) {
  if (m.x < 0 || m.y < 0) throw Error(ErrorCode::Parse, "negative x/y exponent");
  LaurentPoly3 out;
  if (c != 0) out.terms_.emplace_back(m, c);
  return out;
}

LaurentPoly3 LaurentPoly3::from_terms(std::vector<Term> terms) {
  for (const auto& [m, c] : terms) {
    if (m.x < 0 || m.y < 0) throw Error(ErrorCode::Parse, "negative x/y exponent");
  }
  LaurentPoly3 out;
  out.terms_ = std::move(terms);
  out.normalize();
  return out;
}

void LaurentPoly3::normalize() {
  std::sort(terms_.begin(), terms_.end(), descending);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && merged.back().second == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().second == 0) merged.pop_back();
  terms_ = std::move(merged);
}

Rational LaurentPoly3::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int LaurentPoly3::min_p() const {
  int out = std::numeric_limits<int>::max();
  for (const auto& t : terms_) out = std::min(out, t.first.p);
  return terms_.empty() ? 0 : out;
}

int LaurentPoly3::max_p() const { return terms_.empty() ? 0 : terms_.front().first.p; }

int LaurentPoly3::degree_x() const {
  int out = 0;
  for (const auto& t : terms_) out = std::max(out, t.first.x);
  return out;
}

int LaurentPoly3::degree_y() const {
  int out = 0;
  for (const auto& t : terms_) out = std::max(out, t.first.y);
  return out;
}

LaurentPoly3 LaurentPoly3::operator-() const {
  LaurentPoly3 out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentPoly3& LaurentPoly3::operator+=(const LaurentPoly3& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly3& LaurentPoly3::operator-=(const LaurentPoly3& o) { return *this += -o; }

LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.size() == 1 && b.terms_[0].first == Monomial{}) return a * b.terms_[0].second;
  if (a.size() == 1 && a.terms_[0].first == Monomial{}) return b * a.terms_[0].second;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size() / 2 + 1);
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ma * mb, prod);
      if (!inserted) mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), prod.get_mpq_t());
    }
  }
  LaurentPoly3 out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.emplace_back(m, std::move(c));
  }
  std::sort(out.terms_.begin(), out.terms_.end(), descending);
  return out;
}

LaurentPoly3& LaurentPoly3::operator*=(const LaurentPoly3& o) { return *this = *this * o; }

LaurentPoly3& LaurentPoly3::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPoly3& LaurentPoly3::operator/=(const Rational& c) {
  if (c == 0) throw Error(ErrorCode::NotDivisible, "division by zero scalar");
  for (auto& t : terms_) t.second /= c;
  return *this;
}

LaurentPoly3 LaurentPoly3::shift_p(int k) const {
  LaurentPoly3 out = *this;
  for (auto& t : out.terms_) t.first.p += k;
  return out;
}

LaurentPoly3 LaurentPoly3::pow(unsigned e) const {
  LaurentPoly3 out(1);
  LaurentPoly3 base = *this;
  while (e > 0) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return out;
}

LaurentPoly3 LaurentPoly3::reflect(bool flip_p, bool flip_x, bool flip_y) const {
  LaurentPoly3 out = *this;
  for (auto& [m, c] : out.terms_) {
    int odd = (flip_p ? (m.p & 1) : 0) + (flip_x ? (m.x & 1) : 0) + (flip_y ? (m.y & 1) : 0);
    if (odd & 1) c = -c;
  }
  return out;
}

std::vector<LaurentPoly3> LaurentPoly3::coefficients_in_p() const {
  if (is_zero()) return {};
  const int lo = min_p();
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(max_p() - lo + 1));
  for (const auto& [m, c] : terms_) buckets[static_cast<std::size_t>(m.p - lo)].emplace_back(Monomial{0, m.x, m.y}, c);
  std::vector<LaurentPoly3> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Rational LaurentPoly3::evaluate(const Rational& p, const Rational& x, const Rational& y) const {
  if (p == 0 && min_p() < 0) throw Error(ErrorCode::DegenerateParabola, "p = 0 in a Laurent polynomial");
  Rational out = 0;
  for (const auto& [m, c] : terms_) out += c * power_signed(p, m.p) * power(x, m.x) * power(y, m.y);
  return out;
}

double LaurentPoly3::evaluate(double p, double x, double y) const {
  double out = 0;
  for (const auto& [m, c] : terms_) out += c.get_d() * power_signed(p, m.p) * power(x, m.x) * power(y, m.y);
  return out;
}

std::complex<double> LaurentPoly3::evaluate(std::complex<double> p, std::complex<double> x,
                                            std::complex<double> y) const {
  std::complex<double> out = 0;
  for (const auto& [m, c] : terms_) out += c.get_d() * power_signed(p, m.p) * power(x, m.x) * power(y, m.y);
  return out;
}

LaurentPoly3 LaurentPoly3::substitute_p(const Rational& p) const {
  if (p == 0) throw Error(ErrorCode::DegenerateParabola, "p = 0");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(Monomial{0, m.x, m.y}, c * power_signed(p, m.p));
  return from_terms(std::move(out));
}

std::string LaurentPoly3::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> factors;
    if (m.p == 1) factors.emplace_back("p");
    else if (m.p != 0) factors.push_back("p^" + std::to_string(m.p));
    if (m.x == 1) factors.emplace_back("x");
    else if (m.x != 0) factors.push_back("x^" + std::to_string(m.x));
    if (m.y == 1) factors.emplace_back("y");
    else if (m.y != 0) factors.push_back("y^" + std::to_string(m.y));
    std::string body;
    if (mag != 1 || factors.empty()) body = poncelet::to_string(mag);
    for (const auto& f : factors) {
      if (!body.empty()) body += "*";
      body += f;
    }
    out += body;
  }
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  LaurentPoly3 parse() {
    std::vector<LaurentPoly3::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    while (true) {
      auto term = parse_term();
      if (negative) term.second = -term.second;
      terms.push_back(std::move(term));
      skip_ws();
      if (at_end()) break;
      char op = take();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negative = op == '-';
    }
    return LaurentPoly3::from_terms(std::move(terms));
  }

 private:
  LaurentPoly3::Term parse_term() {
    Rational coeff = 1;
    Monomial mono;
    while (true) {
      skip_ws();
      if (at_end()) fail("dangling operator");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '/')) ++pos_;
        coeff *= parse_rational(text_.substr(start, pos_ - start));
      } else if (c == 'p' || c == 'x' || c == 'y') {
        ++pos_;
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          bool neg = false;
          if (!at_end() && (peek() == '-' || peek() == '+')) neg = take() == '-';
          std::size_t start = pos_;
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
          if (start == pos_) fail("missing exponent");
          e = std::stoi(std::string(text_.substr(start, pos_ - start)));
          if (neg) e = -e;
        }
        if (c == 'p') mono.p += e;
        else if (c == 'x') mono.x += e;
        else mono.y += e;
        if (mono.x < 0 || mono.y < 0) fail("negative exponent on x or y");
      } else {
        fail(std::string("unexpected '") + c + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {mono, coeff};
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly3 LaurentPoly3::parse(std::string_view text) { return TermParser(text).parse(); }

}  // namespace poncelet
