#include "hypvol/exact_form.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hypvol/errors.hpp"
#include "hypvol/lobachevsky.hpp"

namespace hypvol {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::from_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      num = num * 10 + (ch - '0');
      if (seen_point) den *= 10;
      seen_digit = true;
    } else {
      throw InvalidArgument("Rational: malformed decimal '" + text + "'");
    }
  }
  if (!seen_digit) throw InvalidArgument("Rational: malformed decimal '" + text + "'");
  return Rational(negative ? -num : num, den);
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InvalidArgument("Rational: division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Term::value() const {
  switch (kind) {
    case Kind::One: return 1.0;
    case Kind::VTet: return v_tet();
    case Kind::VOct: return v_oct();
    case Kind::Lob: return lobachevsky_pi_over(n);
    case Kind::PiLogHalf: return std::numbers::pi * std::log(n / 2.0);
  }
  return 0.0;
}

std::string Term::str() const {
  switch (kind) {
    case Kind::One: return "1";
    case Kind::VTet: return "v_tet";
    case Kind::VOct: return "v_oct";
    case Kind::Lob: return "L(pi/" + std::to_string(n) + ")";
    case Kind::PiLogHalf: return "pi*ln(" + std::to_string(n) + "/2)";
  }
  return "?";
}

LinearForm::LinearForm(Rational c) { add(c, Term::one()); }

LinearForm::LinearForm(Rational c, Term t) { add(c, t); }

void LinearForm::add(Rational c, Term t) {
  if (t.kind == Term::Kind::Lob) {
    if (t.n < 1) throw InvalidArgument("LinearForm: Lambda(pi/n) needs n >= 1");
    switch (t.n) {
      case 1:
      case 2: return;  // Lambda(pi) = Lambda(pi/2) = 0
      case 3: t = Term::vtet(); c = c * Rational(1, 3); break;
      case 4: t = Term::voct(); c = c * Rational(1, 8); break;
      case 6: t = Term::vtet(); c = c * Rational(1, 2); break;
      default: break;
    }
  } else if (t.kind == Term::Kind::PiLogHalf) {
    if (t.n < 1) throw InvalidArgument("LinearForm: pi*ln(n/2) needs n >= 1");
    if (t.n == 2) return;
  } else {
    t.n = 0;
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  for (const auto& [t, c] : o.terms_) add(c, t);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  for (const auto& [t, c] : o.terms_) add(-c, t);
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff = coeff * c;
  return *this;
}

Rational LinearForm::coefficient(const Term& t) const {
  LinearForm probe(Rational(1), t);
  if (probe.terms_.empty()) return Rational(0);
  const auto& [canon, scale] = *probe.terms_.begin();
  auto it = terms_.find(canon);
  if (it == terms_.end()) return Rational(0);
  return it->second / scale;
}

double LinearForm::value() const {
  double sum = 0.0;
  for (const auto& [t, c] : terms_) sum += c.to_double() * t.value();
  return sum;
}

std::string LinearForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Rational mag = c < Rational(0) ? -c : c;
    if (first) {
      if (c < Rational(0)) out << "-";
    } else {
      out << (c < Rational(0) ? " - " : " + ");
    }
    first = false;
    if (t.kind == Term::Kind::One) {
      out << mag.str();
    } else if (mag == Rational(1)) {
      out << t.str();
    } else {
      out << mag.str() << "*" << t.str();
    }
  }
  return out.str();
}

}  // namespace hypvol
