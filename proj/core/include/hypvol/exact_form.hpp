#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace hypvol {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const { return num_ == 0; }

  // Parses decimal literals such as "2.7066" or "-0.5" exactly.
  static Rational from_decimal(const std::string& text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Transcendental atoms that appear in the volume formulas.
struct Term {
  enum class Kind { One, VTet, VOct, Lob, PiLogHalf };
  Kind kind = Kind::One;
  int n = 0;  // Lob: Lambda(pi/n); PiLogHalf: pi*ln(n/2)

  static Term one() { return {Kind::One, 0}; }
  static Term vtet() { return {Kind::VTet, 0}; }
  static Term voct() { return {Kind::VOct, 0}; }
  static Term lob(int n) { return {Kind::Lob, n}; }
  static Term pi_log_half(int n) { return {Kind::PiLogHalf, n}; }

  double value() const;
  std::string str() const;

  friend auto operator<=>(const Term&, const Term&) = default;
};

// Finite rational combination of Terms. Terms are canonicalized on
// insertion so that symbolic equality means equality of forms, e.g.
// Lambda(pi/3) is stored as v_tet/3.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Rational c);  // NOLINT: a constant is a form
  LinearForm(Rational c, Term t);

  static LinearForm vtet(Rational c = 1) { return {c, Term::vtet()}; }
  static LinearForm voct(Rational c = 1) { return {c, Term::voct()}; }
  static LinearForm lob(int n, Rational c = 1) { return {c, Term::lob(n)}; }
  static LinearForm pi_log_half(int n, Rational c = 1) { return {c, Term::pi_log_half(n)}; }

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& c);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(const Rational& c, LinearForm a) { return a *= c; }
  friend LinearForm operator*(LinearForm a, const Rational& c) { return a *= c; }
  LinearForm operator-() const { return (*this) * Rational(-1); }
  friend bool operator==(const LinearForm& a, const LinearForm& b) = default;

  Rational coefficient(const Term& t) const;
  const std::map<Term, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double value() const;
  std::string str() const;

 private:
  void add(Rational c, Term t);
  std::map<Term, Rational> terms_;
};

}  // namespace hypvol
