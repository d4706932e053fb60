#pragma once
#include <boost/rational.hpp>
#include <string>
#include <vector>

namespace kcv {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);  // "p/q", or "p" when q == 1

// Element of the cyclotomic field Q(zeta_n), stored in the power basis
// 1, zeta, ..., zeta^(phi(n)-1).  Operands with different n are promoted
// to the lcm field.
class Cyclo {
 public:
  Cyclo() : n_(1), c_(1, Rational(0)) {}
  Cyclo(long long v) : n_(1), c_(1, Rational(v)) {}
  Cyclo(Rational r) : n_(1), c_(1, r) {}

  static Cyclo zeta(int n, long long k);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;       // throws unless rational
  long long to_integer() const;       // throws unless an integer
  Cyclo conj() const;                 // zeta -> zeta^-1
  Cyclo embed(int L) const;           // L must be a multiple of n

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Rational& r);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Rational& r) { return a /= r; }
  Cyclo operator-() const;
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::string str() const;

 private:
  Cyclo(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  static Cyclo from_powers(int n, const std::vector<Rational>& p);  // sum p[k] zeta^k
  int n_;
  std::vector<Rational> c_;
};

const std::vector<long long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace kcv
