#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kcv {

// Integer Laurent polynomial in v.  Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c) { add(0, c); }
  static LaurentPoly monomial(int e, long long c = 1);
  // sum c[i] q^i with q = v^2
  static LaurentPoly from_q(const std::vector<long long>& c);

  const std::map<int, long long>& terms() const { return t_; }
  long long coeff(int e) const;
  bool is_zero() const { return t_.empty(); }
  int max_degree() const;  // throws on zero
  int min_degree() const;
  long long at_one() const;
  LaurentPoly bar() const;  // v -> v^-1

  void add(int e, long long c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  std::map<int, long long> t_;
};

}  // namespace kcv
