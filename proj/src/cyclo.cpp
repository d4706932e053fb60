#include "kcv/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "kcv/errors.hpp"

namespace kcv {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2, m = n; p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  return r;
}

namespace {

std::vector<long long> poly_divide_exact(std::vector<long long> a, const std::vector<long long>& b) {
  // b monic
  std::vector<long long> q(a.size() - b.size() + 1, 0);
  for (int i = int(a.size()) - 1; i >= int(b.size()) - 1; --i) {
    long long c = a[i];
    q[i - (b.size() - 1)] = c;
    if (!c) continue;
    for (size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
  }
  return q;
}

std::mutex g_phi_mutex;
std::map<int, std::vector<long long>> g_phi;

}  // namespace

static const std::vector<long long>& phi_locked(int n) {
  auto it = g_phi.find(n);
  if (it != g_phi.end()) return it->second;
  std::vector<long long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, phi_locked(d));
  return g_phi.emplace(n, std::move(p)).first->second;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
  std::lock_guard<std::mutex> lk(g_phi_mutex);
  return phi_locked(n);
}

Cyclo Cyclo::from_powers(int n, const std::vector<Rational>& p) {
  if (n == 1) {
    Rational s(0);
    for (auto& x : p) s += x;
    return Cyclo(s);
  }
  const auto& phi = cyclotomic_polynomial(n);
  int d = int(phi.size()) - 1;
  std::vector<Rational> a(p.begin(), p.end());
  if (int(a.size()) < d) a.resize(d, Rational(0));
  for (int i = int(a.size()) - 1; i >= d; --i) {
    Rational c = a[i];
    if (c.numerator() == 0) continue;
    for (int j = 0; j <= d; ++j) a[i - d + j] -= c * Rational(phi[j]);
  }
  a.resize(d);
  return Cyclo(n, std::move(a));
}

Cyclo Cyclo::zeta(int n, long long k) {
  if (n < 1) throw InternalError("zeta of order < 1");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> p(k + 1, Rational(0));
  p[k] = 1;
  return from_powers(n, p);
}

bool Cyclo::is_zero() const {
  for (auto& x : c_)
    if (x.numerator() != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i].numerator() != 0) return false;
  return true;
}

Rational Cyclo::to_rational() const {
  if (!is_rational()) throw InternalError("irrational value " + str());
  return c_[0];
}

long long Cyclo::to_integer() const {
  Rational r = to_rational();
  if (r.denominator() != 1) throw InternalError("non-integral value " + str());
  return r.numerator();
}

Cyclo Cyclo::embed(int L) const {
  if (L == n_) return *this;
  if (L % n_) throw InternalError("bad cyclotomic embedding");
  int f = L / n_;
  std::vector<Rational> p(size_t(c_.size() - 1) * f + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) p[i * f] = c_[i];
  return from_powers(L, p);
}

Cyclo Cyclo::conj() const {
  if (n_ == 1) return *this;
  std::vector<Rational> p(n_, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) p[(n_ - int(i)) % n_] += c_[i];
  return from_powers(n_, p);
}

static void unify(Cyclo& a, Cyclo& b) {
  if (a.conductor() == b.conductor()) return;
  int L = std::lcm(a.conductor(), b.conductor());
  a = a.embed(L);
  b = b.embed(L);
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (n_ == 1 && o.n_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  Cyclo b = o;
  unify(*this, b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (n_ == 1 && o.n_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.n_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  Cyclo b = o;
  unify(*this, b);
  std::vector<Rational> p(c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].numerator() == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) p[i + j] += c_[i] * b.c_[j];
  }
  *this = from_powers(n_, p);
  return *this;
}

Cyclo& Cyclo::operator/=(const Rational& r) {
  for (auto& x : c_) x /= r;
  return *this;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  Cyclo x = a, y = b;
  unify(x, y);
  return x.c_ == y.c_;
}

std::string Cyclo::str() const {
  if (is_rational()) return to_string(c_[0]);
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].numerator() == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c_[i]) + ")";
    if (i) s += "*z" + std::to_string(n_) + "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace kcv
