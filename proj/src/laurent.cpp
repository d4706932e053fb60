#include "kcv/laurent.hpp"

#include "kcv/errors.hpp"

namespace kcv {

LaurentPoly LaurentPoly::monomial(int e, long long c) {
  LaurentPoly p;
  p.add(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_q(const std::vector<long long>& c) {
  LaurentPoly p;
  for (size_t i = 0; i < c.size(); ++i) p.add(2 * int(i), c[i]);
  return p;
}

long long LaurentPoly::coeff(int e) const {
  auto it = t_.find(e);
  return it == t_.end() ? 0 : it->second;
}

int LaurentPoly::max_degree() const {
  if (t_.empty()) throw InternalError("degree of zero polynomial");
  return t_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
  if (t_.empty()) throw InternalError("degree of zero polynomial");
  return t_.begin()->first;
}

long long LaurentPoly::at_one() const {
  long long s = 0;
  for (auto& [e, c] : t_) s += c;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (auto& [e, c] : t_) p.t_[-e] = c;
  return p;
}

void LaurentPoly::add(int e, long long c) {
  if (!c) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (!it->second) t_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, c] : o.t_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [e, c] : o.t_) add(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (auto& [e1, c1] : a.t_)
    for (auto& [e2, c2] : b.t_) p.add(e1 + e2, c1 * c2);
  return p;
}

std::string LaurentPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    auto [e, c] = *it;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    long long a = c < 0 ? -c : c;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += "v";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace kcv
