#include "kcv/classfun.hpp"

#include <algorithm>

#include "kcv/errors.hpp"

namespace kcv {

static void check_same(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group || a.group != b.group) throw GroupMismatch("class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_same(*this, o);
  for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_same(*this, o);
  for (size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclo& c) {
  for (auto& v : values) v *= c;
  return *this;
}

ClassFunction from_elementwise(const CoxeterGroup& g, const std::vector<Cyclo>& f) {
  ClassFunction r(g);
  const auto& cl = g.classes();
  for (size_t c = 0; c < cl.size(); ++c) {
    r.values[c] = f[cl.reps[c]];
    for (Elt x : cl.members[c])
      if (f[x] != r.values[c]) throw InternalError("function is not constant on classes");
  }
  return r;
}

ClassFunction from_integer_values(const CoxeterGroup& g, const std::vector<long long>& v) {
  ClassFunction r(g);
  for (size_t c = 0; c < v.size(); ++c) r.values[c] = Cyclo(v[c]);
  return r;
}

ClassFunction trivial_character(const CoxeterGroup& g) {
  ClassFunction r(g);
  for (auto& v : r.values) v = Cyclo(1);
  return r;
}

ClassFunction sign_character(const CoxeterGroup& g) {
  ClassFunction r(g);
  const auto& cl = g.classes();
  for (size_t c = 0; c < cl.size(); ++c) r.values[c] = Cyclo(g.length(cl.reps[c]) % 2 ? -1 : 1);
  return r;
}

ClassFunction reflection_character(const CoxeterGroup& g) {
  ClassFunction r(g);
  const auto& cl = g.classes();
  for (size_t c = 0; c < cl.size(); ++c) r.values[c] = g.reflection_character(cl.reps[c]);
  return r;
}

ClassFunction regular_character(const CoxeterGroup& g) {
  ClassFunction r(g);
  r.values[0] = Cyclo((long long)g.order());
  return r;
}

Cyclo scalar_product(const ClassFunction& a, const ClassFunction& b) {
  check_same(a, b);
  const auto& cl = a.group->classes();
  Cyclo s(0);
  bool rational = true;
  for (size_t c = 0; c < cl.size() && rational; ++c)
    rational = a.values[c].is_rational() && b.values[c].is_rational();
  if (rational) {
    Rational t(0);
    for (size_t c = 0; c < cl.size(); ++c)
      t += Rational((long long)cl.members[c].size()) * a.values[c].to_rational() * b.values[c].to_rational();
    return Cyclo(t / Rational((long long)a.group->order()));
  }
  for (size_t c = 0; c < cl.size(); ++c)
    s += Cyclo((long long)cl.members[c].size()) * a.values[c] * b.values[c].conj();
  return s / Rational((long long)a.group->order());
}

long long int_scalar_product(const ClassFunction& a, const ClassFunction& b) {
  return scalar_product(a, b).to_integer();
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  check_same(a, b);
  ClassFunction r(*a.group);
  for (size_t c = 0; c < r.values.size(); ++c) r.values[c] = a.values[c] * b.values[c];
  return r;
}

bool Subgroup::contains(Elt w) const { return std::binary_search(elements.begin(), elements.end(), w); }

Subgroup generate_subgroup(const CoxeterGroup& g, const std::vector<Elt>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elt> q{g.identity()};
  in[0] = 1;
  for (size_t i = 0; i < q.size(); ++i)
    for (Elt s : gens) {
      Elt x = g.multiply(q[i], s);
      if (!in[x]) {
        in[x] = 1;
        q.push_back(x);
      }
    }
  std::sort(q.begin(), q.end());
  return Subgroup{&g, std::move(q)};
}

Subgroup make_subgroup(const CoxeterGroup& g, std::vector<Elt> e) {
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return Subgroup{&g, std::move(e)};
}

static void check_sub(const Subgroup& h, std::size_t n) {
  if (!h.group) throw SubgroupMismatch("subgroup without group");
  if (n != h.elements.size()) throw SubgroupMismatch("function length does not match subgroup order");
}

ClassFunction induce(const Subgroup& h, const std::vector<Cyclo>& psi) {
  check_sub(h, psi.size());
  const CoxeterGroup& g = *h.group;
  const auto& cl = g.classes();
  ClassFunction r(g);
  std::vector<Rational> rsum(cl.size(), Rational(0));
  bool rational = true;
  for (auto& v : psi)
    if (!v.is_rational()) {
      rational = false;
      break;
    }
  for (size_t i = 0; i < h.elements.size(); ++i) {
    auto c = cl.class_of[h.elements[i]];
    if (rational)
      rsum[c] += psi[i].to_rational();
    else
      r.values[c] += psi[i];
  }
  for (size_t c = 0; c < cl.size(); ++c) {
    Rational f((long long)g.order(), (long long)(cl.members[c].size() * h.elements.size()));
    if (rational)
      r.values[c] = Cyclo(rsum[c] * f);
    else
      r.values[c] = r.values[c] * Cyclo(f);
  }
  return r;
}

std::vector<Cyclo> restrict_to(const ClassFunction& chi, const Subgroup& h) {
  if (chi.group != h.group) throw SubgroupMismatch("restriction to a subgroup of another group");
  std::vector<Cyclo> r;
  r.reserve(h.elements.size());
  for (Elt x : h.elements) r.push_back(chi(x));
  return r;
}

Cyclo scalar_product(const Subgroup& h, const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
  check_sub(h, a.size());
  check_sub(h, b.size());
  Cyclo s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i].conj();
  return s / Rational((long long)h.elements.size());
}

std::vector<Cyclo> sign_on(const Subgroup& h) {
  std::vector<Cyclo> r;
  r.reserve(h.elements.size());
  for (Elt x : h.elements) r.push_back(Cyclo(h.group->length(x) % 2 ? -1 : 1));
  return r;
}

int count_reflections(const Subgroup& h) {
  int c = 0;
  for (int r = 0; r < h.group->num_positive(); ++r) c += h.contains(h.group->reflection(r));
  return c;
}

}  // namespace kcv
