#pragma once
#include <vector>

#include "kcv/coxeter.hpp"
#include "kcv/cyclo.hpp"

namespace kcv {

// Values indexed by the canonical class order of the group.
struct ClassFunction {
  const CoxeterGroup* group = nullptr;
  std::vector<Cyclo> values;

  ClassFunction() = default;
  ClassFunction(const CoxeterGroup& g) : group(&g), values(g.classes().size(), Cyclo(0)) {}
  ClassFunction(const CoxeterGroup& g, std::vector<Cyclo> v) : group(&g), values(std::move(v)) {}

  const Cyclo& at_class(std::size_t c) const { return values[c]; }
  const Cyclo& operator()(Elt w) const { return values[group->classes().class_of[w]]; }
  Cyclo degree() const { return values[0]; }  // class 0 holds the identity

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Cyclo& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group == b.group && a.values == b.values;
  }
};

ClassFunction from_elementwise(const CoxeterGroup& g, const std::vector<Cyclo>& per_element);
ClassFunction from_integer_values(const CoxeterGroup& g, const std::vector<long long>& per_class);
ClassFunction trivial_character(const CoxeterGroup& g);
ClassFunction sign_character(const CoxeterGroup& g);
ClassFunction reflection_character(const CoxeterGroup& g);
ClassFunction regular_character(const CoxeterGroup& g);

Cyclo scalar_product(const ClassFunction& a, const ClassFunction& b);
long long int_scalar_product(const ClassFunction& a, const ClassFunction& b);  // throws unless integral
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);

// A subgroup given by an explicit element list; class functions on it are
// stored elementwise, parallel to the list.
struct Subgroup {
  const CoxeterGroup* group = nullptr;
  std::vector<Elt> elements;  // ascending
  bool contains(Elt w) const;
};

Subgroup generate_subgroup(const CoxeterGroup& g, const std::vector<Elt>& gens);
Subgroup make_subgroup(const CoxeterGroup& g, std::vector<Elt> elements);

ClassFunction induce(const Subgroup& h, const std::vector<Cyclo>& psi);
std::vector<Cyclo> restrict_to(const ClassFunction& chi, const Subgroup& h);
Cyclo scalar_product(const Subgroup& h, const std::vector<Cyclo>& a, const std::vector<Cyclo>& b);
std::vector<Cyclo> sign_on(const Subgroup& h);  // restriction of the sign of W
int count_reflections(const Subgroup& h);

}  // namespace kcv
