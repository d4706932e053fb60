#pragma once
#include <string>
#include <vector>

#include "kcv/classfun.hpp"
#include "kcv/twisted.hpp"

namespace kcv {

// Linear character of the twisted centraliser, parallel to its element list.
struct EpsilonCharacter {
  Elt w = 0;
  std::vector<Elt> centralizer;  // ascending
  std::vector<int> values;       // +1 / -1
  std::vector<Elt> generators;   // used for the multiplicative extension
  int at(Elt x) const;
};

// roots a with w(a) = -a^d
std::vector<int> phi_w(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w);

EpsilonCharacter epsilon_character(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w);
// root count on every centraliser element; debug oracle
std::vector<int> epsilon_by_scan(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w,
                                 const std::vector<Elt>& centralizer);

struct KottwitzCharacter {
  ClassFunction chi;
  std::string method;  // induced-eps | minl-formula | lv-module
};

KottwitzCharacter upsilon(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w);
// sign (-1)^{l(c)-l(x)} on C(w_I), x the minimal coset representative of c W_I
std::vector<int> minl_signs(const CoxeterGroup& g, const MinimalRep& rep, const HowlettSplit& hs);
KottwitzCharacter upsilon_minl(const CoxeterGroup& g, const DiagramAutomorphism& d, const TwistedClasses& tc,
                               uint32_t cls);
ClassFunction upsilon_class_sum(const CoxeterGroup& g, const DiagramAutomorphism& d,
                                const std::vector<Elt>& reps);

// Module with a basis permuted up to sign by each generator.
struct SignedPermModule {
  const CoxeterGroup* group = nullptr;  // the group acting
  std::vector<Elt> basis;               // ascending
  std::vector<std::vector<uint32_t>> target;  // [s][k] -> basis position
  std::vector<std::vector<int8_t>> sign;      // [s][k]
  std::size_t dim() const { return basis.size(); }
  int position(Elt x) const;  // -1 if absent
};

ClassFunction module_character(const SignedPermModule& m);
// s^2 = 1 and (st)^{m_st} = 1 on every basis vector
bool satisfies_relations(const SignedPermModule& m);

SignedPermModule lv_module(const CoxeterGroup& g, const DiagramAutomorphism& d, const TwistedClasses& tc,
                           uint32_t cls);
KottwitzCharacter lv_character(const CoxeterGroup& g, const DiagramAutomorphism& d, const TwistedClasses& tc,
                               uint32_t cls);

// The modified module on an ordinary involution class of B_n (ids into B classes).
SignedPermModule modified_module_Bn(const DInB& ctx, uint32_t bclass);
ClassFunction modified_upsilon_Bn(const DInB& ctx, uint32_t bclass);

// Class function of B_n restricted to the embedded D_n.
ClassFunction restrict_b_to_d(const DInB& ctx, const ClassFunction& f);

// eps'(t) = 1, eps'(s_i) = -1 on B_n
ClassFunction tense_sign(const CoxeterGroup& B);

}  // namespace kcv
