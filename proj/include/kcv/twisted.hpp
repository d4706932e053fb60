#pragma once
#include <string>
#include <vector>

#include "kcv/coxeter.hpp"

namespace kcv {

struct DiagramAutomorphism {
  const CoxeterGroup* group = nullptr;
  std::string kind = "none";  // none | diagram | w0
  std::vector<int> gen_perm;
  std::vector<int> root_perm;
  std::vector<Elt> elt_map;
  int order = 1;
  bool is_ordinary = true;
  Elt operator()(Elt w) const { return elt_map[w]; }
  int root(int r) const { return root_perm[r]; }
  bool trivial() const { return order == 1; }
};

// Validates the generator permutation and derives the root and element maps.
DiagramAutomorphism make_automorphism(const CoxeterGroup& g, const std::vector<int>& gen_perm,
                                      const std::string& kind = "diagram");
DiagramAutomorphism identity_automorphism(const CoxeterGroup& g);
DiagramAutomorphism diagram_automorphism(const CoxeterGroup& g);
DiagramAutomorphism w0_automorphism(const CoxeterGroup& g);
DiagramAutomorphism automorphism_from_twist(const CoxeterGroup& g, const std::string& twist);

struct TwistedClasses {
  std::vector<uint32_t> class_of;
  std::vector<Elt> reps;  // minimal index member
  std::vector<std::vector<Elt>> members;
  std::vector<char> involution;  // class consists of twisted involutions
  std::size_t size() const { return reps.size(); }
  std::vector<uint32_t> involution_classes() const;
};

TwistedClasses twisted_conjugacy_classes(const CoxeterGroup& g, const DiagramAutomorphism& d);
bool is_twisted_involution(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w);
std::vector<Elt> twisted_involutions(const CoxeterGroup& g, const DiagramAutomorphism& d);
std::vector<Elt> twisted_centralizer(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w);

// Ordinary involution classes of W (ids into g.classes()).
std::vector<uint32_t> involution_classes(const CoxeterGroup& g);

Elt parabolic_longest(const CoxeterGroup& g, unsigned mask);

struct MinimalRep {
  unsigned mask = 0;
  Elt w_I = 0;
};
MinimalRep minimal_twisted_rep(const CoxeterGroup& g, const DiagramAutomorphism& d, const TwistedClasses& tc,
                               uint32_t cls);

struct HowlettSplit {
  std::vector<Elt> Y;    // ascending
  std::vector<Elt> W_I;  // ascending
  std::vector<Elt> centralizer;
};
HowlettSplit howlett_split(const CoxeterGroup& g, const DiagramAutomorphism& d, const MinimalRep& rep);

// W~ = W x| <gamma>, elements gamma^e w.
struct ExtElt {
  int e = 0;
  Elt w = 0;
  friend bool operator==(const ExtElt& a, const ExtElt& b) { return a.e == b.e && a.w == b.w; }
};
ExtElt ext_multiply(const CoxeterGroup& g, const DiagramAutomorphism& d, ExtElt a, ExtElt b);
ExtElt ext_inverse(const CoxeterGroup& g, const DiagramAutomorphism& d, ExtElt a);
std::vector<ExtElt> extended_centralizer(const CoxeterGroup& g, const DiagramAutomorphism& d, ExtElt x);

// D_n realised inside B_n, gamma = t.
struct DInB {
  int n = 0;
  GroupPtr D, B;
  DiagramAutomorphism swap;  // u <-> s1 on D
  std::vector<Elt> embed;    // D index -> B index
  std::vector<Elt> restrict_to_D;  // B index -> D index, or D->order() when outside
  Elt t = 0;
  bool in_D(Elt b) const { return restrict_to_D[b] != Elt(D->order()); }
  int length_tilde(Elt b) const { return B->length(b); }
  int t_count(Elt b) const;  // occurrences of t in a reduced word
};
DInB make_d_in_b(int n, std::size_t cap = kDefaultCap);

}  // namespace kcv
