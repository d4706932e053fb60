#pragma once
#include <memory>
#include <string>
#include <vector>

#include "kcv/classfun.hpp"
#include "kcv/partitions.hpp"
#include "kcv/twisted.hpp"

namespace kcv {

struct CharLabel {
  std::string name;
  Partition alpha, beta;  // A: alpha only; B and D: the pair
  int split = 0;          // D, alpha == beta: +1 or -1
};

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> rows;
  std::vector<CharLabel> labels;
  std::vector<int> b;

  std::size_t size() const { return rows.size(); }
  long long degree(std::size_t i) const { return rows[i].values[0].to_integer(); }
  int find(const std::string& name) const;  // IndexOutOfRange if absent
  int find_pair(const Partition& a, const Partition& b) const;  // B: exact; D: unordered, non-split
  int find_split(const Partition& a, int sign) const;
  int row_of(const ClassFunction& chi) const;  // -1 if not a row
  std::vector<long long> decompose(const ClassFunction& chi) const;  // InternalError if not integral
  std::string format(const std::vector<long long>& mult) const;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Cached per group; rows in canonical label order.
TablePtr character_table(const GroupPtr& g);

// Smallest symmetric power of the reflection representation containing chi.
int b_invariant(const ClassFunction& chi);

// Unique constituent of Ind_H(sign) with b = #reflections of H.
int j_induce(const CharacterTable& t, const Subgroup& h);

// Subgroup of B_n of type D_{a_1} x ... x B_{b_1} x ... on consecutive coordinates.
Subgroup db_reflection_subgroup(const CoxeterGroup& B, const Partition& dparts, const Partition& bparts);
// Young subgroup of the chain generated by the given generator list.
Subgroup young_subgroup(const CoxeterGroup& g, const std::vector<int>& chain, const Partition& blocks);

// Embedding u -> t s1 t of D_n into B_n, as D index -> B index.
std::vector<Elt> embed_d_into_b(const CoxeterGroup& D, const CoxeterGroup& B);

struct SplitResolution {
  int plus = -1, minus = -1;  // rows
  long long difference = 0;   // chi+(sigma) - chi-(sigma)
  long long expected = 0;     // (-1)^{n/2} 2^{n/2} chi^alpha(1)
};
SplitResolution resolve_split_pair(const CharacterTable& d, const Partition& alpha);
Elt sigma_half(const CoxeterGroup& D);  // s1 s3 ... s_{n-1}

long long hook_dimension(const Partition& a);

std::vector<int> diamond_on_characters(const CharacterTable& t, const DiagramAutomorphism& d);
std::vector<int> irr_diamond(const CharacterTable& t, const DiagramAutomorphism& d);

}  // namespace kcv
