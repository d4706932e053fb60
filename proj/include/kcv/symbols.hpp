#pragma once
#include <utility>
#include <vector>

#include "kcv/coxeter.hpp"
#include "kcv/partitions.hpp"

namespace kcv {

// Two rows of equal length m: lambda_i = alpha_i + i - 1, mu_i = beta_i + i - 1,
// with alpha, beta padded to weakly increasing length-m sequences.
struct Symbol {
  int m = 0;
  std::vector<int> lambda, mu;
};

int min_symbol_length(const BiPartition& ab);
Symbol make_symbol(const BiPartition& ab, int m = 0);  // m = 0: smallest admissible
BiPartition from_symbol(const Symbol& s);

int c_invariant(const BiPartition& ab, int m = 0);
int d0_invariant(const BiPartition& ab, int m = 0);
int a_diamond(const BiPartition& ab, int m = 0);
bool is_diamond_special(const BiPartition& ab, int m = 0);
bool is_preferred_extension(const BiPartition& ab, int m = 0);  // EqualPartsForPreferred if alpha == beta

long long binom(long long a, long long b);  // 0 outside 0 <= b <= a

// sigma_{l,j} in B_n (generator 0 is t)
Elt sigma_lj(const CoxeterGroup& B, int l, int j);

struct InvolutionRep {
  int l = 0, j = 0;
  Elt sigma = 0;
  uint32_t cls = 0;  // ordinary class of B_n
};
std::vector<InvolutionRep> involution_class_reps_Bn(const CoxeterGroup& B);

// coefficient list over bipartitions of n, zero terms omitted
std::vector<std::pair<BiPartition, long long>> closed_form_upsilon(int n, int l, int j);

}  // namespace kcv
