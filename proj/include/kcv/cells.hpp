#pragma once
#include <vector>

#include "kcv/classfun.hpp"
#include "kcv/kl.hpp"
#include "kcv/twisted.hpp"

namespace kcv {

struct CellPartition {
  GroupPtr group;
  std::vector<std::vector<Elt>> left_cells;       // ascending members; cells ordered by minimal member
  std::vector<uint32_t> left_of;                  // element -> left cell
  std::vector<std::vector<uint32_t>> left_edges;  // condensed preorder: cell -> cells directly below
  std::vector<std::vector<uint32_t>> two_sided;   // two-sided cell -> left cells, ordered by minimal member
  std::vector<uint32_t> two_sided_of_cell;        // left cell -> two-sided cell
  // per left cell, per generator: dense |cell| x |cell| matrix, column j = image of e_{cell[j]}
  std::vector<std::vector<std::vector<int>>> action;

  std::size_t size() const { return left_cells.size(); }
  int local_index(uint32_t cell, Elt x) const;
  std::vector<Elt> two_sided_members(uint32_t tcell) const;
};

CellPartition left_cells(const KLTable& kl);

// character of the v = 1 specialisation of the cell module
ClassFunction cell_character(const CellPartition& p, uint32_t cell);
std::vector<ClassFunction> cell_characters(const CellPartition& p);

// permutation of left cells induced by the automorphism
std::vector<uint32_t> diamond_on_cells(const CellPartition& p, const DiagramAutomorphism& d);

// L-cells of B_n from the left cells of D_n: Gamma u t Gamma
struct LCells {
  const DInB* ctx = nullptr;
  std::vector<std::vector<Elt>> cells;        // B indices, ascending; same order as the D cells
  std::vector<std::vector<Elt>> two_sided;    // c u tc u ct u tct, by two-sided cell of D
  std::vector<uint32_t> two_sided_of_cell;
  std::vector<ClassFunction> characters;      // induced from D, on B
};
LCells extended_l_cells(const DInB& ctx, const CellPartition& dcells, const DiagramAutomorphism& d,
                        const std::vector<ClassFunction>* dchars = nullptr);

// Ind from D_n to B_n of a class function of D_n.
ClassFunction induce_d_to_b(const DInB& ctx, const ClassFunction& f);

}  // namespace kcv
