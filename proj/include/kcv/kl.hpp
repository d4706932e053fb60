#pragma once
#include <memory>
#include <vector>

#include "kcv/coxeter.hpp"
#include "kcv/laurent.hpp"

namespace kcv {

// Dense (y,w) tables are quadratic in |W|; beyond this they stop being desk scale.
constexpr std::size_t kKLCap = 4000;

using QPoly = std::vector<long long>;  // coefficients in q = v^2, low degree first, no trailing zeros

struct MuEntry {
  Elt z;
  int mu;
};

class KLTable {
 public:
  static std::shared_ptr<const KLTable> compute(const GroupPtr& g, std::size_t cap = kKLCap);
  // table from explicit nonzero entries (cache loading); y == w entries may be omitted
  struct Entry {
    Elt y, w;
    QPoly p;
  };
  static std::shared_ptr<const KLTable> from_entries(const GroupPtr& g, const std::vector<Entry>& entries);
  // ids[tri(w) + y] for y <= w, into store; store[0] = 0, store[1] = 1.
  // A parser that already built the mu lists passes them and skips the id scan.
  static std::shared_ptr<const KLTable> from_interned(const GroupPtr& g, std::vector<uint32_t> ids,
                                                      std::vector<QPoly> store,
                                                      std::vector<std::vector<MuEntry>> mu = {});

  const CoxeterGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  const QPoly& poly_q(Elt y, Elt w) const { return store_[poly_id(y, w)]; }
  bool nonzero(Elt y, Elt w) const { return poly_id(y, w) != 0; }
  LaurentPoly kl_polynomial(Elt y, Elt w) const { return LaurentPoly::from_q(poly_q(y, w)); }
  // coefficient of the top permitted degree; symmetric in its arguments
  int mu(Elt y, Elt w) const;
  const std::vector<MuEntry>& mu_list(Elt w) const { return mu_[w]; }  // z < w, mu(z,w) != 0

  std::vector<Entry> entries() const;  // nonzero, sorted by (y, w)
  std::size_t distinct_polynomials() const { return store_.size(); }
  const std::vector<QPoly>& polynomials() const { return store_; }
  uint32_t poly_id(Elt y, Elt w) const { return y > w ? 0 : id_[tri(w) + y]; }
  // lower triangle, row w holds y = 0..w
  static std::size_t tri(Elt w) { return std::size_t(w) * (std::size_t(w) + 1) / 2; }

  // recompute one entry from the recursion using the stored table
  QPoly recompute(Elt y, Elt w) const;

 private:
  KLTable() = default;
  void finish();
  uint32_t intern(const QPoly& p);

  GroupPtr group_;
  std::size_t n_ = 0;
  std::vector<uint32_t> id_;
  std::vector<QPoly> store_;
  std::vector<std::vector<MuEntry>> mu_;
};

using KLPtr = std::shared_ptr<const KLTable>;

}  // namespace kcv
