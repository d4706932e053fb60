#include <algorithm>
#include <map>

#include "doctest.h"
#include "kcv/cells.hpp"
#include "kcv/characters.hpp"
#include "kcv/errors.hpp"
#include "kcv/kl.hpp"

using namespace kcv;

namespace {

using Poly = std::vector<long long>;

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

void add_to(Poly& a, const Poly& b, long long c = 1, int shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += c * b[i];
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Slow oracle: R-polynomials, then P from the bar-invariance condition plus the degree bound.
struct SlowKL {
  const CoxeterGroup& g;
  std::size_t n;
  std::vector<Poly> R, P;  // [w * n + y]
  explicit SlowKL(const CoxeterGroup& G) : g(G), n(G.order()), R(n * n), P(n * n) {
    std::vector<Elt> by_len(n);
    for (Elt w = 0; w < n; ++w) by_len[w] = w;
    std::stable_sort(by_len.begin(), by_len.end(), [&](Elt a, Elt b) { return g.length(a) < g.length(b); });
    for (Elt w : by_len) {
      if (w == g.identity()) {
        R[0] = {1};
        continue;
      }
      int s = 0;
      while (!g.right_descent(w, s)) ++s;
      Elt ws = g.rmul(w, s);
      for (Elt y = 0; y < n; ++y) {
        Elt ys = g.rmul(y, s);
        if (g.length(ys) < g.length(y)) {
          R[w * n + y] = R[ws * n + ys];
        } else {
          Poly r;
          add_to(r, R[ws * n + y], 1, 1);
          add_to(r, R[ws * n + y], -1, 0);
          add_to(r, R[ws * n + ys], 1, 1);
          R[w * n + y] = trim(r);
        }
      }
    }
    for (Elt w : by_len) {
      std::vector<Elt> below;
      for (Elt y = 0; y < n; ++y)
        if (!R[w * n + y].empty()) below.push_back(y);
      std::sort(below.begin(), below.end(), [&](Elt a, Elt b) { return g.length(a) > g.length(b); });
      for (Elt y : below) {
        if (y == w) {
          P[w * n + y] = {1};
          continue;
        }
        Poly rhs;
        for (Elt x : below)
          if (x != y && !R[x * n + y].empty() && !P[w * n + x].empty())
            add_to(rhs, mul(R[x * n + y], P[w * n + x]));
        int L = g.length(w) - g.length(y);
        Poly p;
        for (int i = 0; 2 * i <= L - 1 && i < int(rhs.size()); ++i) {
          p.resize(i + 1, 0);
          p[i] = -rhs[i];
        }
        P[w * n + y] = trim(p);
      }
    }
  }
};

}  // namespace

TEST_CASE("KL polynomials against the slow oracle") {
  for (auto [s, k] : std::vector<std::pair<Series, int>>{{Series::A, 3}, {Series::B, 3}, {Series::D, 4},
                                                          {Series::I2, 6}, {Series::A, 4}}) {
    auto g = build_group(s, k);
    CAPTURE(g->name());
    auto kl = KLTable::compute(g);
    SlowKL slow(*g);
    bool ok = true, nontrivial = false;
    for (Elt w = 0; w < g->order(); ++w)
      for (Elt y = 0; y < g->order(); ++y) {
        ok &= kl->poly_q(y, w) == slow.P[w * g->order() + y];
        nontrivial |= kl->poly_q(y, w).size() > 1;
      }
    CHECK(ok);
    CHECK(nontrivial == (s != Series::I2));
  }
}

TEST_CASE("KL table invariants") {
  auto g = build_group(Series::D, 4);
  auto kl = KLTable::compute(g);
  bool ok = true;
  for (Elt w = 0; w < g->order(); ++w) {
    ok &= kl->poly_q(w, w) == QPoly{1};
    ok &= kl->kl_polynomial(w, w) == LaurentPoly(1);
    for (Elt y = 0; y < g->order(); ++y) {
      const auto& p = kl->poly_q(y, w);
      ok &= kl->nonzero(y, w) == g->bruhat_leq(y, w);
      for (long long c : p) ok &= c >= 0;
      if (y != w && !p.empty()) ok &= 2 * (int(p.size()) - 1) <= g->length(w) - g->length(y) - 1;
      ok &= kl->mu(y, w) == kl->mu(w, y);
    }
    for (auto& e : kl->mu_list(w)) ok &= e.mu == kl->mu(e.z, w) && e.mu != 0 && e.z < w;
  }
  CHECK(ok);
  for (Elt w = 0; w < g->order(); w += 13)
    for (Elt y = 0; y < g->order(); y += 5) CHECK(kl->recompute(y, w) == kl->poly_q(y, w));
  auto copy = KLTable::from_entries(g, kl->entries());
  bool same = true;
  for (Elt w = 0; w < g->order(); ++w)
    for (Elt y = 0; y < g->order(); ++y) same &= copy->poly_q(y, w) == kl->poly_q(y, w);
  CHECK(same);
  CHECK_THROWS_AS(KLTable::compute(g, 100), CapExceeded);
}

TEST_CASE("dihedral polynomials are trivial") {
  for (int m : {5, 8}) {
    auto g = build_group(Series::I2, m);
    auto kl = KLTable::compute(g);
    for (Elt w = 0; w < g->order(); ++w)
      for (Elt y = 0; y < g->order(); ++y)
        if (g->bruhat_leq(y, w)) CHECK(kl->poly_q(y, w) == QPoly{1});
  }
}

TEST_CASE("dihedral left cells") {
  for (int m = 2; m <= 6; ++m) {
    auto g = build_group(Series::I2, 2 * m);
    auto cp = left_cells(*KLTable::compute(g));
    REQUIRE(cp.size() == 4);
    CHECK(cp.left_cells.front() == std::vector<Elt>{g->identity()});
    CHECK(cp.left_cells[cp.left_of[g->longest()]] == std::vector<Elt>{g->longest()});
    auto chars = cell_characters(cp);
    CHECK(chars[0] == trivial_character(*g));
    CHECK(chars[cp.left_of[g->longest()]] == sign_character(*g));
    for (int s = 0; s < 2; ++s) {
      uint32_t c = cp.left_of[g->generator(s)];
      CHECK(cp.left_cells[c].size() == std::size_t(2 * m - 1));
      for (Elt x : cp.left_cells[c]) CHECK((g->right_descent(x, s) && !g->right_descent(x, 1 - s)));
      // cell plus {w0} spans a left ideal isomorphic to Ind from <s> of the sign
      Subgroup h{g.get(), {g->identity(), g->generator(s)}};
      CHECK(chars[c] + sign_character(*g) == induce(h, {Cyclo(1), Cyclo(-1)}));
    }
    // the cell whose right descent is the generator 0 carries eps2
    auto t = character_table(g);
    auto mult = t->decompose(chars[cp.left_of[g->generator(0)]]);
    CHECK(mult[t->find("eps2")] == 1);
    CHECK(mult[t->find("eps1")] == 0);
    for (int j = 1; j < m; ++j) CHECK(mult[t->find("chi_" + std::to_string(j))] == 1);
  }
}

TEST_CASE("cell characters and the automorphism") {
  for (auto [s, k] : std::vector<std::pair<Series, int>>{{Series::A, 3}, {Series::B, 3}, {Series::D, 4},
                                                          {Series::I2, 7}}) {
    auto g = build_group(s, k);
    CAPTURE(g->name());
    auto cp = left_cells(*KLTable::compute(g));
    auto chars = cell_characters(cp);
    ClassFunction sum(*g);
    std::size_t total = 0;
    for (std::size_t c = 0; c < cp.size(); ++c) {
      sum += chars[c];
      total += cp.left_cells[c].size();
      CHECK(chars[c].degree() == Cyclo((long long)cp.left_cells[c].size()));
    }
    CHECK(total == g->order());
    CHECK(sum == regular_character(*g));
    auto id = diamond_on_cells(cp, identity_automorphism(*g));
    for (std::size_t c = 0; c < id.size(); ++c) CHECK(id[c] == c);
    // two-sided cells are unions of left cells
    std::size_t ts = 0;
    for (auto& t : cp.two_sided) ts += t.size();
    CHECK(ts == cp.size());
  }
  auto g = build_group(Series::D, 4);
  auto cp = left_cells(*KLTable::compute(g));
  auto chars = cell_characters(cp);
  auto t = character_table(g);
  auto d = diagram_automorphism(*g);
  auto p = diamond_on_cells(cp, d);
  auto pc = diamond_on_characters(*t, d);
  for (std::size_t c = 0; c < cp.size(); ++c) {
    auto m = t->decompose(chars[c]);
    auto mp = t->decompose(chars[p[c]]);
    bool has_split = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(mp[pc[i]] == m[i]);
      has_split |= m[i] && t->labels[i].split;
    }
    if (!has_split) CHECK(chars[p[c]] == chars[c]);
    if (has_split) CHECK(p[c] != c);
  }
  CHECK(p[0] == 0u);
  CHECK(p[cp.left_of[g->longest()]] == cp.left_of[g->longest()]);
}

TEST_CASE("L-cells of B from the cells of D") {
  for (int n = 2; n <= 4; ++n) {
    auto ctx = make_d_in_b(n);
    auto cp = left_cells(*KLTable::compute(ctx.D));
    auto lc = extended_l_cells(ctx, cp, ctx.swap);
    CHECK(lc.cells.size() == cp.size());
    std::vector<int> cover(ctx.B->order(), 0);
    for (std::size_t c = 0; c < lc.cells.size(); ++c) {
      CHECK(lc.cells[c].size() == 2 * cp.left_cells[c].size());
      for (Elt x : lc.cells[c]) ++cover[x];
      CHECK(lc.characters[c] == induce_d_to_b(ctx, cell_character(cp, c)));
    }
    CHECK(std::all_of(cover.begin(), cover.end(), [](int v) { return v == 1; }));
  }
  auto ctx = make_d_in_b(3);
  auto cp = left_cells(*KLTable::compute(ctx.D));
  CHECK_THROWS_AS(extended_l_cells(ctx, cp, identity_automorphism(*ctx.D)), UnsupportedAutomorphism);
}
