#include "kcv/cells.hpp"

#include <algorithm>
#include <numeric>

#include "kcv/errors.hpp"

namespace kcv {

namespace {

// iterative Tarjan; returns component id per vertex (arbitrary numbering)
std::vector<uint32_t> scc(const std::vector<std::vector<Elt>>& adj, uint32_t& ncomp) {
  const std::size_t N = adj.size();
  std::vector<uint32_t> comp(N, uint32_t(-1)), low(N), num(N, uint32_t(-1));
  std::vector<Elt> stack;
  std::vector<char> on(N, 0);
  std::vector<std::pair<Elt, std::size_t>> call;
  uint32_t counter = 0;
  ncomp = 0;
  for (Elt root = 0; root < N; ++root) {
    if (num[root] != uint32_t(-1)) continue;
    call.push_back({root, 0});
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on[root] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < adj[v].size()) {
        Elt u = adj[v][i++];
        if (num[u] == uint32_t(-1)) {
          num[u] = low[u] = counter++;
          stack.push_back(u);
          on[u] = 1;
          call.push_back({u, 0});
        } else if (on[u]) {
          low[v] = std::min(low[v], num[u]);
        }
        continue;
      }
      Elt vv = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[vv]);
      if (low[vv] == num[vv]) {
        while (true) {
          Elt x = stack.back();
          stack.pop_back();
          on[x] = 0;
          comp[x] = ncomp;
          if (x == vv) break;
        }
        ++ncomp;
      }
    }
  }
  return comp;
}

// renumber components by their minimal member
std::vector<uint32_t> canonical(const std::vector<uint32_t>& comp, uint32_t ncomp) {
  std::vector<Elt> minm(ncomp, Elt(-1));
  for (Elt x = 0; x < comp.size(); ++x) minm[comp[x]] = std::min(minm[comp[x]], x);
  std::vector<uint32_t> ord(ncomp);
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](uint32_t a, uint32_t b) { return minm[a] < minm[b]; });
  std::vector<uint32_t> re(ncomp);
  for (uint32_t i = 0; i < ncomp; ++i) re[ord[i]] = i;
  std::vector<uint32_t> out(comp.size());
  for (Elt x = 0; x < comp.size(); ++x) out[x] = re[comp[x]];
  return out;
}

}  // namespace

int CellPartition::local_index(uint32_t cell, Elt x) const {
  const auto& c = left_cells[cell];
  auto it = std::lower_bound(c.begin(), c.end(), x);
  return it != c.end() && *it == x ? int(it - c.begin()) : -1;
}

std::vector<Elt> CellPartition::two_sided_members(uint32_t tc) const {
  std::vector<Elt> out;
  for (uint32_t c : two_sided[tc]) out.insert(out.end(), left_cells[c].begin(), left_cells[c].end());
  std::sort(out.begin(), out.end());
  return out;
}

CellPartition left_cells(const KLTable& kl) {
  const CoxeterGroup& g = kl.group();
  const std::size_t N = g.order();
  const int rank = g.rank();
  // w -> y whenever C_y occurs in C_s C_w
  std::vector<std::vector<Elt>> adj(N);
  for (Elt w = 0; w < N; ++w) {
    for (int s = 0; s < rank; ++s) {
      if (g.left_descent(w, s)) continue;
      adj[w].push_back(g.lmul(w, s));
      for (const auto& me : kl.mu_list(w))
        if (g.left_descent(me.z, s)) adj[w].push_back(me.z);
    }
    std::sort(adj[w].begin(), adj[w].end());
    adj[w].erase(std::unique(adj[w].begin(), adj[w].end()), adj[w].end());
  }
  CellPartition P;
  P.group = kl.group_ptr();
  uint32_t nc = 0;
  auto comp = scc(adj, nc);
  P.left_of = canonical(comp, nc);
  P.left_cells.assign(nc, {});
  for (Elt x = 0; x < N; ++x) P.left_cells[P.left_of[x]].push_back(x);
  P.left_edges.assign(nc, {});
  for (Elt w = 0; w < N; ++w)
    for (Elt y : adj[w])
      if (P.left_of[y] != P.left_of[w]) P.left_edges[P.left_of[w]].push_back(P.left_of[y]);
  for (auto& e : P.left_edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  // two-sided: add the edges transported by inversion
  std::vector<std::vector<Elt>> adj2(N);
  for (Elt w = 0; w < N; ++w) {
    adj2[w].insert(adj2[w].end(), adj[w].begin(), adj[w].end());
    for (Elt y : adj[w]) adj2[g.inverse(w)].push_back(g.inverse(y));
  }
  uint32_t n2 = 0;
  auto comp2 = scc(adj2, n2);
  auto t2 = canonical(comp2, n2);
  P.two_sided.assign(n2, {});
  P.two_sided_of_cell.assign(nc, 0);
  for (uint32_t c = 0; c < nc; ++c) {
    uint32_t t = t2[P.left_cells[c][0]];
    for (Elt x : P.left_cells[c])
      if (t2[x] != t) throw InternalError("two-sided cell is not a union of left cells");
    P.two_sided_of_cell[c] = t;
    P.two_sided[t].push_back(c);
  }
  // v = 1 action matrices
  P.action.assign(nc, {});
  for (uint32_t c = 0; c < nc; ++c) {
    const auto& cell = P.left_cells[c];
    const int m = int(cell.size());
    P.action[c].assign(rank, std::vector<int>(std::size_t(m) * m, 0));
    for (int s = 0; s < rank; ++s) {
      auto& A = P.action[c][s];
      for (int j = 0; j < m; ++j) {
        Elt x = cell[j];
        if (g.left_descent(x, s)) {
          A[std::size_t(j) * m + j] = -1;
          continue;
        }
        A[std::size_t(j) * m + j] += 1;
        int k = P.local_index(c, g.lmul(x, s));
        if (k >= 0) A[std::size_t(k) * m + j] += 1;
        for (const auto& me : kl.mu_list(x)) {
          if (!g.left_descent(me.z, s)) continue;
          int i = P.local_index(c, me.z);
          if (i >= 0) A[std::size_t(i) * m + j] += me.mu;
        }
      }
    }
  }
  return P;
}

ClassFunction cell_character(const CellPartition& p, uint32_t cell) {
  const CoxeterGroup& g = *p.group;
  const auto& cl = g.classes();
  const int m = int(p.left_cells[cell].size());
  const auto& act = p.action[cell];
  // sparse columns: (row, value)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> cols(act.size());
  for (size_t s = 0; s < act.size(); ++s) {
    cols[s].resize(m);
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        if (int v = act[s][std::size_t(k) * m + i]) cols[s][k].push_back({i, v});
  }
  ClassFunction f(g);
  std::vector<long long> vec(m), nxt(m);
  for (size_t c = 0; c < cl.size(); ++c) {
    auto word = g.word(cl.reps[c]);
    long long tr = 0;
    for (int j = 0; j < m; ++j) {
      std::fill(vec.begin(), vec.end(), 0);
      vec[j] = 1;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto& A = cols[*it];
        std::fill(nxt.begin(), nxt.end(), 0);
        for (int k = 0; k < m; ++k) {
          if (!vec[k]) continue;
          for (auto [i, v] : A[k]) nxt[i] += v * vec[k];
        }
        std::swap(vec, nxt);
      }
      tr += vec[j];
    }
    f.values[c] = Cyclo(tr);
  }
  return f;
}

std::vector<ClassFunction> cell_characters(const CellPartition& p) {
  std::vector<ClassFunction> out;
  out.reserve(p.size());
  for (uint32_t c = 0; c < p.size(); ++c) out.push_back(cell_character(p, c));
  return out;
}

std::vector<uint32_t> diamond_on_cells(const CellPartition& p, const DiagramAutomorphism& d) {
  std::vector<uint32_t> perm(p.size());
  for (uint32_t c = 0; c < p.size(); ++c) {
    uint32_t img = p.left_of[d(p.left_cells[c][0])];
    for (Elt x : p.left_cells[c])
      if (p.left_of[d(x)] != img) throw InternalError("automorphism does not map cells to cells");
    perm[c] = img;
  }
  return perm;
}

ClassFunction induce_d_to_b(const DInB& ctx, const ClassFunction& f) {
  std::vector<std::pair<Elt, Elt>> pairs;
  pairs.reserve(ctx.D->order());
  for (Elt w = 0; w < ctx.D->order(); ++w) pairs.push_back({ctx.embed[w], w});
  std::sort(pairs.begin(), pairs.end());
  Subgroup h{ctx.B.get(), {}};
  std::vector<Cyclo> vals;
  for (auto& [b, w] : pairs) {
    h.elements.push_back(b);
    vals.push_back(f(w));
  }
  return induce(h, vals);
}

LCells extended_l_cells(const DInB& ctx, const CellPartition& dc, const DiagramAutomorphism& d,
                        const std::vector<ClassFunction>* dchars) {
  if (d.group != ctx.D.get() || d.trivial() || d.kind != "diagram")
    throw UnsupportedAutomorphism("L-cells need the graph automorphism of D_n realised inside B_n");
  LCells L;
  L.ctx = &ctx;
  const CoxeterGroup& B = *ctx.B;
  for (uint32_t c = 0; c < dc.size(); ++c) {
    std::vector<Elt> cell;
    for (Elt x : dc.left_cells[c]) {
      Elt b = ctx.embed[x];
      cell.push_back(b);
      cell.push_back(B.multiply(ctx.t, b));
    }
    std::sort(cell.begin(), cell.end());
    L.cells.push_back(cell);
    L.characters.push_back(induce_d_to_b(ctx, dchars ? (*dchars)[c] : cell_character(dc, c)));
  }
  // two-sided cells of D up to the automorphism
  auto cperm = diamond_on_cells(dc, d);
  const uint32_t nt = uint32_t(dc.two_sided.size());
  std::vector<uint32_t> tperm(nt);
  for (uint32_t c = 0; c < dc.size(); ++c) tperm[dc.two_sided_of_cell[c]] = dc.two_sided_of_cell[cperm[c]];
  std::vector<uint32_t> orbit_of(nt, uint32_t(-1));
  for (uint32_t t = 0; t < nt; ++t) {
    uint32_t r = std::min(t, tperm[t]);
    if (orbit_of[r] == uint32_t(-1)) {
      orbit_of[r] = uint32_t(L.two_sided.size());
      L.two_sided.push_back({});
    }
    orbit_of[t] = orbit_of[r];
  }
  for (uint32_t t = 0; t < nt; ++t) {
    auto& out = L.two_sided[orbit_of[t]];
    for (Elt x : dc.two_sided_members(t)) {
      Elt b = ctx.embed[x];
      Elt tb = B.multiply(ctx.t, b);
      out.push_back(b);
      out.push_back(tb);
      out.push_back(B.multiply(b, ctx.t));
      out.push_back(B.multiply(tb, ctx.t));
    }
  }
  for (auto& out : L.two_sided) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  L.two_sided_of_cell.resize(dc.size());
  for (uint32_t c = 0; c < dc.size(); ++c) L.two_sided_of_cell[c] = orbit_of[dc.two_sided_of_cell[c]];
  return L;
}

}  // namespace kcv
