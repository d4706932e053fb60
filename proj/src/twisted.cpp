#include "kcv/twisted.hpp"

#include <algorithm>
#include <numeric>

#include "kcv/errors.hpp"

namespace kcv {

DiagramAutomorphism make_automorphism(const CoxeterGroup& g, const std::vector<int>& p, const std::string& kind) {
  const int r = g.rank();
  if (int(p.size()) != r) throw UnsupportedAutomorphism("permutation size");
  std::vector<int> chk(p);
  std::sort(chk.begin(), chk.end());
  for (int i = 0; i < r; ++i)
    if (chk[i] != i) throw UnsupportedAutomorphism("not a permutation of S");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (g.coxeter_matrix()[p[i]][p[j]] != g.coxeter_matrix()[i][j])
        throw UnsupportedAutomorphism("does not preserve the Coxeter matrix");
  for (int i = 0; i < r; ++i)
    if (p[p[i]] != i) throw UnsupportedAutomorphism("only automorphisms of order <= 2 are supported");
  DiagramAutomorphism d;
  d.group = &g;
  d.gen_perm = p;
  d.order = 1;
  for (int i = 0; i < r; ++i)
    if (p[i] != i) d.order = 2;
  d.kind = d.order == 1 ? "none" : kind;
  d.is_ordinary = true;
  for (int i = 0; i < r; ++i)
    if (p[i] != i && g.coxeter_matrix()[i][p[i]] > 3) d.is_ordinary = false;

  // roots: alpha_s -> alpha_{s*}, then s(b) -> s*(b*)
  const int R = g.num_roots();
  d.root_perm.assign(R, -1);
  std::vector<int> q;
  for (int s = 0; s < r; ++s) {
    d.root_perm[g.simple_root(s)] = g.simple_root(p[s]);
    q.push_back(g.simple_root(s));
  }
  Elt gens[64];
  for (int s = 0; s < r; ++s) gens[s] = g.generator(s);
  for (size_t i = 0; i < q.size(); ++i)
    for (int s = 0; s < r; ++s) {
      int b = g.act(gens[s], q[i]);
      if (d.root_perm[b] != -1) continue;
      d.root_perm[b] = g.act(gens[p[s]], d.root_perm[q[i]]);
      q.push_back(b);
    }
  for (int k = 0; k < R; ++k)
    if (d.root_perm[k] < 0) throw UnsupportedAutomorphism("root map incomplete");
  for (int s = 0; s < r; ++s)
    for (int k = 0; k < R; ++k)
      if (d.root_perm[g.act(gens[s], k)] != g.act(gens[p[s]], d.root_perm[k]))
        throw UnsupportedAutomorphism("generator permutation does not extend to the roots");

  const std::size_t N = g.order();
  d.elt_map.assign(N, 0);
  for (Elt w = 1; w < N; ++w) {
    int s = g.last_letter(w);
    d.elt_map[w] = g.rmul(d.elt_map[g.rmul(w, s)], p[s]);
  }
  return d;
}

DiagramAutomorphism identity_automorphism(const CoxeterGroup& g) {
  std::vector<int> p(g.rank());
  std::iota(p.begin(), p.end(), 0);
  return make_automorphism(g, p, "none");
}

DiagramAutomorphism diagram_automorphism(const CoxeterGroup& g) {
  const int r = g.rank();
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  switch (g.series()) {
    case Series::A:
      if (r < 2) throw UnsupportedAutomorphism("A1 has no nontrivial diagram automorphism");
      for (int i = 0; i < r; ++i) p[i] = r - 1 - i;
      break;
    case Series::B:
      throw UnsupportedAutomorphism("B_n has no nontrivial diagram automorphism");
    case Series::D:
    case Series::I2:
      std::swap(p[0], p[1]);
      break;
    case Series::F4:
      p = {3, 2, 1, 0};
      break;
  }
  return make_automorphism(g, p, "diagram");
}

DiagramAutomorphism w0_automorphism(const CoxeterGroup& g) {
  const int r = g.rank();
  Elt w0 = g.longest();
  std::vector<int> p(r, -1);
  for (int s = 0; s < r; ++s) {
    Elt c = g.multiply(g.multiply(w0, g.generator(s)), w0);
    for (int t = 0; t < r; ++t)
      if (g.generator(t) == c) p[s] = t;
    if (p[s] < 0) throw InternalError("w0 conjugation does not preserve S");
  }
  bool central = true;
  for (int s = 0; s < r; ++s)
    if (p[s] != s) central = false;
  if (central) throw UnsupportedAutomorphism("w0 is central in " + g.name());
  return make_automorphism(g, p, "w0");
}

DiagramAutomorphism automorphism_from_twist(const CoxeterGroup& g, const std::string& twist) {
  if (twist == "none") return identity_automorphism(g);
  if (twist == "diagram") return diagram_automorphism(g);
  if (twist == "w0") return w0_automorphism(g);
  throw UnsupportedAutomorphism("unknown twist '" + twist + "'");
}

std::vector<uint32_t> TwistedClasses::involution_classes() const {
  std::vector<uint32_t> r;
  for (uint32_t c = 0; c < reps.size(); ++c)
    if (involution[c]) r.push_back(c);
  return r;
}

bool is_twisted_involution(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w) {
  return d(w) == g.inverse(w);
}

TwistedClasses twisted_conjugacy_classes(const CoxeterGroup& g, const DiagramAutomorphism& d) {
  const std::size_t N = g.order();
  TwistedClasses tc;
  tc.class_of.assign(N, uint32_t(-1));
  for (Elt w = 0; w < N; ++w) {
    if (tc.class_of[w] != uint32_t(-1)) continue;
    uint32_t c = uint32_t(tc.reps.size());
    tc.reps.push_back(w);
    std::vector<Elt> orbit{w};
    tc.class_of[w] = c;
    for (size_t i = 0; i < orbit.size(); ++i)
      for (int s = 0; s < g.rank(); ++s) {
        Elt x = g.lmul(g.rmul(orbit[i], s), d.gen_perm[s]);
        if (tc.class_of[x] == uint32_t(-1)) {
          tc.class_of[x] = c;
          orbit.push_back(x);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    bool inv = is_twisted_involution(g, d, w);
    for (Elt x : orbit)
      if (is_twisted_involution(g, d, x) != inv) throw InternalError("twisted involutions not a union of classes");
    tc.involution.push_back(inv);
    tc.members.push_back(std::move(orbit));
  }
  return tc;
}

std::vector<Elt> twisted_involutions(const CoxeterGroup& g, const DiagramAutomorphism& d) {
  std::vector<Elt> r;
  for (Elt w = 0; w < g.order(); ++w)
    if (is_twisted_involution(g, d, w)) r.push_back(w);
  return r;
}

std::vector<Elt> twisted_centralizer(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w) {
  std::vector<Elt> r;
  for (Elt x = 0; x < g.order(); ++x)
    if (g.multiply(d(x), w) == g.multiply(w, x)) r.push_back(x);
  return r;
}

std::vector<uint32_t> involution_classes(const CoxeterGroup& g) {
  std::vector<uint32_t> r;
  const auto& cl = g.classes();
  for (uint32_t c = 0; c < cl.size(); ++c)
    if (g.multiply(cl.reps[c], cl.reps[c]) == 0) r.push_back(c);
  return r;
}

Elt parabolic_longest(const CoxeterGroup& g, unsigned mask) {
  Elt x = 0;
  for (bool grew = true; grew;) {
    grew = false;
    for (int s = 0; s < g.rank(); ++s)
      if ((mask >> s & 1) && !g.right_descent(x, s)) {
        x = g.rmul(x, s);
        grew = true;
      }
  }
  return x;
}

static std::vector<unsigned> canonical_subsets(int r) {
  std::vector<unsigned> v;
  for (unsigned m = 0; m < (1u << r); ++m) v.push_back(m);
  auto bits = [](unsigned m) {
    std::vector<int> b;
    for (int i = 0; m; ++i, m >>= 1)
      if (m & 1) b.push_back(i);
    return b;
  };
  std::sort(v.begin(), v.end(), [&](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return bits(a) < bits(b);
  });
  return v;
}

MinimalRep minimal_twisted_rep(const CoxeterGroup& g, const DiagramAutomorphism& d, const TwistedClasses& tc,
                               uint32_t cls) {
  if (cls >= tc.size() || !tc.involution[cls]) throw NotInvolutionClass("class " + std::to_string(cls));
  int minlen = 1 << 30;
  for (Elt x : tc.members[cls]) minlen = std::min(minlen, g.length(x));
  for (unsigned mask : canonical_subsets(g.rank())) {
    unsigned img = 0;
    for (int s = 0; s < g.rank(); ++s)
      if (mask >> s & 1) img |= 1u << d.gen_perm[s];
    if (img != mask) continue;
    Elt wI = parabolic_longest(g, mask);
    if (tc.class_of[wI] != cls) continue;
    bool ok = true;
    for (int s = 0; s < g.rank() && ok; ++s)
      if (mask >> s & 1) ok = g.lmul(wI, d.gen_perm[s]) == g.rmul(wI, s);
    if (!ok) continue;
    if (g.length(wI) != minlen) throw InternalError("w_I not of minimal length in its class");
    return MinimalRep{mask, wI};
  }
  throw InternalError("no parabolic representative found for class " + std::to_string(cls));
}

HowlettSplit howlett_split(const CoxeterGroup& g, const DiagramAutomorphism& d, const MinimalRep& rep) {
  HowlettSplit h;
  h.centralizer = twisted_centralizer(g, d, rep.w_I);
  h.W_I = g.parabolic(rep.mask).elements;
  std::vector<int> pi;
  for (int s = 0; s < g.rank(); ++s)
    if (rep.mask >> s & 1) pi.push_back(g.simple_root(s));
  std::vector<int> sorted_pi = pi;
  std::sort(sorted_pi.begin(), sorted_pi.end());
  for (Elt y : h.centralizer) {
    std::vector<int> im;
    for (int a : pi) im.push_back(g.act(y, a));
    std::sort(im.begin(), im.end());
    if (im == sorted_pi) h.Y.push_back(y);
  }
  return h;
}

ExtElt ext_multiply(const CoxeterGroup& g, const DiagramAutomorphism& d, ExtElt a, ExtElt b) {
  Elt w = b.e ? d(a.w) : a.w;
  return ExtElt{(a.e + b.e) & 1, g.multiply(w, b.w)};
}

ExtElt ext_inverse(const CoxeterGroup& g, const DiagramAutomorphism& d, ExtElt a) {
  // (gamma^e w)^-1 = w^-1 gamma^e = gamma^e (w^-1)^{diamond^e}
  Elt wi = g.inverse(a.w);
  return ExtElt{a.e, a.e ? d(wi) : wi};
}

std::vector<ExtElt> extended_centralizer(const CoxeterGroup& g, const DiagramAutomorphism& d, ExtElt x) {
  std::vector<ExtElt> r;
  for (int e = 0; e < d.order; ++e)
    for (Elt w = 0; w < g.order(); ++w) {
      ExtElt y{e, w};
      if (ext_multiply(g, d, y, x) == ext_multiply(g, d, x, y)) r.push_back(y);
    }
  return r;
}

int DInB::t_count(Elt b) const {
  int c = 0;
  for (int s : B->word(b)) c += s == 0;
  return c;
}

DInB make_d_in_b(int n, std::size_t cap) {
  DInB x;
  x.n = n;
  x.D = build_group(Series::D, n, cap);
  x.B = build_group(Series::B, n, cap);
  x.swap = diagram_automorphism(*x.D);
  x.t = x.B->generator(0);
  std::vector<Elt> img(n);
  img[0] = x.B->from_word({0, 1, 0});
  for (int i = 1; i < n; ++i) img[i] = x.B->generator(i);
  const std::size_t N = x.D->order();
  x.embed.assign(N, 0);
  x.restrict_to_D.assign(x.B->order(), Elt(N));
  for (Elt w = 1; w < N; ++w) {
    int s = x.D->last_letter(w);
    x.embed[w] = x.B->multiply(x.embed[x.D->rmul(w, s)], img[s]);
  }
  for (Elt w = 0; w < N; ++w) {
    if (x.restrict_to_D[x.embed[w]] != Elt(N)) throw InternalError("D_n embedding not injective");
    x.restrict_to_D[x.embed[w]] = w;
  }
  return x;
}

}  // namespace kcv
