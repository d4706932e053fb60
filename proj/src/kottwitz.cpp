#include "kcv/kottwitz.hpp"

#include <algorithm>

#include "kcv/errors.hpp"

namespace kcv {

int EpsilonCharacter::at(Elt x) const {
  auto it = std::lower_bound(centralizer.begin(), centralizer.end(), x);
  if (it == centralizer.end() || *it != x) throw IndexOutOfRange("element not in the centraliser");
  return values[it - centralizer.begin()];
}

std::vector<int> phi_w(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w) {
  std::vector<int> out;
  for (int a = 0; a < g.num_roots(); ++a)
    if (g.act(w, a) == g.negate(d.root(a))) out.push_back(a);
  return out;
}

static int sign_count(const CoxeterGroup& g, const std::vector<int>& pos, Elt x) {
  int k = 0;
  for (int a : pos)
    if (!g.is_positive(g.act(x, a))) ++k;
  return k & 1 ? -1 : 1;
}

static std::vector<int> positive_phi(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w) {
  std::vector<int> pos;
  for (int a : phi_w(g, d, w))
    if (g.is_positive(a)) pos.push_back(a);
  return pos;
}

std::vector<int> epsilon_by_scan(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w,
                                 const std::vector<Elt>& centralizer) {
  auto pos = positive_phi(g, d, w);
  std::vector<int> v;
  v.reserve(centralizer.size());
  for (Elt x : centralizer) v.push_back(sign_count(g, pos, x));
  return v;
}

EpsilonCharacter epsilon_character(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w) {
  if (!is_twisted_involution(g, d, w)) throw NotTwistedInvolution(g.word_string(w));
  EpsilonCharacter e;
  e.w = w;
  e.centralizer = twisted_centralizer(g, d, w);
  const auto& C = e.centralizer;
  auto pos = positive_phi(g, d, w);
  auto idx = [&](Elt x) { return std::size_t(std::lower_bound(C.begin(), C.end(), x) - C.begin()); };
  std::vector<int> genval;
  std::vector<int> val(C.size(), 0);
  // closure from scratch after every new generator; a clash means the sign is not multiplicative
  auto close = [&]() {
    std::fill(val.begin(), val.end(), 0);
    val[idx(g.identity())] = 1;
    std::vector<Elt> queue{g.identity()};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Elt y = queue[h];
      int vy = val[idx(y)];
      for (std::size_t k = 0; k < e.generators.size(); ++k) {
        Elt z = g.multiply(y, e.generators[k]);
        std::size_t iz = idx(z);
        if (iz >= C.size() || C[iz] != z) throw InternalError("centraliser not closed");
        int vz = vy * genval[k];
        if (val[iz] == 0) {
          val[iz] = vz;
          queue.push_back(z);
        } else if (val[iz] != vz) {
          throw InternalError("eps_w is not multiplicative at " + g.word_string(w));
        }
      }
    }
  };
  close();
  for (std::size_t i = 0; i < C.size(); ++i) {
    if (val[i]) continue;
    e.generators.push_back(C[i]);
    genval.push_back(sign_count(g, pos, C[i]));
    close();
  }
  e.values = val;
  return e;
}

static std::vector<Cyclo> as_cyclo(const std::vector<int>& v) {
  std::vector<Cyclo> out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

KottwitzCharacter upsilon(const CoxeterGroup& g, const DiagramAutomorphism& d, Elt w) {
  auto e = epsilon_character(g, d, w);
  Subgroup h{&g, e.centralizer};
  return {induce(h, as_cyclo(e.values)), "induced-eps"};
}

std::vector<int> minl_signs(const CoxeterGroup& g, const MinimalRep& rep, const HowlettSplit& hs) {
  std::vector<int> v;
  v.reserve(hs.centralizer.size());
  for (Elt c : hs.centralizer) {
    Elt x = c;
    for (bool moved = true; moved;) {
      moved = false;
      for (int s = 0; s < g.rank(); ++s)
        if ((rep.mask >> s & 1) && g.right_descent(x, s)) {
          x = g.rmul(x, s);
          moved = true;
        }
    }
    if (!std::binary_search(hs.Y.begin(), hs.Y.end(), x))
      throw InternalError("coset representative outside Y for " + g.word_string(c));
    v.push_back((g.length(c) - g.length(x)) & 1 ? -1 : 1);
  }
  return v;
}

KottwitzCharacter upsilon_minl(const CoxeterGroup& g, const DiagramAutomorphism& d, const TwistedClasses& tc,
                               uint32_t cls) {
  auto rep = minimal_twisted_rep(g, d, tc, cls);
  auto hs = howlett_split(g, d, rep);
  Subgroup h{&g, hs.centralizer};
  return {induce(h, as_cyclo(minl_signs(g, rep, hs))), "minl-formula"};
}

ClassFunction upsilon_class_sum(const CoxeterGroup& g, const DiagramAutomorphism& d,
                                const std::vector<Elt>& reps) {
  ClassFunction f(g);
  for (Elt w : reps) f += upsilon(g, d, w).chi;
  return f;
}

int SignedPermModule::position(Elt x) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), x);
  if (it == basis.end() || *it != x) return -1;
  return int(it - basis.begin());
}

ClassFunction module_character(const SignedPermModule& m) {
  const CoxeterGroup& g = *m.group;
  const auto& cl = g.classes();
  ClassFunction f(g);
  for (std::size_t c = 0; c < cl.size(); ++c) {
    auto word = g.word(cl.reps[c]);
    long long tr = 0;
    for (uint32_t k = 0; k < m.dim(); ++k) {
      uint32_t p = k;
      int sg = 1;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        sg *= m.sign[*it][p];
        p = m.target[*it][p];
      }
      if (p == k) tr += sg;
    }
    f.values[c] = Cyclo(tr);
  }
  return f;
}

bool satisfies_relations(const SignedPermModule& m) {
  const CoxeterGroup& g = *m.group;
  const int r = g.rank();
  for (int s = 0; s < r; ++s)
    for (int t = s; t < r; ++t) {
      int order = s == t ? 2 : 2 * g.coxeter_matrix()[s][t];  // (st)^m as a word of length 2m
      for (uint32_t k = 0; k < m.dim(); ++k) {
        uint32_t p = k;
        int sg = 1;
        for (int i = 0; i < order; ++i) {
          int a = (i & 1) ? t : s;
          sg *= m.sign[a][p];
          p = m.target[a][p];
        }
        if (p != k || sg != 1) return false;
      }
    }
  return true;
}

SignedPermModule lv_module(const CoxeterGroup& g, const DiagramAutomorphism& d, const TwistedClasses& tc,
                           uint32_t cls) {
  if (cls >= tc.size() || !tc.involution[cls]) throw NotInvolutionClass("not a twisted-involution class");
  SignedPermModule m;
  m.group = &g;
  m.basis = tc.members[cls];
  m.target.assign(g.rank(), std::vector<uint32_t>(m.dim()));
  m.sign.assign(g.rank(), std::vector<int8_t>(m.dim()));
  for (int s = 0; s < g.rank(); ++s) {
    int sd = d.gen_perm[s];
    for (uint32_t k = 0; k < m.dim(); ++k) {
      Elt w = m.basis[k];
      Elt ws = g.rmul(w, s);
      if (g.lmul(w, sd) == ws && g.length(ws) < g.length(w)) {
        m.target[s][k] = k;
        m.sign[s][k] = -1;
      } else {
        int p = m.position(g.lmul(ws, sd));
        if (p < 0) throw InternalError("LV action leaves the class");
        m.target[s][k] = uint32_t(p);
        m.sign[s][k] = 1;
      }
    }
  }
  return m;
}

KottwitzCharacter lv_character(const CoxeterGroup& g, const DiagramAutomorphism& d, const TwistedClasses& tc,
                               uint32_t cls) {
  return {module_character(lv_module(g, d, tc, cls)), "lv-module"};
}

SignedPermModule modified_module_Bn(const DInB& ctx, uint32_t bclass) {
  const CoxeterGroup& B = *ctx.B;
  const auto& cl = B.classes();
  if (bclass >= cl.size()) throw NotInvolutionClass("class id out of range");
  Elt rep = cl.reps[bclass];
  if (B.multiply(rep, rep) != B.identity()) throw NotInvolutionClass(B.word_string(rep));
  SignedPermModule m;
  m.group = &B;
  m.basis = cl.members[bclass];
  m.target.assign(B.rank(), std::vector<uint32_t>(m.dim()));
  m.sign.assign(B.rank(), std::vector<int8_t>(m.dim()));
  for (int s = 0; s < B.rank(); ++s)
    for (uint32_t k = 0; k < m.dim(); ++k) {
      Elt x = m.basis[k];
      Elt xs = B.rmul(x, s);
      // generator 0 is t
      if (s != 0 && B.lmul(x, s) == xs && B.length(xs) < B.length(x)) {
        m.target[s][k] = k;
        m.sign[s][k] = -1;
      } else {
        int p = m.position(B.lmul(xs, s));
        if (p < 0) throw InternalError("modified action leaves the class");
        m.target[s][k] = uint32_t(p);
        m.sign[s][k] = 1;
      }
    }
  return m;
}

ClassFunction modified_upsilon_Bn(const DInB& ctx, uint32_t bclass) {
  return module_character(modified_module_Bn(ctx, bclass));
}

ClassFunction restrict_b_to_d(const DInB& ctx, const ClassFunction& f) {
  if (f.group != ctx.B.get()) throw GroupMismatch("expected a class function of B_n");
  const CoxeterGroup& D = *ctx.D;
  ClassFunction r(D);
  for (std::size_t c = 0; c < D.classes().size(); ++c) r.values[c] = f(ctx.embed[D.classes().reps[c]]);
  return r;
}

ClassFunction tense_sign(const CoxeterGroup& B) {
  std::vector<Cyclo> v;
  v.reserve(B.order());
  for (Elt x = 0; x < B.order(); ++x) {
    int k = 0;
    for (int s : B.word(x))
      if (s != 0) ++k;
    v.emplace_back(k & 1 ? -1 : 1);
  }
  return from_elementwise(B, v);
}

}  // namespace kcv
