#include "kcv/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "kcv/errors.hpp"

namespace kcv {

namespace {

using u64 = uint64_t;

struct ModP {
  u64 p;
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  long long sym(u64 a) const { return a > p / 2 ? (long long)a - (long long)p : (long long)a; }
};

bool is_prime(u64 x) {
  if (x < 2) return false;
  for (u64 d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// characteristic polynomial, low degree first, via Hessenberg reduction
std::vector<u64> charpoly(std::vector<std::vector<u64>> H, const ModP& F) {
  const int n = int(H.size());
  for (int m = 1; m + 1 < n; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (H[i][m - 1]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != m) {
      std::swap(H[piv], H[m]);
      for (int i = 0; i < n; ++i) std::swap(H[i][piv], H[i][m]);
    }
    u64 iv = F.inv(H[m][m - 1]);
    for (int i = m + 1; i < n; ++i) {
      if (!H[i][m - 1]) continue;
      u64 u = F.mul(H[i][m - 1], iv);
      for (int j = 0; j < n; ++j) H[i][j] = F.sub(H[i][j], F.mul(u, H[m][j]));
      for (int j = 0; j < n; ++j) H[j][m] = F.add(H[j][m], F.mul(u, H[j][i]));
    }
  }
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<u64> q(m + 1, 0);
    for (int k = 0; k < m; ++k) {
      q[k + 1] = F.add(q[k + 1], P[m - 1][k]);
      q[k] = F.sub(q[k], F.mul(H[m - 1][m - 1], P[m - 1][k]));
    }
    u64 t = 1;
    for (int i = 1; i < m; ++i) {
      t = F.mul(t, H[m - i][m - i - 1]);
      u64 f = F.mul(H[m - i - 1][m - 1], t);
      for (size_t k = 0; k < P[m - i - 1].size(); ++k) q[k] = F.sub(q[k], F.mul(f, P[m - i - 1][k]));
    }
    P[m] = q;
  }
  return P[n];
}

// one-dimensional kernel of B, or empty if the nullity differs from 1
std::vector<u64> null_vector(std::vector<std::vector<u64>> B, const ModP& F) {
  const int n = int(B.size());
  std::vector<int> pivcol;
  int row = 0;
  std::vector<int> where(n, -1);
  for (int c = 0; c < n && row < n; ++c) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (B[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(B[piv], B[row]);
    u64 iv = F.inv(B[row][c]);
    for (int j = 0; j < n; ++j) B[row][j] = F.mul(B[row][j], iv);
    for (int i = 0; i < n; ++i)
      if (i != row && B[i][c]) {
        u64 f = B[i][c];
        for (int j = 0; j < n; ++j) B[i][j] = F.sub(B[i][j], F.mul(f, B[row][j]));
      }
    where[c] = row++;
  }
  if (row != n - 1) return {};
  int freec = -1;
  for (int c = 0; c < n; ++c)
    if (where[c] < 0) freec = c;
  std::vector<u64> v(n, 0);
  v[freec] = 1;
  for (int c = 0; c < n; ++c)
    if (where[c] >= 0) v[c] = F.sub(0, B[where[c]][freec]);
  return v;
}

// Dixon's method over F_p; integer rows, unordered
std::vector<std::vector<long long>> dixon(const CoxeterGroup& g) {
  const auto& cl = g.classes();
  const int r = int(cl.size());
  const u64 N = g.order();
  u64 p = std::max<u64>(2 * N + 2, 1u << 20);
  while (!is_prime(p)) ++p;
  ModP F{p};
  std::vector<uint32_t> A(std::size_t(r) * r * r, 0);
  for (int k = 0; k < r; ++k) {
    Elt z = cl.reps[k];
    for (Elt x = 0; x < N; ++x) {
      int j = cl.class_of[x];
      int i = cl.class_of[g.multiply(g.inverse(x), z)];
      ++A[(std::size_t(k) * r + j) * r + i];
    }
  }
  std::vector<int> kinv(r);
  for (int k = 0; k < r; ++k) kinv[k] = cl.class_of[g.inverse(cl.reps[k])];
  std::mt19937_64 rng(0x6b6376);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<u64> c(r);
    for (auto& x : c) x = rng() % p;
    std::vector<std::vector<u64>> M(r, std::vector<u64>(r, 0));
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j) {
        if (!c[j]) continue;
        const uint32_t* a = &A[(std::size_t(k) * r + j) * r];
        for (int i = 0; i < r; ++i)
          if (a[i]) M[i][k] = F.add(M[i][k], F.mul(c[j], a[i]));
      }
    auto cp = charpoly(M, F);
    std::vector<u64> roots;
    for (u64 x = 0; x < p && int(roots.size()) < r; ++x) {
      u64 v = 0;
      for (int k = r; k >= 0; --k) v = (v * x + cp[k]) % p;
      if (!v) roots.push_back(x);
    }
    if (int(roots.size()) != r) continue;
    std::vector<std::vector<long long>> rows;
    bool ok = true;
    for (u64 lam : roots) {
      auto B = M;
      for (int i = 0; i < r; ++i) B[i][i] = F.sub(B[i][i], lam);
      auto v = null_vector(B, F);
      if (v.empty() || !v[0]) {
        ok = false;
        break;
      }
      u64 s0 = F.inv(v[0]);
      for (auto& x : v) x = F.mul(x, s0);
      u64 sum = 0;
      for (int k = 0; k < r; ++k)
        sum = F.add(sum, F.mul(F.mul(v[k], v[kinv[k]]), F.inv(cl.members[k].size() % p)));
      u64 d2 = F.mul(N % p, F.inv(sum));
      long long d = 0;
      for (long long e = 1; u64(e * e) <= N; ++e)
        if (u64(e * e) % p == d2) {
          d = e;
          break;
        }
      if (!d) {
        ok = false;
        break;
      }
      std::vector<long long> row(r);
      for (int k = 0; k < r; ++k) row[k] = F.sym(F.mul(F.mul(v[k], d), F.inv(cl.members[k].size() % p)));
      rows.push_back(row);
    }
    if (!ok) continue;
    // exact orthogonality
    for (int a = 0; a < r && ok; ++a)
      for (int b = a; b < r && ok; ++b) {
        long long s = 0;
        for (int k = 0; k < r; ++k) s += (long long)cl.members[k].size() * rows[a][k] * rows[b][kinv[k]];
        ok = s == (a == b ? (long long)N : 0);
      }
    if (ok) return rows;
  }
  throw InternalError("character table computation did not converge for " + g.name());
}

bool equal_values(const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) { return a == b; }

int find_row(const std::vector<ClassFunction>& rows, const ClassFunction& chi) {
  for (size_t i = 0; i < rows.size(); ++i)
    if (equal_values(rows[i].values, chi.values)) return int(i);
  return -1;
}


int j_induce_rows(const std::vector<ClassFunction>& rows, const std::vector<int>& b, const Subgroup& h) {
  ClassFunction ind = induce(h, sign_on(h));
  int nt = count_reflections(h);
  int found = -1;
  for (size_t i = 0; i < rows.size(); ++i) {
    long long m = scalar_product(ind, rows[i]).to_integer();
    if (!m) continue;
    if (b[i] < nt) throw NonUniqueJInduction("constituent with b below |T'|");
    if (b[i] == nt) {
      if (found >= 0 || m != 1) throw NonUniqueJInduction("several constituents with b = |T'|");
      found = int(i);
    }
  }
  if (found < 0) throw NonUniqueJInduction("no constituent with b = |T'|");
  return found;
}

struct Raw {
  std::vector<ClassFunction> rows;
  std::vector<int> b;
};

Raw raw_table(const CoxeterGroup& g) {
  Raw R;
  for (auto& row : dixon(g)) R.rows.push_back(from_integer_values(g, row));
  // identity first for stability before labelling
  R.b.reserve(R.rows.size());
  for (auto& r : R.rows) R.b.push_back(b_invariant(r));
  return R;
}

void reorder(CharacterTable& t, const Raw& R, const std::vector<int>& order, std::vector<CharLabel> labels) {
  std::vector<int> seen(R.rows.size(), 0);
  for (int i : order) {
    if (i < 0 || seen[i]++) throw InternalError("labelling is not a bijection for " + t.group->name());
    t.rows.push_back(R.rows[i]);
    t.b.push_back(R.b[i]);
  }
  if (t.rows.size() != R.rows.size()) throw InternalError("labelling incomplete for " + t.group->name());
  t.labels = std::move(labels);
}

void table_A(CharacterTable& t) {
  const CoxeterGroup& g = *t.group;
  Raw R = raw_table(g);
  int n = g.rank() + 1;
  std::vector<int> chain(g.rank());
  for (int i = 0; i < g.rank(); ++i) chain[i] = i;
  std::vector<int> order;
  std::vector<CharLabel> labels;
  for (auto& a : partitions(n)) {
    order.push_back(j_induce_rows(R.rows, R.b, young_subgroup(g, chain, transpose(a))));
    labels.push_back(CharLabel{to_string(a), a, {}, 0});
  }
  reorder(t, R, order, labels);
}

void table_B(CharacterTable& t) {
  const CoxeterGroup& g = *t.group;
  Raw R = raw_table(g);
  std::vector<int> order;
  std::vector<CharLabel> labels;
  for (auto& ab : bipartitions(g.rank())) {
    // subgroup built from the transposed parts; see README for the convention
    auto h = db_reflection_subgroup(g, transpose(ab.first), transpose(ab.second));
    order.push_back(j_induce_rows(R.rows, R.b, h));
    labels.push_back(CharLabel{to_string(ab), ab.first, ab.second, 0});
  }
  reorder(t, R, order, labels);
}

void table_D(CharacterTable& t) {
  const CoxeterGroup& g = *t.group;
  const int n = g.rank();
  Raw R = raw_table(g);
  GroupPtr B = cached_group(Series::B, n);
  TablePtr tb = character_table(B);
  auto emb = embed_d_into_b(g, *B);
  const auto& cl = g.classes();
  std::vector<int> order;
  std::vector<CharLabel> labels;
  std::vector<int> hp(n - 1), hm(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    hp[i] = i + 1;
    hm[i] = i == 0 ? 0 : i + 1;
  }
  std::vector<char> used(R.rows.size(), 0);
  for (size_t bi = 0; bi < tb->size(); ++bi) {
    const auto& L = tb->labels[bi];
    ClassFunction res(g);
    for (size_t c = 0; c < cl.size(); ++c) res.values[c] = tb->rows[bi](emb[cl.reps[c]]);
    if (L.alpha != L.beta) {
      int r = find_row(R.rows, res);
      if (r < 0) throw InternalError("restriction of " + L.name + " is not irreducible");
      if (used[r]) continue;
      used[r] = 1;
      order.push_back(r);
      labels.push_back(CharLabel{"[" + to_string(L.alpha) + "," + to_string(L.beta) + "]", L.alpha, L.beta, 0});
      continue;
    }
    Partition dbl = transpose(L.alpha);
    for (auto& x : dbl) x *= 2;
    int rp = j_induce_rows(R.rows, R.b, young_subgroup(g, hp, dbl));
    int rm = j_induce_rows(R.rows, R.b, young_subgroup(g, hm, dbl));
    if (rp == rm || !(R.rows[rp] + R.rows[rm] == res))
      throw InconsistentSplit("j-induction does not split " + L.name);
    // cross-check by the value at s1 s3 ... s_{n-1}
    Elt sg = sigma_half(g);
    long long diff = (R.rows[rp](sg) - R.rows[rm](sg)).to_integer();
    long long expect = ((n / 2) % 2 ? -1 : 1) * (1LL << (n / 2)) * hook_dimension(L.alpha);
    if (diff != expect) throw InconsistentSplit("sign test disagrees for " + to_string(L.alpha));
    used[rp] = used[rm] = 1;
    order.push_back(rp);
    labels.push_back(CharLabel{"[" + to_string(L.alpha) + ",+]", L.alpha, L.alpha, +1});
    order.push_back(rm);
    labels.push_back(CharLabel{"[" + to_string(L.alpha) + ",-]", L.alpha, L.alpha, -1});
  }
  reorder(t, R, order, labels);
}

void table_F4(CharacterTable& t) {
  const CoxeterGroup& g = *t.group;
  Raw R = raw_table(g);
  struct NDB {
    const char* name;
    int d, b;
  };
  static const NDB names[] = {{"1_1", 1, 0},  {"1_2", 1, 12}, {"1_3", 1, 12}, {"1_4", 1, 24}, {"2_1", 2, 4},
                              {"2_2", 2, 16}, {"2_3", 2, 4},  {"2_4", 2, 16}, {"4_1", 4, 8},  {"9_1", 9, 2},
                              {"9_2", 9, 6},  {"9_3", 9, 6},  {"9_4", 9, 10}, {"6_1", 6, 6},  {"6_2", 6, 6},
                              {"12_1", 12, 4}, {"4_2", 4, 1}, {"4_3", 4, 7},  {"4_4", 4, 7},  {"4_5", 4, 13},
                              {"8_1", 8, 3},  {"8_2", 8, 9},  {"8_3", 8, 3},  {"8_4", 8, 9},  {"16_1", 16, 5}};
  const auto& cl = g.classes();
  // the two degree-6 characters: exterior square of V, and its twist by the
  // linear character that is 1 on long and -1 on short reflections
  ClassFunction refl = reflection_character(g), ext2(g), lam(g);
  for (size_t c = 0; c < cl.size(); ++c) {
    Elt z = cl.reps[c];
    Cyclo a = refl.values[c];
    ext2.values[c] = (a * a - g.reflection_character(g.multiply(z, z))) / Rational(2);
    int sh = 0;
    for (int s : g.word(z)) sh += s >= 2;
    lam.values[c] = Cyclo(sh % 2 ? -1 : 1);
  }
  int six2 = find_row(R.rows, ext2), six1 = find_row(R.rows, tensor(ext2, lam));
  if (six1 < 0 || six2 < 0 || six1 == six2) throw InternalError("F4 degree-6 characters not found");
  int c0 = cl.class_of[g.generator(0)], c3 = cl.class_of[g.generator(3)];
  std::vector<int> order(25, -1);
  std::vector<char> used(R.rows.size(), 0);
  order[13] = six1;
  order[14] = six2;
  used[six1] = used[six2] = 1;
  std::map<std::pair<int, int>, std::vector<int>> slots;
  for (int i = 0; i < 25; ++i)
    if (order[i] < 0) slots[{names[i].d, names[i].b}].push_back(i);
  for (auto& [key, idx] : slots) {
    std::vector<int> cand;
    for (size_t r = 0; r < R.rows.size(); ++r)
      if (!used[r] && R.rows[r].degree().to_integer() == key.first && R.b[r] == key.second) cand.push_back(int(r));
    if (cand.size() != idx.size()) throw InternalError("F4 (degree, b) pattern mismatch");
    // ties: larger value on the long reflection s0 first, then on s3
    std::sort(cand.begin(), cand.end(), [&](int x, int y) {
      long long a0 = R.rows[x].values[c0].to_integer(), b0 = R.rows[y].values[c0].to_integer();
      if (a0 != b0) return a0 > b0;
      long long a3 = R.rows[x].values[c3].to_integer(), b3 = R.rows[y].values[c3].to_integer();
      if (a3 != b3) return a3 > b3;
      return x < y;
    });
    for (size_t k = 0; k < idx.size(); ++k) {
      order[idx[k]] = cand[k];
      used[cand[k]] = 1;
    }
  }
  std::vector<CharLabel> labels;
  for (auto& nd : names) labels.push_back(CharLabel{nd.name, {}, {}, 0});
  reorder(t, R, order, labels);
}

void table_I2(CharacterTable& t) {
  const CoxeterGroup& g = *t.group;
  const int M = g.m();
  const auto& cl = g.classes();
  Elt rot = g.multiply(g.generator(0), g.generator(1));
  std::map<Elt, int> expo;
  for (int k = 0; k < M; ++k) expo[g.power(rot, k)] = k;
  const uint32_t cs1 = cl.class_of[g.generator(0)];
  auto row = [&](auto f) {
    ClassFunction r(g);
    for (size_t c = 0; c < cl.size(); ++c) {
      Elt z = cl.reps[c];
      r.values[c] = g.length(z) % 2 ? f(-1, cl.class_of[z] == cs1) : f(expo.at(z), false);
    }
    return r;
  };
  auto add = [&](const std::string& name, ClassFunction r) {
    t.rows.push_back(std::move(r));
    t.labels.push_back(CharLabel{name, {}, {}, 0});
  };
  add("1", row([](int, bool) { return Cyclo(1); }));
  add("eps", row([](int k, bool) { return Cyclo(k < 0 ? -1 : 1); }));
  if (M % 2 == 0) {
    add("eps1", row([](int k, bool s1) { return Cyclo(k < 0 ? (s1 ? 1 : -1) : (k % 2 ? -1 : 1)); }));
    add("eps2", row([](int k, bool s1) { return Cyclo(k < 0 ? (s1 ? -1 : 1) : (k % 2 ? -1 : 1)); }));
  }
  for (int j = 1; 2 * j < M; ++j)
    add("chi_" + std::to_string(j), row([&](int k, bool) {
          if (k < 0) return Cyclo(0);
          return Cyclo::zeta(M, (long long)j * k) + Cyclo::zeta(M, -(long long)j * k);
        }));
  for (auto& r : t.rows) t.b.push_back(b_invariant(r));
  // orthonormality
  for (size_t a = 0; a < t.rows.size(); ++a)
    for (size_t b = 0; b < t.rows.size(); ++b)
      if (scalar_product(t.rows[a], t.rows[b]) != Cyclo(a == b ? 1 : 0))
        throw InternalError("dihedral table not orthonormal");
}

}  // namespace

int CharacterTable::find(const std::string& name) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].name == name) return int(i);
  throw IndexOutOfRange("no character named " + name + " in " + group->name());
}

int CharacterTable::find_pair(const Partition& a, const Partition& b) const {
  for (size_t i = 0; i < labels.size(); ++i) {
    const auto& L = labels[i];
    if (L.split) continue;
    if (L.alpha == a && L.beta == b) return int(i);
    if (group->series() == Series::D && L.alpha == b && L.beta == a) return int(i);
  }
  throw IndexOutOfRange("no character labelled by " + to_string(BiPartition(a, b)));
}

int CharacterTable::find_split(const Partition& a, int sign) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].split == sign && labels[i].alpha == a) return int(i);
  throw IndexOutOfRange("no split character for " + to_string(a));
}

int CharacterTable::row_of(const ClassFunction& chi) const { return find_row(rows, chi); }

std::vector<long long> CharacterTable::decompose(const ClassFunction& chi) const {
  std::vector<long long> m(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    Cyclo s = scalar_product(chi, rows[i]);
    if (!s.is_rational() || s.to_rational().denominator() != 1)
      throw InternalError("non-integral multiplicity " + s.str());
    m[i] = s.to_integer();
  }
  return m;
}

std::string CharacterTable::format(const std::vector<long long>& mult) const {
  std::string s;
  for (size_t i = 0; i < mult.size(); ++i) {
    if (!mult[i]) continue;
    if (!s.empty()) s += mult[i] > 0 ? "+" : "";
    if (mult[i] == -1)
      s += "-";
    else if (mult[i] != 1)
      s += std::to_string(mult[i]) + "*";
    s += labels[i].name;
  }
  return s.empty() ? "0" : s;
}

TablePtr character_table(const GroupPtr& g) {
  static std::recursive_mutex mu;
  static std::map<const CoxeterGroup*, std::pair<GroupPtr, TablePtr>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(g.get());
  if (it != cache.end()) return it->second.second;
  auto t = std::make_shared<CharacterTable>();
  t->group = g;
  switch (g->series()) {
    case Series::A: table_A(*t); break;
    case Series::B: table_B(*t); break;
    case Series::D: table_D(*t); break;
    case Series::F4: table_F4(*t); break;
    case Series::I2: table_I2(*t); break;
  }
  long long sq = 0;
  for (size_t i = 0; i < t->size(); ++i) sq += t->degree(i) * t->degree(i);
  if (sq != (long long)g->order()) throw InternalError("sum of squared degrees differs from |W|");
  cache[g.get()] = {g, t};
  return t;
}

int b_invariant(const ClassFunction& chi) {
  const CoxeterGroup& g = *chi.group;
  const auto& cl = g.classes();
  const int n = g.rank(), N = g.num_positive();
  std::vector<Cyclo> mult(N + 1, Cyclo(0));
  for (size_t c = 0; c < cl.size(); ++c) {
    Elt z = cl.reps[c];
    std::vector<Cyclo> p(n + 1), e(n + 1, Cyclo(0));
    Elt zk = z;
    for (int k = 1; k <= n; ++k) {
      p[k] = g.reflection_character(zk);
      zk = g.multiply(zk, z);
    }
    e[0] = Cyclo(1);
    for (int k = 1; k <= n; ++k) {
      Cyclo s(0);
      for (int i = 1; i <= k; ++i) {
        Cyclo term = e[k - i] * p[i];
        if (i % 2) s += term;
        else s -= term;
      }
      e[k] = s / Rational(k);
    }
    // 1/det(1 - qz) = sum h_d q^d
    std::vector<Cyclo> h(N + 1, Cyclo(0));
    h[0] = Cyclo(1);
    for (int d = 1; d <= N; ++d) {
      Cyclo s(0);
      for (int k = 1; k <= std::min(d, n); ++k) {
        Cyclo term = e[k] * h[d - k];
        if (k % 2) s += term;
        else s -= term;
      }
      h[d] = s;
    }
    Cyclo w = Cyclo((long long)cl.members[c].size()) * chi.values[c].conj();
    for (int d = 0; d <= N; ++d) mult[d] += w * h[d];
  }
  for (int d = 0; d <= N; ++d)
    if (!mult[d].is_zero()) return d;
  throw InternalError("character does not occur in symmetric powers up to the number of reflections");
}

int j_induce(const CharacterTable& t, const Subgroup& h) { return j_induce_rows(t.rows, t.b, h); }

Subgroup young_subgroup(const CoxeterGroup& g, const std::vector<int>& chain, const Partition& blocks) {
  unsigned mask = 0;
  for (int s : chain) mask |= 1u << s;
  int acc = 0;
  for (int x : blocks) {
    acc += x;
    if (acc >= 1 && acc <= int(chain.size())) mask &= ~(1u << chain[acc - 1]);
  }
  if (acc != int(chain.size()) + 1) throw IndexOutOfRange("block sizes do not match the chain");
  auto P = g.parabolic(mask);
  return Subgroup{&g, P.elements};
}

Subgroup db_reflection_subgroup(const CoxeterGroup& B, const Partition& dparts, const Partition& bparts) {
  const int n = B.rank();
  if (B.series() != Series::B) throw UnsupportedType("reflection subgroup of type D x B needs B_n");
  if (size_of(dparts) + size_of(bparts) != n) throw IndexOutOfRange("parts do not sum to the rank");
  std::vector<Elt> gens;
  auto refl = [&](std::vector<int> v) {
    int r = B.root_index(v);
    if (r < 0) throw InternalError("not a root");
    if (!B.is_positive(r)) r = B.negate(r);
    gens.push_back(B.reflection(r));
  };
  auto vec = [&](int i, int si, int j, int sj) {
    std::vector<int> v(n, 0);
    v[i] += si;
    if (j >= 0) v[j] += sj;
    return v;
  };
  int pos = 0;
  for (int k : dparts) {
    for (int i = pos; i + 1 < pos + k; ++i) refl(vec(i + 1, 1, i, -1));
    if (k >= 2) refl(vec(pos, 1, pos + 1, 1));
    pos += k;
  }
  for (int k : bparts) {
    for (int i = pos; i + 1 < pos + k; ++i) refl(vec(i + 1, 1, i, -1));
    refl(vec(pos, 1, -1, 0));
    pos += k;
  }
  return generate_subgroup(B, gens);
}

std::vector<Elt> embed_d_into_b(const CoxeterGroup& D, const CoxeterGroup& B) {
  const int n = D.rank();
  std::vector<Elt> img(n);
  img[0] = B.from_word({0, 1, 0});
  for (int i = 1; i < n; ++i) img[i] = B.generator(i);
  std::vector<Elt> emb(D.order(), 0);
  for (Elt w = 1; w < D.order(); ++w) {
    int s = D.last_letter(w);
    emb[w] = B.multiply(emb[D.rmul(w, s)], img[s]);
  }
  return emb;
}

Elt sigma_half(const CoxeterGroup& D) {
  std::vector<int> w;
  for (int i = 1; i < D.rank(); i += 2) w.push_back(i);
  return D.from_word(w);
}

long long hook_dimension(const Partition& a) {
  int n = size_of(a);
  Partition t = transpose(a);
  long double num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  long double den = 1;
  for (size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < a[i]; ++j) den *= (a[i] - j - 1) + (t[j] - int(i) - 1) + 1;
  return (long long)(num / den + 0.5L);
}

SplitResolution resolve_split_pair(const CharacterTable& d, const Partition& alpha) {
  const CoxeterGroup& g = *d.group;
  if (g.series() != Series::D || g.rank() % 2) throw UnsupportedType("split pairs need D_n with n even");
  SplitResolution r;
  r.plus = d.find_split(alpha, +1);
  r.minus = d.find_split(alpha, -1);
  Elt s = sigma_half(g);
  r.difference = (d.rows[r.plus](s) - d.rows[r.minus](s)).to_integer();
  int h = g.rank() / 2;
  r.expected = (h % 2 ? -1 : 1) * (1LL << h) * hook_dimension(alpha);
  if (r.difference != r.expected) throw InconsistentSplit("sign test disagrees for " + to_string(alpha));
  return r;
}

std::vector<int> diamond_on_characters(const CharacterTable& t, const DiagramAutomorphism& d) {
  const CoxeterGroup& g = *t.group;
  const auto& cl = g.classes();
  std::vector<int> perm(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    ClassFunction f(g);
    for (size_t c = 0; c < cl.size(); ++c) f.values[c] = t.rows[i](d(cl.reps[c]));
    perm[i] = t.row_of(f);
    if (perm[i] < 0) throw InternalError("twisted character not in the table");
  }
  return perm;
}

std::vector<int> irr_diamond(const CharacterTable& t, const DiagramAutomorphism& d) {
  auto p = diamond_on_characters(t, d);
  std::vector<int> fixed;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] == int(i)) fixed.push_back(int(i));
  return fixed;
}

}  // namespace kcv
