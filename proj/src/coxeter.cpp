#include "kcv/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "kcv/errors.hpp"

namespace kcv {

static uint64_t fnv(uint64_t h, uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::D: return "D";
    case Series::F4: return "F4";
    case Series::I2: return "I2";
  }
  return "?";
}

Series parse_series(const std::string& s) {
  if (s == "A") return Series::A;
  if (s == "B") return Series::B;
  if (s == "D") return Series::D;
  if (s == "F4" || s == "F") return Series::F4;
  if (s == "I2" || s == "I") return Series::I2;
  throw UnsupportedType("series '" + s + "'");
}

std::size_t expected_order(Series series, int n) {
  auto fact = [](int k) {
    long double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  long double o = 0;
  switch (series) {
    case Series::A: o = fact(n + 1); break;
    case Series::B: o = std::pow(2.0L, n) * fact(n); break;
    case Series::D: o = std::pow(2.0L, n - 1) * fact(n); break;
    case Series::F4: o = 1152; break;
    case Series::I2: o = 2.0L * n; break;
  }
  if (o > 1e18L) return std::size_t(-1);
  return std::size_t(o);
}

// ---- element handle ----

int Element::length() const { return group->length(index); }
std::vector<int> Element::word() const { return group->word(index); }
const uint16_t* Element::root_permutation() const { return group->perm(index); }

static void same_group(const Element& a, const Element& b) {
  if (!a.group || a.group != b.group) throw GroupMismatch("elements belong to different groups");
}

Element multiply(const Element& w, const Element& x) {
  same_group(w, x);
  return Element{w.group, w.group->multiply(w.index, x.index)};
}

Element invert(const Element& w) { return Element{w.group, w.group->inverse(w.index)}; }

int act_on_root(const Element& w, int root) {
  if (root < 0 || root >= w.group->num_roots()) throw IndexOutOfRange("root index");
  return w.group->act(w.index, root);
}

bool bruhat_leq(const Element& y, const Element& w) {
  same_group(y, w);
  return y.group->bruhat_leq(y.index, w.index);
}

// ---- construction ----

GroupPtr build_group(Series series, int n, std::size_t cap) { return CoxeterGroup::build(series, n, cap); }

GroupPtr cached_group(Series series, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(int(series), series == Series::F4 ? 4 : n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto g = build_group(series, n);
  cache[key] = g;
  return g;
}

namespace {

struct Diagram {
  std::vector<std::vector<int>> ambient;  // simple roots, integer-scaled
  std::vector<std::string> names;
};

Diagram diagram(Series series, int n) {
  Diagram d;
  auto unit = [](int dim, int i) {
    std::vector<int> v(dim, 0);
    v[i] = 1;
    return v;
  };
  switch (series) {
    case Series::A:
      for (int i = 0; i < n; ++i) {
        auto v = unit(n + 1, i);
        v[i + 1] = -1;
        d.ambient.push_back(v);
        d.names.push_back("s" + std::to_string(i + 1));
      }
      break;
    case Series::B:
    case Series::D:
      if (series == Series::B) {
        d.ambient.push_back(unit(n, 0));
        d.names.push_back("t");
      } else {
        auto v = unit(n, 0);
        v[1] = 1;
        d.ambient.push_back(v);
        d.names.push_back("u");
      }
      for (int i = 1; i < n; ++i) {
        auto v = unit(n, i);
        v[i - 1] = -1;
        d.ambient.push_back(v);
        d.names.push_back("s" + std::to_string(i));
      }
      break;
    case Series::F4:
      d.ambient = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      d.names = {"s0", "s1", "s2", "s3"};
      break;
    case Series::I2:
      d.names = {"s1", "s2"};
      break;
  }
  return d;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

GroupPtr CoxeterGroup::build(Series series, int n, std::size_t cap) {
  switch (series) {
    case Series::A:
    case Series::B:
      if (n < 1) throw UnsupportedType(series_name(series) + std::to_string(n));
      break;
    case Series::D:
      if (n < 2) throw UnsupportedType("D" + std::to_string(n));
      break;
    case Series::F4:
      n = 4;
      break;
    case Series::I2:
      if (n < 3 || n > 30000) throw UnsupportedType("I2(" + std::to_string(n) + ")");
      break;
  }
  std::size_t eo = expected_order(series, n);
  if (eo > cap) throw CapExceeded("|W| = " + std::to_string(eo) + " exceeds cap " + std::to_string(cap));
  std::shared_ptr<CoxeterGroup> g(new CoxeterGroup());
  g->series_ = series;
  if (series == Series::I2) {
    g->rank_ = 2;
    g->m_ = n;
  } else {
    g->rank_ = n;
  }
  g->build_roots();
  g->enumerate(cap);
  g->build_classes();
  {
    uint64_t h = 1469598103934665603ULL;
    for (uint16_t x : g->perm_) h = fnv(h, x);
    g->enum_sum_ = h;
  }
  return g;
}

void CoxeterGroup::build_roots() {
  Diagram d = diagram(series_, series_ == Series::I2 ? 2 : rank_);
  gen_names_ = d.names;
  int r = rank_;
  cox_.assign(r, std::vector<int>(r, 2));
  if (series_ == Series::I2) {
    int m = m_;
    cox_[0][0] = cox_[1][1] = 1;
    cox_[0][1] = cox_[1][0] = m;
    nroots_ = 2 * m;
    simple_ = {0, m - 1};
    gen_perm_.assign(2 * nroots_, 0);
    for (int k = 0; k < 2 * m; ++k) {
      gen_perm_[k] = uint16_t(((m - k) % (2 * m) + 2 * m) % (2 * m));
      gen_perm_[nroots_ + k] = uint16_t(((m - 2 - k) % (2 * m) + 2 * m) % (2 * m));
    }
    return;
  }
  // Cartan integers A[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<int>> A(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) A[i][j] = 2 * dot(d.ambient[i], d.ambient[j]) / dot(d.ambient[j], d.ambient[j]);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) {
        cox_[i][j] = 1;
        continue;
      }
      int p = A[i][j] * A[j][i];
      cox_[i][j] = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
    }
  // closure in simple-root coordinates
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> all;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    seen[e] = int(all.size());
    all.push_back(e);
  }
  for (size_t k = 0; k < all.size(); ++k) {
    for (int j = 0; j < r; ++j) {
      std::vector<int> b = all[k];
      int c = 0;
      for (int i = 0; i < r; ++i) c += b[i] * A[i][j];
      b[j] -= c;
      if (seen.emplace(b, int(all.size())).second) all.push_back(b);
    }
  }
  std::vector<std::vector<int>> pos;
  for (auto& b : all)
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) pos.push_back(b);
  std::sort(pos.begin(), pos.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  int np = int(pos.size());
  if (int(all.size()) != 2 * np) throw InternalError("root closure not symmetric");
  nroots_ = 2 * np;
  coords_ = pos;
  for (auto b : pos) {
    for (auto& x : b) x = -x;
    coords_.push_back(b);
  }
  std::map<std::vector<int>, int> idx;
  for (int k = 0; k < nroots_; ++k) idx[coords_[k]] = k;
  ambient_.clear();
  for (auto& c : coords_) {
    std::vector<int> a(d.ambient[0].size(), 0);
    for (int i = 0; i < r; ++i)
      for (size_t x = 0; x < a.size(); ++x) a[x] += c[i] * d.ambient[i][x];
    ambient_.push_back(a);
  }
  simple_.resize(r);
  for (int i = 0; i < r; ++i) simple_[i] = i;
  gen_perm_.assign(std::size_t(r) * nroots_, 0);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < nroots_; ++k) {
      std::vector<int> b = coords_[k];
      int c = 0;
      for (int i = 0; i < r; ++i) c += b[i] * A[i][j];
      b[j] -= c;
      gen_perm_[std::size_t(j) * nroots_ + k] = uint16_t(idx.at(b));
    }
}

uint64_t CoxeterGroup::key_of(const uint16_t* p) const {
  uint64_t k = 0;
  for (int i = 0; i < rank_; ++i) k |= uint64_t(p[simple_[i]]) << (key_bits_ * i);
  return k;
}

uint64_t CoxeterGroup::key_of_images(const int* im) const {
  uint64_t k = 0;
  for (int i = 0; i < rank_; ++i) k |= uint64_t(im[i]) << (key_bits_ * i);
  return k;
}

Elt CoxeterGroup::lookup(uint64_t key) const {
  auto it = index_.find(key);
  return it == index_.end() ? Elt(order()) : it->second;
}

Elt CoxeterGroup::find_perm(const uint16_t* p) const { return lookup(key_of(p)); }

void CoxeterGroup::enumerate(std::size_t cap) {
  key_bits_ = 1;
  while ((1 << key_bits_) < nroots_) ++key_bits_;
  if (key_bits_ * rank_ > 64) throw UnsupportedType("rank too large for element keys");
  const int R = nroots_, r = rank_;
  std::size_t expect = expected_order(series_, series_ == Series::I2 ? m_ : rank_);
  perm_.reserve(expect * R);
  index_.reserve(expect * 2);
  perm_.resize(R);
  for (int k = 0; k < R; ++k) perm_[k] = uint16_t(k);
  len_.push_back(0);
  parent_.push_back(0);
  last_.push_back(0xff);
  index_[key_of(perm_.data())] = 0;
  std::size_t lo = 0, hi = 1;
  std::vector<uint16_t> tmp(R);
  while (lo < hi) {
    for (std::size_t u = lo; u < hi; ++u) {
      for (int s = 0; s < r; ++s) {
        const uint16_t* pu = &perm_[u * R];
        // u s is longer iff u(alpha_s) is positive
        if (!is_positive(pu[simple_[s]])) continue;
        const uint16_t* ps = &gen_perm_[std::size_t(s) * R];
        for (int k = 0; k < R; ++k) tmp[k] = pu[ps[k]];
        uint64_t key = key_of(tmp.data());
        if (index_.count(key)) continue;
        if (len_.size() >= cap) throw CapExceeded("enumeration exceeded cap");
        Elt id = Elt(len_.size());
        index_[key] = id;
        perm_.insert(perm_.end(), tmp.begin(), tmp.end());
        len_.push_back(uint16_t(len_[u] + 1));
        parent_.push_back(Elt(u));
        last_.push_back(uint8_t(s));
      }
    }
    lo = hi;
    hi = len_.size();
  }
  const std::size_t N = len_.size();
  if (N != expect) throw InternalError("unexpected group order " + std::to_string(N));
  lmul_.assign(N * r, 0);
  rmul_.assign(N * r, 0);
  inv_.assign(N, 0);
  std::vector<int> im(r);
  for (std::size_t w = 0; w < N; ++w) {
    const uint16_t* pw = &perm_[w * R];
    for (int s = 0; s < r; ++s) {
      const uint16_t* ps = &gen_perm_[std::size_t(s) * R];
      for (int i = 0; i < r; ++i) im[i] = ps[pw[simple_[i]]];
      lmul_[w * r + s] = lookup(key_of_images(im.data()));
      for (int i = 0; i < r; ++i) im[i] = pw[ps[simple_[i]]];
      rmul_[w * r + s] = lookup(key_of_images(im.data()));
    }
    std::fill(im.begin(), im.end(), -1);
    for (int k = 0; k < R; ++k)
      for (int i = 0; i < r; ++i)
        if (pw[k] == simple_[i]) im[i] = k;
    inv_[w] = lookup(key_of_images(im.data()));
  }
  word_off_.assign(N + 1, 0);
  for (std::size_t w = 0; w < N; ++w) word_off_[w + 1] = word_off_[w] + len_[w];
  word_data_.assign(word_off_[N], 0);
  for (std::size_t w = 1; w < N; ++w) {
    Elt p = parent_[w];
    std::copy(word_data_.begin() + word_off_[p], word_data_.begin() + word_off_[p + 1],
              word_data_.begin() + word_off_[w]);
    word_data_[word_off_[w + 1] - 1] = last_[w];
  }
  // reflections, by height
  int np = num_positive();
  refl_.assign(np, Elt(N));
  for (int s = 0; s < r; ++s) refl_[simple_[s]] = generator(s);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int b = 0; b < np; ++b) {
      if (refl_[b] == Elt(N)) continue;
      for (int s = 0; s < r; ++s) {
        int c = gen_perm_[std::size_t(s) * R + b];
        if (!is_positive(c) || refl_[c] != Elt(N)) continue;
        refl_[c] = lmul(rmul(refl_[b], s), s);
        progress = true;
      }
    }
  }
  for (int b = 0; b < np; ++b)
    if (refl_[b] == Elt(N)) throw InternalError("reflection table incomplete");
}

void CoxeterGroup::build_classes() {
  const std::size_t N = order();
  classes_.class_of.assign(N, uint32_t(-1));
  for (std::size_t w = 0; w < N; ++w) {
    if (classes_.class_of[w] != uint32_t(-1)) continue;
    uint32_t c = uint32_t(classes_.reps.size());
    classes_.reps.push_back(Elt(w));
    std::vector<Elt> orbit{Elt(w)};
    classes_.class_of[w] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int s = 0; s < rank_; ++s) {
        Elt x = lmul(rmul(orbit[i], s), s);
        if (classes_.class_of[x] == uint32_t(-1)) {
          classes_.class_of[x] = c;
          orbit.push_back(x);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes_.members.push_back(std::move(orbit));
  }
}

// ---- arithmetic ----

std::vector<int> CoxeterGroup::word(Elt w) const {
  return std::vector<int>(word_data_.begin() + word_off_[w], word_data_.begin() + word_off_[w + 1]);
}

std::string CoxeterGroup::word_string(Elt w) const {
  if (len_[w] == 0) return "e";
  std::string s;
  for (uint32_t i = word_off_[w]; i < word_off_[w + 1]; ++i) {
    if (!s.empty()) s += ' ';
    s += gen_names_[word_data_[i]];
  }
  return s;
}

Elt CoxeterGroup::multiply(Elt a, Elt b) const {
  Elt x = a;
  for (uint32_t i = word_off_[b]; i < word_off_[b + 1]; ++i) x = rmul(x, word_data_[i]);
  return x;
}

Elt CoxeterGroup::from_word(const std::vector<int>& w) const {
  Elt x = 0;
  for (int s : w) {
    if (s < 0 || s >= rank_) throw IndexOutOfRange("generator index " + std::to_string(s));
    x = rmul(x, s);
  }
  return x;
}

Elt CoxeterGroup::power(Elt w, long long k) const {
  if (k < 0) {
    w = inv_[w];
    k = -k;
  }
  Elt r = 0, b = w;
  while (k) {
    if (k & 1) r = multiply(r, b);
    b = multiply(b, b);
    k >>= 1;
  }
  return r;
}

bool CoxeterGroup::bruhat_leq(Elt y, Elt w) const {
  while (len_[w] > 0) {
    if (len_[y] > len_[w]) return false;
    int s = word_data_[word_off_[w]];  // first letter: a left descent
    Elt sy = lmul(y, s);
    if (len_[sy] < len_[y]) y = sy;
    w = lmul(w, s);
  }
  return y == 0;
}

int CoxeterGroup::root_index(const std::vector<int>& a) const {
  for (int r = 0; r < int(ambient_.size()); ++r)
    if (ambient_[r] == a) return r;
  return -1;
}

Cyclo CoxeterGroup::reflection_character(Elt w) const {
  if (series_ == Series::I2) {
    if (len_[w] % 2) return Cyclo(0);
    int k = act(w, 0) / 2;
    return Cyclo::zeta(m_, k) + Cyclo::zeta(m_, -k);
  }
  long long tr = 0;
  for (int i = 0; i < rank_; ++i) tr += coords_[act(w, simple_[i])][i];
  return Cyclo(tr);
}

ParabolicData CoxeterGroup::parabolic(unsigned mask) const {
  if (rank_ < 32 && (mask >> rank_)) throw IndexOutOfRange("parabolic subset");
  ParabolicData P;
  P.mask = mask;
  std::vector<char> in(order(), 0);
  std::vector<Elt> q{0};
  in[0] = 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (int s = 0; s < rank_; ++s)
      if (mask >> s & 1) {
        Elt x = rmul(q[i], s);
        if (!in[x]) {
          in[x] = 1;
          q.push_back(x);
        }
      }
  std::sort(q.begin(), q.end());
  P.elements = q;
  P.longest = q.back();  // BFS order: last index has maximal length
  for (Elt x = 0; x < order(); ++x) {
    bool ok = true;
    for (int s = 0; s < rank_ && ok; ++s)
      if ((mask >> s & 1) && right_descent(x, s)) ok = false;
    if (ok) P.coset_reps.push_back(x);
  }
  return P;
}

std::string CoxeterGroup::name() const {
  if (series_ == Series::I2) return "I2(" + std::to_string(m_) + ")";
  if (series_ == Series::F4) return "F4";
  return series_name(series_) + std::to_string(rank_);
}

std::string CoxeterGroup::root_label(int r) const {
  if (series_ == Series::I2) return (is_positive(r) ? "" : "-") + std::string("a") + std::to_string(r % m_);
  std::string s = "(";
  for (size_t i = 0; i < coords_[r].size(); ++i) s += (i ? "," : "") + std::to_string(coords_[r][i]);
  return s + ")";
}

uint64_t CoxeterGroup::descriptor_hash() const {
  uint64_t h = 1469598103934665603ULL;
  for (char c : name()) h = fnv(h, uint64_t(uint8_t(c)));
  h = fnv(h, order());
  for (auto& row : cox_)
    for (int x : row) h = fnv(h, uint64_t(x));
  return h;
}

uint64_t CoxeterGroup::enumeration_checksum() const { return enum_sum_; }

}  // namespace kcv
