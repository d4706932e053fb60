#include "kcv/kl.hpp"

#include <algorithm>
#include <unordered_map>

#include "kcv/errors.hpp"

namespace kcv {

namespace {

struct PolyHash {
  std::size_t operator()(const QPoly& p) const {
    std::size_t h = p.size();
    for (long long c : p) h = h * 1000003u ^ std::size_t(c + 0x9e3779b9);
    return h;
  }
};

thread_local std::unordered_map<QPoly, uint32_t, PolyHash>* g_index = nullptr;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

uint32_t KLTable::intern(const QPoly& p) {
  auto it = g_index->find(p);
  if (it != g_index->end()) return it->second;
  uint32_t id = uint32_t(store_.size());
  store_.push_back(p);
  g_index->emplace(p, id);
  return id;
}

int KLTable::mu(Elt y, Elt w) const {
  if (y == w) return 0;
  const CoxeterGroup& g = *group_;
  if (g.length(y) > g.length(w)) std::swap(y, w);
  int d = g.length(w) - g.length(y);
  if (d % 2 == 0) return 0;
  const QPoly& p = poly_q(y, w);
  std::size_t k = (d - 1) / 2;
  return k < p.size() ? int(p[k]) : 0;
}

KLPtr KLTable::compute(const GroupPtr& gp, std::size_t cap) {
  const CoxeterGroup& g = *gp;
  const std::size_t N = g.order();
  if (N > cap) throw CapExceeded("KL table for " + g.name() + " (" + std::to_string(N) + " elements) exceeds cap " +
                                 std::to_string(cap));
  std::shared_ptr<KLTable> t(new KLTable());
  t->group_ = gp;
  t->n_ = N;
  t->id_.assign(tri(Elt(N)), 0);
  std::unordered_map<QPoly, uint32_t, PolyHash> index;
  g_index = &index;
  t->intern(QPoly{});   // id 0: zero
  t->intern(QPoly{1});  // id 1: one
  t->mu_.assign(N, {});
  std::vector<long long> buf;
  for (Elt w = 0; w < N; ++w) {
    uint32_t* row = &t->id_[tri(w)];
    row[w] = 1;
    if (w == 0) continue;
    int s = 0;
    while (!g.left_descent(w, s)) ++s;
    const Elt v = g.lmul(w, s);
    const uint32_t* rv = &t->id_[tri(v)];
    row[v] = 1;
    const int lw = g.length(w);
    const auto& mv = t->mu_[v];
    for (Elt y = 0; y < w; ++y) {
      if (g.length(y) > lw) break;
      if (!g.left_descent(y, s)) continue;
      Elt sy = g.lmul(y, s);
      const QPoly& a = t->store_[sy <= v ? rv[sy] : 0];
      const QPoly& b = t->store_[y <= v ? rv[y] : 0];
      buf.assign(std::max(a.size(), b.size() + 1), 0);
      for (size_t i = 0; i < a.size(); ++i) buf[i] += a[i];
      for (size_t i = 0; i < b.size(); ++i) buf[i + 1] += b[i];
      for (const auto& me : mv) {
        if (!g.left_descent(me.z, s)) continue;
        uint32_t pid = t->poly_id(y, me.z);
        if (!pid) continue;
        const QPoly& c = t->store_[pid];
        int sh = (lw - g.length(me.z)) / 2;
        if (buf.size() < c.size() + sh) buf.resize(c.size() + sh, 0);
        for (size_t i = 0; i < c.size(); ++i) buf[i + sh] -= me.mu * c[i];
      }
      QPoly p(buf);
      trim(p);
      uint32_t id = t->intern(p);
      row[y] = id;
      row[sy] = id;
    }
    // mu list of w
    for (Elt y = 0; y < w; ++y) {
      int d = lw - g.length(y);
      if (d % 2 == 0 || !row[y]) continue;
      const QPoly& p = t->store_[row[y]];
      std::size_t k = (d - 1) / 2;
      if (k < p.size() && p[k]) t->mu_[w].push_back(MuEntry{y, int(p[k])});
    }
  }
  g_index = nullptr;
  return t;
}

QPoly KLTable::recompute(Elt y, Elt w) const {
  const CoxeterGroup& g = *group_;
  if (y == w) return QPoly{1};
  if (w == 0) return QPoly{};
  int s = 0;
  while (!g.left_descent(w, s)) ++s;
  Elt v = g.lmul(w, s);
  if (!g.left_descent(y, s)) y = g.lmul(y, s);  // P_{y,w} = P_{sy,w}
  if (y == w) return QPoly{1};
  Elt sy = g.lmul(y, s);
  const QPoly& a = poly_q(sy, v);
  const QPoly& b = poly_q(y, v);
  QPoly buf(std::max(a.size(), b.size() + 1) + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) buf[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) buf[i + 1] += b[i];
  int lw = g.length(w);
  for (const auto& me : mu_[v]) {
    if (!g.left_descent(me.z, s)) continue;
    const QPoly& c = poly_q(y, me.z);
    int sh = (lw - g.length(me.z)) / 2;
    if (buf.size() < c.size() + sh) buf.resize(c.size() + sh, 0);
    for (size_t i = 0; i < c.size(); ++i) buf[i + sh] -= me.mu * c[i];
  }
  trim(buf);
  return buf;
}

KLPtr KLTable::from_entries(const GroupPtr& gp, const std::vector<Entry>& entries) {
  const std::size_t N = gp->order();
  std::shared_ptr<KLTable> t(new KLTable());
  t->group_ = gp;
  t->n_ = N;
  t->id_.assign(tri(Elt(N)), 0);
  std::unordered_map<QPoly, uint32_t, PolyHash> index;
  g_index = &index;
  t->intern(QPoly{});
  t->intern(QPoly{1});
  for (Elt w = 0; w < N; ++w) t->id_[tri(w) + w] = 1;
  for (const auto& e : entries) {
    if (e.y > e.w || e.w >= N) throw ChecksumMismatch("entry outside the group");
    t->id_[tri(e.w) + e.y] = t->intern(e.p);
  }
  g_index = nullptr;
  t->finish();
  return t;
}

KLPtr KLTable::from_interned(const GroupPtr& gp, std::vector<uint32_t> ids, std::vector<QPoly> store,
                             std::vector<std::vector<MuEntry>> mu) {
  const std::size_t N = gp->order();
  if (ids.size() != tri(Elt(N)) || store.size() < 2 || !store[0].empty() || store[1] != QPoly{1})
    throw ChecksumMismatch("malformed interned KL table");
  std::shared_ptr<KLTable> t(new KLTable());
  t->group_ = gp;
  t->n_ = N;
  t->id_ = std::move(ids);
  t->store_ = std::move(store);
  if (mu.size() == N) {
    t->mu_ = std::move(mu);
    return t;
  }
  for (uint32_t id : t->id_)
    if (id >= t->store_.size()) throw ChecksumMismatch("polynomial id out of range");
  t->finish();
  return t;
}

void KLTable::finish() {
  const CoxeterGroup& g = *group_;
  const std::size_t N = n_;
  mu_.assign(N, {});
  for (Elt w = 0; w < N; ++w) {
    const uint32_t* row = &id_[tri(w)];
    const int lw = g.length(w);
    for (Elt y = 0; y < w; ++y) {
      uint32_t id = row[y];
      int d = lw - g.length(y);
      if (!id || d % 2 == 0) continue;
      const QPoly& p = store_[id];
      std::size_t k = (d - 1) / 2;
      if (k < p.size() && p[k]) mu_[w].push_back(MuEntry{y, int(p[k])});
    }
  }
}

std::vector<KLTable::Entry> KLTable::entries() const {
  std::vector<Entry> out;
  for (Elt y = 0; y < n_; ++y)
    for (Elt w = y; w < n_; ++w) {
      uint32_t id = id_[tri(w) + y];
      if (id) out.push_back(Entry{y, w, store_[id]});
    }
  return out;
}

}  // namespace kcv
