#include "kcv/klcache.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <random>

#include "kcv/errors.hpp"

namespace kcv {

namespace {

// layout, little endian:
//   "KLC1" u32 version u64 descriptor_hash u64 enumeration_checksum u64 order u64 #entries
//   entries (y, w), y <= w, sorted by w then y:
//     varint dw (w - previous w), varint dy (y - previous y if dw == 0, else y)
//     u8 offset u8 count, count zigzag varints   (coefficients of q^offset..)
//   "CELL" u32 #cells u32 #classes i64[#cells * #classes], or "NONE"
//   u64 checksum: fnv1a over the 8-byte words of everything before it, zero padded
constexpr char kMagic[4] = {'K', 'L', 'C', '1'};
constexpr char kCellTag[4] = {'C', 'E', 'L', 'L'};
constexpr char kNoCells[4] = {'N', 'O', 'N', 'E'};

uint64_t checksum(const uint8_t* p, std::size_t n) {
  uint64_t h = 1469598103934665603ull ^ n;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    uint64_t w;
    std::memcpy(&w, p + i, 8);
    h = (h ^ w) * 1099511628211ull;
  }
  if (i < n) {
    uint64_t w = 0;
    std::memcpy(&w, p + i, n - i);
    h = (h ^ w) * 1099511628211ull;
  }
  return h ^ (h >> 29);
}

struct Writer {
  std::vector<uint8_t> out;
  template <class T>
  void put(T v) {
    uint8_t b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    out.insert(out.end(), b, b + sizeof(T));
  }
  void bytes(const char* p, std::size_t n) { out.insert(out.end(), p, p + n); }
  void varint(uint64_t v) {
    while (v >= 0x80) {
      out.push_back(uint8_t(v) | 0x80);
      v >>= 7;
    }
    out.push_back(uint8_t(v));
  }
  void zigzag(int64_t v) { varint((uint64_t(v) << 1) ^ uint64_t(v >> 63)); }
};

struct Reader {
  const uint8_t* p;
  std::size_t n, pos = 0;
  void need(std::size_t k) {
    if (pos + k > n) throw ChecksumMismatch("truncated cache file");
  }
  template <class T>
  T get() {
    need(sizeof(T));
    T v;
    std::memcpy(&v, p + pos, sizeof(T));
    pos += sizeof(T);
    return v;
  }
  uint64_t varint() {
    if (pos < n && p[pos] < 0x80) return p[pos++];
    uint64_t v = 0;
    for (int shift = 0;; shift += 7) {
      if (pos >= n || shift > 63) throw ChecksumMismatch("bad varint in cache file");
      uint8_t b = p[pos++];
      v |= uint64_t(b & 0x7f) << shift;
      if (!(b & 0x80)) return v;
    }
  }
  int64_t zigzag() {
    uint64_t u = varint();
    return int64_t(u >> 1) ^ -int64_t(u & 1);
  }
};

// open addressing over the few distinct polynomials, keyed by their encoded bytes
// (the encoding is canonical, so equal bytes means equal polynomials)
struct Interner {
  const uint8_t* base;
  std::vector<uint32_t> slot, start, len;
  std::vector<uint64_t> key;
  uint32_t count = 0;
  explicit Interner(const uint8_t* b) : base(b), slot(1024, 0), key(1024, 0) {}
  static uint64_t hash(const uint8_t* p, std::size_t n) {
    uint64_t h = 1469598103934665603ull ^ n;
    for (std::size_t i = 0; i < n; ++i) h = (h ^ p[i]) * 1099511628211ull;
    return h;
  }
  // 0 when new; the caller then assigns the next id
  uint32_t find_or_add(std::size_t at, std::size_t n, uint32_t next_id) {
    uint64_t h = hash(base + at, n);
    std::size_t mask = slot.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      if (!slot[i]) {
        slot[i] = next_id;
        key[i] = h;
        if (start.size() <= next_id) {
          start.resize(next_id + 1);
          len.resize(next_id + 1);
        }
        start[next_id] = uint32_t(at);
        len[next_id] = uint32_t(n);
        if (++count * 2 > slot.size()) grow();
        return 0;
      }
      uint32_t id = slot[i];
      if (key[i] == h && len[id] == n && !std::memcmp(base + start[id], base + at, n)) return id;
    }
  }
  void grow() {
    std::vector<uint32_t> s2(slot.size() * 2, 0);
    std::vector<uint64_t> k2(slot.size() * 2, 0);
    std::size_t mask = s2.size() - 1;
    for (std::size_t i = 0; i < slot.size(); ++i) {
      if (!slot[i]) continue;
      std::size_t j = key[i] & mask;
      while (s2[j]) j = (j + 1) & mask;
      s2[j] = slot[i];
      k2[j] = key[i];
    }
    slot.swap(s2);
    key.swap(k2);
  }
};

}  // namespace

std::vector<uint8_t> cache_serialize(const KLTable& kl, const std::vector<ClassFunction>* cell_chars) {
  const CoxeterGroup& g = kl.group();
  const std::size_t N = g.order();
  Writer w;
  w.bytes(kMagic, 4);
  w.put<uint32_t>(kCacheVersion);
  w.put<uint64_t>(g.descriptor_hash());
  w.put<uint64_t>(g.enumeration_checksum());
  w.put<uint64_t>(N);
  uint64_t count = 0;
  for (Elt x = 0; x < N; ++x)
    for (Elt y = 0; y <= x; ++y)
      if (kl.nonzero(y, x)) ++count;
  w.put<uint64_t>(count);
  w.out.reserve(w.out.size() + count * 6);
  Elt py = 0, px = 0;
  for (Elt x = 0; x < N; ++x)
    for (Elt y = 0; y <= x; ++y) {
      if (!kl.nonzero(y, x)) continue;
      const QPoly& p = kl.poly_q(y, x);
      std::size_t off = 0;
      while (off < p.size() && p[off] == 0) ++off;
      if (off > 255 || p.size() - off > 255) throw InternalError("polynomial too long for the cache format");
      w.varint(x - px);
      w.varint(x == px ? y - py : y);
      py = y;
      px = x;
      w.out.push_back(uint8_t(off));
      w.out.push_back(uint8_t(p.size() - off));
      for (std::size_t i = off; i < p.size(); ++i) w.zigzag(p[i]);
    }
  if (cell_chars && !cell_chars->empty()) {
    w.bytes(kCellTag, 4);
    w.put<uint32_t>(uint32_t(cell_chars->size()));
    w.put<uint32_t>(uint32_t(g.classes().size()));
    for (const auto& f : *cell_chars)
      for (const auto& v : f.values) w.put<int64_t>(v.to_integer());
  } else {
    w.bytes(kNoCells, 4);
  }
  w.put<uint64_t>(checksum(w.out.data(), w.out.size()));
  return w.out;
}

CacheContents cache_parse(const GroupPtr& gp, const std::vector<uint8_t>& bytes, int validate) {
  const CoxeterGroup& g = *gp;
  Reader r{bytes.data(), bytes.size()};
  r.need(4);
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw ChecksumMismatch("not a KLC1 cache file");
  r.pos = 4;
  uint32_t version = r.get<uint32_t>();
  if (version != kCacheVersion)
    throw VersionMismatch("cache version " + std::to_string(version) + ", expected " + std::to_string(kCacheVersion));
  if (bytes.size() < 16) throw ChecksumMismatch("truncated cache file");
  uint64_t stored_sum;
  std::memcpy(&stored_sum, bytes.data() + bytes.size() - 8, 8);
  if (checksum(bytes.data(), bytes.size() - 8) != stored_sum) throw ChecksumMismatch("corrupted cache body");
  r.n = bytes.size() - 8;
  if (r.get<uint64_t>() != g.descriptor_hash()) throw ChecksumMismatch("cache belongs to another group");
  if (r.get<uint64_t>() != g.enumeration_checksum()) throw ChecksumMismatch("element enumeration differs");
  const uint64_t N = r.get<uint64_t>();
  if (N != g.order()) throw ChecksumMismatch("group order differs");
  const uint64_t count = r.get<uint64_t>();

  std::vector<uint32_t> ids(KLTable::tri(Elt(N)), 0);
  std::vector<QPoly> store{QPoly{}, QPoly{1}};
  std::vector<std::vector<MuEntry>> mu(N);
  Interner in(bytes.data());
  // Polynomial encodings of at most 8 bytes are looked up by one little-endian word.
  // The encoding is prefix free, so the masked word identifies it; it is never 0 since len >= 1.
  constexpr int kShortBits = 12;
  std::vector<uint64_t> short_key(std::size_t(1) << kShortBits, 0);
  std::vector<uint32_t> short_id(short_key.size(), 0);
  const std::size_t short_mask = short_key.size() - 1;
  std::size_t short_count = 1;
  {
    const uint64_t one = 0x020100;  // off 0, len 1, zigzag(1)
    std::size_t i = (one * 0x9E3779B97F4A7C15ull) >> (64 - kShortBits);
    short_key[i] = one;
    short_id[i] = 1;
  }
  // mu(y,x) != 0 exactly when P_{y,x} reaches the top degree, so l(x) - l(y) = 2 deg + 1
  std::vector<int> mu_gap{-1, 1};
  const uint8_t* const p = r.p;
  const std::size_t end = r.n;  // the 8 checksum bytes follow, so an 8-byte load at pos <= end stays inside
  QPoly poly;
  uint64_t y = 0, x = 0;
  std::size_t row = 0;
  int lx = 0;
  std::size_t pos = r.pos;
  for (uint64_t k = 0; k < count; ++k) {
    uint64_t dx, dy;
    if (pos + 2 <= end && p[pos] < 0x80 && p[pos + 1] < 0x80) {
      dx = p[pos];
      dy = p[pos + 1];
      pos += 2;
    } else {
      r.pos = pos;
      dx = r.varint();
      dy = r.varint();
      pos = r.pos;
    }
    if (k && dx == 0 && dy == 0) throw ChecksumMismatch("entries out of order");
    x += dx;
    y = dx ? dy : y + dy;
    if (x >= N || y > x) throw ChecksumMismatch("entry outside the group");
    if (dx || !k) {
      row = KLTable::tri(Elt(x));
      lx = g.length(Elt(x));
    }

    if (pos + 2 > end) throw ChecksumMismatch("truncated cache file");
    uint64_t word;
    std::memcpy(&word, p + pos, 8);
    const unsigned len = (word >> 8) & 0xff;
    uint64_t key = 0;
    if (len - 1 < 6) {  // one byte per coefficient
      const uint64_t m = ~uint64_t(0) >> (64 - 8 * (len + 2));
      if (!(word & m & 0x8080808080800000ull)) key = word & m;
    }
    uint32_t id = 0;
    std::size_t slot = short_key.size();
    if (key) {
      if (pos + len + 2 > end) throw ChecksumMismatch("truncated cache file");
      for (std::size_t i = (key * 0x9E3779B97F4A7C15ull) >> (64 - kShortBits);; i = (i + 1) & short_mask) {
        if (short_key[i] == key) {
          id = short_id[i];
          break;
        }
        if (!short_key[i]) {
          if (2 * short_count < short_key.size()) slot = i;
          break;
        }
      }
    }
    if (id) {
      pos += len + 2;
    } else {
      r.pos = pos + 2;
      poly.assign(word & 0xff, 0);
      for (unsigned i = 0; i < len; ++i) poly.push_back(r.zigzag());
      if (poly.empty() || poly.back() == 0) throw ChecksumMismatch("untrimmed polynomial");
      if (slot < short_key.size()) {
        short_key[slot] = key;
        short_id[slot] = id = uint32_t(store.size());
        ++short_count;
      } else {
        id = in.find_or_add(pos, r.pos - pos, uint32_t(store.size()));
      }
      if (!id) id = uint32_t(store.size());
      if (id == store.size()) {
        store.push_back(poly);
        mu_gap.push_back(2 * int(poly.size()) - 1);
      }
      pos = r.pos;
    }
    ids[row + y] = id;
    if (lx - g.length(Elt(y)) == mu_gap[id]) mu[x].push_back(MuEntry{Elt(y), int(store[id].back())});
  }
  r.pos = pos;
  for (Elt w = 0; w < N; ++w)
    if (ids[KLTable::tri(w) + w] != 1) throw ChecksumMismatch("diagonal entry is not 1");

  CacheContents out;
  r.need(4);
  const char* tag = reinterpret_cast<const char*>(&bytes[r.pos]);
  r.pos += 4;
  if (!std::memcmp(tag, kCellTag, 4)) {
    uint32_t nc = r.get<uint32_t>(), ncl = r.get<uint32_t>();
    if (ncl != g.classes().size()) throw ChecksumMismatch("class count differs");
    out.cell_characters.assign(nc, std::vector<long long>(ncl));
    for (auto& row : out.cell_characters)
      for (auto& v : row) v = r.get<int64_t>();
  } else if (std::memcmp(tag, kNoCells, 4)) {
    throw ChecksumMismatch("unknown cache section");
  }
  if (r.pos != r.n) throw ChecksumMismatch("trailing bytes in cache file");

  out.kl = KLTable::from_interned(gp, std::move(ids), std::move(store), std::move(mu));
  // spot check against the recursion
  std::mt19937_64 rng(g.descriptor_hash());
  std::uniform_int_distribution<uint64_t> pick(0, N - 1);
  for (int i = 0; i < validate; ++i) {
    Elt a = Elt(pick(rng)), b = Elt(pick(rng));
    if (a > b) std::swap(a, b);
    if (out.kl->recompute(a, b) != out.kl->poly_q(a, b))
      throw ChecksumMismatch("entry (" + std::to_string(a) + "," + std::to_string(b) + ") fails recomputation");
  }
  return out;
}

void cache_save(const std::string& path, const KLTable& kl, const std::vector<ClassFunction>* cell_chars) {
  auto bytes = cache_serialize(kl, cell_chars);
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write cache file " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!f) throw Error("cannot write cache file " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot move cache file into place: " + path);
}

CacheContents cache_load(const GroupPtr& g, const std::string& path, int validate) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open cache file " + path);
  f.seekg(0, std::ios::end);
  std::vector<uint8_t> bytes(std::size_t(f.tellg()));
  f.seekg(0);
  f.read(reinterpret_cast<char*>(bytes.data()), std::streamsize(bytes.size()));
  return cache_parse(g, bytes, validate);
}

std::string cache_file_name(const CoxeterGroup& g) {
  std::string s;
  for (char c : g.name())
    if (std::isalnum(static_cast<unsigned char>(c))) s += c;
  return s + ".klc1";
}

std::string resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* e = std::getenv("KCV_CACHE_DIR")) return e;
  return "";
}

}  // namespace kcv
