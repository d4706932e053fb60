#include "kcv/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "kcv/errors.hpp"
#include "kcv/klcache.hpp"
#include "kcv/kottwitz.hpp"
#include "kcv/symbols.hpp"

namespace kcv {

using nlohmann::json;

void CheckResult::expect(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  passed = false;
  if (failures.size() < 8) failures.push_back(what);
}

std::string version_stamp() {
  std::ostringstream s;
  s << "kcv 1.0.0; C++ " << __cplusplus << "; ";
#if defined(__clang__)
  s << "clang " << __clang_version__;
#elif defined(__GNUC__)
  s << "gcc " << __VERSION__;
#else
  s << "unknown compiler";
#endif
  return s.str();
}

json VerificationReport::to_json() const {
  json j;
  j["schema"] = "kcv-report/1";
  j["mode"] = mode;
  j["group"] = json::parse(group);
  j["automorphism"] = json::parse(automorphism);
  json recs = json::array();
  for (const auto& r : records)
    recs.push_back({{"section", r.section},
                    {"class_id", r.class_id},
                    {"class_rep_word", r.class_rep_word},
                    {"class_size", r.class_size},
                    {"cell_id", r.cell_id},
                    {"cell_size", r.cell_size},
                    {"intersection_count", r.intersection_count},
                    {"scalar_product", r.scalar_product},
                    {"match", r.match}});
  j["records"] = recs;
  json ch = json::object();
  for (const auto& [name, c] : checks)
    ch[name] = {{"passed", c.passed}, {"checked", c.checked}, {"failures", c.failures}};
  j["checks"] = ch;
  j["summary"] = {{"cells", cells},
                  {"classes", classes},
                  {"records", records.size()},
                  {"mismatches", mismatches},
                  {"wall_time_ms", wall_time_ms}};
  j["version"] = version_stamp();
  return j;
}

std::string VerificationReport::dump() const { return to_json().dump(2) + "\n"; }

namespace {

using Clock = std::chrono::steady_clock;

std::size_t intersect(const std::vector<Elt>& a, const std::vector<Elt>& b) {
  std::size_t k = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++k; ++i; ++j; }
  }
  return k;
}

// work items handed out through an atomic counter; first exception wins
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f) {
  int k = std::max(1, std::min<int>(jobs, int(n)));
  if (k <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < k; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> l(mu);
          if (!err) err = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

json group_json(const CoxeterGroup& g) {
  json j{{"name", g.name()}, {"type", series_name(g.series())}, {"rank", g.rank()}, {"order", g.order()}};
  if (g.series() == Series::I2) j["m"] = g.m();
  std::ostringstream h;
  h << std::hex << g.descriptor_hash();
  j["descriptor_hash"] = h.str();
  return j;
}

json automorphism_json(const DiagramAutomorphism& d) {
  return {{"kind", d.kind}, {"generator_permutation", d.gen_perm}, {"order", d.order}};
}

void finish(VerificationReport& rep, Clock::time_point t0, const VerifyOptions& opt) {
  std::sort(rep.records.begin(), rep.records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.section, a.class_id, a.cell_id) < std::tie(b.section, b.class_id, b.cell_id);
  });
  rep.mismatches = 0;
  for (const auto& r : rep.records)
    if (!r.match) ++rep.mismatches;
  for (const auto& [_, c] : rep.checks)
    if (!c.passed) ++rep.mismatches;
  if (opt.timing)
    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// one row of Irr per two-sided cell: union of constituents of its cells
std::vector<int> constituents(const CharacterTable& t, const std::vector<const ClassFunction*>& chars) {
  std::set<int> s;
  for (const auto* f : chars) {
    auto m = t.decompose(*f);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) s.insert(int(i));
  }
  return {s.begin(), s.end()};
}

BiPartition label_of(const CharacterTable& t, int i) { return {t.labels[i].alpha, t.labels[i].beta}; }

Record make_record(const std::string& section, const CoxeterGroup& g, uint32_t cls, Elt rep_elt,
                   std::size_t class_size, uint32_t cell, std::size_t cell_size, long long count, long long sp) {
  Record r;
  r.section = section;
  r.class_id = cls;
  r.class_rep_word = g.word_string(rep_elt);
  r.class_size = class_size;
  r.cell_id = cell;
  r.cell_size = cell_size;
  r.intersection_count = count;
  r.scalar_product = sp;
  r.match = count == sp;
  return r;
}

// classes x cells, both sides independently
void kottwitz_records(VerificationReport& rep, const std::string& section, const CoxeterGroup& g,
                      const std::vector<uint32_t>& cls_ids, const std::vector<Elt>& reps,
                      const std::vector<std::vector<Elt>>& members, const std::vector<ClassFunction>& ups,
                      const std::vector<std::vector<Elt>>& cells, const std::vector<ClassFunction>& chars,
                      int jobs) {
  std::vector<std::vector<Record>> out(cls_ids.size());
  parallel_for(cls_ids.size(), jobs, [&](std::size_t i) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      out[i].push_back(make_record(section, g, cls_ids[i], reps[i], members[i].size(), uint32_t(c), cells[c].size(),
                                   (long long)intersect(members[i], cells[c]), int_scalar_product(ups[i], chars[c])));
  });
  for (auto& v : out)
    for (auto& r : v) rep.records.push_back(std::move(r));
}

std::vector<ClassFunction> to_class_functions(const CoxeterGroup& g, const std::vector<std::vector<long long>>& rows) {
  std::vector<ClassFunction> out;
  for (const auto& r : rows) out.push_back(from_integer_values(g, r));
  return out;
}

// character of W' = W_m x H evaluated through the letter split of reduced words
using WordChar = std::function<Cyclo(const std::vector<int>&)>;

ClassFunction induce_product(const CoxeterGroup& g, int m, const WordChar& left) {
  unsigned mask = 0;
  for (int s = 0; s < g.rank(); ++s)
    if (s != m) mask |= 1u << s;
  auto P = g.parabolic(mask);
  std::vector<Cyclo> psi;
  psi.reserve(P.elements.size());
  for (Elt x : P.elements) {
    std::vector<int> lo;
    int hi = 0;
    for (int s : g.word(x)) {
      if (s < m) lo.push_back(s);
      else ++hi;
    }
    Cyclo v = left(lo);
    psi.push_back(hi & 1 ? Cyclo(0) - v : v);
  }
  return induce(Subgroup{&g, P.elements}, psi);
}

}  // namespace

int special_of_family(const CharacterTable& t, const std::vector<int>& family) {
  if (family.empty()) throw InternalError("empty family");
  int best = family[0], count = 0;
  for (int i : family) {
    if (t.b[i] < t.b[best]) {
      best = i;
      count = 1;
    } else if (t.b[i] == t.b[best]) {
      ++count;
    }
  }
  if (count != 1) throw InternalError("minimal b is not attained uniquely in a family of " + t.group->name());
  return best;
}

CellData cell_data(const GroupPtr& g, const VerifyOptions& opt) {
  CellData cd;
  cd.group = g;
  std::string dir = resolve_cache_dir(opt.cache_dir);
  std::string path;
  if (!dir.empty()) path = (std::filesystem::path(dir) / cache_file_name(*g)).string();
  std::vector<std::vector<long long>> cached_chars;
  if (!path.empty() && std::filesystem::exists(path)) {
    try {
      auto cc = cache_load(g, path);
      cd.kl = cc.kl;
      cached_chars = std::move(cc.cell_characters);
      cd.from_cache = true;
    } catch (const std::exception& e) {
      std::cerr << "kcv: ignoring cache " << path << " (" << e.what() << "), recomputing\n";
    }
  }
  if (!cd.kl) cd.kl = KLTable::compute(g);
  cd.cells = left_cells(*cd.kl);
  if (cd.from_cache && cached_chars.size() == cd.cells.size()) {
    cd.characters = to_class_functions(*g, cached_chars);
  } else {
    cd.characters = cell_characters(cd.cells);
    if (cd.from_cache) cd.from_cache = false;
  }
  if (!path.empty() && !cd.from_cache) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    try {
      cache_save(path, *cd.kl, &cd.characters);
    } catch (const std::exception& e) {
      std::cerr << "kcv: could not write cache (" << e.what() << ")\n";
    }
  }
  return cd;
}

VerificationReport verify_kottwitz(Series series, int k, const std::string& twist, const VerifyOptions& opt) {
  auto t0 = Clock::now();
  auto g = build_group(series, k, opt.max_order);
  auto d = automorphism_from_twist(*g, twist);
  auto cd = cell_data(g, opt);
  auto tc = twisted_conjugacy_classes(*g, d);
  auto ids = tc.involution_classes();

  std::vector<Elt> reps;
  std::vector<std::vector<Elt>> members;
  for (auto c : ids) {
    reps.push_back(tc.reps[c]);
    members.push_back(tc.members[c]);
  }
  std::vector<ClassFunction> ups(ids.size());
  parallel_for(ids.size(), opt.jobs, [&](std::size_t i) { ups[i] = upsilon(*g, d, reps[i]).chi; });

  VerificationReport rep;
  rep.mode = "kottwitz";
  rep.group = group_json(*g).dump();
  rep.automorphism = automorphism_json(d).dump();
  rep.cells = cd.cells.size();
  rep.classes = ids.size();
  rep.cache_hit = cd.from_cache;
  kottwitz_records(rep, "kottwitz", *g, ids, reps, members, ups, cd.cells.left_cells, cd.characters, opt.jobs);
  finish(rep, t0, opt);
  return rep;
}

namespace {

struct BData {
  DInB ctx;
  CellData dcd;
  LCells L;
  TablePtr TB;
  std::vector<uint32_t> inv;           // involution classes of B
  std::vector<ClassFunction> modified; // parallel to inv
  std::vector<int> lspecial;           // per two-sided L-cell, row of TB
  std::vector<std::vector<int>> lirr;  // per two-sided L-cell
};

void build_lcell_labels(BData& bd, CheckResult* count_check) {
  const auto& TB = *bd.TB;
  bd.lirr.clear();
  bd.lspecial.clear();
  for (std::size_t T = 0; T < bd.L.two_sided.size(); ++T) {
    std::vector<const ClassFunction*> fs;
    for (std::size_t c = 0; c < bd.L.cells.size(); ++c)
      if (bd.L.two_sided_of_cell[c] == T) fs.push_back(&bd.L.characters[c]);
    auto irr = constituents(TB, fs);
    std::vector<int> cand;
    for (int i : irr)
      if (a_diamond(label_of(TB, i)) == TB.b[i]) cand.push_back(i);
    if (cand.size() != 1)
      throw InternalError("two-sided L-cell " + std::to_string(T) + " has " + std::to_string(cand.size()) +
                          " constituents with a = b");
    if (count_check)
      count_check->expect(is_diamond_special(label_of(TB, cand[0])),
                          "label " + to_string(label_of(TB, cand[0])) + " is not diamond-special");
    bd.lirr.push_back(irr);
    bd.lspecial.push_back(cand[0]);
  }
}

BData b_data(DInB ctx, const CellData* dcd, const VerifyOptions& opt, int jobs) {
  BData bd{std::move(ctx), {}, {}, {}, {}, {}, {}, {}};
  bd.dcd = dcd ? *dcd : cell_data(bd.ctx.D, opt);
  bd.L = extended_l_cells(bd.ctx, bd.dcd.cells, bd.ctx.swap, &bd.dcd.characters);
  bd.TB = character_table(bd.ctx.B);
  bd.inv = involution_classes(*bd.ctx.B);
  bd.modified.resize(bd.inv.size());
  parallel_for(bd.inv.size(), jobs, [&](std::size_t i) { bd.modified[i] = modified_upsilon_Bn(bd.ctx, bd.inv[i]); });
  return bd;
}

// |C n c~| = chi0(1) |C n Gamma~|
void lcell_proportionality(const BData& bd, CheckResult& chk) {
  const auto& B = *bd.ctx.B;
  for (std::size_t i = 0; i < bd.inv.size(); ++i) {
    const auto& C = B.classes().members[bd.inv[i]];
    for (std::size_t c = 0; c < bd.L.cells.size(); ++c) {
      uint32_t T = bd.L.two_sided_of_cell[c];
      long long big = (long long)intersect(C, bd.L.two_sided[T]);
      long long small = (long long)intersect(C, bd.L.cells[c]);
      long long deg = bd.TB->degree(bd.lspecial[T]);
      chk.expect(big == deg * small, "class " + B.word_string(B.classes().reps[bd.inv[i]]) + ", L-cell " +
                                         std::to_string(c) + ": " + std::to_string(big) + " != " +
                                         std::to_string(deg) + "*" + std::to_string(small));
    }
  }
}

}  // namespace

VerificationReport verify_modified_Bn(int n, const VerifyOptions& opt) {
  auto t0 = Clock::now();
  if (n < 2) throw UnsupportedType("modified mode needs n >= 2");
  BData bd = b_data(make_d_in_b(n, opt.max_order), nullptr, opt, opt.jobs);
  const auto& B = *bd.ctx.B;
  const auto& D = *bd.ctx.D;
  VerificationReport rep;
  rep.mode = "modified";
  rep.group = group_json(B).dump();
  rep.automorphism = automorphism_json(bd.ctx.swap).dump();
  rep.cache_hit = bd.dcd.from_cache;
  rep.cells = bd.L.cells.size();

  {
    std::vector<Elt> reps;
    std::vector<std::vector<Elt>> members;
    for (auto c : bd.inv) {
      reps.push_back(B.classes().reps[c]);
      members.push_back(B.classes().members[c]);
    }
    kottwitz_records(rep, "modified", B, bd.inv, reps, members, bd.modified, bd.L.cells, bd.L.characters, opt.jobs);
  }

  // split and quasi-split statements for D_n from the same cells
  auto idD = identity_automorphism(D);
  const auto& swap = bd.ctx.swap;
  auto tc1 = twisted_conjugacy_classes(D, idD);
  auto tcs = twisted_conjugacy_classes(D, swap);
  std::size_t nclasses = bd.inv.size();
  using Pass = std::tuple<const char*, const TwistedClasses*, const DiagramAutomorphism*>;
  for (auto [section, tc, dd] : {Pass{"split", &tc1, &idD}, Pass{"quasi_split", &tcs, &swap}}) {
    auto ids = tc->involution_classes();
    std::vector<Elt> reps;
    std::vector<std::vector<Elt>> members;
    for (auto c : ids) {
      reps.push_back(tc->reps[c]);
      members.push_back(tc->members[c]);
    }
    std::vector<ClassFunction> ups(ids.size());
    parallel_for(ids.size(), opt.jobs, [&](std::size_t i) { ups[i] = upsilon(D, *dd, reps[i]).chi; });
    kottwitz_records(rep, section, D, ids, reps, members, ups, bd.dcd.cells.left_cells, bd.dcd.characters, opt.jobs);
    nclasses += ids.size();
  }
  rep.classes = nclasses;

  // restriction of the modified characters: single class, split pair, outer coset
  auto& abc = rep.checks["restriction_abc"];
  for (std::size_t i = 0; i < bd.inv.size(); ++i) {
    const auto& C = B.classes().members[bd.inv[i]];
    auto res = restrict_b_to_d(bd.ctx, bd.modified[i]);
    std::string what = "class " + B.word_string(C[0]);
    if (bd.ctx.in_D(C[0])) {
      std::set<uint32_t> dcls;
      for (Elt x : C) dcls.insert(D.classes().class_of[bd.ctx.restrict_to_D[x]]);
      ClassFunction expect(D);
      for (auto c : dcls) expect += upsilon(D, idD, D.classes().reps[c]).chi;
      abc.expect(dcls.size() <= 2 && res == expect, what + " (inside D)");
    } else {
      Elt w = bd.ctx.restrict_to_D[B.multiply(bd.ctx.t, C[0])];
      abc.expect(res == upsilon(D, swap, w).chi, what + " (outer coset)");
    }
  }
  build_lcell_labels(bd, nullptr);
  lcell_proportionality(bd, rep.checks["lcell_proportionality"]);
  finish(rep, t0, opt);
  return rep;
}

namespace {

struct GenericData {
  GroupPtr g;
  DiagramAutomorphism d;
  CellData cd;
  TwistedClasses tc;
  std::vector<uint32_t> ids;
  std::vector<ClassFunction> ups;
  std::vector<std::vector<long long>> counts;  // [class][cell]
};

void three_way(const GenericData& G, CheckResult& chk, int jobs) {
  const auto& g = *G.g;
  std::vector<std::vector<std::pair<bool, std::string>>> res(G.ids.size());
  parallel_for(G.ids.size(), jobs, [&](std::size_t i) {
    auto& out = res[i];
    uint32_t cls = G.ids[i];
    Elt w = G.tc.reps[cls];
    std::string at = " at " + g.word_string(w);
    auto e = epsilon_character(g, G.d, w);
    out.push_back({e.values == epsilon_by_scan(g, G.d, w, e.centralizer), "eps generators vs scan" + at});
    auto mr = minimal_twisted_rep(g, G.d, G.tc, cls);
    auto hs = howlett_split(g, G.d, mr);
    out.push_back({minl_signs(g, mr, hs) == epsilon_by_scan(g, G.d, mr.w_I, hs.centralizer),
                   "coset sign vs root count" + at});
    const auto& a = G.ups[i];
    out.push_back({upsilon_minl(g, G.d, G.tc, cls).chi == a, "induced-eps vs minl" + at});
    auto lv = lv_module(g, G.d, G.tc, cls);
    out.push_back({satisfies_relations(lv), "LV relations" + at});
    out.push_back({module_character(lv) == a, "induced-eps vs LV" + at});
    Elt w2 = G.tc.members[cls].back();
    out.push_back({upsilon(g, G.d, w2).chi == a, "conjugate " + g.word_string(w2) + at});
  });
  for (auto& v : res)
    for (auto& [ok, what] : v) chk.expect(ok, what);
}

void cell_sum(const GenericData& G, CheckResult& chk) {
  ClassFunction s(*G.g);
  long long deg = 0;
  for (const auto& f : G.cd.characters) {
    s += f;
    deg += f.degree().to_integer();
  }
  chk.expect(s == regular_character(*G.g), "sum of cell characters is not regular");
  chk.expect(deg == (long long)G.g->order(), "degrees sum to " + std::to_string(deg));
}

void dperm(const GenericData& G, CheckResult& chk) {
  const auto& g = *G.g;
  const auto& P = G.cd.cells;
  auto perm = diamond_on_cells(P, G.d);
  std::vector<char> hit(P.size(), 0);
  for (std::size_t c = 0; c < P.size(); ++c) {
    std::vector<Elt> img;
    for (Elt x : P.left_cells[c]) img.push_back(G.d(x));
    std::sort(img.begin(), img.end());
    chk.expect(perm[c] < P.size() && P.left_cells[perm[c]] == img, "image of cell " + std::to_string(c));
    if (perm[c] < P.size()) hit[perm[c]] = 1;
    for (std::size_t k = 0; k < g.classes().size(); ++k)
      chk.expect(G.cd.characters[perm[c]].at_class(k) == G.cd.characters[c](G.d(g.classes().reps[k])),
                 "trace identity, cell " + std::to_string(c) + " class " + std::to_string(k));
  }
  chk.expect(std::all_of(hit.begin(), hit.end(), [](char h) { return h; }), "cell map is not onto");
  for (std::size_t c = 0; c < P.size(); ++c) {
    bool stable = P.two_sided_of_cell[perm[c]] == P.two_sided_of_cell[c];
    if (stable) continue;
    for (std::size_t i = 0; i < G.ids.size(); ++i) {
      chk.expect(G.counts[i][c] == 0, "unstable cell meets a class");
      chk.expect(int_scalar_product(G.ups[i], G.cd.characters[c]) == 0, "unstable cell pairs nontrivially");
    }
  }
}

void w0_transfer(const GenericData& G, CheckResult& chk) {
  const auto& g = *G.g;
  const auto& P = G.cd.cells;
  Elt w0 = g.longest();
  auto one = identity_automorphism(g);
  auto sgn = sign_character(g);
  for (std::size_t i = 0; i < G.ids.size(); ++i) {
    const auto& C = G.tc.members[G.ids[i]];
    Elt v = g.multiply(w0, C[0]);
    uint32_t oc = g.classes().class_of[v];
    std::vector<Elt> shifted;
    for (Elt x : C) shifted.push_back(g.multiply(w0, x));
    std::sort(shifted.begin(), shifted.end());
    chk.expect(shifted == g.classes().members[oc], "w0 C is not an ordinary class");
    auto u1 = upsilon(g, one, v).chi;
    for (std::size_t c = 0; c < P.size(); ++c) {
      std::vector<Elt> wc;
      for (Elt x : P.left_cells[c]) wc.push_back(g.multiply(w0, x));
      std::sort(wc.begin(), wc.end());
      uint32_t c2 = P.left_of[wc[0]];
      bool is_cell = P.left_cells[c2] == wc;
      chk.expect(is_cell, "w0 Gamma is not a left cell");
      if (!is_cell) continue;
      if (i == 0) chk.expect(G.cd.characters[c2] == tensor(G.cd.characters[c], sgn), "[w0 Gamma] != [Gamma] x sign");
      chk.expect(int_scalar_product(G.ups[i], G.cd.characters[c]) == int_scalar_product(u1, G.cd.characters[c2]),
                 "scalar products differ under w0");
      chk.expect(G.counts[i][c] == (long long)intersect(g.classes().members[oc], wc), "counts differ under w0");
    }
  }
}

void split_sign(const CharacterTable& TD, int n, CheckResult& chk) {
  if (n % 2) return;
  for (const auto& a : partitions(n / 2)) {
    try {
      auto r = resolve_split_pair(TD, a);
      chk.expect(r.difference == r.expected, "sign identity for " + to_string(a));
    } catch (const InconsistentSplit& e) {
      chk.expect(false, e.what());
    }
  }
}

void pieri(const CharacterTable& TD, int n, CheckResult& chk) {
  if (n % 2) return;
  const auto& D = *TD.group;
  for (int r = 2; r <= n; r += 2) {
    int m = n - r;
    std::vector<Partition> alphas = m ? partitions(m / 2) : std::vector<Partition>{Partition{}};
    for (const auto& a1 : alphas) {
      WordChar left;
      if (m == 0) {
        left = [](const std::vector<int>&) { return Cyclo(1); };
      } else {
        auto Dm = cached_group(Series::D, m);
        auto Tm = character_table(Dm);
        int row = Tm->find_split(a1, +1);
        left = [Dm, Tm, row](const std::vector<int>& w) { return Tm->rows[row](Dm->from_word(w)); };
      }
      auto ind = induce_product(D, m, left);
      auto mult = TD.decompose(ind);
      auto allowed = add_boxes_distinct_rows(a1, r / 2);
      std::string at = "r=" + std::to_string(r) + " alpha'=" + to_string(a1);
      for (const auto& a : partitions(n / 2)) {
        bool want = std::find(allowed.begin(), allowed.end(), a) != allowed.end();
        chk.expect(mult[TD.find_split(a, +1)] == (want ? 1 : 0), "[" + to_string(a) + ",+] " + at);
        chk.expect(mult[TD.find_split(a, -1)] == 0, "forbidden [" + to_string(a) + ",-] " + at);
      }
    }
  }
}

long long kottwitz_b(const BiPartition& ab, int l, int j) {
  if (!is_diamond_special(ab) || size_of(ab.second) != j) return 0;
  return binom(c_invariant(ab), j + l - d0_invariant(ab));
}

void kottwitz_multiplicity(const DInB& ctx, const CharacterTable& TD, CheckResult& mult_chk,
                           CheckResult& dich_chk) {
  const int n = ctx.n;
  const auto& B = *ctx.B;
  const auto& D = *ctx.D;
  auto one = identity_automorphism(D);
  for (int l = 0; l <= n; ++l)
    for (int j = 0; l + 2 * j <= n; ++j) {
      Elt s = sigma_lj(B, l, j);
      std::vector<std::pair<Elt, int>> targets;  // D element, split sign
      if (l % 2 == 0) {
        targets.push_back({ctx.restrict_to_D[s], +1});
        if (l == 0 && 2 * j == n) targets.push_back({ctx.restrict_to_D[B.multiply(B.multiply(ctx.t, s), ctx.t)], -1});
      } else {
        targets.push_back({ctx.restrict_to_D[B.multiply(ctx.t, s)], 0});
      }
      for (auto [w, sg] : targets) {
        auto ups = (l % 2 ? upsilon(D, ctx.swap, w) : upsilon(D, one, w)).chi;
        auto m = TD.decompose(ups);
        std::string at = "(l,j)=(" + std::to_string(l) + "," + std::to_string(j) + ") at " + D.word_string(w);
        for (std::size_t i = 0; i < TD.size(); ++i) {
          const auto& L = TD.labels[i];
          long long want;
          if (L.split) {
            want = (L.split == sg) ? kottwitz_b({L.alpha, L.alpha}, l, j) : 0;
          } else {
            want = kottwitz_b({L.alpha, L.beta}, l, j) + kottwitz_b({L.beta, L.alpha}, l, j);
          }
          mult_chk.expect(m[i] == want, L.name + " " + at);
          if (m[i]) dich_chk.expect((2 * j == n) == (L.split != 0), L.name + " " + at);
        }
      }
    }
}

void proportionality(const GenericData& G, const CharacterTable& TD, CheckResult& chk) {
  const auto& P = G.cd.cells;
  for (std::size_t T = 0; T < P.two_sided.size(); ++T) {
    std::vector<const ClassFunction*> fs;
    for (auto c : P.two_sided[T]) fs.push_back(&G.cd.characters[c]);
    long long deg = TD.degree(special_of_family(TD, constituents(TD, fs)));
    for (std::size_t i = 0; i < G.ids.size(); ++i) {
      long long big = 0;
      for (auto c : P.two_sided[T]) big += G.counts[i][c];
      for (auto c : P.two_sided[T])
        chk.expect(big == deg * G.counts[i][c], "family " + std::to_string(T) + " class " +
                                                     G.g->word_string(G.tc.reps[G.ids[i]]));
    }
  }
}

void cell_involutions(const GenericData& G, const CharacterTable& T, CheckResult& chk) {
  const auto& g = *G.g;
  for (std::size_t c = 0; c < G.cd.cells.size(); ++c) {
    auto m = T.decompose(G.cd.characters[c]);
    long long total = 0;
    bool free = true;
    for (auto x : m) {
      total += x;
      free = free && x <= 1;
    }
    long long inv = 0;
    for (Elt x : G.cd.cells.left_cells[c])
      if (g.multiply(x, x) == g.identity()) ++inv;
    chk.expect(free, "cell " + std::to_string(c) + " is not multiplicity-free");
    chk.expect(total == inv, "cell " + std::to_string(c) + ": " + std::to_string(total) + " constituents, " +
                                 std::to_string(inv) + " involutions");
  }
}

void diamond_chars(const CharacterTable& TD, const DiagramAutomorphism& d, CheckResult& chk) {
  auto p = diamond_on_characters(TD, d);
  for (std::size_t i = 0; i < TD.size(); ++i) {
    const auto& L = TD.labels[i];
    int want = L.split ? TD.find_split(L.alpha, -L.split) : int(i);
    chk.expect(p[i] == want, "diamond on " + L.name);
  }
}

// characters of W~_m as functions on words in t, s_1..s_{m-1}
struct SmallB {
  int m = 0;
  GroupPtr g;
  TablePtr T;
  std::vector<BiPartition> labels;
  std::vector<std::vector<int>> irr;  // per two-sided L-cell, indices into labels
  std::vector<int> special;           // per two-sided L-cell
  Cyclo eval(std::size_t k, const std::vector<int>& w) const {
    if (m == 0) return Cyclo(1);
    if (m == 1) {
      // ((1),()) trivial, ((),(1)) the sign of t
      if (labels[k].first.empty()) return Cyclo(w.size() % 2 ? -1 : 1);
      return Cyclo(1);
    }
    return T->rows[k](g->from_word(w));
  }
};

SmallB small_b(int m, const VerifyOptions& opt) {
  SmallB s;
  s.m = m;
  if (m == 0) {
    s.labels = {{{}, {}}};
    s.irr = {{0}};
    s.special = {0};
    return s;
  }
  if (m == 1) {
    s.labels = {{{1}, {}}, {{}, {1}}};
    s.irr = {{0, 1}};
    s.special = {0};
    return s;
  }
  BData bd{make_d_in_b(m, opt.max_order), {}, {}, {}, {}, {}, {}, {}};
  bd.dcd = cell_data(bd.ctx.D, opt);
  bd.L = extended_l_cells(bd.ctx, bd.dcd.cells, bd.ctx.swap, &bd.dcd.characters);
  bd.TB = character_table(bd.ctx.B);
  build_lcell_labels(bd, nullptr);
  s.g = bd.ctx.B;
  s.T = bd.TB;
  for (std::size_t i = 0; i < s.T->size(); ++i) s.labels.push_back(label_of(*s.T, int(i)));
  s.irr = bd.lirr;
  s.special = bd.lspecial;
  return s;
}

void jr_bookkeeping(const BData& bd, const VerifyOptions& opt, CheckResult& chk) {
  const int n = bd.ctx.n;
  const auto& B = *bd.ctx.B;
  const auto& TB = *bd.TB;
  for (int r = 1; r <= n; ++r) {
    int m = n - r;
    auto S = small_b(m, opt);
    for (std::size_t T1 = 0; T1 < S.irr.size(); ++T1) {
      std::set<int> image;
      bool smooth = true;
      for (int k : S.irr[T1]) {
        auto ind = induce_product(B, m, [&](const std::vector<int>& w) { return S.eval(std::size_t(k), w); });
        auto mult = TB.decompose(ind);
        int target = a_diamond(S.labels[k]) + r * (r - 1) / 2;
        std::vector<int> hits;
        long long tot = 0;
        for (std::size_t i = 0; i < mult.size(); ++i)
          if (mult[i] && a_diamond(label_of(TB, int(i))) == target) {
            hits.push_back(int(i));
            tot += mult[i];
          }
        if (hits.size() != 1 || tot != 1 || image.count(hits[0])) {
          smooth = false;
          break;
        }
        image.insert(hits[0]);
      }
      if (!smooth) continue;
      for (std::size_t T = 0; T < bd.lirr.size(); ++T) {
        if (std::set<int>(bd.lirr[T].begin(), bd.lirr[T].end()) != image) continue;
        auto x = label_of(TB, bd.lspecial[T]);
        auto y = S.labels[S.special[T1]];
        std::string at = "r=" + std::to_string(r) + " " + to_string(y) + " -> " + to_string(x);
        chk.expect(c_invariant(x) == c_invariant(y), "c " + at);
        chk.expect(d0_invariant(x) == d0_invariant(y) + r / 2, "d0 " + at);
        chk.expect(size_of(x.second) == size_of(y.second) + r / 2, "|beta| " + at);
      }
    }
  }
}

void lcell_suites(VerificationReport& rep, BData& bd, const VerifyOptions& opt, bool with_jr) {
  const auto& B = *bd.ctx.B;
  const auto& TB = *bd.TB;
  build_lcell_labels(bd, &rep.checks["special_count"]);
  {
    auto& chk = rep.checks["special_count"];
    long long specials = 0;
    for (const auto& ab : bipartitions(bd.ctx.n))
      if (is_diamond_special(ab)) ++specials;
    chk.expect(specials == (long long)bd.L.two_sided.size(),
               std::to_string(specials) + " special bipartitions, " + std::to_string(bd.L.two_sided.size()) +
                   " two-sided L-cells");
  }
  {
    auto& chk = rep.checks["special_biconditional"];
    for (std::size_t i = 0; i < TB.size(); ++i) {
      auto ab = label_of(TB, int(i));
      bool rhs = is_diamond_special(ab) && (ab.first == ab.second || is_preferred_extension(ab));
      chk.expect((a_diamond(ab) == TB.b[i]) == rhs, to_string(ab));
    }
  }
  {
    auto& chk = rep.checks["lcell_facts"];
    for (std::size_t c = 0; c < bd.L.cells.size(); ++c) {
      auto m = TB.decompose(bd.L.characters[c]);
      long long k = 0;
      bool free = true;
      for (auto x : m) {
        if (x) ++k;
        free = free && x <= 1;
      }
      long long inv = 0;
      for (Elt x : bd.L.cells[c])
        if (B.multiply(x, x) == B.identity()) ++inv;
      long long want = 1LL << c_invariant(label_of(TB, bd.lspecial[bd.L.two_sided_of_cell[c]]));
      std::string at = "L-cell " + std::to_string(c);
      chk.expect(free, at + " not multiplicity-free");
      chk.expect(k == want, at + ": " + std::to_string(k) + " constituents, want " + std::to_string(want));
      chk.expect(inv == want, at + ": " + std::to_string(inv) + " involutions, want " + std::to_string(want));
    }
  }
  lcell_proportionality(bd, rep.checks["lcell_proportionality"]);
  if (with_jr) jr_bookkeeping(bd, opt, rep.checks["jr_bookkeeping"]);
}

void b_suites(VerificationReport& rep, BData& bd) {
  const int n = bd.ctx.n;
  const auto& B = *bd.ctx.B;
  const auto& TB = *bd.TB;
  {
    auto& chk = rep.checks["closed_form"];
    for (const auto& ir : involution_class_reps_Bn(B)) {
      auto it = std::find(bd.inv.begin(), bd.inv.end(), ir.cls);
      if (it == bd.inv.end()) {
        chk.expect(false, "sigma class missing");
        continue;
      }
      auto got = TB.decompose(bd.modified[it - bd.inv.begin()]);
      std::vector<long long> want(TB.size(), 0);
      for (const auto& [ab, k] : closed_form_upsilon(n, ir.l, ir.j)) want[TB.find_pair(ab.first, ab.second)] += k;
      chk.expect(got == want, "(l,j)=(" + std::to_string(ir.l) + "," + std::to_string(ir.j) + "): " +
                                  TB.format(got) + " vs " + TB.format(want));
    }
    chk.expect(involution_class_reps_Bn(B).size() == bd.inv.size(), "sigma list does not cover the classes");
  }
  {
    auto& chk = rep.checks["invBd_sum"];
    ClassFunction lhs(B), rhs(B);
    for (const auto& f : bd.modified) lhs += f;
    for (std::size_t i = 0; i < TB.size(); ++i) {
      auto ab = label_of(TB, int(i));
      if (!is_diamond_special(ab)) continue;
      ClassFunction f = TB.rows[i];
      f *= Cyclo(1LL << c_invariant(ab));
      rhs += f;
    }
    chk.expect(lhs == rhs, "sum over involutions: " + TB.format(TB.decompose(lhs)));
  }
  {
    auto& chk = rep.checks["tense_twist"];
    auto eps = tense_sign(B);
    Elt w0 = B.longest();
    for (std::size_t i = 0; i < bd.inv.size(); ++i) {
      uint32_t c2 = B.classes().class_of[B.multiply(B.classes().reps[bd.inv[i]], w0)];
      auto it = std::find(bd.inv.begin(), bd.inv.end(), c2);
      chk.expect(it != bd.inv.end(), "C w0 is not an involution class");
      if (it == bd.inv.end()) continue;
      chk.expect(bd.modified[it - bd.inv.begin()] == tensor(bd.modified[i], eps),
                 "class " + B.word_string(B.classes().reps[bd.inv[i]]));
    }
    std::vector<uint32_t> cell_of(B.order(), uint32_t(-1));
    for (std::size_t c = 0; c < bd.L.cells.size(); ++c)
      for (Elt x : bd.L.cells[c]) cell_of[x] = uint32_t(c);
    for (std::size_t c = 0; c < bd.L.cells.size(); ++c) {
      std::vector<Elt> img;
      for (Elt x : bd.L.cells[c]) img.push_back(B.multiply(x, w0));
      std::sort(img.begin(), img.end());
      uint32_t c2 = cell_of[img[0]];
      bool ok = c2 != uint32_t(-1) && bd.L.cells[c2] == img;
      chk.expect(ok, "Gamma w0 is not an L-cell for " + std::to_string(c));
      if (ok) chk.expect(bd.L.characters[c2] == tensor(bd.L.characters[c], eps), "[Gamma w0] for " + std::to_string(c));
    }
  }
}

}  // namespace

VerificationReport verify_properties(Series series, int k, const std::string& twist, const VerifyOptions& opt) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.mode = "properties";
  GenericData G;
  std::optional<DInB> ctx;
  if ((series == Series::D || series == Series::B) && k >= 2) {
    ctx = make_d_in_b(k, opt.max_order);
    G.g = series == Series::D ? ctx->D : ctx->B;
  } else {
    G.g = build_group(series, k, opt.max_order);
  }
  G.d = automorphism_from_twist(*G.g, twist);
  rep.group = group_json(*G.g).dump();
  rep.automorphism = automorphism_json(G.d).dump();
  const auto& g = *G.g;
  G.tc = twisted_conjugacy_classes(g, G.d);
  G.ids = G.tc.involution_classes();
  G.ups.resize(G.ids.size());
  parallel_for(G.ids.size(), opt.jobs, [&](std::size_t i) { G.ups[i] = upsilon(g, G.d, G.tc.reps[G.ids[i]]).chi; });
  rep.classes = G.ids.size();

  three_way(G, rep.checks["three_way_upsilon"], opt.jobs);

  bool cells = g.order() <= kKLCap;
  if (cells) {
    G.cd = cell_data(G.g, opt);
    rep.cache_hit = G.cd.from_cache;
    rep.cells = G.cd.cells.size();
    G.counts.assign(G.ids.size(), std::vector<long long>(G.cd.cells.size()));
    for (std::size_t i = 0; i < G.ids.size(); ++i)
      for (std::size_t c = 0; c < G.cd.cells.size(); ++c)
        G.counts[i][c] = (long long)intersect(G.tc.members[G.ids[i]], G.cd.cells.left_cells[c]);
    cell_sum(G, rep.checks["cell_sum_rule"]);
    dperm(G, rep.checks["dperm"]);
    if (twist == "w0") w0_transfer(G, rep.checks["w0_transfer"]);
  } else {
    rep.checks["cells_skipped"].expect(true, "");
  }

  if (series == Series::D) {
    const int n = k;
    auto TD = character_table(G.g);
    if (n % 2 == 0) {
      split_sign(*TD, n, rep.checks["split_sign_identity"]);
      pieri(*TD, n, rep.checks["pieri"]);
    }
    if (n <= 6 && n >= 2) {
      kottwitz_multiplicity(*ctx, *TD, rep.checks["kottwitz_multiplicity"], rep.checks["kottwitz_dichotomy"]);
    }
    if (cells) {
      proportionality(G, *TD, rep.checks["proportionality"]);
      cell_involutions(G, *TD, rep.checks["cell_involution_count"]);
      if (!G.d.trivial()) {
        diamond_chars(*TD, G.d, rep.checks["diamond_char_perm"]);
        BData bd = b_data(*ctx, &G.cd, opt, opt.jobs);
        lcell_suites(rep, bd, opt, n <= 5);
      }
    }
  }
  if (series == Series::B && k >= 2 && expected_order(Series::D, k) <= kKLCap) {
    BData bd = b_data(*ctx, nullptr, opt, opt.jobs);
    b_suites(rep, bd);
    lcell_suites(rep, bd, opt, false);
  }
  finish(rep, t0, opt);
  return rep;
}

}  // namespace kcv
