#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>

#include <unistd.h>

#include "doctest.h"
#include "kcv/errors.hpp"
#include "kcv/klcache.hpp"
#include "kcv/verifier.hpp"

using namespace kcv;
namespace fs = std::filesystem;

namespace {

std::vector<uint8_t> slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::vector<uint8_t>& b) {
  std::ofstream f(p, std::ios::binary);
  f.write(reinterpret_cast<const char*>(b.data()), std::streamsize(b.size()));
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("kcv_unit_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("cache round trip is byte exact") {
  auto g = build_group(Series::D, 4);
  auto kl = KLTable::compute(g);
  auto cp = left_cells(*kl);
  auto chars = cell_characters(cp);
  auto bytes = cache_serialize(*kl, &chars);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "KLC1");
  auto back = cache_parse(g, bytes);
  CHECK(cache_serialize(*back.kl, &chars) == bytes);
  REQUIRE(back.cell_characters.size() == chars.size());
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (std::size_t k = 0; k < chars[c].values.size(); ++k)
      CHECK(back.cell_characters[c][k] == chars[c].values[k].to_integer());
  bool same = true;
  for (Elt w = 0; w < g->order(); ++w)
    for (Elt y = 0; y < g->order(); ++y) same &= back.kl->poly_q(y, w) == kl->poly_q(y, w);
  CHECK(same);
  // without the characters trailer
  auto plain = cache_serialize(*kl);
  CHECK(cache_parse(g, plain).cell_characters.empty());

  auto dir = scratch("rt");
  cache_save((dir / "a.klc1").string(), *kl, &chars);
  auto loaded = cache_load(g, (dir / "a.klc1").string());
  cache_save((dir / "b.klc1").string(), *loaded.kl, &chars);
  CHECK(slurp(dir / "a.klc1") == slurp(dir / "b.klc1"));
  fs::remove_all(dir);
}

TEST_CASE("cache refuses foreign or damaged files") {
  auto g = build_group(Series::D, 4);
  auto kl = KLTable::compute(g);
  auto bytes = cache_serialize(*kl);
  auto other = build_group(Series::B, 3);
  CHECK_THROWS_AS(cache_parse(other, bytes), ChecksumMismatch);
  auto a4 = build_group(Series::A, 4);
  CHECK_THROWS_AS(cache_parse(a4, bytes), ChecksumMismatch);
  auto bad = bytes;
  bad[bad.size() / 2] ^= 0x5a;
  CHECK_THROWS_AS(cache_parse(g, bad), ChecksumMismatch);
  auto ver = bytes;
  ver[4] ^= 0x02;  // version field follows the magic
  CHECK_THROWS_AS(cache_parse(g, ver), VersionMismatch);
  auto magic = bytes;
  magic[0] = 'X';
  CHECK_THROWS_AS(cache_parse(g, magic), ChecksumMismatch);
  CHECK_THROWS_AS(cache_parse(g, std::vector<uint8_t>(bytes.begin(), bytes.begin() + 10)), ChecksumMismatch);
  CHECK_THROWS(cache_load(g, "/nonexistent/dir/x.klc1"));
}

TEST_CASE("cache directory resolution") {
  CHECK(cache_file_name(*build_group(Series::D, 5)).find(".klc1") != std::string::npos);
  CHECK(cache_file_name(*build_group(Series::D, 5)) != cache_file_name(*build_group(Series::B, 5)));
  ::setenv("KCV_CACHE_DIR", "/tmp/from_env", 1);
  CHECK(resolve_cache_dir("") == "/tmp/from_env");
  CHECK(resolve_cache_dir("/tmp/flag") == "/tmp/flag");
  ::unsetenv("KCV_CACHE_DIR");
  CHECK(resolve_cache_dir("") == "");
}

TEST_CASE("verification through the cache") {
  auto dir = scratch("verify");
  VerifyOptions opt;
  opt.cache_dir = dir.string();
  auto first = verify_kottwitz(Series::D, 4, "diagram", opt);
  CHECK_FALSE(first.cache_hit);
  auto second = verify_kottwitz(Series::D, 4, "diagram", opt);
  CHECK(second.cache_hit);
  CHECK(first.dump() == second.dump());
  CHECK(verify_kottwitz(Series::D, 4, "diagram").dump() == first.dump());
  // a damaged cache is reported and recomputed
  auto file = dir / cache_file_name(*build_group(Series::D, 4));
  auto b = slurp(file);
  b[b.size() - 3] ^= 1;
  spit(file, b);
  auto third = verify_kottwitz(Series::D, 4, "diagram", opt);
  CHECK_FALSE(third.cache_hit);
  CHECK(third.dump() == first.dump());
  CHECK(verify_kottwitz(Series::D, 4, "diagram", opt).cache_hit);
  fs::remove_all(dir);
}

TEST_CASE("reports") {
  auto r = verify_kottwitz(Series::I2, 8, "diagram");
  CHECK(r.ok());
  CHECK(r.mode == "kottwitz");
  CHECK(r.classes == 1);
  CHECK(r.cells == 4);
  std::vector<long long> counts;
  for (auto& rec : r.records) {
    CHECK(rec.match == (rec.intersection_count == rec.scalar_product));
    counts.push_back(rec.intersection_count);
  }
  CHECK(counts == std::vector<long long>{1, 3, 3, 1});
  auto j = nlohmann::json::parse(r.dump());
  CHECK(j["schema"] == "kcv-report/1");
  CHECK(j["summary"]["mismatches"] == 0);
  CHECK(j["summary"]["records"] == 4);
  CHECK(j["summary"]["wall_time_ms"] == 0);
  CHECK(j["group"]["order"] == 16);
  CHECK(j["automorphism"]["kind"] == "diagram");
  CHECK(r.dump() == verify_kottwitz(Series::I2, 8, "diagram").dump());
  VerifyOptions par;
  par.jobs = 3;
  CHECK(verify_kottwitz(Series::A, 3, "none", par).dump() == verify_kottwitz(Series::A, 3, "none").dump());
  VerifyOptions small;
  small.max_order = 100;
  CHECK_THROWS_AS(verify_kottwitz(Series::F4, 4, "none", small), CapExceeded);
  CHECK_THROWS_AS(verify_kottwitz(Series::B, 3, "diagram"), UnsupportedAutomorphism);
  CHECK_THROWS_AS(verify_modified_Bn(1), Error);
}

TEST_CASE("modified mode and property suites at small rank") {
  auto m = verify_modified_Bn(3);
  CHECK(m.ok());
  CHECK(m.checks.count("restriction_abc") == 1);
  std::set<std::string> sections;
  for (auto& r : m.records) sections.insert(r.section);
  CHECK(sections == std::set<std::string>{"modified", "quasi_split", "split"});
  auto p = verify_properties(Series::B, 3, "none");
  CHECK(p.ok());
  for (auto& [name, c] : p.checks) {
    CAPTURE(name);
    CHECK(c.passed);
  }
  CHECK(verify_properties(Series::I2, 7, "w0").ok());
}

TEST_CASE("special character of a family") {
  auto g = cached_group(Series::D, 4);
  auto t = character_table(g);
  int triv = t->row_of(trivial_character(*g));
  CHECK(special_of_family(*t, {triv}) == triv);
  int refl = t->row_of(reflection_character(*g));
  CHECK(special_of_family(*t, {refl, triv}) == triv);
}
