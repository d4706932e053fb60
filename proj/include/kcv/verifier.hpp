#pragma once
#include <map>
#include <string>
#include <vector>

#include "kcv/cells.hpp"
#include "kcv/characters.hpp"
#include "kcv/kl.hpp"
#include "json.hpp"

namespace kcv {

struct VerifyOptions {
  std::string cache_dir;  // empty: no cache
  int jobs = 1;
  std::size_t max_order = kDefaultCap;
  bool timing = false;    // record real wall time; otherwise 0 keeps reports byte-stable
};

struct Record {
  std::string section;  // kottwitz | modified | split | quasi_split
  uint32_t class_id = 0;
  std::string class_rep_word;
  std::size_t class_size = 0;
  uint32_t cell_id = 0;
  std::size_t cell_size = 0;
  long long intersection_count = 0;
  long long scalar_product = 0;
  bool match = false;
};

struct CheckResult {
  bool passed = true;
  long long checked = 0;
  std::vector<std::string> failures;  // first few only
  void expect(bool ok, const std::string& what);
};

struct VerificationReport {
  std::string mode;  // kottwitz | modified | properties
  std::string group;
  std::string automorphism;
  std::vector<Record> records;
  std::map<std::string, CheckResult> checks;
  std::size_t cells = 0, classes = 0;
  long long mismatches = 0;  // record mismatches plus failed checks
  long long wall_time_ms = 0;
  bool cache_hit = false;
  bool ok() const { return mismatches == 0; }
  nlohmann::json to_json() const;
  std::string dump() const;  // canonical text
};

// KL table, left cells and their characters, through the cache when one is configured.
struct CellData {
  GroupPtr group;
  KLPtr kl;
  CellPartition cells;
  std::vector<ClassFunction> characters;
  bool from_cache = false;
};
CellData cell_data(const GroupPtr& g, const VerifyOptions& opt);

VerificationReport verify_kottwitz(Series series, int rank_or_m, const std::string& twist,
                                   const VerifyOptions& opt = {});
VerificationReport verify_modified_Bn(int n, const VerifyOptions& opt = {});
VerificationReport verify_properties(Series series, int rank_or_m, const std::string& twist,
                                     const VerifyOptions& opt = {});

// Unique irreducible of minimal b among the constituents of a family; InternalError otherwise.
int special_of_family(const CharacterTable& t, const std::vector<int>& family);

std::string version_stamp();

}  // namespace kcv
