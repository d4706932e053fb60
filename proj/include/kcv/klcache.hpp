#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "kcv/classfun.hpp"
#include "kcv/kl.hpp"

namespace kcv {

constexpr uint32_t kCacheVersion = 1;

struct CacheContents {
  KLPtr kl;
  // optional trailer: integer cell characters, one row per left cell
  std::vector<std::vector<long long>> cell_characters;
};

std::vector<uint8_t> cache_serialize(const KLTable& kl, const std::vector<ClassFunction>* cell_chars = nullptr);
CacheContents cache_parse(const GroupPtr& g, const std::vector<uint8_t>& bytes, int validate = 100);

void cache_save(const std::string& path, const KLTable& kl, const std::vector<ClassFunction>* cell_chars = nullptr);
// ChecksumMismatch on a foreign or corrupted file, VersionMismatch on another format version
CacheContents cache_load(const GroupPtr& g, const std::string& path, int validate = 100);

std::string cache_file_name(const CoxeterGroup& g);
// explicit flag wins, then KCV_CACHE_DIR; empty means no cache
std::string resolve_cache_dir(const std::string& flag);

}  // namespace kcv
