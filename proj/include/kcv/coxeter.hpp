#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "kcv/cyclo.hpp"

namespace kcv {

enum class Series { A, B, D, F4, I2 };

std::string series_name(Series s);
Series parse_series(const std::string& s);

using Elt = uint32_t;

class CoxeterGroup;
using GroupPtr = std::shared_ptr<const CoxeterGroup>;

constexpr std::size_t kDefaultCap = 1000000;

// Handle to an element; the group must outlive it.
struct Element {
  const CoxeterGroup* group = nullptr;
  Elt index = 0;
  int length() const;
  std::vector<int> word() const;
  const uint16_t* root_permutation() const;
  friend bool operator==(const Element& a, const Element& b) {
    return a.group == b.group && a.index == b.index;
  }
};

Element multiply(const Element& w, const Element& x);
Element invert(const Element& w);
int act_on_root(const Element& w, int root);
bool bruhat_leq(const Element& y, const Element& w);

struct ParabolicData {
  unsigned mask = 0;  // bit s set iff s in I
  std::vector<Elt> elements;  // W_I, ascending
  Elt longest = 0;            // w_I
  std::vector<Elt> coset_reps;  // X_I: l(xs) > l(x) for all s in I
};

struct ConjugacyClasses {
  std::vector<uint32_t> class_of;          // element -> class id
  std::vector<Elt> reps;                   // minimal index member
  std::vector<std::vector<Elt>> members;   // ascending
  std::size_t size() const { return reps.size(); }
};

class CoxeterGroup {
 public:
  // For I2 the second argument is m; otherwise it is the rank.
  static GroupPtr build(Series series, int rank_or_m, std::size_t cap = kDefaultCap);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  int m() const { return m_; }  // I2 only
  std::string name() const;
  const std::vector<std::vector<int>>& coxeter_matrix() const { return cox_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }
  bool crystallographic() const { return series_ != Series::I2; }

  // roots
  int num_roots() const { return nroots_; }
  int num_positive() const { return nroots_ / 2; }
  int negate(int r) const { return r < nroots_ / 2 ? r + nroots_ / 2 : r - nroots_ / 2; }
  bool is_positive(int r) const { return r < nroots_ / 2; }
  int simple_root(int s) const { return simple_[s]; }
  // simple-root coordinates (crystallographic types only)
  const std::vector<int>& root_coords(int r) const { return coords_[r]; }
  // ambient coordinates (integer scaled); empty for I2
  const std::vector<int>& root_ambient(int r) const { return ambient_[r]; }
  int root_index(const std::vector<int>& ambient) const;  // -1 if not a root
  std::string root_label(int r) const;

  // elements
  std::size_t order() const { return len_.size(); }
  Elt identity() const { return 0; }
  Elt longest() const { return Elt(len_.size() - 1); }
  int length(Elt w) const { return len_[w]; }
  Elt lmul(Elt w, int s) const { return lmul_[std::size_t(w) * rank_ + s]; }
  Elt rmul(Elt w, int s) const { return rmul_[std::size_t(w) * rank_ + s]; }
  Elt inverse(Elt w) const { return inv_[w]; }
  bool left_descent(Elt w, int s) const { return len_[lmul(w, s)] < len_[w]; }
  bool right_descent(Elt w, int s) const { return len_[rmul(w, s)] < len_[w]; }
  const uint16_t* perm(Elt w) const { return &perm_[std::size_t(w) * nroots_]; }
  int act(Elt w, int r) const { return perm_[std::size_t(w) * nroots_ + r]; }
  std::vector<int> word(Elt w) const;  // lexicographically minimal reduced word
  std::string word_string(Elt w) const;
  int last_letter(Elt w) const { return last_[w]; }
  Elt multiply(Elt a, Elt b) const;
  Elt conjugate(Elt x, Elt w) const { return multiply(multiply(x, w), inv_[x]); }  // x w x^-1
  Elt from_word(const std::vector<int>& word) const;
  Elt power(Elt w, long long k) const;
  Elt generator(int s) const { return rmul(0, s); }
  Elt reflection(int positive_root) const { return refl_[positive_root]; }
  Elt find_perm(const uint16_t* p) const;  // element with given root permutation, or order()
  bool bruhat_leq(Elt y, Elt w) const;
  Element element(Elt w) const { return Element{this, w}; }

  // reflection character value
  Cyclo reflection_character(Elt w) const;

  ParabolicData parabolic(unsigned mask) const;
  const ConjugacyClasses& classes() const { return classes_; }

  uint64_t descriptor_hash() const;
  uint64_t enumeration_checksum() const;

 private:
  CoxeterGroup() = default;
  void build_roots();
  void enumerate(std::size_t cap);
  void build_classes();
  uint64_t key_of(const uint16_t* p) const;
  uint64_t key_of_images(const int* simple_images) const;
  Elt lookup(uint64_t key) const;

  Series series_{};
  int rank_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> cox_;
  std::vector<std::string> gen_names_;
  int nroots_ = 0;
  std::vector<int> simple_;
  std::vector<std::vector<int>> coords_;
  std::vector<std::vector<int>> ambient_;
  std::vector<uint16_t> gen_perm_;  // rank x nroots

  std::vector<uint16_t> perm_;
  std::vector<uint16_t> len_;
  std::vector<Elt> lmul_, rmul_, inv_;
  std::vector<uint8_t> last_;
  std::vector<Elt> parent_;
  std::vector<uint32_t> word_off_;
  std::vector<uint8_t> word_data_;
  std::unordered_map<uint64_t, Elt> index_;
  int key_bits_ = 8;
  std::vector<Elt> refl_;
  ConjugacyClasses classes_;
  uint64_t enum_sum_ = 0;
};

GroupPtr build_group(Series series, int rank_or_m, std::size_t cap = kDefaultCap);
// Process-wide shared instance (default cap); safe across threads.
GroupPtr cached_group(Series series, int rank_or_m);
std::size_t expected_order(Series series, int rank_or_m);

}  // namespace kcv
