#include "kcv/symbols.hpp"

#include <algorithm>

#include "kcv/errors.hpp"

namespace kcv {

int min_symbol_length(const BiPartition& ab) {
  return std::max<int>({1, int(ab.first.size()), int(ab.second.size())});
}

static std::vector<int> padded_increasing(const Partition& a, int m) {
  std::vector<int> v(m, 0);
  for (std::size_t i = 0; i < a.size(); ++i) v[m - 1 - i] = a[i];
  return v;
}

Symbol make_symbol(const BiPartition& ab, int m) {
  if (m == 0) m = min_symbol_length(ab);
  if (m < min_symbol_length(ab)) throw IndexOutOfRange("symbol too short for the bipartition");
  Symbol s;
  s.m = m;
  auto a = padded_increasing(ab.first, m), b = padded_increasing(ab.second, m);
  for (int i = 0; i < m; ++i) {
    s.lambda.push_back(a[i] + i);
    s.mu.push_back(b[i] + i);
  }
  return s;
}

BiPartition from_symbol(const Symbol& s) {
  BiPartition ab;
  for (int i = s.m - 1; i >= 0; --i) {
    if (int x = s.lambda[i] - i) ab.first.push_back(x);
    if (int y = s.mu[i] - i) ab.second.push_back(y);
  }
  return ab;
}

int c_invariant(const BiPartition& ab, int m) {
  auto s = make_symbol(ab, m);
  int c = 0;
  for (int x : s.mu)
    if (!std::binary_search(s.lambda.begin(), s.lambda.end(), x)) ++c;
  return c;
}

int d0_invariant(const BiPartition& ab, int m) {
  if (m == 0) m = min_symbol_length(ab);
  auto a = padded_increasing(ab.first, m), b = padded_increasing(ab.second, m);
  int d = b[0];
  for (int i = 1; i < m; ++i) d += std::max(a[i - 1], b[i]);
  return d;
}

int a_diamond(const BiPartition& ab, int m) {
  auto s = make_symbol(ab, m);
  m = s.m;
  long long a = 0;
  // strict i < j within a row; the non-strict reading depends on m
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) a += std::min(s.lambda[i], s.lambda[j]) + std::min(s.mu[i], s.mu[j]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a += std::min(s.lambda[i], s.mu[j]);
  a -= (long long)m * (m - 1) * (4 * m - 5) / 6;
  return int(a);
}

bool is_diamond_special(const BiPartition& ab, int m) {
  auto s = make_symbol(ab, m);
  for (int i = 0; i < s.m; ++i) {
    if (s.mu[i] > s.lambda[i]) return false;
    if (i + 1 < s.m && s.lambda[i] > s.mu[i + 1]) return false;
  }
  return true;
}

bool is_preferred_extension(const BiPartition& ab, int m) {
  if (ab.first == ab.second) throw EqualPartsForPreferred(to_string(ab));
  auto s = make_symbol(ab, m);
  int best = -1;
  bool lower = false;
  for (int x : s.lambda)
    if (!std::binary_search(s.mu.begin(), s.mu.end(), x) && (best < 0 || x < best)) best = x, lower = false;
  for (int x : s.mu)
    if (!std::binary_search(s.lambda.begin(), s.lambda.end(), x) && (best < 0 || x < best)) best = x, lower = true;
  return lower;
}

long long binom(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

Elt sigma_lj(const CoxeterGroup& B, int l, int j) {
  const int n = B.rank();
  if (B.series() != Series::B) throw GroupMismatch("sigma_lj lives in type B");
  if (l < 0 || j < 0 || l + 2 * j > n) throw IndexOutOfRange("need l, j >= 0 and l + 2j <= n");
  std::vector<Elt> t(n + 1);
  if (n >= 1) t[1] = B.generator(0);
  for (int i = 2; i <= n; ++i) {
    Elt s = B.generator(i - 1);
    t[i] = B.multiply(B.multiply(s, t[i - 1]), s);
  }
  Elt x = B.identity();
  for (int i = 1; i <= l; ++i) x = B.multiply(x, t[i]);
  for (int k = 0; k < j; ++k) x = B.multiply(x, B.generator(l + 1 + 2 * k));
  return x;
}

std::vector<InvolutionRep> involution_class_reps_Bn(const CoxeterGroup& B) {
  std::vector<InvolutionRep> out;
  const int n = B.rank();
  for (int l = 0; l <= n; ++l)
    for (int j = 0; l + 2 * j <= n; ++j) {
      Elt s = sigma_lj(B, l, j);
      out.push_back({l, j, s, B.classes().class_of[s]});
    }
  return out;
}

std::vector<std::pair<BiPartition, long long>> closed_form_upsilon(int n, int l, int j) {
  if (l < 0 || j < 0 || l + 2 * j > n) throw IndexOutOfRange("need l, j >= 0 and l + 2j <= n");
  std::vector<std::pair<BiPartition, long long>> out;
  for (const auto& ab : bipartitions(n)) {
    if (size_of(ab.second) != j || !is_diamond_special(ab)) continue;
    long long k = binom(c_invariant(ab), j + l - d0_invariant(ab));
    if (k) out.push_back({ab, k});
  }
  return out;
}

}  // namespace kcv
