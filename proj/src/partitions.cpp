#include "kcv/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace kcv {

int size_of(const Partition& a) { return std::accumulate(a.begin(), a.end(), 0); }

int n_of(const Partition& a) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += int(i) * a[i];
  return s;
}

Partition transpose(const Partition& a) {
  Partition t;
  if (a.empty()) return t;
  for (int j = 1; j <= a[0]; ++j) {
    int c = 0;
    for (int x : a) c += x >= j;
    t.push_back(c);
  }
  return t;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<BiPartition> bipartitions(int n) {
  std::vector<BiPartition> out;
  for (int a = n; a >= 0; --a)
    for (auto& x : partitions(a))
      for (auto& y : partitions(n - a)) out.emplace_back(x, y);
  return out;
}

std::string to_string(const Partition& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

std::string to_string(const BiPartition& ab) { return "(" + to_string(ab.first) + "," + to_string(ab.second) + ")"; }

Partition parse_partition(const std::string& s) {
  Partition p;
  std::string t;
  for (char c : s)
    if (std::isdigit(static_cast<unsigned char>(c)))
      t += c;
    else if (!t.empty()) {
      p.push_back(std::stoi(t));
      t.clear();
    }
  if (!t.empty()) p.push_back(std::stoi(t));
  std::sort(p.rbegin(), p.rend());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Partition> add_boxes_distinct_rows(const Partition& a, int k) {
  // a horizontal strip: choose rows (including new ones) to get one box each
  std::set<Partition> res;
  int rows = int(a.size()) + k;
  Partition base = a;
  base.resize(rows, 0);
  std::function<void(int, int, Partition&)> rec = [&](int i, int left, Partition& cur) {
    if (left == 0) {
      Partition p;
      for (int x : cur)
        if (x) p.push_back(x);
      if (std::is_sorted(p.rbegin(), p.rend())) res.insert(p);
      return;
    }
    if (i >= rows) return;
    rec(i + 1, left, cur);
    cur[i] += 1;
    rec(i + 1, left - 1, cur);
    cur[i] -= 1;
  };
  rec(0, k, base);
  std::vector<Partition> out(res.begin(), res.end());
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace kcv
