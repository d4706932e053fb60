#pragma once
#include <string>
#include <utility>
#include <vector>

namespace kcv {

// Parts in weakly decreasing order, no zeros.
using Partition = std::vector<int>;
using BiPartition = std::pair<Partition, Partition>;

int size_of(const Partition& a);
int n_of(const Partition& a);  // sum (i-1) a_i
Partition transpose(const Partition& a);
std::vector<Partition> partitions(int n);  // decreasing lex
std::vector<BiPartition> bipartitions(int n);  // |alpha| descending, then lex descending
std::string to_string(const Partition& a);
std::string to_string(const BiPartition& ab);
Partition parse_partition(const std::string& s);

// Young diagrams obtained from a by adding k boxes, no two in the same row.
std::vector<Partition> add_boxes_distinct_rows(const Partition& a, int k);

}  // namespace kcv
