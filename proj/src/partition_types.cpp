#include "degpart/partition_types.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace degpart {

DegeneracySpec::DegeneracySpec(std::vector<std::int64_t> p) : p_(std::move(p)) {
  if (p_.empty()) throw std::invalid_argument("degeneracy sequence must not be empty");
  for (auto value : p_) {
    if (value < 0) throw std::invalid_argument("degeneracy bounds must be non-negative");
  }
}

std::size_t DegeneracySpec::effective_parts(std::int32_t delta) const {
  return std::min(p_.size(), static_cast<std::size_t>(std::max(delta, 0)));
}

std::int64_t DegeneracySpec::prefix_sum(std::size_t count) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < count && i < p_.size(); ++i) sum += p_[i];
  return sum;
}

bool DegeneracySpec::is_feasible(std::int32_t delta) const {
  const auto s = effective_parts(delta);
  return prefix_sum(s) >= static_cast<std::int64_t>(delta) - static_cast<std::int64_t>(s);
}

bool DegeneracySpec::is_tight(std::int32_t delta) const {
  const auto s = effective_parts(delta);
  return prefix_sum(s) == static_cast<std::int64_t>(delta) - static_cast<std::int64_t>(s);
}

Partition::Partition(Vertex n, std::size_t part_count)
    : part_of_(static_cast<std::size_t>(n), 0), part_count_(part_count) {}

Partition Partition::from_labels(std::vector<std::int32_t> labels, std::size_t part_count) {
  Partition p;
  p.part_of_ = std::move(labels);
  p.part_count_ = part_count;
  for (auto label : p.part_of_) {
    if (label < 1) continue;
    if (p.sizes_.size() < static_cast<std::size_t>(label)) p.sizes_.resize(static_cast<std::size_t>(label), 0);
    ++p.sizes_[label - 1];
  }
  return p;
}

void Partition::assign(Vertex v, std::int32_t part) {
  if (part < 1 || static_cast<std::size_t>(part) > part_count_) {
    throw std::out_of_range("part label " + std::to_string(part) + " outside [1, " +
                            std::to_string(part_count_) + "]");
  }
  if (part_of_[v] > 0) --sizes_[part_of_[v] - 1];
  if (sizes_.size() < static_cast<std::size_t>(part)) sizes_.resize(static_cast<std::size_t>(part), 0);
  ++sizes_[part - 1];
  part_of_[v] = part;
}

std::size_t Partition::size_of(std::int32_t part) const {
  if (part < 1 || static_cast<std::size_t>(part) > sizes_.size()) return 0;
  return sizes_[part - 1];
}

std::int32_t Partition::highest_used() const {
  for (auto i = sizes_.size(); i > 0; --i) {
    if (sizes_[i - 1] > 0) return static_cast<std::int32_t>(i);
  }
  return 0;
}

std::size_t Partition::non_empty_parts() const {
  return static_cast<std::size_t>(std::count_if(sizes_.begin(), sizes_.end(), [](auto c) { return c > 0; }));
}

std::vector<Vertex> Partition::members(std::int32_t part) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (part_of_[v] == part) out.push_back(v);
  }
  return out;
}

}  // namespace degpart
