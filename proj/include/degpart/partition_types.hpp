#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "degpart/graph.hpp"

namespace degpart {

/**
 * Target sequence p_1..p_s: part i must induce a p_i-degenerate subgraph.
 *
 * The whole sequence is kept so parts can be labelled 1..s, but for a
 * component of maximum degree delta only the first s' = min(s, delta)
 * entries take part in any decision, which keeps every algorithm
 * independent of s.
 */
class DegeneracySpec {
 public:
  // Throws std::invalid_argument if empty or any entry is negative.
  explicit DegeneracySpec(std::vector<std::int64_t> p);

  [[nodiscard]] std::size_t size() const { return p_.size(); }
  [[nodiscard]] std::span<const std::int64_t> values() const { return p_; }
  // 1-based, matching part labels.
  [[nodiscard]] std::int64_t capacity(std::size_t part) const { return p_[part - 1]; }

  [[nodiscard]] std::size_t effective_parts(std::int32_t delta) const;
  // Sum of the first `count` capacities.
  [[nodiscard]] std::int64_t prefix_sum(std::size_t count) const;

  // sum_{i <= s'} p_i >= delta - s'
  [[nodiscard]] bool is_feasible(std::int32_t delta) const;
  // sum_{i <= s'} p_i == delta - s'
  [[nodiscard]] bool is_tight(std::int32_t delta) const;

 private:
  std::vector<std::int64_t> p_;
};

/// Vertex -> part label in [1, part_count()]; label 0 marks an unassigned vertex.
class Partition {
 public:
  Partition() = default;
  Partition(Vertex n, std::size_t part_count);
  // Raw labels, unchecked; verify_partition reports bad ones.
  static Partition from_labels(std::vector<std::int32_t> labels, std::size_t part_count);

  // Throws std::out_of_range for labels outside [1, part_count()].
  void assign(Vertex v, std::int32_t part);

  [[nodiscard]] std::int32_t part_of(Vertex v) const { return part_of_[v]; }
  [[nodiscard]] std::span<const std::int32_t> labels() const { return part_of_; }
  [[nodiscard]] Vertex vertex_count() const { return static_cast<Vertex>(part_of_.size()); }
  [[nodiscard]] std::size_t part_count() const { return part_count_; }

  [[nodiscard]] std::size_t size_of(std::int32_t part) const;
  // Highest label with at least one member, 0 if nothing is assigned.
  [[nodiscard]] std::int32_t highest_used() const;
  [[nodiscard]] std::size_t non_empty_parts() const;
  [[nodiscard]] std::vector<Vertex> members(std::int32_t part) const;

  bool operator==(const Partition& other) const {
    return part_count_ == other.part_count_ && part_of_ == other.part_of_;
  }

 private:
  std::vector<std::int32_t> part_of_;
  std::vector<std::size_t> sizes_;  // sizes_[i] counts label i + 1
  std::size_t part_count_ = 0;
};

}  // namespace degpart
