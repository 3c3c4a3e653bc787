#include "degpart/verify.hpp"

#include <algorithm>

#include "degpart/error.hpp"

namespace degpart {

namespace {

struct Peeling {
  std::vector<Vertex> removal;      // removal order
  std::vector<std::int32_t> core;   // core number of each peeled vertex
};

// Peels every vertex with label >= 0, counting only edges whose ends share a
// label. Distinct labels never interact, so one pass measures every class.
// Bucket queue after Batagelj and Zaversnik; ties go to the earlier bin slot,
// which starts out as ascending vertex id.
Peeling peel_labelled(const Graph& g, std::span<const std::int32_t> label) {
  const Vertex n = g.n();
  Peeling out;
  std::vector<std::int32_t> deg(static_cast<std::size_t>(n), 0);
  std::int32_t max_deg = 0;
  std::size_t count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] < 0) continue;
    ++count;
    for (Vertex w : g.neighbors(v)) deg[v] += label[w] == label[v] ? 1 : 0;
    max_deg = std::max(max_deg, deg[v]);
  }

  std::vector<std::size_t> bin(static_cast<std::size_t>(max_deg) + 2, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] >= 0) ++bin[deg[v] + 1];
  }
  for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
  std::vector<Vertex> vert(count);
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  {
    std::vector<std::size_t> fill(bin.begin(), bin.end() - 1);
    for (Vertex v = 0; v < n; ++v) {
      if (label[v] < 0) continue;
      pos[v] = fill[deg[v]]++;
      vert[pos[v]] = v;
    }
  }

  out.core.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < count; ++i) {
    const Vertex v = vert[i];
    out.core[v] = deg[v];
    for (Vertex u : g.neighbors(v)) {
      if (label[u] != label[v] || deg[u] <= deg[v]) continue;
      const std::int32_t du = deg[u];
      const std::size_t pu = pos[u];
      const std::size_t pw = bin[du];
      const Vertex w = vert[pw];
      if (u != w) {
        pos[u] = pw;
        vert[pw] = u;
        pos[w] = pu;
        vert[pu] = w;
      }
      ++bin[du];
      --deg[u];
    }
  }
  out.removal = std::move(vert);
  return out;
}

}  // namespace

DegeneracyCertificate peel_ordering(const Graph& g, const VertexSubset& subset) {
  std::vector<std::int32_t> label(static_cast<std::size_t>(g.n()), -1);
  for (Vertex v : subset.members()) label[v] = 0;
  Peeling peeled = peel_labelled(g, label);
  DegeneracyCertificate cert;
  cert.ordering.assign(peeled.removal.rbegin(), peeled.removal.rend());
  for (Vertex v : cert.ordering) cert.degeneracy = std::max(cert.degeneracy, peeled.core[v]);
  return cert;
}

DegeneracyCertificate peel_ordering(const Graph& g) { return peel_ordering(g, VertexSubset::all(g.n())); }

std::int32_t degeneracy(const Graph& g) { return peel_ordering(g).degeneracy; }

VerifyReport verify_partition(const Graph& g, const Partition& part, const DegeneracySpec& spec) {
  VerifyReport report;
  const Vertex n = g.n();
  if (part.vertex_count() != n) {
    report.coverage_error = "partition covers " + std::to_string(part.vertex_count()) + " vertices, graph has " +
                            std::to_string(n);
    return report;
  }
  const auto labels = part.labels();
  for (Vertex v = 0; v < n; ++v) {
    if (labels[v] < 1 || static_cast<std::size_t>(labels[v]) > spec.size()) {
      report.coverage_error = "vertex " + std::to_string(v) + " has label " + std::to_string(labels[v]) +
                              " outside [1, " + std::to_string(spec.size()) + "]";
      return report;
    }
  }
  report.coverage_ok = true;

  const Peeling peeled = peel_labelled(g, labels);
  std::vector<PartCheck> by_label;
  for (Vertex v = 0; v < n; ++v) {
    const auto label = labels[v];
    if (by_label.size() < static_cast<std::size_t>(label)) by_label.resize(static_cast<std::size_t>(label));
    auto& check = by_label[label - 1];
    check.part = label;
    ++check.size;
    check.measured = std::max(check.measured, peeled.core[v]);
  }
  report.ok = true;
  for (auto& check : by_label) {
    if (check.size == 0) continue;
    check.claimed = spec.capacity(static_cast<std::size_t>(check.part));
    check.pass = check.measured <= check.claimed;
    report.ok = report.ok && check.pass;
    report.parts.push_back(check);
  }
  return report;
}

std::optional<Partition> brute_force_feasible(const Graph& g, const DegeneracySpec& spec, Vertex cap) {
  const Vertex n = g.n();
  if (n > cap) throw TooLargeError("brute force limited to " + std::to_string(cap) + " vertices");
  if (n == 0) return Partition(0, spec.size());
  const auto labels_used = static_cast<std::int32_t>(std::min<std::size_t>(spec.size(), static_cast<std::size_t>(n)));
  if (n > 10 && labels_used > 3) throw TooLargeError("brute force limited to 3 labels above 10 vertices");
  double total = 1;
  for (Vertex i = 0; i < n; ++i) total *= labels_used;
  if (total > 5e7) throw TooLargeError("brute force enumeration too large");

  std::vector<std::int32_t> assignment(static_cast<std::size_t>(n), 1);
  while (true) {
    const Peeling peeled = peel_labelled(g, assignment);
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      ok = peeled.core[v] <= spec.capacity(static_cast<std::size_t>(assignment[v]));
    }
    if (ok) return Partition::from_labels(assignment, spec.size());

    // Odometer step, vertex 0 most significant.
    Vertex i = n - 1;
    while (i >= 0 && assignment[i] == labels_used) assignment[i--] = 1;
    if (i < 0) return std::nullopt;
    ++assignment[i];
  }
}

}  // namespace degpart
