#include "lexiclust/cluster.hpp"

#include <algorithm>

#include "lexiclust/errors.hpp"

namespace lexiclust {

std::vector<std::size_t> initial_medoids(const SimilarityMatrix& matrix, std::size_t k,
                                         double threshold) {
  const std::size_t n = matrix.size();
  if (k < 1 || k > n) {
    throw ValidationError("k must be between 1 and " + std::to_string(n));
  }
  const std::size_t block = n / k;
  std::vector<std::size_t> medoids;
  medoids.reserve(k);
  for (std::size_t b = 0; b < k; ++b) {
    const std::size_t begin = b * block;
    const std::size_t end = b + 1 == k ? n : begin + block;
    std::size_t best = begin;
    std::size_t best_count = 0;
    for (std::size_t j = begin; j < end; ++j) {
      std::size_t count = 0;
      for (std::size_t p = begin; p < end; ++p) {
        if (matrix.at(p, j) > threshold) ++count;
      }
      if (count > best_count) {
        best = j;
        best_count = count;
      }
    }
    medoids.push_back(best);
  }
  return medoids;
}

std::vector<std::size_t> assign(const SimilarityMatrix& matrix,
                                const std::vector<std::size_t>& medoids) {
  const std::size_t n = matrix.size();
  const std::size_t k = medoids.size();
  std::vector<std::size_t> assignment(n, 0);
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t best = 0;
    double best_score = matrix.at(e, medoids[0]);
    for (std::size_t c = 1; c < k; ++c) {
      const double score = matrix.at(e, medoids[c]);
      if (score > best_score) {
        best = c;
        best_score = score;
      }
    }
    assignment[e] = best;
  }
  // An emptied cluster pulls its own medoid back as a singleton. Homing one
  // medoid can empty another cluster, so repeat until no cluster is empty;
  // a homed medoid is never moved again, so this ends within k passes.
  std::vector<std::size_t> sizes(k, 0);
  for (const std::size_t c : assignment) ++sizes[c];
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] > 0) continue;
      const std::size_t medoid = medoids[c];
      --sizes[assignment[medoid]];
      assignment[medoid] = c;
      ++sizes[c];
      moved = true;
    }
  }
  return assignment;
}

std::vector<std::size_t> update_medoids(
    const SimilarityMatrix& matrix, const std::vector<std::vector<std::size_t>>& clusters) {
  std::vector<std::size_t> medoids;
  medoids.reserve(clusters.size());
  for (const std::vector<std::size_t>& members : clusters) {
    if (members.empty()) throw ValidationError("empty cluster has no medoid");
    std::size_t best = members.front();
    double best_sum = -1.0;
    for (const std::size_t candidate : members) {
      double sum = 0.0;
      for (const std::size_t member : members) sum += matrix.at(member, candidate);
      if (sum > best_sum) {
        best = candidate;
        best_sum = sum;
      }
    }
    medoids.push_back(best);
  }
  return medoids;
}

double cluster_similarity(const SimilarityMatrix& matrix, const Cluster& cluster) {
  if (cluster.members.empty()) throw ValidationError("empty cluster has no quality");
  double sum = 0.0;
  for (const std::size_t member : cluster.members) sum += matrix.at(member, cluster.medoid);
  return sum / static_cast<double>(cluster.members.size());
}

ClusteringResult cluster(const SimilarityMatrix& matrix, std::size_t k,
                         std::size_t max_iter, double threshold) {
  if (max_iter < 1) throw ValidationError("max_iter must be at least 1");
  const std::size_t n = matrix.size();
  std::vector<std::size_t> medoids = initial_medoids(matrix, k, threshold);
  std::vector<std::vector<std::size_t>> groups;
  ClusteringResult result;
  result.k = k;
  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    const std::vector<std::size_t> assignment = assign(matrix, medoids);
    groups.assign(k, {});
    for (std::size_t e = 0; e < n; ++e) groups[assignment[e]].push_back(e);
    std::vector<std::size_t> next = update_medoids(matrix, groups);
    result.iterations_run = iter;
    if (next == medoids) {
      result.converged = true;
      break;
    }
    medoids = std::move(next);
  }
  result.clusters.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    Cluster cl;
    cl.medoid = medoids[c];
    cl.members = std::move(groups[c]);
    cl.quality = cluster_similarity(matrix, cl);
    result.clusters.push_back(std::move(cl));
  }
  return result;
}

std::tuple<double, double, double> quality_indices(const ClusteringResult& result) {
  if (result.clusters.empty()) throw ValidationError("no clusters to score");
  double max = result.clusters.front().quality;
  double min = max;
  double sum = 0.0;
  for (const Cluster& cl : result.clusters) {
    max = std::max(max, cl.quality);
    min = std::min(min, cl.quality);
    sum += cl.quality;
  }
  return {max, min, sum / static_cast<double>(result.clusters.size())};
}

SweepReport sweep(const SimilarityMatrix& matrix, std::size_t k_min, std::size_t k_max,
                  std::size_t max_iter, double threshold) {
  if (k_min < 1 || k_min > k_max || k_max > matrix.size()) {
    throw ValidationError("need 1 <= k_min <= k_max <= " + std::to_string(matrix.size()));
  }
  SweepReport report;
  report.rows.reserve(k_max - k_min + 1);
  for (std::size_t k = k_min; k <= k_max; ++k) {
    const ClusteringResult result = cluster(matrix, k, max_iter, threshold);
    const auto [s_max, s_min, s_avg] = quality_indices(result);
    report.rows.push_back({k, s_max, s_min, s_avg, result.converged});
  }
  return report;
}

std::optional<std::size_t> suggest_k(const SweepReport& report, double epsilon) {
  if (report.rows.empty()) return std::nullopt;
  double best_avg = report.rows.front().s_avg;
  for (const SweepRow& row : report.rows) best_avg = std::max(best_avg, row.s_avg);
  std::optional<std::size_t> suggestion;
  double best_min = 0.0;
  for (const SweepRow& row : report.rows) {
    if (best_avg - row.s_avg > epsilon) continue;
    if (!suggestion.has_value() || row.s_min > best_min) {
      suggestion = row.k;
      best_min = row.s_min;
    }
  }
  return suggestion;
}

}  // namespace lexiclust
