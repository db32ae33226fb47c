#ifndef LEXICLUST_CLUSTER_HPP
#define LEXICLUST_CLUSTER_HPP

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "lexiclust/matrix.hpp"

namespace lexiclust {

/// One cluster: its medoid phrase index, its members (ascending phrase
/// indices, medoid included) and its quality score.
struct Cluster {
  std::size_t medoid = 0;
  std::vector<std::size_t> members;
  double quality = 0.0;  // mean similarity of members to the medoid

  bool operator==(const Cluster&) const = default;
};

struct ClusteringResult {
  std::size_t k = 0;
  std::vector<Cluster> clusters;
  std::size_t iterations_run = 0;
  bool converged = false;  // medoid fixpoint reached before the cap

  bool operator==(const ClusteringResult&) const = default;
};

struct SweepRow {
  std::size_t k = 0;
  double s_max = 0.0;
  double s_min = 0.0;
  double s_avg = 0.0;
  bool converged = false;

  bool operator==(const SweepRow&) const = default;
};

struct SweepReport {
  std::vector<SweepRow> rows;

  bool operator==(const SweepReport&) const = default;
};

inline constexpr double kDefaultThreshold = 0.2;
inline constexpr std::size_t kDefaultMaxIter = 15;

/// Seeding: the dataset is cut into k consecutive blocks of floor(N/k)
/// phrases (the last block absorbs the remainder); each block contributes
/// the phrase with the most within-block neighbors whose similarity exceeds
/// `threshold` (strictly), ties to the lowest index.
/// Throws ValidationError unless 1 <= k <= N.
std::vector<std::size_t> initial_medoids(const SimilarityMatrix& matrix,
                                         std::size_t k, double threshold);

/// Maps every phrase (medoids included) to the cluster whose medoid it is
/// most similar to, ties to the lowest cluster index. A cluster left empty
/// retains its own medoid as its sole member.
std::vector<std::size_t> assign(const SimilarityMatrix& matrix,
                                const std::vector<std::size_t>& medoids);

/// Per cluster, the member maximizing the sum of similarities to all
/// members of that cluster (self term included), ties to the lowest index.
std::vector<std::size_t> update_medoids(const SimilarityMatrix& matrix,
                                        const std::vector<std::vector<std::size_t>>& clusters);

/// Mean similarity of the cluster's members to its medoid (self term
/// included).
double cluster_similarity(const SimilarityMatrix& matrix, const Cluster& cluster);

/// Full run: seed once, then alternate assignment and medoid update until
/// the medoid sequence repeats or `max_iter` passes complete.
ClusteringResult cluster(const SimilarityMatrix& matrix, std::size_t k,
                         std::size_t max_iter = kDefaultMaxIter,
                         double threshold = kDefaultThreshold);

/// (max, min, unweighted mean) of the per-cluster quality scores.
std::tuple<double, double, double> quality_indices(const ClusteringResult& result);

/// One independent clustering per k in [k_min, k_max], ascending.
SweepReport sweep(const SimilarityMatrix& matrix, std::size_t k_min, std::size_t k_max,
                  std::size_t max_iter = kDefaultMaxIter,
                  double threshold = kDefaultThreshold);

/// Reporting heuristic for the "optimal" k: among rows whose average index
/// is within `epsilon` of the sweep's best average, the k with the largest
/// minimum index (ties to the smallest k). The caller decides; this only
/// flags a row.
std::optional<std::size_t> suggest_k(const SweepReport& report, double epsilon = 0.02);

}  // namespace lexiclust

#endif  // LEXICLUST_CLUSTER_HPP
