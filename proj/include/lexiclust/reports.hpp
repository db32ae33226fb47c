#ifndef LEXICLUST_REPORTS_HPP
#define LEXICLUST_REPORTS_HPP

#include <string>
#include <vector>

#include "lexiclust/cluster.hpp"
#include "lexiclust/matrix.hpp"
#include "lexiclust/normalize.hpp"

namespace lexiclust {

enum class ReportFormat { kMarkdown, kCsv };

/// One line per phrase (raw, retained tokens, dropped tokens) plus a footer
/// with the noun fraction. Failures, if any, are listed before the footer.
std::string normalization_report_text(const std::vector<NormalizedPhrase>& phrases,
                                      const NormalizationReport& report);

/// Per cluster: medoid phrase (the category name), member count, quality,
/// and the member phrases; ends with a totals row.
std::string cluster_report_text(const SimilarityMatrix& matrix,
                                const ClusteringResult& result, ReportFormat format);

/// Table with columns k, S_kmax, S_kmin, S_kavg, converged, and a flag
/// column marking the suggested k. Numbers carry 4 decimals.
std::string sweep_report_text(const SweepReport& report, ReportFormat format,
                              double epsilon = 0.02);

}  // namespace lexiclust

#endif  // LEXICLUST_REPORTS_HPP
