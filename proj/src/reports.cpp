#include "lexiclust/reports.hpp"

#include <cstdio>

namespace lexiclust {
namespace {

std::string fixed4(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string md_field(const std::string& text) {
  std::string out;
  for (const char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string join_members(const SimilarityMatrix& matrix,
                         const std::vector<std::size_t>& members) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += "; ";
    out += matrix.phrases()[members[i]].raw;
  }
  return out;
}

}  // namespace

std::string normalization_report_text(const std::vector<NormalizedPhrase>& phrases,
                                      const NormalizationReport& report) {
  std::string out;
  for (const NormalizedPhrase& phrase : phrases) {
    out += phrase.raw;
    out += '\t';
    for (std::size_t i = 0; i < phrase.tokens.size(); ++i) {
      if (i > 0) out += ' ';
      out += phrase.tokens[i];
    }
    out += '\t';
    for (std::size_t i = 0; i < phrase.dropped.size(); ++i) {
      if (i > 0) out += ' ';
      out += phrase.dropped[i];
    }
    out += '\n';
  }
  for (const auto& [index, raw] : report.failures) {
    out += "# failed " + std::to_string(index) + ": " + raw + '\n';
  }
  out += "# phrases=" + std::to_string(report.phrase_count);
  out += " words=" + std::to_string(report.total_word_count);
  out += " nouns=" + std::to_string(report.noun_word_count);
  out += " noun_fraction=" + fixed4(report.noun_fraction) + '\n';
  return out;
}

std::string cluster_report_text(const SimilarityMatrix& matrix,
                                const ClusteringResult& result, ReportFormat format) {
  std::string out;
  std::size_t total = 0;
  if (format == ReportFormat::kMarkdown) {
    out += "| cluster | category | size | S_c | members |\n";
    out += "| --- | --- | --- | --- | --- |\n";
    for (std::size_t c = 0; c < result.clusters.size(); ++c) {
      const Cluster& cl = result.clusters[c];
      total += cl.members.size();
      out += "| " + std::to_string(c + 1);
      out += " | " + md_field(matrix.phrases()[cl.medoid].raw);
      out += " | " + std::to_string(cl.members.size());
      out += " | " + fixed4(cl.quality);
      out += " | " + md_field(join_members(matrix, cl.members)) + " |\n";
    }
    out += "| total |  | " + std::to_string(total) + " |  |  |\n";
  } else {
    out += "cluster,category,size,s_c,members\n";
    for (std::size_t c = 0; c < result.clusters.size(); ++c) {
      const Cluster& cl = result.clusters[c];
      total += cl.members.size();
      out += std::to_string(c + 1);
      out += ',' + csv_field(matrix.phrases()[cl.medoid].raw);
      out += ',' + std::to_string(cl.members.size());
      out += ',' + fixed4(cl.quality);
      out += ',' + csv_field(join_members(matrix, cl.members)) + '\n';
    }
    out += "total,," + std::to_string(total) + ",,\n";
  }
  return out;
}

std::string sweep_report_text(const SweepReport& report, ReportFormat format,
                              double epsilon) {
  const std::optional<std::size_t> suggestion = suggest_k(report, epsilon);
  std::string out;
  if (format == ReportFormat::kMarkdown) {
    out += "| k | S_kmax | S_kmin | S_kavg | converged | suggested |\n";
    out += "| --- | --- | --- | --- | --- | --- |\n";
    for (const SweepRow& row : report.rows) {
      out += "| " + std::to_string(row.k);
      out += " | " + fixed4(row.s_max);
      out += " | " + fixed4(row.s_min);
      out += " | " + fixed4(row.s_avg);
      out += std::string(" | ") + (row.converged ? "yes" : "no");
      out += std::string(" | ") + (suggestion == row.k ? "*" : "") + " |\n";
    }
  } else {
    out += "k,s_kmax,s_kmin,s_kavg,converged,suggested\n";
    for (const SweepRow& row : report.rows) {
      out += std::to_string(row.k);
      out += ',' + fixed4(row.s_max);
      out += ',' + fixed4(row.s_min);
      out += ',' + fixed4(row.s_avg);
      out += std::string(",") + (row.converged ? "yes" : "no");
      out += std::string(",") + (suggestion == row.k ? "*" : "") + '\n';
    }
  }
  return out;
}

}  // namespace lexiclust
