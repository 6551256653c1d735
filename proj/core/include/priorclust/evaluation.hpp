#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "priorclust/linkage.hpp"

namespace priorclust {

/// Purchases observed for one search keyword: a multiset of
/// (item label, count) with positive counts.
struct KeywordRecord {
    std::string keyword;
    std::vector<std::pair<std::string, std::int64_t>> purchases;

    std::int64_t total_purchases() const;
};

/// Records file: CSV with header (keyword,item_label,purchase_count).
/// Rows repeating a (keyword,item) pair accumulate. Item labels outside
/// `label_universe` are rejected at load.
std::vector<KeywordRecord> read_records(const std::filesystem::path& path,
                                        std::span<const std::string> label_universe);

/// Restriction of records to items within a label subset; keywords left
/// with no purchases are dropped.
std::vector<KeywordRecord> restrict_records(const std::vector<KeywordRecord>& records,
                                            std::span<const std::string> subset);

struct MetricReport {
    double purity = 0.0;            ///< in [0,1], higher is better
    double entropy = 0.0;           ///< >= 0, natural log, lower is better
    double weighted_entropy = 0.0;  ///< >= 0, lower is better
    std::int64_t keywords_evaluated = 0;
};

/// Mean over keywords of the fraction of purchases landing in the
/// keyword's top cluster.
double purity(const FlatPartition& partition, std::span<const KeywordRecord> records);

/// Mean over keywords of the natural-log entropy of the keyword's
/// per-cluster purchase distribution (0 ln 0 := 0).
double entropy(const FlatPartition& partition, std::span<const KeywordRecord> records);

/// Entropy with each keyword weighted by its total purchases.
double weighted_entropy(const FlatPartition& partition, std::span<const KeywordRecord> records);

MetricReport evaluate(const FlatPartition& partition, std::span<const KeywordRecord> records);

/// Scales each column by its maximum: the best purity becomes 1.0 and the
/// worst (largest) entropy becomes 1.0, the convention used when comparing
/// runs. A zero column is left unchanged and noted in `warning`.
std::vector<MetricReport> normalize_reports(std::span<const MetricReport> reports,
                                            std::string* warning = nullptr);

enum class MetricChoice { Purity, Entropy, WeightedEntropy };

MetricChoice metric_from_name(std::string_view name);
std::string_view metric_name(MetricChoice metric);

/// True when larger metric values are better (purity); entropies prefer
/// smaller values.
bool metric_higher_is_better(MetricChoice metric);

double metric_value(const MetricReport& report, MetricChoice metric);

}  // namespace priorclust
