#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "priorclust/distance_matrix.hpp"
#include "priorclust/evaluation.hpp"
#include "priorclust/linkage.hpp"
#include "priorclust/prior_tree.hpp"

namespace priorclust {

enum class Aggregation { Mean, Median, Best };
Aggregation aggregation_from_name(std::string_view name);
std::string_view aggregation_name(Aggregation aggregation);

enum class PartitionStrategy { TreeCut, Medoids };
PartitionStrategy strategy_from_name(std::string_view name);

/// The (alpha, K) search grid and how per-K metric values collapse into
/// one score per alpha.
struct GridSpec {
    std::vector<double> alphas;  ///< sorted, within [0,1]
    std::vector<int> ks;         ///< sorted, >= 1
    MetricChoice metric = MetricChoice::Purity;
    Aggregation aggregation = Aggregation::Mean;

    void validate() const;  ///< throws InputError
};

/// One grid cell; an empty value marks an unattainable K (the black block
/// of a heatmap plot). Every (segment, alpha, K) combination appears
/// exactly once in a full report.
struct GridCell {
    int segment = 0;
    double alpha = 0.0;
    int k = 0;
    std::optional<double> value;
};

struct SegmentChoice {
    int segment = 0;
    double alpha = 0.0;
    double score = 0.0;
};

struct GridSearchReport {
    std::vector<GridCell> cells;
    std::vector<SegmentChoice> choices;
};

/// Long-form CSV "segment,alpha,K,metric,value" with UNATTAINABLE markers;
/// directly plottable as a heatmap.
void write_report_csv(const GridSearchReport& report, MetricChoice metric,
                      const std::filesystem::path& path);

// -- pipeline stages ----------------------------------------------------------

/// Coarse initial segmentation of the label set. TreeCut takes the leaf
/// sets under the shallowest tree frontier with at least `segment_count`
/// nodes (the attainable count nearest above; a warning is emitted when it
/// differs from the request). Medoids runs deterministic PAM (greedy build
/// then swap descent) on d_p. Segments always partition `labels`.
std::vector<std::vector<std::string>> pre_partition(std::span<const std::string> labels,
                                                    const DistanceMatrix& d_p,
                                                    const PriorTree& tree, int segment_count,
                                                    PartitionStrategy strategy,
                                                    std::string* warning = nullptr);

/// Deterministic k-medoids used by the Medoids strategy; exposed for
/// direct use and testing. Returns medoid indices and the assignment.
struct KMedoidsResult {
    std::vector<std::size_t> medoids;
    std::vector<std::size_t> assignment;  ///< label index -> position in medoids
    double objective = 0.0;               ///< sum of distances to nearest medoid
};
KMedoidsResult k_medoids(const DistanceMatrix& d, int k);

/// Fills the report cells for one segment: per alpha, blend + single
/// linkage once, then cut and score every K. Unattainable K (height ties,
/// or K beyond the segment size) becomes a marker, not an error. `records`
/// must already be restricted to the segment.
std::vector<GridCell> grid_search(int segment_index, const DistanceMatrix& d_p_segment,
                                  const DistanceMatrix& u_t_segment, const GridSpec& grid,
                                  std::span<const KeywordRecord> records);

/// Collapses each alpha's attainable-K values with the grid's aggregation
/// and picks the best alpha (max for purity, min for entropies); ties go
/// to the smallest alpha. Throws InputError when every cell is
/// unattainable.
SegmentChoice choose_alpha(std::span<const GridCell> cells, const GridSpec& grid);

/// Joins per-segment dendrograms into one: single linkage over segments
/// with prior-only (u_t) cross-segment distances, each inter-segment merge
/// raised to at least the top height of what it joins so heights stay
/// monotone. Segment dendrograms are grafted beneath the segment-level
/// merges; `order` fixes the output leaf order.
Dendrogram combine_dendrograms(std::span<const std::vector<std::string>> segments,
                               std::span<const Dendrogram> dendrograms,
                               const DistanceMatrix& u_t, std::span<const std::string> order);

// -- end-to-end ----------------------------------------------------------------

/// Pipeline configuration; see read_pipeline_config for the file schema.
struct PipelineConfig {
    std::filesystem::path tree_path;
    TreeFormat tree_format = TreeFormat::Auto;
    std::filesystem::path embeddings_path;  ///< exactly one of embeddings/d_p
    std::filesystem::path d_p_matrix_path;
    std::filesystem::path records_train_path;
    std::filesystem::path records_validate_path;  ///< grid search scores here
    std::filesystem::path records_test_path;      ///< optional held-out scoring
    GridSpec grid;
    PartitionStrategy strategy = PartitionStrategy::TreeCut;
    int segment_count = 1;
    std::uint64_t seed = 20240601;
    std::filesystem::path out_dendrogram;
    std::filesystem::path out_report;
    std::filesystem::path out_summary;
};

/// Key-value config file: one "key = value" per line, '#' comments.
PipelineConfig read_pipeline_config(const std::filesystem::path& path);

struct TestMetricRow {
    int k = 0;
    std::optional<MetricReport> report;  ///< empty when K is unattainable
};

struct PipelineResult {
    Dendrogram dendrogram;
    GridSearchReport report;
    std::vector<std::vector<std::string>> segments;
    std::vector<TestMetricRow> test_metrics;  ///< final dendrogram on test records
    std::vector<std::string> warnings;
};

/// Runs the full tuning pipeline: pre-partition, per-segment grid search
/// over (alpha, K), per-segment alpha selection, rebuild at the chosen
/// alpha, and recombination into one dendrogram. Deterministic: identical
/// config and seed give byte-identical outputs.
PipelineResult run_pipeline(const PipelineConfig& config);

/// Human-oriented JSON summary: chosen alpha per segment, segment sizes,
/// and test metrics when a test split was given.
std::string summary_json(const PipelineResult& result, const PipelineConfig& config);

}  // namespace priorclust
