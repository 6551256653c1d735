#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "priorclust/distance_matrix.hpp"

namespace priorclust {

enum class Linkage {
    Single,    ///< min cross-pair distance
    Complete,  ///< max cross-pair distance
    Average,   ///< mean cross-pair distance
};

Linkage linkage_from_name(std::string_view name);
std::string_view linkage_name(Linkage linkage);

/// One agglomeration step. `left` < `right` are cluster ids: 0..n-1 are
/// leaves in label order, n..2n-2 are merge nodes in creation order.
struct Merge {
    std::int32_t left = 0;
    std::int32_t right = 0;
    double height = 0.0;
    std::int32_t size = 0;  ///< leaves under this merge node

    friend bool operator==(const Merge&, const Merge&) = default;
};

/// Sequence of n-1 binary merges with non-decreasing heights over an
/// ordered label set. Immutable; safe to share across threads.
class Dendrogram {
public:
    Dendrogram(std::vector<std::string> labels, std::vector<Merge> merges);

    std::size_t leaf_count() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Merge>& merges() const noexcept { return merges_; }

private:
    void validate() const;

    std::vector<std::string> labels_;
    std::vector<Merge> merges_;
};

/// Flat K-cluster partition of a label set. Cluster indices are dense,
/// 0..K-1, numbered by each cluster's first label in label order.
class FlatPartition {
public:
    FlatPartition(std::vector<std::string> labels, std::vector<std::int32_t> assignment,
                  std::int32_t cluster_count);

    std::size_t size() const noexcept { return labels_.size(); }
    std::int32_t cluster_count() const noexcept { return cluster_count_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<std::int32_t>& assignment() const noexcept { return assignment_; }
    std::int32_t cluster_of(std::string_view label) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::int32_t> assignment_;
    std::int32_t cluster_count_ = 0;
};

// -- clustering ---------------------------------------------------------------

/// Observes each agglomeration step of the generic engine: `active` holds
/// the live cluster ids and `dist(a, b)` the current cluster distances.
using StepObserver = std::function<void(
    std::span<const std::int32_t> active,
    const std::function<double(std::int32_t, std::int32_t)>& dist)>;

/// SLINK pointer-representation single linkage, O(n^2) time and O(n)
/// working memory. The cophenetic matrix of the result equals the maximal
/// sub-dominant ultrametric of D (minimax path distances).
Dendrogram single_linkage(const DistanceMatrix& d);

Dendrogram complete_linkage(const DistanceMatrix& d);
Dendrogram average_linkage(const DistanceMatrix& d);

/// Generic working-matrix agglomeration, any linkage. When several pairs
/// attain the minimal distance, the lexicographically smallest
/// (min cluster id, max cluster id) pair merges first. Merged rows are
/// recomputed from the input matrix over member lists in leaf order, so
/// heights match a from-scratch recomputation bit for bit.
Dendrogram agglomerate(const DistanceMatrix& d, Linkage linkage,
                       const StepObserver* observer = nullptr);

// -- dendrogram queries ---------------------------------------------------------

/// Entry (i,j) = height of the lowest merge node containing both leaves.
DistanceMatrix cophenetic(const Dendrogram& dend);

/// Cluster counts reachable by a flat cut. Merges tied in height are never
/// split apart, so some K in 1..n may be missing.
std::vector<int> attainable_cut_sizes(const Dendrogram& dend);

/// Removes every merge strictly above the cut threshold, leaving exactly K
/// connected components. Throws CutUnattainableError (recoverable, carries
/// the nearest attainable counts) when a height tie makes exactly-K
/// impossible; throws InputError when K is out of 1..n.
FlatPartition cut(const Dendrogram& dend, int k);

/// Runs the linkage on `trials` seeded random label permutations of D and
/// reports whether every cophenetic matrix, mapped back to the original
/// order, agrees with the unpermuted run to 1e-12.
bool permutation_invariance_check(const DistanceMatrix& d, Linkage linkage, int trials,
                                  std::uint64_t seed);

// -- file formats ---------------------------------------------------------------

/// Merge-table CSV (left,right,height,size) with a sidecar "<path>.labels"
/// label-order list; the interchange format for the tuner and plots.
void write_dendrogram_csv(const Dendrogram& dend, const std::filesystem::path& path);
Dendrogram read_dendrogram_csv(const std::filesystem::path& path);

/// Nested-parenthesis rendering with merge heights as internal-node
/// annotations, e.g. ((a,b):0.25,c):1. For visual inspection.
std::string dendrogram_to_tree_text(const Dendrogram& dend);

/// Partition file: CSV (label,cluster) in label order.
void write_partition_csv(const FlatPartition& partition, const std::filesystem::path& path);
FlatPartition read_partition_csv(const std::filesystem::path& path);

}  // namespace priorclust
