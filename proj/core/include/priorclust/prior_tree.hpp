#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "priorclust/distance_matrix.hpp"

namespace priorclust {

enum class TreeFormat {
    Auto,    ///< decide from the text (leading '{' means json)
    Paren,   ///< nested-parenthesis, newick-like, no branch lengths
    Json,    ///< recursive {"name": ..., "children": [...]} objects
};

TreeFormat tree_format_from_name(std::string_view name);

/// Exact leaf-count ratio behind a prior-tree distance. Values are
/// converted to float64 once, at matrix emission, so ultrametricity
/// checks on emitted matrices hold with zero tolerance.
struct LeafRatio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const LeafRatio&, const LeafRatio&) = default;
};

/// A rooted ontology tree over labeled leaves.
///
/// Canonical form: unary chains are collapsed at construction, so every
/// internal node has at least two children. Immutable after construction;
/// concurrent read-only queries are safe. Lowest-common-ancestor queries
/// run in constant time after an Euler-tour + sparse-table build.
class PriorTree {
public:
    using NodeId = std::int32_t;
    static constexpr NodeId kNoNode = -1;

    static PriorTree parse(std::string_view text, TreeFormat format = TreeFormat::Auto);
    static PriorTree parse_file(const std::filesystem::path& path,
                                TreeFormat format = TreeFormat::Auto);

    // -- structure ---------------------------------------------------------

    NodeId root() const noexcept { return root_; }
    std::size_t node_count() const noexcept { return parent_.size(); }
    NodeId parent(NodeId v) const { return parent_.at(static_cast<std::size_t>(v)); }
    std::span<const NodeId> children(NodeId v) const;
    bool is_leaf(NodeId v) const { return children(v).empty(); }
    int depth(NodeId v) const { return depth_.at(static_cast<std::size_t>(v)); }

    /// Number of descendant leaves (a leaf counts itself).
    std::int64_t leaf_count(NodeId v) const {
        return subtree_leaf_count_.at(static_cast<std::size_t>(v));
    }
    std::int64_t total_leaves() const { return leaf_count(root_); }

    /// Node name: the label for leaves, possibly empty for internal nodes.
    const std::string& name(NodeId v) const { return name_.at(static_cast<std::size_t>(v)); }

    /// Leaf labels in the tree's deterministic (input) order.
    const std::vector<std::string>& leaf_labels() const noexcept { return leaf_labels_; }

    bool has_leaf(std::string_view label) const;
    NodeId leaf(std::string_view label) const;  ///< throws InputError on unknown label

    // -- queries -----------------------------------------------------------

    /// Lowest common ancestor; O(1) per query. lca(x, x) is the leaf itself.
    NodeId lca(NodeId a, NodeId b) const;
    NodeId lca(std::string_view a, std::string_view b) const;

    /// |leaves(subtree at lca(a,b))| / |leaves(root)| as an exact ratio.
    LeafRatio ultrametric_ratio(std::string_view a, std::string_view b) const;
    double ultrametric_distance(std::string_view a, std::string_view b) const;

    /// Pairwise prior distance over `order`, which must be a permutation of
    /// the tree's leaf labels. Diagonal is defined as 0 and excluded by the
    /// condensed layout.
    DistanceMatrix to_ultrametric(std::span<const std::string> order) const;
    DistanceMatrix to_ultrametric() const;  ///< uses leaf_labels() order

    /// Partial-tree policy: labels present in `dataset_labels` but missing
    /// from the tree are attached as direct children of the root, which
    /// gives them maximal prior distance 1 to everything else. Labels
    /// already present are left alone. Returns the augmented tree.
    PriorTree with_labels(std::span<const std::string> dataset_labels) const;

    /// Leaf sets under the shallowest uniform-depth frontier holding at
    /// least `min_segments` nodes (a leaf above the frontier forms its own
    /// segment). Segments are emitted in depth-first order and partition
    /// the leaf set.
    std::vector<std::vector<std::string>> frontier_segments(int min_segments) const;

private:
    PriorTree() = default;

    struct RawNode;  // parser-side representation, defined in the .cpp
    static PriorTree from_raw(std::vector<RawNode>&& nodes, std::size_t raw_root);
    void build_indexes();

    NodeId root_ = kNoNode;
    std::vector<NodeId> parent_;
    std::vector<NodeId> children_flat_;
    std::vector<std::int32_t> children_begin_;  // size node_count()+1
    std::vector<std::string> name_;
    std::vector<std::int64_t> subtree_leaf_count_;
    std::vector<int> depth_;

    std::vector<std::string> leaf_labels_;
    std::unordered_map<std::string, NodeId> leaf_by_label_;

    // Euler tour + sparse table over tour depths for O(1) LCA.
    std::vector<NodeId> euler_;
    std::vector<std::int32_t> euler_depth_;
    std::vector<std::int32_t> first_occurrence_;
    std::vector<std::vector<std::int32_t>> rmq_;  // rmq_[k][i] = argmin over [i, i+2^k)
};

}  // namespace priorclust
