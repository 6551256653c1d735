#include "priorclust/prior_tree.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stack>
#include <unordered_set>
#include <utility>

#include <nlohmann/json.hpp>

#include "priorclust/errors.hpp"
#include "priorclust/io_util.hpp"

namespace priorclust {

struct PriorTree::RawNode {
    std::string name;
    std::vector<std::size_t> children;
};

namespace {

// Tracks 1-based line/column for parse error positions.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
            advance();
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

bool is_label_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ','
           && c != ';' && c != '"';
}

std::string parse_label(Cursor& cur) {
    cur.skip_space();
    if (cur.peek() == '"') {
        cur.advance();
        std::string label;
        while (true) {
            if (cur.done()) {
                cur.fail("unterminated quoted label");
            }
            char c = cur.advance();
            if (c == '\\') {
                if (cur.done()) {
                    cur.fail("dangling escape in quoted label");
                }
                char e = cur.advance();
                if (e != '"' && e != '\\') {
                    cur.fail(std::string("unknown escape '\\") + e + "' in quoted label");
                }
                label.push_back(e);
            } else if (c == '"') {
                break;
            } else {
                label.push_back(c);
            }
        }
        if (label.empty()) {
            cur.fail("empty quoted label");
        }
        return label;
    }
    std::string label;
    while (!cur.done() && is_label_char(cur.peek())) {
        label.push_back(cur.advance());
    }
    return label;
}

// node := '(' node (',' node)* ')' label?  |  label
std::size_t parse_paren_node(Cursor& cur, std::vector<PriorTree::RawNode>& nodes) {
    cur.skip_space();
    if (cur.peek() == '(') {
        cur.advance();
        std::vector<std::size_t> children;
        while (true) {
            children.push_back(parse_paren_node(cur, nodes));
            cur.skip_space();
            if (cur.peek() == ',') {
                cur.advance();
                continue;
            }
            if (cur.peek() == ')') {
                cur.advance();
                break;
            }
            cur.fail("expected ',' or ')'");
        }
        std::string name = parse_label(cur);  // optional internal-node name
        nodes.push_back({std::move(name), std::move(children)});
        return nodes.size() - 1;
    }
    std::string label = parse_label(cur);
    if (label.empty()) {
        cur.fail("expected a leaf label or '('");
    }
    nodes.push_back({std::move(label), {}});
    return nodes.size() - 1;
}

std::size_t parse_json_node(const nlohmann::json& value, std::vector<PriorTree::RawNode>& nodes) {
    if (!value.is_object()) {
        throw InputError("tree json: every node must be an object");
    }
    std::string name;
    if (auto it = value.find("name"); it != value.end()) {
        if (!it->is_string()) {
            throw InputError("tree json: \"name\" must be a string");
        }
        name = it->get<std::string>();
    }
    auto children_it = value.find("children");
    if (children_it == value.end()) {
        if (name.empty()) {
            throw InputError("tree json: leaf node without a \"name\"");
        }
        nodes.push_back({std::move(name), {}});
        return nodes.size() - 1;
    }
    if (!children_it->is_array() || children_it->empty()) {
        throw InputError("tree json: \"children\" must be a non-empty array");
    }
    std::vector<std::size_t> children;
    children.reserve(children_it->size());
    for (const auto& child : *children_it) {
        children.push_back(parse_json_node(child, nodes));
    }
    nodes.push_back({std::move(name), std::move(children)});
    return nodes.size() - 1;
}

}  // namespace

TreeFormat tree_format_from_name(std::string_view name) {
    if (name == "auto") return TreeFormat::Auto;
    if (name == "paren" || name == "newick") return TreeFormat::Paren;
    if (name == "json") return TreeFormat::Json;
    throw InputError("unknown tree format: '" + std::string(name) + "'");
}

PriorTree PriorTree::parse(std::string_view text, TreeFormat format) {
    if (format == TreeFormat::Auto) {
        auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string_view::npos) {
            throw InputError("empty tree");
        }
        format = text[first] == '{' ? TreeFormat::Json : TreeFormat::Paren;
    }

    std::vector<RawNode> nodes;
    std::size_t root;
    if (format == TreeFormat::Json) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError(std::string("tree json: ") + e.what());
        }
        root = parse_json_node(doc, nodes);
    } else {
        Cursor cur(text);
        cur.skip_space();
        if (cur.done()) {
            throw InputError("empty tree");
        }
        root = parse_paren_node(cur, nodes);
        cur.skip_space();
        if (cur.peek() == ';') {
            cur.advance();
            cur.skip_space();
        }
        if (!cur.done()) {
            cur.fail("trailing characters after tree");
        }
    }
    return from_raw(std::move(nodes), root);
}

PriorTree PriorTree::parse_file(const std::filesystem::path& path, TreeFormat format) {
    if (format == TreeFormat::Auto) {
        auto ext = path.extension().string();
        if (ext == ".json") {
            format = TreeFormat::Json;
        }
    }
    return parse(read_file(path), format);
}

PriorTree PriorTree::from_raw(std::vector<RawNode>&& raw, std::size_t raw_root) {
    // Collapse unary chains: a node with one child contributes nothing to
    // any leaf count, so the prior distance is invariant to it.
    while (raw[raw_root].children.size() == 1) {
        raw_root = raw[raw_root].children.front();
    }

    PriorTree tree;
    auto& nodes = raw;

    // Iterative DFS assigning final ids in preorder, skipping unary nodes.
    struct Frame {
        std::size_t raw_id;
        NodeId final_parent;
    };
    std::vector<Frame> stack{{raw_root, kNoNode}};
    std::vector<std::vector<NodeId>> children_of;
    while (!stack.empty()) {
        auto [raw_id, final_parent] = stack.back();
        stack.pop_back();
        while (nodes[raw_id].children.size() == 1) {
            raw_id = nodes[raw_id].children.front();
        }
        NodeId id = static_cast<NodeId>(tree.parent_.size());
        tree.parent_.push_back(final_parent);
        tree.name_.push_back(std::move(nodes[raw_id].name));
        children_of.emplace_back();
        if (final_parent != kNoNode) {
            children_of[static_cast<std::size_t>(final_parent)].push_back(id);
        } else {
            tree.root_ = id;
        }
        const auto& kids = nodes[raw_id].children;
        // push in reverse so children are visited (and numbered) in input order
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.push_back({*it, id});
        }
    }

    tree.children_begin_.assign(tree.node_count() + 1, 0);
    for (std::size_t v = 0; v < tree.node_count(); ++v) {
        tree.children_begin_[v + 1] =
            tree.children_begin_[v] + static_cast<std::int32_t>(children_of[v].size());
    }
    tree.children_flat_.reserve(tree.node_count() - 1);
    for (const auto& kids : children_of) {
        tree.children_flat_.insert(tree.children_flat_.end(), kids.begin(), kids.end());
    }

    tree.build_indexes();
    return tree;
}

std::span<const PriorTree::NodeId> PriorTree::children(NodeId v) const {
    auto begin = static_cast<std::size_t>(children_begin_.at(static_cast<std::size_t>(v)));
    auto end = static_cast<std::size_t>(children_begin_[static_cast<std::size_t>(v) + 1]);
    return {children_flat_.data() + begin, end - begin};
}

void PriorTree::build_indexes() {
    const std::size_t n = node_count();
    depth_.assign(n, 0);
    subtree_leaf_count_.assign(n, 0);
    first_occurrence_.assign(n, -1);
    euler_.clear();
    euler_depth_.clear();
    leaf_labels_.clear();
    leaf_by_label_.clear();

    // Single Euler-tour DFS fills depths, leaf registry and tour arrays.
    struct Frame {
        NodeId node;
        std::size_t next_child;
    };
    std::vector<Frame> stack{{root_, 0}};
    depth_[static_cast<std::size_t>(root_)] = 0;
    while (!stack.empty()) {
        auto& frame = stack.back();
        NodeId v = frame.node;
        if (frame.next_child == 0) {
            first_occurrence_[static_cast<std::size_t>(v)] =
                static_cast<std::int32_t>(euler_.size());
            if (is_leaf(v)) {
                const std::string& label = name(v);
                if (label.empty()) {
                    throw InputError("leaf with empty label");
                }
                auto [it, inserted] = leaf_by_label_.emplace(label, v);
                (void)it;
                if (!inserted) {
                    throw InputError("duplicate leaf label: '" + label + "'");
                }
                leaf_labels_.push_back(label);
            }
        }
        euler_.push_back(v);
        euler_depth_.push_back(depth_[static_cast<std::size_t>(v)]);
        auto kids = children(v);
        if (frame.next_child < kids.size()) {
            NodeId c = kids[frame.next_child++];
            depth_[static_cast<std::size_t>(c)] = depth_[static_cast<std::size_t>(v)] + 1;
            stack.push_back({c, 0});
        } else {
            if (is_leaf(v)) {
                subtree_leaf_count_[static_cast<std::size_t>(v)] = 1;
            }
            stack.pop_back();
            if (!stack.empty()) {
                subtree_leaf_count_[static_cast<std::size_t>(stack.back().node)] +=
                    subtree_leaf_count_[static_cast<std::size_t>(v)];
            }
        }
    }

    if (leaf_labels_.empty()) {
        throw InputError("tree has no leaves");
    }

    // Sparse table of argmins over tour depths.
    const std::size_t m = euler_.size();
    const int levels = std::bit_width(m) > 0 ? static_cast<int>(std::bit_width(m)) : 1;
    rmq_.assign(static_cast<std::size_t>(levels), {});
    rmq_[0].resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        rmq_[0][i] = static_cast<std::int32_t>(i);
    }
    for (int k = 1; k < levels; ++k) {
        const std::size_t span = std::size_t{1} << k;
        if (span > m) {
            rmq_.resize(static_cast<std::size_t>(k));
            break;
        }
        rmq_[static_cast<std::size_t>(k)].resize(m - span + 1);
        for (std::size_t i = 0; i + span <= m; ++i) {
            std::int32_t a = rmq_[static_cast<std::size_t>(k - 1)][i];
            std::int32_t b = rmq_[static_cast<std::size_t>(k - 1)][i + span / 2];
            rmq_[static_cast<std::size_t>(k)][i] =
                euler_depth_[static_cast<std::size_t>(a)] <= euler_depth_[static_cast<std::size_t>(b)]
                    ? a
                    : b;
        }
    }
}

bool PriorTree::has_leaf(std::string_view label) const {
    return leaf_by_label_.find(std::string(label)) != leaf_by_label_.end();
}

PriorTree::NodeId PriorTree::leaf(std::string_view label) const {
    auto it = leaf_by_label_.find(std::string(label));
    if (it == leaf_by_label_.end()) {
        throw InputError("unknown label: '" + std::string(label) + "'");
    }
    return it->second;
}

PriorTree::NodeId PriorTree::lca(NodeId a, NodeId b) const {
    auto fa = first_occurrence_.at(static_cast<std::size_t>(a));
    auto fb = first_occurrence_.at(static_cast<std::size_t>(b));
    if (fa > fb) {
        std::swap(fa, fb);
    }
    const std::size_t lo = static_cast<std::size_t>(fa);
    const std::size_t hi = static_cast<std::size_t>(fb) + 1;  // [lo, hi)
    const int k = std::bit_width(hi - lo) - 1;
    const std::size_t span = std::size_t{1} << k;
    std::int32_t left = rmq_[static_cast<std::size_t>(k)][lo];
    std::int32_t right = rmq_[static_cast<std::size_t>(k)][hi - span];
    std::int32_t best = euler_depth_[static_cast<std::size_t>(left)]
                                <= euler_depth_[static_cast<std::size_t>(right)]
                            ? left
                            : right;
    return euler_[static_cast<std::size_t>(best)];
}

PriorTree::NodeId PriorTree::lca(std::string_view a, std::string_view b) const {
    return lca(leaf(a), leaf(b));
}

LeafRatio PriorTree::ultrametric_ratio(std::string_view a, std::string_view b) const {
    NodeId anc = lca(leaf(a), leaf(b));
    return {leaf_count(anc), total_leaves()};
}

double PriorTree::ultrametric_distance(std::string_view a, std::string_view b) const {
    return ultrametric_ratio(a, b).value();
}

DistanceMatrix PriorTree::to_ultrametric(std::span<const std::string> order) const {
    const std::size_t n = order.size();
    if (n != leaf_labels_.size()) {
        throw InputError("label order has " + std::to_string(n) + " labels but the tree has "
                         + std::to_string(leaf_labels_.size()) + " leaves");
    }
    std::vector<NodeId> leaves(n);
    std::unordered_set<std::string_view> seen;
    seen.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        leaves[i] = leaf(order[i]);  // throws on labels outside the tree
        if (!seen.insert(order[i]).second) {
            throw InputError("duplicate label in order: '" + order[i] + "'");
        }
    }
    const double total = static_cast<double>(total_leaves());
    std::vector<double> values;
    values.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            NodeId anc = lca(leaves[i], leaves[j]);
            values.push_back(static_cast<double>(leaf_count(anc)) / total);
        }
    }
    return DistanceMatrix(std::vector<std::string>(order.begin(), order.end()),
                          std::move(values), /*normalized=*/true);
}

DistanceMatrix PriorTree::to_ultrametric() const {
    return to_ultrametric(leaf_labels_);
}

PriorTree PriorTree::with_labels(std::span<const std::string> dataset_labels) const {
    std::vector<std::string> missing;
    std::unordered_set<std::string_view> seen;
    for (const auto& label : dataset_labels) {
        if (!seen.insert(label).second) {
            throw InputError("duplicate dataset label: '" + label + "'");
        }
        if (!has_leaf(label)) {
            missing.push_back(label);
        }
    }
    if (missing.empty()) {
        return *this;
    }

    // Rebuild raw nodes from this tree, then hang the missing labels off
    // the root. A single-leaf tree gains a fresh root above the old leaf.
    std::vector<RawNode> raw(node_count());
    for (std::size_t v = 0; v < node_count(); ++v) {
        raw[v].name = name_[v];
        for (NodeId c : children(static_cast<NodeId>(v))) {
            raw[v].children.push_back(static_cast<std::size_t>(c));
        }
    }
    std::size_t root_raw = static_cast<std::size_t>(root_);
    if (raw[root_raw].children.empty()) {
        raw.push_back({"", {root_raw}});
        root_raw = raw.size() - 1;
    }
    for (auto& label : missing) {
        raw.push_back({std::move(label), {}});
        raw[root_raw].children.push_back(raw.size() - 1);
    }
    return from_raw(std::move(raw), root_raw);
}

std::vector<std::vector<std::string>> PriorTree::frontier_segments(int min_segments) const {
    if (min_segments < 1) {
        throw InputError("segment count must be >= 1");
    }
    if (static_cast<std::int64_t>(min_segments) > total_leaves()) {
        throw InputError("segment count " + std::to_string(min_segments)
                         + " exceeds the leaf count " + std::to_string(total_leaves()));
    }

    // Frontier at depth d: nodes at depth d plus leaves above it. The
    // frontier count is nondecreasing in d and reaches the leaf count, so
    // the shallowest frontier with >= min_segments nodes always exists.
    int cut_depth = 0;
    for (;; ++cut_depth) {
        std::size_t count = 0;
        for (std::size_t v = 0; v < node_count(); ++v) {
            const bool at_frontier = depth_[v] == cut_depth
                                     || (depth_[v] < cut_depth && is_leaf(static_cast<NodeId>(v)));
            if (at_frontier) {
                ++count;
            }
        }
        if (count >= static_cast<std::size_t>(min_segments)) {
            break;
        }
    }

    std::vector<std::vector<std::string>> segments;
    // Depth-first emission keeps segment order deterministic.
    std::vector<NodeId> stack{root_};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        if (depth(v) == cut_depth || is_leaf(v)) {
            std::vector<std::string> labels;
            std::vector<NodeId> sub{v};
            while (!sub.empty()) {
                NodeId u = sub.back();
                sub.pop_back();
                if (is_leaf(u)) {
                    labels.push_back(name(u));
                } else {
                    auto kids = children(u);
                    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
                        sub.push_back(*it);
                    }
                }
            }
            segments.push_back(std::move(labels));
        } else {
            auto kids = children(v);
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
                stack.push_back(*it);
            }
        }
    }
    return segments;
}

}  // namespace priorclust
