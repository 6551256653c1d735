#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace priorclust {

/// Labeled points with dense non-negative embeddings of a fixed dimension.
/// Cosine dissimilarity needs non-negative components for its [0,1] range
/// and rejects zero vectors outright.
class LabeledPointSet {
public:
    LabeledPointSet(std::vector<std::string> labels, std::vector<std::vector<double>> vectors);

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::span<const double> vector(std::size_t i) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> vectors_;
    std::size_t dimension_ = 0;
};

/// Embeddings file: CSV/TSV with a header row; first column is the label,
/// remaining columns are float components. Delimiter is sniffed from the
/// header (tab wins over comma).
LabeledPointSet read_point_set(const std::filesystem::path& path);

/// Convex blend weight between the task distance and the prior distance.
struct BlendWeight {
    explicit BlendWeight(double a);
    double alpha;
};

/// Condensed symmetric pairwise dissimilarity over an ordered label set.
/// Stores the strict upper triangle row-major: n(n-1)/2 non-negative
/// values; the diagonal is implicitly zero. Immutable after construction.
class DistanceMatrix {
public:
    DistanceMatrix(std::vector<std::string> labels, std::vector<double> condensed,
                   bool normalized);

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t pair_count() const noexcept { return values_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::span<const double> values() const noexcept { return values_; }

    /// True once values are known to lie in [0,1].
    bool normalized() const noexcept { return normalized_; }

    double at(std::size_t i, std::size_t j) const;
    double at(std::string_view a, std::string_view b) const;
    std::size_t index_of(std::string_view label) const;  ///< throws InputError
    bool has_label(std::string_view label) const;

    static std::size_t condensed_index(std::size_t n, std::size_t i, std::size_t j);

private:
    std::vector<std::string> labels_;
    std::vector<double> values_;
    std::unordered_map<std::string, std::size_t> label_index_;
    bool normalized_ = false;
};

// -- construction ------------------------------------------------------------

/// 1 - x_i.x_j / (|x_i| |x_j|): entries lie in [0,1] for non-negative
/// inputs. Identical vectors map to exactly 0.
DistanceMatrix cosine_dissimilarity_matrix(const LabeledPointSet& points);

/// Divides every entry by the maximum entry, a monotone rescale onto [0,1]
/// with max exactly 1. An all-zero matrix is returned unchanged (flag set);
/// `warning`, when given, receives a message for that degenerate case.
DistanceMatrix normalize(const DistanceMatrix& matrix, std::string* warning = nullptr);

/// Entrywise (1 - alpha) * d_p + alpha * u_t. Label sets and order must
/// match and both inputs must be normalized. alpha = 0 returns d_p bitwise,
/// alpha = 1 returns u_t bitwise.
DistanceMatrix blend(const DistanceMatrix& d_p, const DistanceMatrix& u_t, BlendWeight w);

/// Permutes rows/columns to `new_order`, which must be a permutation of
/// the matrix's labels.
DistanceMatrix reorder(const DistanceMatrix& matrix, std::span<const std::string> new_order);

/// Restriction to a label subset, keeping the given order.
DistanceMatrix restrict(const DistanceMatrix& matrix, std::span<const std::string> subset);

// -- diagnostics -------------------------------------------------------------

struct TripleWitness {
    std::string a, b, c;
    double d_ab = 0, d_bc = 0, d_ac = 0;
};

/// Diagnostic only, never throws on violations.
struct MetricAxiomReport {
    bool non_negative = true;
    bool triangle = true;
    std::size_t triangle_violations = 0;
    std::optional<TripleWitness> first_violation;

    bool ok() const noexcept { return non_negative && triangle; }
};

/// Checks non-negativity and the triangle inequality on every triple,
/// within an absolute tolerance.
MetricAxiomReport verify_metric_axioms(const DistanceMatrix& matrix, double tol = 1e-9);

struct UltrametricCheck {
    bool ok = true;
    std::optional<TripleWitness> witness;  ///< first violating triple

    explicit operator bool() const noexcept { return ok; }
};

/// Strong triangle inequality d(a,c) <= max(d(a,b), d(b,c)) on every
/// triple, within an absolute tolerance. Prior-tree and cophenetic
/// matrices pass at tol 0.
UltrametricCheck verify_ultrametric(const DistanceMatrix& matrix, double tol = 0.0);

/// Max over condensed entries of |a - b|; labels and order must match.
double linf_distance(const DistanceMatrix& a, const DistanceMatrix& b);

// -- file format ---------------------------------------------------------------

/// Matrix file: CSV of condensed triplets (label_a,label_b,value) in
/// condensed order, plus a sidecar "<path>.labels" holding the label order
/// one per line. Floats use shortest round-trip representation, so a
/// write/read cycle is bit-exact.
void write_matrix_csv(const DistanceMatrix& matrix, const std::filesystem::path& path);
DistanceMatrix read_matrix_csv(const std::filesystem::path& path);

}  // namespace priorclust
