#include "priorclust/distance_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "priorclust/errors.hpp"
#include "priorclust/io_util.hpp"

namespace priorclust {

namespace {

std::unordered_map<std::string, std::size_t> build_index(const std::vector<std::string>& labels) {
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], i).second) {
            throw InputError("duplicate label: '" + labels[i] + "'");
        }
    }
    return index;
}

void require_same_labels(const DistanceMatrix& a, const DistanceMatrix& b) {
    if (a.labels() != b.labels()) {
        if (a.size() != b.size()) {
            throw InputError("label sets differ: " + std::to_string(a.size()) + " vs "
                             + std::to_string(b.size()) + " labels");
        }
        // distinguish a reordering from a genuine set mismatch
        std::unordered_set<std::string_view> set_a(a.labels().begin(), a.labels().end());
        for (const auto& label : b.labels()) {
            if (!set_a.contains(label)) {
                throw InputError("label sets differ: '" + label + "' missing from one matrix");
            }
        }
        throw InputError("label orders differ; reorder one matrix first");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// LabeledPointSet

LabeledPointSet::LabeledPointSet(std::vector<std::string> labels,
                                 std::vector<std::vector<double>> vectors)
    : labels_(std::move(labels)), vectors_(std::move(vectors)) {
    if (labels_.size() != vectors_.size()) {
        throw InputError("point set: " + std::to_string(labels_.size()) + " labels but "
                         + std::to_string(vectors_.size()) + " vectors");
    }
    if (labels_.empty()) {
        throw InputError("point set: no points");
    }
    build_index(labels_);  // uniqueness check
    dimension_ = vectors_.front().size();
    if (dimension_ == 0) {
        throw InputError("point set: zero-dimensional vectors");
    }
    std::vector<std::string> zero_labels;
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (vectors_[i].size() != dimension_) {
            throw InputError("point set: vector for '" + labels_[i] + "' has dimension "
                             + std::to_string(vectors_[i].size()) + ", expected "
                             + std::to_string(dimension_));
        }
        bool all_zero = true;
        for (double x : vectors_[i]) {
            if (std::isnan(x) || x < 0.0) {
                throw InputError("point set: negative or NaN component for '" + labels_[i] + "'");
            }
            if (x != 0.0) {
                all_zero = false;
            }
        }
        if (all_zero) {
            zero_labels.push_back(labels_[i]);
        }
    }
    if (!zero_labels.empty()) {
        std::string msg = "point set: zero vectors (cosine undefined) for labels:";
        for (const auto& label : zero_labels) {
            msg += " '" + label + "'";
        }
        throw InputError(msg);
    }
}

std::span<const double> LabeledPointSet::vector(std::size_t i) const {
    return vectors_.at(i);
}

LabeledPointSet read_point_set(const std::filesystem::path& path) {
    const std::string content = read_file(path);
    auto lines = split_lines(content);
    if (lines.empty()) {
        throw InputError("embeddings file is empty: " + path.string());
    }
    const char delimiter = lines.front().find('\t') != std::string::npos ? '\t' : ',';
    auto header = csv_split(lines.front(), delimiter);
    if (header.size() < 2) {
        throw InputError("embeddings header needs a label column plus components");
    }
    std::vector<std::string> labels;
    std::vector<std::vector<double>> vectors;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) {
            continue;
        }
        auto fields = csv_split(lines[row], delimiter);
        if (fields.size() != header.size()) {
            throw InputError("embeddings line " + std::to_string(row + 1) + " has "
                             + std::to_string(fields.size()) + " fields, expected "
                             + std::to_string(header.size()));
        }
        labels.push_back(fields.front());
        std::vector<double> vec;
        vec.reserve(fields.size() - 1);
        for (std::size_t c = 1; c < fields.size(); ++c) {
            vec.push_back(parse_double(fields[c]));
        }
        vectors.push_back(std::move(vec));
    }
    return LabeledPointSet(std::move(labels), std::move(vectors));
}

// ---------------------------------------------------------------------------
// DistanceMatrix

BlendWeight::BlendWeight(double a) : alpha(a) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw InputError("blend weight alpha must lie in [0,1], got " + format_double(a));
    }
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<double> condensed,
                               bool normalized)
    : labels_(std::move(labels)), values_(std::move(condensed)), normalized_(normalized) {
    const std::size_t n = labels_.size();
    if (n == 0) {
        throw InputError("distance matrix needs at least one label");
    }
    if (values_.size() != n * (n - 1) / 2) {
        throw InputError("condensed matrix over " + std::to_string(n) + " labels needs "
                         + std::to_string(n * (n - 1) / 2) + " values, got "
                         + std::to_string(values_.size()));
    }
    label_index_ = build_index(labels_);
    for (double v : values_) {
        if (std::isnan(v) || v < 0.0) {
            throw InputError("distance values must be non-negative");
        }
        if (normalized_ && v > 1.0) {
            throw InputError("matrix flagged normalized but holds value " + format_double(v));
        }
    }
}

std::size_t DistanceMatrix::condensed_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

double DistanceMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) {
        throw InputError("matrix index out of range");
    }
    if (i == j) {
        return 0.0;
    }
    return values_[condensed_index(size(), i, j)];
}

double DistanceMatrix::at(std::string_view a, std::string_view b) const {
    return at(index_of(a), index_of(b));
}

std::size_t DistanceMatrix::index_of(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) {
        throw InputError("unknown label: '" + std::string(label) + "'");
    }
    return it->second;
}

bool DistanceMatrix::has_label(std::string_view label) const {
    return label_index_.find(std::string(label)) != label_index_.end();
}

// ---------------------------------------------------------------------------
// construction

DistanceMatrix cosine_dissimilarity_matrix(const LabeledPointSet& points) {
    const std::size_t n = points.size();
    std::vector<double> sq_norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sq = 0.0;
        for (double x : points.vector(i)) {
            sq += x * x;
        }
        sq_norms[i] = sq;
    }
    std::vector<double> values;
    values.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        auto vi = points.vector(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            auto vj = points.vector(j);
            if (std::equal(vi.begin(), vi.end(), vj.begin(), vj.end())) {
                values.push_back(0.0);  // identical embeddings are exactly at distance 0
                continue;
            }
            double dot = 0.0;
            for (std::size_t c = 0; c < vi.size(); ++c) {
                dot += vi[c] * vj[c];
            }
            double denom = std::sqrt(sq_norms[i] * sq_norms[j]);
            if (!std::isfinite(denom)) {
                denom = std::sqrt(sq_norms[i]) * std::sqrt(sq_norms[j]);
            }
            double d = 1.0 - dot / denom;
            values.push_back(std::clamp(d, 0.0, 1.0));
        }
    }
    return DistanceMatrix(std::vector<std::string>(points.labels()), std::move(values),
                          /*normalized=*/true);
}

DistanceMatrix normalize(const DistanceMatrix& matrix, std::string* warning) {
    double max = 0.0;
    for (double v : matrix.values()) {
        max = std::max(max, v);
    }
    if (max == 0.0) {
        if (warning) {
            *warning = "normalize: all distances are zero; matrix left unchanged";
        }
        return DistanceMatrix(matrix.labels(), std::vector<double>(matrix.values().begin(),
                                                                   matrix.values().end()),
                              /*normalized=*/true);
    }
    std::vector<double> values;
    values.reserve(matrix.pair_count());
    for (double v : matrix.values()) {
        values.push_back(v / max);
    }
    return DistanceMatrix(matrix.labels(), std::move(values), /*normalized=*/true);
}

DistanceMatrix blend(const DistanceMatrix& d_p, const DistanceMatrix& u_t, BlendWeight w) {
    require_same_labels(d_p, u_t);
    if (!d_p.normalized() || !u_t.normalized()) {
        throw InputError("blend requires both matrices normalized into [0,1]");
    }
    const double alpha = w.alpha;
    const double keep = 1.0 - alpha;
    std::vector<double> values;
    values.reserve(d_p.pair_count());
    auto a = d_p.values();
    auto b = u_t.values();
    for (std::size_t i = 0; i < a.size(); ++i) {
        values.push_back(std::clamp(keep * a[i] + alpha * b[i], 0.0, 1.0));
    }
    return DistanceMatrix(d_p.labels(), std::move(values), /*normalized=*/true);
}

DistanceMatrix reorder(const DistanceMatrix& matrix, std::span<const std::string> new_order) {
    const std::size_t n = matrix.size();
    if (new_order.size() != n) {
        throw InputError("reorder: label count mismatch");
    }
    std::vector<std::size_t> to_old(n);
    std::unordered_set<std::size_t> used;
    for (std::size_t i = 0; i < n; ++i) {
        to_old[i] = matrix.index_of(new_order[i]);
        if (!used.insert(to_old[i]).second) {
            throw InputError("reorder: duplicate label '" + new_order[i] + "'");
        }
    }
    std::vector<double> values;
    values.reserve(matrix.pair_count());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            values.push_back(matrix.at(to_old[i], to_old[j]));
        }
    }
    return DistanceMatrix(std::vector<std::string>(new_order.begin(), new_order.end()),
                          std::move(values), matrix.normalized());
}

DistanceMatrix restrict(const DistanceMatrix& matrix, std::span<const std::string> subset) {
    const std::size_t n = subset.size();
    std::vector<std::size_t> to_old(n);
    std::unordered_set<std::size_t> used;
    for (std::size_t i = 0; i < n; ++i) {
        to_old[i] = matrix.index_of(subset[i]);
        if (!used.insert(to_old[i]).second) {
            throw InputError("restrict: duplicate label '" + subset[i] + "'");
        }
    }
    std::vector<double> values;
    values.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            values.push_back(matrix.at(to_old[i], to_old[j]));
        }
    }
    return DistanceMatrix(std::vector<std::string>(subset.begin(), subset.end()),
                          std::move(values), matrix.normalized());
}

// ---------------------------------------------------------------------------
// diagnostics

MetricAxiomReport verify_metric_axioms(const DistanceMatrix& matrix, double tol) {
    MetricAxiomReport report;
    for (double v : matrix.values()) {
        if (v < 0.0) {
            report.non_negative = false;  // unreachable through the public ctor
        }
    }
    const std::size_t n = matrix.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d_ij = matrix.at(i, j);
            for (std::size_t k = j + 1; k < n; ++k) {
                const double d_jk = matrix.at(j, k);
                const double d_ik = matrix.at(i, k);
                // with non-negative entries only the largest side can break
                // the triangle inequality
                const double largest = std::max({d_ij, d_jk, d_ik});
                const double sum_rest = d_ij + d_jk + d_ik - largest;
                if (largest > sum_rest + tol) {
                    report.triangle = false;
                    ++report.triangle_violations;
                    if (!report.first_violation) {
                        report.first_violation = TripleWitness{
                            matrix.labels()[i], matrix.labels()[j], matrix.labels()[k],
                            d_ij, d_jk, d_ik};
                    }
                }
            }
        }
    }
    return report;
}

UltrametricCheck verify_ultrametric(const DistanceMatrix& matrix, double tol) {
    const std::size_t n = matrix.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d_ij = matrix.at(i, j);
            for (std::size_t k = j + 1; k < n; ++k) {
                const double d_jk = matrix.at(j, k);
                const double d_ik = matrix.at(i, k);
                // strong triangle inequality == the max is attained twice:
                // largest <= second largest + tol
                double a = d_ij, b = d_jk, c = d_ik;
                if (a > b) std::swap(a, b);
                if (b > c) std::swap(b, c);
                if (a > b) std::swap(a, b);
                if (c > b + tol) {
                    return {false,
                            TripleWitness{matrix.labels()[i], matrix.labels()[j],
                                          matrix.labels()[k], d_ij, d_jk, d_ik}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

double linf_distance(const DistanceMatrix& a, const DistanceMatrix& b) {
    require_same_labels(a, b);
    double max = 0.0;
    auto va = a.values();
    auto vb = b.values();
    for (std::size_t i = 0; i < va.size(); ++i) {
        max = std::max(max, std::abs(va[i] - vb[i]));
    }
    return max;
}

// ---------------------------------------------------------------------------
// file format

void write_matrix_csv(const DistanceMatrix& matrix, const std::filesystem::path& path) {
    std::string out = "label_a,label_b,value\n";
    const std::size_t n = matrix.size();
    std::size_t idx = 0;
    auto values = matrix.values();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++idx) {
            out += csv_quote(matrix.labels()[i]);
            out += ',';
            out += csv_quote(matrix.labels()[j]);
            out += ',';
            out += format_double(values[idx]);
            out += '\n';
        }
    }
    write_file_atomic(path, out);

    std::string sidecar;
    for (const auto& label : matrix.labels()) {
        sidecar += label;
        sidecar += '\n';
    }
    std::filesystem::path labels_path = path;
    labels_path += ".labels";
    write_file_atomic(labels_path, sidecar);
}

DistanceMatrix read_matrix_csv(const std::filesystem::path& path) {
    std::filesystem::path labels_path = path;
    labels_path += ".labels";
    auto label_lines = split_lines(read_file(labels_path));
    std::vector<std::string> labels;
    for (auto& line : label_lines) {
        if (!line.empty()) {
            labels.push_back(std::move(line));
        }
    }
    if (labels.empty()) {
        throw InputError("label sidecar is empty: " + labels_path.string());
    }
    auto index = build_index(labels);

    const std::size_t n = labels.size();
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<double> values(pairs, -1.0);
    auto lines = split_lines(read_file(path));
    if (lines.empty() || csv_split(lines.front()) != std::vector<std::string>{"label_a", "label_b", "value"}) {
        throw InputError("matrix file missing 'label_a,label_b,value' header: " + path.string());
    }
    std::size_t filled = 0;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) {
            continue;
        }
        auto fields = csv_split(lines[row]);
        if (fields.size() != 3) {
            throw InputError("matrix line " + std::to_string(row + 1) + ": expected 3 fields");
        }
        auto ia = index.find(fields[0]);
        auto ib = index.find(fields[1]);
        if (ia == index.end() || ib == index.end()) {
            throw InputError("matrix line " + std::to_string(row + 1)
                             + ": label not in sidecar order file");
        }
        if (ia->second == ib->second) {
            throw InputError("matrix line " + std::to_string(row + 1) + ": self-pair");
        }
        const std::size_t idx = DistanceMatrix::condensed_index(n, ia->second, ib->second);
        if (values[idx] >= 0.0) {
            throw InputError("matrix line " + std::to_string(row + 1) + ": duplicate pair");
        }
        double v = parse_double(fields[2]);
        if (v < 0.0) {
            throw InputError("matrix line " + std::to_string(row + 1) + ": negative distance");
        }
        values[idx] = v;
        ++filled;
    }
    if (filled != pairs) {
        throw InputError("matrix file covers " + std::to_string(filled) + " pairs, expected "
                         + std::to_string(pairs));
    }
    double max = 0.0;
    for (double v : values) {
        max = std::max(max, v);
    }
    return DistanceMatrix(std::move(labels), std::move(values), /*normalized=*/max <= 1.0);
}

}  // namespace priorclust
