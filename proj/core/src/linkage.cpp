#include "priorclust/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_set>

#include "priorclust/errors.hpp"
#include "priorclust/io_util.hpp"

namespace priorclust {

CutUnattainableError::CutUnattainableError(int requested, int nearest_below, int nearest_above,
                                           std::vector<int> attainable)
    : Error([&] {
          std::string msg = "no flat cut with exactly " + std::to_string(requested)
                            + " clusters (merges tied in height are never split); nearest"
                              " attainable: " + std::to_string(nearest_below) + " below, "
                            + std::to_string(nearest_above) + " above; attainable K:";
          for (int k : attainable) {
              msg += ' ' + std::to_string(k);
          }
          return msg;
      }()),
      requested_(requested),
      nearest_below_(nearest_below),
      nearest_above_(nearest_above),
      attainable_(std::move(attainable)) {}

Linkage linkage_from_name(std::string_view name) {
    if (name == "single") return Linkage::Single;
    if (name == "complete") return Linkage::Complete;
    if (name == "average") return Linkage::Average;
    throw InputError("unknown linkage: '" + std::string(name) + "'");
}

std::string_view linkage_name(Linkage linkage) {
    switch (linkage) {
        case Linkage::Single: return "single";
        case Linkage::Complete: return "complete";
        case Linkage::Average: return "average";
    }
    throw InternalError("bad linkage tag");
}

// ---------------------------------------------------------------------------
// Dendrogram / FlatPartition

Dendrogram::Dendrogram(std::vector<std::string> labels, std::vector<Merge> merges)
    : labels_(std::move(labels)), merges_(std::move(merges)) {
    validate();
}

void Dendrogram::validate() const {
    const std::size_t n = labels_.size();
    if (n == 0) {
        throw InputError("dendrogram needs at least one leaf");
    }
    {
        std::unordered_set<std::string_view> seen;
        for (const auto& label : labels_) {
            if (!seen.insert(label).second) {
                throw InputError("dendrogram: duplicate label '" + label + "'");
            }
        }
    }
    if (merges_.size() != n - 1) {
        throw InputError("dendrogram over " + std::to_string(n) + " leaves needs "
                         + std::to_string(n - 1) + " merges, got "
                         + std::to_string(merges_.size()));
    }
    std::vector<bool> used(n + merges_.size(), false);
    std::vector<std::int32_t> sizes(n + merges_.size(), 1);
    double prev_height = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < merges_.size(); ++k) {
        const Merge& m = merges_[k];
        const std::int32_t merge_id = static_cast<std::int32_t>(n + k);
        if (m.left >= m.right || m.left < 0 || m.right >= merge_id) {
            throw InputError("dendrogram: merge " + std::to_string(k) + " has bad children");
        }
        if (used[static_cast<std::size_t>(m.left)] || used[static_cast<std::size_t>(m.right)]) {
            throw InputError("dendrogram: cluster used twice in merge " + std::to_string(k));
        }
        used[static_cast<std::size_t>(m.left)] = used[static_cast<std::size_t>(m.right)] = true;
        if (std::isnan(m.height) || m.height < prev_height) {
            throw InputError("dendrogram: heights decrease at merge " + std::to_string(k));
        }
        prev_height = m.height;
        sizes[static_cast<std::size_t>(merge_id)] =
            sizes[static_cast<std::size_t>(m.left)] + sizes[static_cast<std::size_t>(m.right)];
        if (m.size != sizes[static_cast<std::size_t>(merge_id)]) {
            throw InputError("dendrogram: wrong size at merge " + std::to_string(k));
        }
    }
    if (!merges_.empty() && merges_.back().size != static_cast<std::int32_t>(n)) {
        throw InputError("dendrogram: final merge does not cover all leaves");
    }
}

FlatPartition::FlatPartition(std::vector<std::string> labels, std::vector<std::int32_t> assignment,
                             std::int32_t cluster_count)
    : labels_(std::move(labels)), assignment_(std::move(assignment)), cluster_count_(cluster_count) {
    if (labels_.size() != assignment_.size()) {
        throw InputError("partition: label/assignment size mismatch");
    }
    if (cluster_count_ < 1 || static_cast<std::size_t>(cluster_count_) > labels_.size()) {
        throw InputError("partition: bad cluster count");
    }
    std::vector<bool> non_empty(static_cast<std::size_t>(cluster_count_), false);
    for (std::int32_t c : assignment_) {
        if (c < 0 || c >= cluster_count_) {
            throw InputError("partition: cluster index out of range");
        }
        non_empty[static_cast<std::size_t>(c)] = true;
    }
    for (bool filled : non_empty) {
        if (!filled) {
            throw InputError("partition: empty cluster");
        }
    }
}

std::int32_t FlatPartition::cluster_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return assignment_[i];
        }
    }
    throw InputError("unknown label: '" + std::string(label) + "'");
}

// ---------------------------------------------------------------------------
// SLINK single linkage

namespace {

struct UnionFind {
    std::vector<std::int32_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::int32_t find(std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void link(std::int32_t root, std::int32_t into) { parent[static_cast<std::size_t>(root)] = into; }
};

/// Turns absorption events (point, companion, height) into a merge table
/// via union-find, assigning merge ids in event order.
Dendrogram merges_from_events(std::vector<std::string> labels,
                              std::span<const std::tuple<double, std::int32_t, std::int32_t>> events) {
    const std::size_t n = labels.size();
    UnionFind uf(2 * n - 1);
    std::vector<std::int32_t> cluster_of_root(2 * n - 1);
    std::iota(cluster_of_root.begin(), cluster_of_root.end(), 0);
    std::vector<std::int32_t> sizes(2 * n - 1, 1);
    std::vector<Merge> merges;
    merges.reserve(n - 1);
    for (const auto& [height, point, companion] : events) {
        std::int32_t ra = uf.find(point);
        std::int32_t rb = uf.find(companion);
        if (ra == rb) {
            throw InternalError("single linkage: event joins a cluster with itself");
        }
        std::int32_t ca = cluster_of_root[static_cast<std::size_t>(ra)];
        std::int32_t cb = cluster_of_root[static_cast<std::size_t>(rb)];
        const std::int32_t merge_id = static_cast<std::int32_t>(n + merges.size());
        Merge m;
        m.left = std::min(ca, cb);
        m.right = std::max(ca, cb);
        m.height = height;
        m.size = sizes[static_cast<std::size_t>(ca)] + sizes[static_cast<std::size_t>(cb)];
        merges.push_back(m);
        uf.link(ra, rb);
        cluster_of_root[static_cast<std::size_t>(rb)] = merge_id;
        sizes[static_cast<std::size_t>(merge_id)] = m.size;
    }
    return Dendrogram(std::move(labels), std::move(merges));
}

}  // namespace

Dendrogram single_linkage(const DistanceMatrix& d) {
    const std::size_t n = d.size();
    if (n == 1) {
        return Dendrogram(d.labels(), {});
    }
    constexpr double inf = std::numeric_limits<double>::infinity();

    // Sibson's SLINK: pi[j] / lambda[j] form the pointer representation,
    // O(n^2) time, O(n) working memory.
    std::vector<std::int32_t> pi(n, 0);
    std::vector<double> lambda(n, inf);
    std::vector<double> m_row(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        pi[i] = static_cast<std::int32_t>(i);
        lambda[i] = inf;
        for (std::size_t j = 0; j < i; ++j) {
            m_row[j] = d.at(j, i);
        }
        for (std::size_t j = 0; j < i; ++j) {
            auto pj = static_cast<std::size_t>(pi[j]);
            if (lambda[j] >= m_row[j]) {
                m_row[pj] = std::min(m_row[pj], lambda[j]);
                lambda[j] = m_row[j];
                pi[j] = static_cast<std::int32_t>(i);
            } else {
                m_row[pj] = std::min(m_row[pj], m_row[j]);
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (lambda[j] >= lambda[static_cast<std::size_t>(pi[j])]) {
                pi[j] = static_cast<std::int32_t>(i);
            }
        }
    }

    std::vector<std::tuple<double, std::int32_t, std::int32_t>> events;
    events.reserve(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        events.emplace_back(lambda[j], static_cast<std::int32_t>(j), pi[j]);
    }
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b)
                                                : std::get<1>(a) < std::get<1>(b);
    });
    return merges_from_events(d.labels(), events);
}

// ---------------------------------------------------------------------------
// generic agglomeration engine

namespace {

/// Cross-cluster linkage distance recomputed from the input matrix.
/// Averages accumulate over member pairs in leaf order, the cluster
/// holding the smallest leaf iterating in the outer loop, so results are
/// identical no matter which argument is which.
double linkage_distance(const DistanceMatrix& d, Linkage linkage,
                        std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    if (linkage == Linkage::Average) {
        if (a.front() > b.front()) {
            std::swap(a, b);
        }
        double sum = 0.0;
        for (std::int32_t x : a) {
            for (std::int32_t y : b) {
                sum += d.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
            }
        }
        return sum / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
    }
    const bool want_min = linkage == Linkage::Single;
    double best = want_min ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
    for (std::int32_t x : a) {
        for (std::int32_t y : b) {
            double v = d.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
            best = want_min ? std::min(best, v) : std::max(best, v);
        }
    }
    return best;
}

}  // namespace

Dendrogram agglomerate(const DistanceMatrix& d, Linkage linkage, const StepObserver* observer) {
    const std::size_t n = d.size();
    if (n == 1) {
        return Dendrogram(d.labels(), {});
    }

    // Slot-compacted working state: live clusters occupy slots 0..active-1.
    std::vector<std::int32_t> cluster_id(n);
    std::iota(cluster_id.begin(), cluster_id.end(), 0);
    std::vector<std::vector<std::int32_t>> members(n);
    for (std::size_t i = 0; i < n; ++i) {
        members[i] = {static_cast<std::int32_t>(i)};
    }
    std::vector<double> work(n * n, 0.0);
    auto w = [&](std::size_t s, std::size_t t) -> double& { return work[s * n + t]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            w(i, j) = w(j, i) = d.at(i, j);
        }
    }

    std::vector<Merge> merges;
    merges.reserve(n - 1);
    std::size_t active = n;
    while (active > 1) {
        // minimal distance, ties to the smallest (min id, max id) pair
        std::size_t best_s = 0, best_t = 1;
        double best_dist = std::numeric_limits<double>::infinity();
        std::int32_t best_lo = 0, best_hi = 0;
        bool first = true;
        for (std::size_t s = 0; s < active; ++s) {
            for (std::size_t t = s + 1; t < active; ++t) {
                const double dist = w(s, t);
                const std::int32_t lo = std::min(cluster_id[s], cluster_id[t]);
                const std::int32_t hi = std::max(cluster_id[s], cluster_id[t]);
                const bool better =
                    first || dist < best_dist
                    || (dist == best_dist && (lo < best_lo || (lo == best_lo && hi < best_hi)));
                if (better) {
                    best_s = s;
                    best_t = t;
                    best_dist = dist;
                    best_lo = lo;
                    best_hi = hi;
                    first = false;
                }
            }
        }

        const std::int32_t merge_id = static_cast<std::int32_t>(n + merges.size());
        Merge m;
        m.left = best_lo;
        m.right = best_hi;
        m.height = best_dist;
        m.size = static_cast<std::int32_t>(members[best_s].size() + members[best_t].size());
        merges.push_back(m);

        std::vector<std::int32_t> merged;
        merged.reserve(members[best_s].size() + members[best_t].size());
        std::merge(members[best_s].begin(), members[best_s].end(), members[best_t].begin(),
                   members[best_t].end(), std::back_inserter(merged));
        members[best_s] = std::move(merged);
        cluster_id[best_s] = merge_id;

        // close the gap at best_t with the last active slot
        const std::size_t last = active - 1;
        if (best_t != last) {
            cluster_id[best_t] = cluster_id[last];
            members[best_t] = std::move(members[last]);
            for (std::size_t s = 0; s < last; ++s) {
                w(s, best_t) = w(best_t, s) = w(s, last);
            }
        }
        --active;

        for (std::size_t s = 0; s < active; ++s) {
            if (s == best_s) {
                continue;
            }
            const double dist = linkage_distance(d, linkage, members[best_s], members[s]);
            w(s, best_s) = w(best_s, s) = dist;
        }

        if (observer) {
            std::vector<std::int32_t> ids(cluster_id.begin(),
                                          cluster_id.begin() + static_cast<std::ptrdiff_t>(active));
            std::sort(ids.begin(), ids.end());
            auto dist_of = [&](std::int32_t a, std::int32_t b) -> double {
                std::size_t sa = active, sb = active;
                for (std::size_t s = 0; s < active; ++s) {
                    if (cluster_id[s] == a) sa = s;
                    if (cluster_id[s] == b) sb = s;
                }
                if (sa == active || sb == active) {
                    throw InputError("observer asked about a dead cluster id");
                }
                return sa == sb ? 0.0 : w(sa, sb);
            };
            (*observer)(ids, dist_of);
        }
    }

    // ensure non-decreasing heights; single/complete/average linkages are
    // monotone so this is an invariant, not a repair
    for (std::size_t k = 1; k < merges.size(); ++k) {
        if (merges[k].height < merges[k - 1].height) {
            throw InternalError("linkage produced a height inversion");
        }
    }
    return Dendrogram(d.labels(), std::move(merges));
}

Dendrogram complete_linkage(const DistanceMatrix& d) {
    return agglomerate(d, Linkage::Complete);
}

Dendrogram average_linkage(const DistanceMatrix& d) {
    return agglomerate(d, Linkage::Average);
}

// ---------------------------------------------------------------------------
// dendrogram queries

DistanceMatrix cophenetic(const Dendrogram& dend) {
    const std::size_t n = dend.leaf_count();
    std::vector<double> values(n * (n - 1) / 2, 0.0);
    std::vector<std::vector<std::int32_t>> members(n + dend.merges().size());
    for (std::size_t i = 0; i < n; ++i) {
        members[i] = {static_cast<std::int32_t>(i)};
    }
    for (std::size_t k = 0; k < dend.merges().size(); ++k) {
        const Merge& m = dend.merges()[k];
        auto& left = members[static_cast<std::size_t>(m.left)];
        auto& right = members[static_cast<std::size_t>(m.right)];
        for (std::int32_t a : left) {
            for (std::int32_t b : right) {
                values[DistanceMatrix::condensed_index(n, static_cast<std::size_t>(a),
                                                       static_cast<std::size_t>(b))] = m.height;
            }
        }
        auto& slot = members[n + k];
        slot = std::move(left);
        slot.insert(slot.end(), right.begin(), right.end());
        right.clear();
        right.shrink_to_fit();
    }
    double max = 0.0;
    for (double v : values) {
        max = std::max(max, v);
    }
    return DistanceMatrix(dend.labels(), std::move(values), /*normalized=*/max <= 1.0);
}

std::vector<int> attainable_cut_sizes(const Dendrogram& dend) {
    const auto& merges = dend.merges();
    const int n = static_cast<int>(dend.leaf_count());
    std::vector<int> attainable;
    for (int kept = 0; kept <= static_cast<int>(merges.size()); ++kept) {
        const bool boundary_clean = kept == 0 || kept == static_cast<int>(merges.size())
                                    || merges[static_cast<std::size_t>(kept - 1)].height
                                           < merges[static_cast<std::size_t>(kept)].height;
        if (boundary_clean) {
            attainable.push_back(n - kept);
        }
    }
    std::sort(attainable.begin(), attainable.end());
    return attainable;
}

FlatPartition cut(const Dendrogram& dend, int k) {
    const int n = static_cast<int>(dend.leaf_count());
    if (k < 1 || k > n) {
        throw InputError("cut: K must lie in 1.." + std::to_string(n) + ", got "
                         + std::to_string(k));
    }
    const int kept = n - k;
    const auto& merges = dend.merges();
    const bool boundary_clean = kept == 0 || kept == static_cast<int>(merges.size())
                                || merges[static_cast<std::size_t>(kept - 1)].height
                                       < merges[static_cast<std::size_t>(kept)].height;
    if (!boundary_clean) {
        auto attainable = attainable_cut_sizes(dend);
        int below = 1, above = n;
        for (int a : attainable) {
            if (a < k) {
                below = std::max(below, a);
            } else if (a > k) {
                above = std::min(above, a);
            }
        }
        throw CutUnattainableError(k, below, above, std::move(attainable));
    }

    UnionFind uf(dend.leaf_count());
    std::vector<std::int32_t> rep(dend.leaf_count() + static_cast<std::size_t>(kept));
    std::iota(rep.begin(), rep.begin() + static_cast<std::ptrdiff_t>(dend.leaf_count()), 0);
    for (int m = 0; m < kept; ++m) {
        const Merge& merge = merges[static_cast<std::size_t>(m)];
        std::int32_t ra = uf.find(rep[static_cast<std::size_t>(merge.left)]);
        std::int32_t rb = uf.find(rep[static_cast<std::size_t>(merge.right)]);
        uf.link(ra, rb);
        rep[dend.leaf_count() + static_cast<std::size_t>(m)] = rb;
    }

    std::vector<std::int32_t> assignment(dend.leaf_count(), -1);
    std::vector<std::int32_t> dense_of_root(dend.leaf_count(), -1);
    std::int32_t next = 0;
    for (std::size_t i = 0; i < dend.leaf_count(); ++i) {
        std::int32_t root = uf.find(static_cast<std::int32_t>(i));
        if (dense_of_root[static_cast<std::size_t>(root)] < 0) {
            dense_of_root[static_cast<std::size_t>(root)] = next++;
        }
        assignment[i] = dense_of_root[static_cast<std::size_t>(root)];
    }
    if (next != k) {
        throw InternalError("cut produced " + std::to_string(next) + " clusters, expected "
                            + std::to_string(k));
    }
    return FlatPartition(dend.labels(), std::move(assignment), k);
}

namespace {

Dendrogram run_linkage(const DistanceMatrix& d, Linkage linkage) {
    return linkage == Linkage::Single ? single_linkage(d) : agglomerate(d, linkage);
}

}  // namespace

bool permutation_invariance_check(const DistanceMatrix& d, Linkage linkage, int trials,
                                  std::uint64_t seed) {
    const DistanceMatrix base = cophenetic(run_linkage(d, linkage));
    std::mt19937_64 rng(seed);
    std::vector<std::string> perm = d.labels();
    for (int t = 0; t < trials; ++t) {
        // Fisher-Yates with explicit sampling keeps results identical for a
        // given seed across standard libraries.
        for (std::size_t i = perm.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(rng() % i);
            std::swap(perm[i - 1], perm[j]);
        }
        DistanceMatrix permuted = reorder(d, perm);
        DistanceMatrix coph = cophenetic(run_linkage(permuted, linkage));
        DistanceMatrix back = reorder(coph, d.labels());
        if (linf_distance(base, back) > 1e-12) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// file formats

void write_dendrogram_csv(const Dendrogram& dend, const std::filesystem::path& path) {
    std::string out = "left,right,height,size\n";
    for (const Merge& m : dend.merges()) {
        out += std::to_string(m.left);
        out += ',';
        out += std::to_string(m.right);
        out += ',';
        out += format_double(m.height);
        out += ',';
        out += std::to_string(m.size);
        out += '\n';
    }
    write_file_atomic(path, out);

    std::string sidecar;
    for (const auto& label : dend.labels()) {
        sidecar += label;
        sidecar += '\n';
    }
    std::filesystem::path labels_path = path;
    labels_path += ".labels";
    write_file_atomic(labels_path, sidecar);
}

Dendrogram read_dendrogram_csv(const std::filesystem::path& path) {
    std::filesystem::path labels_path = path;
    labels_path += ".labels";
    auto label_lines = split_lines(read_file(labels_path));
    std::vector<std::string> labels;
    for (auto& line : label_lines) {
        if (!line.empty()) {
            labels.push_back(std::move(line));
        }
    }

    auto lines = split_lines(read_file(path));
    if (lines.empty()
        || csv_split(lines.front()) != std::vector<std::string>{"left", "right", "height", "size"}) {
        throw InputError("dendrogram file missing 'left,right,height,size' header: "
                         + path.string());
    }
    std::vector<Merge> merges;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) {
            continue;
        }
        auto fields = csv_split(lines[row]);
        if (fields.size() != 4) {
            throw InputError("dendrogram line " + std::to_string(row + 1) + ": expected 4 fields");
        }
        Merge m;
        m.left = static_cast<std::int32_t>(parse_long(fields[0]));
        m.right = static_cast<std::int32_t>(parse_long(fields[1]));
        m.height = parse_double(fields[2]);
        m.size = static_cast<std::int32_t>(parse_long(fields[3]));
        merges.push_back(m);
    }
    return Dendrogram(std::move(labels), std::move(merges));
}

namespace {

std::string quote_tree_label(const std::string& label) {
    const bool needs_quote = label.empty()
                             || label.find_first_of("(),;\" \t\r\n") != std::string::npos;
    if (!needs_quote) {
        return label;
    }
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string dendrogram_to_tree_text(const Dendrogram& dend) {
    const std::size_t n = dend.leaf_count();
    std::vector<std::string> rendered(n + dend.merges().size());
    for (std::size_t i = 0; i < n; ++i) {
        rendered[i] = quote_tree_label(dend.labels()[i]);
    }
    for (std::size_t k = 0; k < dend.merges().size(); ++k) {
        const Merge& m = dend.merges()[k];
        rendered[n + k] = "(" + rendered[static_cast<std::size_t>(m.left)] + ","
                          + rendered[static_cast<std::size_t>(m.right)] + ")"
                          + format_double(m.height);
    }
    return rendered.back() + ";";
}

void write_partition_csv(const FlatPartition& partition, const std::filesystem::path& path) {
    std::string out = "label,cluster\n";
    for (std::size_t i = 0; i < partition.size(); ++i) {
        out += csv_quote(partition.labels()[i]);
        out += ',';
        out += std::to_string(partition.assignment()[i]);
        out += '\n';
    }
    write_file_atomic(path, out);
}

FlatPartition read_partition_csv(const std::filesystem::path& path) {
    auto lines = split_lines(read_file(path));
    if (lines.empty() || csv_split(lines.front()) != std::vector<std::string>{"label", "cluster"}) {
        throw InputError("partition file missing 'label,cluster' header: " + path.string());
    }
    std::vector<std::string> labels;
    std::vector<std::int32_t> assignment;
    std::int32_t max_cluster = -1;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) {
            continue;
        }
        auto fields = csv_split(lines[row]);
        if (fields.size() != 2) {
            throw InputError("partition line " + std::to_string(row + 1) + ": expected 2 fields");
        }
        labels.push_back(fields[0]);
        assignment.push_back(static_cast<std::int32_t>(parse_long(fields[1])));
        max_cluster = std::max(max_cluster, assignment.back());
    }
    return FlatPartition(std::move(labels), std::move(assignment), max_cluster + 1);
}

}  // namespace priorclust
