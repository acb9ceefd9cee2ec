#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "hgs/graph.hpp"
#include "hgs/structure.hpp"
#include "hgs/taxonomy.hpp"

namespace hgs {

// Sparse node-structure proximity matrix B: entry (i, s) = gamma^alpha where
// alpha is the hop distance from node i to the nearest member of structure s,
// zero (absent) past the d_max cutoff.
struct NodeStructureMatrix {
    std::vector<NodeId> rows;  // graph node per row, ascending
    std::vector<std::vector<std::pair<std::uint32_t, double>>> entries;  // per row: (col, value)
    std::uint32_t cols = 0;
    double gamma = 0.7;
    int d_max = 3;

    std::optional<std::uint32_t> row_of(NodeId v) const;
    Eigen::VectorXd dense_row(std::uint32_t row) const;
};

// Multi-source BFS from every structure's member set out to d_max hops.
// row_filter_level1 restricts rows to nodes under that level-1 label.
NodeStructureMatrix build_matrix(const HeteroGraph& g, const Model& model, double gamma, int d_max,
                                 const std::optional<std::string>& row_filter_level1,
                                 const LabelTaxonomy& tax, unsigned threads);

struct SvdResult {
    Eigen::MatrixXd features;         // rows x r, U * Sigma
    Eigen::VectorXd singular_values;  // length r, non-increasing
    Eigen::MatrixXd right_vectors;    // cols x r
};

// Randomized range-finder SVD: Gaussian test matrix with `oversample` extra
// columns, `power_iters` power iterations with re-orthonormalization, then a
// small dense SVD of the projected matrix. Deterministic for a given seed.
SvdResult randomized_svd(const NodeStructureMatrix& b, int rank, int oversample, int power_iters,
                         std::uint64_t seed);

struct SimilarEntry {
    NodeId node = 0;
    double score = 0.0;
    bool defined = true;  // false for zero-norm feature rows (score meaningless)
};

// Cosine top-k over feature rows; self excluded, ties by node id, undefined
// rows ranked last.
std::vector<SimilarEntry> top_similar(NodeId node, const NodeStructureMatrix& b,
                                      const Eigen::MatrixXd& features, int k);

}  // namespace hgs
