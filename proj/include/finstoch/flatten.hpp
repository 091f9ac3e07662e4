#pragma once
// Finite-stage flattening of a doubly indexed matrix of trees. The
// matrix sampler picks a column and a row as geometric indices (first 1
// in the respective stream), then samples the selected entry with the
// column's branch stream. One flatten step rebuilds the first column
// into a single row-independent glued entry, repacks the remainder of
// the first two columns into the second column, and leaves columns >= 3
// untouched; the companion prefix permutation reroutes the bit streams
// so that sampling commutes with the step, prefix by prefix.
//
// Conventions the permutation equations fix: at a glue node the branch
// bit 1 selects the first component; inside a base tree the sampler's
// usual convention applies (bit 0 takes the left half).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finstoch/btree.hpp"

namespace finstoch {

// A formal glue of trees. Kept as an expression so that navigation
// defers to the components and never reorders their branch bits.
class GlueExpr {
public:
  static GlueExpr base(BTree t);
  static GlueExpr join(GlueExpr first, GlueExpr second);

  bool is_base() const { return node_->tree.has_value(); }
  const BTree& tree() const { return *node_->tree; }
  const GlueExpr& first() const { return *node_->first; }
  const GlueExpr& second() const { return *node_->second; }
  const FinSpace& space() const;

  Dist dist() const;  // half/half mix at every glue node

  friend bool operator==(const GlueExpr& a, const GlueExpr& b);
  friend bool operator!=(const GlueExpr& a, const GlueExpr& b) { return !(a == b); }

private:
  struct Node {
    std::optional<BTree> tree;
    std::optional<GlueExpr> first, second;
  };
  explicit GlueExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Truncated matrix indexed (column, row), both 1-based. Entries beyond
// the bound are closed off by per-column tail entries (rows > bound)
// and a single padding entry (columns > bound).
class TreeMatrix {
public:
  TreeMatrix(FinSpace space, std::vector<std::vector<GlueExpr>> grid,
             std::vector<GlueExpr> column_tails, GlueExpr padding);

  const FinSpace& space() const { return space_; }
  std::size_t bound() const { return grid_.size(); }
  const GlueExpr& entry(std::size_t column, std::size_t row) const;
  const GlueExpr& column_tail(std::size_t column) const { return tails_.at(column - 1); }
  const GlueExpr& padding() const { return padding_; }

  friend bool operator==(const TreeMatrix& a, const TreeMatrix& b);

private:
  FinSpace space_;
  std::vector<std::vector<GlueExpr>> grid_;  // grid_[c-1][r-1]
  std::vector<GlueExpr> tails_;
  GlueExpr padding_;
};

// Finite prefixes of the sampler's bit streams: the column stream, the
// row stream, and one branch stream per column (missing entries are
// empty prefixes).
struct BitPrefixes {
  std::string column;
  std::string row;
  std::vector<std::string> branch;

  const std::string branch_at(std::size_t column) const {
    return column <= branch.size() ? branch[column - 1] : std::string();
  }

  friend bool operator==(const BitPrefixes&, const BitPrefixes&) = default;
};

// r1 alone: the matrix half of the step.
TreeMatrix flatten_matrix(const TreeMatrix& d);

// rho1 alone: the prefix permutation; nullopt when the prefixes are too
// short to decide the case split. The inverse decides its case from the
// column stream and the first two branch streams.
std::optional<BitPrefixes> permute_bits(const BitPrefixes& b);
std::optional<BitPrefixes> permute_bits_inverse(const BitPrefixes& b);

struct FlattenResult {
  TreeMatrix matrix;
  BitPrefixes bits;
};

// Both halves; nullopt signals "undecided", the caller extends the
// prefixes and retries.
std::optional<FlattenResult> flatten_step(const TreeMatrix& d, const BitPrefixes& b);

// Samples the matrix with the given prefixes; nullopt when some stream
// runs out before the outcome is determined.
std::optional<std::string> sample_matrix(const TreeMatrix& d, const BitPrefixes& b);

// Exact image of the matrix under sampling: sum over (c, r) of
// 2^-(c+r) dist(entry(c, r)), closed over the truncation by the tails
// and the padding.
Dist matrix_dist(const TreeMatrix& d);

}  // namespace finstoch
