#include "finstoch/flatten.hpp"

#include "finstoch/midpoint.hpp"

namespace finstoch {

GlueExpr GlueExpr::base(BTree t) {
  auto node = std::make_shared<Node>();
  node->tree = std::move(t);
  return GlueExpr(std::move(node));
}

GlueExpr GlueExpr::join(GlueExpr first, GlueExpr second) {
  if (first.space() != second.space())
    throw std::invalid_argument("glue: expressions over different spaces");
  auto node = std::make_shared<Node>();
  node->first = std::move(first);
  node->second = std::move(second);
  return GlueExpr(std::move(node));
}

const FinSpace& GlueExpr::space() const {
  return is_base() ? tree().space() : first().space();
}

Dist GlueExpr::dist() const {
  if (is_base()) return tree_dist(tree());
  return mid(first().dist(), second().dist());
}

bool operator==(const GlueExpr& a, const GlueExpr& b) {
  if (a.is_base() != b.is_base()) return false;
  if (a.is_base()) return a.tree() == b.tree();
  return a.first() == b.first() && a.second() == b.second();
}

TreeMatrix::TreeMatrix(FinSpace space, std::vector<std::vector<GlueExpr>> grid,
                       std::vector<GlueExpr> column_tails, GlueExpr padding)
    : space_(std::move(space)),
      grid_(std::move(grid)),
      tails_(std::move(column_tails)),
      padding_(std::move(padding)) {
  if (grid_.size() < 2) throw std::invalid_argument("matrix bound must be at least 2");
  if (tails_.size() != grid_.size())
    throw std::invalid_argument("one tail entry per explicit column required");
  for (const auto& col : grid_) {
    if (col.size() != grid_.size()) throw std::invalid_argument("matrix grid must be square");
    for (const auto& e : col)
      if (e.space() != space_) throw std::invalid_argument("matrix entry over the wrong space");
  }
  for (const auto& t : tails_)
    if (t.space() != space_) throw std::invalid_argument("tail entry over the wrong space");
  if (padding_.space() != space_) throw std::invalid_argument("padding over the wrong space");
}

const GlueExpr& TreeMatrix::entry(std::size_t column, std::size_t row) const {
  if (column == 0 || row == 0) throw std::out_of_range("matrix indices are 1-based");
  if (column > bound()) return padding_;
  if (row > bound()) return tails_[column - 1];
  return grid_[column - 1][row - 1];
}

bool operator==(const TreeMatrix& a, const TreeMatrix& b) {
  return a.space_ == b.space_ && a.grid_ == b.grid_ && a.tails_ == b.tails_ &&
         a.padding_ == b.padding_;
}

TreeMatrix flatten_matrix(const TreeMatrix& d) {
  const std::size_t bound = d.bound();
  // The rebuilt first column is row-independent.
  GlueExpr top = GlueExpr::join(d.entry(1, 1), GlueExpr::join(d.entry(1, 2), d.entry(2, 1)));
  std::vector<std::vector<GlueExpr>> grid;
  std::vector<GlueExpr> tails;
  grid.push_back(std::vector<GlueExpr>(bound, top));
  tails.push_back(top);
  // Second column absorbs the rest of the first two: row j pairs the old
  // (1, j+2) with the old (2, j+1).
  std::vector<GlueExpr> second;
  for (std::size_t j = 1; j <= bound; ++j)
    second.push_back(GlueExpr::join(d.entry(1, j + 2), d.entry(2, j + 1)));
  grid.push_back(std::move(second));
  tails.push_back(GlueExpr::join(d.column_tail(1), d.column_tail(2)));
  for (std::size_t c = 3; c <= bound; ++c) {
    std::vector<GlueExpr> col;
    for (std::size_t r = 1; r <= bound; ++r) col.push_back(d.entry(c, r));
    grid.push_back(std::move(col));
    tails.push_back(d.column_tail(c));
  }
  return TreeMatrix(d.space(), std::move(grid), std::move(tails), d.padding());
}

namespace {

bool starts_with(const std::string& s, std::string_view prefix) {
  return s.size() >= prefix.size() && std::string_view(s).substr(0, prefix.size()) == prefix;
}

BitPrefixes with_streams(const BitPrefixes& b, std::string column, std::string row,
                         std::string s1, std::string s2) {
  BitPrefixes out = b;
  out.column = std::move(column);
  out.row = std::move(row);
  if (out.branch.size() < 2) out.branch.resize(2);
  out.branch[0] = std::move(s1);
  out.branch[1] = std::move(s2);
  return out;
}

}  // namespace

std::optional<BitPrefixes> permute_bits(const BitPrefixes& b) {
  const std::string& col = b.column;
  const std::string& row = b.row;
  const std::string s1 = b.branch_at(1);
  const std::string s2 = b.branch_at(2);
  if (col.empty()) return std::nullopt;
  if (col[0] == '1') {
    if (row.empty()) return std::nullopt;
    if (row[0] == '1')  // old (1,1) via s1; new entry sits first in the glued column
      return with_streams(b, col, row.substr(1), "1" + s1, s2);
    if (row.size() < 2) return std::nullopt;
    if (row[1] == '1')  // old (1,2): second position of the glued column
      return with_streams(b, col, row.substr(2), "01" + s1, s2);
    // old (1, j+2) for j >= 1: moves to the second column, first slot
    return with_streams(b, "01" + col.substr(1), row.substr(2), s2, "1" + s1);
  }
  if (col.size() < 2) return std::nullopt;
  if (col[1] == '1') {
    if (row.empty()) return std::nullopt;
    if (row[0] == '1')  // old (2,1): third position of the glued column
      return with_streams(b, "1" + col.substr(2), row.substr(1), "00" + s2, s1);
    // old (2, j+1) for j >= 1: second column, second slot
    return with_streams(b, col, row.substr(1), s1, "0" + s2);
  }
  // columns >= 3 are untouched
  return b;
}

std::optional<BitPrefixes> permute_bits_inverse(const BitPrefixes& b) {
  const std::string& col = b.column;
  const std::string& row = b.row;
  const std::string s1 = b.branch_at(1);
  const std::string s2 = b.branch_at(2);
  if (col.empty()) return std::nullopt;
  if (col[0] == '1') {
    if (s1.empty()) return std::nullopt;
    if (s1[0] == '1') return with_streams(b, col, "1" + row, s1.substr(1), s2);
    if (s1.size() < 2) return std::nullopt;
    if (s1[1] == '1') return with_streams(b, col, "01" + row, s1.substr(2), s2);
    return with_streams(b, "01" + col.substr(1), "1" + row, s2, s1.substr(2));
  }
  if (col.size() < 2) return std::nullopt;
  if (col[1] == '1') {
    if (s2.empty()) return std::nullopt;
    if (s2[0] == '1') return with_streams(b, "1" + col.substr(2), "00" + row, s2.substr(1), s1);
    return with_streams(b, col, "0" + row, s1, s2.substr(1));
  }
  return b;
}

std::optional<FlattenResult> flatten_step(const TreeMatrix& d, const BitPrefixes& b) {
  auto permuted = permute_bits(b);
  if (!permuted) return std::nullopt;
  return FlattenResult{flatten_matrix(d), std::move(*permuted)};
}

namespace {

// Geometric index: position of the first 1, or nullopt when the prefix
// has no 1 yet.
std::optional<std::size_t> first_one_index(const std::string& bits) {
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] == '1') return i + 1;
  return std::nullopt;
}

std::optional<std::string> walk_expr(const GlueExpr& e, const std::string& bits,
                                     std::size_t& pos) {
  if (e.is_base()) {
    const BTree& t = e.tree();
    std::size_t index = 0;
    for (unsigned d = 0; d < t.depth(); ++d) {
      if (pos >= bits.size()) return std::nullopt;
      index = index * 2 + (bits[pos++] == '1' ? 1 : 0);
    }
    return t.leaf_label(index);
  }
  if (pos >= bits.size()) return std::nullopt;
  char bit = bits[pos++];
  return walk_expr(bit == '1' ? e.first() : e.second(), bits, pos);
}

}  // namespace

std::optional<std::string> sample_matrix(const TreeMatrix& d, const BitPrefixes& b) {
  auto column = first_one_index(b.column);
  if (!column) return std::nullopt;
  auto row = first_one_index(b.row);
  if (!row) return std::nullopt;
  const std::string branch = b.branch_at(*column);
  std::size_t pos = 0;
  return walk_expr(d.entry(*column, *row), branch, pos);
}

Dist matrix_dist(const TreeMatrix& d) {
  std::vector<std::pair<Rational, Dist>> terms;
  const long bound = static_cast<long>(d.bound());
  for (long c = 1; c <= bound; ++c) {
    for (long r = 1; r <= bound; ++r)
      terms.emplace_back(pow2(-c) * pow2(-r), d.entry(c, r).dist());
    terms.emplace_back(pow2(-c) * pow2(-bound), d.column_tail(c).dist());
  }
  terms.emplace_back(pow2(-bound), d.padding().dist());
  return convex_mix(terms);
}

}  // namespace finstoch
