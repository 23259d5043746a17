#include "tlcat/linalg.hpp"

#include <stdexcept>

namespace tlcat {

namespace {

// a - factor * b, both sorted.
SparseRow axpy(const SparseRow &a, const mpq_class &factor, const SparseRow &b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      ++j;
    } else {
      mpq_class v = a[i].second - factor * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

SparseRow RowEchelon::reduce(SparseRow row) const {
  // Eliminate pivot columns left to right; entries before `pos` are
  // non-pivot columns that survive.
  std::size_t pos = 0;
  while (pos < row.size()) {
    auto it = pivots_.find(row[pos].first);
    if (it == pivots_.end()) {
      ++pos;
      continue;
    }
    const mpq_class factor = row[pos].second;
    row = axpy(row, factor, it->second);
  }
  return row;
}

bool RowEchelon::insert(SparseRow row) {
  for (const auto &[c, v] : row)
    if (c < 0 || c >= cols_) throw std::out_of_range("RowEchelon: column out of range");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const mpq_class lead = row.front().second;
  for (auto &[c, v] : row) v /= lead;
  const int col = row.front().first;
  pivots_.emplace(col, std::move(row));
  return true;
}

int rank(const std::vector<std::vector<mpq_class>> &rows, int cols) {
  RowEchelon ech(cols);
  for (const auto &r : rows) {
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("rank: ragged matrix");
    SparseRow s;
    for (int c = 0; c < cols; ++c)
      if (r[static_cast<std::size_t>(c)] != 0) s.emplace_back(c, r[static_cast<std::size_t>(c)]);
    ech.insert(std::move(s));
  }
  return ech.rank();
}

std::vector<std::vector<mpq_class>> kernel_basis(std::vector<std::vector<mpq_class>> a, int cols) {
  // Reduced row echelon form, then one kernel vector per free column.
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const mpq_class lead = a[r][static_cast<std::size_t>(c)];
    for (auto &v : a[r]) v /= lead;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (q == r || a[q][static_cast<std::size_t>(c)] == 0) continue;
      const mpq_class f = a[q][static_cast<std::size_t>(c)];
      for (int k = 0; k < cols; ++k) a[q][static_cast<std::size_t>(k)] -= f * a[r][static_cast<std::size_t>(k)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<mpq_class>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<mpq_class> v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t row = 0; row < pivot_col.size(); ++row)
      v[static_cast<std::size_t>(pivot_col[row])] = -a[row][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace tlcat
