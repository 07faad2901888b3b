#include "quadrics/linalg.hpp"

#include <stdexcept>

namespace quadrics::linalg {

std::vector<int> rref(const Field& f, Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
    Fel s = f.inv(m.at(row, col));
    for (int c = 0; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), s);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Fel t = m.at(r, col);
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(t, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const Field& f, Mat m) { return int(rref(f, m).size()); }

std::vector<std::vector<Fel>> kernel_basis(const Field& f, const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref(f, r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Fel>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fel> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(r.at(int(i), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> inverse(const Field& f, const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows;
  Mat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  auto pivots = rref(f, aug);
  if (int(pivots.size()) != n) return std::nullopt;
  Mat out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

Mat mul(const Field& f, const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      Fel v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(v, b.at(k, j)));
    }
  return out;
}

std::vector<Fel> apply(const Field& f, const Mat& m, std::span<const Fel> x) {
  if (int(x.size()) != m.cols) throw std::invalid_argument("vector length mismatch");
  std::vector<Fel> out(m.rows, 0);
  for (int r = 0; r < m.rows; ++r) {
    Fel acc = 0;
    for (int c = 0; c < m.cols; ++c) acc = f.add(acc, f.mul(m.at(r, c), x[c]));
    out[r] = acc;
  }
  return out;
}

int rank_of_rows(const Field& f, const std::vector<std::vector<Fel>>& rows) {
  if (rows.empty()) return 0;
  Mat m(int(rows.size()), int(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size())
      throw std::invalid_argument("ragged row set");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(int(r), int(c)) = rows[r][c];
  }
  return rank(f, std::move(m));
}

Mat random_invertible(const Field& f, int dim, std::mt19937_64& rng) {
  while (true) {
    Mat m(dim, dim);
    for (Fel& v : m.a) v = Fel(rng() % f.q());
    if (rank(f, m) == dim) return m;
  }
}

}  // namespace quadrics::linalg
