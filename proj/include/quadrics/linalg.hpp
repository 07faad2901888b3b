#pragma once

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "quadrics/gf.hpp"

namespace quadrics::linalg {

/// Dense row-major matrix over a Field. The field is passed to each
/// operation rather than stored.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Fel> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  Fel& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  Fel at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(const Field& f, Mat& m);

int rank(const Field& f, Mat m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Fel>> kernel_basis(const Field& f, const Mat& m);

std::optional<Mat> inverse(const Field& f, const Mat& m);

Mat mul(const Field& f, const Mat& a, const Mat& b);

std::vector<Fel> apply(const Field& f, const Mat& m, std::span<const Fel> x);

/// Rank of the span of the given row vectors.
int rank_of_rows(const Field& f, const std::vector<std::vector<Fel>>& rows);

/// Uniformly random invertible dim x dim matrix (rejection sampling).
Mat random_invertible(const Field& f, int dim, std::mt19937_64& rng);

}  // namespace quadrics::linalg
