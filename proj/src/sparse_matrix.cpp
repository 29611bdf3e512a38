#include "locmodfe/sparse_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <stdexcept>

namespace locmodfe {

SparseMatrixCSR::SparseMatrixCSR(const std::vector<std::vector<int>>& cols_per_row) {
  row_ptr_.assign(1, 0);
  row_ptr_.reserve(cols_per_row.size() + 1);
  for (const auto& row : cols_per_row) {
    assert(std::is_sorted(row.begin(), row.end()));
    col_idx_.insert(col_idx_.end(), row.begin(), row.end());
    row_ptr_.push_back(static_cast<int>(col_idx_.size()));
  }
  values_.assign(col_idx_.size(), 0.0);
}

void SparseMatrixCSR::set_zero() {
  std::fill(values_.begin(), values_.end(), 0.0);
}

int SparseMatrixCSR::find(int i, int j) const {
  const auto begin = col_idx_.begin() + row_ptr_[i];
  const auto end = col_idx_.begin() + row_ptr_[i + 1];
  const auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return -1;
  return static_cast<int>(it - col_idx_.begin());
}

void SparseMatrixCSR::add(int i, int j, double v) {
  const int k = find(i, j);
  assert(k >= 0 && "entry not present in sparsity pattern");
  values_[k] += v;
}

double SparseMatrixCSR::get(int i, int j) const {
  const int k = find(i, j);
  return k < 0 ? 0.0 : values_[k];
}

void SparseMatrixCSR::matvec(const std::vector<double>& x, std::vector<double>& y,
                             int threads) const {
  const int n = n_rows();
  y.resize(n);
#ifdef LOCMODFE_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(threads > 1 ? threads : 1) \
    if (threads > 1)
#endif
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      s += values_[k] * x[col_idx_[k]];
    y[i] = s;
  }
}

std::vector<double> SparseMatrixCSR::diagonal() const {
  const int n = n_rows();
  std::vector<double> d(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const int k = find(i, i);
    if (k >= 0) d[i] = values_[k];
  }
  return d;
}

void SparseMatrixCSR::eliminate_dirichlet(const std::vector<char>& is_boundary,
                                          const std::vector<double>& boundary_value,
                                          std::vector<double>& rhs) {
  const int n = n_rows();
  for (int i = 0; i < n; ++i) {
    if (is_boundary[i]) {
      for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
        values_[k] = col_idx_[k] == i ? 1.0 : 0.0;
      rhs[i] = boundary_value[i];
    } else {
      for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
        const int j = col_idx_[k];
        if (is_boundary[j]) {
          rhs[i] -= values_[k] * boundary_value[j];
          values_[k] = 0.0;
        }
      }
    }
  }
}

void SparseMatrixCSR::write_matrix_market(const std::string& path) const {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  std::fprintf(f, "%%%%MatrixMarket matrix coordinate real general\n");
  std::fprintf(f, "%d %d %d\n", n_rows(), n_rows(), n_nonzeros());
  for (int i = 0; i < n_rows(); ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      std::fprintf(f, "%d %d %.16e\n", i + 1, col_idx_[k] + 1, values_[k]);
  std::fclose(f);
}

}  // namespace locmodfe
