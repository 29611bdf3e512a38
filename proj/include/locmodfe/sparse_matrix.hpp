// Compressed sparse row matrix with the operations needed by the solvers.
#pragma once

#include <string>
#include <vector>

namespace locmodfe {

class SparseMatrixCSR {
 public:
  SparseMatrixCSR() = default;
  explicit SparseMatrixCSR(const std::vector<std::vector<int>>& cols_per_row);

  int n_rows() const { return static_cast<int>(row_ptr_.size()) - 1; }
  int n_nonzeros() const { return static_cast<int>(col_idx_.size()); }

  const std::vector<int>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col_idx() const { return col_idx_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  void set_zero();
  // Adds v to entry (i, j); the entry must exist in the pattern.
  void add(int i, int j, double v);
  double get(int i, int j) const;  // 0 if not in the pattern

  // y = A x.  With threads > 1 rows are distributed over OpenMP threads;
  // per-row results are identical to the serial path.
  void matvec(const std::vector<double>& x, std::vector<double>& y,
              int threads = 1) const;

  std::vector<double> diagonal() const;

  // Symmetric elimination of Dirichlet rows/columns: boundary rows become
  // identity rows with rhs = value, and boundary columns are moved to the
  // right-hand side.  Keeps the matrix symmetric.
  void eliminate_dirichlet(const std::vector<char>& is_boundary,
                           const std::vector<double>& boundary_value,
                           std::vector<double>& rhs);

  // Writes the matrix in MatrixMarket coordinate format.
  void write_matrix_market(const std::string& path) const;

 private:
  int find(int i, int j) const;

  std::vector<int> row_ptr_{0};
  std::vector<int> col_idx_;
  std::vector<double> values_;
};

}  // namespace locmodfe
