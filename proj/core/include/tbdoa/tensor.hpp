#pragma once

#include <initializer_list>
#include <vector>

#include "tbdoa/types.hpp"

namespace tbdoa {

// Dense complex tensor with a fixed flattening convention: the multi-index
// (i_1, ..., i_N) maps to the flat buffer with i_N varying fastest and i_1
// slowest (C order). All multilinear identities in this library assume that
// convention; vec() is simply the flat buffer.
class DenseTensor {
 public:
  explicit DenseTensor(std::vector<Index> shape);
  DenseTensor(std::vector<Index> shape, std::vector<Complex> data);

  Index order() const { return static_cast<Index>(shape_.size()); }
  Index dim(Index mode) const { return shape_.at(static_cast<size_t>(mode - 1)); }  // 1-based
  Index size() const { return static_cast<Index>(data_.size()); }
  const std::vector<Index>& shape() const { return shape_; }

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  Complex& operator()(std::initializer_list<Index> idx) { return data_[flat_index(idx)]; }
  const Complex& operator()(std::initializer_list<Index> idx) const { return data_[flat_index(idx)]; }

  Index flat_index(std::initializer_list<Index> idx) const;

  double frobenius_norm() const;

 private:
  std::vector<Index> shape_;
  std::vector<Complex> data_;
};

// Ordered factor matrices of a polyadic decomposition; all share column count L.
struct CPDFactors {
  std::vector<CMat> factors;
  Index rank() const { return factors.empty() ? 0 : factors.front().cols(); }
};

// Columnwise Kronecker product. Row (i, j) of the result maps to i*rows(B) + j,
// i.e. the first factor varies slowest.
CMat khatri_rao(const CMat& a, const CMat& b);

// Kronecker product; block (i, j) equals A(i,j) * B.
CMat kron(const CMat& a, const CMat& b);

// Mode-n unfolding (n is 1-based). The result has dim(n) columns; rows
// enumerate the retained modes in increasing mode order with the last
// retained mode fastest, so that a rank-L tensor unfolds to
// (A1 (.) ... (.) A_{n-1} (.) A_{n+1} (.) ... (.) A_N) * A_n^T.
CMat unfold(const DenseTensor& t, Index mode);

// Inverse of unfold for the given shape/mode pair.
DenseTensor refold(const CMat& m, const std::vector<Index>& shape, Index mode);

// Same flat buffer, new shape metadata. Element counts must match.
DenseTensor reshape_tensor(const DenseTensor& t, std::vector<Index> new_shape);

// Sum of rank-one terms built from the factor columns.
DenseTensor cpd_reconstruct(const CPDFactors& f);

}  // namespace tbdoa
