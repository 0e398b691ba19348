#include "tbdoa/tensor.hpp"

#include <numeric>
#include <stdexcept>

namespace tbdoa {

namespace {

Index checked_total(const std::vector<Index>& shape) {
  if (shape.empty()) throw std::invalid_argument("tensor shape must have at least one mode");
  Index total = 1;
  for (Index d : shape) {
    if (d < 1) throw std::invalid_argument("tensor mode lengths must be >= 1");
    total *= d;
  }
  return total;
}

}  // namespace

DenseTensor::DenseTensor(std::vector<Index> shape) : shape_(std::move(shape)) {
  data_.assign(static_cast<size_t>(checked_total(shape_)), Complex{0.0, 0.0});
}

DenseTensor::DenseTensor(std::vector<Index> shape, std::vector<Complex> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (checked_total(shape_) != static_cast<Index>(data_.size()))
    throw std::invalid_argument("tensor buffer length does not match shape");
}

Index DenseTensor::flat_index(std::initializer_list<Index> idx) const {
  if (static_cast<Index>(idx.size()) != order())
    throw std::invalid_argument("index arity does not match tensor order");
  Index flat = 0;
  size_t m = 0;
  for (Index i : idx) {
    if (i < 0 || i >= shape_[m]) throw std::out_of_range("tensor index out of range");
    flat = flat * shape_[m] + i;
    ++m;
  }
  return flat;
}

double DenseTensor::frobenius_norm() const {
  double acc = 0.0;
  for (const Complex& v : data_) acc += std::norm(v);
  return std::sqrt(acc);
}

CMat khatri_rao(const CMat& a, const CMat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("khatri_rao: column counts differ");
  CMat out(a.rows() * b.rows(), a.cols());
  for (Index l = 0; l < a.cols(); ++l)
    for (Index i = 0; i < a.rows(); ++i)
      out.col(l).segment(i * b.rows(), b.rows()) = a(i, l) * b.col(l);
  return out;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMat unfold(const DenseTensor& t, Index mode) {
  const Index n = t.order();
  if (mode < 1 || mode > n) throw std::invalid_argument("unfold: mode out of range");
  const auto& shape = t.shape();
  const Index m = mode - 1;
  const Index cols = shape[static_cast<size_t>(m)];
  const Index rows = t.size() / cols;
  CMat out(rows, cols);

  // Strides of the flat (last-fastest) layout.
  std::vector<Index> stride(static_cast<size_t>(n), 1);
  for (Index j = n - 2; j >= 0; --j)
    stride[static_cast<size_t>(j)] = stride[static_cast<size_t>(j + 1)] * shape[static_cast<size_t>(j + 1)];

  const auto& buf = t.data();
  for (Index f = 0; f < t.size(); ++f) {
    Index row = 0;
    Index col = 0;
    for (Index j = 0; j < n; ++j) {
      const Index ij = (f / stride[static_cast<size_t>(j)]) % shape[static_cast<size_t>(j)];
      if (j == m)
        col = ij;
      else
        row = row * shape[static_cast<size_t>(j)] + ij;
    }
    out(row, col) = buf[static_cast<size_t>(f)];
  }
  return out;
}

DenseTensor refold(const CMat& mat, const std::vector<Index>& shape, Index mode) {
  DenseTensor t(shape);
  const Index n = t.order();
  if (mode < 1 || mode > n) throw std::invalid_argument("refold: mode out of range");
  const Index m = mode - 1;
  const Index cols = shape[static_cast<size_t>(m)];
  if (mat.cols() != cols || mat.rows() != t.size() / cols)
    throw std::invalid_argument("refold: matrix dimensions do not match shape/mode");

  std::vector<Index> stride(static_cast<size_t>(n), 1);
  for (Index j = n - 2; j >= 0; --j)
    stride[static_cast<size_t>(j)] = stride[static_cast<size_t>(j + 1)] * shape[static_cast<size_t>(j + 1)];

  auto& buf = t.data();
  for (Index f = 0; f < t.size(); ++f) {
    Index row = 0;
    Index col = 0;
    for (Index j = 0; j < n; ++j) {
      const Index ij = (f / stride[static_cast<size_t>(j)]) % shape[static_cast<size_t>(j)];
      if (j == m)
        col = ij;
      else
        row = row * shape[static_cast<size_t>(j)] + ij;
    }
    buf[static_cast<size_t>(f)] = mat(row, col);
  }
  return t;
}

DenseTensor reshape_tensor(const DenseTensor& t, std::vector<Index> new_shape) {
  if (checked_total(new_shape) != t.size())
    throw std::invalid_argument("reshape_tensor: element count mismatch");
  return DenseTensor(std::move(new_shape), t.data());
}

DenseTensor cpd_reconstruct(const CPDFactors& f) {
  if (f.factors.empty()) throw std::invalid_argument("cpd_reconstruct: no factors");
  const Index rank = f.rank();
  std::vector<Index> shape;
  shape.reserve(f.factors.size());
  for (const CMat& a : f.factors) {
    if (a.cols() != rank) throw std::invalid_argument("cpd_reconstruct: factor column counts differ");
    shape.push_back(a.rows());
  }
  const size_t n = f.factors.size();
  if (n == 1) {
    CMat m = f.factors[0] * CMat::Ones(rank, 1);
    return refold(m, shape, 1);
  }
  // Mode-N unfolding is (A1 (.) ... (.) A_{N-1}) * A_N^T; its row-major layout
  // is exactly the flat buffer.
  CMat lead = f.factors[0];
  for (size_t i = 1; i + 1 < n; ++i) lead = khatri_rao(lead, f.factors[i]);
  CMat m = lead * f.factors[n - 1].transpose();
  return refold(m, shape, static_cast<Index>(n));
}

}  // namespace tbdoa
