#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nam {

// Shared error categories. Messages carry enough context to act on
// (offending shapes, file positions, parameter names).
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense row-major tensor of doubles. All model math is rank-2; scalars are
// 1x1 and row vectors 1xn.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int rows, int cols) : shape_{rows, cols}, data_(size_t(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) throw DimensionError("Tensor: negative dimension");
  }
  Tensor(int rows, int cols, std::vector<double> values)
      : shape_{rows, cols}, data_(std::move(values)) {
    if (data_.size() != size_t(rows) * cols)
      throw DimensionError("Tensor: data length " + std::to_string(data_.size()) +
                           " does not match shape " + shape_str(rows, cols));
  }

  static Tensor zeros(int rows, int cols) { return Tensor(rows, cols); }
  static Tensor full(int rows, int cols, double v) {
    Tensor t(rows, cols);
    for (auto& x : t.data_) x = v;
    return t;
  }
  static Tensor scalar(double v) { return Tensor(1, 1, {v}); }
  static Tensor row(std::vector<double> values) {
    int n = int(values.size());
    return Tensor(1, n, std::move(values));
  }

  int rows() const { return shape_[0]; }
  int cols() const { return shape_[1]; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  const std::vector<int>& shape() const { return shape_; }

  double& at(int r, int c) { return data_[size_t(r) * shape_[1] + c]; }
  double at(int r, int c) const { return data_[size_t(r) * shape_[1] + c]; }
  double& operator[](size_t i) { return data_[i]; }
  double operator[](size_t i) const { return data_[i]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  std::string shape_str() const { return shape_str(shape_[0], shape_[1]); }
  static std::string shape_str(int r, int c) {
    return "[" + std::to_string(r) + "x" + std::to_string(c) + "]";
  }

  bool all_finite() const;

 private:
  std::vector<int> shape_{0, 0};
  std::vector<double> data_;
};

inline void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (!a.same_shape(b))
    throw DimensionError(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " +
                         b.shape_str());
}

}  // namespace nam
