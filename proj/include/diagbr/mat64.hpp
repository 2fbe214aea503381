#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "diagbr/errors.hpp"
#include "diagbr/int_matrix.hpp"

namespace diagbr {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("int64 addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("int64 subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("int64 multiplication overflow");
  return r;
}

// Small integer matrix with overflow-checked products. Used for cached
// group-element actions, where entries stay tiny.
class Mat64 {
 public:
  Mat64() = default;
  Mat64(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Mat64 identity(std::size_t n);
  static Mat64 from(const IntMatrix& m);  // throws Overflow if an entry does not fit
  IntMatrix to_int_matrix() const;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::int64_t* data() const noexcept { return data_.data(); }

  Mat64 operator*(const Mat64& o) const;  // checked
  bool operator==(const Mat64& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace diagbr
