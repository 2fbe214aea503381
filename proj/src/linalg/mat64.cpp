#include "diagbr/mat64.hpp"

namespace diagbr {

Mat64 Mat64::identity(std::size_t n) {
  Mat64 m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat64 Mat64::from(const IntMatrix& m) {
  Mat64 r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_slong_p()) throw Overflow("matrix entry exceeds int64");
      r(i, j) = m(i, j).get_si();
    }
  return r;
}

IntMatrix Mat64::to_int_matrix() const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = static_cast<long>((*this)(i, j));
  return r;
}

Mat64 Mat64::operator*(const Mat64& o) const {
  if (cols_ != o.rows_) throw InvalidInput("Mat64 product shape mismatch");
  Mat64 r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      const std::int64_t* b = &o.data_[k * o.cols_];
      std::int64_t* out = &r.data_[i * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (b[j] != 0) out[j] = checked_add(out[j], checked_mul(a, b[j]));
    }
  return r;
}

}  // namespace diagbr
