#pragma once

// Dense exact linear algebra over a field K.  Row vectors act on the right:
// module elements are rows, arrow actions are (dim src) x (dim tgt) matrices.

#include <cassert>
#include <vector>

namespace sl3::pathalg {

template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const K& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<K> row(int i) const {
    return {e_.begin() + static_cast<size_t>(i) * cols_,
            e_.begin() + static_cast<size_t>(i + 1) * cols_};
  }
  void set_row(int i, const std::vector<K>& r) {
    assert(static_cast<int>(r.size()) == cols_);
    std::copy(r.begin(), r.end(), e_.begin() + static_cast<size_t>(i) * cols_);
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    assert(x.cols_ == y.rows_);
    Mat out(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const K& v = x.at(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) out.at(i, j) += v * y.at(k, j);
      }
    return out;
  }
  friend Mat operator+(Mat x, const Mat& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    for (size_t i = 0; i < x.e_.size(); ++i) x.e_[i] += y.e_[i];
    return x;
  }
  friend Mat operator-(Mat x, const Mat& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    for (size_t i = 0; i < x.e_.size(); ++i) x.e_[i] -= y.e_[i];
    return x;
  }
  Mat& operator*=(const K& c) {
    for (K& v : e_) v *= c;
    return *this;
  }

  Mat transposed() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  bool is_zero() const {
    for (const K& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<K> e_;
};

template <class K>
std::vector<K> operator*(const std::vector<K>& v, const Mat<K>& m) {
  assert(static_cast<int>(v.size()) == m.rows());
  std::vector<K> out(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

// reduced row echelon form in place; returns pivot columns
template <class K>
std::vector<int> rref(Mat<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    K inv = K(1) / m.at(r, c);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      K f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank(Mat<K> m) {
  return static_cast<int>(rref(m).size());
}

// basis rows x with m * x^T = 0
template <class K>
Mat<K> null_space(Mat<K> m) {
  const int n = m.cols();
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  Mat<K> out(n - static_cast<int>(pivots.size()), n);
  int row = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    out.at(row, c) = K(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      out.at(row, pivots[pi]) = -m.at(static_cast<int>(pi), c);
    ++row;
  }
  return out;
}

// rows v with v * m = 0
template <class K>
Mat<K> left_null_space(const Mat<K>& m) {
  return null_space(m.transposed());
}

// Row space of a matrix, kept in canonical (RREF) form.  Used for submodule
// components; canonical form makes subspace comparison exact equality.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), rows_(0, ambient) {}

  int ambient() const { return ambient_; }
  int dim() const { return rows_.rows(); }
  const Mat<K>& basis() const { return rows_; }

  // returns true if v was outside the span (and inserts it)
  bool insert(std::vector<K> v) {
    reduce(v);
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!v[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    K inv = K(1) / v[lead];
    for (K& x : v) x *= inv;
    // back-substitute into existing rows, keep rows sorted by pivot
    Mat<K> nr(rows_.rows() + 1, ambient_);
    int at = 0;
    bool placed = false;
    for (int i = 0; i < rows_.rows(); ++i) {
      int p = pivot_of(rows_.row(i));
      if (!placed && lead < p) {
        nr.set_row(at++, v);
        placed = true;
      }
      auto r = rows_.row(i);
      if (!r[lead].is_zero()) {
        K f = r[lead];
        for (int j = 0; j < ambient_; ++j) r[j] -= f * v[j];
      }
      nr.set_row(at++, r);
    }
    if (!placed) nr.set_row(at++, v);
    rows_ = std::move(nr);
    return true;
  }

  void insert_all(const Mat<K>& m) {
    for (int i = 0; i < m.rows(); ++i) insert(m.row(i));
  }

  bool contains(std::vector<K> v) const {
    reduce(v);
    for (const K& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

  // coordinates of v reduced modulo this subspace
  void reduce(std::vector<K>& v) const {
    for (int i = 0; i < rows_.rows(); ++i) {
      int p = pivot_of(rows_.row(i));
      if (p < 0 || v[p].is_zero()) continue;
      K f = v[p];
      for (int j = 0; j < ambient_; ++j) v[j] -= f * rows_.at(i, j);
    }
  }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient_ == y.ambient_ && x.rows_ == y.rows_;
  }

  friend Subspace operator+(Subspace x, const Subspace& y) {
    x.insert_all(y.rows_);
    return x;
  }

  friend Subspace intersect(const Subspace& x, const Subspace& y) {
    // rows (u|v) with u*X + v*Y = 0 give intersection elements u*X
    Subspace out(x.ambient_);
    if (x.dim() == 0 || y.dim() == 0) return out;
    Mat<K> stacked(x.dim() + y.dim(), x.ambient_);
    for (int i = 0; i < x.dim(); ++i) stacked.set_row(i, x.rows_.row(i));
    for (int i = 0; i < y.dim(); ++i) stacked.set_row(x.dim() + i, y.rows_.row(i));
    Mat<K> ker = left_null_space(stacked);
    for (int i = 0; i < ker.rows(); ++i) {
      std::vector<K> u(x.dim());
      for (int j = 0; j < x.dim(); ++j) u[j] = ker.at(i, j);
      out.insert(u * x.rows_);
    }
    return out;
  }

 private:
  int ambient_ = 0;
  Mat<K> rows_;

  static int pivot_of(const std::vector<K>& r) {
    for (size_t j = 0; j < r.size(); ++j)
      if (!r[j].is_zero()) return static_cast<int>(j);
    return -1;
  }
};

}  // namespace sl3::pathalg
