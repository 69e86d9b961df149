#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace bihom {

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInvertibleError : std::runtime_error {
  int rank;
  explicit NotInvertibleError(int r)
      : std::runtime_error("matrix is singular (rank " + std::to_string(r) + ")"),
        rank(r) {}
};

template <class K>
using Vec = std::vector<K>;

/// Dense rows x cols matrix over an exact field. Columns are images of basis
/// vectors, so composition of linear maps is plain matrix product.
template <class K>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, K(0)) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix shape");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  K& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  K& at(int i, int j) {
    check_index(i, j);
    return (*this)(i, j);
  }
  const K& at(int i, int j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.check_same_shape(b, "+");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    a.check_same_shape(b, "-");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend Mat operator*(const K& s, const Mat& a) {
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = s * a.e_[i];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("matrix product shape mismatch: " + a.shape_str() + " * " + b.shape_str());
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik == K(0)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  bool is_zero() const {
    for (const K& x : e_)
      if (!(x == K(0))) return false;
    return true;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Vec<K> apply(const Vec<K>& v) const {
    if (int(v.size()) != cols_)
      throw ShapeError("apply: vector length " + std::to_string(v.size()) +
                       " vs cols " + std::to_string(cols_));
    Vec<K> r(rows_, K(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(v[j] == K(0))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Vec<K> col(int j) const {
    Vec<K> r(rows_);
    for (int i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw ShapeError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of bounds for " + shape_str());
  }
  void check_same_shape(const Mat& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError(std::string("matrix ") + op + " shape mismatch: " +
                       shape_str() + " vs " + o.shape_str());
  }

  int rows_, cols_;
  std::vector<K> e_;
};

/// Kronecker product, encoding f tensor g on the row-major tensor basis
/// e_i tensor e_j  <->  index i*dim2 + j.
template <class K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
  Mat<K> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const K& s = a(ia, ja);
      if (s == K(0)) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          r(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
    }
  return r;
}

/// Flip map tau: X tensor Y -> Y tensor X on the row-major tensor basis.
template <class K>
Mat<K> flip(int dx, int dy) {
  Mat<K> r(dx * dy, dx * dy);
  for (int i = 0; i < dx; ++i)
    for (int j = 0; j < dy; ++j) r(j * dx + i, i * dy + j) = K(1);
  return r;
}

template <class K>
Mat<K> flip(int d) {
  return flip<K>(d, d);
}

/// Exact Gauss-Jordan inverse. Throws NotInvertibleError carrying the rank.
template <class K>
Mat<K> invert(const Mat<K>& m) {
  if (!m.is_square()) throw ShapeError("invert: matrix not square");
  const int n = m.rows();
  Mat<K> a = m, inv = Mat<K>::identity(n);
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (!(a(i, col) == K(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(rank, j));
        std::swap(inv(pivot, j), inv(rank, j));
      }
    K p = a(rank, col);
    for (int j = 0; j < n; ++j) {
      a(rank, j) = a(rank, j) / p;
      inv(rank, j) = inv(rank, j) / p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == rank) continue;
      K f = a(i, col);
      if (f == K(0)) continue;
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(rank, j);
        inv(i, j) -= f * inv(rank, j);
      }
    }
    ++rank;
  }
  if (rank != n) throw NotInvertibleError(rank);
  return inv;
}

/// Dense 3-index array of structure constants.
///
/// Index conventions are global and fixed:
///   product   mu(k,i,j)    = coefficient of e_k in e_i . e_j
///   coproduct delta(k,i,j) = coefficient of e_i tensor e_j in Delta(e_k)
///   left act  lft(k,a,m)   = coefficient of f_k in e_a |> f_m
///   right act rgt(k,m,a)   = coefficient of f_k in f_m <| e_a
///   coaction  rho(k,c,m)   = coefficient of e_c tensor f_m in rho(f_k)
///   coaction  phi(k,m,c)   = coefficient of f_m tensor e_c in phi(f_k)
/// i.e. index 0 is always the "single" leg (output of a product-like map,
/// input of a coproduct-like map) and indices 1,2 the pair legs.
template <class K>
class Tensor3 {
 public:
  Tensor3() : d1_(0), d2_(0), d3_(0) {}
  Tensor3(int d1, int d2, int d3)
      : d1_(d1), d2_(d2), d3_(d3), e_(size_t(d1) * d2 * d3, K(0)) {
    if (d1 < 0 || d2 < 0 || d3 < 0) throw ShapeError("negative tensor shape");
  }

  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  int dim3() const { return d3_; }

  K& operator()(int a, int b, int c) { return e_[(size_t(a) * d2_ + b) * d3_ + c]; }
  const K& operator()(int a, int b, int c) const {
    return e_[(size_t(a) * d2_ + b) * d3_ + c];
  }
  K& at(int a, int b, int c) {
    check_index(a, b, c);
    return (*this)(a, b, c);
  }
  const K& at(int a, int b, int c) const {
    check_index(a, b, c);
    return (*this)(a, b, c);
  }

  friend bool operator==(const Tensor3& x, const Tensor3& y) {
    return x.d1_ == y.d1_ && x.d2_ == y.d2_ && x.d3_ == y.d3_ && x.e_ == y.e_;
  }
  friend bool operator!=(const Tensor3& x, const Tensor3& y) { return !(x == y); }

  /// Product-like view: matrix (d1) x (d2*d3), pair legs as input.
  Mat<K> as_product_map() const {
    Mat<K> m(d1_, d2_ * d3_);
    for (int a = 0; a < d1_; ++a)
      for (int b = 0; b < d2_; ++b)
        for (int c = 0; c < d3_; ++c) m(a, b * d3_ + c) = (*this)(a, b, c);
    return m;
  }

  /// Coproduct-like view: matrix (d2*d3) x (d1), pair legs as output.
  Mat<K> as_coproduct_map() const {
    Mat<K> m(d2_ * d3_, d1_);
    for (int a = 0; a < d1_; ++a)
      for (int b = 0; b < d2_; ++b)
        for (int c = 0; c < d3_; ++c) m(b * d3_ + c, a) = (*this)(a, b, c);
    return m;
  }

  static Tensor3 from_product_map(const Mat<K>& m, int d2, int d3) {
    if (m.cols() != d2 * d3) throw ShapeError("from_product_map: shape mismatch");
    Tensor3 t(m.rows(), d2, d3);
    for (int a = 0; a < m.rows(); ++a)
      for (int b = 0; b < d2; ++b)
        for (int c = 0; c < d3; ++c) t(a, b, c) = m(a, b * d3 + c);
    return t;
  }

  static Tensor3 from_coproduct_map(const Mat<K>& m, int d2, int d3) {
    if (m.rows() != d2 * d3) throw ShapeError("from_coproduct_map: shape mismatch");
    Tensor3 t(m.cols(), d2, d3);
    for (int a = 0; a < m.cols(); ++a)
      for (int b = 0; b < d2; ++b)
        for (int c = 0; c < d3; ++c) t(a, b, c) = m(b * d3 + c, a);
    return t;
  }

 private:
  void check_index(int a, int b, int c) const {
    if (a < 0 || a >= d1_ || b < 0 || b >= d2_ || c < 0 || c >= d3_)
      throw ShapeError("tensor index out of bounds");
  }

  int d1_, d2_, d3_;
  std::vector<K> e_;
};

template <class K>
Vec<K> basis_vec(int dim, int i) {
  Vec<K> v(dim, K(0));
  v[i] = K(1);
  return v;
}

template <class K>
Vec<K> operator+(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw ShapeError("vector + shape mismatch");
  Vec<K> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class K>
Vec<K> operator-(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw ShapeError("vector - shape mismatch");
  Vec<K> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class K>
Vec<K> operator*(const K& s, const Vec<K>& a) {
  Vec<K> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

template <class K>
bool is_zero(const Vec<K>& v) {
  for (const K& x : v)
    if (!(x == K(0))) return false;
  return true;
}

/// Row-major tensor product of vectors.
template <class K>
Vec<K> tensor_prod(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> r(a.size() * b.size(), K(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == K(0)) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

template <class K>
Vec<K> tensor_prod(const Vec<K>& a, const Vec<K>& b, const Vec<K>& c) {
  return tensor_prod(tensor_prod(a, b), c);
}

}  // namespace bihom
