#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace bihom {

struct CheckOptions {
  int max_witnesses = 16;
};

/// One failing basis tuple of one axiom: where it failed and both sides.
template <class K>
struct Witness {
  std::vector<int> index;  // basis multi-index, decoded per the axiom's arity
  Vec<K> lhs, rhs;
  Vec<K> residual;  // lhs - rhs, never zero
};

template <class K>
struct AxiomReport {
  std::string axiom_id;
  std::vector<int> input_dims;  // shape of the witness multi-index
  long long total_violations = 0;
  std::vector<Witness<K>> witnesses;  // capped at CheckOptions::max_witnesses
  bool passed() const { return total_violations == 0; }
};

/// Result of a checker run: one entry per axiom id, in evaluation order.
template <class K>
struct ViolationReport {
  std::vector<AxiomReport<K>> axioms;

  bool passed() const {
    for (const auto& a : axioms)
      if (!a.passed()) return false;
    return true;
  }
  long long total_violations() const {
    long long n = 0;
    for (const auto& a : axioms) n += a.total_violations;
    return n;
  }
  const AxiomReport<K>* find(std::string_view id) const {
    for (const auto& a : axioms)
      if (a.axiom_id == id) return &a;
    return nullptr;
  }
  void merge(ViolationReport other) {
    for (auto& a : other.axioms) axioms.push_back(std::move(a));
  }
};

/// Decodes a flat column index into a mixed-radix basis multi-index.
inline std::vector<int> decode_index(int flat, const std::vector<int>& dims) {
  std::vector<int> idx(dims.size(), 0);
  for (int k = int(dims.size()) - 1; k >= 0; --k) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  return idx;
}

/// Records one axiom as an equality of linear maps; every column (= input
/// basis tuple) is compared exactly. Multilinearity makes a pass on all
/// basis tuples a proof over the whole space.
template <class K>
class Checker {
 public:
  Checker(ViolationReport<K>& rep, CheckOptions opt) : rep_(rep), opt_(opt) {}

  void equal(std::string axiom_id, const Mat<K>& lhs, const Mat<K>& rhs,
             std::vector<int> input_dims) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
      throw ShapeError("axiom " + axiom_id + ": side shapes differ (" +
                       lhs.shape_str() + " vs " + rhs.shape_str() + ")");
    int expect = 1;
    for (int d : input_dims) expect *= d;
    if (expect != lhs.cols())
      throw ShapeError("axiom " + axiom_id + ": input dims inconsistent");

    AxiomReport<K> ar;
    ar.axiom_id = std::move(axiom_id);
    ar.input_dims = input_dims;
    for (int c = 0; c < lhs.cols(); ++c) {
      Vec<K> l = lhs.col(c), r = rhs.col(c);
      if (l == r) continue;
      ++ar.total_violations;
      if (int(ar.witnesses.size()) < opt_.max_witnesses) {
        Witness<K> w;
        w.index = decode_index(c, input_dims);
        w.lhs = l;
        w.rhs = r;
        w.residual = l - r;
        ar.witnesses.push_back(std::move(w));
      }
    }
    rep_.axioms.push_back(std::move(ar));
  }

  /// Maps-commute axiom: f g = g f on a single basis leg.
  void commute(const std::string& id, const Mat<K>& f, const Mat<K>& g) {
    equal(id, f * g, g * f, {f.cols()});
  }

  /// Equality of two vectors (0-ary axiom, e.g. alpha(1) = 1).
  void equal_vec(std::string axiom_id, const Vec<K>& lhs, const Vec<K>& rhs) {
    Mat<K> l(int(lhs.size()), 1), r(int(rhs.size()), 1);
    for (size_t i = 0; i < lhs.size(); ++i) l(int(i), 0) = lhs[i];
    for (size_t i = 0; i < rhs.size(); ++i) r(int(i), 0) = rhs[i];
    equal(std::move(axiom_id), l, r, {1});
  }

 private:
  ViolationReport<K>& rep_;
  CheckOptions opt_;
};

}  // namespace bihom
