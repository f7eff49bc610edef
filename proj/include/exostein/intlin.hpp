#pragma once

// Exact integer and rational matrix algebra.
//
// Everything here is a free function templated on the Eigen expression type,
// so it works for any exact scalar with a FieldOf specialization.  No
// floating point is used anywhere.

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "exostein/errors.hpp"
#include "exostein/scalar.hpp"

namespace exostein {

using Eigen::Index;

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

/// Fraction-free (Bareiss) determinant.  The 0x0 determinant is 1.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const Index n = a.rows();
  if (n == 0) return Scalar(1);

  Matrix<Scalar> m = a;
  Scalar sign(1);
  Scalar previous(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return Scalar(0);
      m.row(k).swap(m.row(swap_row));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... >= 0.
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> left;      // U
  Matrix<Scalar> diagonal;  // D
  Matrix<Scalar> right;     // V

  Index rank() const {
    Index r = 0;
    const Index k = std::min(diagonal.rows(), diagonal.cols());
    while (r < k && diagonal(r, r) != 0) ++r;
    return r;
  }

  /// Nonzero diagonal entries in order.
  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    for (Index i = 0; i < rank(); ++i) out.push_back(diagonal(i, i));
    return out;
  }
};

/// Smith normal form by row/column elimination, always pivoting on the
/// entry of smallest nonzero absolute value in the remaining block.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Matrix<Scalar> d = a;
  Matrix<Scalar> u = Matrix<Scalar>::Identity(rows, rows);
  Matrix<Scalar> v = Matrix<Scalar>::Identity(cols, cols);

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    for (;;) {
      Index pi = -1;
      Index pj = -1;
      Scalar best(0);
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          using std::abs;
          Scalar size = abs(d(i, j));
          if (pi < 0 || size < best) {
            best = size;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) return {std::move(u), std::move(d), std::move(v)};

      if (pi != t) {
        d.row(t).swap(d.row(pi));
        u.row(t).swap(u.row(pi));
      }
      if (pj != t) {
        d.col(t).swap(d.col(pj));
        v.col(t).swap(v.col(pj));
      }

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Scalar q = d(i, t) / d(t, t);
        d.row(i) -= q * d.row(t);
        u.row(i) -= q * u.row(t);
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Scalar q = d(t, j) / d(t, t);
        d.col(j) -= q * d.col(t);
        v.col(j) -= q * v.col(t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      Index offending = -1;
      for (Index i = t + 1; i < rows && offending < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
      if (offending < 0) break;
      d.row(t) += d.row(offending);
      u.row(t) += u.row(offending);
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... + Z/tk, t_i > 1.
template <typename Scalar>
struct AbelianGroup {
  Index free_rank = 0;
  std::vector<Scalar> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of A : Z^cols -> Z^rows, i.e. the group presented by the
/// columns of A as relators.
template <typename Derived>
AbelianGroup<typename Derived::Scalar> cokernel(
    const Eigen::MatrixBase<Derived>& a) {
  const auto snf = smith_normal_form(a);
  AbelianGroup<typename Derived::Scalar> group;
  group.free_rank = a.rows() - snf.rank();
  for (const auto& factor : snf.invariant_factors())
    if (factor != 1) group.torsion.push_back(factor);
  return group;
}

struct Inertia {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;

  Index signature() const { return positive - negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by symmetric congruence diagonalization over the
/// rationals.  When no diagonal pivot is left but an off-diagonal entry
/// a_ij is nonzero, e_i <- e_i + e_j produces the pivot 2 a_ij.
template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& a) {
  using Field = FieldOfT<typename Derived::Scalar>;
  if (!is_symmetric(a))
    throw std::invalid_argument("signature of a non-symmetric matrix");
  const Index n = a.rows();
  Matrix<Field> m = a.template cast<Field>();
  Inertia result;

  auto symmetric_swap = [&m](Index i, Index j) {
    if (i == j) return;
    m.row(i).swap(m.row(j));
    m.col(i).swap(m.col(j));
  };

  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    while (pivot < n && m(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      Index pi = -1;
      Index pj = -1;
      for (Index i = k; i < n && pi < 0; ++i)
        for (Index j = i + 1; j < n; ++j)
          if (m(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) {
        result.zero += n - k;
        break;
      }
      m.row(pi) += m.row(pj);
      m.col(pi) += m.col(pj);
      pivot = pi;
    }
    symmetric_swap(k, pivot);

    const Field p = m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Field f = m(i, k) / p;
      m.row(i) -= f * m.row(k);
      m.col(i) -= f * m.col(k);
    }
    if (p > 0)
      ++result.positive;
    else
      ++result.negative;
  }
  return result;
}

template <typename Derived>
Index signature(const Eigen::MatrixBase<Derived>& a) {
  return inertia(a).signature();
}

/// Exact solution of A x = b.  Throws DegenerateFormError when A is singular.
template <typename DerivedA, typename DerivedB>
Vector<FieldOfT<typename DerivedA::Scalar>> rational_solve(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Field = FieldOfT<typename DerivedA::Scalar>;
  if (a.rows() != a.cols())
    throw std::invalid_argument("rational_solve needs a square matrix");
  if (b.size() != a.rows())
    throw std::invalid_argument("rational_solve: right-hand side has wrong length");
  const Index n = a.rows();
  Matrix<Field> m(n, n + 1);
  m.leftCols(n) = a.template cast<Field>();
  m.col(n) = b.template cast<Field>();

  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) throw DegenerateFormError();
    if (pivot != k) m.row(k).swap(m.row(pivot));
    m.row(k) /= Field(m(k, k));
    for (Index i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Field f = m(i, k);
      m.row(i) -= f * m.row(k);
    }
  }
  return m.col(n);
}

/// B^T F B.  B must be unimodular (det = +-1); throws BasisChangeError.
template <typename DerivedF, typename DerivedB>
Matrix<typename DerivedF::Scalar> congruence_transform(
    const Eigen::MatrixBase<DerivedF>& form,
    const Eigen::MatrixBase<DerivedB>& basis) {
  using Scalar = typename DerivedF::Scalar;
  if (!is_symmetric(form))
    throw std::invalid_argument("congruence_transform: form is not symmetric");
  if (basis.rows() != form.rows() || basis.cols() != form.cols())
    throw std::invalid_argument("congruence_transform: basis has wrong shape");
  const Scalar det = determinant(basis);
  if (det != 1 && det != -1) throw BasisChangeError();
  Matrix<Scalar> b = basis;
  return b.transpose() * form * b;
}

}  // namespace exostein
