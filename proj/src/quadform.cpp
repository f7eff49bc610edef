#include "exostein/quadform.hpp"

#include <algorithm>
#include <stdexcept>

namespace exostein {

QuadraticForm::QuadraticForm(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (!is_symmetric(gram_)) throw std::invalid_argument("Gram matrix is not symmetric");
  if (!labels_.empty() && static_cast<Index>(labels_.size()) != gram_.rows())
    throw std::invalid_argument("basis labels do not match the rank");
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive:
      return "positive";
    case Definiteness::negative:
      return "negative";
    case Definiteness::indefinite:
      return "indefinite";
    case Definiteness::degenerate:
      return "degenerate";
  }
  return "?";
}

const char* to_string(Isomorphism i) {
  switch (i) {
    case Isomorphism::yes:
      return "yes";
    case Isomorphism::no:
      return "no";
    case Isomorphism::undecided:
      return "undecided";
  }
  return "?";
}

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw std::invalid_argument("parity must be 'even' or 'odd', got '" + text + "'");
}

Definiteness parse_definiteness(const std::string& text) {
  for (auto d : {Definiteness::positive, Definiteness::negative, Definiteness::indefinite,
                 Definiteness::degenerate})
    if (text == to_string(d)) return d;
  throw std::invalid_argument("unknown definiteness '" + text + "'");
}

Parity parity(const QuadraticForm& form) {
  const auto& g = form.gram();
  for (Index i = 0; i < g.rows(); ++i)
    if (g(i, i) % 2 != 0) return Parity::odd;
  return Parity::even;
}

namespace {

Definiteness definiteness_of(const Inertia& in, Index rank) {
  if (in.zero > 0) return Definiteness::degenerate;
  if (in.positive == rank) return Definiteness::positive;
  if (in.negative == rank) return Definiteness::negative;
  return Definiteness::indefinite;
}

IntVector vec2(long a, long b) {
  IntVector v(2);
  v << Integer(a), Integer(b);
  return v;
}

// Columns u with u.u = target, coordinates in the box.
std::vector<IntVector> box_vectors_of_square(const QuadraticForm& form, const Integer& target,
                                             long bound) {
  std::vector<IntVector> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b) {
      IntVector v = vec2(a, b);
      if (pairing(form, v, v) == target) out.push_back(std::move(v));
    }
  return out;
}

Isomorphism search_rank_two(const QuadraticForm& from, const QuadraticForm& to, long bound) {
  const auto& target = to.gram();
  const auto firsts = box_vectors_of_square(from, target(0, 0), bound);
  if (firsts.empty()) return Isomorphism::undecided;
  const auto seconds = box_vectors_of_square(from, target(1, 1), bound);
  for (const auto& u : firsts)
    for (const auto& w : seconds) {
      if (pairing(from, u, w) != target(0, 1)) continue;
      const Integer det = u(0) * w(1) - u(1) * w(0);
      if (det == 1 || det == -1) return Isomorphism::yes;
    }
  return Isomorphism::undecided;
}

}  // namespace

FormClass classify(const QuadraticForm& form) {
  const Inertia in = inertia(form.gram());
  const Integer det = determinant(form.gram());
  FormClass out;
  out.rank = form.rank();
  out.signature = in.signature();
  out.parity = parity(form);
  out.definiteness = definiteness_of(in, form.rank());
  out.unimodular = det == 1 || det == -1;
  return out;
}

Integer pairing(const QuadraticForm& form, const IntVector& u, const IntVector& v) {
  if (u.size() != form.rank() || v.size() != form.rank())
    throw std::invalid_argument("vector length does not match the rank of the form");
  return u.dot(form.gram() * v);
}

Isomorphism is_isomorphic(const QuadraticForm& a, const QuadraticForm& b, long bound) {
  if (a.rank() != b.rank()) return Isomorphism::no;
  if (determinant(a.gram()) != determinant(b.gram())) return Isomorphism::no;
  const Inertia ia = inertia(a.gram());
  if (ia != inertia(b.gram())) return Isomorphism::no;
  if (parity(a) != parity(b)) return Isomorphism::no;
  if (cokernel(a.gram()) != cokernel(b.gram())) return Isomorphism::no;

  if (a.rank() == 0 || a.gram() == b.gram()) return Isomorphism::yes;
  const Integer det = determinant(a.gram());
  const bool unimodular = det == 1 || det == -1;
  if (unimodular && ia.positive > 0 && ia.negative > 0) return Isomorphism::yes;
  if (a.rank() == 1) return Isomorphism::yes;  // equal determinants
  if (a.rank() == 2) return search_rank_two(a, b, bound);
  return Isomorphism::undecided;
}

bool lexicographic_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SquareSolutions solve_square(const QuadraticForm& form, const Integer& c, long bound) {
  if (form.rank() != 2) throw std::invalid_argument("solve_square needs a rank-2 form");
  const auto& g = form.gram();
  SquareSolutions out;

  // Index of an isotropic basis vector pairing nontrivially with the other.
  int isotropic = -1;
  if (c != 0 && g(0, 1) != 0) {
    if (g(0, 0) == 0)
      isotropic = 0;
    else if (g(1, 1) == 0)
      isotropic = 1;
  }

  if (isotropic >= 0) {
    const int other = 1 - isotropic;
    const Integer two_e = 2 * g(0, 1);
    const Integer d = g(other, other);
    const Integer n = abs(c);
    for (Integer t = 1; t * t <= n; ++t) {
      if (n % t != 0) continue;
      std::vector<Integer> divisors{t, -t};
      if (t * t != n) {
        divisors.push_back(n / t);
        divisors.push_back(-(n / t));
      }
      for (const Integer& y : divisors) {
        // y is the coordinate on the non-isotropic vector
        const Integer m = c / y - d * y;
        if (m % two_e != 0) continue;
        IntVector v(2);
        v(isotropic) = m / two_e;
        v(other) = y;
        out.vectors.push_back(std::move(v));
      }
    }
    out.complete = true;
  } else {
    out.vectors = box_vectors_of_square(form, c, bound);
    out.bound = bound;
  }
  std::sort(out.vectors.begin(), out.vectors.end(), lexicographic_less);
  return out;
}

}  // namespace exostein
