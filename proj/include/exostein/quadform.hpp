#pragma once

#include <string>
#include <vector>

#include "exostein/intlin.hpp"
#include "exostein/scalar.hpp"

namespace exostein {

/// Symmetric integral bilinear form, optionally with basis labels.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(IntMatrix gram, std::vector<std::string> labels = {});

  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Index rank() const { return gram_.rows(); }

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.gram_.rows() == b.gram_.rows() && a.gram_ == b.gram_ &&
           a.labels_ == b.labels_;
  }

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

enum class Parity { even, odd };
enum class Definiteness { positive, negative, indefinite, degenerate };
enum class Isomorphism { yes, no, undecided };

const char* to_string(Parity p);
const char* to_string(Definiteness d);
const char* to_string(Isomorphism i);
Parity parse_parity(const std::string& text);
Definiteness parse_definiteness(const std::string& text);

struct FormClass {
  Index rank = 0;
  Index signature = 0;
  Parity parity = Parity::even;
  Definiteness definiteness = Definiteness::positive;
  bool unimodular = true;

  friend bool operator==(const FormClass&, const FormClass&) = default;
};

/// Even iff every diagonal entry is even.
Parity parity(const QuadraticForm& form);

FormClass classify(const QuadraticForm& form);

/// u^T G v.
Integer pairing(const QuadraticForm& form, const IntVector& u, const IntVector& v);

inline constexpr long kDefaultIsoBound = 10;

/// Unimodular indefinite forms are decided by (rank, signature, parity).
/// Other forms of rank <= 2 are searched for a basis change with entries in
/// [-bound, bound]; when nothing is found, and no invariant separates the
/// forms, the answer is undecided.
Isomorphism is_isomorphic(const QuadraticForm& a, const QuadraticForm& b,
                          long bound = kDefaultIsoBound);

struct SquareSolutions {
  std::vector<IntVector> vectors;  // sorted lexicographically
  bool complete = false;           // false: only the box [-bound, bound]^2
  long bound = 0;                  // box used when !complete
};

inline constexpr long kDefaultSquareBound = 100;

/// All v with v.v = c on a rank-2 form.  Exact whenever the basis contains
/// an isotropic vector pairing nontrivially with the other one and c != 0:
/// on Gram [[0, e], [e, d]] the equation factors as b (2 e a + d b) = c, so b
/// ranges over the divisors of c.
SquareSolutions solve_square(const QuadraticForm& form, const Integer& c,
                             long bound = kDefaultSquareBound);

bool lexicographic_less(const IntVector& a, const IntVector& b);

}  // namespace exostein
