#pragma once

#include <stdexcept>
#include <string>

namespace exostein {

/// Linking or presentation matrix is singular over the rationals.
class DegenerateFormError : public std::domain_error {
 public:
  DegenerateFormError() : std::domain_error("degenerate linking form") {}
};

/// A proposed change of basis is not invertible over the integers.
class BasisChangeError : public std::invalid_argument {
 public:
  BasisChangeError() : std::invalid_argument("not a lattice basis change") {}
};

/// Stein checks were requested on a presentation without tb data.
class LegendrianDataError : public std::invalid_argument {
 public:
  LegendrianDataError() : std::invalid_argument("Legendrian data required") {}
};

/// Adjunction bounds only make sense for nonzero classes.
class InessentialClassError : public std::invalid_argument {
 public:
  InessentialClassError()
      : std::invalid_argument(
            "adjunction requires a homologically essential class") {}
};

class NotSteinError : public std::invalid_argument {
 public:
  explicit NotSteinError(const std::string& name)
      : std::invalid_argument("adjunction inequality needs a Stein structure on " +
                              name) {}
};

}  // namespace exostein
