#pragma once

#include <stdexcept>
#include <string>

#include "splitquat/algebra.hpp"
#include "splitquat/solset.hpp"
#include "splitquat/sqrt.hpp"

namespace splitquat {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"components":[...],"report":[...],"failed_conditions":[...]}, fields in
/// fixed order, numbers with 17 significant digits, non-finite as null.
std::string to_json(const CertifiedSolutionSet& set);
std::string to_json(const SqrtResult& r);
std::string to_json(const SolutionComponent& c);

/// Inverse of to_json; throws FormatError on malformed input.
CertifiedSolutionSet parse_solution_set(const std::string& text);

struct EquationCoefficients {
  SplitQuaternion a, b, c;
};

/// {"a":[s0,s1,s2,s3],"b":[...],"c":[...]}; a missing key is zero.
EquationCoefficients parse_equation(const std::string& text);

}  // namespace splitquat
