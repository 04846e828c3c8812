#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braket/term.hpp"
#include "braket/workspace.hpp"

namespace braket {

// The six value kinds a term can denote. A term's kind is fixed by its first
// and last character alone: the last character decides function-ness and
// domain (bra -> H, function ket -> C, vector ket -> none), the first
// character decides scalar- vs vector-valuedness.
enum class ValueKind { ScalarK, VectorK, FunHtoC, FunHtoH, FunCtoC, FunCtoH };

std::string_view kind_name(ValueKind k);
bool is_function_kind(ValueKind k);

// Dense square matrix over Scalar, row-major.
class Matrix {
 public:
  explicit Matrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}
  std::size_t dim() const { return dim_; }
  Scalar& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return e_[i * dim_ + j];
  }
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<Scalar> e_;
};

// Evaluation result. Function kinds are stored extensionally, so linearity
// holds by construction and equality is decidable:
//   FunCtoC s : a |-> s*a        FunCtoH v : a |-> a*v
//   FunHtoC r : y |-> sum r_i y_i  (a covector; a bra <x| stores conj(x))
//   FunHtoH M : y |-> M y
class Value {
 public:
  static Value scalar(Scalar s);
  static Value vector(Vector v);
  static Value covector(Vector entries);
  static Value matrix(Matrix m);
  static Value scalar_fun(Scalar s);
  static Value vector_fun(Vector v);

  ValueKind kind() const { return kind_; }
  bool is_function() const { return is_function_kind(kind_); }

  const Scalar& as_scalar() const;    // ScalarK or FunCtoC
  const Vector& as_vector() const;    // VectorK or FunCtoH
  const Vector& as_covector() const;  // FunHtoC
  const Matrix& as_matrix() const;    // FunHtoH

 private:
  Value(ValueKind k, std::variant<Scalar, Vector, Matrix> payload);
  ValueKind kind_;
  std::variant<Scalar, Vector, Matrix> payload_;
};

using Argument = std::variant<Scalar, Vector>;

// Rules resolving Default ket markings; explicit markings are never touched.
//   FinalVector:   a ket is a vector iff it is the final character.
//   FirstFunction: a ket is a function iff it is the first character and the
//                  last character is a bra.
//   AllFunction:   every ket is a function.
//   Explicit:      no Defaults allowed (throws UnresolvedMarking).
enum class Strategy { FinalVector, FirstFunction, AllFunction, Explicit };

Strategy parse_strategy(std::string_view name);  // "final-vector", ...
std::string_view strategy_name(Strategy st);

Term resolve_markings(const Term& s, Strategy st);
ValueKind infer_kind(const Term& s, Strategy st);

// Recursive evaluation: leaves per the bra/ket base cases, concatenations
// via star(). Throws UnboundLabel, UnresolvedMarking.
Value eval(const Term& s, const Workspace& w, Strategy st);

// The partial operation on values induced by concatenation:
// composition (both functions), application (function, non-function),
// pointwise scaling (non-function, function), product (neither).
// Throws IncompatibleKinds for pairs no alternating concatenation produces.
Value star(const Value& v1, const Value& v2);

// Applies a function value to an argument from its domain.
Value apply(const Value& v, const Argument& a);

// Closed-form evaluation: pairs every bra with the following ket, multiplies
// the paired inner products into c, and returns c, c*<x0|, c*|y0> or
// c*|y0><x0| depending on the first/last characters. Markings are ignored;
// agrees with eval(s, w, Strategy::FinalVector).
Value normal_form(const Term& s, const Workspace& w);

// CLI text form: scalar(..), vector[..], covector[..], operator[[..],..],
// fun C->C(..), fun C->H[..].
std::string render_value(const Value& v);

// Componentwise |a-b| <= max(abs_tol, rel_tol * max(|a|,|b|)).
bool scalar_close(Scalar a, Scalar b, double rel_tol = 1e-9,
                  double abs_tol = 1e-12);
bool value_close(const Value& a, const Value& b, double rel_tol = 1e-9,
                 double abs_tol = 1e-12);

}  // namespace braket
