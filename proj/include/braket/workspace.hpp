#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "braket/errors.hpp"

namespace braket {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;

// Identifier: a letter followed by letters, digits or underscores.
class Label {
 public:
  explicit Label(std::string name);  // throws InvalidLabel
  const std::string& str() const { return name_; }
  auto operator<=>(const Label&) const = default;

 private:
  std::string name_;
};

bool is_valid_label(std::string_view name);

// Conjugate-linear in the first slot: sum of conj(x_i) * y_i.
Scalar inner_product(const Vector& x, const Vector& y);

Vector scale(Scalar a, const Vector& v);

// Immutable dimension + label bindings. bind() returns a new workspace;
// rebinding an existing label replaces its vector.
class Workspace {
 public:
  explicit Workspace(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Workspace bind(const Label& label, Vector v) const;
  const Vector& lookup(const Label& label) const;  // throws UnboundLabel
  const Vector* find(const Label& label) const;    // nullptr when absent
  const std::map<Label, Vector>& bindings() const { return bindings_; }

 private:
  std::size_t dim_;
  std::map<Label, Vector> bindings_;
};

// Workspace file format: `dim <n>` first, then `let <label> = [..]` lines.
// `#` starts a comment; blank lines are ignored.
Workspace load_workspace(std::istream& in);
Workspace load_workspace(const std::string& text);
std::string dump_workspace(const Workspace& w);

// One `let <label> = [<scalar>, ...]` line (without dimension checking);
// shared between the file loader and the REPL.
std::pair<Label, Vector> parse_binding(std::string_view line);

// Scalar literals: <re>, <re>+<im>i, <re>-<im>i, <im>i, i, -i.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(Scalar z);
std::string format_vector(const Vector& v);  // [a, b, ...]

}  // namespace braket
