#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "braket/workspace.hpp"

namespace braket {

// How a ket occurrence is read: as the vector itself, or as the map a -> a*v.
// Default is resolved by a Strategy before evaluation.
enum class Marking { Default, VectorKet, FunctionKet };

struct Bra {
  Label label;
};

struct Ket {
  Label label;
  Marking marking = Marking::Default;
};

using DiracChar = std::variant<Bra, Ket>;

bool is_ket(const DiracChar& c);
const Label& label_of(const DiracChar& c);

// Concrete text of a single character: "<x|", "|y>", "|y:v>", "|y:f>".
std::string char_text(const DiracChar& c);

// An alternating sequence of bras and kets with an explicit concatenation
// tree. Construction enforces alternation; terms are immutable and share
// structure freely.
class Term {
 public:
  static Term leaf(DiracChar c);
  // Throws AlternationViolation naming the two offending adjacent characters.
  static Term concat(const Term& s1, const Term& s2);

  std::size_t size() const;
  bool is_leaf() const;
  const DiracChar& as_leaf() const;  // requires is_leaf()
  Term left() const;                 // requires !is_leaf()
  Term right() const;

  const DiracChar& first_char() const;
  const DiracChar& last_char() const;

  // Structural equality: same tree shape, labels and markings.
  bool operator==(const Term& other) const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  explicit Term(NodePtr node) : node_(std::move(node)) {}
  NodePtr node_;
};

// Left-to-right character sequence of the whole tree.
std::vector<DiracChar> characters(const Term& s);

// Replaces the marking of the ket at `position` (an index into
// characters(s)); throws NotAKet for a bra position, OutOfRange otherwise.
Term remark(const Term& s, std::size_t position, Marking m);

// Every binary concatenation tree over `chars`: Catalan(n-1) distinct trees.
// Throws CapExceeded when chars.size() > cap, AlternationViolation when the
// input sequence does not alternate.
std::vector<Term> all_parenthesizations(const std::vector<DiracChar>& chars,
                                        std::size_t cap = 8);

}  // namespace braket
