#pragma once

#include <functional>
#include <variant>

#include "braket/eval.hpp"
#include "braket/term.hpp"
#include "braket/workspace.hpp"

namespace braket::oracle {

// Brute-force reference semantics, kept deliberately separate from the
// evaluator: leaves become closures (bra: direct conjugate-dot loop; function
// ket: direct scaling loop), concatenation is literal composition,
// application and pointwise scaling. Nothing here touches Value payloads.

enum class Domain { C, H };

using Num = std::variant<Scalar, Vector>;

struct Map {
  Domain dom;
  std::function<Num(const Num&)> fn;
};

class OracleValue {
 public:
  static OracleValue num(Num n) { return OracleValue{std::move(n)}; }
  static OracleValue map(Map m) { return OracleValue{std::move(m)}; }

  bool is_map() const { return std::holds_alternative<Map>(v_); }
  const Num& as_num() const { return std::get<Num>(v_); }
  const Map& as_map() const { return std::get<Map>(v_); }

 private:
  explicit OracleValue(std::variant<Num, Map> v) : v_(std::move(v)) {}
  std::variant<Num, Map> v_;
};

// Requires a fully marked term (throws UnresolvedMarking) with bound labels.
OracleValue oracle_eval(const Term& s, const Workspace& w);

// Expands an oracle value into an extensional Value: numbers directly, maps
// by probing (domain C at 1, domain H at every basis vector).
Value materialize(const OracleValue& v, const Workspace& w);

}  // namespace braket::oracle
