#pragma once

#include "sympow/ring.hpp"

namespace sympow {

enum class OrderKind { Lex, GrevLex, Block };

/// Total, multiplicative well-ordering on exponent vectors.
/// Block is an elimination order: grevlex on the first `block` variables,
/// ties broken by grevlex on the rest, so the leading variables dominate.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  int block = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
  static MonomialOrder block_elim(int first_k) {
    return {OrderKind::Block, first_k};
  }

  /// -1 if u < v, 0 if equal, +1 if u > v.
  int compare(const Exponents& u, const Exponents& v) const;

  bool less(const Exponents& u, const Exponents& v) const {
    return compare(u, v) < 0;
  }
  bool greater(const Exponents& u, const Exponents& v) const {
    return compare(u, v) > 0;
  }

  bool operator==(const MonomialOrder&) const = default;
};

}  // namespace sympow
