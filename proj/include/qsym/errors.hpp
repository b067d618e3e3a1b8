#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

// Reduced denominator vanishes at z = 1; the requested limit does not exist.
struct PoleAtOne : std::runtime_error {
  explicit PoleAtOne(const std::string& what) : std::runtime_error(what) {}
};

// A denominator factor evaluated to zero after ledger cancellation; the
// caller should retry in the deformation field.
struct UncancelledPole : std::runtime_error {
  explicit UncancelledPole(const std::string& what) : std::runtime_error(what) {}
};

// Exact division by zero in scalar arithmetic.
struct ZeroDivide : std::runtime_error {
  explicit ZeroDivide(const std::string& what) : std::runtime_error(what) {}
};

// Operation requires operands in a specific basis.
struct BasisMismatch : std::logic_error {
  explicit BasisMismatch(const std::string& what) : std::logic_error(what) {}
};

// Degree exceeds the configured transition-table maximum.
struct DegreeTooLarge : std::runtime_error {
  explicit DegreeTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Gram matrix restricted to dominated monomials is singular at this (q,t).
struct SingularGram : std::runtime_error {
  explicit SingularGram(const std::string& what) : std::runtime_error(what) {}
};

// A hypergeometric coefficient denominator vanished; carries the offending index.
struct ZeroDenominator : std::runtime_error {
  int index;
  ZeroDenominator(const std::string& what, int n) : std::runtime_error(what), index(n) {}
};

}  // namespace qsym
