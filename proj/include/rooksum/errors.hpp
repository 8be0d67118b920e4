#pragma once

#include <stdexcept>
#include <string>

namespace rooksum {

/// Input violates a documented precondition (sizes, disjointness, ranges).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a computational cap; rerun with an explicit override.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, int n, int cap)
      : std::runtime_error(what + ": n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                           " (use --unsafe-cap to override)") {}
};

/// The operation needs n! invertible but the field characteristic divides n!.
class ModulusDividesFactorial : public std::domain_error {
 public:
  ModulusDividesFactorial(unsigned long p, int n)
      : std::domain_error("modulus divides n!: p = " + std::to_string(p) + ", n = " + std::to_string(n)) {}
};

inline void check_cap(const std::string& what, int n, int cap, bool unsafe = false) {
  if (!unsafe && n > cap) throw CapExceeded(what, n, cap);
}

}  // namespace rooksum
