#pragma once

#include <cstddef>
#include <vector>

#include "uniserial/rational.hpp"

namespace uniserial {

/// Immutable table of k! for 0 <= k <= bound. Built once, then safe for
/// concurrent reads. Arguments past the bound are computed on demand.
class FactorialTable {
public:
  static constexpr unsigned kDefaultBound = 200;

  explicit FactorialTable(unsigned bound = kDefaultBound);

  unsigned bound() const { return static_cast<unsigned>(table_.size()) - 1; }

  /// Throws PreconditionError for k < 0.
  Integer operator()(long k) const;

private:
  std::vector<Integer> table_;
};

/// k! via the process-wide default table.
Integer factorial(long k);

/// Primes p <= n in increasing order.
std::vector<unsigned> primes_up_to(unsigned n);

/// Writes |n| = s^2 * q with q squarefree. Returns {s, q}; n = 0 gives {0, 1}.
std::pair<Integer, Integer> split_square(const Integer& n);

}  // namespace uniserial
