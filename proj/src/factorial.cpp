#include "uniserial/factorial.hpp"

#include "uniserial/error.hpp"

namespace uniserial {

FactorialTable::FactorialTable(unsigned bound) : table_(bound + 1) {
  table_[0] = 1;
  for (unsigned k = 1; k <= bound; ++k) table_[k] = table_[k - 1] * k;
}

Integer FactorialTable::operator()(long k) const {
  if (k < 0) throw PreconditionError("factorial of negative number " + std::to_string(k));
  if (static_cast<std::size_t>(k) < table_.size()) return table_[static_cast<std::size_t>(k)];
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long k) {
  static const FactorialTable table;
  return table(k);
}

std::vector<unsigned> primes_up_to(unsigned n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<unsigned> out;
  for (unsigned p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (unsigned long q = static_cast<unsigned long>(p) * p; q <= n; q += p) composite[q] = true;
  }
  return out;
}

std::pair<Integer, Integer> split_square(const Integer& n) {
  if (n == 0) return {Integer(0), Integer(1)};
  static const std::vector<unsigned> small_primes = primes_up_to(1u << 16);

  Integer rest = abs(n);
  Integer square_root = 1;
  Integer squarefree = 1;

  const auto absorb_if_square = [&]() {
    if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      square_root *= r;
      rest = 1;
    }
  };

  absorb_if_square();
  for (unsigned p : small_primes) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) {
      squarefree *= rest;  // what is left is prime
      rest = 1;
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e == 0) continue;
    for (unsigned i = 0; i < e / 2; ++i) square_root *= p;
    if (e % 2) squarefree *= p;
    absorb_if_square();
  }
  // Large cofactor with no small factors: keep dividing by odd candidates.
  for (Integer d = Integer(small_primes.back()) + 2; rest > 1; d += 2) {
    if (d * d > rest) {
      squarefree *= rest;
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), d.get_mpz_t());
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) square_root *= d;
    if (e % 2) squarefree *= d;
    absorb_if_square();
  }
  return {square_root, squarefree};
}

}  // namespace uniserial
