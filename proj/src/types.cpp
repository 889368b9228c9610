#include "sympow/types.hpp"

#include <stdexcept>

namespace sympow {

std::uint64_t binomial64(long n, long k) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  if (k < 0 || k > n) return 0;
  Int b = int_binomial(n, k);
  if (!b.fits_ulong_p())
    throw std::overflow_error("binomial does not fit in 64 bits");
  return b.get_ui();
}

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace sympow
