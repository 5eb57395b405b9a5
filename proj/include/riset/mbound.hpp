#pragma once

#include <gmpxx.h>

#include <string>

namespace riset {

// Family-size threshold recurrence. With q = d - p:
//   M(d, 1, p, r) = 1
//   M(d, n, 0, r) = d(n-1) + 1
//   M2 = max(M(d, n-1, p, r) + n, M(d, n, p-1, r))
//   M1 = M2 * ((n+1)^((n-1)(r+2)^(2q)) - 1) + (n-1)(r+2)^q + 1
//   M  = 2^((r+2)^q) * (M1 - 1) + 1
// Requires d, r >= 1, n >= 1, 0 <= p <= d-1. Values grow doubly
// exponentially; exponents above an internal bit cap raise cap_exceeded
// instead of attempting to materialize the number.
mpz_class m_bound_mpz(int d, int n, int p, int r);

// Decimal digits of m_bound_mpz.
std::string m_bound(int d, int n, int p, int r);

}  // namespace riset
