#include "riset/mbound.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "riset/graph.hpp"

namespace riset {
namespace {

// Largest exponent worth materializing: 2^22 bits is a ~4 Mbit number.
constexpr unsigned long kMaxExponent = 1ul << 22;

unsigned long checked_exponent(const mpz_class& e) {
    if (!e.fits_ulong_p() || e.get_ui() > kMaxExponent)
        throw cap_exceeded("threshold exponent too large to materialize");
    return e.get_ui();
}

mpz_class pow_mpz(const mpz_class& base, const mpz_class& exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), checked_exponent(exp));
    return out;
}

struct Evaluator {
    int d, r;
    std::map<std::pair<int, int>, mpz_class> memo;  // key (n, p)

    mpz_class eval(int n, int p) {
        if (n == 1) return 1;
        if (p == 0) return mpz_class(d) * (n - 1) + 1;
        auto key = std::make_pair(n, p);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int q = d - p;
        mpz_class cells = pow_mpz(r + 2, q);            // (r+2)^q
        mpz_class cells_sq = pow_mpz(r + 2, 2 * q);      // (r+2)^(2q)
        mpz_class m2_a = eval(n - 1, p) + n;
        mpz_class m2_b = eval(n, p - 1);
        mpz_class m2 = m2_a > m2_b ? m2_a : m2_b;
        mpz_class patterns = pow_mpz(n + 1, mpz_class(n - 1) * cells_sq);
        mpz_class m1 = m2 * (patterns - 1) + mpz_class(n - 1) * cells + 1;
        mpz_class m = pow_mpz(2, cells) * (m1 - 1) + 1;
        memo.emplace(key, m);
        return m;
    }
};

}  // namespace

mpz_class m_bound_mpz(int d, int n, int p, int r) {
    if (d < 1 || r < 1) throw std::invalid_argument("d and r must be positive");
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (p < 0 || p > d - 1) throw std::invalid_argument("p must satisfy 0 <= p <= d-1");
    Evaluator ev{d, r, {}};
    return ev.eval(n, p);
}

std::string m_bound(int d, int n, int p, int r) {
    return m_bound_mpz(d, n, p, r).get_str();
}

}  // namespace riset
