#include "decreal/number_theory.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "decreal/errors.hpp"

namespace decreal::nt {
namespace {

constexpr unsigned long kTrialLimit = 100000;
constexpr unsigned long kRhoIterations = 4000000;

bool is_probable_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant; returns a nontrivial factor of composite n or 0.
mpz_class rho(const mpz_class& n, unsigned long c) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_class y = 2, x, g = 1, q = 1, ys;
  unsigned long r = 1;
  const unsigned long m = 128;
  unsigned long spent = 0;
  auto step = [&](mpz_class& v) {
    v = (v * v + c) % n;
  };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        step(y);
        mpz_class diff = x - y;
        q = (q * abs(diff)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      spent += m;
    } while (k < r && g == 1);
    r *= 2;
    if (spent > kRhoIterations) return 0;
  } while (g == 1);
  if (g == n) {
    do {
      step(ys);
      mpz_class diff = x - ys;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      g = abs(g);
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

void split_rest(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class s;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    split_rest(s, out);
    split_rest(s, out);
    return;
  }
  for (unsigned long c = 1; c < 20; ++c) {
    mpz_class f = rho(n, c);
    if (f != 0 && f != 1 && f != n) {
      split_rest(f, out);
      split_rest(n / f, out);
      return;
    }
  }
  throw FactorizationLimit("could not factor " + n.get_str());
}

}  // namespace

std::vector<PrimePower> factorize(const mpz_class& n_in) {
  if (n_in < 1) throw std::invalid_argument("factorize expects n >= 1");
  mpz_class n = n_in;
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (n == 1) break;
    if (mpz_class(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++found[mpz_class(p)];
    }
  }
  split_rest(n, found);
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

std::pair<mpz_class, mpz_class> split_two_five(const mpz_class& r) {
  mpz_class t = abs(r);
  mpz_class s = 1;
  if (t == 0) return {0, 0};
  while (mpz_divisible_ui_p(t.get_mpz_t(), 2)) {
    t /= 2;
    s *= 2;
  }
  while (mpz_divisible_ui_p(t.get_mpz_t(), 5)) {
    t /= 5;
    s *= 5;
  }
  return {s, t};
}

std::uint64_t two_five_exponent(const mpz_class& s) {
  std::uint64_t twos = mpz_scan1(s.get_mpz_t(), 0);
  mpz_class rest = s >> twos;
  std::uint64_t fives = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) throw std::invalid_argument("two_five_exponent: factor other than 2 or 5");
  return std::max(twos, fives);
}

mpz_class order_of_ten(const mpz_class& t) {
  if (t < 1) throw std::invalid_argument("order_of_ten expects t >= 1");
  if (t == 1) return 1;
  // ord divides phi(t); strip prime factors of phi while 10^(ord/p) == 1.
  mpz_class phi = 1;
  std::map<mpz_class, unsigned> phi_factors;
  for (const auto& [p, e] : factorize(t)) {
    mpz_class pe1;
    mpz_pow_ui(pe1.get_mpz_t(), p.get_mpz_t(), e - 1);
    phi *= pe1 * (p - 1);
    if (e > 1) phi_factors[p] += e - 1;
    for (const auto& [q, f] : factorize(p - 1)) phi_factors[q] += f;
  }
  mpz_class ord = phi;
  mpz_class ten = 10, acc;
  for (const auto& [q, f] : phi_factors) {
    for (unsigned i = 0; i < f; ++i) {
      mpz_class cand = ord / q;
      mpz_powm(acc.get_mpz_t(), ten.get_mpz_t(), cand.get_mpz_t(), t.get_mpz_t());
      if (acc != 1) break;
      ord = cand;
    }
  }
  return ord;
}

}  // namespace decreal::nt
