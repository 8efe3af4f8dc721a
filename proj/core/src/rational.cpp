#include "hyptmp/rational.hpp"

#include <stdexcept>

namespace hyptmp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Int p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(neg ? Int(-p) : p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& q) { return q.get_str(); }

int sign(const Rat& q) { return sgn(q); }

Rat abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  const Int& p = q.get_num();
  const Int& d = q.get_den();
  if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  return Rat(sqrt(p), sqrt(d));
}

Int ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rat pow(const Rat& q, unsigned e) {
  Rat r(1), b(q);
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

}  // namespace hyptmp
