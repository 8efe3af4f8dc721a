#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hyptmp {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q" with q > 0. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);

int sign(const Rat& q);
Rat abs(const Rat& q);

// Exact square root when q is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& q);

// Smallest integer >= q.
Int ceil(const Rat& q);

Rat pow(const Rat& q, unsigned e);

}  // namespace hyptmp
