#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace galois {

// Exact arithmetic base field Q. mpq_class keeps values canonical
// (reduced, positive denominator), which the equality tests elsewhere
// rely on.
using Rational = mpq_class;
using Integer = mpz_class;

template <class K>
K zero_like(const K& /*model*/) {
    return K(0);
}

template <class K>
K one_like(const K& /*model*/) {
    return K(1);
}

template <class K>
bool is_zero_elem(const K& x) {
    return x == zero_like(x);
}

inline bool is_zero_elem(const Rational& x) { return sgn(x) == 0; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Serializes as "p" or "p/q"; the report format never emits floats.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> parse_rational(const std::string& s);

}  // namespace galois
