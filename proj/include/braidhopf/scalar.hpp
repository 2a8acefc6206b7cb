#ifndef BRAIDHOPF_SCALAR_HPP
#define BRAIDHOPF_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace braidhopf {

/// Exact rational number in lowest terms with positive denominator.
using Scalar = mpq_class;

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

inline std::string to_string(const Scalar& x) { return x.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);

}  // namespace braidhopf

#endif
