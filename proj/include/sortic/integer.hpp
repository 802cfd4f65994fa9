// Exact integer arithmetic for the cone and divisor machinery. Everything
// downstream of facet enumeration must be float-free.

#ifndef SORTIC_INTEGER_HPP
#define SORTIC_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "sortic/errors.hpp"

namespace sortic {

using Integer = boost::multiprecision::cpp_int;
using IntVec = std::vector<Integer>;

inline Integer ivec_dot(const IntVec& a, const IntVec& b) {
    SORTIC_REQUIRE(a.size() == b.size(), "dimension mismatch");
    Integer s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Divides by the content (gcd of entries). The zero vector is left alone; the
// orientation is preserved.
void ivec_make_primitive(IntVec& v);

bool ivec_is_zero(const IntVec& v);

// Rank over Q via fraction-free elimination.
int ivec_rank(std::vector<IntVec> rows);

std::string ivec_to_string(const IntVec& v);  // "(1,0,-2)"

long long to_long_checked(const Integer& x);

} // namespace sortic

#endif
