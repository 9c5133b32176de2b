#pragma once

// Exact scalar and vector types shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace blowup {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;  // row-major

IntVector int_vector(std::initializer_list<long long> entries);
IntVector unit_vector(std::size_t dim, std::size_t index);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, const Integer& factor);
// factor_a * a + factor_b * b
IntVector combine(const Integer& factor_a, const IntVector& a, const Integer& factor_b,
                  const IntVector& b);

bool is_zero(const IntVector& v);
bool is_nonnegative(const IntVector& v);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector

// Divides by the content. The zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

// Clears denominators and divides by the content; sign is preserved.
IntVector primitive_from_rational(const RationalVector& v);

RationalVector to_rational(const IntVector& v);
bool is_integral(const RationalVector& v);
IntVector to_integer(const RationalVector& v);  // requires is_integral(v)

// Total lexicographic order used for every canonical listing.
std::strong_ordering lex_compare(const IntVector& a, const IntVector& b);
std::strong_ordering lex_compare(const RationalVector& a, const RationalVector& b);

struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_compare(a, b) < 0; }
  bool operator()(const RationalVector& a, const RationalVector& b) const {
    return lex_compare(a, b) < 0;
  }
};

void sort_unique(std::vector<IntVector>& vs);

std::string to_string(const IntVector& v);       // "(1, 0, 2)"
std::string to_string(const RationalVector& v);  // "(1/2, 0, 1)"
std::string to_string(const Rational& q);

// Exact Gaussian elimination. Returns the rank of the row set.
std::size_t rank(const std::vector<IntVector>& rows);

// Solves M x = b for square M; nullopt when M is singular.
std::optional<RationalVector> solve_square(std::vector<RationalVector> m, RationalVector b);

// nullopt when singular.
std::optional<std::vector<RationalVector>> inverse(const std::vector<RationalVector>& m);

}  // namespace blowup
