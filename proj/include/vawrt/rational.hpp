#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vawrt {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rat = mpq_class;

/// Dense exact vector.
using RVec = std::vector<Rat>;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Parses "p", "p/q" or "-p/q". Throws ParseError on anything else.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);
std::string to_string(const RVec& v);
std::string to_decimal(const Rat& r, int digits = 6);

RVec zeros(std::size_t n);
RVec unit(std::size_t n, std::size_t i);

Rat dot(const RVec& a, const RVec& b);
RVec add(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec scale(const RVec& a, const Rat& s);
RVec negate(const RVec& a);
RVec concat(const RVec& a, const RVec& b);
RVec slice(const RVec& a, std::size_t begin, std::size_t count);
bool is_zero(const RVec& a);

/// Smallest positive multiple of `a` with coprime integer entries.
/// The zero vector maps to itself.
RVec primitive(const RVec& a);

/// Like primitive(), but also flips the sign so the first nonzero entry is
/// positive. Returns the applied sign (+1/-1, or 0 for the zero vector).
int primitive_unsigned(RVec& a);

std::strong_ordering lex_compare(const RVec& a, const RVec& b);

struct LexLess {
  bool operator()(const RVec& a, const RVec& b) const { return lex_compare(a, b) < 0; }
};

void sort_unique(std::vector<RVec>& rows);

}  // namespace vawrt
