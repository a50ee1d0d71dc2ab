#include "vawrt/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vawrt {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat r(zn, zd);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

std::string to_string(const RVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string to_decimal(const Rat& r, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << r.get_d();
  return os.str();
}

RVec zeros(std::size_t n) { return RVec(n, Rat(0)); }

RVec unit(std::size_t n, std::size_t i) {
  RVec v = zeros(n);
  v.at(i) = 1;
  return v;
}

Rat dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

RVec add(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw DimensionError("add: size mismatch");
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVec sub(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw DimensionError("sub: size mismatch");
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVec scale(const RVec& a, const Rat& s) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

RVec negate(const RVec& a) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RVec concat(const RVec& a, const RVec& b) {
  RVec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

RVec slice(const RVec& a, std::size_t begin, std::size_t count) {
  if (begin + count > a.size()) throw DimensionError("slice out of range");
  return RVec(a.begin() + static_cast<std::ptrdiff_t>(begin),
              a.begin() + static_cast<std::ptrdiff_t>(begin + count));
}

bool is_zero(const RVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return sgn(x) == 0; });
}

RVec primitive(const RVec& a) {
  if (is_zero(a)) return a;
  mpz_class l = 1;
  for (const Rat& x : a) {
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<mpz_class> ints(a.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class t = a[i].get_num() * (l / a[i].get_den());
    ints[i] = t;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
  }
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

int primitive_unsigned(RVec& a) {
  a = primitive(a);
  for (const Rat& x : a) {
    if (sgn(x) > 0) return 1;
    if (sgn(x) < 0) {
      for (Rat& y : a) y = -y;
      return -1;
    }
  }
  return 0;
}

std::strong_ordering lex_compare(const RVec& a, const RVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

void sort_unique(std::vector<RVec>& rows) {
  std::sort(rows.begin(), rows.end(), LexLess{});
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const RVec& x, const RVec& y) { return lex_compare(x, y) == 0; }),
             rows.end());
}

}  // namespace vawrt
