#pragma once

// Algebraic normal form: monomial-set representation, Moebius conversion to
// and from truth tables, and the text grammar used for I/O.
//
// Grammar: terms joined by '+', each term either '1' or 'xI' factors joined
// by '*' ('x1*x2'), 1-based variable indices, whitespace ignored.  Bare
// juxtaposition 'x1x2' is also accepted.

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rooth/gbf.hpp"

namespace rooth {

struct AnfPolynomial {
  int n = 0;
  // monomial = mask over table-index bits (variable x_{j+1} <-> bit n-1-j);
  // 0 is the constant term 1
  std::set<Point> monomials;

  AnfPolynomial() = default;
  AnfPolynomial(int n_, std::set<Point> mono) : n(n_), monomials(std::move(mono)) {
    const Point all = table_size(n) - 1;
    for (Point m : monomials)
      if (m & ~all) throw std::invalid_argument("monomials: variable index outside 1..n");
  }

  int degree() const {
    int d = 0;
    for (Point m : monomials) d = std::max(d, weight(m));
    return d;
  }
  bool operator==(const AnfPolynomial& o) const = default;
};

inline BooleanFunction truth_table_from_anf(const AnfPolynomial& anf) {
  const std::uint32_t size = table_size(anf.n);
  std::vector<std::uint8_t> t(size, 0);
  // zeta transform over the subset lattice: start from the coefficient vector
  std::vector<std::uint8_t> c(size, 0);
  for (Point m : anf.monomials) c[m] = 1;
  for (int b = 0; b < anf.n; ++b) {
    const Point step = Point{1} << b;
    for (Point x = 0; x < size; ++x)
      if (x & step) c[x] ^= c[x ^ step];
  }
  t = std::move(c);
  return BooleanFunction(anf.n, std::move(t));
}

inline AnfPolynomial anf_from_truth_table(const BooleanFunction& f) {
  const std::uint32_t size = table_size(f.n);
  std::vector<std::uint8_t> c = f.table;
  // Moebius inversion is the same butterfly over F_2
  for (int b = 0; b < f.n; ++b) {
    const Point step = Point{1} << b;
    for (Point x = 0; x < size; ++x)
      if (x & step) c[x] ^= c[x ^ step];
  }
  std::set<Point> mono;
  for (Point m = 0; m < size; ++m)
    if (c[m]) mono.insert(m);
  return AnfPolynomial(f.n, std::move(mono));
}

inline int anf_degree(const BooleanFunction& f) { return anf_from_truth_table(f).degree(); }

inline AnfPolynomial parse_anf(const std::string& text, int n) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("anf: empty expression");
  std::set<Point> mono;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("anf: empty term");
    Point mask = 0;
    if (term == "0") {
      // additive identity: contributes nothing
      pos = end + 1;
      if (end == s.size()) break;
      continue;
    }
    std::size_t tp = 0;
    while (tp < term.size()) {
      if (term[tp] == '*') {
        ++tp;
        continue;
      }
      if (term[tp] == '1') {
        ++tp;
        continue;  // factor 1; mask unchanged
      }
      if (term[tp] != 'x')
        throw std::invalid_argument("anf: unexpected character '" + std::string(1, term[tp]) +
                                    "' in term '" + term + "'");
      ++tp;
      std::size_t dp = tp;
      while (dp < term.size() && std::isdigit(static_cast<unsigned char>(term[dp]))) ++dp;
      if (dp == tp) throw std::invalid_argument("anf: missing variable index in '" + term + "'");
      const int idx = std::stoi(term.substr(tp, dp - tp));
      if (idx < 1 || idx > n)
        throw std::invalid_argument("anf: variable x" + std::to_string(idx) +
                                    " outside 1.." + std::to_string(n));
      mask |= Point{1} << (n - idx);
      tp = dp;
    }
    // mod-2 coefficients: repeated monomials cancel
    if (mono.count(mask))
      mono.erase(mask);
    else
      mono.insert(mask);
    if (end == s.size()) break;
    pos = end + 1;
  }
  return AnfPolynomial(n, std::move(mono));
}

inline std::string anf_to_string(const AnfPolynomial& anf) {
  if (anf.monomials.empty()) return "0";
  // order terms by degree, then by lowest variable index
  std::vector<Point> ms(anf.monomials.begin(), anf.monomials.end());
  std::sort(ms.begin(), ms.end(), [&](Point a, Point b) {
    if (weight(a) != weight(b)) return weight(a) < weight(b);
    return a > b;  // higher mask bit = lower variable index first
  });
  std::string out;
  for (Point m : ms) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int j = 0; j < anf.n; ++j)
      if (m & (Point{1} << (anf.n - 1 - j))) {
        if (!first) out += "*";
        out += "x" + std::to_string(j + 1);
        first = false;
      }
  }
  return out;
}

inline BooleanFunction boolean_from_anf_string(const std::string& text, int n) {
  return truth_table_from_anf(parse_anf(text, n));
}

}  // namespace rooth
