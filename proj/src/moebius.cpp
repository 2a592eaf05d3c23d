// SPDX-License-Identifier: Apache-2.0
#include "heiscf/moebius.hpp"

#include <vector>

namespace heiscf {

UMatrix UMatrix::identity() {
  UMatrix m;
  for (int k = 0; k < 3; ++k) m(k, k) = GaussInt(1);
  return m;
}

UMatrix operator*(const UMatrix& a, const UMatrix& b) {
  UMatrix m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      GaussInt s;
      for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
      m(r, c) = std::move(s);
    }
  }
  return m;
}

UMatrix matrix_J() {
  UMatrix m;
  m(0, 2) = GaussInt(-1);
  m(1, 1) = GaussInt(1);
  m(2, 0) = GaussInt(-1);
  return m;
}

UMatrix translation_matrix(const IntegerPoint& g) {
  UMatrix m = UMatrix::identity();
  m(1, 0) = g.u();
  m(2, 0) = g.v();
  m(2, 1) = conj(g.u());
  return m;
}

UMatrix translation_matrix(const SiegelPoint<ExactBackend>& h) { return translation_matrix(to_integer_point(h)); }

UMatrix digit_matrix(const IntegerPoint& g) { return matrix_J() * translation_matrix(g); }

UMatrix dagger(const UMatrix& m) {
  UMatrix d;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) d(r, c) = conj(m(c, r));
  }
  return d;
}

bool u21_check(const UMatrix& m) {
  const UMatrix j = matrix_J();
  return j * dagger(m) * j * m == UMatrix::identity();
}

UMatrix u21_inverse(const UMatrix& m) {
  if (!u21_check(m)) throw std::invalid_argument("not in U(2,1;Z[i])");
  const UMatrix j = matrix_J();
  return j * dagger(m) * j;
}

IntTriple apply(const UMatrix& m, const IntTriple& t) {
  const GaussInt x[3] = {t.q, t.r, t.p};
  GaussInt y[3];
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) y[r] += m(r, k) * x[k];
  }
  return {y[0], y[1], y[2]};
}

ProjIntPoint apply(const UMatrix& m, const ProjIntPoint& p) {
  const IntTriple t = apply(m, p.triple());
  if (t.q.is_zero()) throw std::domain_error("image at infinity");
  return ProjIntPoint(t);
}

std::string to_string(const UMatrix& m) {
  std::string out = "[";
  for (int r = 0; r < 3; ++r) {
    out += r == 0 ? "[" : ",[";
    for (int c = 0; c < 3; ++c) {
      if (c > 0) out += ",";
      out += to_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

UMatrix parse_umatrix(std::string_view text) {
  std::vector<GaussInt> entries;
  std::string token;
  int depth = 0;
  auto flush = [&] {
    if (!token.empty()) entries.push_back(parse_gauss_int(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == '[') {
      ++depth;
    } else if (ch == ']') {
      flush();
      --depth;
    } else if (ch == ',') {
      flush();
    } else {
      if (depth != 2) throw std::invalid_argument("malformed matrix");
      token += ch;
    }
    if (depth < 0 || depth > 2) throw std::invalid_argument("malformed matrix");
  }
  if (depth != 0 || entries.size() != 9) throw std::invalid_argument("matrix needs 9 entries");
  std::array<GaussInt, 9> e;
  for (std::size_t k = 0; k < 9; ++k) e[k] = entries[k];
  return UMatrix(e);
}

}  // namespace heiscf
