#pragma once

// Independent model of the free 3-step nilpotent group: the truncated tensor
// algebra T(R^2) / (degree >= 4), with group elements exp(A) of Lie elements A.
// Products are computed as log(exp(A) exp(B)) by the power series, with no use
// of the closed BCH formula or the library's structure constants.

#include <map>
#include <string>

#include "coarselen/lie.hpp"

namespace oracle {

using coarselen::AlgebraVector;
using coarselen::Rational;

/// Noncommutative polynomial in X, Y truncated above degree 3; keys are words.
struct Tensor {
  std::map<std::string, Rational> coef;

  Rational at(const std::string& w) const {
    auto it = coef.find(w);
    return it == coef.end() ? Rational(0) : it->second;
  }
  void add(const std::string& w, const Rational& v) {
    if (w.size() > 3) return;
    Rational& slot = coef[w];
    slot = slot + v;
  }
};

inline Tensor operator+(const Tensor& a, const Tensor& b) {
  Tensor out = a;
  for (const auto& [w, v] : b.coef) out.add(w, v);
  return out;
}

inline Tensor scale(const Rational& k, const Tensor& a) {
  Tensor out;
  for (const auto& [w, v] : a.coef) out.add(w, k * v);
  return out;
}

inline Tensor operator*(const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [wa, va] : a.coef)
    for (const auto& [wb, vb] : b.coef) out.add(wa + wb, va * vb);
  return out;
}

inline Tensor commutator(const Tensor& a, const Tensor& b) { return a * b + scale(-1, b * a); }

inline Tensor letter(const std::string& w) {
  Tensor t;
  t.add(w, 1);
  return t;
}

/// Lie element c1 X + c2 Y + c3 [X,Y]/2 + c4 [X,[X,Y]]/12 + c5 [Y,[Y,X]]/12.
inline Tensor embed(const AlgebraVector<Rational>& a) {
  const Tensor x = letter("X"), y = letter("Y");
  const Tensor xy = commutator(x, y);
  return scale(a[0], x) + scale(a[1], y) + scale(a[2] / 2, xy) + scale(a[3] / 12, commutator(x, xy)) +
         scale(a[4] / 12, commutator(y, commutator(y, x)));
}

/// Inverse of embed on Lie elements: reads X, Y, XY, XXY, YYX coefficients.
inline AlgebraVector<Rational> read(const Tensor& t) {
  return {t.at("X"), t.at("Y"), t.at("XY") * 2, t.at("XXY") * 12, t.at("YYX") * 12};
}

/// exp(a) for a without constant term.
inline Tensor exp(const Tensor& a) {
  const Tensor a2 = a * a;
  return letter("") + a + scale(Rational(1, 2), a2) + scale(Rational(1, 6), a2 * a);
}

/// log(g) for g with constant term 1.
inline Tensor log(const Tensor& g) {
  Tensor z = g;
  z.coef.erase("");
  const Tensor z2 = z * z;
  return z + scale(Rational(-1, 2), z2) + scale(Rational(1, 3), z2 * z);
}

inline AlgebraVector<Rational> bracket(const AlgebraVector<Rational>& a, const AlgebraVector<Rational>& b) {
  return read(commutator(embed(a), embed(b)));
}

inline AlgebraVector<Rational> multiply(const AlgebraVector<Rational>& a, const AlgebraVector<Rational>& b) {
  return read(log(exp(embed(a)) * exp(embed(b))));
}

/// True iff the tensor is exactly the embedding of what read() extracts.
inline bool is_lie_element(const Tensor& t) {
  const Tensor back = embed(read(t));
  for (const auto& [w, v] : t.coef)
    if (!w.empty() && back.at(w) != v) return false;
  for (const auto& [w, v] : back.coef)
    if (t.at(w) != v) return false;
  return t.at("") == 0;
}

}  // namespace oracle
