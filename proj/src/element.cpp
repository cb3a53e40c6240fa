#include "witt/element.hpp"

namespace witt {

WittElement WittElement::monomial(const LatticePoint& x, const TorusVector& d) {
  if (x.rank() != d.rank())
    throw DimensionError("monomial point and torus vector rank differ");
  WittElement u(x.rank());
  u.add_term(x, d);
  return u;
}

WittElement WittElement::monomial(const Monomial& m, int rank) {
  return monomial(m.point, TorusVector::basis(rank, m.index));
}

void WittElement::add_term(const LatticePoint& x, const TorusVector& d) {
  if (x.rank() != rank_ || d.rank() != rank_)
    throw DimensionError("term rank differs from element rank");
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    if (!d.is_zero()) terms_.emplace(x, d);
    return;
  }
  it->second = it->second + d;
  if (it->second.is_zero()) terms_.erase(it);
}

WittElement WittElement::operator+(const WittElement& o) const {
  WittElement out(*this);
  out += o;
  return out;
}

WittElement& WittElement::operator+=(const WittElement& o) {
  if (rank_ != o.rank_) throw DimensionError("adding elements of different rank");
  for (const auto& [x, d] : o.terms_) add_term(x, d);
  return *this;
}

WittElement WittElement::operator-(const WittElement& o) const {
  return *this + (-o);
}

WittElement WittElement::operator-() const {
  WittElement out(rank_);
  for (const auto& [x, d] : terms_) out.terms_.emplace(x, -d);
  return out;
}

WittElement operator*(const Scalar& c, const WittElement& u) {
  WittElement out(u.rank());
  if (c.is_zero()) return out;
  for (const auto& [x, d] : u.terms()) out.add_term(x, c * d);
  return out;
}

WittElement bracket(const WittElement& u, const WittElement& w) {
  if (u.rank() != w.rank())
    throw DimensionError("bracket of elements of different rank");
  WittElement out(u.rank());
  for (const auto& [x, du] : u.terms()) {
    for (const auto& [y, dw] : w.terms()) {
      const LatticePoint deg = x + y;
      const Scalar a = pairing(du, y);   // d(y)
      const Scalar b = pairing(dw, x);   // d'(x)
      if (!a.is_zero()) out.add_term(deg, a * dw);
      if (!b.is_zero()) out.add_term(deg, (-b) * du);
    }
  }
  return out;
}

std::map<LatticePoint, WittElement> grade(const WittElement& u) {
  std::map<LatticePoint, WittElement> out;
  for (const auto& [x, d] : u.terms())
    out.emplace(x, WittElement::monomial(x, d));
  return out;
}

WittElement jacobi_defect(const WittElement& u, const WittElement& v,
                          const WittElement& w) {
  return bracket(bracket(u, v), w) + bracket(bracket(v, w), u) +
         bracket(bracket(w, u), v);
}

std::vector<std::pair<Scalar, Monomial>> monomial_terms(const WittElement& u) {
  std::vector<std::pair<Scalar, Monomial>> out;
  for (const auto& [x, d] : u.terms())
    for (int i = 0; i < u.rank(); ++i)
      if (!d[i].is_zero()) out.push_back({d[i], Monomial{x, i}});
  return out;
}

bool linearly_independent(const WittElement& a, const WittElement& b) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.rank() != b.rank())
    throw DimensionError("independence check on elements of different rank");
  const auto ta = monomial_terms(a);
  const auto tb = monomial_terms(b);
  if (ta.size() != tb.size()) return true;
  // Same support size: b is dependent iff b == lambda * a for the ratio fixed
  // by the leading monomial.
  if (ta.front().second != tb.front().second) return true;
  const Scalar lambda = tb.front().first / ta.front().first;
  return !(b == lambda * a);
}

}  // namespace witt
