#include "witt/render.hpp"

namespace witt {

namespace {

std::string render_tuple(const std::vector<Scalar>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + "]";
}

// t-part omitted at degree zero, matching the shortest input form.
std::string render_factor(const LatticePoint& x, const TorusVector& d) {
  std::string out;
  if (!x.is_zero()) out += "t" + render_tuple(x.coords()) + " ";
  out += "d" + render_tuple(d.coeffs());
  return out;
}

// Joins signed pieces: the magnitude prefix `|c| * ` is dropped for |c| = 1.
struct TermJoiner {
  std::string text;
  bool first = true;
  void add(const Scalar& c, const std::string& body) {
    const bool neg = c.is_negative();
    if (first) {
      if (neg) text += "-";
      first = false;
    } else {
      text += neg ? " - " : " + ";
    }
    const Scalar mag = c.abs();
    if (!mag.is_one()) text += mag.str() + " * ";
    text += body;
  }
};

}  // namespace

std::string render(const Scalar& c) { return c.str(); }

std::string render(const LatticePoint& x) { return render_tuple(x.coords()); }

std::string render(const TorusVector& d) { return render_tuple(d.coeffs()); }

std::string render(const Monomial& m, int rank) {
  return render_factor(m.point, TorusVector::basis(rank, m.index));
}

std::string render(const WittElement& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [x, d] : u.terms()) {
    if (!first) out += " + ";
    first = false;
    out += render_factor(x, d);
  }
  return out;
}

std::string render(const Tensor2& t) {
  if (t.is_zero()) return "0";
  TermJoiner j;
  for (const auto& [c, a, b] : t.decomposables())
    j.add(c, render(a, t.rank()) + " (*) " + render(b, t.rank()));
  return j.text;
}

std::string render(const Tensor3& t) {
  if (t.is_zero()) return "0";
  TermJoiner j;
  for (const auto& [c, a, b, d] : t.decomposables())
    j.add(c, render(a, t.rank()) + " (*) " + render(b, t.rank()) + " (*) " +
                 render(d, t.rank()));
  return j.text;
}

std::string render(const DerivationTable& table) {
  std::string out;
  for (const auto& m : table.window)
    out += render(m, table.rank) + " : " + render(table.value(m)) + "\n";
  return out;
}

}  // namespace witt
