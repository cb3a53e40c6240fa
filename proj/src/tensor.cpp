#include "witt/tensor.hpp"

namespace witt {

namespace {

void require_same_rank(int a, int b) {
  if (a != b)
    throw DimensionError("rank mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

}  // namespace

void Tensor2::add_entry(const LatticePoint& x, const LatticePoint& y, int k,
                        int l, const Scalar& c) {
  require_same_rank(x.rank(), rank_);
  require_same_rank(y.rank(), rank_);
  if (c.is_zero()) return;
  auto [it, inserted] = blocks_.try_emplace(Key2{x, y}, rank_);
  it->second.at(k, l) += c;
  if (it->second.at(k, l).is_zero() && it->second.is_zero()) blocks_.erase(it);
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
  Tensor2 out(*this);
  out += o;
  return out;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  require_same_rank(rank_, o.rank_);
  for (const auto& [key, grid] : o.blocks_)
    for (int k = 0; k < rank_; ++k)
      for (int l = 0; l < rank_; ++l)
        add_entry(key.x, key.y, k, l, grid.at(k, l));
  return *this;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const { return *this + (-o); }

Tensor2 Tensor2::operator-() const {
  Tensor2 out(rank_);
  for (const auto& [key, grid] : blocks_) {
    Grid2 g(rank_);
    for (int k = 0; k < rank_; ++k)
      for (int l = 0; l < rank_; ++l) g.at(k, l) = -grid.at(k, l);
    out.blocks_.emplace(key, std::move(g));
  }
  return out;
}

std::vector<std::tuple<Scalar, Monomial, Monomial>> Tensor2::decomposables()
    const {
  std::vector<std::tuple<Scalar, Monomial, Monomial>> out;
  for (const auto& [key, grid] : blocks_)
    for (int k = 0; k < rank_; ++k)
      for (int l = 0; l < rank_; ++l)
        if (!grid.at(k, l).is_zero())
          out.push_back({grid.at(k, l), Monomial{key.x, k}, Monomial{key.y, l}});
  return out;
}

void Tensor3::add_entry(const LatticePoint& x, const LatticePoint& y,
                        const LatticePoint& z, int k, int l, int m,
                        const Scalar& c) {
  require_same_rank(x.rank(), rank_);
  require_same_rank(y.rank(), rank_);
  require_same_rank(z.rank(), rank_);
  if (c.is_zero()) return;
  auto [it, inserted] = blocks_.try_emplace(Key3{x, y, z}, rank_);
  it->second.at(k, l, m) += c;
  if (it->second.at(k, l, m).is_zero() && it->second.is_zero())
    blocks_.erase(it);
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
  Tensor3 out(*this);
  out += o;
  return out;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  require_same_rank(rank_, o.rank_);
  for (const auto& [key, grid] : o.blocks_)
    for (int k = 0; k < rank_; ++k)
      for (int l = 0; l < rank_; ++l)
        for (int m = 0; m < rank_; ++m)
          add_entry(key.x, key.y, key.z, k, l, m, grid.at(k, l, m));
  return *this;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const { return *this + (-o); }

Tensor3 Tensor3::operator-() const {
  Tensor3 out(rank_);
  for (const auto& [key, grid] : blocks_) {
    Grid3 g(rank_);
    for (int k = 0; k < rank_; ++k)
      for (int l = 0; l < rank_; ++l)
        for (int m = 0; m < rank_; ++m) g.at(k, l, m) = -grid.at(k, l, m);
    out.blocks_.emplace(key, std::move(g));
  }
  return out;
}

std::vector<std::tuple<Scalar, Monomial, Monomial, Monomial>>
Tensor3::decomposables() const {
  std::vector<std::tuple<Scalar, Monomial, Monomial, Monomial>> out;
  for (const auto& [key, grid] : blocks_)
    for (int k = 0; k < rank_; ++k)
      for (int l = 0; l < rank_; ++l)
        for (int m = 0; m < rank_; ++m)
          if (!grid.at(k, l, m).is_zero())
            out.push_back({grid.at(k, l, m), Monomial{key.x, k},
                           Monomial{key.y, l}, Monomial{key.z, m}});
  return out;
}

Tensor2 operator*(const Scalar& c, const Tensor2& t) {
  Tensor2 out(t.rank());
  if (c.is_zero()) return out;
  for (const auto& [key, grid] : t.blocks())
    for (int k = 0; k < t.rank(); ++k)
      for (int l = 0; l < t.rank(); ++l)
        out.add_entry(key.x, key.y, k, l, c * grid.at(k, l));
  return out;
}

Tensor3 operator*(const Scalar& c, const Tensor3& t) {
  Tensor3 out(t.rank());
  if (c.is_zero()) return out;
  for (const auto& [key, grid] : t.blocks())
    for (int k = 0; k < t.rank(); ++k)
      for (int l = 0; l < t.rank(); ++l)
        for (int m = 0; m < t.rank(); ++m)
          out.add_entry(key.x, key.y, key.z, k, l, m, c * grid.at(k, l, m));
  return out;
}

Tensor2 outer(const WittElement& u, const WittElement& w) {
  require_same_rank(u.rank(), w.rank());
  Tensor2 out(u.rank());
  for (const auto& [x, du] : u.terms())
    for (const auto& [y, dw] : w.terms())
      for (int k = 0; k < u.rank(); ++k)
        for (int l = 0; l < u.rank(); ++l)
          out.add_entry(x, y, k, l, du[k] * dw[l]);
  return out;
}

Tensor3 outer(const WittElement& u, const WittElement& v,
              const WittElement& w) {
  require_same_rank(u.rank(), v.rank());
  require_same_rank(u.rank(), w.rank());
  Tensor3 out(u.rank());
  for (const auto& [x, du] : u.terms())
    for (const auto& [y, dv] : v.terms())
      for (const auto& [z, dw] : w.terms())
        for (int k = 0; k < u.rank(); ++k)
          for (int l = 0; l < u.rank(); ++l)
            for (int m = 0; m < u.rank(); ++m)
              out.add_entry(x, y, z, k, l, m, du[k] * dv[l] * dw[m]);
  return out;
}

Tensor2 twist(const Tensor2& t) {
  Tensor2 out(t.rank());
  for (const auto& [key, grid] : t.blocks())
    for (int k = 0; k < t.rank(); ++k)
      for (int l = 0; l < t.rank(); ++l)
        out.add_entry(key.y, key.x, l, k, grid.at(k, l));
  return out;
}

Tensor3 cycle(const Tensor3& t) {
  Tensor3 out(t.rank());
  for (const auto& [key, grid] : t.blocks())
    for (int k = 0; k < t.rank(); ++k)
      for (int l = 0; l < t.rank(); ++l)
        for (int m = 0; m < t.rank(); ++m)
          out.add_entry(key.y, key.z, key.x, l, m, k, grid.at(k, l, m));
  return out;
}

Tensor2 act(const WittElement& a, const Tensor2& t) {
  require_same_rank(a.rank(), t.rank());
  const int n = t.rank();
  Tensor2 out(n);
  for (const auto& [z, av] : a.terms()) {
    for (const auto& [key, grid] : t.blocks()) {
      const Scalar ax = pairing(av, key.x);  // a(x) for the first slot
      const Scalar ay = pairing(av, key.y);  // a(y) for the second slot
      const LatticePoint zx = z + key.x;
      const LatticePoint zy = z + key.y;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const Scalar& c = grid.at(k, l);
          if (c.is_zero()) continue;
          // [t^z a, t^x d_k] = t^{z+x}(a(x) d_k - z_k a)
          if (!ax.is_zero()) out.add_entry(zx, key.y, k, l, ax * c);
          const Scalar zk = z[k];
          if (!zk.is_zero())
            for (int p = 0; p < n; ++p)
              if (!av[p].is_zero())
                out.add_entry(zx, key.y, p, l, -(zk * av[p] * c));
          // second slot
          if (!ay.is_zero()) out.add_entry(key.x, zy, k, l, ay * c);
          const Scalar zl = z[l];
          if (!zl.is_zero())
            for (int p = 0; p < n; ++p)
              if (!av[p].is_zero())
                out.add_entry(key.x, zy, k, p, -(zl * av[p] * c));
        }
      }
    }
  }
  return out;
}

Tensor3 act(const WittElement& a, const Tensor3& t) {
  require_same_rank(a.rank(), t.rank());
  const int n = t.rank();
  Tensor3 out(n);
  for (const auto& [z, av] : a.terms()) {
    for (const auto& [key, grid] : t.blocks()) {
      const Scalar ax = pairing(av, key.x);
      const Scalar ay = pairing(av, key.y);
      const Scalar az = pairing(av, key.z);
      const LatticePoint zx = z + key.x;
      const LatticePoint zy = z + key.y;
      const LatticePoint zz = z + key.z;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          for (int m = 0; m < n; ++m) {
            const Scalar& c = grid.at(k, l, m);
            if (c.is_zero()) continue;
            if (!ax.is_zero()) out.add_entry(zx, key.y, key.z, k, l, m, ax * c);
            if (!z[k].is_zero())
              for (int p = 0; p < n; ++p)
                if (!av[p].is_zero())
                  out.add_entry(zx, key.y, key.z, p, l, m, -(z[k] * av[p] * c));
            if (!ay.is_zero()) out.add_entry(key.x, zy, key.z, k, l, m, ay * c);
            if (!z[l].is_zero())
              for (int p = 0; p < n; ++p)
                if (!av[p].is_zero())
                  out.add_entry(key.x, zy, key.z, k, p, m, -(z[l] * av[p] * c));
            if (!az.is_zero()) out.add_entry(key.x, key.y, zz, k, l, m, az * c);
            if (!z[m].is_zero())
              for (int p = 0; p < n; ++p)
                if (!av[p].is_zero())
                  out.add_entry(key.x, key.y, zz, k, l, p, -(z[m] * av[p] * c));
          }
        }
      }
    }
  }
  return out;
}

std::map<LatticePoint, Tensor2> grade2(const Tensor2& t) {
  std::map<LatticePoint, Tensor2> out;
  for (const auto& [key, grid] : t.blocks()) {
    const LatticePoint deg = key.x + key.y;
    auto [it, inserted] = out.try_emplace(deg, t.rank());
    for (int k = 0; k < t.rank(); ++k)
      for (int l = 0; l < t.rank(); ++l)
        it->second.add_entry(key.x, key.y, k, l, grid.at(k, l));
  }
  return out;
}

std::map<LatticePoint, Tensor3> grade3(const Tensor3& t) {
  std::map<LatticePoint, Tensor3> out;
  for (const auto& [key, grid] : t.blocks()) {
    const LatticePoint deg = key.x + key.y + key.z;
    auto [it, inserted] = out.try_emplace(deg, t.rank());
    for (int k = 0; k < t.rank(); ++k)
      for (int l = 0; l < t.rank(); ++l)
        for (int m = 0; m < t.rank(); ++m)
          it->second.add_entry(key.x, key.y, key.z, k, l, m, grid.at(k, l, m));
  }
  return out;
}

SymSplit sym_split(const Tensor2& t) {
  const Scalar half(1, 2);
  const Tensor2 tw = twist(t);
  return SymSplit{half * (t - tw), half * (t + tw)};
}

Tensor3 prepend(const Scalar& c, const Monomial& w, const Tensor2& t) {
  Tensor3 out(t.rank());
  if (c.is_zero()) return out;
  for (const auto& [key, grid] : t.blocks())
    for (int k = 0; k < t.rank(); ++k)
      for (int l = 0; l < t.rank(); ++l)
        out.add_entry(w.point, key.x, key.y, w.index, k, l,
                      c * grid.at(k, l));
  return out;
}

}  // namespace witt
