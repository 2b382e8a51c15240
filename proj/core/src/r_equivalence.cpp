#include "normtori/r_equivalence.hpp"

#include <numeric>

#include "normtori/errors.hpp"

namespace normtori {

namespace {

bool is_one(const CyclicKummerLocal& ext, const LaurentSeries& s) {
  return approx_equal(s, LaurentSeries::constant(ext.field().q(), 1, ext.precision()));
}

void require_field(const CyclicKummerLocal& ext) {
  if (!ext.is_field()) throw Error(ErrorKind::NotAField, "radicand class has order below the degree; L is not a field");
}

// v(a) mod-n data of a field extension: g = gcd(v, n), e = n/g, f = g.
struct LocalShape {
  int v;
  std::uint32_t e;
  std::uint32_t g;
};

LocalShape shape_of(const CyclicKummerLocal& ext) {
  const int v = ext.radicand().valuation();
  const auto n = ext.degree();
  const auto g = static_cast<std::uint32_t>(std::gcd(static_cast<std::uint64_t>(v < 0 ? -v : v), static_cast<std::uint64_t>(n)));
  const std::uint32_t gg = g == 0 ? n : g;
  return {v, n / gg, gg};
}

// The residue field l = kappa[W]/(W^g - u) with sigma(W) = rho_n^e W.
class ResidueField {
 public:
  using Elt = std::vector<std::uint32_t>;

  ResidueField(const PrimeField& f, std::uint32_t g, std::uint32_t u, std::uint32_t zeta)
      : f_(f), g_(g), u_(u), zeta_(zeta) {}

  Elt one() const {
    Elt r(g_, 0);
    r[0] = 1;
    return r;
  }
  Elt basis(std::uint32_t j) const {
    Elt r(g_, 0);
    r[j] = 1;
    return r;
  }
  Elt mul(const Elt& a, const Elt& b) const {
    Elt r(g_, 0);
    for (std::uint32_t i = 0; i < g_; ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < g_; ++j) {
        std::uint32_t p = f_.mul(a[i], b[j]);
        std::uint32_t k = i + j;
        if (k >= g_) {
          k -= g_;
          p = f_.mul(p, u_);
        }
        r[k] = f_.add(r[k], p);
      }
    }
    return r;
  }
  Elt add(const Elt& a, const Elt& b) const {
    Elt r(g_);
    for (std::uint32_t i = 0; i < g_; ++i) r[i] = f_.add(a[i], b[i]);
    return r;
  }
  Elt sigma(const Elt& a, std::uint32_t k = 1) const {
    Elt r(g_);
    const std::uint32_t z = f_.pow(zeta_, k);
    std::uint32_t zi = 1;
    for (std::uint32_t i = 0; i < g_; ++i) {
      r[i] = f_.mul(a[i], zi);
      zi = f_.mul(zi, z);
    }
    return r;
  }
  /// N_{l/kappa}, returned as an element of kappa.
  std::uint32_t norm(const Elt& a) const {
    Elt acc = a;
    for (std::uint32_t k = 1; k < g_; ++k) acc = mul(acc, sigma(a, k));
    return acc[0];
  }
  Elt inverse(const Elt& a) const {
    Elt others = one();
    for (std::uint32_t k = 1; k < g_; ++k) others = mul(others, sigma(a, k));
    const std::uint32_t nv = mul(others, a)[0];
    if (nv == 0) throw Error(ErrorKind::ZeroInput, "inverting zero in the residue field");
    const std::uint32_t ni = f_.inv(nv);
    for (auto& x : others) x = f_.mul(x, ni);
    return others;
  }
  bool is_zero(const Elt& a) const {
    for (auto x : a)
      if (x != 0) return false;
    return true;
  }
  /// Hilbert 90: for N(c) = 1 returns b != 0 with c = b / sigma(b).
  Elt hilbert90(const Elt& c) const {
    for (std::uint32_t j = 0; j < g_; ++j) {
      const Elt theta = basis(j);
      Elt b(g_, 0);
      Elt coef = one();
      for (std::uint32_t k = 0; k < g_; ++k) {
        b = add(b, mul(coef, sigma(theta, k)));
        coef = mul(coef, sigma(c, k));
      }
      if (!is_zero(b)) return b;
    }
    throw Error(ErrorKind::NormNotOne, "no Hilbert 90 solution; residue norm is not 1");
  }

 private:
  const PrimeField& f_;
  std::uint32_t g_;
  std::uint32_t u_;
  std::uint32_t zeta_;
};

}  // namespace

ExtElement recompose_witness(const CyclicKummerLocal& ext, const RWitness& w) {
  ExtElement acc = ext.one();
  for (const auto& p : w) acc = ext.mul(acc, ext.mul(ext.sigma(p.b, p.k), ext.inverse(p.b)));
  return acc;
}

RWitness nth_power_r_witness(const CyclicKummerLocal& ext, const ExtElement& alpha) {
  if (ext.is_scalar(alpha)) {
    if (alpha.coords[0].is_zero()) throw Error(ErrorKind::PrecisionExhausted, "alpha is zero to working precision");
    return {};
  }
  const ExtElement inv = ext.inverse(alpha);
  RWitness w;
  for (std::uint32_t k = 1; k < ext.degree(); ++k) w.push_back({static_cast<std::int64_t>(k), inv});
  return w;
}

bool has_residue_one(const CyclicKummerLocal& ext, const ExtElement& z) {
  require_field(ext);
  const std::int64_t n = ext.degree();
  const std::int64_t v = ext.radicand().valuation();
  for (std::uint32_t i = 0; i < ext.degree(); ++i) {
    LaurentSeries c = z.coords[i];
    if (i == 0) c -= LaurentSeries::constant(ext.field().q(), 1, ext.precision());
    // v_L(c y^i) = v(c) + i v(a)/n; for a series known only as O(t^N) use N.
    const std::int64_t vc = c.is_zero() ? c.absolute_precision() : c.valuation();
    if (n * vc + static_cast<std::int64_t>(i) * v > 0) continue;
    if (c.is_zero())
      throw Error(ErrorKind::PrecisionExhausted, "coordinate " + std::to_string(i) + " too imprecise to decide the residue");
    return false;
  }
  return true;
}

ResidueOneDecomposition r_trivial_from_residue_one(const CyclicKummerLocal& ext, const ExtElement& z) {
  require_field(ext);
  if (!is_one(ext, norm_cyclic(ext, z))) throw Error(ErrorKind::NormNotOne, "N(z) != 1 to working precision");
  if (!has_residue_one(ext, z)) throw Error(ErrorKind::ResidueNotOne, "residue of z in l is not 1");
  if (ext.degree() % ext.field().q() == 0) throw Error(ErrorKind::WildCharacteristic, "degree divisible by the characteristic");
  const auto n = static_cast<std::int64_t>(ext.degree());
  const LaurentSeries n_scalar = LaurentSeries::constant(ext.field().q(), n, ext.precision());
  // Newton iteration w <- w - (w^n - z) / (n w^{n-1}) from w = 1; the error
  // valuation doubles each step.
  ExtElement w = ext.one();
  bool converged = false;
  for (int it = 0; it < 64; ++it) {
    const ExtElement wn1 = ext.pow(w, n - 1);
    const ExtElement r = ext.sub(ext.mul(wn1, w), z);
    bool done = true;
    for (const auto& c : r.coords) done = done && c.is_zero();
    if (done) {
      converged = true;
      break;
    }
    w = ext.sub(w, ext.mul(r, ext.inverse(ext.scale(wn1, n_scalar))));
  }
  if (!converged) throw Error(ErrorKind::PrecisionExhausted, "Newton iteration for the n-th root did not settle");
  if (!is_one(ext, norm_cyclic(ext, w))) throw Error(ErrorKind::NormNotOne, "root has norm different from 1");
  return {w, nth_power_r_witness(ext, w)};
}

void validate_tower(const TowerDescriptor& tower) {
  if (tower.n == 0) throw Error(ErrorKind::TowerMismatch, "ambient degree must be positive");
  if (tower.base == BaseKind::Finite) {
    if (!is_prime(tower.q)) throw Error(ErrorKind::TowerMismatch, "finite base needs a prime q");
    if ((tower.q - 1) % tower.n != 0) throw Error(ErrorKind::TowerMismatch, "finite base needs q = 1 mod n");
  }
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    const auto& l = tower.levels[i];
    if (l.e == 0 || l.f == 0) throw Error(ErrorKind::TowerMismatch, "level degrees must be positive");
    if (tower.n % (l.e * l.f) != 0) throw Error(ErrorKind::TowerMismatch, "level " + std::to_string(i) + ": e*f does not divide n");
    if (i > 0 && l.e * l.f != tower.levels[i - 1].f)
      throw Error(ErrorKind::TowerMismatch, "level " + std::to_string(i) + " does not match the previous residue degree");
  }
  if (tower.base == BaseKind::AlgebraicallyClosed && !tower.levels.empty() && tower.levels.back().f != 1)
    throw Error(ErrorKind::TowerMismatch, "an algebraically closed residue field has no proper extensions");
}

TowerDescriptor tower_of(const CyclicKummerLocal& ext) {
  require_field(ext);
  const LocalShape s = shape_of(ext);
  TowerDescriptor t;
  t.base = BaseKind::Finite;
  t.q = ext.field().q();
  t.n = ext.degree();
  t.levels = {{s.e, s.g}};
  return t;
}

std::uint32_t torus_quotient_order(const TowerDescriptor& tower) {
  validate_tower(tower);
  if (tower.levels.empty()) return 1;
  // Cyclic: every residue step is cyclic, Hilbert 90 holds at the bottom and
  // each level lifts it, so rho is R-trivial.
  if (tower.galois == GaloisShape::Cyclic) return 1;
  // Bicyclic (Z/m)^2 with inertia Z/m and residue degree m: rho^t is
  // R-trivial iff m | t, so the class has order m.
  const auto& top = tower.levels.front();
  if (top.e == top.f && top.e > 1 && tower.n % (top.e * top.f) == 0) {
    for (std::size_t i = 1; i < tower.levels.size(); ++i)
      if (tower.levels[i].e != 1) throw Error(ErrorKind::TowerMismatch, "bicyclic tower with ramified residue steps is not supported");
    return top.e;
  }
  throw Error(ErrorKind::TowerMismatch, "unsupported bicyclic tower shape");
}

RDecomposition r_trivial_decompose(const CyclicKummerLocal& ext, const ExtElement& x, const TowerDescriptor& tower) {
  validate_tower(tower);
  if (tower.base != BaseKind::Finite) throw Error(ErrorKind::TowerMismatch, "element arithmetic needs a finite residue field");
  if (tower.galois != GaloisShape::Cyclic) throw Error(ErrorKind::TowerMismatch, "cyclic Kummer extension paired with a bicyclic tower");
  const TowerDescriptor own = tower_of(ext);
  if (tower.q != own.q || tower.n != own.n || tower.levels.empty() || tower.levels.front() != own.levels.front())
    throw Error(ErrorKind::TowerMismatch, "tower does not describe this extension");
  if (!is_one(ext, norm_cyclic(ext, x))) throw Error(ErrorKind::NormNotOne, "N(x) != 1 to working precision");

  const PrimeField& F = ext.field();
  const LocalShape s = shape_of(ext);
  const std::uint32_t rho = ext.rho();
  const int step = s.v / static_cast<int>(s.g);  // W = y^e / t^step

  // Residue of x in l: only the y^{e j} terms reach valuation 0.
  std::vector<std::uint32_t> xbar(s.g, 0);
  for (std::uint32_t j = 0; j < s.g; ++j) xbar[j] = x.coords[s.e * j].coeff(-static_cast<int>(j) * step);
  ResidueField l(F, s.g, ext.radicand().leading(), F.pow(rho, s.e));

  // N_{l/kappa}(xbar) is an e-th root of unity rho_n^{f i}.
  const std::uint32_t nbar = l.norm(xbar);
  const std::uint32_t rf = F.pow(rho, s.g);
  std::uint32_t i = 0;
  for (std::uint32_t p = 1; i < s.e && p != nbar; p = F.mul(p, rf)) ++i;
  if (i == s.e) throw Error(ErrorKind::NormNotOne, "residue norm is not a root of unity");

  const ExtElement rho_i_inv = ext.scalar(LaurentSeries::constant(F.q(), F.pow(rho, -static_cast<std::int64_t>(i)), ext.precision()));
  const ExtElement y = ext.mul(rho_i_inv, x);

  RWitness witness;
  ExtElement z = y;
  if (s.g > 1) {
    std::vector<std::uint32_t> ybar(s.g);
    for (std::uint32_t j = 0; j < s.g; ++j) ybar[j] = F.mul(xbar[j], F.pow(rho, -static_cast<std::int64_t>(i)));
    const auto bbar = l.hilbert90(l.inverse(ybar));  // ybar = sigma(b)/b
    ExtElement b = ext.scalar(LaurentSeries::zero(F.q(), ext.precision()));
    for (std::uint32_t j = 0; j < s.g; ++j) {
      if (bbar[j] == 0) continue;
      ExtElement term = ext.y_power(static_cast<int>(s.e * j));
      term = ext.scale(term, LaurentSeries::monomial(F.q(), bbar[j], -static_cast<int>(j) * step, ext.precision()));
      b = ext.add(b, term);
    }
    z = ext.mul(y, ext.mul(b, ext.inverse(ext.sigma(b, 1))));
    witness.push_back({1, b});
  }
  auto rest = r_trivial_from_residue_one(ext, z);
  for (auto& p : rest.witness) witness.push_back(std::move(p));

  const std::uint32_t order = torus_quotient_order(tower);
  const std::uint32_t jr = i % order;
  RWitness reduced = witness;
  if (i != jr) reduced.push_back({1, ext.y_power(static_cast<int>(i - jr))});
  return {i, std::move(witness), jr, std::move(reduced)};
}

}  // namespace normtori
