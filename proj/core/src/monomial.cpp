#include "normtori/monomial.hpp"

#include <numeric>
#include <regex>
#include <set>

#include "normtori/errors.hpp"

namespace normtori {

namespace {

std::uint64_t mod(std::int64_t v, std::uint64_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(((v % nn) + nn) % nn);
}

void require_divides(const PrimeField& field, std::uint64_t n) {
  if (n == 0 || (field.q() - 1) % n != 0)
    throw Error(ErrorKind::IncompatibleModulus, std::to_string(n) + " does not divide q-1 = " + std::to_string(field.q() - 1));
}

// Calls f(coeffs, class) for every combination of generator powers in
// lexicographic order of the coefficient vector.
template <typename F>
void for_each_combination(const std::vector<ClassVector>& gens, std::uint64_t n, F&& f) {
  const std::size_t k = gens.size();
  std::vector<std::uint64_t> c(k, 0);
  for (;;) {
    ClassVector v{0, 0, 0};
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < 3; ++j) v[j] = (v[j] + c[i] * gens[i][j]) % n;
    f(c, v);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++c[pos] < n) break;
      c[pos] = 0;
      if (pos == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

MonomialClass monomial_mul(const PrimeField& field, const MonomialClass& a, const MonomialClass& b) {
  return {field.mul(a.u, b.u), a.e1 + b.e1, a.e2 + b.e2};
}

MonomialClass monomial_pow(const PrimeField& field, const MonomialClass& a, std::int64_t k) {
  return {field.pow(a.u, k), a.e1 * k, a.e2 * k};
}

std::string to_string(const MonomialClass& m) {
  return "u:" + std::to_string(m.u) + " e1:" + std::to_string(m.e1) + " e2:" + std::to_string(m.e2);
}

MonomialClass parse_monomial(const std::string& text, const PrimeField& field) {
  static const std::regex field_re(R"(\s*(u|e1|e2)\s*:\s*(-?\d+)\s*)");
  MonomialClass m;
  std::set<std::string> seen;
  auto it = text.cbegin();
  std::smatch sm;
  while (it != text.cend()) {
    if (!std::regex_search(it, text.cend(), sm, field_re, std::regex_constants::match_continuous))
      throw Error(ErrorKind::ParseError, "line 1, column " + std::to_string(it - text.cbegin() + 1) + ": expected u:<int>, e1:<int> or e2:<int>");
    const std::string key = sm[1];
    if (!seen.insert(key).second)
      throw Error(ErrorKind::ParseError, "line 1, column " + std::to_string(it - text.cbegin() + 1) + ": duplicate field " + key);
    const std::int64_t v = std::stoll(sm[2]);
    if (key == "u") m.u = field.reduce(v);
    else if (key == "e1") m.e1 = v;
    else m.e2 = v;
    it = sm[0].second;
  }
  if (seen.size() != 3) throw Error(ErrorKind::ParseError, "line 1, column " + std::to_string(text.size() + 1) + ": monomial needs u, e1 and e2");
  if (m.u == 0) throw Error(ErrorKind::ZeroInput, "monomial unit must be nonzero");
  return m;
}

bool is_nth_power_monomial(const PrimeField& field, const MonomialClass& x, std::uint64_t n) {
  require_divides(field, n);
  if (x.u == 0) throw Error(ErrorKind::ZeroInput, "monomial unit must be nonzero");
  return mod(x.e1, n) == 0 && mod(x.e2, n) == 0 && nth_power_test(field, x.u, n);
}

std::uint64_t ramification_after_root(std::uint64_t e, std::uint64_t ell) {
  if (ell != 0 && e % ell == 0) return e / ell;
  return e;
}

MonomialKummer::MonomialKummer(const PrimeField& field, std::uint32_t n, std::vector<MonomialClass> gens)
    : field_(field), n_(n), gens_(std::move(gens)), degree_(1) {
  require_divides(field_, n_);
  std::vector<ClassVector> cls;
  for (const auto& g : gens_) {
    if (g.u == 0) throw Error(ErrorKind::ZeroInput, "generator unit must be nonzero");
    cls.push_back(class_of(g));
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (degree_ > (std::uint64_t{1} << 24) / n_) throw Error(ErrorKind::InvalidArgument, "extension degree too large for the monomial model");
    degree_ *= n_;
  }
  std::set<ClassVector> span;
  for_each_combination(cls, n_, [&](const auto&, const ClassVector& v) { span.insert(v); });
  if (span.size() != degree_)
    throw Error(ErrorKind::DependentGenerators, "generators span " + std::to_string(span.size()) + " classes, expected " + std::to_string(degree_));
}

ClassVector MonomialKummer::class_of(const MonomialClass& m) const {
  return {mod(m.e1, n_), mod(m.e2, n_), unit_class(field_, m.u, n_)};
}

MonomialClass MonomialKummer::from_class(const ClassVector& v) const {
  return {field_.pow(field_.generator(), static_cast<std::int64_t>(v[2])), static_cast<std::int64_t>(v[0]), static_cast<std::int64_t>(v[1])};
}

KummerTower kummer_decompose(const MonomialKummer& K) {
  const std::uint64_t n = K.n();
  std::vector<ClassVector> cls;
  for (const auto& g : K.gens()) cls.push_back(K.class_of(g));

  struct Entry {
    std::vector<std::uint64_t> coeffs;
    ClassVector v;
  };
  std::vector<Entry> span;
  for_each_combination(cls, n, [&](const auto& c, const ClassVector& v) { span.push_back({c, v}); });

  auto radicand = [&](const Entry& e) {
    return TowerRadicand{K.from_class(e.v), e.coeffs};
  };
  auto first_where = [&](auto pred) -> const Entry& {
    for (const auto& e : span)
      if (pred(e.v)) return e;
    throw Error(ErrorKind::InvalidArgument, "internal: empty selection in tower decomposition");
  };

  KummerTower t;
  // L1: classes with no pi1 or pi2 part, a cyclic subgroup of Z/n.
  std::uint64_t h0 = n;
  for (const auto& e : span)
    if (e.v[0] == 0 && e.v[1] == 0) h0 = std::gcd(h0, e.v[2]);
  t.l1_degree = n / h0;
  if (t.l1_degree > 1) {
    t.l1_gens.push_back(radicand(first_where([&](const ClassVector& v) { return v[0] == 0 && v[1] == 0 && v[2] == h0; })));
  }
  // L2: classes without pi2 part; their pi1 exponents generate (n/d1) Z/n.
  std::uint64_t h1 = n;
  for (const auto& e : span)
    if (e.v[1] == 0) h1 = std::gcd(h1, e.v[0]);
  t.d1 = n / h1;
  t.l2_radicand = t.d1 > 1 ? radicand(first_where([&](const ClassVector& v) { return v[1] == 0 && v[0] == h1; }))
                           : TowerRadicand{MonomialClass{}, std::vector<std::uint64_t>(cls.size(), 0)};
  // L: pi2 exponents generate (n/d2) Z/n.
  std::uint64_t h2 = n;
  for (const auto& e : span) h2 = std::gcd(h2, e.v[1]);
  t.d2 = n / h2;
  if (t.d2 > 1) {
    Entry e3 = first_where([&](const ClassVector& v) { return v[1] == h2; });
    // Strip whole multiples of the L2 radicand from the pi1 exponent.
    if (t.d1 > 1) {
      const std::uint64_t m = e3.v[0] / h1;
      const Entry& e2 = first_where([&](const ClassVector& v) { return v[1] == 0 && v[0] == h1; });
      for (std::size_t j = 0; j < 3; ++j) e3.v[j] = (e3.v[j] + (n - m % n) * e2.v[j]) % n;
      for (std::size_t i = 0; i < e3.coeffs.size(); ++i) e3.coeffs[i] = (e3.coeffs[i] + (n - m % n) * e2.coeffs[i]) % n;
    }
    t.l3_radicand = radicand(e3);
    // pi1^{r/n} = (d1-th root of u pi1)^i with i = r d1 / n, then reduced mod d2.
    const std::uint64_t r = e3.v[0];
    t.i_exp = ((r * t.d1 * t.d2) / n) % t.d2;
  } else {
    t.l3_radicand = {MonomialClass{}, std::vector<std::uint64_t>(cls.size(), 0)};
  }

  if (t.l1_degree * t.d1 * t.d2 != K.degree())
    throw Error(ErrorKind::DependentGenerators, "tower degrees do not multiply to the extension degree");
  return t;
}

NormDescentResult norm_descent_2dim(const MonomialKummer& K, const MonomialClass& lambda) {
  const PrimeField& F = K.field();
  if (lambda.u == 0) throw Error(ErrorKind::ZeroInput, "lambda unit must be nonzero");
  const KummerTower tower = kummer_decompose(K);
  const std::uint64_t n = K.n();
  const std::uint64_t N = K.degree();
  const std::uint64_t gq = std::gcd(N, static_cast<std::uint64_t>(F.q() - 1));
  const std::uint64_t size = gq * N * N;
  if (size > (std::uint64_t{1} << 24)) throw Error(ErrorKind::InvalidArgument, "norm group too large to search");

  // Norms of the monomial generators of L; N-th powers are norms of scalars.
  std::vector<NormFactor> gens;
  const std::uint32_t sign = (n % 2 == 0) ? F.neg(1) : 1;
  for (std::size_t i = 0; i < K.gens().size(); ++i) {
    const MonomialClass& d = K.gens()[i];
    MonomialClass base{F.mul(sign, d.u), d.e1, d.e2};
    gens.push_back({"root(" + std::to_string(i) + ")", monomial_pow(F, base, static_cast<std::int64_t>(N / n)), 1});
  }
  // Residue norms from the unramified part are onto kappa*; the rest of the
  // tower raises them to the power N / [L1:F].
  gens.push_back({"unit", {F.pow(F.generator(), static_cast<std::int64_t>(N / tower.l1_degree)), 0, 0}, 1});

  auto index_of = [&](const MonomialClass& m) {
    return (unit_class(F, m.u, gq) * N + mod(m.e1, N)) * N + mod(m.e2, N);
  };
  std::vector<std::int32_t> parent(size, -1);
  std::vector<std::uint64_t> prev(size, 0);
  std::vector<std::uint64_t> queue{0};
  parent[0] = static_cast<std::int32_t>(gens.size());
  std::vector<std::uint64_t> step;
  for (const auto& g : gens) step.push_back(index_of(g.norm));
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    const std::uint64_t c = (a / (N * N) + b / (N * N)) % gq;
    const std::uint64_t e1 = ((a / N) % N + (b / N) % N) % N;
    const std::uint64_t e2 = (a % N + b % N) % N;
    return (c * N + e1) * N + e2;
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t g = 0; g < step.size(); ++g) {
      const std::uint64_t nxt = add(queue[head], step[g]);
      if (parent[nxt] != -1) continue;
      parent[nxt] = static_cast<std::int32_t>(g);
      prev[nxt] = queue[head];
      queue.push_back(nxt);
    }
  }

  NormDescentResult res;
  res.residual = lambda;
  const std::uint64_t target = index_of(lambda);
  if (parent[target] == -1) return res;
  std::vector<std::uint64_t> count(gens.size(), 0);
  for (std::uint64_t cur = target; cur != 0; cur = prev[cur]) ++count[static_cast<std::size_t>(parent[cur])];
  MonomialClass residual = lambda;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (count[g] == 0) continue;
    NormFactor f = gens[g];
    f.power = count[g];
    residual = monomial_mul(F, residual, monomial_pow(F, f.norm, -static_cast<std::int64_t>(count[g])));
    res.trail.push_back(std::move(f));
  }
  // The certificate: what remains is an N-th power in F.
  if (mod(residual.e1, N) != 0 || mod(residual.e2, N) != 0 || !is_power_any_exponent(F, residual.u, N))
    throw Error(ErrorKind::InvalidArgument, "internal: norm trail does not leave an N-th power");
  res.is_norm = true;
  res.residual = residual;
  return res;
}

}  // namespace normtori
