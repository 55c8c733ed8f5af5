#include "symshuffle/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace symshuffle {

Rational ParamVector::total() const {
  Rational t = gamma;
  for (const auto& a : alpha) t += a;
  for (const auto& b : beta) t += b;
  return t;
}

bool ParamVector::nonnegative() const {
  auto nn = [](const Rational& r) { return r >= 0; };
  return gamma >= 0 && std::all_of(alpha.begin(), alpha.end(), nn) &&
         std::all_of(beta.begin(), beta.end(), nn);
}

Rational ParamVector::collision_mass() const {
  Rational s = 0;
  for (const auto& a : alpha) s += a * a;
  for (const auto& b : beta) s += b * b;
  return s;
}

std::string ParamVector::to_string() const {
  auto list = [](const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s;
  };
  return "(" + list(alpha) + ";" + list(beta) + ";" + gamma.get_str() + ")";
}

Rational eval_power_sum(int r, std::span<const Rational> x) {
  if (r < 1) throw std::invalid_argument("power sums need r >= 1");
  Rational total = 0;
  for (const auto& xi : x) total += pow(xi, static_cast<unsigned>(r));
  return total;
}

Rational eval_power_sum(const Partition& lambda, std::span<const Rational> x) {
  Rational total = 1;
  for (int part : lambda.parts()) total *= eval_power_sum(part, x);
  return total;
}

Rational eval_schur(const Partition& lambda, std::span<const Rational> x) {
  return schur_by_tableaux<Rational>(lambda, x);
}

Rational eval_schur_jacobi_trudi(const Partition& lambda, std::span<const Rational> x) {
  return schur_by_jacobi_trudi<Rational>(lambda, x);
}

Rational eval_stembridge_S(const Partition& lambda, std::span<const Rational> y) {
  return stembridge_S<Rational>(lambda, y);
}

std::vector<Rational> extended_h(const ParamVector& p, int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
  const auto len = static_cast<std::size_t>(kmax) + 1;
  std::vector<Rational> h(len, 0);
  // e^{gamma z}
  Rational term = 1;
  for (std::size_t k = 0; k < len; ++k) {
    if (k > 0) term = term * p.gamma / static_cast<long>(k);
    h[k] = term;
  }
  for (const auto& b : p.beta) {
    for (std::size_t k = len - 1; k >= 1; --k) h[k] += b * h[k - 1];
  }
  for (const auto& a : p.alpha) {
    // Multiply by 1/(1 - a z): running prefix recurrence.
    for (std::size_t k = 1; k < len; ++k) h[k] += a * h[k - 1];
  }
  return h;
}

Rational eval_extended_schur(const Partition& lambda, const ParamVector& p) {
  return jacobi_trudi(lambda, extended_h(p, lambda.part(0) + lambda.length()));
}

Rational extended_power_sum(int n, const ParamVector& p) {
  if (n < 1) throw std::invalid_argument("extended power sums need n >= 1");
  if (n == 1) return p.total();
  Rational s = 0;
  for (const auto& a : p.alpha) s += pow(a, static_cast<unsigned>(n));
  Rational b = 0;
  for (const auto& x : p.beta) b += pow(x, static_cast<unsigned>(n));
  return n % 2 == 0 ? Rational(s - b) : Rational(s + b);
}

Rational extended_power_sum(const Partition& lambda, const ParamVector& p) {
  Rational total = 1;
  for (int part : lambda.parts()) total *= extended_power_sum(part, p);
  return total;
}

std::string to_string(CauchyKind kind) {
  switch (kind) {
    case CauchyKind::classic: return "classic";
    case CauchyKind::dual: return "dual";
    case CauchyKind::stembridge: return "stembridge";
    case CauchyKind::dual_stembridge: return "dual-stembridge";
    case CauchyKind::extended: return "extended";
  }
  return "?";
}

CauchyKind parse_cauchy_kind(std::string_view name) {
  for (auto k : {CauchyKind::classic, CauchyKind::dual, CauchyKind::stembridge,
                 CauchyKind::dual_stembridge, CauchyKind::extended}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown Cauchy identity kind: " + std::string(name));
}

Poly cauchy_difference(CauchyKind kind, int degree, int nx, int ny, const ParamVector& params) {
  if (degree < 0 || degree > 10) throw std::invalid_argument("Cauchy checks support degree 0..10");
  if (nx < 0 || ny < 0) throw std::invalid_argument("variable counts must be nonnegative");
  std::vector<Poly> x;
  std::vector<Poly> y;
  for (int i = 0; i < nx; ++i) x.push_back(Poly::variable(i));
  for (int i = 0; i < ny; ++i) y.push_back(Poly::variable(nx + i));

  const bool dual = kind == CauchyKind::dual || kind == CauchyKind::dual_stembridge;
  const bool stem = kind == CauchyKind::stembridge || kind == CauchyKind::dual_stembridge;

  Poly lhs;
  Poly rhs;
  for (int d = 0; d <= degree; ++d) {
    for (const auto& lambda : enumerate_partitions(d)) {
      // Schur side.
      const Partition xshape = dual ? lambda.conjugate() : lambda;
      Poly sx = schur_by_tableaux<Poly>(xshape, x);
      if (!sx.is_zero()) {
        if (kind == CauchyKind::extended) {
          lhs += sx * eval_extended_schur(lambda, params);
        } else if (stem) {
          lhs += sx * stembridge_S<Poly>(lambda, y);
        } else {
          lhs += sx * schur_by_tableaux<Poly>(lambda, y);
        }
      }

      // Power-sum side.
      if (stem && !lambda.all_parts_odd()) continue;
      Rational weight = Rational(1) / Rational(lambda.z());
      if (dual) weight *= lambda.epsilon();
      if (stem) weight *= Rational(pow(Integer(2), static_cast<unsigned>(lambda.length())));
      Poly px = power_sum<Poly>(lambda, x);
      if (px.is_zero()) continue;
      if (kind == CauchyKind::extended) {
        rhs += px * (weight * extended_power_sum(lambda, params));
      } else {
        rhs += px * power_sum<Poly>(lambda, y) * weight;
      }
    }
  }
  return lhs - rhs;
}

bool check_cauchy_identity(CauchyKind kind, int degree, int nx, int ny, const ParamVector& params) {
  return cauchy_difference(kind, degree, nx, ny, params).is_zero();
}

}  // namespace symshuffle
