#include "vogelcas/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>

#include "vogelcas/universal.hpp"

namespace vogelcas {

Rational root_power_sum(const RootSystem& rs, int power) {
  const Rational inv = Rational(1) / (Rational(2) * rs.dual_coxeter());
  const Vec shifted = rs.theta() + rs.rho();
  Rational sum;
  for (const Vec& mu : rs.roots())
    sum += pow(rs.b_form(shifted, mu) * inv, power) - pow(rs.b_form(rs.rho(), mu) * inv, power);
  return sum;
}

Rational c_hat_root(const RootSystem& rs, int k) { return root_power_sum(rs, 2 * k); }

RatFun f_b_product(const RootSystem& rs) {
  // Multisets of squared pairings; equal entries cancel between top and bottom.
  std::map<Rational, int> count;
  const Vec shifted = rs.theta() + rs.rho();
  for (const Vec& mu : rs.positive_roots()) {
    ++count[pow(rs.b_form(shifted, mu), 2)];
    --count[pow(rs.b_form(rs.rho(), mu), 2)];
  }
  Poly num(1), den(1);
  for (const auto& [a, c] : count) {
    const Poly factor{Rational(1), -a};
    for (int i = 0; i < c; ++i) num *= factor;
    for (int i = 0; i < -c; ++i) den *= factor;
  }
  return RatFun(num, den);
}

RatFun f_b_universal(const VogelPoint& v) {
  const Rational two_t = Rational(2) * v.t();
  Poly num(1), den(1);
  for (const Rational& x : v.params()) {
    num *= Poly{Rational(4), -pow(two_t - x, 2)};
    den *= Poly{Rational(4), -pow(x, 2)};
  }
  return RatFun(num, den);
}

bool check_prop1(const RootSystem& rs, const VogelPoint& v) {
  return f_b_product(rs) == f_b_universal(v);
}

LemmaSides lemma_ratio(const RootSystem& rs, const VogelPoint& v, int m) {
  if (m < 1) throw std::invalid_argument("lemma_ratio: m must be positive");
  if (v.has_zero()) throw std::domain_error("lemma_ratio: zero parameter at " + v.str());
  const Vec shifted = rs.theta() + rs.rho();
  LemmaSides out{Rational(1), Rational(1)};
  for (const Vec& mu : rs.positive_roots())
    out.lhs *= pow(rs.b_form(mu, shifted) / rs.b_form(mu, rs.rho()), m);
  const Rational two_t = Rational(2) * v.t();
  for (const Rational& x : v.params()) out.rhs *= pow((x - two_t) / x, m);
  return out;
}

bool check_thm2(const RootSystem& rs, const VogelPoint& v, int max_k) {
  const auto coeffs = series_expand(c_hat_genfun(v), static_cast<std::size_t>(max_k));
  for (int k = 1; k <= max_k; ++k)
    if (c_hat_root(rs, k) != coeffs[static_cast<std::size_t>(k)]) return false;
  return true;
}

bool check_thm1(const VogelPoint& v) { return c_genfun(v) == adjoint_square_genfun(v); }

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

Check scalar_check(std::string name, const Rational& lhs, const Rational& rhs) {
  return {std::move(name), lhs == rhs, lhs.str(), rhs.str()};
}

// Runs one check body; a thrown exception becomes a failed check.
template <typename Body>
void run_check(std::vector<Check>& out, const std::string& name, Body&& body) {
  try {
    out.push_back(body());
  } catch (const std::exception& e) {
    out.push_back({name, false, "error", e.what()});
  }
}

// n for so(n): B_r -> 2r+1, D_r -> 2r.
std::optional<long> orthogonal_n(const AlgebraId& id) {
  if (id.family == Family::B) return 2L * id.rank + 1;
  if (id.family == Family::D) return 2L * id.rank;
  return std::nullopt;
}

}  // namespace

VerificationReport verify_algebra(const AlgebraId& id, int max_k) {
  return verify_algebra(id, lookup(id), max_k);
}

VerificationReport verify_algebra(const AlgebraId& id, const VogelPoint& v, int max_k) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report{id, v, {}, {}};
  auto& checks = report.checks;
  const RootSystem rs = RootSystem::build(id);

  run_check(checks, "prop1", [&] {
    const RatFun lhs = f_b_product(rs);
    const RatFun rhs = f_b_universal(v);
    return Check{"prop1", lhs == rhs, lhs.str(), rhs.str()};
  });
  for (int m = 1; m <= 6; ++m) {
    const std::string name = "lemma_m" + std::to_string(m);
    run_check(checks, name, [&] {
      const LemmaSides sides = lemma_ratio(rs, v, m);
      return scalar_check(name, sides.lhs, sides.rhs);
    });
  }
  run_check(checks, "thm1", [&] {
    const RatFun lhs = c_genfun(v);
    const RatFun rhs = adjoint_square_genfun(v);
    return Check{"thm1", lhs == rhs, lhs.str(), rhs.str()};
  });
  std::vector<Rational> universal;
  try {
    universal = series_expand(c_hat_genfun(v), static_cast<std::size_t>(std::max(max_k, 0)));
  } catch (const std::exception&) {
  }
  for (int k = 1; k <= max_k; ++k) {
    const std::string name = "thm2_k" + std::to_string(k);
    run_check(checks, name, [&] {
      if (universal.empty()) throw std::domain_error("universal side undefined at " + v.str());
      return scalar_check(name, c_hat_root(rs, k), universal[static_cast<std::size_t>(k)]);
    });
  }
  run_check(checks, "dims", [&] {
    const Rational universal_dim = dim_g(v);
    const Rational counted(static_cast<long>(rs.roots().size() + rs.rank()));
    const Rational weyl = rs.weyl_adjoint_dim();
    return Check{"dims", universal_dim == counted && counted == weyl,
                 "dim_g=" + universal_dim.str(),
                 "|R|+rank=" + counted.str() + ", weyl=" + weyl.str()};
  });
  run_check(checks, "hdual", [&] { return scalar_check("hdual", rs.dual_coxeter(), v.t()); });
  run_check(checks, "killing", [&] {
    const Rational two_h = Rational(2) * rs.dual_coxeter();
    const auto simple = rs.simple_roots();
    for (std::size_t i = 0; i < simple.size(); ++i)
      for (std::size_t j = i; j < simple.size(); ++j) {
        Rational sum;
        for (const Vec& mu : rs.roots()) sum += rs.b_form(simple[i], mu) * rs.b_form(simple[j], mu);
        const Rational expected = two_h * rs.b_form(simple[i], simple[j]);
        if (sum != expected) {
          const std::string where = " at (a" + std::to_string(i + 1) + ",a" + std::to_string(j + 1) + ")";
          return Check{"killing", false, sum.str() + where, expected.str() + where};
        }
      }
    const std::size_t pairs = simple.size() * (simple.size() + 1) / 2;
    const std::string tag = "all " + std::to_string(pairs) + " simple pairs";
    return Check{"killing", true, tag, tag};
  });
  run_check(checks, "limits", [&] {
    const Rational dim = dim_g(v);
    const Rational f_inf = limit_at_infinity(f_b_product(rs));
    const Rational c_inf = limit_at_infinity(c_genfun(v));
    const Rational half_excess = (dim - Rational(3)) / Rational(2);
    return Check{"limits", f_inf == dim * dim && c_inf == half_excess,
                 "F(inf)=" + f_inf.str() + ", C(inf)=" + c_inf.str(),
                 "dim^2=" + (dim * dim).str() + ", (dim-3)/2=" + half_excess.str()};
  });
  if (const auto n = orthogonal_n(id)) {
    run_check(checks, "so_n_quartic", [&] {
      const VogelInvariants inv = v.invariants();
      const Rational x(*n);
      const Rational quartic = (Rational(3) * inv.t * inv.t2 - inv.t3) / Rational(2);
      const Rational sym = Rational(9) * inv.t * inv.t2 - Rational(3) * inv.t3 - Rational(4) * pow(inv.t, 3);
      const Rational quartic_n = pow(x, 3) - Rational(9) * x * x + Rational(54) * x - Rational(104);
      const Rational sym_n = Rational(2) * (pow(x, 3) - Rational(15) * x * x + Rational(138) * x - Rational(296));
      return Check{"so_n_quartic", quartic == quartic_n && sym == sym_n,
                   quartic.str() + "; " + sym.str(), quartic_n.str() + "; " + sym_n.str()};
    });
  }
  if (!v.has_repeated()) {
    run_check(checks, "y2_sum", [&] {
      const DecompositionData d = decomposition(v);
      const Rational total = Rational(1) + d.dim_y2_alpha + d.dim_y2_beta + d.dim_y2_gamma;
      const Rational sym_square = d.dim * (d.dim + Rational(1)) / Rational(2);
      bool ok = total == sym_square && d.dim_x2 == d.dim * (d.dim - Rational(3)) / Rational(2);
      for (const Rational& y : {d.dim_y2_alpha, d.dim_y2_beta, d.dim_y2_gamma})
        ok = ok && y.is_integer() && y.sign() >= 0;
      return Check{"y2_sum", ok,
                   "1+" + d.dim_y2_alpha.str() + "+" + d.dim_y2_beta.str() + "+" +
                       d.dim_y2_gamma.str() + "=" + total.str(),
                   "dim(dim+1)/2=" + sym_square.str()};
    });
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<VerificationReport> verify_all(std::span<const AlgebraId> suite, int max_k,
                                           unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(suite.size(), 1)));
  std::vector<std::optional<VerificationReport>> slots(suite.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = next++; i < suite.size(); i = next++) slots[i] = verify_algebra(suite[i], max_k);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<VerificationReport> out;
  out.reserve(suite.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace vogelcas
