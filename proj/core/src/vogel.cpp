#include "vogelcas/vogel.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace vogelcas {

namespace {

struct FamilyInfo {
  Family family;
  const char* prefix;
  int min_rank;
};

constexpr FamilyInfo kClassical[] = {
    {Family::A, "A", 1}, {Family::B, "B", 2}, {Family::C, "C", 2}, {Family::D, "D", 4}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw std::invalid_argument("bad integer in algebra id '" + std::string(context) + "'");
  return value;
}

std::pair<int, int> parse_pair(std::string_view args, std::string_view context) {
  if (args.size() < 2 || args.front() != '(' || args.back() != ')')
    throw std::invalid_argument("expected '(a|b)' in '" + std::string(context) + "'");
  args = args.substr(1, args.size() - 2);
  const auto sep = args.find_first_of("|,");
  if (sep == std::string_view::npos)
    throw std::invalid_argument("expected '(a|b)' in '" + std::string(context) + "'");
  return {parse_int(args.substr(0, sep), context), parse_int(args.substr(sep + 1), context)};
}

Poly linear(long constant, long slope) { return Poly{Rational(constant), Rational(slope)}; }

}  // namespace

AlgebraId AlgebraId::simple(Family f, int rank) {
  AlgebraId id;
  id.family = f;
  id.rank = rank;
  id.validate();
  return id;
}

AlgebraId AlgebraId::sl_super(int m, int n) {
  AlgebraId id;
  id.family = Family::SLSuper;
  id.rank = 0;
  id.first = m;
  id.second = n;
  id.validate();
  return id;
}

AlgebraId AlgebraId::osp_super(int p, int q) {
  AlgebraId id;
  id.family = Family::OSPSuper;
  id.rank = 0;
  id.first = p;
  id.second = q;
  id.validate();
  return id;
}

AlgebraId AlgebraId::parse(std::string_view text) {
  const std::string s = lower(text);
  if (s.starts_with("sl(")) {
    auto [m, n] = parse_pair(std::string_view(s).substr(2), text);
    return sl_super(m, n);
  }
  if (s.starts_with("osp(")) {
    auto [p, q] = parse_pair(std::string_view(s).substr(3), text);
    return osp_super(p, q);
  }
  if (s.size() < 2) throw std::invalid_argument("unknown algebra '" + std::string(text) + "'");
  const int rank = parse_int(std::string_view(s).substr(1), text);
  switch (s[0]) {
    case 'a': return simple(Family::A, rank);
    case 'b': return simple(Family::B, rank);
    case 'c': return simple(Family::C, rank);
    case 'd': return simple(Family::D, rank);
    case 'g': return simple(Family::G2, rank);
    case 'f': return simple(Family::F4, rank);
    case 'e':
      if (rank == 6) return simple(Family::E6, rank);
      if (rank == 7) return simple(Family::E7, rank);
      if (rank == 8) return simple(Family::E8, rank);
      break;
    default: break;
  }
  throw std::invalid_argument("unknown algebra '" + std::string(text) + "'");
}

bool AlgebraId::is_exceptional() const {
  switch (family) {
    case Family::G2: case Family::F4: case Family::E6: case Family::E7: case Family::E8:
      return true;
    default:
      return false;
  }
}

void AlgebraId::validate() const {
  auto fail = [this](const std::string& why) {
    throw std::invalid_argument("invalid algebra id: " + why);
  };
  switch (family) {
    case Family::SLSuper: {
      const int d = first - second;
      if (first < 0 || second < 0) fail("negative sl(m|n) index");
      if (d == 0 || d == 1 || d == -1) fail("sl(m|n) requires m-n not in {0, 1, -1}");
      return;
    }
    case Family::OSPSuper: {
      const int d = first - second;
      if (first < 0 || second < 0) fail("negative osp(p|q) index");
      if (d == 0 || d == 1 || d == 2) fail("osp(p|q) requires p-q not in {0, 1, 2}");
      return;
    }
    case Family::G2: if (rank != 2) fail("G2 has rank 2"); return;
    case Family::F4: if (rank != 4) fail("F4 has rank 4"); return;
    case Family::E6: if (rank != 6) fail("E6 has rank 6"); return;
    case Family::E7: if (rank != 7) fail("E7 has rank 7"); return;
    case Family::E8: if (rank != 8) fail("E8 has rank 8"); return;
    default: break;
  }
  for (const auto& info : kClassical)
    if (info.family == family && rank < info.min_rank)
      fail(std::string(info.prefix) + "_n requires n >= " + std::to_string(info.min_rank));
}

std::string AlgebraId::label() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::SLSuper:
      return "sl(" + std::to_string(first) + "|" + std::to_string(second) + ")";
    case Family::OSPSuper:
      return "osp(" + std::to_string(first) + "|" + std::to_string(second) + ")";
  }
  return "?";
}

VogelPoint::VogelPoint(Rational alpha, Rational beta, Rational gamma)
    : params_{std::move(alpha), std::move(beta), std::move(gamma)} {
  if (params_[0].is_zero() && params_[1].is_zero() && params_[2].is_zero())
    throw std::invalid_argument("VogelPoint: all parameters are zero");
}

VogelPoint VogelPoint::parse(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3)
    throw std::invalid_argument("expected three comma-separated parameters, got '" +
                                std::string(text) + "'");
  return VogelPoint(parts[0], parts[1], parts[2]);
}

VogelInvariants VogelPoint::invariants() const {
  const auto& [a, b, c] = params_;
  VogelInvariants inv{a + b + c, a * a + b * b + c * c, pow(a, 3) + pow(b, 3) + pow(c, 3),
                      a * b + b * c + a * c, a * b * c};
  // Newton identities tie the power sums to the elementary functions.
  if (inv.t * inv.t != inv.t2 + Rational(2) * inv.s ||
      inv.t3 != pow(inv.t, 3) - Rational(3) * inv.t * inv.s + Rational(3) * inv.p)
    throw std::logic_error("VogelInvariants: Newton identity violated");
  return inv;
}

bool VogelPoint::has_repeated() const {
  return params_[0] == params_[1] || params_[1] == params_[2] || params_[0] == params_[2];
}

bool VogelPoint::has_zero() const {
  return params_[0].is_zero() || params_[1].is_zero() || params_[2].is_zero();
}

VogelPoint VogelPoint::scaled(const Rational& lambda) const {
  return {params_[0] * lambda, params_[1] * lambda, params_[2] * lambda};
}

VogelPoint VogelPoint::permuted(const std::array<int, 3>& perm) const {
  return {params_.at(static_cast<std::size_t>(perm[0])),
          params_.at(static_cast<std::size_t>(perm[1])),
          params_.at(static_cast<std::size_t>(perm[2]))};
}

std::string VogelPoint::str() const {
  return "(" + params_[0].str() + ", " + params_[1].str() + ", " + params_[2].str() + ")";
}

VogelPoint canonicalize(const VogelPoint& v) {
  mpz_class l = 1;
  for (const auto& x : v.params()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::array<mpz_class, 3> ints;
  mpz_class g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    ints[i] = v.params()[i].num() * (l / v.params()[i].den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  for (auto& x : ints) x /= g;

  auto sorted = [](std::array<mpz_class, 3> a) {
    std::sort(a.begin(), a.end());
    return a;
  };
  const mpz_class t = ints[0] + ints[1] + ints[2];
  std::array<mpz_class, 3> pos = sorted(ints);
  std::array<mpz_class, 3> neg = sorted({-ints[0], -ints[1], -ints[2]});
  std::array<mpz_class, 3> pick;
  if (t > 0) pick = pos;
  else if (t < 0) pick = neg;
  else pick = std::lexicographical_compare(pos.begin(), pos.end(), neg.begin(), neg.end()) ? neg : pos;
  return {Rational(pick[0]), Rational(pick[1]), Rational(pick[2])};
}

bool equivalent(const VogelPoint& a, const VogelPoint& b) {
  return canonicalize(a) == canonicalize(b);
}

Rational dim_g(const VogelPoint& v) {
  if (v.has_zero()) throw std::domain_error("dim_g: pole at a zero parameter " + v.str());
  const Rational two_t = Rational(2) * v.t();
  return (v.alpha() - two_t) * (v.beta() - two_t) * (v.gamma() - two_t) /
         (v.alpha() * v.beta() * v.gamma());
}

VogelPoint FamilyLine::at(const Rational& x) const {
  return {alpha.eval(x), beta.eval(x), gamma.eval(x)};
}

RatFun FamilyLine::dimension() const {
  const Poly two_t = Rational(2) * (alpha + beta + gamma);
  return RatFun((alpha - two_t) * (beta - two_t) * (gamma - two_t), alpha * beta * gamma);
}

FamilyLine family_line(Family f) {
  const Poly m2(-2);
  switch (f) {
    case Family::A: return {"n", m2, Poly(2), linear(1, 1)};
    case Family::B: return {"n", m2, Poly(4), linear(-3, 2)};
    case Family::C: return {"n", m2, Poly(1), linear(2, 1)};
    case Family::D: return {"n", m2, Poly(4), linear(-4, 2)};
    case Family::G2: return {"n", m2, Poly(Rational(10, 3)), Poly(Rational(8, 3))};
    case Family::F4: return {"n", m2, Poly(5), Poly(6)};
    case Family::E6: return {"n", m2, Poly(6), Poly(8)};
    case Family::E7: return {"n", m2, Poly(8), Poly(12)};
    case Family::E8: return {"n", m2, Poly(12), Poly(20)};
    case Family::SLSuper: return {"(m-n)", m2, Poly(2), linear(0, 1)};
    case Family::OSPSuper: return {"(p-q)", m2, Poly(4), linear(-4, 1)};
  }
  throw std::logic_error("family_line: unknown family");
}

Rational family_parameter(const AlgebraId& id) {
  if (id.is_super()) return Rational(id.first - id.second);
  return Rational(id.rank);
}

VogelPoint lookup(const AlgebraId& id) {
  id.validate();
  return family_line(id.family).at(family_parameter(id));
}

Rational dimension(const AlgebraId& id) {
  id.validate();
  const VogelPoint v = lookup(id);
  if (!v.has_zero()) return dim_g(v);
  return family_line(id.family).dimension().eval(family_parameter(id));
}

namespace {

CatalogRow line_row(std::string family, Family f, bool with_dim) {
  const FamilyLine line = family_line(f);
  CatalogRow row;
  row.family = std::move(family);
  row.alpha = line.alpha.str(line.variable);
  row.beta = line.beta.str(line.variable);
  row.gamma = line.gamma.str(line.variable);
  row.t = (line.alpha + line.beta + line.gamma).str(line.variable);
  if (with_dim) {
    const RatFun d = line.dimension();
    row.dim = d.str(line.variable);
  }
  return row;
}

CatalogRow point_row(std::string family, const VogelPoint& v, RowStatus status, std::string note) {
  CatalogRow row;
  row.family = std::move(family);
  row.alpha = v.alpha().str();
  row.beta = v.beta().str();
  row.gamma = v.gamma().str();
  row.t = v.t().str();
  row.status = status;
  row.note = std::move(note);
  return row;
}

}  // namespace

std::vector<CatalogRow> simple_catalog() {
  std::vector<CatalogRow> rows;
  rows.push_back(line_row("A_n", Family::A, true));
  rows.push_back(line_row("B_n", Family::B, true));
  rows.push_back(line_row("C_n", Family::C, true));
  rows.push_back(line_row("D_n", Family::D, true));
  for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
    const AlgebraId id = AlgebraId::parse(name);
    rows.push_back(point_row(name, lookup(id), RowStatus::Ok, ""));
    rows.back().dim = dimension(id).str();
  }
  return rows;
}

std::vector<CatalogRow> super_catalog() {
  std::vector<CatalogRow> rows;
  rows.push_back(line_row("sl(m|n)", Family::SLSuper, false));
  rows.back().note = "m-n not in {0, 1, -1}";
  rows.push_back(line_row("osp(p|q)", Family::OSPSuper, false));
  rows.back().note = "p-q not in {0, 1, 2}";
  rows.push_back(point_row("f4", VogelPoint(-2, 2, 3), RowStatus::Alias, "alias of sl3"));
  rows.push_back(point_row("g3", VogelPoint(-2, 2, 2), RowStatus::Alias, "alias of sl2"));
  CatalogRow d21;
  d21.family = "D(2|1;lambda)";
  d21.alpha = "lambda1";
  d21.beta = "lambda2";
  d21.gamma = "lambda3";
  d21.t = "0";
  d21.status = RowStatus::Excluded;
  d21.note = "excluded: t = 0";
  rows.push_back(std::move(d21));
  return rows;
}

std::vector<AlgebraId> default_suite() {
  std::vector<AlgebraId> out;
  for (int n = 1; n <= 8; ++n) out.push_back(AlgebraId::simple(Family::A, n));
  for (int n = 2; n <= 8; ++n) out.push_back(AlgebraId::simple(Family::B, n));
  for (int n = 2; n <= 8; ++n) out.push_back(AlgebraId::simple(Family::C, n));
  for (int n = 4; n <= 8; ++n) out.push_back(AlgebraId::simple(Family::D, n));
  out.push_back(AlgebraId::simple(Family::G2, 2));
  out.push_back(AlgebraId::simple(Family::F4, 4));
  out.push_back(AlgebraId::simple(Family::E6, 6));
  out.push_back(AlgebraId::simple(Family::E7, 7));
  out.push_back(AlgebraId::simple(Family::E8, 8));
  return out;
}

}  // namespace vogelcas
