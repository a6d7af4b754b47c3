#include "mplab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mplab/exactlin.hpp"
#include "mplab/io.hpp"
#include "mplab/momentpoly.hpp"
#include "mplab/numlab.hpp"
#include "mplab/reps.hpp"

namespace mplab {

namespace {

using namespace acceptance;

std::string fixed(double x, int digits = 6) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

std::string show(const RationalPolytope& p) { return polytope_to_json(p).dump(); }

// Extra exact points per class, including non-real ones.
std::vector<FlagPoint> points_of(OrbitClass c) {
  using G = GaussianRational;
  std::vector<FlagPoint> pts{representative(c)};
  switch (c) {
    case OrbitClass::Dense:
      pts.emplace_back(G(2), G(3), G(1), G(-1));
      pts.emplace_back(G(1, 1), G(1), G(0, 1), G(Rational(1, 2)));
      break;
    case OrbitClass::Diagonal:
      pts.emplace_back(G(2), G(3), G(4), G(6));
      pts.emplace_back(G(0, 1), G(1), G(-1), G(0, 1));
      break;
    case OrbitClass::FirstFactor:
      pts.emplace_back(G(5), G(-2), G(Rational(1, 3)), G(0));
      pts.emplace_back(G(1, -1), G(0, 2), G(0, 1), G(0));
      break;
    case OrbitClass::SecondFactor:
      pts.emplace_back(G(-4), G(0), G(1), G(7));
      pts.emplace_back(G(0, 3), G(0), G(1, 1), G(2));
      break;
    case OrbitClass::Point:
      pts.emplace_back(G(3), G(0), G(-2), G(0));
      pts.emplace_back(G(1, 1), G(0), G(0, 1), G(0));
      break;
  }
  return pts;
}

// The table of Borel-orbit-closure polytopes, written out independently of
// moment_polytope.
RationalPolytope table_entry(OrbitClass c, long l1, long l2) {
  const auto seg = [](long lo, long hi) { return hull({RatVector{Rational(lo)}, RatVector{Rational(hi)}}); };
  switch (c) {
    case OrbitClass::Dense: return seg(std::labs(l1 - l2), l1 + l2);
    case OrbitClass::Diagonal: return seg(l1 + l2, l1 + l2);
    case OrbitClass::FirstFactor: return l1 >= l2 ? seg(l1 - l2, l1 - l2) : RationalPolytope::empty(1);
    case OrbitClass::SecondFactor: return l2 >= l1 ? seg(l2 - l1, l2 - l1) : RationalPolytope::empty(1);
    case OrbitClass::Point: return RationalPolytope::empty(1);
  }
  return RationalPolytope::empty(1);
}

}  // namespace

CheckResult check_orbit_polytope_table() {
  CheckResult res{"AC1", "Borel-orbit polytope table, exact", true, ""};
  std::size_t cases = 0;
  for (long l1 = 1; l1 <= kGridMax; ++l1)
    for (long l2 = 1; l2 <= kGridMax; ++l2)
      for (OrbitClass c : all_orbit_classes())
        for (const FlagPoint& x : points_of(c)) {
          ++cases;
          if (classify_borel_orbit_closure(x) != c) {
            res.passed = false;
            res.detail = to_string(x) + " misclassified";
            return res;
          }
          const RationalPolytope got = moment_polytope(x, l1, l2);
          const RationalPolytope want = table_entry(c, l1, l2);
          if (!equals(got, want)) {
            res.passed = false;
            res.detail = to_string(c) + " (" + std::to_string(l1) + "," + std::to_string(l2) + "): got " +
                         show(got) + ", want " + show(want);
            return res;
          }
        }
  res.detail = std::to_string(cases) + " cases match";
  return res;
}

CheckResult check_real_polytope_routes() {
  CheckResult res{"AC2", "Delta(Y) = Delta(X) cap q*, two routes agree", true, ""};
  const InvolutionSpec gamma = InvolutionSpec::negation(1);
  std::size_t cases = 0;
  for (long l1 = 1; l1 <= kGridMax; ++l1)
    for (long l2 = 1; l2 <= kGridMax; ++l2)
      for (OrbitClass c : all_orbit_classes())
        for (const FlagPoint& x : points_of(c)) {
          if (!x.is_real()) continue;
          const RealFormCase rc(x, gamma);
          const RationalPolytope by_polytope = intersect_subspace(moment_polytope(x, l1, l2), rc.q_star());
          const RationalPolytope by_weights = gamma_highest_weight_polytope(rc, l1, l2);
          ++cases;
          if (!equals(by_polytope, by_weights)) {
            res.passed = false;
            res.detail = to_string(x) + " (" + std::to_string(l1) + "," + std::to_string(l2) +
                         "): intersection route " + show(by_polytope) + " vs highest-weight route " + show(by_weights);
            return res;
          }
        }
  res.detail = std::to_string(cases) + " real cases agree";
  return res;
}

CheckResult check_clebsch_gordan_completeness() {
  CheckResult res{"AC3", "Clebsch-Gordan dimension count", true, ""};
  std::size_t cases = 0;
  for (long r = 1; r <= kGridMax; ++r)
    for (long l1 = 1; l1 <= kGridMax; ++l1)
      for (long l2 = 1; l2 <= kGridMax; ++l2) {
        const SectionSpaceSpec spec{r, l1, l2};
        long total = 0;
        for (long w : clebsch_gordan_highest_weights(spec)) total += w + 1;
        ++cases;
        if (total != section_space_dim(spec)) {
          res.passed = false;
          res.detail = "r=" + std::to_string(r) + " l=(" + std::to_string(l1) + "," + std::to_string(l2) +
                       "): " + std::to_string(total) + " != " + std::to_string(section_space_dim(spec));
          return res;
        }
      }
  res.detail = std::to_string(cases) + " identities hold";
  return res;
}

CheckResult check_hwv_oracle(std::uint64_t seed) {
  CheckResult res{"AC4", "N-invariant subspaces match F_{r,k}", true, ""};
  std::vector<std::pair<SectionSpaceSpec, long>> non_cg;
  std::size_t checked = 0;
  for (long r = 1; r <= kOracleMax; ++r)
    for (long l1 = 1; l1 <= kOracleMax; ++l1)
      for (long l2 = 1; l2 <= kOracleMax; ++l2) {
        const SectionSpaceSpec spec{r, l1, l2};
        const auto cg = clebsch_gordan_highest_weights(spec);
        for (long k = 0; k <= spec.max_k(); ++k) {
          const auto basis = n_invariant_subspace(spec, spec.weight_of(k));
          ++checked;
          if (basis.size() != 1 || !is_proportional(basis.front(), highest_weight_vector(spec, k))) {
            res.passed = false;
            res.detail = "r=" + std::to_string(r) + " l=(" + std::to_string(l1) + "," + std::to_string(l2) +
                         ") k=" + std::to_string(k) + ": oracle dimension " + std::to_string(basis.size());
            return res;
          }
        }
        const long top = spec.degree1() + spec.degree2() + 2;
        for (long w = -top; w <= top; ++w)
          if (std::find(cg.begin(), cg.end(), w) == cg.end()) non_cg.emplace_back(spec, w);
      }

  CounterRng rng(seed, 0xac4);
  std::shuffle(non_cg.begin(), non_cg.end(), rng);
  std::ostringstream picked;
  for (std::size_t i = 0; i < kNonCgWeights && i < non_cg.size(); ++i) {
    const auto& [spec, w] = non_cg[i];
    const auto basis = n_invariant_subspace(spec, w);
    if (!basis.empty()) {
      res.passed = false;
      res.detail = "non-CG weight " + std::to_string(w) + " has a " + std::to_string(basis.size()) +
                   "-dimensional N-invariant space";
      return res;
    }
    picked << (i ? " " : "") << "(" << spec.r << "," << spec.lambda1 << "," << spec.lambda2 << ":" << w << ")";
  }
  res.detail = std::to_string(checked) + " CG weights one-dimensional; non-CG weights empty: " + picked.str();
  return res;
}

CheckResult check_hwv_identities() {
  CheckResult res{"AC5", "F_{r,k}: N-invariance, torus weight, binomial identity", true, ""};
  std::size_t cases = 0;
  for (long r = 1; r <= kGridMax; ++r)
    for (long l1 = 1; l1 <= kGridMax; ++l1)
      for (long l2 = 1; l2 <= kGridMax; ++l2) {
        const SectionSpaceSpec spec{r, l1, l2};
        for (long k = 0; k <= spec.max_k(); ++k) {
          const BiHomogPoly sum = hwv_sum_form(spec, k);
          const BiHomogPoly prod = hwv_product_form(spec, k);
          ++cases;
          std::string why;
          if (sum != prod) why = "closed forms differ";
          else if (!verify_n_invariance(sum)) why = "not N-invariant";
          else if (torus_weight(sum) != spec.weight_of(k)) why = "wrong torus weight";
          if (!why.empty()) {
            res.passed = false;
            res.detail = "r=" + std::to_string(r) + " l=(" + std::to_string(l1) + "," + std::to_string(l2) +
                         ") k=" + std::to_string(k) + ": " + why;
            return res;
          }
        }
      }
  res.detail = std::to_string(cases) + " vectors verified";
  return res;
}

CheckResult check_lagrangian(std::uint64_t seed) {
  CheckResult res{"AC6", "fixed subspace of antisymplectic involution is Lagrangian", true, ""};
  for (std::size_t i = 0; i < kLagrangianCases; ++i) {
    const std::size_t dim = 2 + 2 * (i % 4);
    const std::uint64_t case_seed = splitmix64(seed + i);
    const LinearInvolution s = random_antisymplectic_involution(dim, case_seed);
    const SymplecticForm omega = SymplecticForm::standard(dim);
    if (!is_antisymplectic(s.matrix(), omega) || !is_lagrangian(fixed_subspace(s), omega)) {
      res.passed = false;
      res.detail = "case " + std::to_string(i) + " (dim " + std::to_string(dim) + ") failed";
      return res;
    }
  }
  res.detail = std::to_string(kLagrangianCases) + " involutions in dims 2-8";
  return res;
}

CheckResult check_coadjoint(std::uint64_t seed) {
  CheckResult res{"AC7", "coadjoint orbit cut by q* equals SO(2)-orbit", true, ""};
  std::ostringstream os;
  for (double lambda : {1.0, 2.0, 3.0}) {
    const double d = coadjoint_fixed_check(lambda, kCoadjointSamples, seed);
    const double neg = coadjoint_fixed_check(lambda, kCoadjointSamples, seed, CoadjointPlane::KStar);
    os << "lambda=" << lambda << ": d=" << fixed(d) << " control=" << fixed(neg) << "; ";
    if (!(d < kCoadjointTolerance) || !(neg > kCoadjointNegativeFloor)) res.passed = false;
  }
  res.detail = os.str();
  return res;
}

CheckResult check_numeric_exact_agreement(std::uint64_t seed) {
  CheckResult res{"AC8", "sampled Delta agrees with exact polytopes", true, ""};
  std::ostringstream os;
  auto endpoints_close = [](const std::optional<Interval>& got, const RationalPolytope& want, double tol) {
    if (!got || want.is_empty()) return false;
    const double lo = want.vertices().front()[0].convert_to<double>();
    const double hi = want.vertices().back()[0].convert_to<double>();
    return std::abs(got->lo - lo) < tol && std::abs(got->hi - hi) < tol;
  };
  auto describe = [](const std::optional<Interval>& i) {
    return i ? "[" + fixed(i->lo, 4) + ", " + fixed(i->hi, 4) + "]" : std::string("empty");
  };
  const InvolutionSpec gamma = InvolutionSpec::negation(1);

  struct Case {
    OrbitClass cls;
    long l1, l2;
    DeltaMode mode;
    double tol;
  };
  const Case cases[] = {{OrbitClass::Dense, 2, 1, DeltaMode::radial(), kRadialTolerance},
                        {OrbitClass::Diagonal, 2, 1, DeltaMode::radial(), kRadialTolerance},
                        {OrbitClass::FirstFactor, 3, 1, DeltaMode::angular_filter(kAngularEps), kAngularTolerance}};
  for (const auto& c : cases) {
    const FlagPoint x = representative(c.cls);
    const RationalPolytope exact = real_moment_polytope(RealFormCase(x, gamma), c.l1, c.l2);
    const SampleSet s = sample_orbit(to_float(x), Subgroup::H, kDeltaSamples, seed, static_cast<double>(c.l1),
                                     static_cast<double>(c.l2));
    const auto got = sampled_delta(s, c.mode);
    os << to_string(c.cls) << " (" << c.l1 << "," << c.l2 << "): sampled " << describe(got) << " exact "
       << show(exact) << "; ";
    if (!endpoints_close(got, exact, c.tol)) res.passed = false;
  }
  res.detail = os.str();
  return res;
}

CheckResult check_gradient_identity(std::uint64_t seed) {
  CheckResult res{"AC9", "gradient identity along b^sigma", true, ""};
  GradientIdentity gi;
  gi.calibrate();
  double worst = 0;
  std::size_t done = 0;
  for (std::uint64_t stream = 0; done < kGradientCases; ++stream) {
    CounterRng rng(seed, 0x9000 + stream);
    GradientCase c;
    for (auto& z : c.p.z) z = Complex(rng.normal(), rng.normal());
    c.xi = {Complex(rng.normal()), Complex(rng.normal()), Complex(0), Complex(0)};
    c.xi[3] = -c.xi[0];
    c.r = rng.uniform_int(1, 2);
    c.k = rng.uniform_int(0, std::min(2 * c.r, c.r));
    c.lambda1 = 2;
    c.lambda2 = 1;
    if (section_norm_squared(c.p.normalized(), c) < 1e-8) continue;
    worst = std::max(worst, gi.evaluate(c).residual);
    ++done;
  }
  res.passed = worst < kGradientTolerance;
  res.detail = "kappa=" + fixed(gi.constant()) + " (kappa/(-4pi)=" + fixed(gi.constant() / (-4 * std::numbers::pi)) +
               "), max residual " + fixed(worst, 10) + " over " + std::to_string(done) + " cases";
  return res;
}

CheckResult check_catalog() {
  CheckResult res{"AC10", "polytope catalog is finite", true, ""};
  for (const char* tag : {"negation", "identity"}) {
    const InvolutionSpec gamma = parse_involution(tag);
    for (long l1 = 1; l1 <= kGridMax; ++l1)
      for (long l2 = 1; l2 <= kGridMax; ++l2)
        if (enumerate_polytope_catalog(l1, l2, gamma).size() > kCatalogMax) {
          res.passed = false;
          res.detail = std::string(tag) + " (" + std::to_string(l1) + "," + std::to_string(l2) + ") exceeds 5";
          return res;
        }
  }
  std::vector<RationalPolytope> want{RationalPolytope::empty(1), RationalPolytope::interval(1, 3),
                                     RationalPolytope::point({Rational(3)}), RationalPolytope::point({Rational(1)})};
  std::sort(want.begin(), want.end());
  const auto got = enumerate_polytope_catalog(2, 1, InvolutionSpec::negation(1));
  if (got != want) {
    res.passed = false;
    res.detail = "catalog at (2,1) has " + std::to_string(got.size()) + " entries, expected {[1,3],{3},{1},empty}";
    return res;
  }
  res.detail = "<= 5 on the grid for negation and identity; (2,1) negation = {[1,3],{3},{1},empty}";
  return res;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (!all && suite != "section5" && suite != "lagrangian" && suite != "coadjoint" && suite != "gradcheck")
    throw std::invalid_argument("unknown suite '" + suite + "'");
  if (all || suite == "section5") {
    out.push_back(check_orbit_polytope_table());
    out.push_back(check_real_polytope_routes());
    out.push_back(check_clebsch_gordan_completeness());
    out.push_back(check_hwv_oracle(seed));
    out.push_back(check_hwv_identities());
  }
  if (all || suite == "lagrangian") out.push_back(check_lagrangian(seed));
  if (all || suite == "coadjoint") out.push_back(check_coadjoint(seed));
  if (all || suite == "section5") out.push_back(check_numeric_exact_agreement(seed));
  if (all || suite == "gradcheck") out.push_back(check_gradient_identity(seed));
  if (all || suite == "section5") out.push_back(check_catalog());
  return out;
}

nlohmann::json report_json(const std::string& suite, std::uint64_t seed, const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : results) {
    checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    ok = ok && r.passed;
  }
  return {{"suite", suite}, {"seed", seed}, {"checks", checks}, {"passed", ok}};
}

}  // namespace mplab
