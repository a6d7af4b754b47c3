// mplab: exact and sampled moment polytopes for CP1 x CP1.
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mplab/io.hpp"
#include "mplab/momentpoly.hpp"
#include "mplab/numlab.hpp"
#include "mplab/reps.hpp"
#include "mplab/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::vector<long> weights{2, 1};
  std::string point = "0/1,1/1;1/1,1/1";
  std::string gamma = "negation";
  std::uint64_t seed = 0;
  long r_max = 6;
  double eps = 0.05;
  long r = 1;
  long k = 0;
  long weight = 0;
  bool table = false;
  std::string suite = "all";
  std::string subgroup = "H";
  std::size_t n = 1000;
  std::string input;
  std::string output;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_weights(CLI::App* sub, Options& o) {
  sub->add_option("--weights", o.weights, "lambda1 lambda2 (positive integers)")->expected(2)->capture_default_str();
}
void add_point(CLI::App* sub, Options& o) {
  sub->add_option("--point", o.point, "flag point literal, e.g. \"0/1,1/1;1/1,1/1\"")->capture_default_str();
}
void add_gamma(CLI::App* sub, Options& o) {
  sub->add_option("--gamma", o.gamma, "negation | identity | matrix literal such as [[-1]]")->capture_default_str();
}
void add_seed(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "RNG seed")->envname("MPLAB_SEED")->capture_default_str();
}
void add_r(CLI::App* sub, Options& o) {
  sub->add_option("--r", o.r, "tensor power r >= 1")->capture_default_str();
}

std::pair<long, long> weights_of(const Options& o) {
  if (o.weights.size() != 2 || o.weights[0] < 1 || o.weights[1] < 1)
    throw UsageError("--weights needs two positive integers");
  return {o.weights[0], o.weights[1]};
}

mplab::SectionSpaceSpec spec_of(const Options& o) {
  const auto [l1, l2] = weights_of(o);
  if (o.r < 1) throw UsageError("--r must be positive");
  return {o.r, l1, l2};
}

std::string interval_text(const mplab::RationalPolytope& p) {
  if (p.is_empty()) return "empty";
  const auto& v = p.vertices();
  if (v.size() == 1) return "{" + mplab::to_string(v.front()[0]) + "}";
  return "[" + mplab::to_string(v.front()[0]) + ", " + mplab::to_string(v.back()[0]) + "]";
}

int cmd_polytope(const Options& o) {
  const auto [l1, l2] = weights_of(o);
  const mplab::FlagPoint x = mplab::parse_flag_point(o.point);
  const mplab::RationalPolytope delta = mplab::moment_polytope(x, l1, l2);
  if (!o.table) {
    std::cout << mplab::polytope_to_json(delta).dump() << "\n";
    return kOk;
  }
  // Membership of each candidate weight l1 + l2 - 2k/r, r <= r_max, in C(X).
  std::cout << "point " << mplab::to_string(x) << "  class " << mplab::to_string(mplab::classify_borel_orbit_closure(x))
            << "\n";
  std::cout << "lambda        member  witness r\n";
  std::map<mplab::Rational, mplab::MembershipResult> rows;
  for (long r = 1; r <= o.r_max; ++r)
    for (long k = 0; k <= r * std::min(l1, l2); ++k) {
      const mplab::Rational lambda = mplab::Rational(r * (l1 + l2) - 2 * k, r);
      if (!rows.count(lambda)) rows.emplace(lambda, mplab::membership_in_C(x, l1, l2, lambda));
    }
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    std::ostringstream line;
    line << std::left << std::setw(14) << mplab::to_string(it->first) << std::setw(8)
         << (it->second.member ? "yes" : "no") << (it->second.witness_r ? std::to_string(*it->second.witness_r) : "-");
    std::cout << line.str() << "\n";
  }
  const mplab::RationalPolytope from_c = mplab::highest_weight_polytope(x, l1, l2, o.r_max);
  const bool agree = mplab::equals(from_c, delta);
  std::cout << "Delta(X)      " << interval_text(delta) << "\n";
  std::cout << "hull C(X)     " << interval_text(from_c) << (agree ? "  (agrees)" : "  (DISAGREES)") << "\n";
  return agree ? kOk : kCheckFailed;
}

int cmd_realpolytope(const Options& o) {
  const auto [l1, l2] = weights_of(o);
  const mplab::RealFormCase rc(mplab::parse_flag_point(o.point), mplab::parse_involution(o.gamma));
  const mplab::RationalPolytope by_intersection =
      mplab::intersect_subspace(mplab::moment_polytope(rc.point(), l1, l2), rc.q_star());
  const mplab::RationalPolytope by_weights = mplab::gamma_highest_weight_polytope(rc, l1, l2, o.r_max);
  const bool equal = mplab::equals(by_intersection, by_weights);
  json out{{"intersection", mplab::polytope_to_json(by_intersection)},
           {"highest_weight", mplab::polytope_to_json(by_weights)},
           {"equal", equal}};
  std::cout << out.dump() << "\n";
  std::cerr << "Delta(X) cap q* = " << interval_text(by_intersection) << ", C_gamma hull = "
            << interval_text(by_weights) << (equal ? ": equal" : ": NOT EQUAL") << "\n";
  return equal ? kOk : kCheckFailed;
}

int cmd_catalog(const Options& o) {
  const auto [l1, l2] = weights_of(o);
  const auto cat = mplab::enumerate_polytope_catalog(l1, l2, mplab::parse_involution(o.gamma));
  json list = json::array();
  for (const auto& p : cat) list.push_back(mplab::polytope_to_json(p));
  std::cout << json{{"weights", {l1, l2}}, {"gamma", o.gamma}, {"count", cat.size()}, {"polytopes", list}}.dump()
            << "\n";
  return kOk;
}

int cmd_decompose(const Options& o) {
  const mplab::SectionSpaceSpec spec = spec_of(o);
  json parts = json::array();
  long total = 0;
  for (long w : mplab::clebsch_gordan_highest_weights(spec)) {
    parts.push_back({{"highest_weight", w}, {"dim", w + 1}});
    total += w + 1;
  }
  const long dim = mplab::section_space_dim(spec);
  std::cout << json{{"r", spec.r},
                    {"weights", {spec.lambda1, spec.lambda2}},
                    {"components", parts},
                    {"total_dim", total},
                    {"section_space_dim", dim}}
                   .dump()
            << "\n";
  return total == dim ? kOk : kCheckFailed;
}

int cmd_hwv(const Options& o) {
  const mplab::SectionSpaceSpec spec = spec_of(o);
  if (o.k < 0 || o.k > spec.max_k()) throw UsageError("--k must lie in [0, " + std::to_string(spec.max_k()) + "]");
  const mplab::BiHomogPoly sum = mplab::hwv_sum_form(spec, o.k);
  const mplab::BiHomogPoly prod = mplab::hwv_product_form(spec, o.k);
  const bool same = sum == prod;
  const bool invariant = mplab::verify_n_invariance(sum);
  std::cout << "sum form:     " << mplab::to_string(sum) << "\n"
            << "product form: " << mplab::to_string(prod) << "\n"
            << "forms agree:  " << (same ? "yes" : "no") << "\n"
            << "N-invariant:  " << (invariant ? "yes" : "no") << "\n"
            << "torus weight: " << spec.weight_of(o.k) << "\n";
  return same && invariant ? kOk : kCheckFailed;
}

int cmd_oracle(const Options& o) {
  const mplab::SectionSpaceSpec spec = spec_of(o);
  const auto basis = mplab::n_invariant_subspace(spec, o.weight);
  std::cout << "dim " << basis.size() << "\n";
  for (const auto& f : basis) std::cout << mplab::to_string(f) << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto results = mplab::run_suite(o.suite, o.seed);
  const json report = mplab::report_json(o.suite, o.seed, results);
  std::cout << report.dump(2) << "\n";
  for (const auto& r : results)
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.name << ": " << r.detail << "\n";
  return report["passed"].get<bool>() ? kOk : kCheckFailed;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw UsageError("cannot write " + o.output);
  f << text;
}

int cmd_sample(const Options& o) {
  const auto [l1, l2] = weights_of(o);
  if (o.n < 1) throw UsageError("--n must be positive");
  const mplab::SampleSet s = mplab::sample_orbit(mplab::to_float(mplab::parse_flag_point(o.point)),
                                                 mplab::parse_subgroup(o.subgroup), o.n, o.seed,
                                                 static_cast<double>(l1), static_cast<double>(l2));
  std::ostringstream os;
  mplab::write_samples_csv(os, s);
  emit(o, os.str());
  const auto show = [](const std::optional<mplab::Interval>& i) {
    std::ostringstream t;
    if (i) t << "[" << i->lo << ", " << i->hi << "]";
    else t << "empty";
    return t.str();
  };
  std::cerr << "radial " << show(mplab::sampled_delta(s, mplab::DeltaMode::radial())) << ", angular(eps=" << o.eps
            << ") " << show(mplab::sampled_delta(s, mplab::DeltaMode::angular_filter(o.eps))) << "\n";
  return kOk;
}

// Accepts a single polytope document, a catalog document, or a realpolytope
// document.
std::vector<mplab::LabeledPolytope> polytopes_in(const json& doc) {
  std::vector<mplab::LabeledPolytope> rows;
  if (doc.contains("polytopes")) {
    std::size_t i = 0;
    for (const auto& p : doc.at("polytopes")) rows.push_back({"#" + std::to_string(i++), mplab::polytope_from_json(p)});
  } else if (doc.contains("intersection")) {
    rows.push_back({"Delta(X) cap q*", mplab::polytope_from_json(doc.at("intersection"))});
    rows.push_back({"C_gamma hull", mplab::polytope_from_json(doc.at("highest_weight"))});
  } else {
    rows.push_back({"Delta", mplab::polytope_from_json(doc)});
  }
  return rows;
}

int cmd_plot(const Options& o) {
  std::ifstream f(o.input);
  if (!f) throw UsageError("cannot read " + o.input);
  const bool is_csv = o.input.size() >= 4 && o.input.compare(o.input.size() - 4, 4, ".csv") == 0;
  if (is_csv) {
    emit(o, mplab::render_samples_svg(mplab::read_samples_csv(f)));
    return kOk;
  }
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::exception& e) {
    throw mplab::ParseError(std::string("bad JSON input: ") + e.what());
  }
  emit(o, mplab::render_polytopes_svg(polytopes_in(doc)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and sampled moment polytopes for diagonal SU(2) on CP1 x CP1"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file mirroring the flags; command-line flags win");
  Options o;

  auto* polytope = app.add_subcommand("polytope", "exact Delta(X); --table adds the C(X) membership table");
  add_weights(polytope, o);
  add_point(polytope, o);
  polytope->add_option("--r-max", o.r_max, "largest r for membership witnesses")->capture_default_str();
  polytope->add_flag("--table", o.table, "print the membership table instead of JSON");

  auto* real = app.add_subcommand("realpolytope", "Delta(Y) by both routes with an equality verdict");
  add_weights(real, o);
  add_point(real, o);
  add_gamma(real, o);
  real->add_option("--r-max", o.r_max, "largest r in the highest-weight route")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "distinct Delta(Y) over the Borel-orbit classes");
  add_weights(catalog, o);
  add_gamma(catalog, o);

  auto* decompose = app.add_subcommand("decompose", "Clebsch-Gordan highest weights and dimensions");
  add_weights(decompose, o);
  add_r(decompose, o);

  auto* hwv = app.add_subcommand("hwv", "print F_{r,k} in both closed forms");
  add_weights(hwv, o);
  add_r(hwv, o);
  hwv->add_option("--k", o.k, "index 0 <= k <= r min(lambda1, lambda2)")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "basis of N-invariant sections of a given torus weight");
  add_weights(oracle, o);
  add_r(oracle, o);
  oracle->add_option("--weight", o.weight, "torus weight")->required();

  auto* verify = app.add_subcommand("verify", "run an acceptance suite; JSON report on stdout");
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"section5", "lagrangian", "coadjoint", "gradcheck", "all"}))
      ->capture_default_str();
  add_seed(verify, o);

  auto* sample = app.add_subcommand("sample", "sample a subgroup orbit, CSV output");
  add_weights(sample, o);
  add_point(sample, o);
  add_seed(sample, o);
  sample->add_option("--subgroup", o.subgroup, "B | H | G | G'")->capture_default_str();
  sample->add_option("--n", o.n, "number of samples")->capture_default_str();
  sample->add_option("--eps", o.eps, "angular filter width (radians)")->capture_default_str();
  sample->add_option("-o,--output", o.output, "write to file instead of stdout");

  auto* plot = app.add_subcommand("plot", "render SVG from a polytope JSON or sample CSV");
  plot->add_option("input", o.input, "JSON or .csv artifact")->required();
  plot->add_option("-o,--output", o.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*polytope) return cmd_polytope(o);
    if (*real) return cmd_realpolytope(o);
    if (*catalog) return cmd_catalog(o);
    if (*decompose) return cmd_decompose(o);
    if (*hwv) return cmd_hwv(o);
    if (*oracle) return cmd_oracle(o);
    if (*verify) return cmd_verify(o);
    if (*sample) return cmd_sample(o);
    if (*plot) return cmd_plot(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
