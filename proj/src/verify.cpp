#include "hopfrt/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

#include "hopfrt/butcher.hpp"
#include "hopfrt/cm_model.hpp"
#include "hopfrt/errors.hpp"
#include "hopfrt/growth.hpp"
#include "hopfrt/hopf.hpp"

namespace hopfrt {

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : report_(r) {}

  void add(std::string relation, std::string instance, const CheckResult& c) {
    report_.results.push_back({std::move(relation), std::move(instance), c.ok, c.ok ? "" : c.mismatch});
  }
  void add(std::string relation, std::string instance, bool ok, std::string mismatch = "") {
    report_.results.push_back({std::move(relation), std::move(instance), ok, ok ? "" : std::move(mismatch)});
  }
  /// Runs `f`, turning exceptions into a failed result.
  template <class F>
  void run(const std::string& relation, const std::string& instance, F&& f) {
    try {
      add(relation, instance, f());
    } catch (const std::exception& e) {
      add(relation, instance, false, std::string("error: ") + e.what());
    }
  }

 private:
  VerifyReport& report_;
};

CheckResult equal(const LinComb& lhs, const LinComb& rhs) {
  if (lhs == rhs) return {};
  return {false, render(lhs) + " vs " + render(rhs)};
}

CheckResult equal_text(const std::string& lhs, const std::string& rhs) {
  if (lhs == rhs) return {};
  return {false, "'" + lhs + "' vs '" + rhs + "'"};
}

// Three-fold tensors for coassociativity.
using Key3 = std::tuple<Forest, Forest, Forest>;
using Tensor3 = std::map<Key3, Rational>;

void add3(Tensor3& t, const Key3& k, const Rational& c) {
  auto& slot = t[k];
  slot += c;
  if (is_zero(slot)) t.erase(k);
}

CheckResult coassociativity(const Forest& f) {
  const Tensor2 d = coproduct(f);
  Tensor3 left, right;
  for (const auto& [k, c] : d.terms()) {
    const Tensor2 dl = coproduct(k.first);
    const Tensor2 dr = coproduct(k.second);
    for (const auto& [kl, cl] : dl.terms()) add3(left, {kl.first, kl.second, k.second}, c * cl);
    for (const auto& [kr, cr] : dr.terms()) add3(right, {k.first, kr.first, kr.second}, c * cr);
  }
  if (left == right) return {};
  for (const auto& [k, c] : left) {
    auto it = right.find(k);
    const Rational other = it == right.end() ? Rational(0) : it->second;
    if (other != c) {
      return {false, "(" + std::get<0>(k).str() + " | " + std::get<1>(k).str() + " | " + std::get<2>(k).str() +
                         "): " + to_string(c) + " vs " + to_string(other)};
    }
  }
  return {false, "right side has extra terms"};
}

CheckResult counit_law(const Forest& f, bool left_leg) {
  const Tensor2 d = coproduct(f);
  LinComb out;
  for (const auto& [k, c] : d.terms()) {
    const Forest& drop = left_leg ? k.first : k.second;
    const Forest& keep = left_leg ? k.second : k.first;
    if (drop.is_unit()) out.add(keep, c);
  }
  return equal(out, LinComb(f));
}

CheckResult antipode_law(const Forest& f, bool left_leg) {
  const Tensor2 d = coproduct(f);
  LinComb out;
  for (const auto& [k, c] : d.terms()) {
    const LinComb l = left_leg ? antipode(LinComb(k.first)) : LinComb(k.first);
    const LinComb r = left_leg ? LinComb(k.second) : antipode(LinComb(k.second));
    out += Rational(c) * multiply(l, r);
  }
  const LinComb expected = f.is_unit() ? unit_lc() : LinComb();
  return equal(out, expected);
}

std::string pair_name(const RootedTree& t, const RootedTree& s) { return "t=" + t.str() + " s=" + s.str(); }

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const VerifyResult& r) { return r.passed; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["max_degree"] = max_degree;
  j["seed"] = seed;
  j["passed"] = all_passed();
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json o;
    o["relation"] = r.relation;
    o["instance"] = r.instance;
    o["status"] = r.passed ? "pass" : "fail";
    o["first_mismatch"] = r.passed ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.first_mismatch);
    j["results"].push_back(std::move(o));
  }
  return j.dump(2);
}

std::string VerifyReport::to_text() const {
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& r : results) {
    auto [it, inserted] = counts.try_emplace(r.relation, 0, 0);
    if (inserted) order.push_back(r.relation);
    ++it->second.second;
    if (r.passed) ++it->second.first;
  }
  std::ostringstream os;
  os << "suite " << suite << " max-degree " << max_degree << " seed " << seed << "\n";
  for (const auto& rel : order) {
    const auto [pass, total] = counts[rel];
    os << (pass == total ? "PASS " : "FAIL ") << rel << " " << pass << "/" << total << "\n";
  }
  for (const auto& r : results)
    if (!r.passed) os << "  failed: " << r.relation << " [" << r.instance << "] " << r.first_mismatch << "\n";
  os << (all_passed() ? "all relations hold" : "some relations failed") << "\n";
  return os.str();
}

std::vector<RootedTree> level_sequence_trees(std::size_t n) {
  std::vector<RootedTree> out;
  if (n == 0) return out;
  auto build = [](const std::vector<std::size_t>& L) {
    // Children of the vertex at index i are the following vertices one level
    // deeper, up to the next vertex at level ≤ L[i].
    auto rec = [&](auto&& self, std::size_t i) -> RootedTree {
      std::vector<RootedTree> kids;
      for (std::size_t j = i + 1; j < L.size() && L[j] > L[i]; ++j)
        if (L[j] == L[i] + 1) kids.push_back(self(self, j));
      return RootedTree::from_children(std::move(kids));
    };
    return rec(rec, 0);
  };
  std::vector<std::size_t> L(n);
  for (std::size_t i = 0; i < n; ++i) L[i] = i;
  for (;;) {
    out.push_back(build(L));
    std::size_t p = n;
    for (std::size_t i = n; i-- > 0;)
      if (L[i] > 1) {
        p = i;
        break;
      }
    if (p == n) break;
    std::size_t q = p;
    while (L[q] != L[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) L[i] = L[i - (p - q)];
  }
  return out;
}

VerifyReport verify_hopf(std::size_t max_degree) {
  VerifyReport report{"hopf", max_degree, 0, {}};
  Recorder rec(report);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (const auto& f : enumerate_forests(d)) {
      const std::string name = f.str();
      rec.run("coassociativity", name, [&] { return coassociativity(f); });
      rec.run("counit left", name, [&] { return counit_law(f, true); });
      rec.run("counit right", name, [&] { return counit_law(f, false); });
      rec.run("antipode left", name, [&] { return antipode_law(f, true); });
      rec.run("antipode right", name, [&] { return antipode_law(f, false); });
    }
  }
  static const std::size_t known[] = {0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  for (std::size_t n = 1; n <= std::max<std::size_t>(max_degree, 10) && n <= 10; ++n) {
    rec.run("enumeration oracle", "n=" + std::to_string(n), [&]() -> CheckResult {
      const auto trees = enumerate_trees(n);
      std::set<std::string> a, b;
      for (const auto& t : trees) a.insert(t.str());
      for (const auto& t : level_sequence_trees(n)) b.insert(t.str());
      if (a != b) return {false, "enumerate_trees and the level-sequence oracle disagree"};
      if (trees.size() != known[n])
        return {false, std::to_string(trees.size()) + " trees vs " + std::to_string(known[n])};
      return {};
    });
  }
  const std::vector<std::string> deltas = {"1 []", "1 [[]]", "1 [[][]] + 1 [[[]]]",
                                           "1 [[][][]] + 3 [[[]][]] + 1 [[[][]]] + 1 [[[[]]]]"};
  for (std::size_t k = 1; k <= deltas.size(); ++k)
    rec.run("delta_k display", "k=" + std::to_string(k), [&] { return equal_text(render(delta_k(k)), deltas[k - 1]); });
  rec.run("coproduct display", "[]", [] {
    return equal_text(render(coproduct(parse_tree("[]"))), "1 ([] | 1) + 1 (1 | [])");
  });
  return report;
}

VerifyReport verify_growth(std::size_t max_degree) {
  VerifyReport report{"growth", max_degree, 0, {}};
  Recorder rec(report);
  const RootedTree t4 = parse_tree("[[[]][]]");
  rec.run("N(t) display", t4.str(), [&] {
    return equal(natural_growth(RootedTree(), tree_lc(t4)),
                 parse_lincomb("[[[[]]][]] + [[[][]][]] + [[[]][[]]] + [[[]][][]]"));
  });
  rec.run("N_t(delta_2) display", t4.str(), [&] {
    return equal(natural_growth(t4, delta_k(2)), parse_lincomb("[[[[]][]][]] + [[[[[]][]]]]"));
  });
  for (std::size_t a = 1; a < max_degree; ++a)
    for (std::size_t b = 1; a + b <= max_degree; ++b)
      for (const auto& t : enumerate_trees(a))
        for (const auto& s : enumerate_trees(b))
          rec.run("Ntcoprod", pair_name(t, s), [&] { return CheckResult{ntcoprod_identity(t, s), "coproducts differ"}; });
  for (std::size_t a = 1; a < max_degree; ++a)
    for (std::size_t b = 0; a + b + 1 <= max_degree; ++b)
      for (const auto& t0 : enumerate_trees(a))
        for (const auto& parts : enumerate_forests(b))
          rec.run("NBrel", "t0=" + t0.str() + " parts=" + parts.str(),
                  [&] { return CheckResult{nbrel_identity(t0, parts), "sides differ"}; });
  for (std::size_t n = 1; n <= max_degree; ++n)
    for (const auto& t : enumerate_trees(n))
      rec.run("decomposition round trip", t.str(), [&] { return equal(eval_growth_expr(decompose(t)), tree_lc(t)); });
  for (std::size_t k = 1; k <= 3; ++k) {
    rec.run("sub-Hopf closure", "S_" + std::to_string(k), [&] {
      std::vector<RootedTree> gens;
      for (std::size_t i = 1; i <= k; ++i) gens.push_back(fan_graph(i));
      const ClosureReport c = closure_check(generate_subalgebra(gens, max_degree));
      return CheckResult{c.closed, c.closed ? "" : render(*c.violating_element) + ": " + c.violating_term};
    });
  }
  for (std::size_t n = 1; n <= max_degree + 1; ++n) {
    const FanCoproductReport r = fan_coproduct(n);
    rec.add("fan binomials C(n-1,i)", "n=" + std::to_string(n) + " realizes " + r.realized_subscript,
            r.binomials_match_n_minus_i || r.binomials_match_n_minus_i_minus_1, "no subscript matches");
  }
  return report;
}

VerifyReport verify_butcher(std::size_t max_degree, std::uint64_t seed) {
  VerifyReport report{"butcher", max_degree, seed, {}};
  Recorder rec(report);
  const int order = static_cast<int>(max_degree) + 1;
  const VectorField f = random_quadratic_field(2, seed, order);
  for (std::size_t k = 1; k <= max_degree; ++k)
    rec.run("Taylor bridge", "k=" + std::to_string(k), [&] { return check_taylor_bridge(f, static_cast<int>(k)); });
  for (std::size_t n = 1; n < max_degree; ++n)
    for (const auto& t : enumerate_trees(n))
      rec.run("phi(N(t)) = d/ds phi(t)", t.str(), [&] { return check_growth_derivative(t, f); });
  JetRng rng(seed + 1);
  for (std::size_t a = 1; a < max_degree; ++a)
    for (std::size_t b = 1; a + b <= max_degree; ++b)
      for (const auto& t : enumerate_trees(a))
        for (const auto& s : enumerate_trees(b)) {
          rec.run("gennatgrowth", pair_name(t, s), [&] { return check_generalized_growth(t, s, f); });
          const MultiSeries h = random_polynomial(2, 3, rng, order);
          rec.run("phi_{N_t} phi_s = phi_{N_t(s)}", pair_name(t, s),
                  [&] { return check_growth_composition(t, s, f, h); });
        }
  const VectorField deeper = random_quadratic_field(2, seed, order + 2);
  for (std::size_t n = 1; n <= max_degree; ++n)
    for (const auto& t : enumerate_trees(n))
      rec.run("depth bound", t.str(), [&]() -> CheckResult {
        const auto a = elementary_differential(t, f);
        const auto b = elementary_differential(t, deeper);
        for (std::size_t i = 0; i < a.size(); ++i)
          if (auto m = first_mismatch(a[i], b[i])) return {false, "component " + std::to_string(i + 1)};
        return {};
      });
  return report;
}

namespace {

// One seeded trial of the frame-bundle suite, with its own model and RNG.
std::vector<VerifyResult> cm_trial(int trial, std::size_t max_degree, std::uint64_t seed) {
  VerifyReport report;
  Recorder rec(report);
  const int D = kCmOrder;
  const std::size_t single = std::min<std::size_t>(4, max_degree);
  const std::size_t pairs = std::min<std::size_t>(5, max_degree);
  {
    JetRng rng(seed * 7919 + static_cast<std::uint64_t>(trial));
    const CurvatureFn gamma = trial % 2 == 0 ? XSeries::identity(D) : random_xseries(rng, 3, D);
    FrameModel model(gamma);
    const std::string tag = "trial=" + std::to_string(trial);
    rec.run("gamma cocycle", tag, [&] {
      return check_cocycle(random_diffeo(rng, 3, D + 2), random_diffeo(rng, 3, D + 2), gamma);
    });
    rec.run("lift composition", tag, [&] {
      return check_lift_composition(random_diffeo(rng, 3, D + 2), random_diffeo(rng, 3, D + 2),
                                    random_frame_function(rng, 3, 2, D));
    });
    rec.run("monomial associativity", tag, [&] {
      return check_associativity(random_monomial(rng, D), random_monomial(rng, D), random_monomial(rng, D));
    });
    for (std::size_t n = 1; n <= single; ++n) {
      for (const auto& t : enumerate_trees(n)) {
        const std::string inst = "t=" + t.str() + " " + tag;
        rec.run("pushforward cut expansion", inst, [&] {
          return check_pushforward_phi(model, t, random_diffeo(rng, 3, D + 2),
                                       FrameFunction::term(random_xseries(rng, 3, D), 1));
        });
        rec.run("pushforward cut expansion for X_t", inst, [&] {
          return check_pushforward_X(model, t, random_diffeo(rng, 3, D + 2), random_frame_function(rng, 3, 2, D));
        });
        rec.run("coproduct of delta_t", inst, [&] {
          return check_delta_coproduct(model, t, random_monomial(rng, D), random_monomial(rng, D));
        });
        rec.run("coproduct of X_t", inst, [&] {
          return check_X_coproduct(model, t, random_monomial(rng, D), random_monomial(rng, D));
        });
        rec.run("delta from commutators", inst, [&]() -> CheckResult {
          const Monomial m = random_monomial(rng, D);
          if (auto mm = first_mismatch(delta_from_commutators(model, t, m), model.delta(t, m))) return {false, *mm};
          return {};
        });
        rec.run("y-grading of phi(t)", inst, [&] { return check_grading(model, t); });
      }
    }
    for (std::size_t a = 1; a < pairs; ++a)
      for (std::size_t b = 1; a + b <= pairs; ++b)
        for (const auto& t : enumerate_trees(a))
          for (const auto& tp : enumerate_trees(b)) {
            const std::string inst = "t=" + t.str() + " t'=" + tp.str() + " " + tag;
            try {
              for (const auto& r : check_commutators(model, t, tp, random_monomial(rng, D)))
                rec.add(r.relation, inst, r.result);
            } catch (const std::exception& e) {
              rec.add("commutators", inst, false, std::string("error: ") + e.what());
            }
          }
    for (std::size_t k = 1; k + 1 <= pairs; ++k)
      rec.run("[X,delta_k] = delta_{k+1}", "k=" + std::to_string(k) + " " + tag,
              [&] { return check_delta_k_ladder(model, k, random_monomial(rng, D)); });

    // Flat case.
    FrameModel flat{XSeries(D)};
    const RootedTree dot;
    const Monomial m = random_monomial(rng, D);
    const auto rel = check_commutators(flat, dot, dot, m);
    for (const auto& r : rel) {
      if (r.relation.starts_with("[Y,X_t]")) rec.add("flat [Y,X] = X", tag, r.result);
      if (r.relation.starts_with("[Y,delta_t]")) rec.add("flat [Y,delta_1] = delta_1", tag, r.result);
    }
    rec.run("flat [X,delta_1] = delta_2", tag, [&] { return check_delta_k_ladder(flat, 1, m); });
  }
  return std::move(report.results);
}

}  // namespace

VerifyReport verify_cm(std::size_t max_degree, std::uint64_t seed) {
  VerifyReport report{"cm", max_degree, seed, {}};
  Recorder rec(report);
  const int D = kCmOrder;
  std::vector<std::future<std::vector<VerifyResult>>> trials;
  for (int trial = 0; trial < kCmTrials; ++trial)
    trials.push_back(std::async(std::launch::async, cm_trial, trial, max_degree, seed));
  for (auto& f : trials)
    for (auto& r : f.get()) report.results.push_back(std::move(r));
  rec.run("flat phi(t) = 0", "|t| <= " + std::to_string(std::max<std::size_t>(max_degree, 2)),
          [&] { return check_flat_degeneration(std::max<std::size_t>(max_degree, 2), D); });
  return report;
}

VerifyReport run_suite(const std::string& suite, std::size_t max_degree, std::uint64_t seed) {
  if (suite == "hopf") return verify_hopf(max_degree);
  if (suite == "growth") return verify_growth(max_degree);
  if (suite == "butcher") return verify_butcher(max_degree, seed);
  if (suite == "cm") return verify_cm(max_degree, seed);
  if (suite == "all") {
    VerifyReport all{"all", max_degree, seed, {}};
    for (const char* s : {"hopf", "growth", "butcher", "cm"}) {
      VerifyReport r = run_suite(s, max_degree, seed);
      for (auto& x : r.results) {
        x.relation = std::string(s) + ": " + x.relation;
        all.results.push_back(std::move(x));
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + suite + "' (expected hopf, growth, butcher, cm or all)");
}

}  // namespace hopfrt
