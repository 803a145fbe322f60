// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "equihodge/complex.hpp"
#include "equihodge/errors.hpp"
#include "equihodge/hopf.hpp"
#include "equihodge/io.hpp"

using namespace equihodge;
namespace fs = std::filesystem;

namespace {

const std::string fixture_dir = EQUIHODGE_FIXTURE_DIR;

using Dims = std::vector<long long>;

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 6) failures_.push_back(what);
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
};

struct Run {
  Problem problem;
  std::vector<Report> reports;
};

// Cached in-process runs, keyed by fixture and command.
const Run& run(const std::string& fixture, const std::string& command) {
  static std::map<std::pair<std::string, std::string>, std::unique_ptr<Run>> cache;
  auto& slot = cache[{fixture, command}];
  if (!slot) {
    slot = std::make_unique<Run>();
    slot->problem = load_problem(fixture_dir + "/" + fixture + ".json");
    slot->reports = run_command(command, slot->problem, RunOptions{});
  }
  return *slot;
}

const Report* section(const Run& r, const std::string& title) {
  for (const auto& rep : r.reports)
    if (rep.title == title) return &rep;
  return nullptr;
}

std::string fact(const Report& r, const std::string& name) {
  for (const auto& [k, v] : r.facts)
    if (k == name) return v;
  return {};
}

bool passes(const Report* r, const std::string& check) {
  if (!r) return false;
  const Check* c = r->find(check);
  return c && c->status == CheckStatus::pass;
}

Dims table(const Report* r, const std::string& name) {
  if (!r) return {};
  const auto* t = r->find_table(name);
  return t ? *t : Dims{};
}

bool is_declined(const Report* r) {
  return r && !r->checks.empty() &&
         std::all_of(r->checks.begin(), r->checks.end(), [](const Check& c) { return c.status == CheckStatus::declined; });
}

std::string show(const Dims& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::vector<std::string> all_fixtures() {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(fixture_dir))
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

// ---------------------------------------------------------------------------

Criterion hopf_suite() {
  Criterion c;
  for (const std::string fx : {"fix5", "lambda3"}) {
    const Run& r = run(fx, "check-axioms");
    c.expect(r.reports.size() == 1, fx + ": one coefficient algebra");
    for (const auto& rep : r.reports) {
      c.expect(rep.passed(), fx + ": " + rep.title);
      for (const auto& check : rep.checks)
        c.expect(check.status != CheckStatus::skipped || check.detail.find("zero differential") != std::string::npos,
                 fx + ": unexpected skip " + check.name);
      c.expect(fact(rep, "hopf.sampling") == "exhaustive", fx + ": enumeration is exhaustive");
      for (const std::string name : {"hopf.antipode.fourth-identity", "hopf.antipode.anti-homomorphism",
                                     "hopf.antipode.involution", "hopf.coproduct.coassociative", "hopf.counit.counital"})
        c.expect(passes(&rep, name), fx + ": " + name);
    }
  }
  // An antipode that forgets the pullback.
  const Problem p = load_problem(fixture_dir + "/fix5.json");
  HopfCheckOptions opt;
  opt.antipode_override = [](const HopfAlgebroid& h, const AlgebroidElement& a) {
    const GroupModel* g = &h.group();
    return AlgebroidElement{1, [g, a](const std::vector<GroupElement>& x) { return a(g->inverse(x[0])); }};
  };
  const Report bad = check_hopf_axioms(HopfAlgebroid(p.algebra), opt);
  const auto failures = bad.failures();
  c.expect(!failures.empty(), "corrupted antipode not flagged");
  for (const Check* f : failures) c.expect(!f->detail.empty(), "failure without witness: " + f->name);
  return c;
}

Criterion cyclic_structure() {
  Criterion c;
  for (const auto& fx : all_fixtures()) {
    const Run& r = run(fx, "cyclic");
    if (!r.problem.group->is_finite()) {
      c.expect(is_declined(section(r, "cyclic")), fx + ": infinite group should be declined");
      continue;
    }
    const Report* total = section(r, "cyclic");
    const Report* s = section(r, "cyclic-structure");
    c.expect(passes(total, "total.D-squared-zero"), fx + ": D^2");
    c.expect(s && s->passed(), fx + ": cyclic-structure has a failing check");
    for (const std::string name : {"cosimplicial.faces", "cosimplicial.degeneracies", "cosimplicial.mixed",
                                   "cyclic.t-order", "cyclic.compatibility", "hochschild.b-squared-zero"})
      c.expect(passes(s, name), fx + ": " + name);
    c.expect(s && fact(*s, "max_cochain_degree") == "4", fx + ": cochains up to degree 4");
    // Tensor coherence is required for small algebras with a product; the
    // simplicial cochain complexes carry no product and are larger anyway.
    const std::size_t dim_b = r.problem.algebra ? r.problem.algebra->dim()
                              : r.problem.space_type == "finite-set"
                                  ? vertex_function_algebra(*r.problem.complex).dim()
                                  : cochain_algebra(*r.problem.complex).dim();
    if (r.problem.group->order() <= 3 && dim_b <= 8) {
      for (const std::string name : {"coherence.faces", "coherence.degeneracies", "coherence.tau"})
        c.expect(passes(s, name), fx + ": " + name);
      c.expect(s && fact(*s, "coherence_basis_inputs").find("(exhaustive)") != std::string::npos,
               fx + ": coherence over every basis tensor");
    } else if (!passes(s, "coherence.faces")) {
      const Check* skipped = s ? s->find("coherence") : nullptr;
      c.expect(skipped && skipped->status == CheckStatus::skipped && !skipped->detail.empty(),
               fx + ": coherence neither run nor skipped with a reason");
    }
  }
  return c;
}

Criterion cyclic_decomposition() {
  Criterion c;
  const std::vector<std::pair<std::string, Dims>> expected{{"fix5", {1, 0, 1, 0, 1}}, {"fix1", {1, 1, 1, 1, 1}}};
  for (const auto& [fx, hc] : expected) {
    const Report* s = section(run(fx, "cyclic"), "cyclic");
    c.expect(table(s, "HC") == hc, fx + ": HC " + show(table(s, "HC")));
    c.expect(table(s, "HC_from_HH") == hc, fx + ": sum of HH " + show(table(s, "HC_from_HH")));
    c.expect(passes(s, "decomposition.total"), fx + ": decomposition.total");
  }
  return c;
}

Criterion total_vs_invariant() {
  Criterion c;
  for (const std::string fx : {"fix1", "fix3"}) {
    const Run& r = run(fx, "cyclic");
    const Report* s = section(r, "cyclic");
    Dims hh = table(s, "HH");
    Dims betti;
    for (auto b : invariant_betti(*r.problem.complex)) betti.push_back(static_cast<long long>(b));
    betti.resize(hh.size(), 0);
    c.expect(!hh.empty() && hh == betti, fx + ": HH " + show(hh) + " vs Betti " + show(betti));
    c.expect(passes(s, "total-equals-invariant"), fx + ": total-equals-invariant");
  }
  return c;
}

Criterion harmonic_dims() {
  Criterion c;
  const std::vector<std::pair<std::string, Dims>> expected{
      {"fix1", {1, 1}}, {"fix3", {1, 2, 1}}, {"fix4p", {1, 1}}, {"fix6", {1, 0, 0}}};
  for (const auto& [fx, want] : expected) {
    const Run& r = run(fx, "hodge");
    const Report* s = section(r, "hodge");
    c.expect(table(s, "harmonic_dims") == want, fx + ": harmonic " + show(table(s, "harmonic_dims")));
    c.expect(table(s, "invariant_betti") == want, fx + ": Betti " + show(table(s, "invariant_betti")));
    c.expect(passes(s, "harmonic.dims-equal-betti"), fx + ": harmonic.dims-equal-betti");
  }
  return c;
}

Criterion operator_suite() {
  Criterion c;
  for (const std::string fx : {"fix1", "fix4p"}) {
    const Run& r = run(fx, "hodge");
    const Report* s = section(r, "hodge");
    for (const std::string name :
         {"projection.idempotent", "projection.symmetric", "projection.fixes-window", "projection.range-is-window",
          "adjoint.relation", "laplacian.kernel-closed-coclosed", "laplacian.kernel-orthogonal-image",
          "green.identity", "green.self-adjoint", "green.commutes"})
      c.expect(passes(s, name), fx + ": " + name);
  }
  const Problem& p = run("fix4p", "hodge").problem;
  c.expect(p.cutoff && !p.cutoff->values.empty(), "fix4p: the cutoff is not constant");
  return c;
}

Criterion hodge_decomposition() {
  Criterion c;
  for (const std::string fx : {"fix1", "fix2", "fix3", "fix4p", "fix6"}) {
    const Report* s = section(run(fx, "hodge"), "hodge");
    c.expect(s && fact(*s, "decomposition_samples") == "20", fx + ": 20 samples");
    for (const std::string name : {"decomposition.residual", "decomposition.orthogonal", "decomposition.closed"})
      c.expect(passes(s, name), fx + ": " + name);
  }
  return c;
}

Criterion euler_theory() {
  Criterion c;
  const std::vector<std::pair<std::string, long long>> expected{
      {"fix1", 0}, {"fix4p", 0}, {"fix3", 0}, {"fix2", 1}, {"fix6", 1}};
  for (const auto& [fx, chi] : expected) {
    const Run& r = run(fx, "euler");
    const Report* s = section(r, "euler");
    c.expect(s && fact(*s, "euler_characteristic") == std::to_string(chi), fx + ": chi");
    // Euler-Poincare from invariant cochain dimensions, outside the report.
    const auto dims = invariant_subcomplex(*r.problem.complex).dims();
    long long ep = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) ep += (p % 2 ? -1 : 1) * static_cast<long long>(dims[p]);
    c.expect(ep == chi, fx + ": alternating sum of invariant cochains is " + std::to_string(ep));
    c.expect(passes(s, "euler-poincare"), fx + ": euler-poincare");
    for (const std::string name : {"twisted.square-zero", "twisted.chain-isomorphism", "twisted.k-zero-is-d",
                                   "twisted.betti-independent-of-k", "twisted.euler-independent-of-k",
                                   "twisted.harmonic-equals-betti"})
      c.expect(passes(s, name), fx + ": " + name);
    const Dims base = table(s, "invariant_betti");
    for (long k = -2; k <= 3; ++k)
      c.expect(!base.empty() && table(s, "betti[k=" + std::to_string(k) + "]") == base,
               fx + ": betti at k=" + std::to_string(k));
  }
  c.expect(passes(section(run("fix4p", "euler"), "euler"), "odd-dimension.euler-zero"), "fix4p: odd dimension");
  return c;
}

Criterion duality() {
  Criterion c;
  const Report* torus = section(run("fix3", "duality"), "duality");
  c.expect(passes(torus, "pairing.nondegenerate"), "fix3: pairing.nondegenerate");
  c.expect(passes(torus, "betti.symmetric"), "fix3: betti.symmetric");
  c.expect(table(torus, "pairing_rank") == Dims{1, 2, 1}, "fix3: pairing ranks " + show(table(torus, "pairing_rank")));
  const Dims hex = table(section(run("fix1", "duality"), "duality"), "betti[k=1]");
  c.expect(hex.size() == 2 && hex[0] == hex[1], "fix1: b0 = b1, got " + show(hex));
  for (const std::string fx : {"fix2", "fix6"}) {
    const Report* s = section(run(fx, "duality"), "duality");
    c.expect(is_declined(s) && s->checks.front().detail.find("orientation") != std::string::npos,
             fx + ": declined as orientation-reversing");
  }
  return c;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Criterion determinism() {
  Criterion c;
  for (const auto& fx : all_fixtures()) {
    const std::string cmd = std::string("\"") + EQUIHODGE_CLI + "\" all \"" + fixture_dir + "/" + fx + ".json\"";
    const std::string first = capture(cmd);
    const std::string second = capture(cmd);
    c.expect(!first.empty() && first == second, fx + ": reports differ between runs");
    // The in-process rendering is the same document.
    const Run& r = run(fx, "all");
    c.expect(render("all", r.problem, r.reports, OutputFormat::json) == first, fx + ": in-process render differs");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
      {"Hopf axiom suite and corrupted-antipode control", hopf_suite},
      {"cyclic structure through degree 4 with tensor coherence", cyclic_structure},
      {"HC from the cyclic subcomplex equals the periodic sum of HH", cyclic_decomposition},
      {"total-complex cohomology equals invariant Betti numbers", total_vs_invariant},
      {"harmonic dimensions equal invariant Betti numbers", harmonic_dims},
      {"window operator identities", operator_suite},
      {"Hodge decomposition on sampled window elements", hodge_decomposition},
      {"Euler characteristics and the twisted sweep", euler_theory},
      {"Poincare duality at k = 1", duality},
      {"byte-identical reports across runs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << (i + 1) << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!c.ok()) std::cout << "  [" << c.summary() << "]";
    std::cout << std::endl;
    failed += c.ok() ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failed ? 1 : 0;
}
