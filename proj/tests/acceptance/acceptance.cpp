// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "commands.hpp"
#include "spnkit/classes.hpp"
#include "spnkit/error.hpp"
#include "spnkit/cones.hpp"
#include "spnkit/generators.hpp"
#include "spnkit/linalg.hpp"
#include "spnkit/orbit.hpp"
#include "spnkit/selftest.hpp"
#include "spnkit/signgraph.hpp"
#include "spnkit/stqp.hpp"
#include "spnkit/text_io.hpp"

using namespace spnkit;

namespace {

std::string fixture(const std::string& name) {
  return std::string(SPNKIT_FIXTURE_DIR) + "/" + name + ".txt";
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  Outcome() { detail.precision(10); }

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

cli::RunConfig config(const std::string& command, const std::string& path) {
  cli::RunConfig cfg;
  cfg.command = command;
  cfg.inputs = {path};
  return cfg;
}

void extraneous(Outcome& o) {
  const cli::CommandResult r = cli::cmd_stqp(config("stqp", fixture("extraneous_q")));
  const double z = r.report.at("z_spn").get<double>();
  o.require(std::abs(z - 1.0) <= 1e-5, "z_spn within 1e-5 of 1");
  o.require(r.report.at("tight").get<bool>(), "tight");
  const SymMatrix q = read_matrix(fixture("extraneous_q"));
  const OrbitResult p = permute_into_Mn(q);
  o.require(p.found && is_Mn(apply_group(*p.witness, q)), "permutation into M_5");
  o.detail << "z_spn=" << z << " z*=" << r.report.at("z_star").get<double>();
}

void horn(Outcome& o) {
  const SymMatrix h = read_matrix(fixture("horn"));
  const CopositivityReport c = copositive_oracle(h);
  o.require(c.copositive && std::abs(c.min_value) <= 1e-8, "copositive with zero minimum");
  const SpnOutcome s = spn_oracle(h);
  const auto* w = std::get_if<DnnWitness>(&s);
  o.require(w && w->objective < -1e-6 && validate_witness(h, *w), "DNN witness below -1e-6");
  const BisectionResult b = z_spn_bisection(h);
  const double z_star = z_star_oracle(StqpInstance::raw(h)).value;
  o.require(b.value < -1e-6, "z_spn < -1e-6");
  o.require(std::abs(z_star) <= 1e-12, "z* = 0");
  o.detail << "witness=" << (w ? w->objective : NAN) << " z_spn=" << b.value << " z*=" << z_star;
}

void sign_patterns(Outcome& o) {
  const SymMatrix a = read_matrix(fixture("sign_pattern_a"));
  const SymMatrix horn = read_matrix(fixture("horn"));
  const double diff = max_abs_diff(schur_complement(a, 0), horn);
  o.require(diff <= 1e-12, "Schur complement of A equals Horn");
  o.require(cli::cmd_decompose(config("decompose", fixture("sign_pattern_a"))).exit_code == 1,
            "decompose A exits 1");
  o.require(!permute_into_Mn(a).found && !rescale_into_Mn(a).found && !joint_orbit_search(a).found,
            "no orbit element of A in M_6");
  o.require(orbit_necessary_filter(a), "threshold filter true on A");
  const SymMatrix b = read_matrix(fixture("sign_pattern_b"));
  o.require(is_Mn(b), "B in M_6");
  o.require(cli::cmd_decompose(config("decompose", fixture("sign_pattern_b"))).exit_code == 0,
            "decompose B exits 0");
  o.detail << "schur diff=" << diff;
}

void separable(Outcome& o) {
  Rng rng(0);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_int_distribution<std::size_t> dim(3, 10);
  double worst = -INFINITY;
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = dim(rng);
    std::vector<double> alpha(n), beta(n);
    for (double& x : alpha) x = u(rng);
    for (double& x : beta) x = u(rng);
    const StqpInstance inst = build_separable(alpha, beta);
    const double gap = z_star_oracle(inst).value - z_spn_bisection(inst).value;
    worst = std::max(worst, gap);
    bad += gap > 1e-5;
  }
  o.require(bad == 0, std::to_string(bad) + " instances with gap > 1e-5");
  o.detail << "200 instances, worst z*-z_spn=" << worst;
}

void diananda(Outcome& o) {
  // Random 4x4 matrices moved onto the boundary of the copositive cone, half
  // of them pushed back inside by a small multiple of E.
  Rng rng(0);
  std::uniform_real_distribution<double> exponent(-8.0, -1.0);
  int accepted = 0, drawn = 0, bad = 0;
  while (accepted < 500) {
    ++drawn;
    SymMatrix a = random_symmetric(rng, 4, -1.0, 1.0);
    a = a.shifted(-simplex_minimum(a).value);
    if (drawn % 2 == 0) a = a.shifted(std::pow(10.0, exponent(rng)));
    if (!copositive_oracle(a).copositive) continue;
    ++accepted;
    try {
      const SpnOutcome s = spn_oracle(a);
      const auto* c = std::get_if<SpnCertificate>(&s);
      bad += !(c && validate_certificate(a, *c));
    } catch (const Error&) {
      ++bad;
    }
  }
  o.require(bad == 0, std::to_string(bad) + " matrices without a valid certificate");
  o.detail << accepted << " copositive matrices, " << bad << " failures";
}

void five_cycle(Outcome& o) {
  o.require(!joint_orbit_search(read_matrix(fixture("five_cycle"))).found, "5-cycle not found");
  Rng rng(0);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> dim(2, 6);
  std::uniform_real_distribution<double> log_mag(std::log(0.25), std::log(4.0));
  std::bernoulli_distribution coin(0.5);
  int found = 0;
  for (int t = 0; t < 20; ++t) {
    KnGenerator g;
    g.kind = static_cast<KnGenerator::Kind>(kind(rng));
    g.n = dim(rng);
    std::uniform_int_distribution<std::size_t> index(0, g.n - 1);
    g.i = index(rng);
    do g.j = index(rng); while (g.j == g.i);
    if (g.kind == KnGenerator::Kind::RankOneSignedVector) {
      // One entry of opposite sign to the rest.
      const std::size_t odd = index(rng);
      const double sign = coin(rng) ? 1.0 : -1.0;
      for (std::size_t k = 0; k < g.n; ++k)
        g.values.push_back(sign * (k == odd ? -1.0 : 1.0) * std::exp(log_mag(rng)));
    } else if (g.kind == KnGenerator::Kind::RankOnePlusMinus) {
      g.values = {std::exp(log_mag(rng)), std::exp(log_mag(rng))};
    }
    const SymMatrix m = kn_generator(g);
    const OrbitResult r = joint_orbit_search(m);
    found += r.found && is_Mn(apply_group(*r.witness, m));
  }
  o.require(found == 20, "every generator in the orbit of M_n");
  o.detail << "5-cycle not found, generators found " << found << "/20";
}

void property_suites(Outcome& o) {
  std::size_t failures = 0;
  for (const SuiteResult& s : run_selftest(0, 1000)) {
    o.require(s.passed(), s.name + ": " + s.first_failure);
    failures += s.failures;
    o.detail << s.name << "=" << s.cases << " ";
  }
  o.detail << "failures=" << failures;
}

void oracle_agreement(Outcome& o) {
  Rng rng(0);
  std::uniform_int_distribution<std::size_t> dim(2, 8);
  double worst = 0.0;
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    const SymMatrix q = random_Mn(rng, dim(rng));
    const double diff = std::abs(z_dnn_primal(q).value - z_spn_bisection(q).value);
    worst = std::max(worst, diff);
    bad += diff > 2e-6;
  }
  o.require(bad == 0, std::to_string(bad) + " instances disagree by more than 2e-6");
  o.detail << "100 instances, worst |z_dnn-z_spn|=" << worst;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "extraneous example tight at z=1", 10.0, extraneous},
      {"AC2", "Horn matrix copositive, not SPN", 30.0, horn},
      {"AC3", "same sign pattern, different orbits", 60.0, sign_patterns},
      {"AC4", "separable programs tight", 600.0, separable},
      {"AC5", "copositive 4x4 matrices are SPN", 300.0, diananda},
      {"AC6", "5-cycle and extreme-ray generators", 120.0, five_cycle},
      {"AC7", "property suites", 600.0, property_suites},
      {"AC8", "DNN and SPN routes agree on M_n", 900.0, oracle_agreement},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds <= c.limit_seconds, "runtime limit");
    failed += !o.pass;
    std::printf("%s %s  %s (%.2f s / %.0f s)  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title,
                seconds, c.limit_seconds, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed;
}
