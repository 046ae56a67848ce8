#include "spnkit/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "spnkit/classes.hpp"
#include "spnkit/cones.hpp"
#include "spnkit/error.hpp"
#include "spnkit/generators.hpp"
#include "spnkit/linalg.hpp"
#include "spnkit/orbit.hpp"
#include "spnkit/signgraph.hpp"
#include "spnkit/stqp.hpp"
#include "spnkit/text_io.hpp"

namespace spnkit {

namespace {

// A case returns an empty string on success, otherwise a description.
using Case = std::function<std::string(Rng&, std::size_t)>;

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases,
                      const Case& body) {
  SuiteResult r;
  r.name = name;
  Rng rng(seed);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t c = 0; c < cases; ++c) {
    std::string msg;
    try {
      msg = body(rng, c);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!msg.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(c) + ": " + msg;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string describe(const SymMatrix& a) {
  std::string s = format_matrix(a);
  for (char& ch : s)
    if (ch == '\n') ch = ';';
  return s;
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t dim(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::size_t cases, const Tolerances& tol) {
  tol.validate();
  std::vector<SuiteResult> out;

  out.push_back(run_suite("shift_invariance_Mn", seed, cases, [&](Rng& rng, std::size_t c) {
    const std::size_t n = dim(rng, 2, 9);
    const SymMatrix a = c % 2 == 0 ? random_Mn(rng, n) : random_symmetric(rng, n);
    const double lambda = uniform(rng, -10.0, 10.0);
    if (is_Mn(a, tol) != is_Mn(a.shifted(lambda), tol)) {
      return "verdict changed under shift " + std::to_string(lambda) + " for " + describe(a);
    }
    return std::string();
  }));

  out.push_back(run_suite("schur_closure", seed, cases, [&](Rng& rng, std::size_t c) {
    const std::size_t n = dim(rng, 3, 9);
    if (c % 2 == 0) {
      SymMatrix a = random_Mn(rng, n);
      const auto row = a.row(0);
      double top = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 1; j < n; ++j) top = std::max(top, row[j]);
      a = a.shifted(-(top + uniform(rng, 0.1, 2.0)));
      std::vector<double> m(a.data().begin(), a.data().end());
      m[0] = uniform(rng, 0.1, 5.0);
      a = SymMatrix(n, std::move(m));
      if (!is_Mn(a, tol)) return "generator left M_n: " + describe(a);
      const SymMatrix s = schur_complement(a, 0, tol);
      if (!is_Mn(s, tol)) return "M_n Schur complement left M_n: " + describe(a);
    } else {
      const SymMatrix a = random_Rn(rng, n, dim(rng, 1, n));
      if (!is_Rn(a, tol)) return "generator left R_n: " + describe(a);
      const SymMatrix s = schur_complement(a, 0, tol);
      if (!is_Rn(s, tol)) return "R_n Schur complement left R_n: " + describe(a);
      // idx is 0-based here and the complement drops row 0, so the bound
      // idx(S) >= idx(A) - 1 reads the same.
      if (idx(s, tol) + 1 < idx(a, tol)) return "idx dropped by more than one: " + describe(a);
    }
    return std::string();
  }));

  out.push_back(run_suite("copositivity_equivariance", seed, cases, [&](Rng& rng, std::size_t c) {
    const std::size_t n = dim(rng, 2, 6);
    const SymMatrix a = c % 2 == 0 ? random_spn(rng, n) : random_symmetric(rng, n, -1.0, 3.0);
    const GroupElement g = random_group(rng, n);
    const bool before = copositive_oracle(a, tol).copositive;
    const bool after = copositive_oracle(apply_group(g, a), tol).copositive;
    if (before != after) return "verdict changed under the group action for " + describe(a);
    return std::string();
  }));

  out.push_back(run_suite("weak_duality_chain", seed, cases, [&](Rng& rng, std::size_t c) {
    const std::size_t n = dim(rng, 2, 7);
    const SymMatrix q = c % 3 == 0 ? random_Mn(rng, n) : random_symmetric(rng, n);
    const BisectionResult spn = z_spn_bisection(q, tol);
    double dnn = 0.0;
    try {
      dnn = z_dnn_primal(q, tol).value;
    } catch (const NoConvergence& e) {
      if (!e.best()) throw;
      dnn = *e.best();
    }
    const double star = z_star_oracle(StqpInstance::raw(q), tol).value;
    std::ostringstream msg;
    msg.precision(12);
    if (spn.value > dnn + 2.0 * tol.eps_opt) {
      msg << "z_spn " << spn.value << " above z_dnn " << dnn;
    } else if (dnn > star + tol.eps_opt) {
      msg << "z_dnn " << dnn << " above z_star " << star;
    }
    if (!msg.str().empty()) msg << " for " << describe(q);
    return msg.str();
  }));

  out.push_back(run_suite("threshold_filter", seed, cases, [&](Rng& rng, std::size_t c) {
    const std::size_t n = dim(rng, 2, 6);
    SymMatrix a;
    if (c % 4 == 3) {
      a = random_symmetric(rng, n);
    } else {
      a = apply_group(random_group(rng, n), random_Mn(rng, n));
    }
    const OrbitResult r = joint_orbit_search(a, tol);
    if (r.found) {
      if (!is_Mn(apply_group(*r.witness, a), tol)) return "unsound orbit witness for " + describe(a);
      if (!orbit_necessary_filter(a, tol)) return "filter rejected an orbit member " + describe(a);
    } else if (c % 4 != 3) {
      return "orbit search missed a constructed member " + describe(a);
    }
    return std::string();
  }));

  out.push_back(run_suite("m_matrix_inverse", seed, cases, [&](Rng& rng, std::size_t) {
    const SymMatrix a = random_m_matrix(rng, dim(rng, 1, 10));
    const SymMatrix inv = inverse(a);
    if (inv.min_entry() < -1e-8) return "negative inverse entry for " + describe(a);
    return std::string();
  }));

  return out;
}

}  // namespace spnkit
