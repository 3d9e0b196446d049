// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exits non-zero when any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sinc_expdecay/conformal_maps.hpp"
#include "sinc_expdecay/error_bounds.hpp"
#include "sinc_expdecay/lemma_verification.hpp"
#include "sinc_expdecay/sinc_engine.hpp"
#include "sinc_expdecay/testbed.hpp"

namespace fs = std::filesystem;
using namespace sinc;
using std::numbers::pi;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

std::string pair_name(ExampleId id, MapKind kind) {
  return std::string(short_name(id)) + "/" + std::string(short_name(kind));
}

const std::vector<int> kSweep = n_range(2, 100, 2);

Outcome bound_dominance() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (ExampleId id : kAllExamples) {
    const ExampleFunction ex = example(id);
    for (MapKind kind : kAllMapKinds) {
      for (const ErrorReport& r : convergence_sweep(ex, kind, kSweep)) {
        const bool ok = r.bound >= 1e-12 ? r.observed_error <= r.bound : r.observed_error <= 1e-12;
        if (!ok) o.fail(pair_name(id, kind) + fmt(" n=%.0f observed %.3e > bound %.3e", r.n, r.observed_error, r.bound));
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 10.0) o.fail(fmt("sweeps took %.1f s", seconds));
  if (o.passed) o.detail = fmt("6 sweeps x 50 n in %.2f s", seconds);
  return o;
}

Outcome convergence_rates() {
  Outcome o;
  std::string summary;
  for (ExampleId id : kAllExamples) {
    const ExampleFunction ex = example(id);
    for (MapKind kind : kAllMapKinds) {
      const RateFit fit = fit_rate(convergence_sweep(ex, kind, kSweep));
      const double want = predicted_rate(ex.profile(kind));
      const double ratio = fit.slope / want;
      summary += " " + pair_name(id, kind) + fmt("=%.3f", ratio);
      if (fit.points < 2 || !(ratio >= 0.8 && ratio <= 1.2)) {
        o.fail(pair_name(id, kind) + fmt(" slope %.4f vs %.4f", fit.slope, want));
      }
    }
  }
  if (o.passed) o.detail = "slope/predicted:" + summary;
  return o;
}

Outcome new_map_wins() {
  Outcome o;
  const std::vector<int> n50{50};
  for (ExampleId id : kAllExamples) {
    const ExampleFunction ex = example(id);
    const double psi = convergence_sweep(ex, MapKind::ArcsinhMap, n50)[0].observed_error;
    const double phi = convergence_sweep(ex, MapKind::LogisticLogMap, n50)[0].observed_error;
    if (!(phi < psi)) o.fail(std::string(short_name(id)) + fmt(" at n=50: phi %.3e >= psi %.3e", phi, psi));
    const double rate_psi = -predicted_rate(ex.profile_psi);
    const double rate_phi = -predicted_rate(ex.profile_phi);
    if (!(rate_phi > rate_psi)) o.fail(std::string(short_name(id)) + fmt(" rate %.4f <= %.4f", rate_phi, rate_psi));
  }
  if (o.passed) o.detail = "errors at n=50 and rates ordered for f1, f2, f3";
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  constexpr std::size_t samples = 100000;
  std::vector<SampleReport> reports = {
      check_essential_inequality(samples, 42),
      check_real_line_bound(samples, 42),
      check_p_nonneg(samples, 42),
      check_exp_bound(samples, 42),
  };
  for (ExampleId id : kAllExamples) {
    for (MapKind kind : kAllMapKinds) reports.push_back(check_decay_condition(id, kind, samples, 42));
  }
  double worst = INFINITY;
  for (const SampleReport& r : reports) {
    worst = std::min(worst, r.worst_margin);
    if (!r.passed) o.fail(r.check_name + fmt(" worst margin %.3e", r.worst_margin) + " at " + r.worst_point);
  }
  const double e = std::numbers::e;
  const LimitValues v = limit_values();
  if (std::abs(v.essential_at_origin - 1 / e) > 1e-10) o.fail(fmt("limit 1/e off by %.3e", v.essential_at_origin - 1 / e));
  if (std::abs(v.h_at_zero - (e - 1) / e) > 1e-10) o.fail(fmt("limit (e-1)/e off by %.3e", v.h_at_zero - (e - 1) / e));
  if (std::abs(v.h_at_minus_one - 1 / (e - 1)) > 1e-10) {
    o.fail(fmt("limit 1/(e-1) off by %.3e", v.h_at_minus_one - 1 / (e - 1)));
  }
  if (o.passed) o.detail = fmt("10 checks at 1e5 samples, worst margin %.3e; limits within 1e-10", worst);
  return o;
}

Outcome bound_decomposition() {
  Outcome o;
  double worst_rel = 0.0;
  for (ExampleId id : kAllExamples) {
    const ExampleFunction ex = example(id);
    for (MapKind kind : kAllMapKinds) {
      const DecayProfile& p = ex.profile(kind);
      const BoundVariant v = variant_for(kind);
      const double n1 = n1_norm_bound(p);
      for (int n = 1; n <= 100; ++n) {
        const double h = select_params(p, n).h;
        const double parts = discretization_bound(p, h) + truncation_bound(p, h, n);
        const double total = total_bound(p, v, n);
        if (!(parts <= total * (1 + 1e-12))) {
          o.fail(pair_name(id, kind) + fmt(" n=%.0f parts %.6e > total %.6e", n, parts, total));
        }
        const double direct = discretization_bound(p, h);
        const double via_norm = strip_discretization_estimate(n1, p.d(), h);
        const double rel = std::abs(direct - via_norm) / via_norm;
        worst_rel = std::max(worst_rel, rel);
        if (rel > 1e-14) o.fail(pair_name(id, kind) + fmt(" n=%.0f strip-norm formula off by %.3e", n, rel));
      }
    }
  }
  if (o.passed) o.detail = fmt("6 profiles x n=1..100; strip-norm formula agrees to %.1e", worst_rel);
  return o;
}

Outcome map_identities() {
  Outcome o;
  double worst_trip = 0.0, worst_deriv = 0.0;
  for (MapKind kind : kAllMapKinds) {
    for (double t : evaluation_grid()) {
      const double x = map_inverse(kind, t);
      const double back = map_forward(kind, x);
      const double rel = std::abs(back - t) / t;
      worst_trip = std::max(worst_trip, rel);
      if (rel > 1e-13) o.fail(std::string(short_name(kind)) + fmt(" round trip at t=%.3e off by %.3e", t, rel));

      const double step = 1e-5 * std::max(1.0, std::abs(x));
      const double fd = (map_forward(kind, x + step) - map_forward(kind, x - step)) / (2 * step);
      const double exact = map_derivative(kind, x);
      const double drel = std::abs(fd - exact) / exact;
      worst_deriv = std::max(worst_deriv, drel);
      if (drel > 1e-6) o.fail(std::string(short_name(kind)) + fmt(" derivative at x=%.3e off by %.3e", x, drel));
    }
    std::mt19937_64 rng(2024);
    const double width = max_strip_width(kind);
    std::uniform_real_distribution<double> xs(-30.0, 30.0);
    std::uniform_real_distribution<double> ys(-width, width);
    for (int i = 0; i < 10000; ++i) {
      const ComplexPoint z(xs(rng), ys(rng));
      if (std::abs(z.im()) >= width) continue;
      const std::complex<double> w = map_forward_complex(kind, z).value();
      const std::complex<double> wc = map_forward_complex(kind, z.conj()).value();
      if (std::abs(wc - std::conj(w)) > 1e-15 * std::abs(w)) {
        o.fail(std::string(short_name(kind)) + fmt(" conjugate symmetry fails at %.6f%+.6fi", z.re(), z.im()));
      }
    }
  }
  if (o.passed) o.detail = fmt("round trip %.1e, derivative %.1e, 2x1e4 conjugate pairs", worst_trip, worst_deriv);
  return o;
}

Outcome parameter_selection() {
  Outcome o;
  const SincParams f2 = select_params(example(ExampleId::F2).profile_phi, 10);
  if (f2.M != 10 || f2.N != 5) o.fail(fmt("f2 n=10 gave M=%.0f N=%.0f", f2.M, f2.N));
  const DecayProfile f1 = example(ExampleId::F1).profile_phi;
  const SincParams s10 = select_params(f1, 10);
  if (s10.N != 9) o.fail(fmt("f1/phi n=10 gave N=%.0f", s10.N));
  const double h12 = select_params(f1, 12).h;
  if (std::abs(h12 - 1.0) > 4 * std::numeric_limits<double>::epsilon()) o.fail(fmt("f1/phi n=12 gave h=%.17g", h12));
  if (o.passed) o.detail = "f2 n=10 -> M=10 N=5; f1/phi n=10 -> N=9, n=12 -> h=1";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("sinc_expdecay_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string bin = SINC_EXPDECAY_BINARY;
  struct Job {
    std::string name;
    std::string args;
  };
  const Job jobs[] = {
      {"verify", "verify --samples 100000 --seed 42 --out -"},
      {"run", "run --example f1 --map both --n-min 2 --n-max 100 --n-step 2 --out -"},
  };
  for (const Job& job : jobs) {
    std::string outputs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path file = dir / (job.name + std::to_string(rep) + ".out");
      const int raw = std::system((bin + " " + job.args + " > " + file.string() + " 2>&1").c_str());
      if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) o.fail(job.name + " exited abnormally");
      outputs[rep] = slurp(file);
    }
    if (outputs[0].empty()) o.fail(job.name + " produced no output");
    if (outputs[0] != outputs[1]) o.fail(job.name + " output differs between invocations");
  }

  // The file-writing path of run as well.
  std::string csv[2];
  for (int rep = 0; rep < 2; ++rep) {
    const std::string prefix = (dir / ("f2_" + std::to_string(rep))).string();
    const int raw = std::system((bin + " run --example f2 --out " + prefix + " > /dev/null 2>&1").c_str());
    if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) o.fail("run to files exited abnormally");
    csv[rep] = slurp(prefix + "_psi.csv") + slurp(prefix + "_phi.csv");
  }
  if (csv[0].empty() || csv[0] != csv[1]) o.fail("run CSV files differ between invocations");

  fs::remove_all(dir);
  if (o.passed) o.detail = "verify and run outputs byte-identical across two invocations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"bound dominance", bound_dominance},
      {"convergence rate", convergence_rates},
      {"new map beats old", new_map_wins},
      {"lemma suite", lemma_suite},
      {"bound decomposition", bound_decomposition},
      {"map identities", map_identities},
      {"parameter selection", parameter_selection},
      {"determinism", determinism},
  };
  int failures = 0;
  int index = 1;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << index++ << ". " << c.name << ": " << o.detail << '\n';
    failures += o.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
