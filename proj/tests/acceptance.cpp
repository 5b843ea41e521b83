// Acceptance run: one line per criterion, each aggregating the suite checks of that
// criterion over the presets it applies to. Exit status is nonzero iff a line fails.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "ah/error.hpp"
#include "ah/suite.hpp"

namespace {

struct Criterion {
  int id;
  const char* summary;
  std::vector<std::string> presets;
};

const std::vector<std::string> kAll{"A1_adj", "A2_adj", "B2_adj", "A1xA1_adj"};

const std::vector<Criterion> kCriteria{
    {1, "m^{w^tri,w} = v^{l(w0)} (A1 l<=12, A2 l<=8)", {"A1_adj", "A2_adj"}},
    {2, "signed m^{w^tri,w}(-1) = 1 and parity (A1 l<=12, A2 l<=8)", {"A1_adj", "A2_adj"}},
    {3, "l(x) + l(t_varsigma w0 x^-1) = l(t_varsigma w0) over W_ext^res", kAll},
    {4, "l(w t_lambda) = l(w) + l(t_lambda), w in W_ext^S, lambda antidominant, lengths <= 10", kAll},
    {5, "periodic order properties (1)-(5), 500 instances each", kAll},
    {6, "^A W_ext representatives and w -> w_A w^tri bijection", kAll},
    {7, "projective filtration endpoints, sandwich and total multiplicity", kAll},
    {8, "projective filtration independent of the reduced expression", kAll},
    {9, "Freudenthal multiplicities equal Kostant, Weyl dimension", kAll},
    {10, "Phi(L_w) labels below w, total equals dim V(mu)", kAll},
    {11, "A1 KL polynomials equal v^{l(x)-l(y)} up to length 10", {"A1_adj"}},
};

}  // namespace

int main() {
  bool all_ok = true;
  for (const auto& c : kCriteria) {
    bool ok = true;
    std::size_t checks = 0;
    std::string first_failure;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& p : c.presets) {
      ah::SuiteOptions opt;
      opt.criterion = c.id;
      try {
        const ah::SuiteReport r = ah::run_suite(p, opt);
        checks += r.checks.size();
        for (const auto& chk : r.checks)
          if (!chk.passed) {
            ok = false;
            if (first_failure.empty()) first_failure = p + " " + chk.name + ": " + chk.detail + " [" + chk.counterexample + "]";
          }
        if (r.checks.empty()) {
          ok = false;
          if (first_failure.empty()) first_failure = p + ": no checks ran";
        }
      } catch (const std::exception& e) {
        ok = false;
        if (first_failure.empty()) first_failure = p + ": " + e.what();
      }
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    all_ok = all_ok && ok;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.summary << "  ["
              << checks << " checks on";
    for (const auto& p : c.presets) std::cout << ' ' << p;
    std::cout << ", " << ms << " ms]";
    if (!ok) std::cout << "  " << first_failure;
    std::cout << std::endl;
  }
  return all_ok ? 0 : 1;
}
