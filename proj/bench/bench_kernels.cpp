// Serial vs parallel timings of the data-parallel kernels. Each kernel is
// run in both modes with the same seed and the results are compared.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "descartes/multisym.hpp"
#include "descartes/quartic.hpp"
#include "descartes/sweeps.hpp"

using namespace descartes;

namespace {

template <class F>
auto timed(F&& f, double& seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  auto result = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

template <class F, class Eq>
void bench(const std::string& name, F&& run, Eq&& same) {
  double ts = 0, tp = 0;
  const auto serial = timed([&] { return run(Execution::Serial); }, ts);
  const auto parallel = timed([&] { return run(Execution::Parallel); }, tp);
  std::printf("%-28s serial %8.3f s  parallel %8.3f s  speedup %5.2fx  %s\n", name.c_str(), ts, tp,
              tp > 0 ? ts / tp : 0.0, same(serial, parallel) ? "identical" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const int scale = argc > 1 ? std::stoi(argv[1]) : 1;
  std::printf("threads: %d, scale: %d\n", worker_count(), scale);

  bench("sign claims (multisym)",
        [&](Execution e) { return multisym::check_sign_claims(5000 * scale, 1, e); },
        [](const auto& a, const auto& b) {
          if (a.claims.size() != b.claims.size() || a.degenerate != b.degenerate) return false;
          for (std::size_t i = 0; i < a.claims.size(); ++i)
            if (a.claims[i].held != b.claims[i].held) return false;
          return true;
        });

  bench("couple sweep d = 5",
        [&](Execution e) { return couple_sweep(5, 2, e); },
        [](const SweepSummary& a, const SweepSummary& b) {
          if (a.records.size() != b.records.size()) return false;
          for (std::size_t i = 0; i < a.records.size(); ++i)
            if (a.records[i].outcome.iterations != b.records[i].outcome.iterations) return false;
          return a.realizable_found == b.realizable_found;
        });

  bench("generator soundness (L-)",
        [&](Execution e) { return generator_soundness(quartic::Generator::LMinus, 2000 * scale, 3, e); },
        [](const SoundnessReport& a, const SoundnessReport& b) { return a.mismatches == b.mismatches; });

  bench("root-count oracle",
        [&](Execution e) { return root_count_oracle(4000 * scale, 8, 4, e); },
        [](const OracleReport& a, const OracleReport& b) { return a.mismatches == b.mismatches; });

  quartic::SliceSpec spec;
  spec.base = quartic::QuarticPoint{-2, 0, 0, 4};
  spec.first = {2, -6, 0, 60 * scale};
  spec.second = {1, 0, 8, 60 * scale};
  bench("quartic slice 60x60", [&](Execution e) { return quartic::slice_grid(spec, e); },
        [](const auto& a, const auto& b) { return a == b; });
  return 0;
}
