#include "cl16/xcheck.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "cl16/enumerate.hpp"
#include "cl16/oracle.hpp"
#include "cl16/parse.hpp"
#include "cl16/prover.hpp"

namespace cl16 {

namespace {

struct Shared {
  const XcheckOptions& opt;
  const Enumerator& en;
  std::vector<uint64_t> sampleIndices;  // empty = exhaustive
  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> oracleValid{0};
  std::atomic<uint64_t> proofsChecked{0};
  std::atomic<uint64_t> policiesSimulated{0};
  std::atomic<uint64_t> failureCount{0};
  std::mutex failuresMutex;
  std::vector<XcheckFailure> failures;

  uint64_t workItems() const {
    return sampleIndices.empty() ? en.total() : sampleIndices.size();
  }

  void fail(const Cirquent& c, const std::string& detail) {
    uint64_t n = failureCount.fetch_add(1);
    if (n >= XcheckReport::kMaxRecorded) return;
    std::lock_guard<std::mutex> lock(failuresMutex);
    failures.push_back({print(c), detail});
  }
};

void checkOne(Shared& sh, const Cirquent& c) {
  OracleResult oracle = decideUniform(c, {}, false, sh.opt.checkPolicies);
  if (oracle.valid) sh.oracleValid.fetch_add(1, std::memory_order_relaxed);

  if (sh.opt.runProver) {
    Verdict verdict = prove(c);
    if (verdict.valid != oracle.valid) {
      sh.fail(c, std::string("prover says ") + (verdict.valid ? "valid" : "invalid") +
                     ", oracle says " + (oracle.valid ? "valid" : "invalid"));
      return;
    }
    if (verdict.valid && sh.opt.checkProofs) {
      ProofCheck pc = checkProof(*verdict.proof);
      if (!pc.ok)
        sh.fail(c, "emitted proof fails at line " + std::to_string(pc.errorLine) + ": " + pc.reason);
      else if (pc.conclusion != c)
        sh.fail(c, "emitted proof concludes \"" + print(pc.conclusion) + "\"");
      else
        sh.proofsChecked.fetch_add(1, std::memory_order_relaxed);
    }
  }

  if (sh.opt.checkPolicies && oracle.valid) {
    for (const auto& schedule : allEnvSchedules(c)) {
      SimulationResult sim = simulate(c, *oracle.policy, schedule);
      if (!sim.wonUnderAll) {
        std::string moves;
        for (const auto& [cl, i] : schedule) moves += " " + cl.str() + "." + std::to_string(i);
        sh.fail(c, "policy loses under schedule" + (moves.empty() ? " (empty)" : moves));
        return;
      }
    }
    sh.policiesSimulated.fetch_add(1, std::memory_order_relaxed);
  }
}

void worker(Shared& sh) {
  const uint64_t items = sh.workItems();
  constexpr uint64_t kChunk = 1024;
  while (true) {
    uint64_t begin = sh.next.fetch_add(kChunk);
    if (begin >= items) return;
    uint64_t end = std::min(begin + kChunk, items);
    for (uint64_t i = begin; i < end; ++i) {
      uint64_t index = sh.sampleIndices.empty() ? i : sh.sampleIndices[i];
      checkOne(sh, sh.en.at(index));
    }
  }
}

}  // namespace

XcheckReport xcheck(const XcheckOptions& options) {
  Enumerator en(options.maxNodes, defaultLetters(options.letters),
                defaultClusters(options.clusters));
  Shared sh{options, en};
  if (options.sample > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<uint64_t> dist(0, en.total() - 1);
    sh.sampleIndices.reserve(options.sample);
    for (uint64_t i = 0; i < options.sample; ++i) sh.sampleIndices.push_back(dist(rng));
  }

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back([&sh] { worker(sh); });
  worker(sh);
  for (std::thread& t : pool) t.join();

  XcheckReport report;
  report.total = sh.workItems();
  report.oracleValid = sh.oracleValid.load();
  report.proofsChecked = sh.proofsChecked.load();
  report.policiesSimulated = sh.policiesSimulated.load();
  report.failureCount = sh.failureCount.load();
  report.failures = std::move(sh.failures);
  return report;
}

}  // namespace cl16
