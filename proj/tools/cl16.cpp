// cl16: command-line front end for the cirquent calculus toolkit.
//
// Exit codes: 0 success; 1 invalid cirquent / failed check / illegal run;
// 2 usage, parse, or resource errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cl16/calculus.hpp"
#include "cl16/enumerate.hpp"
#include "cl16/oracle.hpp"
#include "cl16/parse.hpp"
#include "cl16/prover.hpp"
#include "cl16/purify.hpp"
#include "cl16/rank.hpp"
#include "cl16/semantics.hpp"
#include "cl16/xcheck.hpp"

using namespace cl16;
using nlohmann::json;

namespace {

long rankDigitCap() {
  if (const char* env = std::getenv("CL16_RANK_DIGIT_CAP")) {
    long cap = std::atol(env);
    if (cap > 0) return cap;
  }
  return kDefaultRankDigitCap;
}

std::string traceLine(const TraceStep& step) {
  const RuleDescriptor& d = step.descriptor;
  std::string s = ruleName(d.rule);
  if (d.variant != Variant::None) s += d.variant == Variant::A ? "(a)" : "(b)";
  s += " @ ";
  s += d.path ? pathStr(*d.path) : std::string();
  if (d.innerPath) s += " inner " + pathStr(*d.innerPath);
  s += " : " + print(step.before) + " => " + print(step.after);
  return s;
}

json refutationToJson(const Refutation& node) {
  json j;
  json state = json::object();
  for (const auto& [cl, i] : node.state) state[cl.str()] = i;
  j["state"] = state;
  if (node.envStops) {
    j["environment"] = "stop";
    j["falsifying"] = printInterpretation(node.falsifying);
  } else {
    j["environment"] = node.envCluster.str() + "." + std::to_string(node.envChoice);
    j["after"] = refutationToJson(*node.envChild);
  }
  json branches = json::array();
  for (const auto& [move, child] : node.machineBranches) {
    json b;
    b["machine"] = move.cluster.str() + "." + std::to_string(move.choice);
    b["then"] = refutationToJson(*child);
    branches.push_back(std::move(b));
  }
  j["machineBranches"] = std::move(branches);
  return j;
}

void printRefutation(const Refutation& node, int indent, std::ostream& out) {
  std::string pad(2 * indent, ' ');
  if (node.envStops)
    out << pad << "environment stops; falsified under " << printInterpretation(node.falsifying)
        << "\n";
  else {
    out << pad << "environment plays " << node.envCluster.str() << "." << node.envChoice << ":\n";
    printRefutation(*node.envChild, indent + 1, out);
  }
  for (const auto& [move, child] : node.machineBranches) {
    out << pad << "if machine plays " << move.cluster.str() << "." << move.choice << ":\n";
    printRefutation(*child, indent + 1, out);
  }
}

int runPlay(const Cirquent& c, const OracleCaps& caps) {
  std::optional<Policy> policy;
  bool valid = false;
  try {
    OracleResult r = decideUniform(c, caps);
    valid = r.valid;
    if (r.valid) policy = std::move(r.policy);
  } catch (const CapExceeded&) {
    std::cout << "(cirquent exceeds oracle caps; machine plays the greedy heuristic)\n";
  }
  std::cout << "playing: " << print(c) << "\n";
  if (!valid)
    std::cout << "note: no winning machine strategy exists for this cirquent; the machine "
                 "plays a greedy heuristic\n";
  std::cout << "you are the environment: resolve conjunctive clusters with `c<n>=0|1`; "
               "`pass`, `state`, `end`\n";

  ResolutionMap state;
  Run transcript;
  auto machineTurn = [&] {
    while (true) {
      Action a = policy ? policy->at(state) : greedyAction(c, state);
      if (a.wait) break;
      state.emplace(a.cluster, a.choice);
      transcript.push_back({Player::Machine, {a.cluster, a.choice}});
      std::cout << "machine plays " << a.cluster.str() << "." << a.choice << "\n";
    }
  };
  auto adjudicate = [&] {
    std::cout << "final state:";
    for (const auto& [cl, i] : state) std::cout << " " << cl.str() << "=" << i;
    if (state.empty()) std::cout << " (empty)";
    std::cout << "\n";
    bool all = true;
    for (const Interpretation& interp : allInterpretations(lettersOf(c))) {
      Player w = winEval(c, state, interp);
      if (w != Player::Machine) all = false;
      std::cout << "  under "
                << (printInterpretation(interp).empty() ? "(no letters)"
                                                        : printInterpretation(interp))
                << ": " << (w == Player::Machine ? "T" : "B") << " wins\n";
    }
    std::cout << (all ? "T wins under all interpretations\n"
                      : "B wins under some interpretation\n");
  };

  machineTurn();
  std::string lineIn;
  while (std::cout << "> " << std::flush, std::getline(std::cin, lineIn)) {
    if (lineIn.empty()) continue;
    if (lineIn == "end") {
      adjudicate();
      return 0;
    }
    if (lineIn == "state") {
      std::cout << "cirquent: " << print(c) << "\nresolution:";
      for (const auto& [cl, i] : state) std::cout << " " << cl.str() << "=" << i;
      std::cout << (state.empty() ? " (empty)" : "") << "\ntranscript: " << printRun(transcript)
                << "\n";
      continue;
    }
    if (lineIn == "pass") {
      std::cout << "machine waits\n";
      continue;
    }
    // c<n>=0|1 resolves a conjunctive cluster; disjunctive moves belong to the machine.
    size_t eq = lineIn.find('=');
    if ((lineIn[0] != 'c' && lineIn[0] != 'd') || eq == std::string::npos) {
      std::cout << "commands: c<n>=0|1, pass, state, end\n";
      continue;
    }
    if (lineIn[0] == 'd') {
      std::cout << "illegal move: disjunctive clusters are resolved by the machine\n";
      continue;
    }
    int index = 0, choice = -1;
    try {
      index = std::stoi(lineIn.substr(1, eq - 1));
      std::string rhs = lineIn.substr(eq + 1);
      if (rhs == "0" || rhs == "1") choice = rhs[0] - '0';
    } catch (...) {
    }
    if (choice < 0) {
      std::cout << "commands: c<n>=0|1, pass, state, end\n";
      continue;
    }
    ClusterId cl = conj(index);
    if (!clustersOf(c).count(cl)) {
      std::cout << "illegal move: cluster " << cl.str() << " does not occur here\n";
      continue;
    }
    if (state.count(cl)) {
      std::cout << "illegal move: cluster " << cl.str() << " is already resolved\n";
      continue;
    }
    state.emplace(cl, choice);
    transcript.push_back({Player::Environment, {cl, choice}});
    machineTurn();
  }
  adjudicate();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cirquent calculus toolkit (parallel and choice connectives, clustered)"};
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "machine-readable output");

  std::string expr, runText, interpText, outFile, proofFile;
  OracleCaps caps;
  bool wantStrategy = false, wantWitness = false, wantTrace = false;
  XcheckOptions xopt;
  int genNodes = 2, genLetters = 2, genClusters = 2;
  bool genCount = false;

  auto* fmt = app.add_subcommand("fmt", "parse and print the canonical form");
  fmt->add_option("expr", expr)->required();

  auto* cirq = app.add_subcommand("cirquentize", "assign fresh clusters to bare +[] / *[]");
  cirq->add_option("expr", expr)->required();

  auto* rk = app.add_subcommand("rank", "exact rank (may hit the digit cap)");
  rk->add_option("expr", expr)->required();

  auto* neg = app.add_subcommand("negate", "canonical form of the negation");
  neg->add_option("expr", expr)->required();

  auto* ev = app.add_subcommand("eval", "legality verdict and winner for a run");
  ev->add_option("expr", expr)->required();
  ev->add_option("--run", runText, "run, e.g. \"T d1.0; B c2.1\"");
  ev->add_option("--interp", interpText, "interpretation, e.g. \"p=1,q=0\"")->required();

  auto* orc = app.add_subcommand("oracle", "brute-force uniform-validity decision");
  orc->add_option("expr", expr)->required();
  orc->add_flag("--strategy", wantStrategy, "dump the extracted policy when valid");
  orc->add_flag("--witness", wantWitness, "dump a refutation tree when invalid");
  orc->add_option("--max-clusters", caps.maxClusters);
  orc->add_option("--max-letters", caps.maxLetters);

  auto* pv = app.add_subcommand("prove", "decision procedure emitting a checkable proof");
  pv->add_option("expr", expr)->required();
  pv->add_option("--out", outFile, "write the proof as JSON");
  pv->add_flag("--witness", wantWitness, "attach an oracle refutation when invalid");

  auto* ck = app.add_subcommand("check", "check a proof file");
  ck->add_option("file", proofFile)->required();

  auto* pf = app.add_subcommand("purify", "run the purification procedure");
  pf->add_option("expr", expr)->required();
  pf->add_flag("--trace", wantTrace, "print the rewrite trace");

  auto* xc = app.add_subcommand("xcheck", "exhaustive prover-vs-oracle sweep");
  xc->add_option("--max-nodes", xopt.maxNodes);
  xc->add_option("--letters", xopt.letters);
  xc->add_option("--clusters", xopt.clusters);
  xc->add_option("--sample", xopt.sample, "random sample size (0 = exhaustive)");
  xc->add_option("--seed", xopt.seed);
  xc->add_option("--threads", xopt.threads);
  bool xcPolicies = false;
  xc->add_flag("--policies", xcPolicies, "also simulate every oracle policy");

  auto* pl = app.add_subcommand("play", "interactive play, human as environment");
  pl->add_option("expr", expr)->required();

  auto* gn = app.add_subcommand("gen", "enumerate cirquents (harness support)");
  gn->add_option("--max-nodes", genNodes);
  gn->add_option("--letters", genLetters);
  gn->add_option("--clusters", genClusters);
  gn->add_flag("--count", genCount, "print only the count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fmt) {
      Cirquent c = parse(expr);
      if (asJson)
        std::cout << json{{"text", print(c)}, {"ast", astToJson(c)}}.dump(2) << "\n";
      else
        std::cout << print(c) << "\n";
      return 0;
    }

    if (*cirq) {
      Cirquent c = cirquentize(parseExtended(expr));
      if (asJson)
        std::cout << json{{"text", print(c)}, {"ast", astToJson(c)}}.dump(2) << "\n";
      else
        std::cout << print(c) << "\n";
      return 0;
    }

    if (*rk) {
      try {
        Rank r = rank(parse(expr), rankDigitCap());
        if (asJson)
          std::cout << json{{"rank", r.get_str()}}.dump() << "\n";
        else
          std::cout << r.get_str() << "\n";
        return 0;
      } catch (const RankOverflow& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
      }
    }

    if (*neg) {
      std::cout << print(negate(parse(expr))) << "\n";
      return 0;
    }

    if (*ev) {
      Cirquent c = parse(expr);
      Run run = parseRun(runText);
      Interpretation interp = parseInterpretation(interpText);
      for (const Letter& p : lettersOf(c))
        if (!interp.covers(p)) {
          std::cerr << "interpretation does not cover letter " << p << "\n";
          return 2;
        }
      Legality legal = checkLegal(run);
      if (!legal.ok) {
        if (asJson)
          std::cout << json{{"legal", false},
                            {"index", legal.index},
                            {"condition", legal.condition}}
                           .dump()
                    << "\n";
        else
          std::cout << "illegal at index " << legal.index << " (condition " << legal.condition
                    << ")\n";
        return 1;
      }
      Player w = winEval(c, resolutionOf(run), interp);
      std::string winner = w == Player::Machine ? "T" : "B";
      if (asJson)
        std::cout << json{{"legal", true}, {"winner", winner}}.dump() << "\n";
      else
        std::cout << "legal; winner: " << winner << "\n";
      return 0;
    }

    if (*orc) {
      Cirquent c = parse(expr);
      OracleResult r = decideUniform(c, caps, wantWitness);
      if (asJson) {
        json j{{"valid", r.valid}};
        if (r.valid && wantStrategy) j["policy"] = r.policy->dump();
        if (!r.valid && r.refutation) j["refutation"] = refutationToJson(*r.refutation);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (r.valid ? "VALID" : "INVALID") << "\n";
        if (r.valid && wantStrategy) std::cout << r.policy->dump();
        if (!r.valid && r.refutation) printRefutation(*r.refutation, 0, std::cout);
      }
      return r.valid ? 0 : 1;
    }

    if (*pv) {
      Cirquent c = parse(expr);
      Verdict v = prove(c);
      if (v.valid) {
        json pj = proofToJson(*v.proof);
        if (!outFile.empty()) {
          std::ofstream out(outFile);
          out << pj.dump(2) << "\n";
        }
        if (asJson)
          std::cout << json{{"valid", true}, {"lines", v.proof->size()}, {"proof", pj}}.dump()
                    << "\n";
        else
          std::cout << "VALID (" << v.proof->size() << "-line proof"
                    << (outFile.empty() ? "" : ", written to " + outFile) << ")\n";
        return 0;
      }
      json j{{"valid", false}, {"reason", v.reason}};
      if (wantWitness) {
        try {
          OracleResult r = decideUniform(c, caps, true);
          if (!r.valid && r.refutation) j["refutation"] = refutationToJson(*r.refutation);
        } catch (const CapExceeded&) {
        }
      }
      if (asJson)
        std::cout << j.dump(2) << "\n";
      else
        std::cout << "INVALID (" << v.reason << ")\n";
      return 1;
    }

    if (*ck) {
      std::ifstream in(proofFile);
      if (!in.good()) {
        std::cerr << "cannot open " << proofFile << "\n";
        return 2;
      }
      json pj;
      in >> pj;
      Proof proof = proofFromJson(pj);
      ProofCheck pc = checkProof(proof);
      if (asJson) {
        json j{{"ok", pc.ok}};
        if (pc.ok)
          j["conclusion"] = print(pc.conclusion);
        else {
          j["line"] = pc.errorLine;
          j["reason"] = pc.reason;
        }
        std::cout << j.dump() << "\n";
      } else if (pc.ok) {
        std::cout << "OK conclusion: " << print(pc.conclusion) << "\n";
      } else {
        std::cout << "FAIL at line " << pc.errorLine << ": " << pc.reason << "\n";
      }
      return pc.ok ? 0 : 1;
    }

    if (*pf) {
      PurifyResult r = purify(parse(expr));
      if (asJson) {
        json steps = json::array();
        for (const TraceStep& s : r.trace)
          steps.push_back({{"rule", ruleName(s.descriptor.rule)},
                           {"line", traceLine(s)},
                           {"stage", s.stage}});
        std::cout << json{{"pure", print(r.pure)}, {"trace", steps}}.dump(2) << "\n";
      } else {
        std::cout << print(r.pure) << "\n";
        if (wantTrace)
          for (const TraceStep& s : r.trace) std::cout << traceLine(s) << "\n";
      }
      return 0;
    }

    if (*xc) {
      xopt.checkPolicies = xcPolicies;
      XcheckReport rep = xcheck(xopt);
      double agreePct =
          rep.total == 0 ? 100.0 : 100.0 * (rep.total - rep.failureCount) / rep.total;
      if (asJson) {
        json fails = json::array();
        for (const auto& f : rep.failures)
          fails.push_back({{"cirquent", f.cirquent}, {"detail", f.detail}});
        std::cout << json{{"total", rep.total},
                          {"oracleValid", rep.oracleValid},
                          {"proofsChecked", rep.proofsChecked},
                          {"policiesSimulated", rep.policiesSimulated},
                          {"failures", rep.failureCount},
                          {"counterexamples", fails}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "swept " << rep.total << " cirquents; oracle-valid " << rep.oracleValid
                  << "; proofs checked " << rep.proofsChecked;
        if (xcPolicies) std::cout << "; policies simulated " << rep.policiesSimulated;
        std::cout << "\nagreement: " << agreePct << "%\n";
        for (const auto& f : rep.failures)
          std::cout << "counterexample: " << f.cirquent << " -- " << f.detail << "\n";
      }
      return rep.ok() ? 0 : 1;
    }

    if (*pl) return runPlay(parse(expr), caps);

    if (*gn) {
      Enumerator en(genNodes, defaultLetters(genLetters), defaultClusters(genClusters));
      if (genCount) {
        std::cout << en.total() << "\n";
        return 0;
      }
      for (uint64_t i = 0; i < en.total(); ++i) {
        if (asJson)
          std::cout << json{{"i", i}, {"text", print(en.at(i))}}.dump() << "\n";
        else
          std::cout << print(en.at(i)) << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
