#include "cl16/oracle.hpp"

#include <algorithm>
#include <functional>

namespace cl16 {

std::string Action::str() const {
  if (wait) return "wait";
  return cluster.str() + "." + std::to_string(choice);
}

std::vector<int8_t> Policy::key(const ResolutionMap& state) const {
  std::vector<int8_t> k(clusters_.size(), -1);
  for (size_t i = 0; i < clusters_.size(); ++i) {
    auto it = state.find(clusters_[i]);
    if (it != state.end()) k[i] = static_cast<int8_t>(it->second);
  }
  return k;
}

void Policy::define(const ResolutionMap& state, Action a) { actions_[key(state)] = a; }

bool Policy::defined(const ResolutionMap& state) const { return actions_.count(key(state)) != 0; }

Action Policy::at(const ResolutionMap& state) const {
  auto it = actions_.find(key(state));
  if (it == actions_.end())
    throw std::out_of_range("policy undefined on a reached state (policy-extraction bug)");
  return it->second;
}

std::string Policy::dump() const {
  std::vector<std::string> lines;
  for (const auto& [k, action] : actions_) {
    std::string s = "state {";
    for (size_t i = 0; i < clusters_.size(); ++i) {
      if (i) s += ',';
      s += clusters_[i].str();
      s += '=';
      s += k[i] < 0 ? '?' : char('0' + k[i]);
    }
    s += "} -> ";
    s += action.str();
    lines.push_back(std::move(s));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

namespace {

// Internal engine: states are base-3 digit vectors over the cirquent's sorted
// clusters (-1 unresolved via digit 0; 1 and 2 for choices 0 and 1), encoded
// as an index into a memo table.
class Engine {
 public:
  Engine(const Cirquent& c, const OracleCaps& caps) : c_(c) {
    std::set<ClusterId> cs = clustersOf(c);
    clusters_.assign(cs.begin(), cs.end());
    if (static_cast<int>(clusters_.size()) > caps.maxClusters)
      throw CapExceeded("cirquent has " + std::to_string(clusters_.size()) +
                        " clusters, cap is " + std::to_string(caps.maxClusters));
    std::set<Letter> ls = lettersOf(c);
    if (static_cast<int>(ls.size()) > caps.maxLetters)
      throw CapExceeded("cirquent has " + std::to_string(ls.size()) + " letters, cap is " +
                        std::to_string(caps.maxLetters));
    interps_ = allInterpretations(ls);
    size_t states = 1;
    for (size_t i = 0; i < clusters_.size(); ++i) states *= 3;
    memoWin_.assign(states, -1);
  }

  using State = std::vector<int8_t>;  // per-cluster: -1 unresolved, 0, 1

  State emptyState() const { return State(clusters_.size(), -1); }

  size_t encode(const State& s) const {
    size_t idx = 0;
    for (int8_t d : s) idx = idx * 3 + static_cast<size_t>(d + 1);
    return idx;
  }

  ResolutionMap toRes(const State& s) const {
    ResolutionMap res;
    for (size_t i = 0; i < s.size(); ++i)
      if (s[i] >= 0) res.emplace(clusters_[i], s[i]);
    return res;
  }

  bool wonUnderAllAt(const State& s) const {
    ResolutionMap res = toRes(s);
    for (const Interpretation& interp : interps_)
      if (winEval(c_, res, interp) != Player::Machine) return false;
    return true;
  }

  const Interpretation* falsifying(const State& s) const {
    ResolutionMap res = toRes(s);
    for (const Interpretation& interp : interps_)
      if (winEval(c_, res, interp) != Player::Machine) return &interp;
    return nullptr;
  }

  bool waitBranch(const State& s) {
    if (!wonUnderAllAt(s)) return false;
    for (size_t i = 0; i < clusters_.size(); ++i) {
      if (s[i] >= 0 || clusters_[i].polarity != Polarity::Conjunctive) continue;
      for (int8_t v = 0; v <= 1; ++v) {
        State t = s;
        t[i] = v;
        if (!winM(t)) return false;
      }
    }
    return true;
  }

  // Least (cluster index, then choice 0 before 1) winning machine move.
  std::optional<std::pair<size_t, int8_t>> winningMove(const State& s) {
    for (size_t i = 0; i < clusters_.size(); ++i) {
      if (s[i] >= 0 || clusters_[i].polarity != Polarity::Disjunctive) continue;
      for (int8_t v = 0; v <= 1; ++v) {
        State t = s;
        t[i] = v;
        if (winM(t)) return std::make_pair(i, v);
      }
    }
    return std::nullopt;
  }

  // Well-founded: every recursive call strictly shrinks the unresolved set.
  bool winM(const State& s) {
    size_t idx = encode(s);
    if (memoWin_[idx] >= 0) return memoWin_[idx] != 0;
    bool win = winningMove(s).has_value() || waitBranch(s);
    memoWin_[idx] = win ? 1 : 0;
    return win;
  }

  Policy extractPolicy() {
    Policy policy(clusters_);
    std::vector<State> frontier{emptyState()};
    std::set<size_t> visited{encode(frontier[0])};
    while (!frontier.empty()) {
      State s = frontier.back();
      frontier.pop_back();
      std::vector<State> next;
      if (waitBranch(s)) {
        policy.define(toRes(s), Action::waiting());
        for (size_t i = 0; i < clusters_.size(); ++i) {
          if (s[i] >= 0 || clusters_[i].polarity != Polarity::Conjunctive) continue;
          for (int8_t v = 0; v <= 1; ++v) {
            State t = s;
            t[i] = v;
            next.push_back(std::move(t));
          }
        }
      } else {
        auto mv = winningMove(s);
        if (!mv) throw std::logic_error("policy extraction on a losing state");
        policy.define(toRes(s), Action::resolve(clusters_[mv->first], mv->second));
        State t = s;
        t[mv->first] = mv->second;
        next.push_back(std::move(t));
      }
      for (State& t : next)
        if (visited.insert(encode(t)).second) frontier.push_back(std::move(t));
    }
    return policy;
  }

  std::unique_ptr<Refutation> buildRefutation(const State& s) {
    if (++refutationNodes_ > kRefutationNodeBudget)
      throw CapExceeded("refutation tree exceeds the node budget; rerun with fewer clusters");
    auto node = std::make_unique<Refutation>();
    node->state = toRes(s);
    if (const Interpretation* bad = falsifying(s)) {
      node->envStops = true;
      node->falsifying = *bad;
    } else {
      // winM(s) is false and the state is won under all interpretations, so
      // some conjunctive expansion must be losing for the machine.
      node->envStops = false;
      bool found = false;
      for (size_t i = 0; i < clusters_.size() && !found; ++i) {
        if (s[i] >= 0 || clusters_[i].polarity != Polarity::Conjunctive) continue;
        for (int8_t v = 0; v <= 1 && !found; ++v) {
          State t = s;
          t[i] = v;
          if (!winM(t)) {
            node->envCluster = clusters_[i];
            node->envChoice = v;
            node->envChild = buildRefutation(t);
            found = true;
          }
        }
      }
      if (!found) throw std::logic_error("refutation of a winning state");
    }
    for (size_t i = 0; i < clusters_.size(); ++i) {
      if (s[i] >= 0 || clusters_[i].polarity != Polarity::Disjunctive) continue;
      for (int8_t v = 0; v <= 1; ++v) {
        State t = s;
        t[i] = v;
        node->machineBranches.emplace_back(Move{clusters_[i], v}, buildRefutation(t));
      }
    }
    return node;
  }

  const Cirquent& c_;
  std::vector<ClusterId> clusters_;
  std::vector<Interpretation> interps_;
  std::vector<int8_t> memoWin_;

  static constexpr size_t kRefutationNodeBudget = 200000;
  size_t refutationNodes_ = 0;
};

}  // namespace

OracleResult decideUniform(const Cirquent& c, const OracleCaps& caps, bool wantRefutation,
                           bool wantPolicy) {
  Engine eng(c, caps);
  OracleResult result;
  result.valid = eng.winM(eng.emptyState());
  if (result.valid) {
    if (wantPolicy) result.policy = eng.extractPolicy();
  } else if (wantRefutation) {
    result.refutation = eng.buildRefutation(eng.emptyState());
  }
  return result;
}

SimulationResult simulate(const Cirquent& c, const Policy& policy,
                          const std::vector<std::pair<ClusterId, int>>& envSchedule) {
  std::set<ClusterId> clusters = clustersOf(c);
  ResolutionMap state;
  size_t nextEnv = 0;
  while (true) {
    Action a = policy.at(state);
    if (!a.wait) {
      if (a.cluster.polarity != Polarity::Disjunctive || state.count(a.cluster))
        throw std::logic_error("policy move is not a legal machine move");
      state.emplace(a.cluster, a.choice);
      continue;
    }
    if (nextEnv >= envSchedule.size()) break;
    auto [cl, choice] = envSchedule[nextEnv++];
    if (cl.polarity != Polarity::Conjunctive || state.count(cl) || !clusters.count(cl))
      throw std::invalid_argument("environment schedule move " + cl.str() + "." +
                                  std::to_string(choice) + " is not legal here");
    state.emplace(cl, choice);
  }
  SimulationResult result;
  result.finalState = state;
  result.wonUnderAll = true;
  for (const Interpretation& interp : allInterpretations(lettersOf(c))) {
    Player w = winEval(c, state, interp);
    if (w != Player::Machine) result.wonUnderAll = false;
    result.winners.emplace_back(interp, w);
  }
  return result;
}

namespace {

void schedulesFrom(const std::vector<ClusterId>& conjClusters, std::vector<bool>& used,
                   std::vector<std::pair<ClusterId, int>>& current,
                   std::vector<std::vector<std::pair<ClusterId, int>>>& out) {
  out.push_back(current);  // the environment may stop at any point
  for (size_t i = 0; i < conjClusters.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    for (int v = 0; v <= 1; ++v) {
      current.emplace_back(conjClusters[i], v);
      schedulesFrom(conjClusters, used, current, out);
      current.pop_back();
    }
    used[i] = false;
  }
}

}  // namespace

std::vector<std::vector<std::pair<ClusterId, int>>> allEnvSchedules(const Cirquent& c) {
  std::vector<ClusterId> conjClusters;
  for (ClusterId cl : clustersOf(c))
    if (cl.polarity == Polarity::Conjunctive) conjClusters.push_back(cl);
  std::vector<bool> used(conjClusters.size(), false);
  std::vector<std::pair<ClusterId, int>> current;
  std::vector<std::vector<std::pair<ClusterId, int>>> out;
  schedulesFrom(conjClusters, used, current, out);
  return out;
}

Action greedyAction(const Cirquent& c, const ResolutionMap& state) {
  std::vector<Interpretation> interps = allInterpretations(lettersOf(c));
  auto score = [&](const ResolutionMap& res) {
    int n = 0;
    for (const Interpretation& interp : interps)
      if (winEval(c, res, interp) == Player::Machine) ++n;
    return n;
  };
  Action best = Action::waiting();
  int bestScore = score(state);
  for (ClusterId cl : clustersOf(c)) {
    if (cl.polarity != Polarity::Disjunctive || state.count(cl)) continue;
    for (int v = 0; v <= 1; ++v) {
      ResolutionMap res = state;
      res.emplace(cl, v);
      int s = score(res);
      if (s > bestScore) {
        bestScore = s;
        best = Action::resolve(cl, v);
      }
    }
  }
  return best;
}

}  // namespace cl16
