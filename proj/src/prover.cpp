#include "cl16/prover.hpp"

#include <utility>

namespace cl16 {

namespace {

struct Outcome {
  std::optional<Proof> proof;
  std::string reason;
};

Outcome invalid(std::string reason) { return {std::nullopt, std::move(reason)}; }

// Appends one line concluding `conclusion` from the current last line.
void extend(Proof& proof, const Cirquent& conclusion, RuleDescriptor desc) {
  int last = static_cast<int>(proof.size());
  proof.push_back({last + 1, conclusion, {false, std::move(desc), {last}}});
}

// Appends addition's lines after base, dropping addition's leading axiom and
// remapping its premise references onto base's axiom (line 1). Returns the
// index of addition's conclusion in the merged proof.
int merge(Proof& base, const Proof& addition) {
  if (addition.size() == 1) return 1;  // axiom-only proof: reuse base's axiom line
  int offset = static_cast<int>(base.size()) - 1;
  for (size_t i = 1; i < addition.size(); ++i) {
    ProofLine line = addition[i];
    line.index += offset;
    for (int& ref : line.justification.premises) ref = ref == 1 ? 1 : ref + offset;
    base.push_back(std::move(line));
  }
  return static_cast<int>(base.size());
}

Proof axiomProof() { return {ProofLine{1, Cirquent::top(), {true, {}, {}}}}; }

Outcome proveRec(const Cirquent& a);

// Try Choosing on cluster c with both choices, in order.
std::optional<Proof> tryChoosing(const Cirquent& b, ClusterId c) {
  for (int i = 0; i <= 1; ++i) {
    Cirquent next = chooseAll(b, c, i);
    Outcome sub = proveRec(next);
    if (sub.proof) {
      Proof proof = std::move(*sub.proof);
      RuleDescriptor d;
      d.rule = Rule::Choosing;
      d.variant = i == 0 ? Variant::A : Variant::B;
      d.cluster = c;
      d.choice = i;
      extend(proof, b, std::move(d));
      return proof;
    }
  }
  return std::nullopt;
}

// Case analysis on a pure cirquent.
Outcome proveCase(const Cirquent& b) {
  switch (b.kind()) {
    case Kind::Top:
      return {axiomProof(), ""};
    case Kind::Bot:
      return invalid("purifies to F");
    case Kind::Lit:
      return invalid("purifies to a literal");
    case Kind::ChOr: {
      if (auto p = tryChoosing(b, b.cluster())) return {std::move(p), ""};
      return invalid("neither choice of " + b.cluster().str() + " is valid");
    }
    case Kind::ChAnd: {
      // Purity condition 7 guarantees Splitting's side condition.
      Outcome l = proveRec(b.left());
      if (!l.proof) return invalid("left component of " + b.cluster().str() + " invalid: " + l.reason);
      Outcome r = proveRec(b.right());
      if (!r.proof) return invalid("right component of " + b.cluster().str() + " invalid: " + r.reason);
      Proof proof = std::move(*l.proof);
      int leftIdx = static_cast<int>(proof.size());
      int rightIdx = merge(proof, *r.proof);
      RuleDescriptor d;
      d.rule = Rule::Splitting;
      d.cluster = b.cluster();
      proof.push_back({static_cast<int>(proof.size()) + 1, b,
                       {false, std::move(d), {leftIdx, rightIdx}}});
      return {std::move(proof), ""};
    }
    case Kind::Or: {
      // Disjuncts are literals or chor-rooted by purity.
      bool sawChor = false;
      std::set<ClusterId> tried;
      for (const Cirquent& e : flatten(b, Kind::Or)) {
        if (e.kind() != Kind::ChOr) continue;
        sawChor = true;
        if (!tried.insert(e.cluster()).second) continue;
        if (auto p = tryChoosing(b, e.cluster())) return {std::move(p), ""};
      }
      return invalid(sawChor ? "no choice branch of the disjunction is valid"
                             : "disjunction of literals");
    }
    case Kind::And: {
      std::vector<Cirquent> conjuncts = flatten(b, Kind::And);
      const Cirquent* picked = nullptr;
      for (const Cirquent& e : conjuncts)
        if (e.kind() != Kind::ChAnd) {
          picked = &e;
          break;
        }
      if (!picked) throw std::logic_error("impure conjunction reached the prover");
      switch (picked->kind()) {
        case Kind::Lit:
          return invalid("a conjunct is a literal");
        case Kind::ChOr: {
          if (auto p = tryChoosing(b, picked->cluster())) return {std::move(p), ""};
          return invalid("neither choice of conjunct cluster " + picked->cluster().str() +
                         " is valid");
        }
        case Kind::Or: {
          bool sawChor = false;
          std::set<ClusterId> tried;
          for (const Cirquent& f : flatten(*picked, Kind::Or)) {
            if (f.kind() != Kind::ChOr) continue;
            sawChor = true;
            if (!tried.insert(f.cluster()).second) continue;
            if (auto p = tryChoosing(b, f.cluster())) return {std::move(p), ""};
          }
          return invalid(sawChor ? "no choice branch of the conjunct disjunction is valid"
                                 : "a conjunct is a disjunction of literals");
        }
        default:
          throw std::logic_error("impure conjunct reached the prover");
      }
    }
  }
  throw std::logic_error("proveCase: bad kind");
}

Outcome proveRec(const Cirquent& a) {
  PurifyResult pr = purify(a);
  Outcome out = proveCase(pr.pure);
  if (!out.proof) return out;
  return {derivationFromTrace(pr.trace, std::move(*out.proof)), ""};
}

}  // namespace

Proof derivationFromTrace(const PurificationTrace& trace, Proof proofOfFinal) {
  if (proofOfFinal.empty()) throw std::invalid_argument("derivationFromTrace: empty proof");
  if (!trace.empty() && proofOfFinal.back().cirquent != trace.back().after)
    throw std::invalid_argument(
        "derivationFromTrace: proof conclusion does not match the trace's final cirquent");
  for (auto it = trace.rbegin(); it != trace.rend(); ++it)
    extend(proofOfFinal, it->before, it->descriptor);
  return proofOfFinal;
}

Verdict prove(const Cirquent& a) {
  Outcome out = proveRec(a);
  if (out.proof) return {true, std::move(out.proof), ""};
  return {false, std::nullopt, std::move(out.reason)};
}

}  // namespace cl16
