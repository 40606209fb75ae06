// Cirquent abstract syntax: immutable AST, occurrence paths, negation, roots.

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cl16 {

using Letter = std::string;

// [a-z][a-z0-9_]*
bool isValidLetter(const Letter& name);

enum class Polarity : uint8_t { Disjunctive, Conjunctive };

// Clusters live in two disjoint namespaces, one per polarity; negation maps a
// cluster to its dual at the same index. Index -1 is the parser-internal
// placeholder for bare `+[]` / `*[]` (see cirquentize).
struct ClusterId {
  Polarity polarity = Polarity::Disjunctive;
  int index = 0;

  ClusterId dual() const {
    return {polarity == Polarity::Disjunctive ? Polarity::Conjunctive : Polarity::Disjunctive,
            index};
  }
  bool placeholder() const { return index < 0; }
  std::string str() const;  // "d3" / "c3"

  friend auto operator<=>(const ClusterId& a, const ClusterId& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.polarity <=> b.polarity;
  }
  friend bool operator==(const ClusterId&, const ClusterId&) = default;
};

ClusterId disj(int index);
ClusterId conj(int index);

enum class Kind : uint8_t { Top, Bot, Lit, Or, And, ChOr, ChAnd };

bool isPar(Kind k);     // Or / And
bool isChoice(Kind k);  // ChOr / ChAnd

// A child index sequence; 0 = left, 1 = right.
using Path = std::vector<int>;

std::string pathStr(const Path& p);            // "0.1", "" for the root
Path parsePath(const std::string& s);

struct PathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable, cheaply copyable tree. Structural hash and connective count are
// computed once at construction.
class Cirquent {
 public:
  Cirquent() : Cirquent(top()) {}

  static Cirquent top();
  static Cirquent bot();
  static Cirquent lit(Letter name, bool positive = true);
  static Cirquent por(Cirquent left, Cirquent right);
  static Cirquent pand(Cirquent left, Cirquent right);
  static Cirquent chor(ClusterId c, Cirquent left, Cirquent right);   // c disjunctive
  static Cirquent chand(ClusterId c, Cirquent left, Cirquent right);  // c conjunctive
  static Cirquent par(Kind k, Cirquent left, Cirquent right);
  static Cirquent choice(Kind k, ClusterId c, Cirquent left, Cirquent right);

  Kind kind() const { return node_->kind; }
  bool isBinary() const { return node_->kind >= Kind::Or; }

  const Letter& letter() const;  // Lit only
  bool positive() const;         // Lit only
  ClusterId cluster() const;     // ChOr / ChAnd only
  Cirquent left() const;         // binary only
  Cirquent right() const;        // binary only

  int connectiveCount() const { return node_->connectives; }
  size_t hash() const { return node_->hash; }

  friend bool operator==(const Cirquent& a, const Cirquent& b);
  friend bool operator!=(const Cirquent& a, const Cirquent& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    bool positive = true;
    Letter letter;
    ClusterId cluster;
    std::shared_ptr<const Node> left, right;
    size_t hash = 0;
    int connectives = 0;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit Cirquent(NodePtr n) : node_(std::move(n)) {}
  static Cirquent make(Node n);

  NodePtr node_;
};

struct CirquentHash {
  size_t operator()(const Cirquent& c) const { return c.hash(); }
};

// De Morgan dual: flips literal signs, swaps Or/And on both parallel and
// choice nodes, dualizes each choice cluster. An involution.
Cirquent negate(const Cirquent& c);

struct RootInfo {
  Kind kind;
  bool positive = true;   // meaningful for Lit
  ClusterId cluster{};    // meaningful for ChOr / ChAnd
};
RootInfo root(const Cirquent& c);

std::set<ClusterId> clustersOf(const Cirquent& c);
std::set<Letter> lettersOf(const Cirquent& c);
bool containsCluster(const Cirquent& c, ClusterId cluster);

Cirquent subcirquentAt(const Cirquent& c, const Path& at);
Cirquent replaceAt(const Cirquent& c, const Path& at, const Cirquent& sub);

// Maximal same-kind chain at this node, left to right. kind must be Or or And.
std::vector<Cirquent> flatten(const Cirquent& c, Kind kind);

}  // namespace cl16
