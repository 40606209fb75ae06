#include "cl16/cirquent.hpp"

#include <functional>

namespace cl16 {

bool isValidLetter(const Letter& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char ch : name)
    if (!((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_')) return false;
  return true;
}

std::string ClusterId::str() const {
  std::string s(1, polarity == Polarity::Disjunctive ? 'd' : 'c');
  if (placeholder()) return s + "?";
  return s + std::to_string(index);
}

ClusterId disj(int index) { return {Polarity::Disjunctive, index}; }
ClusterId conj(int index) { return {Polarity::Conjunctive, index}; }

bool isPar(Kind k) { return k == Kind::Or || k == Kind::And; }
bool isChoice(Kind k) { return k == Kind::ChOr || k == Kind::ChAnd; }

std::string pathStr(const Path& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += char('0' + p[i]);
  }
  return s;
}

Path parsePath(const std::string& s) {
  Path p;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '.') continue;
    if (ch != '0' && ch != '1') throw PathError("bad path character in \"" + s + "\"");
    p.push_back(ch - '0');
  }
  return p;
}

namespace {

size_t combine(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Cirquent Cirquent::make(Node n) {
  size_t h = static_cast<size_t>(n.kind) * 0x9e3779b1u;
  int conn = 0;
  switch (n.kind) {
    case Kind::Top:
    case Kind::Bot:
      break;
    case Kind::Lit:
      h = combine(h, std::hash<std::string>{}(n.letter));
      h = combine(h, n.positive ? 0x51u : 0x1eu);
      break;
    case Kind::ChOr:
    case Kind::ChAnd:
      h = combine(h, static_cast<size_t>(n.cluster.index) * 2 +
                         (n.cluster.polarity == Polarity::Conjunctive));
      [[fallthrough]];
    case Kind::Or:
    case Kind::And:
      h = combine(h, n.left->hash);
      h = combine(h, n.right->hash);
      conn = 1 + n.left->connectives + n.right->connectives;
      break;
  }
  n.hash = h;
  n.connectives = conn;
  return Cirquent(std::make_shared<const Node>(std::move(n)));
}

Cirquent Cirquent::top() {
  static const Cirquent t = make(Node{Kind::Top});
  return t;
}

Cirquent Cirquent::bot() {
  static const Cirquent b = make(Node{Kind::Bot});
  return b;
}

Cirquent Cirquent::lit(Letter name, bool positive) {
  if (!isValidLetter(name)) throw std::invalid_argument("bad letter name \"" + name + "\"");
  Node n{Kind::Lit};
  n.positive = positive;
  n.letter = std::move(name);
  return make(std::move(n));
}

Cirquent Cirquent::por(Cirquent l, Cirquent r) { return par(Kind::Or, std::move(l), std::move(r)); }
Cirquent Cirquent::pand(Cirquent l, Cirquent r) { return par(Kind::And, std::move(l), std::move(r)); }

Cirquent Cirquent::par(Kind k, Cirquent l, Cirquent r) {
  if (!isPar(k)) throw std::invalid_argument("par: kind must be Or or And");
  Node n{k};
  n.left = std::move(l.node_);
  n.right = std::move(r.node_);
  return make(std::move(n));
}

Cirquent Cirquent::chor(ClusterId c, Cirquent l, Cirquent r) {
  return choice(Kind::ChOr, c, std::move(l), std::move(r));
}

Cirquent Cirquent::chand(ClusterId c, Cirquent l, Cirquent r) {
  return choice(Kind::ChAnd, c, std::move(l), std::move(r));
}

Cirquent Cirquent::choice(Kind k, ClusterId c, Cirquent l, Cirquent r) {
  if (!isChoice(k)) throw std::invalid_argument("choice: kind must be ChOr or ChAnd");
  Polarity want = (k == Kind::ChOr) ? Polarity::Disjunctive : Polarity::Conjunctive;
  if (c.polarity != want)
    throw std::invalid_argument("choice connective polarity mismatch for cluster " + c.str());
  Node n{k};
  n.cluster = c;
  n.left = std::move(l.node_);
  n.right = std::move(r.node_);
  return make(std::move(n));
}

const Letter& Cirquent::letter() const {
  if (kind() != Kind::Lit) throw std::logic_error("letter() on non-literal");
  return node_->letter;
}

bool Cirquent::positive() const {
  if (kind() != Kind::Lit) throw std::logic_error("positive() on non-literal");
  return node_->positive;
}

ClusterId Cirquent::cluster() const {
  if (!isChoice(kind())) throw std::logic_error("cluster() on non-choice node");
  return node_->cluster;
}

Cirquent Cirquent::left() const {
  if (!isBinary()) throw std::logic_error("left() on leaf");
  return Cirquent(node_->left);
}

Cirquent Cirquent::right() const {
  if (!isBinary()) throw std::logic_error("right() on leaf");
  return Cirquent(node_->right);
}

bool operator==(const Cirquent& a, const Cirquent& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Kind::Top:
    case Kind::Bot:
      return true;
    case Kind::Lit:
      return a.node_->positive == b.node_->positive && a.node_->letter == b.node_->letter;
    case Kind::ChOr:
    case Kind::ChAnd:
      if (a.node_->cluster != b.node_->cluster) return false;
      [[fallthrough]];
    default:
      return Cirquent(a.node_->left) == Cirquent(b.node_->left) &&
             Cirquent(a.node_->right) == Cirquent(b.node_->right);
  }
}

Cirquent negate(const Cirquent& c) {
  switch (c.kind()) {
    case Kind::Top: return Cirquent::bot();
    case Kind::Bot: return Cirquent::top();
    case Kind::Lit: return Cirquent::lit(c.letter(), !c.positive());
    case Kind::Or:  return Cirquent::pand(negate(c.left()), negate(c.right()));
    case Kind::And: return Cirquent::por(negate(c.left()), negate(c.right()));
    case Kind::ChOr:
      return Cirquent::chand(c.cluster().dual(), negate(c.left()), negate(c.right()));
    case Kind::ChAnd:
      return Cirquent::chor(c.cluster().dual(), negate(c.left()), negate(c.right()));
  }
  throw std::logic_error("negate: bad kind");
}

RootInfo root(const Cirquent& c) {
  RootInfo r{c.kind()};
  if (c.kind() == Kind::Lit) r.positive = c.positive();
  if (isChoice(c.kind())) r.cluster = c.cluster();
  return r;
}

namespace {

void collect(const Cirquent& c, std::set<ClusterId>* clusters, std::set<Letter>* letters) {
  switch (c.kind()) {
    case Kind::Top:
    case Kind::Bot:
      return;
    case Kind::Lit:
      if (letters) letters->insert(c.letter());
      return;
    default:
      if (clusters && isChoice(c.kind())) clusters->insert(c.cluster());
      collect(c.left(), clusters, letters);
      collect(c.right(), clusters, letters);
  }
}

}  // namespace

std::set<ClusterId> clustersOf(const Cirquent& c) {
  std::set<ClusterId> s;
  collect(c, &s, nullptr);
  return s;
}

std::set<Letter> lettersOf(const Cirquent& c) {
  std::set<Letter> s;
  collect(c, nullptr, &s);
  return s;
}

bool containsCluster(const Cirquent& c, ClusterId cluster) {
  switch (c.kind()) {
    case Kind::Top:
    case Kind::Bot:
    case Kind::Lit:
      return false;
    default:
      if (isChoice(c.kind()) && c.cluster() == cluster) return true;
      return containsCluster(c.left(), cluster) || containsCluster(c.right(), cluster);
  }
}

Cirquent subcirquentAt(const Cirquent& c, const Path& at) {
  Cirquent cur = c;
  for (size_t i = 0; i < at.size(); ++i) {
    if (!cur.isBinary())
      throw PathError("path " + pathStr(at) + " descends past a leaf at step " + std::to_string(i));
    cur = at[i] == 0 ? cur.left() : cur.right();
  }
  return cur;
}

Cirquent replaceAt(const Cirquent& c, const Path& at, const Cirquent& sub) {
  if (at.empty()) return sub;
  if (!c.isBinary())
    throw PathError("path " + pathStr(at) + " descends past a leaf");
  Path rest(at.begin() + 1, at.end());
  Cirquent l = c.left(), r = c.right();
  if (at[0] == 0)
    l = replaceAt(l, rest, sub);
  else
    r = replaceAt(r, rest, sub);
  if (isChoice(c.kind())) return Cirquent::choice(c.kind(), c.cluster(), l, r);
  return Cirquent::par(c.kind(), l, r);
}

std::vector<Cirquent> flatten(const Cirquent& c, Kind kind) {
  if (!isPar(kind)) throw std::invalid_argument("flatten: kind must be Or or And");
  std::vector<Cirquent> out;
  std::function<void(const Cirquent&)> go = [&](const Cirquent& x) {
    if (x.kind() == kind) {
      go(x.left());
      go(x.right());
    } else {
      out.push_back(x);
    }
  };
  go(c);
  return out;
}

}  // namespace cl16
