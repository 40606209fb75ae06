#include "cl16/semantics.hpp"

#include <cctype>
#include <stdexcept>

namespace cl16 {

bool Interpretation::at(const Letter& p) const {
  auto it = values_.find(p);
  if (it == values_.end()) throw std::out_of_range("interpretation does not cover letter " + p);
  return it->second;
}

Legality checkLegal(const Run& run) {
  std::map<ClusterId, int> seen;
  for (size_t i = 0; i < run.size(); ++i) {
    const LabeledMove& m = run[i];
    if (m.move.cluster.polarity == Polarity::Disjunctive && m.player != Player::Machine)
      return {false, i, 2};
    if (m.move.cluster.polarity == Polarity::Conjunctive && m.player != Player::Environment)
      return {false, i, 3};
    if (!seen.emplace(m.move.cluster, m.move.choice).second) return {false, i, 4};
  }
  return {};
}

ResolutionMap resolutionOf(const Run& run) {
  Legality l = checkLegal(run);
  if (!l.ok)
    throw std::invalid_argument("resolutionOf: illegal run (condition " +
                                std::to_string(l.condition) + " at index " +
                                std::to_string(l.index) + ")");
  ResolutionMap res;
  for (const LabeledMove& m : run) res.emplace(m.move.cluster, m.move.choice);
  return res;
}

ResolutionMap dualResolution(const ResolutionMap& res) {
  ResolutionMap out;
  for (const auto& [cl, i] : res) out.emplace(cl.dual(), i);
  return out;
}

namespace {

bool won(const Cirquent& c, const ResolutionMap& res, const Interpretation& interp) {
  switch (c.kind()) {
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Lit: return c.positive() ? interp.at(c.letter()) : !interp.at(c.letter());
    case Kind::Or: return won(c.left(), res, interp) || won(c.right(), res, interp);
    case Kind::And: return won(c.left(), res, interp) && won(c.right(), res, interp);
    case Kind::ChOr: {
      auto it = res.find(c.cluster());
      if (it == res.end()) return false;
      return won(it->second == 0 ? c.left() : c.right(), res, interp);
    }
    case Kind::ChAnd: {
      auto it = res.find(c.cluster());
      if (it == res.end()) return true;
      return won(it->second == 0 ? c.left() : c.right(), res, interp);
    }
  }
  throw std::logic_error("winEval: bad kind");
}

}  // namespace

Player winEval(const Cirquent& c, const ResolutionMap& res, const Interpretation& interp) {
  return won(c, res, interp) ? Player::Machine : Player::Environment;
}

std::vector<Interpretation> allInterpretations(const std::set<Letter>& letters) {
  std::vector<Letter> ls(letters.begin(), letters.end());
  std::vector<Interpretation> out;
  out.reserve(size_t{1} << ls.size());
  for (uint64_t mask = 0; mask < (uint64_t{1} << ls.size()); ++mask) {
    Interpretation interp;
    for (size_t i = 0; i < ls.size(); ++i) interp.set(ls[i], (mask >> i) & 1);
    out.push_back(std::move(interp));
  }
  return out;
}

bool wonUnderAll(const Cirquent& c, const ResolutionMap& res) {
  for (const Interpretation& interp : allInterpretations(lettersOf(c)))
    if (!won(c, res, interp)) return false;
  return true;
}

namespace {

void skipWs(const std::string& s, size_t& i) {
  while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ';')) ++i;
}

}  // namespace

Run parseRun(const std::string& text) {
  Run run;
  size_t i = 0;
  skipWs(text, i);
  while (i < text.size()) {
    char lab = text[i];
    if (lab != 'T' && lab != 'B')
      throw std::invalid_argument("run: expected label T or B at position " + std::to_string(i));
    ++i;
    skipWs(text, i);
    if (i >= text.size() || (text[i] != 'd' && text[i] != 'c'))
      throw std::invalid_argument("run: expected cluster tag d or c at position " + std::to_string(i));
    Polarity pol = text[i] == 'd' ? Polarity::Disjunctive : Polarity::Conjunctive;
    ++i;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("run: expected cluster index");
    int index = std::stoi(text.substr(start, i - start));
    if (i >= text.size() || text[i] != '.')
      throw std::invalid_argument("run: expected '.' in move at position " + std::to_string(i));
    ++i;
    if (i >= text.size() || (text[i] != '0' && text[i] != '1'))
      throw std::invalid_argument("run: expected choice 0 or 1 at position " + std::to_string(i));
    int choice = text[i] - '0';
    ++i;
    run.push_back({lab == 'T' ? Player::Machine : Player::Environment,
                   {ClusterId{pol, index}, choice}});
    skipWs(text, i);
  }
  return run;
}

std::string printRun(const Run& run) {
  std::string out;
  for (size_t i = 0; i < run.size(); ++i) {
    if (i) out += "; ";
    out += run[i].player == Player::Machine ? 'T' : 'B';
    out += ' ';
    out += run[i].move.cluster.str();
    out += '.';
    out += char('0' + run[i].move.choice);
  }
  return out;
}

Interpretation parseInterpretation(const std::string& text) {
  Interpretation interp;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
    if (i >= text.size()) break;
    size_t start = i;
    while (i < text.size() && text[i] != '=') ++i;
    if (i >= text.size())
      throw std::invalid_argument("interpretation: expected '=' after letter");
    std::string name = text.substr(start, i - start);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    if (!isValidLetter(name))
      throw std::invalid_argument("interpretation: bad letter \"" + name + "\"");
    ++i;
    if (i >= text.size() || (text[i] != '0' && text[i] != '1'))
      throw std::invalid_argument("interpretation: expected 0 or 1 for " + name);
    interp.set(name, text[i] == '1');
    ++i;
  }
  return interp;
}

std::string printInterpretation(const Interpretation& interp) {
  std::string out;
  for (const auto& [p, v] : interp.values()) {
    if (!out.empty()) out += ',';
    out += p;
    out += '=';
    out += v ? '1' : '0';
  }
  return out;
}

}  // namespace cl16
