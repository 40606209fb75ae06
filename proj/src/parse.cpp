#include "cl16/parse.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace cl16 {

namespace {

enum class Tok : uint8_t { End, Top, Bot, Ident, Tilde, Amp, Pipe, Arrow, ChorOp, ChandOp, LParen, RParen };

struct Token {
  Tok type;
  size_t pos;
  std::string text;     // Ident
  ClusterId cluster{};  // ChorOp / ChandOp
};

class Lexer {
 public:
  Lexer(const std::string& src, bool extended) : src_(src), extended_(extended) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    cur_.pos = i_;
    cur_.text.clear();
    if (i_ >= src_.size()) {
      cur_.type = Tok::End;
      return;
    }
    char ch = src_[i_];
    switch (ch) {
      case 'T': ++i_; cur_.type = Tok::Top; return;
      case 'F': ++i_; cur_.type = Tok::Bot; return;
      case '~': ++i_; cur_.type = Tok::Tilde; return;
      case '&': ++i_; cur_.type = Tok::Amp; return;
      case '|': ++i_; cur_.type = Tok::Pipe; return;
      case '(': ++i_; cur_.type = Tok::LParen; return;
      case ')': ++i_; cur_.type = Tok::RParen; return;
      case '-':
        if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
          i_ += 2;
          cur_.type = Tok::Arrow;
          return;
        }
        throw ParseError("stray '-'", i_);
      case '+':
      case '*': {
        cur_.type = ch == '+' ? Tok::ChorOp : Tok::ChandOp;
        Polarity pol = ch == '+' ? Polarity::Disjunctive : Polarity::Conjunctive;
        ++i_;
        cur_.cluster = readClusterBrackets(pol);
        return;
      }
      default:
        if (ch >= 'a' && ch <= 'z') {
          size_t start = i_;
          while (i_ < src_.size() && ((src_[i_] >= 'a' && src_[i_] <= 'z') ||
                                      (src_[i_] >= '0' && src_[i_] <= '9') || src_[i_] == '_'))
            ++i_;
          cur_.type = Tok::Ident;
          cur_.text = src_.substr(start, i_ - start);
          return;
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", i_);
    }
  }

  ClusterId readClusterBrackets(Polarity pol) {
    if (i_ >= src_.size() || src_[i_] != '[')
      throw ParseError("expected '[' after choice connective", i_);
    ++i_;
    if (i_ < src_.size() && src_[i_] == ']') {
      if (!extended_)
        throw ParseError("bare choice connective needs a cluster (use cirquentize for `+[]`)", i_);
      ++i_;
      return {pol, -1};
    }
    std::optional<Polarity> tagged;
    if (i_ < src_.size() && (src_[i_] == 'd' || src_[i_] == 'c')) {
      tagged = src_[i_] == 'd' ? Polarity::Disjunctive : Polarity::Conjunctive;
      ++i_;
    }
    size_t start = i_;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
    if (i_ == start) throw ParseError("expected cluster index", i_);
    int index = std::stoi(src_.substr(start, i_ - start));
    if (i_ >= src_.size() || src_[i_] != ']') throw ParseError("expected ']'", i_);
    ++i_;
    if (tagged && *tagged != pol)
      throw ParseError(std::string("cluster tag '") + (*tagged == Polarity::Disjunctive ? 'd' : 'c') +
                           "' has the wrong polarity for this connective",
                       start - 1);
    return {pol, index};
  }

  const std::string& src_;
  bool extended_;
  size_t i_ = 0;
  Token cur_{};
};

class Parser {
 public:
  Parser(const std::string& src, bool extended) : lex_(src, extended) {}

  Cirquent parseAll() {
    Cirquent c = implication();
    if (lex_.peek().type != Tok::End) throw ParseError("trailing input", lex_.peek().pos);
    return c;
  }

 private:
  Cirquent implication() {
    Cirquent lhs = disjunction();
    if (lex_.peek().type == Tok::Arrow) {
      lex_.take();
      Cirquent rhs = implication();
      return Cirquent::por(negate(lhs), rhs);
    }
    return lhs;
  }

  Cirquent disjunction() {
    Cirquent c = conjunction();
    while (lex_.peek().type == Tok::Pipe) {
      lex_.take();
      c = Cirquent::por(c, conjunction());
    }
    return c;
  }

  Cirquent conjunction() {
    Cirquent c = choiceChain();
    while (lex_.peek().type == Tok::Amp) {
      lex_.take();
      c = Cirquent::pand(c, choiceChain());
    }
    return c;
  }

  Cirquent choiceChain() {
    Cirquent c = unary();
    while (lex_.peek().type == Tok::ChorOp || lex_.peek().type == Tok::ChandOp) {
      Token op = lex_.take();
      Cirquent rhs = unary();
      c = op.type == Tok::ChorOp ? Cirquent::chor(op.cluster, c, rhs)
                                 : Cirquent::chand(op.cluster, c, rhs);
    }
    return c;
  }

  Cirquent unary() {
    if (lex_.peek().type == Tok::Tilde) {
      lex_.take();
      return negate(unary());
    }
    return atom();
  }

  Cirquent atom() {
    Token t = lex_.take();
    switch (t.type) {
      case Tok::Top: return Cirquent::top();
      case Tok::Bot: return Cirquent::bot();
      case Tok::Ident: return Cirquent::lit(t.text);
      case Tok::LParen: {
        Cirquent c = implication();
        if (lex_.peek().type != Tok::RParen) throw ParseError("expected ')'", lex_.peek().pos);
        lex_.take();
        return c;
      }
      default:
        throw ParseError("expected an atom or '('", t.pos);
    }
  }

  Lexer lex_;
};

int prec(Kind k) {
  switch (k) {
    case Kind::Or: return 1;
    case Kind::And: return 2;
    case Kind::ChOr:
    case Kind::ChAnd: return 3;
    default: return 4;  // atoms
  }
}

void printInto(const Cirquent& c, std::string& out) {
  switch (c.kind()) {
    case Kind::Top: out += 'T'; return;
    case Kind::Bot: out += 'F'; return;
    case Kind::Lit:
      if (!c.positive()) out += '~';
      out += c.letter();
      return;
    default: {
      int p = prec(c.kind());
      auto child = [&](const Cirquent& x, bool rightSide) {
        bool parens = prec(x.kind()) < p || (rightSide && prec(x.kind()) == p);
        if (parens) out += '(';
        printInto(x, out);
        if (parens) out += ')';
      };
      child(c.left(), false);
      switch (c.kind()) {
        case Kind::Or: out += " | "; break;
        case Kind::And: out += " & "; break;
        case Kind::ChOr:
          out += c.cluster().placeholder() ? " +[] " : " +[" + std::to_string(c.cluster().index) + "] ";
          break;
        default:
          out += c.cluster().placeholder() ? " *[] " : " *[" + std::to_string(c.cluster().index) + "] ";
          break;
      }
      child(c.right(), true);
    }
  }
}

}  // namespace

Cirquent parse(const std::string& text) { return Parser(text, false).parseAll(); }

Cirquent parseExtended(const std::string& text) { return Parser(text, true).parseAll(); }

std::string print(const Cirquent& c) {
  std::string out;
  printInto(c, out);
  return out;
}

namespace {

struct FreshCounter {
  std::set<int> used;
  int next = 1;
  int take() {
    while (used.count(next)) ++next;
    used.insert(next);
    return next;
  }
};

Cirquent assignFresh(const Cirquent& c, FreshCounter& d, FreshCounter& k) {
  switch (c.kind()) {
    case Kind::Top:
    case Kind::Bot:
    case Kind::Lit:
      return c;
    case Kind::Or:
    case Kind::And: {
      Cirquent l = assignFresh(c.left(), d, k);  // left to right
      Cirquent r = assignFresh(c.right(), d, k);
      return Cirquent::par(c.kind(), l, r);
    }
    default: {
      ClusterId cl = c.cluster();
      if (cl.placeholder())
        cl.index = (cl.polarity == Polarity::Disjunctive ? d : k).take();
      Cirquent l = assignFresh(c.left(), d, k);
      Cirquent r = assignFresh(c.right(), d, k);
      return Cirquent::choice(c.kind(), cl, l, r);
    }
  }
}

}  // namespace

Cirquent cirquentize(const Cirquent& c) {
  FreshCounter d, k;
  for (ClusterId cl : clustersOf(c)) {
    if (cl.placeholder()) continue;
    (cl.polarity == Polarity::Disjunctive ? d : k).used.insert(cl.index);
  }
  return assignFresh(c, d, k);
}

nlohmann::json astToJson(const Cirquent& c) {
  using nlohmann::json;
  switch (c.kind()) {
    case Kind::Top: return json{{"kind", "top"}};
    case Kind::Bot: return json{{"kind", "bot"}};
    case Kind::Lit:
      return json{{"kind", "lit"}, {"letter", c.letter()}, {"positive", c.positive()}};
    case Kind::Or:
    case Kind::And:
      return json{{"kind", c.kind() == Kind::Or ? "or" : "and"},
                  {"left", astToJson(c.left())},
                  {"right", astToJson(c.right())}};
    default:
      if (c.cluster().placeholder())
        throw std::invalid_argument("astToJson: placeholder cluster (run cirquentize first)");
      return json{{"kind", c.kind() == Kind::ChOr ? "chor" : "chand"},
                  {"cluster", c.cluster().index},
                  {"left", astToJson(c.left())},
                  {"right", astToJson(c.right())}};
  }
}

Cirquent astFromJson(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "top") return Cirquent::top();
  if (kind == "bot") return Cirquent::bot();
  if (kind == "lit")
    return Cirquent::lit(j.at("letter").get<std::string>(), j.value("positive", true));
  Cirquent l = astFromJson(j.at("left"));
  Cirquent r = astFromJson(j.at("right"));
  if (kind == "or") return Cirquent::por(l, r);
  if (kind == "and") return Cirquent::pand(l, r);
  int index = j.at("cluster").get<int>();
  if (index < 0) throw std::invalid_argument("astFromJson: negative cluster index");
  if (kind == "chor") return Cirquent::chor(disj(index), l, r);
  if (kind == "chand") return Cirquent::chand(conj(index), l, r);
  throw std::invalid_argument("astFromJson: unknown kind \"" + kind + "\"");
}

}  // namespace cl16
