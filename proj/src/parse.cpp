#include "tenscanon/parse.hpp"

#include <cctype>
#include <map>
#include <set>
#include <vector>

#include "tenscanon/errors.hpp"

namespace tenscanon {

namespace {

enum class Tok {
  Ident,
  Int,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Colon,
  Star,
  Plus,
  Minus,
  Slash,
  Equals,
  End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Slash: return "'/'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Int, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case ',': k = Tok::Comma; break;
      case ';': k = Tok::Semi; break;
      case ':': k = Tok::Colon; break;
      case '*': k = Tok::Star; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '/': k = Tok::Slash; break;
      case '=': k = Tok::Equals; break;
      default:
        throw InputError("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                         ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({k, std::string(1, c), tl, tc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }

  Token next() { return toks_[pos_++]; }

  bool consume(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  Token expect(Tok k) {
    if (!at(k)) fail(std::string("expected ") + tok_name(k) + ", found " + describe(peek()));
    return next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw InputError("parse error at " + std::to_string(t.line) + ":" + std::to_string(t.col) +
                     ": " + msg);
  }

 private:
  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// rational := INT ["/" INT]; the sign is handled by the caller.
Rational parse_rational(Cursor& c) {
  std::string num = c.expect(Tok::Int).text;
  if (c.consume(Tok::Slash)) {
    Token den = c.expect(Tok::Int);
    if (den.text.find_first_not_of('0') == std::string::npos)
      c.fail("zero denominator");
    return Rational::parse(num + "/" + den.text);
  }
  return Rational::parse(num);
}

// --- declaration file ------------------------------------------------------

int parse_slot(Cursor& c, int arity) {
  Token t = c.expect(Tok::Int);
  int s = std::stoi(t.text);
  if (s < 1 || s > arity)
    throw InputError("parse error at " + std::to_string(t.line) + ":" + std::to_string(t.col) +
                     ": slot " + t.text + " out of range 1.." + std::to_string(arity));
  return s;
}

std::vector<int> parse_slot_list(Cursor& c, int arity) {
  std::vector<int> slots;
  c.expect(Tok::LParen);
  slots.push_back(parse_slot(c, arity));
  while (c.consume(Tok::Comma)) slots.push_back(parse_slot(c, arity));
  c.expect(Tok::RParen);
  std::set<int> uniq(slots.begin(), slots.end());
  if (uniq.size() != slots.size()) c.fail("repeated slot in slot list");
  return slots;
}

// Image-table tuple "(q1,...,qn)": slot p of the result holds the index from
// slot q_p of the original.
Perm parse_image_tuple(Cursor& c, int arity) {
  const Token& open = c.peek();
  c.expect(Tok::LParen);
  std::vector<int> img;
  img.push_back(parse_slot(c, arity) - 1);
  while (c.consume(Tok::Comma)) img.push_back(parse_slot(c, arity) - 1);
  c.expect(Tok::RParen);
  if (static_cast<int>(img.size()) != arity)
    throw InputError("parse error at " + std::to_string(open.line) + ":" +
                     std::to_string(open.col) + ": permutation tuple lists " +
                     std::to_string(img.size()) + " slots, arity is " + std::to_string(arity));
  try {
    return Perm(std::move(img));
  } catch (const InputError&) {
    throw InputError("parse error at " + std::to_string(open.line) + ":" +
                     std::to_string(open.col) + ": tuple is not a permutation of 1.." +
                     std::to_string(arity));
  }
}

void parse_symmetry_statement(Cursor& c, int arity, std::vector<SlotSymmetry>& syms,
                              std::vector<LinearSlotIdentity>& ids) {
  Token kw = c.expect(Tok::Ident);
  const std::string& word = kw.text;
  if (word == "sym" || word == "asym") {
    int sign = word == "sym" ? 1 : -1;
    std::vector<int> slots = parse_slot_list(c, arity);
    if (slots.size() < 2) c.fail("'" + word + "' needs at least two slots");
    for (std::size_t i = 0; i + 1 < slots.size(); ++i)
      syms.push_back({Perm::transposition(arity, slots[i] - 1, slots[i + 1] - 1), sign});
  } else if (word == "sym_pair") {
    c.expect(Tok::LParen);
    std::vector<int> p1 = parse_slot_list(c, arity);
    c.expect(Tok::Comma);
    std::vector<int> p2 = parse_slot_list(c, arity);
    c.expect(Tok::RParen);
    if (p1.size() != p2.size()) c.fail("'sym_pair' blocks differ in length");
    std::set<int> all(p1.begin(), p1.end());
    all.insert(p2.begin(), p2.end());
    if (all.size() != p1.size() + p2.size()) c.fail("'sym_pair' blocks overlap");
    Perm perm = Perm::identity(arity);
    std::vector<int> img = perm.image_table();
    for (std::size_t i = 0; i < p1.size(); ++i) {
      img[p1[i] - 1] = p2[i] - 1;
      img[p2[i] - 1] = p1[i] - 1;
    }
    syms.push_back({Perm(std::move(img)), 1});
  } else if (word == "cyclic3") {
    std::vector<int> slots = parse_slot_list(c, arity);
    if (slots.size() != 3) c.fail("'cyclic3' needs exactly three slots");
    int a = slots[0] - 1, b = slots[1] - 1, cc = slots[2] - 1;
    // Rotate the contents of the listed slots one step: a->b->c->a. The sum
    // of the three rotations vanishes.
    std::vector<int> img = Perm::identity(arity).image_table();
    img[a] = cc;
    img[b] = a;
    img[cc] = b;
    Perm rot(std::move(img));
    LinearSlotIdentity id;
    id.terms.emplace_back(Rational(1), Perm::identity(arity));
    id.terms.emplace_back(Rational(1), rot);
    id.terms.emplace_back(Rational(1), rot.after(rot));
    ids.push_back(std::move(id));
  } else if (word == "identity") {
    c.expect(Tok::Colon);
    LinearSlotIdentity id;
    int sign = 1;
    if (c.consume(Tok::Minus))
      sign = -1;
    else
      c.consume(Tok::Plus);
    while (true) {
      Rational coeff(sign);
      if (c.at(Tok::Int)) {
        coeff = coeff * parse_rational(c);
        c.expect(Tok::Star);
      }
      id.terms.emplace_back(coeff, parse_image_tuple(c, arity));
      if (c.consume(Tok::Plus))
        sign = 1;
      else if (c.consume(Tok::Minus))
        sign = -1;
      else
        break;
    }
    c.expect(Tok::Equals);
    Token rhs = c.expect(Tok::Int);
    if (rhs.text != "0") c.fail("identity must end '= 0'");
    ids.push_back(std::move(id));
  } else {
    c.fail("unknown symmetry statement '" + word + "'");
  }
  c.expect(Tok::Semi);
}

}  // namespace

DeclPtr parse_declarations(std::string_view text) {
  Cursor c(lex(text));
  std::vector<TypePtr> types;
  std::vector<std::string> free_names;
  while (!c.at(Tok::End)) {
    Token kw = c.expect(Tok::Ident);
    if (kw.text == "indices") {
      free_names.push_back(c.expect(Tok::Ident).text);
      while (c.consume(Tok::Comma)) free_names.push_back(c.expect(Tok::Ident).text);
      c.expect(Tok::Semi);
    } else if (kw.text == "tensor") {
      std::string name = c.expect(Tok::Ident).text;
      c.expect(Tok::LParen);
      Token at = c.expect(Tok::Int);
      int arity = std::stoi(at.text);
      if (arity < 1)
        throw InputError("parse error at " + std::to_string(at.line) + ":" +
                         std::to_string(at.col) + ": arity must be >= 1");
      c.expect(Tok::RParen);
      std::vector<SlotSymmetry> syms;
      std::vector<LinearSlotIdentity> ids;
      if (c.consume(Tok::LBrace)) {
        while (!c.consume(Tok::RBrace)) parse_symmetry_statement(c, arity, syms, ids);
      } else {
        c.expect(Tok::Semi);
      }
      types.push_back(std::make_shared<TensorType>(name, arity, static_cast<int>(types.size()),
                                                   std::move(syms), std::move(ids)));
    } else {
      c.fail("expected 'tensor' or 'indices', found '" + kw.text + "'");
    }
  }
  return std::make_shared<DeclarationSet>(std::move(types), std::move(free_names));
}

// --- expression file -------------------------------------------------------

namespace {

struct RawFactor {
  TypePtr type;
  std::vector<std::string> index_names;
};

Monomial parse_term(Cursor& c, const DeclPtr& decls, int sign) {
  Rational coeff(sign);
  if (c.at(Tok::Int)) {
    coeff = coeff * parse_rational(c);
    c.expect(Tok::Star);
  }
  std::vector<RawFactor> raw;
  while (true) {
    Token name = c.expect(Tok::Ident);
    TypePtr type = decls->find_type(name.text);
    if (!type)
      throw InputError("parse error at " + std::to_string(name.line) + ":" +
                       std::to_string(name.col) + ": unknown tensor type '" + name.text + "'");
    c.expect(Tok::LParen);
    std::vector<std::string> idx;
    idx.push_back(c.expect(Tok::Ident).text);
    while (c.consume(Tok::Comma)) idx.push_back(c.expect(Tok::Ident).text);
    c.expect(Tok::RParen);
    if (static_cast<int>(idx.size()) != type->arity())
      throw InputError("parse error at " + std::to_string(name.line) + ":" +
                       std::to_string(name.col) + ": factor '" + name.text + "' takes " +
                       std::to_string(type->arity()) + " indices, got " +
                       std::to_string(idx.size()));
    raw.push_back({std::move(type), std::move(idx)});
    if (!c.consume(Tok::Star)) break;
  }

  // Classify index names. A name occurring twice in the term is a dummy;
  // once, free. Explicit pool names (dN) keep their relative order and are
  // numbered before contractions written with ordinary names, which follow
  // first occurrence; the result is the contiguous pool 1..k.
  std::map<std::string, int> count;
  std::map<std::string, int> first_pos;
  int pos = 0;
  for (const auto& f : raw)
    for (const auto& n : f.index_names) {
      ++count[n];
      first_pos.emplace(n, pos++);
    }
  std::vector<std::pair<std::pair<int, int>, std::string>> dummy_keys;
  for (const auto& [n, cnt] : count) {
    if (cnt > 2) c.fail("index '" + n + "' occurs " + std::to_string(cnt) + " times in one term");
    if (cnt == 2) {
      if (is_dummy_pool_name(n))
        dummy_keys.push_back({{0, dummy_pool_number(n)}, n});
      else
        dummy_keys.push_back({{1, first_pos[n]}, n});
    } else if (is_dummy_pool_name(n)) {
      c.fail("dummy-pool index '" + n + "' occurs only once in a term");
    }
  }
  std::sort(dummy_keys.begin(), dummy_keys.end());
  std::map<std::string, int> dummy_number;
  for (std::size_t i = 0; i < dummy_keys.size(); ++i)
    dummy_number[dummy_keys[i].second] = static_cast<int>(i) + 1;

  std::vector<ElementarySymbol> factors;
  factors.reserve(raw.size());
  for (auto& f : raw) {
    std::vector<Index> idx;
    idx.reserve(f.index_names.size());
    for (const auto& n : f.index_names) {
      if (auto it = dummy_number.find(n); it != dummy_number.end())
        idx.push_back(Index::dummy(it->second));
      else
        idx.push_back(decls->make_free_index(n));
    }
    factors.emplace_back(std::move(f.type), std::move(idx));
  }
  return Monomial(std::move(coeff), std::move(factors));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const DeclPtr& decls) {
  if (!decls) throw InputError("expression parsed without a declaration set");
  Cursor c(lex(text));
  if (c.at(Tok::Int) && c.peek().text == "0" && c.peek(1).kind == Tok::End) {
    return Polynomial::zero();
  }
  Polynomial out;
  int sign = 1;
  if (c.consume(Tok::Minus))
    sign = -1;
  else
    c.consume(Tok::Plus);
  while (true) {
    out.add_term(parse_term(c, decls, sign));
    if (c.consume(Tok::Plus))
      sign = 1;
    else if (c.consume(Tok::Minus))
      sign = -1;
    else
      break;
  }
  c.expect(Tok::End);
  return out;
}

}  // namespace tenscanon
