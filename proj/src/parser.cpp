#include <optional>

#include "nn/lexer.hpp"
#include "nn/surface.hpp"

namespace nn {

namespace {

struct KwInfo {
  Bk kw;
  int arity;
};

// Canonical spellings plus IAST aliases.
std::optional<KwInfo> builtin_info(const std::string& s) {
  if (s == "Abhava" || s == "Abhāva") return KwInfo{Bk::Abhava, 3};
  if (s == "AbhavaHolds") return KwInfo{Bk::AbhavaHolds, 4};
  if (s == "S1") return KwInfo{Bk::S1, 0};
  if (s == "Base" || s == "base") return KwInfo{Bk::Base, 0};
  if (s == "Loop" || s == "loop") return KwInfo{Bk::Loop, 0};
  if (s == "Fin") return KwInfo{Bk::Fin, 1};
  if (s == "Nat") return KwInfo{Bk::Nat, 0};
  if (s == "zero") return KwInfo{Bk::Zero, 0};
  if (s == "suc") return KwInfo{Bk::Suc, 1};
  if (s == "Empty") return KwInfo{Bk::Empty, 0};
  if (s == "EmptyElim") return KwInfo{Bk::EmptyElim, 2};
  if (s == "Unit") return KwInfo{Bk::Unit, 0};
  if (s == "Star" || s == "star") return KwInfo{Bk::Star, 0};
  if (s == "List") return KwInfo{Bk::List, 1};
  if (s == "nil") return KwInfo{Bk::Nil, 0};
  if (s == "cons") return KwInfo{Bk::Cons, 2};
  if (s == "Pratyasatti" || s == "Pratyāsatti") return KwInfo{Bk::Praty, 0};
  if (s == "samyoga" || s == "saṃyoga") return KwInfo{Bk::Samyoga, 0};
  if (s == "samavaya" || s == "samavāya") return KwInfo{Bk::Samavaya, 0};
  if (s == "svarupa" || s == "svarūpa") return KwInfo{Bk::Svarupa, 0};
  if (s == "tadatmya" || s == "tādātmya") return KwInfo{Bk::Tadatmya, 0};
  if (s == "parampara" || s == "paramparā") return KwInfo{Bk::Parampara, 1};
  if (s == "transp") return KwInfo{Bk::Transp, 3};
  if (s == "ua") return KwInfo{Bk::Ua, 1};
  if (s == "refl") return KwInfo{Bk::Refl, 0};
  if (s == "sym") return KwInfo{Bk::Sym, 1};
  if (s == "Path") return KwInfo{Bk::Path, 3};
  if (s == "PathP") return KwInfo{Bk::PathP, 3};
  return std::nullopt;
}

// Universe spellings: Type, TypeN (ASCII or subscript digits), U_<category>.
std::optional<std::pair<int, Cat>> universe_info(const std::string& s) {
  if (s == "U_dravya") return std::make_pair(1, Cat::Dravya);
  if (s == "U_guna" || s == "U_guṇa") return std::make_pair(1, Cat::Guna);
  if (s == "U_karman") return std::make_pair(1, Cat::Karman);
  if (s == "U_samanya" || s == "U_sāmānya") return std::make_pair(2, Cat::Samanya);
  if (s == "U_visesa" || s == "U_viśeṣa") return std::make_pair(1, Cat::Visesa);
  if (s == "U_samavaya" || s == "U_samavāya") return std::make_pair(2, Cat::Samavaya);
  if (s == "U_abhava" || s == "U_abhāva") return std::make_pair(2, Cat::AbhavaCat);
  if (s.rfind("Type", 0) != 0) return std::nullopt;
  std::string rest = s.substr(4);
  if (rest.empty()) return std::make_pair(0, Cat::None);
  int lvl = 0;
  size_t i = 0;
  bool any = false;
  while (i < rest.size()) {
    unsigned char c = rest[i];
    if (c >= '0' && c <= '9') {
      lvl = lvl * 10 + (c - '0');
      ++i;
      any = true;
      continue;
    }
    // Subscript digits U+2080..U+2089: E2 82 80..89.
    if (c == 0xE2 && i + 2 < rest.size() &&
        static_cast<unsigned char>(rest[i + 1]) == 0x82) {
      unsigned char d = static_cast<unsigned char>(rest[i + 2]);
      if (d >= 0x80 && d <= 0x89) {
        lvl = lvl * 10 + (d - 0x80);
        i += 3;
        any = true;
        continue;
      }
    }
    return std::nullopt;
  }
  if (!any) return std::nullopt;
  return std::make_pair(lvl, Cat::None);
}

bool is_reserved_name(const std::string& s) {
  return builtin_info(s).has_value() || universe_info(s).has_value();
}

struct Parser {
  std::vector<Token> ts;
  size_t p = 0;
  std::string file;

  const Token& cur() const { return ts[p]; }
  bool at(Tok k) const { return ts[p].k == k; }

  [[noreturn]] void err(const std::string& expected) const {
    Diagnostic d;
    d.code = Code::ParseError;
    d.span = cur().span;
    d.message = "expected " + expected;
    if (cur().k == Tok::Eof) d.message += " (at end of input)";
    throw nn::ParseError(std::move(d));
  }

  Token eat(Tok k, const std::string& what) {
    if (!at(k)) err(what);
    return ts[p++];
  }

  std::string ident(const std::string& what) {
    if (!at(Tok::Ident)) err(what);
    return ts[p++].text;
  }

  // Declaration / binder names must not shadow builtin keywords.
  std::string fresh_name(const std::string& what) {
    const Token& t = cur();
    std::string s = ident(what);
    if (is_reserved_name(s)) {
      Diagnostic d;
      d.code = Code::ParseError;
      d.span = t.span;
      d.message = "reserved word '" + s + "' cannot be used as a name";
      throw nn::ParseError(std::move(d));
    }
    return s;
  }

  SPtr node(Sk k, const Span& sp) {
    auto t = std::make_shared<STerm>(k);
    t->span = sp;
    return t;
  }

  bool atom_start() const {
    switch (cur().k) {
      case Tok::LParen:
      case Tok::Backslash:
      case Tok::Lt:
      case Tok::KwLet:
      case Tok::Num:
      case Tok::Ident:
        return true;
      default:
        return false;
    }
  }

  // '(' IDENT+ ':' begins a binder telescope group.
  bool binder_ahead() const {
    if (!at(Tok::LParen)) return false;
    size_t q = p + 1;
    if (q >= ts.size() || ts[q].k != Tok::Ident) return false;
    while (q < ts.size() && ts[q].k == Tok::Ident) ++q;
    return q < ts.size() && ts[q].k == Tok::Colon;
  }

  SPtr term() {
    if (binder_ahead()) return binders();
    SPtr l = sigma_level();
    if (at(Tok::Arrow)) {
      Span sp = cur().span;
      ++p;
      auto n = std::make_shared<STerm>(Sk::Pi);
      n->span = sp;
      n->name = "";
      n->kid = {l, term()};
      return n;
    }
    return l;
  }

  // One or more '(' names ':' type ')' groups followed by '->' or '*'.
  SPtr binders() {
    struct Group {
      std::vector<std::string> names;
      SPtr ty;
      Span sp;
    };
    std::vector<Group> groups;
    while (binder_ahead()) {
      Group g;
      g.sp = cur().span;
      eat(Tok::LParen, "'('");
      while (at(Tok::Ident)) g.names.push_back(fresh_name("binder name"));
      eat(Tok::Colon, "':'");
      g.ty = term();
      eat(Tok::RParen, "')'");
      groups.push_back(std::move(g));
    }
    Sk form;
    if (at(Tok::Arrow)) form = Sk::Pi;
    else if (at(Tok::Star)) form = Sk::Sigma;
    else err("'->' or '*' after binder");
    ++p;
    SPtr body = form == Sk::Pi ? term() : sigma_level();
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      for (auto nt = it->names.rbegin(); nt != it->names.rend(); ++nt) {
        auto n = std::make_shared<STerm>(form);
        n->span = it->sp;
        n->name = *nt;
        n->kid = {it->ty, body};
        body = n;
      }
    }
    return body;
  }

  SPtr sigma_level() {
    if (binder_ahead()) return binders();
    SPtr l = join_level();
    if (at(Tok::Star)) {
      Span sp = cur().span;
      ++p;
      auto n = std::make_shared<STerm>(Sk::Sigma);
      n->span = sp;
      n->name = "";
      n->kid = {l, sigma_level()};
      return n;
    }
    return l;
  }

  SPtr join_level() {
    SPtr l = meet_level();
    while (at(Tok::Join)) {
      Span sp = cur().span;
      ++p;
      auto n = std::make_shared<STerm>(Sk::Join);
      n->span = sp;
      n->kid = {l, meet_level()};
      l = n;
    }
    return l;
  }

  SPtr meet_level() {
    SPtr l = neg_level();
    while (at(Tok::Meet)) {
      Span sp = cur().span;
      ++p;
      auto n = std::make_shared<STerm>(Sk::Meet);
      n->span = sp;
      n->kid = {l, neg_level()};
      l = n;
    }
    return l;
  }

  SPtr neg_level() {
    if (at(Tok::Tilde)) {
      Span sp = cur().span;
      ++p;
      auto n = std::make_shared<STerm>(Sk::Neg);
      n->span = sp;
      n->kid = {neg_level()};
      return n;
    }
    return app_level();
  }

  SPtr app_level() {
    SPtr l = postfix();
    for (;;) {
      if (at(Tok::At)) {
        Span sp = cur().span;
        ++p;
        auto n = std::make_shared<STerm>(Sk::PathApp);
        n->span = sp;
        n->kid = {l, postfix()};
        l = n;
        continue;
      }
      if (atom_start()) {
        auto n = std::make_shared<STerm>(Sk::App);
        n->span = cur().span;
        n->kid = {l, postfix()};
        l = n;
        continue;
      }
      break;
    }
    return l;
  }

  SPtr postfix() {
    SPtr l = atom();
    while (at(Tok::Dot)) {
      Span sp = cur().span;
      ++p;
      std::string f = ident("'fst' or 'snd' after '.'");
      if (f == "fst") {
        auto n = std::make_shared<STerm>(Sk::Fst);
        n->span = sp;
        n->kid = {l};
        l = n;
      } else if (f == "snd") {
        auto n = std::make_shared<STerm>(Sk::Snd);
        n->span = sp;
        n->kid = {l};
        l = n;
      } else {
        Diagnostic d;
        d.code = Code::ParseError;
        d.span = sp;
        d.message = "expected 'fst' or 'snd' after '.'";
        throw nn::ParseError(std::move(d));
      }
    }
    return l;
  }

  SPtr atom() {
    const Token& t = cur();
    switch (t.k) {
      case Tok::LParen: {
        ++p;
        SPtr first = term();
        if (at(Tok::Comma)) {
          std::vector<SPtr> parts = {first};
          while (at(Tok::Comma)) {
            ++p;
            parts.push_back(term());
          }
          eat(Tok::RParen, "')'");
          SPtr acc = parts.back();
          for (size_t i = parts.size() - 1; i-- > 0;) {
            auto n = std::make_shared<STerm>(Sk::Pair);
            n->span = t.span;
            n->kid = {parts[i], acc};
            acc = n;
          }
          return acc;
        }
        eat(Tok::RParen, "')'");
        return first;
      }
      case Tok::Backslash: {
        ++p;
        std::vector<std::string> names;
        while (at(Tok::Ident)) names.push_back(fresh_name("binder name"));
        if (names.empty()) err("binder name after '\\'");
        eat(Tok::Dot, "'.' after lambda binders");
        SPtr body = term();
        for (auto it = names.rbegin(); it != names.rend(); ++it) {
          auto n = std::make_shared<STerm>(Sk::Lam);
          n->span = t.span;
          n->name = *it;
          n->kid = {body};
          body = n;
        }
        return body;
      }
      case Tok::Lt: {
        ++p;
        std::vector<std::string> names;
        while (at(Tok::Ident)) names.push_back(fresh_name("interval binder name"));
        if (names.empty()) err("interval binder name after '<'");
        eat(Tok::Gt, "'>'");
        SPtr body = term();
        for (auto it = names.rbegin(); it != names.rend(); ++it) {
          auto n = std::make_shared<STerm>(Sk::PathLam);
          n->span = t.span;
          n->name = *it;
          n->kid = {body};
          body = n;
        }
        return body;
      }
      case Tok::KwLet: {
        ++p;
        std::string name = fresh_name("let binder name");
        eat(Tok::Colon, "':'");
        SPtr ty = term();
        eat(Tok::Eq, "'='");
        SPtr val = term();
        eat(Tok::KwIn, "'in'");
        SPtr body = term();
        auto n = std::make_shared<STerm>(Sk::Let);
        n->span = t.span;
        n->name = name;
        n->kid = {ty, val, body};
        return n;
      }
      case Tok::Num: {
        ++p;
        auto n = std::make_shared<STerm>(Sk::Num);
        n->span = t.span;
        n->num = static_cast<int>(t.num);
        return n;
      }
      case Tok::Ident: {
        ++p;
        if (auto u = universe_info(t.text)) {
          auto n = std::make_shared<STerm>(Sk::Universe);
          n->span = t.span;
          n->level = u->first;
          n->cat = u->second;
          return n;
        }
        if (auto b = builtin_info(t.text)) {
          auto n = std::make_shared<STerm>(Sk::Kw);
          n->span = t.span;
          n->kw = b->kw;
          return n;
        }
        auto n = std::make_shared<STerm>(Sk::Name);
        n->span = t.span;
        n->name = t.text;
        return n;
      }
      default:
        err("a term");
    }
  }

  ModelDecl model_body(const std::string& name, const Span& sp) {
    ModelDecl m;
    m.name = name;
    m.span = sp;
    eat(Tok::LBrace, "'{'");
    while (!at(Tok::RBrace)) {
      const Token& t = cur();
      std::string w = ident("a model item");
      if (w == "loci") {
        eat(Tok::Colon, "':'");
        while (at(Tok::Ident)) m.loci.push_back(ident("locus name"));
        eat(Tok::Semi, "';'");
      } else if (w == "pred") {
        ModelPred pr;
        pr.span = t.span;
        pr.name = ident("predicate name");
        eat(Tok::Eq, "'='");
        eat(Tok::LBrace, "'{'");
        while (at(Tok::Ident)) pr.extent.push_back(ident("locus name"));
        eat(Tok::RBrace, "'}'");
        eat(Tok::Semi, "';'");
        m.preds.push_back(std::move(pr));
      } else if (w == "inheres") {
        std::string loc = ident("locus name");
        eat(Tok::Eq, "'='");
        eat(Tok::LBrace, "'{'");
        std::vector<std::string> ents;
        while (at(Tok::Ident)) ents.push_back(ident("entity name"));
        eat(Tok::RBrace, "'}'");
        eat(Tok::Semi, "';'");
        m.inherents.emplace_back(loc, std::move(ents));
      } else if (w == "paksa" || w == "pakṣa") {
        m.paksa = ident("locus name");
        eat(Tok::Semi, "';'");
      } else if (w == "observed-absent") {
        std::string pred = ident("predicate name");
        std::string atw = ident("'at'");
        if (atw != "at") err("'at'");
        std::string loc = ident("locus name");
        eat(Tok::Semi, "';'");
        m.observed_absent.emplace_back(pred, loc);
      } else {
        Diagnostic d;
        d.code = Code::ParseError;
        d.span = t.span;
        d.message = "unknown model item '" + w + "'";
        throw nn::ParseError(std::move(d));
      }
    }
    eat(Tok::RBrace, "'}'");
    return m;
  }

  Decl decl() {
    Decl d;
    d.span = cur().span;
    switch (cur().k) {
      case Tok::KwPostulate: {
        ++p;
        d.k = Decl::Postulate;
        d.name = fresh_name("postulate name");
        eat(Tok::Colon, "':'");
        d.type = term();
        return d;
      }
      case Tok::KwDef: {
        ++p;
        d.k = Decl::Def;
        d.name = fresh_name("definition name");
        eat(Tok::Colon, "':'");
        d.type = term();
        eat(Tok::Eq, "'='");
        d.body = term();
        return d;
      }
      case Tok::KwCheck: {
        ++p;
        d.k = Decl::Check;
        d.body = term();
        eat(Tok::Colon, "':'");
        d.type = term();
        return d;
      }
      case Tok::KwFailCheck: {
        ++p;
        d.k = Decl::FailCheck;
        d.body = term();
        eat(Tok::Colon, "':'");
        d.type = term();
        eat(Tok::KwExpecting, "'expecting'");
        d.expect = ident("a diagnostic code or fallacy label");
        return d;
      }
      case Tok::KwModel: {
        ++p;
        d.k = Decl::Model;
        d.name = fresh_name("model name");
        d.model = model_body(d.name, d.span);
        return d;
      }
      case Tok::KwExample: {
        ++p;
        d.k = Decl::Example;
        d.name = fresh_name("example name");
        eat(Tok::KwPaper, "'paper'");
        d.anchor = eat(Tok::Str, "anchor string").text;
        eat(Tok::LBrace, "'{'");
        while (!at(Tok::RBrace)) d.sub.push_back(decl());
        eat(Tok::RBrace, "'}'");
        return d;
      }
      case Tok::KwVyaptiVerdict: {
        ++p;
        d.k = Decl::VyaptiVerdict;
        d.name = ident("model name");
        d.a1 = ident("hetu predicate");
        d.a2 = ident("sadhya predicate");
        eat(Tok::KwExpecting, "'expecting'");
        d.expect = ident("a verdict");
        return d;
      }
      case Tok::KwParyaptiCount: {
        ++p;
        d.k = Decl::ParyaptiCount;
        d.name = ident("model name");
        d.a1 = ident("locus name");
        d.num = static_cast<int>(eat(Tok::Num, "a count").num);
        eat(Tok::KwExpecting, "'expecting'");
        d.expect = ident("'valid' or 'invalid'");
        return d;
      }
      default:
        err("a declaration");
    }
  }

  SourceModule module() {
    SourceModule m;
    m.file = file;
    while (!at(Tok::Eof)) m.decls.push_back(decl());
    return m;
  }
};

}  // namespace

SourceModule parse_module(const std::string& text, const std::string& filename) {
  Parser ps;
  ps.ts = lex(text, filename);
  ps.file = filename;
  return ps.module();
}

}  // namespace nn
