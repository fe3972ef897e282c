// Copyright 2026 The umv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "umv/parse.hpp"

#include <cctype>
#include <map>

namespace umv {

std::string format_error(const std::string& file, const ParseError& e) {
  return file + ":" + std::to_string(e.line) + ":" + std::to_string(e.col) +
         ": " + e.code + ": " + e.message;
}

namespace {

struct Tok {
  enum Kind {
    Int,
    Lower,
    Upper,
    LParen,
    RParen,
    Comma,
    Star,
    Equal,
    Bar,
    KwType,
    KwLet,
    KwIn,
    KwFix,
    End,
  };
  Kind kind;
  std::string text;
  int64_t value = 0;
  int line = 1;
  int col = 1;
};

[[noreturn]] void err(int line, int col, std::string code, std::string msg) {
  throw ParseError{line, col, std::move(code), std::move(msg)};
}

[[noreturn]] void err(const Tok& t, std::string code, std::string msg) {
  err(t.line, t.col, std::move(code), std::move(msg));
}

std::vector<Tok> lex(const std::string& text) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(text[i]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      continue;
    }
    Tok t;
    t.line = line;
    t.col = col;
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      if (c == '-') advance(c);
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        err(t, "ParseError", "expected digits after '-'");
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        advance(text[i]);
      t.kind = Tok::Int;
      t.text = text.substr(start, i - start);
      try {
        t.value = std::stoll(t.text);
      } catch (const std::out_of_range&) {
        err(t, "ParseError", "integer literal out of range: " + t.text);
      }
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        advance(text[i]);
      t.text = text.substr(start, i - start);
      if (t.text == "type") t.kind = Tok::KwType;
      else if (t.text == "let") t.kind = Tok::KwLet;
      else if (t.text == "in") t.kind = Tok::KwIn;
      else if (t.text == "fix") t.kind = Tok::KwFix;
      else if (std::isupper(static_cast<unsigned char>(t.text[0])))
        t.kind = Tok::Upper;
      else
        t.kind = Tok::Lower;
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ',': t.kind = Tok::Comma; break;
      case '*': t.kind = Tok::Star; break;
      case '=': t.kind = Tok::Equal; break;
      case '|': t.kind = Tok::Bar; break;
      default:
        err(t, "ParseError", std::string("unexpected character '") + c + "'");
    }
    t.text = c;
    advance(c);
    out.push_back(std::move(t));
  }
  Tok end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  const Tok& peek() const { return toks_[pos_]; }
  const Tok& next() { return toks_[pos_++]; }
  bool at(Tok::Kind k) const { return peek().kind == k; }
  const Tok& expect(Tok::Kind k, const char* what) {
    if (!at(k)) err(peek(), "ParseError", std::string("expected ") + what);
    return next();
  }
  void expect_end() {
    if (!at(Tok::End)) err(peek(), "ParseError", "expected end of input");
  }

  // --- types -----------------------------------------------------------
  // type := atom { '*' atom } ; atom := Int | var | T [ '(' type,... ')' ]
  //       | '(' type ')'
  // With defs given, type names and arities are checked in place.
  TypeRef parse_type(const TypeDefs* defs) {
    std::vector<TypeRef> atoms{parse_atom(defs)};
    while (at(Tok::Star)) {
      next();
      atoms.push_back(parse_atom(defs));
    }
    return atoms.size() == 1 ? atoms[0] : ttuple(std::move(atoms));
  }

  TypeRef parse_atom(const TypeDefs* defs) {
    const Tok& t = peek();
    if (t.kind == Tok::Lower) {
      next();
      return tvar(t.text);
    }
    if (t.kind == Tok::LParen) {
      next();
      TypeRef inner = parse_type(defs);
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Upper) err(t, "ParseError", "expected a type");
    next();
    std::vector<TypeRef> args;
    if (at(Tok::LParen)) {
      next();
      args.push_back(parse_type(defs));
      while (at(Tok::Comma)) {
        next();
        args.push_back(parse_type(defs));
      }
      expect(Tok::RParen, "')'");
    }
    if (t.text == "Int") {
      if (!args.empty()) err(t, "ParseError", "Int takes no arguments");
      return tint();
    }
    if (defs) {
      if (!defs->has_type(t.text))
        err(t, "UnknownType", "unknown type " + t.text);
      size_t want = defs->decl(t.text).params.size();
      if (args.size() != want)
        err(t, "ArityMismatch",
            t.text + " expects " + std::to_string(want) + " argument(s), got " +
                std::to_string(args.size()));
    }
    return tcon(t.text, std::move(args));
  }

  // --- declarations ----------------------------------------------------
  TypeDefs parse_defs() {
    TypeDefs defs;
    struct PendingPayload {
      std::string type_name;
      TypeRef payload;
      int line, col;
    };
    std::vector<PendingPayload> pending;
    std::map<std::string, Tok> ctor_pos;
    while (!at(Tok::End)) {
      expect(Tok::KwType, "'type'");
      const Tok& name = expect(Tok::Upper, "a type name");
      if (defs.has_type(name.text) || name.text == "Int")
        err(name, "ParseError", "duplicate type " + name.text);
      TypeDecl decl;
      if (at(Tok::LParen)) {
        next();
        decl.params.push_back(expect(Tok::Lower, "a type variable").text);
        while (at(Tok::Comma)) {
          next();
          decl.params.push_back(expect(Tok::Lower, "a type variable").text);
        }
        expect(Tok::RParen, "')'");
      }
      expect(Tok::Equal, "'='");
      for (;;) {
        const Tok& ctor = expect(Tok::Upper, "a constructor name");
        if (ctor_pos.count(ctor.text))
          err(ctor, "DuplicateConstructor",
              "constructor " + ctor.text + " already declared");
        ctor_pos.emplace(ctor.text, ctor);
        if (at(Tok::LParen)) {
          next();
          const Tok& start = peek();
          TypeRef payload = parse_type(nullptr);
          expect(Tok::RParen, "')'");
          decl.unary.emplace_back(ctor.text, payload);
          pending.push_back({name.text, payload, start.line, start.col});
        } else {
          decl.constants.push_back(ctor.text);
        }
        if (!at(Tok::Bar)) break;
        next();
      }
      defs.add(name.text, std::move(decl));
    }
    // Payload references can be mutually recursive, so they are checked once
    // every declaration is in.
    for (const auto& p : pending)
      check_payload(defs, defs.decl(p.type_name), p.payload, p.line, p.col);
    return defs;
  }

  static void check_payload(const TypeDefs& defs, const TypeDecl& decl,
                            const TypeRef& t, int line, int col) {
    const auto& n = t->node();
    if (const auto* v = std::get_if<TVar>(&n)) {
      for (const auto& p : decl.params)
        if (p == v->name) return;
      err(line, col, "UnknownTypeInPayload",
          "type variable " + v->name + " is not a parameter");
    }
    if (const auto* tp = std::get_if<TTuple>(&n)) {
      for (const auto& part : tp->parts)
        check_payload(defs, decl, part, line, col);
      return;
    }
    if (const auto* c = std::get_if<TCon>(&n)) {
      if (!defs.has_type(c->name))
        err(line, col, "UnknownTypeInPayload", "unknown type " + c->name);
      size_t want = defs.decl(c->name).params.size();
      if (c->args.size() != want)
        err(line, col, "ArityMismatch",
            c->name + " expects " + std::to_string(want) +
                " argument(s), got " + std::to_string(c->args.size()));
      for (const auto& a : c->args) check_payload(defs, decl, a, line, col);
    }
  }

  // --- value literals --------------------------------------------------
  ExprRef parse_value(const TypeDefs& defs) {
    const Tok& t = peek();
    if (t.kind == Tok::Int) {
      next();
      return e_int(t.value);
    }
    if (t.kind == Tok::Lower) {
      next();
      auto it = binder_kind_.find(t.text);
      if (it != binder_kind_.end() && it->second == VarKind::Recursive)
        return e_rec(t.text);
      return e_share(t.text);
    }
    if (t.kind == Tok::LParen) {
      next();
      std::vector<ExprRef> parts{parse_value(defs)};
      while (at(Tok::Comma)) {
        next();
        parts.push_back(parse_value(defs));
      }
      expect(Tok::RParen, "')'");
      return parts.size() == 1 ? parts[0] : e_tuple(std::move(parts));
    }
    if (t.kind == Tok::Upper) {
      next();
      const auto* info = defs.ctor(t.text);
      if (!info)
        err(t, "UnknownConstructor", "unknown constructor " + t.text);
      std::vector<ExprRef> args;
      if (at(Tok::LParen)) {
        next();
        args.push_back(parse_value(defs));
        while (at(Tok::Comma)) {
          next();
          args.push_back(parse_value(defs));
        }
        expect(Tok::RParen, "')'");
      }
      if (info->constant) {
        if (!args.empty())
          err(t, "ParseError",
              "constant constructor " + t.text + " takes no arguments");
        return e_const(t.text);
      }
      if (args.empty())
        err(t, "ParseError", "constructor " + t.text + " needs an argument");
      ExprRef payload = args.size() == 1 ? args[0] : e_tuple(std::move(args));
      return e_apply(t.text, std::move(payload));
    }
    if (t.kind == Tok::KwLet) {
      next();
      std::vector<std::string> binders = parse_binders(VarKind::Shared);
      expect(Tok::Equal, "'='");
      ExprRef bound = parse_value(defs);
      expect(Tok::KwIn, "'in'");
      ExprRef body = parse_value(defs);
      return e_let(std::move(binders), std::move(bound), std::move(body));
    }
    if (t.kind == Tok::KwFix) {
      next();
      std::vector<std::string> binders = parse_binders(VarKind::Recursive);
      expect(Tok::Equal, "'='");
      ExprRef body = parse_value(defs);
      return e_fix(std::move(binders), std::move(body));
    }
    err(t, "ParseError", "expected a value");
  }

  std::vector<std::string> parse_binders(VarKind kind) {
    std::vector<std::string> out;
    if (at(Tok::LParen)) {
      next();
      out.push_back(expect(Tok::Lower, "a binder").text);
      while (at(Tok::Comma)) {
        next();
        out.push_back(expect(Tok::Lower, "a binder").text);
      }
      expect(Tok::RParen, "')'");
    } else {
      out.push_back(expect(Tok::Lower, "a binder").text);
    }
    for (const auto& b : out) binder_kind_[b] = kind;
    return out;
  }

 private:
  std::vector<Tok> toks_;
  size_t pos_ = 0;
  std::map<std::string, VarKind> binder_kind_;
};

void collect_free(const TypeRef& t, std::vector<std::string>& order) {
  const auto& n = t->node();
  if (const auto* v = std::get_if<TVar>(&n)) {
    for (const auto& s : order)
      if (s == v->name) return;
    order.push_back(v->name);
    return;
  }
  if (const auto* tp = std::get_if<TTuple>(&n))
    for (const auto& p : tp->parts) collect_free(p, order);
  if (const auto* c = std::get_if<TCon>(&n))
    for (const auto& a : c->args) collect_free(a, order);
}

}  // namespace

TypeDefs parse_type_defs(const std::string& text) {
  Parser p(text);
  return p.parse_defs();
}

TypeScheme parse_type_scheme(const std::string& text, const TypeDefs& defs) {
  Parser p(text);
  TypeRef body = p.parse_type(&defs);
  p.expect_end();
  std::vector<std::string> bound;
  collect_free(body, bound);
  return TypeScheme{std::move(bound), std::move(body)};
}

ExprRef parse_value_literal(const std::string& text, const TypeDefs& defs) {
  Parser p(text);
  ExprRef e = p.parse_value(defs);
  p.expect_end();
  WfReport wf = well_formed(e, defs, /*require_closed=*/true);
  if (!wf.ok()) {
    std::string code = "ParseError";
    switch (*wf.violation) {
      case WfViolation::UselessBinder: code = "UselessBinder"; break;
      case WfViolation::UnknownConstructor: code = "UnknownConstructor"; break;
      default: break;
    }
    err(1, 1, std::move(code),
        std::string(to_string(*wf.violation)) +
            (wf.detail.empty() ? "" : ": " + wf.detail));
  }
  return e;
}

namespace {

void print(const ExprRef& e, std::string& out) {
  const auto& n = e->node;
  if (const auto* i = std::get_if<EInt>(&n)) {
    out += std::to_string(i->value);
    return;
  }
  if (const auto* s = std::get_if<EShare>(&n)) {
    out += s->name;
    return;
  }
  if (const auto* r = std::get_if<ERec>(&n)) {
    out += r->name;
    return;
  }
  if (const auto* c = std::get_if<EConst>(&n)) {
    out += c->ctor;
    return;
  }
  if (const auto* a = std::get_if<EApply>(&n)) {
    out += a->ctor;
    out += "(";
    if (const auto* t = std::get_if<ETuple>(&a->arg->node)) {
      for (size_t i = 0; i < t->parts.size(); ++i) {
        if (i) out += ", ";
        print(t->parts[i], out);
      }
    } else {
      print(a->arg, out);
    }
    out += ")";
    return;
  }
  if (const auto* t = std::get_if<ETuple>(&n)) {
    out += "(";
    for (size_t i = 0; i < t->parts.size(); ++i) {
      if (i) out += ", ";
      print(t->parts[i], out);
    }
    out += ")";
    return;
  }
  auto binder_list = [&](const std::vector<std::string>& bs) {
    if (bs.size() == 1) {
      out += bs[0];
      return;
    }
    out += "(";
    for (size_t i = 0; i < bs.size(); ++i) {
      if (i) out += ", ";
      out += bs[i];
    }
    out += ")";
  };
  if (const auto* l = std::get_if<ELet>(&n)) {
    out += "(let ";
    binder_list(l->binders);
    out += " = ";
    print(l->bound, out);
    out += " in ";
    print(l->body, out);
    out += ")";
    return;
  }
  const auto& f = std::get<EFix>(n);
  out += "(fix ";
  binder_list(f.binders);
  out += " = ";
  print(f.body, out);
  out += ")";
}

}  // namespace

std::string print_expr(const ExprRef& e) {
  std::string out;
  print(e, out);
  return out;
}

}  // namespace umv
