// Copyright 2026 The catsheaf Authors
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

#include <charconv>
#include <set>

#include "catsheaf/dsl/workspace.hpp"
#include "catsheaf/functor.hpp"
#include "lexer.hpp"

namespace catsheaf::dsl {
namespace {

struct SyntaxError {
  Diagnostic diagnostic;
};

// An item-level rejection. Parsing continues with the next item.
struct Rejected {
  Diagnostic diagnostic;
};

struct Name {
  std::string text;
  SourceSpan span;
};

struct Pair {
  Name from;
  Name to;
};

struct MorphismSyntax {
  Name name;
  Name source;
  Name target;
};

struct ComposeSyntax {
  Name lhs;                    // "g.f" when written without spaces
  std::optional<Name> first;   // set for the spaced form "g . f"
  Name result;
};

struct FunctorExprSyntax {
  FunctorExpr expr;
  std::vector<Name> args;
  SourceSpan span;
};

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
  return {a.file, a.line, a.column, b.end_line, b.end_column};
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file, std::size_t cap)
      : toks_(std::move(tokens)), cap_(cap) {
    ws_.file = std::move(file);
  }

  ParseResult run() {
    ParseResult result;
    try {
      while (peek().kind != Tok::kEnd) item();
    } catch (const SyntaxError& e) {
      diags_.push_back(e.diagnostic);
    }
    result.diagnostics = std::move(diags_);
    if (result.diagnostics.empty()) result.workspace = std::move(ws_);
    return result;
  }

 private:
  // ---- token helpers ----

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  const SourceSpan& last_span() const { return toks_[pos_ == 0 ? 0 : pos_ - 1].span; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::kIdent ? "'" + t.text + "'" : to_string(t.kind);
    throw SyntaxError{{"E200", "syntax", message + ", found " + found, t.span}};
  }

  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_word(std::string_view w) const { return at(Tok::kIdent) && peek().text == w; }

  const Token& expect(Tok kind, const char* what = nullptr) {
    if (!at(kind)) fail(std::string("expected ") + (what ? what : to_string(kind)));
    return take();
  }

  Name name(const char* what = "a name") {
    const Token& t = expect(Tok::kIdent, what);
    return {t.text, t.span};
  }

  void keyword(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "'");
    take();
  }

  // Comma-separated list up to ';'. Empty lists are allowed.
  template <class F>
  void list(F&& one) {
    if (at(Tok::kSemi)) {
      take();
      return;
    }
    one();
    while (at(Tok::kComma)) {
      take();
      one();
    }
    expect(Tok::kSemi);
  }

  std::vector<Pair> pair_list() {
    std::vector<Pair> out;
    list([&] {
      Name a = name();
      expect(Tok::kGt);
      Name b = name();
      out.push_back({a, b});
    });
    return out;
  }

  // ---- diagnostics ----

  static Diagnostic diag(std::string code, std::string law, std::string message, SourceSpan span) {
    return {std::move(code), std::move(law), std::move(message), std::move(span)};
  }

  [[noreturn]] static void reject(std::string code, std::string law, std::string message,
                                  const SourceSpan& span) {
    throw Rejected{diag(std::move(code), std::move(law), std::move(message), span)};
  }

  static std::string code_for(ErrorKind k) {
    switch (k) {
      case ErrorKind::kUnknownId: return "E301";
      case ErrorKind::kDuplicateName: return "E302";
      case ErrorKind::kCapExceeded: return "E408";
      case ErrorKind::kClosureViolation: return "E405";
      case ErrorKind::kDomainMismatch: return "E406";
      default: return "E402";
    }
  }

  void check_fresh(const Name& n) {
    if (defined_.count(n.text) != 0 || rejected_.count(n.text) != 0) {
      reject("E302", "duplicate", "'" + n.text + "' is already defined", n.span);
    }
  }

  // Unknown names that refer to rejected items are not reported again.
  [[noreturn]] void unknown(const std::string& what, const Name& n) {
    if (rejected_.count(n.text) != 0) throw Rejected{{}};
    reject("E301", "unknown", "unknown " + what + " '" + n.text + "'", n.span);
  }

  [[noreturn]] static void missing(const std::string& what, const Name& n) {
    reject("E301", "unknown", "unknown " + what + " '" + n.text + "'", n.span);
  }

  const CategoryDef& category_ref(const Name& n) {
    if (const CategoryDef* c = ws_.find_category(n.text)) return *c;
    unknown("category", n);
  }

  const AmbientDef& ambient_ref(const Name& n) {
    if (const AmbientDef* a = ws_.find_ambient(n.text)) return *a;
    unknown("ambient", n);
  }

  Obj ambient_object(const AmbientDef& a, const Name& n) {
    category_ref(n);
    if (auto v = ws_.ambient_object(a, n.text)) return *v;
    reject("E303", "ambient.object", "'" + n.text + "' is not an object of ambient '" + a.name + "'",
           n.span);
  }

  // ---- items ----

  void item() {
    if (!at(Tok::kIdent)) fail("expected a definition");
    const std::string word = peek().text;
    const std::size_t start = pos_;
    try {
      if (word == "category") {
        category();
      } else if (word == "functor") {
        functor();
      } else if (word == "nat") {
        nat();
      } else if (word == "ambient") {
        ambient();
      } else if (word == "sieve") {
        sieve();
      } else if (word == "check") {
        check();
      } else {
        fail("expected 'category', 'functor', 'nat', 'ambient', 'sieve' or 'check'");
      }
    } catch (const Rejected& r) {
      if (!r.diagnostic.code.empty()) diags_.push_back(r.diagnostic);
      if (word != "check" && start + 1 < toks_.size() && toks_[start + 1].kind == Tok::kIdent) {
        rejected_.insert(toks_[start + 1].text);
      }
      skip_item(start);
    }
  }

  // After a semantic rejection, resume at the next top-level keyword. The
  // item was already parsed through, unless rejection happened mid-way, in
  // which case balanced braces are skipped.
  void skip_item(std::size_t start) {
    if (pos_ > start && item_done_) {
      item_done_ = false;
      return;
    }
    pos_ = start + 1;
    int depth = 0;
    while (!at(Tok::kEnd)) {
      if (at(Tok::kLBrace)) ++depth;
      if (at(Tok::kRBrace)) {
        --depth;
        take();
        if (depth <= 0) break;
        continue;
      }
      if (at(Tok::kSemi) && depth == 0) {
        take();
        break;
      }
      take();
    }
    item_done_ = false;
  }

  void category() {
    const SourceSpan start = take().span;
    Name cname = name("a category name");
    std::vector<Name> objects;
    std::vector<MorphismSyntax> morphisms;
    std::vector<ComposeSyntax> compose;
    expect(Tok::kLBrace);
    while (!at(Tok::kRBrace)) {
      if (at_word("objects")) {
        take();
        expect(Tok::kColon);
        list([&] { objects.push_back(name("an object name")); });
      } else if (at_word("morphisms")) {
        take();
        expect(Tok::kColon);
        list([&] {
          MorphismSyntax m;
          m.name = name("a morphism name");
          expect(Tok::kColon);
          m.source = name("a source object");
          expect(Tok::kArrow);
          m.target = name("a target object");
          morphisms.push_back(std::move(m));
        });
      } else if (at_word("compose")) {
        take();
        expect(Tok::kColon);
        list([&] {
          ComposeSyntax e;
          e.lhs = name("a composite");
          if (at(Tok::kDot)) {
            take();
            e.first = name("a morphism name");
          }
          expect(Tok::kEq);
          e.result = name("a morphism name");
          compose.push_back(std::move(e));
        });
      } else {
        fail("expected 'objects', 'morphisms', 'compose' or '}'");
      }
    }
    const SourceSpan span = join(start, expect(Tok::kRBrace).span);
    item_done_ = true;
    check_fresh(cname);

    std::set<std::string> obj_names;
    for (const auto& o : objects) {
      if (!obj_names.insert(o.text).second) {
        reject("E302", "duplicate", "duplicate object '" + o.text + "'", o.span);
      }
    }
    std::map<std::string, std::pair<std::string, std::string>> typing;
    for (const auto& o : objects) typing[identity_name(o.text)] = {o.text, o.text};
    for (const auto& m : morphisms) {
      for (const Name* end : {&m.source, &m.target}) {
        if (obj_names.count(end->text) == 0) {
          reject("E301", "unknown", "unknown object '" + end->text + "'", end->span);
        }
      }
      if (!typing.emplace(m.name.text, std::make_pair(m.source.text, m.target.text)).second) {
        reject("E302", "duplicate", "duplicate morphism '" + m.name.text + "'", m.name.span);
      }
    }

    auto known = [&](const Name& n) {
      if (typing.count(n.text) == 0) {
        reject("E301", "unknown", "unknown morphism '" + n.text + "'", n.span);
      }
    };
    CategoryBuilder b;
    for (const auto& o : objects) b.object(o.text);
    for (const auto& m : morphisms) b.morphism(m.name.text, m.source.text, m.target.text);
    for (const auto& e : compose) {
      std::string g;
      std::string f;
      if (e.first) {
        known(e.lhs);
        known(*e.first);
        g = e.lhs.text;
        f = e.first->text;
      } else {
        std::vector<std::pair<std::string, std::string>> splits;
        for (std::size_t d = e.lhs.text.find('.'); d != std::string::npos;
             d = e.lhs.text.find('.', d + 1)) {
          std::string l = e.lhs.text.substr(0, d);
          std::string r = e.lhs.text.substr(d + 1);
          if (typing.count(l) != 0 && typing.count(r) != 0) splits.emplace_back(l, r);
        }
        if (splits.empty()) {
          if (e.lhs.text.find('.') == std::string::npos) {
            reject("E200", "syntax", "expected a composite 'g.f'", e.lhs.span);
          }
          reject("E301", "unknown", "'" + e.lhs.text + "' does not split into two known morphisms",
                 e.lhs.span);
        }
        if (splits.size() > 1) {
          reject("E200", "syntax", "ambiguous composite '" + e.lhs.text + "'; write 'g . f'",
                 e.lhs.span);
        }
        std::tie(g, f) = splits.front();
      }
      known(e.result);
      const auto& tg = typing[g];
      const auto& tf = typing[f];
      const auto& tr = typing[e.result.text];
      if (tf.second != tg.first) {
        reject("E402", "composition.typed", "'" + g + "' and '" + f + "' are not composable",
               e.lhs.span);
      }
      if (tr.first != tf.first || tr.second != tg.second) {
        reject("E402", "composition.typed",
               "'" + e.result.text + "' does not have the type of '" + g + "." + f + "'",
               e.result.span);
      }
      b.compose(g, f, e.result.text);
    }

    std::vector<std::pair<std::string, std::string>> missing;
    FiniteCategory cat;
    try {
      cat = b.build(&missing);
    } catch (const Error& err) {
      reject(code_for(err.kind()), "composition", err.what(), span);
    }
    if (!missing.empty()) {
      reject("E401", "composition.total",
             "composition not total: no entry for '" + missing.front().first + "." +
                 missing.front().second + "'",
             span);
    }
    ValidationReport rep = validate_category(cat);
    if (!rep.valid()) {
      const Violation& v = rep.violations.front();
      std::string ids;
      for (const auto& i : v.ids) ids += (ids.empty() ? "" : ", ") + i;
      reject("E402", v.law, v.detail + " (" + ids + ")", span);
    }
    ws_.categories.push_back({cname.text, share(std::move(cat)), span});
    defined_.insert(cname.text);
  }

  void functor() {
    const SourceSpan start = take().span;
    Name fname = name("a functor name");
    expect(Tok::kColon);
    Name dom = name("a category name");
    expect(Tok::kArrow);
    Name cod = name("a category name");
    std::vector<Pair> objs;
    std::vector<Pair> mors;
    expect(Tok::kLBrace);
    while (!at(Tok::kRBrace)) {
      if (at_word("objects")) {
        take();
        expect(Tok::kColon);
        auto p = pair_list();
        objs.insert(objs.end(), p.begin(), p.end());
      } else if (at_word("morphisms")) {
        take();
        expect(Tok::kColon);
        auto p = pair_list();
        mors.insert(mors.end(), p.begin(), p.end());
      } else {
        fail("expected 'objects', 'morphisms' or '}'");
      }
    }
    const SourceSpan span = join(start, expect(Tok::kRBrace).span);
    item_done_ = true;
    check_fresh(fname);
    const CategoryDef& c = category_ref(dom);
    const CategoryDef& d = category_ref(cod);
    Functor f = build_functor(c, d, objs, mors, span);
    ws_.functors.push_back({fname.text, dom.text, cod.text, std::move(f), span});
    defined_.insert(fname.text);
  }

  Functor build_functor(const CategoryDef& c, const CategoryDef& d, const std::vector<Pair>& objs,
                        const std::vector<Pair>& mors, const SourceSpan& span) {
    std::map<std::string, std::string> om;
    for (const auto& [a, x] : objs) {
      if (!c.category->find_object(a.text)) missing("object of '" + c.name + "'", a);
      if (!d.category->find_object(x.text)) missing("object of '" + d.name + "'", x);
      if (!om.emplace(a.text, x.text).second) {
        reject("E302", "duplicate", "object '" + a.text + "' is mapped twice", a.span);
      }
    }
    std::map<std::string, std::string> mm;
    for (const auto& [f, g] : mors) {
      if (!c.category->find_morphism(f.text)) missing("morphism of '" + c.name + "'", f);
      if (!d.category->find_morphism(g.text)) missing("morphism of '" + d.name + "'", g);
      if (!mm.emplace(f.text, g.text).second) {
        reject("E302", "duplicate", "morphism '" + f.text + "' is mapped twice", f.span);
      }
    }
    for (const auto& a : c.category->objects()) {
      if (om.count(a) == 0) {
        reject("E407", "functor.total", "object '" + a + "' is not mapped", span);
      }
    }
    for (Mor f = 0; f < static_cast<Mor>(c.category->morphism_count()); ++f) {
      const auto& fname = c.category->morphism_name(f);
      if (!c.category->is_identity(f) && mm.count(fname) == 0) {
        reject("E407", "functor.total", "morphism '" + fname + "' is not mapped", span);
      }
    }
    Functor out = make_functor(c.category, d.category, {om.begin(), om.end()}, {mm.begin(), mm.end()});
    ValidationReport rep = validate_functor(out);
    if (!rep.valid()) {
      const Violation& v = rep.violations.front();
      std::string ids;
      for (const auto& i : v.ids) ids += (ids.empty() ? "" : ", ") + i;
      reject("E403", v.law, v.detail + " (" + ids + ")", span);
    }
    return out;
  }

  FunctorExprSyntax functor_expr() {
    FunctorExprSyntax out;
    Name head = name("a functor expression");
    out.span = head.span;
    if ((head.text == "incl" || head.text == "id") && at(Tok::kLParen)) {
      take();
      out.args.push_back(name("a category name"));
      if (head.text == "incl") {
        expect(Tok::kComma);
        out.args.push_back(name("a category name"));
      }
      out.span = join(head.span, expect(Tok::kRParen).span);
      out.expr.kind = head.text == "incl" ? FunctorExpr::Kind::kInclusion : FunctorExpr::Kind::kIdentity;
    } else {
      out.args.push_back(head);
    }
    for (const auto& a : out.args) out.expr.args.push_back(a.text);
    return out;
  }

  Functor resolve(const FunctorExprSyntax& e) {
    if (e.expr.kind == FunctorExpr::Kind::kNamed) {
      if (!ws_.find_functor(e.args[0].text)) unknown("functor", e.args[0]);
    } else {
      for (const auto& a : e.args) category_ref(a);
    }
    try {
      return ws_.resolve(e.expr);
    } catch (const Error& err) {
      reject("E406", "functor.expression", err.what(), e.span);
    }
  }

  void nat() {
    const SourceSpan start = take().span;
    Name nname = name("a transformation name");
    expect(Tok::kColon);
    FunctorExprSyntax src = functor_expr();
    expect(Tok::kFatArrow);
    FunctorExprSyntax tgt = functor_expr();
    std::vector<Pair> comps;
    expect(Tok::kLBrace);
    while (!at(Tok::kRBrace)) {
      if (!at_word("components")) fail("expected 'components' or '}'");
      take();
      expect(Tok::kColon);
      auto p = pair_list();
      comps.insert(comps.end(), p.begin(), p.end());
    }
    const SourceSpan span = join(start, expect(Tok::kRBrace).span);
    item_done_ = true;
    check_fresh(nname);
    Functor s = resolve(src);
    Functor t = resolve(tgt);
    if (!same_category(s.dom, t.dom) || !same_category(s.cod, t.cod)) {
      reject("E406", "nat.parallel", "source and target functors are not parallel",
             join(src.span, tgt.span));
    }
    const FiniteCategory& c = *s.dom;
    const FiniteCategory& d = *s.cod;
    std::vector<Mor> components(c.object_count(), kNone);
    for (const auto& [a, m] : comps) {
      auto ai = c.find_object(a.text);
      if (!ai) missing("object", a);
      auto mi = d.find_morphism(m.text);
      if (!mi) missing("morphism", m);
      if (components[*ai] != kNone) {
        reject("E302", "duplicate", "component at '" + a.text + "' given twice", a.span);
      }
      components[*ai] = *mi;
    }
    for (Obj a = 0; a < static_cast<Obj>(c.object_count()); ++a) {
      if (components[a] == kNone) {
        reject("E407", "nat.total", "no component at '" + c.object_name(a) + "'", span);
      }
    }
    NaturalTransformation n{s, t, components};
    ValidationReport rep = validate_nat(n);
    if (!rep.valid()) {
      const Violation& v = rep.violations.front();
      std::string ids;
      for (const auto& i : v.ids) ids += (ids.empty() ? "" : ", ") + i;
      reject("E404", v.law, v.detail + " (" + ids + ")", span);
    }
    ws_.nats.push_back({nname.text, src.expr, tgt.expr, std::move(n), span});
    defined_.insert(nname.text);
  }

  void ambient() {
    const SourceSpan start = take().span;
    Name aname = name("an ambient name");
    expect(Tok::kEq);
    AmbientDef def;
    def.name = aname.text;
    Name kind = name("'ob', 'otilde' or 'explicit'");
    Name base;
    std::vector<Name> cats;
    std::vector<Name> funs;
    if (kind.text == "ob" || kind.text == "otilde") {
      def.kind = kind.text == "ob" ? AmbientDef::Kind::kOb : AmbientDef::Kind::kOtilde;
      expect(Tok::kLParen);
      base = name("a category name");
      if (def.kind == AmbientDef::Kind::kOtilde && at(Tok::kComma)) {
        take();
        keyword("cap");
        expect(Tok::kEq);
        const Token& n = expect(Tok::kIdent, "a number");
        std::size_t value = 0;
        auto [p, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), value);
        if (ec != std::errc{} || p != n.text.data() + n.text.size()) {
          throw SyntaxError{{"E200", "syntax", "expected a number, found '" + n.text + "'", n.span}};
        }
        def.cap = value;
      }
      expect(Tok::kRParen);
      def.base = base.text;
    } else if (kind.text == "explicit") {
      def.kind = AmbientDef::Kind::kExplicit;
      expect(Tok::kLBrace);
      while (!at(Tok::kRBrace)) {
        if (at_word("categories")) {
          take();
          expect(Tok::kColon);
          list([&] { cats.push_back(name("a category name")); });
        } else if (at_word("functors")) {
          take();
          expect(Tok::kColon);
          if (at_word("all") && peek(1).kind == Tok::kSemi) {
            take();
            take();
            def.all_functors = true;
          } else {
            list([&] { funs.push_back(name("a functor name")); });
          }
        } else {
          fail("expected 'categories', 'functors' or '}'");
        }
      }
      take();
    } else {
      pos_ -= 1;
      fail("expected 'ob', 'otilde' or 'explicit'");
    }
    if (at(Tok::kSemi)) take();
    const SourceSpan span = join(start, last_span());
    item_done_ = true;
    check_fresh(aname);
    def.span = span;

    try {
      if (def.kind == AmbientDef::Kind::kExplicit) {
        std::vector<NamedCategory> named;
        std::set<std::string> listed;
        for (const auto& c : cats) {
          const CategoryDef& cd = category_ref(c);
          if (!listed.insert(c.text).second) {
            reject("E302", "duplicate", "category '" + c.text + "' listed twice", c.span);
          }
          named.push_back({cd.name, cd.category});
          def.categories.push_back(c.text);
        }
        if (def.all_functors) {
          def.built = std::make_shared<const AmbientCategory>(build_explicit_all_functors(named, cap_));
        } else {
          std::vector<NamedFunctor> nf;
          for (const auto& f : funs) {
            const FunctorDef* fd = ws_.find_functor(f.text);
            if (!fd) unknown("functor", f);
            if (listed.count(fd->dom) == 0 || listed.count(fd->cod) == 0) {
              reject("E406", "ambient.functor",
                     "functor '" + f.text + "' does not run between listed categories", f.span);
            }
            nf.push_back({fd->name, fd->dom, fd->cod, fd->functor});
            def.functors.push_back(f.text);
          }
          def.built = std::make_shared<const AmbientCategory>(build_explicit(named, nf));
        }
      } else {
        const CategoryDef& cd = category_ref(base);
        AmbientSpec spec{*cd.category,
                         def.kind == AmbientDef::Kind::kOb ? AmbientMode::kInclusionsOnly
                                                           : AmbientMode::kAllFunctors,
                         {},
                         def.cap.value_or(cap_)};
        def.built = std::make_shared<const AmbientCategory>(
            def.kind == AmbientDef::Kind::kOb ? build_ob(spec) : build_otilde(spec));
      }
    } catch (const Error& err) {
      reject(code_for(err.kind()), "ambient", err.what(), span);
    }
    ValidationReport rep = validate_ambient(*def.built);
    if (!rep.valid()) {
      reject("E405", rep.violations.front().law, rep.violations.front().detail, span);
    }
    ws_.ambients.push_back(std::move(def));
    defined_.insert(aname.text);
  }

  void sieve() {
    const SourceSpan start = take().span;
    Name sname = name("a sieve name");
    keyword("on");
    Name apex = name("a category name");
    keyword("in");
    Name amb = name("an ambient name");
    struct SelectSyntax {
      Name object;
      std::vector<FunctorExprSyntax> functors;
      std::vector<Name> nats;
      SourceSpan span;
    };
    std::vector<SelectSyntax> selects;
    expect(Tok::kLBrace);
    while (!at(Tok::kRBrace)) {
      SelectSyntax s;
      const SourceSpan sel = peek().span;
      keyword("select");
      s.object = name("a category name");
      expect(Tok::kLBrace);
      while (!at(Tok::kRBrace)) {
        if (at_word("functors")) {
          take();
          expect(Tok::kColon);
          list([&] { s.functors.push_back(functor_expr()); });
        } else if (at_word("nats")) {
          take();
          expect(Tok::kColon);
          list([&] { s.nats.push_back(name("a transformation name")); });
        } else {
          fail("expected 'functors', 'nats' or '}'");
        }
      }
      s.span = join(sel, take().span);
      selects.push_back(std::move(s));
    }
    const SourceSpan span = join(start, take().span);
    item_done_ = true;
    check_fresh(sname);

    const AmbientDef& a = ambient_ref(amb);
    const Obj u = ambient_object(a, apex);
    SieveDef def{sname.text, apex.text, amb.text, {}, span};
    for (const auto& s : selects) {
      const Obj v = ambient_object(a, s.object);
      SelectDef out{s.object.text, {}, {}, s.span};
      auto in_hom = [&](const Functor& f) { return a.built->find_morphism(v, u, f).has_value(); };
      for (const auto& fe : s.functors) {
        Functor f = resolve(fe);
        if (!in_hom(f)) {
          reject("E406", "sieve.generator",
                 "'" + to_string(fe.expr) + "' is not an object of F(" + s.object.text + ", " +
                     apex.text + ") in '" + a.name + "'",
                 fe.span);
        }
        out.functors.push_back(fe.expr);
      }
      for (const auto& n : s.nats) {
        const NatDef* nd = ws_.find_nat(n.text);
        if (!nd) unknown("transformation", n);
        if (!in_hom(nd->nat.source) || !in_hom(nd->nat.target)) {
          reject("E406", "sieve.generator",
                 "'" + n.text + "' is not a morphism of F(" + s.object.text + ", " + apex.text +
                     ") in '" + a.name + "'",
                 n.span);
        }
        out.nats.push_back(n.text);
      }
      def.selects.push_back(std::move(out));
    }
    ws_.sieves.push_back(std::move(def));
    defined_.insert(sname.text);
  }

  void check() {
    const SourceSpan start = take().span;
    Name kind = name("a check name");
    std::vector<Name> args;
    expect(Tok::kLParen);
    if (!at(Tok::kRParen)) {
      args.push_back(name("an argument"));
      while (at(Tok::kComma)) {
        take();
        args.push_back(name("an argument"));
      }
    }
    expect(Tok::kRParen);
    expect(Tok::kSemi);
    const SourceSpan span = join(start, last_span());
    item_done_ = true;

    static const std::map<std::string, std::size_t> arity = {
        {"yoneda", 3}, {"embedding", 1}, {"sieve", 1}, {"enumerate-sieves", 2}, {"decompose", 1}};
    auto it = arity.find(kind.text);
    if (it == arity.end()) {
      reject("E200", "syntax", "unknown check '" + kind.text + "'", kind.span);
    }
    if (args.size() != it->second) {
      reject("E200", "syntax",
             "check '" + kind.text + "' takes " + std::to_string(it->second) + " argument(s)", span);
    }
    if (kind.text == "sieve" || kind.text == "decompose") {
      const SieveDef* s = ws_.find_sieve(args[0].text);
      if (!s) unknown("sieve", args[0]);
      if (kind.text == "decompose" && ws_.find_ambient(s->ambient)->kind != AmbientDef::Kind::kOb) {
        reject("E406", "decompose.ambient", "decompose needs a sieve over an ob(...) ambient", span);
      }
    } else {
      const AmbientDef& a = ambient_ref(args[0]);
      for (std::size_t k = 1; k < args.size(); ++k) ambient_object(a, args[k]);
    }
    CheckDef def{kind.text, {}, span};
    for (const auto& n : args) def.args.push_back(n.text);
    ws_.checks.push_back(std::move(def));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t cap_;
  bool item_done_ = false;
  Workspace ws_;
  std::vector<Diagnostic> diags_;
  std::set<std::string> defined_;
  std::set<std::string> rejected_;
};

}  // namespace

ParseResult parse_workspace(std::string_view text, std::string file, std::size_t cap) {
  Diagnostic lex_error;
  auto tokens = lex(text, file, lex_error);
  if (!tokens) return {std::nullopt, {lex_error}};
  return Parser(std::move(*tokens), std::move(file), cap).run();
}

}  // namespace catsheaf::dsl
