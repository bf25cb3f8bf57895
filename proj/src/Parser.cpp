#include "mapcheck/Parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace mapcheck {

namespace {

struct Token {
  enum class Kind { Ident, Int, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  int value = 0;
  int line = 1;
  int col = 1;
};

const std::set<std::string> kReserved = {
    "c11",  "isa",       "test",      "arch",   "init",      "thread",
    "load", "store",     "ld",        "st",     "sync",      "lwsync",
    "dmbish", "ctrlisync", "ctrlisb", "power",  "armv7",     "forbidden",
    "allowed"};

bool isRegisterName(const std::string& s) {
  if (s.size() < 2 || s[0] != 'r') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  const Token& peek2() {
    if (!next_) {
      Token save = tok_;
      advance();
      next_ = tok_;
      tok_ = save;
    }
    return *next_;
  }

  Token take() {
    Token out = tok_;
    if (next_) {
      tok_ = *next_;
      next_.reset();
    } else {
      advance();
    }
    return out;
  }

 private:
  void advance() {
    skipSpaceAndComments();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' ||
            d == '-') {
          s += d;
          bump();
        } else {
          break;
        }
      }
      tok_.kind = Token::Kind::Ident;
      tok_.text = s;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      std::string s;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        s += text_[pos_];
        bump();
      }
      try {
        v = std::stoi(s);
      } catch (...) {
        throw ParseError(tok_.line, tok_.col, "integer literal out of range");
      }
      tok_.kind = Token::Kind::Int;
      tok_.text = s;
      tok_.value = v;
      return;
    }
    if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\\') {
      tok_.kind = Token::Kind::Symbol;
      tok_.text = "/\\";
      bump();
      bump();
      return;
    }
    if (std::string("=;,(){}").find(c) != std::string::npos) {
      tok_.kind = Token::Kind::Symbol;
      tok_.text = std::string(1, c);
      bump();
      return;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + c +
                                      "'");
  }

  void skipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
  std::optional<Token> next_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  LitmusTest parse() {
    Token head = expectIdent();
    bool c11;
    if (head.text == "c11") {
      c11 = true;
    } else if (head.text == "isa") {
      c11 = false;
    } else {
      fail(head, "expected 'c11' or 'isa'");
    }
    expectKeyword("test");
    Token name = expectIdent();

    if (c11) {
      C11Test test;
      test.name = name.text;
      parseBody(test);
      finishValidate(test, name);
      return test;
    }
    IsaTest test;
    test.name = name.text;
    expectKeyword("arch");
    Token arch = expectIdent();
    if (arch.text == "power") {
      test.arch = Arch::Power;
    } else if (arch.text == "armv7") {
      test.arch = Arch::Armv7;
    } else {
      fail(arch, "expected 'power' or 'armv7'");
    }
    parseBody(test);
    finishValidate(test, name);
    return test;
  }

 private:
  template <typename TestT>
  void parseBody(TestT& test) {
    if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "init")
      parseInit(test.init);
    while (lex_.peek().kind == Token::Kind::Ident &&
           lex_.peek().text == "thread") {
      lex_.take();
      Token id = expectInt();
      if (id.value != static_cast<int>(test.threads.size()))
        fail(id, "thread ids must be 0..n-1 in order");
      expectSymbol("{");
      test.threads.emplace_back();
      while (!(lex_.peek().kind == Token::Kind::Symbol &&
               lex_.peek().text == "}")) {
        parseOp(test);
      }
      lex_.take();  // }
    }
    Token verdictTok = expectIdent();
    if (verdictTok.text != "forbidden" && verdictTok.text != "allowed") {
      if (test.threads.empty()) fail(verdictTok, "no threads");
      fail(verdictTok, "expected 'thread', 'forbidden' or 'allowed'");
    }
    if (test.threads.empty()) fail(verdictTok, "no threads");
    test.outcome.expectForbidden = verdictTok.text == "forbidden";
    parseOutcomeTerms(test);
    Token end = lex_.take();
    if (end.kind != Token::Kind::End) fail(end, "trailing input after outcome");
  }

  void parseInit(InitList& init) {
    lex_.take();  // init
    while (lex_.peek().kind == Token::Kind::Ident &&
           lex_.peek2().kind == Token::Kind::Symbol &&
           lex_.peek2().text == "=") {
      Token loc = lex_.take();
      checkLocationName(loc);
      lex_.take();  // =
      Token val = expectInt();
      if (hasInit(init, loc.text)) fail(loc, "duplicate init for location");
      init.emplace_back(loc.text, val.value);
    }
    if (init.empty())
      fail(lex_.peek(), "expected at least one <loc>=<val> after 'init'");
  }

  void parseOp(C11Test& test) {
    auto& ops = test.threads.back();
    Token first = expectIdent();
    if (first.text == "store") {
      expectSymbol("(");
      Token loc = expectIdent();
      checkLocationName(loc);
      requireInit(test.init, loc);
      expectSymbol(",");
      Token val = expectInt();
      expectSymbol(",");
      MemoryOrder order = parseOrder();
      expectSymbol(")");
      expectSymbol(";");
      if (order == MemoryOrder::Acquire) fail(first, "stores cannot be acquire");
      noteStoreValue(loc, test.init, val);
      ops.push_back({C11Op::Kind::Store, loc.text, val.value, order, {}});
      return;
    }
    // r<k> = load(loc, order)
    checkRegisterName(first);
    expectSymbol("=");
    expectKeyword("load");
    expectSymbol("(");
    Token loc = expectIdent();
    checkLocationName(loc);
    requireInit(test.init, loc);
    expectSymbol(",");
    MemoryOrder order = parseOrder();
    expectSymbol(")");
    expectSymbol(";");
    if (order == MemoryOrder::Release) fail(first, "loads cannot be release");
    noteRegister(first);
    ops.push_back({C11Op::Kind::Load, loc.text, 0, order, first.text});
  }

  void parseOp(IsaTest& test) {
    auto& ops = test.threads.back();
    Token first = expectIdent();
    auto fence = fenceKindFor(first.text);
    if (fence) {
      expectSymbol(";");
      const bool ctrl =
          *fence == FenceKind::CtrlIsync || *fence == FenceKind::CtrlIsb;
      if (ctrl && (ops.empty() || ops.back().kind != IsaOp::Kind::Load))
        fail(first, first.text + " must immediately follow a load");
      ops.push_back({IsaOp::Kind::Fence, {}, 0, *fence, {}});
      return;
    }
    if (first.text == "st") {
      Token loc = expectIdent();
      checkLocationName(loc);
      requireInit(test.init, loc);
      expectSymbol("=");
      Token val = expectInt();
      expectSymbol(";");
      noteStoreValue(loc, test.init, val);
      ops.push_back({IsaOp::Kind::Store, loc.text, val.value,
                     FenceKind::Sync, {}});
      return;
    }
    // r<k> = ld loc
    checkRegisterName(first);
    expectSymbol("=");
    expectKeyword("ld");
    Token loc = expectIdent();
    checkLocationName(loc);
    requireInit(test.init, loc);
    expectSymbol(";");
    noteRegister(first);
    ops.push_back({IsaOp::Kind::Load, loc.text, 0, FenceKind::Sync,
                   first.text});
  }

  template <typename TestT>
  void parseOutcomeTerms(TestT& test) {
    while (true) {
      Token name = expectIdent();
      expectSymbol("=");
      Token val = expectInt();
      OutcomeTerm term;
      term.name = name.text;
      term.value = val.value;
      if (registers_.count(name.text)) {
        term.kind = OutcomeTerm::Kind::Register;
      } else if (hasInit(test.init, name.text)) {
        term.kind = OutcomeTerm::Kind::Memory;
      } else {
        fail(name, "outcome references unknown register or location '" +
                       name.text + "'");
      }
      test.outcome.terms.push_back(term);
      if (lex_.peek().kind == Token::Kind::Symbol &&
          lex_.peek().text == "/\\") {
        lex_.take();
        continue;
      }
      break;
    }
  }

  MemoryOrder parseOrder() {
    Token tok = expectIdent();
    if (tok.text == "relaxed") return MemoryOrder::Relaxed;
    if (tok.text == "acquire") return MemoryOrder::Acquire;
    if (tok.text == "release") return MemoryOrder::Release;
    if (tok.text == "seq_cst") return MemoryOrder::SeqCst;
    fail(tok, "expected memory order (relaxed|acquire|release|seq_cst)");
  }

  static std::optional<FenceKind> fenceKindFor(const std::string& s) {
    if (s == "sync") return FenceKind::Sync;
    if (s == "lwsync") return FenceKind::Lwsync;
    if (s == "dmbish") return FenceKind::DmbIsh;
    if (s == "ctrlisync") return FenceKind::CtrlIsync;
    if (s == "ctrlisb") return FenceKind::CtrlIsb;
    return std::nullopt;
  }

  void noteRegister(const Token& reg) {
    if (!registers_.insert(reg.text).second)
      fail(reg, "duplicate register '" + reg.text + "'");
  }

  void noteStoreValue(const Token& loc, const InitList& init,
                      const Token& val) {
    auto& seen = storeValues_[loc.text];
    if (seen.empty() && hasInit(init, loc.text))
      seen.insert(initValue(init, loc.text));
    if (!seen.insert(val.value).second)
      fail(val, "store value collision: value " + val.text +
                    " written twice to '" + loc.text + "'");
  }

  void requireInit(const InitList& init, const Token& loc) {
    if (!hasInit(init, loc.text))
      fail(loc, "location '" + loc.text + "' not initialized");
  }

  void checkLocationName(const Token& tok) {
    if (kReserved.count(tok.text))
      fail(tok, "'" + tok.text + "' is a reserved word");
    if (isRegisterName(tok.text))
      fail(tok, "location name '" + tok.text + "' is reserved for registers");
  }

  void checkRegisterName(const Token& tok) {
    if (!isRegisterName(tok.text))
      fail(tok, "expected an op ('" + tok.text + "' is not a register)");
  }

  template <typename TestT>
  void finishValidate(TestT& test, const Token& at) {
    try {
      validate(test);
    } catch (const ValidationError& e) {
      fail(at, e.what());  // inline checks should have caught this earlier
    }
  }

  Token expectIdent() {
    Token tok = lex_.take();
    if (tok.kind != Token::Kind::Ident) fail(tok, "expected identifier");
    return tok;
  }

  Token expectInt() {
    Token tok = lex_.take();
    if (tok.kind != Token::Kind::Int) fail(tok, "expected integer");
    return tok;
  }

  void expectKeyword(const std::string& kw) {
    Token tok = lex_.take();
    if (tok.kind != Token::Kind::Ident || tok.text != kw)
      fail(tok, "expected '" + kw + "'");
  }

  void expectSymbol(const std::string& sym) {
    Token tok = lex_.take();
    if (tok.kind != Token::Kind::Symbol || tok.text != sym)
      fail(tok, "expected '" + sym + "'");
  }

  [[noreturn]] void fail(const Token& tok, const std::string& msg) {
    throw ParseError(tok.line, tok.col, msg);
  }

  Lexer lex_;
  std::set<std::string> registers_;
  std::map<std::string, std::set<int>> storeValues_;
};

void renderInit(std::ostringstream& out, const InitList& init) {
  if (init.empty()) return;
  out << "init";
  for (const auto& [loc, val] : init) out << ' ' << loc << '=' << val;
  out << '\n';
}

void renderOutcome(std::ostringstream& out, const Outcome& outcome) {
  out << (outcome.expectForbidden ? "forbidden" : "allowed");
  for (std::size_t i = 0; i < outcome.terms.size(); ++i) {
    if (i > 0) out << " /\\";
    out << ' ' << outcome.terms[i].name << '=' << outcome.terms[i].value;
  }
  out << '\n';
}

}  // namespace

LitmusTest parseLitmus(const std::string& text) {
  return Parser(text).parse();
}

std::string renderLitmus(const C11Test& test) {
  std::ostringstream out;
  out << "c11 test " << test.name << '\n';
  renderInit(out, test.init);
  for (std::size_t t = 0; t < test.threads.size(); ++t) {
    out << "thread " << t << " {\n";
    for (const C11Op& op : test.threads[t]) {
      if (op.kind == C11Op::Kind::Load) {
        out << "  " << op.dest << " = load(" << op.loc << ", "
            << toString(op.order) << ");\n";
      } else {
        out << "  store(" << op.loc << ", " << op.value << ", "
            << toString(op.order) << ");\n";
      }
    }
    out << "}\n";
  }
  renderOutcome(out, test.outcome);
  return out.str();
}

std::string renderLitmus(const IsaTest& test) {
  std::ostringstream out;
  out << "isa test " << test.name << " arch " << toString(test.arch) << '\n';
  renderInit(out, test.init);
  for (std::size_t t = 0; t < test.threads.size(); ++t) {
    out << "thread " << t << " {\n";
    for (const IsaOp& op : test.threads[t]) {
      switch (op.kind) {
        case IsaOp::Kind::Load:
          out << "  " << op.dest << " = ld " << op.loc << ";\n";
          break;
        case IsaOp::Kind::Store:
          out << "  st " << op.loc << " = " << op.value << ";\n";
          break;
        case IsaOp::Kind::Fence:
          out << "  " << toString(op.fence) << ";\n";
          break;
      }
    }
    out << "}\n";
  }
  renderOutcome(out, test.outcome);
  return out.str();
}

std::string renderLitmus(const LitmusTest& test) {
  return std::visit([](const auto& t) { return renderLitmus(t); }, test);
}

std::string testName(const LitmusTest& test) {
  return std::visit([](const auto& t) { return t.name; }, test);
}

}  // namespace mapcheck
