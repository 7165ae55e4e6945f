#include "subsume/tptp.hpp"

#include <cctype>
#include <map>
#include <ostream>
#include <set>

#include "subsume/term.hpp"

namespace subsume {

namespace {

enum class Tok {
  End,
  LParen,
  RParen,
  Comma,
  Dot,
  Pipe,
  Tilde,
  Eq,
  Neq,
  LowerWord,  // also bare integers (usable as clause names)
  UpperWord,
  DollarFalse,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    char c = text_[pos_];
    if (c == '(') return take(Tok::LParen, 1, line, col);
    if (c == ')') return take(Tok::RParen, 1, line, col);
    if (c == ',') return take(Tok::Comma, 1, line, col);
    if (c == '.') return take(Tok::Dot, 1, line, col);
    if (c == '|') return take(Tok::Pipe, 1, line, col);
    if (c == '~') return take(Tok::Tilde, 1, line, col);
    if (c == '=') return take(Tok::Eq, 1, line, col);
    if (c == '!') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') return take(Tok::Neq, 2, line, col);
      throw ParseError("stray '!' (expected '!=')", line, col);
    }
    if (c == '$') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && is_word_char(text_[end])) ++end;
      std::string word(text_.substr(pos_, end - pos_));
      if (word != "$false")
        throw ParseError("unsupported defined symbol '" + word + "'", line, col);
      return take(Tok::DollarFalse, word.size(), line, col);
    }
    if (is_word_char(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && is_word_char(text_[end])) ++end;
      Tok kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::UpperWord
                                                                           : Tok::LowerWord;
      return take(kind, end - pos_, line, col);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

private:
  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
  }

  Token take(Tok kind, std::size_t len, int line, int col) {
    Token t{kind, std::string(text_.substr(pos_, len)), line, col};
    pos_ += len;
    col_ += static_cast<int>(len);
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  Parser(std::string_view text, TermBank& bank, SymbolTable& symbols)
      : lexer_(text), bank_(bank), symbols_(symbols) {
    advance();
  }

  ProblemFile parse_file() {
    ProblemFile file;
    std::set<std::string> names;
    while (cur_.kind != Tok::End) {
      Token keyword = expect(Tok::LowerWord, "'cnf'");
      if (keyword.text != "cnf") {
        if (keyword.text == "fof" || keyword.text == "tff" || keyword.text == "tcf" ||
            keyword.text == "thf")
          throw ParseError("unsupported dialect '" + keyword.text + "' (only cnf is accepted)",
                           keyword.line, keyword.col);
        throw ParseError("expected 'cnf', got '" + keyword.text + "'", keyword.line, keyword.col);
      }
      expect(Tok::LParen, "'('");
      Token name = expect(Tok::LowerWord, "clause name");
      if (!names.insert(name.text).second)
        throw ParseError("duplicate clause name '" + name.text + "'", name.line, name.col);
      expect(Tok::Comma, "','");
      Token role = expect(Tok::LowerWord, "role");
      expect(Tok::Comma, "','");

      var_indices_.clear();
      var_names_.clear();
      std::vector<Literal> literals = parse_formula();
      expect(Tok::RParen, "')'");
      expect(Tok::Dot, "'.'");

      auto clause = Clause::normalize(bank_, std::move(literals), std::move(var_names_));
      if (!clause) {
        file.warnings.push_back("clause '" + name.text + "' is a tautology; dropped");
        continue;
      }
      file.entries.push_back({name.text, role.text, std::move(*clause)});
    }
    return file;
  }

private:
  void advance() { cur_ = lexer_.next(); }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind)
      throw ParseError(std::string("expected ") + what + ", got '" + describe(cur_) + "'",
                       cur_.line, cur_.col);
    Token t = cur_;
    advance();
    return t;
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : t.text;
  }

  std::vector<Literal> parse_formula() {
    bool parenthesized = false;
    if (cur_.kind == Tok::LParen) {
      parenthesized = true;
      advance();
    }
    std::vector<Literal> literals;
    parse_disjunct(literals);
    while (cur_.kind == Tok::Pipe) {
      advance();
      parse_disjunct(literals);
    }
    if (parenthesized) expect(Tok::RParen, "')'");
    return literals;
  }

  // Appends zero literals ($false) or one.
  void parse_disjunct(std::vector<Literal>& out) {
    bool negated = false;
    if (cur_.kind == Tok::Tilde) {
      negated = true;
      advance();
    }
    if (cur_.kind == Tok::DollarFalse) {
      if (negated) throw ParseError("'$false' cannot be negated", cur_.line, cur_.col);
      advance();
      return;
    }
    if (cur_.kind == Tok::UpperWord) {
      // A bare variable is only legal as the left side of an equality.
      Token v = cur_;
      advance();
      if (negated)
        throw ParseError("'~' applies to atoms; negate an equality with '!='", v.line, v.col);
      if (cur_.kind != Tok::Eq && cur_.kind != Tok::Neq)
        throw ParseError("variable '" + v.text + "' cannot be used as a predicate", v.line, v.col);
      bool positive = cur_.kind == Tok::Eq;
      advance();
      TermRef lhs = variable(v.text);
      TermRef rhs = parse_term();
      out.push_back({positive, symbols_.equality(), {lhs, rhs}});
      return;
    }
    Token head = expect(Tok::LowerWord, "atom or term");
    std::vector<TermRef> args = parse_arg_list();
    if (cur_.kind == Tok::Eq || cur_.kind == Tok::Neq) {
      if (negated)
        throw ParseError("negate an equality with '!=' instead of '~'", cur_.line, cur_.col);
      bool positive = cur_.kind == Tok::Eq;
      advance();
      TermRef lhs = make_app(head, args);
      TermRef rhs = parse_term();
      out.push_back({positive, symbols_.equality(), {lhs, rhs}});
      return;
    }
    PredId pred = intern_pred(head, static_cast<unsigned>(args.size()));
    out.push_back({!negated, pred, std::move(args)});
  }

  TermRef parse_term() {
    if (cur_.kind == Tok::UpperWord) {
      Token v = cur_;
      advance();
      return variable(v.text);
    }
    Token head = expect(Tok::LowerWord, "term");
    std::vector<TermRef> args = parse_arg_list();
    return make_app(head, args);
  }

  std::vector<TermRef> parse_arg_list() {
    std::vector<TermRef> args;
    if (cur_.kind != Tok::LParen) return args;
    advance();
    args.push_back(parse_term());
    while (cur_.kind == Tok::Comma) {
      advance();
      args.push_back(parse_term());
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  TermRef variable(const std::string& name) {
    auto it = var_indices_.find(name);
    if (it != var_indices_.end()) return TermRef::var(it->second);
    std::uint32_t index = static_cast<std::uint32_t>(var_names_.size());
    var_indices_.emplace(name, index);
    var_names_.push_back(name);
    return TermRef::var(index);
  }

  TermRef make_app(const Token& head, const std::vector<TermRef>& args) {
    return bank_.app(intern_fn(head, static_cast<unsigned>(args.size())), args);
  }

  PredId intern_pred(const Token& head, unsigned arity) {
    try {
      return symbols_.intern_predicate(head.text, arity);
    } catch (const Error& e) {
      throw ParseError(e.what(), head.line, head.col);
    }
  }

  FnId intern_fn(const Token& head, unsigned arity) {
    try {
      return symbols_.intern_function(head.text, arity);
    } catch (const Error& e) {
      throw ParseError(e.what(), head.line, head.col);
    }
  }

  Lexer lexer_;
  Token cur_{Tok::End, "", 0, 0};
  TermBank& bank_;
  SymbolTable& symbols_;
  std::map<std::string, std::uint32_t> var_indices_;
  std::vector<std::string> var_names_;
};

}  // namespace

ProblemFile parse_cnf(std::string_view text, TermBank& bank, SymbolTable& symbols) {
  return Parser(text, bank, symbols).parse_file();
}

std::string print_term(const TermBank& bank, const SymbolTable& symbols, TermRef t,
                       const std::vector<std::string>& var_names) {
  return term_to_string(bank, symbols, t, var_names);
}

std::string print_literal(const TermBank& bank, const SymbolTable& symbols, const Literal& lit,
                          const std::vector<std::string>& var_names) {
  if (symbols.predicate_name(lit.pred) == "=" && lit.args.size() == 2) {
    return print_term(bank, symbols, lit.args[0], var_names) + (lit.positive ? " = " : " != ") +
           print_term(bank, symbols, lit.args[1], var_names);
  }
  std::string out = lit.positive ? "" : "~";
  out += symbols.predicate_name(lit.pred);
  if (!lit.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < lit.args.size(); ++i) {
      if (i) out += ',';
      out += print_term(bank, symbols, lit.args[i], var_names);
    }
    out += ')';
  }
  return out;
}

std::string print_clause(const TermBank& bank, const SymbolTable& symbols, const Clause& c) {
  if (c.empty()) return "$false";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    out += print_literal(bank, symbols, c.literals()[i], c.var_names());
  }
  return out;
}

void print_problem(std::ostream& out, const TermBank& bank, const SymbolTable& symbols,
                   const ProblemFile& problem) {
  for (const ProblemEntry& e : problem.entries)
    out << "cnf(" << e.name << ", " << e.role << ", " << print_clause(bank, symbols, e.clause)
        << ").\n";
}

}  // namespace subsume
