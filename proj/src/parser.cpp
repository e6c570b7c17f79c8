#include "lpsem/parser.hpp"

#include <algorithm>
#include <cctype>

namespace lpsem {

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_trivia() {
    while (!eof()) {
      char c = peek();
      if (c == '%') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  SourceSpan span_here(int length = 1) const { return SourceSpan{line, col, length}; }

  [[noreturn]] void fail(const std::string& msg, int length = 1) const {
    throw ParseError(msg, span_here(length));
  }
};

bool is_atom_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_atom_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

// Length of the token the cursor points at, for error spans.
int token_length_at(const Cursor& cur) {
  size_t end = cur.pos;
  while (end < cur.text.size() && is_atom_char(cur.text[end])) ++end;
  return std::max<int>(1, static_cast<int>(end - cur.pos));
}

std::string lex_atom(Cursor& cur, const char* what) {
  if (cur.eof()) cur.fail(std::string("unexpected end of input, expected ") + what);
  char c = cur.peek();
  if (c == '-')
    cur.fail("classical negation is not supported");
  if (!is_atom_start(c))
    cur.fail(std::string("expected ") + what + " (atom names match [a-z][a-zA-Z0-9_]*)",
             token_length_at(cur));
  std::string name;
  while (!cur.eof() && is_atom_char(cur.peek())) {
    name.push_back(cur.peek());
    cur.advance();
  }
  return name;
}

}  // namespace

Program parse_program(std::string_view text) {
  Cursor cur{text};
  ProgramBuilder builder;

  cur.skip_trivia();
  while (!cur.eof()) {
    if (cur.peek() == ':') {
      cur.fail("constraints (headless rules) are not supported", 2);
    }
    SourceSpan head_span = cur.span_here();
    std::string head = lex_atom(cur, "a rule head");
    if (head == "not")
      throw ParseError("'not' is reserved and cannot be used as an atom name",
                       SourceSpan{head_span.line, head_span.col, 3});
    AtomId head_id = builder.intern(head);
    std::vector<AtomId> pbody, nbody;

    cur.skip_trivia();
    if (!cur.eof() && (cur.peek() == '|' || cur.peek() == ';'))
      cur.fail("disjunctive heads are not supported");
    if (!cur.eof() && cur.peek() == ':') {
      cur.advance();
      if (cur.eof() || cur.peek() != '-') cur.fail("expected ':-'");
      cur.advance();
      while (true) {
        cur.skip_trivia();
        if (!cur.eof() && cur.peek() == '~') {
          cur.advance();
          cur.skip_trivia();
          std::string a = lex_atom(cur, "an atom after '~'");
          if (a == "not") cur.fail("'not' is reserved and cannot be used as an atom name");
          nbody.push_back(builder.intern(a));
        } else {
          SourceSpan lit_span = cur.span_here();
          std::string a = lex_atom(cur, "a body literal");
          if (a == "not") {
            cur.skip_trivia();
            if (cur.eof() || !is_atom_start(cur.peek()))
              throw ParseError("expected an atom after 'not'",
                               cur.eof() ? SourceSpan{lit_span.line, lit_span.col, 3}
                                         : cur.span_here(token_length_at(cur)));
            std::string b = lex_atom(cur, "an atom after 'not'");
            if (b == "not") cur.fail("'not' is reserved and cannot be used as an atom name");
            nbody.push_back(builder.intern(b));
          } else {
            pbody.push_back(builder.intern(a));
          }
        }
        cur.skip_trivia();
        if (!cur.eof() && cur.peek() == ',') {
          cur.advance();
          continue;
        }
        break;
      }
    }
    if (cur.eof()) cur.fail("unexpected end of input, expected '.'");
    if (cur.peek() != '.') cur.fail("expected '.' at end of rule", token_length_at(cur));
    cur.advance();
    builder.add_rule(head_id, std::move(pbody), std::move(nbody));
    cur.skip_trivia();
  }
  return builder.build();
}

std::string serialize_rule(const AtomTable& atoms, const Rule& r) {
  std::vector<std::string> pb, nb;
  for (AtomId a : r.pbody) pb.push_back(atoms.name(a));
  for (AtomId a : r.nbody) nb.push_back(atoms.name(a));
  std::sort(pb.begin(), pb.end());
  std::sort(nb.begin(), nb.end());

  std::string out = atoms.name(r.head);
  if (!pb.empty() || !nb.empty()) {
    out += " :- ";
    bool first = true;
    for (const auto& a : pb) {
      if (!first) out += ", ";
      out += a;
      first = false;
    }
    for (const auto& a : nb) {
      if (!first) out += ", ";
      out += "not " + a;
      first = false;
    }
  }
  out += ".";
  return out;
}

std::string serialize_program(const Program& p) {
  std::string out;
  for (const Rule& r : p.rules()) {
    out += serialize_rule(p.atoms(), r);
    out += "\n";
  }
  return out;
}

}  // namespace lpsem
