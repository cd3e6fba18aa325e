#include "sna/xml.hpp"

#include <cctype>

#include "sna/error.hpp"

namespace sna::xml {

namespace {

bool is_name_start(int c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}
bool is_name_char(int c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

std::string strip_prefix(std::string name) {
  auto pos = name.rfind(':');
  return pos == std::string::npos ? name : name.substr(pos + 1);
}

}  // namespace

void Parser::fail(const std::string& msg) const { throw ParseError(msg, line_); }

int Parser::get() {
  int c = in_.get();
  if (c == '\n') ++line_;
  return c;
}

int Parser::peek() { return in_.peek(); }

void Parser::expect(char c, const char* what) {
  if (get() != c) fail(std::string("expected ") + what);
}

void Parser::skip_whitespace() {
  while (std::isspace(peek())) get();
}

std::string Parser::read_name() {
  if (!is_name_start(peek())) fail("expected a name");
  std::string name;
  while (is_name_char(peek())) name.push_back(static_cast<char>(get()));
  return name;
}

void Parser::decode_entity(std::string& out) {
  std::string ent;
  for (;;) {
    int c = get();
    if (c == EOF || ent.size() > 10) fail("unterminated entity reference");
    if (c == ';') break;
    ent.push_back(static_cast<char>(c));
  }
  if (ent == "amp") {
    out.push_back('&');
  } else if (ent == "lt") {
    out.push_back('<');
  } else if (ent == "gt") {
    out.push_back('>');
  } else if (ent == "quot") {
    out.push_back('"');
  } else if (ent == "apos") {
    out.push_back('\'');
  } else if (!ent.empty() && ent[0] == '#') {
    int base = 10;
    size_t start = 1;
    if (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')) {
      base = 16;
      start = 2;
    }
    if (start >= ent.size()) fail("bad character reference");
    unsigned long code = 0;
    for (size_t i = start; i < ent.size(); ++i) {
      int d;
      char c = ent[i];
      if (c >= '0' && c <= '9') d = c - '0';
      else if (base == 16 && c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (base == 16 && c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else { fail("bad character reference"); }
      code = code * static_cast<unsigned long>(base) + static_cast<unsigned long>(d);
      if (code > 0x10ffff) fail("character reference out of range");
    }
    if (code < 0x80) {
      out.push_back(static_cast<char>(code));
    } else if (code < 0x800) {
      out.push_back(static_cast<char>(0xc0 | (code >> 6)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3f)));
    } else if (code < 0x10000) {
      out.push_back(static_cast<char>(0xe0 | (code >> 12)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3f)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3f)));
    } else {
      out.push_back(static_cast<char>(0xf0 | (code >> 18)));
      out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3f)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3f)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3f)));
    }
  } else {
    fail("unknown entity &" + ent + ";");
  }
}

std::string Parser::read_attr_value() {
  skip_whitespace();
  int quote = get();
  if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
  std::string value;
  for (;;) {
    int c = get();
    if (c == EOF) fail("unterminated attribute value");
    if (c == quote) break;
    if (c == '<') fail("'<' in attribute value");
    if (c == '&') {
      decode_entity(value);
    } else {
      value.push_back(static_cast<char>(c));
    }
  }
  return value;
}

void Parser::read_start_tag() {
  name_ = strip_prefix(read_name());
  attrs_.clear();
  for (;;) {
    skip_whitespace();
    int c = peek();
    if (c == '>') {
      get();
      open_.push_back(name_);
      return;
    }
    if (c == '/') {
      get();
      expect('>', "'>' after '/'");
      pending_end_ = true;  // synthesize the matching end_element on the next call
      return;
    }
    if (c == EOF) fail("unexpected end of input inside tag");
    Attribute attr;
    attr.name = read_name();
    skip_whitespace();
    expect('=', "'=' after attribute name");
    attr.value = read_attr_value();
    attrs_.push_back(std::move(attr));
  }
}

void Parser::read_end_tag() {
  name_ = strip_prefix(read_name());
  skip_whitespace();
  expect('>', "'>' closing end tag");
  if (open_.empty()) fail("end tag </" + name_ + "> with no open element");
  if (open_.back() != name_) {
    fail("mismatched end tag </" + name_ + ">, expected </" + open_.back() + ">");
  }
  open_.pop_back();
}

// Consumes one "<...>" construct. Returns the event it produced, or eof as a
// stand-in for "nothing, keep scanning" (comments, PIs).
Parser::Event Parser::read_markup() {
  get();  // '<'
  int c = peek();
  if (c == '/') {
    get();
    read_end_tag();
    return Event::end_element;
  }
  if (c == '?') {
    get();
    int prev = 0;
    for (;;) {
      int k = get();
      if (k == EOF) fail("unterminated processing instruction");
      if (prev == '?' && k == '>') return Event::eof;
      prev = k;
    }
  }
  if (c == '!') {
    get();
    if (peek() == '-') {
      get();
      expect('-', "'<!--'");
      int a = 0, b = 0;
      for (;;) {
        int k = get();
        if (k == EOF) fail("unterminated comment");
        if (a == '-' && b == '-' && k == '>') return Event::eof;
        a = b;
        b = k;
      }
    }
    if (peek() == '[') {
      get();
      std::string kind;
      while (std::isupper(peek())) kind.push_back(static_cast<char>(get()));
      if (kind != "CDATA") fail("unsupported markup declaration");
      expect('[', "'[' after CDATA");
      if (open_.empty()) fail("CDATA outside the root element");
      text_.clear();
      int a = 0, b = 0;
      for (;;) {
        int k = get();
        if (k == EOF) fail("unterminated CDATA section");
        text_.push_back(static_cast<char>(k));
        if (a == ']' && b == ']' && k == '>') {
          text_.resize(text_.size() - 3);
          return Event::text;
        }
        a = b;
        b = k;
      }
    }
    std::string word;
    while (std::isalpha(peek())) word.push_back(static_cast<char>(get()));
    if (word == "DOCTYPE") fail("DOCTYPE is not supported");
    fail("unsupported markup declaration");
  }
  read_start_tag();
  return Event::start_element;
}

Parser::Event Parser::next() {
  if (pending_end_) {
    pending_end_ = false;
    return Event::end_element;
  }
  if (done_) return Event::eof;

  for (;;) {
    int c = peek();
    if (c == EOF) {
      if (!open_.empty()) fail("unexpected end of input, <" + open_.back() + "> is not closed");
      done_ = true;
      return Event::eof;
    }
    if (c == '<') {
      Event ev = read_markup();
      if (ev == Event::eof) continue;  // comment or PI, nothing to report
      return ev;
    }
    // Character data run.
    text_.clear();
    while (peek() != '<' && peek() != EOF) {
      int k = get();
      if (k == '&') {
        decode_entity(text_);
      } else {
        text_.push_back(static_cast<char>(k));
      }
    }
    if (open_.empty()) {
      for (char ch : text_) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
          fail("character data outside the root element");
        }
      }
      continue;
    }
    if (!text_.empty()) return Event::text;
  }
}

const Attribute* Parser::find_attribute(const std::string& name) const {
  for (const auto& a : attrs_) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

void Parser::skip_element() {
  if (pending_end_) {  // self-closing: nothing inside
    pending_end_ = false;
    return;
  }
  int depth = 1;
  while (depth > 0) {
    switch (next()) {
      case Event::start_element: ++depth; break;
      case Event::end_element: --depth; break;
      case Event::text: break;
      case Event::eof: fail("unexpected end of input while skipping element");
    }
  }
}

}  // namespace sna::xml
