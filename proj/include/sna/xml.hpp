#pragma once

#include <istream>
#include <string>
#include <vector>

namespace sna::xml {

struct Attribute {
  std::string name;
  std::string value;
};

// Minimal streaming pull parser: enough XML for GraphML documents, constant
// memory per element. Comments, processing instructions and the XML
// declaration are skipped; CDATA becomes text; the five predefined entities
// plus numeric character references are decoded. DOCTYPE is rejected.
// Malformed input raises ParseError with the 1-based line number.
class Parser {
 public:
  explicit Parser(std::istream& in) : in_(in) {}

  enum class Event { start_element, end_element, text, eof };

  Event next();

  // Element name (namespace prefix stripped) for start/end events.
  const std::string& name() const { return name_; }
  const std::vector<Attribute>& attributes() const { return attrs_; }
  // Decoded character data for text events.
  const std::string& text() const { return text_; }
  int line() const { return line_; }

  const Attribute* find_attribute(const std::string& name) const;

  // Consumes events until the current element (just delivered as a
  // start_element) is closed.
  void skip_element();

 private:
  int get();
  int peek();
  void expect(char c, const char* what);
  void skip_whitespace();
  std::string read_name();
  std::string read_attr_value();
  void read_start_tag();
  void read_end_tag();
  Event read_markup();
  void decode_entity(std::string& out);
  [[noreturn]] void fail(const std::string& msg) const;

  std::istream& in_;
  int line_ = 1;
  std::string name_;
  std::string text_;
  std::vector<Attribute> attrs_;
  std::vector<std::string> open_;  // element stack, for well-formedness
  bool pending_end_ = false;       // self-closing tag: deliver end next
  bool done_ = false;
};

}  // namespace sna::xml
