#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

struct GraphMLParseResult {
  MultiGraph graph;
  std::vector<std::string> warnings;  // ignored keys/attributes/elements
};

// Reads a GraphML document into a MultiGraph, preserving every node and edge
// element including duplicates. A node's NodeId is its "uid" attribute when
// declared, otherwise the element id. Edges referencing undeclared node ids
// auto-register them (crawl output references not-yet-visited profiles).
// Directed graphs are rejected with SchemaError; malformed XML raises
// ParseError with a line number.
GraphMLParseResult parse_graphml(std::istream& in);
GraphMLParseResult parse_graphml_string(const std::string& text);

// Canonical writer: nodes in dense-index order, edges in (min, max) id order,
// byte-identical across runs for the same graph. Emits the uid both as the
// element id and as the node's single declared attribute.
void write_graphml(const SimpleGraph& g, std::ostream& out);
std::string write_graphml_string(const SimpleGraph& g);

// File helpers (IoError on open/write failure). Writing is atomic.
MultiGraph load_graphml(const std::string& path, std::vector<std::string>* warnings = nullptr);
void save_graphml(const SimpleGraph& g, const std::string& path);

}  // namespace sna
