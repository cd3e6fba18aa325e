#include "sna/graphml.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "sna/error.hpp"
#include "sna/fsutil.hpp"
#include "sna/xml.hpp"

namespace sna {

namespace {

constexpr const char* kNamespace = "http://graphml.graphdrawing.org/xmlns";
constexpr const char* kUidKeyId = "uid";

void escape_into(std::string& out, const std::string& s, bool in_attribute) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (in_attribute) out += "&quot;";
        else out.push_back(c);
        break;
      default: out.push_back(c);
    }
  }
}

struct Reader {
  xml::Parser parser;
  GraphMLParseResult result;
  std::unordered_map<std::string, std::string> element_to_uid;
  std::vector<std::pair<std::string, std::string>> edge_refs;
  std::string uid_key_id;  // id of the key declared as the node "uid" attribute
  bool seen_graph = false;

  explicit Reader(std::istream& in) : parser(in) {}

  void warn(std::string msg) { result.warnings.push_back(std::move(msg)); }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, parser.line()); }

  std::string require_attr(const char* name) {
    const xml::Attribute* a = parser.find_attribute(name);
    if (!a) fail("<" + parser.name() + "> is missing the \"" + name + "\" attribute");
    return a->value;
  }

  void run() {
    if (parser.next() != xml::Parser::Event::start_element) fail("expected a root element");
    if (parser.name() != "graphml") fail("root element is <" + parser.name() + ">, expected <graphml>");
    read_graphml();
    resolve_edges();
  }

  void read_graphml() {
    for (;;) {
      switch (parser.next()) {
        case xml::Parser::Event::start_element:
          if (parser.name() == "key") {
            read_key();
          } else if (parser.name() == "graph") {
            if (seen_graph) throw SchemaError("multiple <graph> elements are not supported");
            seen_graph = true;
            read_graph();
          } else {
            warn("ignoring <" + parser.name() + "> element");
            parser.skip_element();
          }
          break;
        case xml::Parser::Event::end_element: return;  // </graphml>
        case xml::Parser::Event::text: break;
        case xml::Parser::Event::eof: return;
      }
    }
  }

  void read_key() {
    const xml::Attribute* id = parser.find_attribute("id");
    const xml::Attribute* domain = parser.find_attribute("for");
    const xml::Attribute* attr_name = parser.find_attribute("attr.name");
    if (domain && domain->value == "node" && attr_name && attr_name->value == "uid" && id) {
      uid_key_id = id->value;
    } else {
      warn("ignoring key \"" + (id ? id->value : std::string("?")) + "\"");
    }
    parser.skip_element();
  }

  void read_graph() {
    const xml::Attribute* ed = parser.find_attribute("edgedefault");
    if (!ed) throw SchemaError("<graph> has no edgedefault; only undirected graphs are supported");
    if (ed->value != "undirected") {
      throw SchemaError("edgedefault=\"" + ed->value + "\" is not supported (undirected only)");
    }
    for (;;) {
      switch (parser.next()) {
        case xml::Parser::Event::start_element:
          if (parser.name() == "node") {
            read_node();
          } else if (parser.name() == "edge") {
            read_edge();
          } else if (parser.name() == "graph") {
            throw SchemaError("nested <graph> elements are not supported");
          } else {
            warn("ignoring <" + parser.name() + "> element");
            parser.skip_element();
          }
          break;
        case xml::Parser::Event::end_element: return;  // </graph>
        case xml::Parser::Event::text: break;
        case xml::Parser::Event::eof: return;
      }
    }
  }

  void read_node() {
    const std::string element_id = require_attr("id");
    std::string uid;
    // Scan children for <data key=...> holding the uid.
    int depth = 1;
    bool in_uid_data = false;
    std::string data_text;
    while (depth > 0) {
      switch (parser.next()) {
        case xml::Parser::Event::start_element:
          if (depth == 1 && parser.name() == "data") {
            const xml::Attribute* key = parser.find_attribute("key");
            if (key && !uid_key_id.empty() && key->value == uid_key_id) {
              in_uid_data = true;
              data_text.clear();
            } else {
              warn("ignoring <data> with key \"" + (key ? key->value : std::string("?")) +
                   "\" on node \"" + element_id + "\"");
            }
          }
          ++depth;
          break;
        case xml::Parser::Event::end_element:
          --depth;
          if (depth == 1 && in_uid_data) {
            uid = data_text;
            in_uid_data = false;
          }
          break;
        case xml::Parser::Event::text:
          if (in_uid_data) data_text += parser.text();
          break;
        case xml::Parser::Event::eof: fail("unexpected end of input inside <node>");
      }
    }
    const std::string node_id = uid.empty() ? element_id : uid;
    if (node_id.empty()) fail("node with empty id");
    element_to_uid[element_id] = node_id;
    result.graph.nodes.push_back(node_id);
  }

  void read_edge() {
    edge_refs.emplace_back(require_attr("source"), require_attr("target"));
    parser.skip_element();
  }

  // Endpoint references are element ids; translate to NodeIds once the whole
  // document is read (edges may precede the nodes they mention). References
  // that never resolve are taken verbatim and auto-registered.
  void resolve_edges() {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(edge_refs.size());
    for (auto& [src, dst] : edge_refs) {
      auto s = element_to_uid.find(src);
      auto t = element_to_uid.find(dst);
      edges.emplace_back(s == element_to_uid.end() ? src : s->second,
                         t == element_to_uid.end() ? dst : t->second);
    }
    result.graph = build_multigraph(std::move(result.graph.nodes), std::move(edges));
  }
};

}  // namespace

GraphMLParseResult parse_graphml(std::istream& in) {
  Reader reader(in);
  reader.run();
  return std::move(reader.result);
}

GraphMLParseResult parse_graphml_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graphml(in);
}

void write_graphml(const SimpleGraph& g, std::ostream& out) {
  std::string buf;
  buf.reserve(1 << 16);
  buf += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  buf += "<graphml xmlns=\"";
  buf += kNamespace;
  buf += "\">\n";
  buf += "  <key id=\"uid\" for=\"node\" attr.name=\"uid\" attr.type=\"string\"/>\n";
  buf += "  <graph edgedefault=\"undirected\">\n";
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    buf += "    <node id=\"";
    escape_into(buf, g.id_of(v), true);
    buf += "\"><data key=\"";
    buf += kUidKeyId;
    buf += "\">";
    escape_into(buf, g.id_of(v), false);
    buf += "</data></node>\n";
    if (buf.size() > (1 << 16)) {
      out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  for (const auto& e : g.edges()) {
    buf += "    <edge source=\"";
    escape_into(buf, g.id_of(e.u), true);
    buf += "\" target=\"";
    escape_into(buf, g.id_of(e.v), true);
    buf += "\"/>\n";
    if (buf.size() > (1 << 16)) {
      out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  buf += "  </graph>\n";
  buf += "</graphml>\n";
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

std::string write_graphml_string(const SimpleGraph& g) {
  std::ostringstream out;
  write_graphml(g, out);
  return std::move(out).str();
}

MultiGraph load_graphml(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\" for reading");
  GraphMLParseResult result = parse_graphml(in);
  if (warnings) *warnings = std::move(result.warnings);
  return std::move(result.graph);
}

void save_graphml(const SimpleGraph& g, const std::string& path) {
  atomic_write_file(path, [&](std::ostream& out) { write_graphml(g, out); });
}

}  // namespace sna
