#include "mop/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mop {

std::string to_graph_json(const MopGraph& g) {
  std::ostringstream out;
  out << "{\"n\":" << g.n() << ",\"chords\":[";
  bool first = true;
  for (auto [a, b] : g.chords()) {
    if (!first) out << ",";
    first = false;
    out << "[" << a << "," << b << "]";
  }
  out << "]}\n";
  return out.str();
}

MopGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("chords"))
    fail(Err::ParseError, "expected an object with \"n\" and \"chords\"");
  if (!j["n"].is_number_integer()) fail(Err::ParseError, "\"n\" must be an integer");
  int n = j["n"].get<int>();
  std::vector<VertexPair> chords;
  if (!j["chords"].is_array()) fail(Err::ParseError, "\"chords\" must be an array");
  for (const auto& c : j["chords"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
        !c[1].is_number_integer())
      fail(Err::ParseError, "each chord must be a pair of integers");
    chords.push_back({c[0].get<int>(), c[1].get<int>()});
  }
  return MopGraph::validate(n, std::move(chords));
}

MopGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

void write_graph_file(const MopGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Err::ParseError, "cannot write " + path);
  out << to_graph_json(g);
}

std::string chords_id(const std::vector<VertexPair>& chords) {
  if (chords.empty()) return "-";
  std::ostringstream out;
  bool first = true;
  for (auto [a, b] : chords) {
    if (!first) out << ";";
    first = false;
    out << a << "-" << b;
  }
  return out.str();
}

}  // namespace mop
