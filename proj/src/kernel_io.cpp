#include "lkcds/kernel_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace lkcds {

namespace {

constexpr std::string_view kTag = "lkcds/1";

void write_ids(std::ostream& out, const std::vector<Vertex>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
  out << '\n';
}

std::vector<Vertex> read_ids(const std::string& body, std::size_t line) {
  std::istringstream in(body);
  std::vector<Vertex> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw ParseError(line, "expected a vertex id, got '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

std::string serialize_kernel(const KernelInstance& inst) {
  std::ostringstream out;
  out << kTag << '\n' << "problem " << to_string(inst.problem) << '\n';
  out << "k " << inst.k << '\n' << "r " << inst.r << '\n';
  out << "[graph]\n" << serialize_graph(inst.gprime);
  out << "[Z]\n";
  write_ids(out, inst.z.members());
  out << "[map]\n";
  write_ids(out, inst.vertex_map);
  out << "[params]\n";
  for (const auto& [key, value] : inst.params) out << key << ' ' << value << '\n';
  out << "[provenance]\n";
  for (const auto& [key, value] : inst.provenance) out << key << ' ' << value << '\n';
  if (inst.exact_solution) {
    out << "[solution]\n";
    write_ids(out, inst.exact_solution->members());
  }
  return out.str();
}

KernelInstance parse_kernel(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || line != kTag) throw ParseError(1, "missing 'lkcds/1' tag");
  ++line_no;

  KernelInstance inst;
  std::string section;
  std::string graph_text;
  std::size_t graph_line = 0;
  std::map<std::string, std::string> body;
  std::map<std::string, std::size_t> body_line;
  bool have_problem = false, have_k = false, have_r = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "malformed section header");
      section = line.substr(1, line.size() - 2);
      if (section != "graph" && section != "Z" && section != "map" && section != "params" &&
          section != "provenance" && section != "solution")
        throw ParseError(line_no, "unknown section [" + section + "]");
      if (section == "graph") graph_line = line_no;
      body_line[section] = line_no + 1;
      continue;
    }
    std::istringstream fields(line);
    if (section.empty()) {
      std::string key, value;
      if (!(fields >> key)) continue;
      if (!(fields >> value)) throw ParseError(line_no, "expected '<key> <value>'");
      try {
        if (key == "problem") {
          if (value != "acds" && value != "ads") throw ParseError(line_no, "unknown problem '" + value + "'");
          inst.problem = value == "acds" ? KernelProblem::acds : KernelProblem::ads;
          have_problem = true;
        } else if (key == "k") {
          inst.k = std::stoi(value);
          have_k = true;
        } else if (key == "r") {
          inst.r = std::stoi(value);
          have_r = true;
        } else {
          throw ParseError(line_no, "unknown field '" + key + "'");
        }
      } catch (const std::invalid_argument&) {
        throw ParseError(line_no, "expected an integer for '" + key + "'");
      }
    } else if (section == "graph") {
      graph_text += line + '\n';
    } else if (section == "params" || section == "provenance") {
      std::string key;
      if (!(fields >> key)) continue;
      std::string value;
      std::getline(fields >> std::ws, value);
      (section == "params" ? inst.params : inst.provenance).push_back({key, value});
    } else {
      body[section] += line + ' ';
    }
  }
  if (!have_problem || !have_k || !have_r) throw ParseError(line_no, "header needs problem, k and r");
  if (!graph_line) throw ParseError(line_no, "missing [graph] section");
  try {
    inst.gprime = parse_graph(graph_text);
  } catch (const ParseError& e) {
    std::string what = e.what();
    what = what.substr(what.find(": ") + 2);
    throw ParseError(graph_line + e.line(), what);
  }
  inst.z = VertexSet(read_ids(body["Z"], body_line["Z"]));
  inst.vertex_map = read_ids(body["map"], body_line["map"]);
  if (body_line.count("solution")) inst.exact_solution = VertexSet(read_ids(body["solution"], body_line["solution"]));

  if (inst.vertex_map.size() != inst.gprime.order())
    throw ParseError(line_no, "[map] has " + std::to_string(inst.vertex_map.size()) + " entries for " +
                                  std::to_string(inst.gprime.order()) + " vertices");
  for (Vertex v : inst.z)
    if (!inst.gprime.valid(v)) throw ParseError(body_line["Z"], "Z vertex " + std::to_string(v) + " out of range");
  return inst;
}

KernelInstance read_kernel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_kernel(buffer.str());
}

}  // namespace lkcds
