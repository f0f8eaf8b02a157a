#pragma once
// JSON views of the core value types and the plain-text seed-file format
// (one vertex word per line, '#' starts a comment).

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qperc/engine.hpp"
#include "qperc/error.hpp"
#include "qperc/extremal.hpp"
#include "qperc/hamming.hpp"
#include "qperc/oracle.hpp"
#include "qperc/vertex_set.hpp"

namespace qperc {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json shape_json(const CubeShape& shape) {
  return json{{"n", shape.n()}, {"q", shape.q()}};
}

inline json vertices_json(const std::vector<Vertex>& vs, const CubeShape& shape) {
  json arr = json::array();
  for (Vertex v : vs) arr.push_back(shape.vertex_to_string(v));
  return arr;
}

inline json vertices_json(const VertexSet& s, const CubeShape& shape) {
  return vertices_json(s.to_vector(), shape);
}

inline json seed_json(const ExtremalSeed& s) {
  return json{{"shape", shape_json(s.shape)},
              {"vertices", vertices_json(s.vertices, s.shape)},
              {"provenance", s.provenance}};
}

inline json oracle_json(const OracleReport& rep) {
  json witnesses = json::array();
  for (const auto& w : rep.witnesses) witnesses.push_back(vertices_json(w, rep.shape));
  json out{{"shape", shape_json(rep.shape)},
           {"mode", rep.mode},
           {"max_time", rep.max_time ? json(*rep.max_time) : json(nullptr)},
           {"witnesses", witnesses},
           {"seeds_examined", rep.seeds_examined}};
  if (rep.size_cap) out["size_cap"] = *rep.size_cap;
  return out;
}

inline json record_json(const InfectionRecord& rec, bool with_timestamps) {
  json out{{"percolated", rec.percolated}, {"rounds", rec.rounds}};
  if (with_timestamps) {
    json ts = json::object();
    for (std::uint64_t v = 0; v < rec.shape.volume(); ++v) {
      const auto t = rec.time_of[v];
      ts[rec.shape.vertex_to_string(static_cast<Vertex>(v))] =
          t == kNeverTime ? json(nullptr) : json(t);
    }
    out["timestamps"] = ts;
  }
  return out;
}

inline VertexSet parse_seed_words(const std::vector<std::string>& words,
                                  const CubeShape& shape) {
  VertexSet s(shape.volume());
  for (const auto& w : words) s.set(shape.vertex_from_string(w));
  return s;
}

// Comma-separated vertex words, e.g. "00,11".
inline VertexSet parse_seed_list(const std::string& list, const CubeShape& shape) {
  if (!shape.compact_text())
    throw error("parse_seed_list: inline seeds need q <= 10; use a seed file");
  std::vector<std::string> words;
  std::string cur;
  std::istringstream in(list);
  while (std::getline(in, cur, ',')) words.push_back(cur);
  return parse_seed_words(words, shape);
}

inline VertexSet read_seed_stream(std::istream& in, const CubeShape& shape) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    words.push_back(line.substr(first, last - first + 1));
  }
  return parse_seed_words(words, shape);
}

inline VertexSet read_seed_file(const std::string& path, const CubeShape& shape) {
  std::ifstream in(path);
  if (!in) throw error("cannot open seed file: " + path);
  return read_seed_stream(in, shape);
}

// Seed-file text for a vertex set; lines starting with '#' carry context.
inline std::string seed_file_text(const VertexSet& s, const CubeShape& shape,
                                  const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << "\n";
  s.for_each([&](Vertex v) { out << shape.vertex_to_string(v) << "\n"; });
  return out.str();
}

}  // namespace qperc
