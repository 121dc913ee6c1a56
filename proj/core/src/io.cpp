#include "bipoly/io.hpp"

#include "bipoly/hull3d.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace bipoly {
namespace {

// Next non-empty line with comments stripped.
bool next_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

FileFormat parse_format(const std::string& name) {
  const std::string n = lower(name);
  if (n == "off") return FileFormat::kOff;
  if (n == "json") return FileFormat::kJson;
  throw std::invalid_argument("unknown format '" + name + "' (expected off or json)");
}

FileFormat format_for_path(const std::filesystem::path& path) {
  return lower(path.extension().string()) == ".off" ? FileFormat::kOff : FileFormat::kJson;
}

void write_off(std::ostream& os, const Polytope& p) {
  if (p.dim() != 2 && p.dim() != 3) throw std::invalid_argument("OFF supports dimension 2 or 3 only");
  std::vector<FaceCycle> faces = p.faces();
  if (faces.empty()) {
    if (p.dim() == 3) {
      faces = faces_3d(p);
    } else {
      // polygon: walk the edge cycle
      EdgeGraph g(p);
      FaceCycle cycle{0};
      int prev = -1;
      int cur = 0;
      while (static_cast<int>(cycle.size()) < p.num_vertices()) {
        const auto& nb = g.neighbors(cur);
        const int next = nb[0] != prev ? nb[0] : nb[1];
        cycle.push_back(next);
        prev = cur;
        cur = next;
      }
      faces.push_back(cycle);
    }
  }
  std::ostringstream body;
  body << std::setprecision(17);
  for (const auto& v : p.vertices()) {
    body << v(0) << ' ' << v(1) << ' ' << (p.dim() == 3 ? v(2) : 0.0) << '\n';
  }
  for (const auto& f : faces) {
    body << f.size();
    for (int i : f) body << ' ' << i;
    body << '\n';
  }
  os << "OFF\n";
  if (!p.provenance().empty()) os << "# " << p.provenance() << '\n';
  os << p.num_vertices() << ' ' << faces.size() << ' ' << p.num_edges() << '\n' << body.str();
}

Polytope read_off(std::istream& is) {
  std::string line;
  std::string provenance;
  // header, remembering a leading comment as provenance
  while (std::getline(is, line)) {
    if (line.rfind("OFF", 0) == 0) break;
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("OFF: missing header");
  }
  if (line.rfind("OFF", 0) != 0) throw ParseError("OFF: missing header");
  {
    const auto pos = is.tellg();
    std::string peek;
    if (std::getline(is, peek) && peek.rfind("# ", 0) == 0) {
      provenance = peek.substr(2);
    } else {
      is.seekg(pos);
    }
  }
  if (!next_line(is, line)) throw ParseError("OFF: missing counts line");
  std::istringstream counts(line);
  long nv = -1, nf = -1;
  if (!(counts >> nv >> nf) || nv < 0 || nf < 0) throw ParseError("OFF: bad counts line");

  std::vector<Point> vertices;
  bool all_flat = true;
  for (long i = 0; i < nv; ++i) {
    if (!next_line(is, line)) throw ParseError("OFF: truncated vertex list");
    std::istringstream ls(line);
    Point v(3);
    if (!(ls >> v(0) >> v(1) >> v(2))) throw ParseError("OFF: bad vertex line " + std::to_string(i));
    all_flat = all_flat && v(2) == 0.0;
    vertices.push_back(v);
  }
  std::vector<FaceCycle> faces;
  for (long i = 0; i < nf; ++i) {
    if (!next_line(is, line)) throw ParseError("OFF: truncated face list");
    std::istringstream ls(line);
    long k = 0;
    if (!(ls >> k) || k < 3) throw ParseError("OFF: bad face line " + std::to_string(i));
    FaceCycle f;
    for (long j = 0; j < k; ++j) {
      long idx = -1;
      if (!(ls >> idx) || idx < 0 || idx >= nv) throw ParseError("OFF: bad face index on line " + std::to_string(i));
      f.push_back(static_cast<int>(idx));
    }
    faces.push_back(std::move(f));
  }
  const std::vector<Edge> edges = edges_from_faces(faces);
  try {
    if (all_flat && faces.size() == 1) {
      for (auto& v : vertices) v = Point(v.head(2));
      return Polytope(2, std::move(vertices), edges, faces, provenance);
    }
    return Polytope(3, std::move(vertices), edges, faces, provenance);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("OFF: ") + e.what());
  }
}

nlohmann::json polytope_to_json(const Polytope& p) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : p.vertices()) vs.push_back(std::vector<double>(v.data(), v.data() + v.size()));
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : p.edges()) es.push_back({e[0], e[1]});
  return {{"dim", p.dim()},
          {"vertices", vs},
          {"edges", es},
          {"faces", p.faces()},
          {"provenance", p.provenance()}};
}

Polytope polytope_from_json(const nlohmann::json& j) {
  try {
    const int dim = j.at("dim").get<int>();
    std::vector<Point> vertices;
    for (const auto& row : j.at("vertices")) {
      const auto coords = row.get<std::vector<double>>();
      vertices.emplace_back(Eigen::Map<const Eigen::VectorXd>(coords.data(), static_cast<Eigen::Index>(coords.size())));
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    std::vector<FaceCycle> faces;
    if (j.contains("faces")) faces = j.at("faces").get<std::vector<FaceCycle>>();
    const std::string provenance = j.value("provenance", std::string{});
    return Polytope(dim, std::move(vertices), std::move(edges), std::move(faces), provenance);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("JSON polytope: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("JSON polytope: ") + e.what());
  }
}

void save_polytope(const std::filesystem::path& path, const Polytope& p, FileFormat format) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  if (format == FileFormat::kOff) {
    write_off(os, p);
  } else {
    os << polytope_to_json(p).dump(2) << '\n';
  }
}

Polytope load_polytope(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  if (format_for_path(path) == FileFormat::kOff) return read_off(is);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return polytope_from_json(j);
}

}  // namespace bipoly
