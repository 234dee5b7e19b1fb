#include "cubesign/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cubesign {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

int parse_header_int(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) {
    throw std::invalid_argument("expected '" + key + "=<int>', got '" + token +
                                "'");
  }
  return std::stoi(token.substr(key.size() + 1));
}

std::uint32_t parse_vertex(const std::string& token, int n) {
  GroupVector v = from_bitstring(token);
  if (v.dim != n) {
    throw std::invalid_argument("vertex bitstring '" + token +
                                "' has wrong length");
  }
  return v.bits;
}

std::string vertex_str(std::uint32_t v, int n) {
  return to_bitstring(GroupVector(v, n));
}

}  // namespace

CubelikeGraph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("graph file: missing header");
  }
  int n = parse_header_int(line, "n");
  std::vector<GroupVector> gens;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    GroupVector g = from_bitstring(line);
    if (g.dim != n) {
      throw std::invalid_argument("graph file: generator length != n");
    }
    gens.push_back(g);
  }
  // GeneratorSet rejects duplicates and zero
  return CubelikeGraph(n, GeneratorSet(n, std::move(gens)));
}

CubelikeGraph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const CubelikeGraph& g) {
  out << "n=" << g.n << "\n";
  for (const auto& s : g.s.gens) out << to_bitstring(s) << "\n";
}

VertexSet read_vertex_set(std::istream& in, int n) {
  VertexSet u(n);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    u.insert(parse_vertex(line, n));
  }
  return u;
}

VertexSet read_vertex_set_file(const std::string& path, int n) {
  auto in = open_input(path);
  return read_vertex_set(in, n);
}

void write_vertex_set(std::ostream& out, const VertexSet& u) {
  for (std::uint32_t v : u.elements()) out << vertex_str(v, u.dim()) << "\n";
}

SigningMatrix read_signing(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("signing file: missing header");
  }
  std::istringstream header(line);
  std::string tok_n, tok_d;
  header >> tok_n >> tok_d;
  int n = parse_header_int(tok_n, "n");
  (void)parse_header_int(tok_d, "d");
  SigningMatrix m(n);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string us, vs, es;
    if (!(row >> us >> vs >> es)) {
      throw std::invalid_argument("signing file: malformed entry line");
    }
    std::uint32_t u = parse_vertex(us, n);
    std::uint32_t v = parse_vertex(vs, n);
    if (u >= v) {
      throw std::invalid_argument(
          "signing file: entries must be upper-triangle (u < v)");
    }
    m.set_entry(u, v, UnitEntry::parse(es));
  }
  m.sort_rows();
  return m;
}

SigningMatrix read_signing_file(const std::string& path) {
  auto in = open_input(path);
  return read_signing(in);
}

void write_signing(std::ostream& out, const SigningMatrix& m, int degree) {
  int n = m.dim();
  out << "n=" << n << " d=" << degree << "\n";
  for (std::uint32_t u = 0; u < m.vertex_count(); ++u) {
    for (const auto& [v, e] : m.row(u)) {
      if (u < v) {
        out << vertex_str(u, n) << " " << vertex_str(v, n) << " " << e.str()
            << "\n";
      }
    }
  }
}

ParityCertificate read_certificate(std::istream& in, int n) {
  ParityCertificate cert;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::array<std::uint32_t, 4> verts{};
    std::string tok;
    for (auto& v : verts) {
      if (!(row >> tok)) {
        throw std::invalid_argument("certificate file: expected 4 vertices");
      }
      v = parse_vertex(tok, n);
    }
    cert.cycles.push_back(FourCycle::from_vertices(verts));
  }
  return cert;
}

void write_certificate(std::ostream& out, const ParityCertificate& cert,
                       int n) {
  for (const auto& c : cert.cycles) {
    out << vertex_str(c.verts[0], n) << " " << vertex_str(c.verts[1], n) << " "
        << vertex_str(c.verts[2], n) << " " << vertex_str(c.verts[3], n)
        << "\n";
  }
}

EdgeLabelling read_labelling(std::istream& in, int n) {
  EdgeLabelling f;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string us, vs;
    int bit = 0;
    if (!(row >> us >> vs >> bit) || (bit != 0 && bit != 1)) {
      throw std::invalid_argument("labelling file: malformed line");
    }
    f[Edge(parse_vertex(us, n), parse_vertex(vs, n))] = bit;
  }
  return f;
}

void write_labelling(std::ostream& out, const EdgeLabelling& f, int n) {
  for (const auto& [e, bit] : f) {
    out << vertex_str(e.u, n) << " " << vertex_str(e.v, n) << " " << bit
        << "\n";
  }
}

void write_spectrum(std::ostream& out, const SpectrumReport& r) {
  for (const auto& [lambda, mult] : r.multiset) {
    out << "lambda=" << lambda << " mult=" << mult << "\n";
  }
}

void write_experiment(std::ostream& out, const ExperimentStats& stats) {
  for (const auto& t : stats.trials) {
    out << "trial=" << t.trial << " d=" << t.degree << " lambda=" << t.lambda
        << " ratio=" << t.ratio.str() << "\n";
  }
  out << "fraction_le_half=" << stats.fraction_below_half.str()
      << " seed=" << stats.seed << "\n";
}

}  // namespace cubesign
