#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "complex.hpp"

namespace hdx {

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Text form: `dim d  n_vertices n`, then one facet per line, with `w <x>` only when weights are non-uniform.
inline std::string write_complex(const SimplicialComplex& X) {
  std::ostringstream os;
  os << "dim " << X.dim() << "  n_vertices " << X.n_vertices() << '\n';
  const auto& w = X.top_weights();
  bool uniform = true;
  for (double x : w) uniform = uniform && std::abs(x - w.front()) <= 1e-15;
  for (std::size_t j = 0; j < X.facets().size(); ++j) {
    const Face& f = X.facets()[j];
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    if (!uniform) os << (f.empty() ? "" : " ") << "w " << format_double(w[j]);
    os << '\n';
  }
  return os.str();
}

inline SimplicialComplex read_complex(std::istream& in) {
  std::string line;
  int d = -2, n = -1;
  std::vector<Face> facets;
  std::vector<double> weights;
  bool any_w = false, any_plain = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (d == -2) {
      std::string tok2;
      if (tok != "dim" || !(ls >> d >> tok2 >> n) || tok2 != "n_vertices")
        fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected header `dim d  n_vertices n`");
      continue;
    }
    std::vector<VertexId> vs;
    double w = -1;
    bool has_w = false;
    do {
      if (tok == "w") {
        if (!(ls >> w)) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": missing weight");
        has_w = true;
        break;
      }
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        vs.push_back(v);
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad vertex `" + tok + "`");
      }
    } while (ls >> tok);
    facets.emplace_back(std::move(vs));
    weights.push_back(w);
    (has_w ? any_w : any_plain) = true;
  }
  if (d == -2) fail(ErrorKind::ParseError, "missing header");
  if (any_w && any_plain) fail(ErrorKind::ParseError, "weights given for some facets only");
  for (const Face& f : facets)
    if (f.dim() != d) fail(ErrorKind::MixedDimension, "facet " + f.str() + " does not have dimension " + std::to_string(d));
  SimplicialComplex X = any_w ? SimplicialComplex::from_facets(std::move(facets), std::move(weights)) : SimplicialComplex::from_facets(std::move(facets));
  if (X.n_vertices() != n) fail(ErrorKind::ParseError, "header declares " + std::to_string(n) + " vertices, facets use " + std::to_string(X.n_vertices()));
  return X;
}

inline SimplicialComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  return read_complex(in);
}

inline SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return read_complex(in);
}

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace hdx
