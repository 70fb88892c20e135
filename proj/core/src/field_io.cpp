#include "gpc/field_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gpc {

namespace {

std::string hex_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double parse_double(const std::string& text, const char* what) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE)
    throw std::runtime_error(std::string("gpf: malformed ") + what + " '" + text + "'");
  return v;
}

int parse_int(const std::string& text, const char* what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (text.empty() || pos != text.size())
    throw std::runtime_error(std::string("gpf: malformed ") + what + " '" + text + "'");
  return v;
}

std::string take_value(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0)
    throw std::runtime_error("gpf: expected '" + key + "=' in header, got '" + token + "'");
  return token.substr(key.size() + 1);
}

}  // namespace

void write_field(std::ostream& out, const ScalarField& u) {
  const GaussianGrid& g = *u.grid;
  char lbuf[64];
  std::snprintf(lbuf, sizeof lbuf, "%.17g", g.half_width());
  out << "gpf v1 dim=" << g.dim() << " n=" << g.points_per_axis() << " L=" << lbuf << '\n';
  for (double v : u.values) out << hex_double(v) << '\n';
}

ScalarField read_field(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("gpf: empty input");
  std::istringstream hs(header);
  std::string magic, version, dim_tok, n_tok, l_tok, extra;
  hs >> magic >> version >> dim_tok >> n_tok >> l_tok;
  if (magic != "gpf" || version != "v1") throw std::runtime_error("gpf: bad magic or version");
  if (hs >> extra) throw std::runtime_error("gpf: trailing header tokens");
  const int dim = parse_int(take_value(dim_tok, "dim"), "dim");
  const int n = parse_int(take_value(n_tok, "n"), "n");
  const double L = parse_double(take_value(l_tok, "L"), "L");

  GridPtr grid;
  try {
    grid = GaussianGrid::build(dim, L, n);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("gpf: invalid grid in header: ") + e.what());
  }
  ScalarField u(grid);
  std::string line;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("gpf: fewer values than nodes");
    u[i] = parse_double(line, "value");
  }
  while (std::getline(in, line))
    if (!line.empty()) throw std::runtime_error("gpf: more values than nodes");
  return u;
}

void save_field(const std::string& path, const ScalarField& u) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("gpf: cannot open '" + path + "' for writing");
  write_field(out, u);
  if (!out) throw std::runtime_error("gpf: write failed for '" + path + "'");
}

ScalarField load_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("gpf: cannot open '" + path + "'");
  return read_field(in);
}

}  // namespace gpc
