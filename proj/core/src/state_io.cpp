#include "gme/state_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace gme {

PureState read_state(std::istream& in) {
  std::string line;
  std::vector<int> dims;
  // Header: first non-comment line must be "dims: d1 d2 ... dp".
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag != "dims:") {
      throw InvalidInputError("state file: expected 'dims:' header, got '" +
                              line + "'");
    }
    int d;
    while (ls >> d) {
      if (d < 2) throw InvalidInputError("state file: local dimension < 2");
      dims.push_back(d);
    }
    if (dims.empty()) throw InvalidInputError("state file: empty dims header");
    break;
  }
  if (dims.empty()) throw InvalidInputError("state file: missing dims header");

  const auto st = strides(dims);
  long total = 1;
  for (int d : dims) total *= d;
  Vector amps = Vector::Zero(total);
  std::set<long> seen;

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long g = 0;
    for (size_t j = 0; j < dims.size(); ++j) {
      long idx;
      if (!(ls >> idx)) {
        throw InvalidInputError("state file: truncated amplitude line '" +
                                line + "'");
      }
      if (idx < 0 || idx >= dims[j]) {
        throw InvalidInputError("state file: index out of range in '" + line +
                                "'");
      }
      g += idx * st[j];
    }
    double re, im;
    if (!(ls >> re >> im)) {
      throw InvalidInputError("state file: missing re/im in '" + line + "'");
    }
    if (!seen.insert(g).second) {
      throw InvalidInputError("state file: duplicate index tuple in '" + line +
                              "'");
    }
    amps[g] = Complex(re, im);
  }
  return {dims, std::move(amps)};
}

PureState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open state file: " + path);
  return read_state(in);
}

void write_state(std::ostream& out, const PureState& s,
                 const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "dims:";
  for (int d : s.dims) out << " " << d;
  out << "\n";
  const auto st = strides(s.dims);
  char buf[128];
  for (long g = 0; g < s.total_dim(); ++g) {
    const Complex& a = s.amps[g];
    if (a == Complex(0, 0)) continue;
    std::string line;
    for (size_t j = 0; j < s.dims.size(); ++j) {
      line += std::to_string((g / st[j]) % s.dims[j]);
      line += " ";
    }
    std::snprintf(buf, sizeof(buf), " %.17g %.17g", a.real(), a.imag());
    out << line << buf << "\n";
  }
}

void write_state_file(const std::string& path, const PureState& s,
                      const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot open output file: " + path);
  write_state(out, s, comment);
}

}  // namespace gme
