#include "hrs/set_io.hpp"

#include <fstream>
#include <sstream>

namespace hrs {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

VertexSet read_set(std::istream& in) {
  std::string line;
  bool have_header = false;
  int k = 0, a = 0;
  std::optional<std::string> alphabet;
  VertexSet set;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      std::stringstream ss(line);
      std::string tok;
      while (ss >> tok) {
        if (tok.rfind("k=", 0) == 0)
          k = std::stoi(tok.substr(2));
        else if (tok.rfind("a=", 0) == 0)
          a = std::stoi(tok.substr(2));
        else if (tok.rfind("alphabet=", 0) == 0)
          alphabet = tok.substr(9);
        else
          throw ParseError("hrs-set header: unexpected token '" + tok + "'");
      }
      if (k < 1 || a < 2) throw ParseError("hrs-set header: need k>=1 and a>=2");
      set.instance = HammingInstance(k, a, alphabet);
      have_header = true;
      continue;
    }
    try {
      set.kmers.push_back(parse_kmer(line, set.instance));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw ParseError("hrs-set: missing header line");
  return set;
}

VertexSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_set(in);
}

void write_set(std::ostream& out, const VertexSet& set) {
  out << "k=" << set.instance.k << " a=" << set.instance.a;
  if (set.instance.alphabet) out << " alphabet=" << *set.instance.alphabet;
  out << "\n";
  for (const Kmer& v : set.kmers) out << render_kmer(v) << "\n";
}

void write_set_file(const std::string& path, const VertexSet& set) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_set(out, set);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace hrs
