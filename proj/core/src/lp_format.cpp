#include <fstream>
#include <iomanip>
#include <sstream>

#include "hrs/ilp.hpp"

namespace hrs {

namespace {

std::string num(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

void write_terms(std::ostream& out, const std::vector<std::pair<std::string, double>>& terms) {
  bool first = true;
  for (const auto& [var, coeff] : terms) {
    double c = coeff;
    if (first) {
      if (c < 0) {
        out << "- ";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (c == 1.0)
      out << var;
    else
      out << num(c) << " " << var;
  }
}

}  // namespace

void write_lp(std::ostream& out, const GenericIlp& ilp) {
  out << "\\ " << ilp.name << "\n";
  out << "Minimize\n obj: ";
  write_terms(out, ilp.objective);
  out << "\nSubject To\n";
  for (const GenericRow& row : ilp.rows) {
    out << " " << row.name << ": ";
    write_terms(out, row.terms);
    out << (row.sense == 'E' ? " = " : row.sense == 'L' ? " <= " : " >= ");
    out << num(row.rhs) << "\n";
  }
  out << "Bounds\n";
  for (const auto& [var, lb, ub] : ilp.bounds)
    out << " " << num(lb) << " <= " << var << " <= " << num(ub) << "\n";
  out << "Generals\n";
  for (const std::string& var : ilp.generals) out << " " << var;
  out << "\nEnd\n";
}

void export_model(const IlpModel& model, const std::string& path) {
  if (path.empty()) throw IoError("export_model: empty path");
  std::ofstream out(path);
  if (!out) throw IoError("export_model: cannot open " + path);
  write_lp(out, to_generic(model));
  if (!out) throw IoError("export_model: write failed for " + path);
}

namespace {

bool is_number_start(const std::string& tok) {
  return !tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '.' ||
                          ((tok[0] == '-' || tok[0] == '+') && tok.size() > 1));
}

// "c1 x1 + c2 x2 - x3" -> term list; consumes tokens until a sense token or
// the end of the vector.
std::size_t parse_terms(const std::vector<std::string>& toks, std::size_t i,
                        std::vector<std::pair<std::string, double>>* terms) {
  double sign = 1.0;
  std::optional<double> coeff;
  for (; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    if (t == "=" || t == "<=" || t == ">=") break;
    if (t == "+") {
      sign = 1.0;
    } else if (t == "-") {
      sign = -1.0;
    } else if (is_number_start(t)) {
      coeff = std::stod(t);
    } else {
      terms->push_back({t, sign * coeff.value_or(1.0)});
      sign = 1.0;
      coeff.reset();
    }
  }
  return i;
}

}  // namespace

GenericIlp parse_lp(std::istream& in) {
  GenericIlp g;
  enum class Section { None, Objective, Rows, Bounds, Generals };
  Section section = Section::None;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '\\') {
      std::string rest = line.substr(1);
      std::size_t b = rest.find_first_not_of(' ');
      if (b != std::string::npos && g.name.empty()) g.name = rest.substr(b);
      continue;
    }
    std::vector<std::string> toks;
    {
      std::stringstream ss(line);
      std::string t;
      while (ss >> t) toks.push_back(t);
    }
    if (toks.empty()) continue;
    if (toks[0] == "Minimize" || toks[0] == "Maximize") {
      section = Section::Objective;
      continue;
    }
    if (toks[0] == "Subject" || toks[0] == "Subject To" || toks[0] == "st" || toks[0] == "s.t.") {
      section = Section::Rows;
      continue;
    }
    if (toks[0] == "Bounds") {
      section = Section::Bounds;
      continue;
    }
    if (toks[0] == "Generals" || toks[0] == "General") {
      section = Section::Generals;
      continue;
    }
    if (toks[0] == "End") break;

    switch (section) {
      case Section::Objective: {
        std::size_t i = 0;
        if (!toks.empty() && toks[0].back() == ':') i = 1;
        parse_terms(toks, i, &g.objective);
        break;
      }
      case Section::Rows: {
        GenericRow row;
        std::size_t i = 0;
        if (toks[0].back() == ':') {
          row.name = toks[0].substr(0, toks[0].size() - 1);
          i = 1;
        }
        i = parse_terms(toks, i, &row.terms);
        if (i >= toks.size()) throw ParseError("lp: constraint without sense: " + line);
        row.sense = toks[i] == "=" ? 'E' : toks[i] == "<=" ? 'L' : 'G';
        if (i + 1 >= toks.size()) throw ParseError("lp: constraint without rhs: " + line);
        row.rhs = std::stod(toks[i + 1]);
        g.rows.push_back(std::move(row));
        break;
      }
      case Section::Bounds: {
        // " lb <= var <= ub "
        if (toks.size() != 5 || toks[1] != "<=" || toks[3] != "<=")
          throw ParseError("lp: unsupported bound line: " + line);
        g.bounds.push_back({toks[2], std::stod(toks[0]), std::stod(toks[4])});
        break;
      }
      case Section::Generals:
        for (const std::string& t : toks) g.generals.push_back(t);
        break;
      case Section::None:
        throw ParseError("lp: content before a section header: " + line);
    }
  }
  return g;
}

}  // namespace hrs
