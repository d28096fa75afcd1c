#include "cokahler/model_file.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "cokahler/error.hpp"

namespace cokahler {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

Rational rational_at(const Line& l, std::size_t i) {
  try {
    return parse_rational(l.tokens.at(i));
  } catch (const std::exception& e) {
    throw ParseError(l.number, e.what());
  }
}

std::size_t index_at(const Line& l, std::size_t i, std::size_t dimension) {
  const std::string& t = l.tokens.at(i);
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    throw ParseError(l.number, "expected an index, got '" + t + "'");
  }
  if (pos != t.size()) throw ParseError(l.number, "expected an index, got '" + t + "'");
  if (v < 1 || static_cast<std::size_t>(v) > dimension)
    throw ParseError(l.number, "index " + t + " out of range 1.." + std::to_string(dimension));
  return static_cast<std::size_t>(v - 1);
}

Vector row_of(const Line& l, std::size_t dimension) {
  if (l.tokens.size() != dimension)
    throw ParseError(l.number, "expected " + std::to_string(dimension) + " entries, got " + std::to_string(l.tokens.size()));
  Vector v;
  for (std::size_t i = 0; i < dimension; ++i) v.push_back(rational_at(l, i));
  return v;
}

Matrix matrix_of(const std::vector<Line>& lines, std::size_t dimension, const std::string& section, std::size_t header) {
  if (lines.size() != dimension)
    throw ParseError(lines.empty() ? header : lines.back().number,
                     "section [" + section + "] needs " + std::to_string(dimension) + " rows, got " + std::to_string(lines.size()));
  std::vector<Vector> rows;
  for (const auto& l : lines) rows.push_back(row_of(l, dimension));
  return Matrix::from_rows(dimension, rows);
}

const std::set<std::string> kSections = {"brackets", "metric", "xi", "eta", "J", "omega", "automorphism"};

}  // namespace

LieModel parse_model(std::string_view text) {
  std::map<std::string, std::string> header;
  std::map<std::string, std::size_t> header_lines;
  std::map<std::string, std::vector<Line>> sections;
  std::map<std::string, std::size_t> section_lines;
  std::optional<std::string> current;
  std::optional<int> automorphism_order;
  std::size_t order_line = 0;

  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError(number, "unterminated section header");
      std::string name = trim(std::string_view(s).substr(1, s.size() - 2));
      if (!kSections.count(name)) throw ParseError(number, "unknown section [" + name + "]");
      if (sections.count(name)) throw ParseError(number, "duplicate section [" + name + "]");
      sections[name];
      section_lines[name] = number;
      current = name;
      continue;
    }
    auto colon = s.find(':');
    if (colon != std::string::npos) {
      std::string key = trim(std::string_view(s).substr(0, colon));
      std::string value = trim(std::string_view(s).substr(colon + 1));
      if (current == "automorphism" && key == "order") {
        try {
          std::size_t pos = 0;
          automorphism_order = std::stoi(value, &pos);
          if (pos != value.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
          throw ParseError(number, "automorphism order must be an integer");
        }
        order_line = number;
        continue;
      }
      if (current) throw ParseError(number, "key '" + key + "' inside section [" + *current + "]");
      if (key != "name" && key != "dimension") throw ParseError(number, "unknown key '" + key + "'");
      if (header.count(key)) throw ParseError(number, "duplicate key '" + key + "'");
      if (value.empty()) throw ParseError(number, "empty value for '" + key + "'");
      header[key] = value;
      header_lines[key] = number;
      continue;
    }
    if (!current) throw ParseError(number, "data outside of a section");
    sections[*current].push_back(Line{number, split_ws(s)});
  }

  if (!header.count("dimension")) throw ParseError(0, "missing 'dimension'");
  std::size_t dimension = 0;
  {
    const std::string& d = header["dimension"];
    std::size_t pos = 0;
    long v = -1;
    try {
      v = std::stol(d, &pos);
    } catch (const std::exception&) {
    }
    if (pos != d.size() || v < 1 || v > 63) throw ParseError(header_lines["dimension"], "dimension must be an integer in 1..63");
    dimension = static_cast<std::size_t>(v);
  }
  LieModel m = LieModel::abelian(dimension, header.count("name") ? header["name"] : "unnamed");

  if (sections.count("brackets")) {
    for (const auto& l : sections["brackets"]) {
      if (l.tokens.size() != 4) throw ParseError(l.number, "bracket lines are 'i j k c'");
      std::size_t i = index_at(l, 0, dimension), j = index_at(l, 1, dimension), k = index_at(l, 2, dimension);
      if (i >= j) throw ParseError(l.number, "list brackets with i < j only; antisymmetry is completed automatically");
      m.add_bracket(i, j, k, rational_at(l, 3));
    }
  }
  if (sections.count("metric")) m.metric = matrix_of(sections["metric"], dimension, "metric", section_lines["metric"]);
  for (const char* key : {"xi", "eta"}) {
    if (!sections.count(key)) continue;
    const auto& lines = sections[key];
    if (lines.size() != 1) throw ParseError(section_lines[key], std::string("section [") + key + "] needs exactly one row");
    (std::string(key) == "xi" ? m.xi : m.eta) = row_of(lines.front(), dimension);
  }
  if (sections.count("J")) m.J = matrix_of(sections["J"], dimension, "J", section_lines["J"]);
  if (sections.count("omega")) {
    Matrix w(dimension, dimension);
    for (const auto& l : sections["omega"]) {
      if (l.tokens.size() != 3) throw ParseError(l.number, "omega lines are 'i j c'");
      std::size_t i = index_at(l, 0, dimension), j = index_at(l, 1, dimension);
      if (i >= j) throw ParseError(l.number, "list omega entries with i < j only");
      Rational c = rational_at(l, 2);
      w(i, j) += c;
      w(j, i) -= c;
    }
    m.omega = w;
  }
  if (sections.count("automorphism")) {
    if (!automorphism_order) throw ParseError(section_lines["automorphism"], "automorphism needs 'order: m'");
    if (*automorphism_order < 1) throw ParseError(order_line, "automorphism order must be positive");
    m.automorphism = Automorphism{matrix_of(sections["automorphism"], dimension, "automorphism", section_lines["automorphism"]),
                                  *automorphism_order};
  }

  auto problems = validation_problems(m);
  if (!problems.empty()) throw ParseError(0, "invalid model: " + problems.front());
  return m;
}

LieModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_model(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + (e.line() ? std::string(e.what()).substr(std::string(e.what()).find(": ") + 2) : e.what()));
  }
}

namespace {

void write_row(std::ostringstream& os, const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].get_str();
  os << '\n';
}

void write_matrix(std::ostringstream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) write_row(os, m.row(i));
}

}  // namespace

std::string serialize_model(const LieModel& m) {
  std::ostringstream os;
  const std::size_t d = m.dimension;
  os << "name: " << m.name << '\n' << "dimension: " << d << "\n\n[brackets]\n";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (m.c(k, i, j) != 0) os << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << m.c(k, i, j).get_str() << '\n';
  os << "\n[metric]\n";
  write_matrix(os, m.metric);
  if (m.xi) {
    os << "\n[xi]\n";
    write_row(os, *m.xi);
  }
  if (m.eta) {
    os << "\n[eta]\n";
    write_row(os, *m.eta);
  }
  if (m.J) {
    os << "\n[J]\n";
    write_matrix(os, *m.J);
  }
  if (m.omega) {
    os << "\n[omega]\n";
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if ((*m.omega)(i, j) != 0) os << i + 1 << ' ' << j + 1 << ' ' << (*m.omega)(i, j).get_str() << '\n';
  }
  if (m.automorphism) {
    os << "\n[automorphism]\norder: " << m.automorphism->order << '\n';
    write_matrix(os, m.automorphism->matrix);
  }
  return os.str();
}

bool same_model(const LieModel& a, const LieModel& b) {
  auto same_auto = [](const std::optional<Automorphism>& x, const std::optional<Automorphism>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->order == y->order && x->matrix == y->matrix);
  };
  return a.name == b.name && a.dimension == b.dimension && a.constants == b.constants && a.metric == b.metric &&
         a.J == b.J && a.xi == b.xi && a.eta == b.eta && a.omega == b.omega && same_auto(a.automorphism, b.automorphism);
}

}  // namespace cokahler
