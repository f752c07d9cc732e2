#include "clasperkit/manifest.hpp"

#include <fstream>
#include <sstream>

#include "clasperkit/errors.hpp"

namespace clasperkit {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Int parse_big(const std::string& s, const std::string& field) {
  std::string t = trim(s);
  if (t.empty()) throw ParseError("field '" + field + "': empty integer");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) throw ParseError("field '" + field + "': bad integer '" + s + "'");
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw ParseError("field '" + field + "': bad integer '" + s + "'");
  return Int(t);
}

long long parse_small(const std::string& s, const std::string& field) {
  Int v = parse_big(s, field);
  if (v > 1000000 || v < -1000000)
    throw ValidationError("field '" + field + "': value out of range");
  return v.convert_to<long long>();
}

// [a, b, c]; empty list is []
std::vector<std::string> split_list(const std::string& s, const std::string& field) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ParseError("field '" + field + "': expected a bracketed list");
  t = trim(t.substr(1, t.size() - 2));
  std::vector<std::string> items;
  if (t.empty()) return items;
  int depth = 0;
  std::string cur;
  for (char c : t) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  items.push_back(trim(cur));
  if (depth != 0) throw ParseError("field '" + field + "': unbalanced brackets");
  return items;
}

IntMatrix parse_matrix(const std::string& s) {
  auto rows = split_list(s, "matrix");
  std::vector<std::vector<Int>> data;
  for (const std::string& r : rows) {
    std::vector<Int> row;
    for (const std::string& x : split_list(r, "matrix"))
      row.push_back(parse_big(x, "matrix"));
    data.push_back(std::move(row));
  }
  if (!data.empty())
    for (const auto& r : data)
      if (r.size() != data[0].size())
        throw ParseError("field 'matrix': ragged rows");
  return IntMatrix::from_rows(data);
}

}  // namespace

bool ManifoldManifest::operator==(const ManifoldManifest& o) const {
  return version == o.version && label == o.label && strands == o.strands &&
         word == o.word && framings == o.framings && matrix == o.matrix &&
         spin == o.spin && notes == o.notes;
}

SurgeryPresentation ManifoldManifest::to_presentation() const {
  if (matrix) return SurgeryPresentation::matrix_only(*matrix, label);
  if (*strands == 0) {
    if (!word->empty() || !framings->empty())
      throw ValidationError("field 'strands': the empty link needs empty "
                            "word and framings");
    return SurgeryPresentation::diagram(FramedBraidLink::empty_link(), label);
  }
  try {
    return SurgeryPresentation::diagram(FramedBraidLink(*strands, *word, *framings),
                                        label);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("presentation fields: ") + e.what());
  }
}

std::optional<SpinPresentation> ManifoldManifest::to_spin_presentation() const {
  if (!spin) return std::nullopt;
  SurgeryPresentation p = to_presentation();
  try {
    return SpinPresentation(p, CharSublink{*spin});
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("field 'spin': ") + e.what());
  }
}

ManifoldManifest ManifoldManifest::from_presentation(
    const SurgeryPresentation& p, const std::optional<Bits>& spin) {
  ManifoldManifest m;
  m.label = p.label();
  if (p.is_diagram()) {
    const FramedBraidLink& l = p.link();
    if (l.is_empty()) {
      m.strands = 0;
      m.word = std::vector<int>{};
      m.framings = std::vector<Int>{};
    } else {
      m.strands = l.strands();
      m.word = l.word();
      m.framings = l.framings();
    }
  } else {
    m.matrix = p.linking_matrix();
  }
  m.spin = spin;
  return m;
}

ManifoldManifest parse_manifest(const std::string& text) {
  ManifoldManifest m;
  bool saw_version = false;
  std::vector<std::string> seen;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'key: value'");
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    for (const std::string& s : seen)
      if (s == key)
        throw ParseError("field '" + key + "': duplicated");
    seen.push_back(key);

    if (key == "version") {
      m.version = static_cast<int>(parse_small(value, key));
      if (m.version != 1)
        throw ValidationError("field 'version': unsupported version " + value);
      saw_version = true;
    } else if (key == "label") {
      m.label = value;
    } else if (key == "notes") {
      m.notes = value;
    } else if (key == "strands") {
      m.strands = static_cast<int>(parse_small(value, key));
    } else if (key == "word") {
      std::vector<int> w;
      for (const std::string& x : split_list(value, key))
        w.push_back(static_cast<int>(parse_small(x, key)));
      m.word = std::move(w);
    } else if (key == "framings") {
      std::vector<Int> f;
      for (const std::string& x : split_list(value, key))
        f.push_back(parse_big(x, key));
      m.framings = std::move(f);
    } else if (key == "matrix") {
      m.matrix = parse_matrix(value);
    } else if (key == "spin") {
      Bits s;
      for (const std::string& x : split_list(value, key)) {
        Int v = parse_big(x, key);
        if (v != 0 && v != 1)
          throw ValidationError("field 'spin': entries must be 0 or 1");
        s.push_back(v == 1 ? 1 : 0);
      }
      m.spin = std::move(s);
    } else {
      throw ParseError("field '" + key + "': unknown key");
    }
  }
  if (!saw_version) throw ParseError("field 'version': missing");

  const bool word_form = m.strands || m.word || m.framings;
  if (word_form && m.matrix)
    throw ValidationError(
        "fields 'matrix' and 'strands/word/framings': exactly one "
        "presentation form is allowed");
  if (!word_form && !m.matrix)
    throw ValidationError("presentation fields missing: need "
                          "strands/word/framings or matrix");
  if (word_form && !(m.strands && m.word && m.framings))
    throw ValidationError(
        "fields 'strands', 'word', 'framings': all three are required for "
        "the word form");
  if (m.matrix && !m.matrix->is_symmetric())
    throw ValidationError("field 'matrix': must be symmetric");

  // full validation: components, ranges, characteristic spin
  SurgeryPresentation p = m.to_presentation();
  if (m.spin && m.spin->size() != p.component_count())
    throw ValidationError("field 'spin': length " +
                          std::to_string(m.spin->size()) +
                          " != component count " +
                          std::to_string(p.component_count()));
  if (m.spin && !is_characteristic(p.linking_matrix(), *m.spin))
    throw ValidationError("field 'spin': not a characteristic sublink");
  return m;
}

ManifoldManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read manifest file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

std::string print_manifest(const ManifoldManifest& m) {
  std::ostringstream os;
  os << "version: " << m.version << "\n";
  if (!m.label.empty()) os << "label: " << m.label << "\n";
  if (m.matrix) {
    os << "matrix: " << m.matrix->to_string() << "\n";
  } else {
    os << "strands: " << *m.strands << "\n";
    os << "word: [";
    for (std::size_t i = 0; i < m.word->size(); ++i)
      os << (i ? ", " : "") << (*m.word)[i];
    os << "]\n";
    os << "framings: [";
    for (std::size_t i = 0; i < m.framings->size(); ++i)
      os << (i ? ", " : "") << (*m.framings)[i];
    os << "]\n";
  }
  if (m.spin) {
    os << "spin: [";
    for (std::size_t i = 0; i < m.spin->size(); ++i)
      os << (i ? ", " : "") << int((*m.spin)[i]);
    os << "]\n";
  }
  if (!m.notes.empty()) os << "notes: " << m.notes << "\n";
  return os.str();
}

void save_manifest(const ManifoldManifest& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write manifest file '" + path + "'");
  out << print_manifest(m);
}

}  // namespace clasperkit
