#include "clasperkit/clasper.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "clasperkit/errors.hpp"

namespace clasperkit {

namespace detail {
bool corrupt_core_for_tests = false;
}

LeafSpec LeafSpec::range(int lo, int hi, Int framing) {
  if (lo < 1 || hi < lo)
    throw InvalidSpecError("leaf range [" + std::to_string(lo) + "," +
                           std::to_string(hi) + "] is not a valid interval");
  return LeafSpec{false, lo, hi, std::move(framing)};
}

bool LeafSpec::operator==(const LeafSpec& o) const {
  if (empty != o.empty || framing != o.framing) return false;
  return empty || (lo == o.lo && hi == o.hi);
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(trim(s), &used);
    if (used != trim(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidSpecError("bad integer '" + s + "' in " + what);
  }
}

}  // namespace

ClasperSpec ClasperSpec::parse(const std::string& text) {
  ClasperSpec spec;
  bool saw_site = false;
  std::array<bool, 3> saw_leaf{false, false, false};
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw InvalidSpecError("expected key=value in clasper spec: '" + part + "'");
    std::string key = trim(part.substr(0, eq));
    std::string value = trim(part.substr(eq + 1));
    if (key == "site") {
      long long s = parse_int(value, "site");
      if (s < 0) throw InvalidSpecError("site must be nonnegative");
      spec.site = static_cast<std::size_t>(s);
      saw_site = true;
    } else if (key.size() == 5 && key.compare(0, 4, "leaf") == 0 &&
               key[4] >= '1' && key[4] <= '3') {
      int li = key[4] - '1';
      saw_leaf[li] = true;
      Int framing = 0;
      std::string body = value;
      auto at = value.find("@f=");
      if (at != std::string::npos) {
        framing = parse_int(value.substr(at + 3), key + " framing");
        body = trim(value.substr(0, at));
      }
      if (body == "empty") {
        spec.leaves[li] = LeafSpec{};
        spec.leaves[li].framing = framing;
      } else {
        auto dash = body.find('-', 1);  // allow no negative lo anyway
        if (dash == std::string::npos)
          throw InvalidSpecError(key + ": expected <a>-<b> or empty, got '" +
                                 body + "'");
        int lo = static_cast<int>(parse_int(body.substr(0, dash), key));
        int hi = static_cast<int>(parse_int(body.substr(dash + 1), key));
        spec.leaves[li] = LeafSpec::range(lo, hi, framing);
      }
    } else {
      throw InvalidSpecError("unknown clasper spec key '" + key + "'");
    }
  }
  if (!saw_site || !saw_leaf[0] || !saw_leaf[1] || !saw_leaf[2])
    throw InvalidSpecError("clasper spec needs site and leaf1..leaf3");
  return spec;
}

std::string ClasperSpec::format() const {
  std::ostringstream os;
  os << "site=" << site;
  for (int i = 0; i < 3; ++i) {
    const LeafSpec& l = leaves[i];
    os << "; leaf" << (i + 1) << "=";
    if (l.empty)
      os << "empty";
    else
      os << l.lo << "-" << l.hi;
    if (!l.empty || l.framing != 0) os << "@f=" << l.framing;
  }
  return os.str();
}

void validate_spec(const SurgeryPresentation& p, const ClasperSpec& spec) {
  if (!p.is_diagram())
    throw NeedsDiagramError("clasper surgery needs a diagram presentation");
  const FramedBraidLink& link = p.link();
  const int n = link.is_empty() ? 0 : link.strands();
  if (spec.site > link.word().size())
    throw InvalidSpecError("site " + std::to_string(spec.site) +
                           " is beyond the word length " +
                           std::to_string(link.word().size()));
  for (int i = 0; i < 3; ++i) {
    const LeafSpec& l = spec.leaves[i];
    if (l.empty) continue;
    if (l.lo < 1 || l.hi > n)
      throw InvalidSpecError("leaf" + std::to_string(i + 1) + " range [" +
                             std::to_string(l.lo) + "," + std::to_string(l.hi) +
                             "] exceeds the " + std::to_string(n) + " strands");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const LeafSpec& a = spec.leaves[i];
      const LeafSpec& b = spec.leaves[j];
      if (a.empty || b.empty) continue;
      if (a.lo <= b.hi && b.lo <= a.hi)
        throw InvalidSpecError("leaf" + std::to_string(i + 1) + " and leaf" +
                               std::to_string(j + 1) + " ranges overlap");
    }
}

std::array<std::vector<Int>, 3> leaf_linking_vectors(const SurgeryPresentation& p,
                                                     const ClasperSpec& spec) {
  validate_spec(p, spec);
  const FramedBraidLink& link = p.link();
  std::array<std::vector<Int>, 3> a;
  const std::size_t m = link.is_empty() ? 0 : link.component_count();
  for (auto& v : a) v.assign(m, 0);
  if (link.is_empty()) return a;

  // occupants of each position just before word index `site`
  std::vector<int> pos(link.strands());
  std::iota(pos.begin(), pos.end(), 1);
  for (std::size_t t = 0; t < spec.site; ++t) {
    int k = std::abs(link.word()[t]);
    std::swap(pos[k - 1], pos[k]);
  }
  const auto sc = link.strand_component();
  for (int i = 0; i < 3; ++i) {
    const LeafSpec& l = spec.leaves[i];
    if (l.empty) continue;
    for (int q = l.lo; q <= l.hi; ++q) a[i][sc[pos[q - 1] - 1]] += 1;
  }
  return a;
}

IntMatrix predicted_block_matrix(const IntMatrix& b, const ClasperSpec& spec,
                                 const std::array<std::vector<Int>, 3>& a) {
  const std::size_t m = b.rows();
  IntMatrix out(m + 6, m + 6);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = b(i, j);
  for (int i = 0; i < 3; ++i) {
    const std::size_t inner = m + i, leaf = m + 3 + i;
    out(inner, leaf) = 1;
    out(leaf, inner) = 1;
    out(leaf, leaf) = spec.leaves[i].framing;
    for (std::size_t j = 0; j < m; ++j) {
      out(leaf, j) = a[i][j];
      out(j, leaf) = a[i][j];
    }
  }
  return out;
}

ClasperSurgeryResult insert_clasper(const SurgeryPresentation& p,
                                    const ClasperSpec& spec) {
  validate_spec(p, spec);
  const FramedBraidLink& link = p.link();
  const int n = link.is_empty() ? 0 : link.strands();
  const std::size_t m = link.is_empty() ? 0 : link.component_count();

  // inner strands at n+1..n+3, leaf strands at n+4..n+6
  std::vector<int> gadget;
  for (int i = 0; i < 3; ++i) {
    const LeafSpec& l = spec.leaves[i];
    const int home = n + 4 + i;
    const int inner = n + 1 + i;
    const int leftmost = l.empty ? inner : l.lo;
    // travel left: under (+) the encircled strands, past (-) the others;
    // return right crossing everything with +. Net effect: a round circle
    // whose disk is punctured exactly by the range and the inner strand.
    for (int q = home - 1; q >= leftmost; --q) {
      bool encircled = (q == inner) || (!l.empty && l.lo <= q && q <= l.hi);
      gadget.push_back(encircled ? q : -q);
    }
    for (int q = leftmost; q <= home - 1; ++q) gadget.push_back(q);
  }
  if (!detail::corrupt_core_for_tests) {
    for (int r = 0; r < 3; ++r) {
      gadget.push_back(n + 1);
      gadget.push_back(-(n + 2));
    }
  }

  std::vector<int> word;
  const auto& w = link.word();
  word.insert(word.end(), w.begin(), w.begin() + spec.site);
  word.insert(word.end(), gadget.begin(), gadget.end());
  word.insert(word.end(), w.begin() + spec.site, w.end());

  std::vector<Int> framings = link.is_empty() ? std::vector<Int>{} : link.framings();
  framings.insert(framings.end(), {0, 0, 0});  // inner components
  for (int i = 0; i < 3; ++i) framings.push_back(spec.leaves[i].framing);

  FramedBraidLink spliced(n + 6, std::move(word), std::move(framings));

  ClasperSurgeryResult result;
  result.old_components = m;
  result.old_to_new.resize(m);
  std::iota(result.old_to_new.begin(), result.old_to_new.end(), 0);
  result.leaf_linking = leaf_linking_vectors(p, spec);
  result.spec = spec;

  std::string label = p.label().empty() ? "" : p.label() + " + Y";
  result.presentation = SurgeryPresentation::diagram(std::move(spliced), label);

  IntMatrix predicted =
      predicted_block_matrix(p.linking_matrix(), spec, result.leaf_linking);
  if (result.presentation.linking_matrix() != predicted)
    throw CorrespondenceViolationError(
        "clasper template produced an unexpected linking matrix");
  return result;
}

CharSublink corresponding_spin(const CharSublink& c,
                               const ClasperSurgeryResult& result) {
  const std::size_t m = result.old_components;
  if (c.bits.size() != m)
    throw DimensionError("characteristic sublink size != old component count");

  Bits out(m + 6, 0);
  for (std::size_t i = 0; i < m; ++i) out[i] = c.bits[i];
  for (int i = 0; i < 3; ++i) {
    Int acc = result.spec.leaves[i].framing;
    for (std::size_t j = 0; j < m; ++j)
      if (c.bits[j]) acc += result.leaf_linking[i][j];
    out[result.inner_component(i)] = is_odd(acc) ? 1 : 0;
    out[result.leaf_component(i)] = 0;
  }

  const IntMatrix bp = result.presentation.linking_matrix();
  if (!is_characteristic(bp, out))
    throw CorrespondenceViolationError(
        "corresponding spin formula is not characteristic for the spliced "
        "presentation");
  // uniqueness: no nonzero kernel vector of B' mod 2 vanishes on old components
  auto sol = solve_mod2_affine(bp, Bits(bp.rows(), 0));
  for (const Bits& k : sol.kernel) {
    bool vanishes_on_old = true;
    for (std::size_t i = 0; i < m && vanishes_on_old; ++i)
      if (k[i]) vanishes_on_old = false;
    if (vanishes_on_old && !all_zero(k))
      throw CorrespondenceViolationError(
          "characteristic extension is not unique");
  }
  return CharSublink{std::move(out)};
}

SurgeryPresentation apply_claspers(SurgeryPresentation p,
                                   const std::vector<ClasperSpec>& specs) {
  for (const ClasperSpec& spec : specs)
    p = insert_clasper(p, spec).presentation;
  return p;
}

SpinPresentation apply_claspers(SpinPresentation s,
                                const std::vector<ClasperSpec>& specs) {
  for (const ClasperSpec& spec : specs) {
    ClasperSurgeryResult r = insert_clasper(s.presentation(), spec);
    CharSublink c = corresponding_spin(s.chr(), r);
    s = SpinPresentation(r.presentation, std::move(c));
  }
  return s;
}

}  // namespace clasperkit
