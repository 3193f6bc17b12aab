#include "sts/census_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sts {

namespace {

void append_images(std::string& out, const CanonicalKey& key, bool tau_side) {
  const int n = key.squares();
  const Label* img = key.bytes.data() + 1 + (tau_side ? n : 0);
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += std::to_string(int(img[i]) + 1);
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(text.substr(pos));
      break;
    }
    parts.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  return value;
}

std::vector<Label> parse_one_line(std::string_view s) {
  std::vector<Label> img;
  for (std::string_view part : split(s, ',')) {
    int v = parse_int(part, "image");
    if (v < 1 || v > kMaxSquares) throw ParseError("image out of range");
    img.push_back(static_cast<Label>(v - 1));
  }
  return img;
}

// Cycle notation with 1-based labels; singletons allowed. n is the largest
// label mentioned unless a caller-supplied minimum is larger.
std::vector<Label> parse_cycles(std::string_view s, int min_n) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  int max_label = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw ParseError("expected '(' in cycle notation");
    std::size_t close = s.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unbalanced cycle");
    std::string_view body = s.substr(pos + 1, close - pos - 1);
    std::vector<int> cyc;
    for (std::string_view part : split(body, ',')) {
      // allow space-separated entries too
      for (std::string_view piece : split(part, ' '))
        if (!piece.empty()) cyc.push_back(parse_int(piece, "cycle entry"));
    }
    if (cyc.empty()) throw ParseError("empty cycle");
    for (int v : cyc) max_label = std::max(max_label, v);
    cycles.push_back(std::move(cyc));
    pos = close + 1;
  }
  int n = std::max(max_label, min_n);
  if (n < 1) throw ParseError("empty permutation");
  try {
    return Perm::from_cycles(n, cycles).images();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::vector<Label> parse_perm_side(std::string_view s, int min_n) {
  if (!s.empty() && s.front() == '(') return parse_cycles(s, min_n);
  auto img = parse_one_line(s);
  if (static_cast<int>(img.size()) < min_n)
    throw ParseError("one-line permutation shorter than its partner");
  return img;
}

Perm perm_from_images(std::vector<Label> img) {
  try {
    return Perm(std::move(img));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string flags_string(const CensusRecord& r) {
  std::string s;
  if (r.reduced) s += 'R';
  if (r.primitive) s += 'P';
  if (r.normal) s += 'N';
  if (r.holonomy_torus) s += 'H';
  if (r.visibility) s += 'V';
  if (r.symmetry_torus) s += 'S';
  if (r.characteristic) s += 'C';
  if (r.unit_saddle) s += 'U';
  return s;
}

std::string serialize_census(const std::vector<CensusRecord>& records, int n) {
  std::string out = "#sts-census v1 n=" + std::to_string(n) + "\n";
  for (const auto& r : records) {
    append_images(out, r.key, false);
    out += '|';
    append_images(out, r.key, true);
    out += '|';
    out += r.stratum.to_string();
    out += '|';
    out += flags_string(r);
    out += '\n';
  }
  return out;
}

ParsedCensus parse_census(std::string_view text) {
  ParsedCensus result;
  std::size_t pos = text.find('\n');
  if (pos == std::string_view::npos) throw ParseError("missing header line");
  std::string_view header = text.substr(0, pos);
  constexpr std::string_view kPrefix = "#sts-census v1 n=";
  if (header.substr(0, kPrefix.size()) != kPrefix)
    throw ParseError("bad census header");
  result.n = parse_int(header.substr(kPrefix.size()), "header square count");

  std::size_t line_no = 1;
  while (pos < text.size()) {
    std::size_t next = text.find('\n', pos + 1);
    std::string_view line = text.substr(pos + 1, (next == std::string_view::npos
                                                      ? text.size()
                                                      : next) - pos - 1);
    pos = next == std::string_view::npos ? text.size() : next;
    ++line_no;
    if (line.empty()) continue;
    auto fields = split(line, '|');
    if (fields.size() != 4)
      throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields");
    CensusRecord r;
    std::vector<Label> s_img = parse_one_line(fields[0]);
    std::vector<Label> t_img = parse_one_line(fields[1]);
    if (static_cast<int>(s_img.size()) != result.n ||
        static_cast<int>(t_img.size()) != result.n)
      throw ParseError("line " + std::to_string(line_no) + ": wrong square count");
    Perm sigma = perm_from_images(std::move(s_img));
    Perm tau = perm_from_images(std::move(t_img));
    r.key.bytes.push_back(static_cast<Label>(result.n));
    r.key.bytes.insert(r.key.bytes.end(), sigma.images().begin(), sigma.images().end());
    r.key.bytes.insert(r.key.bytes.end(), tau.images().begin(), tau.images().end());
    auto alpha = parse_stratum(std::string(fields[2]));
    if (!alpha) throw ParseError("line " + std::to_string(line_no) + ": bad stratum");
    r.stratum = *alpha;
    for (char c : fields[3]) {
      switch (c) {
        case 'R': r.reduced = true; break;
        case 'P': r.primitive = true; break;
        case 'N': r.normal = true; break;
        case 'H': r.holonomy_torus = true; break;
        case 'V': r.visibility = true; break;
        case 'S': r.symmetry_torus = true; break;
        case 'C': r.characteristic = true; break;
        case 'U': r.unit_saddle = true; break;
        default:
          throw ParseError("line " + std::to_string(line_no) + ": unknown flag");
      }
    }
    result.records.push_back(std::move(r));
  }
  return result;
}

void write_census_file(const std::string& path,
                       const std::vector<CensusRecord>& records, int n) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << serialize_census(records, n);
  if (!out) throw std::runtime_error("write failed: " + path);
}

ParsedCensus read_census_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_census(buffer.str());
}

Origami parse_origami_text(std::string_view text) {
  auto sides = split(text, '|');
  if (sides.size() != 2)
    throw ParseError("expected '<sigma>|<tau>'");
  // Two passes so cycle sides can pick up the size fixed by the other side.
  std::vector<Label> s = parse_perm_side(sides[0], 1);
  std::vector<Label> t = parse_perm_side(sides[1], static_cast<int>(s.size()));
  if (t.size() > s.size()) s = parse_perm_side(sides[0], static_cast<int>(t.size()));
  if (s.size() != t.size())
    throw ParseError("sigma and tau act on different square counts");
  Origami o(perm_from_images(std::move(s)), perm_from_images(std::move(t)));
  if (!o.connected()) throw ParseError("surface is disconnected");
  return o;
}

}  // namespace sts
