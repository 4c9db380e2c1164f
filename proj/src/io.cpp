#include "mendel/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace mendel {

namespace {

// Lines with comments stripped, blank lines skipped.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  return lines;
}

std::vector<long long> numbers_on(const std::string& line) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) fail(errc::parse_error, "non-numeric token on line: " + line);
  return out;
}

std::vector<uint8_t> read_square(const std::vector<std::string>& lines, size_t first, int n) {
  if (lines.size() != first + static_cast<size_t>(n))
    fail(errc::parse_error, "expected " + std::to_string(n) + " table rows");
  std::vector<uint8_t> t;
  t.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    auto row = numbers_on(lines[first + r]);
    if (static_cast<int>(row.size()) != n)
      fail(errc::parse_error, "row " + std::to_string(r) + " has wrong length");
    for (long long v : row) {
      if (v < 0 || v > 255) fail(errc::parse_error, "entry out of range: " + std::to_string(v));
      t.push_back(static_cast<uint8_t>(v));
    }
  }
  return t;
}

std::vector<std::array<int, 3>> read_blocks(const std::vector<std::string>& lines, size_t first) {
  std::vector<std::array<int, 3>> blocks;
  for (size_t i = first; i < lines.size(); ++i) {
    auto row = numbers_on(lines[i]);
    if (row.size() != 3) fail(errc::parse_error, "block line needs exactly 3 points");
    blocks.push_back({static_cast<int>(row[0]), static_cast<int>(row[1]), static_cast<int>(row[2])});
  }
  return blocks;
}

}  // namespace

ParsedFile parse_file(std::istream& in, bool allow_any_order) {
  auto lines = content_lines(in);
  if (lines.empty()) fail(errc::parse_error, "empty input");

  std::istringstream head(lines[0]);
  std::string tag;
  head >> tag;
  std::vector<long long> params;
  long long v;
  while (head >> v) params.push_back(v);

  if (tag == "QG") {
    if (params.size() != 1 || params[0] < 1) fail(errc::parse_error, "QG header needs an order");
    int n = static_cast<int>(params[0]);
    ParsedFile f;
    f.kind = FileKind::quasigroup;
    f.table = make_cayley(n, read_square(lines, 1, n));
    return f;
  }
  if (tag == "MTS") {
    if (params.size() != 1 || params[0] < 1) fail(errc::parse_error, "MTS header needs an order");
    ParsedFile f;
    f.kind = FileKind::mts;
    f.mts = validate_mts(static_cast<int>(params[0]), read_blocks(lines, 1), allow_any_order);
    return f;
  }
  if (tag == "STS") {
    if (params.size() != 1 || params[0] < 1) fail(errc::parse_error, "STS header needs an order");
    ParsedFile f;
    f.kind = FileKind::sts;
    f.sts = validate_sts(static_cast<int>(params[0]), read_blocks(lines, 1), allow_any_order);
    return f;
  }
  if (tag == "LOOP") {
    if (params.size() != 2 || params[0] < 1) fail(errc::parse_error, "LOOP header needs order and identity");
    int n = static_cast<int>(params[0]);
    ParsedFile f;
    f.kind = FileKind::loop;
    f.loop = make_loop(n, read_square(lines, 1, n), static_cast<int>(params[1]));
    return f;
  }
  fail(errc::parse_error, "unknown header tag: " + tag);
}

ParsedFile load_file(const std::string& path, bool allow_any_order) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  return parse_file(in, allow_any_order);
}

std::string to_text(const CayleyTable& q) {
  std::string out = "QG " + std::to_string(q.n) + "\n";
  for (int x = 0; x < q.n; ++x) {
    for (int y = 0; y < q.n; ++y) {
      if (y) out += " ";
      out += std::to_string(q.at(x, y));
    }
    out += "\n";
  }
  return out;
}

std::string to_text(const OrientedTripleSystem& s) {
  std::string out = "MTS " + std::to_string(s.v) + "\n";
  for (auto& b : s.blocks)
    out += std::to_string(b[0]) + " " + std::to_string(b[1]) + " " + std::to_string(b[2]) + "\n";
  return out;
}

std::string to_text(const UnorderedTripleSystem& s) {
  std::string out = "STS " + std::to_string(s.v) + "\n";
  for (auto& b : s.blocks)
    out += std::to_string(b[0]) + " " + std::to_string(b[1]) + " " + std::to_string(b[2]) + "\n";
  return out;
}

std::string to_text(const LoopTable& l) {
  std::string out = "LOOP " + std::to_string(l.n) + " " + std::to_string(l.identity) + "\n";
  for (int x = 0; x < l.n; ++x) {
    for (int y = 0; y < l.n; ++y) {
      if (y) out += " ";
      out += std::to_string(l.at(x, y));
    }
    out += "\n";
  }
  return out;
}

void save_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot write " + path);
  out << text;
}

}  // namespace mendel
