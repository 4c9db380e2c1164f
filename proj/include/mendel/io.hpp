#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "mendel/cayley.hpp"
#include "mendel/design.hpp"
#include "mendel/loop.hpp"

namespace mendel {

enum class FileKind { quasigroup, mts, sts, loop };

struct ParsedFile {
  FileKind kind = FileKind::quasigroup;
  std::optional<CayleyTable> table;
  std::optional<OrientedTripleSystem> mts;
  std::optional<UnorderedTripleSystem> sts;
  std::optional<LoopTable> loop;
};

// Headers: "QG n", "MTS v", "STS v", "LOOP n e". Lines starting with '#'
// are comments. Malformed input raises parse_error; semantic validation
// (Latin property, pair coverage, order sanity) uses the owning module.
ParsedFile parse_file(std::istream& in, bool allow_any_order = false);
ParsedFile load_file(const std::string& path, bool allow_any_order = false);

// Canonical text: sorted blocks, single spaces, trailing newline. Exports
// round-trip byte for byte.
std::string to_text(const CayleyTable& q);
std::string to_text(const OrientedTripleSystem& s);
std::string to_text(const UnorderedTripleSystem& s);
std::string to_text(const LoopTable& l);

void save_file(const std::string& path, const std::string& text);

}  // namespace mendel
