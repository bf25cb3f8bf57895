#ifndef MAPCHECK_MAPPING_HPP
#define MAPCHECK_MAPPING_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mapcheck/Litmus.hpp"

namespace mapcheck {

struct MappingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One element of an expansion template: the access itself (which inherits
/// location, value and destination register from the source op) or a fence.
struct MapToken {
  enum class Kind { Access, Fence };
  Kind kind = Kind::Access;
  FenceKind fence = FenceKind::Sync;

  bool operator==(const MapToken&) const = default;

  static MapToken access() { return {Kind::Access, FenceKind::Sync}; }
  static MapToken fenceOf(FenceKind f) { return {Kind::Fence, f}; }
};

using MappingKey = std::pair<C11Op::Kind, MemoryOrder>;

struct MappingTable {
  std::string name;  // catalog / CLI name, e.g. "trailing-sync-power"
  Arch arch = Arch::Power;
  std::map<MappingKey, std::vector<MapToken>> rules;

  bool operator==(const MappingTable&) const = default;
};

/// The five built-ins: leading-sync and trailing-sync for Power and ARMv7,
/// plus gcc-armv7 (trailing-sync ARMv7 with acquire loads lowered to
/// `ld; dmbish`). relaxed ops map to bare ld/st, an extension beyond the
/// published tables needed only for swept variants.
const std::vector<MappingTable>& mappingCatalog();

/// Catalog lookup by name; nullptr if absent.
const MappingTable* findMapping(std::string_view name);

/// Catalog name first, then a mapping file path. Throws MappingError.
MappingTable resolveMapping(const std::string& nameOrFile);

MappingTable parseMappingTable(const std::string& text);
MappingTable loadMappingFile(const std::string& path);
std::string renderMappingTable(const MappingTable& table);

/// Per-op expansion in thread order; init and the outcome predicate carry
/// over unchanged (register names are preserved). Throws MappingError on a
/// (kind, order) pair the table does not cover.
IsaTest compile(const C11Test& test, const MappingTable& table);

}  // namespace mapcheck

#endif  // MAPCHECK_MAPPING_HPP
