#pragma once

// Text files for obstruction catalogs and their certificate sidecars.
//
// Catalog:
//   # pattern 00,*0
//   # bound 3
//   # tool mpart 0.1.0
//   2:=
//   3:<<.
//   ...
// One canonical digraph per line, sorted by key.
//
// Certificates:
//   # certificates pattern 00,*0 bound 3 tool mpart 0.1.0
//   2:= 0:1 1:1
// Each "v:parts" gives the partition of the entry minus vertex v, one 1-based
// part digit per remaining vertex in ascending order.

#include <string>
#include <string_view>
#include <vector>

#include "mpart/enumerator.hpp"

namespace mpart {

inline constexpr std::string_view kToolVersion = "mpart 0.1.0";

std::string render_catalog(const ObstructionCatalog& catalog);
std::string render_certificates(const ObstructionCatalog& catalog);

struct CatalogFile {
  std::string pattern;  // as written in the header; empty if absent
  std::size_t bound = 0;
  std::vector<Digraph> digraphs;
  std::vector<std::string> keys;  // render() of each line, in file order
};

// Throws std::invalid_argument on malformed lines.
CatalogFile parse_catalog(std::string_view text);

// Attaches certificate lines to the entries of `file`; every entry must get
// exactly one line.
ObstructionCatalog parse_certified_catalog(std::string_view catalog_text, std::string_view certificate_text);

struct EntryVerification {
  std::string key;
  bool canonical = false;
  bool not_partitionable = false;
  bool witnesses_valid = false;

  bool ok() const { return canonical && not_partitionable && witnesses_valid; }
};

// Re-checks an entry from its stored witnesses. Non-partitionability has no
// short certificate, so it is re-decided by exhaustive search.
EntryVerification verify_entry(const Pattern& m, const CatalogEntry& entry);

// Sorted keys, no duplicates, and every entry verifies.
bool verify_catalog(const ObstructionCatalog& catalog, std::vector<EntryVerification>* details = nullptr);

}  // namespace mpart
