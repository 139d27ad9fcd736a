#include "mpart/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mpart {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    const auto end = std::min(line.find(' ', pos), line.size());
    if (end > pos) words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

std::string witness_text(const DeletionWitness& w) {
  std::string out = std::to_string(w.deleted) + ':';
  for (auto part : w.partition.parts) out += static_cast<char>('1' + part);
  return out;
}

DeletionWitness parse_witness(std::string_view word) {
  const auto colon = word.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("certificate witness lacks ':'");
  DeletionWitness w;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + colon, w.deleted);
  if (ec != std::errc{} || ptr != word.data() + colon) throw std::invalid_argument("bad deleted vertex");
  for (char c : word.substr(colon + 1)) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad part digit in certificate");
    w.partition.parts.push_back(static_cast<std::uint8_t>(c - '1'));
  }
  return w;
}

}  // namespace

std::string render_catalog(const ObstructionCatalog& catalog) {
  std::string out;
  out += "# pattern " + render(catalog.pattern) + '\n';
  out += "# bound " + std::to_string(catalog.bound) + '\n';
  out += "# tool " + std::string(kToolVersion) + '\n';
  for (const auto& e : catalog.entries) out += e.key + '\n';
  return out;
}

std::string render_certificates(const ObstructionCatalog& catalog) {
  std::string out = "# certificates pattern " + render(catalog.pattern) + " bound " +
                    std::to_string(catalog.bound) + " tool " + std::string(kToolVersion) + '\n';
  for (const auto& e : catalog.entries) {
    out += e.key;
    for (const auto& w : e.witnesses) out += ' ' + witness_text(w);
    out += '\n';
  }
  return out;
}

CatalogFile parse_catalog(std::string_view text) {
  CatalogFile file;
  for (auto line : split_lines(text)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto words = split_words(line.substr(1));
      if (words.size() == 2 && words[0] == "pattern") file.pattern = std::string(words[1]);
      if (words.size() == 2 && words[0] == "bound") {
        auto [ptr, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), file.bound);
        if (ec != std::errc{}) throw std::invalid_argument("bad bound in catalog header");
      }
      continue;
    }
    Digraph d = parse_digraph(line);
    file.keys.push_back(render(d));
    file.digraphs.push_back(d);
  }
  return file;
}

ObstructionCatalog parse_certified_catalog(std::string_view catalog_text, std::string_view certificate_text) {
  const CatalogFile file = parse_catalog(catalog_text);
  if (file.pattern.empty()) throw std::invalid_argument("catalog header lacks a pattern");
  ObstructionCatalog catalog;
  catalog.pattern = parse_pattern(file.pattern);
  catalog.bound = file.bound;

  std::map<std::string, std::vector<DeletionWitness>, std::less<>> certificates;
  for (auto line : split_lines(certificate_text)) {
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);
    std::vector<DeletionWitness> witnesses;
    for (std::size_t k = 1; k < words.size(); ++k) witnesses.push_back(parse_witness(words[k]));
    if (!certificates.emplace(std::string(words[0]), std::move(witnesses)).second)
      throw std::invalid_argument("duplicate certificate for " + std::string(words[0]));
  }
  for (std::size_t k = 0; k < file.digraphs.size(); ++k) {
    auto it = certificates.find(file.keys[k]);
    if (it == certificates.end()) throw std::invalid_argument("no certificate for " + file.keys[k]);
    catalog.entries.push_back(CatalogEntry{file.keys[k], file.digraphs[k], std::move(it->second)});
    certificates.erase(it);
  }
  if (!certificates.empty())
    throw std::invalid_argument("certificate for unknown entry " + certificates.begin()->first);
  return catalog;
}

EntryVerification verify_entry(const Pattern& m, const CatalogEntry& entry) {
  EntryVerification v;
  v.key = entry.key;
  v.canonical = render(entry.digraph) == entry.key && is_canonical(entry.digraph);
  v.not_partitionable = !solve_bruteforce(entry.digraph, m).has_value();

  const std::size_t n = entry.digraph.order();
  std::vector<bool> covered(n, false);
  bool valid = entry.witnesses.size() == n;
  for (const auto& w : entry.witnesses) {
    if (!valid) break;
    if (w.deleted >= n || covered[w.deleted]) {
      valid = false;
      break;
    }
    covered[w.deleted] = true;
    const Digraph rest = delete_vertex(entry.digraph, w.deleted);
    if (w.partition.parts.size() != rest.order()) {
      valid = false;
      break;
    }
    const bool parts_in_range = std::all_of(w.partition.parts.begin(), w.partition.parts.end(),
                                            [&](auto p) { return p < m.parts(); });
    valid = parts_in_range && check_partition(rest, m, w.partition);
  }
  v.witnesses_valid = valid;
  return v;
}

bool verify_catalog(const ObstructionCatalog& catalog, std::vector<EntryVerification>* details) {
  bool ok = true;
  for (std::size_t k = 0; k < catalog.entries.size(); ++k) {
    if (k > 0 && !(catalog.entries[k - 1].key < catalog.entries[k].key)) ok = false;
    if (catalog.entries[k].digraph.order() > catalog.bound) ok = false;
    EntryVerification v = verify_entry(catalog.pattern, catalog.entries[k]);
    ok = ok && v.ok();
    if (details) details->push_back(std::move(v));
  }
  return ok;
}

}  // namespace mpart
