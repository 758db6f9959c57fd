/**
 * @file catalog_io.hpp
 * @brief Text serialization of catalogs.
 *
 * The format is indented JSON with sorted keys, so serialize(parse(s)) == s
 * for anything serialize produced. Power relations are full exponent
 * vectors; the commutator table is a list of nonzero [i, j, value] triples.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pgroup/catalog.hpp"

namespace pgroup {

inline constexpr int kCatalogFormatVersion = 1;

struct CatalogFile {
    int format_version = kCatalogFormatVersion;
    CatalogRanges ranges;  ///< ranges.p is the prime of every entry
    std::vector<CatalogEntry> entries;
};

std::string serialize(const CatalogFile& file);

/// Throws ParseError with the byte offset of the syntax error, or of the
/// entry holding a malformed field.
CatalogFile parse_catalog(std::string_view text);

/// Convenience: build_catalog(ranges) wrapped with its header.
CatalogFile make_catalog_file(const CatalogRanges& ranges);

}  // namespace pgroup
