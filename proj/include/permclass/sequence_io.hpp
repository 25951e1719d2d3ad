#pragma once

#include "permclass/enumeration.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

enum class SeqFormat { Table, Json, Csv, BFile };

/// Parses "table", "json", "csv" or "bfile". Throws Error(Unsupported) otherwise.
SeqFormat parse_format(std::string_view name);

/// Renders counts for n = 1..size.
///   table: right-aligned "n count" columns under a header line
///   json:  {"basis": [...], "counts": [...]}, counts as exact integer literals
///   csv:   header "n,count"
///   bfile: "n a(n)" per line
void write_sequence(std::ostream& out, const CountSeq& seq, SeqFormat format,
                    const std::vector<std::string>& basis = {});

/// Reads a sequence from text. Accepts b-file lines ("n a(n)", '#' comments,
/// indices must run 1, 2, 3, ...), CSV with an "n,count" header, or a plain
/// list of integers separated by commas or whitespace.
/// Throws Error(InvalidSequence) naming the offending token.
CountSeq read_sequence(std::string_view text);

} // namespace permclass
