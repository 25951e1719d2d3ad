#include "permclass/sequence_io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace permclass {

SeqFormat parse_format(std::string_view name) {
  if (name == "table") return SeqFormat::Table;
  if (name == "json") return SeqFormat::Json;
  if (name == "csv") return SeqFormat::Csv;
  if (name == "bfile") return SeqFormat::BFile;
  throw Error(Errc::Unsupported, "unknown output format '" + std::string(name) + "'");
}

void write_sequence(std::ostream& out, const CountSeq& seq, SeqFormat format,
                    const std::vector<std::string>& basis) {
  switch (format) {
  case SeqFormat::Table: {
    std::size_t wn = 1;
    std::size_t wc = 5;
    wn = std::max(wn, std::to_string(seq.size()).size());
    for (const auto& v : seq.values) wc = std::max(wc, v.get_str().size());
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
    out << pad("n", wn) << ' ' << pad("count", wc) << '\n';
    for (std::size_t n = 1; n <= seq.size(); ++n)
      out << pad(std::to_string(n), wn) << ' ' << pad(seq.at(n).get_str(), wc) << '\n';
    break;
  }
  case SeqFormat::Json: {
    out << "{\"basis\": [";
    for (std::size_t i = 0; i < basis.size(); ++i) out << (i ? ", " : "") << '"' << basis[i] << '"';
    out << "], \"counts\": [";
    for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? ", " : "") << seq.values[i].get_str();
    out << "]}\n";
    break;
  }
  case SeqFormat::Csv:
    out << "n,count\n";
    for (std::size_t n = 1; n <= seq.size(); ++n) out << n << ',' << seq.at(n).get_str() << '\n';
    break;
  case SeqFormat::BFile:
    for (std::size_t n = 1; n <= seq.size(); ++n) out << n << ' ' << seq.at(n).get_str() << '\n';
    break;
  }
}

namespace {

mpz_class parse_integer(const std::string& token) {
  mpz_class v;
  const bool ok = !token.empty() && token.find_first_not_of("+-0123456789") == std::string::npos &&
                  v.set_str(token[0] == '+' ? token.substr(1) : token, 10) == 0;
  if (!ok) throw Error(Errc::InvalidSequence, "not an integer: '" + token + "'");
  return v;
}

std::vector<std::string> split_tokens(std::string_view line, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (seps.find(c) != std::string_view::npos) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

} // namespace

CountSeq read_sequence(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back(line.substr(first));
    }
  }
  CountSeq seq;
  if (lines.empty()) return seq;

  const bool csv = lines.front() == "n,count";
  bool indexed = csv;
  if (!csv) {
    // b-file: every line is "n a(n)" with n running 1, 2, 3, ...
    indexed = true;
    for (std::size_t i = 0; i < lines.size() && indexed; ++i) {
      const auto tokens = split_tokens(lines[i], " \t");
      indexed = lines[i].find(',') == std::string::npos && tokens.size() == 2 && tokens[0] == std::to_string(i + 1);
    }
  }
  if (indexed) {
    for (std::size_t i = csv ? 1 : 0; i < lines.size(); ++i) {
      const auto tokens = split_tokens(lines[i], csv ? "," : " \t");
      if (tokens.size() != 2) throw Error(Errc::InvalidSequence, "malformed line '" + lines[i] + "'");
      const auto n = parse_integer(tokens[0]);
      if (n != seq.size() + 1)
        throw Error(Errc::InvalidSequence, "expected index " + std::to_string(seq.size() + 1) + ", got '" +
                                               tokens[0] + "'");
      seq.values.push_back(parse_integer(tokens[1]));
    }
    return seq;
  }
  for (const auto& l : lines)
    for (const auto& t : split_tokens(l, ", \t")) seq.values.push_back(parse_integer(t));
  return seq;
}

} // namespace permclass
