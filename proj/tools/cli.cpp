#include "cli.hpp"

#include "permclass/antichain.hpp"
#include "permclass/enumeration.hpp"
#include "permclass/growth.hpp"
#include "permclass/sequence_io.hpp"
#include "permclass/structure.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace permclass::cli {

namespace {

// Bad command-line text: reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Perm perm_arg(const std::string& text) {
  try {
    return parse_perm(text);
  } catch (const Error& e) {
    throw UsageError(std::string("unparseable permutation '") + text + "': " + e.what());
  }
}

std::vector<Perm> perm_list(const std::string& text, const std::string& sep) {
  if (sep.empty()) throw UsageError("--sep must not be empty");
  std::vector<Perm> out;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    const auto token = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (token.find_first_not_of(" \t") == std::string::npos)
      throw UsageError("empty permutation in list '" + text + "'");
    out.push_back(perm_arg(token));
    if (end == std::string::npos) break;
    start = end + sep.size();
  }
  return out;
}

std::size_t index_arg(const std::string& token) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (token.empty() || pos != token.size() || token[0] == '-') throw UsageError("bad index '" + token + "'");
  return static_cast<std::size_t>(v);
}

// "i" or "lo..hi"; returns every odd index >= 7 in range, or throws InvalidIndex.
std::vector<std::size_t> mu_indices(const std::string& spec) {
  const auto dots = spec.find("..");
  if (dots == std::string::npos) {
    const auto i = index_arg(spec);
    mu(i); // validates
    return {i};
  }
  const auto lo = index_arg(spec.substr(0, dots));
  const auto hi = index_arg(spec.substr(dots + 2));
  std::vector<std::size_t> out;
  for (auto i = std::max<std::size_t>(lo, 7); i <= hi; ++i)
    if (i % 2 == 1) out.push_back(i);
  if (out.empty()) throw Error(Errc::InvalidIndex, "no odd index >= 7 in range '" + spec + "'");
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string interval_text(const Interval& iv) {
  return "[" + std::to_string(iv.first) + "," + std::to_string(iv.last) + "]";
}

std::string blocks_text(const Decomposition& d) {
  std::vector<std::string> parts;
  for (const auto& b : d.blocks) parts.push_back(to_string(b));
  return join(parts, " | ");
}

std::string poly_text(const IntPoly& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    const mpz_class mag = abs(p[k]);
    if (out.empty())
      out += p[k] < 0 ? "-" : "";
    else
      out += p[k] < 0 ? " - " : " + ";
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string number_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const auto basis = perm_list(cfg.avoid, cfg.separator);
  const auto format = parse_format(cfg.format);
  const auto counts = count_avoiders(basis, cfg.max_n);
  std::vector<std::string> names;
  for (const auto& b : basis) names.push_back(to_string(b));
  if (cfg.output.empty()) {
    write_sequence(out, counts, format, names);
  } else {
    std::ofstream file(cfg.output);
    if (!file) throw UsageError("cannot open output file '" + cfg.output + "'");
    write_sequence(file, counts, format, names);
  }
  return kExitOk;
}

int cmd_contains(const RunConfig& cfg, std::ostream& out) {
  const auto pat = perm_arg(cfg.positional.at(0));
  const auto host = perm_arg(cfg.positional.at(1));
  const auto emb = find_embedding(pat, host);
  if (!emb) {
    out << "no\n";
    return kExitOk;
  }
  std::vector<std::string> pos;
  for (auto p : *emb) pos.push_back(std::to_string(p));
  out << "yes (positions " << join(pos, ",") << ")\n";
  return kExitOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const auto p = perm_arg(cfg.positional.at(0));
  out << "up: " << blocks_text(up_decomposition(p)) << '\n';
  out << "down: " << blocks_text(down_decomposition(p)) << '\n';
  if (cfg.k) {
    std::vector<std::string> parts;
    for (const auto& iv : k_decomposition(p, *cfg.k)) parts.push_back(interval_text(iv));
    out << "k=" << *cfg.k << ": " << join(parts, " ") << '\n';
  }
  return kExitOk;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
  const auto p = perm_arg(cfg.positional.at(0));
  const auto hp = h_plus(p);
  const auto hm = h_minus(p);
  out << "length " << p.size() << '\n';
  out << "alternating " << (is_alternating(p) ? "yes" : "no") << '\n';
  out << "al " << al(p) << '\n';
  out << "h+ " << hp << '\n';
  out << "h- " << hm << '\n';
  // s_k is 1 once k exceeds min(h+, h-).
  for (std::size_t k = 1; k <= std::min(hp, hm) + 1; ++k) {
    const auto s = s_k(p, k);
    out << "s_" << k << ' ' << (s.is_unbounded() ? std::string("inf") : std::to_string(s.value())) << '\n';
  }
  return kExitOk;
}

int cmd_mu(const RunConfig& cfg, std::ostream& out) {
  for (auto i : mu_indices(cfg.positional.at(0))) out << "mu_" << i << ' ' << to_string(mu(i)) << '\n';
  return kExitOk;
}

int cmd_antichain(const RunConfig& cfg, std::ostream& out) {
  std::vector<Perm> members;
  std::vector<std::size_t> mus;
  if (!cfg.perms.empty()) members = perm_list(cfg.perms, cfg.separator);
  if (!cfg.mu_range.empty()) {
    mus = mu_indices(cfg.mu_range);
    for (auto i : mus) members.push_back(mu(i));
  }
  if (cfg.with_short_basis) {
    const auto four = four_basis();
    members.insert(members.begin(), four.begin(), four.end());
  }
  if (members.empty()) throw UsageError("antichain needs --perms, --mu or --with-short-basis");

  const auto report = check_antichain(members);
  if (report.is_antichain) {
    out << "antichain: yes (" << report.members << " permutations, " << report.pairs_checked
        << " pairs checked)\n";
  } else {
    out << "antichain: no (" << to_string(report.witness->first) << " is contained in "
        << to_string(report.witness->second) << ", " << report.pairs_checked << " pairs checked)\n";
  }
  if (cfg.graph_certify) {
    for (auto i : mus) {
      const auto cert = certify_mu(i);
      out << "graph certificate mu_" << i << ": "
          << (!cert.is_tree ? "not a tree"
                            : cert.matches_double_fork ? "tree isomorphic to F_" + std::to_string(i)
                                                       : "tree not isomorphic to F_" + std::to_string(i))
          << '\n';
    }
  }
  return kExitOk;
}

int cmd_basis(const RunConfig& cfg, std::ostream& out) {
  if (cfg.closure_of.empty() == cfg.avoid.empty())
    throw UsageError("basis needs exactly one of --closure-of or --avoid");
  const auto spec = cfg.closure_of.empty() ? ClassSpec::avoiding(perm_list(cfg.avoid, cfg.separator))
                                           : ClassSpec::closure_of(perm_list(cfg.closure_of, cfg.separator));
  for (const auto& b : basis_up_to(spec, cfg.max_len)) out << (b.empty() ? "(empty)" : to_string(b)) << '\n';
  return kExitOk;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
  std::string text = cfg.seq;
  std::error_code ec;
  if (std::filesystem::is_regular_file(cfg.seq, ec)) {
    std::ifstream in(cfg.seq);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  CountSeq seq;
  try {
    seq = read_sequence(text);
  } catch (const Error& e) {
    throw UsageError(std::string("unreadable sequence: ") + e.what());
  }
  const auto r = fit_recurrence(seq, cfg.max_order);
  if (!r) {
    out << "no fit up to order " << cfg.max_order << " (" << seq.size() << " terms)\n";
    return kExitOk;
  }
  std::vector<std::string> cs;
  std::vector<std::string> init;
  for (const auto& c : r->coefficients) cs.push_back(c.get_str());
  for (const auto& u : r->initial) init.push_back(u.get_str());
  const auto gf = gf_from_recurrence(*r);
  out << "order " << r->order() << '\n';
  out << "coefficients " << join(cs, ",") << '\n';
  out << "initial " << join(init, ",") << '\n';
  out << "gf (" << poly_text(gf.numerator) << ") / (" << poly_text(gf.denominator) << ")\n";
  return kExitOk;
}

int cmd_growth(const RunConfig& cfg, std::ostream& out) {
  if (cfg.recurrence.empty() == !cfg.alpha.has_value())
    throw UsageError("growth needs exactly one of --recurrence or --alpha");
  IntPolynomial poly = cfg.alpha ? alpha_poly(*cfg.alpha) : IntPolynomial({1});
  if (cfg.alpha) {
    if (*cfg.alpha < 2) throw Error(Errc::InvalidIndex, "alpha needs i >= 2, got " + std::to_string(*cfg.alpha));
  } else {
    LinearRecurrence r;
    std::size_t start = 0;
    while (true) {
      const auto end = cfg.recurrence.find(',', start);
      const auto token = cfg.recurrence.substr(start, end == std::string::npos ? std::string::npos : end - start);
      mpz_class c;
      if (token.empty() || token.find_first_not_of("-0123456789") != std::string::npos || c.set_str(token, 10) != 0)
        throw UsageError("bad recurrence coefficient '" + token + "'");
      r.coefficients.emplace_back(c);
      r.initial.emplace_back(0);
      if (end == std::string::npos) break;
      start = end + 1;
    }
    poly = char_poly(r);
  }
  const auto root = dominant_root(poly, cfg.tol);
  out << format_root(root.value) << '\n';
  out << "polynomial " << poly.to_string() << '\n';
  out << "bracket [" << number_text(root.lo.get_d()) << ", " << number_text(root.hi.get_d()) << "]\n";
  out << "tol " << number_text(cfg.tol) << '\n';
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Permutation classes: containment, structure, antichains, enumeration, growth rates", "permclass"};
  app.require_subcommand(1);

  auto add_sep = [&](CLI::App* sub) {
    sub->add_option("--sep", cfg.separator, "Separator between permutations in a list (default ',')");
  };

  auto* count = app.add_subcommand("count", "Count avoiders of a basis for n = 1..max-n");
  count->add_option("--avoid", cfg.avoid, "Basis, e.g. 123,3214")->required();
  count->add_option("--max-n", cfg.max_n, "Largest length")->required()->check(CLI::PositiveNumber);
  count->add_option("--format", cfg.format, "table|json|csv|bfile")
      ->check(CLI::IsMember({"table", "json", "csv", "bfile"}));
  count->add_option("--output", cfg.output, "Write to this file instead of standard output");
  add_sep(count);

  auto* contains_cmd = app.add_subcommand("contains", "Test pattern containment");
  contains_cmd->add_option("pattern_host", cfg.positional, "Pattern and host")->expected(2)->required();

  auto* decompose = app.add_subcommand("decompose", "Up, down and k-decompositions");
  decompose->add_option("perm", cfg.positional, "Permutation")->expected(1)->required();
  decompose->add_option("--k", cfg.k, "Also print the k-decomposition");

  auto* stats = app.add_subcommand("stats", "al, h+, h- and s_k of a permutation");
  stats->add_option("perm", cfg.positional, "Permutation")->expected(1)->required();

  auto* mu_cmd = app.add_subcommand("mu", "Members of the antichain U");
  mu_cmd->add_option("index", cfg.positional, "i or lo..hi")->expected(1)->required();

  auto* antichain = app.add_subcommand("antichain", "Check pairwise incomparability");
  antichain->add_option("--perms", cfg.perms, "Permutation list");
  antichain->add_option("--mu", cfg.mu_range, "Include mu_i for odd i in lo..hi");
  antichain->add_flag("--with-short-basis", cfg.with_short_basis, "Include 123, 3214, 2143, 15432");
  antichain->add_flag("--graph-certify", cfg.graph_certify, "Check G(mu_i) against the double fork F_i");
  add_sep(antichain);

  auto* basis = app.add_subcommand("basis", "Minimal non-members up to a length");
  basis->add_option("--closure-of", cfg.closure_of, "Generators of the class");
  basis->add_option("--avoid", cfg.avoid, "Basis of the class");
  basis->add_option("--max-len", cfg.max_len, "Largest length")->required()->check(CLI::PositiveNumber);
  add_sep(basis);

  auto* fit = app.add_subcommand("fit", "Fit a constant-coefficient linear recurrence");
  fit->add_option("--seq", cfg.seq, "File (b-file, csv or list) or inline comma list")->required();
  fit->add_option("--max-order", cfg.max_order, "Largest order tried")->required()->check(CLI::PositiveNumber);

  auto* growth = app.add_subcommand("growth", "Dominant root of a characteristic polynomial");
  growth->add_option("--recurrence", cfg.recurrence, "Integer coefficients c_1,...,c_d");
  growth->add_option("--alpha", cfg.alpha, "Root of x^i - x^(i-1) - ... - 1");
  growth->add_option("--tol", cfg.tol, "Bracket width")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"permclass"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "permclass: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(cfg, out);
    if (contains_cmd->parsed()) return cmd_contains(cfg, out);
    if (decompose->parsed()) return cmd_decompose(cfg, out);
    if (stats->parsed()) return cmd_stats(cfg, out);
    if (mu_cmd->parsed()) return cmd_mu(cfg, out);
    if (antichain->parsed()) return cmd_antichain(cfg, out);
    if (basis->parsed()) return cmd_basis(cfg, out);
    if (fit->parsed()) return cmd_fit(cfg, out);
    if (growth->parsed()) return cmd_growth(cfg, out);
  } catch (const UsageError& e) {
    err << "permclass: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "permclass: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

} // namespace permclass::cli
