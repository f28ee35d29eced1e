// gradid: command-line front end for graded-identity computations on
// elementary gradings of matrix algebras.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "gradid/gradid.hpp"

namespace {

using namespace gradid;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string spec_path;
  std::optional<std::string> field;
  bool json = false;
  bool strict = false;
  bool minimal = false;
  std::size_t max_len = 0;
  std::string seq;
  std::string poly_path;
  std::string word_m_path;
  std::string word_n_path;
  std::string cert_path;
  std::string out_path;
};

Field selected_field(const Options& opt) { return opt.field ? Field::parse(*opt.field) : Field::rationals(); }

std::string trimmed(std::string text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

GradedPolynomial load_polynomial(const std::string& path, const GradingSpec& spec, const Field& field) {
  return parse_polynomial(trimmed(io::read_file(path)), spec.group(), field);
}

Word load_word(const std::string& path, const GradingSpec& spec) {
  return parse_word(trimmed(io::read_file(path)), spec.group());
}

void emit_json(const json& doc) { std::cout << doc.dump(2) << '\n'; }

void write_document(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    emit_json(doc);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << doc.dump(2) << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json matrix_json(const GroupDescriptor& group, const GenericMatrix& m) {
  json entries = json::array();
  for (const auto& [pos, value] : m.entries()) {
    entries.push_back({{"row", pos.first}, {"column", pos.second}, {"entry", value.format(group)}});
  }
  return entries;
}

int cmd_grading_info(const Options& opt) {
  const GradingSpec spec = io::load_grading(opt.spec_path);
  const auto& group = spec.group();
  const auto degrees = support(spec);
  const auto report = diagonal_neutral_report(spec);
  const auto blocks = neutral_block_structure(spec);

  if (opt.json) {
    json dims = json::array();
    for (const auto& g : degrees) {
      dims.push_back({{"degree", group.format_element(g)}, {"dimension", component_dimension(spec, g)}});
    }
    json tuple = json::array();
    for (const auto& g : spec.tuple()) tuple.push_back(group.format_element(g));
    json support_json = json::array();
    for (const auto& g : degrees) support_json.push_back(group.format_element(g));
    emit_json({{"group", group.describe()},
               {"n", spec.n()},
               {"tuple", tuple},
               {"support", support_json},
               {"components", dims},
               {"distinct_entries", report.distinct},
               {"neutral_is_diagonal", report.neutral_diagonal},
               {"neutral_commutator_identity", report.commutator_identity},
               {"neutral_blocks", blocks.sizes},
               {"neutral_dimension", blocks.dimension}});
    return kExitOk;
  }
  std::cout << "group: " << group.describe() << '\n'
            << "n: " << spec.n() << '\n'
            << "tuple: " << group.format_sequence(spec.tuple()) << '\n'
            << "support: " << group.format_sequence(degrees) << '\n'
            << "components:\n";
  for (const auto& g : degrees) std::cout << "  " << group.format_element(g) << ": " << component_dimension(spec, g) << '\n';
  std::cout << "distinct entries: " << yes_no(report.distinct) << '\n'
            << "neutral component is diagonal: " << yes_no(report.neutral_diagonal) << '\n'
            << "neutral commutator identity: " << yes_no(report.commutator_identity) << '\n'
            << "neutral blocks:";
  for (std::size_t i = 0; i < blocks.sizes.size(); ++i) std::cout << (i ? "," : " ") << blocks.sizes[i];
  std::cout << " (dimension " << blocks.dimension << ")\n";
  return kExitOk;
}

int cmd_lset(const Options& opt) {
  const GradingSpec spec = io::load_grading(opt.spec_path);
  const auto& group = spec.group();
  const auto hseq = group.parse_sequence(opt.seq);
  if (hseq.empty()) throw PreconditionError("--seq must name at least one degree");
  const auto result = l_set(spec, hseq);
  if (opt.json) {
    json chains = json::array();
    for (const auto& c : result.chains) chains.push_back({{"start", c.start}, {"indices", c.indices}});
    emit_json({{"sequence", group.format_sequence(hseq)}, {"members", result.members()}, {"chains", chains}});
    return kExitOk;
  }
  std::cout << "sequence: " << group.format_sequence(hseq) << '\n' << "L: {";
  const auto members = result.members();
  for (std::size_t i = 0; i < members.size(); ++i) std::cout << (i ? "," : "") << members[i];
  std::cout << "}\n";
  for (const auto& c : result.chains) {
    std::cout << "  " << c.start << ":";
    for (std::size_t i = 0; i < c.indices.size(); ++i) std::cout << (i ? "," : " ") << c.indices[i];
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_eval(const Options& opt) {
  const GradingSpec spec = io::load_grading(opt.spec_path);
  const GradedPolynomial f = load_polynomial(opt.poly_path, spec, selected_field(opt));
  const GenericMatrix value = evaluate(spec, f);
  if (opt.json) {
    emit_json({{"polynomial", format_polynomial(spec.group(), f)}, {"entries", matrix_json(spec.group(), value)}});
  } else {
    std::cout << value.format(spec.group()) << '\n';
  }
  return kExitOk;
}

int cmd_is_identity(const Options& opt) {
  const GradingSpec spec = io::load_grading(opt.spec_path);
  const GradedPolynomial f = load_polynomial(opt.poly_path, spec, selected_field(opt));
  spec.require_distinct_entries();
  const GenericMatrix value = evaluate(spec, f);
  const bool identity = value.is_zero();
  if (opt.json) {
    json doc = {{"identity", identity}, {"field", f.field().name()}};
    if (!identity) {
      const auto& [pos, entry] = *value.entries().begin();
      doc["witness"] = {{"row", pos.first}, {"column", pos.second}, {"entry", entry.format(spec.group())}};
    }
    emit_json(doc);
  } else if (identity) {
    std::cout << "identity\n";
  } else {
    const auto& [pos, entry] = *value.entries().begin();
    std::cout << "not an identity\nwitness (" << pos.first << "," << pos.second
              << "): " << entry.format(spec.group()) << '\n';
  }
  return !identity && opt.strict ? kExitNegative : kExitOk;
}

int cmd_enumerate(const Options& opt) {
  const GradingSpec spec = io::load_grading(opt.spec_path);
  const auto& group = spec.group();
  const auto unfiltered = enumerate_monomial_identities(spec, opt.max_len, false);
  std::vector<DegreeSequence> listed = unfiltered;
  if (opt.minimal) {
    const PositionAutomaton automaton(spec);
    listed.clear();
    for (const auto& seq : unfiltered) {
      if (is_minimal_identity(automaton, seq)) listed.push_back(seq);
    }
  }
  const auto bound = theoretical_bound(spec);
  if (opt.json) {
    json seqs = json::array();
    for (const auto& s : listed) seqs.push_back(group.format_sequence(s));
    json doc = {{"max_len", opt.max_len},
                {"minimal", opt.minimal},
                {"sequences", seqs},
                {"listed", listed.size()},
                {"unfiltered", unfiltered.size()},
                {"n0", bound.n0.str()},
                {"theorem_bound", bound.theorem_bound.str()}};
    emit_json(doc);
    return kExitOk;
  }
  for (const auto& s : listed) std::cout << group.format_sequence(s) << '\n';
  std::cout << "# listed=" << listed.size() << " unfiltered=" << unfiltered.size() << " max_len=" << opt.max_len
            << (opt.minimal ? " filter=minimal" : " filter=none") << " n0=" << bound.n0.str()
            << " theorem_bound=" << bound.theorem_bound.str() << '\n';
  return kExitOk;
}

int cmd_shortest(const Options& opt) {
  const GradingSpec spec = io::load_grading(opt.spec_path);
  const auto result = shortest_monomial_identity(spec);
  if (opt.json) {
    json doc = {{"exists", result.has_value()}};
    if (result) {
      doc["length"] = result->length;
      doc["witness"] = spec.group().format_sequence(result->witness);
    }
    emit_json(doc);
  } else if (result) {
    std::cout << "length " << result->length << ": " << spec.group().format_sequence(result->witness) << '\n';
  } else {
    std::cout << "none: no word over the support is a monomial identity\n";
  }
  return !result && opt.strict ? kExitNegative : kExitOk;
}

int cmd_bounds(const Options& opt) {
  const GradingSpec spec = io::load_grading(opt.spec_path);
  const auto bound = theoretical_bound(spec);
  if (opt.json) {
    emit_json({{"support_size", bound.support_size.str()},
               {"n", spec.n()},
               {"n0", bound.n0.str()},
               {"theorem_bound", bound.theorem_bound.str()}});
  } else {
    std::cout << "support size: " << bound.support_size.str() << '\n'
              << "n0: " << bound.n0.str() << '\n'
              << "theorem bound: " << bound.theorem_bound.str() << '\n';
  }
  return kExitOk;
}

int cmd_equiv(const Options& opt) {
  const GradingSpec spec = io::load_grading(opt.spec_path);
  const Word m = load_word(opt.word_m_path, spec);
  const Word n = load_word(opt.word_n_path, spec);
  const EquivalenceCertificate cert = derive_equivalence(spec, m, n);
  write_document(io::to_json(spec.group(), cert), opt.out_path);
  if (!opt.out_path.empty()) {
    std::cout << "certificate: " << cert.steps.size() << " steps written to " << opt.out_path << '\n';
  }
  return kExitOk;
}

int cmd_certify(const Options& opt) {
  const GradingSpec spec = io::load_grading(opt.spec_path);
  const GradedPolynomial f = load_polynomial(opt.poly_path, spec, selected_field(opt));
  spec.require_distinct_entries();
  MembershipSetCertificate set{f, {}};
  for (const auto& component : multihomogeneous_components(f)) {
    const auto outcome = certify_membership(spec, component);
    if (const auto* witness = std::get_if<NonIdentityWitness>(&outcome)) {
      const std::string entry = witness->entry.format(spec.group());
      if (opt.json) {
        emit_json({{"identity", false},
                   {"component", format_polynomial(spec.group(), component)},
                   {"witness",
                    {{"row", witness->position.first}, {"column", witness->position.second}, {"entry", entry}}}});
      } else {
        std::cout << "not an identity\ncomponent: " << format_polynomial(spec.group(), component) << "\nwitness ("
                  << witness->position.first << "," << witness->position.second << "): " << entry << '\n';
      }
      return opt.strict ? kExitNegative : kExitOk;
    }
    set.components.push_back(std::get<MembershipCertificate>(outcome));
  }
  write_document(io::to_json(spec.group(), set), opt.out_path);
  if (!opt.out_path.empty()) {
    std::cout << "certified: " << set.components.size() << " multihomogeneous components, written to " << opt.out_path
              << '\n';
  }
  return kExitOk;
}

int cmd_check_cert(const Options& opt) {
  const GradingSpec spec = io::load_grading(opt.spec_path);
  const json doc = io::parse_json(io::read_file(opt.cert_path), opt.cert_path);
  const std::string kind = io::certificate_kind(doc);

  CheckResult result;
  std::string summary;
  if (kind == "equivalence") {
    const auto cert = io::equivalence_from_json(spec.group(), doc);
    spec.require_distinct_entries();
    result = check_equivalence_certificate(spec, cert);
    summary = std::to_string(cert.steps.size()) + " steps";
  } else {
    spec.require_distinct_entries();
    const auto set = io::membership_set_from_json(spec.group(), doc);
    if (opt.field && !(Field::parse(*opt.field) == set.input.field())) {
      throw DomainError("--field does not match the certificate field " + set.input.field().name());
    }
    if (!opt.poly_path.empty()) {
      const GradedPolynomial expected = load_polynomial(opt.poly_path, spec, set.input.field());
      if (!(expected == set.input)) result = CheckResult::failure("certificate input differs from the polynomial file");
    }
    if (result) result = check_membership_set(spec, set);
    summary = std::to_string(set.components.size()) + " components";
  }

  if (opt.json) {
    json out = {{"valid", result.ok}, {"kind", kind}};
    if (!result.ok) {
      out["reason"] = result.reason;
      if (result.failed_step) out["failed_step"] = *result.failed_step;
    }
    emit_json(out);
  } else if (result.ok) {
    std::cout << "valid " << kind << " certificate (" << summary << ")\n";
  } else {
    std::cout << "invalid " << kind << " certificate: " << result.reason;
    if (result.failed_step) std::cout << " (step " << *result.failed_step << ")";
    std::cout << '\n';
  }
  return !result.ok && opt.strict ? kExitNegative : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded polynomial identities of matrix algebras with elementary gradings"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--field", opt.field, "Coefficient field: Q (default) or fp:<p>");
  app.add_flag("--json", opt.json, "Machine-readable output");

  auto* grading = app.add_subcommand("grading", "Grading queries");
  grading->require_subcommand(1);
  auto* info = grading->add_subcommand("info", "Support, component dimensions and neutral-component structure");
  info->add_option("spec", opt.spec_path, "Grading document")->required();

  auto* lset = app.add_subcommand("lset", "Surviving row chains for a degree sequence");
  lset->add_option("spec", opt.spec_path, "Grading document")->required();
  lset->add_option("--seq", opt.seq, "Comma-separated degrees")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial on generic matrices");
  eval->add_option("spec", opt.spec_path, "Grading document")->required();
  eval->add_option("poly", opt.poly_path, "Polynomial file")->required();

  auto* is_identity = app.add_subcommand("is-identity", "Decide whether a polynomial is a graded identity");
  is_identity->add_option("spec", opt.spec_path, "Grading document")->required();
  is_identity->add_option("poly", opt.poly_path, "Polynomial file")->required();
  is_identity->add_flag("--strict", opt.strict, "Exit 1 when the answer is negative");

  auto* enumerate = app.add_subcommand("enumerate-monomials", "List monomial identities by degree sequence");
  enumerate->add_option("spec", opt.spec_path, "Grading document")->required();
  enumerate->add_option("--max-len", opt.max_len, "Maximum sequence length")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--minimal", opt.minimal, "Keep only minimal sequences");

  auto* shortest = app.add_subcommand("shortest-identity", "Exact shortest monomial identity");
  shortest->add_option("spec", opt.spec_path, "Grading document")->required();
  shortest->add_flag("--strict", opt.strict, "Exit 1 when no monomial identity exists");

  auto* bounds = app.add_subcommand("bounds", "Length bounds for the monomial part of the basis");
  bounds->add_option("spec", opt.spec_path, "Grading document")->required();

  auto* equiv = app.add_subcommand("equiv", "Rewrite certificate turning word N into word M");
  equiv->add_option("spec", opt.spec_path, "Grading document")->required();
  equiv->add_option("m", opt.word_m_path, "File with the target word")->required();
  equiv->add_option("n", opt.word_n_path, "File with the source word")->required();
  equiv->add_option("--out", opt.out_path, "Write the certificate here instead of stdout");

  auto* certify = app.add_subcommand("certify", "Membership certificate for a graded identity");
  certify->add_option("spec", opt.spec_path, "Grading document")->required();
  certify->add_option("poly", opt.poly_path, "Polynomial file")->required();
  certify->add_option("--out", opt.out_path, "Write the certificate here instead of stdout");
  certify->add_flag("--strict", opt.strict, "Exit 1 when the polynomial is not an identity");

  auto* check = app.add_subcommand("check-cert", "Verify a certificate");
  check->add_option("spec", opt.spec_path, "Grading document")->required();
  check->add_option("cert", opt.cert_path, "Certificate document")->required();
  check->add_option("--poly", opt.poly_path, "Polynomial the membership certificate must be about");
  check->add_flag("--strict", opt.strict, "Exit 1 when the certificate is invalid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_grading_info(opt);
    if (lset->parsed()) return cmd_lset(opt);
    if (eval->parsed()) return cmd_eval(opt);
    if (is_identity->parsed()) return cmd_is_identity(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (shortest->parsed()) return cmd_shortest(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
    if (equiv->parsed()) return cmd_equiv(opt);
    if (certify->parsed()) return cmd_certify(opt);
    if (check->parsed()) return cmd_check_cert(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
