#pragma once

// JSON documents: group descriptors, grading specs and certificates.
//
// Grading document:
//   {"group": {"type": "cyclic", "order": 4}, "n": 2, "tuple": ["0", "1"]}
//   group types: cyclic{order} | integers | product{factors} | cayley{names, table}
//
// Certificate document (format "gradid-certificate", version 1):
//   equivalence: {"kind": "equivalence", "start": word, "end": word,
//                 "steps": [{"rule": "neutral-swap" | "conjugate-swap", "cuts": [...]}]}
//   membership:  {"kind": "membership", "field": "Q" | "fp:<p>", "input": polynomial,
//                 "pairings": [{"keep": i, "drop": j, "keep_word": word, "drop_word": word,
//                               "steps": [...]}],
//                 "residual": [{"word": word, "coefficient": "c",
//                               "justification": "empty-lset" | "non-support", "letter": l}]}
//   membership-set: {"kind": "membership-set", "field": ..., "input": polynomial,
//                    "components": [membership, ...]}   one per multihomogeneous component

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gradid/error.hpp"
#include "gradid/freealg.hpp"
#include "gradid/grading.hpp"
#include "gradid/groups.hpp"
#include "gradid/rewrite.hpp"

namespace gradid::io {

using nlohmann::json;

inline constexpr const char* certificate_format = "gradid-certificate";
inline constexpr int certificate_version = 1;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what(), e.byte);
  }
}

namespace detail {

inline const json& require(const json& doc, const char* key, const std::string& context) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(context + ": missing key \"" + key + "\"");
  return doc.at(key);
}

inline std::string literal_of(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw Error("element literal must be a string or an integer");
}

}  // namespace detail

inline GroupDescriptor group_from_json(const json& doc) {
  const std::string type = detail::require(doc, "type", "group").get<std::string>();
  if (type == "cyclic") {
    return GroupDescriptor::cyclic(detail::require(doc, "order", "cyclic group").get<std::int64_t>());
  }
  if (type == "integers") return GroupDescriptor::integers();
  if (type == "product") {
    std::vector<GroupDescriptor> factors;
    for (const auto& f : detail::require(doc, "factors", "product group")) factors.push_back(group_from_json(f));
    return GroupDescriptor::product(std::move(factors));
  }
  if (type == "cayley") {
    const auto names = detail::require(doc, "names", "cayley group").get<std::vector<std::string>>();
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : detail::require(doc, "table", "cayley group")) {
      std::vector<std::size_t> out;
      for (const auto& cell : row) {
        if (cell.is_number_integer()) {
          const auto v = cell.get<std::int64_t>();
          if (v < 0) throw DomainError("negative label index in multiplication table");
          out.push_back(static_cast<std::size_t>(v));
        } else {
          const auto label = cell.get<std::string>();
          auto it = std::find(names.begin(), names.end(), label);
          if (it == names.end()) throw DomainError("unknown label '" + label + "' in multiplication table");
          out.push_back(static_cast<std::size_t>(it - names.begin()));
        }
      }
      table.push_back(std::move(out));
    }
    return GroupDescriptor::cayley(names, std::move(table));
  }
  throw Error("unknown group type \"" + type + "\"");
}

inline json group_to_json(const GroupDescriptor& group) {
  switch (group.kind()) {
    case GroupDescriptor::Kind::cyclic:
      return {{"type", "cyclic"}, {"order", group.cyclic_order()}};
    case GroupDescriptor::Kind::integers:
      return {{"type", "integers"}};
    case GroupDescriptor::Kind::product: {
      json factors = json::array();
      for (const auto& f : group.factors()) factors.push_back(group_to_json(f));
      return {{"type", "product"}, {"factors", factors}};
    }
    case GroupDescriptor::Kind::cayley:
      return {{"type", "cayley"}, {"names", group.names()}, {"table", group.table()}};
  }
  return {};
}

inline GradingSpec grading_from_json(const json& doc) {
  GroupDescriptor group = group_from_json(detail::require(doc, "group", "grading"));
  const auto& tuple_doc = detail::require(doc, "tuple", "grading");
  if (!tuple_doc.is_array()) throw Error("grading: \"tuple\" must be an array");
  std::vector<GroupElement> tuple;
  for (const auto& entry : tuple_doc) tuple.push_back(group.parse_element(detail::literal_of(entry)));
  if (doc.contains("n") && doc.at("n").get<std::size_t>() != tuple.size()) {
    throw DomainError("grading: \"n\" does not match the tuple length");
  }
  return GradingSpec(std::move(group), std::move(tuple));
}

inline GradingSpec load_grading(const std::string& path) {
  return grading_from_json(parse_json(read_file(path), path));
}

inline json grading_to_json(const GradingSpec& spec) {
  json tuple = json::array();
  for (const auto& g : spec.tuple()) tuple.push_back(spec.group().format_element(g));
  return {{"group", group_to_json(spec.group())}, {"n", spec.n()}, {"tuple", tuple}};
}

inline json steps_to_json(const std::vector<RewriteStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) out.push_back({{"rule", rule_name(s.rule)}, {"cuts", s.cuts}});
  return out;
}

inline std::vector<RewriteStep> steps_from_json(const json& doc) {
  std::vector<RewriteStep> out;
  for (const auto& s : doc) {
    const auto rule = detail::require(s, "rule", "step").get<std::string>();
    RewriteStep step;
    if (rule == "neutral-swap") {
      step.rule = RewriteRule::neutral_swap;
    } else if (rule == "conjugate-swap") {
      step.rule = RewriteRule::conjugate_swap;
    } else {
      throw Error("unknown rewrite rule \"" + rule + "\"");
    }
    step.cuts = detail::require(s, "cuts", "step").get<std::vector<std::size_t>>();
    out.push_back(std::move(step));
  }
  return out;
}

inline json to_json(const GroupDescriptor& group, const EquivalenceCertificate& cert) {
  return {{"format", certificate_format},
          {"version", certificate_version},
          {"kind", "equivalence"},
          {"start", format_word(group, cert.start)},
          {"end", format_word(group, cert.end)},
          {"steps", steps_to_json(cert.steps)}};
}

inline json to_json(const GroupDescriptor& group, const MembershipCertificate& cert) {
  json pairings = json::array();
  for (const auto& p : cert.pairings) {
    pairings.push_back({{"keep", p.keep_index},
                        {"drop", p.drop_index},
                        {"keep_word", format_word(group, p.keep)},
                        {"drop_word", format_word(group, p.drop)},
                        {"steps", steps_to_json(p.certificate.steps)}});
  }
  json residual = json::array();
  for (const auto& r : cert.residual) {
    json entry = {{"word", format_word(group, r.word)},
                  {"coefficient", cert.input.field().format(r.coefficient)},
                  {"justification", justification_name(r.justification)}};
    if (r.justification == Justification::non_support) entry["letter"] = r.letter;
    residual.push_back(entry);
  }
  return {{"format", certificate_format},
          {"version", certificate_version},
          {"kind", "membership"},
          {"field", cert.input.field().name()},
          {"input", format_polynomial(group, cert.input)},
          {"pairings", pairings},
          {"residual", residual}};
}

inline void check_header(const json& doc, const char* kind) {
  if (detail::require(doc, "format", "certificate").get<std::string>() != certificate_format) {
    throw Error("not a gradid certificate");
  }
  if (detail::require(doc, "version", "certificate").get<int>() != certificate_version) {
    throw Error("unsupported certificate version");
  }
  if (detail::require(doc, "kind", "certificate").get<std::string>() != kind) {
    throw Error(std::string("expected a ") + kind + " certificate");
  }
}

inline std::string certificate_kind(const json& doc) {
  return detail::require(doc, "kind", "certificate").get<std::string>();
}

inline EquivalenceCertificate equivalence_from_json(const GroupDescriptor& group, const json& doc) {
  check_header(doc, "equivalence");
  EquivalenceCertificate cert;
  cert.start = parse_word(detail::require(doc, "start", "certificate").get<std::string>(), group);
  cert.steps = steps_from_json(detail::require(doc, "steps", "certificate"));
  cert.end = parse_word(detail::require(doc, "end", "certificate").get<std::string>(), group);
  return cert;
}

inline MembershipCertificate membership_from_json(const GroupDescriptor& group, const json& doc) {
  check_header(doc, "membership");
  const Field field = Field::parse(detail::require(doc, "field", "certificate").get<std::string>());
  MembershipCertificate cert{
      parse_polynomial(detail::require(doc, "input", "certificate").get<std::string>(), group, field), {}, {}};
  for (const auto& p : detail::require(doc, "pairings", "certificate")) {
    Pairing pairing;
    pairing.keep_index = detail::require(p, "keep", "pairing").get<std::size_t>();
    pairing.drop_index = detail::require(p, "drop", "pairing").get<std::size_t>();
    pairing.keep = parse_word(detail::require(p, "keep_word", "pairing").get<std::string>(), group);
    pairing.drop = parse_word(detail::require(p, "drop_word", "pairing").get<std::string>(), group);
    pairing.certificate = {pairing.drop, steps_from_json(detail::require(p, "steps", "pairing")), pairing.keep};
    cert.pairings.push_back(std::move(pairing));
  }
  for (const auto& r : detail::require(doc, "residual", "certificate")) {
    ResidualTerm term;
    term.word = parse_word(detail::require(r, "word", "residual").get<std::string>(), group);
    const auto coefficient = detail::require(r, "coefficient", "residual").get<std::string>();
    std::size_t pos = 0;
    term.coefficient = field.parse_coefficient(coefficient, pos);
    if (pos != coefficient.size()) throw ParseError("malformed residual coefficient", pos);
    const auto just = detail::require(r, "justification", "residual").get<std::string>();
    if (just == "empty-lset") {
      term.justification = Justification::empty_lset;
    } else if (just == "non-support") {
      term.justification = Justification::non_support;
      term.letter = detail::require(r, "letter", "residual").get<std::size_t>();
    } else {
      throw Error("unknown justification \"" + just + "\"");
    }
    cert.residual.push_back(std::move(term));
  }
  return cert;
}

inline json to_json(const GroupDescriptor& group, const MembershipSetCertificate& set) {
  json components = json::array();
  for (const auto& c : set.components) components.push_back(to_json(group, c));
  return {{"format", certificate_format},
          {"version", certificate_version},
          {"kind", "membership-set"},
          {"field", set.input.field().name()},
          {"input", format_polynomial(group, set.input)},
          {"components", components}};
}

/// Accepts a membership-set document or a single membership certificate.
inline MembershipSetCertificate membership_set_from_json(const GroupDescriptor& group, const json& doc) {
  if (certificate_kind(doc) == "membership") {
    MembershipCertificate single = membership_from_json(group, doc);
    GradedPolynomial input = single.input;
    return {std::move(input), {std::move(single)}};
  }
  check_header(doc, "membership-set");
  const Field field = Field::parse(detail::require(doc, "field", "certificate").get<std::string>());
  MembershipSetCertificate set{
      parse_polynomial(detail::require(doc, "input", "certificate").get<std::string>(), group, field), {}};
  for (const auto& c : detail::require(doc, "components", "certificate")) {
    set.components.push_back(membership_from_json(group, c));
    if (!(set.components.back().input.field() == field)) throw Error("component certificate uses a different field");
  }
  return set;
}

}  // namespace gradid::io
