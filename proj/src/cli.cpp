#include "levelalg/cli.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "levelalg/betti.hpp"
#include "levelalg/binomial.hpp"
#include "levelalg/classifier.hpp"
#include "levelalg/hilbert.hpp"
#include "levelalg/monomial.hpp"
#include "levelalg/oracle.hpp"

namespace levelalg::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array kAllRules{Rule::Cancellation,  Rule::EqualWithNextSocle, Rule::EqualWrongShape,
                               Rule::EqualUnevenGrowth, Rule::FlatRiseGreen, Rule::FlatRiseSmall,
                               Rule::DropFlatSmall, Rule::Differentiable};

/// Raised after the diagnostic has been written; carries the exit code.
struct Failure {
  int code;
};

struct Options {
  bool json = false;
  bool quiet = false;

  Integer expand_n = 0;
  int expand_i = 0;
  bool expand_up = false;
  bool expand_green = false;

  std::string hvector;
  int lex_degree = -1;
  int betti_window = -1;
  bool verify = false;

  std::string lift_base;
  int flat_d = 0;
  int flat_ell = 0;

  int enum_socle = 0;
  Integer enum_cap = 0;
  bool enum_stats = false;
};

Json hvector_json(const HVector& h) { return Json(std::vector<Integer>(h.entries().begin(), h.entries().end())); }

Json certificate_json(const Certificate& cert) {
  Json q = Json::object();
  for (const auto& [name, value] : cert.quantities) q[name] = value;
  return Json{{"rule", rule_id(cert.rule)}, {"d", cert.d}, {"quantities", std::move(q)}};
}

std::string certificate_text(const Certificate& cert) {
  std::string line = std::string(rule_id(cert.rule)) + " d=" + std::to_string(cert.d);
  for (const auto& [name, value] : cert.quantities) line += " " + name + "=" + std::to_string(value);
  return line;
}

HVector read_hvector(const std::string& text) { return parse_hvector(text); }

HVector read_o_sequence(const std::string& text) {
  HVector h = read_hvector(text);
  if (auto v = check_o_sequence(h.entries())) throw InvalidHVector(v->message(), v);
  return h;
}

void cmd_expand(const Options& o, std::ostream& out) {
  if (o.expand_n < 0) throw std::invalid_argument("N must be non-negative");
  if (o.expand_i < 1) throw std::invalid_argument("I must be at least 1");
  const BinomialExpansion e = macaulay_expansion(o.expand_n, o.expand_i);
  if (o.json) {
    Json terms = Json::array();
    for (const auto& t : e.terms()) terms.push_back(Json{{"top", t.top}, {"bottom", t.bottom}});
    Json j{{"n", o.expand_n}, {"i", o.expand_i}, {"expansion", to_string(e)}, {"terms", std::move(terms)}};
    if (o.expand_up) j["macaulay_bound"] = shift(e, 1, 1);
    if (o.expand_green) j["green_bound"] = shift(e, -1, 0);
    out << j.dump(2) << '\n';
    return;
  }
  if (o.expand_up) {
    out << shift(e, 1, 1) << '\n';
  } else if (o.expand_green) {
    out << shift(e, -1, 0) << '\n';
  } else {
    out << to_string(e) << '\n';
  }
}

void cmd_validate(const Options& o, std::ostream& out) {
  const HVector h = read_hvector(o.hvector);
  const auto violation = check_o_sequence(h.entries());
  if (o.json) {
    Json j{{"hvector", hvector_json(h)}, {"o_sequence", !violation.has_value()}};
    if (violation) {
      j["violation"] = Json{{"index", violation->index},
                            {"value", violation->value},
                            {"bound", violation->bound},
                            {"message", violation->message()}};
    } else {
      j["socle_degree"] = h.socle_degree();
      j["differentiable"] = is_differentiable(h);
    }
    out << j.dump(2) << '\n';
  } else if (violation) {
    out << violation->message() << '\n';
  } else {
    out << "ok: O-sequence with socle degree " << h.socle_degree()
        << (is_differentiable(h) ? ", differentiable" : ", not differentiable") << '\n';
  }
  if (violation) throw Failure{kInvalidHVector};
}

void cmd_lex(const Options& o, std::ostream& out) {
  const HVector h = read_o_sequence(o.hvector);
  const MonomialIdeal lex = lex_segment_ideal(h);
  const auto& gens = lex.generators_by_degree();
  if (o.json) {
    Json by_degree = Json::object();
    for (const auto& [deg, list] : gens) {
      if (o.lex_degree >= 0 && deg != o.lex_degree) continue;
      Json names = Json::array();
      for (const auto& g : list) names.push_back(to_string(g));
      by_degree[std::to_string(deg)] = std::move(names);
    }
    out << Json{{"hvector", hvector_json(h)}, {"generators", std::move(by_degree)}}.dump(2) << '\n';
    return;
  }
  if (o.lex_degree < 0) {
    out << to_string(lex) << '\n';
    return;
  }
  out << "deg " << o.lex_degree << ":";
  const auto it = gens.find(o.lex_degree);
  if (it == gens.end()) {
    out << " (none)";
  } else {
    for (std::size_t i = 0; i < it->second.size(); ++i) out << (i == 0 ? " " : ", ") << to_string(it->second[i]);
  }
  out << '\n';
}

void cmd_betti(const Options& o, std::ostream& out) {
  const HVector h = read_o_sequence(o.hvector);
  if (o.betti_window >= 0) {
    const BettiWindow w = lex_betti_window(h, o.betti_window);
    const int d = o.betti_window;
    if (o.json) {
      out << Json{{"hvector", hvector_json(h)},
                  {"d", d},
                  {"beta1_d2", w.beta1_d2},
                  {"beta2_d2", w.beta2_d2},
                  {"beta2_d3", w.beta2_d3},
                  {"closed_form", w.closed_form}}
                 .dump(2)
          << '\n';
    } else {
      out << "beta_{1," << d + 2 << "} = " << w.beta1_d2 << '\n'
          << "beta_{2," << d + 2 << "} = " << w.beta2_d2 << '\n'
          << "beta_{2," << d + 3 << "} = " << w.beta2_d3 << '\n'
          << (w.closed_form ? "(closed form)" : "(Eliahou-Kervaire)") << '\n';
    }
    return;
  }
  const BettiDiagram diagram = ek_betti(lex_segment_ideal(h));
  if (o.json) {
    Json triples = Json::array();
    for (const auto& [key, mult] : diagram.entries()) {
      triples.push_back(Json{{"q", key.first}, {"shift", key.second}, {"mult", mult}});
    }
    out << triples.dump(2) << '\n';
  } else {
    out << render_diagram(diagram);
  }
}

void cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const HVector h = read_hvector(o.hvector);
  if (o.verify) {
    const auto report = oracle::cross_check(h);
    if (!report.ok()) {
      for (const auto& f : report.failures) err << "verification failed: " << f << '\n';
      throw Failure{kInternalFailure};
    }
  }
  const Verdict v = classify(h);
  if (o.json) {
    Json certs = Json::array();
    for (const auto& c : v.certificates) certs.push_back(certificate_json(c));
    Json j{{"hvector", hvector_json(h)}, {"verdict", to_string(v.kind)}, {"certificates", std::move(certs)}};
    if (o.verify) j["verified"] = true;
    out << j.dump(2) << '\n';
    return;
  }
  out << to_string(v.kind) << '\n';
  for (const auto& c : v.certificates) out << "  " << certificate_text(c) << '\n';
  if (o.verify) out << "verified against brute-force oracles\n";
}

void cmd_lift(const Options& o, std::ostream& out) {
  const HVector base = read_o_sequence(o.lift_base);
  const bool base_level = base.codim3() && base.socle_degree() >= 1 && is_differentiable(base);
  const LiftedHVector lifted = iarrobino_lift(base, base_level);
  if (o.json) {
    out << Json{{"base", hvector_json(base)},
                {"lifted", hvector_json(lifted.hvector)},
                {"asserted_level", lifted.asserted_level}}
               .dump(2)
        << '\n';
  } else {
    out << "base:   " << to_string(base) << '\n'
        << "lifted: " << to_string(lifted.hvector) << '\n'
        << "asserted level: " << (lifted.asserted_level ? "yes (differentiable base)" : "no") << '\n';
  }
}

void cmd_flat_rise(const Options& o, std::ostream& out) {
  FlatRiseConstruction c = [&] {
    try {
      return construct_flat_rise(o.flat_d, o.flat_ell);
    } catch (const std::domain_error& e) {
      throw InvalidHVector(e.what());
    }
  }();
  if (o.json) {
    out << Json{{"d", o.flat_d},
                {"ell", o.flat_ell},
                {"base", hvector_json(c.base)},
                {"lifted", hvector_json(c.lifted.hvector)},
                {"asserted_level", c.lifted.asserted_level}}
               .dump(2)
        << '\n';
  } else {
    out << "base:   " << to_string(c.base) << '\n'
        << "lifted: " << to_string(c.lifted.hvector) << '\n'
        << "asserted level: yes (differentiable base)\n";
  }
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.enum_socle < 1 || o.enum_cap < 3) throw std::invalid_argument("enumerate needs --socle >= 1 and --cap >= 3");
  const bool classifiable = o.enum_socle >= 2;
  std::map<VerdictKind, Integer> tally;
  std::map<Rule, Integer> fired;
  Integer count = 0;
  Json rows = Json::array();

  OSequenceEnumerator it(o.enum_socle, o.enum_cap);
  while (auto h = it.next()) {
    ++count;
    std::optional<Verdict> v;
    if (classifiable) {
      v = classify(*h);
      ++tally[v->kind];
      std::vector<Rule> seen;
      for (const auto& c : v->certificates) {
        if (std::find(seen.begin(), seen.end(), c.rule) == seen.end()) seen.push_back(c.rule);
      }
      for (Rule r : seen) ++fired[r];
    }
    if (o.enum_stats) continue;
    if (o.json) {
      Json row{{"hvector", hvector_json(*h)}};
      if (v) {
        row["verdict"] = to_string(v->kind);
        Json certs = Json::array();
        for (const auto& c : v->certificates) certs.push_back(certificate_json(c));
        row["certificates"] = std::move(certs);
      }
      rows.push_back(std::move(row));
    } else {
      out << to_string(*h) << ' ' << (v ? std::string(to_string(v->kind)) : std::string("-")) << '\n';
    }
  }

  if (o.enum_stats) {
    if (o.json) {
      Json verdicts = Json::object();
      for (auto k : {VerdictKind::Level, VerdictKind::NotLevel, VerdictKind::Unknown}) {
        verdicts[std::string(to_string(k))] = tally[k];
      }
      Json rules = Json::object();
      for (Rule r : kAllRules) rules[std::string(rule_id(r))] = fired[r];
      out << Json{{"socle_degree", o.enum_socle},
                  {"cap", o.enum_cap},
                  {"vectors", count},
                  {"verdicts", std::move(verdicts)},
                  {"rules", std::move(rules)}}
                 .dump(2)
          << '\n';
    } else {
      out << "vectors: " << count << '\n';
      for (auto k : {VerdictKind::Level, VerdictKind::NotLevel, VerdictKind::Unknown}) {
        out << to_string(k) << ": " << tally[k] << '\n';
      }
      for (Rule r : kAllRules) out << rule_id(r) << ": " << fired[r] << '\n';
    }
  } else if (o.json) {
    out << rows.dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Level Hilbert functions of codimension-3 Artinian algebras", "levelalg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_flag("--quiet", o.quiet, "Suppress normal output; report through the exit code only");

  auto* expand = app.add_subcommand("expand", "Macaulay binomial expansion of N in degree I");
  expand->add_option("N", o.expand_n, "Integer to expand")->required();
  expand->add_option("I", o.expand_i, "Degree of the expansion")->required();
  auto* up = expand->add_flag("--up", o.expand_up, "Print the Macaulay growth bound ((N)_(I))^1_1");
  auto* green = expand->add_flag("--green", o.expand_green, "Print the Green restriction bound ((N)_(I))^-1_0");
  up->excludes(green);

  auto* validate = app.add_subcommand("validate", "Check that H is an O-sequence");
  validate->add_option("H", o.hvector, "Comma-separated h-vector")->required();

  auto* lex = app.add_subcommand("lex", "Minimal generators of the lex-segment ideal of H");
  lex->add_option("H", o.hvector, "Comma-separated h-vector")->required();
  lex->add_option("--degree", o.lex_degree, "Only list generators of this degree")->check(CLI::NonNegativeNumber);

  auto* betti = app.add_subcommand("betti", "Graded Betti numbers of the lex-segment ideal of H");
  betti->add_option("H", o.hvector, "Comma-separated h-vector")->required();
  betti->add_option("--window", o.betti_window, "Print beta_{1,D+2}, beta_{2,D+2}, beta_{2,D+3} only")
      ->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "Decide whether H can be a level O-sequence");
  classify_cmd->add_option("H", o.hvector, "Comma-separated h-vector")->required();
  classify_cmd->add_flag("--verify", o.verify, "Cross-check every computation against brute-force oracles");

  auto* construct = app.add_subcommand("construct", "Build level h-vectors");
  construct->require_subcommand(1);
  auto* lift = construct->add_subcommand("iarrobino", "Lift a level h-vector by a general form of top degree");
  lift->add_option("--base", o.lift_base, "Base h-vector")->required();
  auto* flat = construct->add_subcommand("t44b", "Level h-vector with h_{d-1} = h_d = 3d+ell < h_{d+1}");
  flat->add_option("--d", o.flat_d, "Position d")->required();
  flat->add_option("--ell", o.flat_ell, "Offset ell >= 3")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Classify every O-sequence (1,3,...,h_S) with entries <= K");
  enumerate->add_option("--socle", o.enum_socle, "Socle degree S")->required();
  enumerate->add_option("--cap", o.enum_cap, "Largest entry K")->required();
  enumerate->add_flag("--stats", o.enum_stats, "Print verdict and rule tallies instead of the listing");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*expand) {
      cmd_expand(o, buffer);
    } else if (*validate) {
      cmd_validate(o, buffer);
    } else if (*lex) {
      cmd_lex(o, buffer);
    } else if (*betti) {
      cmd_betti(o, buffer);
    } else if (*classify_cmd) {
      cmd_classify(o, buffer, err);
    } else if (*lift) {
      cmd_lift(o, buffer);
    } else if (*flat) {
      cmd_flat_rise(o, buffer);
    } else if (*enumerate) {
      cmd_enumerate(o, buffer);
    }
  } catch (const Failure& f) {
    code = f.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidHVector& e) {
    err << "invalid h-vector: " << e.what() << '\n';
    return kInvalidHVector;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
  if (!o.quiet) out << buffer.str();
  return code;
}

}  // namespace levelalg::cli
