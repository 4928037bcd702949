// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigforget/forgetting.hpp"
#include "sigforget/inference.hpp"
#include "sigforget/lp.hpp"
#include "sigforget/measures.hpp"
#include "sigforget/parser.hpp"
#include "sigforget/sat.hpp"
#include "sigforget/subsignature.hpp"

using json = nlohmann::ordered_json;
using namespace sigforget;

namespace {

// Options shared by every subcommand.  Caps are overridable so that no
// budget is baked into the binary.
struct Common {
  std::string kb_path;
  std::string format = "text";
  bool timing = false;
  std::int64_t max_atoms = -1;
  std::int64_t max_expansion = -1;
  std::int64_t max_formulas = -1;
  std::int64_t max_decisions = -1;
  std::int64_t max_cnf_nodes = -1;

  Caps caps() const {
    Caps c;
    if (max_atoms >= 0) {
      c.subsig_atoms = static_cast<std::size_t>(max_atoms);
      c.brute_subsig_atoms = static_cast<std::size_t>(max_atoms);
      c.lp_atoms = static_cast<std::size_t>(max_atoms);
      c.enum_model_atoms = static_cast<std::size_t>(max_atoms);
    }
    if (max_expansion >= 0) {
      c.forget_atoms = static_cast<std::size_t>(max_expansion);
      c.forget_occurrences = static_cast<std::size_t>(max_expansion);
    }
    if (max_formulas >= 0)
      c.subset_formulas = static_cast<std::size_t>(max_formulas);
    if (max_decisions >= 0)
      c.solver_decisions = static_cast<std::size_t>(max_decisions);
    if (max_cnf_nodes >= 0)
      c.cnf_nodes = static_cast<std::size_t>(max_cnf_nodes);
    return c;
  }

  bool json_format() const { return format == "json"; }
};

std::shared_ptr<Common> add_common(CLI::App* cmd) {
  auto common = std::make_shared<Common>();
  cmd->add_option("kb", common->kb_path, "knowledge base file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", common->format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_flag("--timing", common->timing,
                "report wall time (makes output non-reproducible)");
  cmd->add_option("--max-atoms", common->max_atoms,
                  "cap on signature sizes for enumeration and model search");
  cmd->add_option("--max-expansion", common->max_expansion,
                  "cap on forgetting expansion (atoms for ve, occurrences "
                  "for na)");
  cmd->add_option("--max-formulas", common->max_formulas,
                  "cap on knowledge base size for subset enumeration");
  cmd->add_option("--max-decisions", common->max_decisions,
                  "cap on solver decisions");
  cmd->add_option("--max-cnf-nodes", common->max_cnf_nodes,
                  "cap on CNF conversion size");
  return common;
}

ForgetOp parse_op(const std::string& text) {
  if (text == "ve") return ForgetOp::Ve;
  if (text == "na") return ForgetOp::Na;
  throw DomainError("unknown operator '" + text + "' (expected ve or na)");
}

EnumStrategy parse_strategy(const std::string& text) {
  if (text == "duality") return EnumStrategy::Duality;
  if (text == "brute") return EnumStrategy::Brute;
  throw DomainError("unknown strategy '" + text +
                    "' (expected duality or brute)");
}

Signature parse_atom_list(const std::vector<std::string>& atoms) {
  Signature out;
  for (const auto& a : atoms) {
    bool ok = !a.empty() && (std::isalpha(static_cast<unsigned char>(a[0])) ||
                             a[0] == '_');
    for (char ch : a)
      ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw DomainError("malformed atom name '" + a + "'");
    if (a.rfind(kReservedAtomPrefix, 0) == 0)
      throw DomainError("atom name '" + a + "' uses the reserved '__' "
                        "prefix");
    out.insert(a);
  }
  return out;
}

json signature_to_json(const Signature& s) {
  json arr = json::array();
  for (const auto& a : s) arr.push_back(a);
  return arr;
}

json family_to_json(const std::vector<Signature>& family) {
  json arr = json::array();
  for (const auto& s : family) arr.push_back(signature_to_json(s));
  return arr;
}

json kb_to_json(const KnowledgeBase& kb) {
  json arr = json::array();
  for (const auto& f : kb) arr.push_back(to_string(f));
  return arr;
}

json kb_family_to_json(const std::vector<KnowledgeBase>& family) {
  json arr = json::array();
  for (const auto& kb : family) arr.push_back(kb_to_json(kb));
  return arr;
}

json assignment_to_json(const Assignment& v) {
  json obj = json::object();
  for (const auto& [atom, value] : v) obj[atom] = value;
  return obj;
}

json interpretation_to_json(const Interpretation3& v) {
  json obj = json::object();
  for (const auto& [atom, value] : v) obj[atom] = std::string(1, to_char(value));
  return obj;
}

void print_family(const std::vector<Signature>& family) {
  if (family.empty()) {
    std::cout << "[]\n";
    return;
  }
  for (const auto& s : family) std::cout << to_string(s) << "\n";
}

void print_kb_lines(const KnowledgeBase& kb) {
  if (kb.size() == 0) {
    std::cout << "[]\n";
    return;
  }
  for (const auto& f : kb) std::cout << to_string(f) << "\n";
}

void print_interpretation(const Interpretation3& v) {
  bool first = true;
  for (const auto& [atom, value] : v) {
    if (!first) std::cout << " ";
    std::cout << atom << "=" << to_char(value);
    first = false;
  }
  if (v.empty()) std::cout << "{}";
  std::cout << "\n";
}

// One report per invocation.  The command body fills `data` (used as the
// JSON payload) and `text` (the deterministic text rendering); the
// envelope adds provenance.
struct Report {
  json data = json::object();
  std::function<void()> text;
};

void emit(const Common& common, const std::string& command,
          const json& operator_field, const json& strategy_field,
          const Report& report, double wall_ms) {
  if (common.json_format()) {
    json envelope = json::object();
    envelope["command"] = command;
    envelope["kb_file"] = common.kb_path;
    envelope["operator"] = operator_field;
    envelope["strategy"] = strategy_field;
    for (const auto& [key, value] : report.data.items())
      envelope[key] = value;
    if (common.timing) envelope["wall_time_ms"] = wall_ms;
    std::cout << envelope.dump(2) << "\n";
  } else {
    report.text();
    if (common.timing)
      std::cout << "wall time: " << wall_ms << " ms\n";
  }
}

int run_command(const Common& common, const std::string& command,
                const json& operator_field, const json& strategy_field,
                const std::function<int(Report&)>& body) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  int code = body(report);
  double wall_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  emit(common, command, operator_field, strategy_field, report, wall_ms);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sigforget: inconsistency-tolerant reasoning over propositional "
      "knowledge bases by forgetting parts of the signature"};
  app.require_subcommand(1);
  int exit_code = 0;

  // check-sat ------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "check-sat", "classical satisfiability plus per-member diagnosis");
    auto common = add_common(cmd);
    cmd->callback([common, &exit_code] {
      exit_code = run_command(*common, "check-sat", nullptr, nullptr,
                              [&](Report& report) {
        KnowledgeBase kb = load_kb_file(common->kb_path);
        bool sat = is_satisfiable(kb, common->caps()).sat();
        std::vector<std::size_t> bad =
            unsatisfiable_members(kb, common->caps());
        report.data["satisfiable"] = sat;
        json members = json::array();
        for (std::size_t i : bad) members.push_back(i);
        report.data["unsatisfiable_members"] = members;
        report.text = [sat, bad, kb] {
          std::cout << "satisfiable: " << (sat ? "true" : "false") << "\n";
          for (std::size_t i : bad)
            std::cout << "warning: member " << i << " ("
                      << to_string(kb[i])
                      << ") is unsatisfiable on its own\n";
        };
        return 0;
      });
    });
  }

  // forget ---------------------------------------------------------------
  {
    CLI::App* cmd =
        app.add_subcommand("forget", "forget atoms formula-wise");
    auto common = add_common(cmd);
    auto atoms = std::make_shared<std::vector<std::string>>();
    auto op_text = std::make_shared<std::string>();
    cmd->add_option("--atoms", *atoms, "atoms to forget")
        ->required()
        ->delimiter(',');
    cmd->add_option("--op", *op_text, "forgetting operator (ve|na)")
        ->required()
        ->check(CLI::IsMember({"ve", "na"}));
    cmd->callback([common, atoms, op_text, &exit_code] {
      exit_code = run_command(*common, "forget", *op_text, nullptr,
                              [&](Report& report) {
        KnowledgeBase kb = load_kb_file(common->kb_path);
        Signature s = parse_atom_list(*atoms);
        KnowledgeBase result =
            forget_kb(kb, s, parse_op(*op_text), common->caps());
        report.data["atoms"] = signature_to_json(s);
        report.data["result"] = kb_to_json(result);
        report.text = [result] { print_kb_lines(result); };
        return 0;
      });
    });
  }

  // project --------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "project", "project onto a subsignature (forget the rest)");
    auto common = add_common(cmd);
    auto keep = std::make_shared<std::vector<std::string>>();
    auto op_text = std::make_shared<std::string>();
    cmd->add_option("--keep", *keep, "atoms to keep")
        ->required()
        ->delimiter(',');
    cmd->add_option("--op", *op_text, "forgetting operator (ve|na)")
        ->required()
        ->check(CLI::IsMember({"ve", "na"}));
    cmd->callback([common, keep, op_text, &exit_code] {
      exit_code = run_command(*common, "project", *op_text, nullptr,
                              [&](Report& report) {
        KnowledgeBase kb = load_kb_file(common->kb_path);
        Signature s = parse_atom_list(*keep);
        KnowledgeBase result =
            project(kb, s, parse_op(*op_text), common->caps());
        report.data["keep"] = signature_to_json(s);
        report.data["result"] = kb_to_json(result);
        report.text = [result] { print_kb_lines(result); };
        return 0;
      });
    });
  }

  // misig / mcsig / free ---------------------------------------------------
  for (const std::string name : {"misig", "mcsig", "free"}) {
    std::string description =
        name == "misig" ? "minimal inconsistent subsignatures"
        : name == "mcsig" ? "maximal consistent subsignatures"
                          : "atoms in no minimal inconsistent subsignature";
    CLI::App* cmd = app.add_subcommand(name, description);
    auto common = add_common(cmd);
    auto op_text = std::make_shared<std::string>();
    auto strategy_text = std::make_shared<std::string>("duality");
    cmd->add_option("--op", *op_text, "forgetting operator (ve|na)")
        ->required()
        ->check(CLI::IsMember({"ve", "na"}));
    cmd->add_option("--strategy", *strategy_text, "enumeration strategy")
        ->check(CLI::IsMember({"duality", "brute"}))
        ->capture_default_str();
    cmd->callback([common, op_text, strategy_text, name, &exit_code] {
      exit_code = run_command(*common, name, *op_text, *strategy_text,
                              [&](Report& report) {
        KnowledgeBase kb = load_kb_file(common->kb_path);
        SubsigAnalysis analysis = analyze_subsignatures(
            kb, parse_op(*op_text), parse_strategy(*strategy_text),
            common->caps());
        if (name == "misig") {
          report.data["misig"] = family_to_json(analysis.misig);
          report.text = [analysis] { print_family(analysis.misig); };
        } else if (name == "mcsig") {
          report.data["mcsig"] = family_to_json(analysis.mcsig);
          json witnesses = json::array();
          for (const auto& w : analysis.mcsig_witnesses)
            witnesses.push_back(assignment_to_json(w));
          report.data["witnesses"] = witnesses;
          report.text = [analysis] { print_family(analysis.mcsig); };
        } else {
          report.data["free_atoms"] = signature_to_json(analysis.free_atoms);
          report.text = [analysis] {
            std::cout << to_string(analysis.free_atoms) << "\n";
          };
        }
        return 0;
      });
    });
  }

  // mis / mcs --------------------------------------------------------------
  for (const std::string name : {"mis", "mcs"}) {
    CLI::App* cmd = app.add_subcommand(
        name, name == "mis" ? "minimal inconsistent subsets"
                            : "maximal consistent subsets");
    auto common = add_common(cmd);
    cmd->callback([common, name, &exit_code] {
      exit_code = run_command(*common, name, nullptr, "brute",
                              [&](Report& report) {
        KnowledgeBase kb = load_kb_file(common->kb_path);
        std::vector<KnowledgeBase> family =
            name == "mis" ? enumerate_mis(kb, common->caps())
                          : enumerate_mcs(kb, common->caps());
        report.data[name] = kb_family_to_json(family);
        report.text = [family] {
          if (family.empty()) {
            std::cout << "[]\n";
            return;
          }
          for (std::size_t i = 0; i < family.size(); ++i) {
            std::cout << "subset " << (i + 1) << ":\n";
            for (const auto& f : family[i])
              std::cout << "  " << to_string(f) << "\n";
          }
        };
        return 0;
      });
    });
  }

  // mckb -------------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "mckb", "repaired knowledge bases: projections onto the maximal "
                "consistent subsignatures");
    auto common = add_common(cmd);
    auto op_text = std::make_shared<std::string>();
    cmd->add_option("--op", *op_text, "forgetting operator (ve|na)")
        ->required()
        ->check(CLI::IsMember({"ve", "na"}));
    cmd->callback([common, op_text, &exit_code] {
      exit_code = run_command(*common, "mckb", *op_text, "duality",
                              [&](Report& report) {
        KnowledgeBase kb = load_kb_file(common->kb_path);
        std::vector<KnowledgeBase> family =
            mckb(kb, parse_op(*op_text), common->caps());
        report.data["mckb"] = kb_family_to_json(family);
        report.text = [family] {
          if (family.empty()) {
            std::cout << "[]\n";
            return;
          }
          for (std::size_t i = 0; i < family.size(); ++i) {
            std::cout << "repair " << (i + 1) << ":\n";
            for (const auto& f : family[i])
              std::cout << "  " << to_string(f) << "\n";
          }
        };
        return 0;
      });
    });
  }

  // infer ------------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "infer", "inconsistency-tolerant entailment "
                 "(exit 0 = entailed, 1 = not entailed, 2 = error)");
    auto common = add_common(cmd);
    auto goal_text = std::make_shared<std::string>();
    auto rel = std::make_shared<std::string>("sig");
    auto mode_text = std::make_shared<std::string>("i");
    auto op_text = std::make_shared<std::string>();
    cmd->add_option("--goal", *goal_text, "goal formula")->required();
    cmd->add_option("--rel", *rel, "repair relation")
        ->check(CLI::IsMember({"sig", "subset", "lp"}))
        ->capture_default_str();
    cmd->add_option("--mode", *mode_text, "i = inevitable, w = weak")
        ->check(CLI::IsMember({"i", "w"}))
        ->capture_default_str();
    cmd->add_option("--op", *op_text,
                    "forgetting operator (ve|na), required for --rel sig");
    cmd->callback([common, goal_text, rel, mode_text, op_text, &exit_code] {
      json op_field =
          *rel == "sig" ? json(*op_text)
          : *rel == "lp" ? json("na")
                         : json(nullptr);
      json strategy_field = *rel == "sig"      ? json("encoding")
                            : *rel == "subset" ? json("brute")
                                               : json(nullptr);
      exit_code = run_command(*common, "infer", op_field, strategy_field,
                              [&](Report& report) {
        KnowledgeBase kb = load_kb_file(common->kb_path);
        Formula goal = parse_formula(*goal_text);
        InferenceMode mode = *mode_text == "i" ? InferenceMode::Inevitable
                                               : InferenceMode::Weak;
        InferenceResult result;
        if (*rel == "sig") {
          if (op_text->empty())
            throw DomainError(
                "--rel sig requires a forgetting operator (--op ve|na)");
          result = infer_signature(kb, goal, mode, parse_op(*op_text),
                                   common->caps());
        } else if (*rel == "subset") {
          result = infer_subset(kb, goal, mode, common->caps());
        } else {
          if (mode != InferenceMode::Inevitable)
            throw DomainError(
                "three-valued inference has no weak mode (--mode w)");
          result.entailed = infer_lp(kb, goal, common->caps());
        }
        report.data["relation"] = *rel;
        report.data["mode"] =
            mode == InferenceMode::Inevitable ? "inevitable" : "weak";
        report.data["goal"] = to_string(goal);
        report.data["entailed"] = result.entailed;
        report.data["vacuous"] = result.vacuous;
        report.text = [result] {
          std::cout << (result.entailed ? "entailed" : "not entailed")
                    << (result.vacuous ? " (vacuously)" : "") << "\n";
        };
        return result.entailed ? 0 : 1;
      });
    });
  }

  // measure ----------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "measure", "signature-based inconsistency measures");
    auto common = add_common(cmd);
    auto which = std::make_shared<std::string>("all");
    auto op_text = std::make_shared<std::string>();
    cmd->add_option("--which", *which, "measure to compute")
        ->check(CLI::IsMember({"misig", "misig-c", "mcsig", "p", "all"}))
        ->capture_default_str();
    cmd->add_option("--op", *op_text, "forgetting operator (ve|na)")
        ->required()
        ->check(CLI::IsMember({"ve", "na"}));
    cmd->callback([common, which, op_text, &exit_code] {
      exit_code = run_command(*common, "measure", *op_text, "encoding",
                              [&](Report& report) {
        KnowledgeBase kb = load_kb_file(common->kb_path);
        ForgetOp op = parse_op(*op_text);
        std::vector<SigMeasure> wanted;
        for (SigMeasure m :
             {SigMeasure::MisigCount, SigMeasure::MisigWeighted,
              SigMeasure::McsigCount, SigMeasure::ProblematicAtoms})
          if (*which == "all" || *which == measure_id(m)) wanted.push_back(m);
        json values = json::object();
        std::vector<std::pair<std::string, std::string>> lines;
        for (SigMeasure m : wanted) {
          Rational r = measure(kb, m, op, common->caps());
          values[measure_id(m)] = r.str();
          lines.emplace_back(measure_id(m), r.str());
        }
        report.data["values"] = values;
        report.text = [lines] {
          for (const auto& [id, value] : lines)
            std::cout << id << ": " << value << "\n";
        };
        return 0;
      });
    });
  }

  // duality-check ------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "duality-check",
        "cross-validate duality enumeration against brute force and the "
        "hitting-set relation between misig and mcsig");
    auto common = add_common(cmd);
    auto op_text = std::make_shared<std::string>();
    cmd->add_option("--op", *op_text, "forgetting operator (ve|na)")
        ->required()
        ->check(CLI::IsMember({"ve", "na"}));
    cmd->callback([common, op_text, &exit_code] {
      exit_code = run_command(*common, "duality-check", *op_text, "duality",
                              [&](Report& report) {
        KnowledgeBase kb = load_kb_file(common->kb_path);
        ForgetOp op = parse_op(*op_text);
        SubsigAnalysis dual = analyze_subsignatures(
            kb, op, EnumStrategy::Duality, common->caps());
        SubsigAnalysis brute = analyze_subsignatures(
            kb, op, EnumStrategy::Brute, common->caps());
        bool misig_agree = dual.misig == brute.misig;
        bool mcsig_agree = dual.mcsig == brute.mcsig;

        Signature at = atoms_of(kb);
        std::vector<Signature> from_duality;
        for (const auto& h : minimal_hitting_sets(dual.misig))
          from_duality.push_back(set_difference(at, h));
        std::sort(from_duality.begin(), from_duality.end(), signature_less);
        bool duality_holds = from_duality == dual.mcsig;

        bool agree = misig_agree && mcsig_agree && duality_holds;
        report.data["misig"] = family_to_json(dual.misig);
        report.data["mcsig"] = family_to_json(dual.mcsig);
        report.data["misig_agree"] = misig_agree;
        report.data["mcsig_agree"] = mcsig_agree;
        report.data["duality_holds"] = duality_holds;
        report.data["agree"] = agree;
        report.text = [misig_agree, mcsig_agree, duality_holds, agree] {
          std::cout << "misig agree: " << (misig_agree ? "true" : "false")
                    << "\n"
                    << "mcsig agree: " << (mcsig_agree ? "true" : "false")
                    << "\n"
                    << "hitting-set duality holds: "
                    << (duality_holds ? "true" : "false") << "\n"
                    << "agree: " << (agree ? "true" : "false") << "\n";
        };
        return 0;
      });
    });
  }

  // lp-models ------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "lp-models", "minimal three-valued models");
    auto common = add_common(cmd);
    cmd->callback([common, &exit_code] {
      KnowledgeBase kb = load_kb_file(common->kb_path);
      Caps caps = common->caps();
      json strategy = atoms_of(kb).size() <= caps.lp_scan_atoms
                          ? "brute"
                          : "encoding";
      exit_code = run_command(*common, "lp-models", "na", strategy,
                              [&](Report& report) {
        std::vector<Interpretation3> models = minimal_models3(kb, caps);
        json arr = json::array();
        for (const auto& m : models)
          arr.push_back(interpretation_to_json(m));
        report.data["models"] = arr;
        report.text = [models] {
          if (models.empty()) {
            std::cout << "[]\n";
            return;
          }
          for (const auto& m : models) print_interpretation(m);
        };
        return 0;
      });
    });
  }

  // lp-compare ------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "lp-compare",
        "compare three-valued inference with the signature-based "
        "analysis: minimal B-sets against misig and the mcsig "
        "complements, and optionally a goal under both relations");
    auto common = add_common(cmd);
    auto goal_text = std::make_shared<std::string>();
    CLI::Option* goal_opt =
        cmd->add_option("--goal", *goal_text, "goal formula to compare");
    cmd->callback([common, goal_text, goal_opt, &exit_code] {
      KnowledgeBase kb = load_kb_file(common->kb_path);
      Caps caps = common->caps();
      json strategy = atoms_of(kb).size() <= caps.lp_scan_atoms
                          ? "brute"
                          : "encoding";
      bool with_goal = goal_opt->count() > 0;
      exit_code = run_command(*common, "lp-compare", "na", strategy,
                              [&](Report& report) {
        BsetReport bsets = minimal_b_sets_report(kb, caps);
        report.data["minimal_b_sets"] = family_to_json(bsets.minimal_b_sets);
        report.data["misig"] = family_to_json(bsets.misig);
        report.data["mcsig_complements"] =
            family_to_json(bsets.mcsig_complements);
        report.data["matches_misig"] = bsets.matches_misig;
        report.data["matches_mcsig_complements"] =
            bsets.matches_mcsig_complements;
        report.data["note"] = bsets.note;

        bool lp_entailed = false;
        bool sig_entailed = false;
        bool goals_agree = true;
        Formula goal;
        if (with_goal) {
          goal = parse_formula(*goal_text);
          lp_entailed = infer_lp(kb, goal, caps);
          sig_entailed = infer_signature(kb, goal,
                                         InferenceMode::Inevitable,
                                         ForgetOp::Na, caps)
                             .entailed;
          goals_agree = lp_entailed == sig_entailed;
          report.data["goal"] = to_string(goal);
          report.data["lp_entailed"] = lp_entailed;
          report.data["sig_inevitable_entailed"] = sig_entailed;
          report.data["goal_agree"] = goals_agree;
        }
        report.text = [bsets, with_goal, goal, lp_entailed, sig_entailed,
                       goals_agree] {
          std::cout << "minimal b-sets:\n";
          for (const auto& s : bsets.minimal_b_sets)
            std::cout << "  " << to_string(s) << "\n";
          std::cout << "misig:\n";
          for (const auto& s : bsets.misig)
            std::cout << "  " << to_string(s) << "\n";
          std::cout << "mcsig complements:\n";
          for (const auto& s : bsets.mcsig_complements)
            std::cout << "  " << to_string(s) << "\n";
          std::cout << "matches misig: "
                    << (bsets.matches_misig ? "true" : "false") << "\n"
                    << "matches mcsig complements: "
                    << (bsets.matches_mcsig_complements ? "true" : "false")
                    << "\n";
          if (!bsets.note.empty())
            std::cout << "note: " << bsets.note << "\n";
          if (with_goal) {
            std::cout << "goal: " << to_string(goal) << "\n"
                      << "lp: "
                      << (lp_entailed ? "entailed" : "not entailed") << "\n"
                      << "sig-inevitable (na): "
                      << (sig_entailed ? "entailed" : "not entailed") << "\n"
                      << "goal agree: " << (goals_agree ? "true" : "false")
                      << "\n";
          }
        };
        return 0;
      });
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const UndefinedMeasureError& e) {
    std::cerr << "undefined measure: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "invalid request: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
