#pragma once

// Command-line front end. run() is kept separate from main() so the tests can
// drive every subcommand in-process.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ruledforms/classify.hpp"
#include "ruledforms/error.hpp"
#include "ruledforms/json_io.hpp"
#include "ruledforms/presentation.hpp"
#include "ruledforms/topology.hpp"

namespace ruledforms::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInput = 2;

inline constexpr const char* kHelpFooter = R"(Output:
  Results are JSON on standard output. Residues (degrees d, the lift d2n)
  are printed as least nonnegative representatives.

Exit status:
  0  success
  1  domain error: {"error": <code>, "message": <text>} where <code> is one of
     InvalidCurveType InvalidPoint MixedCurves EmptyF InvalidDimension
     StructureMismatch RealLocusOutsideRealPart RankOutOfRange NotApplicable
     UnsupportedRank OddDimension EvenDimension NotEmptyBase InvalidKey
  2  input error: {"error": <code>, "message": <text>} where <code> is one of
     UsageError IoError ParseError)";

namespace detail {

struct InputError {
  std::string code;
  std::string message;
};

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError{"IoError", "cannot open '" + path + "'"};
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError{"ParseError", path + ": " + e.what()};
  }
}

inline Presentation read_presentation(const std::string& path) {
  Json j = read_json_file(path);
  try {
    return presentation_from_json(j);
  } catch (const ParseError& e) {
    throw InputError{"ParseError", path + ": " + e.what()};
  } catch (const Json::exception& e) {
    throw InputError{"ParseError", path + ": " + e.what()};
  }
}

inline CurveTopType curve_from_flags(int g, int mu, const std::string& eps) {
  try {
    return {g, mu, parse_eps(eps)};
  } catch (const ParseError& e) {
    throw InputError{"UsageError", e.what()};
  }
}

inline Json topology_json(const Presentation& p) {
  Json out{{"n", p.n()}, {"degree", degree(p).value}, {"curve", to_json(p.base())}};
  if (p.n() % 2 != 0) {
    out["real_components"] = real_component_count(p);
  } else if (p.base().mu > 0) {
    auto topo = real_part_topology(p);
    out["statuses"] = to_json(topo)["statuses"];
    out["quintuple"] = to_json(make_quintuple(topo.t, topo.k, p.base()));
  } else {
    out["quotient"] = to_json(quotient_class(p));
  }
  return out;
}

inline ElemTransformRec parse_record(const std::string& locus, int rank) {
  if (locus == "conjpair") return conj_rec(rank);
  const std::string prefix = "real:";
  if (locus.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const std::string idx = locus.substr(prefix.size());
      int c = std::stoi(idx, &used);
      if (used == idx.size()) return real_rec(c, rank);
    } catch (const std::exception&) {
    }
  }
  throw InputError{"UsageError", "--locus must be real:<idx> or conjpair"};
}

inline void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline void print_error(std::ostream& out, const std::string& code, const std::string& message) {
  print(out, Json{{"error", code}, {"message", message}});
}

}  // namespace detail

/// Runs one invocation; args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Deformation classes of real ruled manifolds", "ruledforms"};
  app.footer(kHelpFooter);
  app.require_subcommand(1);

  std::string file, file2, eps, locus;
  int n = 0, genus = 0, mu = 0, t = 0, k = 0, deg = 0, qbit = 0, rank = 1;

  auto* validate = app.add_subcommand("validate", "Check a presentation file against every invariant");
  validate->add_option("file", file, "Presentation JSON")->required();

  auto* classify = app.add_subcommand("classify", "Print the deformation-class key of a presentation");
  classify->add_option("file", file, "Presentation JSON")->required();

  auto* topology = app.add_subcommand("topology", "Print the real-part topology of a presentation");
  topology->add_option("file", file, "Presentation JSON")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide deformation equivalence of two presentations");
  equiv->add_option("file1", file, "Presentation JSON")->required();
  equiv->add_option("file2", file2, "Presentation JSON")->required();

  auto* nf = app.add_subcommand("normal-form", "Print the canonical presentation of a class");
  nf->add_option("file", file, "Presentation JSON")->required();

  auto* realize_cmd = app.add_subcommand("realize", "Build a canonical presentation with given invariants");
  realize_cmd->add_option("--n", n, "Complex dimension")->required();
  realize_cmd->add_option("--genus", genus, "Genus of the base")->required();
  realize_cmd->add_option("--mu", mu, "Number of components of the real base")->required();
  realize_cmd->add_option("--eps", eps, "dividing | nondividing")->required();
  auto* t_opt = realize_cmd->add_option("--t", t, "Orientable real components (even n, mu > 0)");
  auto* k_opt = realize_cmd->add_option("--k", k, "Non-orientable real components (even n, mu > 0)");
  realize_cmd->add_option("--degree", deg, "Degree; reduced mod n")->required();
  realize_cmd->add_option("--quotient-bit", qbit, "Quotient bit q (even n, mu = 0)");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every deformation class");
  enumerate_cmd->add_option("--n", n, "Complex dimension")->required();
  enumerate_cmd->add_option("--genus", genus, "Genus of the base")->required();
  auto* mu_opt = enumerate_cmd->add_option("--mu", mu, "Restrict to this number of real components");
  auto* eps_opt = enumerate_cmd->add_option("--eps", eps, "Restrict to dividing | nondividing");

  auto* transform = app.add_subcommand("transform", "Apply one elementary transformation");
  transform->add_option("file", file, "Presentation JSON")->required();
  transform->add_option("--locus", locus, "real:<idx> | conjpair")->required();
  transform->add_option("--rank", rank, "Rank of the blown-up subspace plus one")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    detail::print_error(out, "UsageError", e.what());
    return kExitInput;
  }

  try {
    if (validate->parsed()) {
      auto p = detail::read_presentation(file);
      detail::print(out, Json{{"valid", true}, {"degree", degree(p).value}});
    } else if (classify->parsed()) {
      detail::print(out, to_json(key_of(detail::read_presentation(file))));
    } else if (topology->parsed()) {
      detail::print(out, detail::topology_json(detail::read_presentation(file)));
    } else if (equiv->parsed()) {
      auto a = detail::read_presentation(file);
      auto b = detail::read_presentation(file2);
      detail::print(out, Json{{"equivalent", equivalent(a, b)}});
    } else if (nf->parsed()) {
      detail::print(out, to_json(normal_form(detail::read_presentation(file)).presentation()));
    } else if (realize_cmd->parsed()) {
      const auto curve = detail::curve_from_flags(genus, mu, eps);
      if (n < 2) fail(ErrorCode::InvalidKey, "n must be at least 2");
      const int d = static_cast<int>(Residue::of(deg, n).value);
      DefClassKey key;
      if (n % 2 != 0) {
        key = OddDimKey{curve, n, d};
      } else if (mu > 0) {
        if (t_opt->count() == 0 || k_opt->count() == 0) {
          throw detail::InputError{"UsageError", "--t and --k are required for even n and mu > 0"};
        }
        key = EvenDimRealBaseKey{curve, n, t, k, d};
      } else {
        key = EvenDimEmptyBaseKey{curve, n, d, qbit};
      }
      detail::print(out, to_json(realize(key).presentation()));
    } else if (enumerate_cmd->parsed()) {
      std::vector<CurveTopType> curves;
      for (const auto& c : curve_types_of_genus(genus)) {
        if (mu_opt->count() > 0 && c.mu != mu) continue;
        if (eps_opt->count() > 0 && c.eps != detail::curve_from_flags(genus, mu, eps).eps) continue;
        curves.push_back(c);
      }
      if (curves.empty()) {
        fail(ErrorCode::InvalidCurveType, "no valid curve type matches the given genus/mu/eps");
      }
      std::vector<DefClassKey> keys;
      for (const auto& c : curves) {
        auto part = enumerate(n, c);
        keys.insert(keys.end(), part.begin(), part.end());
      }
      std::stable_sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        return enumeration_order(a) < enumeration_order(b);
      });
      Json arr = Json::array();
      for (const auto& key : keys) arr.push_back(to_json(key));
      detail::print(out, arr);
    } else if (transform->parsed()) {
      auto p = detail::read_presentation(file);
      detail::print(out, to_json(apply_transform(p, detail::parse_record(locus, rank))));
    }
  } catch (const detail::InputError& e) {
    detail::print_error(out, e.code, e.message);
    return kExitInput;
  } catch (const Error& e) {
    detail::print_error(out, std::string(code_name(e.code())), e.what());
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace ruledforms::cli
