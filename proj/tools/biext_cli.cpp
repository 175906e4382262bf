// Batch command-line surface over the core library: every subcommand reads
// its inputs, runs one computation, and emits a single JSON document or a
// plot-ready CSV.  Outputs carry a metadata block (tool version, series
// cutoffs, sample schedules) so numbers can be reproduced bit for bit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "biext/degeneration.hpp"
#include "biext/divisors.hpp"
#include "biext/heisenberg.hpp"
#include "biext/modp_invariants.hpp"
#include "biext/modular.hpp"
#include "biext/serialize.hpp"
#include "biext/version.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

json metadata() {
  json m;
  m["tool"] = "biext";
  m["version"] = biext::kVersion;
  m["cutoffs"] = {{"delta_tail", biext::kDeltaTailBound},
                  {"theta_tail", biext::kThetaTailBound}};
  return m;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
  if (content.empty() || content.back() != '\n') out << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Per-subcommand output format validation; emitting is fixed per command,
// the flag only rejects unsupported requests.
void add_format_flag(CLI::App* cmd, std::string& format,
                     const std::string& supported) {
  format = supported;
  cmd->add_option("--format", format, "output format (" + supported + ")")
      ->check(CLI::IsMember({supported}));
}

struct SweepWindow {
  int k_min = 0;
  int k_max = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebra and modular numerics for metrized bundles on moduli of curves"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help and exit");

  // --h is a real option below, so subcommands get a long-only help flag.
  auto add_subcommand = [&app](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print help and exit");
    cmd->fallthrough();  // global flags like --output work after the name
    return cmd;
  };

  std::string output = "-";
  app.add_option("--output", output, "output path, - for stdout");

  std::string result;

  // ---- tau ------------------------------------------------------------
  {
    auto* cmd = add_subcommand("tau", "central charge of a separating Dehn twist");
    auto g = std::make_shared<int>(0);
    auto h = std::make_shared<int>(0);
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--g", *g, "genus")->required();
    cmd->add_option("--h", *h, "genus of one side")->required();
    add_format_flag(cmd, *fmt, "json");
    cmd->callback([&result, g, h] {
      const mpz_class tau =
          biext::dehn_twist_central_charge({biext::Genus(*g), *h});
      json out;
      out["g"] = *g;
      out["h"] = *h;
      out["tau"] = tau.get_si();
      out["meta"] = metadata();
      result = out.dump();
    });
  }

  // ---- qform ----------------------------------------------------------
  {
    auto* cmd = add_subcommand("qform", "q(u, v) from two Lambda^3 lift files");
    auto upath = std::make_shared<std::string>();
    auto vpath = std::make_shared<std::string>();
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--u", *upath, "JSON file with the first lift")->required();
    cmd->add_option("--v", *vpath, "JSON file with the second lift")->required();
    add_format_flag(cmd, *fmt, "json");
    cmd->callback([&result, upath, vpath] {
      const biext::Wedge3 u = biext::wedge3_from_json(read_file(*upath));
      const biext::Wedge3 v = biext::wedge3_from_json(read_file(*vpath));
      const mpz_class q = biext::q_form(biext::VClass(u), biext::VClass(v));
      json out;
      out["genus"] = u.genus.value();
      out["q"] = q.get_str();
      out["meta"] = metadata();
      result = out.dump();
    });
  }

  // ---- invariants -------------------------------------------------------
  {
    auto* cmd = add_subcommand("invariants",
                                   "fixed-space dimensions of Lambda^3 mod p");
    auto g = std::make_shared<int>(0);
    auto p = std::make_shared<long>(0);
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--g", *g, "genus")->required();
    cmd->add_option("--p", *p, "prime modulus")->required();
    add_format_flag(cmd, *fmt, "json");
    cmd->callback([&result, g, p] {
      const biext::Genus genus(*g);
      json out;
      out["g"] = *g;
      out["p"] = *p;
      out["invariants"] =
          biext::invariant_dim(genus, *p, biext::InvariantSide::invariants);
      out["dual"] =
          biext::invariant_dim(genus, *p, biext::InvariantSide::coinvariant_dual);
      out["meta"] = metadata();
      result = out.dump();
    });
  }

  // ---- dimid ------------------------------------------------------------
  {
    auto* cmd = add_subcommand("dimid", "dimension identity C(2g,3) = 2g(g-1) + 8C(g,3)");
    auto g = std::make_shared<int>(0);
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--g", *g, "genus")->required();
    add_format_flag(cmd, *fmt, "json");
    cmd->callback([&result, g] {
      const biext::Genus genus(*g);
      json out;
      out["g"] = *g;
      out["holds"] = biext::dimension_identity(genus);
      out["dim_wedge3"] = biext::wedge3_dim(genus);
      out["meta"] = metadata();
      result = out.dump();
    });
  }

  // ---- beta1-sweep --------------------------------------------------------
  {
    auto* cmd = add_subcommand("beta1-sweep",
                                   "beta_1 along the genus-1 node family, CSV");
    auto xmin = std::make_shared<double>(biext::kBeta1SweepXMin);
    auto xmax = std::make_shared<double>(biext::kBeta1SweepXMax);
    auto count = std::make_shared<int>(biext::kBeta1SweepCount);
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--xmin", *xmin, "smallest log(1/t)");
    cmd->add_option("--xmax", *xmax, "largest log(1/t)");
    cmd->add_option("--samples", *count, "sample count");
    add_format_flag(cmd, *fmt, "csv");
    cmd->callback([&result, xmin, xmax, count] {
      const auto samples =
          biext::beta1_degeneration_samples(*xmin, *xmax, *count);
      json meta = metadata();
      meta["schedule"] = {{"kind", "beta1"},
                          {"x_min", *xmin},
                          {"x_max", *xmax},
                          {"samples", *count}};
      result = biext::samples_to_csv(samples, meta.dump());
    });
  }

  // ---- beta2-sweep --------------------------------------------------------
  {
    auto* cmd = add_subcommand("beta2-sweep",
                                   "beta_2 along a degenerating family, CSV");
    auto path = std::make_shared<std::string>();
    auto window = std::make_shared<SweepWindow>();
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--path", *path, "family kind")
        ->required()
        ->check(CLI::IsMember({"fay", "reducible"}));
    cmd->add_option("--kmin", window->k_min, "smallest k in t = 10^-k")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--kmax", window->k_max, "largest k in t = 10^-k")
        ->check(CLI::PositiveNumber);
    add_format_flag(cmd, *fmt, "csv");
    cmd->callback([&result, path, window] {
      const bool fay = *path == "fay";
      const int k_min = window->k_min > 0 ? window->k_min : (fay ? 8 : 3);
      const int k_max = window->k_max > 0 ? window->k_max : (fay ? 20 : 12);
      const auto ts = biext::geometric_schedule(k_min, k_max);
      const biext::DegenerationPath family =
          fay ? biext::DegenerationPath::irreducible(
                    biext::SiegelPoint::make(1, {biext::Complex(0.0, 1.2)}),
                    {biext::Complex(0.2, 0.0)}, ts)
              : biext::DegenerationPath::reducible(biext::Complex(0.0, 1.1),
                                                   biext::Complex(0.0, 1.3), ts);
      const auto samples = biext::sweep(
          family, [](const biext::SiegelPoint& om) { return biext::beta2(om); });
      json meta = metadata();
      meta["schedule"] = {{"kind", *path}, {"k_min", k_min}, {"k_max", k_max}};
      if (fay) {
        meta["schedule"]["omega0"] = {{0.0, 1.2}};
        meta["schedule"]["v"] = {{0.2, 0.0}};
      } else {
        meta["schedule"]["tau1"] = {0.0, 1.1};
        meta["schedule"]["tau2"] = {0.0, 1.3};
      }
      result = biext::samples_to_csv(samples, meta.dump());
    });
  }

  // ---- fit ------------------------------------------------------------
  {
    auto* cmd = add_subcommand("fit", "fit a log|t| + b loglog(1/|t|) + c to a CSV");
    auto input = std::make_shared<std::string>();
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--input", *input, "CSV file (t,log_t,loglog_t,value)")
        ->required();
    add_format_flag(cmd, *fmt, "json");
    cmd->callback([&result, input] {
      const auto samples = biext::samples_from_csv(read_file(*input));
      const biext::AsymptoticFit fit = biext::fit_asymptotics(samples);
      json out = json::parse(biext::to_json(fit));
      out["samples"] = samples.size();
      out["meta"] = metadata();
      result = out.dump();
    });
  }

  // ---- chern ------------------------------------------------------------
  {
    auto* cmd = add_subcommand("chern", "Chern class of the extended bundle");
    auto g = std::make_shared<int>(0);
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--g", *g, "genus")->required();
    add_format_flag(cmd, *fmt, "json");
    cmd->callback([&result, g] {
      json out = json::parse(biext::to_json(biext::chern_biextension(biext::Genus(*g))));
      out["g"] = *g;
      out["meta"] = metadata();
      result = out.dump();
    });
  }

  // ---- solve-r0 -----------------------------------------------------------
  {
    auto* cmd = add_subcommand("solve-r0",
                                   "irreducible-boundary coefficient from the "
                                   "hyperelliptic relation");
    auto g = std::make_shared<int>(0);
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--g", *g, "genus")->required();
    add_format_flag(cmd, *fmt, "json");
    cmd->callback([&result, g] {
      const biext::R0Solution sol = biext::solve_r0_full(biext::Genus(*g));
      json out;
      out["g"] = *g;
      out["r0"] = sol.r0.get_str();
      json c = json::object();
      for (const auto& [label, value] : sol.c) c[label] = value.get_str();
      out["c"] = c;
      out["meta"] = metadata();
      result = out.dump();
    });
  }

  // ---- faltings -----------------------------------------------------------
  {
    auto* cmd = add_subcommand("faltings",
                                   "reference asymptotics of 3g delta_g");
    auto g = std::make_shared<int>(0);
    auto h = std::make_shared<int>(-1);
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--g", *g, "genus")->required();
    cmd->add_option("--h", *h, "genus of one side; omit for the irreducible boundary");
    add_format_flag(cmd, *fmt, "json");
    cmd->callback([&result, g, h] {
      const std::optional<int> side = *h >= 0 ? std::optional<int>(*h) : std::nullopt;
      const auto [log_c, loglog_c] = biext::faltings_reference(biext::Genus(*g), side);
      json out;
      out["g"] = *g;
      out["boundary"] = side ? "delta_" + std::to_string(*side) : "delta_0";
      out["log"] = log_c.get_str();
      out["loglog"] = loglog_c.get_str();
      out["meta"] = metadata();
      result = out.dump();
    });
  }

  // ---- incommensurable ------------------------------------------------------
  {
    auto* cmd = add_subcommand("incommensurable",
                                   "linear independence of the boundary "
                                   "coefficient vectors");
    auto g = std::make_shared<int>(0);
    auto fmt = std::make_shared<std::string>();
    cmd->add_option("--g", *g, "genus")->required();
    add_format_flag(cmd, *fmt, "json");
    cmd->callback([&result, g] {
      json out;
      out["g"] = *g;
      out["independent"] = biext::incommensurability_check(biext::Genus(*g));
      out["meta"] = metadata();
      result = out.dump();
    });
  }

  try {
    app.parse(argc, argv);
    write_output(output, result);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help and friends
    json err;
    err["error"] = {{"kind", "usage"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    json err;
    err["error"] = {{"kind", "numeric-domain"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err;
    err["error"] = {{"kind", "validation"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  }
}
