#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ptl/commands.hpp"

namespace {

struct GlobalFlags {
  std::string format = "text";
  std::string report_path;
};

void emit(const ptl::CommandResult& res, const GlobalFlags& flags) {
  std::string body = (flags.format == "structured") ? res.report.dump(2) + "\n"
                                                    : ptl::render_text(res.report);
  if (!flags.report_path.empty()) {
    std::ofstream out(flags.report_path);
    out << body;
  } else {
    std::cout << body;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic engine for Leibniz algebras, proto-twilled structures,\n"
               "deformation maps, their cohomology and the controlling/governing/pair\n"
               "L-infinity algebras"};
  app.require_subcommand(1);

  GlobalFlags flags;
  ptl::CommandOptions opts;
  std::string command;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", flags.format, "text or structured (JSON)")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--report", flags.report_path, "write the report to a file");
  };
  auto add_doc = [&](CLI::App* sub) {
    sub->add_option("document", opts.doc_path, "algebra document (JSON)")->required();
  };

  {
    auto* c = app.add_subcommand("check-leibniz", "check the Leibniz identity");
    add_doc(c);
    c->add_option("--on", opts.on, "which bracket: total, g or h");
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("check-proto", "check the proto-twilled structure equations");
    add_doc(c);
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("is-deformation-map", "test a named linear map");
    add_doc(c);
    c->add_option("--map", opts.map_name, "name of the candidate map")->required();
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("induced", "induced Leibniz algebra and representation");
    add_doc(c);
    c->add_option("--map", opts.map_name, "a deformation map")->required();
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("twist", "twist the structure by a linear map");
    add_doc(c);
    c->add_option("--map", opts.map_name, "any linear map h -> g")->required();
    c->add_option("--out", opts.out_path, "write the twisted document here");
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("cohomology", "cohomology of a deformation map");
    add_doc(c);
    c->add_option("--map", opts.map_name, "a deformation map")->required();
    c->add_option("--max-degree", opts.max_degree, "compute H^0..H^N");
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("mc-check", "Maurer-Cartan defect in the controlling algebra");
    add_doc(c);
    c->add_option("--map", opts.map_name, "candidate map")->required();
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("governing-check",
                                 "is r + candidate still a deformation map (via the twist)");
    add_doc(c);
    c->add_option("--map", opts.map_name, "a deformation map")->required();
    c->add_option("--candidate", opts.candidate_name, "the perturbation")->required();
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("pair-mc-check",
                                 "Maurer-Cartan defect of (omega, r) in the pair algebra");
    add_doc(c);
    c->add_option("--map", opts.map_name, "candidate map")->required();
    c->add_option("--subalgebra", opts.subalgebra, "full, b-prime, b-double-prime or m");
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("enumerate", "all deformation maps over a prime field");
    add_doc(c);
    c->add_option("--budget", opts.budget, "scan budget (default 10^6)");
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("zoo-build", "write a built-in example document");
    c->add_option("--kind", opts.kind, "example kind")->required();
    c->add_option("--field", opts.field_spec, "'rational' or a prime");
    c->add_option("--out", opts.out_path, "write the document here");
    add_common(c);
  }
  {
    auto* c = app.add_subcommand("zoo-verify",
                                 "classify == is-deformation-map over candidates");
    add_doc(c);
    c->add_option("--kind", opts.kind, "example kind")->required();
    c->add_option("--budget", opts.budget, "exhaustive-scan budget");
    add_common(c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  command = app.get_subcommands().front()->get_name();

  try {
    ptl::CommandResult res = ptl::run_command(command, opts);
    emit(res, flags);
    return res.exit_code;
  } catch (const ptl::Error& e) {
    ptl::CommandResult res;
    res.report = nlohmann::json{{"command", command},
                                {"error", {{"kind", ptl::error_kind_name(e.kind())},
                                           {"message", e.what()}}}};
    emit(res, flags);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
