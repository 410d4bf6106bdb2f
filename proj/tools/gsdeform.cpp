// gsdeform: command-line front end.
//
// Exit codes: 0 pass / Trivial, 1 a check failed / NonTrivial, 2 inconclusive, 3 parse or usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsdeform/demos.hpp"
#include "gsdeform/embedded.hpp"
#include "gsdeform/hosts.hpp"
#include "gsdeform/sampling.hpp"
#include "gsdeform/transfer.hpp"
#include "gsdeform/triviality.hpp"

using namespace gsdeform;

namespace {

constexpr int kUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw UsageError("cannot write " + path);
}

// A presentation argument: a file, or builtin:example4-dga / builtin:loopspace-dga.
std::string presentation_text(const std::string& arg) {
  if (arg == "builtin:example4-dga") return embedded::kExample4Dga;
  if (arg == "builtin:loopspace-dga") return embedded::kLoopSpaceDga;
  return read_file(arg);
}

BarProduct product_for(const Presentation& a, const std::string& choice) {
  if (choice == "shuffle") return BarProduct::Shuffle;
  if (choice == "perturbed") return BarProduct::Perturbed;
  return a.E.empty() ? BarProduct::Shuffle : BarProduct::Perturbed;
}

std::vector<std::pair<std::string, std::string>> class_overrides(const std::vector<std::string>& specs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--class expects name=cocycle, got '" + s + "'");
    out.emplace_back(s.substr(0, eq), s.substr(eq + 1));
  }
  return out;
}

// Where GS cochains live: a Hopf algebra given directly, or H*(BA) of a DGA with --bar-cap.
struct HostOptions {
  std::string pres;
  int bar_cap = -1;
  std::string product = "auto";
  std::vector<std::string> classes;

  void add_to(CLI::App* cmd) {
    cmd->add_option("pres", pres, "presentation file, builtin:example4 or builtin:loopspace")->required();
    cmd->add_option("--bar-cap", bar_cap, "use the homology of the bar construction capped at N");
    cmd->add_option("--product", product, "bar product: auto, shuffle or perturbed")
        ->check(CLI::IsMember({"auto", "shuffle", "perturbed"}));
    cmd->add_option("--class", classes, "name=cocycle override for a homology class");
  }

  std::shared_ptr<const Presentation> load() const {
    const int cap = bar_cap < 0 ? 8 : bar_cap;
    if (pres == "builtin:example4") return example4_homology(cap).host();
    if (pres == "builtin:loopspace") return loopspace_homology(cap).host();
    const std::string text = presentation_text(pres);
    if (bar_cap < 0) {
      auto p = std::make_shared<Presentation>(parse_presentation(text));
      if (!p->has_delta()) throw UsageError(pres + " has no coproduct; pass --bar-cap to work on H*(BA)");
      return p;
    }
    const Presentation a = parse_presentation(text);
    return bar_homology(text, product_for(a, product), bar_cap, class_overrides(classes)).host();
  }
};

void add_lines(RunReport& r, const std::string& prefix, const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) r.note(prefix + line);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GF(2) engine for order-4 deformations of DG Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "print the report as JSON");

  RunReport report;
  std::function<void()> action;

  // validate
  std::string pres;
  auto* validate = app.add_subcommand("validate", "check the DG (Hopf) algebra axioms of a presentation");
  validate->add_option("pres", pres, "presentation file")->required();
  validate->callback([&] {
    action = [&] {
      const Presentation p = parse_presentation(presentation_text(pres));
      report = validate_dgha(p);
      report.note("basis: " + std::to_string(p.B().size()) + " elements, cap " + std::to_string(p.B().cap()));
    };
  });

  // bar
  int cap = 8;
  std::string emit_path, product = "auto";
  auto* bar = app.add_subcommand("bar", "bar construction and its DGHA invariants");
  bar->add_option("pres", pres, "DGA presentation")->required();
  bar->add_option("--cap", cap, "bar-degree cap")->required();
  bar->add_option("--emit", emit_path, "write the bar construction as a presentation");
  bar->add_option("--product", product, "auto, shuffle or perturbed")->check(CLI::IsMember({"auto", "shuffle", "perturbed"}));
  bar->callback([&] {
    action = [&] {
      auto a = std::make_shared<Presentation>(parse_presentation(presentation_text(pres)));
      const BarComplex words(a, cap);
      const BarProduct which = product_for(*a, product);
      const auto B = bar_presentation(words, which);
      report = validate_dgha(*B);
      report = [&] {
        RunReport r("bar");
        r.note("words of bar-degree <= " + std::to_string(cap) + ": " + std::to_string(B->B().size()) + ", " +
               (which == BarProduct::Shuffle ? "shuffle" : "perturbed") + " product");
        r.merge(report);
        return r;
      }();
      if (!emit_path.empty()) {
        write_file(emit_path, emit_presentation(*B));
        report.artifact(emit_path);
      }
    };
  });

  // homology
  std::vector<std::string> classes;
  auto* hom = app.add_subcommand("homology", "cohomology of the bar construction with its induced structure");
  hom->add_option("pres", pres, "DGA presentation")->required();
  hom->add_option("--cap", cap, "bar-degree cap")->required();
  hom->add_option("--emit", emit_path, "write H as a presentation");
  hom->add_option("--product", product, "auto, shuffle or perturbed")->check(CLI::IsMember({"auto", "shuffle", "perturbed"}));
  hom->add_option("--class", classes, "name=cocycle override for a homology class");
  hom->callback([&] {
    action = [&] {
      const std::string text = presentation_text(pres);
      const Presentation a = parse_presentation(text);
      const BarHomology bh = bar_homology(text, product_for(a, product), cap, class_overrides(classes));
      report = RunReport("homology");
      const auto& hb = bh.h.H->B();
      report.note("classes of degree <= " + std::to_string(bh.h.top));
      for (int x = 0; x < static_cast<int>(hb.size()); ++x)
        report.note("  " + hb.name(x) + " (degree " + std::to_string(hb.degree(x)) + ") = cls(" +
                    render(bh.h.representative(x), bh.bar->B()) + ")");
      report.merge(bh.h.checks);
      report.merge(validate_dgha(*bh.h.H));
      if (!emit_path.empty()) {
        write_file(emit_path, emit_presentation(*bh.h.H));
        report.artifact(emit_path);
      }
    };
  });

  // hga-check
  auto* hga = app.add_subcommand("hga-check", "homotopy Gerstenhaber relations of the E_{1,q} operations");
  hga->add_option("pres", pres, "DGA presentation with E lines")->required();
  hga->add_option("--cap", cap, "input-degree window")->required();
  hga->callback([&] {
    action = [&] { report = hga_relations_check(parse_presentation(presentation_text(pres)), cap); };
  });

  // gs-d2
  HostOptions host_opts;
  SampleOptions samples;
  auto* d2 = app.add_subcommand("gs-d2", "D² = 0 and commuting differentials on seeded random cochains");
  host_opts.add_to(d2);
  d2->add_option("--window", samples.window, "input-degree window")->required();
  d2->add_option("--samples", samples.samples, "number of random cochains")->required();
  d2->add_option("--seed", samples.seed, "generator seed")->required();
  d2->callback([&] {
    action = [&] { report = check_d_squared(host_opts.load(), samples); };
  });

  // gs-cocycle
  std::string cochain_path;
  int window = -1;
  auto* cocycle = app.add_subcommand("gs-cocycle", "test whether ω^{1,3} + ω^{2,2} + ω^{3,1} is a GS 2-cocycle");
  host_opts.add_to(cocycle);
  cocycle->add_option("cochain", cochain_path, "cochain file")->required();
  cocycle->add_option("--window", window, "input-degree window (default: the largest safe one)");
  cocycle->callback([&] {
    action = [&] {
      const GSHost host(host_opts.load());
      report = is_gs_2cocycle(host, parse_cochain(read_file(cochain_path), host.basis()), window);
    };
  });

  // gs-trivial
  std::string certificate_path;
  auto* trivial = app.add_subcommand("gs-trivial", "decide whether a GS 2-cocycle is D of a 1-cochain");
  host_opts.add_to(trivial);
  trivial->add_option("cochain", cochain_path, "cochain file")->required();
  trivial->add_option("--window", window, "input-degree window")->required();
  trivial->add_option("--certificate", certificate_path, "write the infeasibility certificate here");
  trivial->callback([&] {
    action = [&] {
      const GSHost host(host_opts.load());
      const GSCochain omega = parse_cochain(read_file(cochain_path), host.basis());
      TrivialityResult t = decide_triviality(host, omega, window);
      report = RunReport("gs-trivial");
      report.merge(t.report);
      report.note("verdict: " + to_string(t.verdict));
      if (t.verdict == Verdict::Trivial) {
        const std::string psi = emit_cochain(t.psi, "psi");
        if (psi.empty()) report.note("psi = 0");
        add_lines(report, "", psi);
      } else if (t.verdict == Verdict::NonTrivial) {
        add_lines(report, "", t.certificate_text);
        if (!certificate_path.empty()) {
          write_file(certificate_path, t.certificate_text);
          report.artifact(certificate_path);
        }
        report.add("D(ψ) = ω is solvable", false, "NonTrivial; see the certificate");
      }
    };
  });

  // transfer4
  std::string pins_path, homotopies_path;
  auto* transfer = app.add_subcommand("transfer4", "transfer the DGHA structure of BA to H through arity 4");
  transfer->add_option("pres", pres, "DGA presentation")->required();
  transfer->add_option("--cap", cap, "bar-degree cap")->required();
  transfer->add_option("--pins", pins_path, "pin file");
  transfer->add_option("--product", product, "auto, shuffle or perturbed")->check(CLI::IsMember({"auto", "shuffle", "perturbed"}));
  transfer->add_option("--class", classes, "name=cocycle override for a homology class");
  transfer->add_option("--emit", emit_path, "write the transferred ω as a cochain file");
  transfer->add_option("--homotopies", homotopies_path, "write the homotopies g_m^n");
  transfer->callback([&] {
    action = [&] {
      const std::string text = presentation_text(pres);
      const Presentation a = parse_presentation(text);
      BarHomology bh = bar_homology(text, product_for(a, product), cap, class_overrides(classes));
      std::vector<Pin> pins;
      if (!pins_path.empty()) pins = parse_pins(read_file(pins_path), bh);
      const TransferState s = run_transfer(bh, pins);
      report = RunReport("transfer4");
      report.merge(s.report);
      const std::string omega = emit_cochain(s.omega);
      add_lines(report, "", omega.empty() ? "omega = 0\n" : omega);
      add_lines(report, "", emit_homotopies(s));
      if (!emit_path.empty()) {
        write_file(emit_path, omega);
        report.artifact(emit_path);
      }
      if (!homotopies_path.empty()) {
        write_file(homotopies_path, emit_homotopies(s));
        report.artifact(homotopies_path);
      }
    };
  });

  // demo
  DemoOptions demo;
  std::string which;
  auto* demo_cmd = app.add_subcommand("demo", "built-in examples: example4 or loopspace");
  demo_cmd->add_option("name", which, "example4 or loopspace")->required()->check(CLI::IsMember({"example4", "loopspace"}));
  demo_cmd->add_option("--cap", demo.cap, "bar-degree cap");
  demo_cmd->add_flag("--corrupt", demo.corrupt, "example4: replace ω^{2,2}(β₂⊗β₂) by α₁⊗α₂");
  demo_cmd->add_option("--pin-i", demo.pin_i, "loopspace: g₂¹(β⊗β) = [a2|a3] (2) or [a3|a2] (3)")
      ->check(CLI::IsMember({2, 3}));
  demo_cmd->add_flag("--skip-transfer", demo.skip_transfer, "loopspace: decide on a stored ω");
  demo_cmd->add_option("--omega", demo.omega_path, "loopspace: cochain file for --skip-transfer");
  demo_cmd->add_option("--certificate", demo.certificate_path, "loopspace: certificate output path");
  demo_cmd->callback([&] {
    action = [&] { report = which == "example4" ? demo_example4(demo) : demo_loopspace(demo); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  int code = 0;
  try {
    action();
    code = exit_code(report.status());
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const WindowViolation& e) {
    report.inconclusive("window", std::string("window violation: ") + e.what());
    code = 2;
  } catch (const AlgebraError& e) {
    report.add("input algebra", false, e.what());
    code = 1;
  } catch (const ContractViolation& e) {
    report.add("input contract", false, e.what());
    code = 1;
  }
  std::cout << (json ? report.json() : report.text());
  return code;
}
