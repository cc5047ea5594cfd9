#include "cli.hpp"

#include "hmorita/errors.hpp"
#include "hmorita/harness.hpp"
#include "hmorita/io.hpp"
#include "hmorita/morita.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hmorita::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open output file '" + path + "'");
  file << text;
}

ProbeMode probe_mode(const CliConfig& config) { return config.strict ? ProbeMode::Strict : ProbeMode::Default; }

// A D-side document lifts to (M_n(D), *) when it names S, otherwise to
// (M_n(D), -^t) with n from --n or the document.
FormRecord lift_document(const io::FormDocument& doc, const CliConfig& config, EquivalenceReport& report) {
  const FormRecord phi = io::to_form(doc);
  report.input_side = phi.side();
  report.input_epsilon = phi.epsilon();
  if (InvolutionHandle involution = io::document_involution(doc)) {
    FormRecord lifted = morita_lift(phi, involution);
    report.exact_roundtrip = morita_reduce(lifted, probe_mode(config)).form == phi;
    report.depends_on_s_choice = true;
    report.output_side = lifted.side();
    report.output_epsilon = lifted.epsilon();
    return lifted;
  }
  FormRecord lifted = lift_form(phi, config.lift_n.value_or(doc.n));
  report.exact_roundtrip = extract_form(lifted, probe_mode(config)) == phi;
  report.output_side = lifted.side();
  report.output_epsilon = lifted.epsilon();
  return lifted;
}

int run_scale(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const FormRecord form = io::read_form(read_file(config.input_path));
  const FormRecord scaled = scale_form(form);
  EquivalenceReport report{form.side(), scaled.side(), form.epsilon(), scaled.epsilon(), std::nullopt,
                           unscale_form(scaled, form.involution()) == form, true};
  emit(config.output_path, out, io::write_form(scaled));
  emit(config.report_path, err, serialize_report(report));
  return kOk;
}

int run_reduce(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const FormRecord form = io::read_form(read_file(config.input_path));
  if (form.side() == Side::OverMnD_BarT) {
    // Second half of the pipeline only: Gram extraction.
    const FormRecord reduced = extract_form(form, probe_mode(config));
    EquivalenceReport report{form.side(), reduced.side(), form.epsilon(), reduced.epsilon(), std::nullopt,
                             lift_form(reduced, form.n()) == form, false};
    emit(config.output_path, out, io::write_form(reduced));
    emit(config.report_path, err, serialize_report(report));
    return kOk;
  }
  const Reduction r = morita_reduce(form, probe_mode(config));
  emit(config.output_path, out, io::write_form(r.form));
  emit(config.report_path, err, serialize_report(r.report));
  return kOk;
}

int run_lift(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const io::FormDocument doc = io::parse_form_document(read_file(config.input_path));
  EquivalenceReport report;
  const FormRecord lifted = lift_document(doc, config, report);
  emit(config.output_path, out, io::write_form(lifted));
  emit(config.report_path, err, serialize_report(report));
  return kOk;
}

int run_roundtrip(const CliConfig& config, std::ostream& out) {
  const io::FormDocument doc = io::parse_form_document(read_file(config.input_path));
  const FormRecord form = io::to_form(doc);
  EquivalenceReport report;
  report.input_side = form.side();
  report.input_epsilon = form.epsilon();
  switch (form.side()) {
    case Side::OverMnD_Star: {
      const Reduction r = morita_reduce(form, probe_mode(config));
      report = r.report;
      report.exact_roundtrip = r.report.exact_roundtrip && morita_lift(r.form, form.involution()) == form;
      break;
    }
    case Side::OverMnD_BarT: {
      const FormRecord reduced = extract_form(form, probe_mode(config));
      report.output_side = reduced.side();
      report.output_epsilon = reduced.epsilon();
      report.exact_roundtrip = lift_form(reduced, form.n()) == form;
      break;
    }
    case Side::OverD: {
      (void)lift_document(doc, config, report);
      report.output_side = Side::OverD;
      report.output_epsilon = form.epsilon();
      break;
    }
  }
  emit(config.output_path, out, serialize_report(report));
  if (!report.exact_roundtrip) throw InvariantViolation("round trip did not reproduce the input form exactly");
  return kOk;
}

int run_verify(const CliConfig& config, std::ostream& out) {
  io::FormDocument doc = io::parse_form_document(read_file(config.input_path));
  const Epsilon declared = doc.epsilon;
  doc.epsilon = std::nullopt;
  const FormRecord form = io::to_form(doc);

  const Symmetry symmetry = check_symmetry(form);
  const bool declared_ok = !declared || satisfies_symmetry(form, *declared);
  const bool sesquilinear = check_sesquilinear(form, config.seed);
  const bool nonsingular = is_nonsingular(form);

  std::ostringstream os;
  os << "side: " << to_string(form.side()) << "\n"
     << "declared_epsilon: " << epsilon_to_string(declared) << "\n"
     << "symmetry: " << to_string(symmetry) << "\n"
     << "declared_epsilon_holds: " << (declared_ok ? "true" : "false") << "\n"
     << "sesquilinear: " << (sesquilinear ? "true" : "false") << "\n"
     << "nonsingular: " << (nonsingular ? "true" : "false") << "\n";
  if (form.side() == Side::OverMnD_Star) {
    os << "epsilon0: " << to_int(form.involution()->epsilon0()) << "\n";
  }
  emit(config.output_path, out, os.str());
  if (!declared_ok) throw InvariantViolation("declared epsilon " + epsilon_to_string(declared) + " does not hold");
  if (!sesquilinear) throw InvariantViolation("sesquilinearity probes failed (seed " + std::to_string(config.seed) + ")");
  return kOk;
}

int run_fuzz_command(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const FuzzReport report = run_fuzz(config.seed, config.trials, probe_mode(config));
  emit(config.output_path, out, serialize_fuzz_report(report));
  if (!report.ok()) {
    for (const auto& t : report.invariants) {
      if (t.failed != 0) err << "InvariantViolation: " << t.name << ": " << t.first_failure << "\n";
    }
    return kInvariant;
  }
  return kOk;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command != Command::Fuzz && config.input_path.empty()) {
      throw ParseError("--input is required for this command");
    }
    if (config.trials < 1) throw ParseError("--trials must be at least 1");
    switch (config.command) {
      case Command::Scale: return run_scale(config, out, err);
      case Command::Reduce: return run_reduce(config, out, err);
      case Command::Lift: return run_lift(config, out, err);
      case Command::Roundtrip: return run_roundtrip(config, out);
      case Command::Verify: return run_verify(config, out);
      case Command::Fuzz: return run_fuzz_command(config, out, err);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.error_class()) {
      case ErrorClass::Parse: return kParse;
      case ErrorClass::Math: return kMath;
      case ErrorClass::Invariant: return kInvariant;
    }
  }
  return kOk;
}

int main_with_args(int argc, char** argv) {
  CLI::App app{"Exact hermitian Morita theory: scaling, Gram extraction and lifting of forms"};
  app.require_subcommand(1);

  CliConfig config;
  const auto add_common = [&config](CLI::App* sub, bool needs_input) {
    auto* input = sub->add_option("--input", config.input_path, "Form file (JSON)");
    if (needs_input) input->required();
    sub->add_option("--output", config.output_path, "Write the result here instead of stdout");
    sub->add_flag("--strict", config.strict, "Verify every Gram-extraction probe");
  };

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"scale", "Scale a form over (M_n(D), *) to one over (M_n(D), -^t)", Command::Scale},
      {"reduce", "Reduce a form over (M_n(D), *) or (M_n(D), -^t) to one over (D, -)", Command::Reduce},
      {"lift", "Lift a form over (D, -) to M_n(D)", Command::Lift},
      {"roundtrip", "Check that reduce and lift invert each other on the input", Command::Roundtrip},
      {"verify", "Symmetry, sesquilinearity and nonsingularity of one form", Command::Verify},
      {"fuzz", "Randomized invariant suite", Command::Fuzz},
  };
  std::optional<std::size_t> lift_n;
  for (const auto& entry : entries) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    add_common(sub, entry.command != Command::Fuzz);
    if (entry.command == Command::Scale || entry.command == Command::Reduce || entry.command == Command::Lift) {
      sub->add_option("--report", config.report_path, "Write the equivalence report here instead of stderr");
    }
    if (entry.command == Command::Lift || entry.command == Command::Roundtrip) {
      sub->add_option("--n", lift_n, "Matrix size n of the target when the file has no S")->check(CLI::PositiveNumber);
    }
    if (entry.command == Command::Verify || entry.command == Command::Fuzz) {
      sub->add_option("--seed", config.seed, "Random seed");
    }
    if (entry.command == Command::Fuzz) {
      sub->add_option("--trials", config.trials, "Number of randomized trials")->check(CLI::PositiveNumber);
    }
    sub->callback([&config, command = entry.command] { config.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  config.lift_n = lift_n;
  return run(config, std::cout, std::cerr);
}

}  // namespace hmorita::cli
