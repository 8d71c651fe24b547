#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/cohomology.hpp"
#include "gradedlie/completion.hpp"
#include "gradedlie/derivation.hpp"
#include "gradedlie/parallel.hpp"
#include "gradedlie/parse.hpp"
#include "gradedlie/reports.hpp"
#include "gradedlie/witt.hpp"

namespace {

using namespace gradedlie;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int checked_bound(int weight_bound) {
  if (weight_bound == 0 || weight_bound < -40 || weight_bound > 40)
    throw DomainError("weight bound must be nonzero with |weight| <= 40");
  return weight_bound;
}

FieldSignature make_signature(int r1, int r2, int s, const std::string& variant) {
  FieldSignature sig;
  sig.r1 = r1;
  sig.r2 = r2;
  sig.s_size = s;
  sig.variant = variant == "crystalline" ? CohomologyVariant::kCrystalline
                                         : CohomologyVariant::kSoule;
  return sig;
}

std::string signature_text(int r1, int r2, int s) {
  return "r1=" + std::to_string(r1) + " r2=" + std::to_string(r2) + " s=" + std::to_string(s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const ReportTable& table, const std::string& format, const std::string& output) {
  const std::string body = render(table, parse_format(format));
  if (output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw DomainError("cannot write output file '" + output + "'");
  out << body;
  out.flush();
  if (!out) throw DomainError("cannot write output file '" + output + "'");
}

ReportTable dims_table(const FieldSignature& sig, int r1, int r2, int s,
                       const std::string& variant, int n_max) {
  if (n_max < 0) throw DomainError("n-max must be nonnegative");
  ReportTable t;
  t.command = "dims";
  t.title = "zeta vanishing orders and h1 dimensions";
  t.columns = {"n", "d_n", "h1"};
  for (int n = 1; n <= n_max; ++n)
    t.rows.push_back({std::to_string(n), std::to_string(dn(sig, n)),
                      std::to_string(h1_dim(sig, n))});
  t.notes = {{"signature", signature_text(r1, r2, s)}, {"variant", variant}};
  return t;
}

ReportTable motivic_table(const FieldSignature& sig, int r1, int r2, int s,
                          const std::string& variant, int weight_bound, int gap) {
  WeightedCompletionInput input = motivic_completion_input(sig, checked_bound(weight_bound));
  input.gap = gap;
  const PresentationReport report = weighted_completion_presentation(input);
  const DimensionTable dims = witt_dims(report.presentation.spec(), weight_bound);

  ReportTable t;
  t.command = "motivic-lie";
  t.title = "motivic lie algebra dimension table";
  t.columns = {"weight", "dim"};
  for (int m = 1; m <= -weight_bound; ++m)
    t.rows.push_back({std::to_string(-m), dims.at(-m).str()});

  const GeneratorSpec named = motivic_generator_spec(sig, weight_bound);
  std::string generators;
  for (const Generator& g : named.generators()) {
    if (!generators.empty()) generators += " ";
    generators += g.label + ":" + std::to_string(g.weight);
  }
  if (generators.empty()) generators = "none";
  std::string audit;
  for (const std::string& line : report.audit) {
    if (!audit.empty()) audit += " | ";
    audit += line;
  }
  t.notes = {{"signature", signature_text(r1, r2, s)},
             {"variant", variant},
             {"weight_bound", std::to_string(weight_bound)},
             {"generators", generators},
             {"freeness",
              report.freeness == Freeness::kCertifiedFree ? "CERTIFIED-FREE" : "UNKNOWN"},
             {"obstruction_ceiling", std::to_string(report.obstruction_ceiling)},
             {"audit", audit}};
  return t;
}

ReportTable cohomology_table(const std::string& path, int max_degree, int weight_bound) {
  const GradedLiePresentation pres = parse_presentation(read_file(path), weight_bound);
  const CohomologyReport report = ce_cohomology(pres, max_degree, weight_bound);
  const int sign = report.cochain_sign;

  ReportTable t;
  t.command = "cohomology";
  t.title = "chevalley-eilenberg cohomology";
  t.columns = {"degree", "weight", "h_dim", "cochain_dim"};
  for (const auto& [degree, dims] : report.h)
    for (const auto& [mag, value] : dims)
      t.rows.push_back({std::to_string(degree), std::to_string(sign * mag), value.str(),
                        report.cochain_dim(degree, mag).str()});

  std::string generators;
  for (const Generator& g : pres.spec().generators()) {
    if (!generators.empty()) generators += " ";
    generators += g.label + ":" + std::to_string(g.weight);
  }
  if (generators.empty()) generators = "none";
  t.notes = {{"generators", generators},
             {"relations", std::to_string(pres.relations().size())},
             {"max_degree", std::to_string(max_degree)},
             {"weight_bound", std::to_string(weight_bound)}};
  return t;
}

ReportTable galois_table(bool model, int degree_max, const std::string& elements_path,
                         int weight_bound_or_zero, bool modulo_inner) {
  const auto& alg = rank_two_algebra();
  std::vector<std::pair<LieElement, IharaDegree>> elements;
  std::string source;
  std::string degrees;
  if (model) {
    if (degree_max < 3) throw DomainError("degree-max must be at least 3");
    for (int m = 1; 2 * m + 1 <= degree_max; ++m)
      elements.push_back({model_sigma(m), {2 * m + 1}});
    source = "depth-1 models ad(x)^(2m)(y), MODEL approximations only";
  } else {
    for (const LieElement& e : parse_element_lines(read_file(elements_path), alg)) {
      const std::optional<int> w = e.weight();
      if (!w) throw DomainError("element is zero or not homogeneous");
      elements.push_back({e, {-*w / 2}});
    }
    source = "user elements";
  }
  for (const auto& [e, degree] : elements) {
    if (!degrees.empty()) degrees += " ";
    degrees += std::to_string(degree.m);
  }

  const int bound =
      checked_bound(weight_bound_or_zero != 0 ? weight_bound_or_zero : -2 * degree_max);
  const GenerationReport report = galois_image_report(elements, bound, modulo_inner);

  ReportTable t;
  t.command = "galois";
  t.title = "galois image generation report";
  t.columns = {"weight", "degree", "observed", "bound", "witnesses"};
  std::map<int, std::string> witnesses;
  for (const IndependenceCertificate& cert : report.certificates) {
    std::string joined;
    for (const std::string& w : cert.witnesses) {
      if (!joined.empty()) joined += " ";
      joined += w;
    }
    witnesses[cert.weight] = joined;
  }
  for (int m = 2; m <= -bound; m += 2) {
    const auto hit = witnesses.find(-m);
    t.rows.push_back({std::to_string(-m), std::to_string(m / 2),
                      report.freeness.observed.at(-m).str(),
                      report.freeness.expected.at(-m).str(),
                      hit == witnesses.end() ? "" : hit->second});
  }
  t.notes = {{"verdict", report.freeness.verdict_string()},
             {"modulo_inner", report.modulo_inner ? "true" : "false"},
             {"elements", source},
             {"degrees", degrees},
             {"weight_bound", std::to_string(bound)}};
  return t;
}

ReportTable polylog_table(const FieldSignature& sig, int r1, int r2, int s,
                          const std::string& variant, int weight_bound) {
  const DimensionTable dims = polylog_quotient_dims(sig, checked_bound(weight_bound));
  ReportTable t;
  t.command = "polylog";
  t.title = "polylogarithm quotient dimensions";
  t.columns = {"weight", "dim"};
  for (auto it = dims.rbegin(); it != dims.rend(); ++it)
    t.rows.push_back({std::to_string(it->first), it->second.str()});
  t.notes = {{"signature", signature_text(r1, r2, s)},
             {"variant", variant},
             {"weight_bound", std::to_string(weight_bound)}};
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic workbench for weight graded Lie algebras"};
  app.require_subcommand(1);

  int r1 = 1;
  int r2 = 0;
  int s = 0;
  std::string variant = "soule";
  std::string format = "text";
  std::string output;
  int n_max = 20;
  int weight_bound = -24;
  int gap = 2;
  int max_degree = 2;
  std::string presentation_path;
  bool model = false;
  int degree_max = 12;
  std::string elements_path;
  int galois_bound = 0;
  bool modulo_inner = true;

  const auto add_signature = [&](CLI::App* sub) {
    sub->add_option("--r1", r1, "number of real places");
    sub->add_option("--r2", r2, "number of complex places");
    sub->add_option("--s", s, "number of finite places in S");
    sub->add_option("--variant", variant, "first cohomology variant")
        ->check(CLI::IsMember({"soule", "crystalline"}));
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", output, "write the report to a file instead of stdout");
  };

  CLI::App* dims_cmd = app.add_subcommand("dims", "zeta vanishing orders d_n and h1 dimensions");
  add_signature(dims_cmd);
  add_output(dims_cmd);
  dims_cmd->add_option("--n-max", n_max, "largest twist n");

  CLI::App* motivic_cmd =
      app.add_subcommand("motivic-lie", "free presentation and dimensions of the motivic lie algebra");
  add_signature(motivic_cmd);
  add_output(motivic_cmd);
  motivic_cmd->add_option("--weight-bound", weight_bound, "most negative weight");
  motivic_cmd->add_option("--gap", gap, "weight gap window for the freeness certificate");

  CLI::App* cohomology_cmd =
      app.add_subcommand("cohomology", "chevalley-eilenberg cohomology of a presentation file");
  add_output(cohomology_cmd);
  cohomology_cmd->add_option("--presentation", presentation_path, "presentation file")
      ->required();
  cohomology_cmd->add_option("--max-degree", max_degree, "largest cohomological degree");
  cohomology_cmd->add_option("--weight-bound", weight_bound, "signed weight bound")->required();

  CLI::App* galois_cmd =
      app.add_subcommand("galois", "generation report for galois image candidates");
  add_output(galois_cmd);
  galois_cmd->add_flag("--model", model, "use the depth-1 model elements");
  galois_cmd->add_option("--degree-max", degree_max, "largest ihara degree for the models");
  galois_cmd->add_option("--elements", elements_path, "element file, one element per line")
      ->excludes("--model");
  galois_cmd->add_option("--weight-bound", galois_bound, "most negative weight");
  galois_cmd->add_option("--modulo-inner", modulo_inner,
                         "work in outer derivations (true) or all derivations (false)");

  CLI::App* polylog_cmd =
      app.add_subcommand("polylog", "dimensions of the polylogarithmic quotient");
  add_signature(polylog_cmd);
  add_output(polylog_cmd);
  polylog_cmd->add_option("--weight-bound", weight_bound, "most negative weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    (void)worker_count();
    if (dims_cmd->parsed()) {
      emit(dims_table(make_signature(r1, r2, s, variant), r1, r2, s, variant, n_max), format,
           output);
    } else if (motivic_cmd->parsed()) {
      emit(motivic_table(make_signature(r1, r2, s, variant), r1, r2, s, variant, weight_bound,
                         gap),
           format, output);
    } else if (cohomology_cmd->parsed()) {
      emit(cohomology_table(presentation_path, max_degree, checked_bound(weight_bound)), format,
           output);
    } else if (galois_cmd->parsed()) {
      if (!model && elements_path.empty())
        throw UsageError("galois requires --model or --elements");
      emit(galois_table(model, degree_max, elements_path, galois_bound, modulo_inner), format,
           output);
    } else if (polylog_cmd->parsed()) {
      emit(polylog_table(make_signature(r1, r2, s, variant), r1, r2, s, variant, weight_bound),
           format, output);
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
