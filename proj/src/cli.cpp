#include "kirwan/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kirwan/error.hpp"
#include "kirwan/generators.hpp"
#include "kirwan/report.hpp"

namespace kirwan::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

Rational parse_rational_arg(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError(std::string(what) + " must be a rational \"p/q\", got '" + text + "'");
  }
}

int parse_degree(const std::string& text) {
  try {
    std::size_t used = 0;
    const int d = std::stoi(text, &used);
    if (used != text.size() || d < 0) throw std::invalid_argument(text);
    return d;
  } catch (const std::exception&) {
    throw UsageError("degree must be a nonnegative integer, got '" + text + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "cpn:0,1,2" and "spheres:1,1" build a manifold inline; anything else is a path.
ManifoldData load_input(const std::string& input, bool validate) {
  if (input.rfind("cpn:", 0) == 0) return gen_cpn(parse_int_list(input.substr(4)));
  if (input.rfind("spheres:", 0) == 0) return gen_sphere_product(parse_int_list(input.substr(8)));
  const std::string text = read_file(input);
  return validate ? load_manifold(text) : load_manifold_unchecked(text);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotRegularValue: return kNotRegular;
    case ErrorKind::NotInKernel:
    case ErrorKind::NotInImage: return kNotInKernel;
    default: return kDataError;
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct Options {
  std::string input;
  std::string cut;
  std::string degree = "all";
  std::string format = "json";
  std::string method = "both";
  std::string coeffs;
  std::string class_file;
  std::string lambda;
  std::string w;
  std::string out_path;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const ManifoldData m = load_input(o.input, false);
  const ValidationReport r = validate_alpha_basis(m);
  if (o.format == "md") out << validation_markdown(m, r);
  else emit(out, validation_json(m, r));
  return r.ok() ? kOk : kDataError;
}

int cmd_pair(const Options& o, std::ostream& out) {
  const ManifoldData m = load_input(o.input, true);
  const CutLevel cut(m, parse_rational_arg(o.cut, "--cut"));
  const PairingMatrix pm = pairing_matrix(m, cut, parse_degree(o.degree));
  if (o.format == "md") out << pairing_matrix_markdown(pm);
  else emit(out, pairing_matrix_json(pm));
  return kOk;
}

int cmd_kernel(const Options& o, std::ostream& out, std::ostream& err, bool betti_only) {
  const ManifoldData m = load_input(o.input, true);
  const CutLevel cut(m, parse_rational_arg(o.cut, "--cut"));
  KernelMethod method = KernelMethod::Both;
  if (o.method == "residue") method = KernelMethod::Residue;
  else if (o.method == "tw") method = KernelMethod::Tw;
  else if (o.method != "both") throw UsageError("--method must be residue, tw or both");

  const std::vector<int> degrees =
      (betti_only || o.degree == "all") ? sweep_degrees(m) : std::vector<int>{parse_degree(o.degree)};
  const std::vector<KernelReport> reports = sweep_kernels(m, cut, degrees);

  if (o.format == "md") {
    out << (betti_only ? betti_table_markdown(m, cut.value(), reports)
                       : kernel_table_markdown(m, cut.value(), reports, method));
  } else {
    Json j;
    j["manifold"] = m.name();
    j["cut"] = cut.value().str();
    if (betti_only) {
      Json table = Json::object();
      for (const auto& r : reports) table[std::to_string(r.degree)] = r.betti;
      j["betti"] = std::move(table);
    } else {
      j["method"] = o.method;
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(kernel_report_json(r));
      j["degrees"] = std::move(list);
      j["note"] = "degrees above 2n-2 lie entirely in the kernel";
    }
    emit(out, j);
  }
  if (method == KernelMethod::Both || betti_only) {
    for (const auto& r : reports) {
      if (!r.equal) {
        err << "residue and vanishing-locus kernels disagree in degree " << r.degree << " ("
            << r.witness_side << "); the alpha tables are inconsistent\n";
        return kDataError;
      }
    }
  }
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const ManifoldData m = load_input(o.input, true);
  const CutLevel cut(m, parse_rational_arg(o.cut, "--cut"));
  const int d = parse_degree(o.degree);
  EquivariantClass eta;
  if (!o.class_file.empty()) {
    Json j;
    try {
      j = Json::parse(read_file(o.class_file));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::Parse, std::string("malformed class JSON: ") + e.what());
    }
    eta = class_from_json(m, j);
    if (eta.degree != d) throw UsageError("--degree does not match the class file");
  } else if (!o.coeffs.empty()) {
    const DegreeBasis basis = degree_basis(m, d);
    VectorQ coeffs;
    std::stringstream ss(o.coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational_arg(item, "--coeffs"));
    if (coeffs.size() != basis.size())
      throw UsageError("--coeffs needs " + std::to_string(basis.size()) + " entries for degree " +
                       std::to_string(d));
    eta = combine(m, basis, coeffs);
  } else {
    throw UsageError("decompose needs --coeffs or --class");
  }
  const DecompositionCertificate cert = decompose(m, eta, cut);
  if (o.format == "md") out << certificate_markdown(m, cert);
  else emit(out, certificate_json(m, cert));
  return kOk;
}

int cmd_bmatrix(const Options& o, std::ostream& out) {
  const ManifoldData m = load_input(o.input, true);
  const CutLevel cut(m, parse_rational_arg(o.cut, "--cut"));
  const BMatrix b = b_matrix(m, cut, parse_degree(o.degree));
  if (o.format == "md") out << b_matrix_markdown(b);
  else emit(out, b_matrix_json(b));
  return b.ok() ? kOk : kDataError;
}

int write_generated(const ManifoldData& m, const Options& o, std::ostream& out) {
  const std::string text = dump_manifold(m);
  if (o.out_path.empty() || o.out_path == "-") {
    out << text;
    return kOk;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Parse, "cannot write '" + o.out_path + "'");
  file << text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kirwan kernels and reduced-space Betti numbers for circle actions"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "manifold JSON path, or cpn:<lambda> / spheres:<w>")->required();
    sub->add_option("--format", o.format, "json or md")->check(CLI::IsMember({"json", "md"}));
  };
  auto* validate = app.add_subcommand("validate", "check a manifold document");
  add_input(validate);
  auto* pair = app.add_subcommand("pair", "residue pairing matrix in one degree");
  add_input(pair);
  pair->add_option("--cut", o.cut, "regular value p/q")->required();
  pair->add_option("--degree", o.degree, "even degree")->required();
  auto* kernel = app.add_subcommand("kernel", "kernel of the Kirwan map");
  add_input(kernel);
  kernel->add_option("--cut", o.cut, "regular value p/q")->required();
  kernel->add_option("--degree", o.degree, "degree or 'all'");
  kernel->add_option("--method", o.method, "residue, tw or both");
  auto* betti = app.add_subcommand("betti", "Betti numbers of the reduced space");
  add_input(betti);
  betti->add_option("--cut", o.cut, "regular value p/q")->required();
  auto* dec = app.add_subcommand("decompose", "split a kernel class as eta+ + eta-");
  add_input(dec);
  dec->add_option("--cut", o.cut, "regular value p/q")->required();
  dec->add_option("--degree", o.degree, "degree of the class")->required();
  dec->add_option("--coeffs", o.coeffs, "coefficients over the degree basis, comma-separated");
  dec->add_option("--class", o.class_file, "class JSON file {degree, restrictions}");
  auto* bm = app.add_subcommand("bmatrix", "B-matrix triangularity diagnostics");
  add_input(bm);
  bm->add_option("--cut", o.cut, "regular value p/q")->required();
  bm->add_option("--degree", o.degree, "even degree")->required();
  auto* gen = app.add_subcommand("generate", "emit example manifold data");
  gen->require_subcommand(1);
  auto* cpn = gen->add_subcommand("cpn", "complex projective space");
  cpn->add_option("--lambda", o.lambda, "strictly increasing integers, comma-separated")->required();
  cpn->add_option("--out", o.out_path, "output path (default stdout)");
  auto* spheres = gen->add_subcommand("spheres", "product of two-spheres");
  spheres->add_option("--w", o.w, "nonzero rotation weights, comma-separated")->required();
  spheres->add_option("--out", o.out_path, "output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (pair->parsed()) return cmd_pair(o, out);
    if (kernel->parsed()) return cmd_kernel(o, out, err, false);
    if (betti->parsed()) return cmd_kernel(o, out, err, true);
    if (dec->parsed()) return cmd_decompose(o, out);
    if (bm->parsed()) return cmd_bmatrix(o, out);
    if (cpn->parsed()) return write_generated(gen_cpn(parse_int_list(o.lambda)), o, out);
    if (spheres->parsed()) return write_generated(gen_sphere_product(parse_int_list(o.w)), o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  err << app.help();
  return kUsage;
}

}  // namespace kirwan::cli
