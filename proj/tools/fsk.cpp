#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fsk/compatible.hpp"
#include "fsk/io.hpp"
#include "fsk/parse.hpp"
#include "json.hpp"

using namespace fsk;

namespace {

struct Options {
  std::string command, file, ideal, extension, lattice, json;
  bool domain = false;
  std::optional<unsigned> sbound, cap;
};

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

unsigned iteration_cap(const Options& o) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("FSK_CAP")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, std::string("FSK_CAP is not a number: ") + env);
    }
  }
  return 64;
}

const Ideal& require_ideal(const JobSpec& job, const Options& o) {
  if (o.ideal.empty()) throw Error(ErrorKind::InvalidArgument, o.command + " needs --ideal NAME");
  return job.ideal(o.ideal);
}

// The extension to use, moved onto the main file's ring presentation.
ExtensionPresentation load_extension(const JobSpec& job, const Options& o) {
  if (o.extension.empty()) {
    if (job.extensions.empty()) throw Error(ErrorKind::InvalidArgument, o.command + " needs --extension FILE");
    return job.extensions.front().second;
  }
  JobSpec ext = read_spec_file(o.extension);
  if (print_ring(ext.ring) != print_ring(job.ring))
    throw Error(ErrorKind::InvalidArgument, "extension file is over a different ring");
  if (ext.extensions.empty()) return ExtensionPresentation::identity(ext.ring);
  return ext.extensions.front().second;
}

nlohmann::json ideal_json(const Ideal& I) { return I.canonical_strings(); }

int run(const Options& o) {
  const JobSpec job = read_spec_file(o.file);
  const RingPresentation& R = job.ring;
  const unsigned cap = iteration_cap(o);
  EnumerateOptions eopts = job.enumerate_options();
  eopts.closure_cap = cap;
  nlohmann::json out;
  int status = 0;

  if (o.command == "fpure") {
    const bool ok = fedder_is_fpure(R, R.irrelevant());
    std::cout << (ok ? "F-pure" : "not F-pure") << "\n";
    out["fpure"] = ok;
    status = ok ? 0 : 1;
  } else if (o.command == "compatible") {
    const FrobeniusDatum fd = fedder_element(R);
    if (!o.ideal.empty()) {
      const bool ok = is_compatible(require_ideal(job, o) + R.J, fd, R);
      std::cout << (ok ? "compatible" : "not compatible") << "\n";
      out["compatible"] = ok;
      status = ok ? 0 : 1;
    } else {
      CompatibleLattice L = enumerate_compatible(fd, R, eopts);
      for (const auto& P : L.primes) std::cout << P.to_string() << "\n";
      if (!o.lattice.empty())
        write_file(o.lattice, emit_lattice(L, R, ends_with(o.lattice, ".dot") ? LatticeFormat::Dot : LatticeFormat::Json));
      out = nlohmann::json::parse(emit_lattice(L, R, LatticeFormat::Json));
    }
  } else if (o.command == "closure") {
    Ideal c = compatible_closure(require_ideal(job, o), fedder_element(R), R, cap);
    std::cout << c.to_string() << "\n";
    out["closure"] = ideal_json(c);
  } else if (o.command == "testideal") {
    Ideal t = test_ideal(fedder_element(R), R);
    std::cout << t.to_string() << "\n";
    out["test_ideal"] = ideal_json(t);
  } else if (o.command == "fixed") {
    const bool ok = is_fixed(require_ideal(job, o) + R.J, fedder_element(R), R);
    std::cout << (ok ? "fixed" : "not fixed") << "\n";
    out["fixed"] = ok;
    status = ok ? 0 : 1;
  } else if (o.command == "build") {
    const Ideal& I = require_ideal(job, o);
    BuildOptions b;
    b.enumerate = eopts;
    b.component_hints = job.hints_for(o.ideal);
    b.domain = o.domain;
    if (o.sbound) b.globalize_power = *o.sbound;
    BuildResult res = build_extension(R, I, b);
    std::cout << print_ring(R) << print_extension(res.S);
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& w : res.witnesses)
      comps.push_back({{"prime", ideal_json(w.prime)}, {"height", w.height}, {"class_dies", w.class_dies},
                       {"u", w.height ? w.socle.u.to_string() : std::string()}});
    nlohmann::json etale = nlohmann::json::array();
    for (const auto& c : res.etale) etale.push_back({{"prime", ideal_json(c.prime)}, {"certified", c.certified}});
    nlohmann::json params = nlohmann::json::array();
    for (const auto& x : res.params) params.push_back(x.to_string());
    out = {{"components", comps}, {"parameters", params}, {"etale", etale}};
    if (res.injectivity_kernel) out["injectivity_kernel"] = ideal_json(*res.injectivity_kernel);
    if (res.domain_point) out["domain_point"] = ideal_json(*res.domain_point);
  } else if (o.command == "trace") {
    ExtensionPresentation S = load_extension(job, o);
    Ideal t(S.base.ring, trace_ideal(S).basis());
    std::cout << t.to_string() << "\n";
    out["tau"] = ideal_json(t);
  } else if (o.command == "verify") {
    ExtensionPresentation S = load_extension(job, o);
    const Ideal I = require_ideal(job, o).in_ring(S.base.ring);
    VerificationReport rep = verify_main_theorem(S.base, I, S, eopts);
    std::cout << report_json(rep);
    out = nlohmann::json::parse(report_json(rep));
    bool ok = rep.equals_input;
    for (const auto& [q, c] : rep.etale_certified) ok = ok && c;
    status = ok ? 0 : 1;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown command " + o.command);
  }
  if (!o.json.empty()) write_file(o.json, out.dump(2) + "\n");
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatible ideals and trace ideals of finite extensions"};
  Options o;
  app.add_option("command", o.command, "fpure | compatible | closure | testideal | fixed | build | trace | verify")
      ->required()
      ->check(CLI::IsMember({"fpure", "compatible", "closure", "testideal", "fixed", "build", "trace", "verify"}));
  app.add_option("file", o.file, "Input file")->required();
  app.add_option("--ideal", o.ideal, "Name of an ideal in the input");
  app.add_option("--extension", o.extension, "Extension file");
  app.add_flag("--domain", o.domain, "Build a domain extension");
  app.add_option("--lattice", o.lattice, "Write the compatible lattice (.dot for DOT, JSON otherwise)");
  app.add_option("--json", o.json, "Write a JSON result ('-' for stdout)");
  app.add_option("--sbound", o.sbound, "Denominator exponent bound");
  app.add_option("--cap", o.cap, "Iteration cap (default FSK_CAP or 64)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run(o);
  } catch (const ParseError& e) {
    std::cerr << o.file << ":" << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
