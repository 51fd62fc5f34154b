// kirbykit command-line tool. Exit codes: 0 success, 1 verification failure,
// 2 input error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kirbykit/error.hpp"
#include "kirbykit/invariants.hpp"
#include "kirbykit/lemma2.hpp"
#include "kirbykit/monodromy.hpp"
#include "kirbykit/moves.hpp"
#include "kirbykit/registry.hpp"

using namespace kirbykit;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool blank(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return false;
  }
  return true;
}

// A path to a diagram file, or a registry name.
Diagram load_target(const std::string& target) {
  if (std::filesystem::is_regular_file(target)) {
    if (blank(read_file(target))) throw ParseError(target + ": empty diagram file");
    return load_diagram_file(target);
  }
  return registry_load(target);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string summary(const Diagram& d) {
  return "χ=" + std::to_string(euler_characteristic(d)) + " σ=" + std::to_string(signature(d)) +
         " H₁(∂)=" + h1_boundary(d).to_string();
}

int cmd_invariants(const std::string& target) {
  const Diagram d = load_target(target);
  const HandleCounts h = handle_counts(d);
  std::cout << "diagram: " << target << "\n"
            << "status: " << registry_status(d) << "\n"
            << "handles: h0=" << h.h0 << " h1=" << h.h1 << " h2=" << h.h2 << " h3=" << h.h3 << "\n"
            << "euler characteristic: " << euler_characteristic(d) << "\n"
            << "signature: " << signature(d) << "\n"
            << "H₁(X): " << h1_manifold(d).to_string() << "\n"
            << "H₁(∂X): " << h1_boundary(d).to_string() << "\n"
            << "det(boundary matrix): " << determinant(linking_matrix(d, DottedAs::zero)).get_str() << "\n"
            << "homology sphere boundary: " << yes_no(is_homology_sphere_boundary(d)) << "\n"
            << "homology ball: " << yes_no(is_homology_ball(d)) << "\n";
  int rc = kOk;
  if (d.planar() && !d.planar_stale()) {
    for (const auto& line : d.planar()->lines) {
      const LaurentPoly s = alexander(d, line.component);
      const LaurentPoly f = alexander_fox_oracle(d, line.component);
      std::cout << "alexander " << line.component << ": seifert " << s.to_string() << " | fox " << f.to_string()
                << (s == f ? "" : "  MISMATCH") << "\n";
      if (!(s == f)) rc = kFailed;
    }
  } else if (d.planar_stale()) {
    std::cout << "alexander: planar data is stale\n";
  }
  return rc;
}

int cmd_replay(const std::string& diagram, const std::string& script_file, const std::string& output) {
  const Diagram before = load_target(diagram);
  const MoveScript script = parse_script(read_file(script_file));
  const Diagram after = replay(before, script);
  std::ostream& report = output.empty() ? std::cerr : std::cout;
  report << "moves: " << script.moves.size() << "\n"
         << "before: " << summary(before) << "\n"
         << "after:  " << summary(after) << "\n";
  const bool same = h1_boundary(before) == h1_boundary(after);
  report << (same ? "H₁(∂) unchanged\n" : "H₁(∂) CHANGED: move engine bug\n");
  write_output(output, serialize_diagram(after));
  return same ? kOk : kFailed;
}

Multiplicity parse_counts(const std::string& text, const char* what) {
  Multiplicity out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0) throw ParseError(std::string(what) + ": expected id:count, got '" + item + "'");
    Integer c;
    if (c.set_str(item.substr(colon + 1), 10) != 0)
      throw ParseError(std::string(what) + ": bad count in '" + item + "'");
    out.emplace_back(item.substr(0, colon), c);
  }
  return out;
}

int cmd_corktwist(const std::string& diagram, const std::vector<std::string>& h_side, const std::string& plus,
                  const std::string& minus, int n, const std::string& output) {
  const Diagram d = load_target(diagram);
  DeltaData delta;
  delta.unknot = true;
  delta.c_plus = parse_counts(plus, "--plus");
  delta.c_minus = parse_counts(minus, "--minus");
  const CorkTwistResult r = cork_twist(d, h_side, delta, n);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << "before: " << summary(d) << "\n"
            << "after:  " << summary(r.diagram) << "\n";
  write_output(output, serialize_diagram(r.diagram));
  return kOk;
}

int cmd_alexander_table(int n_max) {
  if (n_max < 1) throw PreconditionError("--n-max must be at least 1");
  int rc = kOk;
  for (int n = 1; n <= n_max; ++n) {
    const Diagram k = twist_knot(n);
    const LaurentPoly s = alexander(k, "k");
    if (!(s == alexander_fox_oracle(k, "k"))) {
      std::cerr << "K_" << n << ": Seifert and Fox routes disagree\n";
      rc = kFailed;
    }
    std::cout << n << '\t' << s.to_string() << '\n';
  }
  return rc;
}

SL2Mat matrix_args(const std::vector<std::string>& e) {
  if (e.size() != 4) throw ParseError("expected four entries p q r s");
  Integer v[4];
  for (std::size_t i = 0; i < 4; ++i)
    if (v[i].set_str(e[i], 10) != 0) throw ParseError("bad matrix entry '" + e[i] + "'");
  return SL2Mat::from_entries(v[0], v[1], v[2], v[3]);
}

int cmd_monodromy_eval(const std::string& word) {
  const SL2Mat m = evaluate(word == "-" ? "" : word);
  const OrderAndClass oc = order_and_class(m);
  std::cout << "matrix: " << m.to_string() << "\n"
            << "trace: " << oc.trace.get_str() << "\n"
            << "order: " << (oc.order ? std::to_string(*oc.order) : std::string("infinite")) << "\n"
            << "class: " << to_string(oc.kind) << "\n";
  return kOk;
}

std::string listing(const std::vector<SL2Mat>& ms) {
  std::string s;
  for (const auto& m : ms) s += "  " + m.to_string() + "\n";
  return s;
}

int cmd_monodromy_centralizer(const std::vector<std::string>& entries, long brute_bound) {
  const SL2Mat a = matrix_args(entries);
  const Centralizer c = centralizer(a);
  std::cout << "A: " << a.to_string() << "\n" << "centralizer: " << c.describe() << "\n";
  if (brute_bound < 0) return kOk;
  const auto structural = c.in_box(brute_bound);
  const auto brute = centralizer_bruteforce(a, brute_bound);
  std::cout << "structural, entries in [-" << brute_bound << "," << brute_bound << "]: " << structural.size() << "\n"
            << listing(structural) << "brute force: " << brute.size() << "\n"
            << listing(brute) << (structural == brute ? "agree\n" : "DISAGREE\n");
  return structural == brute ? kOk : kFailed;
}

int cmd_monodromy_h1(const std::vector<std::string>& entries) {
  std::cout << torus_bundle_h1(matrix_args(entries)).to_string() << "\n";
  return kOk;
}

int cmd_registry_list() {
  for (const auto& name : registry_names()) {
    if (name.find('<') != std::string::npos) {
      std::cout << name << "\tcomplete (generated)\n";
      continue;
    }
    std::cout << name << '\t' << registry_status(registry_load(name)) << '\n';
  }
  return kOk;
}

int cmd_verify_lemma2(int n_max, unsigned threads, bool tamper) {
  Lemma2Options o;
  o.n_max = n_max;
  o.threads = threads;
  if (tamper) o.a = SL2Mat{1, 1, 0, 1};
  const Lemma2Report r = verify_lemma2(o);
  std::cout << "verify-lemma2 n_max=" << n_max << (tamper ? " (tampered generator a)" : "") << "\n" << r.text();
  return r.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kirbykit: Kirby calculus, handle invariants and torus-bundle monodromy"};
  app.require_subcommand(1);

  std::string target, script, output, plus, minus, word;
  std::vector<std::string> h_side, entries;
  int n = 0, n_max = 10;
  unsigned threads = 0;
  long brute_bound = -1;
  bool tamper = false;

  auto* inv = app.add_subcommand("invariants", "χ, σ, homology and verdicts of a diagram file or registry entry");
  inv->add_option("target", target, "diagram file or registry name")->required();

  auto* rep = app.add_subcommand("replay", "replay a move script and diff the invariants");
  rep->add_option("diagram", target)->required();
  rep->add_option("script", script)->required();
  rep->add_option("-o,--output", output, "write the resulting diagram here (default: stdout)");

  auto* ver = app.add_subcommand("verify-lemma2", "run the monodromy and twist-knot verification chain");
  ver->add_option("--n-max", n_max, "largest twist knot index")->capture_default_str();
  ver->add_option("--threads", threads, "worker threads (0: hardware concurrency)")->capture_default_str();
  ver->add_flag("--tamper", tamper, "negative control: perturb generator a");

  auto* tab = app.add_subcommand("alexander-table", "twist knot Alexander polynomials, one line per n");
  tab->add_option("--n-max", n_max)->capture_default_str();

  auto* cork = app.add_subcommand("corktwist", "apply the cork twist f_δ^n to a diagram");
  cork->add_option("diagram", target)->required();
  cork->add_option("--h-side", h_side, "H-side component ids")->delimiter(',')->required();
  cork->add_option("--plus", plus, "strands through C+, as id:count,...");
  cork->add_option("--minus", minus, "strands through C-, as id:count,...");
  cork->add_option("-n,--power", n, "number of twists")->required();
  cork->add_option("-o,--output", output);

  auto* mono = app.add_subcommand("monodromy", "SL(2,Z) monodromy tools");
  mono->require_subcommand(1);
  auto* meval = mono->add_subcommand("eval", "evaluate a word in a A b B ('-' for the empty word)");
  meval->add_option("word", word)->required();
  auto* mcent = mono->add_subcommand("centralizer", "matrices commuting with [[p,q],[r,s]]");
  mcent->add_option("entries", entries, "p q r s")->expected(4)->required();
  mcent->add_option("--brute-bound", brute_bound, "cross-check by exhaustive search in this box");
  auto* mh1 = mono->add_subcommand("h1", "H₁ of the mapping torus of [[p,q],[r,s]]");
  mh1->add_option("entries", entries, "p q r s")->expected(4)->required();

  auto* reg = app.add_subcommand("registry", "diagram templates");
  reg->require_subcommand(1);
  auto* rlist = reg->add_subcommand("list", "list templates and their status");
  auto* rshow = reg->add_subcommand("show", "print a template");
  rshow->add_option("name", target)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kInputError;
  }

  try {
    if (*inv) return cmd_invariants(target);
    if (*rep) return cmd_replay(target, script, output);
    if (*ver) return cmd_verify_lemma2(n_max, threads, tamper);
    if (*tab) return cmd_alexander_table(n_max);
    if (*cork) return cmd_corktwist(target, h_side, plus, minus, n, output);
    if (*meval) return cmd_monodromy_eval(word);
    if (*mcent) return cmd_monodromy_centralizer(entries, brute_bound);
    if (*mh1) return cmd_monodromy_h1(entries);
    if (*rlist) return cmd_registry_list();
    if (*rshow) {
      std::cout << serialize_diagram(registry_load(target));
      return kOk;
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
