#include "tenscan/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "tenscan/error.hpp"
#include "tenscan/json_io.hpp"
#include "tenscan/oracle.hpp"

namespace tenscan {

namespace {

using json_io::json;
using json_io::to_json;

struct Options {
  std::string verb;
  std::vector<std::string> inputs;
  bool witness = false;
  std::optional<std::uint64_t> p;
  std::uint64_t budget = oracle::kDefaultBudget;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::size_t> dims;
};

// Signals a malformed command line or document; exit status 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_document(const std::string& source) {
  std::string text;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read input '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("invalid JSON in '" + source + "': " + e.what());
  }
}

SpatialMatrix load_tensor(const std::string& source, const Options& opt) {
  SpatialMatrix t = json_io::tensor_from_json(read_document(source));
  if (opt.p && t.field().modulus() != *opt.p)
    throw Error(ErrorKind::FieldMismatch, "tensor modulus differs from --p",
                {{"input", source}, {"p", t.field().modulus()}, {"expected", *opt.p}});
  return t;
}

PrimeField required_field(const Options& opt) {
  if (!opt.p) throw UsageError(opt.verb + " needs --p");
  return PrimeField(*opt.p);
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

void run_canonicalize(const Options& opt, std::ostream& out) {
  const auto a = load_tensor(opt.inputs[0], opt);
  json doc;
  if (opt.witness) {
    const auto c = canonicalize(a, opt.seed);
    doc = {{"label", to_json(c.label)}, {"target", to_json(c.target)},
           {"witness", to_json(c.witness)}};
  } else {
    doc = {{"label", to_json(canonical_label(a, opt.seed))}};
  }
  emit(out, doc);
}

void run_classify(const Options& opt, std::ostream& out) {
  const auto c = classify_regular(load_tensor(opt.inputs[0], opt), opt.seed);
  json doc = to_json(c.cls);
  if (opt.witness) doc["witness"] = to_json(c.witness);
  emit(out, doc);
}

void run_equiv(const Options& opt, std::ostream& out) {
  const auto a = load_tensor(opt.inputs[0], opt);
  const auto b = load_tensor(opt.inputs[1], opt);
  const auto e = equivalent(a, b, opt.seed);
  json doc{{"equivalent", e.equivalent}};
  if (e.witness) doc["witness"] = to_json(*e.witness);
  emit(out, doc);
}

void run_kronecker(const Options& opt, std::ostream& out) {
  const auto a = load_tensor(opt.inputs[0], opt);
  if (a.q() != 2)
    throw Error(ErrorKind::WrongSliceCount, "kronecker needs exactly two slices", {{"q", a.q()}});
  const auto k = kronecker_form(a.slice(0), a.slice(1), opt.seed);
  json doc = to_json(k.form);
  if (opt.witness)
    doc["witness"] = {{"p", a.field().modulus()}, {"R", to_json(k.witness.R)},
                      {"S", to_json(k.witness.S)}};
  emit(out, doc);
}

void run_regular_part(const Options& opt, std::ostream& out) {
  const auto r = regular_part(load_tensor(opt.inputs[0], opt));
  emit(out, {{"part", to_json(r.part)}, {"witness", to_json(r.witness)}});
}

void run_orbit(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() == 2) {
    const auto a = load_tensor(opt.inputs[0], opt);
    const auto b = load_tensor(opt.inputs[1], opt);
    const auto e = oracle::oracle_equivalent(a, b, opt.budget);
    json doc{{"equivalent", e.equivalent}};
    if (e.witness) doc["witness"] = to_json(*e.witness);
    emit(out, doc);
    return;
  }
  if (!opt.inputs.empty()) throw UsageError("orbit takes two tensors or --p with --dims");
  if (opt.dims.size() != 3) throw UsageError("orbit needs --dims m,n,q");
  const PrimeField f = required_field(opt);
  const std::array<std::size_t, 3> dims{opt.dims[0], opt.dims[1], opt.dims[2]};
  for (const auto& orbit : oracle::orbit_partition(dims, f, opt.budget))
    emit(out, {{"representative", to_json(oracle::tensor_from_index(orbit.representative, f, dims))},
               {"size", orbit.members.size()}});
}

void run_list_canonical(const Options& opt, std::ostream& out) {
  const PrimeField f = required_field(opt);
  for (const auto& cls : theorem2_catalog(f)) {
    json doc = to_json(cls);
    doc["tensor"] = to_json(representative(cls, f));
    emit(out, doc);
  }
}

json error_document(std::string_view kind, const std::string& message,
                    const json& detail = json::object()) {
  json doc{{"error", std::string(kind)}, {"message", message}};
  if (!detail.empty()) doc["detail"] = detail;
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Canonical forms and equivalence of m x n x q tensors over prime fields", "tenscan"};
  app.require_subcommand(1);

  struct Verb {
    const char* name;
    const char* help;
    int min_inputs;
    int max_inputs;
    void (*run)(const Options&, std::ostream&);
  };
  const Verb verbs[] = {
      {"canonicalize", "Print the canonical label of a tensor", 1, 1, run_canonicalize},
      {"classify", "Classify a regular tensor with n, q <= 2", 1, 1, run_classify},
      {"equiv", "Decide equivalence of two tensors", 2, 2, run_equiv},
      {"kronecker", "Print the Kronecker blocks of a two-slice tensor", 1, 1, run_kronecker},
      {"regular-part", "Extract the regular part of a tensor", 1, 1, run_regular_part},
      {"orbit", "Brute-force orbits: two tensors, or --p with --dims", 0, 2, run_orbit},
      {"list-canonical", "List the regular classes with n, q <= 2 over GF(p)", 0, 0,
       run_list_canonical},
  };
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    if (v.max_inputs > 0)
      sub->add_option("inputs", opt.inputs, "Tensor file paths or inline JSON")
          ->expected(v.min_inputs, v.max_inputs);
    sub->add_flag("--witness", opt.witness, "Also print the transformation witness");
    sub->add_option("--p", opt.p, "Assert the field modulus");
    sub->add_option("--budget", opt.budget, "Oracle search budget");
    sub->add_option("--seed", opt.seed, "Seed for polynomial factorization");
    if (std::string(v.name) == "orbit")
      sub->add_option("--dims", opt.dims, "Shape m,n,q")->delimiter(',')->expected(3);
    sub->callback([&opt, name = v.name] { opt.verb = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_document("ParseError", e.what()).dump() << '\n';
    return 1;
  }
  const auto verb = std::find_if(std::begin(verbs), std::end(verbs),
                                 [&](const Verb& v) { return opt.verb == v.name; });
  try {
    const int n = static_cast<int>(opt.inputs.size());
    if (n < verb->min_inputs || n > verb->max_inputs || (n == 1 && verb->max_inputs == 2))
      throw UsageError(opt.verb + " got " + std::to_string(n) + " inputs");
    verb->run(opt, out);
    return 0;
  } catch (const UsageError& e) {
    err << error_document("ParseError", e.what()).dump() << '\n';
    return 1;
  } catch (const Error& e) {
    const bool parse = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::NotPrime;
    err << error_document(to_string(e.kind()), e.what(), e.detail()).dump() << '\n';
    return parse ? 1 : 2;
  } catch (const std::exception& e) {
    err << error_document("Internal", e.what()).dump() << '\n';
    return 3;
  }
}

}  // namespace tenscan
