// mcq: command-line front end for the MCQ toolkit.
//
// Exit codes: 0 pass/success, 1 named failed condition (report carries the
// condition tag and witness), 2 malformed input or bad argument, 3 resource
// limit.  Reports are deterministic for fixed inputs and seeds.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <mcq/affine.hpp>
#include <mcq/alexander.hpp>
#include <mcq/io.hpp>
#include <mcq/mcq.hpp>
#include <mcq/quandle.hpp>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitResource = 3;

unsigned long long default_budget(unsigned long long fallback) {
  if (const char* env = std::getenv("MCQ_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
    throw mcq::InvalidArgument("MCQ_BUDGET is not a positive integer");
  }
  return fallback;
}

mcq::Index int_arg(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    const long value = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<mcq::Index>(value);
  } catch (const std::exception&) {
    throw mcq::InvalidArgument(std::string(what) + ": not an integer: " + s);
  }
}

int report(const mcq::Verdict& v) {
  std::cout << mcq::to_string(v) << "\n";
  return v.pass ? kExitPass : kExitFail;
}

struct VerifyArgs {
  std::string kind;
  std::string file;
  std::string ring_file;
  bool alt_1ii = false;
  bool properties = false;
};

int run_verify(const VerifyArgs& args) {
  using namespace mcq;
  io::Object object = io::parse_algebra_file(args.file);
  const std::string kind = io::kind_of(object);
  if (kind != args.kind)
    throw MalformedInput("expected a " + args.kind + " file, got " + kind);

  if (args.kind == "module") {
    if (args.ring_file.empty())
      throw InvalidArgument("verify module requires --ring");
    const FiniteRing ring = io::expect_ring(io::parse_algebra_file(args.ring_file));
    io::expect_module(std::move(object), ring);
    std::cout << "PASS\n";
    return kExitPass;
  }
  if (args.kind == "pair") {
    AlexanderPair pair = io::expect_pair(std::move(object));
    Verdict v = verify_pair(pair);
    if (v.pass && args.properties) v = verify_pair_properties(pair);
    return report(v);
  }
  if (args.kind == "augmented") {
    AugmentedPair aug = io::expect_augmented(std::move(object));
    return report(pair_is_augmented_alexander(aug));
  }
  if (args.kind == "tuple") {
    SixTuple tuple = io::expect_tuple(std::move(object));
    Verdict v = verify_six_tuple(tuple);
    if (v.pass && args.alt_1ii) v = verify_alt_1ii(tuple);
    return report(v);
  }
  if (args.kind == "certificate") {
    Certificate cert = io::expect_certificate(std::move(object));
    return report(verify_certificate(cert));
  }
  // group, ring, quandle, mcq, gfamily, witness: verified (or shape-checked)
  // during parsing; reaching this point means they passed.
  std::cout << "PASS\n";
  return kExitPass;
}

struct BuildArgs {
  std::string constructor;
  std::vector<std::string> args;
  std::string out;
};

int run_build(const BuildArgs& build) {
  using namespace mcq;
  const std::string& kind = build.constructor;
  const std::vector<std::string>& a = build.args;
  auto need = [&](size_t n, const char* usage) {
    if (a.size() != n)
      throw InvalidArgument("build " + kind + " expects arguments: " + usage);
  };

  std::string text;
  if (kind == "cyclic-group") {
    need(1, "N");
    text = io::serialize(cyclic_group(int_arg(a[0], "N")));
  } else if (kind == "ring-zn") {
    need(1, "N");
    text = io::serialize(ring_zn(int_arg(a[0], "N")));
  } else if (kind == "module-self") {
    need(1, "RING_FILE");
    text = io::serialize(module_self(io::expect_ring(io::parse_algebra_file(a[0]))));
  } else if (kind == "module-power") {
    need(2, "RING_FILE K");
    text = io::serialize(module_power(io::expect_ring(io::parse_algebra_file(a[0])),
                                      int_arg(a[1], "K")));
  } else if (kind == "dihedral-quandle") {
    need(1, "N");
    text = io::serialize(dihedral_quandle(int_arg(a[0], "N")));
  } else if (kind == "alexander-quandle") {
    need(2, "N T");
    text = io::serialize(alexander_quandle_zn(int_arg(a[0], "N"), int_arg(a[1], "T")));
  } else if (kind == "conj-quandle") {
    need(1, "GROUP_FILE");
    text = io::serialize(conj_quandle(io::expect_group(io::parse_algebra_file(a[0]))));
  } else if (kind == "mcq-from-group") {
    need(1, "GROUP_FILE");
    text = io::serialize(mcq_from_group(io::expect_group(io::parse_algebra_file(a[0]))));
  } else if (kind == "gfamily-alexander") {
    need(2, "RING_FILE GROUP_FILE");
    text = io::serialize(
        g_family_alexander(io::expect_ring(io::parse_algebra_file(a[0])),
                           io::expect_group(io::parse_algebra_file(a[1]))));
  } else if (kind == "zfamily") {
    need(1, "QUANDLE_FILE");
    text = io::serialize(
        z_family_from_quandle(io::expect_quandle(io::parse_algebra_file(a[0]))));
  } else if (kind == "associated-mcq") {
    need(1, "GFAMILY_FILE");
    text = io::serialize(
        associated_mcq(io::expect_gfamily(io::parse_algebra_file(a[0]))));
  } else if (kind == "trivial-pair") {
    need(2, "MCQ_FILE RING_FILE");
    text = io::serialize(trivial_pair(io::expect_mcq(io::parse_algebra_file(a[0])),
                                      io::expect_ring(io::parse_algebra_file(a[1]))));
  } else if (kind == "trivial-augmented" || kind == "trivial-tuple") {
    need(3, "MCQ_FILE RING_FILE MODULE_FILE");
    const FiniteMcq m = io::expect_mcq(io::parse_algebra_file(a[0]));
    const FiniteRing r = io::expect_ring(io::parse_algebra_file(a[1]));
    const LeftModule mod = io::expect_module(io::parse_algebra_file(a[2]), r);
    text = kind == "trivial-augmented"
               ? io::serialize(trivial_augmented(m, r, mod))
               : io::serialize(trivial_tuple(m, r, mod));
  } else {
    throw InvalidArgument("unknown constructor: " + kind);
  }

  io::save(build.out, text);
  std::cout << "written " << build.out << "\n";
  return kExitPass;
}

struct ExtendArgs {
  std::string file;
  std::string out;
  std::string module_file;
  std::string projection_out;
};

int run_extend(const ExtendArgs& args) {
  using namespace mcq;
  io::Object object = io::parse_algebra_file(args.file);
  const std::string kind = io::kind_of(object);

  Extension ext;
  if (kind == "pair") {
    AlexanderPair pair = io::expect_pair(std::move(object));
    LeftModule module =
        args.module_file.empty()
            ? module_self(pair.ring)
            : io::expect_module(io::parse_algebra_file(args.module_file), pair.ring);
    ext = build_extension_augmented(with_cocycle(pair, module, {}, {}));
  } else if (kind == "augmented") {
    ext = build_extension_augmented(io::expect_augmented(std::move(object)));
  } else if (kind == "tuple") {
    ext = build_affine_extension(io::expect_tuple(std::move(object)));
  } else {
    throw MalformedInput("extend expects a pair, augmented or tuple file, got " +
                         kind);
  }

  io::save(args.out, io::serialize(ext.mcq));
  if (!args.projection_out.empty())
    io::save(args.projection_out, io::serialize(ext.projection));
  std::cout << "extension order=" << ext.mcq.order << " written " << args.out
            << "\n";
  return kExitPass;
}

struct EnumerateArgs {
  std::string category;
  std::string mcq_file;
  std::string ring_file;
  unsigned long long budget = 0;
  int tasks = 1;
  std::string out;
};

int run_enumerate(const EnumerateArgs& args) {
  using namespace mcq;
  if (args.category != "pairs")
    throw InvalidArgument("enumerate supports only: pairs");
  const FiniteMcq m = io::expect_mcq(io::parse_algebra_file(args.mcq_file));
  const FiniteRing r = io::expect_ring(io::parse_algebra_file(args.ring_file));
  EnumOptions options;
  options.budget = args.budget ? args.budget : default_budget(options.budget);
  options.tasks = args.tasks;
  std::vector<AlexanderPair> pairs = enumerate_pairs(m, r, options);
  std::cout << "count=" << pairs.size() << "\n";
  if (!args.out.empty())
    io::save(args.out, io::serialize(io::PairList{m, r, std::move(pairs)}));
  return kExitPass;
}

struct ReduceArgs {
  std::string file;
  std::string out;
  std::string witness_out;
  std::string tuple_out;
};

int run_reduce(const ReduceArgs& args) {
  using namespace mcq;
  const SixTuple tuple = io::expect_tuple(io::parse_algebra_file(args.file));
  if (Verdict v = verify_six_tuple(tuple); !v) return report(v);
  Reduction red = reduce_six_tuple(tuple);
  io::save(args.out, io::serialize(red.pair));
  if (!args.witness_out.empty())
    io::save(args.witness_out, io::serialize(red.witness));
  if (!args.tuple_out.empty())
    io::save(args.tuple_out, io::serialize(red.reduced));
  std::cout << "reduced pair written " << args.out << "\n";
  return kExitPass;
}

int run_certify(const std::string& file, const std::string& out) {
  using namespace mcq;
  const SixTuple tuple = io::expect_tuple(io::parse_algebra_file(file));
  if (Verdict v = verify_six_tuple(tuple); !v) return report(v);
  Certificate cert = certify_reduction(tuple);
  io::save(out, io::serialize(cert));
  if (!cert.ok) {
    std::cout << "FATAL: certificate checks failed:\n";
    for (const auto& [name, pass] : cert.checks)
      if (!pass) std::cout << "  " << name << "\n";
    return kExitFail;
  }
  std::cout << "certificate ok, checks=" << cert.checks.size() << ", written "
            << out << "\n";
  return kExitPass;
}

struct IsoArgs {
  std::string file_a;
  std::string file_b;
  std::string out;
  unsigned long long budget = 0;
  int tasks = 1;
};

int run_iso(const IsoArgs& args) {
  using namespace mcq;
  const FiniteMcq a = io::expect_mcq(io::parse_algebra_file(args.file_a));
  const FiniteMcq b = io::expect_mcq(io::parse_algebra_file(args.file_b));
  IsoOptions options;
  options.node_budget = args.budget ? args.budget : default_budget(options.node_budget);
  options.tasks = args.tasks;
  std::optional<MapVec> iso = mcq_iso_search(a, b, options);
  if (!iso) {
    std::cout << to_string(Verdict::fail("not-isomorphic", {},
                                         "exhaustive search found no isomorphism"))
              << "\n";
    return kExitFail;
  }
  std::cout << "isomorphism=[";
  for (size_t i = 0; i < iso->size(); ++i)
    std::cout << (i ? "," : "") << (*iso)[i];
  std::cout << "]\n";
  if (!args.out.empty()) io::save(args.out, io::serialize(*iso));
  return kExitPass;
}

struct TransportArgs {
  std::string file;
  std::string out;
  std::string witness_out;
  unsigned long long seed = 0;
};

int run_transport(const TransportArgs& args) {
  using namespace mcq;
  const SixTuple tuple = io::expect_tuple(io::parse_algebra_file(args.file));
  if (Verdict v = verify_six_tuple(tuple); !v) return report(v);
  const EquivalenceWitness w = random_witness(tuple, args.seed);
  const SixTuple moved = transport_six_tuple(tuple, w);
  io::save(args.out, io::serialize(moved));
  if (!args.witness_out.empty()) io::save(args.witness_out, io::serialize(w));
  std::cout << "transported tuple written " << args.out << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite multiple conjugation quandle toolkit"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "verify an object file");
  verify->add_option("kind", verify_args.kind, "object kind")
      ->required()
      ->check(CLI::IsMember({"group", "ring", "module", "quandle", "mcq",
                             "gfamily", "pair", "augmented", "tuple", "witness",
                             "certificate"}));
  verify->add_option("file", verify_args.file, "input file")->required();
  verify->add_option("--ring", verify_args.ring_file, "ring file (for module)");
  verify->add_flag("--alt-1ii", verify_args.alt_1ii,
                   "also check the replacement form of (1-ii)");
  verify->add_flag("--properties", verify_args.properties,
                   "also check the derived pair properties");

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "build a named constructor");
  build->add_option("constructor", build_args.constructor, "constructor name")
      ->required();
  build->add_option("args", build_args.args, "constructor arguments");
  build->add_option("-o,--out", build_args.out, "output file")->required();

  ExtendArgs extend_args;
  CLI::App* extend = app.add_subcommand("extend", "build the extension of a pair/tuple");
  extend->add_option("file", extend_args.file, "pair, augmented or tuple file")
      ->required();
  extend->add_option("-o,--out", extend_args.out, "output MCQ file")->required();
  extend->add_option("--module", extend_args.module_file,
                     "module file (pairs only; default M = R)");
  extend->add_option("--projection-out", extend_args.projection_out,
                     "write the projection map");

  EnumerateArgs enum_args;
  CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive enumeration");
  enumerate->add_option("category", enum_args.category, "what to enumerate (pairs)")
      ->required();
  enumerate->add_option("--mcq", enum_args.mcq_file, "MCQ file")->required();
  enumerate->add_option("--ring", enum_args.ring_file, "ring file")->required();
  enumerate->add_option("--budget", enum_args.budget,
                        "candidate budget (default MCQ_BUDGET or 10^8)");
  enumerate->add_option("--tasks", enum_args.tasks, "concurrent tasks");
  enumerate->add_option("-o,--out", enum_args.out, "write the pair list");

  ReduceArgs reduce_args;
  CLI::App* reduce = app.add_subcommand("reduce", "reduce a 6-tuple to an augmented pair");
  reduce->add_option("file", reduce_args.file, "tuple file")->required();
  reduce->add_option("-o,--out", reduce_args.out, "output augmented pair file")
      ->required();
  reduce->add_option("--witness-out", reduce_args.witness_out, "write the witness");
  reduce->add_option("--tuple-out", reduce_args.tuple_out,
                     "write the reduced 6-tuple");

  std::string certify_file, certify_out;
  CLI::App* certify = app.add_subcommand("certify", "certified end-to-end reduction");
  certify->add_option("file", certify_file, "tuple file")->required();
  certify->add_option("-o,--out", certify_out, "output certificate file")->required();

  IsoArgs iso_args;
  CLI::App* iso = app.add_subcommand("iso", "search for an MCQ isomorphism");
  iso->add_option("mcq-a", iso_args.file_a, "first MCQ file")->required();
  iso->add_option("mcq-b", iso_args.file_b, "second MCQ file")->required();
  iso->add_option("-o,--out", iso_args.out, "write the isomorphism map");
  iso->add_option("--budget", iso_args.budget,
                  "node budget (default MCQ_BUDGET or library default)");
  iso->add_option("--tasks", iso_args.tasks, "concurrent tasks");

  TransportArgs transport_args;
  CLI::App* transport =
      app.add_subcommand("transport", "transport a tuple by a random witness");
  transport->add_option("file", transport_args.file, "tuple file")->required();
  transport->add_option("--seed", transport_args.seed, "RNG seed");
  transport->add_option("-o,--out", transport_args.out, "output tuple file")
      ->required();
  transport->add_option("--witness-out", transport_args.witness_out,
                        "write the witness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (verify->parsed()) return run_verify(verify_args);
    if (build->parsed()) return run_build(build_args);
    if (extend->parsed()) return run_extend(extend_args);
    if (enumerate->parsed()) return run_enumerate(enum_args);
    if (reduce->parsed()) return run_reduce(reduce_args);
    if (certify->parsed()) return run_certify(certify_file, certify_out);
    if (iso->parsed()) return run_iso(iso_args);
    if (transport->parsed()) return run_transport(transport_args);
  } catch (const mcq::io::LoadVerificationError& e) {
    std::cout << "FAIL kind=" << e.kind << " " << mcq::to_string(e.verdict) << "\n";
    return kExitFail;
  } catch (const mcq::ResourceLimit& e) {
    std::cout << "resource-limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const mcq::InternalInconsistency& e) {
    std::cout << "FATAL: " << e.what() << "\n";
    return kExitFail;
  } catch (const mcq::InvalidArgument& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const mcq::MalformedInput& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
