#include <mcq/io.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shape_checks.hpp"

namespace mcq::io {

using nlohmann::json;

LoadVerificationError::LoadVerificationError(std::string kind_, Verdict verdict_)
    : Error("loaded " + kind_ + " fails verification: " + to_string(verdict_)),
      kind(std::move(kind_)),
      verdict(std::move(verdict_)) {}

namespace {

// --- writers ---------------------------------------------------------------

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t) rows.push_back(row);
  return rows;
}

json comp_tables_json(const CompTables& t) {
  json out = json::array();
  for (const Table& comp : t) out.push_back(table_json(comp));
  return out;
}

json group_json(const FiniteGroup& g) {
  return json{{"order", g.order}, {"table", table_json(g.cayley)},
              {"identity", g.identity}};
}

json ring_json(const FiniteRing& r) {
  return json{{"order", r.order},
              {"add", table_json(r.add_table)},
              {"mul", table_json(r.mul_table)},
              {"zero", r.zero},
              {"one", r.one}};
}

json module_json(const LeftModule& m) {
  return json{{"group", group_json(m.carrier)}, {"action", table_json(m.action)}};
}

json mcq_json(const FiniteMcq& m) {
  json comps = json::array();
  for (const FiniteGroup& g : m.components) comps.push_back(group_json(g));
  return json{{"components", comps}, {"triangle", table_json(m.triangle)}};
}

json tuple_json(const SixTuple& t) {
  return json{{"mcq", mcq_json(t.mcq)},
              {"ring", ring_json(t.ring)},
              {"module", module_json(t.module)},
              {"f1", table_json(t.f1)},
              {"f2", table_json(t.f2)},
              {"f3", comp_tables_json(t.f3)},
              {"f4", comp_tables_json(t.f4)},
              {"phi1", table_json(t.phi1)},
              {"phi2", comp_tables_json(t.phi2)}};
}

json witness_json(const EquivalenceWitness& w) {
  return json{{"h", w.h}, {"eta", w.eta}};
}

std::string wrap(const char* kind, json fields) {
  fields["format_version"] = kFormatVersion;
  fields["kind"] = kind;
  return fields.dump(2) + "\n";
}

// --- readers ---------------------------------------------------------------

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw MalformedInput("missing field \"" + std::string(key) + "\"");
  return *it;
}

Index int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer())
    throw MalformedInput("field \"" + std::string(key) + "\" must be an integer");
  return v.get<Index>();
}

Table table_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array())
    throw MalformedInput("field \"" + std::string(key) + "\" must be an array");
  Table t;
  for (const json& row : v) {
    if (!row.is_array())
      throw MalformedInput("field \"" + std::string(key) +
                           "\": rows must be arrays");
    std::vector<Index> r;
    for (const json& cell : row) {
      if (!cell.is_number_integer())
        throw MalformedInput("field \"" + std::string(key) +
                             "\": entries must be integers");
      r.push_back(cell.get<Index>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

MapVec vec_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array())
    throw MalformedInput("field \"" + std::string(key) + "\" must be an array");
  MapVec out;
  for (const json& cell : v) {
    if (!cell.is_number_integer())
      throw MalformedInput("field \"" + std::string(key) +
                           "\": entries must be integers");
    out.push_back(cell.get<Index>());
  }
  return out;
}

CompTables comp_tables_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array())
    throw MalformedInput("field \"" + std::string(key) + "\" must be an array");
  CompTables out;
  json wrapper;
  for (size_t i = 0; i < v.size(); ++i) {
    wrapper["t"] = v[i];
    out.push_back(table_field(wrapper, "t"));
  }
  return out;
}

FiniteGroup group_from_json(const json& j) {
  GroupCandidate c;
  c.order = int_field(j, "order");
  c.cayley = table_field(j, "table");
  c.identity = int_field(j, "identity");
  GroupCheck check = check_group(c);
  if (!check.verdict) throw LoadVerificationError("group", check.verdict);
  return *std::move(check.group);
}

FiniteRing ring_from_json(const json& j) {
  RingCandidate c;
  c.order = int_field(j, "order");
  c.add = table_field(j, "add");
  c.mul = table_field(j, "mul");
  c.zero = int_field(j, "zero");
  c.one = int_field(j, "one");
  RingCheck check = check_ring(c);
  if (!check.verdict) throw LoadVerificationError("ring", check.verdict);
  return *std::move(check.ring);
}

ModuleCandidate module_candidate_from_json(const json& j) {
  const json& g = field(j, "group");
  ModuleCandidate c;
  c.carrier.order = int_field(g, "order");
  c.carrier.cayley = table_field(g, "table");
  c.carrier.identity = int_field(g, "identity");
  c.action = table_field(j, "action");
  return c;
}

LeftModule module_from_json(const json& j, const FiniteRing& ring) {
  ModuleCheck check = check_module(module_candidate_from_json(j), ring);
  if (!check.verdict) throw LoadVerificationError("module", check.verdict);
  return *std::move(check.module);
}

FiniteMcq mcq_from_json(const json& j) {
  const json& comps = field(j, "components");
  if (!comps.is_array() || comps.empty())
    throw MalformedInput("mcq: \"components\" must be a nonempty array");
  McqCandidate c;
  for (const json& comp : comps) {
    GroupCandidate g;
    g.order = int_field(comp, "order");
    g.cayley = table_field(comp, "table");
    g.identity = int_field(comp, "identity");
    c.components.push_back(std::move(g));
  }
  c.triangle = table_field(j, "triangle");
  McqCheck check = check_mcq(c);
  if (!check.verdict) throw LoadVerificationError("mcq", check.verdict);
  return *std::move(check.mcq);
}

FiniteQuandle quandle_from_json(const json& j) {
  const Index order = int_field(j, "order");
  Table op = table_field(j, "op");
  if (static_cast<Index>(op.size()) != order)
    throw MalformedInput("quandle: op table does not match order");
  if (Verdict v = verify_quandle(op); !v)
    throw LoadVerificationError("quandle", v);
  return FiniteQuandle{order, std::move(op)};
}

GFamily gfamily_from_json(const json& j) {
  GFamily f;
  f.group = group_from_json(field(j, "group"));
  f.carrier_size = int_field(j, "carrier_size");
  const json& ops = field(j, "ops");
  if (!ops.is_object())
    throw MalformedInput("gfamily: \"ops\" must be an object keyed by group element");
  f.ops.resize(f.group.order);
  std::vector<bool> seen(f.group.order, false);
  json wrapper;
  for (auto it = ops.begin(); it != ops.end(); ++it) {
    Index g = -1;
    try {
      g = static_cast<Index>(std::stol(it.key()));
    } catch (const std::exception&) {
      throw MalformedInput("gfamily: op key is not an integer: " + it.key());
    }
    if (g < 0 || g >= f.group.order)
      throw MalformedInput("gfamily: op key out of range: " + it.key());
    wrapper["t"] = it.value();
    f.ops[g] = table_field(wrapper, "t");
    seen[g] = true;
  }
  for (Index g = 0; g < f.group.order; ++g)
    if (!seen[g])
      throw MalformedInput("gfamily: missing op table for group element " +
                           std::to_string(g));
  if (Verdict v = verify_g_family(f); !v)
    throw LoadVerificationError("gfamily", v);
  return f;
}

AlexanderPair pair_from_json(const json& j) {
  AlexanderPair p;
  p.mcq = mcq_from_json(field(j, "mcq"));
  p.ring = ring_from_json(field(j, "ring"));
  p.f1 = table_field(j, "f1");
  p.f2 = table_field(j, "f2");
  detail::require_ring_table(p.f1, p.mcq.order, p.ring.order, "f1");
  detail::require_ring_table(p.f2, p.mcq.order, p.ring.order, "f2");
  return p;
}

AugmentedPair augmented_from_json(const json& j) {
  AugmentedPair a;
  a.mcq = mcq_from_json(field(j, "mcq"));
  a.ring = ring_from_json(field(j, "ring"));
  a.module = module_from_json(field(j, "module"), a.ring);
  a.f1 = table_field(j, "f1");
  a.f2 = table_field(j, "f2");
  a.phi1 = table_field(j, "phi1");
  a.phi2 = comp_tables_field(j, "phi2");
  detail::require_ring_table(a.f1, a.mcq.order, a.ring.order, "f1");
  detail::require_ring_table(a.f2, a.mcq.order, a.ring.order, "f2");
  detail::require_ring_table(a.phi1, a.mcq.order, a.module.size(), "phi1");
  detail::require_comp_tables(a.phi2, a.mcq, a.module.size(), "phi2");
  return a;
}

SixTuple tuple_from_json(const json& j) {
  SixTuple t;
  t.mcq = mcq_from_json(field(j, "mcq"));
  t.ring = ring_from_json(field(j, "ring"));
  t.module = module_from_json(field(j, "module"), t.ring);
  t.f1 = table_field(j, "f1");
  t.f2 = table_field(j, "f2");
  t.f3 = comp_tables_field(j, "f3");
  t.f4 = comp_tables_field(j, "f4");
  t.phi1 = table_field(j, "phi1");
  t.phi2 = comp_tables_field(j, "phi2");
  detail::require_ring_table(t.f1, t.mcq.order, t.ring.order, "f1");
  detail::require_ring_table(t.f2, t.mcq.order, t.ring.order, "f2");
  detail::require_comp_tables(t.f3, t.mcq, t.ring.order, "f3");
  detail::require_comp_tables(t.f4, t.mcq, t.ring.order, "f4");
  detail::require_ring_table(t.phi1, t.mcq.order, t.module.size(), "phi1");
  detail::require_comp_tables(t.phi2, t.mcq, t.module.size(), "phi2");
  return t;
}

EquivalenceWitness witness_from_json(const json& j) {
  EquivalenceWitness w;
  w.h = vec_field(j, "h");
  w.eta = vec_field(j, "eta");
  if (w.h.size() != w.eta.size())
    throw MalformedInput("witness: h and eta must have equal length");
  return w;
}

PairList pair_list_from_json(const json& j) {
  PairList list;
  list.mcq = mcq_from_json(field(j, "mcq"));
  list.ring = ring_from_json(field(j, "ring"));
  const json& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw MalformedInput("pair-list: \"pairs\" must be an array");
  for (const json& p : pairs) {
    AlexanderPair pair;
    pair.mcq = list.mcq;
    pair.ring = list.ring;
    json holder = p;
    pair.f1 = table_field(holder, "f1");
    pair.f2 = table_field(holder, "f2");
    detail::require_ring_table(pair.f1, pair.mcq.order, pair.ring.order, "f1");
    detail::require_ring_table(pair.f2, pair.mcq.order, pair.ring.order, "f2");
    list.pairs.push_back(std::move(pair));
  }
  return list;
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  cert.tuple = tuple_from_json(field(j, "tuple"));
  cert.reduction.reduced = tuple_from_json(field(j, "reduced"));
  cert.reduction.witness = witness_from_json(field(j, "witness"));
  cert.reduction.pair.mcq = cert.reduction.reduced.mcq;
  cert.reduction.pair.ring = cert.reduction.reduced.ring;
  cert.reduction.pair.module = cert.reduction.reduced.module;
  cert.reduction.pair.f1 = cert.reduction.reduced.f1;
  cert.reduction.pair.f2 = cert.reduction.reduced.f2;
  cert.reduction.pair.phi1 = cert.reduction.reduced.phi1;
  cert.reduction.pair.phi2 = cert.reduction.reduced.phi2;
  cert.source.mcq = mcq_from_json(field(j, "source_extension"));
  cert.source.projection = vec_field(j, "source_projection");
  cert.reduced.mcq = mcq_from_json(field(j, "reduced_extension"));
  cert.reduced.projection = vec_field(j, "reduced_projection");
  cert.isomorphism = vec_field(j, "isomorphism");
  const json& checks = field(j, "checks");
  if (!checks.is_array()) throw MalformedInput("certificate: bad \"checks\"");
  for (const json& c : checks) {
    if (!c.is_object() || !c.contains("name") || !c.contains("pass"))
      throw MalformedInput("certificate: bad check entry");
    cert.checks.emplace_back(c["name"].get<std::string>(), c["pass"].get<bool>());
  }
  const json& ok = field(j, "ok");
  if (!ok.is_boolean()) throw MalformedInput("certificate: bad \"ok\"");
  cert.ok = ok.get<bool>();
  return cert;
}

}  // namespace

// --- public serialization ----------------------------------------------------

std::string serialize(const FiniteGroup& g) { return wrap("group", group_json(g)); }
std::string serialize(const FiniteRing& r) { return wrap("ring", ring_json(r)); }
std::string serialize(const LeftModule& m) { return wrap("module", module_json(m)); }

std::string serialize(const FiniteQuandle& q) {
  return wrap("quandle", json{{"order", q.order}, {"op", table_json(q.op)}});
}

std::string serialize(const FiniteMcq& m) { return wrap("mcq", mcq_json(m)); }

std::string serialize(const GFamily& f) {
  json ops = json::object();
  for (Index g = 0; g < f.group.order; ++g)
    ops[std::to_string(g)] = table_json(f.ops[g]);
  return wrap("gfamily", json{{"group", group_json(f.group)},
                              {"carrier_size", f.carrier_size},
                              {"ops", ops}});
}

std::string serialize(const AlexanderPair& p) {
  return wrap("pair", json{{"mcq", mcq_json(p.mcq)},
                           {"ring", ring_json(p.ring)},
                           {"f1", table_json(p.f1)},
                           {"f2", table_json(p.f2)}});
}

std::string serialize(const AugmentedPair& a) {
  return wrap("augmented", json{{"mcq", mcq_json(a.mcq)},
                                {"ring", ring_json(a.ring)},
                                {"module", module_json(a.module)},
                                {"f1", table_json(a.f1)},
                                {"f2", table_json(a.f2)},
                                {"phi1", table_json(a.phi1)},
                                {"phi2", comp_tables_json(a.phi2)}});
}

std::string serialize(const SixTuple& t) { return wrap("tuple", tuple_json(t)); }

std::string serialize(const EquivalenceWitness& w) {
  return wrap("witness", witness_json(w));
}

std::string serialize(const PairList& l) {
  json pairs = json::array();
  for (const AlexanderPair& p : l.pairs)
    pairs.push_back(json{{"f1", table_json(p.f1)}, {"f2", table_json(p.f2)}});
  return wrap("pair-list", json{{"mcq", mcq_json(l.mcq)},
                                {"ring", ring_json(l.ring)},
                                {"pairs", pairs}});
}

std::string serialize(const Certificate& c) {
  json checks = json::array();
  for (const auto& [name, pass] : c.checks)
    checks.push_back(json{{"name", name}, {"pass", pass}});
  return wrap("certificate",
              json{{"tuple", tuple_json(c.tuple)},
                   {"reduced", tuple_json(c.reduction.reduced)},
                   {"witness", witness_json(c.reduction.witness)},
                   {"source_extension", mcq_json(c.source.mcq)},
                   {"source_projection", c.source.projection},
                   {"reduced_extension", mcq_json(c.reduced.mcq)},
                   {"reduced_projection", c.reduced.projection},
                   {"isomorphism", c.isomorphism},
                   {"checks", checks},
                   {"ok", c.ok}});
}

std::string serialize(const MapVec& map) {
  return wrap("map", json{{"map", map}});
}

void save(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot open for writing: " + path);
  out << text;
  if (!out) throw MalformedInput("write failed: " + path);
}

Object parse_algebra_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedInput("top-level value must be an object");
  const Index version = int_field(j, "format_version");
  if (version != kFormatVersion)
    throw MalformedInput("unsupported format_version " + std::to_string(version));
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw MalformedInput("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();

  if (k == "group") return group_from_json(j);
  if (k == "ring") return ring_from_json(j);
  if (k == "module") return ModuleFile{module_candidate_from_json(j)};
  if (k == "quandle") return quandle_from_json(j);
  if (k == "mcq") return mcq_from_json(j);
  if (k == "gfamily") return gfamily_from_json(j);
  if (k == "pair") return pair_from_json(j);
  if (k == "augmented") return augmented_from_json(j);
  if (k == "tuple") return tuple_from_json(j);
  if (k == "witness") return witness_from_json(j);
  if (k == "pair-list") return pair_list_from_json(j);
  if (k == "certificate") return certificate_from_json(j);
  if (k == "map") return MapFile{vec_field(j, "map")};
  throw MalformedInput("unknown kind \"" + k + "\"");
}

Object parse_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_text(buffer.str());
}

std::string kind_of(const Object& object) {
  struct Visitor {
    std::string operator()(const FiniteGroup&) { return "group"; }
    std::string operator()(const FiniteRing&) { return "ring"; }
    std::string operator()(const ModuleFile&) { return "module"; }
    std::string operator()(const FiniteQuandle&) { return "quandle"; }
    std::string operator()(const FiniteMcq&) { return "mcq"; }
    std::string operator()(const GFamily&) { return "gfamily"; }
    std::string operator()(const AlexanderPair&) { return "pair"; }
    std::string operator()(const AugmentedPair&) { return "augmented"; }
    std::string operator()(const SixTuple&) { return "tuple"; }
    std::string operator()(const EquivalenceWitness&) { return "witness"; }
    std::string operator()(const PairList&) { return "pair-list"; }
    std::string operator()(const Certificate&) { return "certificate"; }
    std::string operator()(const MapFile&) { return "map"; }
  };
  return std::visit(Visitor{}, object);
}

namespace {

template <typename T>
T expect(Object object, const char* kind) {
  if (T* value = std::get_if<T>(&object)) return std::move(*value);
  throw MalformedInput("expected a " + std::string(kind) + " file, got " +
                       kind_of(object));
}

}  // namespace

FiniteGroup expect_group(Object o) { return expect<FiniteGroup>(std::move(o), "group"); }
FiniteRing expect_ring(Object o) { return expect<FiniteRing>(std::move(o), "ring"); }

LeftModule expect_module(Object o, const FiniteRing& ring) {
  ModuleFile file = expect<ModuleFile>(std::move(o), "module");
  ModuleCheck check = check_module(file.candidate, ring);
  if (!check.verdict) throw LoadVerificationError("module", check.verdict);
  return *std::move(check.module);
}

FiniteQuandle expect_quandle(Object o) {
  return expect<FiniteQuandle>(std::move(o), "quandle");
}
FiniteMcq expect_mcq(Object o) { return expect<FiniteMcq>(std::move(o), "mcq"); }
GFamily expect_gfamily(Object o) { return expect<GFamily>(std::move(o), "gfamily"); }
AlexanderPair expect_pair(Object o) {
  return expect<AlexanderPair>(std::move(o), "pair");
}
AugmentedPair expect_augmented(Object o) {
  return expect<AugmentedPair>(std::move(o), "augmented");
}
SixTuple expect_tuple(Object o) { return expect<SixTuple>(std::move(o), "tuple"); }
EquivalenceWitness expect_witness(Object o) {
  return expect<EquivalenceWitness>(std::move(o), "witness");
}
Certificate expect_certificate(Object o) {
  return expect<Certificate>(std::move(o), "certificate");
}

}  // namespace mcq::io
