#include <mcq/alexander.hpp>

#include <future>

#include "shape_checks.hpp"

namespace mcq {

using detail::require_comp_tables;
using detail::require_ring_table;

namespace {

void require_pair_shape(const AlexanderPair& p) {
  require_ring_table(p.f1, p.mcq.order, p.ring.order, "f1");
  require_ring_table(p.f2, p.mcq.order, p.ring.order, "f2");
}

void require_augmented_shape(const AugmentedPair& a) {
  require_ring_table(a.f1, a.mcq.order, a.ring.order, "f1");
  require_ring_table(a.f2, a.mcq.order, a.ring.order, "f2");
  require_ring_table(a.phi1, a.mcq.order, a.module.size(), "phi1");
  require_comp_tables(a.phi2, a.mcq, a.module.size(), "phi2");
  if (a.module.ring_order != a.ring.order)
    throw MalformedInput("augmented pair: module is over a different ring");
}

// The nine pair conditions, dispatched by index so that single conditions,
// first-failure scans and full reports share one implementation.
constexpr int kPairConditions = 9;

Verdict eval_pair_condition(const AlexanderPair& p, int idx) {
  const FiniteMcq& X = p.mcq;
  const FiniteRing& R = p.ring;
  const Table& f1 = p.f1;
  const Table& f2 = p.f2;
  const int nc = X.num_components();

  switch (idx) {
    case 0:  // (p-1)  f1(a,b) + f2(a,b) = f1(a, a^-1 b)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            if (R.add(f1[a][b], f2[a][b]) != f1[a][X.mul(X.inv(a), b)])
              return Verdict::fail("(p-1)", {a, b},
                                   "f1(a,b)+f2(a,b) != f1(a,a^-1 b)");
      return Verdict::ok();
    case 1:  // (p-2)  f1(a,x) = f1(b,x)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index x = 0; x < X.order; ++x)
              if (f1[a][x] != f1[b][x])
                return Verdict::fail("(p-2)", {a, b, x}, "f1(a,x) != f1(b,x)");
      return Verdict::ok();
    case 2:  // (p-3)  f2(ab,x) = f2(a,x) + f1(b<|x, a^-1<|x) f2(b,x)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index x = 0; x < X.order; ++x)
              if (f2[X.mul(a, b)][x] !=
                  R.add(f2[a][x],
                        R.mul(f1[X.tri(b, x)][X.tri(X.inv(a), x)], f2[b][x])))
                return Verdict::fail("(p-3)", {a, b, x},
                                     "f2(ab,x) != f2(a,x)+f1(b<|x,a^-1<|x)f2(b,x)");
      return Verdict::ok();
    case 3:  // (p-4)  f1(x, e) = 1
      for (Index x = 0; x < X.order; ++x)
        for (int c = 0; c < nc; ++c)
          if (f1[x][X.identity(c)] != R.one)
            return Verdict::fail("(p-4)", {x, X.identity(c)}, "f1(x,e) != 1");
      return Verdict::ok();
    case 4:  // (p-5)  f1(x,ab) = f1(x<|a,b) f1(x,a)
      for (Index x = 0; x < X.order; ++x)
        for (int c = 0; c < nc; ++c)
          for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
            for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
              if (f1[x][X.mul(a, b)] != R.mul(f1[X.tri(x, a)][b], f1[x][a]))
                return Verdict::fail("(p-5)", {x, a, b},
                                     "f1(x,ab) != f1(x<|a,b)f1(x,a)");
      return Verdict::ok();
    case 5:  // (p-6)  f2(x,ab) = f1(x<|a,b) f2(x,a)
      for (Index x = 0; x < X.order; ++x)
        for (int c = 0; c < nc; ++c)
          for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
            for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
              if (f2[x][X.mul(a, b)] != R.mul(f1[X.tri(x, a)][b], f2[x][a]))
                return Verdict::fail("(p-6)", {x, a, b},
                                     "f2(x,ab) != f1(x<|a,b)f2(x,a)");
      return Verdict::ok();
    case 6:  // (p-7)  f1(x<|y,z) f1(x,y) = f1(x<|z, y<|z) f1(x,z)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y)
          for (Index z = 0; z < X.order; ++z)
            if (R.mul(f1[X.tri(x, y)][z], f1[x][y]) !=
                R.mul(f1[X.tri(x, z)][X.tri(y, z)], f1[x][z]))
              return Verdict::fail("(p-7)", {x, y, z},
                                   "f1(x<|y,z)f1(x,y) != f1(x<|z,y<|z)f1(x,z)");
      return Verdict::ok();
    case 7:  // (p-8)  f1(x<|y,z) f2(x,y) = f2(x<|z, y<|z) f1(y,z)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y)
          for (Index z = 0; z < X.order; ++z)
            if (R.mul(f1[X.tri(x, y)][z], f2[x][y]) !=
                R.mul(f2[X.tri(x, z)][X.tri(y, z)], f1[y][z]))
              return Verdict::fail("(p-8)", {x, y, z},
                                   "f1(x<|y,z)f2(x,y) != f2(x<|z,y<|z)f1(y,z)");
      return Verdict::ok();
    case 8:  // (p-9)  f2(x<|y,z) = f1(x<|z,y<|z) f2(x,z) + f2(x<|z,y<|z) f2(y,z)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y)
          for (Index z = 0; z < X.order; ++z) {
            const Index xz = X.tri(x, z), yz = X.tri(y, z);
            if (f2[X.tri(x, y)][z] !=
                R.add(R.mul(f1[xz][yz], f2[x][z]), R.mul(f2[xz][yz], f2[y][z])))
              return Verdict::fail(
                  "(p-9)", {x, y, z},
                  "f2(x<|y,z) != f1(x<|z,y<|z)f2(x,z)+f2(x<|z,y<|z)f2(y,z)");
          }
      return Verdict::ok();
    default:
      throw InternalInconsistency("pair condition index out of range");
  }
}

constexpr int kCocycleConditions = 5;

Verdict eval_cocycle_condition(const AugmentedPair& p, int idx) {
  const FiniteMcq& X = p.mcq;
  const LeftModule& M = p.module;
  const Table& f1 = p.f1;
  const Table& f2 = p.f2;
  const Table& phi1 = p.phi1;
  const CompTables& phi2 = p.phi2;
  const int nc = X.num_components();

  // phi2 lookup by global same-component elements.
  auto p2 = [&](Index a, Index b) {
    const int c = X.comp(a);
    return phi2[c][X.local(a)][X.local(b)];
  };

  switch (idx) {
    case 0:  // (c-1)  phi2(a,b) + phi2(ab,c) = f1(a,a^-1) phi2(b,c) + phi2(a,bc)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index d = X.offsets[c]; d < X.offsets[c + 1]; ++d)
              if (M.add(p2(a, b), p2(X.mul(a, b), d)) !=
                  M.add(M.act(f1[a][X.inv(a)], p2(b, d)), p2(a, X.mul(b, d))))
                return Verdict::fail(
                    "(c-1)", {a, b, d},
                    "phi2(a,b)+phi2(ab,c) != f1(a,a^-1)phi2(b,c)+phi2(a,bc)");
      return Verdict::ok();
    case 1:  // (c-2)  f1(b,b^-1) phi1(a,b) + phi2(b, b^-1 a b) = phi2(a,b)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            if (M.add(M.act(f1[b][X.inv(b)], phi1[a][b]),
                      p2(b, X.mul(X.mul(X.inv(b), a), b))) != p2(a, b))
              return Verdict::fail(
                  "(c-2)", {a, b},
                  "f1(b,b^-1)phi1(a,b)+phi2(b,b^-1ab) != phi2(a,b)");
      return Verdict::ok();
    case 2:  // (c-3)  f2(x,ab) phi2(a,b) + phi1(x,ab)
             //          = f1(x<|a,b) phi1(x,a) + phi1(x<|a,b)
      for (Index x = 0; x < X.order; ++x)
        for (int c = 0; c < nc; ++c)
          for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
            for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
              const Index ab = X.mul(a, b), xa = X.tri(x, a);
              if (M.add(M.act(f2[x][ab], p2(a, b)), phi1[x][ab]) !=
                  M.add(M.act(f1[xa][b], phi1[x][a]), phi1[xa][b]))
                return Verdict::fail(
                    "(c-3)", {x, a, b},
                    "f2(x,ab)phi2(a,b)+phi1(x,ab) != f1(x<|a,b)phi1(x,a)+phi1(x<|a,b)");
            }
      return Verdict::ok();
    case 3:  // (c-4)  f1(x<|y,z) phi1(x,y) + phi1(x<|y,z)
             //          = f1(x<|z,y<|z) phi1(x,z) + f2(x<|z,y<|z) phi1(y,z)
             //            + phi1(x<|z,y<|z)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y)
          for (Index z = 0; z < X.order; ++z) {
            const Index xy = X.tri(x, y), xz = X.tri(x, z), yz = X.tri(y, z);
            if (M.add(M.act(f1[xy][z], phi1[x][y]), phi1[xy][z]) !=
                M.add(M.add(M.act(f1[xz][yz], phi1[x][z]),
                            M.act(f2[xz][yz], phi1[y][z])),
                      phi1[xz][yz]))
              return Verdict::fail("(c-4)", {x, y, z},
                                   "twisted rack condition for phi1 fails");
          }
      return Verdict::ok();
    case 4:  // (c-5)  f1(ab,x) phi2(a,b) + phi1(ab,x)
             //          = phi1(a,x) + f1(a<|x,a^-1<|x) phi1(b,x)
             //            + phi2(a<|x, b<|x)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index x = 0; x < X.order; ++x) {
              const Index ab = X.mul(a, b);
              const Index ax = X.tri(a, x), bx = X.tri(b, x);
              if (M.add(M.act(f1[ab][x], p2(a, b)), phi1[ab][x]) !=
                  M.add(M.add(phi1[a][x],
                              M.act(f1[ax][X.tri(X.inv(a), x)], phi1[b][x])),
                        p2(ax, bx)))
                return Verdict::fail(
                    "(c-5)", {a, b, x},
                    "f1(ab,x)phi2(a,b)+phi1(ab,x) != "
                    "phi1(a,x)+f1(a<|x,a^-1<|x)phi1(b,x)+phi2(a<|x,b<|x)");
            }
      return Verdict::ok();
    default:
      throw InternalInconsistency("cocycle condition index out of range");
  }
}

}  // namespace

AlexanderPair trivial_pair(const FiniteMcq& mcq, const FiniteRing& ring) {
  AlexanderPair p;
  p.mcq = mcq;
  p.ring = ring;
  p.f1.assign(mcq.order, std::vector<Index>(mcq.order, ring.one));
  p.f2.assign(mcq.order, std::vector<Index>(mcq.order, ring.zero));
  return p;
}

AugmentedPair trivial_augmented(const FiniteMcq& mcq, const FiniteRing& ring,
                                const LeftModule& module) {
  return with_cocycle(trivial_pair(mcq, ring), module, {}, {});
}

AugmentedPair with_cocycle(const AlexanderPair& pair, const LeftModule& module,
                           Table phi1, CompTables phi2) {
  AugmentedPair a;
  a.mcq = pair.mcq;
  a.ring = pair.ring;
  a.module = module;
  a.f1 = pair.f1;
  a.f2 = pair.f2;
  if (phi1.empty())
    phi1.assign(a.mcq.order, std::vector<Index>(a.mcq.order, module.zero()));
  if (phi2.empty())
    for (const FiniteGroup& g : a.mcq.components)
      phi2.push_back(Table(g.order, std::vector<Index>(g.order, module.zero())));
  a.phi1 = std::move(phi1);
  a.phi2 = std::move(phi2);
  return a;
}

AlexanderPair pair_of(const AugmentedPair& aug) {
  return AlexanderPair{aug.mcq, aug.ring, aug.f1, aug.f2};
}

Verdict verify_pair(const AlexanderPair& pair) {
  require_pair_shape(pair);
  for (int i = 0; i < kPairConditions; ++i)
    if (Verdict v = eval_pair_condition(pair, i); !v) return v;
  return Verdict::ok();
}

CheckList pair_condition_report(const AlexanderPair& pair) {
  require_pair_shape(pair);
  CheckList checks;
  for (int i = 0; i < kPairConditions; ++i) {
    Verdict v = eval_pair_condition(pair, i);
    checks.emplace_back("(p-" + std::to_string(i + 1) + ")", v.pass);
  }
  return checks;
}

Verdict verify_pair_properties(const AlexanderPair& pair) {
  if (Verdict v = verify_pair(pair); !v)
    throw InvalidArgument("verify_pair_properties: pair fails verification: " +
                          to_string(v));
  const FiniteMcq& X = pair.mcq;
  const FiniteRing& R = pair.ring;
  const Table& f1 = pair.f1;
  const Table& f2 = pair.f2;

  auto inconsistent = [](const std::string& what, std::vector<Index> w) {
    return InternalInconsistency(
        "verify_pair_properties: lemma consequence failed: " +
        to_string(Verdict::fail(what, std::move(w))));
  };

  // f1 values are units with f1(x,y)^-1 = f1(x<|y, y^-1)
  for (Index x = 0; x < X.order; ++x)
    for (Index y = 0; y < X.order; ++y) {
      if (!R.is_unit(f1[x][y])) throw inconsistent("(L-1)", {x, y});
      const Index stated = f1[X.tri(x, y)][X.inv(y)];
      if (R.mul(f1[x][y], stated) != R.one || R.mul(stated, f1[x][y]) != R.one)
        throw inconsistent("(L-1)", {x, y});
    }
  // f2(e, x) = 0
  for (int c = 0; c < X.num_components(); ++c)
    for (Index x = 0; x < X.order; ++x)
      if (f2[X.identity(c)][x] != R.zero)
        throw inconsistent("(L-2)", {X.identity(c), x});
  // f1(ab,x) f1(a,a^-1) = f1(b<|x, a^-1<|x) f1(b,x)
  for (int c = 0; c < X.num_components(); ++c)
    for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
      for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
        for (Index x = 0; x < X.order; ++x)
          if (R.mul(f1[X.mul(a, b)][x], f1[a][X.inv(a)]) !=
              R.mul(f1[X.tri(b, x)][X.tri(X.inv(a), x)], f1[b][x]))
            throw inconsistent("(L-3)", {a, b, x});
  // f2(x<|a, b) = f2(x,ab) f1(a,a^-1)
  for (Index x = 0; x < X.order; ++x)
    for (int c = 0; c < X.num_components(); ++c)
      for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
        for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
          if (f2[X.tri(x, a)][b] !=
              R.mul(f2[x][X.mul(a, b)], f1[a][X.inv(a)]))
            throw inconsistent("(L-4)", {x, a, b});
  return Verdict::ok();
}

Verdict verify_cocycle(const AugmentedPair& aug) {
  require_augmented_shape(aug);
  for (int i = 0; i < kCocycleConditions; ++i)
    if (Verdict v = eval_cocycle_condition(aug, i); !v) return v;

  // Lemma consequences; a failure past this point means either a violated
  // precondition (underlying pair unverified) or an implementation bug.
  const FiniteMcq& X = aug.mcq;
  const LeftModule& M = aug.module;
  auto consequence_failed = [&](const std::string& what) -> void {
    if (Verdict v = verify_pair(pair_of(aug)); !v)
      throw InvalidArgument(
          "verify_cocycle: underlying pair fails verification: " + to_string(v));
    throw InternalInconsistency("verify_cocycle: " + what +
                                " despite passing conditions");
  };
  for (Index x = 0; x < X.order; ++x)
    if (aug.phi1[x][x] != M.zero())
      consequence_failed("phi1(x,x) != 0 at x=" + std::to_string(x));
  for (int c = 0; c < X.num_components(); ++c) {
    const Index e = X.components[c].identity;
    for (Index a = 0; a < X.components[c].order; ++a)
      if (aug.phi2[c][e][a] != aug.phi2[c][e][e])
        consequence_failed("phi2(e,a) not constant in a");
  }
  return Verdict::ok();
}

CheckList cocycle_condition_report(const AugmentedPair& aug) {
  require_augmented_shape(aug);
  CheckList checks;
  for (int i = 0; i < kCocycleConditions; ++i) {
    Verdict v = eval_cocycle_condition(aug, i);
    checks.emplace_back("(c-" + std::to_string(i + 1) + ")", v.pass);
  }
  return checks;
}

Verdict pair_is_augmented_alexander(const AugmentedPair& aug) {
  require_augmented_shape(aug);
  for (int i = 0; i < kPairConditions; ++i)
    if (Verdict v = eval_pair_condition(pair_of(aug), i); !v) return v;
  return verify_cocycle(aug);
}

// ---------------------------------------------------------------------------
// Extensions.

MapVec extension_projection(const FiniteMcq& base, Index module_size) {
  MapVec proj(static_cast<size_t>(base.order) * module_size);
  for (Index i = 0; i < static_cast<Index>(proj.size()); ++i)
    proj[i] = i / module_size;
  return proj;
}

McqCandidate extension_candidate_augmented(const AugmentedPair& aug) {
  require_augmented_shape(aug);
  const FiniteMcq& X = aug.mcq;
  const LeftModule& M = aug.module;
  const Index mn = M.size();

  McqCandidate out;
  for (int c = 0; c < X.num_components(); ++c) {
    const FiniteGroup& g = X.components[c];
    GroupCandidate comp;
    comp.order = g.order * mn;
    comp.cayley.assign(comp.order, std::vector<Index>(comp.order));
    for (Index a = 0; a < g.order; ++a) {
      const Index ga = X.global(c, a);
      const Index coeff = aug.f1[ga][X.inv(ga)];  // f1(a, a^-1)
      for (Index u = 0; u < mn; ++u)
        for (Index b = 0; b < g.order; ++b)
          for (Index v = 0; v < mn; ++v) {
            const Index w = M.add(M.add(u, M.act(coeff, v)), aug.phi2[c][a][b]);
            comp.cayley[a * mn + u][b * mn + v] = g.cayley[a][b] * mn + w;
          }
    }
    out.components.push_back(std::move(comp));
  }

  const Index n = X.order * mn;
  out.triangle.assign(n, std::vector<Index>(n));
  for (Index x = 0; x < X.order; ++x)
    for (Index u = 0; u < mn; ++u)
      for (Index y = 0; y < X.order; ++y)
        for (Index v = 0; v < mn; ++v) {
          const Index w = M.add(
              M.add(M.act(aug.f1[x][y], u), M.act(aug.f2[x][y], v)),
              aug.phi1[x][y]);
          out.triangle[x * mn + u][y * mn + v] = X.tri(x, y) * mn + w;
        }
  return out;
}

Extension build_extension_augmented(const AugmentedPair& aug) {
  if (Verdict v = pair_is_augmented_alexander(aug); !v)
    throw InvalidArgument("build_extension_augmented: not an augmented pair: " +
                          to_string(v));
  McqCheck check = check_mcq(extension_candidate_augmented(aug));
  if (!check.verdict)
    throw InternalInconsistency(
        "build_extension_augmented: extension fails verify_mcq: " +
        to_string(check.verdict));
  return Extension{*std::move(check.mcq),
                   extension_projection(aug.mcq, aug.module.size())};
}

ConverseReport check_converse_augmented(const AugmentedPair& aug) {
  if (!modules_equal(aug.module, module_self(aug.ring)))
    throw InvalidArgument("check_converse_augmented: requires M = R");
  ConverseReport report;
  report.conditions = pair_is_augmented_alexander(aug);
  report.structure = verify_mcq(extension_candidate_augmented(aug));
  report.agree = report.conditions.pass == report.structure.pass;
  return report;
}

InverseFormulaReport inverse_formula_report(const AugmentedPair& aug,
                                            const Extension& ext) {
  const FiniteMcq& X = aug.mcq;
  const LeftModule& M = aug.module;
  const Index mn = M.size();
  InverseFormulaReport report{true, true};
  for (int c = 0; c < X.num_components(); ++c) {
    const FiniteGroup& g = X.components[c];
    const Index e = g.identity;
    const Index p2ee = aug.phi2[c][e][e];
    for (Index a = 0; a < g.order; ++a) {
      const Index ga = X.global(c, a);
      const Index ainv = g.inverse[a];
      const Index f1aa = aug.f1[ga][ga];  // f1(a, a)
      const Index inv_base = (X.offsets[c] + ainv) * mn;
      for (Index u = 0; u < mn; ++u) {
        const Index table_inv = ext.mcq.inv(X.global(c, a) * mn + u);
        const Index head = M.neg(M.act(f1aa, u));
        const Index standard =
            inv_base + M.sub(M.sub(head, aug.phi2[c][ainv][a]), p2ee);
        const Index swapped =
            inv_base + M.sub(M.sub(head, aug.phi2[c][a][ainv]), p2ee);
        if (table_inv != standard) report.standard_form = false;
        if (table_inv != swapped) report.swapped_form = false;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace {

// Odometer over the flattened (f1, f2) digit string in lexicographic order;
// digit 0 (f1[0][0]) is the most significant.
struct PairScan {
  const FiniteMcq& mcq;
  const FiniteRing& ring;
  Index n;
  size_t cells;
  std::vector<Index> digits;
  AlexanderPair work;

  PairScan(const FiniteMcq& m, const FiniteRing& r)
      : mcq(m), ring(r), n(m.order), cells(static_cast<size_t>(n) * n) {
    digits.assign(2 * cells, 0);
    work.mcq = m;
    work.ring = r;
    work.f1.assign(n, std::vector<Index>(n, 0));
    work.f2.assign(n, std::vector<Index>(n, 0));
  }

  void write_digit(size_t i, Index value) {
    digits[i] = value;
    const size_t cell = i % cells;
    Table& t = i < cells ? work.f1 : work.f2;
    t[cell / n][cell % n] = value;
  }

  // Scans all completions of the fixed leading digit, appending survivors.
  void run_branch(Index lead, std::vector<AlexanderPair>& out) {
    for (size_t i = 0; i < digits.size(); ++i) write_digit(i, 0);
    write_digit(0, lead);
    for (;;) {
      if (verify_pair(work)) out.push_back(work);
      // advance the odometer over digits 1..end
      size_t i = digits.size() - 1;
      for (;;) {
        if (i == 0) return;
        if (digits[i] + 1 < ring.order) {
          write_digit(i, digits[i] + 1);
          break;
        }
        write_digit(i, 0);
        --i;
      }
    }
  }
};

}  // namespace

std::vector<AlexanderPair> enumerate_pairs(const FiniteMcq& mcq, const FiniteRing& ring,
                                           const EnumOptions& options) {
  const unsigned long long cells =
      2ull * static_cast<unsigned long long>(mcq.order) * mcq.order;
  unsigned long long space = 1;
  for (unsigned long long i = 0; i < cells; ++i) {
    if (space > options.budget / ring.order) {
      throw ResourceLimit("enumerate_pairs: candidate space |R|^(2|X|^2) = |" +
                          std::to_string(ring.order) + "|^" + std::to_string(cells) +
                          " exceeds budget " + std::to_string(options.budget));
    }
    space *= ring.order;
  }
  if (space > options.budget)
    throw ResourceLimit("enumerate_pairs: candidate space exceeds budget");

  const int tasks = std::max(1, options.tasks);
  if (tasks == 1 || mcq.order == 0) {
    std::vector<AlexanderPair> out;
    PairScan scan(mcq, ring);
    for (Index lead = 0; lead < ring.order; ++lead) scan.run_branch(lead, out);
    return out;
  }

  // One branch per leading f1 digit; branches are independent and merged in
  // digit order, so the result does not depend on scheduling.
  std::vector<std::future<std::vector<AlexanderPair>>> futures;
  for (Index lead = 0; lead < ring.order; ++lead)
    futures.push_back(std::async(std::launch::async, [&, lead] {
      std::vector<AlexanderPair> out;
      PairScan scan(mcq, ring);
      scan.run_branch(lead, out);
      return out;
    }));
  std::vector<AlexanderPair> out;
  for (auto& fut : futures) {
    std::vector<AlexanderPair> part = fut.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace mcq
