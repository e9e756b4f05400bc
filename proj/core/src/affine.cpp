#include <mcq/affine.hpp>

#include <algorithm>
#include <limits>
#include <random>

#include "shape_checks.hpp"

namespace mcq {

using detail::require_comp_tables;
using detail::require_ring_table;

namespace {

void require_tuple_shape(const SixTuple& t) {
  require_ring_table(t.f1, t.mcq.order, t.ring.order, "f1");
  require_ring_table(t.f2, t.mcq.order, t.ring.order, "f2");
  require_comp_tables(t.f3, t.mcq, t.ring.order, "f3");
  require_comp_tables(t.f4, t.mcq, t.ring.order, "f4");
  require_ring_table(t.phi1, t.mcq.order, t.module.size(), "phi1");
  require_comp_tables(t.phi2, t.mcq, t.module.size(), "phi2");
  if (t.module.ring_order != t.ring.order)
    throw MalformedInput("tuple: module is over a different ring");
}

// Lookup helpers for the within-component tables by global element indices.
struct Ctx {
  const SixTuple& t;
  const FiniteMcq& X;
  const FiniteRing& R;
  const LeftModule& M;

  explicit Ctx(const SixTuple& tuple)
      : t(tuple), X(tuple.mcq), R(tuple.ring), M(tuple.module) {}

  Index F3(Index a, Index b) const {
    const int c = X.comp(a);
    return t.f3[c][X.local(a)][X.local(b)];
  }
  Index F4(Index a, Index b) const {
    const int c = X.comp(a);
    return t.f4[c][X.local(a)][X.local(b)];
  }
  Index P2(Index a, Index b) const {
    const int c = X.comp(a);
    return t.phi2[c][X.local(a)][X.local(b)];
  }
};

Verdict eval_tuple_condition(const Ctx& ctx, int idx) {
  const SixTuple& t = ctx.t;
  const FiniteMcq& X = ctx.X;
  const FiniteRing& R = ctx.R;
  const LeftModule& M = ctx.M;
  const int nc = X.num_components();

  switch (idx) {
    case 0:  // (0-i) f3(a,b) and f4(a,b) are invertible
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
            if (!R.is_unit(ctx.F3(a, b)))
              return Verdict::fail("(0-i)", {a, b}, "f3(a,b) is not a unit");
            if (!R.is_unit(ctx.F4(a, b)))
              return Verdict::fail("(0-i)", {a, b}, "f4(a,b) is not a unit");
          }
      return Verdict::ok();
    case 1:  // (0-ii) f3(ab,c) f3(a,b) = f3(a,bc)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index d = X.offsets[c]; d < X.offsets[c + 1]; ++d)
              if (R.mul(ctx.F3(X.mul(a, b), d), ctx.F3(a, b)) !=
                  ctx.F3(a, X.mul(b, d)))
                return Verdict::fail("(0-ii)", {a, b, d},
                                     "f3(ab,c)f3(a,b) != f3(a,bc)");
      return Verdict::ok();
    case 2:  // (0-iii) f3(ab,c) f4(a,b) = f4(a,bc) f3(b,c)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index d = X.offsets[c]; d < X.offsets[c + 1]; ++d)
              if (R.mul(ctx.F3(X.mul(a, b), d), ctx.F4(a, b)) !=
                  R.mul(ctx.F4(a, X.mul(b, d)), ctx.F3(b, d)))
                return Verdict::fail("(0-iii)", {a, b, d},
                                     "f3(ab,c)f4(a,b) != f4(a,bc)f3(b,c)");
      return Verdict::ok();
    case 3:  // (0-iv) f4(ab,c) = f4(a,bc) f4(b,c)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index d = X.offsets[c]; d < X.offsets[c + 1]; ++d)
              if (ctx.F4(X.mul(a, b), d) !=
                  R.mul(ctx.F4(a, X.mul(b, d)), ctx.F4(b, d)))
                return Verdict::fail("(0-iv)", {a, b, d},
                                     "f4(ab,c) != f4(a,bc)f4(b,c)");
      return Verdict::ok();
    case 4:  // (0-phi) f3(ab,c)phi2(a,b) + phi2(ab,c)
             //           = f4(a,bc)phi2(b,c) + phi2(a,bc)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index d = X.offsets[c]; d < X.offsets[c + 1]; ++d) {
              const Index ab = X.mul(a, b), bd = X.mul(b, d);
              if (M.add(M.act(ctx.F3(ab, d), ctx.P2(a, b)), ctx.P2(ab, d)) !=
                  M.add(M.act(ctx.F4(a, bd), ctx.P2(b, d)), ctx.P2(a, bd)))
                return Verdict::fail(
                    "(0-phi)", {a, b, d},
                    "f3(ab,c)phi2(a,b)+phi2(ab,c) != f4(a,bc)phi2(b,c)+phi2(a,bc)");
            }
      return Verdict::ok();
    case 5:  // (1-i) f1(a,b) = f4(b^-1,ab) f3(a,b)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            if (t.f1[a][b] != R.mul(ctx.F4(X.inv(b), X.mul(a, b)), ctx.F3(a, b)))
              return Verdict::fail("(1-i)", {a, b},
                                   "f1(a,b) != f4(b^-1,ab)f3(a,b)");
      return Verdict::ok();
    case 6:  // (1-ii) f3(b,b^-1ab) + f4(b,b^-1ab) f2(a,b) = f4(a,b)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
            const Index conj = X.mul(X.mul(X.inv(b), a), b);
            if (R.add(ctx.F3(b, conj), R.mul(ctx.F4(b, conj), t.f2[a][b])) !=
                ctx.F4(a, b))
              return Verdict::fail(
                  "(1-ii)", {a, b},
                  "f3(b,b^-1ab)+f4(b,b^-1ab)f2(a,b) != f4(a,b)");
          }
      return Verdict::ok();
    case 7:  // (1-phi) f4(b,b^-1ab)phi1(a,b) + phi2(b,b^-1ab) = phi2(a,b)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
            const Index conj = X.mul(X.mul(X.inv(b), a), b);
            if (M.add(M.act(ctx.F4(b, conj), t.phi1[a][b]), ctx.P2(b, conj)) !=
                ctx.P2(a, b))
              return Verdict::fail(
                  "(1-phi)", {a, b},
                  "f4(b,b^-1ab)phi1(a,b)+phi2(b,b^-1ab) != phi2(a,b)");
          }
      return Verdict::ok();
    case 8:  // (2-i) f1(x,e) = 1
      for (Index x = 0; x < X.order; ++x)
        for (int c = 0; c < nc; ++c)
          if (t.f1[x][X.identity(c)] != R.one)
            return Verdict::fail("(2-i)", {x, X.identity(c)}, "f1(x,e) != 1");
      return Verdict::ok();
    case 9:  // (2-ii) f1(x,ab) = f1(x<|a,b) f1(x,a)
      for (Index x = 0; x < X.order; ++x)
        for (int c = 0; c < nc; ++c)
          for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
            for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
              if (t.f1[x][X.mul(a, b)] !=
                  R.mul(t.f1[X.tri(x, a)][b], t.f1[x][a]))
                return Verdict::fail("(2-ii)", {x, a, b},
                                     "f1(x,ab) != f1(x<|a,b)f1(x,a)");
      return Verdict::ok();
    case 10:  // (2-iii) f2(x,ab) f3(a,b) = f1(x<|a,b) f2(x,a)
      for (Index x = 0; x < X.order; ++x)
        for (int c = 0; c < nc; ++c)
          for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
            for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
              if (R.mul(t.f2[x][X.mul(a, b)], ctx.F3(a, b)) !=
                  R.mul(t.f1[X.tri(x, a)][b], t.f2[x][a]))
                return Verdict::fail("(2-iii)", {x, a, b},
                                     "f2(x,ab)f3(a,b) != f1(x<|a,b)f2(x,a)");
      return Verdict::ok();
    case 11:  // (2-iv) f2(x,ab) f4(a,b) = f2(x<|a,b)
      for (Index x = 0; x < X.order; ++x)
        for (int c = 0; c < nc; ++c)
          for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
            for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
              if (R.mul(t.f2[x][X.mul(a, b)], ctx.F4(a, b)) !=
                  t.f2[X.tri(x, a)][b])
                return Verdict::fail("(2-iv)", {x, a, b},
                                     "f2(x,ab)f4(a,b) != f2(x<|a,b)");
      return Verdict::ok();
    case 12:  // (2-phi-i) f2(x,e)phi2(e,e) = phi1(x,e)
      for (Index x = 0; x < X.order; ++x)
        for (int c = 0; c < nc; ++c) {
          const Index e = X.identity(c);
          if (M.act(t.f2[x][e], ctx.P2(e, e)) != t.phi1[x][e])
            return Verdict::fail("(2-phi-i)", {x, e},
                                 "f2(x,e)phi2(e,e) != phi1(x,e)");
        }
      return Verdict::ok();
    case 13:  // (2-phi-ii) f2(x,ab)phi2(a,b) + phi1(x,ab)
              //              = f1(x<|a,b)phi1(x,a) + phi1(x<|a,b)
      for (Index x = 0; x < X.order; ++x)
        for (int c = 0; c < nc; ++c)
          for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
            for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
              const Index ab = X.mul(a, b), xa = X.tri(x, a);
              if (M.add(M.act(t.f2[x][ab], ctx.P2(a, b)), t.phi1[x][ab]) !=
                  M.add(M.act(t.f1[xa][b], t.phi1[x][a]), t.phi1[xa][b]))
                return Verdict::fail(
                    "(2-phi-ii)", {x, a, b},
                    "f2(x,ab)phi2(a,b)+phi1(x,ab) != "
                    "f1(x<|a,b)phi1(x,a)+phi1(x<|a,b)");
            }
      return Verdict::ok();
    case 14:  // (3-i) f1(x<|y,z) f1(x,y) = f1(x<|z,y<|z) f1(x,z)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y)
          for (Index z = 0; z < X.order; ++z)
            if (R.mul(t.f1[X.tri(x, y)][z], t.f1[x][y]) !=
                R.mul(t.f1[X.tri(x, z)][X.tri(y, z)], t.f1[x][z]))
              return Verdict::fail("(3-i)", {x, y, z},
                                   "f1(x<|y,z)f1(x,y) != f1(x<|z,y<|z)f1(x,z)");
      return Verdict::ok();
    case 15:  // (3-ii) f1(x<|y,z) f2(x,y) = f2(x<|z,y<|z) f1(y,z)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y)
          for (Index z = 0; z < X.order; ++z)
            if (R.mul(t.f1[X.tri(x, y)][z], t.f2[x][y]) !=
                R.mul(t.f2[X.tri(x, z)][X.tri(y, z)], t.f1[y][z]))
              return Verdict::fail("(3-ii)", {x, y, z},
                                   "f1(x<|y,z)f2(x,y) != f2(x<|z,y<|z)f1(y,z)");
      return Verdict::ok();
    case 16:  // (3-iii) f2(x<|y,z) = f1(x<|z,y<|z)f2(x,z) + f2(x<|z,y<|z)f2(y,z)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y)
          for (Index z = 0; z < X.order; ++z) {
            const Index xz = X.tri(x, z), yz = X.tri(y, z);
            if (t.f2[X.tri(x, y)][z] !=
                R.add(R.mul(t.f1[xz][yz], t.f2[x][z]),
                      R.mul(t.f2[xz][yz], t.f2[y][z])))
              return Verdict::fail(
                  "(3-iii)", {x, y, z},
                  "f2(x<|y,z) != f1(x<|z,y<|z)f2(x,z)+f2(x<|z,y<|z)f2(y,z)");
          }
      return Verdict::ok();
    case 17:  // (3-phi) f1(x<|y,z)phi1(x,y) + phi1(x<|y,z)
              //           = f1(x<|z,y<|z)phi1(x,z) + f2(x<|z,y<|z)phi1(y,z)
              //             + phi1(x<|z,y<|z)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y)
          for (Index z = 0; z < X.order; ++z) {
            const Index xy = X.tri(x, y), xz = X.tri(x, z), yz = X.tri(y, z);
            if (M.add(M.act(t.f1[xy][z], t.phi1[x][y]), t.phi1[xy][z]) !=
                M.add(M.add(M.act(t.f1[xz][yz], t.phi1[x][z]),
                            M.act(t.f2[xz][yz], t.phi1[y][z])),
                      t.phi1[xz][yz]))
              return Verdict::fail("(3-phi)", {x, y, z},
                                   "affine rack condition for phi1 fails");
          }
      return Verdict::ok();
    case 18:  // (4-i) f1(ab,x) f3(a,b) = f3(a<|x,b<|x) f1(a,x)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index x = 0; x < X.order; ++x) {
              const Index ab = X.mul(a, b);
              const Index ax = X.tri(a, x), bx = X.tri(b, x);
              if (R.mul(t.f1[ab][x], ctx.F3(a, b)) !=
                  R.mul(ctx.F3(ax, bx), t.f1[a][x]))
                return Verdict::fail("(4-i)", {a, b, x},
                                     "f1(ab,x)f3(a,b) != f3(a<|x,b<|x)f1(a,x)");
            }
      return Verdict::ok();
    case 19:  // (4-ii) f1(ab,x) f4(a,b) = f4(a<|x,b<|x) f1(b,x)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index x = 0; x < X.order; ++x) {
              const Index ab = X.mul(a, b);
              const Index ax = X.tri(a, x), bx = X.tri(b, x);
              if (R.mul(t.f1[ab][x], ctx.F4(a, b)) !=
                  R.mul(ctx.F4(ax, bx), t.f1[b][x]))
                return Verdict::fail("(4-ii)", {a, b, x},
                                     "f1(ab,x)f4(a,b) != f4(a<|x,b<|x)f1(b,x)");
            }
      return Verdict::ok();
    case 20:  // (4-iii) f2(ab,x) = f3(a<|x,b<|x)f2(a,x) + f4(a<|x,b<|x)f2(b,x)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index x = 0; x < X.order; ++x) {
              const Index ax = X.tri(a, x), bx = X.tri(b, x);
              if (t.f2[X.mul(a, b)][x] !=
                  R.add(R.mul(ctx.F3(ax, bx), t.f2[a][x]),
                        R.mul(ctx.F4(ax, bx), t.f2[b][x])))
                return Verdict::fail(
                    "(4-iii)", {a, b, x},
                    "f2(ab,x) != f3(a<|x,b<|x)f2(a,x)+f4(a<|x,b<|x)f2(b,x)");
            }
      return Verdict::ok();
    case 21:  // (4-phi) f1(ab,x)phi2(a,b) + phi1(ab,x)
              //           = f3(a<|x,b<|x)phi1(a,x) + f4(a<|x,b<|x)phi1(b,x)
              //             + phi2(a<|x,b<|x)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            for (Index x = 0; x < X.order; ++x) {
              const Index ab = X.mul(a, b);
              const Index ax = X.tri(a, x), bx = X.tri(b, x);
              if (M.add(M.act(t.f1[ab][x], ctx.P2(a, b)), t.phi1[ab][x]) !=
                  M.add(M.add(M.act(ctx.F3(ax, bx), t.phi1[a][x]),
                              M.act(ctx.F4(ax, bx), t.phi1[b][x])),
                        ctx.P2(ax, bx)))
                return Verdict::fail(
                    "(4-phi)", {a, b, x},
                    "f1(ab,x)phi2(a,b)+phi1(ab,x) != "
                    "f3(a<|x,b<|x)phi1(a,x)+f4(a<|x,b<|x)phi1(b,x)+phi2(a<|x,b<|x)");
            }
      return Verdict::ok();
    default:
      throw InternalInconsistency("tuple condition index out of range");
  }
}

int tag_index(std::string_view tag) {
  for (size_t i = 0; i < kTupleConditionTags.size(); ++i)
    if (kTupleConditionTags[i] == tag) return static_cast<int>(i);
  throw InvalidArgument("unknown condition tag: " + std::string(tag));
}

}  // namespace

SixTuple trivial_tuple(const FiniteMcq& mcq, const FiniteRing& ring,
                       const LeftModule& module) {
  SixTuple t;
  t.mcq = mcq;
  t.ring = ring;
  t.module = module;
  t.f1.assign(mcq.order, std::vector<Index>(mcq.order, ring.one));
  t.f2.assign(mcq.order, std::vector<Index>(mcq.order, ring.zero));
  t.phi1.assign(mcq.order, std::vector<Index>(mcq.order, module.zero()));
  for (const FiniteGroup& g : mcq.components) {
    t.f3.push_back(Table(g.order, std::vector<Index>(g.order, ring.one)));
    t.f4.push_back(Table(g.order, std::vector<Index>(g.order, ring.one)));
    t.phi2.push_back(Table(g.order, std::vector<Index>(g.order, module.zero())));
  }
  return t;
}

Verdict verify_six_tuple(const SixTuple& t) {
  require_tuple_shape(t);
  Ctx ctx(t);
  for (int i = 0; i < static_cast<int>(kTupleConditionTags.size()); ++i)
    if (Verdict v = eval_tuple_condition(ctx, i); !v) return v;
  return Verdict::ok();
}

Verdict verify_six_tuple_except(const SixTuple& t, std::string_view skip_tag) {
  require_tuple_shape(t);
  const int skip = tag_index(skip_tag);
  Ctx ctx(t);
  for (int i = 0; i < static_cast<int>(kTupleConditionTags.size()); ++i) {
    if (i == skip) continue;
    if (Verdict v = eval_tuple_condition(ctx, i); !v) return v;
  }
  return Verdict::ok();
}

Verdict check_tuple_condition(const SixTuple& t, std::string_view tag) {
  require_tuple_shape(t);
  Ctx ctx(t);
  return eval_tuple_condition(ctx, tag_index(tag));
}

CheckList tuple_condition_report(const SixTuple& t) {
  require_tuple_shape(t);
  Ctx ctx(t);
  CheckList checks;
  for (int i = 0; i < static_cast<int>(kTupleConditionTags.size()); ++i)
    checks.emplace_back(std::string(kTupleConditionTags[i]),
                        eval_tuple_condition(ctx, i).pass);
  return checks;
}

Verdict verify_alt_1ii(const SixTuple& t) {
  require_tuple_shape(t);
  Ctx ctx(t);
  const FiniteMcq& X = t.mcq;
  const FiniteRing& R = t.ring;
  for (int c = 0; c < X.num_components(); ++c) {
    const Index e = X.identity(c);
    for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
      for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
        const Index binv = X.inv(b);
        const Index ab = X.mul(a, b);
        // -f3(b^-1,ab) f4(b^-1,e) f3(b,b^-1) + f4(b^-1,ab) f4(a,b)
        const Index left = R.mul(R.mul(ctx.F3(binv, ab), ctx.F4(binv, e)),
                                 ctx.F3(b, binv));
        const Index rhs = R.add(R.neg(left), R.mul(ctx.F4(binv, ab), ctx.F4(a, b)));
        if (t.f2[a][b] != rhs)
          return Verdict::fail("(1-ii-alt)", {a, b},
                               "f2(a,b) != -f3(b^-1,ab)f4(b^-1,e)f3(b,b^-1)"
                               "+f4(b^-1,ab)f4(a,b)");
      }
  }
  return Verdict::ok();
}

Verdict verify_tuple_derived(const SixTuple& t) {
  require_tuple_shape(t);
  Ctx ctx(t);
  const FiniteMcq& X = t.mcq;
  const FiniteRing& R = t.ring;
  const LeftModule& M = t.module;
  for (int c = 0; c < X.num_components(); ++c) {
    const Index e = X.identity(c);
    for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a) {
      if (ctx.F3(a, e) != R.one)
        return Verdict::fail("derived-f3-identity", {a, e}, "f3(a,e) != 1");
      if (ctx.F4(e, a) != R.one)
        return Verdict::fail("derived-f4-identity", {e, a}, "f4(e,a) != 1");
    }
    for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
      for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
        const Index ab = X.mul(a, b);
        const Index f3inv = ctx.F3(ab, X.inv(b));
        if (R.mul(ctx.F3(a, b), f3inv) != R.one ||
            R.mul(f3inv, ctx.F3(a, b)) != R.one)
          return Verdict::fail("derived-f3-inverse", {a, b},
                               "f3(a,b)^-1 != f3(ab,b^-1)");
        const Index f4inv = ctx.F4(X.inv(a), ab);
        if (R.mul(ctx.F4(a, b), f4inv) != R.one ||
            R.mul(f4inv, ctx.F4(a, b)) != R.one)
          return Verdict::fail("derived-f4-inverse", {a, b},
                               "f4(a,b)^-1 != f4(a^-1,ab)");
      }
  }
  for (Index x = 0; x < X.order; ++x)
    if (t.phi1[x][x] != M.zero())
      return Verdict::fail("derived-phi1-diagonal", {x}, "phi1(a,a) != 0");
  return Verdict::ok();
}

// ---------------------------------------------------------------------------
// Extensions.

McqCandidate extension_candidate_affine(const SixTuple& t) {
  require_tuple_shape(t);
  const FiniteMcq& X = t.mcq;
  const LeftModule& M = t.module;
  const Index mn = M.size();

  McqCandidate out;
  for (int c = 0; c < X.num_components(); ++c) {
    const FiniteGroup& g = X.components[c];
    GroupCandidate comp;
    comp.order = g.order * mn;
    comp.cayley.assign(comp.order, std::vector<Index>(comp.order));
    for (Index a = 0; a < g.order; ++a)
      for (Index u = 0; u < mn; ++u)
        for (Index b = 0; b < g.order; ++b)
          for (Index v = 0; v < mn; ++v) {
            const Index w =
                M.add(M.add(M.act(t.f3[c][a][b], u), M.act(t.f4[c][a][b], v)),
                      t.phi2[c][a][b]);
            comp.cayley[a * mn + u][b * mn + v] = g.cayley[a][b] * mn + w;
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
              M.add(M.act(t.f1[x][y], u), M.act(t.f2[x][y], v)), t.phi1[x][y]);
          out.triangle[x * mn + u][y * mn + v] = X.tri(x, y) * mn + w;
        }
  return out;
}

Extension build_affine_extension(const SixTuple& t) {
  if (Verdict v = verify_six_tuple(t); !v)
    throw InvalidArgument("build_affine_extension: tuple fails verification: " +
                          to_string(v));
  McqCheck check = check_mcq(extension_candidate_affine(t));
  if (!check.verdict)
    throw InternalInconsistency(
        "build_affine_extension: extension fails verify_mcq: " +
        to_string(check.verdict));
  return Extension{*std::move(check.mcq),
                   extension_projection(t.mcq, t.module.size())};
}

ConverseReport check_converse_six_tuple(const SixTuple& t) {
  if (!modules_equal(t.module, module_self(t.ring)))
    throw InvalidArgument("check_converse_six_tuple: requires M = R");
  ConverseReport report;
  report.conditions = verify_six_tuple(t);
  report.structure = verify_mcq(extension_candidate_affine(t));
  report.agree = report.conditions.pass == report.structure.pass;
  return report;
}

SixTuple embed_pair_as_tuple(const AugmentedPair& aug) {
  if (Verdict v = pair_is_augmented_alexander(aug); !v)
    throw InvalidArgument("embed_pair_as_tuple: not an augmented pair: " +
                          to_string(v));
  SixTuple t;
  t.mcq = aug.mcq;
  t.ring = aug.ring;
  t.module = aug.module;
  t.f1 = aug.f1;
  t.f2 = aug.f2;
  t.phi1 = aug.phi1;
  t.phi2 = aug.phi2;
  for (int c = 0; c < t.mcq.num_components(); ++c) {
    const Index n = t.mcq.components[c].order;
    t.f3.push_back(Table(n, std::vector<Index>(n, t.ring.one)));
    Table f4(n, std::vector<Index>(n));
    for (Index a = 0; a < n; ++a) {
      const Index ga = t.mcq.global(c, a);
      const Index coeff = aug.f1[ga][t.mcq.inv(ga)];  // f1(a,a^-1)
      for (Index b = 0; b < n; ++b) f4[a][b] = coeff;
    }
    t.f4.push_back(std::move(f4));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Equivalence.

namespace {

void require_witness(const SixTuple& t, const EquivalenceWitness& w) {
  const Index n = t.mcq.order;
  if (static_cast<Index>(w.h.size()) != n || static_cast<Index>(w.eta.size()) != n)
    throw MalformedInput("witness: h/eta must be total on the carrier");
  for (Index x = 0; x < n; ++x) {
    if (w.h[x] < 0 || w.h[x] >= t.ring.order)
      throw MalformedInput("witness: h value out of range");
    if (w.eta[x] < 0 || w.eta[x] >= t.module.size())
      throw MalformedInput("witness: eta value out of range");
    if (!t.ring.is_unit(w.h[x]))
      throw InvalidArgument("invalid witness: h(" + std::to_string(x) +
                            ") is not a unit");
  }
}

void require_same_structures(const SixTuple& t1, const SixTuple& t2) {
  if (!mcqs_equal(t1.mcq, t2.mcq) || !rings_equal(t1.ring, t2.ring) ||
      !modules_equal(t1.module, t2.module))
    throw InvalidArgument(
        "check_equivalence: tuples over different X, R or M are not comparable");
}

constexpr std::array<std::string_view, 6> kEquivalenceTags = {
    "(e-f1)", "(e-f2)", "(e-phi1)", "(e-f3)", "(e-f4)", "(e-phi2)"};

Verdict eval_equivalence_relation(const SixTuple& t1, const SixTuple& t2,
                                  const EquivalenceWitness& w, int idx) {
  const FiniteMcq& X = t1.mcq;
  const FiniteRing& R = t1.ring;
  const LeftModule& M = t1.module;
  Ctx f(t1), g(t2);
  const int nc = X.num_components();

  switch (idx) {
    case 0:  // h(x<|y) f1(x,y) = g1(x,y) h(x)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y)
          if (R.mul(w.h[X.tri(x, y)], t1.f1[x][y]) !=
              R.mul(t2.f1[x][y], w.h[x]))
            return Verdict::fail("(e-f1)", {x, y},
                                 "h(x<|y)f1(x,y) != g1(x,y)h(x)");
      return Verdict::ok();
    case 1:  // h(x<|y) f2(x,y) = g2(x,y) h(y)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y)
          if (R.mul(w.h[X.tri(x, y)], t1.f2[x][y]) !=
              R.mul(t2.f2[x][y], w.h[y]))
            return Verdict::fail("(e-f2)", {x, y},
                                 "h(x<|y)f2(x,y) != g2(x,y)h(y)");
      return Verdict::ok();
    case 2:  // h(x<|y) phi1(x,y) + eta(x<|y)
             //   = g1(x,y) eta(x) + g2(x,y) eta(y) + psi1(x,y)
      for (Index x = 0; x < X.order; ++x)
        for (Index y = 0; y < X.order; ++y) {
          const Index xy = X.tri(x, y);
          if (M.add(M.act(w.h[xy], t1.phi1[x][y]), w.eta[xy]) !=
              M.add(M.add(M.act(t2.f1[x][y], w.eta[x]),
                          M.act(t2.f2[x][y], w.eta[y])),
                    t2.phi1[x][y]))
            return Verdict::fail(
                "(e-phi1)", {x, y},
                "h(x<|y)phi1(x,y)+eta(x<|y) != g1 eta(x)+g2 eta(y)+psi1(x,y)");
        }
      return Verdict::ok();
    case 3:  // h(ab) f3(a,b) = g3(a,b) h(a)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            if (R.mul(w.h[X.mul(a, b)], f.F3(a, b)) !=
                R.mul(g.F3(a, b), w.h[a]))
              return Verdict::fail("(e-f3)", {a, b},
                                   "h(ab)f3(a,b) != g3(a,b)h(a)");
      return Verdict::ok();
    case 4:  // h(ab) f4(a,b) = g4(a,b) h(b)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b)
            if (R.mul(w.h[X.mul(a, b)], f.F4(a, b)) !=
                R.mul(g.F4(a, b), w.h[b]))
              return Verdict::fail("(e-f4)", {a, b},
                                   "h(ab)f4(a,b) != g4(a,b)h(b)");
      return Verdict::ok();
    case 5:  // h(ab) phi2(a,b) + eta(ab)
             //   = g3(a,b) eta(a) + g4(a,b) eta(b) + psi2(a,b)
      for (int c = 0; c < nc; ++c)
        for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
          for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
            const Index ab = X.mul(a, b);
            if (M.add(M.act(w.h[ab], f.P2(a, b)), w.eta[ab]) !=
                M.add(M.add(M.act(g.F3(a, b), w.eta[a]),
                            M.act(g.F4(a, b), w.eta[b])),
                      g.P2(a, b)))
              return Verdict::fail(
                  "(e-phi2)", {a, b},
                  "h(ab)phi2(a,b)+eta(ab) != g3 eta(a)+g4 eta(b)+psi2(a,b)");
          }
      return Verdict::ok();
    default:
      throw InternalInconsistency("equivalence relation index out of range");
  }
}

}  // namespace

Verdict check_equivalence(const SixTuple& t1, const SixTuple& t2,
                          const EquivalenceWitness& w) {
  require_tuple_shape(t1);
  require_tuple_shape(t2);
  require_same_structures(t1, t2);
  require_witness(t1, w);
  for (int i = 0; i < 6; ++i)
    if (Verdict v = eval_equivalence_relation(t1, t2, w, i); !v) return v;
  return Verdict::ok();
}

CheckList equivalence_report(const SixTuple& t1, const SixTuple& t2,
                             const EquivalenceWitness& w) {
  require_tuple_shape(t1);
  require_tuple_shape(t2);
  require_same_structures(t1, t2);
  require_witness(t1, w);
  CheckList checks;
  for (int i = 0; i < 6; ++i)
    checks.emplace_back(std::string(kEquivalenceTags[i]),
                        eval_equivalence_relation(t1, t2, w, i).pass);
  return checks;
}

SixTuple transport_six_tuple(const SixTuple& t, const EquivalenceWitness& w) {
  if (Verdict v = verify_six_tuple(t); !v)
    throw InvalidArgument("transport_six_tuple: tuple fails verification: " +
                          to_string(v));
  require_witness(t, w);
  const FiniteMcq& X = t.mcq;
  const FiniteRing& R = t.ring;
  const LeftModule& M = t.module;
  Ctx f(t);

  SixTuple out = t;
  for (Index x = 0; x < X.order; ++x)
    for (Index y = 0; y < X.order; ++y) {
      const Index xy = X.tri(x, y);
      const Index g1 = R.mul(R.mul(w.h[xy], t.f1[x][y]), R.inv(w.h[x]));
      const Index g2 = R.mul(R.mul(w.h[xy], t.f2[x][y]), R.inv(w.h[y]));
      out.f1[x][y] = g1;
      out.f2[x][y] = g2;
      out.phi1[x][y] = M.sub(
          M.sub(M.add(M.act(w.h[xy], t.phi1[x][y]), w.eta[xy]),
                M.act(g1, w.eta[x])),
          M.act(g2, w.eta[y]));
    }
  for (int c = 0; c < X.num_components(); ++c)
    for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
      for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
        const Index ab = X.mul(a, b);
        const Index la = X.local(a), lb = X.local(b);
        const Index g3 = R.mul(R.mul(w.h[ab], f.F3(a, b)), R.inv(w.h[a]));
        const Index g4 = R.mul(R.mul(w.h[ab], f.F4(a, b)), R.inv(w.h[b]));
        out.f3[c][la][lb] = g3;
        out.f4[c][la][lb] = g4;
        out.phi2[c][la][lb] = M.sub(
            M.sub(M.add(M.act(w.h[ab], f.P2(a, b)), w.eta[ab]),
                  M.act(g3, w.eta[a])),
            M.act(g4, w.eta[b]));
      }

  if (Verdict v = verify_six_tuple(out); !v)
    throw InternalInconsistency(
        "transport_six_tuple: transported tuple fails verification: " +
        to_string(v));
  return out;
}

EquivalenceWitness identity_witness(const SixTuple& t) {
  EquivalenceWitness w;
  w.h.assign(t.mcq.order, t.ring.one);
  w.eta.assign(t.mcq.order, t.module.zero());
  return w;
}

EquivalenceWitness invert_witness(const SixTuple& t, const EquivalenceWitness& w) {
  require_witness(t, w);
  EquivalenceWitness out;
  out.h.resize(t.mcq.order);
  out.eta.resize(t.mcq.order);
  for (Index x = 0; x < t.mcq.order; ++x) {
    out.h[x] = t.ring.inv(w.h[x]);
    out.eta[x] = t.module.neg(t.module.act(out.h[x], w.eta[x]));
  }
  return out;
}

EquivalenceWitness compose_witnesses(const SixTuple& t,
                                     const EquivalenceWitness& first,
                                     const EquivalenceWitness& second) {
  require_witness(t, first);
  require_witness(t, second);
  EquivalenceWitness out;
  out.h.resize(t.mcq.order);
  out.eta.resize(t.mcq.order);
  for (Index x = 0; x < t.mcq.order; ++x) {
    out.h[x] = t.ring.mul(second.h[x], first.h[x]);
    out.eta[x] = t.module.add(t.module.act(second.h[x], first.eta[x]),
                              second.eta[x]);
  }
  return out;
}

EquivalenceWitness random_witness(const SixTuple& t, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  // Rejection sampling keeps the draw uniform and identical on every
  // platform (distribution classes are not portable).
  auto draw = [&eng](std::uint64_t n) -> Index {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v = eng();
    while (v >= limit) v = eng();
    return static_cast<Index>(v % n);
  };
  EquivalenceWitness w;
  w.h.resize(t.mcq.order);
  w.eta.resize(t.mcq.order);
  for (Index x = 0; x < t.mcq.order; ++x)
    w.h[x] = t.ring.units[draw(t.ring.units.size())];
  for (Index x = 0; x < t.mcq.order; ++x)
    w.eta[x] = draw(static_cast<std::uint64_t>(t.module.size()));
  return w;
}

MapVec induced_isomorphism(const SixTuple& t1, const SixTuple& t2,
                           const EquivalenceWitness& w, const Extension& e1,
                           const Extension& e2) {
  if (Verdict v = check_equivalence(t1, t2, w); !v)
    throw InvalidArgument("induced_isomorphism: tuples are not equivalent: " +
                          to_string(v));
  const Index mn = t1.module.size();
  if (e1.mcq.order != t1.mcq.order * mn || e2.mcq.order != t1.mcq.order * mn)
    throw InvalidArgument("induced_isomorphism: extension size mismatch");
  MapVec map(e1.mcq.order);
  for (Index z = 0; z < t1.mcq.order; ++z)
    for (Index u = 0; u < mn; ++u)
      map[z * mn + u] =
          z * mn + t1.module.add(t1.module.act(w.h[z], u), w.eta[z]);
  return map;
}

MapVec induced_isomorphism(const SixTuple& t1, const SixTuple& t2,
                           const EquivalenceWitness& w) {
  const Extension e1 = build_affine_extension(t1);
  const Extension e2 = build_affine_extension(t2);
  return induced_isomorphism(t1, t2, w, e1, e2);
}

// ---------------------------------------------------------------------------
// Reduction.

Reduction reduce_six_tuple(const SixTuple& t) {
  if (Verdict v = verify_six_tuple(t); !v)
    throw InvalidArgument("reduce_six_tuple: tuple fails verification: " +
                          to_string(v));
  const FiniteMcq& X = t.mcq;
  const FiniteRing& R = t.ring;
  const LeftModule& M = t.module;
  Ctx f(t);

  Reduction red;
  red.reduced = t;

  for (Index x = 0; x < X.order; ++x)
    for (Index y = 0; y < X.order; ++y) {
      const Index xy = X.tri(x, y);
      const Index xinv_y = X.tri(X.inv(x), y);
      if (X.comp(xy) != X.comp(xinv_y))
        throw InternalInconsistency(
            "reduce_six_tuple: x<|y and x^-1<|y in different components");
      // g1(x,y) = f1(e_x, y)
      red.reduced.f1[x][y] = t.f1[X.identity_of(x)][y];
      // g2(x,y) = f3(x<|y, x^-1<|y) f2(x,y) f3(e_y, y)
      red.reduced.f2[x][y] = R.mul(
          R.mul(f.F3(xy, xinv_y), t.f2[x][y]), f.F3(X.identity_of(y), y));
      // psi1(x,y) = f3(x<|y, x^-1<|y) phi1(x,y)
      red.reduced.phi1[x][y] = M.act(f.F3(xy, xinv_y), t.phi1[x][y]);
    }
  for (int c = 0; c < X.num_components(); ++c) {
    const Index e = X.identity(c);
    for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
      for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
        const Index la = X.local(a), lb = X.local(b);
        const Index ab = X.mul(a, b);
        // g3 = 1, g4(a,b) = f1(e_a, a^-1)
        red.reduced.f3[c][la][lb] = R.one;
        red.reduced.f4[c][la][lb] = t.f1[e][X.inv(a)];
        // psi2(a,b) = f3(ab, b^-1 a^-1) phi2(a,b)
        red.reduced.phi2[c][la][lb] =
            M.act(f.F3(ab, X.inv(ab)), f.P2(a, b));
      }
  }

  red.witness.h.resize(X.order);
  red.witness.eta.assign(X.order, M.zero());
  for (Index x = 0; x < X.order; ++x) red.witness.h[x] = f.F3(x, X.inv(x));

  red.pair.mcq = t.mcq;
  red.pair.ring = t.ring;
  red.pair.module = t.module;
  red.pair.f1 = red.reduced.f1;
  red.pair.f2 = red.reduced.f2;
  red.pair.phi1 = red.reduced.phi1;
  red.pair.phi2 = red.reduced.phi2;
  return red;
}

Certificate certify_reduction(const SixTuple& t) {
  if (Verdict v = verify_six_tuple(t); !v)
    throw InvalidArgument("certify_reduction: tuple fails verification: " +
                          to_string(v));

  Certificate cert;
  cert.tuple = t;
  cert.reduction = reduce_six_tuple(t);
  const SixTuple& red = cert.reduction.reduced;
  const FiniteMcq& X = t.mcq;
  const Index mn = t.module.size();

  for (const auto& [tag, pass] : tuple_condition_report(t))
    cert.checks.emplace_back("source:" + tag, pass);
  for (const auto& [tag, pass] : tuple_condition_report(red))
    cert.checks.emplace_back("reduced:" + tag, pass);
  for (const auto& [tag, pass] : pair_condition_report(pair_of(cert.reduction.pair)))
    cert.checks.emplace_back("pair:" + tag, pass);
  for (const auto& [tag, pass] : cocycle_condition_report(cert.reduction.pair))
    cert.checks.emplace_back("cocycle:" + tag, pass);

  bool g3_trivial = true;
  bool g4_matches = true;
  for (int c = 0; c < X.num_components(); ++c)
    for (Index a = X.offsets[c]; a < X.offsets[c + 1]; ++a)
      for (Index b = X.offsets[c]; b < X.offsets[c + 1]; ++b) {
        if (red.f3[c][X.local(a)][X.local(b)] != t.ring.one) g3_trivial = false;
        if (red.f4[c][X.local(a)][X.local(b)] != red.f1[a][X.inv(a)])
          g4_matches = false;
      }
  cert.checks.emplace_back("reduced-g3-trivial", g3_trivial);
  cert.checks.emplace_back("reduced-g4-equals-g1(a,a^-1)", g4_matches);

  for (const auto& [tag, pass] :
       equivalence_report(t, red, cert.reduction.witness))
    cert.checks.emplace_back("equivalence:" + tag, pass);

  McqCheck source_check = check_mcq(extension_candidate_affine(t));
  cert.checks.emplace_back("source-extension-mcq", source_check.verdict.pass);
  McqCheck reduced_check = check_mcq(extension_candidate_affine(red));
  cert.checks.emplace_back("reduced-extension-mcq", reduced_check.verdict.pass);

  // The reduced extension must coincide with the extension of the reduced
  // quadruple built by the augmented formulas.
  {
    McqCandidate via_pair = extension_candidate_augmented(cert.reduction.pair);
    McqCandidate via_tuple = extension_candidate_affine(red);
    bool same = via_pair.triangle == via_tuple.triangle &&
                via_pair.components.size() == via_tuple.components.size();
    if (same)
      for (size_t c = 0; c < via_pair.components.size(); ++c)
        if (via_pair.components[c].cayley != via_tuple.components[c].cayley)
          same = false;
    cert.checks.emplace_back("extensions-agree", same);
  }

  if (!source_check.verdict.pass || !reduced_check.verdict.pass) {
    cert.ok = false;
    return cert;
  }
  cert.source =
      Extension{*std::move(source_check.mcq), extension_projection(X, mn)};
  cert.reduced =
      Extension{*std::move(reduced_check.mcq), extension_projection(X, mn)};

  cert.isomorphism = induced_isomorphism(t, red, cert.reduction.witness,
                                         cert.source, cert.reduced);
  HomReport iso = check_mcq_hom(cert.isomorphism, cert.source.mcq, cert.reduced.mcq);
  cert.checks.emplace_back("iso-hom", iso.verdict.pass);
  cert.checks.emplace_back("iso-bijective", iso.bijective);
  bool projections_commute = true;
  for (Index i = 0; i < cert.source.mcq.order; ++i)
    if (cert.reduced.projection[cert.isomorphism[i]] != cert.source.projection[i])
      projections_commute = false;
  cert.checks.emplace_back("iso-commutes-with-projection", projections_commute);

  const FiniteMcq base = t.mcq;
  HomReport src_proj = check_mcq_hom(cert.source.projection, cert.source.mcq, base);
  cert.checks.emplace_back("source-projection-extension",
                           src_proj.verdict.pass && src_proj.surjective &&
                               src_proj.constant_fibers &&
                               src_proj.fiber_size == mn);
  HomReport red_proj = check_mcq_hom(cert.reduced.projection, cert.reduced.mcq, base);
  cert.checks.emplace_back("reduced-projection-extension",
                           red_proj.verdict.pass && red_proj.surjective &&
                               red_proj.constant_fibers &&
                               red_proj.fiber_size == mn);

  cert.ok = true;
  for (const auto& [name, pass] : cert.checks)
    if (!pass) cert.ok = false;
  return cert;
}

Verdict verify_certificate(const Certificate& cert) {
  if (Verdict v = verify_six_tuple(cert.tuple); !v) {
    Verdict out = v;
    out.condition = "certificate-tuple:" + out.condition;
    return out;
  }
  Certificate fresh = certify_reduction(cert.tuple);
  auto mismatch = [](const std::string& what) {
    return Verdict::fail("certificate-mismatch", {}, what);
  };
  if (!fresh.ok) return mismatch("recomputed certificate fails its checks");
  const SixTuple& a = cert.reduction.reduced;
  const SixTuple& b = fresh.reduction.reduced;
  if (a.f1 != b.f1 || a.f2 != b.f2 || a.f3 != b.f3 || a.f4 != b.f4 ||
      a.phi1 != b.phi1 || a.phi2 != b.phi2)
    return mismatch("stored reduced tuple differs from recomputation");
  if (cert.reduction.witness.h != fresh.reduction.witness.h ||
      cert.reduction.witness.eta != fresh.reduction.witness.eta)
    return mismatch("stored witness differs from recomputation");
  if (cert.isomorphism != fresh.isomorphism)
    return mismatch("stored isomorphism differs from recomputation");
  if (!mcqs_equal(cert.source.mcq, fresh.source.mcq) ||
      !mcqs_equal(cert.reduced.mcq, fresh.reduced.mcq))
    return mismatch("stored extension differs from recomputation");
  if (cert.source.projection != fresh.source.projection ||
      cert.reduced.projection != fresh.reduced.projection)
    return mismatch("stored projection differs from recomputation");
  return Verdict::ok();
}

}  // namespace mcq
