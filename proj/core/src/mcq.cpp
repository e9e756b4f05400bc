#include <mcq/mcq.hpp>

#include <algorithm>
#include <future>
#include <numeric>

namespace mcq {

namespace {

FiniteMcq assemble_mcq(std::vector<FiniteGroup> components, Table triangle) {
  FiniteMcq m;
  m.components = std::move(components);
  m.offsets.assign(m.components.size() + 1, 0);
  for (size_t c = 0; c < m.components.size(); ++c)
    m.offsets[c + 1] = m.offsets[c] + m.components[c].order;
  m.order = m.offsets.back();
  m.triangle = std::move(triangle);
  m.component_of.assign(m.order, 0);
  for (size_t c = 0; c < m.components.size(); ++c)
    for (Index x = m.offsets[c]; x < m.offsets[c + 1]; ++x)
      m.component_of[x] = static_cast<int>(c);
  return m;
}

}  // namespace

McqCheck check_mcq(const McqCandidate& candidate) {
  if (candidate.components.empty())
    throw MalformedInput("mcq: at least one component required");

  std::vector<FiniteGroup> groups;
  groups.reserve(candidate.components.size());
  for (size_t c = 0; c < candidate.components.size(); ++c) {
    GroupCheck check = check_group(candidate.components[c]);
    if (!check.verdict) {
      Verdict v = check.verdict;
      v.condition = "component[" + std::to_string(c) + "]." + v.condition;
      return {std::move(v), std::nullopt};
    }
    groups.push_back(*std::move(check.group));
  }

  Index order = 0;
  for (const FiniteGroup& g : groups) order += g.order;
  if (static_cast<Index>(candidate.triangle.size()) != order)
    throw MalformedInput("mcq: triangle has wrong number of rows");
  for (Index x = 0; x < order; ++x) {
    if (static_cast<Index>(candidate.triangle[x].size()) != order)
      throw MalformedInput("mcq: triangle row " + std::to_string(x) + " is ragged");
    for (Index y = 0; y < order; ++y)
      if (candidate.triangle[x][y] < 0 || candidate.triangle[x][y] >= order)
        throw MalformedInput("mcq: triangle entry out of range");
  }

  FiniteMcq m = assemble_mcq(std::move(groups), candidate.triangle);
  const int k = m.num_components();

  // M1: a <| b = b^-1 a b inside each component.
  for (int c = 0; c < k; ++c)
    for (Index a = m.offsets[c]; a < m.offsets[c + 1]; ++a)
      for (Index b = m.offsets[c]; b < m.offsets[c + 1]; ++b)
        if (m.tri(a, b) != m.mul(m.mul(m.inv(b), a), b))
          return {Verdict::fail("M1", {a, b}, "a <| b != b^-1 a b"), std::nullopt};

  // M2: x <| e = x and x <| (ab) = (x <| a) <| b.
  for (Index x = 0; x < m.order; ++x)
    for (int c = 0; c < k; ++c)
      if (m.tri(x, m.identity(c)) != x)
        return {Verdict::fail("M2-identity", {x, m.identity(c)}, "x <| e != x"),
                std::nullopt};
  for (Index x = 0; x < m.order; ++x)
    for (int c = 0; c < k; ++c)
      for (Index a = m.offsets[c]; a < m.offsets[c + 1]; ++a)
        for (Index b = m.offsets[c]; b < m.offsets[c + 1]; ++b)
          if (m.tri(x, m.mul(a, b)) != m.tri(m.tri(x, a), b))
            return {Verdict::fail("M2-product", {x, a, b},
                                  "x <| (ab) != (x <| a) <| b"),
                    std::nullopt};

  // M3: self-distributivity on the whole carrier.
  for (Index x = 0; x < m.order; ++x)
    for (Index y = 0; y < m.order; ++y)
      for (Index z = 0; z < m.order; ++z)
        if (m.tri(m.tri(x, y), z) != m.tri(m.tri(x, z), m.tri(y, z)))
          return {Verdict::fail("M3", {x, y, z},
                                "(x<|y)<|z != (x<|z)<|(y<|z)"),
                  std::nullopt};

  // M4: (ab) <| x = (a <| x)(b <| x), with both images in one component.
  for (int c = 0; c < k; ++c)
    for (Index a = m.offsets[c]; a < m.offsets[c + 1]; ++a)
      for (Index b = m.offsets[c]; b < m.offsets[c + 1]; ++b)
        for (Index x = 0; x < m.order; ++x) {
          const Index ax = m.tri(a, x);
          const Index bx = m.tri(b, x);
          if (m.comp(ax) != m.comp(bx))
            return {Verdict::fail("M4-coherence", {a, b, x},
                                  "a <| x and b <| x in different components"),
                    std::nullopt};
          if (m.tri(m.mul(a, b), x) != m.mul(ax, bx))
            return {Verdict::fail("M4", {a, b, x},
                                  "(ab) <| x != (a <| x)(b <| x)"),
                    std::nullopt};
        }

  return {Verdict::ok(), std::move(m)};
}

Verdict verify_mcq(const McqCandidate& candidate) {
  return check_mcq(candidate).verdict;
}

McqCandidate as_candidate(const FiniteMcq& mcq) {
  McqCandidate c;
  for (const FiniteGroup& g : mcq.components)
    c.components.push_back(GroupCandidate{g.order, g.cayley, g.identity, g.inverse});
  c.triangle = mcq.triangle;
  return c;
}

FiniteMcq mcq_from_group(const FiniteGroup& group) {
  const Index n = group.order;
  Table triangle(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      triangle[a][b] = group.mul(group.mul(group.inv(b), a), b);
  return assemble_mcq({group}, std::move(triangle));
}

bool mcqs_equal(const FiniteMcq& a, const FiniteMcq& b) {
  if (a.order != b.order || a.num_components() != b.num_components()) return false;
  for (int c = 0; c < a.num_components(); ++c)
    if (!groups_equal(a.components[c], b.components[c])) return false;
  return a.triangle == b.triangle;
}

// ---------------------------------------------------------------------------
// G-families.

Verdict verify_g_family(const GFamily& family) {
  const Index n = family.carrier_size;
  const FiniteGroup& g = family.group;
  if (n <= 0) throw MalformedInput("gfamily: carrier must be nonempty");
  if (static_cast<Index>(family.ops.size()) != g.order)
    throw MalformedInput("gfamily: need one op table per group element");
  for (Index i = 0; i < g.order; ++i) {
    if (static_cast<Index>(family.ops[i].size()) != n)
      throw MalformedInput("gfamily: op table has wrong size");
    for (Index x = 0; x < n; ++x) {
      if (static_cast<Index>(family.ops[i][x].size()) != n)
        throw MalformedInput("gfamily: ragged op table");
      for (Index y = 0; y < n; ++y)
        if (family.ops[i][x][y] < 0 || family.ops[i][x][y] >= n)
          throw MalformedInput("gfamily: op entry out of range");
    }
  }

  // x <|^g x = x
  for (Index i = 0; i < g.order; ++i)
    for (Index x = 0; x < n; ++x)
      if (family.ops[i][x][x] != x)
        return Verdict::fail("GF1", {x, i}, "x <|^g x != x");

  // x <|^e y = x and x <|^{gh} y = (x <|^g y) <|^h y
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (family.ops[g.identity][x][y] != x)
        return Verdict::fail("GF2-identity", {x, y}, "x <|^e y != x");
  for (Index i = 0; i < g.order; ++i)
    for (Index j = 0; j < g.order; ++j)
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          if (family.ops[g.mul(i, j)][x][y] !=
              family.ops[j][family.ops[i][x][y]][y])
            return Verdict::fail("GF2-product", {x, y, i, j},
                                 "x <|^{gh} y != (x <|^g y) <|^h y");

  // (x <|^g y) <|^h z = (x <|^h z) <|^{h^-1gh} (y <|^h z)
  for (Index i = 0; i < g.order; ++i)
    for (Index j = 0; j < g.order; ++j) {
      const Index conj = g.mul(g.mul(g.inv(j), i), j);
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          for (Index z = 0; z < n; ++z)
            if (family.ops[j][family.ops[i][x][y]][z] !=
                family.ops[conj][family.ops[j][x][z]][family.ops[j][y][z]])
              return Verdict::fail("GF3", {x, y, z, i, j},
                                   "distributivity over <|^h z fails");
    }
  return Verdict::ok();
}

GFamily g_family_alexander(const FiniteRing& ring, const FiniteGroup& group,
                           Index carrier_budget) {
  long long size = 1;
  for (Index i = 0; i < group.order; ++i) {
    size *= ring.order;
    if (size > carrier_budget)
      throw ResourceLimit("g_family_alexander: carrier |R|^|G| exceeds budget " +
                          std::to_string(carrier_budget));
  }
  const Index n = static_cast<Index>(size);
  const Index k = group.order;

  std::vector<std::vector<Index>> digits(n, std::vector<Index>(k));
  for (Index u = 0; u < n; ++u) {
    Index rest = u;
    for (Index j = 0; j < k; ++j) {
      digits[u][j] = rest % ring.order;
      rest /= ring.order;
    }
  }
  auto encode = [&](const std::vector<Index>& d) {
    Index u = 0;
    for (Index j = k - 1; j >= 0; --j) u = u * ring.order + d[j];
    return u;
  };

  GFamily family;
  family.group = group;
  family.carrier_size = n;
  family.ops.assign(k, Table(n, std::vector<Index>(n)));
  std::vector<Index> coeff(k);
  for (Index gidx = 0; gidx < k; ++gidx) {
    const Index ginv = group.inv(gidx);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        // (x*g + y*(e-g)) coefficient at j is x_{j g^-1} + y_j - y_{j g^-1}
        for (Index j = 0; j < k; ++j) {
          const Index shifted = group.mul(j, ginv);
          coeff[j] = ring.add(digits[x][shifted],
                              ring.sub(digits[y][j], digits[y][shifted]));
        }
        family.ops[gidx][x][y] = encode(coeff);
      }
  }
  return family;
}

GFamily z_family_from_quandle(const FiniteQuandle& q) {
  const long long type = quandle_type(q);
  if (type > 4096)
    throw ResourceLimit("z_family_from_quandle: quandle type exceeds 4096");
  const Index t = static_cast<Index>(type);

  GFamily family;
  family.group = cyclic_group(t);
  family.carrier_size = q.order;
  family.ops.assign(t, Table(q.order, std::vector<Index>(q.order)));
  for (Index x = 0; x < q.order; ++x)
    for (Index y = 0; y < q.order; ++y) {
      Index r = x;
      for (Index i = 0; i < t; ++i) {
        family.ops[i][x][y] = r;
        r = q.op[r][y];
      }
    }
  return family;
}

FiniteMcq associated_mcq(const GFamily& family) {
  if (Verdict v = verify_g_family(family); !v)
    throw InvalidArgument("associated_mcq: family fails verification: " +
                          to_string(v));
  const Index gn = family.group.order;
  const Index xn = family.carrier_size;
  const Index n = gn * xn;

  std::vector<FiniteGroup> components(xn, family.group);
  Table triangle(n, std::vector<Index>(n));
  for (Index x = 0; x < xn; ++x)
    for (Index g = 0; g < gn; ++g)
      for (Index y = 0; y < xn; ++y)
        for (Index h = 0; h < gn; ++h) {
          const Index conj =
              family.group.mul(family.group.mul(family.group.inv(h), g), h);
          triangle[x * gn + g][y * gn + h] = family.ops[h][x][y] * gn + conj;
        }

  FiniteMcq m = assemble_mcq(std::move(components), std::move(triangle));
  if (Verdict v = verify_mcq(as_candidate(m)); !v)
    throw InternalInconsistency("associated_mcq: built structure fails " +
                                to_string(v));
  return m;
}

MapVec associated_mcq_projection(const GFamily& family) {
  const Index gn = family.group.order;
  MapVec proj(static_cast<size_t>(gn) * family.carrier_size);
  for (Index x = 0; x < family.carrier_size; ++x)
    for (Index g = 0; g < gn; ++g) proj[x * gn + g] = g;
  return proj;
}

// ---------------------------------------------------------------------------
// Homomorphisms.

HomReport check_mcq_hom(const MapVec& f, const FiniteMcq& src, const FiniteMcq& dst) {
  if (static_cast<Index>(f.size()) != src.order)
    throw MalformedInput("mcq hom: map size mismatch");
  for (Index x = 0; x < src.order; ++x)
    if (f[x] < 0 || f[x] >= dst.order)
      throw MalformedInput("mcq hom: image out of range");

  HomReport report;
  std::vector<Index> fiber(dst.order, 0);
  for (Index x = 0; x < src.order; ++x) ++fiber[f[x]];
  Index hit = 0;
  for (Index y = 0; y < dst.order; ++y)
    if (fiber[y] > 0) ++hit;
  report.surjective = hit == dst.order;
  report.bijective = report.surjective && src.order == dst.order;
  if (report.surjective) {
    report.constant_fibers = true;
    report.fiber_size = fiber[0];
    for (Index y = 0; y < dst.order; ++y)
      if (fiber[y] != report.fiber_size) report.constant_fibers = false;
  }

  for (Index x = 0; x < src.order; ++x)
    for (Index y = 0; y < src.order; ++y)
      if (f[src.tri(x, y)] != dst.tri(f[x], f[y])) {
        report.verdict =
            Verdict::fail("hom-triangle", {x, y}, "f(x<|y) != f(x)<|f(y)");
        return report;
      }

  for (int c = 0; c < src.num_components(); ++c) {
    const Index lo = src.offsets[c], hi = src.offsets[c + 1];
    for (Index a = lo; a < hi; ++a)
      if (dst.comp(f[a]) != dst.comp(f[lo])) {
        report.verdict = Verdict::fail(
            "hom-component", {lo, a},
            "component is not mapped into a single component");
        return report;
      }
    for (Index a = lo; a < hi; ++a)
      for (Index b = lo; b < hi; ++b)
        if (f[src.mul(a, b)] != dst.mul(f[a], f[b])) {
          report.verdict =
              Verdict::fail("hom-group", {a, b}, "f(ab) != f(a)f(b)");
          return report;
        }
  }
  report.verdict = Verdict::ok();
  return report;
}

// ---------------------------------------------------------------------------
// Isomorphism search.

namespace {

struct IsoSearcher {
  const FiniteMcq& a;
  const FiniteMcq& b;
  unsigned long long budget;
  unsigned long long nodes = 0;

  MapVec f;
  std::vector<char> used;
  std::vector<int> comp_target;
  std::vector<char> comp_taken;
  // Pairs whose triangle value / group product equals a given element, so
  // each equation is checked exactly when its last operand gets assigned.
  std::vector<std::vector<std::pair<Index, Index>>> tri_bucket;
  std::vector<std::vector<std::pair<Index, Index>>> mul_bucket;

  IsoSearcher(const FiniteMcq& a_, const FiniteMcq& b_, unsigned long long budget_)
      : a(a_), b(b_), budget(budget_) {
    f.assign(a.order, -1);
    used.assign(b.order, 0);
    comp_target.assign(a.num_components(), -1);
    comp_taken.assign(b.num_components(), 0);
    tri_bucket.assign(a.order, {});
    mul_bucket.assign(a.order, {});
    for (Index x = 0; x < a.order; ++x)
      for (Index y = 0; y < a.order; ++y) tri_bucket[a.tri(x, y)].push_back({x, y});
    for (int c = 0; c < a.num_components(); ++c)
      for (Index p = a.offsets[c]; p < a.offsets[c + 1]; ++p)
        for (Index q = a.offsets[c]; q < a.offsets[c + 1]; ++q)
          mul_bucket[a.mul(p, q)].push_back({p, q});
  }

  bool consistent_at(Index k) {
    for (Index y = 0; y <= k; ++y) {
      if (const Index z = a.tri(k, y); z <= k && f[z] != b.tri(f[k], f[y]))
        return false;
      if (const Index z = a.tri(y, k); z <= k && f[z] != b.tri(f[y], f[k]))
        return false;
    }
    for (const auto& [x, y] : tri_bucket[k])
      if (x < k && y < k && f[k] != b.tri(f[x], f[y])) return false;

    const int c = a.comp(k);
    for (Index q = a.offsets[c]; q <= k; ++q) {
      if (const Index m = a.mul(k, q); m <= k && f[m] != b.mul(f[k], f[q]))
        return false;
      if (const Index m = a.mul(q, k); m <= k && f[m] != b.mul(f[q], f[k]))
        return false;
    }
    for (const auto& [p, q] : mul_bucket[k])
      if (p < k && q < k && f[k] != b.mul(f[p], f[q])) return false;
    return true;
  }

  bool assign_and_descend(Index k, Index y, std::optional<MapVec>& out) {
    if (++nodes > budget)
      throw ResourceLimit("mcq_iso_search: node budget exhausted after " +
                          std::to_string(nodes - 1) + " nodes");
    const int c = a.comp(k);
    const bool pins = a.offsets[c] == k;
    const int d = b.comp(y);
    if (pins) {
      if (comp_taken[d] || b.components[d].order != a.components[c].order)
        return false;
      comp_target[c] = d;
      comp_taken[d] = 1;
    } else if (d != comp_target[c]) {
      return false;
    }
    f[k] = y;
    used[y] = 1;
    bool found = false;
    if (consistent_at(k)) found = search(k + 1, out);
    if (!found) {
      f[k] = -1;
      used[y] = 0;
      if (pins) {
        comp_target[c] = -1;
        comp_taken[d] = 0;
      }
    }
    return found;
  }

  bool search(Index k, std::optional<MapVec>& out) {
    if (k == a.order) {
      out = f;
      return true;
    }
    for (Index y = 0; y < b.order; ++y) {
      if (used[y]) continue;
      if (assign_and_descend(k, y, out)) return true;
    }
    return false;
  }

  // Root-partitioned variant: element 0 only tries images congruent to
  // `slot` mod `stride`, so tasks cover disjoint subtrees.
  bool search_partitioned(int slot, int stride, std::optional<MapVec>& out) {
    for (Index y = slot; y < b.order; y += stride) {
      if (assign_and_descend(0, y, out)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<MapVec> mcq_iso_search(const FiniteMcq& a, const FiniteMcq& b,
                                     const IsoOptions& options) {
  if (a.order != b.order) return std::nullopt;
  std::vector<Index> sizes_a, sizes_b;
  for (const FiniteGroup& g : a.components) sizes_a.push_back(g.order);
  for (const FiniteGroup& g : b.components) sizes_b.push_back(g.order);
  std::sort(sizes_a.begin(), sizes_a.end());
  std::sort(sizes_b.begin(), sizes_b.end());
  if (sizes_a != sizes_b) return std::nullopt;
  if (quandle_type(a.as_quandle()) != quandle_type(b.as_quandle()))
    return std::nullopt;

  const int tasks = std::max(1, options.tasks);
  if (tasks == 1) {
    IsoSearcher searcher(a, b, options.node_budget);
    std::optional<MapVec> out;
    searcher.search(0, out);
    return out;
  }

  std::vector<std::future<std::optional<MapVec>>> futures;
  futures.reserve(tasks);
  for (int slot = 0; slot < tasks; ++slot)
    futures.push_back(std::async(std::launch::async, [&, slot] {
      IsoSearcher searcher(a, b, options.node_budget);
      std::optional<MapVec> out;
      searcher.search_partitioned(slot, tasks, out);
      return out;
    }));

  std::optional<MapVec> best;
  std::exception_ptr error;
  for (auto& fut : futures) {
    try {
      std::optional<MapVec> got = fut.get();
      if (got && (!best || *got < *best)) best = std::move(got);
    } catch (...) {
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return best;
}

}  // namespace mcq
