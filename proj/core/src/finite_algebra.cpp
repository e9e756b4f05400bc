#include <mcq/finite_algebra.hpp>

#include <sstream>

namespace mcq {

std::string to_string(const Verdict& v) {
  if (v.pass) return "PASS";
  std::ostringstream out;
  out << "FAIL condition=" << v.condition << " witness=(";
  for (size_t i = 0; i < v.witness.size(); ++i) {
    if (i) out << ",";
    out << v.witness[i];
  }
  out << ")";
  if (!v.detail.empty()) out << " " << v.detail;
  return out.str();
}

namespace {

void require_table(const Table& t, Index rows, Index cols, Index range,
                   const char* name) {
  if (static_cast<Index>(t.size()) != rows)
    throw MalformedInput(std::string(name) + ": expected " + std::to_string(rows) +
                         " rows, got " + std::to_string(t.size()));
  for (Index r = 0; r < rows; ++r) {
    if (static_cast<Index>(t[r].size()) != cols)
      throw MalformedInput(std::string(name) + ": ragged row " + std::to_string(r));
    for (Index c = 0; c < cols; ++c)
      if (t[r][c] < 0 || t[r][c] >= range)
        throw MalformedInput(std::string(name) + ": entry (" + std::to_string(r) +
                             "," + std::to_string(c) + ") out of range");
  }
}

Verdict check_associativity(const Table& t, Index n, const char* tag) {
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          return Verdict::fail(tag, {a, b, c}, "(ab)c != a(bc)");
  return Verdict::ok();
}

}  // namespace

GroupCheck check_group(const GroupCandidate& candidate) {
  const Index n = candidate.order;
  if (n <= 0) throw MalformedInput("group: order must be positive");
  require_table(candidate.cayley, n, n, n, "group cayley");
  if (candidate.identity && (*candidate.identity < 0 || *candidate.identity >= n))
    throw MalformedInput("group: identity index out of range");
  if (candidate.inverse) {
    if (static_cast<Index>(candidate.inverse->size()) != n)
      throw MalformedInput("group: inverse table has wrong size");
    for (Index a = 0; a < n; ++a)
      if ((*candidate.inverse)[a] < 0 || (*candidate.inverse)[a] >= n)
        throw MalformedInput("group: inverse entry out of range");
  }

  const Table& t = candidate.cayley;
  if (Verdict v = check_associativity(t, n, "associativity"); !v)
    return {std::move(v), std::nullopt};

  Index e = -1;
  if (candidate.identity) {
    e = *candidate.identity;
    for (Index a = 0; a < n; ++a)
      if (t[e][a] != a || t[a][e] != a)
        return {Verdict::fail("identity", {a}, "given identity is not two-sided"),
                std::nullopt};
  } else {
    for (Index cand = 0; cand < n && e < 0; ++cand) {
      bool ok = true;
      for (Index a = 0; a < n && ok; ++a) ok = t[cand][a] == a && t[a][cand] == a;
      if (ok) e = cand;
    }
    if (e < 0)
      return {Verdict::fail("identity", {}, "no two-sided identity"), std::nullopt};
  }

  MapVec inverse(n, -1);
  if (candidate.inverse) {
    for (Index a = 0; a < n; ++a) {
      const Index b = (*candidate.inverse)[a];
      if (t[a][b] != e || t[b][a] != e)
        return {Verdict::fail("inverse", {a}, "given inverse is not two-sided"),
                std::nullopt};
      inverse[a] = b;
    }
  } else {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b)
        if (t[a][b] == e && t[b][a] == e) {
          inverse[a] = b;
          break;
        }
      if (inverse[a] < 0)
        return {Verdict::fail("inverse", {a}, "element has no two-sided inverse"),
                std::nullopt};
    }
  }

  FiniteGroup g;
  g.order = n;
  g.cayley = candidate.cayley;
  g.identity = e;
  g.inverse = std::move(inverse);
  return {Verdict::ok(), std::move(g)};
}

Verdict verify_group(const GroupCandidate& candidate) {
  return check_group(candidate).verdict;
}

FiniteGroup cyclic_group(Index n) {
  if (n <= 0) throw InvalidArgument("cyclic_group: order must be positive");
  FiniteGroup g;
  g.order = n;
  g.cayley.assign(n, std::vector<Index>(n));
  g.inverse.assign(n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) g.cayley[a][b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
  }
  g.identity = 0;
  return g;
}

bool groups_equal(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order == b.order && a.identity == b.identity && a.cayley == b.cayley;
}

GroupCheck check_abelian_group(const GroupCandidate& candidate) {
  GroupCheck check = check_group(candidate);
  if (!check.verdict) return check;
  const FiniteGroup& g = *check.group;
  for (Index a = 0; a < g.order; ++a)
    for (Index b = 0; b < g.order; ++b)
      if (g.cayley[a][b] != g.cayley[b][a])
        return {Verdict::fail("commutativity", {a, b}, "ab != ba"), std::nullopt};
  return check;
}

RingCheck check_ring(const RingCandidate& candidate) {
  const Index n = candidate.order;
  if (n <= 0) throw MalformedInput("ring: order must be positive");
  require_table(candidate.add, n, n, n, "ring add");
  require_table(candidate.mul, n, n, n, "ring mul");
  if (candidate.zero < 0 || candidate.zero >= n || candidate.one < 0 ||
      candidate.one >= n)
    throw MalformedInput("ring: zero/one index out of range");

  if (candidate.zero == candidate.one)
    return {Verdict::fail("one-ne-zero", {candidate.zero}, "requires 1 != 0"),
            std::nullopt};

  const Table& add = candidate.add;
  const Table& mul = candidate.mul;
  const Index zero = candidate.zero;
  const Index one = candidate.one;

  GroupCandidate additive{n, add, zero, std::nullopt};
  GroupCheck add_check = check_group(additive);
  if (!add_check.verdict) {
    Verdict v = add_check.verdict;
    v.condition = "add-" + v.condition;
    return {std::move(v), std::nullopt};
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (add[a][b] != add[b][a])
        return {Verdict::fail("add-commutativity", {a, b}, "a+b != b+a"),
                std::nullopt};

  if (Verdict v = check_associativity(mul, n, "mul-associativity"); !v)
    return {std::move(v), std::nullopt};
  for (Index a = 0; a < n; ++a)
    if (mul[one][a] != a || mul[a][one] != a)
      return {Verdict::fail("mul-identity", {a}, "one is not a two-sided identity"),
              std::nullopt};

  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
          return {Verdict::fail("left-distributivity", {a, b, c},
                                "a(b+c) != ab+ac"),
                  std::nullopt};
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]])
          return {Verdict::fail("right-distributivity", {a, b, c},
                                "(a+b)c != ac+bc"),
                  std::nullopt};
      }

  FiniteRing r;
  r.order = n;
  r.add_table = add;
  r.mul_table = mul;
  r.zero = zero;
  r.one = one;
  r.negate = add_check.group->inverse;
  r.unit_inverse.assign(n, -1);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      if (mul[u][v] == one && mul[v][u] == one) {
        r.unit_inverse[u] = v;
        break;
      }
  for (Index u = 0; u < n; ++u)
    if (r.unit_inverse[u] >= 0) r.units.push_back(u);
  return {Verdict::ok(), std::move(r)};
}

Verdict verify_ring(const RingCandidate& candidate) {
  return check_ring(candidate).verdict;
}

FiniteRing ring_zn(Index n) {
  if (n < 2)
    throw InvalidArgument("ring_zn: order must be at least 2 (1 != 0 required)");
  RingCandidate c;
  c.order = n;
  c.add.assign(n, std::vector<Index>(n));
  c.mul.assign(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      c.add[a][b] = (a + b) % n;
      c.mul[a][b] = (a * b) % n;
    }
  c.zero = 0;
  c.one = 1;
  RingCheck check = check_ring(c);
  if (!check.verdict)
    throw InternalInconsistency("ring_zn: " + to_string(check.verdict));
  return *std::move(check.ring);
}

bool rings_equal(const FiniteRing& a, const FiniteRing& b) {
  return a.order == b.order && a.zero == b.zero && a.one == b.one &&
         a.add_table == b.add_table && a.mul_table == b.mul_table;
}

ModuleCheck check_module(const ModuleCandidate& candidate, const FiniteRing& ring) {
  GroupCheck carrier = check_abelian_group(candidate.carrier);
  if (!carrier.verdict) {
    Verdict v = carrier.verdict;
    v.condition = "carrier-" + v.condition;
    return {std::move(v), std::nullopt};
  }
  const FiniteGroup& m = *carrier.group;
  require_table(candidate.action, ring.order, m.order, m.order, "module action");
  const Table& act = candidate.action;

  for (Index u = 0; u < m.order; ++u)
    if (act[ring.one][u] != u)
      return {Verdict::fail("action-unital", {u}, "1*u != u"), std::nullopt};
  for (Index r = 0; r < ring.order; ++r)
    for (Index u = 0; u < m.order; ++u)
      for (Index v = 0; v < m.order; ++v)
        if (act[r][m.cayley[u][v]] != m.cayley[act[r][u]][act[r][v]])
          return {Verdict::fail("action-add-module", {r, u, v},
                                "r(u+v) != ru+rv"),
                  std::nullopt};
  for (Index r = 0; r < ring.order; ++r)
    for (Index s = 0; s < ring.order; ++s)
      for (Index u = 0; u < m.order; ++u) {
        if (act[ring.add(r, s)][u] != m.cayley[act[r][u]][act[s][u]])
          return {Verdict::fail("action-add-ring", {r, s, u}, "(r+s)u != ru+su"),
                  std::nullopt};
        if (act[ring.mul(r, s)][u] != act[r][act[s][u]])
          return {Verdict::fail("action-mul", {r, s, u}, "(rs)u != r(su)"),
                  std::nullopt};
      }

  LeftModule mod;
  mod.carrier = *carrier.group;
  mod.action = candidate.action;
  mod.ring_order = ring.order;
  return {Verdict::ok(), std::move(mod)};
}

Verdict verify_module(const ModuleCandidate& candidate, const FiniteRing& ring) {
  return check_module(candidate, ring).verdict;
}

LeftModule module_self(const FiniteRing& ring) {
  LeftModule m;
  m.carrier.order = ring.order;
  m.carrier.cayley = ring.add_table;
  m.carrier.identity = ring.zero;
  m.carrier.inverse = ring.negate;
  m.action = ring.mul_table;
  m.ring_order = ring.order;
  return m;
}

LeftModule module_power(const FiniteRing& ring, Index k) {
  if (k <= 0) throw InvalidArgument("module_power: k must be positive");
  long long size = 1;
  for (Index i = 0; i < k; ++i) {
    size *= ring.order;
    if (size > 65536) throw ResourceLimit("module_power: carrier exceeds 65536");
  }
  const Index n = static_cast<Index>(size);

  // digits[u] = coefficient tuple of u, digit 0 least significant
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

  LeftModule m;
  m.ring_order = ring.order;
  m.carrier.order = n;
  m.carrier.identity = 0;
  m.carrier.cayley.assign(n, std::vector<Index>(n));
  m.carrier.inverse.assign(n, 0);
  m.action.assign(ring.order, std::vector<Index>(n));
  std::vector<Index> tmp(k);
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      for (Index j = 0; j < k; ++j) tmp[j] = ring.add(digits[u][j], digits[v][j]);
      m.carrier.cayley[u][v] = encode(tmp);
    }
    for (Index j = 0; j < k; ++j) tmp[j] = ring.neg(digits[u][j]);
    m.carrier.inverse[u] = encode(tmp);
  }
  for (Index r = 0; r < ring.order; ++r)
    for (Index u = 0; u < n; ++u) {
      for (Index j = 0; j < k; ++j) tmp[j] = ring.mul(r, digits[u][j]);
      m.action[r][u] = encode(tmp);
    }
  return m;
}

bool modules_equal(const LeftModule& a, const LeftModule& b) {
  return groups_equal(a.carrier, b.carrier) && a.action == b.action &&
         a.ring_order == b.ring_order;
}

}  // namespace mcq
