#include <mcq/quandle.hpp>

#include <numeric>

namespace mcq {

namespace {

void require_square(const Table& op, const char* name) {
  const Index n = static_cast<Index>(op.size());
  if (n == 0) throw MalformedInput(std::string(name) + ": empty table");
  for (Index r = 0; r < n; ++r) {
    if (static_cast<Index>(op[r].size()) != n)
      throw MalformedInput(std::string(name) + ": ragged row " + std::to_string(r));
    for (Index c = 0; c < n; ++c)
      if (op[r][c] < 0 || op[r][c] >= n)
        throw MalformedInput(std::string(name) + ": entry out of range");
  }
}

}  // namespace

Verdict verify_quandle(const Table& op) {
  require_square(op, "quandle op");
  const Index n = static_cast<Index>(op.size());

  for (Index a = 0; a < n; ++a)
    if (op[a][a] != a) return Verdict::fail("Q1", {a}, "a <| a != a");

  for (Index b = 0; b < n; ++b) {
    std::vector<Index> seen(n, -1);
    for (Index a = 0; a < n; ++a) {
      const Index image = op[a][b];
      if (seen[image] >= 0)
        return Verdict::fail("Q2", {seen[image], a, b},
                             "S_b maps two elements to one image");
      seen[image] = a;
    }
  }

  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[op[a][c]][op[b][c]])
          return Verdict::fail("Q3", {a, b, c},
                               "(a<|b)<|c != (a<|c)<|(b<|c)");
  return Verdict::ok();
}

FiniteQuandle make_quandle(Table op) {
  if (Verdict v = verify_quandle(op); !v)
    throw InvalidArgument("make_quandle: " + to_string(v));
  FiniteQuandle q;
  q.order = static_cast<Index>(op.size());
  q.op = std::move(op);
  return q;
}

FiniteQuandle conj_quandle(const FiniteGroup& group) {
  const Index n = group.order;
  Table op(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      op[a][b] = group.mul(group.mul(group.inv(b), a), b);
  return FiniteQuandle{n, std::move(op)};
}

FiniteQuandle dihedral_quandle(Index n) {
  if (n <= 0) throw InvalidArgument("dihedral_quandle: order must be positive");
  Table op(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) op[a][b] = ((2 * b - a) % n + n) % n;
  return FiniteQuandle{n, std::move(op)};
}

FiniteQuandle alexander_quandle_zn(Index n, Index t) {
  if (n < 2) throw InvalidArgument("alexander_quandle_zn: need n >= 2");
  if (t < 0 || t >= n) throw InvalidArgument("alexander_quandle_zn: t out of range");
  const FiniteRing zn = ring_zn(n);
  if (!zn.is_unit(t))
    throw InvalidArgument("alexander_quandle_zn: t must be a unit mod n");
  Table op(n, std::vector<Index>(n));
  const Index s = zn.sub(zn.one, t);  // 1 - t
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      op[a][b] = zn.add(zn.mul(t, a), zn.mul(s, b));
  return FiniteQuandle{n, std::move(op)};
}

long long quandle_type(const FiniteQuandle& q) {
  const Index n = q.order;
  long long type = 1;
  std::vector<char> visited(n);
  for (Index b = 0; b < n; ++b) {
    // order of the column permutation S_b = lcm of its cycle lengths
    std::fill(visited.begin(), visited.end(), 0);
    for (Index a = 0; a < n; ++a) {
      if (visited[a]) continue;
      long long len = 0;
      Index x = a;
      while (!visited[x]) {
        visited[x] = 1;
        x = q.op[x][b];
        ++len;
      }
      type = std::lcm(type, len);
    }
  }
  return type;
}

HomReport check_quandle_hom(const MapVec& f, const FiniteQuandle& src,
                            const FiniteQuandle& dst) {
  if (static_cast<Index>(f.size()) != src.order)
    throw MalformedInput("quandle hom: map size mismatch");
  for (Index a = 0; a < src.order; ++a)
    if (f[a] < 0 || f[a] >= dst.order)
      throw MalformedInput("quandle hom: image out of range");

  HomReport report;
  std::vector<Index> fiber(dst.order, 0);
  for (Index a = 0; a < src.order; ++a) ++fiber[f[a]];
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

  for (Index a = 0; a < src.order; ++a)
    for (Index b = 0; b < src.order; ++b)
      if (f[src.op[a][b]] != dst.op[f[a]][f[b]]) {
        report.verdict = Verdict::fail("hom-op", {a, b},
                                       "f(a<|b) != f(a)<|f(b)");
        return report;
      }
  report.verdict = Verdict::ok();
  return report;
}

}  // namespace mcq
