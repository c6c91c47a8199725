#include "strongedge/generate.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>

namespace strongedge {

namespace {

// Bounded draws go through here so that generated graphs do not depend on
// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int below(int n) {  // uniform over [0, n)
    std::uint64_t span = static_cast<std::uint64_t>(n);
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
      draw = eng_();
    } while (draw >= limit);
    return static_cast<int>(draw % span);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[i], v[below(i + 1)]);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace

Graph gen_petersen() {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph gen_c5_blowup(int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("c5_blowup needs max_degree >= 2");
  std::vector<int> part_size(5);
  if (max_degree % 2 == 0) {
    std::fill(part_size.begin(), part_size.end(), max_degree / 2);
  } else {
    part_size = {(max_degree + 1) / 2, (max_degree + 1) / 2, (max_degree - 1) / 2,
                 (max_degree - 1) / 2, (max_degree - 1) / 2};
  }
  std::vector<int> part_start(5);
  int n = 0;
  for (int i = 0; i < 5; ++i) {
    part_start[i] = n;
    n += part_size[i];
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    for (int a = 0; a < part_size[i]; ++a)
      for (int b = 0; b < part_size[j]; ++b)
        edges.emplace_back(part_start[i] + a, part_start[j] + b);
  }
  return Graph(n, edges);
}

namespace {

// Incremental state for girth-constrained regular sampling. Adding an edge
// (u, v) keeps girth >= girth_min iff the current distance between u and v
// is at least girth_min - 1.
struct Partial {
  int n;
  int degree;
  int girth_min;
  std::vector<std::vector<VertexId>> adj;
  std::vector<int> deg;

  Partial(int n_, int degree_, int girth_min_)
      : n(n_), degree(degree_), girth_min(girth_min_), adj(n_), deg(n_, 0) {}

  bool adjacent(VertexId u, VertexId v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
  }

  void add(VertexId u, VertexId v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++deg[u];
    ++deg[v];
  }

  void remove_last(VertexId u, VertexId v) {
    adj[u].pop_back();
    adj[v].pop_back();
    --deg[u];
    --deg[v];
  }

  // Vertices within distance girth_min - 2 of u (too close to pair with).
  void mark_ball(VertexId u, std::vector<char>& close) const {
    std::fill(close.begin(), close.end(), 0);
    std::vector<int> dist(n, -1);
    std::queue<VertexId> q;
    dist[u] = 0;
    close[u] = 1;
    q.push(u);
    int radius = girth_min - 2;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      if (dist[x] == radius) continue;
      for (VertexId y : adj[x]) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          close[y] = 1;
          q.push(y);
        }
      }
    }
  }

  std::vector<VertexId> candidates(VertexId u) const {
    std::vector<char> close(n, 0);
    mark_ball(u, close);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
      if (!close[v] && deg[v] < degree) out.push_back(v);
    return out;
  }

  std::vector<std::pair<VertexId, VertexId>> edge_list() const {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v : adj[u])
        if (u < v) edges.emplace_back(u, v);
    return edges;
  }
};

// Exhaustive completion of a partial placement. Pivots on the lowest-id
// unfilled vertex, so each completion is visited once; candidate order is
// shuffled to vary the witness across attempts. Returns false on a clean
// exhaust, with *nodes_left == 0 when the cap was hit instead.
bool complete_by_search(Partial& p, Rng& rng, long* nodes_left) {
  VertexId pivot = -1;
  for (VertexId v = 0; v < p.n; ++v) {
    if (p.deg[v] < p.degree) {
      pivot = v;
      break;
    }
  }
  if (pivot == -1) return true;
  if (--(*nodes_left) <= 0) return false;

  std::vector<VertexId> cands = p.candidates(pivot);
  std::erase_if(cands, [&](VertexId v) { return v == pivot; });
  rng.shuffle(cands);
  for (VertexId v : cands) {
    p.add(pivot, v);
    if (complete_by_search(p, rng, nodes_left)) return true;
    p.remove_last(pivot, v);
    if (*nodes_left <= 0) return false;
  }
  return false;
}

}  // namespace

Graph gen_random_regular(int n, int degree, int girth_min, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("random_regular needs n >= 1");
  if (degree < 0 || degree >= n)
    throw std::invalid_argument("random_regular needs 0 <= degree < n");
  if ((static_cast<long long>(n) * degree) % 2 != 0)
    throw std::invalid_argument("random_regular needs n*degree even");
  girth_min = std::max(girth_min, 3);

  Rng rng(seed);
  const int retry_limit = 10000;
  const long search_cap = 200000;
  // Small instances go straight to exhaustive search; larger ones fill most
  // slots greedily and search only the endgame.
  const bool tiny = n * degree <= 60;
  const int endgame_slots = 16;

  for (int attempt = 0; attempt < retry_limit; ++attempt) {
    Partial p(n, degree, girth_min);
    bool stuck = false;
    if (!tiny) {
      int open_slots = n * degree;
      while (open_slots > endgame_slots) {
        std::vector<VertexId> open;
        for (VertexId v = 0; v < n; ++v)
          if (p.deg[v] < degree) open.push_back(v);
        VertexId u = open[rng.below(static_cast<int>(open.size()))];
        std::vector<VertexId> cands = p.candidates(u);
        std::erase_if(cands, [&](VertexId v) { return v == u; });
        if (cands.empty()) {
          stuck = true;
          break;
        }
        p.add(u, cands[rng.below(static_cast<int>(cands.size()))]);
        open_slots -= 2;
      }
    }
    if (stuck) continue;
    long nodes_left = search_cap;
    if (complete_by_search(p, rng, &nodes_left)) return Graph(n, p.edge_list());
    if (tiny && nodes_left > 0) {
      // a clean exhaust of the whole space proves there is no such graph
      throw std::runtime_error("no " + std::to_string(degree) + "-regular graph on " +
                               std::to_string(n) + " vertices with girth >= " +
                               std::to_string(girth_min) + " exists (search exhausted)");
    }
  }
  throw std::runtime_error("random_regular gave up after " + std::to_string(retry_limit) +
                           " attempts (infeasible or unlucky parameters)");
}

Graph gen_random_max_degree(int n, int max_degree, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("random_max_degree needs n >= 1");
  if (max_degree < 0 || max_degree >= n)
    throw std::invalid_argument("random_max_degree needs 0 <= max_degree < n");

  Rng rng(seed);
  Partial p(n, max_degree, 3);
  if (max_degree > 0) {
    // degree-capped random spanning tree
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    rng.shuffle(order);
    for (int i = 1; i < n; ++i) {
      std::vector<VertexId> hosts;
      for (int j = 0; j < i; ++j)
        if (p.deg[order[j]] < max_degree) hosts.push_back(order[j]);
      if (hosts.empty()) break;  // cap too tight to stay connected
      p.add(order[i], hosts[rng.below(static_cast<int>(hosts.size()))]);
    }
    // random extra edges under the cap
    int tries = 2 * n;
    while (tries-- > 0) {
      VertexId u = rng.below(n);
      VertexId v = rng.below(n);
      if (u == v || p.deg[u] >= max_degree || p.deg[v] >= max_degree || p.adjacent(u, v))
        continue;
      p.add(u, v);
    }
    // top one vertex up to the cap so the maximum is attained
    VertexId hub = 0;
    for (VertexId v = 1; v < n; ++v)
      if (p.deg[v] > p.deg[hub]) hub = v;
    for (VertexId v = 0; v < n && p.deg[hub] < max_degree; ++v) {
      if (v == hub || p.deg[v] >= max_degree || p.adjacent(hub, v)) continue;
      p.add(hub, v);
    }
  }
  return Graph(n, p.edge_list());
}

GeneratorSpec GeneratorSpec::parse(const std::string& text, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.seed = seed;
  std::string kind = text;
  std::vector<int> args;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      try {
        size_t used = 0;
        args.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad generator argument '" + tok + "' in '" + text + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  auto want = [&](size_t count) {
    if (args.size() != count)
      throw std::invalid_argument("generator '" + kind + "' takes " + std::to_string(count) +
                                  " argument(s)");
  };
  if (kind == "petersen") {
    want(0);
    spec.kind = Kind::petersen;
  } else if (kind == "cycle") {
    want(1);
    spec.kind = Kind::cycle;
    spec.n = args[0];
  } else if (kind == "c5_blowup") {
    want(1);
    spec.kind = Kind::c5_blowup;
    spec.degree = args[0];
  } else if (kind == "random_regular") {
    want(3);
    spec.kind = Kind::random_regular;
    spec.n = args[0];
    spec.degree = args[1];
    spec.girth_min = args[2];
  } else if (kind == "random_max_degree") {
    want(2);
    spec.kind = Kind::random_max_degree;
    spec.n = args[0];
    spec.degree = args[1];
  } else {
    throw std::invalid_argument("unknown generator kind '" + kind + "'");
  }
  return spec;
}

Graph GeneratorSpec::build() const {
  switch (kind) {
    case Kind::petersen: return gen_petersen();
    case Kind::cycle: return gen_cycle(n);
    case Kind::c5_blowup: return gen_c5_blowup(degree);
    case Kind::random_regular: return gen_random_regular(n, degree, girth_min, seed);
    case Kind::random_max_degree: return gen_random_max_degree(n, degree, seed);
  }
  throw std::logic_error("unhandled generator kind");
}

}  // namespace strongedge
