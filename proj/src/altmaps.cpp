#include "permfact/altmaps.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "permfact/enumerate.hpp"

namespace permfact {

AlternatingMap build_map(const CycleFactorization& f) {
  validate(f);
  int n = f.n;
  int r = f.length();
  // factors containing each symbol, in application order (rightmost first)
  std::vector<std::vector<int>> chains_by_factor_index(n);
  for (int i = r - 1; i >= 0; --i)
    for (int s : f.factors[i].symbols()) chains_by_factor_index[s - 1].push_back(i);
  // relabel internal vertices in first-discovery order along arrows 1..n;
  // this order is a function of the commutation class only
  std::vector<int> new_id(r, -1);
  AlternatingMap m;
  m.n = n;
  m.symbol_chain.assign(n, {});
  for (int s = 0; s < n; ++s) {
    for (int idx : chains_by_factor_index[s]) {
      if (new_id[idx] < 0) {
        new_id[idx] = m.internal_count();
        m.vertex_cycles.push_back(f.factors[idx]);
      }
      m.symbol_chain[s].push_back(new_id[idx]);
    }
  }
  return m;
}

namespace {

struct DartSystem {
  // vertices: 0..V_int-1 internal; V_int + s-1 sources; V_int + n + s-1 sinks
  int n = 1;
  int internal = 0;
  struct Edge {
    int from, to, label;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotation;  // vertex -> darts in ccw order
  std::vector<int> dart_vertex;            // dart -> base vertex
  std::vector<int> rotation_next;          // dart -> next dart ccw at same vertex

  int vertex_count() const { return internal + 2 * n; }
  int source_vertex(int s) const { return internal + s - 1; }
  int sink_vertex(int s) const { return internal + n + s - 1; }
  bool is_source(int v) const { return v >= internal && v < internal + n; }
  bool is_sink(int v) const { return v >= internal + n; }
  int leaf_symbol(int v) const { return is_sink(v) ? v - internal - n + 1 : v - internal + 1; }
  static int theta(int d) { return d ^ 1; }
  bool dart_outgoing(int d) const { return (d & 1) == 0; }  // based at edge.from
  int dart_other_vertex(int d) const {
    const Edge& e = edges[d / 2];
    return dart_outgoing(d) ? e.to : e.from;
  }
};

DartSystem build_darts(const AlternatingMap& m) {
  DartSystem ds;
  ds.n = m.n;
  ds.internal = m.internal_count();
  // edges along each arrow: source -> chain... -> sink, labelled by symbol
  std::vector<std::map<int, int>> out_dart(ds.internal), in_dart(ds.internal);
  for (int s = 1; s <= m.n; ++s) {
    std::vector<int> path;
    path.push_back(ds.source_vertex(s));
    for (int v : m.symbol_chain[s - 1]) path.push_back(v);
    path.push_back(ds.sink_vertex(s));
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      int eid = static_cast<int>(ds.edges.size());
      ds.edges.push_back({path[i], path[i + 1], s});
      if (path[i] < ds.internal) out_dart[path[i]][s] = 2 * eid;
      if (path[i + 1] < ds.internal) in_dart[path[i + 1]][s] = 2 * eid + 1;
    }
  }
  int dart_count = 2 * static_cast<int>(ds.edges.size());
  ds.dart_vertex.assign(dart_count, -1);
  for (size_t e = 0; e < ds.edges.size(); ++e) {
    ds.dart_vertex[2 * e] = ds.edges[e].from;
    ds.dart_vertex[2 * e + 1] = ds.edges[e].to;
  }
  // rotation: internal vertex of factor (c1 .. ck): ccw (out c1, in c1, out c2, ...)
  ds.rotation.assign(ds.vertex_count(), {});
  for (int v = 0; v < ds.internal; ++v) {
    for (int s : m.vertex_cycles[v].symbols()) {
      ds.rotation[v].push_back(out_dart[v].at(s));
      ds.rotation[v].push_back(in_dart[v].at(s));
    }
  }
  for (int d = 0; d < dart_count; ++d) {
    int v = ds.dart_vertex[d];
    if (v >= ds.internal) ds.rotation[v].push_back(d);
  }
  ds.rotation_next.assign(dart_count, -1);
  for (const auto& rot : ds.rotation)
    for (size_t i = 0; i < rot.size(); ++i)
      ds.rotation_next[rot[i]] = rot[(i + 1) % rot.size()];
  return ds;
}

// faces are the orbits of d -> rotation_next(theta(d))
std::vector<std::vector<int>> face_orbits(const DartSystem& ds) {
  int dart_count = static_cast<int>(ds.rotation_next.size());
  std::vector<bool> seen(dart_count, false);
  std::vector<std::vector<int>> orbits;
  for (int d0 = 0; d0 < dart_count; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> orbit;
    int d = d0;
    while (!seen[d]) {
      seen[d] = true;
      orbit.push_back(d);
      d = ds.rotation_next[DartSystem::theta(d)];
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

long long component_count(const DartSystem& ds) {
  int V = ds.vertex_count();
  std::vector<int> parent(V);
  for (int i = 0; i < V; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : ds.edges) parent[find(e.from)] = find(e.to);
  std::set<int> roots;
  for (int i = 0; i < V; ++i) roots.insert(find(i));
  return static_cast<long long>(roots.size());
}

}  // namespace

MapStats map_stats(const AlternatingMap& m) {
  DartSystem ds = build_darts(m);
  MapStats st;
  st.vertex_count = ds.vertex_count();
  st.edge_count = static_cast<long long>(ds.edges.size());
  // recheck the alternating condition from the rotation
  for (int v = 0; v < ds.internal; ++v) {
    const auto& rot = ds.rotation[v];
    if (rot.size() % 2 != 0 || rot.size() < 4) st.alternating = false;
    for (size_t i = 0; i < rot.size(); ++i)
      if (ds.dart_outgoing(rot[i]) == ds.dart_outgoing(rot[(i + 1) % rot.size()]))
        st.alternating = false;
  }
  auto orbits = face_orbits(ds);
  st.face_count = static_cast<long long>(orbits.size());
  for (const auto& orbit : orbits) {
    FaceInfo fi;
    fi.dart_count = static_cast<long long>(orbit.size());
    for (int d : orbit) {
      int v = ds.dart_vertex[d];
      if (v >= ds.internal) {
        if (ds.is_source(v))
          fi.source_symbols.push_back(ds.leaf_symbol(v));
        else
          fi.sink_symbols.push_back(ds.leaf_symbol(v));
      }
    }
    std::sort(fi.source_symbols.begin(), fi.source_symbols.end());
    std::sort(fi.sink_symbols.begin(), fi.sink_symbols.end());
    st.faces.push_back(std::move(fi));
  }
  st.components = component_count(ds);
  long long euler = st.vertex_count - st.edge_count + st.face_count;
  long long twice_g = 2 * st.components - euler;
  internal_check(twice_g >= 0 && twice_g % 2 == 0, "Euler characteristic of an orientable map");
  st.genus = twice_g / 2;
  // acyclicity of the internal digraph
  int V = ds.internal;
  std::vector<std::vector<int>> adj(V);
  std::vector<int> indeg(V, 0);
  for (const auto& e : ds.edges)
    if (e.from < V && e.to < V) {
      adj[e.from].push_back(e.to);
      indeg[e.to]++;
    }
  std::queue<int> q;
  for (int v = 0; v < V; ++v)
    if (indeg[v] == 0) q.push(v);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++seen;
    for (int w : adj[v])
      if (--indeg[w] == 0) q.push(w);
  }
  st.acyclic = (seen == V);
  return st;
}

std::vector<std::vector<bool>> internal_reachability(const AlternatingMap& m) {
  DartSystem ds = build_darts(m);
  int V = ds.internal;
  std::vector<std::vector<bool>> reach(V, std::vector<bool>(V, false));
  for (const auto& e : ds.edges)
    if (e.from < V && e.to < V) reach[e.from][e.to] = true;
  for (int k = 0; k < V; ++k)
    for (int i = 0; i < V; ++i)
      if (reach[i][k])
        for (int j = 0; j < V; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

std::string canonical_serialization(const AlternatingMap& m, const Permutation& target) {
  if (target.size() != m.n) throw AmbientMismatch("serialization: target size mismatch");
  DartSystem ds = build_darts(m);
  // distinguished sources: least element of each cycle of the target,
  // canonically ordered (increasing least element); fixed points included
  std::vector<int> distinguished;
  {
    std::vector<bool> seen(m.n, false);
    for (int s = 1; s <= m.n; ++s) {
      if (seen[s - 1]) continue;
      distinguished.push_back(s);
      int cur = s;
      while (!seen[cur - 1]) {
        seen[cur - 1] = true;
        cur = target.apply(cur);
      }
    }
  }
  int V = ds.vertex_count();
  std::vector<int> id(V, -1);
  int next_id = 0;
  std::string out;
  std::queue<std::pair<int, int>> bfs;  // (vertex, arrival dart based at vertex)
  int root = ds.source_vertex(distinguished[0]);
  id[root] = next_id++;
  bfs.emplace(root, ds.rotation[root][0]);
  while (!bfs.empty()) {
    auto [v, entry] = bfs.front();
    bfs.pop();
    const auto& rot = ds.rotation[v];
    size_t start = 0;
    while (rot[start] != entry) ++start;
    out += "[";
    for (size_t t = 0; t < rot.size(); ++t) {
      int d = rot[(start + t) % rot.size()];
      int w = ds.dart_other_vertex(d);
      if (id[w] < 0) {
        id[w] = next_id++;
        bfs.emplace(w, DartSystem::theta(d));
      }
      out += ds.dart_outgoing(d) ? ">" : "<";
      out += std::to_string(id[w]);
      out += ",";
    }
    out += "]";
  }
  for (int v = 0; v < V; ++v)
    if (id[v] < 0) throw StructuralError("canonical serialization requires a connected map");
  out += "D:";
  for (int s : distinguished) out += std::to_string(id[ds.source_vertex(s)]) + ",";
  return out;
}

std::string rotation_dump(const AlternatingMap& m) {
  DartSystem ds = build_darts(m);
  std::string out;
  for (int v = 0; v < ds.internal; ++v) {
    out += "v" + std::to_string(v) + " " ;
    out += Permutation::from_cycle(m.n, m.vertex_cycles[v]).to_string() + " :";
    for (int d : ds.rotation[v]) {
      const auto& e = ds.edges[d / 2];
      int w = ds.dart_other_vertex(d);
      std::string wn = w < ds.internal ? "v" + std::to_string(w)
                       : (ds.is_source(w) ? "s" + std::to_string(ds.leaf_symbol(w))
                                          : "t" + std::to_string(ds.leaf_symbol(w)));
      out += (ds.dart_outgoing(d) ? " ->" : " <-") + wn + "(" + std::to_string(e.label) + ")";
    }
    out += "\n";
  }
  return out;
}

BijectionReport verify_bijection(const CycleType& alpha, const Signature& beta, long long g) {
  BijectionReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.g = g;
  Permutation target = class_representative(alpha);
  if (beta.depth() != minimal_depth(alpha, g)) {
    rep.ok = true;  // empty set: nothing to verify
    return rep;
  }

  // cycles of the target in canonical order (by least element), with lengths
  std::vector<std::pair<int, std::vector<int>>> target_cycles;
  {
    std::vector<bool> seen(target.size(), false);
    for (int s = 1; s <= target.size(); ++s) {
      if (seen[s - 1]) continue;
      std::vector<int> syms;
      int cur = s;
      while (!seen[cur - 1]) {
        seen[cur - 1] = true;
        syms.push_back(cur);
        cur = target.apply(cur);
      }
      std::sort(syms.begin(), syms.end());
      target_cycles.emplace_back(s, syms);
    }
  }

  EnumSpec spec;
  spec.target = target;
  spec.kind = FactorKind::Cycles;
  spec.signature = beta;
  spec.transitive_only = true;
  std::set<std::string> serializations;
  enumerate_cycle_factorizations(spec, [&](const CycleFactorization& f) {
    if (!is_canonical(f)) return true;
    ++rep.class_count;
    AlternatingMap m = build_map(f);
    MapStats st = map_stats(m);
    auto fail = [&](const std::string& what) {
      rep.failures.push_back({what, "factorization of " + target.to_string()});
    };
    if (!st.acyclic) fail("map not acyclic");
    if (!st.alternating) fail("map not alternating");
    if (st.genus != g) fail("map genus mismatch");
    if (st.face_count != alpha.length()) fail("face count differs from l(alpha)");
    // each face carries the sources of exactly one cycle of the target
    for (const auto& [least, syms] : target_cycles) {
      bool found = false;
      for (const auto& fi : st.faces) {
        if (std::find(fi.source_symbols.begin(), fi.source_symbols.end(), least) ==
            fi.source_symbols.end())
          continue;
        found = true;
        if (fi.source_symbols != syms) fail("face sources differ from the target cycle");
        if (fi.sink_symbols != syms) fail("face sinks differ from the target cycle");
      }
      if (!found) fail("no face contains the distinguished source");
    }
    serializations.insert(canonical_serialization(m, target));
    return true;
  });
  rep.map_count = static_cast<long long>(serializations.size());
  if (rep.map_count != rep.class_count)
    rep.failures.push_back({"distinct classes produced equal canonical serializations", ""});
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace permfact
