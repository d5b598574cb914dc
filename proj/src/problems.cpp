#include "degdel/problems.hpp"

#include "degdel/live_graph.hpp"

namespace degdel {

namespace {

void check_budget(int k) {
  if (k < 0) throw usage_error("negative budget");
}

void check_set(const vertex_set& s, int n, const char* what) {
  for (vertex v : s)
    if (v < 0 || v >= n) throw usage_error(std::string(what) + " contains out-of-range vertex");
}

bool in_range(const vertex_set& m, int n) {
  for (vertex v : m)
    if (v < 0 || v >= n) return false;
  return true;
}

}  // namespace

void mid_instance::validate() const {
  if (!g.valid(wc)) throw usage_error("wc out of range");
  check_budget(k);
}

void mdd_instance::validate() const {
  if (!g.valid(wc)) throw usage_error("wc out of range");
  check_budget(k);
}

void bdd_instance::validate() const {
  if (d < 0) throw usage_error("negative degree bound");
  check_budget(k);
}

void annotated_mdd_instance::validate() const {
  if (!g.valid(wc)) throw usage_error("wc out of range");
  check_budget(k);
  check_set(vf, g.vertex_count(), "vf");
  if (vf.contains(wc)) throw usage_error("wc must not be in vf");
  if (i < 0) throw usage_error("negative target degree");
}

void annotated_bdd_instance::validate() const {
  if (d < 0) throw usage_error("negative degree bound");
  check_budget(k);
  check_set(unremovable, g.vertex_count(), "unremovable set");
}

bool is_mid_solution(const mid_instance& inst, const vertex_set& m) {
  if (m.size() > inst.k || m.contains(inst.wc) || !in_range(m, inst.g.vertex_count())) return false;
  live_directed st(inst.g);
  for (vertex v : m) st.remove(v);
  for (vertex v = 0; v < inst.g.vertex_count(); ++v)
    if (st.alive[v] && v != inst.wc && st.indeg[v] <= st.indeg[inst.wc]) return false;
  return true;
}

bool is_mdd_solution(const mdd_instance& inst, const vertex_set& m) {
  if (m.size() > inst.k || m.contains(inst.wc) || !in_range(m, inst.g.vertex_count())) return false;
  live_undirected st(inst.g);
  for (vertex v : m) st.remove(v);
  for (vertex v = 0; v < inst.g.vertex_count(); ++v)
    if (st.alive[v] && v != inst.wc && st.deg[v] <= st.deg[inst.wc]) return false;
  return true;
}

bool is_bdd_solution(const bdd_instance& inst, const vertex_set& m) {
  if (m.size() > inst.k || !in_range(m, inst.g.vertex_count())) return false;
  live_undirected st(inst.g);
  for (vertex v : m) st.remove(v);
  for (vertex v = 0; v < inst.g.vertex_count(); ++v)
    if (st.alive[v] && st.deg[v] > inst.d) return false;
  return true;
}

bool is_annotated_mdd_solution(const annotated_mdd_instance& inst, const vertex_set& m) {
  if (m.size() > inst.k || m.contains(inst.wc) || !in_range(m, inst.g.vertex_count())) return false;
  for (vertex v : m)
    if (inst.vf.contains(v)) return false;
  live_undirected st(inst.g);
  for (vertex v : m) st.remove(v);
  if (st.deg[inst.wc] != inst.i) return false;
  for (vertex v = 0; v < inst.g.vertex_count(); ++v)
    if (st.alive[v] && v != inst.wc && st.deg[v] < inst.i + 1) return false;
  return true;
}

bool is_annotated_bdd_solution(const annotated_bdd_instance& inst, const vertex_set& m) {
  for (vertex v : m)
    if (inst.unremovable.contains(v)) return false;
  return is_bdd_solution(bdd_instance{inst.g, inst.d, inst.k}, m);
}

}  // namespace degdel
