#include "degdel/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace degdel {

void instance_file::add_edge(vertex u, vertex v) {
  edges.push_back({u, v});
  body_order += 'e';
}

void instance_file::add_set(std::vector<int> elems) {
  sets.push_back(std::move(elems));
  body_order += 's';
}

void instance_file::annotate(const std::string& key, std::vector<int> values) {
  annotations.push_back({key, std::move(values)});
  body_order += 'a';
}

const annotation* instance_file::find(const std::string& key) const {
  for (auto& a : annotations)
    if (a.key == key) return &a;
  return nullptr;
}

std::optional<int> instance_file::find_int(const std::string& key) const {
  auto* a = find(key);
  if (!a || a->values.empty()) return std::nullopt;
  return a->values[0];
}

std::optional<vertex> instance_file::find_vertex(const std::string& key) const {
  auto v = find_int(key);
  if (!v) return std::nullopt;
  return *v - 1;
}

vertex_set instance_file::find_vertices(const std::string& key) const {
  auto* a = find(key);
  if (!a) return {};
  std::vector<vertex> out;
  for (int v : a->values) out.push_back(v - 1);
  return vertex_set(out);
}

namespace {

bool to_int(const std::string& s, int& out) {
  auto r = std::from_chars(s.data(), s.data() + s.size(), out);
  return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::vector<int> ints(const std::vector<std::string>& w, std::size_t from, int line) {
  std::vector<int> out;
  for (std::size_t t = from; t < w.size(); ++t) {
    int v;
    if (!to_int(w[t], v)) throw parse_error(line, "expected integer, got '" + w[t] + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

instance_file parse_instance(std::istream& in) {
  instance_file f;
  bool header = false;
  std::set<edge> seen;
  std::set<std::string> keys;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto w = split(line);
    if (w.empty()) continue;
    if (w[0][0] == '#') {
      if (w[0] == "#" && w.size() >= 3 && w[1] == "legend") {
        std::vector<vertex> ids;
        for (int v : ints(w, 3, lineno)) ids.push_back(v - 1);
        f.legend.push_back({w[2], ids});
      }
      continue;
    }
    if (w[0] == "p") {
      if (header) throw parse_error(lineno, "second header line");
      if (w.size() != 4) throw parse_error(lineno, "header needs 'p <kind> <a> <b>'");
      if (w[1] == "ud")
        f.kind = instance_kind::ud;
      else if (w[1] == "dir")
        f.kind = instance_kind::dir;
      else if (w[1] == "shs")
        f.kind = instance_kind::shs;
      else
        throw parse_error(lineno, "unknown kind '" + w[1] + "'");
      if (!to_int(w[2], f.n) || !to_int(w[3], f.m) || f.n < 0 || f.m < 0)
        throw parse_error(lineno, "bad header counts");
      header = true;
      continue;
    }
    if (!header) throw parse_error(lineno, "body line before header");
    if (w[0] == "e") {
      if (f.kind == instance_kind::shs) throw parse_error(lineno, "edge line in a hitting-set file");
      if (w.size() != 3) throw parse_error(lineno, "edge line needs two ids");
      auto uv = ints(w, 1, lineno);
      for (int x : uv)
        if (x < 1 || x > f.n) throw parse_error(lineno, "vertex id out of range");
      if (uv[0] == uv[1]) throw parse_error(lineno, "self-loop");
      edge key{uv[0], uv[1]};
      if (f.kind == instance_kind::ud && key.first > key.second) std::swap(key.first, key.second);
      if (!seen.insert(key).second) throw parse_error(lineno, "duplicate edge");
      f.add_edge(uv[0] - 1, uv[1] - 1);
    } else if (w[0] == "s") {
      if (f.kind != instance_kind::shs) throw parse_error(lineno, "set line outside a hitting-set file");
      auto el = ints(w, 1, lineno);
      if (el.empty()) throw parse_error(lineno, "empty set");
      for (int& x : el) {
        if (x < 1 || x > f.n) throw parse_error(lineno, "element out of range");
        --x;
      }
      f.add_set(el);
    } else if (w[0] == "a") {
      if (w.size() < 2) throw parse_error(lineno, "annotation needs a key");
      const std::string& key = w[1];
      auto vals = ints(w, 2, lineno);
      if (!keys.insert(key).second) throw parse_error(lineno, "repeated annotation '" + key + "'");
      if (key == "k" || key == "d") {
        if (vals.size() != 1 || vals[0] < 0) throw parse_error(lineno, "'" + key + "' needs one non-negative integer");
      } else if (key == "wc" || key == "forbid" || key == "unrem") {
        if (f.kind == instance_kind::shs) throw parse_error(lineno, "vertex annotation in a hitting-set file");
        if (key == "wc" && vals.size() != 1) throw parse_error(lineno, "'wc' needs one id");
        for (int x : vals)
          if (x < 1 || x > f.n) throw parse_error(lineno, "vertex id out of range");
      } else {
        throw parse_error(lineno, "unknown annotation '" + key + "'");
      }
      f.annotate(key, vals);
    } else {
      throw parse_error(lineno, "unrecognised line '" + w[0] + "'");
    }
  }
  if (!header) throw parse_error(lineno, "missing header");
  if (f.kind == instance_kind::shs) {
    if (static_cast<int>(f.sets.size()) != f.m) throw parse_error(lineno, "set count does not match header");
  } else if (static_cast<int>(f.edges.size()) != f.m) {
    throw parse_error(lineno, "edge count does not match header");
  }
  return f;
}

instance_file parse_instance_string(const std::string& text) {
  std::istringstream is(text);
  return parse_instance(is);
}

instance_file read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

std::string write_instance(const instance_file& f) {
  std::ostringstream os;
  const char* kind = f.kind == instance_kind::ud ? "ud" : f.kind == instance_kind::dir ? "dir" : "shs";
  os << "p " << kind << ' ' << f.n << ' ' << f.m << '\n';
  for (auto& [role, ids] : f.legend) {
    os << "# legend " << role;
    for (vertex v : ids) os << ' ' << v + 1;
    os << '\n';
  }
  for (const auto& c : f.notes) os << "# " << c << '\n';
  std::size_t ei = 0, si = 0, ai = 0;
  for (char c : f.body_order) {
    if (c == 'e') {
      os << "e " << f.edges[ei].first + 1 << ' ' << f.edges[ei].second + 1 << '\n';
      ++ei;
    } else if (c == 's') {
      os << 's';
      for (int x : f.sets[si]) os << ' ' << x + 1;
      os << '\n';
      ++si;
    } else {
      os << "a " << f.annotations[ai].key;
      for (int x : f.annotations[ai].values) os << ' ' << x;
      os << '\n';
      ++ai;
    }
  }
  return os.str();
}

void write_instance_file(const instance_file& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_instance(f);
}

undirected_graph to_undirected(const instance_file& f) {
  if (f.kind != instance_kind::ud) throw usage_error("expected an undirected instance");
  return undirected_graph(f.n, f.edges);
}

directed_graph to_directed(const instance_file& f) {
  if (f.kind != instance_kind::dir) throw usage_error("expected a directed instance");
  return directed_graph(f.n, f.edges);
}

instance_file from_graph(const undirected_graph& g) {
  instance_file f;
  f.kind = instance_kind::ud;
  f.n = g.vertex_count();
  f.m = g.edge_count();
  for (auto [u, v] : g.edges()) f.add_edge(u, v);
  return f;
}

instance_file from_graph(const directed_graph& g) {
  instance_file f;
  f.kind = instance_kind::dir;
  f.n = g.vertex_count();
  f.m = g.arc_count();
  for (auto [u, v] : g.arcs()) f.add_edge(u, v);
  return f;
}

instance_file from_sets(int d, const std::vector<std::vector<int>>& sets) {
  instance_file f;
  f.kind = instance_kind::shs;
  f.n = d;
  f.m = static_cast<int>(sets.size());
  for (auto& s : sets) f.add_set(s);
  return f;
}

std::vector<edge> parse_edge_list(std::istream& in) {
  std::vector<edge> out;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto w = split(line);
    if (w.empty() || w[0][0] == '#') continue;
    if (w[0] != "e" || w.size() != 3) throw parse_error(lineno, "expected 'e u v'");
    auto uv = ints(w, 1, lineno);
    if (uv[0] < 1 || uv[1] < 1) throw parse_error(lineno, "vertex id out of range");
    out.push_back({std::min(uv[0], uv[1]) - 1, std::max(uv[0], uv[1]) - 1});
  }
  return out;
}

vertex_set parse_vertex_list(std::istream& in) {
  std::vector<vertex> out;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto w = split(line);
    if (w.empty() || w[0][0] == '#') continue;
    if (w[0] != "v") throw parse_error(lineno, "expected 'v ids...'");
    for (int x : ints(w, 1, lineno)) {
      if (x < 1) throw parse_error(lineno, "vertex id out of range");
      out.push_back(x - 1);
    }
  }
  return vertex_set(out);
}

vertex_set parse_witness(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::vector<vertex> out;
  for (auto& w : split(t)) {
    int x;
    if (!to_int(w, x) || x < 1) throw usage_error("bad witness id '" + w + "'");
    out.push_back(x - 1);
  }
  return vertex_set(out);
}

std::string format_witness(const vertex_set& s) {
  std::string out;
  for (vertex v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace degdel
