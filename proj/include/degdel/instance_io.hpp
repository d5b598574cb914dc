// Plain-text instance files.
//
//   p ud <n> <m> | p dir <n> <m> | p shs <d> <s>
//   e <u> <v>              edge or arc, 1-based
//   s <elements...>        hitting-set family member, 1-based
//   a wc <id> | a k <int> | a d <int> | a forbid <ids...> | a unrem <ids...>
//   # legend <role> <ids...>   kept; any other comment is dropped
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degdel/graph.hpp"

namespace degdel {

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class instance_kind { ud, dir, shs };

struct annotation {
  std::string key;
  std::vector<int> values;  // as written in the file
};

struct instance_file {
  instance_kind kind = instance_kind::ud;
  int n = 0;  // vertices, or universe size for shs
  int m = 0;  // edges/arcs, or number of sets for shs
  std::vector<edge> edges;                // 0-based
  std::vector<std::vector<int>> sets;     // 0-based elements
  std::vector<annotation> annotations;
  std::vector<std::pair<std::string, std::vector<vertex>>> legend;  // 0-based
  std::string body_order;                 // 'e', 's', 'a' per body line
  std::vector<std::string> notes;         // written as `# <note>`, not read back

  void add_edge(vertex u, vertex v);
  void add_set(std::vector<int> elems);
  void annotate(const std::string& key, std::vector<int> values);

  const annotation* find(const std::string& key) const;
  std::optional<int> find_int(const std::string& key) const;
  // 0-based; wc, forbid, unrem
  std::optional<vertex> find_vertex(const std::string& key) const;
  vertex_set find_vertices(const std::string& key) const;
};

instance_file parse_instance(std::istream& in);
instance_file parse_instance_string(const std::string& text);
instance_file read_instance(const std::string& path);

std::string write_instance(const instance_file& f);
void write_instance_file(const instance_file& f, const std::string& path);

undirected_graph to_undirected(const instance_file& f);
directed_graph to_directed(const instance_file& f);

instance_file from_graph(const undirected_graph& g);
instance_file from_graph(const directed_graph& g);
instance_file from_sets(int d, const std::vector<std::vector<int>>& sets);

// `e u v` per line (1-based) and `v ids...` lines respectively.
std::vector<edge> parse_edge_list(std::istream& in);
vertex_set parse_vertex_list(std::istream& in);

// "1,3,4" or "1 3 4" (1-based) -> 0-based set; "" -> empty
vertex_set parse_witness(const std::string& s);
std::string format_witness(const vertex_set& s);  // 1-based, comma separated

}  // namespace degdel
