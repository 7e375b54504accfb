#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sigmapi {

/// A finite directed multigraph presenting the generator category as the free
/// category on it: arrows are edge paths, and two arrows are equal exactly
/// when their edge sequences are equal.
class GeneratorGraph {
 public:
  struct Edge {
    std::string name;
    std::string source;
    std::string target;
  };

  void add_node(const std::string& name);
  /// Both endpoints must already be nodes; edge names are unique.
  void add_edge(const std::string& name, const std::string& source, const std::string& target);

  bool empty() const { return nodes_.empty(); }
  bool has_node(const std::string& name) const;
  const Edge* edge(const std::string& name) const;
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Endpoints of a composable edge path; nullopt when an edge is unknown or
  /// consecutive edges do not meet. The empty path has no endpoints of its own.
  std::optional<std::pair<std::string, std::string>> endpoints(const std::vector<std::string>& path) const;

  /// Every path from `source` to `target` with at most `max_length` edges,
  /// shortest first, ties broken by edge declaration order.
  std::vector<std::vector<std::string>> paths(const std::string& source, const std::string& target,
                                              std::size_t max_length) const;

  bool acyclic() const;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> edge_index_;
};

}  // namespace sigmapi
