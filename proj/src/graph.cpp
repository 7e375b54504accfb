#include "sigmapi/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sigmapi {

void GeneratorGraph::add_node(const std::string& name) {
  if (has_node(name)) throw std::invalid_argument("duplicate generator node '" + name + "'");
  nodes_.push_back(name);
}

void GeneratorGraph::add_edge(const std::string& name, const std::string& source, const std::string& target) {
  if (edge_index_.count(name)) throw std::invalid_argument("duplicate generator edge '" + name + "'");
  if (!has_node(source)) throw std::invalid_argument("edge '" + name + "': unknown node '" + source + "'");
  if (!has_node(target)) throw std::invalid_argument("edge '" + name + "': unknown node '" + target + "'");
  edge_index_[name] = edges_.size();
  edges_.push_back({name, source, target});
}

bool GeneratorGraph::has_node(const std::string& name) const {
  return std::find(nodes_.begin(), nodes_.end(), name) != nodes_.end();
}

const GeneratorGraph::Edge* GeneratorGraph::edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

std::optional<std::pair<std::string, std::string>> GeneratorGraph::endpoints(
    const std::vector<std::string>& path) const {
  if (path.empty()) return std::nullopt;
  const Edge* first = edge(path.front());
  if (!first) return std::nullopt;
  std::string at = first->target;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const Edge* e = edge(path[k]);
    if (!e || e->source != at) return std::nullopt;
    at = e->target;
  }
  return std::make_pair(first->source, at);
}

std::vector<std::vector<std::string>> GeneratorGraph::paths(const std::string& source, const std::string& target,
                                                            std::size_t max_length) const {
  std::vector<std::vector<std::string>> out;
  // Breadth-first by length keeps the output shortest-first.
  std::vector<std::pair<std::string, std::vector<std::string>>> frontier{{source, {}}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& [node, path] : frontier)
      if (node == target) out.push_back(path);
    if (len == max_length) break;
    std::vector<std::pair<std::string, std::vector<std::string>>> next;
    for (const auto& [node, path] : frontier)
      for (const auto& e : edges_)
        if (e.source == node) {
          auto p = path;
          p.push_back(e.name);
          next.emplace_back(e.target, std::move(p));
        }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return out;
}

bool GeneratorGraph::acyclic() const {
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  std::function<bool(const std::string&)> visit = [&](const std::string& n) {
    int& s = state[n];
    if (s == 1) return false;
    if (s == 2) return true;
    s = 1;
    for (const auto& e : edges_)
      if (e.source == n && !visit(e.target)) return false;
    state[n] = 2;
    return true;
  };
  return std::all_of(nodes_.begin(), nodes_.end(), visit);
}

}  // namespace sigmapi
