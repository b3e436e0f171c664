#include "taxonomy.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "error.hpp"
#include "log.hpp"

namespace fuzzymln {

namespace {

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '.' || c == '-'))
      return false;
  }
  return true;
}

}  // namespace

Taxonomy Taxonomy::load(std::istream& in) {
  Taxonomy t;
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string child, parent, extra;
    if (!(ls >> child)) continue;  // blank
    if (!(ls >> parent))
      throw input_error("taxonomy line " + std::to_string(lineno) +
                        ": dangling reference (child '" + child +
                        "' without a parent)");
    if (ls >> extra)
      throw input_error("taxonomy line " + std::to_string(lineno) +
                        ": expected exactly two ids");
    if (!valid_id(child) || !valid_id(parent))
      throw input_error("taxonomy line " + std::to_string(lineno) +
                        ": bad concept id");
    edges.emplace_back(child, parent);
    seen.insert(child);
    seen.insert(parent);
  }
  if (edges.empty()) throw input_error("taxonomy: empty input");

  t.ids_.assign(seen.begin(), seen.end());
  for (int i = 0; i < static_cast<int>(t.ids_.size()); ++i)
    t.index_[t.ids_[i]] = i;
  t.parents_.resize(t.ids_.size());
  t.children_.resize(t.ids_.size());
  for (const auto& [child, parent] : edges) {
    int c = t.index_[child], p = t.index_[parent];
    if (c == p)
      throw input_error("taxonomy: concept '" + child + "' is its own parent");
    if (std::find(t.parents_[c].begin(), t.parents_[c].end(), p) ==
        t.parents_[c].end()) {
      t.parents_[c].push_back(p);
      t.children_[p].push_back(c);
    }
  }

  // Unique root: exactly one node without parents.
  std::vector<int> roots;
  for (int i = 0; i < static_cast<int>(t.ids_.size()); ++i)
    if (t.parents_[i].empty()) roots.push_back(i);
  if (roots.empty())
    throw input_error("taxonomy: cycle detected (no root remains)");
  if (roots.size() > 1) {
    std::string msg = "taxonomy: multiple roots:";
    for (int r : roots) msg += " " + t.ids_[r];
    throw input_error(msg);
  }
  t.root_ = roots[0];

  // Longest-path depths via Kahn order; a leftover node means a cycle.
  std::vector<int> pending(t.ids_.size());
  for (std::size_t i = 0; i < t.ids_.size(); ++i)
    pending[i] = static_cast<int>(t.parents_[i].size());
  t.depth_.assign(t.ids_.size(), 0);
  std::vector<int> queue{t.root_};
  t.depth_[t.root_] = 1;
  std::size_t done = 0;
  while (!queue.empty()) {
    int n = queue.back();
    queue.pop_back();
    ++done;
    for (int c : t.children_[n]) {
      t.depth_[c] = std::max(t.depth_[c], t.depth_[n] + 1);
      if (--pending[c] == 0) queue.push_back(c);
    }
  }
  if (done != t.ids_.size())
    throw input_error("taxonomy: cycle detected");

  logging::debug("taxonomy loaded: " + std::to_string(t.ids_.size()) +
                 " concepts, root " + t.root());
  return t;
}

Taxonomy Taxonomy::load_string(const std::string& text) {
  std::istringstream in(text);
  return load(in);
}

Taxonomy Taxonomy::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open taxonomy file: " + path);
  return load(in);
}

bool Taxonomy::contains(const std::string& concept_id) const {
  return index_.count(concept_id) > 0;
}

int Taxonomy::index_of(const std::string& concept_id) const {
  auto it = index_.find(concept_id);
  if (it == index_.end())
    throw input_error("unknown concept: " + concept_id);
  return it->second;
}

std::vector<std::string> Taxonomy::parents(const std::string& concept_id) const {
  std::vector<std::string> out;
  for (int p : parents_[index_of(concept_id)]) out.push_back(ids_[p]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Taxonomy::children(const std::string& concept_id) const {
  std::vector<std::string> out;
  for (int c : children_[index_of(concept_id)]) out.push_back(ids_[c]);
  std::sort(out.begin(), out.end());
  return out;
}

int Taxonomy::depth(const std::string& concept_id) const {
  return depth_[index_of(concept_id)];
}

int Taxonomy::lcs_index(int a, int b) const {
  // Ancestor set of a (a included), then walk up from b keeping the deepest
  // hit; ties by lexicographically smallest id.
  std::vector<char> is_anc(ids_.size(), 0);
  std::vector<int> stack{a};
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    if (is_anc[n]) continue;
    is_anc[n] = 1;
    for (int p : parents_[n]) stack.push_back(p);
  }
  int best = -1;
  std::vector<char> seen(ids_.size(), 0);
  stack.push_back(b);
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    if (seen[n]) continue;
    seen[n] = 1;
    if (is_anc[n]) {
      if (best < 0 || depth_[n] > depth_[best] ||
          (depth_[n] == depth_[best] && ids_[n] < ids_[best]))
        best = n;
    }
    for (int p : parents_[n]) stack.push_back(p);
  }
  // Root is a common ancestor of everything, so best is always set.
  return best;
}

std::string Taxonomy::lcs(const std::string& c1, const std::string& c2) const {
  int a = index_of(c1), b = index_of(c2);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto key = std::minmax(a, b);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    int l = lcs_index(a, b);
    double w = 2.0 * depth_[l] / (depth_[a] + depth_[b]);
    it = memo_.emplace(key, std::make_pair(l, w)).first;
  }
  return ids_[it->second.first];
}

double Taxonomy::wup_similarity(const std::string& c1,
                                const std::string& c2) const {
  int a = index_of(c1), b = index_of(c2);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto key = std::minmax(a, b);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    int l = lcs_index(a, b);
    double w = 2.0 * depth_[l] / (depth_[a] + depth_[b]);
    it = memo_.emplace(key, std::make_pair(l, w)).first;
  }
  return it->second.second;
}

std::vector<std::string> Taxonomy::descendants(
    const std::string& concept_id) const {
  std::vector<char> seen(ids_.size(), 0);
  std::vector<int> stack{index_of(concept_id)};
  std::vector<std::string> out;
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    if (seen[n]) continue;
    seen[n] = 1;
    out.push_back(ids_[n]);
    for (int c : children_[n]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Taxonomy::leaves_under(
    const std::string& concept_id) const {
  std::vector<std::string> out;
  for (const auto& id : descendants(concept_id))
    if (children_[index_.at(id)].empty()) out.push_back(id);
  return out;
}

}  // namespace fuzzymln
