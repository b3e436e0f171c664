#ifndef FUZZYMLN_TAXONOMY_HPP
#define FUZZYMLN_TAXONOMY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace fuzzymln {

/// Rooted DAG of concepts. Immutable after load; queries are read-only and
/// safe to call concurrently.
class Taxonomy {
 public:
  /// Reads a `child parent` pair per line (`#` comments, blank lines
  /// ignored) and validates the result: single root, acyclic, ids matching
  /// [A-Za-z0-9_.\-]+.
  static Taxonomy load(std::istream& in);
  static Taxonomy load_string(const std::string& text);
  static Taxonomy load_file(const std::string& path);

  std::size_t size() const { return ids_.size(); }
  bool contains(const std::string& concept_id) const;
  const std::string& root() const { return ids_[root_]; }
  const std::vector<std::string>& concepts() const { return ids_; }

  /// Parents / children by id (empty vector for unknown ids is not given;
  /// unknown ids raise).
  std::vector<std::string> parents(const std::string& concept_id) const;
  std::vector<std::string> children(const std::string& concept_id) const;

  /// Number of nodes on the longest root-to-concept path, both endpoints
  /// counted; depth(root) == 1.
  int depth(const std::string& concept_id) const;

  /// Deepest common ancestor (a concept is its own ancestor). Depth ties are
  /// broken by lexicographically smallest id.
  std::string lcs(const std::string& c1, const std::string& c2) const;

  /// 2*depth(lcs) / (depth(c1)+depth(c2)), in (0, 1]. Memoized per pair.
  double wup_similarity(const std::string& c1, const std::string& c2) const;

  /// All concepts in the subtree rooted at the given concept (inclusive),
  /// sorted by id.
  std::vector<std::string> descendants(const std::string& concept_id) const;

  /// Subtree leaves (no children), sorted by id.
  std::vector<std::string> leaves_under(const std::string& concept_id) const;

 private:
  Taxonomy() = default;
  int index_of(const std::string& concept_id) const;  // raises on unknown
  int lcs_index(int a, int b) const;

  std::vector<std::string> ids_;               // index -> id, sorted
  std::map<std::string, int> index_;           // id -> index
  std::vector<std::vector<int>> parents_;      // index -> parent indices
  std::vector<std::vector<int>> children_;     // index -> child indices
  std::vector<int> depth_;                     // longest-path node count
  int root_ = -1;

  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<int, int>, std::pair<int, double>> memo_;
};

}  // namespace fuzzymln

#endif
