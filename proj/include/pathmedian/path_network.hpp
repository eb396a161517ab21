#ifndef PATHMEDIAN_PATH_NETWORK_HPP
#define PATHMEDIAN_PATH_NETWORK_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace pathmedian {

// Raised for instance documents that are syntactically valid but violate a
// model constraint. The message names the offending field and index.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for malformed instance documents.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct WeightInterval {
  double min = 0.0;
  double max = 0.0;
};

// One admissible supply assignment, one weight per vertex.
struct Scenario {
  std::vector<double> weights;
};

// A point on the embedded path. Coordinates are in the normalized frame
// (first vertex at 0). A point is a vertex exactly when its coordinate
// equals that vertex's coordinate; otherwise it lies strictly inside an edge.
struct PointOnPath {
  double coordinate = 0.0;
  int index = 0;  // vertex index if is_vertex, edge index otherwise (0-based)
  bool is_vertex = true;
};

// Immutable path instance: strictly increasing vertex coordinates, per-vertex
// supply intervals, uniform capacity and travel constant. Coordinates are
// normalized so the first vertex sits at 0; the original offset is kept for
// report output. Safe to share across threads once constructed.
class PathNetwork {
 public:
  PathNetwork(std::vector<double> coordinates,
              std::vector<WeightInterval> intervals, double capacity,
              double tau);

  static PathNetwork parse(const std::string& text);
  std::string serialize() const;

  int size() const { return static_cast<int>(coords_.size()); }
  int num_edges() const { return size() - 1; }
  double coord(int i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }
  const WeightInterval& interval(int i) const { return intervals_[i]; }
  const std::vector<WeightInterval>& intervals() const { return intervals_; }
  double capacity() const { return capacity_; }
  double tau() const { return tau_; }
  double offset() const { return offset_; }
  double span() const { return coords_.back(); }
  double edge_length(int i) const { return coords_[i + 1] - coords_[i]; }
  double min_edge_length() const;

  // Mirror image: coordinates negated and vertex order reversed, renormalized.
  PathNetwork reflected() const;

  Scenario min_weights() const;
  Scenario max_weights() const;

  bool operator==(const PathNetwork& other) const;

 private:
  std::vector<double> coords_;
  std::vector<WeightInterval> intervals_;
  double capacity_;
  double tau_;
  double offset_;
};

// Classifies a normalized coordinate as a vertex or an open-edge interior
// point. Throws std::out_of_range outside [v_1, v_n].
PointOnPath locate(const PathNetwork& net, double x);

// Builds a Scenario, rejecting any weight outside its vertex interval.
// No clamping is performed.
Scenario make_scenario(const PathNetwork& net, std::vector<double> weights);

}  // namespace pathmedian

#endif
