#include "pathmedian/path_network.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "json.hpp"

namespace pathmedian {

PathNetwork::PathNetwork(std::vector<double> coordinates,
                         std::vector<WeightInterval> intervals,
                         double capacity, double tau)
    : coords_(std::move(coordinates)),
      intervals_(std::move(intervals)),
      capacity_(capacity),
      tau_(tau),
      offset_(0.0) {
  if (coords_.empty()) {
    throw ValidationError("instance must have at least one vertex");
  }
  if (coords_.size() != intervals_.size()) {
    throw ValidationError("coordinate and interval counts differ");
  }
  if (!(capacity_ > 0.0)) {
    throw ValidationError("capacity must be positive");
  }
  if (!(tau_ > 0.0)) {
    throw ValidationError("tau must be positive");
  }
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (!(coords_[i] > coords_[i - 1])) {
      throw ValidationError("edge length must be positive at edge " +
                            std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (!(intervals_[i].min > 0.0)) {
      throw ValidationError("weight_min must be positive at vertex " +
                            std::to_string(i + 1));
    }
    if (!(intervals_[i].min <= intervals_[i].max)) {
      throw ValidationError("weight_min exceeds weight_max at vertex " +
                            std::to_string(i + 1));
    }
  }
  offset_ = coords_.front();
  if (offset_ != 0.0) {
    for (double& v : coords_) v -= offset_;
    coords_.front() = 0.0;
  }
}

double PathNetwork::min_edge_length() const {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < num_edges(); ++i) m = std::min(m, edge_length(i));
  return m;
}

PathNetwork PathNetwork::reflected() const {
  const int n = size();
  std::vector<double> rc(n);
  std::vector<WeightInterval> ri(n);
  for (int i = 0; i < n; ++i) {
    rc[i] = -coords_[n - 1 - i];
    ri[i] = intervals_[n - 1 - i];
  }
  return PathNetwork(std::move(rc), std::move(ri), capacity_, tau_);
}

Scenario PathNetwork::min_weights() const {
  Scenario s;
  s.weights.reserve(intervals_.size());
  for (const auto& iv : intervals_) s.weights.push_back(iv.min);
  return s;
}

Scenario PathNetwork::max_weights() const {
  Scenario s;
  s.weights.reserve(intervals_.size());
  for (const auto& iv : intervals_) s.weights.push_back(iv.max);
  return s;
}

bool PathNetwork::operator==(const PathNetwork& other) const {
  if (coords_ != other.coords_ || capacity_ != other.capacity_ ||
      tau_ != other.tau_ || intervals_.size() != other.intervals_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (intervals_[i].min != other.intervals_[i].min ||
        intervals_[i].max != other.intervals_[i].max) {
      return false;
    }
  }
  return true;
}

PathNetwork PathNetwork::parse(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what());
  }
  try {
    const double tau = doc.at("tau").get<double>();
    const double capacity = doc.at("capacity").get<double>();
    const auto& verts = doc.at("vertices");
    if (!verts.is_array()) {
      throw ParseError("\"vertices\" must be an array");
    }
    std::vector<double> coords;
    std::vector<WeightInterval> intervals;
    coords.reserve(verts.size());
    intervals.reserve(verts.size());
    for (const auto& v : verts) {
      coords.push_back(v.at("position").get<double>());
      intervals.push_back({v.at("weight_min").get<double>(),
                           v.at("weight_max").get<double>()});
    }
    return PathNetwork(std::move(coords), std::move(intervals), capacity, tau);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what());
  }
}

std::string PathNetwork::serialize() const {
  nlohmann::ordered_json doc;
  doc["tau"] = tau_;
  doc["capacity"] = capacity_;
  auto& verts = doc["vertices"] = nlohmann::ordered_json::array();
  for (int i = 0; i < size(); ++i) {
    nlohmann::ordered_json v;
    v["position"] = coords_[i] + offset_;
    v["weight_min"] = intervals_[i].min;
    v["weight_max"] = intervals_[i].max;
    verts.push_back(std::move(v));
  }
  return doc.dump(2) + "\n";
}

PointOnPath locate(const PathNetwork& net, double x) {
  if (x < net.coord(0) || x > net.coord(net.size() - 1)) {
    throw std::out_of_range("coordinate " + std::to_string(x) +
                            " is outside the path");
  }
  const auto& c = net.coords();
  auto it = std::lower_bound(c.begin(), c.end(), x);
  if (it != c.end() && *it == x) {
    return {x, static_cast<int>(it - c.begin()), true};
  }
  return {x, static_cast<int>(it - c.begin()) - 1, false};
}

Scenario make_scenario(const PathNetwork& net, std::vector<double> weights) {
  if (static_cast<int>(weights.size()) != net.size()) {
    throw ValidationError("scenario has " + std::to_string(weights.size()) +
                          " weights for " + std::to_string(net.size()) +
                          " vertices");
  }
  for (int i = 0; i < net.size(); ++i) {
    const auto& iv = net.interval(i);
    if (weights[i] < iv.min || weights[i] > iv.max) {
      throw ValidationError("weight out of interval at vertex " +
                            std::to_string(i + 1));
    }
  }
  return Scenario{std::move(weights)};
}

}  // namespace pathmedian
