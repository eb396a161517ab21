#include "pathmedian/reports.hpp"

#include <cstdio>

namespace pathmedian {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

void append_member(std::string& out, const PathNetwork& net,
                   const UniverseMember& mem, const char* indent) {
  out += indent;
  out += "{\"anchor\": " + std::to_string(mem.anchor + 1);
  out += ", \"side\": ";
  out += mem.spec.side == Side::Left ? "\"left\"" : "\"right\"";
  out += ", \"intermediate\": " + std::to_string(mem.spec.intermediate + 1);
  out += ", \"weight\": " + format_number(mem.spec.weight);
  out += ", \"weights\": [";
  for (std::size_t i = 0; i < mem.scenario.weights.size(); ++i) {
    if (i) out += ", ";
    out += format_number(mem.scenario.weights[i]);
  }
  out += "]}";
  (void)net;
}

}  // namespace

std::string solution_report(const PathNetwork& net, const ScenarioUniverse& u,
                            const Solution& sol) {
  std::string out = "{\n";
  out += "  \"x_star\": {\"coordinate\": " +
         format_number(sol.x_star.coordinate + net.offset());
  if (sol.x_star.is_vertex) {
    out += ", \"vertex\": " + std::to_string(sol.x_star.index + 1);
  } else {
    out += ", \"edge\": " + std::to_string(sol.x_star.index + 1);
  }
  out += "},\n";
  out += "  \"value\": " + format_number(sol.value) + ",\n";
  if (sol.witness >= 0) {
    out += "  \"witness\": ";
    append_member(out, net, u.members[sol.witness], "");
    out += ",\n";
  } else {
    out += "  \"witness\": null,\n";
  }
  out += "  \"vertices\": [\n";
  for (std::size_t i = 0; i < sol.vertex_report.size(); ++i) {
    const VertexRegret& vr = sol.vertex_report[i];
    out += "    {\"index\": " + std::to_string(i + 1);
    out += ", \"r_max\": " + format_number(vr.r_max);
    out += ", \"witness\": " + std::to_string(vr.witness + 1) + "}";
    out += i + 1 < sol.vertex_report.size() ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"edges\": [\n";
  for (std::size_t i = 0; i < sol.edge_report.size(); ++i) {
    const EdgeMin& em = sol.edge_report[i];
    out += "    {\"index\": " + std::to_string(em.edge + 1);
    out += ", \"x\": " + format_number(em.x + net.offset());
    out += ", \"value\": " + format_number(em.value);
    out += ", \"witness\": " + std::to_string(em.witness + 1) + "}";
    out += i + 1 < sol.edge_report.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string universe_report(const PathNetwork& net, const ScenarioUniverse& u) {
  std::string out = "{\n";
  out += "  \"size\": " + std::to_string(u.members.size()) + ",\n";
  out += "  \"members\": [\n";
  for (std::size_t i = 0; i < u.members.size(); ++i) {
    append_member(out, net, u.members[i], "    ");
    out += i + 1 < u.members.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string curve_csv(const PathNetwork& net,
                      const std::vector<std::pair<double, double>>& samples) {
  std::string out = "x,r_max\n";
  for (const auto& [x, r] : samples) {
    out += format_number(x + net.offset());
    out += ',';
    out += format_number(r);
    out += '\n';
  }
  return out;
}

}  // namespace pathmedian
