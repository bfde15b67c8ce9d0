#include "curvelab/json_io.hpp"

#include <json.hpp>

namespace curvelab {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& msg) {
  fail(ErrorCode::ParseError, msg);
}

TailModel tail_from_json(const json& j) {
  std::string kind = j.value("kind", "");
  if (kind == "constant") return TailModel::constant(j.at("c").get<double>());
  if (kind == "affine")
    return TailModel::affine(j.at("slope").get<double>(),
                             j.at("intercept").get<double>());
  if (kind == "power")
    return TailModel::power(j.at("c").get<double>(), j.at("gamma").get<double>(),
                            j.value("shift", 0L));
  if (kind == "exponential")
    return TailModel::exponential(j.at("c").get<double>(),
                                  j.at("base").get<double>());
  if (kind == "undecidable") return TailModel::undecidable();
  parse_fail("unknown tail kind '" + kind + "'");
}

json tail_to_json(const TailModel& t) {
  switch (t.kind) {
    case TailModel::Kind::Constant:
      return {{"kind", "constant"}, {"c", t.c}};
    case TailModel::Kind::Affine:
      return {{"kind", "affine"}, {"slope", t.slope}, {"intercept", t.intercept}};
    case TailModel::Kind::Power:
      return {{"kind", "power"}, {"c", t.c}, {"gamma", t.gamma}, {"shift", t.shift}};
    case TailModel::Kind::Exponential:
      return {{"kind", "exponential"}, {"c", t.c}, {"base", t.base}};
    case TailModel::Kind::Undecidable:
      return {{"kind", "undecidable"}};
  }
  parse_fail("bad tail model");
}

SequenceModel sequence_from_json(const json& j) {
  SequenceModel s;
  if (j.contains("prefix")) {
    for (const auto& v : j.at("prefix")) s.prefix.push_back(v.get<double>());
  }
  if (j.contains("tail")) s.tail = tail_from_json(j.at("tail"));
  return s;
}

json sequence_to_json(const SequenceModel& s) {
  return {{"prefix", s.prefix}, {"tail", tail_to_json(s.tail)}};
}

}  // namespace

LinearGraph parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
  try {
    const json& js = j.at("support");
    std::string kind = js.at("kind").get<std::string>();
    Support support;
    if (kind == "half_line") {
      support = Support::half_line();
    } else if (kind == "line") {
      support = Support::line();
    } else if (kind == "interval") {
      support = Support::interval(js.at("lo").get<long>(), js.at("hi").get<long>());
    } else {
      parse_fail("unknown support kind '" + kind + "'");
    }

    MeasureSpec measure = MeasureSpec::physical();
    const json& jm = j.at("measure");
    if (jm.is_string()) {
      std::string m = jm.get<std::string>();
      if (m == "physical") {
        measure = MeasureSpec::physical();
      } else if (m == "normalized") {
        measure = MeasureSpec::normalized();
      } else {
        parse_fail("unknown measure '" + m + "'");
      }
    } else if (jm.is_object() && jm.contains("explicit")) {
      measure = MeasureSpec::explicit_(sequence_from_json(jm.at("explicit")));
    } else {
      parse_fail("bad measure spec");
    }

    return LinearGraph(support, sequence_from_json(j.at("weights")), measure);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
}

std::string graph_to_json(const LinearGraph& g) {
  json j;
  switch (g.support().kind) {
    case Support::Kind::HalfLine:
      j["support"] = {{"kind", "half_line"}};
      break;
    case Support::Kind::Line:
      j["support"] = {{"kind", "line"}};
      break;
    case Support::Kind::Interval:
      j["support"] = {{"kind", "interval"},
                      {"lo", g.support().lo},
                      {"hi", g.support().hi}};
      break;
  }
  switch (g.measure_spec().kind) {
    case MeasureSpec::Kind::Physical:
      j["measure"] = "physical";
      break;
    case MeasureSpec::Kind::Normalized:
      j["measure"] = "normalized";
      break;
    case MeasureSpec::Kind::Explicit:
      j["measure"] = {{"explicit", sequence_to_json(g.measure_spec().values)}};
      break;
  }
  j["weights"] = sequence_to_json(g.weights());
  return j.dump(2);
}

RootedGraph parse_rooted(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
  try {
    long root = j.at("root").get<long>();
    std::vector<RootedGraph::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) parse_fail("edges must be [u,v,w]");
      edges.emplace_back(e[0].get<long>(), e[1].get<long>(), e[2].get<double>());
    }
    std::map<long, double> measure;
    if (j.contains("measure")) {
      for (const auto& [key, val] : j.at("measure").items())
        measure[std::stol(key)] = val.get<double>();
    }
    return RootedGraph(root, edges, measure);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  } catch (const std::invalid_argument&) {
    parse_fail("measure keys must be integer vertex ids");
  }
}

std::string rooted_to_json(const RootedGraph& rg) {
  json j;
  j["root"] = rg.root();
  json edges = json::array();
  for (const auto& [u, v, w] : rg.edges()) edges.push_back({u, v, w});
  j["edges"] = edges;
  json measure = json::object();
  for (long v : rg.vertices()) measure[std::to_string(v)] = rg.measure(v);
  j["measure"] = measure;
  return j.dump(2);
}

}  // namespace curvelab
