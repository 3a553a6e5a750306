#include "preclusion/report.hpp"

#include "preclusion/error.hpp"

namespace preclusion {

using nlohmann::json;

json to_json(const RunReport& r) {
  json doc;
  doc["tool"] = r.tool;
  doc["version"] = r.version;
  doc["schema_version"] = r.schema_version;
  doc["command"] = r.command;
  doc["arguments"] = r.arguments;
  if (r.input) {
    doc["input"] = {{"n", r.input->n}, {"m", r.input->m}, {"family", r.input->family}};
  } else {
    doc["input"] = nullptr;
  }
  doc["result"] = r.result;
  doc["outcome"] = r.outcome;
  doc["exit_code"] = r.exit_code;
  doc["deterministic"] = r.deterministic;
  doc["stats"] = {{"nodes", r.stats.nodes}, {"prunes", r.stats.prunes}};
  doc["timing"] = {{"wall_seconds", r.wall_seconds}};
  return doc;
}

RunReport report_from_json(const json& doc) {
  try {
    RunReport r;
    r.tool = doc.at("tool").get<std::string>();
    r.version = doc.at("version").get<std::string>();
    r.schema_version = doc.at("schema_version").get<int>();
    r.command = doc.at("command").get<std::string>();
    r.arguments = doc.at("arguments").get<std::vector<std::string>>();
    if (!doc.at("input").is_null()) {
      const json& in = doc.at("input");
      r.input = InputSummary{in.at("n").get<std::size_t>(), in.at("m").get<std::size_t>(),
                             in.at("family").get<std::string>()};
    }
    r.result = doc.at("result");
    r.outcome = doc.at("outcome").get<std::string>();
    r.exit_code = doc.at("exit_code").get<int>();
    r.deterministic = doc.at("deterministic").get<bool>();
    r.stats.nodes = doc.at("stats").at("nodes").get<std::uint64_t>();
    r.stats.prunes = doc.at("stats").at("prunes").get<std::uint64_t>();
    r.wall_seconds = doc.at("timing").at("wall_seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what(), 0);
  }
}

json without_timing(json doc) {
  doc.erase("timing");
  return doc;
}

json edge_list_json(const Graph& g, const EdgeList& edges) {
  json ids = json::array();
  json pairs = json::array();
  for (EdgeId e : edges) {
    ids.push_back(e);
    pairs.push_back({g.edge(e).u, g.edge(e).v});
  }
  return {{"edge_ids", std::move(ids)}, {"edges", std::move(pairs)}};
}

json certificate_json(const Graph& g, const PreclusionCertificate& cert) {
  json doc;
  doc["kind"] = cert.kind.to_string();
  doc["s"] = cert.kind.s();
  doc["status"] = std::string(to_string(cert.status));
  if (cert.value) {
    doc["value"] = *cert.value;
  } else if (cert.status == CertificateStatus::Infinite) {
    doc["value"] = "INFINITY";
  } else {
    doc["value"] = nullptr;
  }
  doc["reason"] = std::string(to_string(cert.reason));
  doc["budget"] = cert.budget ? json(*cert.budget) : json(nullptr);
  doc["witness"] = cert.witness ? edge_list_json(g, cert.witness->members()) : json(nullptr);
  doc["evidence"] = {{"nu_after", cert.evidence.nu_after},
                     {"component_count", cert.evidence.component_count},
                     {"component_min_size", cert.evidence.component_min_size},
                     {"connected", cert.evidence.connected}};
  doc["depth_limits"] = cert.stats.depth_limits;
  return doc;
}

namespace {

json edge_lists_json(const Graph& g, const std::vector<EdgeList>& lists) {
  json out = json::array();
  for (const auto& l : lists) out.push_back(edge_list_json(g, l));
  return out;
}

}  // namespace

json lemma4_json(const Graph& q, const Lemma4Report& r) {
  return {{"n", r.n},
          {"set_size", r.set_size},
          {"subsets_checked", r.subsets_checked},
          {"conditional_sets", r.conditional_sets},
          {"nontrivial_sets", r.nontrivial_sets},
          {"counterexamples", edge_lists_json(q, r.counterexamples)},
          {"trivial_sets", r.trivial_sets},
          {"trivial_sets_all_conditional", r.trivial_sets_all_conditional},
          {"smaller_subsets_checked", r.smaller_subsets_checked},
          {"smaller_conditional_sets", r.smaller_conditional_sets},
          {"pass", r.pass}};
}

json lemma5_json(const Graph& q, const Lemma5Report& r) {
  return {
      {"n", r.n},
      {"set_size", r.set_size},
      {"literal_form",
       {{"statement", "|F| = 2n-2 and F != I(uv) for every edge uv => Q_n - F connected"},
        {"counterexample", edge_list_json(q, r.literal_counterexample)},
        {"disconnects", r.literal_counterexample_disconnects},
        {"differs_from_every_pair_set", r.literal_counterexample_differs_from_every_pair_set},
        {"counterexample_reproduced", r.literal_counterexample_reproduced()}}},
      {"corrected_form",
       {{"statement",
         "|F| = 2n-2, F != I(uv) for every edge uv, F contains no I(w) => Q_n - F connected"},
        {"exhaustive", r.exhaustive},
        {"checked", r.corrected_checked},
        {"excluded", r.corrected_excluded},
        {"failures", r.corrected_failures},
        {"counterexamples", edge_lists_json(q, r.corrected_counterexamples)},
        {"pass", r.corrected_pass}}},
      {"trivial_conditional_sets",
       {{"checked", r.trivial_sets_checked}, {"all_connected", r.trivial_sets_connected}}},
      {"pass", r.pass()}};
}

json mps_hypercube_json(const Graph& q, const MpsHypercubeReport& r) {
  return {{"n", r.n},
          {"s", r.s},
          {"claimed_value", r.claimed_value},
          {"two_path", {r.path.u, r.path.w, r.path.v}},
          {"upper_bound", {{"witness", edge_list_json(q, r.upper_witness)},
                           {"verified", r.upper_bound_verified}}},
          {"lower_bound",
           {{"method", r.lower_bound_method == LowerBoundMethod::Exhaustive ? "exhaustive" : "cited"},
            {"verified", r.lower_bound_verified},
            {"note", r.lower_bound_method == LowerBoundMethod::Exhaustive
                         ? "no s-restricted set of size <= 2n-3 exists (exact search)"
                         : "upper bound verified, lower bound cited: mp_s >= mp_1 = 2n-2 assumed"}}},
          {"certificate", certificate_json(q, r.certificate)},
          {"pass", r.pass()}};
}

}  // namespace preclusion
