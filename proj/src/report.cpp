#include "valdim/report.hpp"

#include <algorithm>
#include <sstream>

#include "valdim/boolspace.hpp"
#include "valdim/error.hpp"

namespace valdim {

namespace {

Json vec_json(const IntVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

IntVec vec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected an integer array");
  IntVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::InvalidArgument, "expected an integer array");
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

Json chain_json(const CollapseChain& chain) {
  Json steps = Json::array();
  for (const auto& s : chain.steps)
    steps.push_back({{"alpha", to_string(s.alpha)}, {"group", to_string(s.group)}, {"closed_form", s.closed_form}});
  return steps;
}

}  // namespace

Json filter_json(const IdealFilter& f) {
  switch (f.kind) {
    case FilterKind::Principal:
      return {{"class", "principal"}, {"gen", vec_json(f.gen)}};
    case FilterKind::LimitCut:
      return {{"class", "limitcut"}, {"level", f.level}, {"prefix", vec_json(f.gen)}};
    case FilterKind::Zero:
      break;
  }
  return {{"class", "zero"}};
}

IdealFilter filter_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("class") || !j["class"].is_string())
    throw Error(ErrorCode::InvalidArgument, "filter JSON needs a \"class\" string");
  const std::string cls = j["class"].get<std::string>();
  if (cls == "zero") return IdealFilter::zero();
  if (cls == "principal" && j.contains("gen")) return IdealFilter::principal(vec_from_json(j["gen"]));
  if (cls == "limitcut" && j.contains("level") && j["level"].is_number_integer() && j.contains("prefix"))
    return IdealFilter::limit_cut(j["level"].get<int>(), vec_from_json(j["prefix"]));
  throw Error(ErrorCode::InvalidArgument, "malformed filter JSON: " + j.dump());
}

Json ordinal_json(const std::optional<Ordinal>& a) { return a ? Json(to_string(*a)) : Json("undefined"); }

Json dimension_payload(const LGroup& g, const DimensionResult& r) {
  return {{"gamma", to_string(g)},
          {"value", ordinal_json(r.value)},
          {"method", to_string(r.method)},
          {"terminal", to_string(r.chain.terminal)},
          {"truncated", r.chain.truncated},
          {"chain", chain_json(r.chain)}};
}

Json chain_payload(const LGroup& g, CollapseClass c, const CollapseChain& chain) {
  return {{"gamma", to_string(g)},
          {"class", to_string(c)},
          {"length", to_string(chain.last().alpha)},
          {"terminal", to_string(chain.terminal)},
          {"truncated", chain.truncated},
          {"chain", chain_json(chain)}};
}

Json cbrank_space_payload(const Ordinal& top, std::size_t budget) {
  OrdinalSpace x(top);
  Json chain = Json::array();
  bool truncated = false;
  OrdinalSpace cur = x;
  for (std::size_t i = 0;; ++i) {
    if (cur.is_empty()) {
      chain.push_back("empty");
      break;
    }
    chain.push_back(to_string(cur.top()));
    if (i >= budget) {
      truncated = true;
      break;
    }
    OrdinalSpace next = derivative(cur);
    // a derivative homeomorphic to its space repeats forever
    if (!next.is_empty() && next.top() == cur.top()) {
      truncated = true;
      break;
    }
    cur = next;
  }
  return {{"top", to_string(top)}, {"cb_rank", to_string(cb_rank_space(x))}, {"truncated", truncated},
          {"derivative_chain", chain}};
}

Json zg_payload(const LGroup& g, int bound, bool stratify) {
  Json out = {{"gamma", to_string(g)}, {"bound", bound}};
  Json points = Json::array();
  auto describe = [&](const ZgPoint& p) {
    return Json{{"point", to_string(p)},
                {"family", family_name(g, p)},
                {"invariant", vec_json(point_invariant(g, p))},
                {"I", filter_json(p.pair.I)},
                {"J", filter_json(p.pair.J)},
                {"ass_hash", filter_json(p.ass_hash)},
                {"div_hash", filter_json(p.div_hash)}};
  };
  if (!stratify) {
    for (const auto& p : zg_points(g, bound)) points.push_back(describe(p));
    out["count"] = points.size();
    out["points"] = points;
    return out;
  }
  CbStratification s = cb_stratify(g, bound);
  for (const auto& sp : s.points) {
    Json j = describe(sp.point);
    j["layer"] = sp.layer ? Json(*sp.layer) : Json(nullptr);
    j["ass_rank"] = to_string(sp.ass_rank);
    j["div_rank"] = to_string(sp.div_rank);
    j["rank_bound"] = to_string(sp.rank_bound);
    points.push_back(j);
  }
  out["count"] = points.size();
  out["points"] = points;
  out["stratify"] = {{"direct_rank", s.direct_rank ? Json(to_string(*s.direct_rank)) : Json("stalled")},
                     {"closed_form", to_string(s.closed_form)},
                     {"agrees", s.agrees()},
                     {"split_families", s.split_families}};
  return out;
}

Json leq_payload(const PpFormula& lhs, const PpFormula& rhs) {
  bool lr = leq_pp(lhs, rhs);
  bool rl = leq_pp(rhs, lhs);
  return {{"gamma", to_string(lhs.group)},
          {"lhs", to_string(lhs)},
          {"rhs", to_string(rhs)},
          {"lhs_leq_rhs", lr},
          {"rhs_leq_lhs", rl},
          {"equivalent", lr && rl}};
}

Json classify_payload(const ClassifyReport& r) {
  Json bounds = nullptr;
  if (r.zg_cb_bounds) bounds = Json::array({to_string(r.zg_cb_bounds->first), to_string(r.zg_cb_bounds->second)});
  return {{"gamma", to_string(r.group)},
          {"mdim_gamma", ordinal_json(r.mdim_gamma)},
          {"breadth_gamma", ordinal_json(r.breadth_gamma)},
          {"breadth_pp1", ordinal_json(r.breadth_pp1)},
          {"pp1_has_mdim", r.pp1_has_mdim},
          {"superdecomposable_exists", r.superdecomposable_exists},
          {"superdec_witness_route", r.superdec_witness_route},
          {"superdec_schema", r.superdec_schema},
          {"zg_cb_bounds", bounds},
          {"zg_cb_exact", r.zg_cb_exact ? Json(to_string(*r.zg_cb_exact)) : Json(nullptr)},
          {"krull_dim_one", r.krull_dim_one},
          {"s_infty_stage", to_string(r.s_infty_stage)},
          {"s_infty_group", r.s_infty_group}};
}

Json spec_star_payload(const LGroup& g, const SpecStarReport& r, const std::optional<Ordinal>& mdim) {
  Json ranks = Json::array();
  for (const auto& pr : r.ranks) ranks.push_back({{"prime", pr.prime}, {"rank", to_string(pr.rank)}});
  return {{"gamma", to_string(g)},
          {"cb_rank", to_string(r.cb_rank)},
          {"mdim", ordinal_json(mdim)},
          {"rank_rule", r.rank_rule},
          {"ranks", ranks}};
}

Json make_report(const std::string& command, const std::string& gamma, const std::string& method, Json result,
                 double seconds) {
  Json j = {{"schema_version", kSchemaVersion}, {"command", command}};
  if (!gamma.empty()) j["gamma"] = gamma;
  j["engine"] = {{"method", method}};
  j["result"] = std::move(result);
  j["timing"] = {{"seconds", seconds}};
  return j;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string s = "[";
    bool first = true;
    for (const auto& x : v) {
      s += (first ? "" : ", ") + cell(x);
      first = false;
    }
    return s + "]";
  }
  if (v.is_object() && v.contains("class") && v.size() <= 3) {
    // filters read better in their text form
    std::string cls = v["class"].get<std::string>();
    if (cls == "principal") return "up" + cell(v["gen"]);
    if (cls == "limitcut") return "cut" + std::to_string(v["level"].get<int>()) + cell(v["prefix"]);
    if (cls == "zero") return "zero";
  }
  return v.dump();
}

bool is_row_table(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
}

void render_fields(std::ostringstream& out, const Json& obj, const std::string& indent);

void render_rows(std::ostringstream& out, const Json& rows, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(r.contains(cols[c]) ? cell(r[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s = indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render_fields(std::ostringstream& out, const Json& obj, const std::string& indent) {
  std::size_t key_width = 0;
  for (const auto& [k, v] : obj.items())
    if (!is_row_table(v) && !(v.is_object() && !v.contains("class"))) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : obj.items()) {
    if (is_row_table(v) || (v.is_object() && !v.contains("class"))) continue;
    out << indent << k << std::string(key_width - k.size() + 2, ' ') << cell(v) << "\n";
  }
  for (const auto& [k, v] : obj.items()) {
    if (v.is_object() && !v.contains("class")) {
      out << indent << k << ":\n";
      render_fields(out, v, indent + "  ");
    } else if (is_row_table(v)) {
      out << indent << k << ":\n";
      render_rows(out, v, indent + "  ");
    }
  }
}

}  // namespace

std::string render_table(const Json& report) {
  std::ostringstream out;
  Json head = Json::object();
  for (const char* k : {"command", "gamma"})
    if (report.contains(k)) head[k] = report[k];
  if (report.contains("engine") && report["engine"].contains("method")) head["method"] = report["engine"]["method"];
  if (report.contains("timing") && report["timing"].contains("seconds")) {
    std::ostringstream t;
    t << report["timing"]["seconds"].get<double>() << " s";
    head["time"] = t.str();
  }
  render_fields(out, head, "");
  if (report.contains("result")) {
    out << "\n";
    render_fields(out, report["result"], "");
  }
  return out.str();
}

}  // namespace valdim
