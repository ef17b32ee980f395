#include "segsec/fat/spec.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "segsec/errors.hpp"
#include "segsec/fat/conditions.hpp"
#include "segsec/fat/monomials.hpp"
#include "segsec/la/rank.hpp"

namespace segsec::fat {

using nlohmann::json;

SchemeSpec& SchemeSpec::coordinate(unsigned index, unsigned mult) {
  PointSpec p;
  p.kind = PointSpec::Kind::Coordinate;
  p.index = index;
  p.mult = mult;
  points.push_back(std::move(p));
  return *this;
}

SchemeSpec& SchemeSpec::generic(unsigned mult, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) points.push_back(PointSpec{PointSpec::Kind::Generic, 0, {}, {}, mult});
  return *this;
}

SchemeSpec& SchemeSpec::on_subspace(const std::string& id, unsigned mult, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) points.push_back(PointSpec{PointSpec::Kind::OnSubspace, 0, id, {}, mult});
  return *this;
}

SchemeSpec& SchemeSpec::subspace(SubspaceSpec s) {
  subspaces.push_back(std::move(s));
  return *this;
}

namespace {

const char* kind_name(PointSpec::Kind k) {
  switch (k) {
    case PointSpec::Kind::Coordinate: return "coordinate";
    case PointSpec::Kind::Generic: return "generic";
    case PointSpec::Kind::OnSubspace: return "on-subspace";
    case PointSpec::Kind::Explicit: return "explicit";
  }
  return "generic";
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

void check_coords(const std::vector<std::int64_t>& c, unsigned ambient, const std::string& field) {
  if (c.size() != ambient + 1)
    throw SpecParseError(field, "expected " + std::to_string(ambient + 1) + " coordinates, got " +
                                    std::to_string(c.size()));
  if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; }))
    throw SpecParseError(field, "coordinates are all zero");
}

// ---- reading -------------------------------------------------------------------------------

void allow_keys(const json& j, std::initializer_list<const char*> keys, const std::string& field) {
  if (!j.is_object()) throw SpecParseError(field, "expected an object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; }))
      throw SpecParseError(field + "." + k, "unknown field");
  }
}

const json& require(const json& j, const char* key, const std::string& field) {
  if (!j.contains(key)) throw SpecParseError(field + "." + key, "missing required field");
  return j.at(key);
}

unsigned get_count(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > 1'000'000)
    throw SpecParseError(field, "expected a nonnegative integer");
  return static_cast<unsigned>(j.get<std::int64_t>());
}

std::vector<std::int64_t> get_coords(const json& j, const std::string& field) {
  if (!j.is_array()) throw SpecParseError(field, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw SpecParseError(at(field, i), "expected an integer");
    out.push_back(j[i].get<std::int64_t>());
  }
  return out;
}

PointSpec read_point(const json& j, const std::string& field) {
  allow_keys(j, {"kind", "index", "subspace", "coords", "mult"}, field);
  const json& kind = require(j, "kind", field);
  if (!kind.is_string()) throw SpecParseError(field + ".kind", "expected a string");
  const auto k = kind.get<std::string>();
  PointSpec p;
  p.mult = j.contains("mult") ? get_count(j.at("mult"), field + ".mult") : 1;
  auto forbid = [&](const char* key) {
    if (j.contains(key)) throw SpecParseError(field + "." + key, "not allowed for kind '" + k + "'");
  };
  if (k == "coordinate") {
    p.kind = PointSpec::Kind::Coordinate;
    p.index = get_count(require(j, "index", field), field + ".index");
    forbid("subspace");
    forbid("coords");
  } else if (k == "generic") {
    p.kind = PointSpec::Kind::Generic;
    forbid("index");
    forbid("subspace");
    forbid("coords");
  } else if (k == "on-subspace") {
    p.kind = PointSpec::Kind::OnSubspace;
    const json& id = require(j, "subspace", field);
    if (!id.is_string()) throw SpecParseError(field + ".subspace", "expected a subspace id");
    p.subspace = id.get<std::string>();
    forbid("index");
    forbid("coords");
  } else if (k == "explicit") {
    p.kind = PointSpec::Kind::Explicit;
    p.coords = get_coords(require(j, "coords", field), field + ".coords");
    forbid("index");
    forbid("subspace");
  } else {
    throw SpecParseError(field + ".kind", "unknown kind '" + k + "' (coordinate|generic|on-subspace|explicit)");
  }
  return p;
}

SpanEntry read_span_entry(const json& j, const std::string& field) {
  allow_keys(j, {"coordinate", "point", "generic", "coords"}, field);
  if (j.size() != 1) throw SpecParseError(field, "a span entry has exactly one of coordinate|point|generic|coords");
  SpanEntry e;
  if (j.contains("coordinate")) {
    e.kind = SpanEntry::Kind::Coordinate;
    e.index = get_count(j.at("coordinate"), field + ".coordinate");
  } else if (j.contains("point")) {
    e.kind = SpanEntry::Kind::Point;
    e.index = get_count(j.at("point"), field + ".point");
  } else if (j.contains("generic")) {
    if (!j.at("generic").is_boolean() || !j.at("generic").get<bool>())
      throw SpecParseError(field + ".generic", "expected true");
    e.kind = SpanEntry::Kind::Generic;
  } else {
    e.kind = SpanEntry::Kind::Coords;
    e.coords = get_coords(j.at("coords"), field + ".coords");
  }
  return e;
}

SubspaceSpec read_subspace(const json& j, const std::string& field) {
  allow_keys(j, {"id", "span", "component", "mult"}, field);
  SubspaceSpec s;
  const json& id = require(j, "id", field);
  if (!id.is_string() || id.get<std::string>().empty()) throw SpecParseError(field + ".id", "expected a nonempty string");
  s.id = id.get<std::string>();
  const json& span = require(j, "span", field);
  if (!span.is_array()) throw SpecParseError(field + ".span", "expected an array");
  for (std::size_t i = 0; i < span.size(); ++i) s.span.push_back(read_span_entry(span[i], at(field + ".span", i)));
  if (j.contains("component")) {
    if (!j.at("component").is_boolean()) throw SpecParseError(field + ".component", "expected a boolean");
    s.component = j.at("component").get<bool>();
  }
  s.mult = j.contains("mult") ? get_count(j.at("mult"), field + ".mult") : 1;
  return s;
}

// ---- writing -------------------------------------------------------------------------------

json write_point(const PointSpec& p) {
  json j{{"kind", kind_name(p.kind)}, {"mult", p.mult}};
  switch (p.kind) {
    case PointSpec::Kind::Coordinate: j["index"] = p.index; break;
    case PointSpec::Kind::OnSubspace: j["subspace"] = p.subspace; break;
    case PointSpec::Kind::Explicit: j["coords"] = p.coords; break;
    case PointSpec::Kind::Generic: break;
  }
  return j;
}

json write_span_entry(const SpanEntry& e) {
  switch (e.kind) {
    case SpanEntry::Kind::Coordinate: return {{"coordinate", e.index}};
    case SpanEntry::Kind::Point: return {{"point", e.index}};
    case SpanEntry::Kind::Generic: return {{"generic", true}};
    case SpanEntry::Kind::Coords: return {{"coords", e.coords}};
  }
  return {};
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

void validate(const SchemeSpec& spec) {
  if (spec.ambient < 1 || spec.ambient > 62) throw SpecParseError("ambient", "expected 1 <= ambient <= 62");
  if (spec.degree < 1) throw SpecParseError("degree", "expected degree >= 1");
  std::map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < spec.subspaces.size(); ++i) {
    const auto& s = spec.subspaces[i];
    const auto field = at("subspaces", i);
    if (s.id.empty()) throw SpecParseError(field + ".id", "empty id");
    if (!ids.emplace(s.id, i).second) throw SpecParseError(field + ".id", "duplicate id '" + s.id + "'");
    if (s.span.empty() || s.span.size() > spec.ambient + 1)
      throw SpecParseError(field + ".span", "need between 1 and " + std::to_string(spec.ambient + 1) + " spanning points");
    for (std::size_t k = 0; k < s.span.size(); ++k) {
      const auto& e = s.span[k];
      const auto ef = at(field + ".span", k);
      if (e.kind == SpanEntry::Kind::Coordinate && e.index > spec.ambient)
        throw SpecParseError(ef + ".coordinate", "index exceeds ambient " + std::to_string(spec.ambient));
      if (e.kind == SpanEntry::Kind::Point && e.index >= spec.points.size())
        throw SpecParseError(ef + ".point", "no point with index " + std::to_string(e.index));
      if (e.kind == SpanEntry::Kind::Coords) check_coords(e.coords, spec.ambient, ef + ".coords");
    }
  }
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    const auto& p = spec.points[i];
    const auto field = at("points", i);
    if (p.kind == PointSpec::Kind::Coordinate && p.index > spec.ambient)
      throw SpecParseError(field + ".index", "index exceeds ambient " + std::to_string(spec.ambient));
    if (p.kind == PointSpec::Kind::Explicit) check_coords(p.coords, spec.ambient, field + ".coords");
    if (p.kind == PointSpec::Kind::OnSubspace && !ids.count(p.subspace))
      throw SpecParseError(field + ".subspace", "unknown subspace '" + p.subspace + "'");
  }
  // Reference cycles: a point on subspace S that S's span itself needs.
  std::vector<int> state(spec.points.size() + spec.subspaces.size(), 0);
  std::function<void(std::size_t)> visit = [&](std::size_t node) {
    if (state[node] == 2) return;
    if (state[node] == 1) throw SpecParseError("subspaces", "cyclic point/subspace references");
    state[node] = 1;
    if (node < spec.points.size()) {
      const auto& p = spec.points[node];
      if (p.kind == PointSpec::Kind::OnSubspace) visit(spec.points.size() + ids.at(p.subspace));
    } else {
      for (const auto& e : spec.subspaces[node - spec.points.size()].span)
        if (e.kind == SpanEntry::Kind::Point) visit(e.index);
    }
    state[node] = 2;
  };
  for (std::size_t i = 0; i < state.size(); ++i) visit(i);
}

std::string to_json(const SchemeSpec& spec) {
  json pts = json::array(), subs = json::array();
  for (const auto& p : spec.points) pts.push_back(write_point(p));
  for (const auto& s : spec.subspaces) {
    json span = json::array();
    for (const auto& e : s.span) span.push_back(write_span_entry(e));
    subs.push_back({{"id", s.id}, {"span", span}, {"component", s.component}, {"mult", s.mult}});
  }
  const json j{{"ambient", spec.ambient}, {"degree", spec.degree}, {"points", pts}, {"subspaces", subs}};
  return j.dump(2) + "\n";
}

SchemeSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw SpecParseError("", msg, line, col);
  }
  allow_keys(j, {"ambient", "degree", "points", "subspaces"}, "spec");
  SchemeSpec spec;
  spec.ambient = get_count(require(j, "ambient", "spec"), "ambient");
  spec.degree = get_count(require(j, "degree", "spec"), "degree");
  if (j.contains("points")) {
    const json& pts = j.at("points");
    if (!pts.is_array()) throw SpecParseError("points", "expected an array");
    for (std::size_t i = 0; i < pts.size(); ++i) spec.points.push_back(read_point(pts[i], at("points", i)));
  }
  if (j.contains("subspaces")) {
    const json& subs = j.at("subspaces");
    if (!subs.is_array()) throw SpecParseError("subspaces", "expected an array");
    for (std::size_t i = 0; i < subs.size(); ++i) spec.subspaces.push_back(read_subspace(subs[i], at("subspaces", i)));
  }
  validate(spec);
  return spec;
}

SchemeSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

Instance instantiate(const SchemeSpec& spec, const PrimeField& f, la::Rng& rng) {
  validate(spec);
  const unsigned n = spec.ambient;
  // Independent substreams per object, so adding a component never moves the others.
  const la::Rng point_rng = rng.split(0), subspace_rng = rng.split(1);
  std::map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < spec.subspaces.size(); ++i) ids.emplace(spec.subspaces[i].id, i);

  std::vector<std::optional<std::vector<Elem>>> pts(spec.points.size());
  std::vector<std::optional<PrimeMatrix>> subs(spec.subspaces.size());
  auto unit = [&](unsigned i) {
    std::vector<Elem> e(n + 1, 0);
    e[i] = 1;
    return e;
  };
  auto reduce = [&](const std::vector<std::int64_t>& c) {
    std::vector<Elem> v;
    for (auto x : c) v.push_back(f.from_signed(x));
    if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }))
      throw DegenerateSpan("explicit coordinates vanish modulo " + std::to_string(f.modulus()));
    return v;
  };

  std::function<const PrimeMatrix&(std::size_t)> subspace;
  std::function<const std::vector<Elem>&(std::size_t)> point = [&](std::size_t j) -> const std::vector<Elem>& {
    if (pts[j]) return *pts[j];
    const auto& p = spec.points[j];
    la::Rng r = point_rng.split(j);
    std::vector<Elem> v;
    switch (p.kind) {
      case PointSpec::Kind::Coordinate: v = unit(p.index); break;
      case PointSpec::Kind::Explicit: v = reduce(p.coords); break;
      case PointSpec::Kind::Generic: v = la::random_projective_point(n, f, r); break;
      case PointSpec::Kind::OnSubspace: {
        const PrimeMatrix& span = subspace(ids.at(p.subspace));
        do {
          v.assign(n + 1, 0);
          for (std::size_t i = 0; i < span.rows(); ++i) {
            const Elem c = r.uniform(f);
            for (std::size_t k = 0; k <= n; ++k) v[k] = f.add(v[k], f.mul(c, span(i, k)));
          }
        } while (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }));
        break;
      }
    }
    la::normalize_projective(v, f);
    pts[j] = std::move(v);
    return *pts[j];
  };
  subspace = [&](std::size_t i) -> const PrimeMatrix& {
    if (subs[i]) return *subs[i];
    const auto& s = spec.subspaces[i];
    la::Rng r = subspace_rng.split(i);
    PrimeMatrix m(f, n + 1);
    for (const auto& e : s.span) {
      switch (e.kind) {
        case SpanEntry::Kind::Coordinate: m.append_row(unit(e.index)); break;
        case SpanEntry::Kind::Point: m.append_row(point(e.index)); break;
        case SpanEntry::Kind::Generic: m.append_row(la::random_projective_point(n, f, r)); break;
        case SpanEntry::Kind::Coords: m.append_row(reduce(e.coords)); break;
      }
    }
    if (la::rank(m) != m.rows())
      throw DegenerateSpan("subspace '" + s.id + "': spanning points are dependent");
    subs[i] = std::move(m);
    return *subs[i];
  };

  Instance inst{Scheme(f, n), {}, {}};
  for (std::size_t j = 0; j < spec.points.size(); ++j) inst.points.push_back(point(j));
  for (std::size_t i = 0; i < spec.subspaces.size(); ++i) inst.registry.emplace(spec.subspaces[i].id, subspace(i));
  for (std::size_t j = 0; j < spec.points.size(); ++j) inst.scheme.add_point(inst.points[j], spec.points[j].mult);
  for (std::size_t i = 0; i < spec.subspaces.size(); ++i)
    if (spec.subspaces[i].component) inst.scheme.add_linear(*subs[i], spec.subspaces[i].mult);
  return inst;
}

SampledDim ideal_dim(const SchemeSpec& spec, unsigned t, const la::SamplingConfig& cfg) {
  la::validate(cfg);
  validate(spec);
  check_degree_envelope(spec.ambient, t);
  const std::size_t cells = cfg.primes.size() * cfg.trials;
  std::vector<std::size_t> dims(cells), rows(cells), cols(cells), ranks(cells);
  la::parallel_for(cells, [&](std::size_t idx) {
    const auto p = cfg.primes[idx / cfg.trials];
    const PrimeField f(p);
    la::Rng rng = la::cell_rng(cfg.seed, p, idx % cfg.trials);
    const auto inst = instantiate(spec, f, rng);
    const auto sys = conditions(inst.scheme, t);
    ranks[idx] = la::rank(sys.matrix);
    dims[idx] = sys.columns - ranks[idx];
    rows[idx] = sys.matrix.rows();
    cols[idx] = sys.columns;
  });
  SampledDim out;
  out.cells = dims;
  out.value = *std::min_element(dims.begin(), dims.end());
  out.monomials = static_cast<std::size_t>(binomial(std::uint64_t{t} + spec.ambient, spec.ambient));
  out.columns = cols[0];
  out.rows = rows[0];
  out.rank = ranks[0];
  return out;
}

SchemeSpec segre_to_fatpoints(unsigned n, unsigned s) {
  if (n < 2) throw GuardViolation("n >= 2", "got n = " + std::to_string(n));
  SchemeSpec spec;
  spec.ambient = n;
  spec.degree = n;
  for (unsigned i = 1; i <= n; ++i) spec.coordinate(i, n - 1);
  spec.generic(2, s);
  return spec;
}

}  // namespace segsec::fat
