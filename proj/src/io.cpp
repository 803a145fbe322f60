#include "equihodge/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "equihodge/cyclic.hpp"
#include "equihodge/errors.hpp"
#include "equihodge/hopf.hpp"
#include "equihodge/twisted.hpp"

namespace equihodge {

using nlohmann::json;

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(at(path, key), "missing");
  return *it;
}

const json* optional_field(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ValidationError(path, "expected an integer");
  return j.get<long>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path, "expected an array");
  return j;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ValidationError(path, "expected a string");
  return j.get<std::string>();
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>(), path);
  throw ValidationError(path, "expected a rational written as \"p/q\"");
}

std::vector<Rational> rational_list(const json& j, const std::string& path) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) out.push_back(as_rational(j[i], at(path, i)));
  return out;
}

/// Vertex names, or a count.
std::vector<std::string> name_list(const json& j, const std::string& path, const std::string& prefix) {
  std::vector<std::string> names;
  if (j.is_number_integer()) {
    const long n = j.get<long>();
    if (n < 0) throw ValidationError(path, "must be nonnegative");
    for (long i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) {
    names.push_back(as_string(j[i], at(path, i)));
    if (!seen.insert(names.back()).second) throw ValidationError(at(path, i), "duplicate name " + names.back());
  }
  return names;
}

struct Names {
  std::vector<std::string> list;
  std::map<std::string, int> index;

  explicit Names(std::vector<std::string> names) : list(std::move(names)) {
    for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);
  }
  int resolve(const json& j, const std::string& path) const {
    if (j.is_number_integer()) {
      const long v = j.get<long>();
      if (v < 0 || static_cast<std::size_t>(v) >= list.size())
        throw ValidationError(path, "vertex " + std::to_string(v) + " does not exist");
      return static_cast<int>(v);
    }
    if (j.is_string()) {
      const auto it = index.find(j.get<std::string>());
      if (it == index.end()) throw ValidationError(path, "unknown vertex " + j.get<std::string>());
      return it->second;
    }
    throw ValidationError(path, "expected a vertex index or name");
  }
};

// ---------------------------------------------------------------------------

std::shared_ptr<const GroupModel> parse_group(const json& j) {
  const std::string kind = as_string(require(j, "kind", "group"), "group.kind");
  std::vector<Rational> chi;
  if (const json* c = optional_field(j, "chi")) chi = rational_list(*c, "group.chi");
  if (kind == "trivial") return std::make_shared<GroupModel>(GroupModel::trivial());
  if (kind == "cyclic") {
    const long n = as_int(require(j, "order", "group"), "group.order");
    if (n < 1 || n > 4096) throw ValidationError("group.order", "must be between 1 and 4096");
    auto g = GroupModel::cyclic(static_cast<int>(n));
    if (!chi.empty() && chi.size() != static_cast<std::size_t>(n))
      throw ValidationError("group.chi", "must list one value per element");
    for (std::size_t i = 0; i < chi.size(); ++i)
      if (chi[i] != 1) throw ValidationError(at("group.chi", i), "modular weight of a finite group must be 1");
    return std::make_shared<GroupModel>(std::move(g));
  }
  if (kind == "finite") {
    const json& m = as_array(require(j, "mult", "group"), "group.mult");
    std::vector<std::vector<int>> table;
    for (std::size_t r = 0; r < m.size(); ++r) {
      std::vector<int> row;
      for (std::size_t c = 0; c < as_array(m[r], at("group.mult", r)).size(); ++c)
        row.push_back(static_cast<int>(as_int(m[r][c], at(at("group.mult", r), c))));
      table.push_back(std::move(row));
    }
    return std::make_shared<GroupModel>(GroupModel::finite(std::move(table), std::move(chi)));
  }
  if (kind == "free-abelian") {
    const long rank = as_int(require(j, "rank", "group"), "group.rank");
    if (rank < 1 || rank > 8) throw ValidationError("group.rank", "must be between 1 and 8");
    return std::make_shared<GroupModel>(GroupModel::free_abelian(static_cast<int>(rank), std::move(chi)));
  }
  throw ValidationError("group.kind", "unknown kind " + kind + " (expected trivial, cyclic, finite or free-abelian)");
}

/// Vertex maps for every group element, from either form of the action block.
std::vector<std::vector<int>> parse_action(const json* j, const GroupModel& g, const Names& vertices) {
  const std::size_t order = g.order();
  std::vector<int> identity(vertices.list.size());
  for (std::size_t v = 0; v < identity.size(); ++v) identity[v] = static_cast<int>(v);
  if (!j) {
    if (order == 1) return {identity};
    throw ValidationError("action", "missing");
  }
  auto read_map = [&](const json& m, const std::string& path) {
    std::vector<int> out;
    as_array(m, path);
    if (m.size() != vertices.list.size())
      throw ValidationError(path, "expected " + std::to_string(vertices.list.size()) + " entries");
    for (std::size_t v = 0; v < m.size(); ++v) out.push_back(vertices.resolve(m[v], at(path, v)));
    return out;
  };
  if (const json* maps = optional_field(*j, "vertex_maps")) {
    as_array(*maps, "action.vertex_maps");
    if (maps->size() != order)
      throw ValidationError("action.vertex_maps", "expected one map per group element (" + std::to_string(order) + ")");
    std::vector<std::vector<int>> out;
    for (std::size_t e = 0; e < order; ++e) out.push_back(read_map((*maps)[e], at("action.vertex_maps", e)));
    return out;
  }
  const json& gens = as_array(require(*j, "generators", "action"), "action.generators");
  std::vector<std::pair<std::size_t, std::vector<int>>> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = at("action.generators", i);
    const long e = as_int(require(gens[i], "element", path), at(path, "element"));
    if (e < 0 || static_cast<std::size_t>(e) >= order) throw ValidationError(at(path, "element"), "not a group element");
    generators.emplace_back(static_cast<std::size_t>(e), read_map(require(gens[i], "vertex_map", path), at(path, "vertex_map")));
  }
  // Close up: the map of g s is the map of s after the map of g.
  std::vector<std::optional<std::vector<int>>> maps(order);
  const std::size_t e = static_cast<std::size_t>(g.identity_index());
  maps[e] = identity;
  std::vector<std::size_t> queue{e};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t a = queue[q];
    for (std::size_t k = 0; k < generators.size(); ++k) {
      const auto& [s, phi] = generators[k];
      const auto b = static_cast<std::size_t>(g.mul(static_cast<int>(a), static_cast<int>(s)));
      std::vector<int> composed;
      for (int v : *maps[a]) composed.push_back(phi[static_cast<std::size_t>(v)]);
      if (!maps[b]) {
        maps[b] = composed;
        queue.push_back(b);
      } else if (*maps[b] != composed) {
        throw ValidationError(at("action.generators", k), "the generator maps do not define an action");
      }
    }
  }
  std::vector<std::vector<int>> out;
  for (std::size_t a = 0; a < order; ++a) {
    if (!maps[a]) throw ValidationError("action.generators", "generators do not reach element " + std::to_string(a));
    out.push_back(*maps[a]);
  }
  return out;
}

Simplex parse_finite_simplex(const json& j, const std::string& path, const Names& vertices) {
  Simplex s;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) s.push_back(Vertex(vertices.resolve(j[i], at(path, i))));
  if (s.empty()) throw ValidationError(path, "empty simplex");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ValidationError(path, "repeated vertex");
  return s;
}

Simplex parse_periodic_simplex(const json& j, const std::string& path, const Names& vertices, std::size_t rank) {
  Simplex s;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) {
    const std::string vp = at(path, i);
    const json& pair = as_array(j[i], vp);
    if (pair.size() != 2) throw ValidationError(vp, "expected [vertex, [offset...]]");
    const int id = vertices.resolve(pair[0], at(vp, 0));
    const json& off = as_array(pair[1], at(vp, 1));
    if (off.size() != rank) throw ValidationError(at(vp, 1), "offset must have " + std::to_string(rank) + " entries");
    std::vector<std::int64_t> offset;
    for (std::size_t c = 0; c < off.size(); ++c) offset.push_back(as_int(off[c], at(at(vp, 1), c)));
    s.push_back(Vertex(id, offset));
  }
  if (s.empty()) throw ValidationError(path, "empty simplex");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ValidationError(path, "repeated vertex");
  return s;
}

/// {"default": "...", "values": [{"simplex": ..., "value": "..."}]}
struct ValueBlock {
  Rational default_value;
  std::map<Simplex, Rational> values;
};

template <typename SimplexParser>
ValueBlock parse_value_block(const json& j, const std::string& path, Rational fallback, SimplexParser parse_simplex) {
  ValueBlock out{std::move(fallback), {}};
  if (!j.is_object()) throw ValidationError(path, "expected an object");
  if (const json* d = optional_field(j, "default")) out.default_value = as_rational(*d, at(path, "default"));
  if (const json* v = optional_field(j, "values")) {
    for (std::size_t i = 0; i < as_array(*v, at(path, "values")).size(); ++i) {
      const std::string ip = at(at(path, "values"), i);
      const Simplex s = parse_simplex(require((*v)[i], "simplex", ip), at(ip, "simplex"));
      if (out.values.count(s)) throw ValidationError(at(ip, "simplex"), "listed twice");
      out.values[s] = as_rational(require((*v)[i], "value", ip), at(ip, "value"));
    }
  }
  return out;
}

void check_known_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ValidationError(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ValidationError(at(path, key), "unknown field");
  }
}

}  // namespace

Rational parse_rational(const std::string& text, const std::string& path) {
  const auto slash = text.find('/');
  auto integer = [&](const std::string& part) {
    if (part.empty()) throw ValidationError(path, "malformed rational \"" + text + "\"");
    std::size_t i = part[0] == '-' || part[0] == '+' ? 1 : 0;
    if (i == part.size()) throw ValidationError(path, "malformed rational \"" + text + "\"");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw ValidationError(path, "malformed rational \"" + text + "\"");
    return mpz_class(part[0] == '+' ? part.substr(1) : part);
  };
  const mpz_class num = integer(slash == std::string::npos ? text : text.substr(0, slash));
  const mpz_class den = slash == std::string::npos ? mpz_class(1) : integer(text.substr(slash + 1));
  if (den == 0) throw ValidationError(path, "zero denominator in \"" + text + "\"");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Problem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("", std::string("not valid JSON: ") + e.what());
  }
  check_known_keys(doc, "", {"name", "description", "group", "space", "action", "algebra", "cutoff", "weight", "metric"});
  Problem p;
  p.fingerprint = fnv1a64(text);
  if (const json* n = optional_field(doc, "name")) p.name = as_string(*n, "name");
  p.group = parse_group(require(doc, "group", ""));

  const json& space = require(doc, "space", "");
  p.space_type = as_string(require(space, "type", "space"), "space.type");
  const json* metric_block = optional_field(doc, "metric");
  std::optional<Names> vertices;

  if (p.space_type == "simplicial" || p.space_type == "finite-set") {
    if (!p.group->is_finite())
      throw ValidationError("group.kind", "a " + p.space_type + " space needs a finite group (use periodic-simplicial)");
    const bool set = p.space_type == "finite-set";
    if (set)
      check_known_keys(space, "space", {"type", "points"});
    else
      check_known_keys(space, "space", {"type", "vertices", "simplices"});
    vertices.emplace(name_list(require(space, set ? "points" : "vertices", "space"),
                               set ? "space.points" : "space.vertices", set ? "p" : "v"));
    if (vertices->list.empty()) throw ValidationError(set ? "space.points" : "space.vertices", "empty");
    std::map<Simplex, std::pair<std::size_t, std::size_t>> position;
    SimplicialGComplex::FiniteSpec spec;
    spec.vertex_count = vertices->list.size();
    spec.vertex_names = vertices->list;
    spec.simplices.emplace_back();
    for (std::size_t v = 0; v < spec.vertex_count; ++v) {
      spec.simplices[0].push_back({static_cast<int>(v)});
      position[Simplex{Vertex(static_cast<int>(v))}] = {0, v};
    }
    if (!set) {
      const json& list = as_array(require(space, "simplices", "space"), "space.simplices");
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = at("space.simplices", i);
        const Simplex s = parse_finite_simplex(list[i], path, *vertices);
        if (s.size() == 1) continue;
        if (position.count(s)) throw ValidationError(path, "listed twice");
        const std::size_t dim = s.size() - 1;
        if (spec.simplices.size() <= dim) spec.simplices.resize(dim + 1);
        std::vector<int> ids;
        for (const Vertex& v : s) ids.push_back(v.id);
        position[s] = {dim, spec.simplices[dim].size()};
        spec.simplices[dim].push_back(ids);
      }
      for (std::size_t d = 1; d < spec.simplices.size(); ++d)
        if (spec.simplices[d].empty())
          throw ValidationError("space.simplices", "no simplices of dimension " + std::to_string(d));
    }
    spec.vertex_maps = parse_action(optional_field(doc, "action"), *p.group, *vertices);
    if (metric_block) {
      const ValueBlock m = parse_value_block(*metric_block, "metric", 1, [&](const json& j, const std::string& path) {
        return parse_finite_simplex(j, path, *vertices);
      });
      for (std::size_t d = 0; d < spec.simplices.size(); ++d) spec.metric.emplace_back(spec.simplices[d].size(), m.default_value);
      for (const auto& [s, v] : m.values) {
        const auto it = position.find(s);
        if (it == position.end()) throw ValidationError("metric.values", describe(s) + " is not a simplex of the space");
        spec.metric[it->second.first][it->second.second] = v;
      }
    }
    p.complex = std::make_shared<SimplicialGComplex>(SimplicialGComplex::finite(p.group, std::move(spec)));
  } else if (p.space_type == "periodic-simplicial") {
    if (p.group->is_finite()) throw ValidationError("group.kind", "a periodic space needs a free-abelian group");
    check_known_keys(space, "space", {"type", "vertex_orbits", "simplices"});
    if (optional_field(doc, "action")) throw ValidationError("action", "a periodic space is acted on by translation only");
    vertices.emplace(name_list(require(space, "vertex_orbits", "space"), "space.vertex_orbits", "v"));
    if (vertices->list.empty()) throw ValidationError("space.vertex_orbits", "empty");
    const std::size_t rank = static_cast<std::size_t>(p.group->rank());
    SimplicialGComplex::PeriodicSpec spec;
    spec.vertex_orbits = vertices->list.size();
    spec.vertex_names = vertices->list;
    spec.simplices.emplace_back();
    for (std::size_t v = 0; v < spec.vertex_orbits; ++v)
      spec.simplices[0].push_back({Vertex(static_cast<int>(v), std::vector<std::int64_t>(rank, 0))});
    const json& list = as_array(require(space, "simplices", "space"), "space.simplices");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = at("space.simplices", i);
      const Simplex s = parse_periodic_simplex(list[i], path, *vertices, rank);
      if (s.size() == 1) continue;
      const std::size_t dim = s.size() - 1;
      if (spec.simplices.size() <= dim) spec.simplices.resize(dim + 1);
      spec.simplices[dim].push_back(s);
    }
    auto parse_simplex = [&](const json& j, const std::string& path) {
      return parse_periodic_simplex(j, path, *vertices, rank);
    };
    auto complex = SimplicialGComplex::periodic(p.group, spec);
    if (metric_block) {
      const ValueBlock m = parse_value_block(*metric_block, "metric", 1, parse_simplex);
      for (int d = 0; d <= complex.dimension(); ++d) spec.metric.emplace_back(complex.orbits(d).size(), m.default_value);
      std::map<std::pair<std::size_t, std::size_t>, Rational> seen;
      for (const auto& [s, v] : m.values) {
        if (!complex.contains(s)) throw ValidationError("metric.values", describe(s) + " is not a simplex of the space");
        const std::size_t o = complex.orbit_of(s).orbit;
        const auto key = std::make_pair(s.size() - 1, o);
        if (seen.count(key) && seen[key] != v)
          throw ValidationError("metric.values", "metric is not invariant on the orbit of " + describe(s));
        seen[key] = v;
        spec.metric[s.size() - 1][o] = v;
      }
      complex = SimplicialGComplex::periodic(p.group, spec);
    }
    p.complex = std::make_shared<SimplicialGComplex>(std::move(complex));
  } else {
    throw ValidationError("space.type", "unknown type " + p.space_type +
                                            " (expected simplicial, periodic-simplicial or finite-set)");
  }

  auto parse_simplex = [&](const json& j, const std::string& path) {
    return p.complex->is_periodic() ? parse_periodic_simplex(j, path, *vertices, static_cast<std::size_t>(p.group->rank()))
                                    : parse_finite_simplex(j, path, *vertices);
  };

  if (const json* a = optional_field(doc, "algebra")) {
    p.algebra_type = as_string(require(*a, "type", "algebra"), "algebra.type");
    if (p.algebra_type == "functions") {
      check_known_keys(*a, "algebra", {"type"});
      if (p.complex->is_periodic())
        throw ValidationError("algebra.type", "functions on a periodic vertex set are infinite-dimensional");
      p.algebra = std::make_shared<GradedAlgebra>(vertex_function_algebra(*p.complex));
    } else if (p.algebra_type == "cochain") {
      check_known_keys(*a, "algebra", {"type"});
      if (p.complex->is_periodic()) throw ValidationError("algebra.type", "cochains on a periodic space are infinite-dimensional");
      p.algebra = std::make_shared<GradedAlgebra>(cochain_algebra(*p.complex));
    } else if (p.algebra_type == "exterior") {
      check_known_keys(*a, "algebra", {"type", "generators", "generator_maps"});
      const long n = as_int(require(*a, "generators", "algebra"), "algebra.generators");
      if (n < 0 || n > 12) throw ValidationError("algebra.generators", "must be between 0 and 12");
      const json& maps = as_array(require(*a, "generator_maps", "algebra"), "algebra.generator_maps");
      std::vector<std::vector<int>> gm;
      for (std::size_t i = 0; i < maps.size(); ++i) {
        std::vector<int> row;
        for (std::size_t c = 0; c < as_array(maps[i], at("algebra.generator_maps", i)).size(); ++c)
          row.push_back(static_cast<int>(as_int(maps[i][c], at(at("algebra.generator_maps", i), c))));
        gm.push_back(std::move(row));
      }
      try {
        p.algebra = std::make_shared<GradedAlgebra>(build_exterior_algebra(p.group, static_cast<std::size_t>(n), gm));
      } catch (const ValidationError& e) {
        throw ValidationError("algebra.generator_maps", e.what());
      } catch (const std::invalid_argument& e) {
        throw ValidationError("algebra.generator_maps", e.what());
      }
    } else {
      throw ValidationError("algebra.type", "unknown type " + p.algebra_type + " (expected functions, exterior or cochain)");
    }
  }

  if (const json* c = optional_field(doc, "cutoff")) {
    const ValueBlock b = parse_value_block(*c, "cutoff", p.complex->is_periodic() ? Rational(0) : Rational(1), parse_simplex);
    Cutoff f;
    f.default_value = b.default_value;
    f.values = b.values;
    for (const auto& [s, v] : f.values) {
      if (!p.complex->contains(s)) throw ValidationError("cutoff.values", describe(s) + " is not a simplex of the space");
      if (sgn(v) < 0) throw ValidationError("cutoff.values", "negative value on " + describe(s));
    }
    if (sgn(f.default_value) < 0) throw ValidationError("cutoff.default", "must be nonnegative");
    if (p.complex->is_periodic() && sgn(f.default_value) != 0)
      throw ValidationError("cutoff.default", "must be 0 on a periodic space (finite support)");
    p.cutoff = std::move(f);
  }
  if (const json* w = optional_field(doc, "weight")) {
    const ValueBlock b = parse_value_block(*w, "weight", 1, parse_simplex);
    if (sgn(b.default_value) <= 0) throw ValidationError("weight.default", "must be positive");
    p.weight = b.values;
    p.weight_default = b.default_value;
    TwistWeight::from_simplices(*p.complex, *p.weight, p.weight_default);  // validates invariance
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-axioms", "cyclic", "betti", "hodge", "euler", "duality", "all"};
  return names;
}

namespace {

Report declined(const std::string& title, const std::string& reason) {
  Report r;
  r.title = title;
  r.decline(title, reason);
  return r;
}

Cutoff cutoff_of(const Problem& p) {
  if (p.cutoff) return *p.cutoff;
  if (p.complex->is_periodic()) throw ValidationError("cutoff", "a periodic space needs a cutoff block");
  return Cutoff::constant(1);
}

TwistWeight weight_of(const Problem& p) {
  if (p.weight) return TwistWeight::from_simplices(*p.complex, *p.weight, p.weight_default);
  return TwistWeight::from_cutoff(*p.complex, cutoff_of(p));
}

std::vector<std::pair<std::string, std::shared_ptr<const GradedAlgebra>>> axiom_algebras(const Problem& p) {
  if (p.algebra) return {{p.algebra_type, p.algebra}};
  if (p.space_type == "finite-set")
    return {{"functions", std::make_shared<GradedAlgebra>(vertex_function_algebra(*p.complex))}};
  return {{"functions", std::make_shared<GradedAlgebra>(vertex_function_algebra(*p.complex))},
          {"cochain", std::make_shared<GradedAlgebra>(cochain_algebra(*p.complex))}};
}

std::vector<Report> run_section(const std::string& command, const Problem& p, const RunOptions& o) {
  if (command == "betti") {
    Report r = verify_complex(*p.complex);
    r.title = "betti";
    return {r};
  }
  if (command == "check-axioms") {
    if (p.complex->is_periodic() && !p.algebra)
      return {declined("check-axioms", "no finite-dimensional coefficient algebra on a periodic space")};
    std::vector<Report> out;
    for (const auto& [name, b] : axiom_algebras(p)) {
      Report r;
      r.title = "check-axioms[" + name + "]";
      r.merge(verify_cdga_axioms(*b), "algebra.");
      r.merge(check_hopf_axioms(HopfAlgebroid(b)), "hopf.");
      out.push_back(std::move(r));
    }
    return out;
  }
  if (command == "cyclic") {
    if (!p.group->is_finite()) return {declined("cyclic", "cochains on G^n need a finite group")};
    std::shared_ptr<const GradedAlgebra> base = p.algebra;
    std::string name = p.algebra_type;
    if (!base) {
      name = p.space_type == "finite-set" ? "functions" : "cochain";
      base = std::make_shared<GradedAlgebra>(name == "functions" ? vertex_function_algebra(*p.complex)
                                                                 : cochain_algebra(*p.complex));
    }
    const std::size_t max_degree = o.max_degree.value_or(4);
    Report decomposition =
        verify_hopf_cyclic_decomposition(base, max_degree, name == "cochain" ? p.complex.get() : nullptr);
    decomposition.fact("coefficients", name);
    CyclicStructureOptions so;
    so.max_n = std::min<std::size_t>(max_degree, 4);
    so.coherence_max_n = std::min<std::size_t>(so.max_n, 3);
    return {decomposition, verify_cyclic_structure(base, so)};
  }
  if (command == "hodge") {
    HodgeOptions ho;
    ho.strict_cutoff = o.strict_cutoff;
    return {verify_hodge(*p.complex, cutoff_of(p), ho)};
  }
  if (command == "euler") {
    if (o.strict_cutoff) require_covering(*p.complex, cutoff_of(p), true);
    return {euler_index_sweep(*p.complex, weight_of(p), o.k_list, cutoff_of(p))};
  }
  if (command == "duality") return {duality_check_k1(*p.complex, weight_of(p))};
  throw ValidationError("command", "unknown command " + command);
}

}  // namespace

std::vector<Report> run_command(const std::string& command, const Problem& problem, const RunOptions& options) {
  std::vector<std::string> sections{command};
  if (command == "all") sections = {"betti", "check-axioms", "cyclic", "hodge", "euler", "duality"};
  std::vector<Report> out;
  for (const auto& s : sections) {
    try {
      for (auto& r : run_section(s, problem, options)) out.push_back(std::move(r));
    } catch (const UnsupportedError& e) {
      out.push_back(declined(s, e.what()));
    } catch (const MathError& e) {
      Report r;
      r.title = s;
      r.check("internal-consistency", false, e.what());
      out.push_back(std::move(r));
    }
  }
  return out;
}

int exit_code(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return 2;
  return 0;
}

namespace {

std::string section_status(const Report& r) {
  if (!r.passed()) return "fail";
  bool any_pass = false, any_declined = false;
  for (const auto& c : r.checks) {
    any_pass = any_pass || c.status == CheckStatus::pass;
    any_declined = any_declined || c.status == CheckStatus::declined;
  }
  return any_declined && !any_pass ? "declined" : "pass";
}

std::string clean(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::string render(const std::string& command, const Problem& problem, const std::vector<Report>& reports,
                   OutputFormat format, std::optional<double> timing_ms) {
  const std::string status = exit_code(reports) == 0 ? "pass" : "fail";
  if (format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["format"] = "equihodge-report";
    doc["version"] = 1;
    doc["command"] = command;
    doc["fixture"] = {{"name", problem.name}, {"fnv1a64", problem.fingerprint}};
    doc["status"] = status;
    auto sections = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json s;
      s["title"] = r.title;
      s["status"] = section_status(r);
      auto checks = nlohmann::ordered_json::array();
      for (const auto& c : r.checks) {
        nlohmann::ordered_json cj{{"name", c.name}, {"status", to_string(c.status)}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
      }
      s["checks"] = std::move(checks);
      auto tables = nlohmann::ordered_json::array();
      for (const auto& [name, values] : r.tables) {
        std::vector<std::size_t> degrees(values.size());
        for (std::size_t i = 0; i < degrees.size(); ++i) degrees[i] = i;
        tables.push_back({{"name", name}, {"degrees", degrees}, {"values", values}});
      }
      s["tables"] = std::move(tables);
      nlohmann::ordered_json facts = nlohmann::ordered_json::object();
      for (const auto& [name, value] : r.facts) facts[name] = value;
      s["facts"] = std::move(facts);
      sections.push_back(std::move(s));
    }
    doc["sections"] = std::move(sections);
    if (timing_ms) doc["timing_ms"] = *timing_ms;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "format\tequihodge-report\t1\n";
  os << "command\t" << command << "\n";
  os << "fixture\t" << clean(problem.name) << "\t" << problem.fingerprint << "\n";
  os << "status\t" << status << "\n";
  for (const auto& r : reports) {
    os << "section\t" << r.title << "\t" << section_status(r) << "\n";
    for (const auto& c : r.checks)
      os << "check\t" << r.title << "\t" << c.name << "\t" << to_string(c.status) << "\t" << clean(c.detail) << "\n";
    for (const auto& [name, values] : r.tables) {
      os << "degrees\t" << r.title << "\t" << name;
      for (std::size_t i = 0; i < values.size(); ++i) os << "\t" << i;
      os << "\nvalues\t" << r.title << "\t" << name;
      for (long long v : values) os << "\t" << v;
      os << "\n";
    }
    for (const auto& [name, value] : r.facts) os << "fact\t" << r.title << "\t" << name << "\t" << clean(value) << "\n";
  }
  if (timing_ms) os << "timing_ms\t" << *timing_ms << "\n";
  return os.str();
}

}  // namespace equihodge
