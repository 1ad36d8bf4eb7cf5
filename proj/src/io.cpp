#include "nfold/io.hpp"

#include <fstream>
#include <sstream>

namespace nfold {

namespace {

void require_kind(const Json& j, const char* kind) {
  if (!j.is_object() || j.value("kind", std::string{}) != kind)
    throw UnsupportedInput(std::string("expected a JSON object of kind ") + kind);
}

std::string index_str(const MultiIndex& p) {
  std::string s;
  for (std::size_t a = 0; a < p.size(); ++a) s += (a ? "," : "") + std::to_string(p[a]);
  return s;
}

MultiIndex parse_index(const std::string& s) {
  MultiIndex p;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) p.push_back(std::stoi(part));
  return p;
}

Json ez_json(const Simplex& s) { return Json::array({s.nd_degree(), s.index, s.eta.values()}); }

Simplex ez_from(const Json& j) {
  const int q = j.at(0).get<int>();
  return Simplex{OrdinalMap(q, j.at(2).get<std::vector<int>>()), j.at(1).get<int>()};
}

Json multi_ez_json(const MultiSimplex& s) {
  Json parts = Json::array();
  for (const OrdinalMap& f : s.eta.parts) parts.push_back(f.values());
  return Json::array({s.nd_degree(), s.index, parts});
}

MultiSimplex multi_ez_from(const Json& j) {
  const MultiIndex q = j.at(0).get<MultiIndex>();
  const Json& parts = j.at(2);
  if (parts.size() != q.size()) throw UnsupportedInput("EZ pair with the wrong number of axes");
  MultiOrdinalMap eta;
  for (std::size_t a = 0; a < q.size(); ++a) eta.parts.emplace_back(q[a], parts[a].get<std::vector<int>>());
  return MultiSimplex{eta, j.at(1).get<int>()};
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const FinCat& c) {
  std::vector<int> index(c.num_morphisms(), -1);
  Json objects = Json::array(), morphisms = Json::array(), compose = Json::array();
  for (int a = 0; a < c.num_objects(); ++a) objects.push_back(c.object_label(a));
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    index[f] = static_cast<int>(morphisms.size());
    morphisms.push_back({{"label", c.morphism(f).label}, {"src", c.src(f)}, {"tgt", c.tgt(f)}});
  }
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    for (int g : c.out(c.tgt(f))) {
      auto h = c.compose(g, f);
      if (!h) continue;
      const int hv = c.is_identity(*h) ? -1 - c.src(*h) : index[*h];
      compose.push_back({index[g], index[f], hv});
    }
  }
  std::sort(compose.begin(), compose.end());
  return {{"kind", "category"}, {"objects", objects}, {"morphisms", morphisms}, {"compose", compose}};
}

Cat category_from_json(const Json& j) {
  require_kind(j, "category");
  auto c = std::make_shared<FinCat>();
  for (const auto& o : j.at("objects")) c->add_object(o.get<std::string>());
  std::vector<int> ids;
  for (const auto& m : j.at("morphisms")) {
    const int s = m.at("src").get<int>(), t = m.at("tgt").get<int>();
    if (s < 0 || t < 0 || s >= c->num_objects() || t >= c->num_objects())
      throw UnsupportedInput("morphism endpoint out of range");
    ids.push_back(c->add_morphism(s, t, m.value("label", std::string{})));
  }
  auto resolve = [&](int v) {
    if (v < 0) {
      if (-1 - v >= c->num_objects()) throw UnsupportedInput("identity of an unknown object");
      return c->identity(-1 - v);
    }
    if (v >= static_cast<int>(ids.size())) throw UnsupportedInput("morphism index out of range");
    return ids[v];
  };
  for (const auto& t : j.at("compose")) c->set_compose(resolve(t.at(0)), resolve(t.at(1)), resolve(t.at(2)));
  std::string why;
  if (!c->check(&why)) throw UnsupportedInput("not a category: " + why);
  return c;
}

Json to_json(const FinPoset& p) {
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return {{"kind", "poset"}, {"elements", p.labels}, {"covers", covers}};
}

FinPoset poset_from_json(const Json& j) {
  require_kind(j, "poset");
  auto labels = j.at("elements").get<std::vector<std::string>>();
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) le[a][a] = 1;
  for (const char* field : {"covers", "leq"}) {
    if (!j.contains(field)) continue;
    for (const auto& e : j.at(field)) {
      const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
      if (a < 0 || b < 0 || a >= n || b >= n) throw UnsupportedInput("poset relation out of range");
      le[a][b] = 1;
    }
  }
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      if (le[a][c])
        for (int b = 0; b < n; ++b)
          if (le[c][b]) le[a][b] = 1;
  FinPoset p = FinPoset::from_relation(n, [&](int a, int b) { return le[a][b] != 0; }, labels);
  std::string why;
  if (!p.check(&why)) throw UnsupportedInput("not a partial order: " + why);
  return p;
}

Json to_json(const SimplicialSet& x) {
  Json nondeg = Json::array(), faces = Json::array();
  for (int q = 0; q <= x.dim(); ++q) {
    Json labels = Json::array(), fq = Json::array();
    for (int i = 0; i < x.count(q); ++i) {
      labels.push_back(x.label(q, i));
      Json fs = Json::array();
      if (q > 0)
        for (int j = 0; j <= q; ++j) fs.push_back(ez_json(x.face(q, i, j)));
      fq.push_back(fs);
    }
    nondeg.push_back(labels);
    faces.push_back(fq);
  }
  Json out{{"kind", "simplicial_set"}, {"nondeg", nondeg}, {"faces", faces}};
  if (x.truncated_at()) out["truncated_at"] = *x.truncated_at();
  return out;
}

SSet simplicial_set_from_json(const Json& j) {
  require_kind(j, "simplicial_set");
  const Json& nondeg = j.at("nondeg");
  const Json& faces = j.at("faces");
  if (faces.size() != nondeg.size()) throw UnsupportedInput("nondeg and faces differ in length");
  SimplicialSet::Builder b;
  for (std::size_t q = 0; q < nondeg.size(); ++q)
    for (std::size_t i = 0; i < nondeg[q].size(); ++i) b.add(static_cast<int>(q), {static_cast<int>(i)}, nondeg[q][i]);
  for (std::size_t q = 1; q < nondeg.size(); ++q) {
    if (faces[q].size() != nondeg[q].size()) throw UnsupportedInput("missing faces in degree " + std::to_string(q));
    for (std::size_t i = 0; i < nondeg[q].size(); ++i) {
      std::vector<Simplex> fs;
      for (const auto& f : faces[q][i]) {
        Simplex s = ez_from(f);
        if (s.degree() != static_cast<int>(q) - 1 || s.nd_degree() >= static_cast<int>(q) ||
            s.index >= b.count(s.nd_degree()) || s.index < 0)
          throw UnsupportedInput("bad face of simplex " + std::to_string(i) + " in degree " + std::to_string(q));
        fs.push_back(s);
      }
      if (fs.size() != q + 1) throw UnsupportedInput("a " + std::to_string(q) + "-simplex needs q+1 faces");
      b.set_faces(static_cast<int>(q), static_cast<int>(i), std::move(fs));
    }
  }
  if (j.contains("truncated_at")) b.set_truncated(j.at("truncated_at").get<int>());
  SSet x = b.build();
  std::string why;
  if (!x->check_identities(&why)) throw UnsupportedInput("simplicial identities fail: " + why);
  return x;
}

Json to_json(const MultiSimplicialSet& y) {
  Json cells = Json::object();
  for (const MultiIndex& p : y.degrees()) {
    Json labels = Json::array(), faces = Json::array();
    for (int i = 0; i < y.count(p); ++i) {
      labels.push_back(y.label(p, i));
      Json axes = Json::array();
      for (int a = 0; a < y.n(); ++a) {
        Json fs = Json::array();
        if (p[a] > 0)
          for (int j = 0; j <= p[a]; ++j) fs.push_back(multi_ez_json(y.face(p, i, a, j)));
        axes.push_back(fs);
      }
      faces.push_back(axes);
    }
    cells[index_str(p)] = {{"labels", labels}, {"faces", faces}};
  }
  return {{"kind", "multisimplicial_set"}, {"n", y.n()}, {"extent", y.extent()}, {"cells", cells}};
}

SMSet multisimplicial_set_from_json(const Json& j) {
  require_kind(j, "multisimplicial_set");
  const int n = j.at("n").get<int>();
  if (n < 1) throw UnsupportedInput("n must be positive");
  // std::map keys sort lexicographically; add lower total degree first so faces exist
  std::vector<std::pair<MultiIndex, const Json*>> levels;
  for (const auto& [k, v] : j.at("cells").items()) {
    MultiIndex p = parse_index(k);
    if (static_cast<int>(p.size()) != n) throw UnsupportedInput("cell degree " + k + " has the wrong length");
    levels.emplace_back(p, &v);
  }
  std::sort(levels.begin(), levels.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  MultiSimplicialSet::Builder b(n);
  for (const auto& [p, v] : levels) {
    const Json& labels = v->at("labels");
    for (std::size_t i = 0; i < labels.size(); ++i) b.add(p, {static_cast<int>(i)}, labels[i]);
  }
  for (const auto& [p, v] : levels) {
    const Json& faces = v->at("faces");
    if (faces.size() != v->at("labels").size()) throw UnsupportedInput("missing faces at " + index_str(p));
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (int a = 0; a < n; ++a) {
        std::vector<MultiSimplex> fs;
        for (const auto& f : faces[i].at(a)) {
          MultiSimplex s = multi_ez_from(f);
          if (s.index < 0 || s.index >= b.count(s.nd_degree())) throw UnsupportedInput("face names a missing cell");
          fs.push_back(s);
        }
        if (p[a] > 0 && static_cast<int>(fs.size()) != p[a] + 1) throw UnsupportedInput("wrong number of faces");
        if (p[a] > 0) b.set_faces(p, static_cast<int>(i), a, std::move(fs));
      }
  }
  SMSet y = b.build();
  std::string why;
  if (!y->check_identities(&why)) throw UnsupportedInput("multisimplicial identities fail: " + why);
  return y;
}

Json to_json(const NFoldCategory& d) {
  Json cubes = Json::object();
  for (unsigned eps = 0; eps <= d.full(); ++eps) {
    Json labels = Json::array(), src = Json::array(), tgt = Json::array(), unit = Json::array(),
         compose = Json::array();
    for (int x = 0; x < d.count(eps); ++x) labels.push_back(d.label(eps, x));
    for (int i = 0; i < d.n(); ++i) {
      Json s = Json::array(), t = Json::array(), u = Json::array(), c = Json::array();
      const bool along = eps >> i & 1u;
      for (int x = 0; x < d.count(eps); ++x) {
        s.push_back(along ? d.src(eps, i, x) : -1);
        t.push_back(along ? d.tgt(eps, i, x) : -1);
        u.push_back(along ? -1 : d.unit(eps, i, x));
        if (!along) continue;
        for (int y : d.starting_at(eps, i, d.tgt(eps, i, x)))
          if (auto r = d.compose(eps, i, x, y)) c.push_back({x, y, *r});
      }
      std::sort(c.begin(), c.end());
      src.push_back(s);
      tgt.push_back(t);
      unit.push_back(u);
      compose.push_back(c);
    }
    cubes[eps_str(eps, d.n())] = {{"labels", labels}, {"src", src}, {"tgt", tgt}, {"unit", unit}, {"compose", compose}};
  }
  return {{"kind", "nfold_category"}, {"n", d.n()}, {"cubes", cubes}};
}

NCat nfold_from_json(const Json& j) {
  require_kind(j, "nfold_category");
  const int n = j.at("n").get<int>();
  if (n < 1 || n > 8) throw UnsupportedInput("n out of range");
  auto d = std::make_shared<NFoldCategory>(n);
  const Json& cubes = j.at("cubes");
  auto level = [&](unsigned eps) -> const Json& {
    const std::string k = eps_str(eps, n);
    if (!cubes.contains(k)) throw UnsupportedInput("missing cubes " + k);
    return cubes.at(k);
  };
  for (unsigned eps = 0; eps <= d->full(); ++eps)
    for (const auto& l : level(eps).at("labels")) d->add(eps, l.get<std::string>());
  auto in_range = [&](unsigned eps, int v) {
    if (v < 0 || v >= d->count(eps)) throw UnsupportedInput("cell index out of range at " + eps_str(eps, n));
    return v;
  };
  for (unsigned eps = 0; eps <= d->full(); ++eps) {
    const Json& l = level(eps);
    for (int i = 0; i < n; ++i) {
      const unsigned bit = 1u << i;
      for (int x = 0; x < d->count(eps); ++x) {
        if (eps & bit) {
          d->set_src(eps, i, x, in_range(eps & ~bit, l.at("src").at(i).at(x).get<int>()));
          d->set_tgt(eps, i, x, in_range(eps & ~bit, l.at("tgt").at(i).at(x).get<int>()));
        } else {
          d->set_unit(eps, i, x, in_range(eps | bit, l.at("unit").at(i).at(x).get<int>()));
        }
      }
      if (eps & bit)
        for (const auto& c : l.at("compose").at(i))
          d->set_compose(eps, i, in_range(eps, c.at(0).get<int>()), in_range(eps, c.at(1).get<int>()),
                         in_range(eps, c.at(2).get<int>()));
    }
  }
  d->finalize();
  std::string why;
  if (!d->check(&why)) throw UnsupportedInput("not an n-fold category: " + why);
  return d;
}

Json to_json(const HomologyResult& h) {
  Json out{{"betti", h.betti}, {"torsion", h.torsion}, {"cells", h.cells}};
  if (h.valid_below >= 0) out["valid_below"] = h.valid_below;
  return out;
}

Json to_json(const CheckReport& r, bool timings) {
  Json as = Json::array();
  for (const Assertion& a : r.assertions) {
    Json x{{"name", a.name}, {"ok", a.ok}, {"detail", a.detail}};
    if (timings) x["seconds"] = a.seconds;
    as.push_back(x);
  }
  Json out{{"id", r.id}, {"status", status_str(r.status)}, {"witness", r.witness}, {"assertions", as}};
  if (r.n > 0) out["n"] = r.n;
  if (r.m >= 0) out["m"] = r.m;
  if (r.k >= 0) out["k"] = r.k;
  if (!r.fixture.empty()) out["fixture"] = r.fixture;
  if (timings) out["seconds"] = r.seconds;
  return out;
}

Json to_json(const std::vector<CheckReport>& rs, bool timings) {
  Json checks = Json::array();
  long long passed = 0, failed = 0, skipped = 0;
  for (const CheckReport& r : rs) {
    checks.push_back(to_json(r, timings));
    if (r.status == Status::Pass) ++passed;
    else if (r.status == Status::Fail) ++failed;
    else ++skipped;
  }
  return {{"checks", checks}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UnsupportedInput(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string poset_dot(const FinPoset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=BT;\n";
  for (int a = 0; a < p.size(); ++a) out << "  n" << a << " [label=" << quote(p.labels[a]) << "];\n";
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string sd_dot(const SdPoset& sd, int k) {
  Pieces pc = pieces(sd, k);
  auto cls = [&](int a) -> std::string {
    if (pc.horn[a]) return "horn";
    if (pc.out[a]) return "out";
    if (pc.cen[a]) return "cen";
    return "comp";
  };
  std::ostringstream out;
  out << "digraph " << quote("PSdD" + std::to_string(sd.m) + "_k" + std::to_string(k)) << " {\n  rankdir=BT;\n";
  for (int a = 0; a < sd.poset.size(); ++a) {
    const std::string c = cls(a);
    out << "  n" << a << " [label=" << quote(sd.poset.labels[a]) << ", class=" << quote(c);
    if (c == "horn") out << ", shape=box";
    out << "];\n";
  }
  for (auto [a, b] : sd.poset.covers()) {
    out << "  n" << a << " -> n" << b;
    if (pc.out[a] && pc.out[b]) out << " [class=\"out\", style=solid]";
    else if (pc.cen[a] && pc.cen[b]) out << " [class=\"cen\", style=dotted]";
    else if (pc.comp[a] && pc.comp[b]) out << " [class=\"comp\", style=dotted]";
    else out << " [class=\"across\", style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace nfold
