#include "finalg/io.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace finalg {

using nlohmann::json;

std::string kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Monoid: return "monoid";
    case AlgebraKind::Group: return "group";
    case AlgebraKind::Lie: return "lie";
    case AlgebraKind::PointedSet: return "pointed_set";
  }
  return "?";
}

bool AlgebraDoc::operator==(const AlgebraDoc& o) const {
  if (kind != o.kind || name != o.name) return false;
  if (monoid != o.monoid || lie != o.lie) return false;
  if (pointed_set.has_value() != o.pointed_set.has_value()) return false;
  if (pointed_set &&
      (pointed_set->size != o.pointed_set->size ||
       pointed_set->basepoint != o.pointed_set->basepoint ||
       pointed_set->labels != o.pointed_set->labels))
    return false;
  if (presentation.has_value() != o.presentation.has_value()) return false;
  if (presentation && (presentation->generators != o.presentation->generators ||
                       presentation->relators != o.presentation->relators))
    return false;
  return true;
}

namespace {

Rat parse_rational(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

json lie_to_json(const LieAlgebra& l) {
  json brackets = json::array();
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j) {
      const Vec& v = l.basis_bracket(i, j);
      if (is_zero(v)) continue;
      json coords = json::array();
      for (const auto& r : v) coords.push_back(r.str());
      brackets.push_back(json{{"pair", {i, j}}, {"value", coords}});
    }
  return brackets;
}

LieAlgebra lie_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  if (dim <= 0 || dim > 64) throw ParseError("lie dim out of range");
  std::vector<Vec> c(static_cast<size_t>(dim) * dim, zero_vec(dim));
  std::vector<std::vector<char>> given(dim, std::vector<char>(dim, 0));
  for (const auto& entry : j.value("bracket", json::array())) {
    auto pair = entry.at("pair");
    int a = pair.at(0).get<int>();
    int b = pair.at(1).get<int>();
    if (a < 0 || b < 0 || a >= dim || b >= dim || a == b)
      throw ParseError("bad bracket pair indices");
    Vec v = zero_vec(dim);
    auto coords = entry.at("value");
    if (coords.size() != static_cast<size_t>(dim))
      throw ParseError("bracket value length differs from dim");
    for (int t = 0; t < dim; ++t) v[t] = parse_rational(coords.at(t).get<std::string>());
    Vec neg = scale(-1, v);
    if (given[a][b] && (c[static_cast<size_t>(a) * dim + b] != v))
      throw ParseError("conflicting bracket entries");
    c[static_cast<size_t>(a) * dim + b] = v;
    c[static_cast<size_t>(b) * dim + a] = std::move(neg);
    given[a][b] = given[b][a] = 1;
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return validate_lie(dim, std::move(c), std::move(labels));
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& r : j.at("relators"))
    p.relators.push_back(parse_relator(r.get<std::string>(), p.generators));
  return p;
}

json presentation_to_json(const Presentation& p) {
  json rel = json::array();
  for (const auto& r : p.relators) {
    std::string w;
    for (int s : r) {
      if (!w.empty()) w += ' ';
      w += p.generators[std::abs(s) - 1];
      if (s < 0) w += "^-1";
    }
    rel.push_back(w);
  }
  return json{{"generators", p.generators}, {"relators", rel}};
}

}  // namespace

AlgebraDoc parse_algebra_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  try {
    AlgebraDoc doc;
    doc.name = j.value("name", "");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "monoid" || kind == "group") {
      doc.kind = kind == "group" ? AlgebraKind::Group : AlgebraKind::Monoid;
      if (j.contains("presentation"))
        doc.presentation = presentation_from_json(j.at("presentation"));
      if (j.contains("table")) {
        auto rows = j.at("table").get<std::vector<std::vector<int>>>();
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        int identity = j.at("identity").get<int>();
        doc.monoid = validate_monoid(rows, identity, std::move(labels));
        if (j.contains("size") && j.at("size").get<int>() != doc.monoid->size)
          throw ParseError("size field disagrees with the table");
      } else if (doc.presentation) {
        if (doc.kind != AlgebraKind::Group)
          throw ParseError("only group presentations can be instantiated");
        doc.monoid = group_from_presentation(*doc.presentation);
      } else {
        throw ParseError("monoid document needs a table or a presentation");
      }
      if (doc.kind == AlgebraKind::Group) {
        GroupCheck gc = as_group(*doc.monoid);
        if (!gc.ok())
          throw ParseError("kind is group but element " + doc.monoid->label(gc.non_invertible) +
                           " has no inverse");
        doc.group = std::move(gc.group);
      }
    } else if (kind == "lie") {
      doc.kind = AlgebraKind::Lie;
      doc.lie = lie_from_json(j);
    } else if (kind == "pointed_set") {
      doc.kind = AlgebraKind::PointedSet;
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      doc.pointed_set = validate_pointed_set(j.at("size").get<int>(),
                                             j.at("basepoint").get<int>(), std::move(labels));
    } else {
      throw ParseError("unknown kind '" + kind + "'");
    }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
}

AlgebraDoc parse_algebra_file(const std::string& path) {
  return parse_algebra_text(read_file(path));
}

std::string serialize_algebra(const AlgebraDoc& doc) {
  json j;
  j["kind"] = kind_name(doc.kind);
  if (!doc.name.empty()) j["name"] = doc.name;
  switch (doc.kind) {
    case AlgebraKind::Monoid:
    case AlgebraKind::Group: {
      const FiniteMonoid& m = *doc.monoid;
      j["size"] = m.size;
      j["identity"] = m.identity;
      json rows = json::array();
      for (int i = 0; i < m.size; ++i) {
        json row = json::array();
        for (int k = 0; k < m.size; ++k) row.push_back(m.at(i, k));
        rows.push_back(std::move(row));
      }
      j["table"] = std::move(rows);
      if (!m.labels.empty()) j["labels"] = m.labels;
      if (doc.presentation) j["presentation"] = presentation_to_json(*doc.presentation);
      break;
    }
    case AlgebraKind::Lie:
      j["dim"] = doc.lie->dim;
      j["bracket"] = lie_to_json(*doc.lie);
      if (!doc.lie->labels.empty()) j["labels"] = doc.lie->labels;
      break;
    case AlgebraKind::PointedSet:
      j["size"] = doc.pointed_set->size;
      j["basepoint"] = doc.pointed_set->basepoint;
      if (!doc.pointed_set->labels.empty()) j["labels"] = doc.pointed_set->labels;
      break;
  }
  return j.dump(2) + "\n";
}

AlgebraDoc doc_from_monoid(std::string name, FiniteMonoid m) {
  AlgebraDoc doc;
  doc.name = std::move(name);
  GroupCheck gc = as_group(m);
  doc.kind = gc.ok() ? AlgebraKind::Group : AlgebraKind::Monoid;
  doc.monoid = std::move(m);
  if (gc.ok()) doc.group = std::move(gc.group);
  return doc;
}

AlgebraDoc doc_from_lie(std::string name, LieAlgebra l) {
  AlgebraDoc doc;
  doc.kind = AlgebraKind::Lie;
  doc.name = std::move(name);
  doc.lie = std::move(l);
  return doc;
}

SplitExtension parse_extension_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  try {
    if (j.at("kind").get<std::string>() != "extension")
      throw ParseError("descriptor kind must be 'extension'");
    auto dir = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
      std::filesystem::path fp(p);
      return fp.is_absolute() ? fp.string() : (dir / fp).string();
    };
    AlgebraDoc middle = parse_algebra_file(resolve(j.at("middle").get<std::string>()));
    AlgebraDoc base = parse_algebra_file(resolve(j.at("base").get<std::string>()));
    if (!middle.monoid || !base.monoid)
      throw ParseError("extension endpoints must be monoid or group documents");
    auto fmap = j.at("f").get<std::vector<int>>();
    auto smap = j.at("s").get<std::vector<int>>();
    MonoidHom f = hom(*middle.monoid, *base.monoid, std::move(fmap));
    MonoidHom s = hom(*base.monoid, *middle.monoid, std::move(smap));
    return make_extension(std::move(f), std::move(s));
  } catch (const json::exception& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const std::string& bytes) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace finalg
