#include "sc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sc {

using nlohmann::json;

namespace {

// json's default object representation keeps keys sorted, so dumping with a
// fixed indent yields deterministic bytes.
std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON document");
  return doc;
}

void check_header(const json& doc, const std::string& kind, bool format_required) {
  if (!doc.is_object()) throw std::invalid_argument("document is not a JSON object");
  if (doc.contains("format")) {
    if (!doc["format"].is_string() || doc["format"] != kFormatVersion)
      throw std::invalid_argument("unknown format version");
  } else if (format_required) {
    throw std::invalid_argument("missing format version");
  }
  if (!doc.contains("kind") || doc["kind"] != kind)
    throw std::invalid_argument("document kind is not \"" + kind + "\"");
}

json complex_to_json(const Complex& k) {
  json doc;
  doc["format"] = kFormatVersion;
  doc["kind"] = "complex";
  doc["vertices"] = k.labels();
  doc["maximal_simplices"] = k.maximal_simplices();
  return doc;
}

Complex complex_from_json(const json& doc) {
  check_header(doc, "complex", true);
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw std::invalid_argument("complex document needs a \"vertices\" array");
  if (!doc.contains("maximal_simplices") || !doc["maximal_simplices"].is_array())
    throw std::invalid_argument("complex document needs a \"maximal_simplices\" array");
  std::vector<std::string> labels;
  for (const auto& l : doc["vertices"]) {
    if (!l.is_string()) throw std::invalid_argument("vertex labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<Simplex> gens;
  for (const auto& s : doc["maximal_simplices"]) {
    if (!s.is_array()) throw std::invalid_argument("simplices must be index arrays");
    Simplex g;
    for (const auto& v : s) {
      if (!v.is_number_integer()) throw std::invalid_argument("simplex entries must be integers");
      g.push_back(v.get<int>());
    }
    if (!is_strictly_increasing(g))
      throw std::invalid_argument("simplex is not strictly increasing");
    gens.push_back(std::move(g));
  }
  return build_complex(std::move(labels), gens);
}

}  // namespace

std::string write_complex(const Complex& k) { return dump_document(complex_to_json(k)); }

Complex read_complex(const std::string& text) { return complex_from_json(parse(text)); }

std::string write_certificate(const CoverCertificate& cert) {
  json doc;
  doc["format"] = kFormatVersion;
  doc["kind"] = "certificate";
  doc["base"] = complex_to_json(*cert.base);
  doc["b"] = cert.b;
  doc["c"] = cert.c;
  doc["policy"] = policy_name(cert.policy);
  json pieces = json::array();
  for (const auto& pc : cert.pieces) {
    json piece;
    json simplices = json::array();
    const auto& ambient = *pc.piece.ambient;
    for (const auto& m : pc.piece.maximal) {
      json labels = json::array();
      for (int v : m) labels.push_back(ambient.label(v));
      simplices.push_back(std::move(labels));
    }
    piece["simplices"] = std::move(simplices);
    json chain = json::array();
    const auto& codomain = *cert.base;
    for (const auto& h : pc.chain.maps) {
      json images = json::array();
      for (int v : h.images) images.push_back(codomain.label(v));
      chain.push_back(std::move(images));
    }
    piece["chain"] = std::move(chain);
    pieces.push_back(std::move(piece));
  }
  doc["pieces"] = std::move(pieces);
  return dump_document(doc);
}

CoverCertificate read_certificate(const std::string& text, long long size_budget) {
  json doc = parse(text);
  check_header(doc, "certificate", true);
  for (const char* field : {"base", "b", "c", "policy", "pieces"})
    if (!doc.contains(field))
      throw std::invalid_argument(std::string("certificate document missing \"") + field + "\"");

  CoverCertificate cert;
  cert.base = share(complex_from_json(doc["base"]));
  if (!doc["b"].is_number_integer() || !doc["c"].is_number_integer())
    throw std::invalid_argument("certificate b and c must be integers");
  cert.b = doc["b"].get<int>();
  cert.c = doc["c"].get<int>();
  if (cert.b < 0 || cert.c < 0) throw std::invalid_argument("certificate b and c must be non-negative");
  if (!doc["policy"].is_string()) throw std::invalid_argument("certificate policy must be a string");
  cert.policy = policy_from_name(doc["policy"].get<std::string>());

  const auto tower = build_product_tower(cert.base, cert.b, size_budget);
  const auto& top = tower.level(tower.b());
  std::map<std::string, int> tower_vertex;
  for (int v = 0; v < top->n_vertices(); ++v) tower_vertex[top->label(v)] = v;
  std::map<std::string, int> base_vertex;
  for (int v = 0; v < cert.base->n_vertices(); ++v) base_vertex[cert.base->label(v)] = v;

  if (!doc["pieces"].is_array() || doc["pieces"].empty())
    throw std::invalid_argument("certificate needs a non-empty \"pieces\" array");
  for (const auto& piece_doc : doc["pieces"]) {
    if (!piece_doc.is_object() || !piece_doc.contains("simplices") || !piece_doc.contains("chain"))
      throw std::invalid_argument("certificate piece needs \"simplices\" and \"chain\"");
    std::vector<Simplex> maximal;
    for (const auto& s : piece_doc["simplices"]) {
      Simplex m;
      for (const auto& l : s) {
        if (!l.is_string()) throw std::invalid_argument("piece simplex entries must be labels");
        auto it = tower_vertex.find(l.get<std::string>());
        if (it == tower_vertex.end())
          throw std::invalid_argument("label mismatch against rebuilt tower: " +
                                      l.get<std::string>());
        m.push_back(it->second);
      }
      if (!is_strictly_increasing(m))
        throw std::invalid_argument("piece simplex labels are not in canonical vertex order");
      maximal.push_back(std::move(m));
    }
    Subcomplex piece;
    try {
      piece = make_subcomplex(top, maximal);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("invalid piece: ") + e.what());
    }
    if (piece.maximal != maximal)
      throw std::invalid_argument("piece simplices are not a canonical antichain");

    auto mat = materialize(piece);
    ContiguityChain chain;
    if (!piece_doc["chain"].is_array() || piece_doc["chain"].empty())
      throw std::invalid_argument("piece chain must be a non-empty array of image tables");
    for (const auto& table : piece_doc["chain"]) {
      if (!table.is_array() ||
          table.size() != static_cast<size_t>(mat.complex->n_vertices()))
        throw std::invalid_argument("chain image table does not match the piece vertex count");
      std::vector<int> images;
      for (const auto& l : table) {
        if (!l.is_string()) throw std::invalid_argument("chain image entries must be labels");
        auto it = base_vertex.find(l.get<std::string>());
        if (it == base_vertex.end())
          throw std::invalid_argument("label mismatch against base complex: " +
                                      l.get<std::string>());
        images.push_back(it->second);
      }
      chain.maps.push_back(SimplicialMap{mat.complex, cert.base, std::move(images)});
    }
    cert.pieces.push_back(PieceCertificate{std::move(piece), std::move(chain)});
  }
  return cert;
}

std::string write_embedding(const Embedding& e, const Complex& k) {
  if (static_cast<int>(e.coords.size()) != k.n_vertices())
    throw std::invalid_argument("embedding does not match the complex");
  json doc;
  doc["kind"] = "embedding";
  doc["dim"] = e.dim;
  json coords;
  for (int v = 0; v < k.n_vertices(); ++v) coords[k.label(v)] = e.coords[static_cast<size_t>(v)];
  doc["coords"] = std::move(coords);
  return dump_document(doc);
}

Embedding read_embedding(const std::string& text, const Complex& k) {
  json doc = parse(text);
  check_header(doc, "embedding", false);
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw std::invalid_argument("embedding needs an integer \"dim\"");
  if (!doc.contains("coords") || !doc["coords"].is_object())
    throw std::invalid_argument("embedding needs a \"coords\" object");
  const int dim = doc["dim"].get<int>();
  std::vector<std::vector<double>> coords;
  for (int v = 0; v < k.n_vertices(); ++v) {
    const auto& label = k.label(v);
    if (!doc["coords"].contains(label))
      throw std::invalid_argument("embedding missing coordinates for vertex " + label);
    const auto& p = doc["coords"][label];
    if (!p.is_array() || static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("embedding point with wrong dimension for vertex " + label);
    std::vector<double> point;
    for (const auto& c : p) point.push_back(c.get<double>());
    coords.push_back(std::move(point));
  }
  return make_embedding(k, dim, std::move(coords));
}

std::string write_path(const PLPath& path) {
  json doc;
  doc["kind"] = "path";
  json samples = json::array();
  for (size_t i = 0; i < path.breakpoints.size(); ++i)
    samples.push_back(json::array({path.times[i], path.breakpoints[i]}));
  doc["samples"] = std::move(samples);
  return dump_document(doc);
}

std::string read_text_file(const std::string& filename) {
  std::ifstream in(filename, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + filename);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& filename, const std::string& contents) {
  std::ofstream out(filename, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + filename);
  out << contents;
}

namespace {

std::optional<int> parse_simplex_name(const std::string& name) {
  if (name.rfind("simplex", 0) != 0) return std::nullopt;
  std::string arg = name.substr(7);
  if (arg.size() >= 2 && arg.front() == '(' && arg.back() == ')')
    arg = arg.substr(1, arg.size() - 2);
  if (arg.empty()) return std::nullopt;
  for (char ch : arg)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
  return std::stoi(arg);
}

Complex circle_complex() {
  return build_complex({"0", "1", "2"}, {{0, 1}, {0, 2}, {1, 2}});
}

}  // namespace

Complex example_complex(const std::string& name) {
  if (name == "circle") return circle_complex();
  if (name == "interval") return build_complex({"0", "1"}, {{0, 1}});
  if (name == "torus") {
    auto s1 = share(circle_complex());
    return *ordered_product(s1, s1).complex;
  }
  if (auto n = parse_simplex_name(name)) {
    if (*n < 0) throw std::invalid_argument("simplex dimension must be non-negative");
    std::vector<std::string> labels;
    Simplex all;
    for (int v = 0; v <= *n; ++v) {
      labels.push_back(std::to_string(v));
      all.push_back(v);
    }
    return build_complex(std::move(labels), {all});
  }
  throw std::invalid_argument("unknown example name: " + name);
}

std::optional<Embedding> example_embedding(const std::string& name) {
  if (name == "circle") return circle_embedding();
  return std::nullopt;
}

}  // namespace sc
