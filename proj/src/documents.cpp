#include "braidinv/documents.hpp"

#include <fstream>

#include "braidinv/datasets.hpp"
#include "braidinv/errors.hpp"

namespace braidinv {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& message) {
  throw ParseError(where + ": " + message);
}

const json& require_field(const json& j, const char* field, const std::string& where) {
  auto it = j.find(field);
  if (it == j.end()) fail(where, std::string("missing required field '") + field + "'");
  return *it;
}

int require_int(const json& j, const char* field, const std::string& where) {
  const json& v = require_field(j, field, where);
  if (!v.is_number_integer()) fail(where, std::string("field '") + field + "' must be an integer");
  return v.get<int>();
}

Ambient parse_ambient(const json& j, const std::string& where) {
  const json& a = require_field(j, "ambient", where);
  if (!a.is_object()) fail(where, "field 'ambient' must be an object");
  const json& type = require_field(a, "type", where + ".ambient");
  if (!type.is_string()) fail(where, "ambient.type must be a string");
  const std::string kind = type.get<std::string>();
  if (kind == "sym") {
    const int degree = require_int(a, "degree", where + ".ambient");
    if (degree < 1) fail(where, "ambient.degree must be >= 1");
    return {Ambient::Kind::Sym, static_cast<std::uint32_t>(degree)};
  }
  if (kind == "sl2mod") {
    const int modulus = require_int(a, "modulus", where + ".ambient");
    if (modulus < 2) fail(where, "ambient.modulus must be >= 2");
    return {Ambient::Kind::Mat2, static_cast<std::uint32_t>(modulus)};
  }
  fail(where, "ambient.type must be 'sym' or 'sl2mod'");
}

json ambient_json(const Ambient& ambient) {
  if (ambient.kind == Ambient::Kind::Sym)
    return json{{"type", "sym"}, {"degree", ambient.n}};
  return json{{"type", "sl2mod"}, {"modulus", ambient.n}};
}

GroupElement parse_element(const json& entry, const Ambient& ambient, const std::string& where) {
  if (!entry.is_array()) fail(where, "must be an array of integers");
  for (const json& v : entry)
    if (!v.is_number_integer()) fail(where, "must be an array of integers");
  try {
    if (ambient.kind == Ambient::Kind::Sym) {
      if (entry.size() != ambient.n)
        fail(where, "permutation image list must have length " + std::to_string(ambient.n));
      return Permutation(entry.get<std::vector<std::int32_t>>());
    }
    if (entry.size() != 4) fail(where, "matrix must be [a, b, c, d] (row-major)");
    return Mat2Mod(entry[0].get<std::int64_t>(), entry[1].get<std::int64_t>(),
                   entry[2].get<std::int64_t>(), entry[3].get<std::int64_t>(), ambient.n);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

std::vector<Label> parse_labels(const json& j, std::size_t n_entries, bool required,
                                LabelContext& labels, const std::string& where) {
  auto it = j.find("labels");
  if (it == j.end()) {
    if (required) fail(where, "missing required field 'labels'");
    return {};
  }
  if (!it->is_array()) fail(where, "field 'labels' must be an array");
  if (it->size() != n_entries)
    fail(where, "labels count " + std::to_string(it->size()) + " != entries count " +
                    std::to_string(n_entries));
  std::vector<Label> out;
  out.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i)
    out.push_back(labels.intern((*it)[i], where + ".labels[" + std::to_string(i) + "]"));
  return out;
}

json metadata_of(const json& j, const std::string& where) {
  auto it = j.find("metadata");
  if (it == j.end()) return json::object();
  if (!it->is_object()) fail(where, "field 'metadata' must be an object");
  return *it;
}

} // namespace

Label LabelContext::intern(const nlohmann::json& value, const std::string& where) {
  if (value.is_number_integer()) {
    const std::int64_t v = value.get<std::int64_t>();
    if (v <= -(Label{1} << 31) || v >= (Label{1} << 31))
      throw ParseError(where + ": integer label out of range");
    return v;
  }
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    auto [it, fresh] = by_name_.emplace(name, kStringBase + static_cast<Label>(names_.size()));
    if (fresh) names_.push_back(name);
    return it->second;
  }
  throw ParseError(where + ": labels must be integers or strings");
}

nlohmann::json LabelContext::render(Label label) const {
  if (label >= kStringBase) {
    const std::size_t idx = static_cast<std::size_t>(label - kStringBase);
    if (idx < names_.size()) return names_[idx];
  }
  return label;
}

MonodromyFactorization MonodromyDocument::factorization() const {
  MonodromyFactorization m{strands, {}};
  m.entries.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.entries.push_back({labels[i], entries[i]});
  return m;
}

LabeledTuple TupleDocument::tuple() const {
  std::vector<LabeledTuple::Entry> e;
  e.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    e.push_back({labels.empty() ? Label{0} : labels[i], entries[i]});
  return LabeledTuple(std::move(e));
}

Document parse_document(const json& j, LabelContext& labels, const std::string& where) {
  if (!j.is_object()) fail(where, "document must be a JSON object");
  if (require_int(j, "format", where) != 1) fail(where, "unsupported format (expected 1)");
  const json& kind = require_field(j, "kind", where);
  if (!kind.is_string()) fail(where, "field 'kind' must be a string");

  const json& entries = require_field(j, "entries", where);
  if (!entries.is_array()) fail(where, "field 'entries' must be an array");

  if (kind == "monodromy") {
    MonodromyDocument doc;
    doc.strands = require_int(j, "strands", where);
    if (doc.strands < 1) fail(where, "field 'strands' must be >= 1");
    doc.labels = parse_labels(j, entries.size(), /*required=*/true, labels, where);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string ctx = where + ".entries[" + std::to_string(i) + "]";
      const json& word = entries[i];
      if (!word.is_array()) fail(ctx, "braid word must be an array of nonzero integers");
      Letters letters;
      for (const json& l : word) {
        if (!l.is_number_integer()) fail(ctx, "braid word must be an array of nonzero integers");
        letters.push_back(l.get<Letter>());
      }
      try {
        doc.entries.emplace_back(doc.strands, std::move(letters));
      } catch (const Error& e) {
        fail(ctx, e.what());
      }
    }
    doc.metadata = metadata_of(j, where);
    return doc;
  }

  if (kind == "tuple") {
    TupleDocument doc;
    doc.ambient = parse_ambient(j, where);
    doc.labels = parse_labels(j, entries.size(), /*required=*/false, labels, where);
    if (entries.empty()) fail(where, "field 'entries' must be nonempty");
    for (std::size_t i = 0; i < entries.size(); ++i)
      doc.entries.push_back(parse_element(entries[i], doc.ambient,
                                          where + ".entries[" + std::to_string(i) + "]"));
    doc.metadata = metadata_of(j, where);
    return doc;
  }

  fail(where, "unknown kind '" + kind.get<std::string>() + "' (expected monodromy or tuple)");
}

json serialize_document(const MonodromyDocument& doc, const LabelContext& labels) {
  json j;
  j["format"] = 1;
  j["kind"] = "monodromy";
  j["strands"] = doc.strands;
  json label_array = json::array();
  for (Label l : doc.labels) label_array.push_back(labels.render(l));
  j["labels"] = std::move(label_array);
  json entry_array = json::array();
  for (const BraidWord& w : doc.entries) entry_array.push_back(w.letters());
  j["entries"] = std::move(entry_array);
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j;
}

json serialize_document(const TupleDocument& doc, const LabelContext& labels) {
  json j;
  j["format"] = 1;
  j["kind"] = "tuple";
  j["ambient"] = ambient_json(doc.ambient);
  if (!doc.labels.empty()) {
    json label_array = json::array();
    for (Label l : doc.labels) label_array.push_back(labels.render(l));
    j["labels"] = std::move(label_array);
  }
  json entry_array = json::array();
  for (const GroupElement& g : doc.entries) {
    if (const Permutation* p = g.as_permutation()) {
      entry_array.push_back(p->images());
    } else {
      const Mat2Mod* m = g.as_matrix();
      entry_array.push_back(std::vector<std::uint32_t>{m->a(), m->b(), m->c(), m->d()});
    }
  }
  j["entries"] = std::move(entry_array);
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j;
}

json serialize_document(const Document& doc, const LabelContext& labels) {
  if (const auto* m = std::get_if<MonodromyDocument>(&doc)) return serialize_document(*m, labels);
  return serialize_document(std::get<TupleDocument>(doc), labels);
}

json load_document_json(const std::string& path_or_ref) {
  if (!path_or_ref.empty() && path_or_ref.front() == '@') return dataset(path_or_ref.substr(1));
  std::ifstream in(path_or_ref);
  if (!in) throw Error("cannot open file '" + path_or_ref + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path_or_ref + ": " + e.what());
  }
  return j;
}

Document load_document(const std::string& path_or_ref, LabelContext& labels) {
  return parse_document(load_document_json(path_or_ref), labels, path_or_ref);
}

Representation parse_representation_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string head = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (head == "sl2mod" || head == "sym") {
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
      } catch (const std::exception&) {
        throw Error("representation spec '" + spec + "': expected an integer after ':'");
      }
      if (head == "sl2mod") {
        if (n < 2) throw Error("sl2mod modulus must be >= 2");
        return sl2_mod_rep(static_cast<std::uint32_t>(n));
      }
      if (n < 2) throw Error("sym degree must be >= 2");
      return sym_rep(n);
    }
  }

  // otherwise a JSON document of generator images
  const json j = load_document_json(spec);
  const std::string where = spec;
  if (!j.is_object()) throw ParseError(where + ": document must be a JSON object");
  if (require_int(j, "format", where) != 1) throw ParseError(where + ": unsupported format");
  const json& kind = require_field(j, "kind", where);
  if (kind != "representation")
    throw ParseError(where + ": expected kind 'representation'");
  const int strands = require_int(j, "strands", where);
  const Ambient ambient = parse_ambient(j, where);
  const json& images = require_field(j, "images", where);
  if (!images.is_array()) throw ParseError(where + ": field 'images' must be an array");
  std::vector<GroupElement> elems;
  for (std::size_t i = 0; i < images.size(); ++i)
    elems.push_back(parse_element(images[i], ambient, where + ".images[" + std::to_string(i) + "]"));
  return Representation(strands, std::move(elems));
}

std::uint64_t document_digest(const json& j) {
  const std::string canonical = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace braidinv
