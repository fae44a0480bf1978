#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <json.hpp>

#include "braidinv/group.hpp"
#include "braidinv/representation.hpp"
#include "braidinv/tuples.hpp"

namespace braidinv {

// Document labels may be JSON integers or strings. Strings are interned to
// tags outside the integer-label range; one context must be shared by every
// document taking part in a comparison so equal strings get equal tags.
class LabelContext {
public:
  Label intern(const nlohmann::json& value, const std::string& where);
  nlohmann::json render(Label label) const;

private:
  static constexpr Label kStringBase = Label{1} << 40;
  std::unordered_map<std::string, Label> by_name_;
  std::vector<std::string> names_;
};

// On-disk form of a braid monodromy factorization (kind "monodromy").
struct MonodromyDocument {
  int strands = 0;
  std::vector<Label> labels;
  std::vector<BraidWord> entries;
  nlohmann::json metadata = nlohmann::json::object();

  MonodromyFactorization factorization() const;
};

// On-disk form of a labeled tuple over a finite group (kind "tuple").
struct TupleDocument {
  Ambient ambient{Ambient::Kind::Sym, 1};
  std::vector<Label> labels; // empty means unlabeled
  std::vector<GroupElement> entries;
  nlohmann::json metadata = nlohmann::json::object();

  LabeledTuple tuple() const;
};

using Document = std::variant<MonodromyDocument, TupleDocument>;

// Schema-validated parse; `where` names the source in diagnostics.
Document parse_document(const nlohmann::json& j, LabelContext& labels, const std::string& where);

nlohmann::json serialize_document(const MonodromyDocument& doc, const LabelContext& labels);
nlohmann::json serialize_document(const TupleDocument& doc, const LabelContext& labels);
nlohmann::json serialize_document(const Document& doc, const LabelContext& labels);

// Loads `@name` built-ins or a JSON file path.
nlohmann::json load_document_json(const std::string& path_or_ref);
Document load_document(const std::string& path_or_ref, LabelContext& labels);

// Representation from "sl2mod:<m>", "sym:<d>", or a JSON document
// (kind "representation") given as a path or @name.
Representation parse_representation_spec(const std::string& spec);

// FNV-1a 64 digest of the canonical (sorted-key) serialization; pins the
// built-in datasets.
std::uint64_t document_digest(const nlohmann::json& j);

} // namespace braidinv
