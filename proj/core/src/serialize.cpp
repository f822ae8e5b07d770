#include "ktss/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ktss/errors.hpp"

namespace ktss {

namespace {

using nlohmann::json;

// nlohmann's default object container is std::map, so keys come out sorted;
// array contents are sorted here before insertion.
std::vector<std::string> encoded_sorted(const WordSet& set,
                                        const SymbolCodec& codec) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (const Word& w : set) out.push_back(codec.encode(w));
  std::sort(out.begin(), out.end());
  return out;
}

json vector_to_value(const KTestVector& vector, const SymbolCodec& codec) {
  json doc;
  doc["k"] = vector.k();
  doc["prefixes"] = encoded_sorted(vector.prefixes(), codec);
  doc["suffixes"] = encoded_sorted(vector.suffixes(), codec);
  doc["segments"] = encoded_sorted(vector.segments(), codec);
  doc["short_strings"] = encoded_sorted(vector.short_strings(), codec);
  return doc;
}

WordSet decode_array(const json& value, const char* field,
                     SymbolCodec& codec) {
  if (!value.is_array()) {
    throw ParseError(std::string(field) + " must be an array of strings");
  }
  WordSet out;
  for (const json& item : value) {
    if (!item.is_string()) {
      throw ParseError(std::string(field) + " must contain only strings");
    }
    out.push_back(codec.decode(item.get_ref<const std::string&>()));
  }
  return out;
}

KTestVector vector_from_value(const json& doc, SymbolCodec& codec) {
  if (!doc.is_object()) throw ParseError("vector document must be an object");
  if (!doc.contains("k") || !doc["k"].is_number_integer()) {
    throw ParseError("vector document needs an integer \"k\"");
  }
  const int k = doc["k"].get<int>();
  if (k < 1) throw ParseError("\"k\" must be positive");
  for (const char* field : {"prefixes", "suffixes", "segments",
                            "short_strings"}) {
    if (!doc.contains(field)) {
      throw ParseError(std::string("vector document is missing \"") + field +
                       "\"");
    }
  }
  return KTestVector::make(k, decode_array(doc["prefixes"], "prefixes", codec),
                           decode_array(doc["suffixes"], "suffixes", codec),
                           decode_array(doc["segments"], "segments", codec),
                           decode_array(doc["short_strings"], "short_strings",
                                        codec));
}

std::string dump_canonical(const json& doc) {
  return doc.dump(2) + "\n";
}

std::string quote_dot(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string vector_to_json(const KTestVector& vector,
                           const SymbolCodec& codec) {
  return dump_canonical(vector_to_value(vector, codec));
}

std::string vectors_to_json(std::span<const KTestVector> vectors,
                            const SymbolCodec& codec) {
  json doc = json::array();
  for (const KTestVector& v : vectors) doc.push_back(vector_to_value(v, codec));
  return dump_canonical(doc);
}

KTestVector vector_from_json(std::string_view text, SymbolCodec& codec) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("invalid JSON");
  return vector_from_value(doc, codec);
}

std::vector<KTestVector> vectors_from_json(std::string_view text,
                                           SymbolCodec& codec) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("invalid JSON");
  if (!doc.is_array()) throw ParseError("expected an array of vectors");
  std::vector<KTestVector> out;
  out.reserve(doc.size());
  for (const json& item : doc) out.push_back(vector_from_value(item, codec));
  return out;
}

std::string result_to_json(int k, std::span<const std::string> word_lines,
                           std::span<const Word> words,
                           const Linkage& linkage,
                           const Clustering& clustering,
                           const SymbolCodec& codec) {
  json doc;
  doc["k"] = k;

  std::set<std::string> alphabet;
  for (const Word& w : words) {
    for (Symbol s : w) alphabet.insert(codec.encode_symbol(s));
  }
  doc["alphabet"] = std::vector<std::string>(alphabet.begin(), alphabet.end());
  doc["words"] = std::vector<std::string>(word_lines.begin(),
                                          word_lines.end());

  json rows = json::array();
  for (const LinkageRow& row : linkage.rows) {
    json entry;
    entry["left"] = row.left;
    entry["right"] = row.right;
    entry["distance"] = row.distance;
    entry["new"] = row.merged;
    rows.push_back(std::move(entry));
  }
  doc["linkage"] = std::move(rows);

  json clusters = json::array();
  for (const ClusterNode& node : clustering.clusters) {
    json entry;
    entry["id"] = node.id;
    entry["members"] = node.members;
    entry["vector"] = vector_to_value(node.vector, codec);
    clusters.push_back(std::move(entry));
  }
  doc["clusters"] = std::move(clusters);
  return dump_canonical(doc);
}

std::string dfa_to_dot(const Dfa& dfa, const SymbolCodec& codec) {
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  for (Dfa::State s = 0; s < dfa.state_count(); ++s) {
    out << "  q" << s << " [shape="
        << (dfa.is_accepting(s) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> q" << dfa.initial() << ";\n";
  for (Dfa::State s = 0; s < dfa.state_count(); ++s) {
    for (const auto& [symbol, to] : dfa.transitions_from(s)) {
      out << "  q" << s << " -> q" << to
          << " [label=" << quote_dot(codec.encode_symbol(symbol)) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_dot(const CompatibilityGraph& graph,
                         const SymbolCodec& codec) {
  auto label = [&](const GraphVertex& v) {
    std::string text = codec.encode(v.word);
    switch (v.kind) {
      case VertexKind::start:
        return "\xE2\x80\xA2" + text;  // bullet marker
      case VertexKind::end:
        return text + "\xE2\x80\xA2";
      case VertexKind::segment:
        return text;
    }
    return text;
  };
  auto color_name = [](VertexColor c) {
    switch (c) {
      case VertexColor::red:
        return "red";
      case VertexColor::blue:
        return "blue";
      case VertexColor::white:
        return "white";
    }
    return "white";
  };
  std::ostringstream out;
  out << "digraph compatibility {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    const GraphVertex& v = graph.vertex(i);
    out << "  v" << i << " [label=" << quote_dot(label(v))
        << ", color=" << color_name(v.color) << ", style=filled, fillcolor="
        << color_name(v.color) << "];\n";
  }
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    for (std::uint32_t to : graph.successors(i)) {
      out << "  v" << i << " -> v" << to << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string dendrogram_to_dot(std::span<const std::string> leaf_labels,
                              const Linkage& linkage) {
  std::ostringstream out;
  out << "digraph dendrogram {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < leaf_labels.size(); ++i) {
    out << "  n" << i << " [label=" << quote_dot(leaf_labels[i])
        << ", shape=box];\n";
  }
  for (const LinkageRow& row : linkage.rows) {
    out << "  n" << row.merged << " [label=\"d=" << row.distance << "\"];\n";
  }
  for (const LinkageRow& row : linkage.rows) {
    out << "  n" << row.left << " -> n" << row.merged << ";\n";
    out << "  n" << row.right << " -> n" << row.merged << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ktss
