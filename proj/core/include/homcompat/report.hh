/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_REPORT_HH
#define HOMCOMPAT_GUARD_REPORT_HH 1

#include <homcompat/hom_poset.hh>
#include <homcompat/solvers.hh>
#include <homcompat/tucker.hh>

#include <nlohmann/json.hpp>

#include <cstdint>

namespace homcompat
{
    inline constexpr int graph_summary_graph6_limit = 32;

    /// {"vertices", "edges", "graph6"}, graph6 only up to graph_summary_graph6_limit vertices.
    auto graph_summary_json(const Graph & g) -> nlohmann::json;

    /// Parts as arrays of host vertex indices.
    auto multihom_json(const MultiHom & m) -> nlohmann::json;

    /// Parts as arrays of host vertex labels. The host must be labelled.
    auto multihom_label_json(const MultiHom & m, const Graph & host) -> nlohmann::json;

    /// {"r", "host_vertices", "elements": [...], "statistics": {"element_count",
    /// "support_histogram": {"<|A|>": count}}}, elements in canonical order.
    auto poset_json(const HomPoset & p) -> nlohmann::json;

    auto poset_statistics_json(const HomPoset & p) -> nlohmann::json;

    /// {"colour_count", "colours": {"<vertex>": colour}}
    auto coloring_json(const Coloring & c) -> nlohmann::json;

    /// Inverse of coloring_json. Throws ParseError.
    auto parse_coloring_json(const nlohmann::json & j) -> Coloring;

    /// Entry codes, 0 for zero and r for e.
    auto signed_vector_json(const SignedVector & x) -> nlohmann::json;

    /// {"verdict", "parameters", "bound", "certificate"}. With a labelled
    /// host the certificate also spells its two vertices in host labels.
    auto verdict_json(const Verdict & v, const Graph * host = nullptr) -> nlohmann::json;

    inline constexpr std::uint64_t labeling_export_limit = 100'000;

    /// {"n", "r", "labels": [{"x": [...], "sign", "level"}...]}. Throws
    /// CapExceeded past labeling_export_limit vectors.
    auto labeling_json(const Labeling & l) -> nlohmann::json;
}

#endif
