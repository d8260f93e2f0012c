/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_GRAPH_IO_HH
#define HOMCOMPAT_GUARD_GRAPH_IO_HH 1

#include <homcompat/graph.hh>

#include <string>
#include <string_view>

namespace homcompat
{
    /// DIMACS .col text: "p edge n m" then one "e u v" line per edge, 1-based,
    /// edges in lexicographic order, each line newline-terminated.
    auto emit_dimacs(const Graph & g) -> std::string;

    /// Accepts "c" comment lines, a "p edge" or "p col" header, and "e u v"
    /// lines. Repeated edges collapse. Errors carry the line number.
    auto parse_dimacs(std::string_view text) -> Graph;

    /// Standard graph6 encoding, without the optional ">>graph6<<" header and
    /// without a trailing newline.
    auto emit_graph6(const Graph & g) -> std::string;

    /// Reads one graph6 string. Leading ">>graph6<<" and trailing whitespace
    /// are tolerated. Errors carry the byte offset.
    auto parse_graph6(std::string_view text) -> Graph;

    /// JSON array of label strings indexed by vertex; "[]" when unlabelled.
    auto emit_label_sidecar(const Graph & g) -> std::string;

    auto parse_label_sidecar(std::string_view text) -> std::vector<std::string>;

    enum class GraphFormat
    {
        Dimacs,
        Graph6
    };

    /// By extension (.col, .dimacs, .g6, .graph6), otherwise by content.
    auto detect_format(const std::string & filename, std::string_view text) -> GraphFormat;

    /// Reads a graph file, picking the format with detect_format. If a
    /// "<stem>.labels.json" sidecar sits next to it, the labels are attached.
    auto read_graph_file(const std::string & filename) -> Graph;

    /// Writes prefix.col, prefix.g6 and, for labelled graphs, prefix.labels.json.
    auto write_graph_files(const Graph & g, const std::string & prefix) -> void;
}

#endif
