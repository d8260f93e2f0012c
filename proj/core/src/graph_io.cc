/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/graph_io.hh>
#include <homcompat/errors.hh>

#include <nlohmann/json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

using namespace homcompat;

namespace
{
    auto split_words(string_view line) -> vector<string_view>
    {
        vector<string_view> words;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                words.push_back(line.substr(i, j - i));
            i = j;
        }
        return words;
    }

    auto parse_int(string_view word, long line_number) -> long
    {
        long value = 0;
        auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc{} || ptr != word.data() + word.size())
            throw ParseError("expected an integer, got '" + string(word) + "'", line_number);
        return value;
    }

    auto read_file(const string & filename) -> string
    {
        std::ifstream infile{ filename, std::ios::binary };
        if (! infile)
            throw InvalidInput("cannot open '" + filename + "'");
        std::stringstream buffer;
        buffer << infile.rdbuf();
        return buffer.str();
    }

    auto write_file(const string & filename, const string & contents) -> void
    {
        std::ofstream outfile{ filename, std::ios::binary };
        if (! outfile)
            throw InvalidInput("cannot write '" + filename + "'");
        outfile << contents;
        if (! outfile)
            throw InvalidInput("error writing '" + filename + "'");
    }

    constexpr int graph6_offset = 63;
}

auto homcompat::emit_dimacs(const Graph & g) -> string
{
    auto edges = g.edges();
    string result = "p edge " + to_string(g.size()) + " " + to_string(edges.size()) + "\n";
    for (auto & [u, v] : edges)
        result += "e " + to_string(u + 1) + " " + to_string(v + 1) + "\n";
    return result;
}

auto homcompat::parse_dimacs(string_view text) -> Graph
{
    long line_number = 0;
    long n = -1;
    vector<Edge> edges;

    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_number;

        auto words = split_words(line);
        if (words.empty() || words[0] == "c")
            continue;

        if (words[0] == "p") {
            if (n != -1)
                throw ParseError("repeated problem line", line_number);
            if (words.size() != 4 || (words[1] != "edge" && words[1] != "col"))
                throw ParseError("malformed header, expected 'p edge <n> <m>'", line_number);
            n = parse_int(words[2], line_number);
            long m = parse_int(words[3], line_number);
            if (n < 0 || m < 0)
                throw ParseError("negative size in header", line_number);
        }
        else if (words[0] == "e") {
            if (n == -1)
                throw ParseError("edge line before header", line_number);
            if (words.size() != 3)
                throw ParseError("malformed edge line", line_number);
            long u = parse_int(words[1], line_number), v = parse_int(words[2], line_number);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("edge index out of range 1.." + to_string(n), line_number);
            if (u == v)
                throw ParseError("self-loop on vertex " + to_string(u), line_number);
            edges.emplace_back(int(u - 1), int(v - 1));
        }
        else
            throw ParseError("unrecognised line type '" + string(words[0]) + "'", line_number);
    }

    if (n == -1)
        throw ParseError("missing 'p edge' header", line_number);
    return make_graph(int(n), edges);
}

auto homcompat::emit_graph6(const Graph & g) -> string
{
    string result;
    long n = g.size();
    if (n <= 62)
        result += char(n + graph6_offset);
    else if (n <= 258047) {
        result += char(126);
        for (int shift = 12 ; shift >= 0 ; shift -= 6)
            result += char(((n >> shift) & 63) + graph6_offset);
    }
    else {
        result += char(126);
        result += char(126);
        for (int shift = 30 ; shift >= 0 ; shift -= 6)
            result += char(((n >> shift) & 63) + graph6_offset);
    }

    int value = 0, bits = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u) {
            value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                result += char(value + graph6_offset);
                value = 0;
                bits = 0;
            }
        }
    if (bits > 0)
        result += char((value << (6 - bits)) + graph6_offset);
    return result;
}

auto homcompat::parse_graph6(string_view text) -> Graph
{
    long pos = 0;
    if (text.starts_with(">>graph6<<"))
        pos = 10;
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);

    auto byte_at = [&] (long p) -> int {
        if (p >= long(text.size()))
            throw ParseError("graph6 data truncated", p);
        int c = static_cast<unsigned char>(text[p]);
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 byte " + to_string(c), p);
        return c - graph6_offset;
    };

    long n;
    if (pos >= long(text.size()))
        throw ParseError("empty graph6 string", pos);
    if (byte_at(pos) < 63)
        n = byte_at(pos++);
    else if (pos + 1 < long(text.size()) && byte_at(pos + 1) < 63) {
        ++pos;
        n = 0;
        for (int i = 0 ; i < 3 ; ++i)
            n = (n << 6) | byte_at(pos++);
    }
    else {
        pos += 2;
        n = 0;
        for (int i = 0 ; i < 6 ; ++i)
            n = (n << 6) | byte_at(pos++);
    }
    if (n > (1L << 24))
        throw ParseError("graph6 vertex count " + to_string(n) + " too large", pos);

    long pairs = n * (n - 1) / 2;
    long expected_bytes = (pairs + 5) / 6;
    if (long(text.size()) - pos != expected_bytes)
        throw ParseError("bad graph6 length: expected " + to_string(expected_bytes) + " data bytes for "
                + to_string(n) + " vertices, found " + to_string(long(text.size()) - pos),
                pos + std::min(long(text.size()) - pos, expected_bytes));

    vector<Bitset> rows(n, Bitset(int(n)));
    long bit = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u, ++bit) {
            int byte = byte_at(pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) {
                rows[u].set(v);
                rows[v].set(u);
            }
        }
    return Graph::from_rows(std::move(rows));
}

auto homcompat::emit_label_sidecar(const Graph & g) -> string
{
    return nlohmann::json(g.labels()).dump();
}

auto homcompat::parse_label_sidecar(string_view text) -> vector<string>
{
    try {
        auto j = nlohmann::json::parse(text);
        return j.get<vector<string>>();
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError(string("label sidecar: ") + e.what(), 0);
    }
}

auto homcompat::detect_format(const string & filename, string_view text) -> GraphFormat
{
    auto ext = std::filesystem::path(filename).extension().string();
    if (ext == ".col" || ext == ".dimacs")
        return GraphFormat::Dimacs;
    if (ext == ".g6" || ext == ".graph6")
        return GraphFormat::Graph6;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != string_view::npos && (text.substr(first).starts_with("p ") || text.substr(first).starts_with("c")))
        return GraphFormat::Dimacs;
    return GraphFormat::Graph6;
}

auto homcompat::read_graph_file(const string & filename) -> Graph
{
    auto text = read_file(filename);
    Graph g = detect_format(filename, text) == GraphFormat::Dimacs ? parse_dimacs(text) : parse_graph6(text);

    auto sidecar = std::filesystem::path(filename).replace_extension(".labels.json");
    if (std::filesystem::exists(sidecar)) {
        auto labels = parse_label_sidecar(read_file(sidecar.string()));
        if (! labels.empty())
            g = std::move(g).with_labels(std::move(labels));
    }
    return g;
}

auto homcompat::write_graph_files(const Graph & g, const string & prefix) -> void
{
    write_file(prefix + ".col", emit_dimacs(g));
    write_file(prefix + ".g6", emit_graph6(g) + "\n");
    if (g.has_labels())
        write_file(prefix + ".labels.json", emit_label_sidecar(g) + "\n");
}
