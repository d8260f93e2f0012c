/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/report.hh>
#include <homcompat/errors.hh>
#include <homcompat/graph_io.hh>

#include <string>

using nlohmann::json;
using std::string;


using namespace homcompat;

auto homcompat::graph_summary_json(const Graph & g) -> json
{
    json result{ { "vertices", g.size() }, { "edges", g.edge_count() } };
    if (g.size() <= graph_summary_graph6_limit)
        result["graph6"] = emit_graph6(g);
    return result;
}

auto homcompat::multihom_json(const MultiHom & m) -> json
{
    json parts = json::array();
    for (auto & p : m.parts)
        parts.push_back(p.to_indices());
    return parts;
}

auto homcompat::multihom_label_json(const MultiHom & m, const Graph & host) -> json
{
    json parts = json::array();
    for (auto & p : m.parts) {
        json part = json::array();
        for (auto v : p.to_indices())
            part.push_back(host.labels().at(v));
        parts.push_back(part);
    }
    return parts;
}

auto homcompat::poset_statistics_json(const HomPoset & p) -> json
{
    json histogram = json::object();
    for (auto & [size, count] : p.support_histogram())
        histogram[std::to_string(size)] = count;
    return json{
        { "element_count", p.size() },
        { "support_histogram", histogram }
    };
}

auto homcompat::poset_json(const HomPoset & p) -> json
{
    json elements = json::array();
    for (auto & e : p.elements())
        elements.push_back(multihom_json(e));
    return json{
        { "r", p.r() },
        { "host_vertices", p.host().size() },
        { "elements", elements },
        { "statistics", poset_statistics_json(p) }
    };
}

auto homcompat::coloring_json(const Coloring & c) -> json
{
    json colours = json::object();
    for (std::size_t v = 0 ; v < c.colours.size() ; ++v)
        colours[std::to_string(v)] = c.colours[v];
    return json{
        { "colour_count", c.colour_count },
        { "colours", colours }
    };
}

auto homcompat::parse_coloring_json(const json & j) -> Coloring
{
    try {
        Coloring result;
        result.colour_count = j.at("colour_count").get<int>();
        auto & colours = j.at("colours");
        result.colours.assign(colours.size(), 0);
        for (auto & [key, value] : colours.items()) {
            std::size_t v = std::stoul(key);
            if (v >= result.colours.size())
                throw ParseError("colouring vertex " + key + " out of range", 0);
            result.colours[v] = value.get<int>();
        }
        return result;
    }
    catch (const json::exception & e) {
        throw ParseError(string("colouring JSON: ") + e.what(), 0);
    }
    catch (const std::logic_error & e) {
        throw ParseError(string("colouring JSON: ") + e.what(), 0);
    }
}

auto homcompat::signed_vector_json(const SignedVector & x) -> json
{
    return x.entries();
}

auto homcompat::verdict_json(const Verdict & v, const Graph * host) -> json
{
    json result;
    result["verdict"] = homcompat::to_string(v.kind);
    result["parameters"] = json{ { "n", v.n }, { "k", v.k }, { "r", v.r }, { "colour_count", v.colour_count } };

    json bound{
        { "max_level", v.max_level },
        { "level_cap", v.level_cap },
        { "implied_lower_bound", v.implied_lower_bound },
        { "arithmetic", "C + r(k-1) = " + std::to_string(v.colour_count) + " + " + std::to_string(v.r * (v.k - 1))
            + " = " + std::to_string(v.level_cap) + (v.level_cap >= v.n ? " >= " : " < ") + "n = " + std::to_string(v.n) }
    };
    if (v.kind == VerdictKind::NoBadPair)
        bound["certified"] = "C >= n - r(k-1) = " + std::to_string(v.implied_lower_bound);
    result["bound"] = bound;

    if (v.bad_pair) {
        json certificate{
            { "x", signed_vector_json(v.bad_pair->x) },
            { "y", signed_vector_json(v.bad_pair->y) },
            { "x_text", v.bad_pair->x.to_string() },
            { "y_text", v.bad_pair->y.to_string() },
            { "g", v.bad_pair->g }
        };
        if (v.certificate) {
            certificate["edge"] = json::array({ v.certificate->u, v.certificate->v });
            certificate["edge_elements"] = json::array({ multihom_json(v.certificate->u_element), multihom_json(v.certificate->v_element) });
            certificate["color"] = v.certificate->colour;
            if (host && host->has_labels())
                certificate["edge_element_labels"] = json::array({ multihom_label_json(v.certificate->u_element, *host),
                        multihom_label_json(v.certificate->v_element, *host) });
        }
        result["certificate"] = certificate;
    }
    else
        result["certificate"] = nullptr;
    return result;
}

auto homcompat::labeling_json(const Labeling & l) -> json
{
    auto & domain = l.domain();
    if (domain.index_count() - 1 > labeling_export_limit)
        throw CapExceeded("labelling export", domain.index_count() - 1, labeling_export_limit);

    json labels = json::array();
    for (std::uint64_t i = 1 ; i < domain.index_count() ; ++i) {
        auto & label = l.at_index(i);
        labels.push_back(json{ { "x", signed_vector_json(domain.decode(i)) }, { "sign", label.sign }, { "level", label.level } });
    }
    return json{ { "n", domain.n() }, { "r", domain.r() }, { "labels", labels } };
}
