#include "foldnet/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace foldnet {

using nlohmann::json;

namespace {

constexpr std::string_view cut_format = "foldnet-cuts/1";

[[noreturn]] void schema_error(const std::string& where, const std::string& what)
{
    throw SchemaError(where + ": " + what);
}

const json& field(const json& object, const std::string& key, const std::string& where)
{
    auto it = object.find(key);
    if (it == object.end())
        schema_error(where, "missing field \"" + key + "\"");
    return *it;
}

int as_int(const json& value, const std::string& where)
{
    if (!value.is_number_integer())
        schema_error(where, "expected an integer, got " + value.dump());
    return value.get<int>();
}

double as_number(const json& value, const std::string& where)
{
    if (!value.is_number())
        schema_error(where, "expected a number, got " + value.dump());
    return value.get<double>();
}

const json& as_array(const json& value, const std::string& where)
{
    if (!value.is_array())
        schema_error(where, "expected an array");
    return value;
}

json parse(std::string_view document)
{
    try {
        return json::parse(document);
    }
    catch (const json::parse_error& error) {
        throw SchemaError(std::string("malformed document: ") + error.what());
    }
}

std::string fixed(double value, int digits)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

std::string decimal(const BigRational& value) { return fixed(value.convert_to<double>(), 4); }

} // namespace

PolyhedronSpec load_polyhedron(std::string_view document)
{
    json root = parse(document);
    if (!root.is_object())
        schema_error("/", "expected an object");
    PolyhedronSpec spec;
    const json& name = field(root, "name", "/");
    if (!name.is_string())
        schema_error("/name", "expected a string");
    spec.name = name.get<std::string>();

    if (root.contains("vertices")) {
        const json& vertices = as_array(root["vertices"], "/vertices");
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            std::string where = "/vertices/" + std::to_string(i);
            const json& point = as_array(vertices[i], where);
            if (point.size() != 3)
                schema_error(where, "expected [x, y, z], got " + std::to_string(point.size()) + " values");
            spec.vertices.push_back({as_number(point[0], where + "/0"), as_number(point[1], where + "/1"),
                                     as_number(point[2], where + "/2")});
        }
        spec.vertex_count = static_cast<int>(spec.vertices.size());
        if (root.contains("vertex_count") && as_int(root["vertex_count"], "/vertex_count") != spec.vertex_count)
            schema_error("/vertex_count", "disagrees with the " + std::to_string(spec.vertex_count) + " listed vertices");
    }
    else if (root.contains("vertex_count")) {
        spec.vertex_count = as_int(root["vertex_count"], "/vertex_count");
        if (spec.vertex_count <= 0)
            schema_error("/vertex_count", "must be positive");
    }
    else {
        schema_error("/", "needs \"vertices\" or \"vertex_count\"");
    }

    const json& faces = as_array(field(root, "faces", "/"), "/faces");
    for (std::size_t f = 0; f < faces.size(); ++f) {
        std::string where = "/faces/" + std::to_string(f);
        const json& cycle = as_array(faces[f], where);
        if (cycle.size() < 3)
            schema_error(where, "face " + std::to_string(f) + " has fewer than 3 vertices");
        std::vector<int> face;
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            int v = as_int(cycle[k], where + "/" + std::to_string(k));
            if (v < 0 || v >= spec.vertex_count)
                schema_error(where + "/" + std::to_string(k), "face " + std::to_string(f) + " refers to vertex " +
                                                                  std::to_string(v) + ", outside 0.." +
                                                                  std::to_string(spec.vertex_count - 1));
            face.push_back(v);
        }
        spec.faces.push_back(std::move(face));
    }
    return spec;
}

PolyhedronSpec load_polyhedron_file(const std::filesystem::path& path) { return load_polyhedron(read_file(path)); }

std::string save_polyhedron(const PolyhedronSpec& spec)
{
    std::string out = "{\n  \"name\": " + json(spec.name).dump() + ",\n";
    if (spec.has_coordinates()) {
        out += "  \"vertices\": [\n";
        for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
            const Vec3& p = spec.vertices[i];
            out += "    " + json::array({p.x, p.y, p.z}).dump() + (i + 1 < spec.vertices.size() ? ",\n" : "\n");
        }
        out += "  ],\n";
    }
    else {
        out += "  \"vertex_count\": " + std::to_string(spec.vertex_count) + ",\n";
    }
    out += "  \"faces\": [\n";
    for (std::size_t f = 0; f < spec.faces.size(); ++f)
        out += "    " + json(spec.faces[f]).dump() + (f + 1 < spec.faces.size() ? ",\n" : "\n");
    out += "  ]\n}\n";
    return out;
}

std::string save_results(const CutList& list)
{
    std::string out = "{\n";
    auto line = [&](std::string_view key, const json& value) {
        out += "  \"" + std::string(key) + "\": " + value.dump() + ",\n";
    };
    line("format", cut_format);
    line("kind", list.kind == CutListKind::labelled ? "labelled" : "nets");
    line("shell", list.shell);
    line("hole_faces", list.hole_faces);
    line("vertex_count", list.vertex_count);
    json edges = json::array();
    for (const Edge& e : list.edges)
        edges.push_back({e.u, e.v});
    line("edges", edges);
    line("leaves", list.leaves);
    line("interior_size", list.interior_size);
    line("partial", list.partial);
    line("note", list.note);
    line("count", list.cuts.size());
    out += "  \"cuts\": [";
    for (std::size_t i = 0; i < list.cuts.size(); ++i) {
        out += i ? ",\n    " : "\n    ";
        json entry = list.cuts[i].edge_indices();
        if (list.kind == CutListKind::nets)
            entry = json{{"edges", entry}, {"orbit", list.orbit_sizes.at(i)}};
        out += entry.dump();
    }
    out += list.cuts.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

CutList load_results(std::string_view document)
{
    json root = parse(document);
    if (!root.is_object())
        schema_error("/", "expected an object");
    const json& format = field(root, "format", "/");
    if (format != cut_format)
        schema_error("/format", "expected \"" + std::string(cut_format) + "\", got " + format.dump());
    CutList list;
    const json& kind = field(root, "kind", "/");
    if (kind == "labelled")
        list.kind = CutListKind::labelled;
    else if (kind == "nets")
        list.kind = CutListKind::nets;
    else
        schema_error("/kind", "expected \"labelled\" or \"nets\", got " + kind.dump());
    list.shell = field(root, "shell", "/").get<std::string>();
    for (const json& f : as_array(field(root, "hole_faces", "/"), "/hole_faces"))
        list.hole_faces.push_back(as_int(f, "/hole_faces"));
    list.vertex_count = as_int(field(root, "vertex_count", "/"), "/vertex_count");
    const json& edges = as_array(field(root, "edges", "/"), "/edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string where = "/edges/" + std::to_string(i);
        const json& pair = as_array(edges[i], where);
        if (pair.size() != 2)
            schema_error(where, "expected [u, v]");
        list.edges.push_back({as_int(pair[0], where + "/0"), as_int(pair[1], where + "/1")});
    }
    list.leaves = as_int(field(root, "leaves", "/"), "/leaves");
    list.interior_size = as_int(field(root, "interior_size", "/"), "/interior_size");
    list.partial = field(root, "partial", "/").get<bool>();
    list.note = field(root, "note", "/").get<std::string>();
    const json& cuts = as_array(field(root, "cuts", "/"), "/cuts");
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        std::string where = "/cuts/" + std::to_string(i);
        const json* indices = &cuts[i];
        if (list.kind == CutListKind::nets) {
            list.orbit_sizes.push_back(static_cast<std::size_t>(as_int(field(cuts[i], "orbit", where), where + "/orbit")));
            indices = &field(cuts[i], "edges", where);
            where += "/edges";
        }
        Cut cut;
        for (const json& e : as_array(*indices, where)) {
            int index = as_int(e, where);
            if (index < 0 || index >= static_cast<int>(list.edges.size()))
                schema_error(where, "edge index " + std::to_string(index) + " out of range");
            cut.edges.set(index);
        }
        list.cuts.push_back(cut);
    }
    if (as_int(field(root, "count", "/"), "/count") != static_cast<int>(list.cuts.size()))
        schema_error("/count", "disagrees with the number of cuts");
    return list;
}

std::string format_ranking(std::span<const RankedNet> ranked, std::span<const CanonicalCut> nets)
{
    std::string out = "rank\tcut_id\tradius_of_gyration\toverlap\tedges\n";
    for (const auto& net : ranked) {
        auto it = std::lower_bound(nets.begin(), nets.end(), net.cut, [](const CanonicalCut& a, const CanonicalCut& b) {
            return CutOrder{}(a.representative, b.representative);
        });
        long id = it != nets.end() && it->representative == net.cut.representative ? it - nets.begin() : -1;
        std::string edges;
        for (int e : net.cut.representative.edge_indices())
            edges += (edges.empty() ? "" : ",") + std::to_string(e);
        out += std::to_string(net.rank) + "\t" + std::to_string(id) + "\t" + fixed(net.radius_of_gyration, 12) + "\t" +
               (net.overlaps ? "1" : "0") + "\t" + edges + "\n";
    }
    return out;
}

std::string format_statistics_table(std::span<const ShellStatistics> rows)
{
    std::string out = "name\tV\tE\tF\tN_ST\tN_aut\tN_ST/N_aut\tL\tN_MLST\tN_nets\tL_estimate\tlog2_ratio_estimate\t"
                      "ratio_estimate\tstatus\n";
    auto optional = [](const auto& value) { return value ? std::to_string(*value) : std::string("-"); };
    for (const auto& row : rows) {
        BigRational bound(row.spanning_trees, BigInt(row.automorphisms));
        std::ostringstream bound_text;
        bound_text << bound;
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.6e", row.ratio_estimate.value);
        out += row.name + "\t" + std::to_string(row.vertices) + "\t" + std::to_string(row.edges) + "\t" +
               std::to_string(row.faces) + "\t" + row.spanning_trees.str() + "\t" + std::to_string(row.automorphisms) +
               "\t" + bound_text.str() + "\t" + optional(row.leaves) + "\t" + optional(row.labelled_mlsts) + "\t" +
               optional(row.optimal_nets) + "\t" + decimal(row.leaf_estimate) + "\t" +
               decimal(row.ratio_estimate.log2) + "\t" + ratio + "\t" +
               (row.partial ? "partial: " + row.note : std::string("complete")) + "\n";
    }
    return out;
}

std::string format_residual_report(std::span<const ResidualRow> rows)
{
    std::string out = "name\tV\tE\tL\tE/4+2\tresidual\t(V+3)/2\tresidual\tE/2+1\tV_residual\tlog2_fraction\t"
                      "log2_estimate\tlog2_residual\n";
    for (const auto& r : rows)
        out += r.name + "\t" + std::to_string(r.vertices) + "\t" + std::to_string(r.edges) + "\t" +
               std::to_string(r.leaves) + "\t" + decimal(r.leaf_from_edges) + "\t" + decimal(r.leaf_residual()) + "\t" +
               decimal(r.leaf_from_vertices) + "\t" + decimal(r.leaf_residual_from_vertices()) + "\t" +
               decimal(r.vertex_from_edges) + "\t" + decimal(r.vertex_residual()) + "\t" + fixed(r.log2_fraction, 6) +
               "\t" + decimal(r.log2_fraction_estimate) + "\t" + fixed(r.log2_fraction_residual(), 6) + "\n";
    return out;
}

std::string format_plot_data(std::span<const PlotSeries> series)
{
    std::string out = "series\tx\ty\n";
    for (const auto& s : series)
        for (const auto& [x, y] : s.points)
            out += s.name + "\t" + fixed(x, 6) + "\t" + fixed(y, 6) + "\n";
    return out;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_file(const std::filesystem::path& path, std::string_view text)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

} // namespace foldnet
