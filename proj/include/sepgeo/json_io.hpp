#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepgeo/common.hpp"
#include "sepgeo/division.hpp"
#include "sepgeo/exposure.hpp"
#include "sepgeo/graph.hpp"
#include "sepgeo/separator.hpp"

namespace sepgeo {

using json = nlohmann::json;

inline json to_json(const VertexSet& s) {
    return json(s.ids());
}

inline json to_json(const CheckReport& report) {
    json checks = json::array();
    for (const auto& e : report.entries) {
        json c{{"name", e.name}, {"pass", e.pass}};
        if (!e.detail.empty()) c["detail"] = e.detail;
        checks.push_back(c);
    }
    return json{{"all_pass", report.all_pass()}, {"checks", checks}};
}

inline json to_json(const SeparatorCertificate& cert) {
    return json{{"type", "separator"},
                {"S", to_json(cert.S)},
                {"A", to_json(cert.A)},
                {"B", to_json(cert.B)}};
}

inline json to_json(const ShallowMinorCertificate& cert) {
    json sets = json::array();
    for (const auto& bs : cert.branch_sets) sets.push_back(to_json(bs));
    json witnesses = json::array();
    for (const auto& we : cert.witness_edges) witnesses.push_back(json::array({we.u, we.v}));
    return json{{"type", "minor"},
                {"h", cert.h()},
                {"depth", cert.depth},
                {"branch_sets", sets},
                {"centers", cert.centers},
                {"witness_edges", witnesses}};
}

inline json to_json(const Schedule& s) {
    return json{{"z", s.z},
                {"l", s.l},
                {"h", s.h},
                {"alpha", s.alpha},
                {"predicted_size", s.predicted_size}};
}

inline json to_json(const PrsMeta& meta) {
    return json{{"l", meta.l},
                {"h", meta.h},
                {"size_constant", meta.size_constant},
                {"bound", meta.bound},
                {"separator_size", meta.separator_size},
                {"ratio", meta.ratio},
                {"strategy", meta.strategy}};
}

inline json to_json(const PrsOutcome& outcome) {
    json j = outcome.is_minor() ? to_json(outcome.minor()) : to_json(outcome.separator());
    j["meta"] = to_json(outcome.meta);
    return j;
}

inline json to_json(const Division& d, const DivisionSchedule& schedule, double eps,
                    const std::vector<LevelRow>& levels) {
    json clusters = json::array();
    for (const auto& c : d.clusters) clusters.push_back(to_json(c));
    json lv = json::array();
    for (const auto& row : levels) lv.push_back(json::array({row.level, row.vertices}));
    return json{{"b", schedule.b},
                {"eps", eps},
                {"clusters", clusters},
                {"boundary", to_json(d.boundary)},
                {"total_excess", d.total_excess},
                {"levels", lv}};
}

template <int D>
inline json to_json(const Vec<D>& v) {
    json coords = json::array();
    for (int i = 0; i < D; ++i) coords.push_back(v[i]);
    return coords;
}

template <int D>
inline json to_json(const Segment<D>& s) {
    return json{{"a", to_json(s.a)}, {"b", to_json(s.b)}};
}

template <int D>
inline json to_json(const DensityCertificate<D>& cert) {
    return json{{"type", "density"},
                {"center", to_json(cert.center)},
                {"radius", cert.radius},
                {"hits", cert.hits},
                {"density_lb", cert.density_lb()}};
}

// ---------------------------------------------------------------------------
// Parsing (for the validate subcommand)
// ---------------------------------------------------------------------------

inline VertexSet vertex_set_from_json(const json& j) {
    std::vector<Vertex> ids;
    for (const auto& v : j) ids.push_back(v.get<Vertex>());
    return VertexSet(std::move(ids));
}

inline SeparatorCertificate separator_certificate_from_json(const json& j) {
    SeparatorCertificate cert;
    cert.S = vertex_set_from_json(j.at("S"));
    cert.A = vertex_set_from_json(j.at("A"));
    cert.B = vertex_set_from_json(j.at("B"));
    return cert;
}

inline ShallowMinorCertificate minor_certificate_from_json(const json& j) {
    ShallowMinorCertificate cert;
    cert.depth = j.at("depth").get<int>();
    for (const auto& bs : j.at("branch_sets")) cert.branch_sets.push_back(vertex_set_from_json(bs));
    for (const auto& c : j.at("centers")) cert.centers.push_back(c.get<Vertex>());
    // witness pairs are serialized in lexicographic (i, j) order
    std::size_t idx = 0;
    const int h = static_cast<int>(cert.branch_sets.size());
    for (int i = 0; i < h; ++i)
        for (int jj = i + 1; jj < h; ++jj) {
            if (idx >= j.at("witness_edges").size()) break;
            const auto& we = j.at("witness_edges")[idx++];
            cert.witness_edges.push_back(
                {i, jj, we.at(0).get<Vertex>(), we.at(1).get<Vertex>()});
        }
    return cert;
}

inline Division division_from_json(const json& j, Vertex n) {
    Division d;
    for (const auto& c : j.at("clusters")) d.clusters.push_back(vertex_set_from_json(c));
    d.multiplicity.assign(static_cast<std::size_t>(n), 0);
    for (const auto& c : d.clusters)
        for (Vertex v : c)
            if (v >= 0 && v < n) ++d.multiplicity[static_cast<std::size_t>(v)];
    std::vector<Vertex> boundary, interior;
    for (Vertex v = 0; v < n; ++v)
        (d.multiplicity[static_cast<std::size_t>(v)] >= 2 ? boundary : interior).push_back(v);
    d.boundary = VertexSet(std::move(boundary));
    d.interior = VertexSet(std::move(interior));
    d.total_excess = j.at("total_excess").get<long long>();
    return d;
}

// ---------------------------------------------------------------------------
// Segment / interval files: CSV, one object per line.
//   d=1: "l,r"   d=2: "x1,y1,x2,y2"   d=3: "x1,y1,z1,x2,y2,z2"
// '#' starts a comment.
// ---------------------------------------------------------------------------

struct SegmentFile {
    int dim = 0;
    std::vector<Segment<1>> segs1;
    std::vector<Segment<2>> segs2;
    std::vector<Segment<3>> segs3;

    std::size_t size() const {
        return dim == 1 ? segs1.size() : dim == 2 ? segs2.size() : segs3.size();
    }
};

inline SegmentFile parse_segments(std::istream& in, const std::string& source = "<stream>") {
    SegmentFile out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<double> vals;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            std::size_t pos = 0;
            cell.erase(0, cell.find_first_not_of(" \t\r"));
            if (cell.empty()) continue;
            try {
                vals.push_back(std::stod(cell, &pos));
            } catch (const std::exception&) {
                throw ParseError(source + ":" + std::to_string(lineno) + ": bad number '" + cell +
                                 "'");
            }
        }
        if (vals.empty()) continue;
        int dim;
        switch (vals.size()) {
            case 2: dim = 1; break;
            case 4: dim = 2; break;
            case 6: dim = 3; break;
            default:
                throw ParseError(source + ":" + std::to_string(lineno) +
                                 ": expected 2, 4 or 6 comma-separated coordinates");
        }
        if (out.dim == 0)
            out.dim = dim;
        else if (out.dim != dim)
            throw ParseError(source + ":" + std::to_string(lineno) + ": mixed dimensions in file");
        if (dim == 1)
            out.segs1.push_back({{{vals[0]}}, {{vals[1]}}});
        else if (dim == 2)
            out.segs2.push_back({{{vals[0], vals[1]}}, {{vals[2], vals[3]}}});
        else
            out.segs3.push_back({{{vals[0], vals[1], vals[2]}}, {{vals[3], vals[4], vals[5]}}});
    }
    if (out.dim == 0) out.dim = 1;  // empty file: harmless default
    return out;
}

inline SegmentFile load_segments(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open segment file: " + path);
    return parse_segments(in, path);
}

template <int D>
inline void write_segments(std::ostream& out, const std::vector<Segment<D>>& segs) {
    out.precision(17);
    for (const auto& s : segs) {
        for (int i = 0; i < D; ++i) out << s.a[i] << ",";
        for (int i = 0; i < D; ++i) out << s.b[i] << (i + 1 < D ? "," : "\n");
    }
}

}  // namespace sepgeo
