#include "strata/report.hpp"

#include <chrono>
#include <sstream>

namespace strata {

namespace {

json simplex_json(const Simplex& s) {
    json a = json::array();
    for (Vertex v : s.vertices()) a.push_back(v);
    return a;
}

json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_int64(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json counts_json(const SimplicialComplex& k) {
    json a = json::array();
    for (auto n : k.cell_counts()) a.push_back(n);
    return a;
}

} // namespace

json stratification_report(const Stratification& strat) {
    json levels = json::array();
    for (int k = strat.top(); k >= 0; --k) {
        const auto& level = strat.filtration().level(k);
        json strata = json::array();
        for (const auto& s : strat.strata(k)) {
            json entry{{"id", s.id}, {"cells", s.cells.size()}, {"orientable", s.orientable}};
            if (s.certificate) {
                json walk = json::array();
                for (std::size_t i = 0; i < s.certificate->cells.size(); ++i)
                    walk.push_back({{"cell", simplex_json(s.certificate->cells[i])},
                                    {"face", simplex_json(s.certificate->faces[i])}});
                entry["certificate"] = std::move(walk);
            }
            strata.push_back(std::move(entry));
        }
        levels.push_back({{"level", k}, {"cell_counts", counts_json(level)},
                          {"strata", std::move(strata)}});
    }
    return levels;
}

json chain_report(const CoordinateChainComplex& chain) {
    json groups = json::array();
    for (int k = chain.top; k >= 0; --k)
        groups.push_back({{"degree", k}, {"axes", chain.group(k).axis_labels}});
    json boundaries = json::array();
    for (int k = chain.top - 1; k >= 0; --k) {
        const auto& m = chain.boundaries[static_cast<std::size_t>(k)];
        boundaries.push_back({{"from", k + 1}, {"to", k}, {"rows", m.rows()}, {"cols", m.cols()},
                              {"entries", matrix_json(m)}});
    }
    json basis = json::array();
    for (std::size_t c = 0; c < chain.cycle_basis.cols(); ++c) {
        json v = json::array();
        for (const auto& q : chain.cycle_basis.dense_column(c)) v.push_back(to_int64(q));
        basis.push_back(std::move(v));
    }
    return {{"dims", chain.dims_descending()},
            {"groups", std::move(groups)},
            {"boundaries", std::move(boundaries)},
            {"cycle_basis", std::move(basis)}};
}

json matroid_report(const OrientedMatroidClass& matroid) {
    json circuits = json::array();
    for (const auto& c : matroid.circuits) {
        // Report circuits in ground labels (stratum ids).
        json pos = json::array(), neg = json::array();
        for (auto e : c.positive)
            pos.push_back(matroid.ground_labels.empty() ? e : matroid.ground_labels[e]);
        for (auto e : c.negative)
            neg.push_back(matroid.ground_labels.empty() ? e : matroid.ground_labels[e]);
        circuits.push_back({{"positive", std::move(pos)}, {"negative", std::move(neg)}});
    }
    return {{"ground_size", matroid.ground_size},
            {"ground_labels", matroid.ground_labels},
            {"circuits", std::move(circuits)},
            {"canonical_form", matroid.canonical_form}};
}

json word_to_json(const Word& w) {
    json a = json::array();
    for (const auto& l : w) {
        const auto id = static_cast<std::int64_t>(l.edge) + 1;
        a.push_back(l.dir > 0 ? id : -id);
    }
    return a;
}

json attachment_to_json(const BoundaryAttachment& a) {
    if (const auto* k = std::get_if<ConstantAttachment>(&a))
        return {{"type", "constant"}, {"level", k->level}, {"target", k->target}};
    if (const auto* w = std::get_if<WordAttachment>(&a))
        return {{"type", "word"}, {"letters", word_to_json(w->letters)}};
    const auto& c = std::get<CircleCoverAttachment>(a);
    return {{"type", "circle_cover"},
            {"circle", c.circle},
            {"degree", c.degree},
            {"direction", c.direction}};
}

json invariant_report(const TautInvariant& inv) {
    json edges = json::array();
    for (const auto& e : inv.graph.edges)
        edges.push_back({{"id", e.stratum}, {"tail", e.tail}, {"head", e.head}});
    json loops = json::array();
    for (const auto& [v, n] : inv.graph.loops_at_vertex) loops.push_back({{"vertex", v}, {"loops", n}});
    json surfaces = json::array();
    for (const auto& s : inv.surfaces) {
        json boundary = json::array();
        for (const auto& b : s.boundary) boundary.push_back(attachment_to_json(b));
        surfaces.push_back({{"stratum", s.stratum},
                            {"euler_characteristic", s.euler_char},
                            {"orientable", s.orientable},
                            {"boundary_components", s.boundary.size()},
                            {"boundary", std::move(boundary)}});
    }
    return {{"graph",
             {{"vertices", inv.graph.vertices},
              {"edges", std::move(edges)},
              {"circles", inv.graph.circles},
              {"loops", std::move(loops)}}},
            {"surfaces", std::move(surfaces)},
            {"abelianized_boundary", matrix_json(inv.boundary_matrix)}};
}

json certificate_report(const HomeomorphismCertificate& cert) {
    json vertices = json::array();
    for (const auto& [a, b] : cert.vertices) vertices.push_back({a, b});
    auto mapped = [](const std::vector<MappedEdge>& list) {
        json out = json::array();
        for (const auto& e : list)
            out.push_back({{"from", e.from}, {"to", e.to}, {"orientation", e.orientation}});
        return out;
    };
    json surfaces = json::array();
    for (const auto& s : cert.surfaces) {
        json boundary = json::array();
        for (const auto& [i, j, flip] : s.boundary)
            boundary.push_back({{"from", i}, {"to", j}, {"reversed", flip}});
        surfaces.push_back({{"from", s.from},
                            {"to", s.to},
                            {"reversed", s.reversed},
                            {"boundary", std::move(boundary)}});
    }
    return {{"vertices", std::move(vertices)},
            {"edges", mapped(cert.edges)},
            {"circles", mapped(cert.circles)},
            {"surfaces", std::move(surfaces)}};
}

json offending_report(const std::vector<OffendingCircle>& offending) {
    json out = json::array();
    for (const auto& o : offending) {
        json edges = json::array();
        for (const auto& [a, b] : o.circle.edges) edges.push_back({a, b});
        out.push_back({{"stratum", o.stratum}, {"edges", std::move(edges)}});
    }
    return out;
}

json analyze(const SimplicialComplex& complex, const AnalyzeOptions& options) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    json report;
    report["input"] = {{"name", complex.name()},
                       {"dimension", complex.dimension()},
                       {"cell_counts", counts_json(complex)}};

    const Stratification strat(complex);
    report["filtration"] = stratification_report(strat);
    const auto t1 = clock::now();

    const auto chain = assemble(strat);
    report["chain_complex"] = chain_report(chain);
    const auto top = top_homology_dim(chain);
    const auto oracle = simplicial_top_cycles_dim(complex);
    report["top_homology"] = {{"dimension", top}, {"oracle", oracle}};
    if (top != oracle)
        throw HomologyMismatch("top homology " + std::to_string(top) +
                               " from the strata chain complex disagrees with the simplicial oracle " +
                               std::to_string(oracle));
    const auto t2 = clock::now();

    const auto ground = chain.top >= 0 ? chain.group(chain.top).dim() : 0;
    if (ground > options.max_ground) {
        report["matroid"] = {{"skipped", "ground size " + std::to_string(ground) +
                                             " exceeds --max-ground " +
                                             std::to_string(options.max_ground)}};
    } else {
        OrientedMatroidClass m;
        if (chain.top >= 0) {
            const auto circuits = enumerate_circuits(chain.cycle_basis, ground, options.max_ground);
            m = canonical_reorientation_class(circuits, ground, options.max_ground);
            m.ground_labels = chain.group(chain.top).axis_labels;
        } else {
            m = canonical_reorientation_class({}, 0, options.max_ground);
        }
        report["matroid"] = matroid_report(m);
    }
    const auto t3 = clock::now();

    if (complex.dimension() <= 2) {
        const auto check = check_taut(strat);
        if (check.taut) {
            report["taut"] = {{"taut", true}, {"invariant", invariant_report(build_invariant(strat, chain))}};
        } else {
            report["taut"] = {{"taut", false}, {"offending", offending_report(check.offending)}};
        }
    } else {
        report["taut"] = nullptr;
    }
    const auto t4 = clock::now();

    if (options.timing) {
        auto ms = [](auto a, auto b) {
            return std::chrono::duration<double, std::milli>(b - a).count();
        };
        report["timing_ms"] = {{"stratify", ms(t0, t1)},
                               {"chain", ms(t1, t2)},
                               {"matroid", ms(t2, t3)},
                               {"taut", ms(t3, t4)},
                               {"total", ms(t0, t4)}};
    }
    return report;
}

namespace {

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
    const bool scalar_array =
        j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, path.empty() ? key : path + "." + key, os);
    } else if (j.is_array() && !scalar_array) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

} // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    flatten(report, "", os);
    return os.str();
}

} // namespace strata
