#include "cycpres/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace cycpres {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json graph_object(const Multigraph& g) {
    ordered_json j;
    j["n"] = g.vertex_count / 2;
    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : g.edges)
        edges.push_back({g.labels[static_cast<size_t>(a)], g.labels[static_cast<size_t>(b)]});
    j["edges"] = std::move(edges);
    const Metrics met = metrics(g);
    j["girth"] = met.girth ? ordered_json(*met.girth) : ordered_json(nullptr);
    j["diameter"] = met.diameter_per_component;
    j["components"] = met.component_count;
    j["regular"] = met.regular_degree ? ordered_json(*met.regular_degree) : ordered_json(nullptr);
    return j;
}

ordered_json certificate_object(const SpecialCertificate& cert, const TheoremVerdict& tv,
                                const GroupFlags& flags) {
    ordered_json j;
    j["special"] = cert.special;
    j["m"] = cert.m ? ordered_json(*cert.m) : ordered_json(nullptr);
    j["k"] = cert.k;
    j["nu"] = cert.nu;
    ordered_json comps = ordered_json::array();
    for (const ComponentReport& c : cert.components) {
        ordered_json jc;
        jc["vertices"] = c.vertices;
        jc["girth"] = c.girth ? ordered_json(*c.girth) : ordered_json(nullptr);
        jc["diameter"] = c.diameter;
        jc["min_degree"] = c.min_degree;
        jc["recognized_as"] = c.recognized;
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    if (tv.outcome == TheoremOutcome::Special) {
        ordered_json w;
        if (tv.pds) w["pds"] = *tv.pds;
        if (tv.circulant_form) w["circulant_form"] = *tv.circulant_form;
        if (tv.q0) w["q0"] = *tv.q0;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    ordered_json checker;
    checker["name"] = tv.checker;
    checker["verdict"] = to_string(tv.outcome);
    if (tv.outcome != TheoremOutcome::Special && !tv.reason.empty())
        checker["failed_clause"] = tv.reason;
    j["theorem_checker"] = std::move(checker);
    if (!cert.special && !cert.failure_reason.empty())
        j["failure_reason"] = cert.failure_reason;
    ordered_json f;
    f["large"] = to_string(flags.large);
    f["tits"] = to_string(flags.tits);
    f["hyperbolic"] = flags.hyperbolic;
    j["flags"] = std::move(f);
    return j;
}

}  // namespace

std::string to_json(const RedundancyReport& rep) {
    ordered_json j;
    j["n"] = rep.n;
    j["word"] = format_word(rep.word);
    j["kind"] = to_string(rep.kind);
    j["root_power"] = rep.root_power;
    j["period"] = {{"u", format_word(rep.period.u)}, {"h", rep.period.h}};
    if (rep.rotation) j["rotation"] = *rep.rotation;
    if (rep.half_word) j["half_word"] = format_word(*rep.half_word);
    j["refinement_t"] = rep.refinement_size;
    j["deficiency"] = rep.n - rep.refinement_size;
    return j.dump(2);
}

std::string to_json(const Truncation& tr) {
    ordered_json j;
    j["n"] = tr.n;
    j["t"] = tr.t;
    j["word"] = format_word(tr.w);
    j["deficiency"] = tr.deficiency();
    ordered_json rels = ordered_json::array();
    for (const Word& r : tr.relators()) rels.push_back(format_word(r));
    j["relators"] = std::move(rels);
    return j.dump(2);
}

std::string to_json(const Multigraph& g) { return graph_object(g).dump(2); }

std::string to_json(const SpecialCertificate& cert, const TheoremVerdict& tv,
                    const GroupFlags& flags) {
    return certificate_object(cert, tv, flags).dump(2);
}

std::string to_json_line(const Counterexample& ce) {
    ordered_json j;
    j["check"] = ce.check;
    j["n"] = ce.n;
    j["word"] = ce.word;
    j["detail"] = ce.detail;
    return j.dump();
}

std::string to_json_line(const SpecialHit& hit) {
    ordered_json j;
    j["n"] = hit.n;
    j["word"] = format_word(hit.word);
    j["m"] = hit.certificate.m ? ordered_json(*hit.certificate.m) : ordered_json(nullptr);
    j["k"] = hit.certificate.k;
    j["nu"] = hit.certificate.nu;
    j["checker"] = hit.verdict.checker;
    j["checker_verdict"] = to_string(hit.verdict.outcome);
    return j.dump();
}

std::string summary_json_line(const CrossValidationReport& rep) {
    ordered_json j;
    j["summary"]["words_checked"] = rep.words_checked;
    j["summary"]["counterexamples"] = static_cast<long long>(rep.counterexamples.size());
    ordered_json runs;
    for (const auto& [name, count] : rep.checks_run) runs[name] = count;
    j["summary"]["checks_run"] = std::move(runs);
    return j.dump();
}

std::string to_text(const RedundancyReport& rep) {
    std::ostringstream os;
    os << "P_" << rep.n << "(" << format_word(rep.word) << "): " << to_string(rep.kind)
       << "\n";
    if (rep.root_power != 1)
        os << "  proper power: w = v^" << rep.root_power << " with root v of length "
           << rep.word.length() / rep.root_power << "\n";
    if (rep.kind == RedundancyKind::OrientableRedundant || rep.period.h != 0) {
        os << "  period: u = " << format_word(rep.period.u) << ", h = " << rep.period.h
           << "  (root = product of theta^{i*" << rep.period.h << "}(u))\n";
    } else {
        os << "  period: u = w, h = 0 (no shift period)\n";
    }
    if (rep.rotation && rep.half_word) {
        os << "  normal form: phi^" << *rep.rotation << "(w) = u * theta^" << rep.n / 2
           << "(u)^-1 with u = " << format_word(*rep.half_word) << "\n";
    }
    os << "  refinement: t = " << rep.refinement_size << ", deficiency = "
       << rep.n - rep.refinement_size << "\n";
    return os.str();
}

std::string to_text(const Truncation& tr) {
    std::ostringstream os;
    os << "P_{" << tr.n << "," << tr.t << "}(" << format_word(tr.w)
       << "): t = " << tr.t << ", deficiency = " << tr.deficiency() << "\n";
    const auto rels = tr.relators();
    for (size_t i = 0; i < rels.size(); ++i)
        os << "  relator " << i << ": " << format_word(rels[i]) << "\n";
    return os.str();
}

std::string to_text(const Multigraph& g) {
    std::ostringstream os;
    const Metrics met = metrics(g);
    os << "star graph on " << g.vertex_count << " vertices, " << g.edges.size()
       << " edges\n";
    for (const auto& [a, b] : g.edges)
        os << "  " << g.labels[static_cast<size_t>(a)] << " -- "
           << g.labels[static_cast<size_t>(b)] << "\n";
    os << "  components: " << met.component_count << "\n";
    os << "  girth: ";
    if (met.girth)
        os << *met.girth;
    else
        os << "none (acyclic)";
    os << "\n  diameter per component:";
    for (int d : met.diameter_per_component) os << " " << d;
    os << "\n  bipartite: " << (met.bipartite ? "yes" : "no") << "\n";
    os << "  regular: ";
    if (met.regular_degree)
        os << "yes, degree " << *met.regular_degree;
    else
        os << "no";
    os << "\n";
    return os.str();
}

std::string to_text(const SpecialCertificate& cert, const TheoremVerdict& tv,
                    const GroupFlags& flags) {
    std::ostringstream os;
    if (cert.special) {
        os << "special: yes (m = " << (cert.m ? *cert.m : 0) << ", k = " << cert.k
           << ", nu = " << cert.nu << ")\n";
    } else {
        os << "special: no (" << cert.failure_reason << ")\n";
    }
    for (size_t i = 0; i < cert.components.size(); ++i) {
        const ComponentReport& c = cert.components[i];
        os << "  component " << i << ": " << c.vertices << " vertices, " << c.edges
           << " edges, girth ";
        if (c.girth)
            os << *c.girth;
        else
            os << "none";
        os << ", diameter " << c.diameter << ", min degree " << c.min_degree << ", "
           << c.recognized << "\n";
    }
    os << "theorem checker " << tv.checker << ": " << to_string(tv.outcome);
    if (tv.outcome == TheoremOutcome::Special) {
        os << " (m = " << tv.m << ", k = " << tv.k << ", nu = " << tv.nu << ")";
        if (tv.pds) {
            os << ", pds {";
            for (size_t i = 0; i < tv.pds->size(); ++i)
                os << (i ? "," : "") << (*tv.pds)[i];
            os << "}";
        }
        if (tv.circulant_form) os << ", " << *tv.circulant_form;
        if (tv.q0) os << ", q0 = " << *tv.q0;
    } else if (!tv.reason.empty()) {
        os << " (" << tv.reason << ")";
    }
    os << "\nflags: large = " << to_string(flags.large) << ", tits = "
       << to_string(flags.tits) << ", hyperbolic = " << (flags.hyperbolic ? "yes" : "no")
       << "\n";
    return os.str();
}

}  // namespace cycpres
