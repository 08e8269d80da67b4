#include "galois/report.hpp"

#include <json.hpp>

#include <sstream>

namespace galois {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coords_json(const std::vector<Rational>& coords) {
    ordered_json arr = ordered_json::array();
    for (const Rational& c : coords) arr.push_back(to_string(c));
    return arr;
}

ordered_json field_json(const AnalysisResult& r) {
    const SplitField& sf = r.report.split;
    ordered_json field;
    field["input"] = r.input_text;
    field["analyzed"] = to_string(r.analyzed);
    field["degree"] = sf.degree();
    field["modulus"] = to_string(sf.field()->modulus());

    ordered_json tower = ordered_json::array();
    for (const auto& lvl : sf.tower.all_levels()) {
        ordered_json item;
        item["name"] = lvl.name;
        item["relative_degree"] = lvl.rel_defining.degree();
        tower.push_back(item);
    }
    field["tower"] = tower;

    ordered_json roots = ordered_json::array();
    for (const NfElem& root : sf.roots) roots.push_back(coords_json(root.coords()));
    field["roots"] = roots;
    return field;
}

ordered_json group_json(const CorrespondenceReport& rep) {
    ordered_json group;
    group["order"] = rep.group.order();
    group["acts_on_roots"] = rep.group.degree();

    bool abelian = true;
    for (int i = 0; i < rep.group.order() && abelian; ++i)
        for (int j = 0; j < i; ++j)
            if (rep.group.compose(i, j) != rep.group.compose(j, i)) {
                abelian = false;
                break;
            }
    group["abelian"] = abelian;

    ordered_json orders = ordered_json::array();
    for (int i = 0; i < rep.group.order(); ++i) {
        int ord = 1;
        int cur = i;
        while (cur != rep.group.identity_index()) {
            cur = rep.group.compose(cur, i);
            ++ord;
        }
        orders.push_back(ord);
    }
    group["element_orders"] = orders;

    ordered_json elems = ordered_json::array();
    for (int i = 0; i < rep.group.order(); ++i) {
        ordered_json p = ordered_json::array();
        for (int v : rep.group.element(i)) p.push_back(v);
        elems.push_back(p);
    }
    group["elements"] = elems;
    return group;
}

ordered_json lattice_json(const CorrespondenceReport& rep) {
    ordered_json lattice = ordered_json::array();
    for (const SubgroupData& d : rep.lattice) {
        ordered_json item;
        ordered_json sub;
        sub["order"] = d.subgroup.order();
        ordered_json members = ordered_json::array();
        for (int m : d.subgroup.members) members.push_back(m);
        sub["members"] = members;
        item["subgroup"] = sub;

        ordered_json fld;
        fld["degree"] = d.fixed.degree();
        fld["min_poly"] = to_string(d.fixed.min_poly);
        fld["primitive"] = coords_json(d.fixed.primitive.coords());
        item["fixed_field"] = fld;

        item["subgroup_normal"] = d.subgroup_normal;
        item["field_normal"] = d.field_normal;
        lattice.push_back(item);
    }
    return lattice;
}

ordered_json verdicts_json(const CorrespondenceReport& rep) {
    ordered_json verdicts = ordered_json::array();
    for (const Verdict& v : rep.verdicts) {
        ordered_json item;
        item["part"] = v.name;
        item["pass"] = v.pass;
        item["witnesses"] = v.detail;
        verdicts.push_back(item);
    }
    return verdicts;
}

ordered_json timing_json(const WorkCounters& c) {
    ordered_json timing;
    timing["tuples_tested"] = c.tuples_tested;
    timing["reconstructions"] = c.reconstructions;
    timing["exact_checks"] = c.exact_checks;
    timing["max_precision_bits"] = c.max_precision_bits;
    return timing;
}

}  // namespace

std::string render_json(const AnalysisResult& r) {
    ordered_json j;
    j["field"] = field_json(r);
    j["group"] = group_json(r.report);
    j["lattice"] = lattice_json(r.report);
    j["verdicts"] = verdicts_json(r.report);
    j["timing"] = timing_json(r.counters);
    return j.dump(2) + "\n";
}

std::string render_text(const AnalysisResult& r) {
    std::ostringstream out;
    const CorrespondenceReport& rep = r.report;
    out << "input: " << r.input_text << "\n";
    if (!(r.analyzed == r.input_poly))
        out << "analyzed squarefree part: " << to_string(r.analyzed) << "\n";
    out << "splitting field degree: " << rep.split.degree() << "\n";
    out << "field presentation: Q[x]/(" << to_string(rep.split.field()->modulus()) << ")\n";
    out << "automorphism group order: " << rep.group.order() << "\n";
    out << "subgroups: " << rep.lattice.size() << "\n\n";

    out << "lattice (subgroup order -> fixed field degree, minimal polynomial):\n";
    for (const SubgroupData& d : rep.lattice) {
        out << "  |H| = " << d.subgroup.order() << "  ->  [E:Q] = " << d.fixed.degree()
            << ", E = Q[t]/(" << to_string(d.fixed.min_poly, "t") << ")";
        if (d.subgroup_normal) out << "  (normal)";
        out << "\n";
    }
    out << "\n";

    for (const Verdict& v : rep.verdicts)
        out << (v.pass ? "[PASS] " : "[FAIL] ") << v.name << ": " << v.detail << "\n";
    out << "\n" << (rep.all_pass ? "all checks passed" : "verification failed") << "\n";
    return out.str();
}

std::string render_dot(const AnalysisResult& r) {
    const auto& lattice = r.report.lattice;
    const size_t n = lattice.size();

    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            lt[i][j] = i != j && lattice[j].subgroup.contains_all(lattice[i].subgroup) &&
                       !(lattice[i].subgroup == lattice[j].subgroup);

    std::ostringstream out;
    out << "digraph subgroup_lattice {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (size_t i = 0; i < n; ++i) {
        out << "  s" << i << " [label=\"|H| = " << lattice[i].subgroup.order()
            << "\\n[E:Q] = " << lattice[i].fixed.degree() << "\\n"
            << to_string(lattice[i].fixed.min_poly, "t") << "\"];\n";
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!lt[i][j]) continue;
            bool covering = true;
            for (size_t k = 0; k < n && covering; ++k)
                if (lt[i][k] && lt[k][j]) covering = false;
            if (covering) out << "  s" << i << " -> s" << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string render_sweep_json(const SweepReport& r) {
    ordered_json j;
    j["pmax"] = r.pmax;
    j["qmax"] = r.qmax;

    ordered_json fields = ordered_json::array();
    for (const SweepFieldItem& f : r.fields) {
        ordered_json item;
        item["q"] = f.q;
        item["p"] = f.p;
        item["n"] = f.n;
        item["union_of_proper_subfields_is_proper"] = f.union_proper;
        item["union_size"] = f.union_size;
        item["correspondence"] = f.correspondence;
        item["subgroup_count"] = f.subgroup_count;
        fields.push_back(item);
    }
    j["fields"] = fields;

    ordered_json subs = ordered_json::array();
    for (const SweepSubspaceItem& s : r.subspaces) {
        ordered_json item;
        item["q"] = s.q;
        if (s.min_cover)
            item["min_cover"] = *s.min_cover;
        else
            item["min_cover"] = "none";
        item["expected"] = s.expected;
        item["pass"] = s.ok;
        subs.push_back(item);
    }
    j["subspaces"] = subs;
    j["all_pass"] = r.all_pass;
    return j.dump(2) + "\n";
}

std::string render_sweep_text(const SweepReport& r) {
    std::ostringstream out;
    out << "finite field sweep, p^n <= " << r.pmax << "\n";
    int ok = 0;
    for (const SweepFieldItem& f : r.fields)
        if (f.union_proper && f.correspondence) ++ok;
    out << "  " << r.fields.size() << " fields checked, " << ok << " passed\n";
    for (const SweepFieldItem& f : r.fields)
        if (!f.union_proper || !f.correspondence)
            out << "  FAIL at q = " << f.q << ": " << f.detail << "\n";

    out << "subspace covers of F_q^2, q <= " << r.qmax << "\n";
    for (const SweepSubspaceItem& s : r.subspaces) {
        out << "  q = " << s.q << ": minimum cover by proper subspaces = ";
        if (s.min_cover)
            out << *s.min_cover;
        else
            out << "none";
        out << " (expected " << s.expected << ") " << (s.ok ? "ok" : "FAIL") << "\n";
    }
    out << (r.all_pass ? "all checks passed" : "verification failed") << "\n";
    return out.str();
}

}  // namespace galois
