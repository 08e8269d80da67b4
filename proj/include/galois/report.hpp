#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galois/correspondence.hpp"
#include "galois/counters.hpp"

namespace galois {

// Everything the renderers need about one analysis run. Counters stand
// in for timing so identical inputs produce byte-identical reports.
struct AnalysisResult {
    std::string input_text;
    QPoly input_poly;
    QPoly analyzed;  // squarefree part of the input
    CorrespondenceReport report;
    WorkCounters counters;
};

std::string render_text(const AnalysisResult& r);
std::string render_json(const AnalysisResult& r);
// Hasse diagram of the subgroup lattice: nodes carry subgroup order plus
// fixed-field degree and minimal polynomial; edges are covering
// relations only, obtained from full inclusion by transitive reduction.
std::string render_dot(const AnalysisResult& r);

struct SweepFieldItem {
    int q = 0;
    int p = 0;
    int n = 0;
    bool union_proper = false;  // proper subfields fail to cover
    int union_size = 0;
    bool correspondence = false;
    int subgroup_count = 0;
    std::string detail;
};

struct SweepSubspaceItem {
    int q = 0;
    std::optional<int> min_cover;
    int expected = 0;
    bool ok = false;
};

struct SweepReport {
    int pmax = 0;
    int qmax = 0;
    std::vector<SweepFieldItem> fields;
    std::vector<SweepSubspaceItem> subspaces;
    bool all_pass = false;
};

std::string render_sweep_text(const SweepReport& r);
std::string render_sweep_json(const SweepReport& r);

}  // namespace galois
