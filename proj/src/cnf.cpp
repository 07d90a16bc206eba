#include "subhit/cnf.hpp"

#include "subhit/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace subhit {

CnfFormula read_dimacs(std::istream& in) {
    CnfFormula f;
    bool seen_header = false;
    std::string line;
    int declared_m = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        if (first == "p") {
            std::string kind;
            if (seen_header || !(ls >> kind >> f.nvars >> declared_m) || kind != "cnf" ||
                f.nvars < 0 || declared_m < 0)
                throw ParseError("dimacs: bad header line: " + line);
            seen_header = true;
            continue;
        }
        if (!seen_header) throw ParseError("dimacs: clause before header");
        std::vector<int> clause;
        int lit = std::atoi(first.c_str());
        if (lit == 0 && first != "0") throw ParseError("dimacs: bad literal: " + first);
        while (lit != 0) {
            if (std::abs(lit) > f.nvars)
                throw ParseError("dimacs: literal " + std::to_string(lit) +
                                 " out of range");
            clause.push_back(lit);
            if (!(ls >> lit)) throw ParseError("dimacs: clause not 0-terminated: " + line);
        }
        f.clauses.push_back(std::move(clause));
    }
    if (!seen_header) throw ParseError("dimacs: missing header");
    if (f.m() != declared_m)
        throw ParseError("dimacs: header declares " + std::to_string(declared_m) +
                         " clauses, found " + std::to_string(f.m()));
    return f;
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.nvars << ' ' << f.m() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
}

bool brute_force_sat(const CnfFormula& f) {
    contract_check(f.nvars <= 30, "brute_force_sat: too many variables");
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << f.nvars); ++assign) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool value = (assign >> (std::abs(lit) - 1)) & 1u;
                if (lit > 0 ? value : !value) { sat = true; break; }
            }
            if (!sat) { ok = false; break; }
        }
        if (ok) return true;
    }
    return false;
}

bool is_clean(const CnfFormula& f) {
    std::vector<int> pos(f.nvars + 1, 0), neg(f.nvars + 1, 0);
    for (const auto& clause : f.clauses) {
        if (clause.size() < 2 || clause.size() > 3) return false;
        std::vector<int> vars;
        for (int lit : clause) {
            int v = std::abs(lit);
            if (v < 1 || v > f.nvars) return false;
            vars.push_back(v);
            ++(lit > 0 ? pos : neg)[v];
        }
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) return false;
    }
    for (int v = 1; v <= f.nvars; ++v)
        if (pos[v] + neg[v] != 3 || pos[v] == 0 || neg[v] == 0) return false;
    return true;
}

namespace {

// Implication-cycle expansion; requires every variable to occur >= 2 times
// with both signs (what the preprocessing guarantees).
CnfFormula expand_to_clean(const CnfFormula& f) {
    std::vector<int> occ(f.nvars + 1, 0);
    for (const auto& clause : f.clauses)
        for (int lit : clause) ++occ[std::abs(lit)];

    std::vector<int> first_fresh(f.nvars + 1, 0);
    int next = 1;
    for (int v = 1; v <= f.nvars; ++v) {
        first_fresh[v] = next;
        next += occ[v];
    }

    CnfFormula out;
    out.nvars = next - 1;
    std::vector<int> used(f.nvars + 1, 0);
    for (const auto& clause : f.clauses) {
        std::vector<int> nc;
        for (int lit : clause) {
            int v = std::abs(lit);
            int fresh = first_fresh[v] + used[v]++;
            nc.push_back(lit > 0 ? fresh : -fresh);
        }
        out.clauses.push_back(std::move(nc));
    }
    for (int v = 1; v <= f.nvars; ++v)
        for (int i = 0; i < occ[v]; ++i) {
            int a = first_fresh[v] + i;
            int b = first_fresh[v] + (i + 1) % occ[v];
            out.clauses.push_back({-a, b});
        }
    return out;
}

CnfFormula dummy_unsat() {
    CnfFormula f;
    f.nvars = 2;
    f.clauses = {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
    return expand_to_clean(f);
}

} // namespace

CnfFormula clean_3cnf(const CnfFormula& f) {
    for (const auto& clause : f.clauses) {
        contract_check(clause.size() <= 3, "clean_3cnf: clause with more than 3 literals");
        for (int lit : clause)
            contract_check(lit != 0 && std::abs(lit) <= f.nvars,
                           "clean_3cnf: literal out of range");
    }

    // assigned[v]: 0 free, +1 true, -1 false.
    std::vector<int> assigned(f.nvars + 1, 0);
    std::vector<std::vector<int>> clauses = f.clauses;
    bool changed = true;
    while (changed) {
        changed = false;

        std::vector<std::vector<int>> next;
        for (const auto& clause : clauses) {
            std::vector<int> reduced;
            bool satisfied = false;
            for (int lit : clause) {
                int v = std::abs(lit), sign = lit > 0 ? 1 : -1;
                if (assigned[v] == sign) { satisfied = true; break; }
                if (assigned[v] == -sign) continue;
                if (std::find(reduced.begin(), reduced.end(), lit) != reduced.end())
                    continue;
                if (std::find(reduced.begin(), reduced.end(), -lit) != reduced.end()) {
                    satisfied = true; // tautology
                    break;
                }
                reduced.push_back(lit);
            }
            if (satisfied) continue;
            if (reduced.empty()) return dummy_unsat();
            next.push_back(std::move(reduced));
        }
        if (next != clauses) changed = true;
        clauses = std::move(next);

        for (const auto& clause : clauses)
            if (clause.size() == 1) {
                int v = std::abs(clause[0]);
                assigned[v] = clause[0] > 0 ? 1 : -1;
                changed = true;
            }
        if (changed) continue;

        std::vector<int> pos(f.nvars + 1, 0), neg(f.nvars + 1, 0);
        for (const auto& clause : clauses)
            for (int lit : clause) ++(lit > 0 ? pos : neg)[std::abs(lit)];
        for (int v = 1; v <= f.nvars; ++v)
            if (assigned[v] == 0 && (pos[v] == 0) != (neg[v] == 0)) {
                assigned[v] = pos[v] > 0 ? 1 : -1; // pure literal
                changed = true;
            }
    }

    if (clauses.empty()) return CnfFormula{};

    // Rename surviving variables to 1..n' before the cycle expansion.
    std::map<int, int> remap;
    for (const auto& clause : clauses)
        for (int lit : clause) remap.emplace(std::abs(lit), 0);
    int next_var = 0;
    for (auto& [v, id] : remap) id = ++next_var;
    CnfFormula packed;
    packed.nvars = next_var;
    for (const auto& clause : clauses) {
        std::vector<int> nc;
        for (int lit : clause) {
            int id = remap[std::abs(lit)];
            nc.push_back(lit > 0 ? id : -id);
        }
        packed.clauses.push_back(std::move(nc));
    }
    return expand_to_clean(packed);
}

} // namespace subhit
