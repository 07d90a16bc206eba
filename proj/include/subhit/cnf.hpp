#ifndef SUBHIT_CNF_HPP
#define SUBHIT_CNF_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace subhit {

// CNF formula in DIMACS conventions: variables 1..nvars, literals +v / -v.
struct CnfFormula {
    int nvars = 0;
    std::vector<std::vector<int>> clauses;

    int m() const { return static_cast<int>(clauses.size()); }
};

CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const CnfFormula& f);

// Exhaustive assignment search; guarded to nvars <= 30.
bool brute_force_sat(const CnfFormula& f);

// Clean form: every variable occurs exactly three times with both signs
// present, clauses have 2 or 3 literals, no clause repeats a variable.
// Vacuously true for a formula without variables and clauses.
bool is_clean(const CnfFormula& f);

// Cleaning transformation, equisatisfiable with the input. Preprocessing
// to fixpoint: drop tautologies and duplicate literals, eliminate pure
// literals, propagate units; a derived empty clause yields a fixed
// unsatisfiable clean formula. Every surviving variable (which then has
// >= 2 occurrences with both signs) is replaced by an implication cycle
// with one fresh variable per occurrence. Throws ContractViolationError
// on clauses with more than 3 literals.
CnfFormula clean_3cnf(const CnfFormula& f);

} // namespace subhit

#endif
