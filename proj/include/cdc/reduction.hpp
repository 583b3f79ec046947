#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/gadgets.hpp"
#include "cdc/network.hpp"

namespace cdc {

struct Literal {
    int variable = 0;  // 1-based
    bool positive = true;
    friend bool operator==(const Literal&, const Literal&) = default;
};

/// Three literals over strictly ascending variable indices.
class Clause {
public:
    /// Sorts by variable; throws NotThreeSat when two literals share a variable.
    Clause(Literal a, Literal b, Literal c);

    [[nodiscard]] const std::array<Literal, 3>& literals() const { return literals_; }
    [[nodiscard]] const Literal& operator[](std::size_t i) const { return literals_[i]; }
    friend bool operator==(const Clause&, const Clause&) = default;

private:
    std::array<Literal, 3> literals_;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;
};

/// Clauses as read, before any 3-SAT shape checks.
struct RawCnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

/// Truth values indexed by variable - 1.
using Assignment = std::vector<bool>;

RawCnf parse_dimacs_raw(std::string_view text);
/// Throws ParseError on malformed input and NotThreeSat for clauses that do
/// not have exactly three distinct variables.
CnfFormula parse_dimacs(std::string_view text);
/// Equisatisfiable rewrite into exact 3-SAT: drops tautologies and repeated
/// literals, pads short clauses with fresh variables and splits long ones.
CnfFormula normalize_to_3sat(const RawCnf& raw);
std::string to_dimacs(const CnfFormula& f);

bool satisfies(const CnfFormula& f, const Assignment& a);
/// Exhaustive search in lexicographic order (all-false first). Throws
/// TooLarge above 24 variables.
std::optional<Assignment> brute_force_sat(const CnfFormula& f);

/// Parses "1=T,2=F,..." (also accepts true/false/1/0); every variable of a
/// formula with num_vars variables must be assigned exactly once.
Assignment parse_assignment(std::string_view text, int num_vars);

struct UlcLink {
    std::string u, v, w1, w2;
};

/// `aux` witnesses that `primary` is parallel to `reference`.
struct ParallelLink {
    std::string primary, reference, aux;
};

struct VariableNames {
    std::string u, nu, f, nf, f0;
};

struct FrameNames {
    std::string w_ref, f_ref, nf_ref, f0_ref;
};

struct ClauseNames {
    std::string v, w0, w_rs, w_st, w1;
    /// X_c in bridging order: w0, u_r*, w_rs, u_s*, w_st, u_t*, w1.
    std::array<std::string, 7> blockers;
};

/// Role -> network-variable names for a compiled formula.
struct VariableMap {
    std::vector<VariableNames> variables;  // index = variable - 1
    std::optional<FrameNames> frame;
    std::vector<ClauseNames> clauses;
    std::vector<UlcLink> ulc_links;
    std::vector<ParallelLink> parallel_links;
};

/// Naming scheme: u<i>, nu<i>, f<i>, nf<i>, f0_<i> per variable; w_ref, f_ref,
/// nf_ref, f0_ref for the reference frame; v_c<j>, w0_c<j>, wrs_c<j>,
/// wst_c<j>, w1_c<j> per clause (1-based j); auxiliaries _aux<k>.
void compile_variable(int i, NetworkBuilder& b, VariableMap& vm);
void compile_frame(int n, NetworkBuilder& b, VariableMap& vm);
void compile_clause(const Clause& c, NetworkBuilder& b, VariableMap& vm);

struct Reduction {
    Network network;
    VariableMap map;
};

Reduction compile_formula(const CnfFormula& f, CalculusMode mode = CalculusMode::Connected);

/// Variables: 14n + 4 + 7m. Constraints: 41n + 32m + 6.
std::size_t expected_variable_count(int n, std::size_t m);
std::size_t expected_constraint_count(int n, std::size_t m);

}  // namespace cdc
