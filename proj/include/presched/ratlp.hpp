#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "presched/rational.hpp"

namespace presched {

enum class Rel { LE, EQ, GE };
enum class Sense { Minimize, Maximize };
enum class SolStatus { Optimal, Infeasible, Unbounded };

/// Exact linear (or mixed 0-1) program.  Variables carry optional bounds;
/// constraints relate rational linear expressions to rational right-hand
/// sides.  Binary variables are ordinary [0,1] variables listed in
/// `binaries` and handled by solve_mip.
struct LpProblem {
    struct Variable {
        std::string name;
        std::optional<Rational> lower, upper;
    };
    struct Constraint {
        std::vector<std::pair<int, Rational>> terms;
        Rel rel = Rel::LE;
        Rational rhs;
    };

    std::vector<Variable> vars;
    std::vector<Constraint> cons;
    Sense sense = Sense::Minimize;
    std::vector<std::pair<int, Rational>> objective;
    std::vector<int> binaries;

    int add_variable(std::string name, std::optional<Rational> lower,
                     std::optional<Rational> upper) {
        for (const auto& v : vars)
            if (v.name == name) throw std::invalid_argument("duplicate variable: " + name);
        vars.push_back({std::move(name), std::move(lower), std::move(upper)});
        return static_cast<int>(vars.size()) - 1;
    }

    int add_binary(std::string name) {
        int idx = add_variable(std::move(name), Rational(0), Rational(1));
        binaries.push_back(idx);
        return idx;
    }

    void add_constraint(std::vector<std::pair<int, Rational>> terms, Rel rel, Rational rhs) {
        cons.push_back({normalize_terms(std::move(terms)), rel, std::move(rhs)});
    }

    void set_objective(Sense s, std::vector<std::pair<int, Rational>> terms) {
        sense = s;
        objective = normalize_terms(std::move(terms));
    }

    int variable(std::string_view name) const {
        for (int i = 0; i < static_cast<int>(vars.size()); ++i)
            if (vars[i].name == name) return i;
        throw std::invalid_argument("unknown variable: " + std::string(name));
    }

    /// Plain-text dump in the usual LP-file layout, for debugging only
    /// (not parsed back).
    std::string lp_text() const {
        std::ostringstream os;
        os << (sense == Sense::Minimize ? "Minimize" : "Maximize") << "\n obj:";
        write_expr(os, objective);
        os << "\nSubject To\n";
        for (std::size_t r = 0; r < cons.size(); ++r) {
            os << " c" << (r + 1) << ":";
            write_expr(os, cons[r].terms);
            os << (cons[r].rel == Rel::LE ? " <= " : cons[r].rel == Rel::EQ ? " = " : " >= ");
            os << cons[r].rhs << "\n";
        }
        os << "Bounds\n";
        for (const auto& v : vars) {
            if (v.lower && v.upper)
                os << " " << *v.lower << " <= " << v.name << " <= " << *v.upper << "\n";
            else if (v.lower && *v.lower != Rational(0))
                os << " " << v.name << " >= " << *v.lower << "\n";
            else if (!v.lower)
                os << " " << v.name << " free\n";
            else if (v.upper)
                os << " " << v.name << " <= " << *v.upper << "\n";
        }
        if (!binaries.empty()) {
            os << "Binaries\n";
            for (int b : binaries) os << " " << vars[b].name << "\n";
        }
        os << "End\n";
        return os.str();
    }

private:
    std::vector<std::pair<int, Rational>> normalize_terms(
        std::vector<std::pair<int, Rational>> terms) const {
        for (const auto& [idx, coef] : terms) {
            (void)coef;
            if (idx < 0 || idx >= static_cast<int>(vars.size()))
                throw std::invalid_argument("term references unknown variable index " +
                                            std::to_string(idx));
        }
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, Rational>> merged;
        for (auto& [idx, coef] : terms) {
            if (!merged.empty() && merged.back().first == idx)
                merged.back().second += coef;
            else
                merged.emplace_back(idx, coef);
        }
        std::erase_if(merged, [](const auto& t) { return t.second.sign() == 0; });
        return merged;
    }

    void write_expr(std::ostringstream& os,
                    const std::vector<std::pair<int, Rational>>& expr) const {
        if (expr.empty()) {
            os << " 0";
            return;
        }
        bool first = true;
        for (const auto& [idx, coef] : expr) {
            if (coef.sign() >= 0)
                os << (first ? " " : " + ");
            else
                os << " - ";
            Rational a = abs(coef);
            if (a != Rational(1)) os << a << " ";
            os << vars[idx].name;
            first = false;
        }
    }
};

struct LpSolution {
    SolStatus status = SolStatus::Infeasible;
    std::vector<Rational> values;  // one per variable when Optimal
    Rational objective_value;
};

/// Re-evaluates bounds, constraints, integrality of binaries and the
/// objective on a claimed Optimal solution.  Kept deliberately separate
/// from the solver internals.
inline bool check_solution(const LpProblem& p, const LpSolution& s, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (s.status != SolStatus::Optimal) return fail("not optimal");
    if (s.values.size() != p.vars.size()) return fail("value vector size mismatch");
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        if (p.vars[i].lower && s.values[i] < *p.vars[i].lower)
            return fail("below lower bound: " + p.vars[i].name);
        if (p.vars[i].upper && s.values[i] > *p.vars[i].upper)
            return fail("above upper bound: " + p.vars[i].name);
    }
    for (std::size_t r = 0; r < p.cons.size(); ++r) {
        Rational lhs(0);
        for (const auto& [idx, coef] : p.cons[r].terms) lhs += coef * s.values[idx];
        bool ok = p.cons[r].rel == Rel::LE   ? lhs <= p.cons[r].rhs
                  : p.cons[r].rel == Rel::EQ ? lhs == p.cons[r].rhs
                                             : lhs >= p.cons[r].rhs;
        if (!ok) return fail("constraint c" + std::to_string(r + 1) + " violated");
    }
    for (int b : p.binaries)
        if (s.values[b] != Rational(0) && s.values[b] != Rational(1))
            return fail("binary not integral: " + p.vars[b].name);
    Rational obj(0);
    for (const auto& [idx, coef] : p.objective) obj += coef * s.values[idx];
    if (obj != s.objective_value) return fail("objective mismatch");
    return true;
}

namespace lpdetail {

// Dense two-phase tableau simplex over exact rationals, Bland's rule
// throughout.  Minimizes.  Bound overrides let branch and bound fix
// binaries without copying the problem.
class Simplex {
public:
    Simplex(const LpProblem& p, const std::vector<std::optional<Rational>>& lb_override,
            const std::vector<std::optional<Rational>>& ub_override)
        : prob_(p) {
        int n = static_cast<int>(p.vars.size());
        lower_.resize(n);
        upper_.resize(n);
        for (int i = 0; i < n; ++i) {
            lower_[i] = lb_override[i] ? lb_override[i] : p.vars[i].lower;
            upper_[i] = ub_override[i] ? ub_override[i] : p.vars[i].upper;
        }
    }

    LpSolution solve() {
        build();
        if (!phase1()) return {SolStatus::Infeasible, {}, Rational(0)};
        if (!phase2()) return {SolStatus::Unbounded, {}, Rational(0)};
        return extract();
    }

private:
    const LpProblem& prob_;
    std::vector<std::optional<Rational>> lower_, upper_;

    // column layout: structural columns first, then slack, then artificial
    int struct_cols_ = 0;
    int total_cols_ = 0;
    int first_artificial_ = 0;
    // per original variable: column of x' (shifted) or columns of (xp, xn)
    struct VarMap {
        int col = -1;      // shifted column, or positive part when split
        int neg_col = -1;  // negative part when split
        Rational shift;    // value = shift + x'    (or xp - xn, shift 0)
    };
    std::vector<VarMap> map_;

    std::vector<std::vector<Rational>> tab_;  // rows x (total_cols_ + 1), last = rhs
    std::vector<int> basis_;                  // row -> column
    std::vector<Rational> cost_;              // phase-2 reduced cost row
    std::vector<Rational> cost1_;             // phase-1 reduced cost row

    struct Row {
        std::vector<Rational> coef;  // size struct_cols_
        Rel rel;
        Rational rhs;
    };

    void build() {
        int n = static_cast<int>(prob_.vars.size());
        map_.assign(n, {});
        struct_cols_ = 0;
        for (int i = 0; i < n; ++i) {
            if (lower_[i]) {
                map_[i].col = struct_cols_++;
                map_[i].shift = *lower_[i];
            } else {
                map_[i].col = struct_cols_++;
                map_[i].neg_col = struct_cols_++;
            }
        }

        std::vector<Row> rows;
        auto expr_row = [&](const std::vector<std::pair<int, Rational>>& terms, Rel rel,
                            Rational rhs) {
            Row row;
            row.coef.assign(struct_cols_, Rational(0));
            for (const auto& [idx, coef] : terms) {
                row.coef[map_[idx].col] += coef;
                if (map_[idx].neg_col >= 0) row.coef[map_[idx].neg_col] -= coef;
                rhs -= coef * map_[idx].shift;
            }
            row.rel = rel;
            row.rhs = std::move(rhs);
            rows.push_back(std::move(row));
        };

        for (const auto& c : prob_.cons) expr_row(c.terms, c.rel, c.rhs);
        for (int i = 0; i < n; ++i)
            if (upper_[i]) expr_row({{i, Rational(1)}}, Rel::LE, *upper_[i]);

        // normalize to rhs >= 0
        for (auto& row : rows) {
            if (row.rhs.sign() < 0) {
                for (auto& c : row.coef) c = -c;
                row.rhs = -row.rhs;
                row.rel = row.rel == Rel::LE ? Rel::GE : row.rel == Rel::GE ? Rel::LE : Rel::EQ;
            }
        }

        int m = static_cast<int>(rows.size());
        int slack_count = 0;
        for (const auto& row : rows)
            if (row.rel != Rel::EQ) ++slack_count;
        int artificial_count = 0;
        for (const auto& row : rows)
            if (row.rel != Rel::LE) ++artificial_count;

        first_artificial_ = struct_cols_ + slack_count;
        total_cols_ = first_artificial_ + artificial_count;

        tab_.assign(m, std::vector<Rational>(total_cols_ + 1, Rational(0)));
        basis_.assign(m, -1);
        int next_slack = struct_cols_;
        int next_art = first_artificial_;
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < struct_cols_; ++c) tab_[r][c] = rows[r].coef[c];
            tab_[r][total_cols_] = rows[r].rhs;
            if (rows[r].rel == Rel::LE) {
                tab_[r][next_slack] = Rational(1);
                basis_[r] = next_slack++;
            } else if (rows[r].rel == Rel::GE) {
                tab_[r][next_slack++] = Rational(-1);
                tab_[r][next_art] = Rational(1);
                basis_[r] = next_art++;
            } else {
                tab_[r][next_art] = Rational(1);
                basis_[r] = next_art++;
            }
        }
    }

    void pivot(int pr, int pc) {
        auto& prow = tab_[pr];
        Rational inv = Rational(1) / prow[pc];
        for (auto& v : prow)
            if (v.sign() != 0) v *= inv;
        prow[pc] = Rational(1);
        for (int r = 0; r < static_cast<int>(tab_.size()); ++r) {
            if (r == pr || tab_[r][pc].sign() == 0) continue;
            Rational f = tab_[r][pc];
            auto& row = tab_[r];
            for (int c = 0; c <= total_cols_; ++c)
                if (prow[c].sign() != 0) row[c] -= f * prow[c];
            row[pc] = Rational(0);
        }
        reduce_cost_row(cost1_, pr, pc);
        reduce_cost_row(cost_, pr, pc);
        basis_[pr] = pc;
    }

    void reduce_cost_row(std::vector<Rational>& row, int pr, int pc) {
        if (row.empty() || row[pc].sign() == 0) return;
        Rational f = row[pc];
        const auto& prow = tab_[pr];
        for (int c = 0; c <= total_cols_; ++c)
            if (prow[c].sign() != 0) row[c] -= f * prow[c];
        row[pc] = Rational(0);
    }

    // Runs Bland's rule on `cost`; returns false when an unbounded ray is
    // found (cannot happen in phase 1).
    bool iterate(std::vector<Rational>& cost, bool allow_artificial_entering) {
        for (;;) {
            int entering = -1;
            int limit = allow_artificial_entering ? total_cols_ : first_artificial_;
            for (int c = 0; c < limit; ++c)
                if (cost[c].sign() < 0) {
                    entering = c;
                    break;
                }
            if (entering < 0) return true;
            int leaving = -1;
            Rational best;
            for (int r = 0; r < static_cast<int>(tab_.size()); ++r) {
                if (tab_[r][entering].sign() <= 0) continue;
                Rational ratio = tab_[r][total_cols_] / tab_[r][entering];
                if (leaving < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leaving]))
                    leaving = r, best = ratio;
            }
            if (leaving < 0) return false;
            pivot(leaving, entering);
        }
    }

    bool phase1() {
        cost1_.assign(total_cols_ + 1, Rational(0));
        bool any_artificial = first_artificial_ < total_cols_;
        if (!any_artificial) return true;
        for (int c = first_artificial_; c < total_cols_; ++c) cost1_[c] = Rational(1);
        for (int r = 0; r < static_cast<int>(tab_.size()); ++r)
            reduce_cost_for_basic(cost1_, r);
        iterate(cost1_, true);
        Rational infeas(0);
        for (int r = 0; r < static_cast<int>(tab_.size()); ++r)
            if (basis_[r] >= first_artificial_) infeas += tab_[r][total_cols_];
        if (infeas.sign() > 0) return false;
        // pivot remaining artificials out of the basis where possible
        for (int r = 0; r < static_cast<int>(tab_.size()); ++r) {
            if (basis_[r] < first_artificial_) continue;
            int pc = -1;
            for (int c = 0; c < first_artificial_; ++c)
                if (tab_[r][c].sign() != 0) {
                    pc = c;
                    break;
                }
            if (pc >= 0) pivot(r, pc);
            // else: redundant row; harmless to keep (all-zero over real columns)
        }
        return true;
    }

    void reduce_cost_for_basic(std::vector<Rational>& row, int r) {
        int b = basis_[r];
        if (row[b].sign() == 0) return;
        Rational f = row[b];
        const auto& prow = tab_[r];
        for (int c = 0; c <= total_cols_; ++c)
            if (prow[c].sign() != 0) row[c] -= f * prow[c];
        row[b] = Rational(0);
    }

    bool phase2() {
        cost_.assign(total_cols_ + 1, Rational(0));
        Rational flip = prob_.sense == Sense::Minimize ? Rational(1) : Rational(-1);
        for (const auto& [idx, coef] : prob_.objective) {
            cost_[map_[idx].col] += flip * coef;
            if (map_[idx].neg_col >= 0) cost_[map_[idx].neg_col] -= flip * coef;
        }
        for (int r = 0; r < static_cast<int>(tab_.size()); ++r)
            reduce_cost_for_basic(cost_, r);
        return iterate(cost_, false);
    }

    LpSolution extract() const {
        std::vector<Rational> colval(total_cols_, Rational(0));
        for (int r = 0; r < static_cast<int>(tab_.size()); ++r)
            if (basis_[r] < total_cols_) colval[basis_[r]] = tab_[r][total_cols_];
        LpSolution sol;
        sol.status = SolStatus::Optimal;
        sol.values.resize(prob_.vars.size());
        for (std::size_t i = 0; i < prob_.vars.size(); ++i) {
            const VarMap& vm = map_[i];
            Rational v = vm.shift + colval[vm.col];
            if (vm.neg_col >= 0) v -= colval[vm.neg_col];
            sol.values[i] = v;
        }
        sol.objective_value = Rational(0);
        for (const auto& [idx, coef] : prob_.objective)
            sol.objective_value += coef * sol.values[idx];
        return sol;
    }
};

inline LpSolution solve_with_bounds(const LpProblem& p,
                                    const std::vector<std::optional<Rational>>& lb,
                                    const std::vector<std::optional<Rational>>& ub) {
    return Simplex(p, lb, ub).solve();
}

}  // namespace lpdetail

/// Exact LP solve (two-phase primal simplex, Bland's rule).  The problem
/// must not declare binaries; solve_mip handles those.
inline LpSolution solve_lp(const LpProblem& p) {
    if (!p.binaries.empty())
        throw std::invalid_argument("solve_lp: problem has binaries, use solve_mip");
    std::vector<std::optional<Rational>> none(p.vars.size());
    return lpdetail::solve_with_bounds(p, none, none);
}

/// Exact 0-1 mixed-integer solve: depth-first branch and bound on the
/// lowest-index fractional binary, 0-branch first, exact incumbent
/// pruning.  Exhaustive, so the returned optimum is proved.
inline LpSolution solve_mip(const LpProblem& p) {
    std::vector<std::optional<Rational>> lb(p.vars.size()), ub(p.vars.size());
    bool maximize = p.sense == Sense::Maximize;

    std::optional<LpSolution> best;
    bool any_unbounded = false;

    auto better = [&](const Rational& a, const Rational& b) {
        return maximize ? a > b : a < b;
    };

    // returns the index of the first fractional binary, or -1
    auto fractional = [&](const LpSolution& s) {
        for (int b : p.binaries)
            if (s.values[b] != Rational(0) && s.values[b] != Rational(1)) return b;
        return -1;
    };

    struct Frame {
        int var;
        int next_value;  // 0 or 1 still to explore, 2 = done
    };

    auto dive = [&](auto&& self) -> void {
        LpSolution relax = lpdetail::solve_with_bounds(p, lb, ub);
        if (relax.status == SolStatus::Infeasible) return;
        if (relax.status == SolStatus::Unbounded) {
            any_unbounded = true;
            return;
        }
        if (best && !better(relax.objective_value, best->objective_value)) return;
        int frac = fractional(relax);
        if (frac < 0) {
            best = relax;
            return;
        }
        for (int v = 0; v <= 1 && !any_unbounded; ++v) {
            lb[frac] = Rational(v);
            ub[frac] = Rational(v);
            self(self);
            lb[frac].reset();
            ub[frac].reset();
        }
    };
    dive(dive);

    if (any_unbounded) return {SolStatus::Unbounded, {}, Rational(0)};
    if (!best) return {SolStatus::Infeasible, {}, Rational(0)};
    return *best;
}

}  // namespace presched
