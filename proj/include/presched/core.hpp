#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "presched/rational.hpp"

namespace presched {

/// Processing time of one (machine, job) pair: a positive rational, or
/// empty when the machine cannot run the job at all.  Forbidden pairs are
/// a distinct marker, never a large number.
using ProcTime = std::optional<Rational>;

struct Job {
    std::string name;
    Rational release;                // r_j >= 0
    std::vector<ProcTime> times;     // indexed by machine, size = machine count
};

/// Scheduling instance: m unrelated machines, n jobs with release times
/// and per-machine processing times.
struct Instance {
    int machines = 0;
    std::vector<Job> jobs;

    int job_count() const { return static_cast<int>(jobs.size()); }
    const ProcTime& p(int machine, int job) const { return jobs[job].times[machine]; }
    bool finite(int machine, int job) const { return p(machine, job).has_value(); }
    const Rational& release(int job) const { return jobs[job].release; }

    int job_index(std::string_view name) const {
        for (int j = 0; j < job_count(); ++j)
            if (jobs[j].name == name) return j;
        throw std::out_of_range("unknown job name: " + std::string(name));
    }
};

/// Throws std::invalid_argument if the instance breaks a structural rule.
inline void validate_instance(const Instance& inst) {
    if (inst.machines < 0) throw std::invalid_argument("negative machine count");
    for (const auto& job : inst.jobs) {
        if (static_cast<int>(job.times.size()) != inst.machines)
            throw std::invalid_argument("job '" + job.name + "': wrong times length");
        if (job.release.sign() < 0)
            throw std::invalid_argument("job '" + job.name + "': negative release");
        bool any = false;
        for (const auto& t : job.times) {
            if (!t) continue;
            any = true;
            if (t->sign() <= 0)
                throw std::invalid_argument("job '" + job.name + "': non-positive processing time");
        }
        if (!any)
            throw std::invalid_argument("job '" + job.name + "': no machine can process it");
    }
    std::vector<std::string> names;
    for (const auto& job : inst.jobs) names.push_back(job.name);
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
        throw std::invalid_argument("duplicate job name");
}

/// Per-(machine, job) assigned processing amounts t_ij together with the
/// formulation's C_max value.  The fraction of job j done by machine i is
/// t_ij / p_ij.
struct Distribution {
    std::vector<std::vector<Rational>> t;  // [machine][job]
    Rational cmax;

    static Distribution zeros(int machines, int jobs, Rational cmax = Rational(0)) {
        Distribution d;
        d.t.assign(machines, std::vector<Rational>(jobs, Rational(0)));
        d.cmax = std::move(cmax);
        return d;
    }
};

/// Checks the Distribution invariants against an instance: t_ij >= 0,
/// t_ij > 0 only on finite pairs, and sum_i t_ij / p_ij = 1 for every job.
inline void validate_distribution(const Instance& inst, const Distribution& d) {
    if (static_cast<int>(d.t.size()) != inst.machines)
        throw std::invalid_argument("distribution: wrong machine count");
    for (const auto& row : d.t)
        if (static_cast<int>(row.size()) != inst.job_count())
            throw std::invalid_argument("distribution: wrong job count");
    for (int j = 0; j < inst.job_count(); ++j) {
        Rational frac(0);
        for (int i = 0; i < inst.machines; ++i) {
            const Rational& tij = d.t[i][j];
            if (tij.sign() < 0) throw std::invalid_argument("distribution: negative entry");
            if (tij.sign() > 0) {
                if (!inst.finite(i, j))
                    throw std::invalid_argument("distribution: positive time on forbidden pair");
                frac += tij / *inst.p(i, j);
            }
        }
        if (frac != Rational(1))
            throw std::invalid_argument("distribution: job '" + inst.jobs[j].name +
                                        "' fractions sum to " + frac.str());
    }
}

/// Half-open processing interval [start, end) of one job on one machine.
struct Segment {
    int machine = 0;
    int job = 0;
    Rational start;
    Rational end;

    Segment() = default;
    Segment(int m, int j, Rational s, Rational e)
        : machine(m), job(j), start(std::move(s)), end(std::move(e)) {
        if (start.sign() < 0) throw std::invalid_argument("segment: negative start");
        if (end <= start) throw std::invalid_argument("segment: empty or reversed interval");
    }
    Rational length() const { return end - start; }
};

struct Schedule {
    std::vector<Segment> segments;
};

inline Rational makespan(const Schedule& s) {
    Rational m(0);
    for (const auto& seg : s.segments) m = max(m, seg.end);
    return m;
}

struct Violation {
    std::string rule;  // "machine-overlap", "job-overlap", "release", "completion",
                       // "forbidden-pair", "no-split"
    int machine = -1;  // -1 when not applicable
    int job = -1;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(std::string rule, int machine, int job, std::string detail) {
        ok = false;
        violations.push_back({std::move(rule), machine, job, std::move(detail)});
    }
};

namespace detail {

// Sorted maximal runs of one job on one machine (adjacent segments merged).
inline std::vector<std::pair<Rational, Rational>> merged_runs(
    std::vector<std::pair<Rational, Rational>> iv) {
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<Rational, Rational>> out;
    for (auto& [s, e] : iv) {
        if (!out.empty() && out.back().second == s)
            out.back().second = e;
        else
            out.emplace_back(s, e);
    }
    return out;
}

}  // namespace detail

/// Full feasibility validation of a schedule against its instance.
///
/// Structural problems (indices out of range) throw; feasibility problems
/// are collected in the report.  With no_split set, a job occupying two or
/// more disjoint intervals on the same machine is flagged as well.
inline ValidationReport validate_schedule(const Instance& inst, const Schedule& sched,
                                          bool no_split = false) {
    for (const auto& seg : sched.segments) {
        if (seg.machine < 0 || seg.machine >= inst.machines)
            throw std::out_of_range("segment references machine " + std::to_string(seg.machine));
        if (seg.job < 0 || seg.job >= inst.job_count())
            throw std::out_of_range("segment references job " + std::to_string(seg.job));
    }

    ValidationReport report;

    // (a) a machine runs at most one job at a time
    std::vector<std::vector<const Segment*>> per_machine(inst.machines);
    for (const auto& seg : sched.segments) per_machine[seg.machine].push_back(&seg);
    for (int i = 0; i < inst.machines; ++i) {
        auto& v = per_machine[i];
        std::sort(v.begin(), v.end(), [](const Segment* a, const Segment* b) {
            if (a->start != b->start) return a->start < b->start;
            return a->end < b->end;
        });
        for (std::size_t k = 1; k < v.size(); ++k)
            if (v[k]->start < v[k - 1]->end)
                report.add("machine-overlap", i, v[k]->job,
                           "machine " + std::to_string(i + 1) + " runs two jobs at " +
                               v[k]->start.str());
    }

    // (b) a job runs on at most one machine at a time; (c) releases
    std::vector<std::vector<const Segment*>> per_job(inst.job_count());
    for (const auto& seg : sched.segments) per_job[seg.job].push_back(&seg);
    for (int j = 0; j < inst.job_count(); ++j) {
        auto& v = per_job[j];
        std::sort(v.begin(), v.end(), [](const Segment* a, const Segment* b) {
            if (a->start != b->start) return a->start < b->start;
            return a->end < b->end;
        });
        for (std::size_t k = 1; k < v.size(); ++k)
            if (v[k]->start < v[k - 1]->end)
                report.add("job-overlap", v[k]->machine, j,
                           "job '" + inst.jobs[j].name + "' runs on two machines at " +
                               v[k]->start.str());
        for (const Segment* seg : v)
            if (seg->start < inst.release(j))
                report.add("release", seg->machine, j,
                           "job '" + inst.jobs[j].name + "' starts at " + seg->start.str() +
                               " before release " + inst.release(j).str());
    }

    // (d) every job fully processed: sum of (length / p_ij) = 1
    for (int j = 0; j < inst.job_count(); ++j) {
        Rational frac(0);
        bool forbidden = false;
        for (const Segment* seg : per_job[j]) {
            if (!inst.finite(seg->machine, j)) {
                report.add("forbidden-pair", seg->machine, j,
                           "job '" + inst.jobs[j].name + "' scheduled on machine " +
                               std::to_string(seg->machine + 1) + " which cannot run it");
                forbidden = true;
                continue;
            }
            frac += seg->length() / *inst.p(seg->machine, j);
        }
        if (!forbidden && frac != Rational(1))
            report.add("completion", -1, j,
                       "job '" + inst.jobs[j].name + "' processed fraction " + frac.str());
    }

    if (no_split) {
        std::map<std::pair<int, int>, std::vector<std::pair<Rational, Rational>>> parts;
        for (const auto& seg : sched.segments)
            parts[{seg.machine, seg.job}].emplace_back(seg.start, seg.end);
        for (auto& [key, iv] : parts) {
            auto runs = detail::merged_runs(std::move(iv));
            if (runs.size() > 1)
                report.add("no-split", key.first, key.second,
                           "job '" + inst.jobs[key.second].name + "' split into " +
                               std::to_string(runs.size()) + " runs on machine " +
                               std::to_string(key.first + 1));
        }
    }
    return report;
}

/// The distribution a valid schedule respects: t_ij = total time of job j
/// on machine i, cmax = makespan.  Rejects invalid schedules.
inline Distribution distribution_of(const Instance& inst, const Schedule& sched) {
    ValidationReport r = validate_schedule(inst, sched, false);
    if (!r.ok)
        throw std::invalid_argument("distribution_of: schedule invalid (" +
                                    r.violations.front().rule + ")");
    Distribution d = Distribution::zeros(inst.machines, inst.job_count());
    for (const auto& seg : sched.segments) d.t[seg.machine][seg.job] += seg.length();
    d.cmax = makespan(sched);
    return d;
}

/// True iff the schedule's per-(machine, job) totals equal dist.t
/// entrywise.  cmax is not compared.
inline bool respects(const Instance& inst, const Schedule& sched, const Distribution& dist) {
    if (static_cast<int>(dist.t.size()) != inst.machines) return false;
    std::vector<std::vector<Rational>> tot(inst.machines,
                                           std::vector<Rational>(inst.job_count(), Rational(0)));
    for (const auto& seg : sched.segments) {
        if (seg.machine < 0 || seg.machine >= inst.machines) return false;
        if (seg.job < 0 || seg.job >= inst.job_count()) return false;
        tot[seg.machine][seg.job] += seg.length();
    }
    for (int i = 0; i < inst.machines; ++i) {
        if (static_cast<int>(dist.t[i].size()) != inst.job_count()) return false;
        for (int j = 0; j < inst.job_count(); ++j)
            if (tot[i][j] != dist.t[i][j]) return false;
    }
    return true;
}

/// Distribution-level preemption counts: `parts` is the number of (i, j)
/// cells with t_ij > 0 belonging to jobs assigned to two or more machines;
/// `per_machine_max` is the largest number of such cells on one machine.
struct PreemptedParts {
    int parts = 0;
    int per_machine_max = 0;
};

inline PreemptedParts count_preempted_parts(const Distribution& d) {
    PreemptedParts out;
    if (d.t.empty()) return out;
    int machines = static_cast<int>(d.t.size());
    int jobs = static_cast<int>(d.t[0].size());
    std::vector<int> machines_of_job(jobs, 0);
    for (int j = 0; j < jobs; ++j)
        for (int i = 0; i < machines; ++i)
            if (d.t[i][j].sign() > 0) ++machines_of_job[j];
    for (int i = 0; i < machines; ++i) {
        int here = 0;
        for (int j = 0; j < jobs; ++j)
            if (d.t[i][j].sign() > 0 && machines_of_job[j] >= 2) ++here;
        out.parts += here;
        out.per_machine_max = std::max(out.per_machine_max, here);
    }
    return out;
}

/// Schedule-level preemption count: for each job, one less than its number
/// of maximal runs (a run ends when the job is interrupted or moved).
inline int count_preemptions(const Schedule& sched) {
    std::map<int, std::vector<std::pair<Rational, std::pair<Rational, int>>>> by_job;
    for (const auto& seg : sched.segments)
        by_job[seg.job].push_back({seg.start, {seg.end, seg.machine}});
    int count = 0;
    for (auto& [job, v] : by_job) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        int runs = 0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k == 0 || v[k].first != v[k - 1].second.first ||
                v[k].second.second != v[k - 1].second.second)
                ++runs;
        }
        count += std::max(0, runs - 1);
    }
    return count;
}

}  // namespace presched
