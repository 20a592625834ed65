#pragma once

// Hand-entered data for the worked examples used across the test suites.
// Everything here is written out literally so the tests stay independent
// of the library's own builders.

#include <optional>
#include <string>
#include <vector>

#include "presched/core.hpp"

namespace cases {

using presched::Distribution;
using presched::Instance;
using presched::Job;
using presched::ProcTime;
using presched::Rational;
using presched::Schedule;
using presched::Segment;

inline ProcTime fb() { return std::nullopt; }

// Four machines, jobs named 2..6.  Releases r2=2, r3=3, r4=8, r5=0, r6=5.
inline Instance example1() {
    Instance inst;
    inst.machines = 4;
    inst.jobs = {
        Job{"2", Rational(2), {fb(), Rational(16), Rational(16), Rational(16)}},
        Job{"3", Rational(3), {Rational(15), fb(), Rational(15), fb()}},
        Job{"4", Rational(8), {Rational(13), fb(), fb(), fb()}},
        Job{"5", Rational(0), {fb(), fb(), fb(), Rational(13)}},
        Job{"6", Rational(5), {fb(), Rational(13), fb(), fb()}},
    };
    return inst;
}

inline Instance example1a() {
    Instance inst = example1();
    inst.jobs[2].release = Rational(0);  // job 4
    return inst;
}

inline Instance example1b() {
    Instance inst = example1();
    inst.jobs[2].release = Rational(6);  // job 4
    return inst;
}

// Shared skeleton for the example-1 distributions: only the split of job 2
// over machines 2..4 differs.
inline Distribution example1_distribution(long t22, long t32, long t42, long cmax) {
    Distribution d = Distribution::zeros(4, 5, Rational(cmax));
    // jobs indexed 0.."2", 1.."3", 2.."4", 3.."5", 4.."6"
    d.t[0][1] = Rational(5);   // t_13
    d.t[0][2] = Rational(13);  // t_14
    d.t[1][0] = Rational(t22);
    d.t[1][4] = Rational(13);  // t_26
    d.t[2][0] = Rational(t32);
    d.t[2][1] = Rational(15 - 5);  // t_33 = 10
    d.t[3][0] = Rational(t42);
    d.t[3][3] = Rational(13);  // t_45
    return d;
}

inline Distribution example1_dist1() { return example1_distribution(4, 8, 4, 18); }
inline Distribution example1_dist2() { return example1_distribution(5, 6, 5, 18); }
inline Distribution example1_dist3() { return example1_distribution(5, 4, 7, 20); }
inline Distribution example1_dist4() { return example1_distribution(5, 3, 8, 21); }

// Two machines, four jobs; the reconciled data reproducing both published
// optima (12 for the distribution bound, 14 for the true optimum).
inline Instance example2() {
    Instance inst;
    inst.machines = 2;
    inst.jobs = {
        Job{"1", Rational(3), {Rational(9), fb()}},
        Job{"2", Rational(5), {Rational(2), Rational(2)}},
        Job{"3", Rational(5), {Rational(3), Rational(3)}},
        Job{"4", Rational(1), {fb(), Rational(10)}},
    };
    return inst;
}

inline Distribution example2_dist12() {
    Distribution d = Distribution::zeros(2, 4, Rational(12));
    d.t[0][0] = Rational(9);   // t_11
    d.t[0][2] = Rational(3);   // t_13
    d.t[1][1] = Rational(2);   // t_22
    d.t[1][3] = Rational(10);  // t_24
    return d;
}

// The simultaneous-release variant: jobs 2 and 3 lengthened to 18, job 5
// shortened to 10, all releases zero.
inline Instance example4() {
    Instance inst;
    inst.machines = 4;
    inst.jobs = {
        Job{"2", Rational(0), {fb(), Rational(18), Rational(18), Rational(18)}},
        Job{"3", Rational(0), {Rational(18), fb(), Rational(18), fb()}},
        Job{"4", Rational(0), {Rational(13), fb(), fb(), fb()}},
        Job{"5", Rational(0), {fb(), fb(), fb(), Rational(10)}},
        Job{"6", Rational(0), {fb(), Rational(13), fb(), fb()}},
    };
    return inst;
}

inline Distribution example4_dist() {
    Distribution d = Distribution::zeros(4, 5, Rational(18));
    d.t[0][1] = Rational(5);   // t_13
    d.t[0][2] = Rational(13);  // t_14
    d.t[1][0] = Rational(5);   // t_22
    d.t[1][4] = Rational(13);  // t_26
    d.t[2][0] = Rational(5);   // t_32
    d.t[2][1] = Rational(13);  // t_33
    d.t[3][0] = Rational(8);   // t_42
    d.t[3][3] = Rational(10);  // t_45
    return d;
}

// The 3-machine PARTITION gadget for items (1, 1): jobs 1..4 plus two
// partition jobs of unit length on machine 2, released at 3.
// Job order: 1, 2, 3, 4, Z1, Z2.
inline Instance gadget11() {
    Instance inst;
    inst.machines = 3;
    inst.jobs = {
        Job{"1", Rational(0), {Rational(6), Rational(6), Rational(6)}},
        Job{"2", Rational(0), {fb(), fb(), Rational(5)}},
        Job{"3", Rational(4), {Rational(2), fb(), fb()}},
        Job{"4", Rational(0), {fb(), Rational(3), fb()}},
        Job{"Z1", Rational(3), {fb(), Rational(1), fb()}},
        Job{"Z2", Rational(3), {fb(), Rational(1), fb()}},
    };
    return inst;
}

// The makespan-6 no-split layout on gadget11: job 1 runs machines 1, 2, 3
// back to back; job 2 sits contiguously in [0,5) on machine 3.
inline Schedule gadget11_schedule() {
    Schedule s;
    s.segments = {
        Segment(0, 0, Rational(0), Rational(4)),  // job 1 on m1
        Segment(0, 2, Rational(4), Rational(6)),  // job 3 on m1
        Segment(1, 3, Rational(0), Rational(3)),  // job 4 on m2
        Segment(1, 4, Rational(3), Rational(4)),  // Z1 on m2
        Segment(1, 0, Rational(4), Rational(5)),  // job 1 on m2
        Segment(1, 5, Rational(5), Rational(6)),  // Z2 on m2
        Segment(2, 1, Rational(0), Rational(5)),  // job 2 on m3
        Segment(2, 0, Rational(5), Rational(6)),  // job 1 on m3
    };
    return s;
}

// Distribution respected by gadget11_schedule (cmax 6).
inline Distribution gadget11_dist() {
    Distribution d = Distribution::zeros(3, 6, Rational(6));
    d.t[0][0] = Rational(4);  // job 1 on m1
    d.t[1][0] = Rational(1);  // job 1 on m2
    d.t[2][0] = Rational(1);  // job 1 on m3
    d.t[2][1] = Rational(5);  // job 2 on m3
    d.t[0][2] = Rational(2);  // job 3 on m1
    d.t[1][3] = Rational(3);  // job 4 on m2
    d.t[1][4] = Rational(1);  // Z1 on m2
    d.t[1][5] = Rational(1);  // Z2 on m2
    return d;
}

}  // namespace cases
