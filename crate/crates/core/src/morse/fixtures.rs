//! Small hand-made data sets.

use super::{CriticalLocus, FiberwiseMorseData, OneOneEvent};
use crate::rational::{q, q_frac};

fn locus(id: u32, index: u8) -> CriticalLocus {
    CriticalLocus { id, index, period: 1, sign: 1 }
}

fn event(from: u32, to: u32, num: i64, den: i64) -> OneOneEvent {
    OneOneEvent { from, to, base_angle: q_frac(num, den), sign: 1, from_sheet: 0, to_sheet: 0 }
}

/// Height function on `S^2` pulled back to `S^2 x S^1`.
pub fn s2_times_s1() -> FiberwiseMorseData {
    FiberwiseMorseData {
        fiber_genus: 0,
        critical_loci: vec![locus(0, 0), locus(1, 2)],
        one_one_events: vec![],
        monodromy: vec![],
        base_fiber_angle: q(0),
    }
}

/// Sphere fiber with a cancelling saddle/maximum pair and one saddle
/// self-intersection.
pub fn sphere_with_saddle() -> FiberwiseMorseData {
    FiberwiseMorseData {
        fiber_genus: 0,
        critical_loci: vec![locus(0, 0), locus(1, 0), locus(2, 1), locus(3, 2)],
        one_one_events: vec![event(2, 2, 1, 2)],
        monodromy: vec![],
        base_fiber_angle: q(0),
    }
}

/// Torus bundle with identity monodromy, no 1/1-intersections.
pub fn torus_identity() -> FiberwiseMorseData {
    FiberwiseMorseData {
        fiber_genus: 1,
        critical_loci: vec![locus(0, 0), locus(1, 1), locus(2, 1), locus(3, 2)],
        one_one_events: vec![],
        monodromy: vec![vec![1, 0], vec![0, 1]],
        base_fiber_angle: q(0),
    }
}

/// Torus bundle with monodromy `[[2,1],[1,1]]` and two self-intersections of
/// one saddle locus.
pub fn genus_one_anosov() -> FiberwiseMorseData {
    FiberwiseMorseData {
        fiber_genus: 1,
        critical_loci: vec![locus(0, 0), locus(1, 1), locus(2, 1), locus(3, 2)],
        one_one_events: vec![event(1, 1, 1, 10), event(1, 1, 3, 10)],
        monodromy: vec![vec![2, 1], vec![1, 1]],
        base_fiber_angle: q(0),
    }
}

/// Two saddle points swapped once per revolution (one locus of period two)
/// with a sign-reversing self-intersection on one sheet.
pub fn genus_one_twisted() -> FiberwiseMorseData {
    FiberwiseMorseData {
        fiber_genus: 1,
        critical_loci: vec![
            locus(0, 0),
            CriticalLocus { id: 1, index: 1, period: 2, sign: -1 },
            locus(2, 2),
        ],
        one_one_events: vec![OneOneEvent {
            from: 1,
            to: 1,
            base_angle: q_frac(2, 3),
            sign: -1,
            from_sheet: 1,
            to_sheet: 1,
        }],
        monodromy: vec![vec![0, 1], vec![-1, 0]],
        base_fiber_angle: q_frac(1, 2),
    }
}

pub fn all() -> Vec<FiberwiseMorseData> {
    vec![s2_times_s1(), sphere_with_saddle(), torus_identity(), genus_one_anosov(), genus_one_twisted()]
}
