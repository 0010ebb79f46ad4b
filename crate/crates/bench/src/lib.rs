//! Shared instance builders for the benchmarks.

use ladderlink::{Ladder, MaxMinors, OneSidedLadder, PfaffianLadder, SymmetricPlusLadder};

/// Named instances of increasing size, one or more per family.
pub fn instances() -> Vec<(&'static str, Ladder)> {
    vec![
        ("maxminors_2x4", Ladder::MaxMinors(MaxMinors { m: 2, n: 4 })),
        ("maxminors_3x4", Ladder::MaxMinors(MaxMinors { m: 3, n: 4 })),
        ("pfaffian_6", Ladder::Pfaffian(PfaffianLadder { n: 6, corners: vec![(1, 6)], t: vec![2] })),
        ("pfaffian_6_two_corners", Ladder::Pfaffian(PfaffianLadder { n: 6, corners: vec![(1, 5), (2, 6)], t: vec![2, 2] })),
        ("symmetric_4", Ladder::Symmetric(SymmetricPlusLadder { n: 4, points: vec![(4, 4)], t: vec![2] })),
        ("onesided_4x4", Ladder::OneSided(OneSidedLadder { m: 4, n: 4, points: vec![(2, 1), (4, 3)], t: vec![2, 2] })),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_valid() {
        for (name, l) in instances() {
            assert!(l.validate().is_ok(), "{name}");
        }
    }
}
