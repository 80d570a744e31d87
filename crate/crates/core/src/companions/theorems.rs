//! The Schur-type theorems as constraint data.
//!
//! Each family reads `Σ terms ≤ bound` for every base index `i` passing its
//! filter. Tokens: `i+2` is `f_{i+2}`, `i+2~` is `f_{\overline{i+2}}`.
//! Families stated over a dilated index (`f_{3i}`, `f_{5i−1}`, …) are
//! re-based on that index: `f_{3m}+…+f_{3m+3}` for `m ≥ 1` becomes
//! `i + … + i+3` over `i ≡ 0 (mod 3)`, `i ≥ 3`.

use super::constraint::{ConstraintFamily, ConstraintSystem, IndexFilter};

fn all(min: u64) -> IndexFilter {
    IndexFilter::all_from(min)
}

fn modulo(m: u64, residues: &[u64], min: u64) -> IndexFilter {
    IndexFilter::congruent(m, residues, min)
}

/// Plain partitions with `f_i+f_{i+1}+f_{i+2} ≤ 1` and
/// `f_{3i}+f_{3i+1}+f_{3i+2}+f_{3i+3} ≤ 1`; equinumerous with `R_{3,2}`.
pub fn schur_system() -> ConstraintSystem {
    ConstraintSystem {
        name: "schur",
        overlines_allowed: false,
        families: vec![
            ConstraintFamily::new("i i+1 i+2", 1, all(1)),
            ConstraintFamily::new("i i+1 i+2 i+3", 1, modulo(3, &[0], 3)),
        ],
    }
}

/// Over-partitions equinumerous with `R_{4,2}`.
pub fn alladi_system() -> ConstraintSystem {
    ConstraintSystem {
        name: "alladi",
        overlines_allowed: true,
        families: vec![
            // no over-lined 1 and no over-lined even part
            ConstraintFamily::new("i~", 0, IndexFilter::range(1, 1)),
            ConstraintFamily::new("i~", 0, modulo(2, &[0], 2)),
            ConstraintFamily::new("i i~ i+1 i+1~ i+2 i+2~ i+3 i+3~", 1, modulo(4, &[1, 2, 3], 1)),
            ConstraintFamily::new("i i~ i+1 i+1~ i+2 i+2~ i+3 i+3~ i+4", 1, modulo(4, &[0], 4)),
            ConstraintFamily::new("i~ i+1 i+1~ i+2 i+2~ i+3 i+3~ i+4 i+4~", 1, modulo(2, &[1], 1)),
        ],
    }
}

/// Families shared by the two mod-5 theorems: the over-line ban at 1 and 2
/// and the first four windows.
fn mod5_common() -> Vec<ConstraintFamily> {
    vec![
        ConstraintFamily::new("i~", 0, IndexFilter::range(1, 2)),
        ConstraintFamily::new(
            "i i~ i+1 i+1~ i+2 i+2~ i+3 i+3~ i+4 i+4~",
            1,
            modulo(5, &[2, 3], 1),
        ),
        ConstraintFamily::new(
            "i i-1~ i~ i+1 i+1~ i+2 i+2~ i+3 i+3~ i+4",
            1,
            modulo(5, &[1, 4], 1),
        ),
        ConstraintFamily::new(
            "i i+1 i~ i+1~ i+2 i+2~ i+3 i+3~ i+4 i+4~ i+5",
            1,
            modulo(5, &[0], 1),
        ),
        ConstraintFamily::new(
            "i~ i+1 i+1~ i+2 i+2~ i+3 i+3~ i+4 i+4~ i+5 i+5~",
            1,
            modulo(5, &[1, 2, 4], 1),
        ),
    ]
}

/// Conditions on `μ` in the pair theorem for `R_{5,2}`.
pub fn aab_system() -> ConstraintSystem {
    let mut families = mod5_common();
    families.push(ConstraintFamily::new(
        "i~ i+1~ i+2 i+2~ i+3 i+3~ i+4 i+4~ i+5 i+6 i+5~",
        1,
        modulo(5, &[0, 3], 1),
    ));
    ConstraintSystem {
        name: "aab-pair",
        overlines_allowed: true,
        families,
    }
}

/// The single over-partition companion for `R_{5,2}`. The two irregular
/// windows (no `i+4~` for `i ≡ 3`, no `i+5` for `i ≡ 0`) are kept as stated.
pub fn companion_system() -> ConstraintSystem {
    let mut families = mod5_common();
    families.extend([
        ConstraintFamily::new(
            "i~ i+1~ i+2 i+2~ i+3 i+3~ i+4 i+5 i+6 i+5~",
            1,
            modulo(5, &[3], 1),
        ),
        ConstraintFamily::new(
            "i~ i+1~ i+2 i+2~ i+3 i+3~ i+4 i+4~ i+6 i+5~",
            1,
            modulo(5, &[0], 1),
        ),
        // f_{5m−1} + f_{\overline{5m+3}} + f_{\overline{5m+7}} ≤ 2, m ≥ 1
        ConstraintFamily::new("i i+4~ i+8~", 2, modulo(5, &[4], 4)),
        // f_{5m−2} + f_{\overline{5m+3}} + f_{\overline{5m+7}} ≤ 2, m ≥ 1
        ConstraintFamily::new("i i+5~ i+9~", 2, modulo(5, &[3], 3)),
        // f_{5m−4} + f_{\overline{5m}} + f_{5m+5} ≤ 2, m ≥ 2
        ConstraintFamily::new("i i+4~ i+9", 2, modulo(5, &[1], 6)),
    ]);
    ConstraintSystem {
        name: "companion",
        overlines_allowed: true,
        families,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::companions::constraint::FrequencyTerm;

    #[test]
    fn family_sizes() {
        assert_eq!(schur_system().families.len(), 2);
        assert_eq!(alladi_system().families.len(), 5);
        assert_eq!(aab_system().families.len(), 6);
        assert_eq!(companion_system().families.len(), 10);
    }

    #[test]
    fn irregular_windows_are_verbatim() {
        let c = companion_system();
        let f3 = &c.families[5].terms;
        assert!(!f3.contains(&FrequencyTerm::over(4)));
        assert!(f3.contains(&FrequencyTerm::plain(5)));
        let f0 = &c.families[6].terms;
        assert!(!f0.contains(&FrequencyTerm::plain(5)));
        assert!(f0.contains(&FrequencyTerm::plain(6)));
    }

    #[test]
    fn rebased_bound_two_families() {
        // m = 1: f_4 + f_{8~} + f_{12~}
        let c = companion_system();
        let fam = &c.families[7];
        assert!(fam.filter.admits(4) && !fam.filter.admits(5));
        let idx: Vec<i64> = fam.terms.iter().map(|t| 4 + t.offset).collect();
        assert_eq!(idx, vec![4, 8, 12]);
        // m = 2 is the first for the last family: f_6 + f_{10~} + f_15
        let fam = &c.families[9];
        assert!(!fam.filter.admits(1) && fam.filter.admits(6));
        let idx: Vec<i64> = fam.terms.iter().map(|t| 6 + t.offset).collect();
        assert_eq!(idx, vec![6, 10, 15]);
    }
}
