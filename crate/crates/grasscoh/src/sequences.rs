//! Built-in exact sequence fixtures and the Euler-characteristic ledger.
//!
//! Each fixture lists the terms of one of the eight standard exact
//! sequences of bundles on the Grassmannian, left to right. Trivial factors
//! (the 5-dimensional space V and its exterior powers) enter as repeated
//! line bundles. Exactness is checked at the chi level: the alternating sum
//! of Euler characteristics must vanish after any twist and after tensoring
//! with any locally free probe. That check is necessary, not sufficient,
//! for exactness, and it is the only claim these fixtures make.
//!
//! The printed form of the long Koszul-style sequence `koz` carries an
//! inconsistent twist on its middle term; the fixture uses the unique
//! repair that passes the ledger, and `koz_as_printed` keeps the printed
//! variant for the discrepancy report.

use serde::Serialize;

use crate::bott::euler_char;
use crate::bundle::BundleExpr;

#[derive(Debug, Clone)]
pub struct ExactSequenceSpec {
    pub label: String,
    pub terms: Vec<BundleExpr>,
}

impl ExactSequenceSpec {
    pub fn new(label: &str, terms: Vec<BundleExpr>) -> Self {
        Self {
            label: label.to_string(),
            terms,
        }
    }

    /// Alternating sum of ranks; zero for any exact sequence.
    pub fn alternating_rank(&self) -> i64 {
        self.terms
            .iter()
            .enumerate()
            .map(|(k, x)| {
                let r = x.rank() as i64;
                if k % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// Reverses the term order and dualizes every term.
    pub fn dual_reversed(&self) -> Self {
        Self {
            label: format!("{}-dual", self.label),
            terms: self.terms.iter().rev().map(BundleExpr::dual).collect(),
        }
    }
}

/// The eight standard fixtures, in source order.
pub fn builtin_sequences() -> Vec<ExactSequenceSpec> {
    let o = BundleExpr::line;
    let q = BundleExpr::q();
    let sd = BundleExpr::s_dual();
    let s2q = BundleExpr::sym2_q();
    vec![
        ExactSequenceSpec::new("u", vec![sd.clone(), o(0).scaled(5), q.clone()]),
        ExactSequenceSpec::new(
            "w2",
            vec![
                sd.ext(2).unwrap(),
                o(0).scaled(10),
                q.scaled(5),
                s2q.clone(),
            ],
        ),
        ExactSequenceSpec::new(
            "+w2",
            vec![
                q.twist(-2),
                o(-1).scaled(5),
                o(0).scaled(10),
                q.scaled(5),
                s2q.clone(),
            ],
        ),
        ExactSequenceSpec::new(
            "+w2d",
            vec![
                s2q.twist(-3),
                q.twist(-2).scaled(5),
                o(-1).scaled(10),
                o(0).scaled(5),
                q.clone(),
            ],
        ),
        ExactSequenceSpec::new(
            "++w2",
            vec![
                sd.twist(-2),
                o(-2).scaled(5),
                o(-1).scaled(5),
                o(0).scaled(10),
                q.scaled(5),
                s2q.clone(),
            ],
        ),
        ExactSequenceSpec::new(
            "w2+",
            vec![
                sd.ext(2).unwrap().twist(-3),
                o(-3).scaled(10),
                q.twist(-3).scaled(5),
                q.twist(-2).scaled(5),
                o(-1).scaled(10),
                o(0).scaled(5),
                q.clone(),
            ],
        ),
        ExactSequenceSpec::new(
            "+d",
            vec![
                q.twist(-5),
                o(-4).scaled(5),
                o(-3).scaled(10),
                q.twist(-3).scaled(5),
                q.twist(-2).scaled(5),
                o(-1).scaled(10),
                sd.clone(),
            ],
        ),
        koz_with_middle_twist(-2),
    ]
}

/// The Koszul-style fixture with the printed (inconsistent) middle twist.
pub fn koz_as_printed() -> ExactSequenceSpec {
    let mut s = koz_with_middle_twist(2);
    s.label = "koz-printed".to_string();
    s
}

/// The `koz` terms with the fifth term Sym^2 Q twisted by `middle`.
pub fn koz_with_middle_twist(middle: i64) -> ExactSequenceSpec {
    let o = BundleExpr::line;
    let q = BundleExpr::q();
    let s2q = BundleExpr::sym2_q();
    ExactSequenceSpec::new(
        "koz",
        vec![
            o(-4),
            o(-3).scaled(10),
            q.twist(-3).scaled(10),
            s2q.twist(-3).scaled(5),
            s2q.twist(middle).scaled(5),
            q.twist(-1).scaled(10),
            o(0).scaled(10),
            o(1),
        ],
    )
}

/// One ledger row: the alternating chi sum of the sequence tensored by
/// `probe` and twisted by `twist`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SequenceEntry {
    pub label: String,
    pub twist: i64,
    pub probe: String,
    pub alternating_sum: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceReport {
    pub label: String,
    pub ok: bool,
    pub entries: Vec<SequenceEntry>,
}

/// Evaluates the chi ledger of `s` over the twist interval for every probe.
/// Passes iff every alternating sum is zero.
pub fn verify_sequence(
    s: &ExactSequenceSpec,
    twists: (i64, i64),
    probes: &[BundleExpr],
) -> SequenceReport {
    let mut entries = Vec::new();
    let mut ok = true;
    for probe in probes {
        let tensored: Vec<BundleExpr> = s.terms.iter().map(|x| x.tensor(probe)).collect();
        let probe_name = probe.to_string();
        for t in twists.0..=twists.1 {
            let sum: i64 = tensored
                .iter()
                .enumerate()
                .map(|(k, x)| {
                    let chi = euler_char(x, t);
                    if k % 2 == 0 {
                        chi
                    } else {
                        -chi
                    }
                })
                .sum();
            if sum != 0 {
                ok = false;
            }
            entries.push(SequenceEntry {
                label: s.label.clone(),
                twist: t,
                probe: probe_name.clone(),
                alternating_sum: sum,
            });
        }
    }
    SequenceReport {
        label: s.label.clone(),
        ok,
        entries,
    }
}

/// The standard probe set used by the verification suite.
pub fn standard_probes() -> Vec<BundleExpr> {
    vec![
        BundleExpr::line(0),
        BundleExpr::q(),
        BundleExpr::s(),
        BundleExpr::s_dual(),
        BundleExpr::sym2_q(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_ranks_telescope() {
        let expected: &[(&str, Vec<i64>)] = &[
            ("u", vec![3, 5, 2]),
            ("w2", vec![3, 10, 10, 3]),
            ("+w2", vec![2, 5, 10, 10, 3]),
            ("+w2d", vec![3, 10, 10, 5, 2]),
            ("++w2", vec![3, 5, 5, 10, 10, 3]),
            ("w2+", vec![3, 10, 10, 10, 10, 5, 2]),
            ("+d", vec![2, 5, 10, 10, 10, 10, 3]),
            ("koz", vec![1, 10, 20, 15, 15, 20, 10, 1]),
        ];
        for (s, (label, ranks)) in builtin_sequences().iter().zip(expected) {
            assert_eq!(&s.label, label);
            let got: Vec<i64> = s.terms.iter().map(|x| x.rank() as i64).collect();
            assert_eq!(&got, ranks, "{label}");
            assert_eq!(s.alternating_rank(), 0, "{label}");
        }
    }

    #[test]
    fn universal_sequence_ledger_is_zero() {
        let u = &builtin_sequences()[0];
        let report = verify_sequence(u, (-12, 12), &[BundleExpr::line(0)]);
        assert!(report.ok);
        assert_eq!(report.entries.len(), 25);
    }

    #[test]
    fn glued_sequence_survives_probes() {
        let plus_w2 = builtin_sequences().remove(2);
        let probes = [BundleExpr::q(), BundleExpr::sym2_q()];
        assert!(verify_sequence(&plus_w2, (-12, 12), &probes).ok);
    }

    #[test]
    fn printed_koz_fails_and_repair_passes() {
        let probes = [BundleExpr::line(0)];
        assert!(!verify_sequence(&koz_as_printed(), (-12, 12), &probes).ok);
        assert!(verify_sequence(&koz_with_middle_twist(-2), (-12, 12), &probes).ok);
    }

    #[test]
    fn koz_repair_twist_is_unique() {
        let probes = [BundleExpr::line(0)];
        for middle in -6..=6 {
            let passes = verify_sequence(&koz_with_middle_twist(middle), (-12, 12), &probes).ok;
            assert_eq!(passes, middle == -2, "middle twist {middle}");
        }
    }

    #[test]
    fn dual_reversal_preserves_the_ledger() {
        let probes = [BundleExpr::line(0), BundleExpr::q()];
        for s in builtin_sequences() {
            let rev = s.dual_reversed();
            assert!(verify_sequence(&rev, (-12, 12), &probes).ok, "{}", rev.label);
        }
    }

    #[test]
    fn entry_serialization_shape() {
        let u = &builtin_sequences()[0];
        let report = verify_sequence(u, (0, 0), &[BundleExpr::line(0)]);
        let json = serde_json::to_string(&report.entries).unwrap();
        assert_eq!(
            json,
            r#"[{"label":"u","twist":0,"probe":"O","alternating_sum":0}]"#
        );
    }
}
