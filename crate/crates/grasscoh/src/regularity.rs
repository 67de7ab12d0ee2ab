//! The L-regularity calculus: the fifteen-vanishing predicate, the least
//! regular twist, the windowed G-regularity proxy, global generation for
//! homogeneous bundles, and the rank-2 splitting-criterion classifier.
//!
//! Cohomology enters through a `CohomologyProfile`: either a homogeneous
//! bundle (every cell is computed exactly on demand) or an externally
//! supplied table of cells. External profiles must state every queried
//! cell; a missing cell is an error, never a silent zero, because the
//! predicate is a conjunction of vanishings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bott::{h, nonzero_twists};
use crate::bundle::BundleExpr;

/// The three companion bundles of the regularity conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Companion {
    O,
    Q,
    S2Q,
}

impl Companion {
    pub fn bundle(self) -> BundleExpr {
        match self {
            Companion::O => BundleExpr::line(0),
            Companion::Q => BundleExpr::q(),
            Companion::S2Q => BundleExpr::sym2_q(),
        }
    }
}

impl fmt::Display for Companion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Companion::O => write!(f, "O"),
            Companion::Q => write!(f, "Q"),
            Companion::S2Q => write!(f, "S2Q"),
        }
    }
}

impl FromStr for Companion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "O" => Ok(Companion::O),
            "Q" => Ok(Companion::Q),
            "S2Q" => Ok(Companion::S2Q),
            other => Err(format!("unknown companion '{other}' (expected O, Q or S2Q)")),
        }
    }
}

/// One vanishing condition: h^degree of (F tensor companion)(twist).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionLabel {
    pub companion: Companion,
    pub degree: u8,
    pub twist: i64,
}

impl fmt::Display for ConditionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.companion {
            Companion::O => write!(f, "h^{}(F({}))", self.degree, self.twist),
            c => write!(f, "h^{}(F*{}({}))", self.degree, c, self.twist),
        }
    }
}

/// The fifteen conditions of m-regularity as (companion, degree, offset):
/// the cell queried at level m is (companion, degree, m + offset).
pub const L_CONDITION_OFFSETS: [(Companion, u8, i64); 15] = [
    (Companion::O, 1, -1),
    (Companion::O, 2, -2),
    (Companion::O, 3, -3),
    (Companion::O, 4, -3),
    (Companion::O, 5, -3),
    (Companion::O, 5, -4),
    (Companion::O, 6, -4),
    (Companion::Q, 2, -2),
    (Companion::Q, 3, -3),
    (Companion::Q, 4, -3),
    (Companion::Q, 4, -4),
    (Companion::Q, 5, -4),
    (Companion::S2Q, 3, -3),
    (Companion::S2Q, 4, -4),
    (Companion::S2Q, 5, -5),
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("incomplete profile: missing cell (companion {companion}, degree {degree}, twist {twist})")]
    MissingCell {
        companion: Companion,
        degree: u8,
        twist: i64,
    },
    #[error("bad profile data: {0}")]
    BadData(String),
}

/// Access to the cohomology cells h^i((F tensor c)(t)).
#[derive(Debug, Clone)]
pub enum CohomologyProfile {
    Homogeneous {
        bundle: BundleExpr,
        with_q: BundleExpr,
        with_s2q: BundleExpr,
    },
    External {
        rank: u64,
        cells: BTreeMap<(Companion, u8, i64), u64>,
    },
}

/// On-disk form of an external profile.
#[derive(Debug, Deserialize, Serialize)]
struct ExternalProfileFile {
    rank: u64,
    cells: Vec<(String, u8, i64, u64)>,
}

impl CohomologyProfile {
    pub fn homogeneous(x: &BundleExpr) -> Self {
        CohomologyProfile::Homogeneous {
            with_q: x.tensor(&BundleExpr::q()),
            with_s2q: x.tensor(&BundleExpr::sym2_q()),
            bundle: x.clone(),
        }
    }

    pub fn external(rank: u64, cells: BTreeMap<(Companion, u8, i64), u64>) -> Self {
        CohomologyProfile::External { rank, cells }
    }

    pub fn from_json(text: &str) -> Result<Self, ProfileError> {
        let file: ExternalProfileFile =
            serde_json::from_str(text).map_err(|e| ProfileError::BadData(e.to_string()))?;
        let mut cells = BTreeMap::new();
        for (name, degree, twist, dim) in file.cells {
            let companion = Companion::from_str(&name).map_err(ProfileError::BadData)?;
            cells.insert((companion, degree, twist), dim);
        }
        Ok(CohomologyProfile::External {
            rank: file.rank,
            cells,
        })
    }

    pub fn rank(&self) -> u64 {
        match self {
            CohomologyProfile::Homogeneous { bundle, .. } => bundle.rank(),
            CohomologyProfile::External { rank, .. } => *rank,
        }
    }

    pub fn h(&self, companion: Companion, degree: u8, twist: i64) -> Result<u64, ProfileError> {
        match self {
            CohomologyProfile::Homogeneous {
                bundle,
                with_q,
                with_s2q,
            } => {
                let x = match companion {
                    Companion::O => bundle,
                    Companion::Q => with_q,
                    Companion::S2Q => with_s2q,
                };
                Ok(h(x, degree, twist))
            }
            CohomologyProfile::External { cells, .. } => cells
                .get(&(companion, degree, twist))
                .copied()
                .ok_or(ProfileError::MissingCell {
                    companion,
                    degree,
                    twist,
                }),
        }
    }
}

/// Evaluates the fifteen conditions at level `m`; the returned list of
/// failing conditions is empty exactly when the profile is m-regular.
pub fn is_l_regular(p: &CohomologyProfile, m: i64) -> Result<Vec<ConditionLabel>, ProfileError> {
    let mut failing = Vec::new();
    for &(companion, degree, offset) in &L_CONDITION_OFFSETS {
        let twist = m + offset;
        if p.h(companion, degree, twist)? != 0 {
            failing.push(ConditionLabel {
                companion,
                degree,
                twist,
            });
        }
    }
    Ok(failing)
}

/// The least regular level, or NegInfinity for the zero bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lreg {
    Value(i64),
    NegInfinity,
}

impl Serialize for Lreg {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Lreg::Value(v) => s.serialize_i64(*v),
            Lreg::NegInfinity => s.serialize_str("-inf"),
        }
    }
}

impl fmt::Display for Lreg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lreg::Value(v) => write!(f, "{v}"),
            Lreg::NegInfinity => write!(f, "-inf"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularityReport {
    pub lreg: Lreg,
    /// Conditions failing one level below the least regular level
    /// (non-empty unless lreg is -inf).
    pub failing_below: Vec<ConditionLabel>,
    pub g_window: GWindowReport,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegularityError {
    #[error("monotonicity violation: level {m} disagrees with least regular level {lreg}")]
    Monotonicity { m: i64, lreg: i64 },
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

/// Computes the least regular level of a homogeneous bundle by combining
/// the finite supports of the intermediate-degree conditions with the
/// degree-6 transition, then re-verifies monotonicity around the answer.
pub fn lreg(x: &BundleExpr) -> Result<RegularityReport, RegularityError> {
    let profile = CohomologyProfile::homogeneous(x);
    if x.is_zero() {
        let g_window = is_g_regular_window(&profile, 0, 10)?;
        return Ok(RegularityReport {
            lreg: Lreg::NegInfinity,
            failing_below: Vec::new(),
            g_window,
        });
    }
    let companions = match &profile {
        CohomologyProfile::Homogeneous {
            bundle,
            with_q,
            with_s2q,
        } => [
            (Companion::O, bundle.clone()),
            (Companion::Q, with_q.clone()),
            (Companion::S2Q, with_s2q.clone()),
        ],
        CohomologyProfile::External { .. } => unreachable!(),
    };
    let mut max_fail: Option<i64> = None;
    let mut bump = |m: i64| {
        max_fail = Some(max_fail.map_or(m, |cur: i64| cur.max(m)));
    };
    for (companion, comp_bundle) in &companions {
        let supports = nonzero_twists(comp_bundle, &[1, 2, 3, 4, 5]);
        for &(c, degree, offset) in &L_CONDITION_OFFSETS {
            if c != *companion || degree == 6 {
                continue;
            }
            for &t in &supports[&degree] {
                bump(t - offset);
            }
        }
    }
    // Degree-6 condition h^6(F(m-4)) = 0: the top cohomology is nonzero on
    // a downward-closed set of twists whose boundary is located exactly.
    let t6 = top_degree_threshold(x).expect("nonzero bundle has nonzero top cohomology somewhere");
    assert!(h(x, 6, t6) > 0, "degree-6 threshold must be attained");
    assert_eq!(h(x, 6, t6 + 1), 0, "degree-6 support must end at the threshold");
    bump(t6 + 4);
    let lv = max_fail.expect("degree-6 condition always fails somewhere") + 1;
    for m in (lv - 4)..=(lv + 4) {
        let regular = is_l_regular(&profile, m)?.is_empty();
        if regular != (m >= lv) {
            return Err(RegularityError::Monotonicity { m, lreg: lv });
        }
    }
    let failing_below = is_l_regular(&profile, lv - 1)?;
    debug_assert!(!failing_below.is_empty());
    let g_window = is_g_regular_window(&profile, lv, 10)?;
    Ok(RegularityReport {
        lreg: Lreg::Value(lv),
        failing_below,
        g_window,
    })
}

/// Convenience accessor for tests and sweeps.
pub fn lreg_value(x: &BundleExpr) -> Result<Lreg, RegularityError> {
    Ok(lreg(x)?.lreg)
}

/// Largest twist t with h^6(x(t)) != 0, or None for the zero bundle.
///
/// By duality h^6(x(t)) = h^0(dual(x)(-t-5)), and a summand with weight
/// (a | b) has sections exactly when twisted to dominance, i.e. from twist
/// b1 - a2 on. The supports in degree 6 are therefore downward closed.
fn top_degree_threshold(x: &BundleExpr) -> Option<i64> {
    x.dual()
        .summands()
        .map(|(w, _)| -5 - (w.b()[0] - w.a()[1]))
        .max()
}

#[derive(Debug, Clone, Serialize)]
pub struct GWindowReport {
    pub m: i64,
    pub window: i64,
    pub ok: bool,
    /// (layer k, failing condition) pairs over 0 <= k <= window.
    pub failures: Vec<(i64, ConditionLabel)>,
}

/// Windowed proxy for G-regularity at level `m`: for every 0 <= k <= window
/// the fifteen conditions hold at m + k together with the two glue cells
/// h^1((F*Q)(m+k-1)) = 0 and h^2((F*Sym^2 Q)(m+k-2)) = 0.
pub fn is_g_regular_window(
    p: &CohomologyProfile,
    m: i64,
    window: i64,
) -> Result<GWindowReport, ProfileError> {
    let mut failures = Vec::new();
    for k in 0..=window {
        for label in is_l_regular(p, m + k)? {
            failures.push((k, label));
        }
        for (companion, degree, offset) in [(Companion::Q, 1, -1), (Companion::S2Q, 2, -2)] {
            let twist = m + k + offset;
            if p.h(companion, degree, twist)? != 0 {
                failures.push((
                    k,
                    ConditionLabel {
                        companion,
                        degree,
                        twist,
                    },
                ));
            }
        }
    }
    Ok(GWindowReport {
        m,
        window,
        ok: failures.is_empty(),
        failures,
    })
}

/// A homogeneous bundle is globally generated exactly when the concatenated
/// weight of every irreducible summand is GL(5)-dominant, i.e. a2 >= b1:
/// dominance makes the summand an equivariant quotient of a trivial bundle
/// built from Schur functors of V.
pub fn is_globally_generated(x: &BundleExpr) -> bool {
    x.summands().all(|(w, _)| w.a()[1] >= w.b()[0])
}

/// A failing or firing condition together with the observed dimension.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConditionEvidence {
    pub label: ConditionLabel,
    pub dim: u64,
}

/// Outcome of the rank-2 splitting criterion.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(tag = "verdict")]
pub enum SplittingVerdict {
    /// The profile is not 0-regular, or one of the stated hypothesis cells
    /// is nonzero.
    #[serde(rename = "hypotheses-not-met")]
    HypothesesNotMet { reasons: Vec<String> },
    /// Branch (i): h^6(E(-5)) != 0, so O splits off and E = O + O(a), a >= 0.
    #[serde(rename = "split-as-O-plus-O(a)")]
    SplitAsLineBundleSum { evidence: ConditionEvidence },
    /// Branch (ii): h^3((E*Sym^2 Q)(-4)) != 0 forces E = Q.
    #[serde(rename = "isomorphic-to-Q")]
    IsomorphicToQ { evidence: ConditionEvidence },
    /// Branches (iii)-(v) or an unexpected failing cell: impossible for an
    /// actual rank-2 bundle satisfying the hypotheses.
    #[serde(rename = "inconsistent-profile")]
    InconsistentProfile { failing: Vec<ConditionEvidence> },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SplitError {
    #[error("splitting criterion needs rank 2, profile has rank {0}")]
    NotRankTwo(u64),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

/// The seven vanishing hypotheses beyond 0-regularity, as absolute cells.
const SPLIT_HYPOTHESES: [(Companion, u8, i64); 7] = [
    (Companion::O, 1, -2),
    (Companion::O, 3, -4),
    (Companion::O, 4, -4),
    (Companion::O, 5, -5),
    (Companion::Q, 2, -3),
    (Companion::Q, 3, -4),
    (Companion::Q, 4, -5),
];

const BRANCH_I: (Companion, u8, i64) = (Companion::O, 6, -5);
const BRANCH_II: (Companion, u8, i64) = (Companion::S2Q, 3, -4);

/// Classifies a rank-2 profile with least regular level 0 per the splitting
/// criterion. The classifier reports which branch of the case analysis
/// fires; it does not construct the isomorphism.
pub fn check_splitting_criterion(
    p: &CohomologyProfile,
) -> Result<SplittingVerdict, SplitError> {
    if p.rank() != 2 {
        return Err(SplitError::NotRankTwo(p.rank()));
    }
    let mut reasons = Vec::new();
    let at_zero = is_l_regular(p, 0)?;
    if !at_zero.is_empty() {
        reasons.push(format!(
            "not 0-regular: {}",
            at_zero
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    let at_minus_one = is_l_regular(p, -1)?;
    if at_zero.is_empty() && at_minus_one.is_empty() {
        reasons.push("(-1)-regular, so the least regular level is below 0".to_string());
    }
    for (companion, degree, twist) in SPLIT_HYPOTHESES {
        let dim = p.h(companion, degree, twist)?;
        if dim != 0 {
            reasons.push(format!(
                "hypothesis cell {} = {dim}",
                ConditionLabel {
                    companion,
                    degree,
                    twist
                }
            ));
        }
    }
    if !reasons.is_empty() {
        return Ok(SplittingVerdict::HypothesesNotMet { reasons });
    }
    let evidence = |label: &ConditionLabel| -> Result<ConditionEvidence, ProfileError> {
        Ok(ConditionEvidence {
            label: *label,
            dim: p.h(label.companion, label.degree, label.twist)?,
        })
    };
    let matches_cell = |label: &ConditionLabel, cell: (Companion, u8, i64)| {
        label.companion == cell.0 && label.degree == cell.1 && label.twist == cell.2
    };
    if let Some(label) = at_minus_one.iter().find(|l| matches_cell(l, BRANCH_I)) {
        return Ok(SplittingVerdict::SplitAsLineBundleSum {
            evidence: evidence(label)?,
        });
    }
    if let Some(label) = at_minus_one.iter().find(|l| matches_cell(l, BRANCH_II)) {
        return Ok(SplittingVerdict::IsomorphicToQ {
            evidence: evidence(label)?,
        });
    }
    let failing = at_minus_one
        .iter()
        .map(evidence)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SplittingVerdict::InconsistentProfile { failing })
}

/// Every cell an external profile must provide for the splitting checker.
pub fn splitting_required_cells() -> Vec<(Companion, u8, i64)> {
    let mut cells = Vec::new();
    for m in [0i64, -1] {
        for &(companion, degree, offset) in &L_CONDITION_OFFSETS {
            cells.push((companion, degree, m + offset));
        }
    }
    cells.extend(SPLIT_HYPOTHESES);
    cells.sort_unstable();
    cells.dedup();
    cells
}

/// Serializes the cells of a homogeneous profile into the external JSON
/// format, handy for exporting split-checker inputs.
pub fn external_profile_json(x: &BundleExpr, cells: &[(Companion, u8, i64)]) -> String {
    let p = CohomologyProfile::homogeneous(x);
    let file = ExternalProfileFile {
        rank: x.rank(),
        cells: cells
            .iter()
            .map(|&(c, i, t)| (c.to_string(), i, t, p.h(c, i, t).unwrap()))
            .collect(),
    };
    serde_json::to_string(&file).expect("profile serialization cannot fail")
}
