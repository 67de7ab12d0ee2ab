//! The formal algebra of homogeneous bundles on the Grassmannian of lines
//! in P4: irreducible summands indexed by dominant weights of the Levi
//! GL(2) x GL(3), closed under direct sum, tensor, dual, twist and the
//! supported symmetric/exterior powers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use crate::error::{AlgebraError, SchurError};
use crate::schur::{lr_tensor, weyl_dim, GenPartition};

/// One irreducible homogeneous bundle, stored in canonical form.
///
/// The weight (a | b) names the bundle obtained by applying the Schur
/// functor for `a` to the rank-2 quotient bundle Q and the Schur functor
/// for `b` to the rank-3 bundle Sd (the dual of the subbundle S in the
/// universal sequence). The determinant relations det Q = O(1) and
/// det Sd = O(-1) identify (a, b + (c,c,c)) with (a - (c,c), b); the
/// canonical representative has b[2] == 0, so equality of bundles is plain
/// key equality.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleWeight {
    a: [i64; 2],
    b: [i64; 3],
}

impl IrreducibleWeight {
    pub fn new(a: [i64; 2], b: [i64; 3]) -> Result<Self, SchurError> {
        if a[0] < a[1] {
            return Err(SchurError::NotMonotone(a.to_vec()));
        }
        if b[0] < b[1] || b[1] < b[2] {
            return Err(SchurError::NotMonotone(b.to_vec()));
        }
        let c = b[2];
        Ok(Self {
            a: [a[0] - c, a[1] - c],
            b: [b[0] - c, b[1] - c, 0],
        })
    }

    pub fn a(&self) -> [i64; 2] {
        self.a
    }

    pub fn b(&self) -> [i64; 3] {
        self.b
    }

    /// The concatenated GL(5) weight (a1, a2, b1, b2, b3).
    pub fn alpha(&self) -> [i64; 5] {
        [self.a[0], self.a[1], self.b[0], self.b[1], self.b[2]]
    }

    pub fn twist(&self, t: i64) -> Self {
        Self {
            a: [self.a[0] + t, self.a[1] + t],
            b: self.b,
        }
    }

    pub fn dual(&self) -> Self {
        Self::new([-self.a[1], -self.a[0]], [-self.b[2], -self.b[1], -self.b[0]])
            .expect("dual of a dominant weight is dominant")
    }

    pub fn rank(&self) -> u64 {
        let ga = GenPartition::dominant(self.a.to_vec());
        let gb = GenPartition::dominant(self.b.to_vec());
        weyl_dim(&ga) * weyl_dim(&gb)
    }
}

impl fmt::Display for IrreducibleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1] = self.a;
        // named(base, t): base twisted by t, twist suffix omitted when 0
        let named = |f: &mut fmt::Formatter<'_>, base: &str, t: i64| {
            if t == 0 {
                write!(f, "{base}")
            } else {
                write!(f, "{base}({t})")
            }
        };
        match self.b {
            [0, 0, 0] if a0 == a1 => named(f, "O", a0),
            [0, 0, 0] if a0 == a1 + 1 => named(f, "Q", a1),
            [0, 0, 0] => {
                let j = a0 - a1;
                if a1 == 0 {
                    write!(f, "Sym^{j} Q")
                } else {
                    write!(f, "(Sym^{j} Q)({a1})")
                }
            }
            [1, 0, 0] if a0 == a1 => named(f, "Sd", a0),
            [1, 1, 0] if a0 == a1 => named(f, "S", a0 - 1),
            [2, 0, 0] if a0 == a1 => {
                if a0 == 0 {
                    write!(f, "Sym^2 Sd")
                } else {
                    write!(f, "(Sym^2 Sd)({a0})")
                }
            }
            [2, 2, 0] if a0 == a1 => {
                if a0 == 2 {
                    write!(f, "Sym^2 S")
                } else {
                    write!(f, "(Sym^2 S)({})", a0 - 2)
                }
            }
            [b0, b1, _] => write!(f, "Sigma({a0},{a1}|{b0},{b1},0)"),
        }
    }
}

impl fmt::Debug for IrreducibleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}|{},{},{})",
            self.a[0], self.a[1], self.b[0], self.b[1], self.b[2]
        )
    }
}

/// A finite formal sum of irreducible homogeneous bundles with non-negative
/// integer multiplicities. The empty sum is the zero bundle.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BundleExpr {
    summands: BTreeMap<IrreducibleWeight, u64>,
}

impl BundleExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn irreducible(w: IrreducibleWeight) -> Self {
        Self::with_multiplicity(w, 1)
    }

    pub fn with_multiplicity(w: IrreducibleWeight, mult: u64) -> Self {
        let mut summands = BTreeMap::new();
        if mult > 0 {
            summands.insert(w, mult);
        }
        Self { summands }
    }

    /// The line bundle O(t).
    pub fn line(t: i64) -> Self {
        Self::irreducible(IrreducibleWeight::new([t, t], [0, 0, 0]).unwrap())
    }

    /// The rank-2 universal quotient bundle.
    pub fn q() -> Self {
        Self::irreducible(IrreducibleWeight::new([1, 0], [0, 0, 0]).unwrap())
    }

    /// The rank-3 universal subbundle S.
    pub fn s() -> Self {
        Self::irreducible(IrreducibleWeight::new([1, 1], [1, 1, 0]).unwrap())
    }

    /// The dual of S (the rank-3 bundle in the universal sequence).
    pub fn s_dual() -> Self {
        Self::irreducible(IrreducibleWeight::new([0, 0], [1, 0, 0]).unwrap())
    }

    /// Sym^2 of the quotient bundle.
    pub fn sym2_q() -> Self {
        Self::irreducible(IrreducibleWeight::new([2, 0], [0, 0, 0]).unwrap())
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> impl Iterator<Item = (&IrreducibleWeight, u64)> {
        self.summands.iter().map(|(w, &m)| (w, m))
    }

    /// Total number of irreducible summands counted with multiplicity.
    pub fn summand_count(&self) -> u64 {
        self.summands.values().sum()
    }

    pub fn rank(&self) -> u64 {
        self.summands.iter().map(|(w, m)| m * w.rank()).sum()
    }

    /// The same bundle repeated `n` times.
    pub fn scaled(&self, n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        Self {
            summands: self.summands.iter().map(|(w, m)| (*w, m * n)).collect(),
        }
    }

    fn add_summand(&mut self, w: IrreducibleWeight, mult: u64) {
        if mult > 0 {
            *self.summands.entry(w).or_insert(0) += mult;
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, m1) in self.summands() {
            let a1 = GenPartition::dominant(w1.a().to_vec());
            let b1 = GenPartition::dominant(w1.b().to_vec());
            for (w2, m2) in other.summands() {
                let a2 = GenPartition::dominant(w2.a().to_vec());
                let b2 = GenPartition::dominant(w2.b().to_vec());
                let ea = lr_tensor(&a1, &a2, 2).expect("length-2 weights");
                let eb = lr_tensor(&b1, &b2, 3).expect("length-3 weights");
                for (pa, ca) in &ea.terms {
                    for (pb, cb) in &eb.terms {
                        let qa = pa.parts();
                        let qb = pb.parts();
                        let w = IrreducibleWeight::new([qa[0], qa[1]], [qb[0], qb[1], qb[2]])
                            .expect("LR terms are dominant");
                        out.add_summand(w, m1 * m2 * ca * cb);
                    }
                }
            }
        }
        out
    }

    pub fn dual(&self) -> Self {
        Self {
            summands: self.summands.iter().map(|(w, &m)| (w.dual(), m)).collect(),
        }
    }

    pub fn twist(&self, t: i64) -> Self {
        Self {
            summands: self
                .summands
                .iter()
                .map(|(w, &m)| (w.twist(t), m))
                .collect(),
        }
    }

    /// j-th symmetric power, expanded over direct sums via
    /// Sym^j(x + y) = sum of Sym^p x (x) Sym^(j-p) y.
    pub fn sym(&self, j: u64) -> Result<Self, AlgebraError> {
        if j == 0 {
            return Ok(Self::line(0));
        }
        let Some((&w, &m)) = self.summands.iter().next() else {
            return Ok(Self::zero());
        };
        let rest = self.remove_one_copy(w, m);
        let mut out = Self::zero();
        for p in 0..=j {
            let left = sym_irreducible(w, p)?;
            if left.is_zero() {
                continue;
            }
            let right = rest.sym(j - p)?;
            out = out + left.tensor(&right);
        }
        Ok(out)
    }

    /// j-th exterior power, expanded over direct sums via
    /// Wedge^j(x + y) = sum of Wedge^p x (x) Wedge^(j-p) y.
    pub fn ext(&self, j: u64) -> Result<Self, AlgebraError> {
        if j == 0 {
            return Ok(Self::line(0));
        }
        let Some((&w, &m)) = self.summands.iter().next() else {
            return Ok(Self::zero());
        };
        let rest = self.remove_one_copy(w, m);
        let mut out = Self::zero();
        for p in 0..=j {
            let left = ext_irreducible(w, p)?;
            if left.is_zero() {
                continue;
            }
            let right = rest.ext(j - p)?;
            out = out + left.tensor(&right);
        }
        Ok(out)
    }

    fn remove_one_copy(&self, w: IrreducibleWeight, m: u64) -> Self {
        let mut rest = self.clone();
        if m > 1 {
            rest.summands.insert(w, m - 1);
        } else {
            rest.summands.remove(&w);
        }
        rest
    }

    /// Summand-wise difference; None if any multiplicity would go negative.
    pub(crate) fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut out = self.clone();
        for (w, m) in other.summands() {
            let have = out.summands.get_mut(w)?;
            if *have < m {
                return None;
            }
            *have -= m;
            if *have == 0 {
                out.summands.remove(w);
            }
        }
        Some(out)
    }
}

impl Add for BundleExpr {
    type Output = BundleExpr;

    fn add(self, rhs: BundleExpr) -> BundleExpr {
        let mut out = self;
        for (w, m) in rhs.summands {
            out.add_summand(w, m);
        }
        out
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, m)) in self.summands().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m > 1 {
                write!(f, "{m}*{w}")?;
            } else {
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}

/// Generator shapes the plethysm catalog recognizes, up to twist.
enum Generator {
    Line(i64),
    /// Sym^j of Q twisted by t, j >= 1.
    QPow {
        j: i64,
        t: i64,
    },
    SDual(i64),
    S(i64),
    Other,
}

fn classify(w: IrreducibleWeight) -> Generator {
    let [a0, a1] = w.a();
    match w.b() {
        [0, 0, 0] if a0 == a1 => Generator::Line(a0),
        [0, 0, 0] => Generator::QPow { j: a0 - a1, t: a1 },
        [1, 0, 0] if a0 == a1 => Generator::SDual(a0),
        [1, 1, 0] if a0 == a1 => Generator::S(a0 - 1),
        _ => Generator::Other,
    }
}

/// Hardcoded exterior powers: complete tables for the generator bundles
/// (zero above their ranks), loud failure elsewhere.
fn ext_irreducible(w: IrreducibleWeight, j: u64) -> Result<BundleExpr, AlgebraError> {
    match j {
        0 => return Ok(BundleExpr::line(0)),
        1 => return Ok(BundleExpr::irreducible(w)),
        _ => {}
    }
    match classify(w) {
        Generator::Line(_) => Ok(BundleExpr::zero()),
        Generator::QPow { j: 1, t } => match j {
            2 => Ok(BundleExpr::line(2 * t + 1)),
            _ => Ok(BundleExpr::zero()),
        },
        Generator::SDual(t) => match j {
            2 => Ok(BundleExpr::s().twist(2 * t - 1)),
            3 => Ok(BundleExpr::line(3 * t - 1)),
            _ => Ok(BundleExpr::zero()),
        },
        Generator::S(t) => match j {
            2 => Ok(BundleExpr::s_dual().twist(2 * t + 1)),
            3 => Ok(BundleExpr::line(3 * t + 1)),
            _ => Ok(BundleExpr::zero()),
        },
        Generator::QPow { .. } | Generator::Other => Err(AlgebraError::UnsupportedWedge {
            weight: w.to_string(),
            degree: j,
        }),
    }
}

/// Hardcoded symmetric powers: line bundles, Sym^j Q, and the j = 2 case
/// for S and Sd as the LR complement of Wedge^2 inside the tensor square.
fn sym_irreducible(w: IrreducibleWeight, j: u64) -> Result<BundleExpr, AlgebraError> {
    match j {
        0 => return Ok(BundleExpr::line(0)),
        1 => return Ok(BundleExpr::irreducible(w)),
        _ => {}
    }
    match classify(w) {
        Generator::Line(t) => Ok(BundleExpr::line(j as i64 * t)),
        Generator::QPow { j: 1, t } => {
            let jj = j as i64;
            let weight = IrreducibleWeight::new([jj, 0], [0, 0, 0]).unwrap();
            Ok(BundleExpr::irreducible(weight).twist(jj * t))
        }
        Generator::SDual(_) | Generator::S(_) if j == 2 => {
            let square = BundleExpr::irreducible(w).tensor(&BundleExpr::irreducible(w));
            let wedge = ext_irreducible(w, 2)?;
            Ok(square
                .checked_sub(&wedge)
                .expect("wedge square embeds in the tensor square"))
        }
        _ => Err(AlgebraError::UnsupportedSym {
            weight: w.to_string(),
            degree: j,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: [i64; 2], b: [i64; 3]) -> IrreducibleWeight {
        IrreducibleWeight::new(a, b).unwrap()
    }

    #[test]
    fn canonical_form_normalizes_b_tail() {
        // (a, b + (c,c,c)) is the twist of (a, b) by -c
        assert_eq!(w([2, 1], [3, 2, 1]), w([1, 0], [2, 1, 0]));
        assert_eq!(w([0, 0], [0, 0, -1]), w([1, 1], [1, 1, 0]));
    }

    #[test]
    fn generators_have_expected_ranks() {
        assert_eq!(BundleExpr::line(7).rank(), 1);
        assert_eq!(BundleExpr::q().rank(), 2);
        assert_eq!(BundleExpr::s().rank(), 3);
        assert_eq!(BundleExpr::s_dual().rank(), 3);
        assert_eq!(BundleExpr::sym2_q().rank(), 3);
    }

    #[test]
    fn q_tensor_q() {
        let got = BundleExpr::q().tensor(&BundleExpr::q());
        let expected = BundleExpr::sym2_q() + BundleExpr::line(1);
        assert_eq!(got, expected);
        assert_eq!(got.rank(), 4);
    }

    #[test]
    fn line_tensor_line_adds_twists() {
        let got = BundleExpr::line(3).tensor(&BundleExpr::line(-5));
        assert_eq!(got, BundleExpr::line(-2));
    }

    #[test]
    fn q_tensor_s_dual_is_irreducible() {
        let got = BundleExpr::q().tensor(&BundleExpr::s_dual());
        assert_eq!(got, BundleExpr::irreducible(w([1, 0], [1, 0, 0])));
        assert_eq!(got.rank(), 6);
    }

    #[test]
    fn dual_anchors() {
        assert_eq!(BundleExpr::sym2_q().dual(), BundleExpr::sym2_q().twist(-2));
        assert_eq!(BundleExpr::line(4).dual(), BundleExpr::line(-4));
        assert_eq!(BundleExpr::s_dual().dual(), BundleExpr::s());
        let x = BundleExpr::q().tensor(&BundleExpr::s()).twist(-3);
        assert_eq!(x.dual().dual(), x);
    }

    #[test]
    fn twist_is_tensor_by_line() {
        let x = BundleExpr::q() + BundleExpr::s_dual().twist(2);
        assert_eq!(x.twist(1), x.tensor(&BundleExpr::line(1)));
        assert_eq!(x.twist(2).twist(-5), x.twist(-3));
    }

    #[test]
    fn wedge_table_for_generators() {
        let q = BundleExpr::q();
        let s = BundleExpr::s();
        let sd = BundleExpr::s_dual();
        assert_eq!(q.ext(2).unwrap(), BundleExpr::line(1));
        assert_eq!(q.ext(3).unwrap(), BundleExpr::zero());
        assert_eq!(sd.ext(2).unwrap(), s.twist(-1));
        assert_eq!(sd.ext(3).unwrap(), BundleExpr::line(-1));
        assert_eq!(s.ext(2).unwrap(), sd.twist(1));
        assert_eq!(s.ext(3).unwrap(), BundleExpr::line(1));
    }

    #[test]
    fn wedge2_of_generator_sum() {
        let b = BundleExpr::q() + BundleExpr::s() + BundleExpr::s_dual();
        let got = b.ext(2).unwrap();
        let expected = BundleExpr::line(1)
            + BundleExpr::s_dual().twist(1)
            + BundleExpr::s().twist(-1)
            + BundleExpr::q().tensor(&BundleExpr::s())
            + BundleExpr::q().tensor(&BundleExpr::s_dual())
            + BundleExpr::s().tensor(&BundleExpr::s_dual());
        assert_eq!(got, expected);
        assert_eq!(got.rank(), 28); // C(8, 2)
    }

    #[test]
    fn sym2_of_line_sum() {
        let x = BundleExpr::line(1) + BundleExpr::line(4);
        let got = x.sym(2).unwrap();
        assert_eq!(
            got,
            BundleExpr::line(2) + BundleExpr::line(5) + BundleExpr::line(8)
        );
    }

    #[test]
    fn sym2_complement_rule() {
        let sd = BundleExpr::s_dual();
        let got = sd.sym(2).unwrap();
        assert_eq!(got, BundleExpr::irreducible(w([0, 0], [2, 0, 0])));
        assert_eq!(got.rank(), 6);
        let s = BundleExpr::s();
        assert_eq!(s.sym(2).unwrap(), got.dual());
    }

    #[test]
    fn rank_laws() {
        let x = BundleExpr::q() + BundleExpr::s().twist(-1) + BundleExpr::line(2);
        let r = x.rank();
        assert_eq!(x.ext(2).unwrap().rank(), r * (r - 1) / 2);
        assert_eq!(x.sym(2).unwrap().rank(), r * (r + 1) / 2);
    }

    #[test]
    fn unsupported_plethysm_is_loud() {
        assert!(BundleExpr::sym2_q().ext(2).is_err());
        assert!(BundleExpr::s_dual().sym(3).is_err());
    }

    #[test]
    fn display_named_forms() {
        assert_eq!(BundleExpr::line(0).to_string(), "O");
        assert_eq!(BundleExpr::line(-3).to_string(), "O(-3)");
        assert_eq!(BundleExpr::q().twist(2).to_string(), "Q(2)");
        assert_eq!(BundleExpr::s().twist(-1).to_string(), "S(-1)");
        assert_eq!(BundleExpr::s_dual().to_string(), "Sd");
        assert_eq!(BundleExpr::sym2_q().to_string(), "Sym^2 Q");
        assert_eq!(BundleExpr::sym2_q().twist(-3).to_string(), "(Sym^2 Q)(-3)");
        assert_eq!(
            (BundleExpr::line(0).scaled(2) + BundleExpr::q()).to_string(),
            "2*O + Q"
        );
    }
}
