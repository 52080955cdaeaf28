//! The rank-8 Picard lattice of a degree-2 del Pezzo surface and its 56
//! exceptional classes.
//!
//! Coordinates are taken in the basis `e₀, e₁, …, e₇` with intersection form
//! `diag(1, -1, …, -1)` and canonical class `k = -3e₀ + e₁ + ⋯ + e₇`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::{signature, IntMatrix, Signature};
use crate::lattice::{orthogonal_complement, Lattice};

pub const RANK: usize = 8;
pub type Vector = [i64; RANK];

pub const CANONICAL: Vector = [-3, 1, 1, 1, 1, 1, 1, 1];

/// Picard form `aᵀ diag(1, -I₇) b`.
pub fn pairing(a: &Vector, b: &Vector) -> i64 {
    a[0] * b[0] - (1..RANK).map(|i| a[i] * b[i]).sum::<i64>()
}

pub fn picard_gram() -> IntMatrix {
    IntMatrix::diagonal(&[1, -1, -1, -1, -1, -1, -1, -1])
}

pub fn picard_lattice() -> Lattice {
    let labels = (0..RANK).map(|i| format!("e{i}")).collect();
    Lattice::with_labels("Pic(P)", picard_gram(), labels).expect("diagonal gram")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// `L_i`, the exceptional curve over the i-th blown-up point.
    Line(u8),
    LineDual(u8),
    /// `L_{i,j}`, strict transform of the line through two points.
    Conic(u8, u8),
    ConicDual(u8, u8),
}

impl ClassLabel {
    pub fn dual(self) -> ClassLabel {
        match self {
            ClassLabel::Line(i) => ClassLabel::LineDual(i),
            ClassLabel::LineDual(i) => ClassLabel::Line(i),
            ClassLabel::Conic(i, j) => ClassLabel::ConicDual(i, j),
            ClassLabel::ConicDual(i, j) => ClassLabel::Conic(i, j),
        }
    }

    /// Coordinates of the class in the `e₀, …, e₇` basis.
    pub fn coords(self) -> Vector {
        let mut v = [0i64; RANK];
        match self {
            ClassLabel::Line(i) => v[i as usize] = 1,
            ClassLabel::LineDual(i) => {
                v[0] = 3;
                v[1..].fill(-1);
                v[i as usize] -= 1;
            }
            ClassLabel::Conic(i, j) => {
                v[0] = 1;
                v[i as usize] = -1;
                v[j as usize] = -1;
            }
            ClassLabel::ConicDual(i, j) => {
                v[0] = 2;
                v[1..].fill(-1);
                v[i as usize] += 1;
                v[j as usize] += 1;
            }
        }
        v
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Line(i) => write!(f, "L_{i}"),
            ClassLabel::LineDual(i) => write!(f, "L_{i}*"),
            ClassLabel::Conic(i, j) => write!(f, "L_{{{i},{j}}}"),
            ClassLabel::ConicDual(i, j) => write!(f, "L_{{{i},{j}}}*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub label: ClassLabel,
    pub coords: Vector,
}

impl DivisorClass {
    pub fn new(label: ClassLabel) -> Self {
        DivisorClass { label, coords: label.coords() }
    }
}

/// The 56 exceptional classes: `L₁..L₇`, `L₁*..L₇*`, then `L_{i,j}` and
/// `L_{i,j}*` in lexicographic order of `(i, j)`.
pub fn exceptional_classes() -> Vec<DivisorClass> {
    let pairs: Vec<(u8, u8)> = (1..=7u8).flat_map(|i| (i + 1..=7).map(move |j| (i, j))).collect();
    (1..=7)
        .map(ClassLabel::Line)
        .chain((1..=7).map(ClassLabel::LineDual))
        .chain(pairs.iter().map(|&(i, j)| ClassLabel::Conic(i, j)))
        .chain(pairs.iter().map(|&(i, j)| ClassLabel::ConicDual(i, j)))
        .map(DivisorClass::new)
        .collect()
}

pub fn class_pairing(a: &DivisorClass, b: &DivisorClass) -> i64 {
    pairing(&a.coords, &b.coords)
}

/// Dual class; rejects classes whose coordinates do not match their label.
pub fn dual_of(c: &DivisorClass) -> Result<DivisorClass> {
    if c.label.coords() != c.coords {
        return Err(Error::NotExceptional);
    }
    Ok(DivisorClass::new(c.label.dual()))
}

/// Position of a vector in the fixed class order.
pub fn class_index(classes: &[DivisorClass], v: &Vector) -> Option<usize> {
    classes.iter().position(|c| c.coords == *v)
}

/// `S_L` (pairing 0) and `S*_L` (pairing 1) among the other 54 classes.
pub fn line_sets(c: &DivisorClass) -> Result<(Vec<DivisorClass>, Vec<DivisorClass>)> {
    let dual = dual_of(c)?;
    let (mut s, mut s_star) = (Vec::new(), Vec::new());
    for other in exceptional_classes() {
        if other == *c || other == dual {
            continue;
        }
        match class_pairing(c, &other) {
            0 => s.push(other),
            1 => s_star.push(other),
            v => return Err(Error::Defect(format!("unexpected pairing {v} between {} and {}", c.label, other.label))),
        }
    }
    Ok((s, s_star))
}

/// The linear map sending every exceptional class to its dual.
///
/// Solved from eight independent classes and then checked on all 56, as an
/// isometry of order 2 fixing `k`.
pub fn geiser_involution() -> Result<IntMatrix> {
    let basis = [
        ClassLabel::Line(1),
        ClassLabel::Line(2),
        ClassLabel::Line(3),
        ClassLabel::Line(4),
        ClassLabel::Line(5),
        ClassLabel::Line(6),
        ClassLabel::Line(7),
        ClassLabel::Conic(1, 2),
    ];
    let src = IntMatrix::from_columns(RANK, &basis.map(|l| l.coords()));
    let dst = IntMatrix::from_columns(RANK, &basis.map(|l| l.dual().coords()));
    let inv = src.to_rational().inverse().ok_or_else(|| Error::Defect("classes not independent".into()))?;
    let tau =
        (&dst.to_rational() * &inv).to_integer().ok_or_else(|| Error::Defect("Geiser map is not integral".into()))?;
    for c in exceptional_classes() {
        let image = apply(&tau, &c.coords);
        if image != c.label.dual().coords() {
            return Err(Error::Defect(format!("Geiser map does not send {} to its dual", c.label)));
        }
    }
    if !picard_lattice().is_isometry(&tau) || !tau.pow(2).is_identity() || apply(&tau, &CANONICAL) != CANONICAL {
        return Err(Error::Defect("Geiser map is not an involutive isometry fixing k".into()));
    }
    Ok(tau)
}

/// Matrix times vector for an 8×8 integer matrix with small entries.
pub fn apply(m: &IntMatrix, v: &Vector) -> Vector {
    let mut out = [0i64; RANK];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (0..RANK).map(|j| m.get(i, j).to_i64().expect("small entry") * v[j]).sum();
    }
    out
}

/// Coordinate ranges containing every `x` with `⟨x,x⟩ = norm` and
/// `⟨x,k⟩ = degree`, valid when the form is negative definite on `k^⊥`.
///
/// Writing `x = (degree/⟨k,k⟩)·k + y` with `y ⊥ k`, each coordinate is
/// `⟨w_j, x⟩` for a dual vector `w_j`, and Cauchy–Schwarz on the negative
/// definite complement bounds `|⟨w_j^⊥, y⟩|² ≤ ⟨w_j^⊥,w_j^⊥⟩·⟨y,y⟩`.
pub fn certified_box(gram: &IntMatrix, k: &[i64], norm: i64, degree: i64) -> Result<Vec<(i64, i64)>> {
    let n = gram.rows();
    let kb: Vec<BigInt> = k.iter().map(|&x| BigInt::from(x)).collect();
    let kk = gram.bilinear(&kb, &kb);
    if !kk.is_positive() {
        return Err(Error::Defect("canonical direction must have positive norm".into()));
    }
    let lattice = Lattice::new("ambient", gram.clone())?;
    let comp = orthogonal_complement(&lattice, &IntMatrix::from_columns(n, &[k.to_vec()]))?;
    let restricted = signature(&gram.congruent(&comp))?;
    if restricted != Signature::new(0, n - 1, 0) {
        return Err(Error::Defect("form is not negative definite on k-perp".into()));
    }
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let kk = BigRational::from_integer(kk);
    let alpha = q(degree) / &kk;
    let y_norm = q(norm) - q(degree) * q(degree) / &kk;
    if y_norm.is_positive() {
        return Ok(vec![(1, 0); n]);
    }
    let ginv = gram.to_rational().inverse().ok_or(Error::Degenerate)?;
    let gq = gram.to_rational();
    let kq: Vec<BigRational> = k.iter().map(|&x| q(x)).collect();
    let pair =
        |a: &[BigRational], b: &[BigRational]| -> BigRational { a.iter().zip(gq.apply(b)).map(|(x, y)| x * y).sum() };
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let w = ginv.column(j);
        let wk = pair(&w, &kq);
        let w_perp_norm = pair(&w, &w) - &wk * &wk / &kk;
        let bound_sq = &w_perp_norm * &y_norm;
        let center = &alpha * &kq[j];
        let inside = |x: i64| {
            let d = q(x) - &center;
            &d * &d <= bound_sq
        };
        let mut radius = 0i64;
        while q(radius) * q(radius) < bound_sq {
            radius += 1;
        }
        let mut lo = center.floor().to_integer().to_i64().expect("small") - radius;
        let mut hi = center.ceil().to_integer().to_i64().expect("small") + radius;
        while lo <= hi && !inside(lo) {
            lo += 1;
        }
        while hi >= lo && !inside(hi) {
            hi -= 1;
        }
        out.push((lo, hi));
    }
    Ok(out)
}

/// All integer vectors in the box with `⟨x,x⟩ = norm` and `⟨x,k⟩ = degree`.
pub fn enumerate_shell(box_: &[(i64, i64)], norm: i64, degree: i64) -> Vec<Vector> {
    assert_eq!(box_.len(), RANK);
    let mut out = Vec::new();
    let mut v = [0i64; RANK];
    fn rec(box_: &[(i64, i64)], i: usize, v: &mut Vector, norm: i64, degree: i64, out: &mut Vec<Vector>) {
        if i == RANK {
            if pairing(v, v) == norm && pairing(v, &CANONICAL) == degree {
                out.push(*v);
            }
            return;
        }
        for x in box_[i].0..=box_[i].1 {
            v[i] = x;
            rec(box_, i + 1, v, norm, degree, out);
        }
    }
    rec(box_, 0, &mut v, norm, degree, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn fifty_six_classes() {
        let cs = exceptional_classes();
        assert_eq!(cs.len(), 56);
        assert_eq!(cs[7].label, ClassLabel::LineDual(1));
        assert_eq!(cs[7].coords, [3, -2, -1, -1, -1, -1, -1, -1]);
        assert_eq!(cs[14].label, ClassLabel::Conic(1, 2));
        assert_eq!(cs[35].label, ClassLabel::ConicDual(1, 2));
        for c in &cs {
            assert_eq!(class_pairing(c, c), -1);
            assert_eq!(pairing(&c.coords, &CANONICAL), -1);
        }
        assert_eq!(pairing(&CANONICAL, &CANONICAL), 2);
    }

    #[test]
    fn pairings() {
        let e0 = [1, 0, 0, 0, 0, 0, 0, 0];
        let e1 = [0, 1, 0, 0, 0, 0, 0, 0];
        let e2 = [0, 0, 1, 0, 0, 0, 0, 0];
        assert_eq!(pairing(&e0, &e0), 1);
        assert_eq!(pairing(&e1, &e2), 0);
        let cs = exceptional_classes();
        for a in &cs {
            for b in &cs {
                if a == b {
                    continue;
                }
                let p = class_pairing(a, b);
                assert!((0..=2).contains(&p));
                assert_eq!(p == 2, b.label == a.label.dual());
            }
        }
    }

    #[test]
    fn duals() {
        let l3 = DivisorClass::new(ClassLabel::Line(3));
        assert_eq!(dual_of(&l3).unwrap().label, ClassLabel::LineDual(3));
        let c = DivisorClass::new(ClassLabel::Conic(1, 2));
        assert_eq!(dual_of(&c).unwrap().label, ClassLabel::ConicDual(1, 2));
        for c in exceptional_classes() {
            assert_eq!(dual_of(&dual_of(&c).unwrap()).unwrap(), c);
        }
        let fake = DivisorClass { label: ClassLabel::Line(1), coords: [1, 0, 0, 0, 0, 0, 0, 0] };
        assert_eq!(dual_of(&fake), Err(Error::NotExceptional));
    }

    #[test]
    fn line_sets_have_27_each() {
        let cs = exceptional_classes();
        for c in &cs {
            let (s, s_star) = line_sets(c).unwrap();
            assert_eq!(s.len(), 27);
            assert_eq!(s_star.len(), 27);
            let dual = dual_of(c).unwrap();
            assert!(!s.contains(&dual) && !s_star.contains(&dual));
            let (s_of_dual, _) = line_sets(&dual).unwrap();
            let a: HashSet<_> = s_of_dual.iter().map(|x| x.label).collect();
            let b: HashSet<_> = s_star.iter().map(|x| x.label).collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn geiser_matches_reflection_formula() {
        let tau = geiser_involution().unwrap();
        assert_eq!(apply(&tau, &[0, 1, 0, 0, 0, 0, 0, 0]), [3, -2, -1, -1, -1, -1, -1, -1]);
        assert!(tau.pow(2).is_identity());
        // τ(x) = -x + ⟨x,k⟩·k, built column by column
        let oracle = IntMatrix::from_fn(RANK, RANK, |i, j| {
            let mut e = [0i64; RANK];
            e[j] = 1;
            BigInt::from(-e[i] + pairing(&e, &CANONICAL) * CANONICAL[i])
        });
        assert_eq!(tau, oracle);
    }

    #[test]
    fn brute_force_matches_class_list() {
        let b = certified_box(&picard_gram(), &CANONICAL, -1, -1).unwrap();
        let found: HashSet<Vector> = enumerate_shell(&b, -1, -1).into_iter().collect();
        let listed: HashSet<Vector> = exceptional_classes().iter().map(|c| c.coords).collect();
        assert_eq!(found, listed);
    }

    #[test]
    fn box_rejects_indefinite_complement() {
        let k = [1, 0, 0, 0, 0, 0, 0, 0];
        assert!(certified_box(&IntMatrix::identity(8), &k, 1, 1).is_err());
    }
}
