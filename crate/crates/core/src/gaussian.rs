//! Gaussian integers and hermitian Z[i]-lattices.
//!
//! A lattice `L` with an isometry `T`, `T² = -1`, is a Z[i]-module with `i`
//! acting as `T`. The hermitian form `h(x,y) = ⟨x,y⟩ - i⟨x,Ty⟩` is then
//! conjugate-linear in `x` and linear in `y`:
//! `h(ix,y) = -i·h(x,y)` and `h(x,iy) = i·h(x,y)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{determinant, signature, IntMatrix, Signature};
use crate::k3::{l_minus_with_t, l_minus_zbasis};
use crate::lattice::Lattice;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: i64, im: i64) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn from_parts(re: BigInt, im: BigInt) -> Self {
        GaussianInt { re, im }
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = re² + im²`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }
}

impl fmt::Display for GaussianInt {
    /// `a+bi` or `a-bi`, always with both parts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

/// Square matrices over Z[i], row-major.
pub type GaussianMatrix = Vec<Vec<GaussianInt>>;

pub fn identity_matrix(n: usize) -> GaussianMatrix {
    scalar_matrix(&GaussianInt::new(1, 0), n)
}

pub fn scalar_matrix(c: &GaussianInt, n: usize) -> GaussianMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { c.clone() } else { GaussianInt::default() }).collect()).collect()
}

pub fn conjugate_transpose(m: &GaussianMatrix) -> GaussianMatrix {
    let n = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| (0..n).map(|i| m[i][j].conj()).collect()).collect()
}

pub fn mat_mul(a: &GaussianMatrix, b: &GaussianMatrix) -> GaussianMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(GaussianInt::default(), |acc, (x, brow)| &acc + &(x * &brow[j])))
                .collect()
        })
        .collect()
}

/// Real `2n×2n` matrix of a Z[i]-linear map in the basis `b₁, i·b₁, …`.
pub fn realify(m: &GaussianMatrix) -> IntMatrix {
    let n = m.len();
    IntMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let z = &m[r / 2][c / 2];
        match (r % 2, c % 2) {
            (0, 0) | (1, 1) => z.re.clone(),
            (1, 0) => z.im.clone(),
            _ => -&z.im,
        }
    })
}

/// Exact Gaussian rationals, used only for elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    fn from_int(z: &GaussianInt) -> Self {
        GaussianRational { re: BigRational::from_integer(z.re.clone()), im: BigRational::from_integer(z.im.clone()) }
    }

    fn zero() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    fn add(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn div(&self, o: &Self) -> Self {
        let n = &o.re * &o.re + &o.im * &o.im;
        let p = self.mul(&o.conj());
        GaussianRational { re: p.re / &n, im: p.im / n }
    }
}

/// Determinant over Q(i) by Gaussian elimination.
fn determinant_q(m: &GaussianMatrix) -> GaussianRational {
    let n = m.len();
    let mut a: Vec<Vec<GaussianRational>> =
        m.iter().map(|r| r.iter().map(GaussianRational::from_int).collect()).collect();
    let mut det = GaussianRational::from_int(&GaussianInt::new(1, 0));
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else { return GaussianRational::zero() };
        if p != k {
            a.swap(p, k);
            det = GaussianRational::zero().sub(&det);
        }
        det = det.mul(&a[k][k]);
        for r in k + 1..n {
            let f = a[r][k].div(&a[k][k]);
            for c in k..n {
                let v = a[r][c].sub(&f.mul(&a[k][c]));
                a[r][c] = v;
            }
        }
    }
    det
}

pub fn gaussian_determinant(m: &GaussianMatrix) -> Result<GaussianInt> {
    let d = determinant_q(m);
    if !d.re.is_integer() || !d.im.is_integer() {
        return Err(Error::Defect("determinant of a Gaussian integer matrix is not integral".into()));
    }
    Ok(GaussianInt::from_parts(d.re.to_integer(), d.im.to_integer()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianLattice {
    gram: GaussianMatrix,
    /// Columns: Z-coordinates of the Z[i]-basis in the source lattice.
    zbasis: Option<IntMatrix>,
}

impl HermitianLattice {
    pub fn new(gram: GaussianMatrix) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare { rows: n, cols: gram.first().map_or(0, Vec::len) });
        }
        for j in 0..n {
            for k in 0..n {
                if gram[j][k] != gram[k][j].conj() {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(HermitianLattice { gram, zbasis: None })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &GaussianMatrix {
        &self.gram
    }

    pub fn zbasis(&self) -> Option<&IntMatrix> {
        self.zbasis.as_ref()
    }

    pub fn determinant(&self) -> Result<GaussianInt> {
        gaussian_determinant(&self.gram)
    }

    /// `h(z, w) = z* H w`.
    pub fn form(&self, z: &[GaussianInt], w: &[GaussianInt]) -> GaussianInt {
        let mut acc = GaussianInt::default();
        for (j, zj) in z.iter().enumerate() {
            for (k, wk) in w.iter().enumerate() {
                acc = &acc + &(&(&zj.conj() * &self.gram[j][k]) * wk);
            }
        }
        acc
    }

    /// Rows of `a+bi` entries separated by spaces.
    pub fn to_text(&self) -> String {
        self.gram.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ") + "\n").collect()
    }
}

/// Integer lattice basis `b₁, Tb₁, b₂, Tb₂, …` from a Z[i]-basis.
pub fn real_basis(t: &IntMatrix, zbasis: &IntMatrix) -> IntMatrix {
    let tb = t * zbasis;
    let mut cols = Vec::with_capacity(2 * zbasis.cols());
    for j in 0..zbasis.cols() {
        cols.push(zbasis.column(j));
        cols.push(tb.column(j));
    }
    IntMatrix::from_fn(zbasis.rows(), cols.len(), |r, c| cols[c][r].clone())
}

/// `H[j][k] = ⟨b_j,b_k⟩ - i⟨b_j,T b_k⟩`, after checking `T² = -1` and that
/// the `b_j` generate `L` over Z[i].
pub fn hermitian_from_isometry(lattice: &Lattice, t: &IntMatrix, zbasis: &IntMatrix) -> Result<HermitianLattice> {
    let n = lattice.rank();
    if t.rows() != n || t.cols() != n || zbasis.rows() != n {
        return Err(Error::DimensionMismatch("isometry and basis must match the lattice rank".into()));
    }
    if t.pow(2) != -&IntMatrix::identity(n) {
        return Err(Error::NotComplexStructure);
    }
    if !lattice.is_isometry(t) {
        return Err(Error::NotIsometry);
    }
    let full = real_basis(t, zbasis);
    if full.cols() != n {
        return Err(Error::NotGenerating { index: "infinite".into() });
    }
    let det = determinant(&full)?.abs();
    if !det.is_one() {
        let index = if det.is_zero() { "infinite".to_string() } else { det.to_string() };
        return Err(Error::NotGenerating { index });
    }
    let g = lattice.gram();
    let gt = g * t;
    let r = zbasis.cols();
    let gram = (0..r)
        .map(|j| {
            let bj = zbasis.column(j);
            (0..r)
                .map(|k| {
                    let bk = zbasis.column(k);
                    GaussianInt::from_parts(g.bilinear(&bj, &bk), -gt.bilinear(&bj, &bk))
                })
                .collect()
        })
        .collect();
    let mut h =
        HermitianLattice::new(gram).map_err(|_| Error::Defect("hermitian gram not conjugate-symmetric".into()))?;
    h.zbasis = Some(zbasis.clone());
    Ok(h)
}

/// `h_{L₋}` on the basis `u; p₁, q₁; p₂, q₂; e, f`.
pub fn h_l_minus() -> Result<HermitianLattice> {
    let (lattice, t) = l_minus_with_t()?;
    hermitian_from_isometry(&lattice, t.matrix(), &l_minus_zbasis())
}

/// `Σ_{j,k} H[j][k]·z_j·z̄_k` written in real terms: coefficients of
/// `|z_j|²`, `Re(z_j z̄_k)` and `Im(z_j z̄_k)` for `j < k` (zeros omitted).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HermitianPolynomial {
    pub norms: Vec<(usize, BigInt)>,
    pub re: Vec<((usize, usize), BigInt)>,
    pub im: Vec<((usize, usize), BigInt)>,
}

pub fn polynomial(h: &HermitianLattice) -> HermitianPolynomial {
    let mut p = HermitianPolynomial::default();
    let n = h.rank();
    let two = BigInt::from(2);
    for j in 0..n {
        if !h.gram[j][j].re.is_zero() {
            p.norms.push((j, h.gram[j][j].re.clone()));
        }
        for k in j + 1..n {
            // H z_j z̄_k + conj(H) z̄_j z_k = 2 Re(H) Re(z_j z̄_k) - 2 Im(H) Im(z_j z̄_k)
            let z = &h.gram[j][k];
            if !z.re.is_zero() {
                p.re.push(((j, k), &two * &z.re));
            }
            if !z.im.is_zero() {
                p.im.push(((j, k), -&two * &z.im));
            }
        }
    }
    p
}

/// The real symmetric form `Re h` on the basis `b₁, i·b₁, …` and the
/// matrix of multiplication by `i`.
pub fn to_real_lattice(h: &HermitianLattice) -> Result<(Lattice, IntMatrix)> {
    let n = h.rank();
    let gram = IntMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let z = &h.gram[r / 2][c / 2];
        match (r % 2, c % 2) {
            (0, 0) | (1, 1) => z.re.clone(),
            // ⟨b_j, T b_k⟩ = -Im H, ⟨T b_j, b_k⟩ = Im H
            (0, 1) => -&z.im,
            _ => z.im.clone(),
        }
    });
    let t = realify(&scalar_matrix(&GaussianInt::i(), n));
    Ok((Lattice::new("real form", gram)?, t))
}

/// Signature `(p, n)` of the hermitian form, from the real form (which has
/// signature `(2p, 2n)`), cross-checked by diagonalization over Q(i).
pub fn hermitian_signature(h: &HermitianLattice) -> Result<(usize, usize)> {
    let (real, _) = to_real_lattice(h)?;
    let s = signature(real.gram())?;
    if s.zero != 0 {
        return Err(Error::Degenerate);
    }
    let d = diagonalize(h);
    let pos = d.iter().filter(|x| x.is_positive()).count();
    let neg = d.iter().filter(|x| x.is_negative()).count();
    if Signature::new(2 * pos, 2 * neg, 0) != s || pos + neg != h.rank() {
        return Err(Error::Defect(format!("real form signature {s} disagrees with hermitian diagonal")));
    }
    Ok((pos, neg))
}

/// Real diagonal of a hermitian congruence `P* H P`.
fn diagonalize(h: &HermitianLattice) -> Vec<BigRational> {
    let n = h.rank();
    let mut a: Vec<Vec<GaussianRational>> =
        h.gram.iter().map(|r| r.iter().map(GaussianRational::from_int).collect()).collect();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // b_k += c·b_j with c ∈ {1, i}; the new diagonal is 2 Re(c·a_kj)
                let units = [GaussianInt::new(1, 0), GaussianInt::i()];
                let c = units
                    .iter()
                    .map(GaussianRational::from_int)
                    .find(|c| !c.mul(&a[k][j]).re.is_zero())
                    .expect("a nonzero entry has nonzero real or imaginary part");
                for row in a.iter_mut() {
                    let v = row[k].add(&c.mul(&row[j]));
                    row[k] = v;
                }
                let cc = c.conj();
                for col in 0..n {
                    let v = a[k][col].add(&cc.mul(&a[j][col]));
                    a[k][col] = v;
                }
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_zero() {
            diag.push(BigRational::zero());
            continue;
        }
        for r in k + 1..n {
            let f = a[r][k].div(&pivot);
            for c in 0..n {
                let v = a[r][c].sub(&f.mul(&a[k][c]));
                a[r][c] = v;
            }
            let fc = f.conj();
            for row in a.iter_mut() {
                let v = row[r].sub(&fc.mul(&row[k]));
                row[r] = v;
            }
        }
        diag.push(pivot.re);
    }
    diag
}

/// `g* H g = H` and `det g` a unit of Z[i].
pub fn is_unitary(g: &GaussianMatrix, h: &HermitianLattice) -> bool {
    let n = h.rank();
    if g.len() != n || g.iter().any(|r| r.len() != n) {
        return false;
    }
    let preserved = mat_mul(&mat_mul(&conjugate_transpose(g), &h.gram), g) == h.gram;
    preserved && gaussian_determinant(g).map(|d| d.is_unit()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::k3::{t_a1_squared, t_d4, t_u_u2};
    use crate::lattice::{direct_sum, standard_lattice, StandardKind};

    fn z(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn ring_arithmetic() {
        let a = z(1, 2);
        let b = z(3, -1);
        assert_eq!(&a * &b, z(5, 5));
        assert_eq!(a.conj().conj(), a);
        assert_eq!(a.norm(), BigInt::from(5));
        assert_eq!(&(&a * &b).conj(), &(&a.conj() * &b.conj()));
        assert_eq!(z(1, -1).to_string(), "1-1i");
        assert_eq!(z(-2, 0).to_string(), "-2+0i");
    }

    #[test]
    fn summand_grams() {
        let a1 = standard_lattice(&StandardKind::A1);
        let a1_2 = direct_sum(&[a1.clone(), a1]);
        let h = hermitian_from_isometry(&a1_2, &t_a1_squared(), &IntMatrix::from_columns(2, &[[1, 0]])).unwrap();
        assert_eq!(h.gram(), &vec![vec![z(-2, 0)]]);

        let uu2 = direct_sum(&[standard_lattice(&StandardKind::U), standard_lattice(&StandardKind::U2)]);
        let basis = IntMatrix::from_columns(4, &[[1, 0, 0, 0], [0, 1, 0, 0]]);
        let h = hermitian_from_isometry(&uu2, &t_u_u2(), &basis).unwrap();
        assert_eq!(h.gram(), &vec![vec![z(0, 0), z(1, -1)], vec![z(1, 1), z(0, 0)]]);
        assert_eq!(hermitian_signature(&h).unwrap(), (1, 1));

        let d4 = standard_lattice(&StandardKind::D4);
        let basis = IntMatrix::from_columns(4, &[[1, 0, 0, 0], [0, 0, 1, 0]]);
        let h = hermitian_from_isometry(&d4, &t_d4().unwrap(), &basis).unwrap();
        assert_eq!(h.gram(), &vec![vec![z(-2, 0), z(1, -1)], vec![z(1, 1), z(-2, 0)]]);
        assert_eq!(hermitian_signature(&h).unwrap(), (0, 2));
    }

    #[test]
    fn generation_and_structure_errors() {
        let d4 = standard_lattice(&StandardKind::D4);
        let t = t_d4().unwrap();
        let basis = IntMatrix::from_columns(4, &[[1, 0, 0, 0], [0, 1, 0, 0]]);
        // b₂ = T b₁ up to sign, so {b₁, b₂} spans only a rank-2 sublattice over Z
        assert!(matches!(hermitian_from_isometry(&d4, &t, &basis), Err(Error::NotGenerating { .. })));
        assert_eq!(hermitian_from_isometry(&d4, &IntMatrix::identity(4), &basis), Err(Error::NotComplexStructure));
        let u = standard_lattice(&StandardKind::U);
        let rot = IntMatrix::from_rows(&[[0, -1], [1, 0]]);
        assert_eq!(hermitian_from_isometry(&u, &rot, &IntMatrix::from_columns(2, &[[1, 0]])), Err(Error::NotIsometry));
    }

    #[test]
    fn unitary_examples() {
        let h = h_l_minus().unwrap();
        assert!(is_unitary(&identity_matrix(7), &h));
        assert!(is_unitary(&scalar_matrix(&GaussianInt::i(), 7), &h));
        let mut g = identity_matrix(7);
        g[0][0] = z(1, 1);
        assert!(!is_unitary(&g, &h));
    }

    #[test]
    fn sesquilinearity() {
        let h = h_l_minus().unwrap();
        let e = |j: usize| -> Vec<GaussianInt> { (0..7).map(|k| if j == k { z(1, 0) } else { z(0, 0) }).collect() };
        let i = GaussianInt::i();
        for a in 0..7 {
            for b in 0..7 {
                let ia: Vec<GaussianInt> = e(a).iter().map(|x| &i * x).collect();
                let ib: Vec<GaussianInt> = e(b).iter().map(|x| &i * x).collect();
                let base = h.form(&e(a), &e(b));
                assert_eq!(h.form(&ia, &e(b)), &(-&i) * &base);
                assert_eq!(h.form(&e(a), &ib), &i * &base);
            }
        }
    }

    #[test]
    fn diagonalization_handles_zero_diagonal() {
        let h = HermitianLattice::new(vec![vec![z(0, 0), z(0, 1)], vec![z(0, -1), z(0, 0)]]).unwrap();
        assert_eq!(hermitian_signature(&h).unwrap(), (1, 1));
        let single = HermitianLattice::new(vec![vec![z(-2, 0)]]).unwrap();
        assert_eq!(hermitian_signature(&single).unwrap(), (0, 1));
        assert_eq!(HermitianLattice::new(vec![vec![z(0, 1)]]), Err(Error::NotSymmetric));
    }
}
