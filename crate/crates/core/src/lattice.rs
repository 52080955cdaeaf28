//! Integral lattices, discriminant forms and gluing.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    determinant, integer_kernel, lattice_basis, signature, smith_normal_form, IntMatrix, RatMatrix, Signature,
};

/// A free Z-module of finite rank with a symmetric integral Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    name: String,
    gram: IntMatrix,
    basis_labels: Vec<String>,
}

impl Lattice {
    pub fn new(name: impl Into<String>, gram: IntMatrix) -> Result<Self> {
        let labels = (0..gram.rows()).map(|i| format!("b{i}")).collect();
        Self::with_labels(name, gram, labels)
    }

    pub fn with_labels(name: impl Into<String>, gram: IntMatrix, basis_labels: Vec<String>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare { rows: gram.rows(), cols: gram.cols() });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if basis_labels.len() != gram.rows() {
            return Err(Error::DimensionMismatch(format!("{} labels for rank {}", basis_labels.len(), gram.rows())));
        }
        Ok(Lattice { name: name.into(), gram, basis_labels })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.get(i, i).is_even())
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.gram).expect("gram is square")
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.determinant().is_zero()
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    pub fn signature(&self) -> Signature {
        signature(&self.gram).expect("gram is symmetric")
    }

    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        self.gram.bilinear(x, y)
    }

    /// True iff `MᵀGM = G`.
    pub fn is_isometry(&self, m: &IntMatrix) -> bool {
        m.rows() == self.rank() && m.cols() == self.rank() && self.gram.congruent(m) == self.gram
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {})", self.name, self.rank())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardKind {
    U,
    U2,
    A1,
    D4,
    E8Neg,
    Diag(Vec<i64>),
}

impl FromStr for StandardKind {
    type Err = Error;

    /// Accepts `U`, `U(2)`, `A1`, `D4`, `E8(-1)` and `diag(a,b,...)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "U" => return Ok(StandardKind::U),
            "U(2)" | "U2" => return Ok(StandardKind::U2),
            "A1" => return Ok(StandardKind::A1),
            "D4" => return Ok(StandardKind::D4),
            "E8(-1)" | "E8_neg" => return Ok(StandardKind::E8Neg),
            _ => {}
        }
        let inner = t
            .strip_prefix("diag(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::UnknownKind(s.to_string()))?;
        let entries = inner
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::UnknownKind(s.to_string()))?;
        Ok(StandardKind::Diag(entries))
    }
}

/// Basis of D₄ inside Z⁴ (the even-coordinate-sum sublattice).
pub const D4_BASIS: [[i64; 4]; 4] = [[1, 1, 0, 0], [-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1]];

const E8_NEG: [[i64; 8]; 8] = [
    [-2, 1, 0, 0, 0, 0, 0, 0],
    [1, -2, 1, 0, 0, 0, 0, 0],
    [0, 1, -2, 1, 0, 0, 0, 0],
    [0, 0, 1, -2, 1, 0, 0, 0],
    [0, 0, 0, 1, -2, 1, 0, 1],
    [0, 0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 0, 1, -2, 0],
    [0, 0, 0, 0, 1, 0, 0, -2],
];

pub fn standard_lattice(kind: &StandardKind) -> Lattice {
    let (name, gram, labels): (&str, IntMatrix, Vec<String>) = match kind {
        StandardKind::U => ("U", IntMatrix::from_rows(&[[0, 1], [1, 0]]), vec!["e".into(), "f".into()]),
        StandardKind::U2 => ("U(2)", IntMatrix::from_rows(&[[0, 2], [2, 0]]), vec!["e'".into(), "f'".into()]),
        StandardKind::A1 => ("A1", IntMatrix::from_rows(&[[-2]]), vec!["r".into()]),
        StandardKind::D4 => {
            // negated dot product on the displayed basis
            let g = IntMatrix::from_fn(4, 4, |i, j| {
                let dot: i64 = (0..4).map(|k| D4_BASIS[i][k] * D4_BASIS[j][k]).sum();
                BigInt::from(-dot)
            });
            ("D4", g, (1..=4).map(|i| format!("d{i}")).collect())
        }
        StandardKind::E8Neg => ("E8(-1)", IntMatrix::from_rows(&E8_NEG), (1..=8).map(|i| format!("a{i}")).collect()),
        StandardKind::Diag(d) => {
            let name = format!("diag({})", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            let labels = (0..d.len()).map(|i| format!("x{i}")).collect();
            return Lattice::with_labels(name, IntMatrix::diagonal(d), labels).expect("diagonal gram");
        }
    };
    Lattice::with_labels(name, gram, labels).expect("standard gram is symmetric")
}

pub fn direct_sum(parts: &[Lattice]) -> Lattice {
    let blocks: Vec<&IntMatrix> = parts.iter().map(|p| &p.gram).collect();
    let gram = IntMatrix::block_diagonal(&blocks);
    let labels = parts
        .iter()
        .enumerate()
        .flat_map(|(k, p)| p.basis_labels.iter().map(move |l| format!("{}{}.{}", p.name, k, l)))
        .collect();
    let name = parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join("+");
    Lattice::with_labels(name, gram, labels).expect("block diagonal of symmetric grams")
}

pub fn rescale(lattice: &Lattice, n: i64) -> Result<Lattice> {
    if n == 0 {
        return Err(Error::ZeroScale);
    }
    Ok(Lattice {
        name: format!("{}({})", lattice.name, n),
        gram: lattice.gram.scale(&BigInt::from(n)),
        basis_labels: lattice.basis_labels.clone(),
    })
}

fn mod_two(x: BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let k = (&x / &two).floor();
    x - k * two
}

fn mod_one(x: BigRational) -> BigRational {
    let k = x.floor();
    x - k
}

/// The discriminant group `L*/L` with its quadratic form in Q/2Z and
/// bilinear form in Q/Z, presented on generators of the cyclic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    divisors: Vec<BigInt>,
    lifts: RatMatrix,
    gram: IntMatrix,
    coordinate_map: IntMatrix,
    q_gens: Vec<BigRational>,
    bilinear: Vec<Vec<BigRational>>,
}

impl FiniteQuadraticForm {
    /// Elementary divisors `d₁ | … | dₖ`, all > 1.
    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    pub fn order(&self) -> BigInt {
        self.divisors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn is_two_elementary(&self) -> bool {
        let two = BigInt::from(2);
        self.divisors.iter().all(|d| *d == two)
    }

    /// Columns are representatives of the generators in `L ⊗ Q`.
    pub fn generator_lifts(&self) -> &RatMatrix {
        &self.lifts
    }

    /// q of generator `i`, in [0, 2).
    pub fn q_generator(&self, i: usize) -> &BigRational {
        &self.q_gens[i]
    }

    /// b of generators `i`, `j`, in [0, 1).
    pub fn b_generators(&self, i: usize, j: usize) -> &BigRational {
        &self.bilinear[i][j]
    }

    /// Lift of the element with the given generator coordinates.
    pub fn lift(&self, coords: &[BigInt]) -> Vec<BigRational> {
        let c: Vec<BigRational> = coords.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        self.lifts.apply(&c)
    }

    /// Value of q on an element, reduced into [0, 2).
    pub fn q(&self, coords: &[BigInt]) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..self.rank() {
            let ci = BigRational::from_integer(coords[i].clone());
            acc += &ci * &ci * &self.q_gens[i];
            for j in i + 1..self.rank() {
                let cj = BigRational::from_integer(coords[j].clone());
                acc += BigRational::from_integer(BigInt::from(2)) * &ci * cj * &self.bilinear[i][j];
            }
        }
        mod_two(acc)
    }

    /// Value of b on a pair of elements, reduced into [0, 1).
    pub fn b(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                acc += BigRational::from_integer(&x[i] * &y[j]) * &self.bilinear[i][j];
            }
        }
        mod_one(acc)
    }

    /// Generator coordinates of a dual vector `y ∈ L*` (reduced mod the divisors).
    pub fn coordinates(&self, y: &[BigRational]) -> Result<Vec<BigInt>> {
        let gy: Vec<BigRational> = self.gram.to_rational().apply(y);
        if !gy.iter().all(|x| x.is_integer()) {
            return Err(Error::Defect("vector is not in the dual lattice".into()));
        }
        let gy: Vec<BigInt> = gy.iter().map(|x| x.to_integer()).collect();
        let c = self.coordinate_map.apply(&gy);
        Ok(c.into_iter().zip(&self.divisors).map(|(x, d)| x.mod_floor(d)).collect())
    }

    /// Compact table form; only for 2-elementary groups.
    pub fn two_elementary(&self) -> Result<TwoElementaryForm> {
        if !self.is_two_elementary() {
            return Err(Error::NotTwoElementary);
        }
        let k = self.rank();
        if k > 16 {
            return Err(Error::RankTooLarge { rank: k, limit: 16 });
        }
        let half_units = |x: &BigRational| -> u8 {
            let v = x * BigRational::from_integer(BigInt::from(2));
            debug_assert!(v.is_integer());
            v.to_integer().to_u8().expect("small")
        };
        let q_half = self.q_gens.iter().map(|x| half_units(x) % 4).collect();
        let b_rows = (0..k)
            .map(|i| (0..k).fold(0u32, |acc, j| acc | (((half_units(&self.bilinear[i][j]) % 2) as u32) << j)))
            .collect();
        Ok(TwoElementaryForm::new(k, q_half, b_rows))
    }
}

/// Discriminant form of an even, nondegenerate lattice.
pub fn discriminant_form(lattice: &Lattice) -> Result<FiniteQuadraticForm> {
    if !lattice.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    if !lattice.is_even() {
        return Err(Error::OddLattice);
    }
    let g = lattice.gram();
    let n = lattice.rank();
    let snf = smith_normal_form(g);
    let d = snf.diagonal_entries();
    let active: Vec<usize> = (0..n).filter(|&i| !d[i].is_one()).collect();
    let divisors: Vec<BigInt> = active.iter().map(|&i| d[i].clone()).collect();
    let lifts = RatMatrix::from_fn(n, active.len(), |r, c| {
        let i = active[c];
        BigRational::new(snf.right.get(r, i).clone(), d[i].clone())
    });
    let coordinate_map = snf.left.select_rows(active.iter().copied());
    let gq = g.to_rational();
    let pair =
        |a: &[BigRational], b: &[BigRational]| -> BigRational { a.iter().zip(gq.apply(b)).map(|(x, y)| x * y).sum() };
    let cols: Vec<Vec<BigRational>> = (0..active.len()).map(|j| lifts.column(j)).collect();
    let q_gens = cols.iter().map(|c| mod_two(pair(c, c))).collect();
    let bilinear = cols.iter().map(|a| cols.iter().map(|b| mod_one(pair(a, b))).collect()).collect();
    Ok(FiniteQuadraticForm { divisors, lifts, gram: g.clone(), coordinate_map, q_gens, bilinear })
}

pub fn is_2_elementary(lattice: &Lattice) -> Result<bool> {
    if !lattice.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let two = BigInt::from(2);
    Ok(smith_normal_form(lattice.gram()).diagonal_entries().iter().all(|d| d.is_one() || *d == two))
}

/// A 2-elementary discriminant form stored as bit tables.
///
/// Elements are bitmasks over the generators. `q` is kept in units of 1/2
/// modulo 4 and `b` in units of 1/2 modulo 2, which is exact because every
/// value of a 2-elementary even form is a multiple of 1/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoElementaryForm {
    rank: usize,
    q_gen_half: Vec<u8>,
    b_rows: Vec<u32>,
    q_table: Vec<u8>,
}

impl TwoElementaryForm {
    pub fn new(rank: usize, q_gen_half: Vec<u8>, b_rows: Vec<u32>) -> Self {
        let mut q_table = vec![0u8; 1 << rank];
        for x in 1u32..(1 << rank) {
            let i = x.trailing_zeros() as usize;
            let rest = x & (x - 1);
            // q(g + rest) = q(g) + q(rest) + 2 b(g, rest)
            let cross = (b_rows[i] & rest).count_ones() as u8 % 2;
            q_table[x as usize] = (q_gen_half[i] + q_table[rest as usize] + 2 * cross) % 4;
        }
        TwoElementaryForm { rank, q_gen_half, b_rows, q_table }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        1 << self.rank
    }

    /// q(x) in units of 1/2, modulo 4.
    pub fn q_half(&self, x: u32) -> u8 {
        self.q_table[x as usize]
    }

    /// b(x, y) in units of 1/2, modulo 2.
    pub fn b_half(&self, x: u32, y: u32) -> u8 {
        let mut acc = 0u32;
        let mut xs = x;
        while xs != 0 {
            let i = xs.trailing_zeros() as usize;
            acc ^= self.b_rows[i] & y;
            xs &= xs - 1;
        }
        (acc.count_ones() % 2) as u8
    }

    pub fn q_generators_half(&self) -> &[u8] {
        &self.q_gen_half
    }

    /// Image of `x` under the linear map sending generator `i` to `images[i]`.
    pub fn apply(images: &[u32], x: u32) -> u32 {
        let mut out = 0;
        let mut xs = x;
        while xs != 0 {
            out ^= images[xs.trailing_zeros() as usize];
            xs &= xs - 1;
        }
        out
    }

    /// Candidate images ordered lexicographically by coordinate vector
    /// (generator 0 is the most significant coordinate).
    fn lex_candidates(&self) -> Vec<u32> {
        let mut c: Vec<u32> = (1..(1u32 << self.rank)).collect();
        let key = |x: &u32| (0..self.rank).map(|i| (x >> i) & 1).collect::<Vec<_>>();
        c.sort_by_key(key);
        c
    }

    /// True iff `images` defines a group automorphism with
    /// `target.q(γx) = sign · self.q(x)` for every element.
    fn preserves(&self, target: &TwoElementaryForm, images: &[u32], negate: bool) -> bool {
        if images.len() != self.rank || target.rank != self.rank {
            return false;
        }
        let mut seen = vec![false; self.order()];
        (0..self.order() as u32).all(|x| {
            let y = Self::apply(images, x);
            let want = if negate { (4 - self.q_half(x)) % 4 } else { self.q_half(x) };
            let fresh = !std::mem::replace(&mut seen[y as usize], true);
            fresh && target.q_half(y) == want
        })
    }

    pub fn is_isometry(&self, images: &[u32]) -> bool {
        self.preserves(self, images, false)
    }
}

/// Incremental F₂ span membership.
#[derive(Clone, Default)]
struct XorBasis {
    pivots: Vec<u32>,
}

impl XorBasis {
    fn reduce(&self, mut x: u32) -> u32 {
        for &p in &self.pivots {
            x = x.min(x ^ p);
        }
        x
    }

    fn insert(&mut self, x: u32) -> bool {
        let r = self.reduce(x);
        if r == 0 {
            return false;
        }
        self.pivots.push(r);
        self.pivots.sort_unstable_by(|a, b| b.cmp(a));
        true
    }
}

/// An anti-isometry `γ: A_S → A_T` of 2-elementary discriminant forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueMap {
    source: FiniteQuadraticForm,
    target: FiniteQuadraticForm,
    images: Vec<u32>,
}

impl GlueMap {
    /// Validates that `images` (generator images as bitmasks) is an anti-isometry.
    pub fn new(source: FiniteQuadraticForm, target: FiniteQuadraticForm, images: Vec<u32>) -> Result<Self> {
        let s = source.two_elementary()?;
        let t = target.two_elementary()?;
        if !s.preserves(&t, &images, true) {
            return Err(Error::NotAntiIsometry);
        }
        Ok(GlueMap { source, target, images })
    }

    pub fn source(&self) -> &FiniteQuadraticForm {
        &self.source
    }

    pub fn target(&self) -> &FiniteQuadraticForm {
        &self.target
    }

    /// Images of the source generators, as bitmasks over the target generators.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        TwoElementaryForm::apply(&self.images, x)
    }

    /// Matrix over Z/2 (columns are images of source generators).
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let k = self.target.rank();
        (0..k).map(|i| self.images.iter().map(|&c| ((c >> i) & 1) as u8).collect()).collect()
    }

    /// Number of elements in the graph of γ.
    pub fn graph_order(&self) -> BigUint {
        BigUint::one() << self.source.rank()
    }
}

/// Lexicographically first anti-isometry `q_S → -q_T`, if any.
pub fn find_anti_isometry(qs: &FiniteQuadraticForm, qt: &FiniteQuadraticForm) -> Result<Option<GlueMap>> {
    let s = qs.two_elementary()?;
    let t = qt.two_elementary()?;
    if s.rank() != t.rank() {
        return Ok(None);
    }
    let candidates = t.lex_candidates();
    let k = s.rank();
    let mut images = Vec::with_capacity(k);
    let found = search_maps(&s, &t, &candidates, &mut images, &XorBasis::default(), true, 0, k);
    match found {
        Some(images) => Ok(Some(GlueMap::new(qs.clone(), qt.clone(), images)?)),
        None => Ok(None),
    }
}

/// Depth-first search for generator images `x_i ↦ y_i` with
/// `q_t(y_i) = ±q_s(x_i)` and `b_t(y_i, y_j) = ±b_s(x_i, x_j)`.
#[allow(clippy::too_many_arguments)]
fn search_maps(
    s: &TwoElementaryForm,
    t: &TwoElementaryForm,
    candidates: &[u32],
    images: &mut Vec<u32>,
    span: &XorBasis,
    negate: bool,
    level: usize,
    k: usize,
) -> Option<Vec<u32>> {
    if level == k {
        return Some(images.clone());
    }
    let x = 1u32 << level;
    let want_q = if negate { (4 - s.q_half(x)) % 4 } else { s.q_half(x) };
    for &y in candidates {
        if t.q_half(y) != want_q {
            continue;
        }
        // b takes values in {0, 1/2}, so negation is the identity on it
        let ok = images.iter().enumerate().all(|(j, &yj)| t.b_half(y, yj) == s.b_half(x, 1 << j));
        if !ok {
            continue;
        }
        let mut next_span = span.clone();
        if !next_span.insert(y) {
            continue;
        }
        images.push(y);
        if let Some(found) = search_maps(s, t, candidates, images, &next_span, negate, level + 1, k) {
            return Some(found);
        }
        images.pop();
    }
    None
}

/// The glued even overlattice of `S ⊕ T`, together with the coordinates of
/// the `S ⊕ T` basis in the new basis.
#[derive(Clone, Debug)]
pub struct Overlattice {
    pub lattice: Lattice,
    /// Columns: basis of `S ⊕ T` in overlattice coordinates.
    pub inclusion: IntMatrix,
    pub s_rank: usize,
    pub t_rank: usize,
}

impl Overlattice {
    /// Basis of `S` in overlattice coordinates.
    pub fn s_basis(&self) -> IntMatrix {
        self.inclusion.select_columns(0..self.s_rank)
    }

    /// Basis of `T` in overlattice coordinates.
    pub fn t_basis(&self) -> IntMatrix {
        self.inclusion.select_columns(self.s_rank..self.s_rank + self.t_rank)
    }

    /// Index of `S ⊕ T` in the overlattice.
    pub fn index(&self) -> BigInt {
        determinant(&self.inclusion).expect("square").abs()
    }
}

pub fn glue_overlattice(s: &Lattice, t: &Lattice, gamma: &GlueMap) -> Result<Overlattice> {
    let qs = discriminant_form(s)?;
    let qt = discriminant_form(t)?;
    if qs != gamma.source || qt != gamma.target {
        return Err(Error::NotAntiIsometry);
    }
    let sum = direct_sum(&[s.clone(), t.clone()]);
    let (ns, nt) = (s.rank(), t.rank());
    let n = ns + nt;
    let k = qs.rank();
    // generators: the S ⊕ T basis and one glue vector per generator of A_S
    let mut gens = RatMatrix::zeros(n, n + k);
    for i in 0..n {
        gens.set(i, i, BigRational::one());
    }
    for g in 0..k {
        let ls = qs.generator_lifts().column(g);
        let image = gamma.apply(1 << g);
        let coords: Vec<BigInt> = (0..qt.rank()).map(|i| BigInt::from((image >> i) & 1)).collect();
        let lt = qt.lift(&coords);
        for (i, v) in ls.into_iter().chain(lt).enumerate() {
            gens.set(i, n + g, v);
        }
    }
    let den = gens.common_denominator();
    let scaled =
        IntMatrix::from_fn(n, n + k, |i, j| (gens.get(i, j) * BigRational::from_integer(den.clone())).to_integer());
    let basis_scaled = lattice_basis(&scaled);
    if basis_scaled.cols() != n {
        return Err(Error::Defect("overlattice has wrong rank".into()));
    }
    let basis = RatMatrix::from_fn(n, n, |i, j| BigRational::new(basis_scaled.get(i, j).clone(), den.clone()));
    let gram_q = &(&basis.transpose() * &sum.gram().to_rational()) * &basis;
    let gram = gram_q.to_integer().ok_or(Error::NotAntiIsometry)?;
    let inclusion = basis
        .inverse()
        .and_then(|inv| inv.to_integer())
        .ok_or_else(|| Error::Defect("S ⊕ T not contained in overlattice".into()))?;
    let lattice = Lattice::new(format!("glue({}, {})", s.name(), t.name()), gram)?;
    if !lattice.is_even() {
        return Err(Error::NotAntiIsometry);
    }
    Ok(Overlattice { lattice, inclusion, s_rank: ns, t_rank: nt })
}

fn check_independent(sub_basis: &IntMatrix) -> Result<()> {
    if smith_normal_form(sub_basis).rank() != sub_basis.cols() {
        return Err(Error::DependentBasis);
    }
    Ok(())
}

/// Saturated basis (columns, ambient coordinates) of the orthogonal complement.
pub fn orthogonal_complement(ambient: &Lattice, sub_basis: &IntMatrix) -> Result<IntMatrix> {
    if sub_basis.rows() != ambient.rank() {
        return Err(Error::DimensionMismatch("sub-basis rows must equal ambient rank".into()));
    }
    if !ambient.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    check_independent(sub_basis)?;
    if sub_basis.cols() == 0 {
        return Ok(IntMatrix::identity(ambient.rank()));
    }
    let constraints = &sub_basis.transpose() * ambient.gram();
    Ok(integer_kernel(&constraints))
}

pub fn is_primitive(ambient: &Lattice, sub_basis: &IntMatrix) -> Result<bool> {
    if sub_basis.rows() != ambient.rank() {
        return Err(Error::DimensionMismatch("sub-basis rows must equal ambient rank".into()));
    }
    check_independent(sub_basis)?;
    Ok(smith_normal_form(sub_basis).invariant_factors().iter().all(|d| d.is_one()))
}

/// Action of an isometry on the discriminant group, as generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantAction {
    /// `columns[i]` are the coordinates of the image of generator `i`.
    pub columns: Vec<Vec<BigInt>>,
}

impl DiscriminantAction {
    pub fn is_identity(&self) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(i, c)| c.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
    }

    /// Generator images as bitmasks (2-elementary groups only).
    pub fn to_masks(&self) -> Vec<u32> {
        self.columns
            .iter()
            .map(|c| c.iter().enumerate().fold(0u32, |acc, (i, x)| acc | (u32::from(x.is_odd()) << i)))
            .collect()
    }
}

pub fn induced_discriminant_action(lattice: &Lattice, m: &IntMatrix) -> Result<DiscriminantAction> {
    if !lattice.is_isometry(m) {
        return Err(Error::NotIsometry);
    }
    let q = discriminant_form(lattice)?;
    let mq = m.to_rational();
    let mut columns = Vec::with_capacity(q.rank());
    for i in 0..q.rank() {
        let image = mq.apply(&q.generator_lifts().column(i));
        columns.push(q.coordinates(&image)?);
    }
    // verify that q and b are preserved on generators
    for i in 0..q.rank() {
        let unit: Vec<BigInt> = (0..q.rank()).map(|j| BigInt::from(u8::from(i == j))).collect();
        if q.q(&columns[i]) != q.q(&unit) {
            return Err(Error::Defect("induced action does not preserve q".into()));
        }
        for j in 0..q.rank() {
            if q.b(&columns[i], &columns[j]) != *q.b_generators(i, j) {
                return Err(Error::Defect("induced action does not preserve b".into()));
            }
        }
    }
    Ok(DiscriminantAction { columns })
}

/// Order of O(q) with a strong generating set (generator images as bitmasks).
#[derive(Clone, Debug)]
pub struct OrthogonalGroup {
    pub order: BigUint,
    /// `orbit_sizes[i]`: orbit of generator `i` under the pointwise stabilizer of generators `< i`.
    pub orbit_sizes: Vec<usize>,
    pub generators: Vec<Vec<u32>>,
}

pub const ORTHOGONAL_SEARCH_RANK_LIMIT: usize = 10;

/// Stabilizer-chain backtracking: at each level, every candidate image of
/// the next basis vector not already in the known orbit is tested for
/// extendability to a full isometry.
pub fn orthogonal_group_order(q: &FiniteQuadraticForm) -> Result<OrthogonalGroup> {
    let form = q.two_elementary()?;
    let k = form.rank();
    if k > ORTHOGONAL_SEARCH_RANK_LIMIT {
        return Err(Error::RankTooLarge { rank: k, limit: ORTHOGONAL_SEARCH_RANK_LIMIT });
    }
    let candidates = form.lex_candidates();
    let mut generators: Vec<Vec<u32>> = Vec::new();
    let mut orbit_sizes = vec![1usize; k];
    for level in (0..k).rev() {
        let x = 1u32 << level;
        let fixed: Vec<u32> = (0..level).map(|j| 1u32 << j).collect();
        let mut span = XorBasis::default();
        for &f in &fixed {
            span.insert(f);
        }
        let mut orbit = mask_orbit(x, &generators, 1 << k);
        for &y in &candidates {
            if orbit[y as usize] {
                continue;
            }
            let mut images = fixed.clone();
            let ok_q = form.q_half(y) == form.q_half(x);
            let ok_b = fixed.iter().all(|&f| form.b_half(y, f) == form.b_half(x, f));
            let mut next = span.clone();
            if !ok_q || !ok_b || !next.insert(y) {
                continue;
            }
            images.push(y);
            if let Some(g) = search_maps(&form, &form, &candidates, &mut images, &next, false, level + 1, k) {
                generators.push(g);
                orbit = mask_orbit(x, &generators, 1 << k);
            }
        }
        orbit_sizes[level] = orbit.iter().filter(|&&b| b).count();
    }
    let order = orbit_sizes.iter().fold(BigUint::one(), |acc, &s| acc * BigUint::from(s));
    Ok(OrthogonalGroup { order, orbit_sizes, generators })
}

fn mask_orbit(x: u32, gens: &[Vec<u32>], size: usize) -> Vec<bool> {
    let mut seen = vec![false; size];
    seen[x as usize] = true;
    let mut stack = vec![x];
    while let Some(p) = stack.pop() {
        for g in gens {
            let y = TwoElementaryForm::apply(g, p);
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen
}
