//! The K3 lattice, the eigenlattices L₊ and L₋ of the deck transformation,
//! the order-4 isometry T on L₋, and their gluing along the discriminant forms.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::del_pezzo::{geiser_involution, picard_gram};
use crate::error::{Error, Result};
use crate::exact::{smith_normal_form, IntMatrix};
use crate::lattice::{
    direct_sum, discriminant_form, find_anti_isometry, glue_overlattice, induced_discriminant_action,
    orthogonal_complement, standard_lattice, FiniteQuadraticForm, GlueMap, Lattice, Overlattice, StandardKind,
    TwoElementaryForm, D4_BASIS,
};

/// `U³ ⊕ E₈(-1)²`.
pub fn k3_lattice() -> Lattice {
    let u = standard_lattice(&StandardKind::U);
    let e8 = standard_lattice(&StandardKind::E8Neg);
    direct_sum(&[u.clone(), u.clone(), u, e8.clone(), e8]).renamed("K3")
}

/// `⟨2⟩ ⊕ A₁⁷`, i.e. `diag(2, -2, …, -2)`.
pub fn l_plus() -> Lattice {
    let labels = (0..8).map(|i| format!("h{i}")).collect();
    Lattice::with_labels("L+", IntMatrix::diagonal(&[2, -2, -2, -2, -2, -2, -2, -2]), labels).expect("diagonal")
}

/// Unimodular `P` with `Pᵀ (2·G_Pic) P = Gram(L₊)`, checked exactly.
pub fn l_plus_congruence() -> Result<IntMatrix> {
    let doubled = picard_gram().scale(&BigInt::from(2));
    let p = IntMatrix::identity(8);
    if p.unimodular_inverse().is_none() || doubled.congruent(&p) != *l_plus().gram() {
        return Err(Error::Defect("doubled Picard form is not congruent to L+".into()));
    }
    Ok(p)
}

/// A named diagonal block of a block-diagonal isometry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandBlock {
    pub name: String,
    pub offset: usize,
    pub size: usize,
}

/// An isometry `T` with `T² = -1`, recorded together with its summand blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckIsometry {
    matrix: IntMatrix,
    blocks: Vec<SummandBlock>,
}

impl DeckIsometry {
    pub fn new(lattice: &Lattice, matrix: IntMatrix, blocks: Vec<SummandBlock>) -> Result<Self> {
        let n = lattice.rank();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!("{}x{} isometry on rank {n}", matrix.rows(), matrix.cols())));
        }
        if !lattice.is_isometry(&matrix) {
            return Err(Error::NotIsometry);
        }
        if matrix.pow(2) != -&IntMatrix::identity(n) {
            return Err(Error::NotComplexStructure);
        }
        Ok(DeckIsometry { matrix, blocks })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn blocks(&self) -> &[SummandBlock] {
        &self.blocks
    }
}

/// `T` on `A₁²` in the basis `u, v`: `Tu = v`, and `T² = -1` forces `Tv = -u`.
pub fn t_a1_squared() -> IntMatrix {
    IntMatrix::from_rows(&[[0, -1], [1, 0]])
}

/// `T` on `D₄` in the basis [`D4_BASIS`], from `(x₁,x₂,x₃,x₄) ↦ (x₂,-x₁,x₄,-x₃)`.
pub fn t_d4() -> Result<IntMatrix> {
    let b = IntMatrix::from_columns(4, &D4_BASIS);
    let t0 = IntMatrix::from_rows(&[[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]);
    let binv = b.to_rational().inverse().ok_or(Error::DependentBasis)?;
    (&binv * &(&t0 * &b).to_rational()).to_integer().ok_or_else(|| Error::Defect("T does not preserve D4".into()))
}

/// `T` on `U ⊕ U(2)` in the basis `e, f, e', f'`. From `Te = -e - e'` and
/// `Tf = f - f'`, applying `T` again and using `T² = -1` gives
/// `Te' = 2e + e'` and `Tf' = 2f - f'`.
pub fn t_u_u2() -> IntMatrix {
    IntMatrix::from_columns(4, &[[-1, 0, -1, 0], [0, 1, 0, -1], [2, 0, 1, 0], [0, 2, 0, -1]])
}

/// `L₋ = A₁² ⊕ D₄ ⊕ D₄ ⊕ (U ⊕ U(2))` with its block-diagonal `T`.
pub fn l_minus_with_t() -> Result<(Lattice, DeckIsometry)> {
    let a1 = standard_lattice(&StandardKind::A1);
    let d4 = standard_lattice(&StandardKind::D4);
    let a1_2 = direct_sum(&[a1.clone(), a1]).renamed("A1^2");
    let uu2 = direct_sum(&[standard_lattice(&StandardKind::U), standard_lattice(&StandardKind::U2)]).renamed("U+U(2)");
    let parts = [a1_2, d4.clone(), d4, uu2];
    let lattice = direct_sum(&parts).renamed("L-");
    let td4 = t_d4()?;
    let mats = [t_a1_squared(), td4.clone(), td4, t_u_u2()];
    let matrix = IntMatrix::block_diagonal(&mats.iter().collect::<Vec<_>>());
    let mut offset = 0;
    let blocks = parts
        .iter()
        .map(|p| {
            let b = SummandBlock { name: p.name().to_string(), offset, size: p.rank() };
            offset += p.rank();
            b
        })
        .collect();
    let t = DeckIsometry::new(&lattice, matrix, blocks)?;
    if !t.matrix().pow(4).is_identity() {
        return Err(Error::Defect("T^4 is not the identity".into()));
    }
    Ok((lattice, t))
}

/// Columns: the Z[i]-basis `u; p₁, q₁; p₂, q₂; e, f` of L₋ in its Z-basis.
pub fn l_minus_zbasis() -> IntMatrix {
    // p = (1,1,0,0) and q = (0,-1,1,0) are the first and third D4 basis vectors
    let mut cols = vec![vec![0i64; 14]; 7];
    for (c, row) in [0usize, 2, 4, 6, 8, 10, 11].into_iter().enumerate() {
        cols[c][row] = 1;
    }
    IntMatrix::from_columns(14, &cols)
}

/// Integer coordinates of the columns of `x` in the lattice spanned by the
/// columns of `y` (full column rank), if they exist.
fn coordinates_in(y: &IntMatrix, x: &IntMatrix) -> Option<IntMatrix> {
    if y.cols() == 0 {
        return x.is_zero().then(|| IntMatrix::zeros(0, x.cols()));
    }
    let yq = y.to_rational();
    let normal = (&yq.transpose() * &yq).inverse()?;
    let c = &(&normal * &yq.transpose()) * &x.to_rational();
    let c = c.to_integer()?;
    (&(y * &c) == x).then_some(c)
}

/// Whether two full-rank column bases span the same sublattice.
pub fn same_sublattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.cols() == b.cols() && coordinates_in(a, b).is_some() && coordinates_in(b, a).is_some()
}

/// True iff each basis spans the saturated orthogonal complement of the other.
pub fn verify_orthogonal_pair(ambient: &Lattice, a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    let ca = orthogonal_complement(ambient, a)?;
    let cb = orthogonal_complement(ambient, b)?;
    Ok(same_sublattice(&ca, b) && same_sublattice(&cb, a))
}

pub fn glue_group_order(gamma: &GlueMap) -> BigUint {
    gamma.graph_order()
}

/// Everything produced by gluing L₊ and L₋.
#[derive(Clone, Debug)]
pub struct K3Glue {
    pub l_plus: Lattice,
    pub l_minus: Lattice,
    pub t: DeckIsometry,
    pub q_plus: FiniteQuadraticForm,
    pub q_minus: FiniteQuadraticForm,
    pub gamma: GlueMap,
    pub overlattice: Overlattice,
}

pub fn glue_l_plus_l_minus() -> Result<K3Glue> {
    let lp = l_plus();
    let (lm, t) = l_minus_with_t()?;
    let q_plus = discriminant_form(&lp)?;
    let q_minus = discriminant_form(&lm)?;
    let gamma = find_anti_isometry(&q_plus, &q_minus)?
        .ok_or_else(|| Error::Defect("no anti-isometry between the L+ and L- discriminant forms".into()))?;
    let overlattice = glue_overlattice(&lp, &lm, &gamma)?;
    Ok(K3Glue { l_plus: lp, l_minus: lm, t, q_plus, q_minus, gamma, overlattice })
}

/// Which glue map satisfied the T-versus-Geiser check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaChoice {
    LexFirst,
    /// Found by the fallback search; the generator images are recorded.
    Searched(Vec<u32>),
}

#[derive(Clone, Debug)]
pub struct Compatibility {
    /// Action of the Geiser involution on `A_{L₊}` (generator images).
    pub geiser_masks: Vec<u32>,
    /// Action of `T` on `A_{L₋}`.
    pub t_masks: Vec<u32>,
    pub choice: Option<GammaChoice>,
}

/// Checks `γ ∘ τ = T ∘ γ` on `A_{L₊}` for the lexicographically first γ, and
/// if that fails searches all anti-isometries `γ ∘ g`, `g ∈ O(q₊)`, built
/// generator by generator.
pub fn t_geiser_compatibility(glue: &K3Glue) -> Result<Compatibility> {
    let tau = geiser_involution()?;
    let geiser_masks = induced_discriminant_action(&glue.l_plus, &tau)?.to_masks();
    let t_masks = induced_discriminant_action(&glue.l_minus, glue.t.matrix())?.to_masks();
    let commutes = |images: &[u32]| {
        (0..geiser_masks.len()).all(|i| {
            let lhs = TwoElementaryForm::apply(images, geiser_masks[i]);
            let rhs = TwoElementaryForm::apply(&t_masks, images[i]);
            lhs == rhs
        })
    };
    let choice = if commutes(glue.gamma.images()) {
        Some(GammaChoice::LexFirst)
    } else {
        search_compatible(glue, &geiser_masks, &t_masks)?.map(GammaChoice::Searched)
    };
    Ok(Compatibility { geiser_masks, t_masks, choice })
}

/// Depth-first search over anti-isometries, pruning as soon as the
/// intertwining relation fails on a fully determined generator.
fn search_compatible(glue: &K3Glue, geiser: &[u32], t_masks: &[u32]) -> Result<Option<Vec<u32>>> {
    let s = glue.q_plus.two_elementary()?;
    let t = glue.q_minus.two_elementary()?;
    let k = s.rank();
    let mut images: Vec<u32> = Vec::with_capacity(k);
    fn rec(
        s: &TwoElementaryForm,
        t: &TwoElementaryForm,
        geiser: &[u32],
        tm: &[u32],
        images: &mut Vec<u32>,
        k: usize,
    ) -> bool {
        let level = images.len();
        // check every generator whose Geiser image lies in the assigned span
        let span_mask = (1u32 << level) - 1;
        for (i, &g) in geiser.iter().enumerate().take(level) {
            if g & !span_mask == 0 && TwoElementaryForm::apply(images, g) != TwoElementaryForm::apply(tm, images[i]) {
                return false;
            }
        }
        if level == k {
            return true;
        }
        let x = 1u32 << level;
        for y in 1u32..(1 << k) {
            if t.q_half(y) != (4 - s.q_half(x)) % 4 {
                continue;
            }
            if !images.iter().enumerate().all(|(j, &yj)| t.b_half(y, yj) == s.b_half(x, 1 << j)) {
                continue;
            }
            let mut probe = images.clone();
            probe.push(y);
            if !independent(&probe) {
                continue;
            }
            images.push(y);
            if rec(s, t, geiser, tm, images, k) {
                return true;
            }
            images.pop();
        }
        false
    }
    fn independent(v: &[u32]) -> bool {
        let mut basis: Vec<u32> = Vec::new();
        for &x in v {
            let mut r = x;
            for &b in &basis {
                r = r.min(r ^ b);
            }
            if r == 0 {
                return false;
            }
            basis.push(r);
        }
        true
    }
    Ok(rec(&s, &t, geiser, t_masks, &mut images, k).then_some(images))
}

/// Index of the sublattice spanned by the columns of `m` in its saturation
/// inside the ambient coordinates, via the Smith form.
pub fn sublattice_index(m: &IntMatrix) -> BigInt {
    smith_normal_form(m).invariant_factors().iter().fold(BigInt::one(), |acc, d| acc * d)
}

/// `q₊(x) = -q₋(γx)` for every element of `A_{L₊}`, checked on lifts with
/// exact rationals.
pub fn check_anti_isometry_exhaustive(gamma: &GlueMap) -> bool {
    let (qs, qt) = (gamma.source(), gamma.target());
    let two = BigRational::from_integer(BigInt::from(2));
    let bits = |x: u32, k: usize| -> Vec<BigInt> { (0..k).map(|i| BigInt::from((x >> i) & 1)).collect() };
    (0..1u32 << qs.rank()).all(|x| {
        let sum = qs.q(&bits(x, qs.rank())) + qt.q(&bits(gamma.apply(x), qt.rank()));
        let r = &sum / &two;
        (r.clone() - r.floor()).is_zero()
    })
}
