//! The E₇ root system in `k^⊥` of the Picard lattice, the Weyl group W(E₇)
//! acting on the 56 exceptional classes, and its action on the discriminant
//! group of the doubled lattice L₊.

use num_bigint::{BigInt, BigUint};

use crate::del_pezzo::{
    apply, certified_box, class_index, enumerate_shell, exceptional_classes, geiser_involution, pairing, picard_gram,
    picard_lattice, Vector, CANONICAL, RANK,
};
use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::lattice::{discriminant_form, induced_discriminant_action, rescale, Lattice, TwoElementaryForm};
use crate::perm::{Perm, PermGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vector,
}

impl Root {
    pub fn new(coords: Vector) -> Result<Self> {
        if pairing(&coords, &coords) != -2 || pairing(&coords, &CANONICAL) != 0 {
            return Err(Error::NotRoot);
        }
        Ok(Root { coords })
    }

    pub fn coords(&self) -> &Vector {
        &self.coords
    }

    pub fn neg(&self) -> Root {
        Root { coords: self.coords.map(|x| -x) }
    }
}

/// All vectors of norm -2 orthogonal to `k`, in lexicographic order.
pub fn roots() -> Result<Vec<Root>> {
    let box_ = certified_box(&picard_gram(), &CANONICAL, -2, 0)?;
    enumerate_shell(&box_, -2, 0).into_iter().map(Root::new).collect()
}

/// `e₁ - e₂, …, e₆ - e₇, e₀ - e₁ - e₂ - e₃`.
pub fn simple_roots() -> [Root; 7] {
    let mut out = [Root { coords: [0; RANK] }; 7];
    for (i, r) in out.iter_mut().take(6).enumerate() {
        r.coords[i + 1] = 1;
        r.coords[i + 2] = -1;
    }
    out[6].coords = [1, -1, -1, -1, 0, 0, 0, 0];
    out
}

/// `s_r(x) = x + ⟨x,r⟩·r` as a matrix acting on column vectors.
pub fn reflection(r: &Vector) -> Result<IntMatrix> {
    let r = Root::new(*r)?;
    let g = picard_gram();
    let rb: Vec<BigInt> = r.coords.iter().map(|&x| BigInt::from(x)).collect();
    let gr = g.apply(&rb);
    Ok(&IntMatrix::identity(RANK) + &IntMatrix::from_fn(RANK, RANK, |i, j| &rb[i] * &gr[j]))
}

pub fn simple_reflections() -> Result<Vec<IntMatrix>> {
    simple_roots().iter().map(|r| reflection(&r.coords)).collect()
}

/// Permutation of the 56 classes induced by an isometry.
pub fn class_permutation(m: &IntMatrix) -> Result<Perm> {
    let classes = exceptional_classes();
    let images = classes
        .iter()
        .map(|c| {
            class_index(&classes, &apply(m, &c.coords))
                .ok_or_else(|| Error::Defect(format!("image of {} is not an exceptional class", c.label)))
        })
        .collect::<Result<Vec<_>>>()?;
    Perm::from_images(images)
}

pub fn weyl_group_on_classes() -> Result<PermGroup> {
    let gens = simple_reflections()?.iter().map(class_permutation).collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(56, gens)
}

pub fn geiser_permutation() -> Result<Perm> {
    class_permutation(&geiser_involution()?)
}

/// Center order and `|W| / |Z|`, with the Geiser permutation required to be
/// the unique non-identity central element.
pub fn center_and_quotient(w: &PermGroup) -> Result<(BigUint, BigUint)> {
    let center = w.center_elements()?;
    let tau = geiser_permutation()?;
    let nontrivial: Vec<&Perm> = center.iter().filter(|p| !p.is_identity()).collect();
    if nontrivial != [&tau] {
        return Err(Error::Defect(format!("center {center:?} is not generated by the Geiser permutation")));
    }
    let z = BigUint::from(center.len());
    Ok((z.clone(), w.order() / z))
}

/// `L₊`: the Picard form scaled by 2.
pub fn l_plus_picard() -> Lattice {
    rescale(&picard_lattice(), 2).expect("nonzero scale").renamed("L+")
}

/// Action of W(E₇) on `A_{L₊} ≅ (Z/2)⁸`, as a permutation group on the 256
/// group elements (bitmasks over the discriminant generators).
#[derive(Clone, Debug)]
pub struct DiscriminantRepresentation {
    pub generator_masks: Vec<Vec<u32>>,
    pub image: PermGroup,
    pub image_order: BigUint,
    /// `|image| = |W(E₇)|`, so the representation is faithful.
    pub kernel_trivial: bool,
}

pub fn mask_permutation(images: &[u32]) -> Perm {
    let size = 1usize << images.len();
    Perm::from_images((0..size as u32).map(|x| TwoElementaryForm::apply(images, x) as usize).collect())
        .expect("isometry of the discriminant group is invertible")
}

pub fn discriminant_representation(w: &PermGroup) -> Result<DiscriminantRepresentation> {
    let l_plus = l_plus_picard();
    let form = discriminant_form(&l_plus)?.two_elementary()?;
    let mut generator_masks = Vec::new();
    for m in simple_reflections()? {
        let masks = induced_discriminant_action(&l_plus, &m)?.to_masks();
        if !form.is_isometry(&masks) {
            return Err(Error::Defect("reflection does not induce an isometry of q".into()));
        }
        generator_masks.push(masks);
    }
    let perms = generator_masks.iter().map(|g| mask_permutation(g)).collect();
    let image = PermGroup::from_generators(1 << form.rank(), perms)?;
    let image_order = image.order();
    let kernel_trivial = image_order == w.order();
    Ok(DiscriminantRepresentation { generator_masks, image, image_order, kernel_trivial })
}
