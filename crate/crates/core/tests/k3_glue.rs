use latmono_core::exact::Signature;
use latmono_core::k3::{
    check_anti_isometry_exhaustive, glue_group_order, glue_l_plus_l_minus, k3_lattice, sublattice_index,
    t_geiser_compatibility, verify_orthogonal_pair, GammaChoice,
};
use latmono_core::lattice::{discriminant_form, is_primitive, orthogonal_group_order, GlueMap, TwoElementaryForm};
use num_bigint::{BigInt, BigUint};

#[test]
fn glue_produces_an_even_unimodular_3_19_lattice() {
    let glue = glue_l_plus_l_minus().unwrap();
    let over = &glue.overlattice;
    assert!(over.lattice.is_even());
    assert!(over.lattice.is_unimodular());
    assert_eq!(over.lattice.signature(), Signature::new(3, 19, 0));
    assert_eq!(over.lattice.signature(), k3_lattice().signature());
    assert!(discriminant_form(&over.lattice).unwrap().is_trivial());
    assert_eq!(glue.l_plus.signature() + glue.l_minus.signature(), Signature::new(3, 19, 0));
}

#[test]
fn glue_map_is_an_anti_isometry_on_all_elements() {
    let glue = glue_l_plus_l_minus().unwrap();
    assert!(check_anti_isometry_exhaustive(&glue.gamma));
    assert_eq!(glue_group_order(&glue.gamma), BigUint::from(256u32));
    assert_eq!(over_index(&glue), BigInt::from(256));
}

fn over_index(glue: &latmono_core::k3::K3Glue) -> BigInt {
    let idx = glue.overlattice.index();
    assert_eq!(sublattice_index(&glue.overlattice.inclusion), idx);
    idx
}

#[test]
fn eigenlattices_are_primitive_orthogonal_complements() {
    let glue = glue_l_plus_l_minus().unwrap();
    let over = &glue.overlattice;
    let (s, t) = (over.s_basis(), over.t_basis());
    assert!(is_primitive(&over.lattice, &s).unwrap());
    assert!(is_primitive(&over.lattice, &t).unwrap());
    assert!(verify_orthogonal_pair(&over.lattice, &s, &t).unwrap());
}

#[test]
fn t_and_geiser_agree_on_discriminant_groups() {
    let glue = glue_l_plus_l_minus().unwrap();
    let compat = t_geiser_compatibility(&glue).unwrap();
    assert_eq!(compat.choice, Some(GammaChoice::LexFirst));
    // T acts nontrivially, as an involution
    let t = &compat.t_masks;
    assert!(t.iter().enumerate().any(|(i, &m)| m != 1 << i));
    assert!((0..8).all(|i| TwoElementaryForm::apply(t, t[i]) == 1 << i));
}

#[test]
fn every_glue_map_is_compatible_because_geiser_is_central() {
    let glue = glue_l_plus_l_minus().unwrap();
    let compat = t_geiser_compatibility(&glue).unwrap();
    let o = orthogonal_group_order(&glue.q_plus).unwrap();
    for g in &o.generators {
        let images: Vec<u32> = g.iter().map(|&x| glue.gamma.apply(x)).collect();
        let other = GlueMap::new(glue.q_plus.clone(), glue.q_minus.clone(), images.clone()).unwrap();
        for i in 0..8 {
            let lhs = other.apply(compat.geiser_masks[i]);
            let rhs = TwoElementaryForm::apply(&compat.t_masks, images[i]);
            assert_eq!(lhs, rhs);
        }
    }
}
