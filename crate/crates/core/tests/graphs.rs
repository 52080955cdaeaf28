use latmono_core::del_pezzo::{class_pairing, exceptional_classes, DivisorClass};
use latmono_core::graph::{
    are_isomorphic, automorphism_group, del_pezzo_graph, gosset_graph, intersection_graph, neighborhood_subgraph,
};
use latmono_core::perm::Perm;
use num_bigint::BigUint;

#[test]
fn gosset_is_27_regular_with_schlafli_neighborhoods() {
    let g = gosset_graph();
    assert_eq!(g.order(), 56);
    assert_eq!(g.regular_degree(), Some(27));
    let first = neighborhood_subgraph(&g, 0).unwrap();
    for v in 0..56 {
        let nb = neighborhood_subgraph(&g, v).unwrap();
        assert_eq!(nb.order(), 27);
        assert_eq!(nb.regular_degree(), Some(16));
        assert!(are_isomorphic(&first, &nb).unwrap());
    }
}

#[test]
fn pairing_one_graph_is_the_distance_two_graph() {
    let g = gosset_graph();
    let h = del_pezzo_graph(1);
    assert_eq!(h.regular_degree(), Some(27));
    let nb = neighborhood_subgraph(&h, 0).unwrap();
    assert_eq!(nb.regular_degree(), Some(10));
    assert!(are_isomorphic(&nb.complement(), &neighborhood_subgraph(&g, 0).unwrap()).unwrap());
    // x ~ y in h iff x and y are at distance 2 in g
    for a in 0..56 {
        for b in 0..56 {
            let common = g.neighbors(a).iter().any(|&c| g.has_edge(c, b));
            let dist2 = a != b && !g.has_edge(a, b) && common;
            assert_eq!(h.has_edge(a, b), dist2);
        }
    }
    assert_eq!(automorphism_group(&h).unwrap().order(), BigUint::from(2_903_040u32));
}

#[test]
fn gosset_automorphisms() {
    let g = gosset_graph();
    let aut = automorphism_group(&g).unwrap();
    assert_eq!(aut.order(), BigUint::from(2_903_040u32));
    assert!(aut.is_transitive());
    for v in [0, 7, 14, 35, 55] {
        assert_eq!(aut.stabilizer_order(v).unwrap(), BigUint::from(51_840u32));
    }
    for p in aut.generators() {
        assert!(g.is_automorphism(p));
    }
    let schlafli = neighborhood_subgraph(&g, 0).unwrap();
    assert_eq!(automorphism_group(&schlafli).unwrap().order(), BigUint::from(51_840u32));
}

#[test]
fn dual_pairs_form_a_block_system() {
    let classes = exceptional_classes();
    let aut = automorphism_group(&gosset_graph()).unwrap();
    let dual = |i: usize| (0..56).find(|&j| class_pairing(&classes[i], &classes[j]) == 2).unwrap();
    for p in aut.generators() {
        for i in 0..56 {
            assert_eq!(p.image(dual(i)), dual(p.image(i)));
        }
    }
}

#[test]
fn relabeled_gosset_is_isomorphic_and_complement_is_not() {
    let g = gosset_graph();
    let images: Vec<usize> = (0..56).map(|i| (i * 17 + 5) % 56).collect();
    let h = g.relabel(&Perm::from_images(images).unwrap()).unwrap();
    assert!(are_isomorphic(&g, &h).unwrap());
    let s = neighborhood_subgraph(&g, 3).unwrap();
    assert_eq!(s.complement().regular_degree(), Some(10));
    assert!(!are_isomorphic(&s, &s.complement()).unwrap());
}

#[test]
fn adjacency_breaking_transposition_is_not_an_automorphism() {
    let g = gosset_graph();
    let aut = automorphism_group(&g).unwrap();
    // L_1 and L_2 are disjoint lines, not dual to each other
    let t = Perm::from_cycles(56, &[&[0, 1]]).unwrap();
    assert!(!g.is_automorphism(&t));
    assert!(!aut.contains(&t));
}

#[test]
fn edge_value_filters() {
    let classes = exceptional_classes();
    assert_eq!(del_pezzo_graph(5).edge_count(), 0);
    let pair = [classes[0], classes[7]];
    let labels = pair.iter().map(|c| c.label.to_string()).collect();
    let g = intersection_graph(&pair, labels, |a: &DivisorClass, b| class_pairing(a, b), 2).unwrap();
    assert_eq!(g.edges(), vec![(0, 1)]);
}
