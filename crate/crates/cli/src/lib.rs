//! Verification suites over `latmono-core`, reported as certificates.
//!
//! Every check compares an expected exact value with a computed one as
//! strings; there are no tolerances.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use thiserror::Error;

use latmono_core::del_pezzo::{
    apply, certified_box, class_pairing, dual_of, enumerate_shell, exceptional_classes, geiser_involution, line_sets,
    picard_gram, picard_lattice, CANONICAL,
};
use latmono_core::exact::{IntMatrix, Signature};
use latmono_core::gaussian::{
    h_l_minus, hermitian_from_isometry, hermitian_signature, polynomial, real_basis, realify, scalar_matrix,
    to_real_lattice, GaussianInt, GaussianMatrix, HermitianPolynomial,
};
use latmono_core::graph::{
    are_isomorphic, automorphism_group, del_pezzo_graph, gosset_graph, neighborhood_subgraph, Graph,
};
use latmono_core::k3::{
    check_anti_isometry_exhaustive, glue_group_order, glue_l_plus_l_minus, k3_lattice, l_minus_with_t, l_minus_zbasis,
    l_plus, l_plus_congruence, t_a1_squared, t_d4, t_geiser_compatibility, t_u_u2, verify_orthogonal_pair, GammaChoice,
};
use latmono_core::lattice::{
    direct_sum, discriminant_form, is_primitive, orthogonal_group_order, standard_lattice, FiniteQuadraticForm,
    StandardKind,
};
use latmono_core::weyl::{
    center_and_quotient, discriminant_representation, geiser_permutation, reflection, roots, simple_reflections,
    weyl_group_on_classes, Root,
};

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown suite `{0}` (expected one of del_pezzo, gosset, weyl, lattices, k3_glue, gaussian, all)")]
    UnknownSuite(String),
    #[error("unknown export object `{0}` (expected one of gosset, schlafli, h-minus, k3-gram)")]
    UnknownObject(String),
    #[error(transparent)]
    Core(#[from] latmono_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    /// Wall-clock milliseconds, as a decimal string; not deterministic.
    pub elapsed_ms: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub suite: String,
    pub checks: Vec<Check>,
    pub toolkit_version: String,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// Copy with every elapsed time blanked, for determinism comparisons.
    pub fn without_timings(&self) -> Certificate {
        let mut c = self.clone();
        for check in &mut c.checks {
            check.elapsed_ms = String::new();
        }
        c
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    DelPezzo,
    Gosset,
    Weyl,
    Lattices,
    K3Glue,
    Gaussian,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::DelPezzo, Suite::Gosset, Suite::Weyl, Suite::Lattices, Suite::K3Glue, Suite::Gaussian];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DelPezzo => "del_pezzo",
            Suite::Gosset => "gosset",
            Suite::Weyl => "weyl",
            Suite::Lattices => "lattices",
            Suite::K3Glue => "k3_glue",
            Suite::Gaussian => "gaussian",
        }
    }
}

/// A suite name or `all`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteSelection(pub Vec<Suite>);

impl FromStr for SuiteSelection {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s == "all" {
            return Ok(SuiteSelection(Suite::ALL.to_vec()));
        }
        Suite::ALL
            .iter()
            .find(|x| x.name() == s)
            .map(|x| SuiteSelection(vec![*x]))
            .ok_or_else(|| CliError::UnknownSuite(s.to_string()))
    }
}

type CheckResult = Result<String, latmono_core::Error>;

struct Runner {
    checks: Vec<Check>,
}

impl Runner {
    fn check(&mut self, id: &str, description: &str, expected: impl ToString, f: impl FnOnce() -> CheckResult) {
        let start = Instant::now();
        let computed = match f() {
            Ok(v) => v,
            Err(e) => format!("error: {e}"),
        };
        let expected = expected.to_string();
        let status = if computed == expected { Status::Pass } else { Status::Fail };
        self.checks.push(Check {
            id: id.to_string(),
            description: description.to_string(),
            expected,
            computed,
            status,
            elapsed_ms: start.elapsed().as_millis().to_string(),
        });
    }
}

pub fn run_suite(suite: Suite) -> Certificate {
    let mut r = Runner { checks: Vec::new() };
    let outcome = match suite {
        Suite::DelPezzo => del_pezzo_suite(&mut r),
        Suite::Gosset => gosset_suite(&mut r),
        Suite::Weyl => weyl_suite(&mut r),
        Suite::Lattices => lattices_suite(&mut r),
        Suite::K3Glue => k3_glue_suite(&mut r),
        Suite::Gaussian => gaussian_suite(&mut r),
    };
    if let Err(e) = outcome {
        r.check("setup", "construction of the objects shared by this suite", "ok", || Err(e));
    }
    Certificate { suite: suite.name().to_string(), checks: r.checks, toolkit_version: TOOLKIT_VERSION.to_string() }
}

pub fn run_selection(selection: &SuiteSelection) -> Vec<Certificate> {
    selection.0.iter().map(|&s| run_suite(s)).collect()
}

fn distinct<T: Ord + ToString>(mut values: Vec<T>) -> String {
    values.sort();
    values.dedup();
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn bool_str(b: bool) -> String {
    b.to_string()
}

fn del_pezzo_suite(r: &mut Runner) -> Result<(), latmono_core::Error> {
    let classes = exceptional_classes();
    r.check("class_count", "number of exceptional classes", 56, || Ok(classes.len().to_string()));
    r.check("self_pairing", "self-intersection of every class", -1, || {
        Ok(distinct(classes.iter().map(|c| class_pairing(c, c)).collect()))
    });
    r.check("canonical_pairing", "pairing of every class with k", -1, || {
        Ok(distinct(classes.iter().map(|c| latmono_core::del_pezzo::pairing(&c.coords, &CANONICAL)).collect()))
    });
    r.check("dual_pairing", "pairing of every class with its dual", 2, || {
        let v = classes.iter().map(|c| dual_of(c).map(|d| class_pairing(c, &d))).collect::<Result<Vec<_>, _>>()?;
        Ok(distinct(v))
    });
    r.check("pairing_values", "pairings between distinct classes", "0,1,2", || {
        let mut v = Vec::new();
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                v.push(class_pairing(a, b));
            }
        }
        Ok(distinct(v))
    });
    r.check("brute_force_equal", "classes equal all x with x.x = -1 and x.k = -1 in a certified box", true, || {
        let box_ = certified_box(&picard_gram(), &CANONICAL, -1, -1)?;
        let mut found = enumerate_shell(&box_, -1, -1);
        let mut ours: Vec<_> = classes.iter().map(|c| c.coords).collect();
        found.sort();
        ours.sort();
        Ok(bool_str(found == ours))
    });
    r.check("picard_signature", "signature of the Picard form", "(1,7)", || {
        Ok(picard_lattice().signature().to_string())
    });
    r.check("line_set_sizes", "sizes of S_L and S*_L for every class", "27/27", || {
        let v = classes
            .iter()
            .map(|c| line_sets(c).map(|(s, t)| format!("{}/{}", s.len(), t.len())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(distinct(v))
    });
    r.check("geiser_duals", "Geiser involution sends each class to its dual, fixes k, squares to 1", true, || {
        let tau = geiser_involution()?;
        let ok = classes.iter().all(|c| apply(&tau, &c.coords) == c.label.dual().coords())
            && apply(&tau, &CANONICAL) == CANONICAL
            && tau.pow(2).is_identity();
        Ok(bool_str(ok))
    });
    Ok(())
}

fn all_neighborhoods(g: &Graph) -> Result<Vec<Graph>, latmono_core::Error> {
    (0..g.order()).map(|v| neighborhood_subgraph(g, v)).collect()
}

fn gosset_suite(r: &mut Runner) -> Result<(), latmono_core::Error> {
    let g = gosset_graph();
    let classes = exceptional_classes();
    r.check("vertices", "vertices of the Gosset graph", 56, || Ok(g.order().to_string()));
    r.check("degree", "common vertex degree", 27, || Ok(format!("{:?}", g.regular_degree().unwrap_or(0))));
    let nbs = all_neighborhoods(&g)?;
    r.check("neighborhood_order", "vertices in each neighborhood", 27, || {
        Ok(distinct(nbs.iter().map(Graph::order).collect()))
    });
    r.check("neighborhood_degree", "common degree of each neighborhood (valence in the Schläfli graph)", 16, || {
        Ok(distinct(nbs.iter().map(|n| n.regular_degree().map_or(-1, |d| d as i64)).collect()))
    });
    r.check("neighborhoods_isomorphic", "all 56 neighborhoods pairwise isomorphic", true, || {
        let mut ok = true;
        for (i, a) in nbs.iter().enumerate() {
            for b in &nbs[i + 1..] {
                ok &= are_isomorphic(a, b)?;
            }
        }
        Ok(bool_str(ok))
    });
    let aut = automorphism_group(&g)?;
    r.check("aut_order", "order of Aut(Gosset)", 2_903_040, || Ok(aut.order().to_string()));
    r.check("aut_generators_valid", "every automorphism generator preserves edges", true, || {
        Ok(bool_str(aut.generators().iter().all(|p| g.is_automorphism(p))))
    });
    r.check("orbit_size", "orbit of a vertex under Aut(Gosset)", 56, || Ok(aut.orbit(0)?.len().to_string()));
    r.check("stabilizer_order", "vertex stabilizer order in Aut(Gosset)", 51_840, || {
        Ok(distinct((0..56).map(|v| aut.stabilizer_order(v)).collect::<Result<Vec<BigUint>, _>>()?))
    });
    r.check("schlafli_aut_order", "automorphism group order of a neighborhood", 51_840, || {
        Ok(automorphism_group(&nbs[0])?.order().to_string())
    });
    r.check("dual_pairs_blocks", "automorphisms permute the 28 dual pairs", true, || {
        let dual = |i: usize| (0..56).find(|&j| class_pairing(&classes[i], &classes[j]) == 2).unwrap_or(i);
        Ok(bool_str(aut.generators().iter().all(|p| (0..56).all(|i| p.image(dual(i)) == dual(p.image(i))))))
    });
    let h = del_pezzo_graph(1);
    r.check("pairing_one_neighborhood_degree", "neighborhood degree when edges join classes of pairing 1", 10, || {
        let d = all_neighborhoods(&h)?.iter().map(|n| n.regular_degree().map_or(-1, |d| d as i64)).collect();
        Ok(distinct(d))
    });
    r.check("pairing_one_aut_order", "automorphism group order of the pairing-1 graph", 2_903_040, || {
        Ok(automorphism_group(&h)?.order().to_string())
    });
    Ok(())
}

fn weyl_suite(r: &mut Runner) -> Result<(), latmono_core::Error> {
    let rs = roots()?;
    r.check("root_count", "vectors with x.x = -2 and x.k = 0", 126, || Ok(rs.len().to_string()));
    r.check("roots_closed", "roots closed under negation and every root reflection", true, || {
        let set: std::collections::HashSet<Root> = rs.iter().copied().collect();
        let mut ok = rs.iter().all(|x| set.contains(&x.neg()));
        for a in &rs {
            let m = reflection(a.coords())?;
            ok &= rs.iter().all(|b| Root::new(apply(&m, b.coords())).map(|x| set.contains(&x)).unwrap_or(false));
        }
        Ok(bool_str(ok))
    });
    let w = weyl_group_on_classes()?;
    r.check("weyl_order", "order of W(E7) acting on the 56 classes", 2_903_040, || Ok(w.order().to_string()));
    r.check("weyl_transitive", "W(E7) is transitive on the classes", true, || Ok(bool_str(w.is_transitive())));
    r.check("equals_aut_gosset", "W(E7) and Aut(Gosset) contain each other's generators", true, || {
        let aut = automorphism_group(&gosset_graph())?;
        Ok(bool_str(w.generators().iter().all(|g| aut.contains(g)) && aut.generators().iter().all(|g| w.contains(g))))
    });
    r.check("reflections_fix_k", "simple reflections are isometries fixing k", true, || {
        let lattice = picard_lattice();
        Ok(bool_str(simple_reflections()?.iter().all(|m| lattice.is_isometry(m) && apply(m, &CANONICAL) == CANONICAL)))
    });
    let tau = geiser_permutation()?;
    r.check("geiser_member", "Geiser permutation lies in W(E7)", true, || Ok(bool_str(w.contains(&tau))));
    r.check("geiser_central", "Geiser permutation is central", true, || Ok(bool_str(w.is_central(&tau)?)));
    r.check("geiser_order", "order of the Geiser permutation", 2, || Ok(tau.order().to_string()));
    let (z, q) = center_and_quotient(&w)?;
    r.check("center_order", "order of the center of W(E7)", 2, || Ok(z.to_string()));
    r.check("quotient_order", "order of W(E7) modulo its center", 1_451_520, || Ok(q.to_string()));
    let rep = discriminant_representation(&w)?;
    r.check("discriminant_image_order", "order of the image of W(E7) in O(q_{L+})", 2_903_040, || {
        Ok(rep.image_order.to_string())
    });
    r.check("discriminant_kernel_trivial", "W(E7) acts faithfully on A_{L+}", true, || {
        Ok(bool_str(rep.kernel_trivial))
    });
    Ok(())
}

/// `(Z/2)^8`-style description of a discriminant group.
pub fn group_shape(q: &FiniteQuadraticForm) -> String {
    let d = q.divisors();
    if d.is_empty() {
        return "trivial".into();
    }
    if d.iter().all(|x| x == &d[0]) {
        return format!("(Z/{})^{}", d[0], d.len());
    }
    d.iter().map(|x| format!("Z/{x}")).collect::<Vec<_>>().join("+")
}

fn lattices_suite(r: &mut Runner) -> Result<(), latmono_core::Error> {
    let e8 = standard_lattice(&StandardKind::E8Neg);
    r.check("e8_signature", "signature of E8(-1)", "(0,8)", || Ok(e8.signature().to_string()));
    r.check("e8_det", "determinant of E8(-1)", 1, || Ok(e8.determinant().to_string()));
    r.check("e8_even", "E8(-1) is even", true, || Ok(bool_str(e8.is_even())));
    let k3 = k3_lattice();
    r.check("k3_rank", "rank of U^3 + E8(-1)^2", 22, || Ok(k3.rank().to_string()));
    r.check("k3_signature", "signature of the K3 lattice", "(3,19)", || Ok(k3.signature().to_string()));
    r.check("k3_unimodular", "the K3 lattice is even and unimodular", true, || {
        Ok(bool_str(k3.is_even() && k3.is_unimodular()))
    });
    let lp = l_plus();
    let (lm, _) = l_minus_with_t()?;
    r.check("l_plus_signature", "signature of L+", "(1,7)", || Ok(lp.signature().to_string()));
    r.check("l_minus_signature", "signature of L-", "(2,12)", || Ok(lm.signature().to_string()));
    r.check("l_plus_congruence", "P^T (2 G_Pic) P = Gram(L+) for the recorded unimodular P", true, || {
        let p = l_plus_congruence()?;
        Ok(bool_str(picard_gram().scale(&BigInt::from(2)).congruent(&p) == *lp.gram()))
    });
    let qp = discriminant_form(&lp)?;
    let qm = discriminant_form(&lm)?;
    r.check("l_plus_discriminant", "discriminant group of L+", "(Z/2)^8", || Ok(group_shape(&qp)));
    r.check("l_minus_discriminant", "discriminant group of L-", "(Z/2)^8", || Ok(group_shape(&qm)));
    r.check("o_q_l_plus", "order of O(q_{L+})", 2_903_040, || Ok(orthogonal_group_order(&qp)?.order.to_string()));
    r.check("o_q_l_minus", "order of O(q_{L-})", 2_903_040, || Ok(orthogonal_group_order(&qm)?.order.to_string()));
    Ok(())
}

fn k3_glue_suite(r: &mut Runner) -> Result<(), latmono_core::Error> {
    let glue = glue_l_plus_l_minus()?;
    let over = &glue.overlattice;
    r.check("anti_isometry_all_elements", "elements x with q+(x) = -q-(gamma x)", 256, || {
        Ok(if check_anti_isometry_exhaustive(&glue.gamma) { "256".into() } else { "fewer than 256".into() })
    });
    r.check("glue_group_order", "order of the graph of gamma", 256, || Ok(glue_group_order(&glue.gamma).to_string()));
    r.check("overlattice_index", "index of L+ + L- in the glued lattice", 256, || Ok(over.index().to_string()));
    r.check("overlattice_even_unimodular", "glued lattice is even and unimodular", true, || {
        Ok(bool_str(over.lattice.is_even() && over.lattice.is_unimodular()))
    });
    r.check("overlattice_signature", "signature of the glued lattice", "(3,19)", || {
        Ok(over.lattice.signature().to_string())
    });
    r.check("signature_sum", "signature of L+ plus signature of L-", "(3,19)", || {
        Ok((glue.l_plus.signature() + glue.l_minus.signature()).to_string())
    });
    r.check("primitive", "L+ and L- are primitive in the glued lattice", true, || {
        Ok(bool_str(is_primitive(&over.lattice, &over.s_basis())? && is_primitive(&over.lattice, &over.t_basis())?))
    });
    r.check("orthogonal_complements", "L+ and L- are each other's orthogonal complement", true, || {
        Ok(bool_str(verify_orthogonal_pair(&over.lattice, &over.s_basis(), &over.t_basis())?))
    });
    r.check(
        "t_geiser_compatible",
        "T on A_{L-} corresponds to the Geiser involution on A_{L+} under gamma",
        "lex-first",
        || {
            Ok(match t_geiser_compatibility(&glue)?.choice {
                Some(GammaChoice::LexFirst) => "lex-first".into(),
                Some(GammaChoice::Searched(images)) => format!("searched {images:?}"),
                None => "none".into(),
            })
        },
    );
    Ok(())
}

pub fn format_gaussian_matrix(m: &GaussianMatrix) -> String {
    let rows: Vec<String> =
        m.iter().map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

/// The displayed form of `h_{L-}`, written out term by term.
pub fn displayed_h_minus_polynomial() -> HermitianPolynomial {
    let pairs = [(1, 2), (3, 4), (5, 6)];
    HermitianPolynomial {
        norms: (0..5).map(|j| (j, BigInt::from(-2))).collect(),
        re: pairs.iter().map(|&p| (p, BigInt::from(2))).collect(),
        im: pairs.iter().map(|&p| (p, BigInt::from(2))).collect(),
    }
}

fn gaussian_suite(r: &mut Runner) -> Result<(), latmono_core::Error> {
    let a1 = standard_lattice(&StandardKind::A1);
    r.check("gram_a1_squared", "hermitian gram of A1^2 on u", "[[-2+0i]]", || {
        let l = direct_sum(&[a1.clone(), a1.clone()]);
        Ok(format_gaussian_matrix(
            hermitian_from_isometry(&l, &t_a1_squared(), &IntMatrix::from_columns(2, &[[1, 0]]))?.gram(),
        ))
    });
    r.check("gram_u_u2", "hermitian gram of U+U(2) on e, f", "[[0+0i, 1-1i], [1+1i, 0+0i]]", || {
        let l = direct_sum(&[standard_lattice(&StandardKind::U), standard_lattice(&StandardKind::U2)]);
        let b = IntMatrix::from_columns(4, &[[1, 0, 0, 0], [0, 1, 0, 0]]);
        Ok(format_gaussian_matrix(hermitian_from_isometry(&l, &t_u_u2(), &b)?.gram()))
    });
    r.check("gram_d4", "hermitian gram of D4 on p, q", "[[-2+0i, 1-1i], [1+1i, -2+0i]]", || {
        let b = IntMatrix::from_columns(4, &[[1, 0, 0, 0], [0, 0, 1, 0]]);
        Ok(format_gaussian_matrix(hermitian_from_isometry(&standard_lattice(&StandardKind::D4), &t_d4()?, &b)?.gram()))
    });
    let h = h_l_minus()?;
    r.check("polynomial", "expansion of h_{L-} equals the displayed form term by term", true, || {
        Ok(bool_str(polynomial(&h) == displayed_h_minus_polynomial()))
    });
    r.check("coefficient_z1_z2bar", "coefficient of z1 conj(z2) in h_{L-}", "1-1i", || Ok(h.gram()[1][2].to_string()));
    r.check("determinant", "determinant of the hermitian gram of h_{L-}", "16+0i", || Ok(h.determinant()?.to_string()));
    r.check("signature", "signature of h_{L-}", "(1,6)", || {
        let (p, n) = hermitian_signature(&h)?;
        Ok(format!("({p},{n})"))
    });
    let (lm, t) = l_minus_with_t()?;
    r.check("t_fourth_power", "T^4 = 1 on L-", true, || Ok(bool_str(t.matrix().pow(4).is_identity())));
    r.check("t_square", "T^2 = -1 on L-", true, || Ok(bool_str(t.matrix().pow(2) == -&IntMatrix::identity(14))));
    r.check("t_isometry", "T^T G T = G on L-", true, || Ok(bool_str(lm.gram().congruent(t.matrix()) == *lm.gram())));
    let b = real_basis(t.matrix(), &l_minus_zbasis());
    let (real, t_real) = to_real_lattice(&h)?;
    r.check("t_acts_as_i", "T in the Z[i]-basis is multiplication by i", true, || {
        let binv = b.unimodular_inverse().ok_or(latmono_core::Error::NotGenerating { index: "not 1".into() })?;
        Ok(bool_str(&(&binv * t.matrix()) * &b == realify(&scalar_matrix(&GaussianInt::i(), 7))))
    });
    r.check("round_trip", "real form of h_{L-} reproduces Gram(L-) and T in the recorded basis", true, || {
        let binv = b.unimodular_inverse().ok_or(latmono_core::Error::NotGenerating { index: "not 1".into() })?;
        Ok(bool_str(*real.gram() == lm.gram().congruent(&b) && t_real == &(&binv * t.matrix()) * &b))
    });
    r.check("real_signature", "signature of the real form", Signature::new(2, 12, 0), || {
        Ok(real.signature().to_string())
    });
    Ok(())
}

pub fn render_text(certs: &[Certificate]) -> String {
    let mut out = String::new();
    for cert in certs {
        let passed = cert.checks.iter().filter(|c| c.status == Status::Pass).count();
        let _ = writeln!(
            out,
            "suite {} (latmono {}): {}/{} checks pass",
            cert.suite,
            cert.toolkit_version,
            passed,
            cert.checks.len()
        );
        for c in &cert.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(
                out,
                "  [{tag}] {}: {} | expected {} | computed {} | {} ms",
                c.id, c.description, c.expected, c.computed, c.elapsed_ms
            );
        }
    }
    out
}

pub fn render_json(certs: &[Certificate]) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(certs)? + "\n")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportObject {
    Gosset,
    Schlafli,
    HMinus,
    K3Gram,
}

impl FromStr for ExportObject {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "gosset" => Ok(ExportObject::Gosset),
            "schlafli" => Ok(ExportObject::Schlafli),
            "h-minus" => Ok(ExportObject::HMinus),
            "k3-gram" => Ok(ExportObject::K3Gram),
            _ => Err(CliError::UnknownObject(s.to_string())),
        }
    }
}

pub fn export_text(object: ExportObject) -> Result<String, CliError> {
    Ok(match object {
        ExportObject::Gosset => gosset_graph().to_adjacency_text(),
        ExportObject::Schlafli => neighborhood_subgraph(&gosset_graph(), 0)?.to_adjacency_text(),
        ExportObject::HMinus => h_l_minus()?.to_text(),
        ExportObject::K3Gram => format!("{}\n", k3_lattice().gram()),
    })
}
