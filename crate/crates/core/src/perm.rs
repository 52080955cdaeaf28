//! Permutation groups via a deterministic Schreier–Sims construction.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}`; `p.image(i)` is where `i` goes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotBijection { degree: n });
            }
        }
        Ok(Perm(images.into_iter().map(|x| x as u32).collect()))
    }

    /// Permutation from disjoint cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a >= n || b >= n {
                    return Err(Error::NotBijection { degree: n });
                }
                images[a] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.image(x);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

/// A permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn from_generators(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        Self::with_base_prefix(degree, gens, &[])
    }

    /// Builds the BSGS with the given points first in the base; further
    /// base points are the smallest points moved by new strong generators.
    pub fn with_base_prefix(degree: usize, gens: Vec<Perm>, prefix: &[usize]) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::NotBijection { degree });
            }
        }
        for &p in prefix {
            if p >= degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
        }
        let mut strong: Vec<Perm> = Vec::new();
        for g in &gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut base: Vec<usize> = prefix.to_vec();
        for s in &strong {
            if base.iter().all(|&b| s.image(b) == b) {
                base.push(s.first_moved().expect("non-identity"));
            }
        }
        let mut levels: Vec<Option<Level>> = vec![None; base.len()];
        let mut i = base.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            let level_gens: Vec<&Perm> =
                strong.iter().filter(|s| base[..li].iter().all(|&b| s.image(b) == b)).collect();
            let level = build_level(degree, base[li], &level_gens);
            let mut restart = None;
            'search: for &beta in &level.orbit {
                let u_beta = level.transversal[beta].as_ref().expect("orbit point");
                for s in &level_gens {
                    let target = s.image(beta);
                    let u_target = level.transversal[target].as_ref().expect("orbit closed");
                    let schreier = u_beta.then(s).then(&u_target.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = strip(&levels, &base, &schreier, li + 1);
                    if j < base.len() || !h.is_identity() {
                        if j == base.len() {
                            base.push(h.first_moved().expect("non-identity"));
                            levels.push(None);
                        }
                        strong.push(h);
                        restart = Some(j);
                        break 'search;
                    }
                }
            }
            levels[li] = Some(level);
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        let levels = levels.into_iter().map(|l| l.expect("every level built")).collect();
        Ok(PermGroup { degree, generators: gens, strong, levels })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Lengths of the fundamental orbits along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let levels: Vec<Option<Level>> = self.levels.iter().cloned().map(Some).collect();
        let (h, j) = strip(&levels, &self.base(), p, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Sorted orbit of `point` under the generators.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange { point, degree: self.degree });
        }
        let gens: Vec<&Perm> = self.generators.iter().collect();
        let mut orbit = build_level(self.degree, point, &gens).orbit;
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// `|G| / |orbit|`, cross-checked against a chain rebuilt with `point`
    /// as the first base point.
    pub fn stabilizer_order(&self, point: usize) -> Result<BigUint> {
        let orbit_len = self.orbit(point)?.len();
        let by_orbit = self.order() / BigUint::from(orbit_len);
        let chain = PermGroup::with_base_prefix(self.degree, self.strong.clone(), &[point])?;
        let by_chain = chain.levels[1..].iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
        if chain.levels[0].orbit.len() != orbit_len || by_chain != by_orbit {
            return Err(Error::Defect("orbit-stabilizer mismatch".into()));
        }
        Ok(by_orbit)
    }

    /// True iff `p` commutes with every generator; `p` must be a member.
    pub fn is_central(&self, p: &Perm) -> Result<bool> {
        if !self.contains(p) {
            return Err(Error::NotMember);
        }
        Ok(self.generators.iter().all(|g| p.then(g) == g.then(p)))
    }

    /// Elements of the center, for a transitive group.
    ///
    /// A permutation centralizing a transitive group is fixed by the image
    /// `t` of point 0: it must send `u(0)` to `u(t)` for every `u`. Each `t`
    /// gives at most one candidate, which is kept if it is a well-defined
    /// member commuting with the generators.
    pub fn center_elements(&self) -> Result<Vec<Perm>> {
        if !self.is_transitive() {
            return Err(Error::Defect("center_elements needs a transitive group".into()));
        }
        let gens: Vec<&Perm> = self.generators.iter().collect();
        let words = build_level(self.degree, 0, &gens).transversal;
        let mut center = Vec::new();
        'target: for t in 0..self.degree {
            let mut images = vec![usize::MAX; self.degree];
            for (x, u) in words.iter().enumerate() {
                let u = u.as_ref().expect("transitive");
                images[x] = u.image(t);
            }
            let Ok(c) = Perm::from_images(images) else { continue 'target };
            if self.generators.iter().all(|g| c.then(g) == g.then(&c)) && self.contains(&c) {
                center.push(c);
            }
        }
        Ok(center)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }
}

fn build_level(degree: usize, point: usize, gens: &[&Perm]) -> Level {
    let mut transversal: Vec<Option<Perm>> = vec![None; degree];
    transversal[point] = Some(Perm::identity(degree));
    let mut orbit = vec![point];
    let mut k = 0;
    while k < orbit.len() {
        let b = orbit[k];
        for g in gens {
            let c = g.image(b);
            if transversal[c].is_none() {
                let u = transversal[b].as_ref().expect("visited").then(g);
                transversal[c] = Some(u);
                orbit.push(c);
            }
        }
        k += 1;
    }
    Level { point, transversal, orbit }
}

/// Sifts `g` through levels `start..`; returns the residue and the level
/// where sifting stopped (`base.len()` if it went all the way through).
fn strip(levels: &[Option<Level>], base: &[usize], g: &Perm, start: usize) -> (Perm, usize) {
    let mut h = g.clone();
    for (l, &b) in base.iter().enumerate().skip(start) {
        let Some(level) = levels[l].as_ref() else { return (h, l) };
        let img = h.image(b);
        match &level.transversal[img] {
            Some(u) => h = h.then(&u.inverse()),
            None => return (h, l),
        }
    }
    (h, base.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym3() -> PermGroup {
        let t = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let c = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        PermGroup::from_generators(3, vec![t, c]).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        let g = sym3();
        assert_eq!(g.order(), BigUint::from(6u32));
        assert_eq!(g.stabilizer_order(2).unwrap(), BigUint::from(2u32));
        assert!(g.is_transitive());
        let gens: Vec<Perm> = (0..7).map(|i| Perm::from_cycles(8, &[&[i, i + 1]]).unwrap()).collect();
        assert_eq!(PermGroup::from_generators(8, gens).unwrap().order(), BigUint::from(40320u32));
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::from_generators(5, vec![]).unwrap();
        assert_eq!(g.order(), BigUint::one());
        assert_eq!(g.orbit(3).unwrap(), vec![3]);
        assert!(g.is_central(&Perm::identity(5)).unwrap());
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(Perm::from_images(vec![0, 0, 1]), Err(Error::NotBijection { degree: 3 }));
        assert!(PermGroup::from_generators(4, vec![Perm::identity(3)]).is_err());
    }

    #[test]
    fn membership_and_center() {
        // dihedral group of the square: center {1, r²}
        let r = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let s = Perm::from_cycles(4, &[&[1, 3]]).unwrap();
        let d4 = PermGroup::from_generators(4, vec![r.clone(), s.clone()]).unwrap();
        assert_eq!(d4.order(), BigUint::from(8u32));
        let r2 = r.then(&r);
        assert!(d4.contains(&r2));
        assert!(d4.is_central(&r2).unwrap());
        assert!(!d4.is_central(&s).unwrap());
        let bad = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        assert!(!d4.contains(&bad));
        assert_eq!(d4.is_central(&bad), Err(Error::NotMember));
        assert_eq!(r.order(), 4);
        let center = d4.center_elements().unwrap();
        assert_eq!(center, vec![Perm::identity(4), r2]);
    }

    #[test]
    fn base_prefix_keeps_order() {
        let r = Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap();
        let s = Perm::from_cycles(6, &[&[1, 5], &[2, 4]]).unwrap();
        let g = PermGroup::from_generators(6, vec![r.clone(), s.clone()]).unwrap();
        for p in 0..6 {
            let h = PermGroup::with_base_prefix(6, vec![r.clone(), s.clone()], &[p, (p + 2) % 6]).unwrap();
            assert_eq!(h.base()[0], p);
            assert_eq!(h.order(), g.order());
            assert_eq!(g.stabilizer_order(p).unwrap(), BigUint::from(2u32));
        }
    }
}
