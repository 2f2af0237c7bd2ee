//! Exact double description for polyhedral cones `{x : A x >= 0, E x = 0}`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{self, gcd_normalize};

pub type Vector = Vec<BigInt>;

/// Generators of a cone: extremal rays of the pointed part plus a lineality basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VRep {
    pub rays: Vec<Vector>,
    pub lineality: Vec<Vector>,
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

fn normalized(mut v: Vector) -> Vector {
    gcd_normalize(&mut v);
    v
}

fn combine(ca: &BigInt, a: &[BigInt], cb: &BigInt, b: &[BigInt]) -> Vector {
    normalized(a.iter().zip(b).map(|(x, y)| ca * x + cb * y).collect())
}

/// Converts an H-description (`ineqs . x >= 0`, `eqs . x = 0`) into generators.
pub fn dd_convert(dim: usize, ineqs: &[Vector], eqs: &[Vector]) -> VRep {
    let mut constraints: Vec<Vector> = Vec::with_capacity(ineqs.len() + 2 * eqs.len());
    for e in eqs {
        constraints.push(e.clone());
        constraints.push(e.iter().map(|x| -x).collect());
    }
    constraints.extend(ineqs.iter().cloned());

    let mut lineality: Vec<Vector> =
        (0..dim).map(|i| (0..dim).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
    let mut rays: Vec<Vector> = Vec::new();
    let mut processed: Vec<&Vector> = Vec::new();

    for a in &constraints {
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(k) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.remove(k);
            let mut al0 = dot(a, &l0);
            if al0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -x.clone());
                al0 = -al0;
            }
            for l in lineality.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    *l = combine(&al0, l, &-al, &l0);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, r);
                if !ar.is_zero() {
                    *r = combine(&al0, r, &-ar, &l0);
                }
            }
            rays.push(normalized(l0));
        } else {
            let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
            let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
            let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
            let mut next: Vec<Vector> = (0..rays.len()).filter(|&i| !vals[i].is_negative()).map(|i| rays[i].clone()).collect();
            if !neg.is_empty() && !pos.is_empty() {
                let zero_sets: Vec<Vec<bool>> =
                    rays.iter().map(|r| processed.iter().map(|c| dot(c, r).is_zero()).collect()).collect();
                let target = dim.saturating_sub(lineality.len() + 2);
                for &p in &pos {
                    for &n in &neg {
                        let common: Vec<&[BigInt]> = (0..processed.len())
                            .filter(|&k| zero_sets[p][k] && zero_sets[n][k])
                            .map(|k| processed[k].as_slice())
                            .collect();
                        if common.len() < target {
                            continue;
                        }
                        if linalg::rank_big(&common, dim) == target {
                            next.push(combine(&vals[p], &rays[n], &-vals[n].clone(), &rays[p]));
                        }
                    }
                }
            }
            rays = next;
        }
        processed.push(a);
        rays.sort();
        rays.dedup();
    }
    rays.iter_mut().for_each(|r| gcd_normalize(r));
    rays.sort();
    rays.dedup();
    lineality.iter_mut().for_each(|l| gcd_normalize(l));
    VRep { rays, lineality }
}

/// Facet normals of the cone generated by `rays` and `lineality`, via the dual cone.
pub fn hrep_from_generators(dim: usize, rays: &[Vector], lineality: &[Vector]) -> VRep {
    dd_convert(dim, rays, lineality)
}

/// A cone `{x : A x >= 0, E x = 0}` in `Z^dim`.
#[derive(Clone, Debug, Default)]
pub struct RationalCone {
    pub dim: usize,
    pub inequalities: Vec<Vector>,
    pub equalities: Vec<Vector>,
}

impl RationalCone {
    pub fn new(dim: usize, inequalities: Vec<Vector>, equalities: Vec<Vector>) -> Self {
        RationalCone { dim, inequalities, equalities }
    }

    pub fn vrep(&self) -> VRep {
        dd_convert(self.dim, &self.inequalities, &self.equalities)
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.inequalities.iter().all(|a| !dot(a, x).is_negative()) && self.equalities.iter().all(|e| dot(e, x).is_zero())
    }

    /// Rows tight at `x`, including the equalities.
    pub fn tight_rows(&self, x: &[BigInt]) -> Vec<&[BigInt]> {
        self.inequalities
            .iter()
            .filter(|a| dot(a, x).is_zero())
            .chain(self.equalities.iter())
            .map(|a| a.as_slice())
            .collect()
    }

    /// A nonzero member spanning an extremal ray: the tight rows have rank `dim - 1`.
    pub fn is_extremal(&self, x: &[BigInt]) -> bool {
        if x.iter().all(Zero::is_zero) || !self.contains(x) {
            return false;
        }
        linalg::rank_big(&self.tight_rows(x), self.dim) + 1 == self.dim
    }

    /// Whether `x` lies on the face cut out by setting the given inequality rows to zero.
    pub fn on_face(&self, x: &[BigInt], face: &[usize]) -> bool {
        self.contains(x) && face.iter().all(|&i| dot(&self.inequalities[i], x).is_zero())
    }

    pub fn with_equalities(&self, extra: &[Vector]) -> RationalCone {
        let mut c = self.clone();
        c.equalities.extend(extra.iter().cloned());
        c
    }

    pub fn intersect(&self, other: &RationalCone) -> RationalCone {
        assert_eq!(self.dim, other.dim);
        let mut c = self.clone();
        c.inequalities.extend(other.inequalities.iter().cloned());
        c.equalities.extend(other.equalities.iter().cloned());
        c
    }

    /// Dimension of the linear span of the cone.
    pub fn dimension(&self) -> usize {
        let v = self.vrep();
        let gens: Vec<&[BigInt]> = v.rays.iter().chain(v.lineality.iter()).map(|r| r.as_slice()).collect();
        linalg::rank_big(&gens, self.dim)
    }

    /// Dimension of the face where inequality `i` is tight.
    pub fn face_dimension(&self, i: usize) -> usize {
        self.with_equalities(&[self.inequalities[i].clone()]).dimension()
    }

    /// Indices of an irredundant subset of the inequalities describing the same cone.
    ///
    /// Rows are visited in order and dropped when implied by the rows still present, so of
    /// two mutually implied rows the later one survives. Duplicates keep their first copy.
    pub fn irredundant_subset(&self) -> Vec<usize> {
        self.irredundant_given(&[])
    }

    /// Like [`RationalCone::irredundant_subset`], with extra rows `fixed` that are always kept.
    pub fn irredundant_given(&self, fixed: &[Vector]) -> Vec<usize> {
        let normed: Vec<Vector> = self.inequalities.iter().map(|a| normalized(a.clone())).collect();
        let mut alive: Vec<usize> = (0..normed.len())
            .filter(|&i| !normed[i].iter().all(Zero::is_zero) && !normed[..i].contains(&normed[i]))
            .collect();
        let mut k = 0;
        while k < alive.len() {
            let i = alive[k];
            let mut others: Vec<Vector> = fixed.to_vec();
            others.extend(alive.iter().filter(|&&j| j != i).map(|&j| normed[j].clone()));
            let v = dd_convert(self.dim, &others, &self.equalities);
            let implied = v.rays.iter().all(|r| !dot(&normed[i], r).is_negative())
                && v.lineality.iter().all(|l| dot(&normed[i], l).is_zero());
            if implied {
                alive.remove(k);
            } else {
                k += 1;
            }
        }
        alive
    }

    /// Tab-separated dump of both descriptions, for debugging.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        let fmt = |v: &Vector| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\t");
        for a in &self.inequalities {
            let _ = writeln!(s, "ineq\t{}", fmt(a));
        }
        for e in &self.equalities {
            let _ = writeln!(s, "eq\t{}", fmt(e));
        }
        let v = self.vrep();
        for r in &v.rays {
            let _ = writeln!(s, "ray\t{}", fmt(r));
        }
        for l in &v.lineality {
            let _ = writeln!(s, "line\t{}", fmt(l));
        }
        s
    }
}
