//! Embeddings `G -> Ghat` of semisimple groups and the data attached to them:
//! weight restriction, quotient weights, admissible one-parameter subgroups and Levi pairs.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};
use crate::polyhedra;
use crate::root_datum::{Coweight, RootDatum, Weight};
use crate::weyl::WeylElement;

/// A homomorphism `G -> Ghat` carrying the maximal torus into the maximal torus.
///
/// It is recorded by `cartan_map`, an `rhat x r` integer matrix whose column `i` lists the
/// coefficients of the image of `alpha_i^vee` on the simple coroots of `Ghat`. The induced
/// restriction of weights in fundamental-weight coordinates is the transpose.
#[derive(Clone)]
pub struct Embedding {
    g: Arc<RootDatum>,
    g_hat: Arc<RootDatum>,
    cartan_map: Vec<Vec<i64>>,
    label: String,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Embedding")
            .field("label", &self.label)
            .field("g", &self.g.label())
            .field("g_hat", &self.g_hat.label())
            .field("cartan_map", &self.cartan_map)
            .finish()
    }
}

/// Which branch of the construction applies to an embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// No ideal of `g` is an ideal of `ghat`; the cone has nonempty interior.
    B,
    /// Some ideal of `g` is an ideal of `ghat`; inequalities come from the compatible set.
    A,
}

/// Output of [`Embedding::standardize`].
#[derive(Clone, Debug)]
pub struct Standardized {
    /// Minimal-length `vhat` with `vhat phi(delta)` dominant.
    pub v_hat: WeylElement,
    /// The conjugated embedding `Ad(vhat) o phi`.
    pub embedding: Embedding,
    /// `vhat phi(delta)`, a dominant coweight of `Ghat`.
    pub delta_hat: Coweight,
}

/// The Levi subgroups attached to a coweight, with their induced embedding.
#[derive(Clone, Debug)]
pub struct LeviPair {
    pub inner: Embedding,
    /// Simple roots of `G` vanishing on `delta`.
    pub g_support: Vec<usize>,
    /// Simple roots of `Ghat` vanishing on `phi(delta)`.
    pub g_hat_support: Vec<usize>,
}

impl Embedding {
    /// Builds and validates an embedding.
    pub fn new(g: Arc<RootDatum>, g_hat: Arc<RootDatum>, cartan_map: Vec<Vec<i64>>, label: &str) -> Result<Self> {
        let e = Embedding::unchecked(g, g_hat, cartan_map, label)?;
        e.validate()?;
        Ok(e)
    }

    /// Builds an embedding checking only the shapes and injectivity.
    pub fn unchecked(g: Arc<RootDatum>, g_hat: Arc<RootDatum>, cartan_map: Vec<Vec<i64>>, label: &str) -> Result<Self> {
        let (r, rh) = (g.rank(), g_hat.rank());
        if cartan_map.len() != rh || cartan_map.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidEmbedding(format!("cartan_map must be {rh} x {r}")));
        }
        if r > 0 && linalg::rank_q(&linalg::mat_q(&cartan_map), r) != r {
            return Err(Error::InvalidEmbedding("map on tori is not injective".into()));
        }
        Ok(Embedding { g, g_hat, cartan_map, label: label.to_string() })
    }

    fn validate(&self) -> Result<()> {
        let restricted: HashSet<Vec<i64>> =
            self.g_hat.positive_roots().iter().map(|e| self.restrict_int(&e.omega)).collect();
        for e in self.g.positive_roots() {
            if !restricted.contains(&e.omega) {
                return Err(Error::InvalidEmbedding(format!(
                    "root {:?} of G is not the restriction of a positive root of Ghat",
                    e.simple
                )));
            }
        }
        quotient_weights(self)?;
        Ok(())
    }

    pub fn g(&self) -> &Arc<RootDatum> {
        &self.g
    }
    pub fn g_hat(&self) -> &Arc<RootDatum> {
        &self.g_hat
    }
    pub fn cartan_map(&self) -> &[Vec<i64>] {
        &self.cartan_map
    }
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Identifies the embedding up to equality of all its data.
    pub fn key(&self) -> (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>) {
        (self.g.cartan().to_vec(), self.g_hat.cartan().to_vec(), self.cartan_map.clone())
    }

    /// For each fundamental weight of `Ghat`, its restriction as a linear form on the weights of `G`.
    pub fn restriction_forms(&self) -> &[Vec<i64>] {
        &self.cartan_map
    }

    pub fn restrict_int(&self, lambda_hat: &[i64]) -> Vec<i64> {
        let r = self.g.rank();
        (0..r).map(|i| self.cartan_map.iter().zip(lambda_hat).map(|(row, l)| row[i] * l).sum()).collect()
    }

    pub fn restrict_weight(&self, lambda_hat: &Weight) -> Weight {
        let r = self.g.rank();
        Weight::new(
            (0..r)
                .map(|i| {
                    self.cartan_map.iter().zip(&lambda_hat.coords).fold(Q::zero(), |acc, (row, l)| acc + q(row[i]) * l)
                })
                .collect(),
        )
    }

    /// Image of a coweight given in coroot coordinates.
    pub fn map_coroot_int(&self, c: &[i64]) -> Vec<i64> {
        linalg::mat_vec_i64(&self.cartan_map, c)
    }

    pub fn map_coweight(&self, d: &Coweight) -> Coweight {
        let c = self.g.coroot_coords(d);
        let ch = linalg::mat_vec(&linalg::mat_q(&self.cartan_map), &c);
        self.g_hat.coweight_from_coroot(&ch)
    }

    /// Conjugates by the minimal `vhat` making `phi(delta)` dominant.
    pub fn standardize(&self, delta: &Coweight) -> Result<Standardized> {
        let image = self.map_coweight(delta);
        let (v_hat, delta_hat) = self.g_hat.dominant_conjugator(&image);
        let cm = linalg::mat_mul_i64(v_hat.comatrix(), &self.cartan_map);
        let label = if v_hat.is_identity() { self.label.clone() } else { format!("{}@{}", self.label, v_hat.format("^")) };
        let embedding = Embedding::unchecked(self.g.clone(), self.g_hat.clone(), cm, &label)?;
        Ok(Standardized { v_hat, embedding, delta_hat })
    }

    /// Whether the quotient weights span the dual of the Cartan of `G`.
    pub fn classify_case(&self) -> Result<Case> {
        let qw = quotient_weights(self)?;
        let rows: Vec<Vec<Q>> = qw.keys().map(|w| linalg::to_q(w)).collect();
        let r = self.g.rank();
        Ok(if linalg::rank_q(&rows, r) == r { Case::B } else { Case::A })
    }

    /// Whether the distinct restricted weights of `ghat/g` and of `ghat` agree.
    pub fn weight_sets_coincide(&self) -> Result<bool> {
        let qw: BTreeSet<Vec<i64>> = quotient_weights(self)?.into_keys().collect();
        let mut all: BTreeSet<Vec<i64>> = self.g_hat.all_roots_omega().iter().map(|w| self.restrict_int(w)).collect();
        if self.g_hat.rank() > 0 {
            all.insert(vec![0; self.g.rank()]);
        }
        Ok(qw == all)
    }

    /// Levi pair for a coweight that is dominant for both groups in this embedding.
    pub fn levi_pair(&self, delta: &Coweight) -> Result<LeviPair> {
        let image = self.map_coweight(delta);
        if !delta.is_dominant() || !image.is_dominant() {
            return Err(Error::InvalidArgument("levi_pair needs a coweight dominant on both sides".into()));
        }
        let gs = delta.stabilizer_support();
        let hs = image.stabilizer_support();
        for (i, row) in self.cartan_map.iter().enumerate() {
            if !hs.contains(&i) && gs.iter().any(|&j| row[j] != 0) {
                return Err(Error::Internal("Levi coroots leave the Levi of Ghat".into()));
            }
        }
        let inner_map: Vec<Vec<i64>> =
            hs.iter().map(|&i| gs.iter().map(|&j| self.cartan_map[i][j]).collect()).collect();
        let inner = Embedding::unchecked(
            Arc::new(self.g.sub_datum(&gs)),
            Arc::new(self.g_hat.sub_datum(&hs)),
            inner_map,
            &format!("levi({})", self.label),
        )?;
        Ok(LeviPair { inner, g_support: gs, g_hat_support: hs })
    }
}

impl LeviPair {
    /// Extends a weight of the semisimple part of the Levi of `G` by zero on its centre.
    pub fn lift_g(&self, outer: &RootDatum, nu: &[Q]) -> Weight {
        lift(outer, self.inner.g(), &self.g_support, nu)
    }

    pub fn lift_g_hat(&self, outer: &RootDatum, nu: &[Q]) -> Weight {
        lift(outer, self.inner.g_hat(), &self.g_hat_support, nu)
    }
}

/// The weight in the span of the Levi roots whose pairings with the Levi coroots are `nu`.
fn lift(outer: &RootDatum, inner: &RootDatum, support: &[usize], nu: &[Q]) -> Weight {
    let r = outer.rank();
    let mut out = vec![Q::zero(); r];
    if support.is_empty() {
        return Weight::new(out);
    }
    // c = A_L^{-T} nu
    let inv = inner.cartan_inverse();
    let c: Vec<Q> = (0..support.len())
        .map(|j| (0..support.len()).fold(Q::zero(), |acc, i| acc + &inv[i][j] * &nu[i]))
        .collect();
    for (cj, &sj) in c.iter().zip(support) {
        for (k, o) in out.iter_mut().enumerate() {
            *o += cj * q(outer.cartan()[sj][k]);
        }
    }
    Weight::new(out)
}

/// Restricted weights of `ghat / g` with multiplicities.
pub fn quotient_weights(emb: &Embedding) -> Result<BTreeMap<Vec<i64>, usize>> {
    let r = emb.g().rank();
    let mut counts: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for w in emb.g_hat().all_roots_omega() {
        *counts.entry(emb.restrict_int(&w)).or_default() += 1;
    }
    *counts.entry(vec![0; r]).or_default() += emb.g_hat().rank() as i64;
    for w in emb.g().all_roots_omega() {
        *counts.entry(w).or_default() -= 1;
    }
    *counts.entry(vec![0; r]).or_default() -= r as i64;
    let mut out = BTreeMap::new();
    for (w, c) in counts {
        if c < 0 {
            return Err(Error::InvalidEmbedding(format!("weight {w:?} of g is missing from ghat")));
        }
        if c > 0 {
            out.insert(w, c as usize);
        }
    }
    Ok(out)
}

fn primitive_direction(w: &[i64]) -> Vec<i64> {
    let g = w.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    let mut v: Vec<i64> = w.iter().map(|x| x / g).collect();
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Sorts coweights with the larger fundamental-coweight coordinates first.
fn sort_ops(v: &mut [Coweight]) {
    v.sort_by(|a, b| b.coords.cmp(&a.coords));
}

/// Dominant indivisible one-parameter subgroups whose kernel hyperplane is spanned by quotient weights.
pub fn special_ops(emb: &Embedding) -> Result<Vec<Coweight>> {
    let g = emb.g();
    let r = g.rank();
    if r == 0 {
        return Ok(Vec::new());
    }
    let dirs: Vec<Vec<i64>> = quotient_weights(emb)?
        .into_keys()
        .filter(|w| w.iter().any(|&x| x != 0))
        .map(|w| primitive_direction(&w))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    for subset in combinations(dirs.len(), r - 1) {
        let rows: Vec<Vec<Q>> = subset.iter().map(|&i| linalg::to_q(&dirs[i])).collect();
        let ns = linalg::nullspace(&rows, r);
        if ns.len() != 1 {
            continue;
        }
        let c = linalg::primitive(&ns[0]);
        let c = linalg::big_to_i64(&c).ok_or_else(|| Error::Internal("coweight overflow".into()))?;
        for sign in [1i64, -1] {
            let cs: Vec<i64> = c.iter().map(|x| sign * x).collect();
            if linalg::mat_vec_i64(g.cartan(), &cs).iter().all(|&x| x >= 0) {
                found.insert(cs);
            }
        }
    }
    let mut out: Vec<Coweight> = found.iter().map(|c| g.coweight_from_coroot_ints(c)).collect();
    sort_ops(&mut out);
    Ok(out)
}

/// Extremal rays of the chambers `h_+ cap vhat(hhat_+)` over all `vhat`, as indivisible coweights.
pub fn compatible_ops(emb: &Embedding, weyl_cap: usize) -> Result<Vec<Coweight>> {
    let g = emb.g();
    let gh = emb.g_hat();
    let r = g.rank();
    if r == 0 {
        return Ok(Vec::new());
    }
    let mut seen_systems: HashSet<Vec<Vec<i64>>> = HashSet::new();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    for v in gh.weyl_elements(weyl_cap)? {
        let vinv = gh.inverse(v);
        let m = linalg::mat_mul_i64(gh.cartan(), &linalg::mat_mul_i64(vinv.comatrix(), emb.cartan_map()));
        let mut rows: Vec<Vec<i64>> = g.cartan().to_vec();
        rows.extend(m);
        rows.sort();
        rows.dedup();
        if !seen_systems.insert(rows.clone()) {
            continue;
        }
        let big: Vec<Vec<BigInt>> = rows.iter().map(|row| linalg::to_big(row)).collect();
        let vrep = polyhedra::dd_convert(r, &big, &[]);
        for ray in vrep.rays {
            let c = linalg::big_to_i64(&ray).ok_or_else(|| Error::Internal("coweight overflow".into()))?;
            found.insert(c);
        }
    }
    let mut out: Vec<Coweight> = found.iter().map(|c| g.coweight_from_coroot_ints(c)).collect();
    sort_ops(&mut out);
    Ok(out)
}

/// Coroot coordinates of a coweight known to lie in the coroot lattice.
pub fn coroot_ints(datum: &RootDatum, d: &Coweight) -> Result<Vec<i64>> {
    linalg::integral_i64(&datum.coroot_coords(d))
        .ok_or_else(|| Error::InvalidArgument(format!("coweight {d} is not in the coroot lattice")))
}

fn arc(desc: &str) -> Result<Arc<RootDatum>> {
    Ok(Arc::new(RootDatum::from_descriptor(desc)?))
}

/// `G` embedded diagonally in `G x ... x G`.
pub fn diagonal(g: &str, copies: usize) -> Result<Embedding> {
    if copies == 0 {
        return Err(Error::InvalidEmbedding("diagonal needs at least one copy".into()));
    }
    let gd = arc(g)?;
    let parts: Vec<&RootDatum> = (0..copies).map(|_| gd.as_ref()).collect();
    let gh = Arc::new(RootDatum::product(&parts)?);
    let r = gd.rank();
    let map: Vec<Vec<i64>> = (0..r * copies).map(|i| (0..r).map(|j| i64::from(i % r == j)).collect()).collect();
    Embedding::new(gd, gh, map, &format!("diagonal({g},{copies})"))
}

/// `SL2` embedded through the root subgroup of a simple root (1-based index).
pub fn root_sl2(g_hat: &str, index: usize) -> Result<Embedding> {
    let gh = arc(g_hat)?;
    if index == 0 || index > gh.rank() {
        return Err(Error::InvalidEmbedding(format!("root index {index} out of range")));
    }
    let map = (0..gh.rank()).map(|i| vec![i64::from(i + 1 == index)]).collect();
    Embedding::new(arc("A1")?, gh, map, &format!("root_sl2({g_hat},{index})"))
}

/// `SL2` embedded with the given Dynkin labels `alphahat_i(alpha^vee)`.
pub fn dynkin_sl2(g_hat: &str, labels: &[i64]) -> Result<Embedding> {
    let gh = arc(g_hat)?;
    if labels.len() != gh.rank() || labels.iter().any(|&l| !(0..=2).contains(&l)) || labels.iter().all(|&l| l == 0) {
        return Err(Error::InvalidEmbedding(format!("invalid Dynkin labels {labels:?}")));
    }
    let c = linalg::integral_i64(&gh.coroot_coords(&Coweight::from_ints(labels)))
        .ok_or_else(|| Error::InvalidEmbedding(format!("Dynkin labels {labels:?} are not a coroot")))?;
    let map = c.into_iter().map(|x| vec![x]).collect();
    Embedding::new(arc("A1")?, gh, map, &format!("dynkin_sl2({g_hat},{labels:?})"))
}

/// The principal `SL2`, with all Dynkin labels equal to 2.
pub fn principal_sl2(g_hat: &str) -> Result<Embedding> {
    let r = RootDatum::from_descriptor(g_hat)?.rank();
    let mut e = dynkin_sl2(g_hat, &vec![2; r])?;
    e.label = format!("principal_sl2({g_hat})");
    Ok(e)
}

/// `G` as the factor in position `slot` (1-based) of a product `Ghat`.
pub fn factor(g: &str, g_hat: &str, slot: usize) -> Result<Embedding> {
    let gd = arc(g)?;
    let gh = arc(g_hat)?;
    let comps = gh.components();
    if slot == 0 || slot > comps.len() {
        return Err(Error::InvalidEmbedding(format!("slot {slot} out of range")));
    }
    let comp = &comps[slot - 1];
    let sub: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| gh.cartan()[i][j]).collect()).collect();
    if sub != gd.cartan() {
        return Err(Error::InvalidEmbedding(format!("factor {slot} of {g_hat} is not {g}")));
    }
    let mut map = vec![vec![0i64; gd.rank()]; gh.rank()];
    for (j, &i) in comp.iter().enumerate() {
        map[i][j] = 1;
    }
    Embedding::new(gd, gh, map, &format!("factor({g},{g_hat},{slot})"))
}

/// `Sp(2n)` in `SL(2n)`.
pub fn sp_in_sl(n: usize) -> Result<Embedding> {
    if n < 2 {
        return Err(Error::InvalidEmbedding("sp_in_sl needs n >= 2".into()));
    }
    let g = arc(&format!("C{n}"))?;
    let gh = arc(&format!("A{}", 2 * n - 1))?;
    let mut map = vec![vec![0i64; n]; 2 * n - 1];
    for i in 0..n - 1 {
        map[i][i] = 1;
        map[2 * n - 2 - i][i] = 1;
    }
    map[n - 1][n - 1] = 1;
    Embedding::new(g, gh, map, &format!("sp_in_sl({n})"))
}

/// An embedding given by descriptors and an explicit coroot map.
pub fn explicit(g: &str, g_hat: &str, cartan_map: Vec<Vec<i64>>) -> Result<Embedding> {
    Embedding::new(arc(g)?, arc(g_hat)?, cartan_map, &format!("explicit({g},{g_hat})"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qfrac;

    #[test]
    fn restriction_of_fundamental_weights() {
        let e = sp_in_sl(2).unwrap();
        assert_eq!(e.restrict_int(&[1, 0, 0]), vec![1, 0]);
        assert_eq!(e.restrict_int(&[0, 1, 0]), vec![0, 1]);
        assert_eq!(e.restrict_int(&[0, 0, 1]), vec![1, 0]);
        let p = principal_sl2("C3").unwrap();
        assert_eq!(p.cartan_map(), &[vec![5], vec![8], vec![9]]);
        let p = principal_sl2("A3").unwrap();
        assert_eq!(p.cartan_map(), &[vec![3], vec![4], vec![3]]);
    }

    #[test]
    fn quotient_weights_of_root_sl2() {
        let e = root_sl2("A2", 1).unwrap();
        let qw = quotient_weights(&e).unwrap();
        assert_eq!(qw.get(&vec![1]), Some(&2));
        assert_eq!(qw.get(&vec![-1]), Some(&2));
        assert_eq!(qw.get(&vec![0]), Some(&1));
        assert_eq!(qw.values().sum::<usize>(), 8 - 3);
    }

    #[test]
    fn cases() {
        assert_eq!(root_sl2("A2", 1).unwrap().classify_case().unwrap(), Case::B);
        assert_eq!(factor("A1", "A1xA1", 1).unwrap().classify_case().unwrap(), Case::A);
        assert_eq!(sp_in_sl(2).unwrap().classify_case().unwrap(), Case::B);
        assert_eq!(diagonal("A2", 2).unwrap().classify_case().unwrap(), Case::B);
    }

    #[test]
    fn special_ops_examples() {
        let a1 = RootDatum::from_descriptor("A1").unwrap();
        let s = special_ops(&root_sl2("A2", 1).unwrap()).unwrap();
        assert_eq!(s, vec![a1.simple_coroot(0)]);
        let s = special_ops(&sp_in_sl(2).unwrap()).unwrap();
        // diag(t, t, 1/t, 1/t) pairs to 2 with the long simple root
        assert_eq!(s, vec![Coweight::from_ints(&[0, 2])]);
        let s = special_ops(&sp_in_sl(3).unwrap()).unwrap();
        assert_eq!(s, vec![Coweight::from_ints(&[1, 0, 0]), Coweight::from_ints(&[0, 0, 2])]);
        assert!(s.iter().all(|d| d.is_dominant()));
    }

    #[test]
    fn compatible_ops_contain_special() {
        for e in [root_sl2("A2", 1).unwrap(), sp_in_sl(2).unwrap(), principal_sl2("A2").unwrap()] {
            let s = special_ops(&e).unwrap();
            let t = compatible_ops(&e, 10_000).unwrap();
            assert!(s.iter().all(|d| t.contains(d)), "{e:?}");
        }
        let t = compatible_ops(&factor("A1", "A1xA1", 1).unwrap(), 100).unwrap();
        assert_eq!(t, vec![Coweight::from_ints(&[2])]);
    }

    #[test]
    fn standardize_root_sl2() {
        let e = root_sl2("A2", 1).unwrap();
        let d = e.g().simple_coroot(0);
        let st = e.standardize(&d).unwrap();
        assert_eq!(st.v_hat.word(), &[1]);
        assert_eq!(st.delta_hat, Coweight::from_ints(&[1, 1]));
        assert_eq!(st.embedding.map_coweight(&d), st.delta_hat);
    }

    #[test]
    fn levi_lift() {
        let e = sp_in_sl(2).unwrap();
        let d = Coweight::from_ints(&[0, 1]);
        let lp = e.levi_pair(&d).unwrap();
        assert_eq!(lp.g_support, vec![0]);
        assert_eq!(lp.g_hat_support, vec![0, 2]);
        assert_eq!(lp.inner.cartan_map(), &[vec![1], vec![1]]);
        let l = lp.lift_g(e.g(), &[q(1)]);
        assert_eq!(l.coords, vec![q(1), qfrac(-1, 2)]);
        let lh = lp.lift_g_hat(e.g_hat(), &[q(1), q(1)]);
        assert_eq!(lh.coords, vec![q(1), q(-1), q(1)]);
    }

    #[test]
    fn builder_errors() {
        assert!(root_sl2("A2", 3).is_err());
        assert!(dynkin_sl2("A2", &[3, 0]).is_err());
        assert!(factor("A2", "A1xA1", 1).is_err());
        assert!(sp_in_sl(1).is_err());
        assert!(explicit("A1", "A2", vec![vec![1], vec![1], vec![0]]).is_err());
        assert!(explicit("A2", "A1", vec![vec![1, 0]]).is_err());
    }
}
