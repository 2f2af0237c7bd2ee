//! Facets and extremal rays of the saturated branching cone.
//!
//! Coordinates on the cone are `(mu_1..mu_r, muhat_1..muhat_rhat)` in fundamental weights.
//! Every coweight `delta` is handled in the conjugated embedding where `phi(delta)` is
//! dominant; the cone itself does not change under this conjugation.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::branching::{self, Case, Embedding, LeviPair, Standardized};
use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::polyhedra::{dot, RationalCone, Vector};
use crate::root_datum::Coweight;
use crate::schubert::{dual_element, PullbackTable};
use crate::weyl::WeylElement;

/// Resource limits; exceeding one is reported as [`Error::Budget`].
#[derive(Clone, Debug)]
pub struct Budgets {
    /// Largest Weyl group that may be enumerated.
    pub weyl_cap: usize,
    /// Largest representation dimension the character oracle will expand.
    pub rep_dim_cap: u64,
    /// Largest dilation tried when searching for invariants.
    pub nmax: u32,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { weyl_cap: 100_000, rep_dim_cap: 20_000_000, nmax: 3 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    G,
    GHat,
}

/// A Bruhat cover `lower -> w` by a simple reflection on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverDatum {
    pub side: Side,
    /// The simple root (0-based) of the cover.
    pub index: usize,
    pub lower: WeylElement,
}

impl fmt::Display for CoverDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::G => write!(f, "{} -a{}-> w", self.lower, self.index + 1),
            Side::GHat => write!(f, "{} -a{}^-> w^", self.lower.format("^"), self.index + 1),
        }
    }
}

/// `a . mu + b . muhat <= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
}

impl Inequality {
    /// The row `r` with `r . (mu, muhat) >= 0` describing the same half-space.
    pub fn as_row(&self) -> Vector {
        self.a.iter().chain(self.b.iter()).map(|x| -x).collect()
    }

    pub fn evaluate(&self, mu: &[BigInt], mu_hat: &[BigInt]) -> BigInt {
        dot(&self.a, mu) + dot(&self.b, mu_hat)
    }

    pub fn holds(&self, mu: &[BigInt], mu_hat: &[BigInt]) -> bool {
        !self.evaluate(mu, mu_hat).is_positive()
    }

    /// Human-readable form such as `-a1 - 2a2 + b1 + b3 <= 0`.
    pub fn pretty(&self) -> String {
        let mut s = String::new();
        for (name, v) in [("a", &self.a), ("b", &self.b)] {
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let sign = if c.is_negative() { "-" } else { "+" };
                let mag = c.abs();
                let coef = if mag.is_one() { String::new() } else { mag.to_string() };
                if s.is_empty() {
                    s.push_str(if c.is_negative() { "-" } else { "" });
                } else {
                    s.push_str(&format!(" {sign} "));
                }
                s.push_str(&format!("{coef}{name}{}", i + 1));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s + " <= 0"
    }
}

/// Everything attached to one coweight `delta` of the inequality set.
pub struct DeltaContext {
    pub index: usize,
    /// Dominant coweight of `G`.
    pub delta: Coweight,
    pub delta_coroot: Vec<i64>,
    pub std: Standardized,
    pub delta_hat_coroot: Vec<i64>,
    pub table: PullbackTable,
    /// `What^Phat`, sorted by length then word.
    pub hat_reps: Vec<WeylElement>,
    levi: OnceLock<LeviPair>,
}

impl DeltaContext {
    fn new(index: usize, emb: &Embedding, delta: &Coweight, weyl_cap: usize) -> Result<Self> {
        let delta_coroot = branching::coroot_ints(emb.g(), delta)?;
        let std = emb.standardize(delta)?;
        let table = PullbackTable::new(&std.embedding, delta, weyl_cap)?;
        let delta_hat_coroot = std.embedding.map_coroot_int(&delta_coroot);
        let hat_reps = emb.g_hat().min_coset_reps(table.support_hat(), weyl_cap)?;
        Ok(DeltaContext {
            index,
            delta: delta.clone(),
            delta_coroot,
            std,
            delta_hat_coroot,
            table,
            hat_reps,
            levi: OnceLock::new(),
        })
    }

    pub fn embedding(&self) -> &Embedding {
        &self.std.embedding
    }

    pub fn levi(&self) -> Result<&LeviPair> {
        if let Some(l) = self.levi.get() {
            return Ok(l);
        }
        let l = self.std.embedding.levi_pair(&self.delta)?;
        Ok(self.levi.get_or_init(|| l))
    }

    /// `delta` in fundamental coweight coordinates, formatted as `0 2`.
    pub fn delta_label(&self) -> String {
        self.delta.coords.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// A regular face `(w, what, delta)` together with its inequality.
#[derive(Clone)]
pub struct FacetDatum {
    pub ctx: Arc<DeltaContext>,
    pub w: WeylElement,
    /// `what` in the conjugated embedding; the original one is `what * vhat`.
    pub w_hat: WeylElement,
    pub inequality: Inequality,
}

impl fmt::Debug for FacetDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FacetDatum{} {}", self.label(), self.inequality.pretty())
    }
}

impl FacetDatum {
    pub fn delta(&self) -> &Coweight {
        &self.ctx.delta
    }
    pub fn v_hat(&self) -> &WeylElement {
        &self.ctx.std.v_hat
    }
    /// `(w, what)` as in `(s2 s1 s2, s2^)`.
    pub fn label(&self) -> String {
        format!("({}, {})", self.w, self.w_hat.format("^"))
    }
    /// Label with the coweight and, if not trivial, the conjugating element.
    pub fn provenance(&self) -> String {
        let mut s = format!("{} delta=[{}]", self.label(), self.ctx.delta_label());
        if !self.v_hat().is_identity() {
            s.push_str(&format!(" v^={}", self.v_hat().format("^")));
        }
        s
    }
}

/// Where a ray came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    TypeOne { facet: usize, cover: CoverDatum },
    TypeTwo { facet: usize },
    Fundamental { index: usize },
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayVector {
    pub mu: Vec<BigInt>,
    pub mu_hat: Vec<BigInt>,
    pub provenance: Provenance,
}

impl RayVector {
    fn from_coords(v: Vector, r: usize, provenance: Provenance) -> Self {
        RayVector { mu: v[..r].to_vec(), mu_hat: v[r..].to_vec(), provenance }
    }
    pub fn coords(&self) -> Vector {
        self.mu.iter().chain(self.mu_hat.iter()).cloned().collect()
    }
}

/// Outcome of testing whether `(0, omegahat_j)` spans a ray.
#[derive(Clone, Debug)]
pub struct FundamentalTest {
    pub index: usize,
    pub accepted: bool,
    /// `(what, delta index)` of a pair with `omegahat_j(what delta) > 0`.
    pub rejected_by: Option<(WeylElement, Coweight)>,
    /// Number of pairs that had to be checked for this index.
    pub pairs_checked: usize,
    /// Set when no pair at all exists, so every fundamental ray is accepted.
    pub vacuous: bool,
}

/// Dimension count attached to a regular face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCount {
    /// Dimension of the kernel of the induction map.
    pub kernel: usize,
    /// Number of type I data.
    pub type_one: usize,
    pub r_hat: usize,
    pub levi_hat_rank: usize,
    /// Number of simple roots of `G` not in the Levi subgroup of `delta`.
    pub levi_corank: usize,
}

impl DimensionCount {
    /// `c = q - |Deltahat| + |Delta(Phat)|`. The count presumes the face has codimension
    /// `levi_corank`; a regular facet always has codimension one, so expect it only when
    /// `levi_corank == 1`.
    pub fn holds(&self) -> bool {
        self.kernel as i64 == self.type_one as i64 - self.r_hat as i64 + self.levi_hat_rank as i64
    }

    /// Whether the count is expected to hold for this face.
    pub fn applies(&self) -> bool {
        self.levi_corank == 1
    }
}

/// Shared caches for a computation, including cones of Levi subgroups.
pub struct Engine {
    pub budgets: Budgets,
    levi_rays: Mutex<HashMap<(Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>), Arc<Vec<Vector>>>>,
}

impl Engine {
    pub fn new(budgets: Budgets) -> Self {
        Engine { budgets, levi_rays: Mutex::new(HashMap::new()) }
    }

    pub fn analyze(&self, emb: &Embedding) -> Result<Analysis<'_>> {
        Analysis::new(self, emb)
    }

    /// Extremal rays of the cone of `emb`, memoised.
    pub fn extremal_rays(&self, emb: &Embedding) -> Result<Arc<Vec<Vector>>> {
        let key = emb.key();
        if let Some(v) = self.levi_rays.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let rays = self.analyze(emb)?.all_extremal_rays()?;
        let v: Arc<Vec<Vector>> = Arc::new(rays.iter().map(|r| r.coords()).collect());
        self.levi_rays.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(Budgets::default())
    }
}

/// The cone of one embedding: inequalities, the full H-description and ray generation.
pub struct Analysis<'e> {
    engine: &'e Engine,
    emb: Embedding,
    case: Case,
    contexts: Vec<Arc<DeltaContext>>,
    facets: Vec<FacetDatum>,
    /// Indices into `facets` of the inequalities kept in the H-description.
    kept: Vec<usize>,
    cone: RationalCone,
    compatible: OnceLock<Vec<Arc<DeltaContext>>>,
}

impl<'e> Analysis<'e> {
    pub fn new(engine: &'e Engine, emb: &Embedding) -> Result<Self> {
        let cap = engine.budgets.weyl_cap;
        let case = emb.classify_case()?;
        let ops = match case {
            Case::B => branching::special_ops(emb)?,
            Case::A => branching::compatible_ops(emb, cap)?,
        };
        let mut contexts = Vec::new();
        for (i, d) in ops.iter().enumerate() {
            contexts.push(Arc::new(DeltaContext::new(i, emb, d, cap)?));
        }
        let mut facets = Vec::new();
        for ctx in &contexts {
            facets.extend(facets_of(ctx)?);
        }
        facets.sort_by(|x, y| {
            x.ctx
                .index
                .cmp(&y.ctx.index)
                .then_with(|| y.w.length().cmp(&x.w.length()))
                .then_with(|| x.w.word().cmp(y.w.word()))
                .then_with(|| x.w_hat.cmp(&y.w_hat))
        });
        let (r, rh) = (emb.g().rank(), emb.g_hat().rank());
        let dim = r + rh;
        let dominance: Vec<Vector> =
            (0..dim).map(|i| (0..dim).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
        let mut seen = HashSet::new();
        let mut candidates: Vec<usize> = Vec::new();
        for (i, f) in facets.iter().enumerate() {
            if seen.insert(f.inequality.clone()) {
                candidates.push(i);
            }
        }
        let kept = match case {
            Case::B => candidates,
            Case::A => {
                let rows: Vec<Vector> = candidates.iter().map(|&i| facets[i].inequality.as_row()).collect();
                let keep = RationalCone::new(dim, rows, vec![]).irredundant_given(&dominance);
                keep.into_iter().map(|k| candidates[k]).collect()
            }
        };
        let mut rows: Vec<Vector> = kept.iter().map(|&i| facets[i].inequality.as_row()).collect();
        rows.extend(dominance);
        let cone = RationalCone::new(dim, rows, vec![]);
        Ok(Analysis { engine, emb: emb.clone(), case, contexts, facets, kept, cone, compatible: OnceLock::new() })
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }
    pub fn case(&self) -> Case {
        self.case
    }
    pub fn contexts(&self) -> &[Arc<DeltaContext>] {
        &self.contexts
    }
    /// All regular faces found, including ones whose inequality is redundant in case A.
    pub fn facets(&self) -> &[FacetDatum] {
        &self.facets
    }
    /// Facets whose inequalities form the H-description.
    pub fn inequality_facets(&self) -> Vec<&FacetDatum> {
        self.kept.iter().map(|&i| &self.facets[i]).collect()
    }
    /// Full H-description: inequalities and dominance, as rows `r . x >= 0`.
    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }
    fn r(&self) -> usize {
        self.emb.g().rank()
    }

    pub fn contains(&self, mu: &[BigInt], mu_hat: &[BigInt]) -> bool {
        let x: Vector = mu.iter().chain(mu_hat).cloned().collect();
        self.cone.contains(&x)
    }

    /// Simple Bruhat covers of `w` and of `what` inside the coset representatives.
    pub fn type_one_data(&self, f: &FacetDatum) -> Vec<CoverDatum> {
        let g = self.emb.g();
        let gh = self.emb.g_hat();
        let mut out = Vec::new();
        for i in g.left_descents(&f.w) {
            out.push(CoverDatum { side: Side::G, index: i, lower: g.mul(&g.simple_reflection(i), &f.w) });
        }
        for i in gh.left_descents(&f.w_hat) {
            out.push(CoverDatum { side: Side::GHat, index: i, lower: gh.mul(&gh.simple_reflection(i), &f.w_hat) });
        }
        out
    }

    /// The type I ray of a cover datum, as an integer vector.
    pub fn type_one_ray(&self, f: &FacetDatum, cover: &CoverDatum) -> Result<Vector> {
        let g = self.emb.g();
        let gh = self.emb.g_hat();
        let t = &f.ctx.table;
        let (u, uh) = match cover.side {
            Side::G => (cover.lower.clone(), f.w_hat.clone()),
            Side::GHat => (f.w.clone(), cover.lower.clone()),
        };
        let mut out = Vec::with_capacity(g.rank() + gh.rank());
        for k in 0..g.rank() {
            let x = g.mul(&g.simple_reflection(k), &u);
            let c = if x.length() == u.length() + 1 && g.is_min_coset_rep(&x, t.support()) {
                t.point_coefficient(&x, &uh)?
            } else {
                Q::zero()
            };
            out.push(c);
        }
        for k in 0..gh.rank() {
            let x = gh.mul(&gh.simple_reflection(k), &uh);
            let c = if x.length() == uh.length() + 1 && gh.is_min_coset_rep(&x, t.support_hat()) {
                t.point_coefficient(&u, &x)?
            } else {
                Q::zero()
            };
            out.push(c);
        }
        linalg::integral(&out).ok_or_else(|| Error::Internal("fractional type I coordinate".into()))
    }

    /// `Ind(nu, nuhat)` for weights of the semisimple Levi subgroups, in rational coordinates.
    pub fn induction(&self, f: &FacetDatum, nu: &[Q], nu_hat: &[Q]) -> Result<Vec<Q>> {
        let g = self.emb.g();
        let gh = self.emb.g_hat();
        let levi = f.ctx.levi()?;
        let mu = f.w.act_weight(&levi.lift_g(g, nu));
        let mu_hat = f.w_hat.act_weight(&levi.lift_g_hat(gh, nu_hat));
        let mut out: Vec<Q> = mu.coords.iter().chain(mu_hat.coords.iter()).cloned().collect();
        for cover in self.type_one_data(f) {
            let coeff = match cover.side {
                Side::G => mu.coords[cover.index].clone(),
                Side::GHat => mu_hat.coords[cover.index].clone(),
            };
            if coeff.is_zero() {
                continue;
            }
            let ray = self.type_one_ray(f, &cover)?;
            for (o, x) in out.iter_mut().zip(&ray) {
                *o -= &coeff * Q::from_integer(x.clone());
            }
        }
        Ok(out)
    }

    /// Rows cutting out the face `F_2` inside the cone: the facet and the vanishing conditions.
    fn face_equalities(&self, f: &FacetDatum) -> Vec<Vector> {
        let r = self.r();
        let dim = self.cone.dim;
        let mut eqs = vec![f.inequality.as_row()];
        for cover in self.type_one_data(f) {
            let k = match cover.side {
                Side::G => cover.index,
                Side::GHat => r + cover.index,
            };
            eqs.push((0..dim).map(|j| BigInt::from(i64::from(j == k))).collect());
        }
        eqs
    }

    /// Images under induction of the extremal rays of the Levi cone that stay extremal.
    pub fn type_two_rays(&self, f: &FacetDatum) -> Result<Vec<Vector>> {
        let levi = f.ctx.levi()?;
        let inner_rays = self.engine.extremal_rays(&levi.inner)?;
        let ri = levi.inner.g().rank();
        let face = self.face_equalities(f);
        let mut out = Vec::new();
        for ray in inner_rays.iter() {
            let nu: Vec<Q> = ray[..ri].iter().map(|x| Q::from_integer(x.clone())).collect();
            let nu_hat: Vec<Q> = ray[ri..].iter().map(|x| Q::from_integer(x.clone())).collect();
            let v = self.induction(f, &nu, &nu_hat)?;
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            let p = linalg::primitive(&v);
            if !self.cone.contains(&p) || face.iter().any(|e| !dot(e, &p).is_zero()) {
                return Err(Error::OracleMismatch(format!(
                    "induced vector {p:?} from face {} leaves the face",
                    f.provenance()
                )));
            }
            if self.cone.is_extremal(&p) && !out.contains(&p) {
                out.push(p);
            }
        }
        Ok(out)
    }

    fn compatible_contexts(&self) -> Result<&[Arc<DeltaContext>]> {
        if let Some(c) = self.compatible.get() {
            return Ok(c);
        }
        let cap = self.engine.budgets.weyl_cap;
        let mut out = Vec::new();
        for (i, d) in branching::compatible_ops(&self.emb, cap)?.iter().enumerate() {
            match self.contexts.iter().find(|c| &c.delta == d) {
                Some(c) => out.push(c.clone()),
                None => out.push(Arc::new(DeltaContext::new(i, &self.emb, d, cap)?)),
            }
        }
        Ok(self.compatible.get_or_init(|| out))
    }

    /// Regular faces from coweights of the larger set that are not already inequality coweights.
    /// In case B their inequalities are implied by [`Analysis::inequality_facets`].
    pub fn compatible_facets(&self) -> Result<Vec<FacetDatum>> {
        let mut out = Vec::new();
        for ctx in self.compatible_contexts()? {
            if self.contexts.iter().any(|c| c.delta == ctx.delta) {
                continue;
            }
            out.extend(facets_of(ctx)?);
        }
        Ok(out)
    }

    /// Decides for every `j` whether `(0, omegahat_j)` spans an extremal ray.
    pub fn fundamental_ray_tests(&self) -> Result<Vec<FundamentalTest>> {
        let rh = self.emb.g_hat().rank();
        let contexts: &[Arc<DeltaContext>] =
            if self.case == Case::B && self.emb.weight_sets_coincide()? { &self.contexts } else { self.compatible_contexts()? };
        // (covers, what, delta context) for every pair whose deformed pullback is the point class
        let mut pairs: Vec<(Vec<usize>, WeylElement, Arc<DeltaContext>)> = Vec::new();
        for ctx in contexts {
            let t = &ctx.table;
            if t.dim_g_hat_p_hat() < t.dim_g_p() {
                continue;
            }
            let target = t.dim_g_hat_p_hat() - t.dim_g_p();
            let gh = self.emb.g_hat();
            for u in ctx.hat_reps.iter().filter(|u| u.length() == target) {
                if !t.deformed_pullback(u)?.is_point_class() {
                    continue;
                }
                let covers: Vec<usize> = (0..rh)
                    .filter(|&i| {
                        let x = gh.mul(&gh.simple_reflection(i), u);
                        x.length() == u.length() + 1 && gh.is_min_coset_rep(&x, t.support_hat())
                    })
                    .collect();
                pairs.push((covers, u.clone(), ctx.clone()));
            }
        }
        let vacuous = pairs.is_empty();
        let mut out = Vec::new();
        for j in 0..rh {
            let mut test = FundamentalTest { index: j, accepted: true, rejected_by: None, pairs_checked: 0, vacuous };
            for (covers, u, ctx) in &pairs {
                if covers.iter().any(|&i| i != j) {
                    continue;
                }
                test.pairs_checked += 1;
                let image = u.act_coroot_int(&ctx.delta_hat_coroot);
                if image[j] > 0 {
                    test.accepted = false;
                    test.rejected_by = Some((u.clone(), ctx.delta.clone()));
                    break;
                }
            }
            out.push(test);
        }
        Ok(out)
    }

    /// Kernel dimension of induction against the count of type I data.
    pub fn dimension_count(&self, f: &FacetDatum) -> Result<DimensionCount> {
        let levi = f.ctx.levi()?;
        let (ri, rhi) = (levi.inner.g().rank(), levi.inner.g_hat().rank());
        let n = ri + rhi;
        let mut cols = Vec::with_capacity(n);
        for k in 0..n {
            let mut e = vec![Q::zero(); n];
            e[k] = Q::one();
            cols.push(self.induction(f, &e[..ri], &e[ri..])?);
        }
        let rank = linalg::rank_q(&cols, self.cone.dim);
        Ok(DimensionCount {
            kernel: n - rank,
            type_one: self.type_one_data(f).len(),
            r_hat: self.emb.g_hat().rank(),
            levi_hat_rank: rhi,
            levi_corank: self.emb.g().rank() - ri,
        })
    }

    /// Extremal rays from the formulas, certified and compared against double description.
    pub fn all_extremal_rays(&self) -> Result<Vec<RayVector>> {
        let r = self.r();
        let mut found: BTreeMap<Vector, Provenance> = BTreeMap::new();
        for (fi, f) in self.facets.iter().enumerate() {
            for cover in self.type_one_data(f) {
                let mut v = self.type_one_ray(f, &cover)?;
                linalg::gcd_normalize(&mut v);
                if !self.cone.is_extremal(&v) {
                    return Err(Error::OracleMismatch(format!(
                        "type I vector {v:?} from {} via {cover} is not extremal",
                        f.provenance()
                    )));
                }
                found.entry(v).or_insert(Provenance::TypeOne { facet: fi, cover });
            }
        }
        for (fi, f) in self.facets.iter().enumerate() {
            for v in self.type_two_rays(f)? {
                found.entry(v).or_insert(Provenance::TypeTwo { facet: fi });
            }
        }
        for t in self.fundamental_ray_tests()? {
            if !t.accepted {
                continue;
            }
            let v: Vector = (0..self.cone.dim).map(|k| BigInt::from(i64::from(k == r + t.index))).collect();
            if !self.cone.is_extremal(&v) {
                return Err(Error::OracleMismatch(format!("accepted fundamental vector {} is not extremal", t.index + 1)));
            }
            found.entry(v).or_insert(Provenance::Fundamental { index: t.index });
        }
        let oracle = self.oracle_rays();
        let formula: Vec<&Vector> = found.keys().collect();
        if formula.len() != oracle.len() || formula.iter().zip(&oracle).any(|(a, b)| *a != b) {
            let missing: Vec<&Vector> = oracle.iter().filter(|v| !found.contains_key(*v)).collect();
            let extra: Vec<&Vector> = formula.iter().filter(|v| !oracle.contains(v)).copied().collect();
            return Err(Error::OracleMismatch(format!(
                "{}: formula rays miss {missing:?} and add {extra:?}",
                self.emb.label()
            )));
        }
        Ok(found.into_iter().map(|(v, p)| RayVector::from_coords(v, r, p)).collect())
    }

    /// Extremal rays by double description alone.
    pub fn oracle_rays(&self) -> Vec<Vector> {
        let v = self.cone.vrep();
        debug_assert!(v.lineality.is_empty());
        v.rays
    }
}

/// Regular faces `(w, what)` attached to one coweight.
fn facets_of(ctx: &Arc<DeltaContext>) -> Result<Vec<FacetDatum>> {
    let t = &ctx.table;
    let g = t.embedding().g().clone();
    let mut out = Vec::new();
    for u in &ctx.hat_reps {
        if u.length() > t.dim_g_hat_p_hat() || t.dim_g_hat_p_hat() - u.length() > t.dim_g_p() {
            continue;
        }
        let pull = t.pullback(u)?;
        for (x, c) in &pull.terms {
            if !c.is_one() {
                continue;
            }
            let w = dual_element(&g, x, t.support());
            if !t.is_facet_pair(&w, u)? {
                continue;
            }
            let mut a = linalg::to_big(&w.act_coroot_int(&ctx.delta_coroot));
            let b = linalg::to_big(&u.act_coroot_int(&ctx.delta_hat_coroot));
            let split = a.len();
            a.extend(b);
            linalg::gcd_normalize(&mut a);
            let b = a.split_off(split);
            out.push(FacetDatum { ctx: ctx.clone(), w, w_hat: u.clone(), inequality: Inequality { a, b } });
        }
    }
    Ok(out)
}
