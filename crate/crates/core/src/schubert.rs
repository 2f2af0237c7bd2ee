//! Schubert calculus on `G/P` through divided differences.
//!
//! `P_w` denotes the BGG polynomial with `P_{w0} = prod(alpha) / |W|` and `A_i P_w = P_{w s_i}`
//! whenever `l(w s_i) < l(w)`. The Schubert variety `X_w` (for `w` in `W^P`) has complex
//! dimension `l(w)`; its class is represented by `P_{w0 w w0_P}`, so `[X_e]` is the point class.
//! The coefficient of `P_y` in a homogeneous polynomial `f` is `(A_y f)(0)`, which is unchanged
//! when `f` is altered by the ideal generated by invariants of positive degree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::branching::Embedding;
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::poly::{Coeff, Monomial, Polynomial};
use crate::root_datum::{Coweight, RootDatum, Weight};
use crate::weyl::WeylElement;

/// The divided difference `A_i f = (f - s_i f) / alpha_i`.
pub fn divided_difference<T: Coeff>(datum: &RootDatum, i: usize, f: &Polynomial<T>) -> Polynomial<T> {
    let n = datum.rank();
    let maxk = f.max_exponent(i) as usize;
    let mut out = Polynomial::zero(n);
    if maxk == 0 {
        return out;
    }
    // With y = omega_i and z = s_i y = -y - sum_{j != i} A_ij omega_j,
    // A_i(M y^k) = M * (y^{k-1} + y^{k-2} z + ... + z^{k-1}) for M free of y.
    let y: Polynomial<T> = Polynomial::var(n, i);
    let mut zc = vec![0i64; n];
    for (j, c) in zc.iter_mut().enumerate() {
        *c = if j == i { -1 } else { -datum.cartan()[i][j] };
    }
    let z: Polynomial<T> = Polynomial::linear(&zc);
    let mut h: Vec<Polynomial<T>> = vec![Polynomial::zero(n), Polynomial::one(n)];
    let mut zpow = z.clone();
    for k in 1..maxk {
        let next = &(&y * &h[k]) + &zpow;
        h.push(next);
        zpow = &zpow * &z;
    }
    for (m, c) in f.terms() {
        let k = m[i] as usize;
        if k == 0 {
            continue;
        }
        let mut base: Monomial = m.clone();
        base[i] = 0;
        out.add_shifted(&h[k], &base, c);
    }
    out
}

/// `A_y f` for `y` given by a reduced word, applying the rightmost letter first.
pub fn apply_word<T: Coeff>(datum: &RootDatum, word: &[usize], f: &Polynomial<T>) -> Polynomial<T> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        if g.is_zero() {
            break;
        }
        g = divided_difference(datum, i, &g);
    }
    g
}

/// Memoised numerators `D * P_w` descending from a chosen representative of the top class.
pub(crate) struct ClassTable {
    top: Polynomial<BigInt>,
    denom: BigInt,
    memo: RwLock<HashMap<Vec<usize>, Arc<Polynomial<BigInt>>>>,
}

impl ClassTable {
    fn new(datum: &RootDatum, top: Polynomial<BigInt>) -> Option<Self> {
        let d = apply_word(datum, datum.longest().word(), &top).constant_term();
        if d.is_zero() {
            return None;
        }
        Some(ClassTable { top, denom: d, memo: RwLock::new(HashMap::new()) })
    }

    fn numerator(&self, datum: &RootDatum, w: &WeylElement) -> Arc<Polynomial<BigInt>> {
        if let Some(p) = self.memo.read().unwrap().get(w.word()) {
            return p.clone();
        }
        let full = datum.rank();
        let mut chain: Vec<(WeylElement, usize)> = Vec::new();
        let mut cur = w.clone();
        let mut base: Option<Arc<Polynomial<BigInt>>> = None;
        loop {
            if let Some(p) = self.memo.read().unwrap().get(cur.word()) {
                base = Some(p.clone());
                break;
            }
            if cur.length() == datum.num_positive_roots() {
                break;
            }
            let descents = datum.right_descents(&cur);
            let i = (0..full).find(|i| !descents.contains(i)).expect("non-longest element has an ascent");
            let next = datum.mul(&cur, &datum.simple_reflection(i));
            chain.push((cur, i));
            cur = next;
        }
        let mut p = base.unwrap_or_else(|| Arc::new(self.top.clone()));
        for (elem, i) in chain.into_iter().rev() {
            let next = Arc::new(divided_difference(datum, i, &p));
            self.memo.write().unwrap().insert(elem.word().to_vec(), next.clone());
            p = next;
        }
        p
    }
}

#[derive(Default)]
pub(crate) struct BggCache {
    canonical: OnceLock<ClassTable>,
    compact: OnceLock<ClassTable>,
}

fn product_of_positive_roots(datum: &RootDatum) -> Polynomial<BigInt> {
    let n = datum.rank();
    let mut p = Polynomial::one(n);
    for e in datum.positive_roots() {
        p = &p * &Polynomial::linear(&e.omega);
    }
    p
}

fn canonical_table(datum: &RootDatum) -> &ClassTable {
    let cache = datum.bgg_cache.get_or_init(BggCache::default);
    cache.canonical.get_or_init(|| {
        ClassTable::new(datum, product_of_positive_roots(datum)).expect("product of positive roots is not in the ideal")
    })
}

/// A representative of the point class with as few terms as possible: a single monomial.
fn compact_table(datum: &RootDatum) -> &ClassTable {
    let cache = datum.bgg_cache.get_or_init(BggCache::default);
    cache.compact.get_or_init(|| {
        let top = product_of_positive_roots(datum);
        let n = datum.rank();
        let mut monos: Vec<&Monomial> = top.terms().map(|(m, _)| m).collect();
        monos.sort_by(|a, b| b.iter().max().cmp(&a.iter().max()).then_with(|| b.cmp(a)));
        for m in monos {
            let mut p = Polynomial::zero(n);
            p.add_term(m.clone(), BigInt::one());
            if let Some(t) = ClassTable::new(datum, p) {
                return t;
            }
        }
        ClassTable::new(datum, top).expect("product of positive roots is not in the ideal")
    })
}

/// The BGG polynomial `P_w` with rational coefficients.
pub fn bgg_polynomial(datum: &RootDatum, w: &WeylElement) -> Polynomial<Q> {
    let t = canonical_table(datum);
    let d = Q::from_integer(t.denom.clone());
    t.numerator(datum, w).map_coeffs(|c| Q::from_integer(c.clone()) / &d)
}

/// `|W| * P_w` as an integer polynomial, together with `|W|`.
pub fn bgg_numerator(datum: &RootDatum, w: &WeylElement) -> (Arc<Polynomial<BigInt>>, BigInt) {
    let t = canonical_table(datum);
    (t.numerator(datum, w), t.denom.clone())
}

/// The element whose BGG polynomial represents `[X_w]` in `H^*(G/P)`.
pub fn class_index(datum: &RootDatum, w: &WeylElement, support: &[usize]) -> WeylElement {
    let w0 = datum.longest();
    let w0p = datum.longest_element(support);
    datum.mul(&datum.mul(&w0, w), &w0p)
}

/// Polynomial representative of the Schubert class `[X_w]` of `G/P`.
pub fn class_polynomial(datum: &RootDatum, w: &WeylElement, support: &[usize]) -> Polynomial<Q> {
    bgg_polynomial(datum, &class_index(datum, w, support))
}

/// The Poincare dual partner `w0 w w0_P` of `w` in `W^P`.
pub fn dual_element(datum: &RootDatum, w: &WeylElement, support: &[usize]) -> WeylElement {
    class_index(datum, w, support)
}

/// A cohomology class of `G/P` in the Schubert basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertClass {
    pub support: Vec<usize>,
    pub terms: BTreeMap<WeylElement, Q>,
}

impl SchubertClass {
    pub fn zero(support: &[usize]) -> Self {
        SchubertClass { support: support.to_vec(), terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &WeylElement) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    /// Whether the class is exactly `[X_e]`.
    pub fn is_point_class(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(w, c)| w.is_identity() && c.is_one())
    }

    pub fn format(&self, suffix: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let name = if w.is_identity() { "e".to_string() } else { w.format(suffix) };
                format!("{c}*[X_{{{name}}}]")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(""))
    }
}

/// Expands a homogeneous polynomial (modulo the invariant ideal) in the Schubert basis of `G/P`.
pub fn expand_in_schubert(
    datum: &RootDatum,
    f: &Polynomial<Q>,
    support: &[usize],
    weyl_cap: usize,
) -> Result<SchubertClass> {
    let mut class = SchubertClass::zero(support);
    let Some(deg) = f.degree() else { return Ok(class) };
    if !f.is_homogeneous() {
        return Err(Error::InvalidArgument("expand_in_schubert needs a homogeneous polynomial".into()));
    }
    let dim = datum.parabolic_dim(support);
    if deg > dim {
        return Ok(class);
    }
    for x in datum.min_coset_reps(support, weyl_cap)? {
        if x.length() + deg != dim {
            continue;
        }
        let y = class_index(datum, &x, support);
        let c = apply_word(datum, y.word(), f).constant_term();
        if !c.is_zero() {
            class.terms.insert(x, c);
        }
    }
    Ok(class)
}

/// Coefficient of `[X_target]` in `[X_u] * [X_v]` in `H^*(G/P)`.
pub fn cup_coefficient(
    datum: &RootDatum,
    u: &WeylElement,
    v: &WeylElement,
    target: &WeylElement,
    support: &[usize],
) -> Q {
    let dim = datum.parabolic_dim(support);
    if (dim - u.length()) + (dim - v.length()) != dim - target.length() {
        return Q::zero();
    }
    let pu = class_polynomial(datum, u, support);
    let pv = class_polynomial(datum, v, support);
    let y = class_index(datum, target, support);
    apply_word(datum, y.word(), &(&pu * &pv)).constant_term()
}

/// `chi_w = rho - 2 rho_L + w^{-1} rho`, restricted to `P` through the Levi roots in `support`.
pub fn chi_weight(datum: &RootDatum, w: &WeylElement, support: &[usize]) -> Weight {
    let winv = datum.inverse(w);
    let wr = winv.act_int(&vec![1; datum.rank()]);
    let two_rho_l = datum.two_rho_levi(support);
    Weight::new((0..datum.rank()).map(|i| q(1 - two_rho_l[i] + wr[i])).collect())
}

/// Pullbacks `phi^*[Xhat_u]` for one coweight, sharing restricted monomials between calls.
pub struct PullbackTable {
    emb: Embedding,
    delta: Coweight,
    support: Vec<usize>,
    support_hat: Vec<usize>,
    dim_gp: usize,
    dim_ghp: usize,
    reps: Vec<WeylElement>,
    restricted: Mutex<HashMap<Monomial, Arc<Polynomial<BigInt>>>>,
    memo: RwLock<HashMap<Vec<usize>, Arc<SchubertClass>>>,
}

impl PullbackTable {
    /// `emb` must carry `delta` to a dominant coweight of `Ghat`.
    pub fn new(emb: &Embedding, delta: &Coweight, weyl_cap: usize) -> Result<Self> {
        let image = emb.map_coweight(delta);
        if !delta.is_dominant() {
            return Err(Error::InvalidArgument(format!("coweight {delta} is not dominant")));
        }
        if !image.is_dominant() {
            return Err(Error::InvalidArgument(format!(
                "image {image} of {delta} is not dominant; standardize the embedding first"
            )));
        }
        let support = delta.stabilizer_support();
        let support_hat = image.stabilizer_support();
        let g = emb.g();
        let reps = g.min_coset_reps(&support, weyl_cap)?;
        emb.g_hat().weyl_elements(weyl_cap)?;
        Ok(PullbackTable {
            dim_gp: g.parabolic_dim(&support),
            dim_ghp: emb.g_hat().parabolic_dim(&support_hat),
            emb: emb.clone(),
            delta: delta.clone(),
            support,
            support_hat,
            reps,
            restricted: Mutex::new(HashMap::new()),
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }
    pub fn delta(&self) -> &Coweight {
        &self.delta
    }
    pub fn support(&self) -> &[usize] {
        &self.support
    }
    pub fn support_hat(&self) -> &[usize] {
        &self.support_hat
    }
    pub fn dim_g_p(&self) -> usize {
        self.dim_gp
    }
    pub fn dim_g_hat_p_hat(&self) -> usize {
        self.dim_ghp
    }
    /// `W^P`, sorted by length then word.
    pub fn reps(&self) -> &[WeylElement] {
        &self.reps
    }

    fn restrict_monomial(&self, m: &Monomial) -> Arc<Polynomial<BigInt>> {
        if let Some(p) = self.restricted.lock().unwrap().get(m) {
            return p.clone();
        }
        let r = self.emb.g().rank();
        let p = match m.iter().position(|&e| e > 0) {
            None => Arc::new(Polynomial::one(r)),
            Some(j) => {
                let mut prev = m.clone();
                prev[j] -= 1;
                let base = self.restrict_monomial(&prev);
                let form: Polynomial<BigInt> = Polynomial::linear(&self.emb.restriction_forms()[j]);
                Arc::new(&*base * &form)
            }
        };
        self.restricted.lock().unwrap().insert(m.clone(), p.clone());
        p
    }

    /// `phi^*[Xhat_u]` for `u` in `What^Phat`.
    pub fn pullback(&self, u: &WeylElement) -> Result<Arc<SchubertClass>> {
        if let Some(c) = self.memo.read().unwrap().get(u.word()) {
            return Ok(c.clone());
        }
        let gh = self.emb.g_hat();
        if !gh.is_min_coset_rep(u, &self.support_hat) {
            return Err(Error::InvalidArgument(format!("{} is not a minimal coset representative", u.format("^"))));
        }
        let deg = self.dim_ghp - u.length();
        let mut class = SchubertClass::zero(&self.support);
        if deg <= self.dim_gp {
            let y = class_index(gh, u, &self.support_hat);
            let table = compact_table(gh);
            let num = table.numerator(gh, &y);
            let r = self.emb.g().rank();
            let mut restricted: Polynomial<BigInt> = Polynomial::zero(r);
            for (m, c) in num.terms() {
                let rm = self.restrict_monomial(m);
                restricted.add_shifted(&rm, &vec![0; r], c);
            }
            let g = self.emb.g();
            for x in &self.reps {
                if x.length() + deg != self.dim_gp {
                    continue;
                }
                let yx = class_index(g, x, &self.support);
                let c = apply_word(g, yx.word(), &restricted).constant_term();
                if c.is_zero() {
                    continue;
                }
                let val = Q::new(c, table.denom.clone());
                if !val.is_integer() {
                    return Err(Error::Internal(format!("non-integral pullback coefficient {val}")));
                }
                class.terms.insert(x.clone(), val);
            }
        }
        let class = Arc::new(class);
        self.memo.write().unwrap().insert(u.word().to_vec(), class.clone());
        Ok(class)
    }

    /// `<rho + x^{-1} rho, delta> - <rhohat + u^{-1} rhohat, phi(delta)>`.
    pub fn deformation_exponent(&self, x: &WeylElement, u: &WeylElement) -> Q {
        let g = self.emb.g();
        let gh = self.emb.g_hat();
        let image = self.emb.map_coweight(&self.delta);
        let lhs = g.pair(&g.rho().add(&g.inverse(x).act_weight(&g.rho())), &self.delta);
        let rhs = gh.pair(&gh.rho().add(&gh.inverse(u).act_weight(&gh.rho())), &image);
        lhs - rhs
    }

    /// The deformed pullback: terms of `phi^*[Xhat_u]` whose deformation exponent vanishes.
    pub fn deformed_pullback(&self, u: &WeylElement) -> Result<SchubertClass> {
        let full = self.pullback(u)?;
        let mut out = SchubertClass::zero(&self.support);
        for (x, c) in &full.terms {
            if self.deformation_exponent(x, u).is_zero() {
                out.terms.insert(x.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// `<rho + w^{-1} rho, delta> - <2 rho, delta> + <rhohat + u^{-1} rhohat, phi(delta)>`.
    pub fn bk_numeric(&self, w: &WeylElement, u: &WeylElement) -> Q {
        let g = self.emb.g();
        let gh = self.emb.g_hat();
        let image = self.emb.map_coweight(&self.delta);
        let rho = g.rho();
        let a = g.pair(&rho.add(&g.inverse(w).act_weight(&rho)), &self.delta);
        let b = g.pair(&rho.scale(&q(2)), &self.delta);
        let c = gh.pair(&gh.rho().add(&gh.inverse(u).act_weight(&gh.rho())), &image);
        a - b + c
    }

    /// Coefficient of `[X_e]` in `[X_w] * phi^*[Xhat_u]`.
    pub fn point_coefficient(&self, w: &WeylElement, u: &WeylElement) -> Result<Q> {
        if w.length() + u.length() != self.dim_ghp {
            return Ok(Q::zero());
        }
        let dual = dual_element(self.emb.g(), w, &self.support);
        Ok(self.pullback(u)?.coefficient(&dual))
    }

    /// Whether `[X_w] . phi^*[Xhat_u] = [X_e]` in the deformed product, checked two ways.
    pub fn is_facet_pair(&self, w: &WeylElement, u: &WeylElement) -> Result<bool> {
        if w.length() + u.length() != self.dim_ghp {
            return Ok(false);
        }
        let one = self.point_coefficient(w, u)?.is_one();
        let bk = self.bk_numeric(w, u);
        let collapsed = one && bk.is_zero();
        let dual = dual_element(self.emb.g(), w, &self.support);
        let two_stage = self.deformed_pullback(u)?.coefficient(&dual).is_one();
        if one && self.deformation_exponent(&dual, u) != -bk.clone() {
            return Err(Error::Internal("deformation exponent disagrees with the product criterion".into()));
        }
        if collapsed != two_stage {
            return Err(Error::Internal(format!(
                "facet tests disagree for ({}, {})",
                w,
                u.format("^")
            )));
        }
        Ok(collapsed)
    }
}

/// `phi^*[Xhat_u]` for an embedding sending `delta` to a dominant coweight.
pub fn pullback(emb: &Embedding, u: &WeylElement, delta: &Coweight, weyl_cap: usize) -> Result<SchubertClass> {
    Ok(PullbackTable::new(emb, delta, weyl_cap)?.pullback(u)?.as_ref().clone())
}

/// Pullback computed through the canonical BGG polynomials and rational arithmetic.
pub fn pullback_reference(emb: &Embedding, u: &WeylElement, delta: &Coweight, weyl_cap: usize) -> Result<SchubertClass> {
    let image = emb.map_coweight(delta);
    let support = delta.stabilizer_support();
    let support_hat = image.stabilizer_support();
    let gh = emb.g_hat();
    let f = class_polynomial(gh, u, &support_hat);
    let forms: Vec<Vec<i64>> = emb.restriction_forms().to_vec();
    let restricted = f.substitute_linear(&forms, emb.g().rank());
    expand_in_schubert(emb.g(), &restricted, &support, weyl_cap)
}
