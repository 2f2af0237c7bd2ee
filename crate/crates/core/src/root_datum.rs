//! Cartan matrices, roots, weights and coweights.
//!
//! Conventions: `A[i][j] = <alpha_i, alpha_j^vee>`. Weights are written in the basis of
//! fundamental weights, coweights in the basis of fundamental coweights `x_j`
//! (dual to the simple roots). Coroot coordinates of a coweight `d` are `A^{-1} d`,
//! and in those coordinates the pairing with a weight is the plain dot product.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};
use crate::schubert::BggCache;
use crate::weyl::WeylElement;

/// Weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Q>,
}

/// Coweight in fundamental-coweight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight {
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight { coords }
    }
    pub fn from_ints(v: &[i64]) -> Self {
        Weight { coords: linalg::to_q(v) }
    }
    pub fn zero(r: usize) -> Self {
        Weight { coords: vec![Q::zero(); r] }
    }
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        linalg::integral_i64(&self.coords)
    }
    pub fn add(&self, other: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }
    pub fn sub(&self, other: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }
    pub fn scale(&self, c: &Q) -> Weight {
        Weight { coords: self.coords.iter().map(|a| a * c).collect() }
    }
}

impl Coweight {
    pub fn new(coords: Vec<Q>) -> Self {
        Coweight { coords }
    }
    pub fn from_ints(v: &[i64]) -> Self {
        Coweight { coords: linalg::to_q(v) }
    }
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        linalg::integral_i64(&self.coords)
    }
    /// Indices `i` with `alpha_i(d) = 0`.
    pub fn stabilizer_support(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| self.coords[i].is_zero()).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vec(f, &self.coords)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vec(f, &self.coords)
    }
}

fn write_vec(f: &mut fmt::Formatter<'_>, v: &[Q]) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

/// A positive root in three coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEntry {
    /// Coefficients on the simple roots.
    pub simple: Vec<i64>,
    /// Fundamental-weight coordinates.
    pub omega: Vec<i64>,
    /// The coroot, as coefficients on the simple coroots.
    pub coroot: Vec<i64>,
}

/// A simply connected semisimple root datum given by its Cartan matrix.
pub struct RootDatum {
    label: String,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Q>>,
    symmetrizer: Vec<Q>,
    positive_roots: Vec<RootEntry>,
    height_form: Vec<i64>,
    components: Vec<Vec<usize>>,
    pub(crate) weyl_cache: OnceLock<Vec<WeylElement>>,
    pub(crate) bgg_cache: OnceLock<BggCache>,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum").field("label", &self.label).field("cartan", &self.cartan).finish()
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

const ROOT_CAP: usize = 20_000;

impl RootDatum {
    /// Parses descriptors like `A3`, `C2`, `D4`, `A1xA1`.
    pub fn from_descriptor(desc: &str) -> Result<RootDatum> {
        let cleaned: String = desc.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::UnknownDescriptor(desc.to_string()));
        }
        let parts: Vec<&str> = cleaned.split(['x', 'X', '×', '*']).collect();
        let mut blocks = Vec::new();
        for p in &parts {
            blocks.push(simple_cartan(p).ok_or_else(|| Error::UnknownDescriptor(desc.to_string()))?);
        }
        let m = block_diag(&blocks);
        let label = parts.iter().map(|p| p.to_uppercase()).collect::<Vec<_>>().join("x");
        RootDatum::build(m, label)
    }

    /// Builds a datum from an explicit Cartan matrix, validating it is of finite type.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<RootDatum> {
        if cartan.is_empty() {
            return Err(Error::InvalidCartan("rank 0".into()));
        }
        RootDatum::build(cartan, String::new())
    }

    /// The rank-zero datum of the trivial group.
    pub fn trivial() -> RootDatum {
        RootDatum::build(Vec::new(), "1".into()).expect("trivial datum")
    }

    pub fn product(factors: &[&RootDatum]) -> Result<RootDatum> {
        let blocks: Vec<Vec<Vec<i64>>> = factors.iter().map(|d| d.cartan.clone()).collect();
        let label = factors.iter().map(|d| d.label.clone()).collect::<Vec<_>>().join("x");
        RootDatum::build(block_diag(&blocks), label)
    }

    pub(crate) fn build(cartan: Vec<Vec<i64>>, label: String) -> Result<RootDatum> {
        let r = cartan.len();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidCartan("matrix is not square".into()));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..r {
                if i != j {
                    if row[j] > 0 {
                        return Err(Error::InvalidCartan(format!("positive off-diagonal entry at ({i},{j})")));
                    }
                    if (row[j] == 0) != (cartan[j][i] == 0) {
                        return Err(Error::InvalidCartan(format!("zero pattern not symmetric at ({i},{j})")));
                    }
                }
            }
        }
        let components = connected_components(&cartan);
        let symmetrizer = symmetrize(&cartan, &components)?;
        let sym: Vec<Vec<Q>> =
            (0..r).map(|i| (0..r).map(|j| q(cartan[i][j]) * &symmetrizer[j]).collect()).collect();
        for k in 1..=r {
            let minor: Vec<Vec<Q>> = sym[..k].iter().map(|row| row[..k].to_vec()).collect();
            if !linalg::determinant(&minor).is_positive() {
                return Err(Error::InvalidCartan("not of finite type".into()));
            }
        }
        let cartan_inv = if r == 0 {
            Vec::new()
        } else {
            linalg::inverse(&linalg::mat_q(&cartan)).ok_or_else(|| Error::InvalidCartan("singular".into()))?
        };
        let positive_roots = generate_roots(&cartan)?;
        let hf: Vec<Q> = (0..r).map(|j| (0..r).fold(Q::zero(), |acc, i| acc + &cartan_inv[j][i])).collect();
        let height_form = linalg::big_to_i64(&linalg::primitive(&hf)).expect("small height form");
        let label = if label.is_empty() { format!("cartan{cartan:?}") } else { label };
        Ok(RootDatum {
            label,
            cartan,
            cartan_inv,
            symmetrizer,
            positive_roots,
            height_form,
            components,
            weyl_cache: OnceLock::new(),
            bgg_cache: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }
    pub fn cartan_inverse(&self) -> &[Vec<Q>] {
        &self.cartan_inv
    }
    pub fn positive_roots(&self) -> &[RootEntry] {
        &self.positive_roots
    }
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }
    /// Connected components of the Dynkin diagram, as sorted index lists.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }
    /// `(alpha_i, alpha_i) / 2` for the invariant form normalised per component.
    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    /// Simple root `alpha_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::from_ints(&self.cartan[i])
    }
    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }
    /// Simple coroot `alpha_j^vee` in fundamental-coweight coordinates.
    pub fn simple_coroot(&self, j: usize) -> Coweight {
        Coweight::from_ints(&(0..self.rank()).map(|i| self.cartan[i][j]).collect::<Vec<_>>())
    }
    pub fn simple_coroots(&self) -> Vec<Coweight> {
        (0..self.rank()).map(|j| self.simple_coroot(j)).collect()
    }
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Weight::from_ints(&v)
    }
    pub fn rho(&self) -> Weight {
        Weight::from_ints(&vec![1; self.rank()])
    }

    /// `<lambda, d>` for a weight and a coweight.
    pub fn pair(&self, lambda: &Weight, d: &Coweight) -> Q {
        linalg::dot_q(&lambda.coords, &self.coroot_coords(d))
    }

    /// Coroot coordinates `A^{-1} d` of a coweight.
    pub fn coroot_coords(&self, d: &Coweight) -> Vec<Q> {
        linalg::mat_vec(&self.cartan_inv, &d.coords)
    }

    /// Coweight with the given coroot coordinates.
    pub fn coweight_from_coroot(&self, c: &[Q]) -> Coweight {
        Coweight { coords: linalg::mat_vec(&linalg::mat_q(&self.cartan), c) }
    }

    pub fn coweight_from_coroot_ints(&self, c: &[i64]) -> Coweight {
        Coweight::from_ints(&linalg::mat_vec_i64(&self.cartan, c))
    }

    /// Whether a coweight lies in the coroot lattice (the one-parameter subgroups of the torus).
    pub fn is_coroot_lattice(&self, d: &Coweight) -> bool {
        self.coroot_coords(d).iter().all(|c| c.is_integer())
    }

    /// Root-lattice coordinates of a weight, `A^{-T} lambda`.
    pub fn root_coords(&self, lambda: &Weight) -> Vec<Q> {
        let r = self.rank();
        (0..r)
            .map(|k| (0..r).fold(Q::zero(), |acc, j| acc + &self.cartan_inv[j][k] * &lambda.coords[j]))
            .collect()
    }

    /// A positive multiple of the height functional on integral weights.
    pub fn height_scaled(&self, lambda: &[i64]) -> i64 {
        self.height_form.iter().zip(lambda).map(|(a, b)| a * b).sum()
    }

    /// The invariant form on fundamental weights, `(omega_i, omega_k)`.
    pub fn weight_form(&self) -> Vec<Vec<Q>> {
        let r = self.rank();
        (0..r).map(|i| (0..r).map(|k| &self.cartan_inv[k][i] * &self.symmetrizer[i]).collect()).collect()
    }

    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Q {
        let f = self.weight_form();
        let mut acc = Q::zero();
        for (i, x) in a.coords.iter().enumerate() {
            for (k, y) in b.coords.iter().enumerate() {
                acc += x * y * &f[i][k];
            }
        }
        acc
    }

    /// All roots (both signs) in fundamental-weight coordinates.
    pub fn all_roots_omega(&self) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = self.positive_roots.iter().map(|e| e.omega.clone()).collect();
        v.extend(self.positive_roots.iter().map(|e| e.omega.iter().map(|x| -x).collect()));
        v
    }

    /// The sub-datum on an index subset, in the given order.
    pub fn sub_datum(&self, support: &[usize]) -> RootDatum {
        let m: Vec<Vec<i64>> = support.iter().map(|&i| support.iter().map(|&j| self.cartan[i][j]).collect()).collect();
        let label = if support.is_empty() { "1".to_string() } else { format!("{}[{:?}]", self.label, support) };
        RootDatum::build(m, label).expect("principal submatrix of a finite Cartan matrix")
    }

    /// `rho_L` for the Levi with the given simple roots, in fundamental-weight coordinates (times 2).
    pub fn two_rho_levi(&self, support: &[usize]) -> Vec<i64> {
        let mut acc = vec![0i64; self.rank()];
        for e in &self.positive_roots {
            if e.simple.iter().enumerate().all(|(k, &c)| c == 0 || support.contains(&k)) {
                for (a, b) in acc.iter_mut().zip(&e.omega) {
                    *a += b;
                }
            }
        }
        acc
    }

    /// Dimension of `G/P` for `P` with the given simple roots.
    pub fn parabolic_dim(&self, support: &[usize]) -> usize {
        self.positive_roots
            .iter()
            .filter(|e| !e.simple.iter().enumerate().all(|(k, &c)| c == 0 || support.contains(&k)))
            .count()
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, lambda: &[i64]) -> BigInt {
        let mut num = Q::from_integer(1.into());
        for e in &self.positive_roots {
            let a: i64 = e.coroot.iter().zip(lambda).map(|(c, l)| c * (l + 1)).sum();
            let b: i64 = e.coroot.iter().sum();
            num = num * linalg::qfrac(a, b);
        }
        num.to_integer()
    }
}

fn simple_cartan(desc: &str) -> Option<Vec<Vec<i64>>> {
    let mut chars = desc.chars();
    let t = chars.next()?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().ok()?;
    let min = match t {
        'A' => 1,
        'B' | 'C' => 2,
        'D' => 4,
        _ => return None,
    };
    if n < min || n > 16 {
        return None;
    }
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    match t {
        'B' => m[n - 2][n - 1] = -2,
        'C' => m[n - 1][n - 2] = -2,
        'D' => {
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
        }
        _ => {}
    }
    Some(m)
}

fn block_diag(blocks: &[Vec<Vec<i64>>]) -> Vec<Vec<i64>> {
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    let mut m = vec![vec![0i64; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    m
}

fn connected_components(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let r = a.len();
    let mut seen = vec![false; r];
    let mut comps = Vec::new();
    for s in 0..r {
        if seen[s] {
            continue;
        }
        let mut comp = vec![];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(i) = queue.pop_front() {
            comp.push(i);
            for j in 0..r {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Finds `d` with `A[i][j] d[j] = A[j][i] d[i]`, normalised so the shortest root in each component has `d = 1`.
fn symmetrize(a: &[Vec<i64>], comps: &[Vec<usize>]) -> Result<Vec<Q>> {
    let r = a.len();
    let mut d: Vec<Option<Q>> = vec![None; r];
    for comp in comps {
        d[comp[0]] = Some(q(1));
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().unwrap();
            for j in 0..r {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = di.clone() * q(a[j][i]) / q(a[i][j]);
                match &d[j] {
                    Some(x) if *x != dj => return Err(Error::InvalidCartan("not symmetrizable".into())),
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                }
            }
        }
        let min = comp.iter().map(|&i| d[i].clone().unwrap()).min().unwrap();
        for &i in comp {
            d[i] = Some(d[i].clone().unwrap() / &min);
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap()).collect())
}

fn generate_roots(a: &[Vec<i64>]) -> Result<Vec<RootEntry>> {
    let r = a.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut coroot_of: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0i64; r];
        e[i] = 1;
        seen.insert(e.clone());
        coroot_of.insert(e.clone(), e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        let cb = coroot_of[&beta].clone();
        for i in 0..r {
            // <beta, alpha_i^vee> and <alpha_i, beta^vee>
            let p: i64 = (0..r).map(|j| beta[j] * a[j][i]).sum();
            let pc: i64 = (0..r).map(|j| cb[j] * a[i][j]).sum();
            let mut nb = beta.clone();
            nb[i] -= p;
            let mut nc = cb.clone();
            nc[i] -= pc;
            let (nb, nc) = if nb.iter().all(|&x| x <= 0) {
                (nb.iter().map(|x| -x).collect::<Vec<_>>(), nc.iter().map(|x| -x).collect())
            } else {
                (nb, nc)
            };
            if nb.iter().any(|&x| x < 0) {
                return Err(Error::InvalidCartan("mixed-sign root".into()));
            }
            if seen.insert(nb.clone()) {
                if seen.len() > ROOT_CAP {
                    return Err(Error::InvalidCartan("root system is not finite".into()));
                }
                coroot_of.insert(nb.clone(), nc);
                queue.push_back(nb);
            }
        }
    }
    let mut roots: Vec<RootEntry> = seen
        .into_iter()
        .map(|s| {
            let omega = (0..r).map(|j| (0..r).map(|k| s[k] * a[k][j]).sum()).collect();
            let coroot = coroot_of[&s].clone();
            RootEntry { simple: s, omega, coroot }
        })
        .collect();
    roots.sort_by(|x, y| {
        let hx: i64 = x.simple.iter().sum();
        let hy: i64 = y.simple.iter().sum();
        hx.cmp(&hy).then_with(|| y.simple.cmp(&x.simple))
    });
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        for (d, n) in [("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("C3", 9), ("D4", 12), ("A1xA1", 2), ("A5", 15)] {
            assert_eq!(RootDatum::from_descriptor(d).unwrap().num_positive_roots(), n, "{d}");
        }
    }

    #[test]
    fn c2_roots_and_lengths() {
        let c2 = RootDatum::from_descriptor("C2").unwrap();
        let simple: Vec<Vec<i64>> = c2.positive_roots().iter().map(|e| e.simple.clone()).collect();
        assert!(simple.contains(&vec![2, 1]));
        assert_eq!(c2.symmetrizer(), &[q(1), q(2)]);
        // the coroot of 2a1 + a2 is a1^v + a2^v
        let e = c2.positive_roots().iter().find(|e| e.simple == vec![2, 1]).unwrap();
        assert_eq!(e.coroot, vec![1, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RootDatum::from_descriptor("E9").is_err());
        assert!(RootDatum::from_descriptor("A0").is_err());
        assert!(RootDatum::from_cartan(vec![]).is_err());
        assert!(RootDatum::from_cartan(vec![vec![2, -1], vec![-4, 2]]).is_err());
        assert!(RootDatum::from_cartan(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(RootDatum::from_cartan(vec![vec![2, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn pairing_and_coordinates() {
        let a1 = RootDatum::from_descriptor("A1").unwrap();
        assert_eq!(a1.pair(&a1.fundamental_weight(0), &a1.simple_coroot(0)), q(1));
        let c2 = RootDatum::from_descriptor("C2").unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let p = c2.pair(&c2.simple_root(i), &c2.simple_coroot(j));
                assert_eq!(p, q(c2.cartan()[i][j]));
            }
        }
        assert_eq!(c2.weyl_dimension(&[1, 0]), BigInt::from(4));
        assert_eq!(c2.weyl_dimension(&[0, 1]), BigInt::from(5));
        let a3 = RootDatum::from_descriptor("A3").unwrap();
        assert_eq!(a3.weyl_dimension(&[1, 1, 1]), BigInt::from(64));
    }

    #[test]
    fn weight_form_matches_root_lengths() {
        let c3 = RootDatum::from_descriptor("C3").unwrap();
        for i in 0..3 {
            let a = c3.simple_root(i);
            assert_eq!(c3.inner_product(&a, &a), q(2) * &c3.symmetrizer()[i]);
        }
    }
}
