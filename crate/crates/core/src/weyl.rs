//! Weyl group elements, reduced words, cosets and Bruhat covers.
//!
//! An element is stored through its action matrices on fundamental-weight coordinates and
//! on coroot coordinates. Its canonical name is the lexicographically least reduced word,
//! read left to right and acting rightmost first.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};
use crate::root_datum::{Coweight, RootDatum, Weight};

#[derive(Clone, Debug)]
pub struct WeylElement {
    mat: Vec<Vec<i64>>,
    comat: Vec<Vec<i64>>,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}
impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}
impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }
    /// Lexicographically least reduced word, 0-based indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }
    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
    /// Action matrix on fundamental-weight coordinates.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.mat
    }
    /// Action matrix on coroot coordinates.
    pub fn comatrix(&self) -> &[Vec<i64>] {
        &self.comat
    }
    pub fn act_int(&self, lambda: &[i64]) -> Vec<i64> {
        linalg::mat_vec_i64(&self.mat, lambda)
    }
    pub fn act_weight(&self, lambda: &Weight) -> Weight {
        Weight::new(linalg::mat_vec(&linalg::mat_q(&self.mat), &lambda.coords))
    }
    pub fn act_coroot_int(&self, c: &[i64]) -> Vec<i64> {
        linalg::mat_vec_i64(&self.comat, c)
    }
    pub fn act_coroot(&self, c: &[Q]) -> Vec<Q> {
        linalg::mat_vec(&linalg::mat_q(&self.comat), c)
    }
    /// Formats as `s1 s2 s1`, with `e` for the identity and an optional suffix per letter.
    pub fn format(&self, suffix: &str) -> String {
        if self.word.is_empty() {
            return format!("e{suffix}");
        }
        self.word.iter().map(|i| format!("s{}{}", i + 1, suffix)).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(""))
    }
}

fn identity_matrix(r: usize) -> Vec<Vec<i64>> {
    (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect()
}

impl RootDatum {
    pub fn identity(&self) -> WeylElement {
        let r = self.rank();
        WeylElement { mat: identity_matrix(r), comat: identity_matrix(r), word: vec![] }
    }

    fn reflection_matrices(&self, i: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let a = self.cartan();
        let r = self.rank();
        let mut m = identity_matrix(r);
        let mut c = identity_matrix(r);
        for j in 0..r {
            m[j][i] -= a[i][j];
            c[i][j] -= a[i][j];
        }
        (m, c)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let (mat, comat) = self.reflection_matrices(i);
        WeylElement { mat, comat, word: vec![i] }
    }

    /// Canonicalises a pair of action matrices.
    fn from_matrices(&self, mat: Vec<Vec<i64>>, comat: Vec<Vec<i64>>) -> WeylElement {
        let a = self.cartan();
        let mut v: Vec<i64> = mat.iter().map(|row| row.iter().sum()).collect();
        let mut word = Vec::new();
        while let Some(i) = (0..v.len()).find(|&i| v[i] < 0) {
            word.push(i);
            let vi = v[i];
            for j in 0..v.len() {
                v[j] -= vi * a[i][j];
            }
        }
        WeylElement { mat, comat, word }
    }

    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let r = self.rank();
        let mut mat = identity_matrix(r);
        let mut comat = identity_matrix(r);
        for &i in word {
            if i >= r {
                return Err(Error::InvalidArgument(format!("letter s{} out of range for rank {r}", i + 1)));
            }
            let (m, c) = self.reflection_matrices(i);
            mat = linalg::mat_mul_i64(&mat, &m);
            comat = linalg::mat_mul_i64(&comat, &c);
        }
        Ok(self.from_matrices(mat, comat))
    }

    /// Parses words like `s2 s1 s2`, `s2^ s1^`, `s2s1` or `e` (1-based letters).
    pub fn parse_word(&self, text: &str) -> Result<WeylElement> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "e^" || t == "1" {
            return Ok(self.identity());
        }
        let mut word = Vec::new();
        for tok in t.split(|c: char| c == 's' || c.is_whitespace() || c == '^' || c == '_' || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let k: usize = tok.parse().map_err(|_| Error::InvalidArgument(format!("bad word `{text}`")))?;
            if k == 0 {
                return Err(Error::InvalidArgument(format!("bad word `{text}`")));
            }
            word.push(k - 1);
        }
        self.element_from_word(&word)
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.from_matrices(linalg::mat_mul_i64(&a.mat, &b.mat), linalg::mat_mul_i64(&a.comat, &b.comat))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        self.element_from_word(&rev).expect("valid word")
    }

    pub fn act_coweight(&self, w: &WeylElement, d: &Coweight) -> Coweight {
        let c = self.coroot_coords(d);
        self.coweight_from_coroot(&w.act_coroot(&c))
    }

    /// Whether `w alpha` is a negative root, for `alpha` given in weight coordinates.
    fn sends_negative(&self, w: &WeylElement, alpha: &[i64]) -> bool {
        self.height_scaled(&w.act_int(alpha)) < 0
    }

    pub fn left_descents(&self, w: &WeylElement) -> Vec<usize> {
        let v: Vec<i64> = w.mat.iter().map(|row| row.iter().sum()).collect();
        (0..self.rank()).filter(|&i| v[i] < 0).collect()
    }

    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.sends_negative(w, &self.cartan()[i])).collect()
    }

    /// Minimal-length representative of `w W_P`.
    pub fn is_min_coset_rep(&self, w: &WeylElement, support: &[usize]) -> bool {
        support.iter().all(|&i| !self.sends_negative(w, &self.cartan()[i]))
    }

    /// Longest element of the parabolic subgroup generated by `support`.
    pub fn longest_element(&self, support: &[usize]) -> WeylElement {
        let mut w = self.identity();
        loop {
            let v: Vec<i64> = w.mat.iter().map(|row| row.iter().sum()).collect();
            match support.iter().find(|&&i| v[i] > 0) {
                Some(&i) => w = self.mul(&self.simple_reflection(i), &w),
                None => return w,
            }
        }
    }

    pub fn longest(&self) -> WeylElement {
        self.longest_element(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// Order of the Weyl group from the classification of irreducible components.
    pub fn weyl_order(&self) -> BigInt {
        let mut total = BigInt::one();
        for comp in self.components() {
            let n = comp.len() as u64;
            let nroots = self
                .positive_roots()
                .iter()
                .filter(|e| comp.iter().any(|&i| e.simple[i] != 0))
                .count() as u64;
            let laced = comp.iter().all(|&i| self.symmetrizer()[i] == q(1));
            let fact = |k: u64| (1..=k).fold(BigInt::one(), |a, b| a * b);
            let order = match (laced, n, nroots) {
                (_, 1, _) => BigInt::from(2),
                (true, 6, 36) => BigInt::from(51840),
                (true, 7, 63) => BigInt::from(2903040),
                (true, 8, 120) => BigInt::from(696729600u64),
                (true, n, m) if m == n * (n + 1) / 2 => fact(n + 1),
                (true, n, _) => fact(n) * BigInt::from(2u64.pow(n as u32 - 1)),
                (false, 2, 6) => BigInt::from(12),
                (false, 4, 24) => BigInt::from(1152),
                (false, n, _) => fact(n) * BigInt::from(2u64.pow(n as u32)),
            };
            total *= order;
        }
        total
    }

    /// All elements sorted by length then word. Cached after the first successful call.
    pub fn weyl_elements(&self, cap: usize) -> Result<&[WeylElement]> {
        if let Some(v) = self.weyl_cache.get() {
            if v.len() > cap {
                return Err(Error::budget("Weyl group enumeration", v.len(), cap));
            }
            return Ok(v);
        }
        let order = self.weyl_order();
        if order > BigInt::from(cap) {
            return Err(Error::budget(format!("Weyl group of {}", self.label()), order, cap));
        }
        let elems = self.enumerate_bfs();
        if BigInt::from(elems.len()) != order {
            return Err(Error::Internal(format!("enumerated {} elements, expected {order}", elems.len())));
        }
        Ok(self.weyl_cache.get_or_init(|| elems))
    }

    fn enumerate_bfs(&self) -> Vec<WeylElement> {
        let r = self.rank();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut out = vec![self.identity()];
        seen.insert(vec![1; r], ());
        let mut queue = VecDeque::from([0usize]);
        while let Some(idx) = queue.pop_front() {
            for i in 0..r {
                let w = &out[idx];
                let (m, c) = self.reflection_matrices(i);
                let mat = linalg::mat_mul_i64(&m, &w.mat);
                let key: Vec<i64> = mat.iter().map(|row| row.iter().sum()).collect();
                if seen.contains_key(&key) {
                    continue;
                }
                seen.insert(key, ());
                let comat = linalg::mat_mul_i64(&c, &w.comat);
                out.push(self.from_matrices(mat, comat));
                queue.push_back(out.len() - 1);
            }
        }
        out.sort();
        out
    }

    /// Minimal coset representatives `W^P`, sorted by length then word.
    pub fn min_coset_reps(&self, support: &[usize], cap: usize) -> Result<Vec<WeylElement>> {
        Ok(self.weyl_elements(cap)?.iter().filter(|w| self.is_min_coset_rep(w, support)).cloned().collect())
    }

    /// Reflection in a positive root, as a group element.
    pub fn root_reflection(&self, root: usize) -> WeylElement {
        let e = &self.positive_roots()[root];
        let r = self.rank();
        let mut m = identity_matrix(r);
        let mut c = identity_matrix(r);
        for j in 0..r {
            for k in 0..r {
                m[j][k] -= e.omega[j] * e.coroot[k];
                c[j][k] -= e.coroot[j] * e.omega[k];
            }
        }
        self.from_matrices(m, c)
    }

    /// Elements `v = s_gamma w` with `l(v) = l(w) - 1`, with the index of `gamma`.
    pub fn bruhat_covers_below(&self, w: &WeylElement) -> Vec<(WeylElement, usize)> {
        let mut out = Vec::new();
        for k in 0..self.num_positive_roots() {
            let v = self.mul(&self.root_reflection(k), w);
            if v.length() + 1 == w.length() {
                out.push((v, k));
            }
        }
        out
    }

    /// Whether `v <= w` in Bruhat order (subword criterion on the reduced word of `w`).
    pub fn bruhat_le(&self, v: &WeylElement, w: &WeylElement) -> bool {
        if v.length() > w.length() {
            return false;
        }
        if v.length() == w.length() {
            return v == w;
        }
        let Some(&first) = w.word.first() else { return v.is_identity() };
        let s = self.simple_reflection(first);
        let w1 = self.mul(&s, w);
        let sv = self.mul(&s, v);
        if sv.length() < v.length() {
            self.bruhat_le(&sv, &w1)
        } else {
            self.bruhat_le(v, &w1)
        }
    }

    /// The minimal-length `v` with `v d` dominant, and `v d` itself.
    pub fn dominant_conjugator(&self, d: &Coweight) -> (WeylElement, Coweight) {
        let a = self.cartan();
        let mut x = d.coords.clone();
        let mut v = self.identity();
        while let Some(i) = (0..x.len()).find(|&i| x[i].is_negative()) {
            let xi = x[i].clone();
            for (j, xj) in x.iter_mut().enumerate() {
                *xj -= &xi * q(a[j][i]);
            }
            v = self.mul(&self.simple_reflection(i), &v);
        }
        (v, Coweight::new(x))
    }

    pub fn sign(&self, w: &WeylElement) -> i64 {
        if w.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `-w0 lambda` on integral weights.
    pub fn dual_weight(&self, lambda: &[i64]) -> Vec<i64> {
        self.longest().act_int(lambda).into_iter().map(|x| -x).collect()
    }

    /// The dominant element in the orbit of an integral weight.
    pub fn dominant_rep(&self, lambda: &[i64]) -> Vec<i64> {
        let a = self.cartan();
        let mut v = lambda.to_vec();
        while let Some(i) = (0..v.len()).find(|&i| v[i] < 0) {
            let vi = v[i];
            for j in 0..v.len() {
                v[j] -= vi * a[i][j];
            }
        }
        v
    }
}
