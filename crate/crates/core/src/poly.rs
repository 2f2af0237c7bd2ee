//! Multivariate polynomials in the fundamental-weight variables.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient ring for [`Polynomial`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;
}

impl Coeff for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Coeff for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

pub type Monomial = Vec<u16>;

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    nvars: usize,
    terms: HashMap<Monomial, T>,
}

impl<T: Coeff> Polynomial<T> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: HashMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, T::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(m, T::one());
        p
    }

    /// The linear form `sum_i coeffs[i] * x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut m = vec![0; n];
                m[i] = 1;
                p.add_term(m, T::from_i64(c));
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    /// Terms sorted by monomial, for deterministic iteration.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &T)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coefficient(&self, m: &[u16]) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn constant_term(&self) -> T {
        self.coefficient(&vec![0; self.nvars])
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum::<usize>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn max_exponent(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        let mut out = Polynomial::zero(self.nvars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), f(v));
        }
        out
    }

    /// Adds `c * mono * other` to `self`.
    pub fn add_shifted(&mut self, other: &Self, mono: &[u16], c: &T) {
        for (m, v) in &other.terms {
            let key: Monomial = m.iter().zip(mono).map(|(a, b)| a + b).collect();
            self.add_term(key, v.clone() * c.clone());
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes `x_j -> images[j]` where each image is a linear form in `target_nvars` variables.
    pub fn substitute_linear(&self, images: &[Vec<i64>], target_nvars: usize) -> Self {
        assert_eq!(images.len(), self.nvars);
        let forms: Vec<Self> = images.iter().map(|c| Self::linear(c)).collect();
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(self.nvars);
        for (j, f) in forms.iter().enumerate() {
            let maxe = self.max_exponent(j);
            let mut pw = vec![Self::one(target_nvars)];
            for e in 1..=maxe as usize {
                let next = &pw[e - 1] * f;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut out = Self::zero(target_nvars);
        for (m, c) in self.sorted_terms() {
            let mut t = Self::constant(target_nvars, c.clone());
            for (j, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[j][e as usize];
                }
            }
            out = out + t;
        }
        out
    }

    pub fn eval(&self, point: &[T]) -> T {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl<'a, T: Coeff> Add<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let mut out = self.clone();
        for (m, v) in &rhs.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }
}

impl<T: Coeff> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(mut self, rhs: Polynomial<T>) -> Polynomial<T> {
        for (m, v) in rhs.terms {
            self.add_term(m, v);
        }
        self
    }
}

impl<T: Coeff> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(mut self, rhs: Polynomial<T>) -> Polynomial<T> {
        for (m, v) in rhs.terms {
            self.add_term(m, -v);
        }
        self
    }
}

impl<T: Coeff> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        self.scale(&-T::one())
    }
}

impl<'a, T: Coeff> Mul<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let mut out = Polynomial::zero(self.nvars);
        for (m, v) in &self.terms {
            out.add_shifted(rhs, m, v);
        }
        out
    }
}

impl<T: Coeff> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.sorted_terms().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*w{}", i + 1)?,
                    _ => write!(f, "*w{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}
