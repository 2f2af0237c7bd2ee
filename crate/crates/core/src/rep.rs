//! Characters of irreducible representations and invariant counting, used as an
//! independent check on cone membership.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::branching::Embedding;
use crate::cone::{Analysis, Budgets, FacetDatum};
use crate::error::{Error, Result};
use crate::linalg;
use crate::root_datum::RootDatum;
use crate::schubert::chi_weight;

/// The invariant form on weights, scaled to integers.
fn integer_form(datum: &RootDatum) -> Vec<Vec<i64>> {
    let f = datum.weight_form();
    let flat: Vec<linalg::Q> = f.iter().flatten().cloned().collect();
    let l = flat.iter().fold(BigInt::from(1), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let r = datum.rank();
    (0..r)
        .map(|i| (0..r).map(|k| (&f[i][k] * linalg::Q::from_integer(l.clone())).to_integer().to_i64().unwrap()).collect())
        .collect()
}

fn form(g: &[Vec<i64>], a: &[i64], b: &[i64]) -> i128 {
    let mut acc = 0i128;
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (k, y) in b.iter().enumerate() {
            acc += (*x as i128) * (*y as i128) * (g[i][k] as i128);
        }
    }
    acc
}

fn check_dimension(datum: &RootDatum, lambda: &[i64], cap: u64) -> Result<BigInt> {
    if lambda.len() != datum.rank() || lambda.iter().any(|&x| x < 0) {
        return Err(Error::InvalidArgument(format!("{lambda:?} is not a dominant weight of {}", datum.label())));
    }
    let d = datum.weyl_dimension(lambda);
    if d > BigInt::from(cap) {
        return Err(Error::budget(format!("representation {lambda:?} of {}", datum.label()), d, cap));
    }
    Ok(d)
}

/// Multiplicities of the dominant weights of `V(lambda)` by Freudenthal's formula.
pub fn dominant_character(datum: &RootDatum, lambda: &[i64], cap: u64) -> Result<BTreeMap<Vec<i64>, u64>> {
    check_dimension(datum, lambda, cap)?;
    let r = datum.rank();
    let pos: Vec<Vec<i64>> = datum.positive_roots().iter().map(|e| e.omega.clone()).collect();
    let mut dominant: HashSet<Vec<i64>> = HashSet::from([lambda.to_vec()]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        for a in &pos {
            let nu: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x - y).collect();
            if nu.iter().all(|&x| x >= 0) && dominant.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    let mut order: Vec<Vec<i64>> = dominant.iter().cloned().collect();
    order.sort_by_key(|mu| {
        let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        (datum.height_scaled(&diff), mu.clone())
    });
    let g = integer_form(datum);
    let shift = |v: &[i64]| -> Vec<i64> { v.iter().map(|x| x + 1).collect() };
    let lr = shift(lambda);
    let top = form(&g, &lr, &lr);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for mu in &order {
        if mu == lambda {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut num: i128 = 0;
        for a in &pos {
            let mut k = 1;
            loop {
                let nu: Vec<i64> = (0..r).map(|i| mu[i] + k * a[i]).collect();
                let rep = datum.dominant_rep(&nu);
                let Some(&m) = mult.get(&rep) else {
                    if dominant.contains(&rep) {
                        return Err(Error::Internal("Freudenthal order violated".into()));
                    }
                    break;
                };
                num += form(&g, &nu, a) * m as i128;
                k += 1;
            }
        }
        let mr = shift(mu);
        let den = top - form(&g, &mr, &mr);
        if den <= 0 || (2 * num) % den != 0 {
            return Err(Error::Internal(format!("Freudenthal step failed at {mu:?}")));
        }
        mult.insert(mu.clone(), (2 * num / den) as u64);
    }
    Ok(mult.into_iter().filter(|(_, m)| *m > 0).collect())
}

/// All weights of `V(lambda)` with multiplicities.
pub fn character(datum: &RootDatum, lambda: &[i64], cap: u64) -> Result<HashMap<Vec<i64>, u64>> {
    let dom = dominant_character(datum, lambda, cap)?;
    let a = datum.cartan();
    let mut out = HashMap::new();
    for (mu, m) in dom {
        let mut orbit: HashSet<Vec<i64>> = HashSet::from([mu.clone()]);
        let mut queue = VecDeque::from([mu]);
        while let Some(nu) = queue.pop_front() {
            for i in 0..nu.len() {
                if nu[i] == 0 {
                    continue;
                }
                let s: Vec<i64> = (0..nu.len()).map(|j| nu[j] - nu[i] * a[i][j]).collect();
                if orbit.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        for nu in orbit {
            out.insert(nu, m);
        }
    }
    Ok(out)
}

/// Character of `V(muhat)` restricted to `G`.
pub fn restricted_character(emb: &Embedding, mu_hat: &[i64], cap: u64) -> Result<HashMap<Vec<i64>, i64>> {
    let mut out: HashMap<Vec<i64>, i64> = HashMap::new();
    for (w, m) in character(emb.g_hat(), mu_hat, cap)? {
        *out.entry(emb.restrict_int(&w)).or_default() += m as i64;
    }
    Ok(out)
}

/// `dim (V(mu) (x) V(muhat))^G`, as the multiplicity of `V(mu)^*` in `V(muhat)` restricted to `G`.
pub fn branch_multiplicity(emb: &Embedding, mu: &[i64], mu_hat: &[i64], budgets: &Budgets) -> Result<u64> {
    let g = emb.g();
    if mu.len() != g.rank() || mu.iter().any(|&x| x < 0) {
        return Err(Error::InvalidArgument(format!("{mu:?} is not a dominant weight of {}", g.label())));
    }
    let res = restricted_character(emb, mu_hat, budgets.rep_dim_cap)?;
    let target = g.dual_weight(mu);
    let mut total: i64 = 0;
    for w in g.weyl_elements(budgets.weyl_cap)? {
        let wrho = w.act_int(&vec![1; g.rank()]);
        let key: Vec<i64> = (0..g.rank()).map(|i| target[i] + 1 - wrho[i]).collect();
        if let Some(m) = res.get(&key) {
            total += g.sign(w) * m;
        }
    }
    u64::try_from(total).map_err(|_| Error::Internal("negative multiplicity".into()))
}

/// Decomposes `V(muhat)` restricted to `G` by repeatedly removing the highest weight.
pub fn decompose_restriction(emb: &Embedding, mu_hat: &[i64], budgets: &Budgets) -> Result<BTreeMap<Vec<i64>, u64>> {
    let g = emb.g();
    let mut res = restricted_character(emb, mu_hat, budgets.rep_dim_cap)?;
    let mut out = BTreeMap::new();
    loop {
        res.retain(|_, m| *m != 0);
        let Some(top) = res
            .iter()
            .filter(|(w, _)| w.iter().all(|&x| x >= 0))
            .map(|(w, _)| w.clone())
            .max_by(|a, b| g.height_scaled(a).cmp(&g.height_scaled(b)).then_with(|| a.cmp(b)))
        else {
            break;
        };
        let m = res[&top];
        if m < 0 {
            return Err(Error::Internal("negative multiplicity while peeling".into()));
        }
        for (w, k) in character(g, &top, budgets.rep_dim_cap)? {
            *res.entry(w).or_default() -= m * k as i64;
        }
        out.insert(top, m as u64);
    }
    if !res.is_empty() {
        return Err(Error::Internal("restricted character did not decompose".into()));
    }
    Ok(out)
}

/// Smallest `N <= nmax` with `(V(N mu) (x) V(N muhat))^G != 0`.
pub fn saturated_member(emb: &Embedding, mu: &[i64], mu_hat: &[i64], budgets: &Budgets) -> Result<Option<u32>> {
    for n in 1..=budgets.nmax {
        let nm: Vec<i64> = mu.iter().map(|x| x * n as i64).collect();
        let nh: Vec<i64> = mu_hat.iter().map(|x| x * n as i64).collect();
        if branch_multiplicity(emb, &nm, &nh, budgets)? > 0 {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// `dim (V(n chi_w) (x) V(n chihat_what))^{L^ss}` for the Levi pair of a facet.
pub fn fulton_invariant_dim(an: &Analysis<'_>, f: &FacetDatum, n: i64, budgets: &Budgets) -> Result<u64> {
    let emb = an.embedding();
    let levi = f.ctx.levi()?;
    let chi = chi_weight(emb.g(), &f.w, &levi.g_support);
    let chi_hat = chi_weight(emb.g_hat(), &f.w_hat, &levi.g_hat_support);
    let pick = |c: &[linalg::Q], s: &[usize]| -> Result<Vec<i64>> {
        s.iter()
            .map(|&i| {
                let x = &c[i] * linalg::q(n);
                if x.is_integer() {
                    Ok(x.to_integer().to_i64().unwrap())
                } else {
                    Err(Error::Internal("fractional chi weight".into()))
                }
            })
            .collect()
    };
    let mu = pick(&chi.coords, &levi.g_support)?;
    let mu_hat = pick(&chi_hat.coords, &levi.g_hat_support)?;
    branch_multiplicity(&levi.inner, &mu, &mu_hat, budgets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching;

    #[test]
    fn dimensions_match_weyl() {
        for (d, lam) in [("A2", vec![2, 1]), ("C2", vec![1, 1]), ("A3", vec![1, 0, 2]), ("B3", vec![0, 0, 1]), ("C3", vec![0, 1, 1])] {
            let g = RootDatum::from_descriptor(d).unwrap();
            let ch = character(&g, &lam, 1_000_000).unwrap();
            let total: u64 = ch.values().sum();
            assert_eq!(BigInt::from(total), g.weyl_dimension(&lam), "{d} {lam:?}");
        }
    }

    #[test]
    fn adjoint_of_a2() {
        let g = RootDatum::from_descriptor("A2").unwrap();
        let ch = dominant_character(&g, &[1, 1], 100).unwrap();
        assert_eq!(ch.get(&vec![0, 0]), Some(&2));
    }

    #[test]
    fn branching_sl2_in_sl3() {
        let e = branching::root_sl2("A2", 1).unwrap();
        let b = Budgets::default();
        // V(1,0) of SL3 restricts to V(1) + V(0)
        assert_eq!(decompose_restriction(&e, &[1, 0], &b).unwrap(), BTreeMap::from([(vec![1], 1), (vec![0], 1)]));
        assert_eq!(branch_multiplicity(&e, &[1], &[1, 0], &b).unwrap(), 1);
        assert_eq!(branch_multiplicity(&e, &[2], &[1, 0], &b).unwrap(), 0);
        let tiny = Budgets { rep_dim_cap: 5, ..Budgets::default() };
        assert!(matches!(branch_multiplicity(&e, &[0], &[2, 2], &tiny), Err(Error::Budget { .. })));
    }
}
