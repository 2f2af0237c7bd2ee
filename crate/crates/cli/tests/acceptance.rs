//! Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use branchcone::branching;
use branchcone::linalg::{gcd_normalize, q, to_big, Q};
use branchcone::polyhedra::{dd_convert, hrep_from_generators, RationalCone, Vector};
use branchcone::poly::Polynomial;
use branchcone::rep::{fulton_invariant_dim, saturated_member};
use branchcone::schubert::{apply_word, class_index, cup_coefficient, divided_difference, pullback_reference, PullbackTable};
use branchcone::{Analysis, Budgets, Case, Embedding, Engine, Inequality, RootDatum, Side, WeylElement};
use branchcone_cli::{run, Command, JobConfig, Report};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn v(x: &[i64]) -> Vector {
    to_big(x)
}

fn ints(x: &[BigInt]) -> Vec<i64> {
    x.iter().map(|c| c.to_i64().unwrap()).collect()
}

fn job(embedding: &str) -> JobConfig {
    format!("embedding = {embedding}\n").parse().unwrap()
}

fn formula_rays(an: &Analysis<'_>) -> Result<BTreeSet<Vector>, String> {
    Ok(an.all_extremal_rays().map_err(|e| e.to_string())?.iter().map(|r| r.coords()).collect())
}

fn facet_rows(cfg: &JobConfig) -> Result<Vec<(String, String, Vec<i64>, Vec<i64>)>, String> {
    match run(cfg, Command::Facets).map_err(|e| e.to_string())? {
        Report::Facets { rows, .. } => Ok(rows.into_iter().map(|r| (r.w, r.w_hat, r.a, r.b)).collect()),
        other => Err(format!("unexpected report {other:?}")),
    }
}

fn ray_set(cfg: &JobConfig) -> Result<BTreeSet<Vec<i64>>, String> {
    match run(cfg, Command::Rays).map_err(|e| e.to_string())? {
        Report::Rays { rays, .. } => Ok(rays.into_iter().map(|r| r.mu.into_iter().chain(r.mu_hat).collect()).collect()),
        other => Err(format!("unexpected report {other:?}")),
    }
}

fn set(rows: &[&[i64]]) -> BTreeSet<Vec<i64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn root_sl2() -> Outcome {
    let cfg = job("root_sl2(A2, 1)");
    let rows = facet_rows(&cfg)?;
    ensure!(rows == [("e".into(), "s1^ s2^ s1^".into(), vec![1], vec![-1, -1])], "facets {rows:?}");
    let emb = cfg.embedding.build().unwrap();
    let engine = Engine::default();
    let an = engine.analyze(&emb).unwrap();
    // alpha-check of SL2 has x-coordinate 2
    ensure!(an.inequality_facets()[0].delta().to_ints() == Some(vec![2]), "delta {:?}", an.inequality_facets()[0].delta());
    ensure!(an.inequality_facets()[0].w_hat == emb.g_hat().longest(), "what is not w0");
    let rays = ray_set(&cfg)?;
    ensure!(rays == set(&[&[1, 0, 1], &[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]), "rays {rays:?}");
    Ok("a <= b + c, 4 rays".into())
}

fn pullback_table() -> Outcome {
    let emb = branching::root_sl2("A2", 1).unwrap();
    let d = emb.g().simple_coroot(0);
    let st = emb.standardize(&d).map_err(|e| e.to_string())?;
    let table = PullbackTable::new(&st.embedding, &d, 100).map_err(|e| e.to_string())?;
    let gh = emb.g_hat();
    let golden = [
        ("e", "0"),
        ("s1", "0"),
        ("s2", "0"),
        ("s1 s2", "1*[X_{e}]"),
        ("s2 s1", "1*[X_{e}]"),
        ("s1 s2 s1", "1*[X_{s1}]"),
    ];
    for (u, want) in golden {
        let u = gh.parse_word(u).unwrap();
        let fast = table.pullback(&u).map_err(|e| e.to_string())?.to_string();
        let slow = pullback_reference(&st.embedding, &u, &d, 100).map_err(|e| e.to_string())?.to_string();
        ensure!(fast == want && slow == want, "[X^_{u}] pulls back to {fast} / {slow}, expected {want}");
    }
    Ok("6 classes, both routes".into())
}

fn factor() -> Outcome {
    let cfg = job("factor(A1, A1xA1, 1)");
    let rows: BTreeSet<_> = facet_rows(&cfg)?.into_iter().map(|(_, _, a, b)| (a, b)).collect();
    let want = BTreeSet::from([(vec![-1], vec![1, 0]), (vec![1], vec![-1, 0])]);
    ensure!(rows == want, "facets {rows:?}");
    let rays = ray_set(&cfg)?;
    ensure!(rays == set(&[&[1, 1, 0], &[0, 0, 1]]), "rays {rays:?}");
    let emb = cfg.embedding.build().unwrap();
    let engine = Engine::default();
    let an = engine.analyze(&emb).unwrap();
    ensure!(an.case() == Case::A, "case {:?}", an.case());
    for f in an.inequality_facets() {
        let ind = an.induction(f, &[], &[q(1)]).map_err(|e| e.to_string())?;
        ensure!(ind == vec![q(0), q(0), q(1)], "Ind on {} gives {ind:?}", f.provenance());
    }
    Ok("2 inequalities, 2 rays, Ind(w2) = (0,0,1) on both faces".into())
}

fn principal(target: &str) -> Outcome {
    let cfg = job(&format!("principal_sl2({target})"));
    let emb = cfg.embedding.build().unwrap();
    let gh = emb.g_hat();
    let rh = gh.rank();
    let c: Vec<i64> = gh
        .cartan_inverse()
        .iter()
        .map(|row| (row.iter().sum::<Q>() * q(2)).to_integer().to_i64().unwrap())
        .collect();
    let rows = facet_rows(&cfg)?;
    let longest = gh.longest().format("^");
    let b: Vec<i64> = c.iter().map(|x| -x).collect();
    ensure!(rows == [("e".into(), longest, vec![1], b)], "facets {rows:?}");
    let mut want = BTreeSet::new();
    for i in 0..rh {
        let mut x = vec![0; rh + 1];
        x[1 + i] = 1;
        want.insert(x.clone());
        x[0] = c[i];
        want.insert(x);
    }
    let rays = ray_set(&cfg)?;
    ensure!(rays == want, "rays {rays:?}");
    Ok(format!("c = {c:?}"))
}

type Row<'a> = (&'a str, &'a str, &'a [i64], &'a [i64]);

const SP2_ROWS: [Row<'static>; 5] = [
    ("s2 s1 s2", "s2^", &[-1, -2], &[1, 0, 1]),
    ("s1 s2", "s1^ s2^", &[-1, 0], &[-1, 0, 1]),
    ("s1 s2", "s3^ s2^", &[-1, 0], &[1, 0, -1]),
    ("s2", "s3^ s1^ s2^", &[1, 0], &[-1, 0, -1]),
    ("e", "s2^ s3^ s1^ s2^", &[1, 2], &[-1, -2, -1]),
];

fn same_element(g: &RootDatum, a: &str, b: &str) -> bool {
    let parse = |s: &str| if s == "e" { Ok(g.identity()) } else { g.parse_word(&s.replace('^', "")) };
    matches!((parse(a), parse(b)), (Ok(x), Ok(y)) if x == y)
}

fn check_table(emb: &Embedding, got: &[(String, String, Vec<i64>, Vec<i64>)], want: &[Row<'_>], ordered: bool) -> Result<(), String> {
    ensure!(got.len() == want.len(), "{} rows, expected {}", got.len(), want.len());
    for (k, (w, wh, a, b)) in want.iter().enumerate() {
        let hit = |r: &(String, String, Vec<i64>, Vec<i64>)| {
            same_element(emb.g(), &r.0, w) && same_element(emb.g_hat(), &r.1, wh) && r.2 == *a && r.3 == *b
        };
        let ok = if ordered { hit(&got[k]) } else { got.iter().any(hit) };
        ensure!(ok, "row ({w}, {wh}) {a:?} {b:?} missing");
    }
    Ok(())
}

fn sp2() -> Outcome {
    let cfg = job("sp_in_sl(2)");
    let emb = cfg.embedding.build().unwrap();
    check_table(&emb, &facet_rows(&cfg)?, &SP2_ROWS, true)?;
    let rays = ray_set(&cfg)?;
    let want = set(&[&[0, 1, 1, 0, 1], &[0, 0, 0, 1, 0], &[1, 0, 1, 0, 0], &[1, 0, 0, 0, 1], &[0, 1, 0, 1, 0]]);
    ensure!(rays == want, "rays {rays:?}");
    let engine = Engine::default();
    let an = engine.analyze(&emb).unwrap();
    let accepted: Vec<bool> = an.fundamental_ray_tests().map_err(|e| e.to_string())?.iter().map(|t| t.accepted).collect();
    ensure!(accepted == [false, true, false], "fundamental tests {accepted:?}");
    let extra = an.compatible_facets().map_err(|e| e.to_string())?;
    let w = emb.g().parse_word("s1 s2 s1").unwrap();
    let wh = emb.g_hat().parse_word("s2 s3").unwrap();
    let f = extra.iter().find(|f| f.w == w && f.w_hat == wh).ok_or("no facet (s1 s2 s1, s2^ s3^)")?;
    ensure!(f.inequality == Inequality { a: v(&[-1, -1]), b: v(&[1, 0, 0]) }, "got {}", f.inequality.pretty());
    let facets = an.inequality_facets();
    let sum: Vec<BigInt> =
        facets[0].inequality.as_row().iter().zip(facets[2].inequality.as_row()).map(|(x, y)| x + y).collect();
    let twice: Vec<BigInt> = f.inequality.as_row().iter().map(|x| x * 2).collect();
    ensure!(sum == twice, "not half the sum of rows 1 and 3");
    Ok("5 rows, 5 rays, b1 and b3 rejected, -a1-a2+b1 <= 0 redundant".into())
}

const SP3_DELTA1: [Row<'static>; 9] = [
    ("s1 s2 s3 s2 s1", "s4 s3 s2 s1", &[-1, -1, -1], &[0, 0, 0, 0, 1]),
    ("s1 s2 s3 s2 s1", "s4 s5 s2 s1", &[-1, -1, -1], &[0, 0, 1, 0, 0]),
    ("s1 s2 s3 s2 s1", "s2 s3 s4 s5", &[-1, -1, -1], &[1, 0, 0, 0, 0]),
    ("s2 s1", "s1 s2 s3 s4 s5 s2 s1", &[0, 0, 1], &[-1, -1, -1, 0, 0]),
    ("s2 s1", "s2 s3 s4 s5 s3 s2 s1", &[0, 0, 1], &[0, -1, -1, -1, 0]),
    ("s2 s1", "s3 s4 s5 s4 s3 s2 s1", &[0, 0, 1], &[0, 0, -1, -1, -1]),
    ("s1", "s1 s2 s3 s4 s5 s3 s2 s1", &[0, 1, 1], &[-1, -1, -1, -1, 0]),
    ("s1", "s2 s3 s4 s5 s4 s3 s2 s1", &[0, 1, 1], &[0, -1, -1, -1, -1]),
    ("e", "s1 s2 s3 s4 s5 s4 s3 s2 s1", &[1, 1, 1], &[-1, -1, -1, -1, -1]),
];

const SP3_DELTA3: [Row<'static>; 15] = [
    ("s3 s2 s3 s1 s2 s3", "s4 s2 s3", &[-1, -2, -3], &[1, 0, 1, 0, 1]),
    ("s2 s3 s1 s2 s3", "s4 s1 s2 s3", &[-1, -2, -1], &[-1, 0, 1, 0, 1]),
    ("s2 s3 s1 s2 s3", "s3 s4 s2 s3", &[-1, -2, -1], &[1, 0, -1, 0, 1]),
    ("s2 s3 s1 s2 s3", "s5 s4 s2 s3", &[-1, -2, -1], &[1, 0, 1, 0, -1]),
    ("s3 s1 s2 s3", "s3 s4 s1 s2 s3", &[-1, 0, -1], &[-1, 0, -1, 0, 1]),
    ("s3 s1 s2 s3", "s5 s4 s1 s2 s3", &[-1, 0, -1], &[-1, 0, 1, 0, -1]),
    ("s3 s1 s2 s3", "s5 s3 s4 s2 s3", &[-1, 0, -1], &[1, 0, -1, 0, -1]),
    ("s3 s2 s3", "s5 s3 s4 s1 s2 s3", &[1, 0, -1], &[-1, 0, -1, 0, -1]),
    ("s1 s2 s3", "s2 s3 s4 s1 s2 s3", &[-1, 0, 1], &[-1, -2, -1, 0, 1]),
    ("s1 s2 s3", "s5 s3 s4 s1 s2 s3", &[-1, 0, 1], &[-1, 0, -1, 0, -1]),
    ("s1 s2 s3", "s4 s5 s3 s4 s2 s3", &[-1, 0, 1], &[1, 0, -1, -2, -1]),
    ("s2 s3", "s5 s2 s3 s4 s1 s2 s3", &[1, 0, 1], &[-1, -2, -1, 0, -1]),
    ("s2 s3", "s4 s5 s3 s4 s1 s2 s3", &[1, 0, 1], &[-1, 0, -1, -2, -1]),
    ("s3", "s4 s5 s2 s3 s4 s1 s2 s3", &[1, 2, 1], &[-1, -2, -1, -2, -1]),
    ("e", "s3 s4 s5 s2 s3 s4 s1 s2 s3", &[1, 2, 3], &[-1, -2, -3, -2, -1]),
];

const SP3_RAYS: [[i64; 8]; 15] = [
    [1, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 1, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 1, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 1, 0, 0, 1],
    [0, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 1, 0, 1, 0, 1],
    [0, 1, 0, 0, 0, 1, 0, 1],
    [0, 1, 0, 1, 0, 1, 0, 0],
    [1, 0, 1, 0, 1, 0, 1, 0],
];

fn sp3() -> Outcome {
    let cfg = job("sp_in_sl(3)");
    let emb = cfg.embedding.build().unwrap();
    let engine = Engine::default();
    let an = engine.analyze(&emb).unwrap();
    let by_delta = |k: usize| -> Vec<(String, String, Vec<i64>, Vec<i64>)> {
        an.inequality_facets()
            .into_iter()
            .filter(|f| f.ctx.index == k)
            .map(|f| (f.w.to_string(), f.w_hat.format("^"), ints(&f.inequality.a), ints(&f.inequality.b)))
            .collect()
    };
    check_table(&emb, &by_delta(0), &SP3_DELTA1, false)?;
    check_table(&emb, &by_delta(1), &SP3_DELTA3, false)?;
    ensure!(facet_rows(&cfg)?.len() == 24, "not 24 inequalities");
    let rays = ray_set(&cfg)?;
    let want: BTreeSet<Vec<i64>> = SP3_RAYS.iter().map(|r| r.to_vec()).collect();
    ensure!(rays == want, "rays {rays:?}");
    Ok("9 + 15 inequalities, 15 rays".into())
}

fn dimension_counts() -> Outcome {
    let engine = Engine::default();
    let mut n = 0;
    let cases: Vec<(Embedding, Option<(usize, usize, usize, usize)>)> = vec![
        (branching::root_sl2("A2", 1).unwrap(), Some((0, 2, 2, 0))),
        (branching::principal_sl2("A2").unwrap(), Some((0, 2, 2, 0))),
        (branching::principal_sl2("A3").unwrap(), Some((0, 3, 3, 0))),
        (branching::principal_sl2("C3").unwrap(), Some((0, 3, 3, 0))),
        (branching::sp_in_sl(2).unwrap(), None),
        (branching::sp_in_sl(3).unwrap(), None),
    ];
    for (emb, expect) in cases {
        let an = engine.analyze(&emb).unwrap();
        ensure!(an.case() == Case::B, "{} is not case B", emb.label());
        for (i, f) in an.inequality_facets().into_iter().enumerate() {
            let dc = an.dimension_count(f).map_err(|e| e.to_string())?;
            ensure!(dc.holds(), "{} {}: {dc:?}", emb.label(), f.provenance());
            let got = (dc.kernel, dc.type_one, dc.r_hat, dc.levi_hat_rank);
            if let Some(e) = expect {
                ensure!(got == e, "{} {}: {got:?}", emb.label(), f.provenance());
            }
            if emb.label() == "sp_in_sl(2)" && i == 0 {
                ensure!(got == (1, 2, 3, 2), "first Sp(2) facet {got:?}");
            }
            n += 1;
        }
    }
    Ok(format!("{n} facets"))
}

fn examples() -> Vec<Embedding> {
    vec![
        branching::root_sl2("A2", 1).unwrap(),
        branching::principal_sl2("A2").unwrap(),
        branching::principal_sl2("A3").unwrap(),
        branching::principal_sl2("C3").unwrap(),
        branching::factor("A1", "A1xA1", 1).unwrap(),
        branching::sp_in_sl(2).unwrap(),
        branching::sp_in_sl(3).unwrap(),
    ]
}

fn oracle_equivalence() -> Outcome {
    let engine = Engine::default();
    let mut total = 0;
    for emb in examples() {
        let an = engine.analyze(&emb).unwrap();
        let formula = formula_rays(&an)?;
        let rows: Vec<Vector> = an.cone().inequalities.clone();
        let dd: BTreeSet<Vector> = dd_convert(an.cone().dim, &rows, &[]).rays.into_iter().collect();
        ensure!(formula == dd, "{}: formula {formula:?} vs double description {dd:?}", emb.label());
        total += dd.len();
    }
    Ok(format!("{total} rays over 7 embeddings"))
}

fn small_examples() -> Vec<Embedding> {
    vec![
        branching::root_sl2("A2", 1).unwrap(),
        branching::factor("A1", "A1xA1", 1).unwrap(),
        branching::sp_in_sl(2).unwrap(),
    ]
}

fn rep_oracle() -> Outcome {
    let engine = Engine::default();
    let budgets = Budgets { nmax: 3, ..Budgets::default() };
    let mut rng = StdRng::seed_from_u64(2024);
    let (mut rays, mut points) = (0, 0);
    for emb in small_examples() {
        let an = engine.analyze(&emb).unwrap();
        for ray in an.all_extremal_rays().map_err(|e| e.to_string())? {
            let n = saturated_member(&emb, &ints(&ray.mu), &ints(&ray.mu_hat), &budgets).map_err(|e| e.to_string())?;
            ensure!(n.is_some(), "{}: no witness for ray {:?}", emb.label(), ray.coords());
            rays += 1;
        }
        let (r, rh) = (emb.g().rank(), emb.g_hat().rank());
        let mut found = 0;
        while found < 20 {
            let mu: Vec<i64> = (0..r).map(|_| rng.gen_range(0..4)).collect();
            let mu_hat: Vec<i64> = (0..rh).map(|_| rng.gen_range(0..4)).collect();
            if an.contains(&v(&mu), &v(&mu_hat)) {
                continue;
            }
            found += 1;
            let n = saturated_member(&emb, &mu, &mu_hat, &budgets).map_err(|e| e.to_string())?;
            ensure!(n.is_none(), "{}: violating point {mu:?} {mu_hat:?} has witness N={n:?}", emb.label());
        }
        points += found;
    }
    Ok(format!("{rays} rays witnessed, {points} violating points without witness"))
}

fn fulton() -> Outcome {
    let engine = Engine::default();
    let budgets = Budgets::default();
    let mut n = 0;
    for emb in small_examples() {
        let an = engine.analyze(&emb).unwrap();
        for f in an.inequality_facets() {
            for k in 1..=3 {
                let d = fulton_invariant_dim(&an, f, k, &budgets).map_err(|e| e.to_string())?;
                ensure!(d == 1, "{} {} n={k}: dimension {d}", emb.label(), f.provenance());
                n += 1;
            }
        }
    }
    Ok(format!("{n} facet/n pairs"))
}

fn random_polynomial(rng: &mut StdRng, n: usize) -> Polynomial<Q> {
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(1..6) {
        let m: Vec<u16> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        p.add_term(m, q(rng.gen_range(-5..6)));
    }
    p
}

fn random_element(rng: &mut StdRng, g: &RootDatum) -> (WeylElement, Vec<usize>) {
    let mut w = g.identity();
    let mut kept = Vec::new();
    for _ in 0..rng.gen_range(0..10) {
        let i = rng.gen_range(0..g.rank());
        let x = g.mul(&w, &g.simple_reflection(i));
        if x.length() > w.length() {
            w = x;
            kept.push(i);
        }
    }
    (w, kept)
}

fn property_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    let mut cases = 0usize;
    let types: Vec<RootDatum> = ["A2", "A3", "B2", "C2"].iter().map(|t| RootDatum::from_descriptor(t).unwrap()).collect();
    for _ in 0..40 {
        let g = &types[rng.gen_range(0..types.len())];
        let f = random_polynomial(&mut rng, g.rank());
        let i = rng.gen_range(0..g.rank());
        ensure!(divided_difference(g, i, &divided_difference(g, i, &f)).is_zero(), "A_i^2 != 0 on {}", g.label());
        let j = (i + 1) % g.rank();
        let m = match g.cartan()[i][j] * g.cartan()[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            _ => 6,
        };
        let left: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
        let right: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
        ensure!(apply_word(g, &left, &f) == apply_word(g, &right, &f), "braid relation fails on {}", g.label());
        let (w, kept) = random_element(&mut rng, g);
        ensure!(apply_word(g, &kept, &f) == apply_word(g, w.word(), &f), "word dependence on {}", g.label());
        cases += 3;
    }
    let flags: Vec<&RootDatum> = types.iter().filter(|g| g.label() != "B2").collect();
    for _ in 0..40 {
        let g = flags[rng.gen_range(0..flags.len())];
        let (a, _) = random_element(&mut rng, g);
        let (b, _) = random_element(&mut rng, g);
        let (c, _) = random_element(&mut rng, g);
        let k = cup_coefficient(g, &a, &b, &c, &[]);
        ensure!(k.is_integer() && !k.is_negative(), "structure constant {k} on {}", g.label());
        let dual = if b == class_index(g, &a, &[]) { q(1) } else { q(0) };
        ensure!(cup_coefficient(g, &a, &b, &g.identity(), &[]) == dual, "duality fails on {}", g.label());
        cases += 2;
    }
    let engine = Engine::default();
    for emb in examples() {
        let an = engine.analyze(&emb).unwrap();
        let r = emb.g().rank();
        for f in an.inequality_facets() {
            let covers = an.type_one_data(f);
            for c in &covers {
                let ray = an.type_one_ray(f, c).map_err(|e| e.to_string())?;
                for d in &covers {
                    let at = match d.side {
                        Side::G => d.index,
                        Side::GHat => r + d.index,
                    };
                    ensure!(ray[at] == BigInt::from(i64::from(c == d)), "{} {c} at {d}", f.provenance());
                }
                ensure!(f.inequality.evaluate(&ray[..r], &ray[r..]).is_zero(), "{} {c} off the face", f.provenance());
            }
            cases += 1;
        }
    }
    for _ in 0..60 {
        let dim = rng.gen_range(2..5);
        let mut rows: Vec<Vector> = (0..dim).map(|i| (0..dim).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
        for _ in 0..rng.gen_range(0..6) {
            rows.push((0..dim).map(|_| BigInt::from(rng.gen_range(-3..4))).collect());
        }
        let cone = RationalCone::new(dim, rows.clone(), vec![]);
        let vrep = dd_convert(dim, &rows, &[]);
        ensure!(vrep.rays.iter().all(|x| cone.is_extremal(x)), "non-extremal ray from double description");
        let h = hrep_from_generators(dim, &vrep.rays, &vrep.lineality);
        let back = dd_convert(dim, &h.rays, &h.lineality);
        ensure!(back.rays == vrep.rays, "round trip changed the rays");
        if cone.dimension() == dim {
            let normalized: Vec<Vector> = rows
                .iter()
                .map(|a| {
                    let mut x = a.clone();
                    gcd_normalize(&mut x);
                    x
                })
                .collect();
            ensure!(h.rays.iter().all(|n| normalized.contains(n)), "facet normal not among the rows");
        }
        cases += 1;
    }
    ensure!(cases >= 200, "only {cases} cases");
    Ok(format!("{cases} cases"))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 root SL2 in SL3", Duration::from_secs(1), Box::new(root_sl2)),
        ("2 pullback golden table", Duration::from_secs(60), Box::new(pullback_table)),
        ("3 factor SL2 in SL2xSL2", Duration::from_secs(1), Box::new(factor)),
        ("4 principal SL2 in A2", Duration::from_secs(5), Box::new(|| principal("A2"))),
        ("4 principal SL2 in A3", Duration::from_secs(5), Box::new(|| principal("A3"))),
        ("4 principal SL2 in C3", Duration::from_secs(5), Box::new(|| principal("C3"))),
        ("5 Sp(4) in SL(4)", Duration::from_secs(30), Box::new(sp2)),
        ("6 Sp(6) in SL(6)", Duration::from_secs(300), Box::new(sp3)),
        ("7 dimension count", Duration::from_secs(300), Box::new(dimension_counts)),
        ("8 oracle equivalence", Duration::from_secs(300), Box::new(oracle_equivalence)),
        ("9 representation oracle", Duration::from_secs(120), Box::new(rep_oracle)),
        ("10 invariant dimension one", Duration::from_secs(300), Box::new(fulton)),
        ("11 property suites", Duration::from_secs(300), Box::new(property_suites)),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(|| check())).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; took longer than {limit:?}")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!("{} {name} ({:.2} s): {detail}", if ok { "PASS" } else { "FAIL" }, took.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
