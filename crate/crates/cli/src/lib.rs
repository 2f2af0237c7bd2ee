//! Front end for the branching cone engine: job files, the four commands and their tables.

pub mod config;
pub mod error;
pub mod report;

use branchcone::cone::Side;
use branchcone::rep::saturated_member;
use branchcone::{Analysis, Case, Engine, Provenance, RationalCone};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub use config::{Command, EmbeddingSpec, Format, JobConfig};
pub use error::CliError;
pub use report::{FacetRow, RayRow, Report, VerifyLine, Witness};

fn small(v: &[BigInt]) -> Result<Vec<i64>, CliError> {
    v.iter()
        .map(|x| x.to_i64().ok_or_else(|| CliError::Core(branchcone::Error::Internal(format!("{x} does not fit in 64 bits")))))
        .collect()
}

/// Runs `command` on the job, returning the report; a failed `verify` is an `Ok` report that
/// does not pass.
pub fn run(cfg: &JobConfig, command: Command) -> Result<Report, CliError> {
    let emb = cfg.embedding.build()?;
    let engine = Engine::new(cfg.budgets());
    let an = engine.analyze(&emb)?;
    let embedding = emb.label().to_string();
    let (rank, rank_hat) = (emb.g().rank(), emb.g_hat().rank());
    Ok(match command {
        Command::Facets => {
            let rows = an
                .inequality_facets()
                .into_iter()
                .map(|f| {
                    Ok(FacetRow {
                        provenance: f.provenance(),
                        delta_index: f.ctx.index,
                        w: f.w.to_string(),
                        w_hat: f.w_hat.format("^"),
                        a: small(&f.inequality.a)?,
                        b: small(&f.inequality.b)?,
                    })
                })
                .collect::<Result<_, CliError>>()?;
            Report::Facets { embedding, rank, rank_hat, rows }
        }
        Command::Rays => {
            let rays = an
                .all_extremal_rays()?
                .into_iter()
                .map(|r| Ok(RayRow { provenance: ray_provenance(&an, &r.provenance), mu: small(&r.mu)?, mu_hat: small(&r.mu_hat)? }))
                .collect::<Result<_, CliError>>()?;
            Report::Rays { embedding, rank, rank_hat, rays }
        }
        Command::Check => {
            let (mu, mu_hat) = cfg.point.clone().ok_or_else(|| CliError::Parse("`check` needs a point".into()))?;
            if mu.len() != rank || mu_hat.len() != rank_hat {
                return Err(CliError::Parse(format!("point must have {rank} + {rank_hat} coordinates")));
            }
            if mu.iter().chain(&mu_hat).any(|&x| x < 0) {
                return Err(CliError::Parse("point must be a pair of dominant weights".into()));
            }
            let (bm, bh): (Vec<BigInt>, Vec<BigInt>) =
                (mu.iter().map(|&x| BigInt::from(x)).collect(), mu_hat.iter().map(|&x| BigInt::from(x)).collect());
            let violated: Vec<String> =
                an.inequality_facets().into_iter().filter(|f| !f.inequality.holds(&bm, &bh)).map(|f| f.provenance()).collect();
            let member = an.contains(&bm, &bh);
            let witness = if cfg.witness {
                Some(Witness { nmax: cfg.nmax, n: saturated_member(&emb, &mu, &mu_hat, &cfg.budgets())? })
            } else {
                None
            };
            Report::Check { embedding, mu, mu_hat, member, violated, witness }
        }
        Command::Verify => Report::Verify { embedding, checks: verify(&an)? },
    })
}

pub fn ray_provenance(an: &Analysis<'_>, p: &Provenance) -> String {
    match p {
        Provenance::TypeOne { facet, cover } => format!("type I {} cover {cover}", an.facets()[*facet].provenance()),
        Provenance::TypeTwo { facet } => format!("type II {}", an.facets()[*facet].provenance()),
        Provenance::Fundamental { index } => format!("fundamental b{}", index + 1),
        Provenance::Oracle => "oracle".into(),
    }
}

fn line(name: &str, passed: bool, detail: String) -> VerifyLine {
    VerifyLine { name: name.into(), passed, detail }
}

/// Cross-checks: formula rays against double description, the counting identity, the
/// ones/zeros pattern of type I rays, and facet irredundancy in case B.
pub fn verify(an: &Analysis<'_>) -> Result<Vec<VerifyLine>, CliError> {
    let mut out = Vec::new();
    match an.all_extremal_rays() {
        Ok(rays) => out.push(line("oracle_equivalence", true, format!("{} rays", rays.len()))),
        Err(branchcone::Error::OracleMismatch(m)) => out.push(line("oracle_equivalence", false, m)),
        Err(e) => return Err(e.into()),
    }

    let facets = an.inequality_facets();
    if an.case() == Case::B {
        let (mut checked, mut skipped, mut bad) = (0, 0, Vec::new());
        for f in &facets {
            let dc = an.dimension_count(f)?;
            if !dc.applies() {
                skipped += 1;
            } else if dc.holds() {
                checked += 1;
            } else {
                bad.push(f.provenance());
            }
        }
        let detail = if bad.is_empty() {
            format!("{checked} facets, {skipped} with non-maximal Levi skipped")
        } else {
            format!("fails on {}", bad.join("; "))
        };
        out.push(line("dimension_count", bad.is_empty(), detail));
    } else {
        out.push(line("dimension_count", true, "case A, not applicable".into()));
    }

    let r = an.embedding().g().rank();
    let mut bad = Vec::new();
    let mut n = 0;
    for f in &facets {
        let covers = an.type_one_data(f);
        let pos = |c: &branchcone::CoverDatum| match c.side {
            Side::G => c.index,
            Side::GHat => r + c.index,
        };
        for c in &covers {
            let ray = an.type_one_ray(f, c)?;
            n += 1;
            let pattern = covers.iter().all(|d| ray[pos(d)] == BigInt::from(i64::from(c == d)));
            let on_face = f.inequality.evaluate(&ray[..r], &ray[r..]) == BigInt::from(0);
            if !pattern || !on_face {
                bad.push(format!("{} {c}", f.provenance()));
            }
        }
    }
    let detail = if bad.is_empty() { format!("{n} type I rays") } else { format!("fails on {}", bad.join("; ")) };
    out.push(line("ones_zeros", bad.is_empty(), detail));

    if an.case() == Case::B {
        let cone = an.cone();
        let dim = cone.dim;
        let rows: Vec<_> = facets.iter().map(|f| f.inequality.as_row()).collect();
        let dominance: Vec<_> = (0..dim).map(|i| (0..dim).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
        let kept = RationalCone::new(dim, rows, vec![]).irredundant_given(&dominance).len();
        let low: Vec<String> = (0..facets.len())
            .filter(|&i| cone.face_dimension(i) + 1 != dim)
            .map(|i| facets[i].provenance())
            .collect();
        let ok = kept == facets.len() && low.is_empty() && cone.dimension() == dim;
        let detail = if ok {
            format!("{} facets of dimension {}", facets.len(), dim - 1)
        } else {
            format!("{kept} of {} rows irredundant; low-dimensional faces: {}", facets.len(), low.join("; "))
        };
        out.push(line("irredundancy", ok, detail));
    } else {
        out.push(line("irredundancy", true, "case A, redundant rows removed during enumeration".into()));
    }
    Ok(out)
}
