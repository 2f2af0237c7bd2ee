//! Serializable results of the four commands, with TSV and JSON renderings.

use serde::{Deserialize, Serialize};

use crate::config::Format;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetRow {
    pub provenance: String,
    pub delta_index: usize,
    pub w: String,
    pub w_hat: String,
    /// Coefficients of `a . mu + b . muhat <= 0`.
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayRow {
    pub provenance: String,
    pub mu: Vec<i64>,
    pub mu_hat: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub nmax: u32,
    /// Smallest `N` with nonzero invariants, if one was found.
    pub n: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Report {
    Facets { embedding: String, rank: usize, rank_hat: usize, rows: Vec<FacetRow> },
    Rays { embedding: String, rank: usize, rank_hat: usize, rays: Vec<RayRow> },
    Check { embedding: String, mu: Vec<i64>, mu_hat: Vec<i64>, member: bool, violated: Vec<String>, witness: Option<Witness> },
    Verify { embedding: String, checks: Vec<VerifyLine> },
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\t")
}

fn header(prefix: &str, n: usize) -> String {
    (1..=n).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().join("\t")
}

impl Report {
    /// `false` only for a failed `verify`.
    pub fn passed(&self) -> bool {
        match self {
            Report::Verify { checks, .. } => checks.iter().all(|c| c.passed),
            _ => true,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Tsv => self.to_tsv(),
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Facets { embedding, rank, rank_hat, rows } => {
                out.push_str(&format!("# {embedding}: {} inequalities a.mu + b.muhat <= 0\n", rows.len()));
                out.push_str(&format!("provenance\t{}\t{}\n", header("a", *rank), header("b", *rank_hat)));
                for r in rows {
                    out.push_str(&format!("{}\t{}\t{}\n", r.provenance, join(&r.a), join(&r.b)));
                }
            }
            Report::Rays { embedding, rank, rank_hat, rays } => {
                out.push_str(&format!("# {embedding}: {} extremal rays\n", rays.len()));
                out.push_str(&format!("provenance\t{}\t{}\n", header("mu", *rank), header("muhat", *rank_hat)));
                for r in rays {
                    out.push_str(&format!("{}\t{}\t{}\n", r.provenance, join(&r.mu), join(&r.mu_hat)));
                }
            }
            Report::Check { embedding, mu, mu_hat, member, violated, witness } => {
                out.push_str(&format!("# {embedding}\n"));
                out.push_str(&format!("point\t{}\t;\t{}\n", join(mu), join(mu_hat)));
                out.push_str(&format!("member\t{member}\n"));
                for v in violated {
                    out.push_str(&format!("violates\t{v}\n"));
                }
                if let Some(w) = witness {
                    match w.n {
                        Some(n) => out.push_str(&format!("witness\tN={n}\n")),
                        None => out.push_str(&format!("witness\tnone for N <= {}\n", w.nmax)),
                    }
                }
            }
            Report::Verify { embedding, checks } => {
                out.push_str(&format!("# {embedding}\n"));
                for c in checks {
                    out.push_str(&format!("{}\t{}\t{}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
                }
            }
        }
        out
    }
}
