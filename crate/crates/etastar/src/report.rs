//! The `analyze` JSON report: a stable, diff-friendly summary of one
//! semigroup.

use serde::Serialize;

use crate::error::Result;
use crate::eta::{eta_star, eta_star_root, Root};
use crate::green::{compute_green, principal_series, FactorKind};
use crate::pseudo::{membership, Pseudovariety};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, Serialize)]
pub struct GreenCounts {
    pub r: usize,
    pub l: usize,
    pub j: usize,
    pub h: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesEntry {
    /// size of the J-class this step removes
    pub size: usize,
    pub kind: FactorKind,
}

#[derive(Debug, Clone, Serialize)]
pub struct EtaStarSummary {
    pub class_count: usize,
    pub quotient_order: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RootSummary {
    /// null factors have no η*-root
    NotApplicable,
    /// the factor's difference set collapses into the class of θ
    Theta,
    /// classes land in a deeper (or the same) factor
    Factor { index: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct RootEntry {
    pub factor: usize,
    pub root: RootSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct Memberships {
    pub mn: bool,
    pub nt: bool,
    pub pe: bool,
    pub bg_nil: bool,
    pub bi: bool,
    pub eds: bool,
    pub eunng: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: String,
    pub order: usize,
    pub has_zero: bool,
    pub green: GreenCounts,
    pub series: Vec<SeriesEntry>,
    pub eta_star: EtaStarSummary,
    pub roots: Vec<RootEntry>,
    pub memberships: Memberships,
}

pub fn full_report(name: &str, s: &FiniteSemigroup) -> Result<Report> {
    let g = compute_green(s);
    let series = principal_series(s);
    let eta = eta_star(s);
    let mut roots = Vec::new();
    for p in 0..series.factors.len() {
        let root = if series.factors[p].kind == FactorKind::Null {
            RootSummary::NotApplicable
        } else {
            match eta_star_root(s, &series, p, &eta)?.root {
                Root::Theta => RootSummary::Theta,
                Root::Factor { index, .. } => RootSummary::Factor { index },
            }
        };
        roots.push(RootEntry { factor: p, root });
    }
    let verdict = |w: Pseudovariety| membership(s, w).verdict;
    Ok(Report {
        name: name.to_string(),
        order: s.order(),
        has_zero: s.zero().is_some(),
        green: GreenCounts {
            r: g.r.len(),
            l: g.l.len(),
            j: g.j.len(),
            h: g.h.len(),
        },
        series: series
            .factors
            .iter()
            .map(|f| SeriesEntry {
                size: f.jclass.len(),
                kind: f.kind,
            })
            .collect(),
        eta_star: EtaStarSummary {
            class_count: eta.class_count,
            quotient_order: eta.quotient.order(),
        },
        roots,
        memberships: Memberships {
            mn: verdict(Pseudovariety::MN),
            nt: verdict(Pseudovariety::NT),
            pe: verdict(Pseudovariety::PE),
            bg_nil: verdict(Pseudovariety::BGNIL),
            bi: verdict(Pseudovariety::BI),
            eds: verdict(Pseudovariety::EDS),
            eunng: verdict(Pseudovariety::EUNNG),
        },
    })
}
