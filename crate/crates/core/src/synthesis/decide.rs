//! Deciding orientability of complete multipartite graphs and building witnesses.

use std::fmt;

use super::grow::grow;
use super::seeds::{seed, SeedId};
use crate::competition::{first_failing_pair, Competitiveness, StepPair};
use crate::error::{Error, Result};
use crate::partition::{PartitionSpec, PartitionedDigraph};

/// Clause of the characterization a verdict rests on.
///
/// `A` covers two parts, `B` three, `C` four or more. Sub-clause variants
/// (`AaI`, `CaII`, ...) name the branch that made a graph orientable; the
/// bare variants (`Aa`, `Ca`) label negative verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    Aa,
    AaI,
    AaII,
    Ab,
    Ac,
    Ba,
    Bb,
    Bc,
    Ca,
    CaI,
    CaII,
    Cb,
}

impl Clause {
    pub fn tag(self) -> &'static str {
        match self {
            Clause::Aa => "A(a)",
            Clause::AaI => "A(a)(i)",
            Clause::AaII => "A(a)(ii)",
            Clause::Ab => "A(b)",
            Clause::Ac => "A(c)",
            Clause::Ba => "B(a)",
            Clause::Bb => "B(b)",
            Clause::Bc => "B(c)",
            Clause::Ca => "C(a)",
            Clause::CaI => "C(a)(i)",
            Clause::CaII => "C(a)(ii)",
            Clause::Cb => "C(b)",
        }
    }

    /// Seed used when this clause makes a graph with `parts` parts orientable.
    pub fn seed(self, parts: usize) -> Option<SeedId> {
        Some(match self {
            Clause::AaI => SeedId::D1,
            Clause::AaII => SeedId::D2,
            Clause::Ab => SeedId::D3,
            Clause::Ac => SeedId::D4,
            Clause::Ba => SeedId::D5,
            Clause::Bb => SeedId::D6,
            Clause::Bc => SeedId::D7,
            Clause::CaI => SeedId::D8,
            Clause::CaII => SeedId::D9,
            Clause::Cb => SeedId::Tournament(parts),
            Clause::Aa | Clause::Ca => return None,
        })
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// How `construct` will realise an orientable verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthPlan {
    pub seed: SeedId,
    pub from: PartitionSpec,
    pub to: PartitionSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Orientable {
        clause: Clause,
        plan: GrowthPlan,
    },
    NotOrientable {
        clause: Clause,
    },
    /// `(1,1)` is outside this characterization.
    Unsupported,
}

impl Verdict {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Verdict::Orientable { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Orientable { clause, plan } => {
                write!(f, "Orientable [{clause}] seed={}", plan.seed)?;
                if plan.from != plan.to {
                    write!(f, " grow K_{{{}}} -> K_{{{}}}", plan.from, plan.to)?;
                }
                Ok(())
            }
            Verdict::NotOrientable { clause } => write!(f, "NotOrientable [{clause}]"),
            Verdict::Unsupported => write!(f, "Unsupported: steps (1,1) are not covered"),
        }
    }
}

/// Which clause (if any) makes `K_p` orientable for `i <= j`, `(i,j) != (1,1)`.
fn classify(p: &PartitionSpec, steps: StepPair) -> std::result::Result<Clause, Clause> {
    let (i, j) = (steps.i(), steps.j());
    let n = |l: usize| p.size(l);
    match p.parts() {
        2 => {
            if i + j == 3 {
                if n(2) >= 6 {
                    Ok(Clause::AaI)
                } else if n(1) >= 10 && n(2) == 5 {
                    Ok(Clause::AaII)
                } else {
                    Err(Clause::Aa)
                }
            } else if n(2) >= 4 {
                Ok(Clause::Ab)
            } else if i >= 2 && j >= 2 && n(1) >= 6 && n(2) == 3 {
                Ok(Clause::Ac)
            } else if n(2) == 3 {
                Err(Clause::Ac)
            } else {
                Err(Clause::Ab)
            }
        }
        3 => {
            if n(3) >= 2 {
                Ok(Clause::Ba)
            } else if n(2) >= 3 {
                Ok(Clause::Bb)
            } else if i >= 2 && j >= 2 && n(1) >= 4 && n(2) == 2 {
                Ok(Clause::Bc)
            } else if n(2) == 2 {
                Err(Clause::Bc)
            } else {
                Err(Clause::Bb)
            }
        }
        4 => {
            if n(2) >= 2 {
                Ok(Clause::CaII)
            } else if n(1) >= 3 {
                Ok(Clause::CaI)
            } else {
                Err(Clause::Ca)
            }
        }
        _ => Ok(Clause::Cb),
    }
}

/// Decides whether `K_p` has an (i,j)-step competitive orientation.
pub fn decide(p: &PartitionSpec, steps: StepPair) -> Result<Verdict> {
    let steps = steps.canonical();
    if steps.is_one_one() {
        return Ok(Verdict::Unsupported);
    }
    Ok(match classify(p, steps) {
        Ok(clause) => {
            let seed = clause.seed(p.parts()).expect("positive clauses have seeds");
            let plan = GrowthPlan { seed, from: seed.partition()?, to: p.clone() };
            debug_assert!(plan.to.dominates(&plan.from));
            Verdict::Orientable { clause, plan }
        }
        Err(clause) => Verdict::NotOrientable { clause },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Built { clause: Clause, seed: SeedId, orientation: PartitionedDigraph },
    NotOrientable { clause: Clause },
    Unsupported,
}

/// Builds a competitive orientation of `K_p` when one exists, and verifies it
/// before returning.
pub fn construct(p: &PartitionSpec, steps: StepPair) -> Result<Construction> {
    match decide(p, steps)? {
        Verdict::Unsupported => Ok(Construction::Unsupported),
        Verdict::NotOrientable { clause } => Ok(Construction::NotOrientable { clause }),
        Verdict::Orientable { clause, plan } => {
            let orientation = grow(&seed(plan.seed)?, &plan.to)?;
            if let Competitiveness::FailingPair(u, v) = first_failing_pair(orientation.digraph(), steps) {
                return Err(Error::SelfVerification(format!(
                    "K_{{{p}}} from {} at ({steps}): vertices {u} and {v} do not compete",
                    plan.seed
                )));
            }
            Ok(Construction::Built { clause, seed: plan.seed, orientation })
        }
    }
}
