//! Three-valued checker verdicts with witnesses and exactness regimes.

use crate::degree::Degree;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Holds => write!(f, "Holds"),
            Status::Fails => write!(f, "Fails"),
            Status::Unknown => write!(f, "Unknown"),
        }
    }
}

/// How much a verdict can be trusted: `Exact` decisions quantify over the
/// whole boundary space, `K1Exact` ones are exact because the graph has rank
/// one, and `Approximate` ones were evaluated against depth-capped boundary
/// approximations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    Exact,
    K1Exact,
    Approximate,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::Exact => write!(f, "Exact"),
            Regime::K1Exact => write!(f, "K1Exact"),
            Regime::Approximate => write!(f, "Approximate"),
        }
    }
}

/// A checker result. `Holds`/`Fails` always carry either a concrete witness
/// or a proof tag naming the rule that decided them; `Unknown` records the
/// depth bound that was exhausted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriVerdict {
    pub status: Status,
    pub witness: Option<String>,
    pub proof: Option<String>,
    pub bound: Option<Degree>,
    pub regime: Regime,
}

impl TriVerdict {
    pub fn holds_by(regime: Regime, proof: impl Into<String>) -> Self {
        TriVerdict { status: Status::Holds, witness: None, proof: Some(proof.into()), bound: None, regime }
    }

    pub fn holds_with(regime: Regime, witness: impl Into<String>) -> Self {
        TriVerdict { status: Status::Holds, witness: Some(witness.into()), proof: None, bound: None, regime }
    }

    pub fn fails_with(regime: Regime, witness: impl Into<String>) -> Self {
        TriVerdict { status: Status::Fails, witness: Some(witness.into()), proof: None, bound: None, regime }
    }

    pub fn unknown(regime: Regime, bound: Degree, diagnostic: impl Into<String>) -> Self {
        TriVerdict {
            status: Status::Unknown,
            witness: None,
            proof: Some(diagnostic.into()),
            bound: Some(bound),
            regime,
        }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn fails(&self) -> bool {
        self.status == Status::Fails
    }

    pub fn is_unknown(&self) -> bool {
        self.status == Status::Unknown
    }

    /// Strict three-valued conjunction: any `Fails` wins, else any `Unknown`
    /// wins, else `Holds`. The first deciding verdict provides the payload.
    pub fn all_of<I: IntoIterator<Item = TriVerdict>>(verdicts: I, regime: Regime) -> TriVerdict {
        let mut unknown: Option<TriVerdict> = None;
        let mut any = false;
        for v in verdicts {
            any = true;
            match v.status {
                Status::Fails => return v,
                Status::Unknown => {
                    unknown.get_or_insert(v);
                }
                Status::Holds => {}
            }
        }
        if let Some(u) = unknown {
            return u;
        }
        if any {
            TriVerdict::holds_by(regime, "all components hold")
        } else {
            TriVerdict::holds_by(regime, "vacuously true (no components)")
        }
    }
}

impl fmt::Display for TriVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if let Some(b) = &self.bound {
            write!(f, "({b})")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        if let Some(p) = &self.proof {
            write!(f, " [{p}]")?;
        }
        Ok(())
    }
}
