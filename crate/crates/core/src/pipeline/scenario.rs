use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_field::cyclotomic::field_contains;
use crate::exact_field::Scalar;
use crate::projectivity::ConstructionInput;

/// One task of a scenario, tagged by `"task"` in the file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "task", rename_all = "lowercase", deny_unknown_fields)]
pub enum Request {
    Construct,
    Decide,
    Roundtrip,
    Osculate { k: u32, fiber: Scalar },
    Cartier { xi: Scalar, k: u32, m: u32 },
    Classify { fiber: Scalar },
}

impl Request {
    pub fn tag(&self) -> &'static str {
        match self {
            Request::Construct => "construct",
            Request::Decide => "decide",
            Request::Roundtrip => "roundtrip",
            Request::Osculate { .. } => "osculate",
            Request::Cartier { .. } => "cartier",
            Request::Classify { .. } => "classify",
        }
    }

    fn scalars(&self) -> Vec<(&'static str, &Scalar)> {
        match self {
            Request::Osculate { fiber, .. } | Request::Classify { fiber } => vec![("fiber", fiber)],
            Request::Cartier { xi, .. } => vec![("xi", xi)],
            _ => vec![],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub input: ConstructionInput,
    #[serde(default)]
    pub requests: Vec<Request>,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Scenario> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Scenario> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Scenario::parse(&text)
    }

    /// Checks the input and every requested scalar, returning the log of
    /// checks that passed.
    pub fn validate(&self) -> Result<Vec<String>> {
        let input = &self.input;
        input.validate()?;
        let degree: u32 = input.divisors.iter().map(|d| d.degree()).sum();
        let mut log = vec![
            format!("conductor {}: all fibers and divisor points lie in Q(zeta_{})", input.conductor, input.conductor),
            format!("{} constant sections, fibers pairwise distinct", input.constants.len()),
            format!("divisor supports pairwise disjoint, total degree {degree}"),
        ];
        for (i, r) in self.requests.iter().enumerate() {
            for (what, s) in r.scalars() {
                if !field_contains(input.conductor, s.conductor()) {
                    return Err(Error::Validation(format!(
                        "request {} ({}): {what} = {s} does not lie in Q(zeta_{})",
                        i + 1,
                        r.tag(),
                        input.conductor
                    )));
                }
            }
        }
        log.push(format!("{} requests, all scalars in the scenario field", self.requests.len()));
        Ok(log)
    }
}
