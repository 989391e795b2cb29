use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_field::cyclotomic::field_contains;
use crate::exact_field::{is_root_of_unity, Moebius, ProjValue, Scalar};
use crate::ruled_surface::CurveDivisor;

/// The input of the construction: fibers `c0`, `cInf`, `c_i` of
/// `P^1 x A^1 -> P^1` and a divisor `D_i` for each `c_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionInput {
    pub conductor: u32,
    pub c0: ProjValue,
    #[serde(rename = "cInf")]
    pub c_inf: ProjValue,
    pub constants: Vec<ProjValue>,
    pub divisors: Vec<CurveDivisor>,
}

impl ConstructionInput {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Validation(m));
        if self.conductor == 0 {
            return bad("conductor must be positive".into());
        }
        if self.constants.is_empty() {
            return bad("at least one constant section is needed".into());
        }
        if self.constants.len() != self.divisors.len() {
            return bad(format!("{} constants but {} divisors", self.constants.len(), self.divisors.len()));
        }
        let mut fibers = vec![&self.c0, &self.c_inf];
        fibers.extend(&self.constants);
        for (i, p) in fibers.iter().enumerate() {
            for s in [p.u(), p.v()] {
                if !field_contains(self.conductor, s.conductor()) {
                    return bad(format!("{s} does not lie in Q(zeta_{})", self.conductor));
                }
            }
            if fibers[..i].contains(p) {
                return bad(format!("the fiber {p} is listed twice"));
            }
        }
        for (i, d) in self.divisors.iter().enumerate() {
            for e in d.entries() {
                if !field_contains(self.conductor, e.point.value().conductor()) {
                    return bad(format!("x = {} does not lie in Q(zeta_{})", e.point, self.conductor));
                }
                if self.divisors[..i].iter().any(|other| other.mult(&e.point) > 0) {
                    return Err(Error::OverlappingSupports { point: e.point.to_string() });
                }
            }
        }
        Ok(())
    }
}

/// Affine values of the constants once `c0 -> 0` and `cInf -> infinity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizedConfig {
    pub values: Vec<Scalar>,
}

impl NormalizedConfig {
    /// `v_i / v_1`, which no longer depend on the choice of normalizing map.
    pub fn ratios(&self) -> Vec<Scalar> {
        let inv = self.values[0].inverse().expect("normalized values are nonzero");
        self.values.iter().map(|v| v * &inv).collect()
    }
}

pub fn normalize_configuration(input: &ConstructionInput) -> Result<NormalizedConfig> {
    if input.c0 == input.c_inf {
        return Err(Error::Validation("c0 and cInf coincide".into()));
    }
    let m = Moebius::normalizing(&input.c0, &input.c_inf)?;
    let values = input
        .constants
        .iter()
        .map(|c| {
            m.apply(c)
                .affine()
                .filter(|v| !v.is_zero())
                .cloned()
                .ok_or_else(|| Error::Validation(format!("constant {c} coincides with c0 or cInf")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NormalizedConfig { values })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Multiplicative orders of the ratios `v_i / v_1`.
    Orders(Vec<u32>),
    /// 1-based index of the first ratio that is not a root of unity.
    FailingIndex(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectivityVerdict {
    pub projective: bool,
    pub witness: Witness,
    pub ratios: Vec<Scalar>,
}

/// The bundle is projective iff, after `c0 -> 0` and `cInf -> infinity`,
/// some common rescaling makes every constant a root of unity, i.e. iff
/// every ratio `v_i / v_1` is one.
pub fn decide_projective(input: &ConstructionInput) -> Result<ProjectivityVerdict> {
    input.validate()?;
    let ratios = normalize_configuration(input)?.ratios();
    let mut orders = Vec::with_capacity(ratios.len());
    for (i, r) in ratios.iter().enumerate() {
        match is_root_of_unity(r) {
            Some(d) => orders.push(d),
            None => {
                return Ok(ProjectivityVerdict { projective: false, witness: Witness::FailingIndex(i + 1), ratios })
            }
        }
    }
    Ok(ProjectivityVerdict { projective: true, witness: Witness::Orders(orders), ratios })
}
