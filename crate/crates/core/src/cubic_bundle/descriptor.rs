use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_field::{CurvePoint, Order, Polynomial, Scalar};
use crate::ruled_surface::{evaluate_section, intersection_multiplicity, recover_divisor, CurveDivisor, Section};

/// The combinatorial model of a bundle of singular plane cubics: the two
/// branches of the node on the normalization, the `k` osculating sections,
/// and the cusps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleDescriptor {
    pub sigma0: Section,
    #[serde(rename = "sigmaInf")]
    pub sigma_inf: Section,
    pub osculating: Vec<Section>,
    pub cusp_divisor: CurveDivisor,
    #[serde(rename = "k")]
    pub relative_degree: u32,
}

fn fail<T>(msg: String) -> Result<T> {
    Err(Error::Descriptor(msg))
}

impl BundleDescriptor {
    /// Checks every invariant, including the shape of the osculating
    /// sections at each cusp.
    pub fn validate(&self) -> Result<()> {
        if self.sigma0 == self.sigma_inf {
            return fail("sigma0 and sigmaInf coincide".into());
        }
        let cusps = recover_divisor(&self.sigma0, &self.sigma_inf)?;
        if cusps != self.cusp_divisor {
            return fail(format!("cusp divisor is {}, but sigma0 and sigmaInf meet in {cusps}", self.cusp_divisor));
        }
        if self.relative_degree == 0 || self.relative_degree as usize != self.osculating.len() {
            return fail(format!("k = {} but {} osculating sections", self.relative_degree, self.osculating.len()));
        }
        for (i, s) in self.osculating.iter().enumerate() {
            if *s == self.sigma0 || *s == self.sigma_inf {
                return fail(format!("osculating section {} equals a branch of the node", i + 1));
            }
            if self.osculating[..i].contains(s) {
                return fail(format!("osculating section {} is listed twice", i + 1));
            }
        }
        for e in self.cusp_divisor.entries() {
            self.check_cusp(&e.point, e.mult)?;
        }
        Ok(())
    }

    fn check_cusp(&self, mu: &CurvePoint, m: u32) -> Result<()> {
        let p = evaluate_section(&self.sigma0, mu);
        let avoiding: Vec<usize> =
            (0..self.osculating.len()).filter(|&i| evaluate_section(&self.osculating[i], mu) != p).collect();
        if avoiding.len() != 1 {
            return fail(format!(
                "over the cusp x = {mu}, {} osculating sections avoid the singular point (expected exactly one)",
                avoiding.len()
            ));
        }
        let through: Vec<&Section> =
            self.osculating.iter().enumerate().filter(|(i, _)| *i != avoiding[0]).map(|(_, s)| s).collect();
        let expected = Order::Finite(m);
        for (a, sa) in through.iter().enumerate() {
            let mut others: Vec<&Section> = vec![&self.sigma0, &self.sigma_inf];
            others.extend(&through[a + 1..]);
            for sb in others {
                let got = intersection_multiplicity(sa, sb, mu);
                if got != expected {
                    return fail(format!(
                        "over the cusp x = {mu}, osculating sections meet with multiplicity {got}, expected {m}"
                    ));
                }
            }
        }
        Ok(())
    }

    /// `g` up to the choice of chart: `(cross(sigma0, sigmaInf) / 2)^2`.
    pub fn discriminant(&self) -> Polynomial {
        let h = self.sigma0.cross(&self.sigma_inf).scale(&Scalar::from_ratio(1, 2));
        &h * &h
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FiberKind {
    Nodal,
    Cuspidal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicFiber {
    pub c: Scalar,
    pub mu: CurvePoint,
    pub kind: FiberKind,
}

pub fn classify_fiber(desc: &BundleDescriptor, mu: &CurvePoint) -> CubicFiber {
    let c = desc.discriminant().eval(mu.value());
    let kind = if desc.cusp_divisor.mult(mu) > 0 { FiberKind::Cuspidal } else { FiberKind::Nodal };
    CubicFiber { c, mu: mu.clone(), kind }
}

/// The osculating sections near a cusp of multiplicity `m`, in the chart
/// where the branches are `[x^m : 1]` and `[-x^m : 1]`: `[1:0]` for
/// `xi = 1` and `[(xi + 1)/(xi - 1) x^m : 1]` for the other `k`-th roots.
pub fn osculating_sections_near_cusp(m: u32, k: u32) -> Vec<Section> {
    (0..k as i64)
        .map(|j| {
            if j == 0 {
                return Section::new(Polynomial::one(), Polynomial::zero()).expect("nonzero");
            }
            let xi = Scalar::root_of_unity(k, j);
            let one = Scalar::one();
            let c = (&xi + &one).try_div(&(&xi - &one)).expect("xi != 1");
            Section::graph(Polynomial::monomial(c, m as usize))
        })
        .collect()
}
