use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_field::{CurvePoint, ProjValue};

use super::frame::Frame;
use super::section::{evaluate_section, CurveDivisor, Section};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EltPair {
    pub section: Section,
    pub divisor: CurveDivisor,
}

/// The data `(sigma_i, D_i)` of a composite elementary transformation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EltData {
    pub pairs: Vec<EltPair>,
}

impl EltData {
    pub fn new(pairs: Vec<(Section, CurveDivisor)>) -> Result<Self> {
        let data =
            EltData { pairs: pairs.into_iter().map(|(section, divisor)| EltPair { section, divisor }).collect() };
        data.validate()?;
        Ok(data)
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.iter().all(|p| p.divisor.is_empty())
    }

    /// Supports must be pairwise disjoint.
    pub fn validate(&self) -> Result<()> {
        for (i, p) in self.pairs.iter().enumerate() {
            for q in &self.pairs[i + 1..] {
                if let Some(mu) = p.divisor.support().find(|mu| q.divisor.mult(mu) > 0) {
                    return Err(Error::OverlappingSupports { point: mu.to_string() });
                }
            }
        }
        Ok(())
    }
}

/// One elementary transformation: the fiber over `mu` is blown up at
/// `center`, given in the coordinates before the step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub mu: CurvePoint,
    pub center: ProjValue,
}

/// Strict transforms of tracked sections after a sequence of elementary
/// transformations, with the coordinates of the final surface.
#[derive(Clone, Debug, Serialize)]
pub struct TransformResult {
    #[serde(skip)]
    source: Vec<Section>,
    pub tracked: Vec<Section>,
    pub steps: Vec<Step>,
    #[serde(skip)]
    frame: Frame,
}

impl TransformResult {
    /// No transformation yet: `P^1 x A^1` with `tracked` as given.
    pub fn start(tracked: Vec<Section>) -> Self {
        TransformResult { source: tracked.clone(), tracked, steps: Vec::new(), frame: Frame::identity() }
    }

    /// The sections before any step, in the original coordinates.
    pub fn source(&self) -> &[Section] {
        &self.source
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Returns to the coordinates the log started from.
    pub fn is_identity(&self) -> bool {
        self.frame.is_identity()
    }

    /// One transformation centered where `tracked[center]` meets the fiber over `mu`.
    pub fn step(&mut self, center: usize, mu: &CurvePoint) -> Result<()> {
        let s = self.tracked.get(center).ok_or(Error::CenterIndex { index: center, len: self.tracked.len() })?;
        let c = evaluate_section(s, mu);
        self.frame = match c.affine() {
            Some(v) => self.frame.elt_finite(mu.value(), v),
            None => self.frame.elt_infinite(mu.value()),
        };
        self.tracked = self.source.iter().map(|s| self.frame.apply(s)).collect();
        self.steps.push(Step { mu: mu.clone(), center: c });
        Ok(())
    }

    /// Applies `data`, whose sections refer to the current tracked list, in
    /// the order the pairs and points are listed.
    pub fn continue_with(&self, data: &EltData) -> Result<TransformResult> {
        let schedule = default_schedule(data);
        self.continue_scheduled(data, &schedule)
    }

    /// As [`continue_with`](Self::continue_with), one step per schedule
    /// entry `(pair, point index)`; each point of `D_i` must occur exactly
    /// its multiplicity many times.
    pub fn continue_scheduled(&self, data: &EltData, schedule: &[(usize, usize)]) -> Result<TransformResult> {
        data.validate()?;
        check_schedule(data, schedule)?;
        let centers = data
            .pairs
            .iter()
            .enumerate()
            .map(|(i, p)| self.tracked.iter().position(|s| *s == p.section).ok_or(Error::UntrackedSection { pair: i }))
            .collect::<Result<Vec<_>>>()?;
        let mut out = self.clone();
        for &(pair, point) in schedule {
            let mu = &data.pairs[pair].divisor.entries()[point].point;
            out.step(centers[pair], mu)?;
        }
        Ok(out)
    }
}

fn default_schedule(data: &EltData) -> Vec<(usize, usize)> {
    let mut schedule = Vec::new();
    for (i, p) in data.pairs.iter().enumerate() {
        for (j, e) in p.divisor.entries().iter().enumerate() {
            schedule.extend(std::iter::repeat_n((i, j), e.mult as usize));
        }
    }
    schedule
}

fn check_schedule(data: &EltData, schedule: &[(usize, usize)]) -> Result<()> {
    let mut expected = default_schedule(data);
    let mut given = schedule.to_vec();
    expected.sort_unstable();
    given.sort_unstable();
    if expected != given {
        return Err(Error::BadSchedule(format!("expected {} steps matching the divisors", expected.len())));
    }
    Ok(())
}

/// A single elementary transformation centered at `tracked[center_index]` over `mu`.
pub fn elt_single(tracked: &[Section], center_index: usize, mu: &CurvePoint) -> Result<TransformResult> {
    let mut out = TransformResult::start(tracked.to_vec());
    out.step(center_index, mu)?;
    Ok(out)
}

/// `elt_{(sigma_i, D_i)}` applied to `P^1 x A^1`; every `sigma_i` must be tracked.
pub fn elt_composite(data: &EltData, tracked: &[Section]) -> Result<TransformResult> {
    TransformResult::start(tracked.to_vec()).continue_with(data)
}

/// [`elt_composite`] with an explicit processing order.
pub fn elt_composite_scheduled(
    data: &EltData,
    tracked: &[Section],
    schedule: &[(usize, usize)],
) -> Result<TransformResult> {
    TransformResult::start(tracked.to_vec()).continue_scheduled(data, schedule)
}

/// Data of the inverse transformation, over the strict transforms.
///
/// Each `mu` in `|D_i|` moves to the one other data section avoiding
/// `sigma_i` over `mu`; more than one such section is rejected. When no
/// other data section avoids it, any tracked section avoiding `sigma_i`
/// over `mu` inverts the step, and the first one is used.
pub fn inverse_elt_data(data: &EltData, transforms: &TransformResult) -> Result<EltData> {
    let source = transforms.source();
    let index = |i: usize, s: &Section| source.iter().position(|t| t == s).ok_or(Error::UntrackedSection { pair: i });
    let data_index = data.pairs.iter().enumerate().map(|(i, p)| index(i, &p.section)).collect::<Result<Vec<_>>>()?;
    let mut inverse: Vec<CurveDivisor> = vec![CurveDivisor::new(); source.len()];
    for (i, pair) in data.pairs.iter().enumerate() {
        let own = data_index[i];
        for e in pair.divisor.entries() {
            let here = evaluate_section(&pair.section, &e.point);
            let avoids = |j: &usize| *j != own && evaluate_section(&source[*j], &e.point) != here;
            let mut candidates: Vec<usize> = data_index.iter().copied().filter(avoids).collect();
            candidates.dedup();
            if candidates.is_empty() {
                candidates.extend((0..source.len()).find(avoids));
            }
            match candidates.as_slice() {
                [j] => inverse[*j].add(e.point.clone(), e.mult),
                _ => {
                    return Err(Error::InverseHypothesis {
                        pair: i,
                        point: e.point.to_string(),
                        candidates: candidates.len(),
                    })
                }
            }
        }
    }
    let pairs = inverse
        .into_iter()
        .enumerate()
        .filter(|(_, d)| !d.is_empty())
        .map(|(j, divisor)| EltPair { section: transforms.tracked[j].clone(), divisor })
        .collect();
    Ok(EltData { pairs })
}

/// Applies `data`, then its inverse in the resulting coordinates, and checks
/// that both the sections and the coordinates come back exactly.
pub fn roundtrip_verify(data: &EltData, tracked: &[Section]) -> Result<bool> {
    let forward = elt_composite(data, tracked)?;
    let inverse = inverse_elt_data(data, &forward)?;
    let back = forward.continue_with(&inverse)?;
    Ok(back.is_identity() && back.tracked == tracked)
}
