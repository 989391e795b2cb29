use serde::Serialize;

use crate::cubic_bundle::BundleDescriptor;
use crate::error::{Error, Result};
use crate::exact_field::cyclotomic::lcm_u32;
use crate::exact_field::{Polynomial, ProjValue, Scalar};
use crate::projectivity::{normalize_configuration, ConstructionInput};
use crate::ruled_surface::{
    elt_composite, evaluate_section, inverse_elt_data, recover_divisor, CurveDivisor, EltData, Section, TransformResult,
};

/// Applies `elt_{(sigma_i, D_i)}` to the constant sections of the input and
/// reads off the descriptor of the resulting bundle.
pub fn construct_bundle(input: &ConstructionInput) -> Result<BundleDescriptor> {
    input.validate()?;
    let mut tracked = vec![Section::constant(&input.c0), Section::constant(&input.c_inf)];
    tracked.extend(input.constants.iter().map(Section::constant));
    let data = EltData::new(tracked[2..].iter().cloned().zip(input.divisors.iter().cloned()).collect())?;
    let r = elt_composite(&data, &tracked)?;
    let sigma0 = r.tracked[0].clone();
    let sigma_inf = r.tracked[1].clone();
    let cusp_divisor = recover_divisor(&sigma0, &sigma_inf)?;
    Ok(BundleDescriptor {
        sigma0,
        sigma_inf,
        osculating: r.tracked[2..].to_vec(),
        cusp_divisor,
        relative_degree: input.constants.len() as u32,
    })
}

/// The transformation `elt_{(sigma0, cusp divisor)}` of a descriptor to
/// `P^1 x A^1`, followed by the coordinate change with `sigma0 -> [0:1]`
/// and `sigmaInf -> [1:0]`.
#[derive(Clone, Debug, Serialize)]
pub struct Trivialization {
    pub data: EltData,
    /// Images of `sigma0`, `sigmaInf` and the osculating sections, all constant.
    pub sections: Vec<Section>,
    /// Values of the osculating sections; never `0` or `infinity`.
    pub constants: Vec<Scalar>,
    #[serde(skip)]
    pub transform: TransformResult,
}

fn not_trivial<T>(msg: String) -> Result<T> {
    Err(Error::NotTrivializable(msg))
}

pub fn trafo_to_trivial(desc: &BundleDescriptor) -> Result<Trivialization> {
    let mut tracked = vec![desc.sigma0.clone(), desc.sigma_inf.clone()];
    tracked.extend(desc.osculating.iter().cloned());
    let data = EltData::new(vec![(desc.sigma0.clone(), desc.cusp_divisor.clone())])?;
    let transform = elt_composite(&data, &tracked)?;
    let (s0, si) = (&transform.tracked[0], &transform.tracked[1]);
    // columns sigmaInf, sigma0; invertible over every point when they are disjoint
    let det = si.cross(s0);
    if !det.is_constant() || det.is_zero() {
        return not_trivial(format!("the images of sigma0 and sigmaInf still meet: {s0}, {si}"));
    }
    let straighten = |s: &Section| {
        let a = &(s0.b() * s.a()) - &(s0.a() * s.b());
        let b = &(si.a() * s.b()) - &(si.b() * s.a());
        Section::new(a, b).expect("invertible")
    };
    let sections: Vec<Section> = transform.tracked.iter().map(straighten).collect();
    let mut constants = Vec::with_capacity(desc.osculating.len());
    for (i, s) in sections.iter().enumerate() {
        if !s.is_constant() {
            return not_trivial(format!("the image {s} of section {i} is not constant"));
        }
        if sections[..i].contains(s) {
            return not_trivial(format!("the image {s} of section {i} repeats an earlier one"));
        }
        if i >= 2 {
            constants.push(evaluate_section(s, &0.into()).affine().cloned().expect("distinct from [1:0]"));
        }
    }
    Ok(Trivialization { data, sections, constants, transform })
}

/// Reads the construction data back from a descriptor: each osculating
/// section collects the cusps it avoids, with their multiplicities, and
/// its constant comes from [`trafo_to_trivial`].
pub fn recover_construction(desc: &BundleDescriptor) -> Result<ConstructionInput> {
    desc.validate()?;
    let trivial = trafo_to_trivial(desc)?;
    let mut divisors = vec![CurveDivisor::new(); desc.osculating.len()];
    for e in desc.cusp_divisor.entries() {
        let p = evaluate_section(&desc.sigma0, &e.point);
        for (i, s) in desc.osculating.iter().enumerate() {
            if evaluate_section(s, &e.point) != p {
                divisors[i].add(e.point.clone(), e.mult);
            }
        }
    }
    let mut conductor = 1;
    for c in &trivial.constants {
        conductor = lcm_u32(conductor, c.conductor());
    }
    for e in desc.cusp_divisor.entries() {
        conductor = lcm_u32(conductor, e.point.value().conductor());
    }
    Ok(ConstructionInput {
        conductor,
        c0: ProjValue::finite(Scalar::zero()),
        c_inf: ProjValue::infinity(),
        constants: trivial.constants.into_iter().map(ProjValue::finite).collect(),
        divisors,
    })
}

/// Outcome of constructing a bundle and recovering its data again.
#[derive(Clone, Debug, Serialize)]
pub struct RoundTrip {
    pub recovered: ConstructionInput,
    /// Recovered divisors equal the given ones, index by index.
    pub divisors_match: bool,
    /// Recovered constants agree with the given ones up to one Möbius map.
    pub constants_match: bool,
    /// The inverse of the trivializing transformation gives back the descriptor.
    pub descriptor_restored: bool,
}

impl RoundTrip {
    pub fn ok(&self) -> bool {
        self.divisors_match && self.constants_match && self.descriptor_restored
    }
}

pub fn roundtrip(input: &ConstructionInput) -> Result<RoundTrip> {
    let desc = construct_bundle(input)?;
    let recovered = recover_construction(&desc)?;
    let divisors_match = recovered.divisors == input.divisors;
    // a Möbius map fixing 0 and infinity is a scaling, so the ratios v_i / v_1 decide
    let constants_match = normalize_configuration(&recovered)?.ratios() == normalize_configuration(input)?.ratios();
    let trivial = trafo_to_trivial(&desc)?;
    let inverse = inverse_elt_data(&trivial.data, &trivial.transform)?;
    let back = trivial.transform.continue_with(&inverse)?;
    let descriptor_restored = back.is_identity() && back.tracked == trivial.transform.source();
    Ok(RoundTrip { recovered, divisors_match, constants_match, descriptor_restored })
}

/// The discriminant polynomial `g` of a descriptor, in the chart of its branches.
pub fn discriminant(desc: &BundleDescriptor) -> Polynomial {
    desc.discriminant()
}
