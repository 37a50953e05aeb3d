//! JSON and TSV forms of the external interfaces: matroid files, Chow
//! elements, Minkowski weights, and verifier reports.

use serde::{Deserialize, Serialize};

use crate::chow::{ChainMonomial, ChowElement, Presentation};
use crate::corpus::CorpusEntry;
use crate::csm::{Identity, VerifyOutcome};
use crate::error::{Error, Result};
use crate::fan::{FlagCone, MinkowskiWeight};
use crate::matroid::{Matroid, MatroidSpec};
use crate::subset::Subset;

/// The on-disk matroid format: `{"name": .., "n": .., "spec": {"type": ..}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatroidJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub spec: MatroidSpec,
}

fn spec_ground_size(spec: &MatroidSpec) -> usize {
    match spec {
        MatroidSpec::RankTable { n, .. } => *n,
        MatroidSpec::Bases { n, .. } => *n,
        MatroidSpec::Matrix { rows } => rows.first().map_or(0, |r| r.len()),
        MatroidSpec::Uniform { n, .. } => *n,
        MatroidSpec::Graphic { edges, .. } => edges.len(),
    }
}

impl MatroidJson {
    pub fn parse(text: &str) -> Result<MatroidJson> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self) -> Result<Matroid> {
        let n = spec_ground_size(&self.spec);
        if n != self.n {
            return Err(Error::Parse(format!(
                "declared n = {} but the spec determines {} elements",
                self.n, n
            )));
        }
        Matroid::build(&self.spec, self.name.clone())
    }

    pub fn from_entry(entry: &CorpusEntry) -> MatroidJson {
        MatroidJson {
            name: Some(entry.name.clone()),
            n: spec_ground_size(&entry.spec),
            spec: entry.spec.clone(),
        }
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("matroid json serializes")
    }
}

/// One term of a Chow element: `{"monomial": [[flat bits, exponent], ..],
/// "coeff": c}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChowTermJson {
    pub monomial: Vec<(u32, u32)>,
    pub coeff: i64,
}

pub fn chow_element_terms(e: &ChowElement) -> Vec<ChowTermJson> {
    e.terms()
        .map(|(m, c)| ChowTermJson {
            monomial: m.factors().iter().map(|&(f, x)| (f.bits(), x)).collect(),
            coeff: c,
        })
        .collect()
}

pub fn chow_element_from_terms(pres: Presentation, terms: &[ChowTermJson]) -> Result<ChowElement> {
    let mut parsed = Vec::new();
    for t in terms {
        let mono = ChainMonomial::try_new(t.monomial.iter().map(|&(b, x)| (Subset(b), x)))
            .ok_or_else(|| Error::Parse("monomial support is not a chain".into()))?;
        parsed.push((mono, t.coeff));
    }
    Ok(ChowElement::from_terms(pres, parsed))
}

/// Weight serialization: `{"dim": k, "cones": [{"flag": [bits..], "weight"}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightJson {
    pub dim: usize,
    pub cones: Vec<ConeWeightJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConeWeightJson {
    pub flag: Vec<u32>,
    pub weight: i64,
}

pub fn weight_to_json(w: &MinkowskiWeight) -> WeightJson {
    WeightJson {
        dim: w.dim(),
        cones: w
            .iter()
            .map(|(c, weight)| ConeWeightJson {
                flag: c.flats().iter().map(|f| f.bits()).collect(),
                weight,
            })
            .collect(),
    }
}

pub fn weight_from_json(j: &WeightJson) -> Result<MinkowskiWeight> {
    let mut out = MinkowskiWeight::zero(j.dim);
    for cw in &j.cones {
        let cone = FlagCone::new(cw.flag.iter().map(|&b| Subset(b)).collect())
            .ok_or_else(|| Error::Parse("cone flats are not a strict flag".into()))?;
        if cone.dim() != j.dim {
            return Err(Error::Parse(format!(
                "cone of dimension {} in a weight of dimension {}",
                cone.dim(),
                j.dim
            )));
        }
        out.add(cone, cw.weight);
    }
    Ok(out)
}

/// TSV rows `dim <tab> flag <tab> weight`, canonically sorted.
pub fn weight_to_tsv(w: &MinkowskiWeight) -> String {
    let mut out = String::new();
    for (cone, weight) in w.iter() {
        out.push_str(&format!("{}\t{}\t{}\n", w.dim(), cone, weight));
    }
    if w.is_zero() {
        out.push_str(&format!("{}\t(all cones)\t0\n", w.dim()));
    }
    out
}

/// One verifier report row.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportEntry {
    pub matroid: String,
    pub identity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
    pub result: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

pub fn report_entry(
    matroid: &str,
    id: Identity,
    element: Option<usize>,
    outcome: &VerifyOutcome,
) -> ReportEntry {
    let (result, witness) = match outcome {
        VerifyOutcome::Pass => ("pass".to_string(), None),
        VerifyOutcome::Fail(w) => ("fail".to_string(), Some(w.clone())),
        VerifyOutcome::NotApplicable(w) => ("n/a".to_string(), Some(w.clone())),
    };
    ReportEntry {
        matroid: matroid.to_string(),
        identity: id.name().to_string(),
        element,
        result,
        witness,
    }
}
