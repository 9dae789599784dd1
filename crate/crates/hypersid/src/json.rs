//! JSON shapes for kernels, certificates and command reports. Rationals are
//! written as strings `p/q` (or `p` for integers) so they survive any JSON
//! reader exactly.

use std::cmp::Ordering;

use hypersid_core::analysis::{Assumption, BoundCertificate, ExponentWitness, Source};
use hypersid_core::domination::WeightedKernel;
use hypersid_core::{Hypergraph, Rational, Vertex};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::Error;

pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::Input(format!("`{}` is not a rational `p/q`", text));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub uniformity: usize,
    pub vertices: usize,
    pub edges: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<u8>>,
}

impl HypergraphJson {
    pub fn of(h: &Hypergraph) -> Self {
        HypergraphJson { uniformity: h.uniformity(), vertices: h.vertex_count(), edges: h.edges().map(|e| e.to_vec()).collect(), parts: None }
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph, Error> {
        Ok(Hypergraph::new(self.uniformity, self.vertices, &self.edges)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelEntry {
    pub cells: Vec<Vertex>,
    pub value: String,
}

/// A symmetric step kernel listed on sorted cell multisets. Multisets that
/// are not listed are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelJson {
    pub uniformity: usize,
    pub resolution: usize,
    pub entries: Vec<KernelEntry>,
}

impl KernelJson {
    pub fn of(k: &WeightedKernel) -> Self {
        KernelJson {
            uniformity: k.uniformity(),
            resolution: k.resolution(),
            entries: k
                .entries()
                .into_iter()
                .filter(|(_, v)| *v != Rational::from_integer(0.into()))
                .map(|(cells, v)| KernelEntry { cells, value: rational_string(&v) })
                .collect(),
        }
    }

    pub fn to_kernel(&self) -> Result<WeightedKernel, Error> {
        let mut table = std::collections::BTreeMap::new();
        for (i, e) in self.entries.iter().enumerate() {
            if e.cells.len() != self.uniformity {
                return Err(Error::Input(format!("kernel entry {} has {} cells, expected {}", i, e.cells.len(), self.uniformity)));
            }
            if let Some(&c) = e.cells.iter().find(|&&c| c as usize >= self.resolution) {
                return Err(Error::Input(format!("kernel entry {} uses cell {} outside 0..{}", i, c, self.resolution)));
            }
            let mut key = e.cells.clone();
            key.sort_unstable();
            if table.insert(key.clone(), parse_rational(&e.value)?).is_some() {
                return Err(Error::Input(format!("kernel entry {} repeats cells {:?}", i, key)));
            }
        }
        Ok(WeightedKernel::from_fn(self.uniformity, self.resolution, |m| {
            table.get(m).cloned().unwrap_or_else(|| Rational::from_integer(0.into()))
        })?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssumptionJson {
    pub label: String,
    pub property: String,
    /// `catalog` or `asserted`.
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    pub subject: HypergraphJson,
}

impl AssumptionJson {
    pub fn of(a: &Assumption) -> Self {
        let (source, reference) = match a.source {
            Source::Catalog(r) => ("catalog", Some(r.to_string())),
            Source::Asserted => ("asserted", None),
        };
        AssumptionJson {
            label: a.label.clone(),
            property: a.property.name().to_string(),
            source: source.to_string(),
            reference,
            subject: HypergraphJson::of(&a.subject),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateJson {
    Bound {
        theorem: String,
        inputs: Vec<(String, String)>,
        transcript: Vec<CheckJson>,
        assumptions: Vec<AssumptionJson>,
        bound: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        instance_bound: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pattern: Option<HypergraphJson>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        container: Option<HypergraphJson>,
    },
    ExponentWitness {
        pattern: HypergraphJson,
        host: HypergraphJson,
        pattern_density: String,
        edge_density: String,
        p: u64,
        q: u64,
        certified: String,
        /// `less` or `equal`: t_F^q against t^p.
        ordering: String,
        ratio: f64,
    },
}

impl CertificateJson {
    pub fn bound(c: &BoundCertificate) -> Self {
        CertificateJson::Bound {
            theorem: c.theorem.tag().to_string(),
            inputs: c.inputs.clone(),
            transcript: c.transcript.iter().map(|k| CheckJson { name: k.name.clone(), passed: k.passed, detail: k.detail.clone() }).collect(),
            assumptions: c.assumptions.iter().map(AssumptionJson::of).collect(),
            bound: rational_string(&c.bound),
            instance_bound: c.instance_bound.as_ref().map(rational_string),
            pattern: c.pattern.as_ref().map(HypergraphJson::of),
            container: c.container.as_ref().map(HypergraphJson::of),
        }
    }

    pub fn witness(w: &ExponentWitness) -> Self {
        CertificateJson::ExponentWitness {
            pattern: HypergraphJson::of(&w.pattern),
            host: HypergraphJson::of(&w.host),
            pattern_density: rational_string(&w.pattern_density),
            edge_density: rational_string(&w.edge_density),
            p: w.p,
            q: w.q,
            certified: rational_string(&w.certified),
            ordering: match w.ordering {
                Ordering::Less => "less",
                Ordering::Equal => "equal",
                Ordering::Greater => "greater",
            }
            .to_string(),
            ratio: w.ratio,
        }
    }

    /// Re-checks a witness read back from JSON by recounting both densities.
    pub fn verify_witness(&self) -> Result<(), Error> {
        let CertificateJson::ExponentWitness { pattern, host, p, q, .. } = self else {
            return Err(Error::Input(String::from("not an exponent witness")));
        };
        let f = pattern.to_hypergraph()?;
        let h = host.to_hypergraph()?;
        let tf = hypersid_core::hom::density(&f, &h)?.value;
        let tk = hypersid_core::hom::edge_density(&h)?;
        if hypersid_core::exact::cmp_powers(&tf, *q, &tk, *p) == Ordering::Greater {
            return Err(Error::Input(format!("t_F^{} > t^{}", q, p)));
        }
        Ok(())
    }
}

/// Envelope for every JSON report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub result: serde_json::Value,
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypersid_core::exact::frac;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("18/81").unwrap(), frac(2, 9));
        assert_eq!(parse_rational(" -3 ").unwrap(), frac(-3, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_string(&frac(2, 9)), "2/9");
        assert_eq!(rational_string(&frac(14, 1)), "14");
    }

    #[test]
    fn kernel_round_trip() {
        let k = WeightedKernel::from_fn(2, 3, |m| frac(m[0] as i64 + 2 * m[1] as i64 - 1, 3)).unwrap();
        let j = KernelJson::of(&k);
        let text = serde_json::to_string(&j).unwrap();
        let back: KernelJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_kernel().unwrap(), k);
    }

    #[test]
    fn kernel_rejects_repeats() {
        let j = KernelJson {
            uniformity: 2,
            resolution: 2,
            entries: vec![KernelEntry { cells: vec![0, 1], value: "1".into() }, KernelEntry { cells: vec![1, 0], value: "1".into() }],
        };
        assert!(j.to_kernel().is_err());
    }
}
