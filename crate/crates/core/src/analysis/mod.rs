//! Sidorenko checks, exponent witnesses, upper-bound certificates and the
//! proof trace of the link-profile bound.

mod bounds;
mod search;
mod trace;

pub use bounds::*;
pub use search::*;
pub use trace::*;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::catalog::{self, Property};
use crate::exact;
use crate::hom::{self, Density, HomConfig};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::{Error, Rational, Result};

/// Where an assumed property comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Catalog(&'static str),
    Asserted,
}

/// A property taken on trust, never computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assumption {
    pub label: String,
    pub subject: Hypergraph,
    pub property: Property,
    pub source: Source,
}

impl Assumption {
    /// A user assertion that `subject` (up to isomorphism, isolated vertices
    /// ignored) has `property`.
    pub fn asserted(subject: Hypergraph, property: Property) -> Self {
        let (subject, _) = subject.compact();
        Assumption { label: String::from("user assertion"), subject, property, source: Source::Asserted }
    }
}

/// Justifies `property` for `h` from the catalog or from a matching assertion.
pub fn justify(h: &Hypergraph, property: Property, asserted: &[Assumption]) -> Option<Assumption> {
    let (core, _) = h.compact();
    if let Some(rec) = catalog::has_property(&core, property) {
        return Some(Assumption { label: rec.family, subject: core, property, source: Source::Catalog(rec.provenance) });
    }
    asserted
        .iter()
        .find(|a| {
            a.property.implies(property)
                && a.subject.uniformity() == core.uniformity()
                && crate::embed::is_isomorphic(&a.subject, &core).unwrap_or(false)
        })
        .cloned()
}

/// Outcome of comparing t_F(H) with t_{K_r}(H)^{e(F)}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidorenkoCheck {
    pub pattern_density: Density,
    pub edge_density: Rational,
    pub target: Rational,
    /// t_F(H) − t_{K_r}(H)^{e(F)}.
    pub margin: Rational,
    pub holds: bool,
}

pub fn sidorenko_check(f: &Hypergraph, h: &Hypergraph) -> Result<SidorenkoCheck> {
    sidorenko_check_with(f, h, &HomConfig::default())
}

pub fn sidorenko_check_with(f: &Hypergraph, h: &Hypergraph, cfg: &HomConfig) -> Result<SidorenkoCheck> {
    if f.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    let pattern_density = hom::density_with(f, h, cfg)?;
    let edge_density = hom::edge_density(h)?;
    let target = exact::pow(&edge_density, f.edge_count() as u64);
    let margin = &pattern_density.value - &target;
    let holds = margin >= Rational::zero();
    Ok(SidorenkoCheck { pattern_density, edge_density, target, margin, holds })
}

pub const DEFAULT_MAX_DENOMINATOR: u64 = 10;

/// A certified lower bound s(F) ≥ p/q from one host: t_F(H)^q ≤ t(H)^p with
/// t(H) = t_{K_r}(H) < 1, so t_F(H) = t(H)^s for some s ≥ p/q.
#[derive(Clone, Debug, PartialEq)]
pub struct ExponentWitness {
    pub pattern: Hypergraph,
    pub host: Hypergraph,
    pub pattern_density: Rational,
    pub edge_density: Rational,
    pub p: u64,
    pub q: u64,
    pub certified: Rational,
    /// t_F(H)^q compared with t(H)^p; never `Greater`.
    pub ordering: Ordering,
    /// ln t_F(H) / ln t(H), advisory.
    pub ratio: f64,
}

impl ExponentWitness {
    /// Recounts both densities and re-checks the powered inequality.
    pub fn verify(&self) -> Result<()> {
        let tf = hom::density(&self.pattern, &self.host)?.value;
        let tk = hom::edge_density(&self.host)?;
        if tf != self.pattern_density || tk != self.edge_density {
            return Err(Error::Internal(String::from("witness densities do not recount")));
        }
        if self.q == 0 || self.certified != exact::frac(self.p as i64, self.q as i64) {
            return Err(Error::Internal(String::from("witness exponent is malformed")));
        }
        if exact::cmp_powers(&tf, self.q, &tk, self.p) == Ordering::Greater {
            return Err(Error::Internal(format!("t_F^{} > t^{}: certificate is unsound", self.q, self.p)));
        }
        Ok(())
    }
}

/// Largest p/q with q ≤ `max_q` and t_f^q ≤ t_k^p, for 0 < t_f ≤ 1 and
/// 0 < t_k < 1. Ties keep the smallest q.
pub fn certify_exponent(t_f: &Rational, t_k: &Rational, max_q: u64) -> (u64, u64, Ordering) {
    let ratio = exact::ln(t_f) / exact::ln(t_k);
    let holds = |p: u64, q: u64| exact::cmp_powers(t_f, q, t_k, p) != Ordering::Greater;
    let mut best = (0u64, 1u64);
    for q in 1..=max_q.max(1) {
        let guess = libm::floor(ratio * q as f64);
        let mut p = if guess.is_finite() && guess > 0.0 { guess as u64 } else { 0 };
        while p > 0 && !holds(p, q) {
            p -= 1;
        }
        while holds(p + 1, q) {
            p += 1;
        }
        if (p as u128) * (best.1 as u128) > (best.0 as u128) * (q as u128) {
            best = (p, q);
        }
    }
    let ordering = exact::cmp_powers(t_f, best.1, t_k, best.0);
    (best.0, best.1, ordering)
}

pub fn exponent_ratio(f: &Hypergraph, h: &Hypergraph, max_q: u64) -> Result<ExponentWitness> {
    exponent_ratio_with(f, h, max_q, &HomConfig::default())
}

pub fn exponent_ratio_with(f: &Hypergraph, h: &Hypergraph, max_q: u64, cfg: &HomConfig) -> Result<ExponentWitness> {
    let tf = hom::density_with(f, h, cfg)?.value;
    let tk = hom::edge_density(h)?;
    if tf.is_zero() {
        return Err(Error::ZeroDensity(String::from("t_F(H) = 0")));
    }
    if tk.is_zero() {
        return Err(Error::ZeroDensity(String::from("host has no edges")));
    }
    if tk >= Rational::one() {
        return Err(Error::InvalidParameter(String::from("edge density of a simple host is below 1")));
    }
    let (p, q, ordering) = certify_exponent(&tf, &tk, max_q);
    let ratio = exact::ln(&tf) / exact::ln(&tk);
    let w = ExponentWitness {
        pattern: f.clone(),
        host: h.clone(),
        certified: exact::frac(p as i64, q as i64),
        pattern_density: tf,
        edge_density: tk,
        p,
        q,
        ordering,
        ratio,
    };
    w.verify()?;
    Ok(w)
}

/// Report of the tensor-power amplification for a claimed inequality
/// t_F(H) ≥ c·t(H)^s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmplifyRow {
    pub power: u32,
    pub host_vertices: usize,
    pub pattern_density: Rational,
    pub edge_density: Rational,
    /// t_F(H^{⊗k})^q / t(H^{⊗k})^p for s = p/q.
    pub slack: Rational,
    pub claim_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmplifyReport {
    pub constant: Rational,
    pub exponent: Rational,
    pub rows: Vec<AmplifyRow>,
    pub first_violation: Option<u32>,
}

/// Counts t_F in H^{⊗j} for j = 1..=k and tests t_F ≥ c·t^s on each power,
/// by comparing t_F^q with c^q·t^p.
pub fn tensor_amplify(
    f: &Hypergraph,
    h: &Hypergraph,
    c: &Rational,
    s: &Rational,
    k: u32,
    cfg: &HomConfig,
) -> Result<AmplifyReport> {
    if s < &Rational::zero() || c < &Rational::zero() {
        return Err(Error::InvalidParameter(String::from("c and s must be nonnegative")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter(String::from("k must be at least 1")));
    }
    let p = s.numer().to_biguint().expect("nonnegative");
    let q = s.denom().to_biguint().expect("positive");
    let (p, q) = match (u64::try_from(&p), u64::try_from(&q)) {
        (Ok(p), Ok(q)) => (p, q),
        _ => return Err(Error::InvalidParameter(String::from("exponent too large"))),
    };
    let base = hom::density_with(f, h, cfg)?.value;
    let cq = exact::pow(c, q);
    let mut rows = Vec::new();
    let mut first_violation = None;
    let mut power = h.clone();
    for j in 1..=k {
        if j > 1 {
            if power.vertex_count() * h.vertex_count() > cfg.max_tensor_vertices {
                return Err(Error::SizeCap(format!(
                    "H^{} would have {} vertices",
                    j,
                    power.vertex_count() * h.vertex_count()
                )));
            }
            power = crate::constructions::tensor_product(&power, h)?;
        }
        let tf = hom::density_with(f, &power, cfg)?.value;
        if tf != exact::pow(&base, j as u64) {
            return Err(Error::Internal(format!("tensor identity fails at power {}", j)));
        }
        let tk = hom::edge_density(&power)?;
        let tkp = exact::pow(&tk, p);
        let lhs = exact::pow(&tf, q);
        let claim_holds = lhs >= &cq * &tkp;
        let slack = if tkp.is_zero() { Rational::zero() } else { lhs / tkp };
        if !claim_holds && first_violation.is_none() {
            first_violation = Some(j);
        }
        rows.push(AmplifyRow {
            power: j,
            host_vertices: power.vertex_count(),
            pattern_density: tf,
            edge_density: tk,
            slack,
            claim_holds,
        });
    }
    Ok(AmplifyReport { constant: c.clone(), exponent: s.clone(), rows, first_violation })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatioMode {
    Components,
    Dominating,
}

/// Both sides of hom(M,H)/hom(M−V(M'),H) ≥ t(H)^{d_M(V(M'))}·n^{v(M')}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomRatioCheck {
    pub hom_whole: BigUint,
    pub hom_rest: BigUint,
    pub boundary: usize,
    pub removed: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    pub assumptions: Vec<Assumption>,
}

pub fn hom_ratio_check(
    m: &Hypergraph,
    sub_vertices: &[Vertex],
    h: &Hypergraph,
    mode: RatioMode,
    asserted: &[Assumption],
) -> Result<HomRatioCheck> {
    if m.uniformity() != h.uniformity() {
        return Err(Error::UniformityMismatch { expected: h.uniformity(), found: m.uniformity() });
    }
    let mut set = sub_vertices.to_vec();
    set.sort_unstable();
    set.dedup();
    let boundary = m.boundary_degree(&set)?;
    let mut assumptions = Vec::new();
    match mode {
        RatioMode::Components => {
            if !m.is_component_closed(&set) {
                return Err(Error::NotComponentClosed(format!("{:?}", set)));
            }
            let sub = m.induced(&set);
            if sub.edge_count() > 0 {
                let a = justify(&sub, Property::Sidorenko, asserted)
                    .ok_or_else(|| Error::Hypothesis(format!("no Sidorenko justification for {:?}", sub)))?;
                assumptions.push(a);
            }
        }
        RatioMode::Dominating => {
            if m.edge_count() > 0 {
                let a = justify(m, Property::Dominating, asserted)
                    .ok_or_else(|| Error::Hypothesis(format!("no dominating justification for {:?}", m)))?;
                assumptions.push(a);
            }
        }
    }
    let (rest, _) = m.remove_vertices(&set)?;
    let hom_whole = hom::count_homomorphisms(m, h)?;
    let hom_rest = hom::count_homomorphisms(&rest, h)?;
    if hom_rest.is_zero() {
        return Err(Error::ZeroDensity(String::from("hom(M − V(M'), H) = 0")));
    }
    let tk = hom::edge_density(h)?;
    let rhs = exact::pow(&tk, boundary as u64)
        * exact::from_biguint(&exact::pow_uint(h.vertex_count() as u64, set.len() as u64));
    let holds = exact::from_biguint(&hom_whole) >= exact::from_biguint(&hom_rest) * &rhs;
    let lhs = exact::ratio(&hom_whole, &hom_rest);
    Ok(HomRatioCheck { hom_whole, hom_rest, boundary, removed: set.len(), lhs, rhs, holds, assumptions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::exact::frac;

    #[test]
    fn sidorenko_margin() {
        let c4 = constructions::cycle(4).unwrap();
        let k3 = Hypergraph::complete(2, 3);
        let chk = sidorenko_check(&c4, &k3).unwrap();
        assert!(chk.holds);
        assert_eq!(chk.margin, frac(2, 81));
        assert!(sidorenko_check(&Hypergraph::empty(2, 2), &k3).is_err());
    }

    #[test]
    fn exponent_of_c4_in_triangle() {
        let w = exponent_ratio(&constructions::cycle(4).unwrap(), &Hypergraph::complete(2, 3), 10).unwrap();
        assert_eq!((w.p, w.q), (37, 10));
        assert!((w.ratio - 3.709511291351455).abs() < 1e-9);
        let k2 = Hypergraph::complete(2, 2);
        let w = exponent_ratio(&k2, &constructions::cycle(5).unwrap(), 10).unwrap();
        assert_eq!((w.p, w.q, w.ordering), (1, 1, Ordering::Equal));
    }

    #[test]
    fn amplification() {
        let c4 = constructions::cycle(4).unwrap();
        let k3 = Hypergraph::complete(2, 3);
        let rep = tensor_amplify(&c4, &k3, &Rational::one(), &exact::int(4), 3, &HomConfig::default()).unwrap();
        let slacks: Vec<Rational> = rep.rows.iter().map(|r| r.slack.clone()).collect();
        assert_eq!(slacks, [frac(9, 8), frac(81, 64), frac(729, 512)]);
        assert_eq!(rep.first_violation, None);
        // ln(2/9)/ln(2/3) > 18/5, so t_F < t^{18/5} and any constant is
        // eventually overwhelmed; with c = 9/10 this happens at the cube
        let rep = tensor_amplify(&c4, &k3, &frac(9, 10), &frac(18, 5), 3, &HomConfig::default()).unwrap();
        assert!(rep.rows[0].claim_holds);
        assert_eq!(rep.first_violation, Some(3));
    }

    #[test]
    fn hom_ratio_examples() {
        let k3 = Hypergraph::complete(2, 3);
        let two = constructions::disjoint_edges(2, 2).unwrap();
        let chk = hom_ratio_check(&two, &[0, 1], &k3, RatioMode::Components, &[]).unwrap();
        assert_eq!((chk.lhs.clone(), chk.rhs.clone()), (exact::int(6), exact::int(6)));
        assert!(chk.holds);
        let c4 = constructions::cycle(4).unwrap();
        let chk = hom_ratio_check(&c4, &[0, 1], &k3, RatioMode::Dominating, &[]).unwrap();
        assert_eq!(chk.hom_rest, BigUint::from(6u32));
        assert_eq!(chk.lhs, exact::int(3));
        assert_eq!(chk.rhs, frac(8, 3));
        assert!(chk.holds);
        let chk = hom_ratio_check(&c4, &[], &k3, RatioMode::Dominating, &[]).unwrap();
        assert_eq!((chk.lhs, chk.rhs), (exact::int(1), exact::int(1)));
        assert!(hom_ratio_check(&c4, &[0], &k3, RatioMode::Components, &[]).is_err());
    }
}
