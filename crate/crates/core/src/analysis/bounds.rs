//! Upper-bound certificates for Sidorenko exponents.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{justify, Assumption, Source};
use crate::catalog::{self, Property};
use crate::constructions;
use crate::embed;
use crate::exact;
use crate::hypergraph::{Hypergraph, PartiteHypergraph, Vertex};
use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    UnifiedComponents,
    UnifiedDominating,
    TightCycle,
    Sparse,
    GridLinks,
    Lift,
    BipartiteLinks,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::UnifiedComponents => "unified-case-1",
            Theorem::UnifiedDominating => "unified-case-2",
            Theorem::TightCycle => "tight-cycle",
            Theorem::Sparse => "sparse",
            Theorem::GridLinks => "grid-links",
            Theorem::Lift => "lift",
            Theorem::BipartiteLinks => "bipartite-links",
        }
    }
}

/// One hypothesis check in a certificate transcript.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// An upper bound on s(F) (or an extremal exponent) together with the checks
/// and assumptions it rests on. Only constructed when every check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCertificate {
    pub theorem: Theorem,
    pub inputs: Vec<(String, String)>,
    pub transcript: Vec<Check>,
    pub assumptions: Vec<Assumption>,
    pub bound: Rational,
    /// The exact Σ d_M value of the instance the proof builds, when it
    /// differs in kind from the headline formula.
    pub instance_bound: Option<Rational>,
    pub pattern: Option<Hypergraph>,
    pub container: Option<Hypergraph>,
}

#[derive(Default)]
struct Transcript {
    checks: Vec<Check>,
}

impl Transcript {
    fn require(&mut self, name: &str, passed: bool, detail: String) -> Result<()> {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.clone() });
        if passed {
            Ok(())
        } else {
            Err(Error::Hypothesis(format!("{}: {}", name, detail)))
        }
    }

    fn note(&mut self, name: &str, detail: String) {
        self.checks.push(Check { name: name.to_string(), passed: true, detail });
    }
}

fn edge_list(h: &Hypergraph) -> String {
    format!("{:?}", h.edges().collect::<Vec<_>>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnifiedCase {
    /// Links are disjoint unions of components of M, each Sidorenko.
    SidorenkoComponents,
    /// M is dominating.
    Dominating,
}

/// Σ_i d_M(V(L_i)) over the designated link profile of `f`, with `m` named
/// inside V(F). Some designated vertex must have link exactly `m`; it is
/// moved to the front of the profile.
pub fn bound_unified(
    f: &PartiteHypergraph,
    m: &Hypergraph,
    case: UnifiedCase,
    asserted: &[Assumption],
) -> Result<BoundCertificate> {
    let r = f.uniformity();
    if r < 2 {
        return Err(Error::NoLinks);
    }
    if m.uniformity() != r - 1 {
        return Err(Error::UniformityMismatch { expected: r - 1, found: m.uniformity() });
    }
    if m.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    let mut tr = Transcript::default();
    let nf = f.hypergraph().vertex_count();
    let nn = nf.max(m.vertex_count());
    let mw = m.with_vertex_count(nn)?;
    let designated = r as u8;
    let clash = mw.covered_vertices().into_iter().find(|&v| (v as usize) < nf && f.parts()[v as usize] == designated);
    tr.require(
        "M avoids the designated class",
        clash.is_none(),
        match clash {
            Some(v) => format!("vertex {} of M is designated", v),
            None => format!("M = {}", edge_list(m)),
        },
    )?;
    let profile = f.designated_profile()?;
    let first = profile.entries.iter().position(|l| l.embedded(nn) == mw);
    tr.require(
        "some designated link equals M",
        first.is_some(),
        match first {
            Some(i) => format!("link of vertex {} equals M and is placed first", profile.entries[i].anchor),
            None => String::from("no designated vertex has link M"),
        },
    )?;
    let mut entries = profile.entries.clone();
    let head = entries.remove(first.unwrap());
    entries.insert(0, head);
    let mut degrees = Vec::with_capacity(entries.len());
    for link in &entries {
        let named = link.embedded(nn);
        let outside = named.edges().find(|e| !mw.contains_edge(e)).map(|e| e.to_vec());
        tr.require(
            "link inside M",
            outside.is_none(),
            match &outside {
                Some(e) => format!("link of {} has edge {:?} outside M", link.anchor, e),
                None => format!("link of {} ({} edges) lies inside M", link.anchor, named.edge_count()),
            },
        )?;
        let d = mw.boundary_degree(&link.names)?;
        tr.note("boundary degree", format!("d_M(V(L_{})) = {}", link.anchor, d));
        degrees.push(d);
    }
    let total: usize = degrees.iter().sum();
    let mut assumptions = Vec::new();
    let theorem = match case {
        UnifiedCase::SidorenkoComponents => {
            let comps: Vec<_> = mw.components().into_iter().filter(|c| c.hypergraph.edge_count() > 0).collect();
            for link in &entries {
                let named = link.embedded(nn);
                for c in &comps {
                    let named_c = c.hypergraph.relabel(&c.vertices, nn)?;
                    let inside = named_c.edges().filter(|e| named.contains_edge(e)).count();
                    tr.require(
                        "link is a union of components of M",
                        inside == 0 || inside == named_c.edge_count(),
                        format!("link of {} meets component {:?} in {} of {} edges", link.anchor, c.vertices, inside, named_c.edge_count()),
                    )?;
                }
            }
            for c in &comps {
                let a = justify(&c.hypergraph, Property::Sidorenko, asserted);
                tr.require(
                    "component of M is Sidorenko",
                    a.is_some(),
                    match &a {
                        Some(a) => format!("component {:?}: {}", c.vertices, a.label),
                        None => format!("component {:?} has no catalog entry or assertion", c.vertices),
                    },
                )?;
                assumptions.push(a.unwrap());
            }
            let e = f.hypergraph().edge_count();
            if total != e {
                return Err(Error::Internal(format!("disjoint-link identity fails: sum {} but e(F) = {}", total, e)));
            }
            tr.note("disjoint-link identity", format!("sum of d_M(V(L_i)) = {} = e(F)", total));
            Theorem::UnifiedComponents
        }
        UnifiedCase::Dominating => {
            let a = justify(m, Property::Dominating, asserted);
            tr.require(
                "M is dominating",
                a.is_some(),
                match &a {
                    Some(a) => a.label.clone(),
                    None => String::from("M has no catalog entry or assertion"),
                },
            )?;
            assumptions.push(a.unwrap());
            Theorem::UnifiedDominating
        }
    };
    Ok(BoundCertificate {
        theorem,
        inputs: vec![
            (String::from("F"), edge_list(f.hypergraph())),
            (String::from("M"), edge_list(m)),
            (String::from("link degrees"), format!("{:?}", degrees)),
        ],
        transcript: tr.checks,
        assumptions,
        bound: exact::int(total as i64),
        instance_bound: None,
        pattern: Some(f.hypergraph().clone()),
        container: Some(m.clone()),
    })
}

/// Union of the designated links of `f`, named inside V(F).
pub fn designated_union(f: &PartiteHypergraph) -> Result<Hypergraph> {
    let n = f.hypergraph().vertex_count();
    let mut u = Hypergraph::empty(f.uniformity() - 1, n);
    for link in f.designated_profile()?.entries {
        u = u.union(&link.embedded(n))?;
    }
    Ok(u)
}

/// s(C^{(3)}_{3ℓ}) ≤ 7ℓ through the apex augmentation with M = C_{2ℓ}.
pub fn bound_tight_cycle(ell: usize) -> Result<BoundCertificate> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("tight-cycle bound needs ell >= 2, got {}", ell)));
    }
    let f = constructions::tight_cycle_partite(3, 3 * ell)?;
    let g = designated_union(&f)?;
    let mut tr = Transcript::default();
    let (gc, _) = g.compact();
    tr.require(
        "union of links is an even cycle",
        embed::is_isomorphic(&gc, &constructions::cycle(2 * ell)?)?,
        format!("union = {}", edge_list(&g)),
    )?;
    let p4 = constructions::path(4)?;
    for link in f.designated_profile()?.entries {
        tr.require(
            "link is a path with 3 edges",
            embed::is_isomorphic(&link.hypergraph, &p4)?,
            format!("link of {} = {}", link.anchor, edge_list(&link.embedded(f.hypergraph().vertex_count()))),
        )?;
    }
    let fp = constructions::apex_augment(&f, &g)?;
    tr.require(
        "F is a sub-hypergraph of F'",
        f.hypergraph().edges_within(&fp.hypergraph().with_vertex_count(fp.hypergraph().vertex_count())?),
        format!("F' has {} vertices and {} edges", fp.hypergraph().vertex_count(), fp.hypergraph().edge_count()),
    )?;
    let inner = bound_unified(&fp, &g, UnifiedCase::Dominating, &[])?;
    tr.checks.extend(inner.transcript);
    tr.note(
        "formula accounting",
        format!("d_G(V(G)) = {} plus {} paths at 5 each gives {}", 2 * ell, ell, 7 * ell),
    );
    Ok(BoundCertificate {
        theorem: Theorem::TightCycle,
        inputs: vec![(String::from("ell"), ell.to_string())],
        transcript: tr.checks,
        assumptions: inner.assumptions,
        bound: exact::int(7 * ell as i64),
        instance_bound: Some(inner.bound),
        pattern: Some(fp.into_hypergraph()),
        container: Some(g),
    })
}

/// s(F) ≤ 2c·v(F)^{r−1} with c = e(F)/v(F). The instance value comes from
/// the apex augmentation by the complete (r−1)-partite hypergraph on the
/// classes other than a largest one.
pub fn bound_sparse(f: &PartiteHypergraph) -> Result<BoundCertificate> {
    let h = f.hypergraph();
    let r = f.uniformity();
    let mut tr = Transcript::default();
    let isolated = h.isolated_vertices();
    tr.require(
        "no isolated vertices",
        isolated.is_empty(),
        if isolated.is_empty() { String::from("every vertex lies in an edge") } else { format!("isolated: {:?}", isolated) },
    )?;
    if h.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    let v = h.vertex_count();
    let c = exact::frac(h.edge_count() as i64, v as i64);
    let bound = exact::int(2) * &c * exact::from_biguint(&exact::pow_uint(v as u64, r as u64 - 1));
    tr.note("density", format!("c = {}/{} = {}", h.edge_count(), v, c));
    let mut inputs = vec![(String::from("F"), edge_list(h)), (String::from("c"), c.to_string())];
    let mut assumptions = Vec::new();
    let mut instance_bound = None;
    let mut container = None;
    if r >= 2 {
        // designate a largest class (the highest-numbered among ties)
        let sizes: Vec<usize> = (1..=r as u8).map(|p| f.part_vertices(p).len()).collect();
        let big = (0..r).rev().max_by_key(|&i| (sizes[i], i)).unwrap() as u8 + 1;
        let parts: Vec<u8> = f
            .parts()
            .iter()
            .map(|&p| if p == big { r as u8 } else if p == r as u8 { big } else { p })
            .collect();
        let g = PartiteHypergraph::new(h.clone(), parts)?;
        let classes: Vec<Vec<Vertex>> = (1..r as u8).map(|p| g.part_vertices(p)).collect();
        let mut m_edges: Vec<Vec<Vertex>> = vec![Vec::new()];
        for class in &classes {
            m_edges = m_edges
                .iter()
                .flat_map(|e| {
                    class.iter().map(move |&x| {
                        let mut e = e.clone();
                        e.push(x);
                        e
                    })
                })
                .collect();
        }
        let m = Hypergraph::new(r - 1, v, m_edges)?;
        tr.note(
            "container",
            format!("complete {}-partite on class sizes {:?}", r - 1, classes.iter().map(Vec::len).collect::<Vec<_>>()),
        );
        let fp = constructions::apex_augment(&g, &m)?;
        let inner = bound_unified(&fp, &m, UnifiedCase::Dominating, &[])?;
        tr.checks.extend(inner.transcript);
        if inner.bound > bound {
            return Err(Error::Internal(format!("instance value {} exceeds the formula {}", inner.bound, bound)));
        }
        inputs.push((String::from("designated class"), big.to_string()));
        assumptions = inner.assumptions;
        instance_bound = Some(inner.bound);
        container = Some(m);
    }
    Ok(BoundCertificate {
        theorem: Theorem::Sparse,
        inputs,
        transcript: tr.checks,
        assumptions,
        bound,
        instance_bound,
        pattern: Some(h.clone()),
        container,
    })
}

/// s(F) ≤ 8e(F) + 8k² for a 3-partite F whose designated links together fit
/// in the k×k grid. The links are moved into T_k through the grid embedding,
/// the classes re-chosen by T_k's bipartition, and T_k is used as M.
pub fn bound_grid_links(f: &PartiteHypergraph, k: usize) -> Result<BoundCertificate> {
    if f.uniformity() != 3 {
        return Err(Error::UniformityMismatch { expected: 3, found: f.uniformity() });
    }
    let h = f.hypergraph();
    let n = h.vertex_count();
    let mut tr = Transcript::default();
    let union = designated_union(f)?;
    let (uc, names) = union.compact();
    let grid = constructions::grid(k)?;
    let into_grid = embed::find_embedding(&uc, &grid)?;
    tr.require(
        "links fit in the grid",
        into_grid.is_some(),
        match &into_grid {
            Some(map) => format!("union of links embeds into G_{} via {:?}", k, map),
            None => format!("union of links {} does not embed into G_{}", edge_list(&union), k),
        },
    )?;
    let into_grid = into_grid.unwrap();
    let gk = constructions::grid_embedding(k)?;
    let tk = constructions::torus(k)?;
    tr.note("grid inside T_k", format!("G_{} -> T_{} via {:?}", k, k, gk));
    let side = 2 * k;
    let t_n = tk.vertex_count();
    // new names: union vertices go to T_k, the rest of V(F) after it
    let mut map = vec![Vertex::MAX; n];
    for (i, &v) in names.iter().enumerate() {
        map[v as usize] = gk[into_grid[i] as usize];
    }
    let mut next = t_n as Vertex;
    for slot in map.iter_mut() {
        if *slot == Vertex::MAX {
            *slot = next;
            next += 1;
        }
    }
    let total = next as usize;
    let moved = h.relabel(&map, total)?;
    // T_k is bipartite by the parity of the first coordinate
    let mut parts: Vec<u8> = (0..total).map(|v| if v < t_n { 1 + ((v / side) % 2) as u8 } else { 1 }).collect();
    for v in 0..n {
        if f.parts()[v] == 3 {
            parts[map[v] as usize] = 3;
        }
    }
    let moved = PartiteHypergraph::new(moved, parts)?;
    tr.note("relabelled F", format!("{} vertices, links inside the first {}", total, t_n));
    let fp = constructions::apex_augment(&moved, &tk)?;
    let tag = Assumption {
        label: format!("T_{}", k),
        subject: tk.clone(),
        property: Property::Dominating,
        source: Source::Catalog(catalog::TENSOR_OF_EVEN_CYCLES),
    };
    let inner = bound_unified(&fp, &tk, UnifiedCase::Dominating, core::slice::from_ref(&tag))?;
    tr.checks.extend(inner.transcript);
    let e = h.edge_count();
    let bound = exact::int((8 * e + 8 * k * k) as i64);
    if inner.bound > bound {
        return Err(Error::Internal(format!("instance value {} exceeds the formula {}", inner.bound, bound)));
    }
    Ok(BoundCertificate {
        theorem: Theorem::GridLinks,
        inputs: vec![
            (String::from("F"), edge_list(h)),
            (String::from("k"), k.to_string()),
            (String::from("e(F)"), e.to_string()),
        ],
        transcript: tr.checks,
        assumptions: inner.assumptions,
        bound,
        instance_bound: Some(inner.bound),
        pattern: Some(fp.into_hypergraph()),
        container: Some(tk),
    })
}

/// The grid formula alone, 8e + 8k².
pub fn grid_formula(edges: usize, k: usize) -> Rational {
    exact::int((8 * edges + 8 * k * k) as i64)
}

/// s(F(t_1)…(t_ℓ)) ≤ s_F·Π t_i, given an upper bound `s_f` ≥ e(F).
pub fn lift_bound(s_f: &Rational, pattern_edges: usize, ts: &[usize]) -> Result<BoundCertificate> {
    let mut tr = Transcript::default();
    tr.require(
        "s_F is at least e(F)",
        s_f >= &exact::int(pattern_edges as i64),
        format!("s_F = {}, e(F) = {}", s_f, pattern_edges),
    )?;
    if let Some(i) = ts.iter().position(|&t| t == 0) {
        return Err(Error::InvalidParameter(format!("t_{} = 0", i + 1)));
    }
    let mut bound = s_f.clone();
    for &t in ts {
        bound *= exact::int(t as i64);
        tr.note("lift step", format!("times {} gives {}", t, bound));
    }
    Ok(BoundCertificate {
        theorem: Theorem::Lift,
        inputs: vec![
            (String::from("s_F"), s_f.to_string()),
            (String::from("e(F)"), pattern_edges.to_string()),
            (String::from("t"), format!("{:?}", ts)),
        ],
        transcript: tr.checks,
        assumptions: Vec::new(),
        bound,
        instance_bound: None,
        pattern: None,
        container: None,
    })
}

/// Convenience: the plain product s_F·Π t_i.
pub fn lift_value(s_f: &Rational, ts: &[usize]) -> Rational {
    ts.iter().fold(s_f.clone(), |acc, &t| acc * exact::int(t as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unified_sidorenko_components() {
        // two designated vertices: one with link M = {01, 23}, one with {01}
        let base = Hypergraph::new(3, 6, [[0, 1, 4], [2, 3, 4], [0, 1, 5]]).unwrap();
        let f = PartiteHypergraph::new(base, vec![1, 2, 1, 2, 3, 3]).unwrap();
        let m = Hypergraph::new(2, 4, [[0, 1], [2, 3]]).unwrap();
        let cert = bound_unified(&f, &m, UnifiedCase::SidorenkoComponents, &[]).unwrap();
        assert_eq!(cert.bound, exact::int(3));
        assert_eq!(cert.theorem, Theorem::UnifiedComponents);
    }

    #[test]
    fn unified_rejects_link_outside_m() {
        let base = Hypergraph::new(3, 5, [[0, 1, 4], [0, 2, 3]]).unwrap();
        let f = PartiteHypergraph::new(base, vec![1, 2, 2, 3, 3]).unwrap();
        let m = Hypergraph::new(2, 3, [[0, 1]]).unwrap();
        let err = bound_unified(&f, &m, UnifiedCase::Dominating, &[]).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(ref s) if s.contains("outside M")), "{:?}", err);
    }

    #[test]
    fn tight_cycle_values() {
        for ell in 2..=5 {
            let cert = bound_tight_cycle(ell).unwrap();
            assert_eq!(cert.bound, exact::int(7 * ell as i64));
        }
        assert_eq!(bound_tight_cycle(2).unwrap().instance_bound, Some(exact::int(12)));
        assert_eq!(bound_tight_cycle(3).unwrap().instance_bound, Some(exact::int(21)));
        assert!(bound_tight_cycle(1).is_err());
    }

    #[test]
    fn sparse_values() {
        let c6 = constructions::tight_cycle_partite(3, 6).unwrap();
        assert_eq!(bound_sparse(&c6).unwrap().bound, exact::int(72));
        let lt = PartiteHypergraph::detect(constructions::loose_triangle()).unwrap();
        assert_eq!(bound_sparse(&lt).unwrap().bound, exact::int(36));
        let oct = constructions::complete_partite(&[2, 2, 2]).unwrap();
        assert_eq!(bound_sparse(&oct).unwrap().bound, exact::int(96));
    }

    #[test]
    fn grid_values() {
        let f = constructions::complete_partite(&[2, 2, 1]).unwrap();
        let cert = bound_grid_links(&f, 3).unwrap();
        assert_eq!(cert.bound, exact::int(104));
        assert!(cert.instance_bound.unwrap() <= cert.bound);
        let cert = bound_grid_links(&f, 2).unwrap();
        assert_eq!(cert.bound, exact::int(8 * 4 + 32));
        // K_{1,3} does not fit in G_2
        let star = constructions::complete_partite(&[1, 3, 1]).unwrap();
        assert!(bound_grid_links(&star, 2).is_err());
    }

    #[test]
    fn lift_values() {
        assert_eq!(lift_bound(&exact::int(1), 1, &[5]).unwrap().bound, exact::int(5));
        assert_eq!(lift_bound(&exact::int(4), 4, &[2, 3]).unwrap().bound, exact::int(24));
        assert_eq!(lift_bound(&exact::int(4), 4, &[]).unwrap().bound, exact::int(4));
        assert!(lift_bound(&exact::int(3), 4, &[2]).is_err());
    }
}
