//! Builders for the hypergraph families used by the analyses.
//!
//! Numbering conventions (fixed, since examples depend on them):
//! - complete partite: class 1 vertices first, then class 2, and so on.
//! - tight cycle C^{(r)}_k: index i stands for the cyclic label i + 1; edges
//!   are the r-intervals {i, …, i+r−1} mod k. In the partite variant the
//!   label j lies in class (j mod r) + 1, so class r collects the labels
//!   congruent to r − 1.
//! - grid G_k and torus T_k: (i, j) with 1-based coordinates is vertex
//!   (i−1)·k + (j−1) in G_k and (i−1)·2k + (j−1) in T_k.
//! - tensor product: (a, b) is vertex a·v(F_2) + b.
//! - lift F(t): the t new vertices follow the vertices of F.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::{Hypergraph, PartiteHypergraph, Vertex};
use crate::{Error, Result};

/// K^{(r)}_{t_1,…,t_r}.
pub fn complete_partite(sizes: &[usize]) -> Result<PartiteHypergraph> {
    if sizes.is_empty() {
        return Err(Error::ZeroUniformity);
    }
    if let Some(i) = sizes.iter().position(|&t| t == 0) {
        return Err(Error::InvalidParameter(format!("part {} has size 0", i + 1)));
    }
    let r = sizes.len();
    let mut offsets = Vec::with_capacity(r);
    let mut parts = Vec::new();
    let mut total = 0usize;
    for (c, &t) in sizes.iter().enumerate() {
        offsets.push(total);
        total += t;
        parts.extend(core::iter::repeat_n((c + 1) as u8, t));
    }
    let mut edges: Vec<Vec<Vertex>> = vec![Vec::new()];
    for (c, &t) in sizes.iter().enumerate() {
        let mut next = Vec::with_capacity(edges.len() * t);
        for e in &edges {
            for x in 0..t {
                let mut f = e.clone();
                f.push((offsets[c] + x) as Vertex);
                next.push(f);
            }
        }
        edges = next;
    }
    PartiteHypergraph::new(Hypergraph::new(r, total, edges)?, parts)
}

/// C^{(r)}_k.
pub fn tight_cycle(r: usize, k: usize) -> Result<Hypergraph> {
    if r == 0 {
        return Err(Error::ZeroUniformity);
    }
    if k < r + 1 {
        return Err(Error::InvalidParameter(format!("tight cycle needs k >= r + 1 (r = {}, k = {})", r, k)));
    }
    Hypergraph::new(r, k, (0..k).map(|i| (0..r).map(|d| ((i + d) % k) as Vertex).collect::<Vec<_>>()))
}

/// C^{(r)}_k with its residue-class partition; needs r | k and k >= 2r.
pub fn tight_cycle_partite(r: usize, k: usize) -> Result<PartiteHypergraph> {
    if r == 0 || !k.is_multiple_of(r) || k < 2 * r {
        return Err(Error::InvalidParameter(format!("partite tight cycle needs r | k and k >= 2r (r = {}, k = {})", r, k)));
    }
    let base = tight_cycle(r, k)?;
    let parts = (0..k).map(|i| ((i + 1) % r + 1) as u8).collect();
    PartiteHypergraph::new(base, parts)
}

/// The k×k grid G_k.
pub fn grid(k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("grid needs k >= 2, got {}", k)));
    }
    let id = |i: usize, j: usize| (i * k + j) as Vertex;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if j + 1 < k {
                edges.push([id(i, j), id(i, j + 1)]);
            }
            if i + 1 < k {
                edges.push([id(i, j), id(i + 1, j)]);
            }
        }
    }
    Hypergraph::new(2, k * k, edges)
}

pub fn path(n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::InvalidParameter(String::from("path needs at least one vertex")));
    }
    Hypergraph::new(2, n, (1..n as Vertex).map(|i| [i - 1, i]))
}

pub fn cycle(n: usize) -> Result<Hypergraph> {
    tight_cycle(2, n)
}

pub fn hypercube(d: usize) -> Result<Hypergraph> {
    if d == 0 || d > 16 {
        return Err(Error::InvalidParameter(format!("hypercube dimension {} outside 1..=16", d)));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let u = v ^ (1 << b);
            if v < u {
                edges.push([v as Vertex, u as Vertex]);
            }
        }
    }
    Hypergraph::new(2, n, edges)
}

/// Vertices 0..6 standing for labels 1..6, edges {123}, {345}, {561}.
pub fn loose_triangle() -> Hypergraph {
    Hypergraph::new(3, 6, [[0, 1, 2], [2, 3, 4], [4, 5, 0]]).expect("fixed edge list")
}

/// k pairwise disjoint r-edges.
pub fn disjoint_edges(r: usize, k: usize) -> Result<Hypergraph> {
    if r == 0 {
        return Err(Error::ZeroUniformity);
    }
    Hypergraph::new(r, r * k, (0..k).map(|i| ((i * r) as Vertex..((i + 1) * r) as Vertex).collect::<Vec<_>>()))
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..r).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

/// F_1 ⊗ F_2. An r-set of product vertices is an edge exactly when both of
/// its coordinate projections are edges; the pairing between the two edges
/// is then read off the set itself, so e(F_1 ⊗ F_2) = r!·e(F_1)·e(F_2).
pub fn tensor_product(a: &Hypergraph, b: &Hypergraph) -> Result<Hypergraph> {
    if a.uniformity() != b.uniformity() {
        return Err(Error::UniformityMismatch { expected: a.uniformity(), found: b.uniformity() });
    }
    let r = a.uniformity();
    let nb = b.vertex_count();
    let n = a
        .vertex_count()
        .checked_mul(nb)
        .filter(|&n| n <= Vertex::MAX as usize)
        .ok_or_else(|| Error::SizeCap(String::from("tensor product vertex count overflows")))?;
    let perms = permutations(r);
    let mut edges: Vec<Vec<Vertex>> = Vec::with_capacity(perms.len() * a.edge_count() * b.edge_count());
    for ea in a.edges() {
        for eb in b.edges() {
            for p in &perms {
                let mut e: Vec<Vertex> = (0..r).map(|i| ea[i] * nb as Vertex + eb[p[i]]).collect();
                e.sort_unstable();
                edges.push(e);
            }
        }
    }
    Hypergraph::new(r, n, edges)
}

/// F^{⊗k}, refusing results with more than `max_vertices` vertices.
pub fn tensor_power(f: &Hypergraph, k: u32, max_vertices: usize) -> Result<Hypergraph> {
    if k == 0 {
        return Err(Error::InvalidParameter(String::from("tensor power needs k >= 1")));
    }
    let size = (f.vertex_count() as u128).checked_pow(k);
    if size.is_none_or(|s| s > max_vertices as u128) {
        return Err(Error::SizeCap(format!("{}^{} vertices exceeds cap {}", f.vertex_count(), k, max_vertices)));
    }
    let mut out = f.clone();
    for _ in 1..k {
        out = tensor_product(&out, f)?;
    }
    Ok(out)
}

fn partite_view(f: &Hypergraph) -> Result<PartiteHypergraph> {
    if f.uniformity() == 1 {
        PartiteHypergraph::new(f.clone(), vec![1; f.vertex_count()])
    } else {
        PartiteHypergraph::detect(f.clone())
    }
}

/// F(t) for an (r−1)-partite (r−1)-graph F, with the partition of F found
/// by [`PartiteHypergraph::detect`].
pub fn lift(f: &Hypergraph, t: usize) -> Result<PartiteHypergraph> {
    lift_partite(&partite_view(f)?, t)
}

/// F(t) keeping the given partition of F; the new vertices form class r.
pub fn lift_partite(f: &PartiteHypergraph, t: usize) -> Result<PartiteHypergraph> {
    if t == 0 {
        return Err(Error::InvalidParameter(String::from("lift needs t >= 1")));
    }
    let base = f.hypergraph();
    let n = base.vertex_count();
    let r = base.uniformity() + 1;
    let mut edges = Vec::with_capacity(t * base.edge_count());
    for a in 0..t {
        for e in base.edges() {
            let mut g = e.to_vec();
            g.push((n + a) as Vertex);
            edges.push(g);
        }
    }
    let mut parts = f.parts().to_vec();
    parts.extend(core::iter::repeat_n(r as u8, t));
    PartiteHypergraph::new(Hypergraph::new(r, n + t, edges)?, parts)
}

/// F(t_1, …, t_ℓ) = F(t_1, …, t_{ℓ−1})(t_ℓ).
pub fn lift_chain(f: &Hypergraph, ts: &[usize]) -> Result<PartiteHypergraph> {
    let mut cur = partite_view(f)?;
    for &t in ts {
        cur = lift_partite(&cur, t)?;
    }
    Ok(cur)
}

/// Builds the r-partite r-graph whose class-r vertices have the given links.
/// `base` fixes the vertex set and partition of the first r−1 classes; each
/// link is an (r−1)-graph named inside `base`.
pub fn from_links(base: &PartiteHypergraph, links: &[Hypergraph]) -> Result<PartiteHypergraph> {
    let n = base.hypergraph().vertex_count();
    let r = base.uniformity() + 1;
    let mut edges = Vec::new();
    for (a, l) in links.iter().enumerate() {
        if l.uniformity() != r - 1 {
            return Err(Error::UniformityMismatch { expected: r - 1, found: l.uniformity() });
        }
        if l.vertex_count() > n {
            return Err(Error::InvalidParameter(format!("link {} names {} vertices, base has {}", a, l.vertex_count(), n)));
        }
        for e in l.edges() {
            let mut g = e.to_vec();
            g.push((n + a) as Vertex);
            edges.push(g);
        }
    }
    let mut parts = base.parts().to_vec();
    parts.extend(core::iter::repeat_n(r as u8, links.len()));
    PartiteHypergraph::new(Hypergraph::new(r, n + links.len(), edges)?, parts)
}

/// Adds one vertex to the designated class r whose link is exactly `m`.
/// `m` is an (r−1)-graph named inside V(F), possibly with extra vertices
/// beyond v(F) that join the first r−1 classes. Every existing link of the
/// designated class must already lie inside `m`.
pub fn apex_augment(f: &PartiteHypergraph, m: &Hypergraph) -> Result<PartiteHypergraph> {
    let r = f.uniformity();
    if r < 2 {
        return Err(Error::NoLinks);
    }
    if m.uniformity() != r - 1 {
        return Err(Error::UniformityMismatch { expected: r - 1, found: m.uniformity() });
    }
    let nf = f.hypergraph().vertex_count();
    let nm = m.vertex_count().max(nf);
    let designated = r as u8;
    for e in m.edges() {
        if let Some(&v) = e.iter().find(|&&v| (v as usize) < nf && f.parts()[v as usize] == designated) {
            return Err(Error::Hypothesis(format!("edge {:?} of M uses designated vertex {}", e, v)));
        }
    }
    for link in f.designated_profile()?.entries {
        let named = link.embedded(nm);
        let m_wide = m.with_vertex_count(nm)?;
        if let Some(e) = named.edges().find(|e| !m_wide.contains_edge(e)) {
            return Err(Error::Hypothesis(format!("link of {} has edge {:?} outside M", link.anchor, e)));
        }
    }
    let u = nm as Vertex;
    let edges: Vec<Vec<Vertex>> = f
        .hypergraph()
        .edges()
        .map(|e| e.to_vec())
        .chain(m.edges().map(|e| {
            let mut g = e.to_vec();
            g.push(u);
            g
        }))
        .collect();
    let base = Hypergraph::new(r, nm + 1, edges)?;
    let mut fixed: Vec<Option<u8>> = f.parts().iter().map(|&c| Some(c)).collect();
    fixed.resize(nm, None);
    fixed.push(Some(designated));
    // extra vertices never join the designated class
    let preferred: Vec<Option<u8>> = (0..=nm).map(|_| Some(1)).collect();
    let out = PartiteHypergraph::detect_with(base, &fixed, &preferred)?;
    if out.parts()[nf..nm].contains(&designated) {
        return Err(Error::NotPartite(String::from("extra vertices of M forced into the designated class")));
    }
    Ok(out)
}

/// The injection G_k → T_k given by (i, j) ↦ (k+i−j−1, i+j−1), coordinates
/// reduced into 1..=2k. Verified as an embedding before returning.
pub fn grid_embedding(k: usize) -> Result<Vec<Vertex>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("grid needs k >= 2, got {}", k)));
    }
    let m = 2 * k as i64;
    let reduce = |x: i64| (x - 1).rem_euclid(m) + 1;
    let mut map = Vec::with_capacity(k * k);
    for i in 1..=k as i64 {
        for j in 1..=k as i64 {
            let x = reduce(k as i64 + i - j - 1);
            let y = reduce(i + j - 1);
            map.push(((x - 1) * m + (y - 1)) as Vertex);
        }
    }
    let g = grid(k)?;
    let t = torus(k)?;
    if !g.is_subhypergraph_via(&t, &map)? {
        return Err(Error::Internal(format!("grid embedding for k = {} does not preserve edges", k)));
    }
    Ok(map)
}

/// T_k = C_{2k} ⊗ C_{2k}.
pub fn torus(k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("T_k needs k >= 2, got {}", k)));
    }
    let c = cycle(2 * k)?;
    tensor_product(&c, &c)
}

/// Families addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    EvenCycle,
    Hypercube,
    CompleteBipartite,
    LooseTriangle,
    DisjointEdges,
    Complete,
    CompletePartite,
    TightCycle,
    Grid,
    Torus,
    Lift,
    Tensor,
    TensorPower,
}

impl Family {
    pub const ALL: [(Family, &'static str); 15] = [
        (Family::Path, "path"),
        (Family::Cycle, "cycle"),
        (Family::EvenCycle, "even-cycle"),
        (Family::Hypercube, "hypercube"),
        (Family::CompleteBipartite, "kmm"),
        (Family::LooseTriangle, "loose-triangle"),
        (Family::DisjointEdges, "disjoint-edges"),
        (Family::Complete, "complete"),
        (Family::CompletePartite, "complete-partite"),
        (Family::TightCycle, "tight-cycle"),
        (Family::Grid, "grid"),
        (Family::Torus, "torus"),
        (Family::Lift, "lift"),
        (Family::Tensor, "tensor"),
        (Family::TensorPower, "tensor-power"),
    ];

    pub fn name(self) -> &'static str {
        Family::ALL.iter().find(|(f, _)| *f == self).map(|(_, n)| *n).unwrap()
    }

    /// Number of base hypergraphs the family consumes.
    pub fn bases(self) -> usize {
        match self {
            Family::Lift | Family::TensorPower => 1,
            Family::Tensor => 2,
            _ => 0,
        }
    }
}

/// A family tag with integer parameters, written `name` or
/// `name:p1,p2,…` (for example `tight-cycle:3,6` or `complete-partite:2,2,2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub family: Family,
    pub params: Vec<usize>,
}

/// A built hypergraph with its partition when the family carries one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub hypergraph: Hypergraph,
    pub parts: Option<Vec<u8>>,
}

impl Construction {
    fn plain(hypergraph: Hypergraph) -> Self {
        Construction { hypergraph, parts: None }
    }

    fn partite(p: PartiteHypergraph) -> Self {
        let parts = Some(p.parts().to_vec());
        Construction { hypergraph: p.into_hypergraph(), parts }
    }

    pub fn partite_view(&self) -> Result<PartiteHypergraph> {
        match &self.parts {
            Some(p) => PartiteHypergraph::new(self.hypergraph.clone(), p.clone()),
            None => PartiteHypergraph::detect(self.hypergraph.clone()),
        }
    }
}

impl ConstructionSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (name, rest) = match text.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (text, None),
        };
        let family = Family::ALL
            .iter()
            .find(|(_, n)| *n == name)
            .map(|(f, _)| *f)
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
        let params = match rest {
            None => Vec::new(),
            Some(r) => r
                .split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| Error::InvalidParameter(format!("`{}` in `{}`", p, text)))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(ConstructionSpec { family, params })
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.params.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "{} takes {} parameter(s), got {}",
                self.family.name(),
                n,
                self.params.len()
            )))
        }
    }

    pub fn build(&self, bases: &[Hypergraph], max_vertices: usize) -> Result<Construction> {
        if bases.len() != self.family.bases() {
            return Err(Error::InvalidParameter(format!(
                "{} needs {} base hypergraph(s), got {}",
                self.family.name(),
                self.family.bases(),
                bases.len()
            )));
        }
        let p = &self.params;
        let built = match self.family {
            Family::Path => {
                self.arity(1)?;
                Construction::plain(path(p[0])?)
            }
            Family::Cycle => {
                self.arity(1)?;
                Construction::plain(cycle(p[0])?)
            }
            Family::EvenCycle => {
                self.arity(1)?;
                if p[0] < 2 {
                    return Err(Error::InvalidParameter(String::from("even-cycle:l needs l >= 2")));
                }
                Construction::partite(complete_partite_free_cycle(p[0])?)
            }
            Family::Hypercube => {
                self.arity(1)?;
                Construction::plain(hypercube(p[0])?)
            }
            Family::CompleteBipartite => {
                self.arity(1)?;
                Construction::partite(complete_partite(&[p[0], p[0]])?)
            }
            Family::LooseTriangle => {
                self.arity(0)?;
                Construction::plain(loose_triangle())
            }
            Family::DisjointEdges => {
                self.arity(2)?;
                Construction::plain(disjoint_edges(p[0], p[1])?)
            }
            Family::Complete => {
                self.arity(2)?;
                if p[0] == 0 {
                    return Err(Error::ZeroUniformity);
                }
                Construction::plain(Hypergraph::complete(p[0], p[1]))
            }
            Family::CompletePartite => Construction::partite(complete_partite(p)?),
            Family::TightCycle => {
                self.arity(2)?;
                if p[0] > 0 && p[1].is_multiple_of(p[0]) && p[1] >= 2 * p[0] {
                    Construction::partite(tight_cycle_partite(p[0], p[1])?)
                } else {
                    Construction::plain(tight_cycle(p[0], p[1])?)
                }
            }
            Family::Grid => {
                self.arity(1)?;
                Construction::plain(grid(p[0])?)
            }
            Family::Torus => {
                self.arity(1)?;
                Construction::plain(torus(p[0])?)
            }
            Family::Lift => {
                if p.is_empty() {
                    return Err(Error::InvalidParameter(String::from("lift needs at least one t")));
                }
                Construction::partite(lift_chain(&bases[0], p)?)
            }
            Family::Tensor => {
                self.arity(0)?;
                Construction::plain(tensor_product(&bases[0], &bases[1])?)
            }
            Family::TensorPower => {
                self.arity(1)?;
                Construction::plain(tensor_power(&bases[0], p[0] as u32, max_vertices)?)
            }
        };
        if built.hypergraph.vertex_count() > max_vertices {
            return Err(Error::SizeCap(format!(
                "{} vertices exceeds cap {}",
                built.hypergraph.vertex_count(),
                max_vertices
            )));
        }
        Ok(built)
    }
}

fn complete_partite_free_cycle(l: usize) -> Result<PartiteHypergraph> {
    let c = cycle(2 * l)?;
    let parts = (0..2 * l).map(|i| (i % 2 + 1) as u8).collect();
    PartiteHypergraph::new(c, parts)
}

/// Builds a named family that needs no base hypergraph.
pub fn catalog(name: &str) -> Result<Hypergraph> {
    let spec = ConstructionSpec::parse(name)?;
    if spec.family.bases() > 0 {
        return Err(Error::UnknownFamily(format!("{} needs base hypergraphs", name)));
    }
    Ok(spec.build(&[], usize::MAX)?.hypergraph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::is_isomorphic;

    #[test]
    fn complete_partite_counts() {
        let k22 = complete_partite(&[2, 2]).unwrap();
        assert!(is_isomorphic(k22.hypergraph(), &cycle(4).unwrap()).unwrap());
        assert_eq!(complete_partite(&[1, 1, 2]).unwrap().hypergraph().edge_count(), 2);
        assert_eq!(complete_partite(&[2, 2, 2]).unwrap().hypergraph().edge_count(), 8);
        assert!(complete_partite(&[2, 0]).is_err());
    }

    #[test]
    fn tight_cycles() {
        let c6 = tight_cycle_partite(3, 6).unwrap();
        assert_eq!(c6.hypergraph().edge_count(), 6);
        // labels 3 and 6 share a class, as do 1, 4 and 2, 5
        assert_eq!(c6.parts()[2], c6.parts()[5]);
        assert_eq!(c6.parts()[0], c6.parts()[3]);
        assert_eq!(c6.parts()[1], c6.parts()[4]);
        for link in c6.designated_profile().unwrap().entries {
            assert_eq!(link.hypergraph.edge_count(), 3);
        }
        assert_eq!(tight_cycle(2, 4).unwrap(), cycle(4).unwrap());
        assert!(tight_cycle(3, 3).is_err());
        assert!(tight_cycle_partite(3, 3).is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(grid(2).unwrap().edge_count(), 4);
        assert_eq!(grid(3).unwrap().edge_count(), 12);
        assert!(is_isomorphic(&grid(2).unwrap(), &cycle(4).unwrap()).unwrap());
        assert!(grid(1).is_err());
    }

    #[test]
    fn tensor_products() {
        let k2 = Hypergraph::complete(2, 2);
        let p = tensor_product(&k2, &k2).unwrap();
        assert_eq!(p, Hypergraph::new(2, 4, [[0, 3], [1, 2]]).unwrap());
        let t2 = torus(2).unwrap();
        assert_eq!(t2.vertex_count(), 16);
        assert!(t2.degrees().iter().all(|&d| d == 4));
        let e = Hypergraph::empty(2, 3);
        assert_eq!(tensor_product(&e, &k2).unwrap().edge_count(), 0);
        assert_eq!(tensor_power(&k2, 1, 10).unwrap(), k2);
        assert_eq!(tensor_power(&Hypergraph::complete(2, 3), 2, 10).unwrap().vertex_count(), 9);
        assert_eq!(tensor_power(&k2, 3, 10).unwrap().vertex_count(), 8);
        assert!(tensor_power(&k2, 4, 10).is_err());
        let k3 = Hypergraph::complete(3, 3);
        assert_eq!(tensor_product(&k3, &k3).unwrap().edge_count(), 6);
    }

    #[test]
    fn lifts() {
        let k2 = Hypergraph::complete(2, 2);
        let l = lift(&k2, 2).unwrap();
        assert!(is_isomorphic(l.hypergraph(), complete_partite(&[1, 1, 2]).unwrap().hypergraph()).unwrap());
        let c4 = cycle(4).unwrap();
        let l = lift(&c4, 3).unwrap();
        assert_eq!((l.hypergraph().vertex_count(), l.hypergraph().edge_count()), (7, 12));
        for link in l.designated_profile().unwrap().entries {
            assert!(is_isomorphic(&link.hypergraph, &c4).unwrap());
        }
        let chain = lift_chain(&k2, &[2, 2]).unwrap();
        assert!(is_isomorphic(chain.hypergraph(), complete_partite(&[1, 1, 2, 2]).unwrap().hypergraph()).unwrap());
    }

    #[test]
    fn apex() {
        let f = tight_cycle_partite(3, 6).unwrap();
        let profile = f.designated_profile().unwrap();
        let mut union = Hypergraph::empty(2, 6);
        for l in &profile.entries {
            union = union.union(&l.embedded(6)).unwrap();
        }
        assert_eq!(union.edge_count(), 4);
        let g = apex_augment(&f, &union).unwrap();
        assert_eq!((g.hypergraph().vertex_count(), g.hypergraph().edge_count()), (7, 10));
        let p = g.designated_profile().unwrap();
        assert_eq!(p.entries.len(), 3);
        assert_eq!(p.entries[2].hypergraph.edge_count(), 4);
        let short = union.edge_subset(0..3);
        assert!(matches!(apex_augment(&f, &short), Err(Error::Hypothesis(_))));
        let single = complete_partite(&[1, 1, 1]).unwrap();
        let own = single.designated_profile().unwrap().entries[0].embedded(3);
        let dup = apex_augment(&single, &own).unwrap();
        assert_eq!(dup.hypergraph().edge_count(), 2);
    }

    #[test]
    fn grid_embeddings() {
        let map = grid_embedding(2).unwrap();
        // (1,1), (4,2), (2,2), (1,3) in 1-based torus coordinates
        assert_eq!(map, vec![0, 13, 5, 2]);
        for k in 2..=6 {
            let m = grid_embedding(k).unwrap();
            let mut s = m.clone();
            s.sort_unstable();
            s.dedup();
            assert_eq!(s.len(), k * k);
        }
    }

    #[test]
    fn named() {
        assert_eq!(catalog("loose-triangle").unwrap().edge_count(), 3);
        assert_eq!(catalog("hypercube:3").unwrap().edge_count(), 12);
        assert!(PartiteHypergraph::detect(catalog("cycle:6").unwrap()).is_ok());
        assert!(PartiteHypergraph::detect(catalog("loose-triangle").unwrap()).is_ok());
        assert!(matches!(catalog("nonsense"), Err(Error::UnknownFamily(_))));
        let spec = ConstructionSpec::parse("tight-cycle:3,6").unwrap();
        let a = spec.build(&[], 100).unwrap();
        let b = spec.build(&[], 100).unwrap();
        assert_eq!(a, b);
        assert!(a.parts.is_some());
    }
}
