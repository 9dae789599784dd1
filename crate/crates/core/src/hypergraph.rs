//! Uniform hypergraphs on dense vertex sets `0..n` and the structural
//! derivations used throughout: links, downward hypergraphs, boundary degrees,
//! vertex removal, common neighbourhoods and connected components.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub type Vertex = u32;

/// An r-uniform hypergraph. Edges are stored as sorted r-tuples in a flat
/// buffer, in lexicographic order, so equal hypergraphs compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    uniformity: usize,
    vertex_count: usize,
    edges: Vec<Vertex>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(r={}, n={}, ", self.uniformity, self.vertex_count)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge and the edge list. Rejects
    /// wrong-size edges, repeated vertices, out-of-range vertices and
    /// duplicate edges.
    pub fn new<I, E>(uniformity: usize, vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        if uniformity == 0 {
            return Err(Error::ZeroUniformity);
        }
        let mut rows: Vec<Vec<Vertex>> = Vec::new();
        for (index, e) in edges.into_iter().enumerate() {
            let e = e.as_ref();
            if e.len() != uniformity {
                return Err(Error::EdgeSize { index, found: e.len(), expected: uniformity });
            }
            let mut row = e.to_vec();
            row.sort_unstable();
            for w in row.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DegenerateEdge { index, vertex: w[0] });
                }
            }
            if let Some(&v) = row.last() {
                if v as usize >= vertex_count {
                    return Err(Error::UnknownVertex { vertex: v, count: vertex_count });
                }
            }
            rows.push(row);
        }
        rows.sort_unstable();
        for w in rows.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(format!("{:?}", w[0])));
            }
        }
        Ok(Hypergraph { uniformity, vertex_count, edges: rows.concat() })
    }

    /// Like [`Hypergraph::new`] but silently drops duplicate edges.
    pub fn from_edge_set<I, E>(uniformity: usize, vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        let mut set = BTreeSet::new();
        for e in edges {
            let mut row = e.as_ref().to_vec();
            row.sort_unstable();
            set.insert(row);
        }
        Self::new(uniformity, vertex_count, set)
    }

    pub fn empty(uniformity: usize, vertex_count: usize) -> Self {
        assert!(uniformity > 0, "uniformity must be positive");
        Hypergraph { uniformity, vertex_count, edges: Vec::new() }
    }

    /// The complete r-graph on n vertices.
    pub fn complete(uniformity: usize, vertex_count: usize) -> Self {
        let mut edges = Vec::new();
        for_each_subset(vertex_count, uniformity, |s| edges.extend_from_slice(s));
        Hypergraph { uniformity, vertex_count, edges }
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len() / self.uniformity
    }

    pub fn edges(&self) -> core::slice::ChunksExact<'_, Vertex> {
        self.edges.chunks_exact(self.uniformity)
    }

    pub fn edge(&self, i: usize) -> &[Vertex] {
        &self.edges[i * self.uniformity..(i + 1) * self.uniformity]
    }

    /// Index of a sorted edge, by binary search.
    pub fn edge_index(&self, sorted: &[Vertex]) -> Option<usize> {
        if sorted.len() != self.uniformity {
            return None;
        }
        let (mut lo, mut hi) = (0, self.edge_count());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.edge(mid).cmp(sorted) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains_edge(&self, sorted: &[Vertex]) -> bool {
        self.edge_index(sorted).is_some()
    }

    /// Membership for an unsorted vertex tuple. Tuples with repeated
    /// vertices are never edges.
    pub fn contains_set(&self, vertices: &[Vertex]) -> bool {
        let mut buf = [0 as Vertex; 16];
        if vertices.len() <= 16 {
            let b = &mut buf[..vertices.len()];
            b.copy_from_slice(vertices);
            b.sort_unstable();
            self.contains_edge(b)
        } else {
            let mut v = vertices.to_vec();
            v.sort_unstable();
            self.contains_edge(&v)
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (v as usize) < self.vertex_count {
            Ok(())
        } else {
            Err(Error::UnknownVertex { vertex: v, count: self.vertex_count })
        }
    }

    fn check_vertices(&self, vs: &[Vertex]) -> Result<()> {
        vs.iter().try_for_each(|&v| self.check_vertex(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &v in &self.edges {
            d[v as usize] += 1;
        }
        d
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges().filter(|e| e.contains(&v)).count()
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let d = self.degrees();
        DegreeStats {
            max_degree: d.iter().copied().max().unwrap_or(0),
            min_degree: d.iter().copied().min().unwrap_or(0),
            degree_sum: d.iter().sum(),
        }
    }

    /// Number of edges meeting `set`.
    pub fn boundary_degree(&self, set: &[Vertex]) -> Result<usize> {
        self.check_vertices(set)?;
        let mark = self.mark(set);
        Ok(self.edges().filter(|e| e.iter().any(|&v| mark[v as usize])).count())
    }

    fn mark(&self, set: &[Vertex]) -> Vec<bool> {
        let mut mark = vec![false; self.vertex_count];
        for &v in set {
            mark[v as usize] = true;
        }
        mark
    }

    /// Vertices lying in at least one edge, ascending.
    pub fn covered_vertices(&self) -> Vec<Vertex> {
        let mut seen = vec![false; self.vertex_count];
        for &v in &self.edges {
            seen[v as usize] = true;
        }
        (0..self.vertex_count as Vertex).filter(|&v| seen[v as usize]).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        let d = self.degrees();
        (0..self.vertex_count as Vertex).filter(|&v| d[v as usize] == 0).collect()
    }

    /// F − U. Surviving vertices are re-indexed compactly in ascending order;
    /// the returned map sends old indices to new ones.
    pub fn remove_vertices(&self, set: &[Vertex]) -> Result<(Hypergraph, Vec<Option<Vertex>>)> {
        self.check_vertices(set)?;
        let mark = self.mark(set);
        let mut map = vec![None; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            if !mark[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let edges: Vec<Vec<Vertex>> = self
            .edges()
            .filter(|e| e.iter().all(|&v| !mark[v as usize]))
            .map(|e| e.iter().map(|&v| map[v as usize].unwrap()).collect())
            .collect();
        let h = Hypergraph::new(self.uniformity, next as usize, edges)?;
        Ok((h, map))
    }

    /// D_F(v): the (r−1)-graph on all of V(F) whose edges complete to edges
    /// through `v`.
    pub fn downward(&self, v: Vertex) -> Result<Hypergraph> {
        if self.uniformity < 2 {
            return Err(Error::NoLinks);
        }
        self.check_vertex(v)?;
        let edges: Vec<Vec<Vertex>> = self
            .edges()
            .filter(|e| e.contains(&v))
            .map(|e| e.iter().copied().filter(|&u| u != v).collect())
            .collect();
        Hypergraph::new(self.uniformity - 1, self.vertex_count, edges)
    }

    /// N_H(S): vertices `u` such that every edge of `s` (named inside V(H))
    /// together with `u` is an edge of H.
    pub fn common_neighborhood(&self, s: &Hypergraph) -> Result<Vec<Vertex>> {
        if s.uniformity + 1 != self.uniformity {
            return Err(Error::UniformityMismatch { expected: self.uniformity - 1, found: s.uniformity });
        }
        s.check_vertices(&s.edges)?;
        self.check_vertices(&s.edges)?;
        let mut buf = Vec::with_capacity(self.uniformity);
        Ok((0..self.vertex_count as Vertex)
            .filter(|&u| {
                s.edges().all(|f| {
                    buf.clear();
                    buf.extend_from_slice(f);
                    buf.push(u);
                    self.contains_set(&buf)
                })
            })
            .collect())
    }

    /// Connected components (isolated vertices form singleton components),
    /// ordered by smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let n = self.vertex_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.edges() {
            let mut a = find(&mut parent, e[0] as usize);
            for &v in &e[1..] {
                let b = find(&mut parent, v as usize);
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi] = lo;
                    a = lo;
                }
            }
        }
        let mut groups: Vec<Vec<Vertex>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for v in 0..n {
            let root = find(&mut parent, v);
            if slot[root] == usize::MAX {
                slot[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[root]].push(v as Vertex);
        }
        groups.into_iter().map(|vs| Component { hypergraph: self.induced(&vs), vertices: vs }).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Sub-hypergraph induced on `vertices` (in the given order), compactly
    /// re-indexed.
    pub fn induced(&self, vertices: &[Vertex]) -> Hypergraph {
        let mut map = vec![None; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            map[v as usize] = Some(i as Vertex);
        }
        let edges: Vec<Vec<Vertex>> = self
            .edges()
            .filter_map(|e| e.iter().map(|&v| map[v as usize]).collect::<Option<Vec<_>>>())
            .collect();
        Hypergraph::new(self.uniformity, vertices.len(), edges).expect("induced edges are valid")
    }

    /// Edge-subset sub-hypergraph on the same vertex set.
    pub fn edge_subset(&self, indices: impl IntoIterator<Item = usize>) -> Hypergraph {
        let edges: Vec<&[Vertex]> = indices.into_iter().map(|i| self.edge(i)).collect();
        Hypergraph::from_edge_set(self.uniformity, self.vertex_count, edges).expect("subset of valid edges")
    }

    /// Same edges over a larger vertex set.
    pub fn with_vertex_count(&self, vertex_count: usize) -> Result<Hypergraph> {
        if vertex_count < self.vertex_count && self.edges.iter().any(|&v| v as usize >= vertex_count) {
            return Err(Error::InvalidParameter(format!("vertex count {} drops used vertices", vertex_count)));
        }
        Ok(Hypergraph { vertex_count, ..self.clone() })
    }

    /// Compactly re-indexes onto covered vertices; returns the hypergraph and
    /// the list of original names.
    pub fn compact(&self) -> (Hypergraph, Vec<Vertex>) {
        let names = self.covered_vertices();
        (self.induced(&names), names)
    }

    /// Images of all edges under `map`, over `vertex_count` vertices.
    pub fn relabel(&self, map: &[Vertex], vertex_count: usize) -> Result<Hypergraph> {
        if map.len() != self.vertex_count {
            return Err(Error::Injection(format!("map has {} entries for {} vertices", map.len(), self.vertex_count)));
        }
        let edges: Vec<Vec<Vertex>> = self.edges().map(|e| e.iter().map(|&v| map[v as usize]).collect()).collect();
        Hypergraph::new(self.uniformity, vertex_count, edges)
    }

    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.uniformity != other.uniformity {
            return Err(Error::UniformityMismatch { expected: self.uniformity, found: other.uniformity });
        }
        let shift = self.vertex_count as Vertex;
        let edges = self
            .edges()
            .map(|e| e.to_vec())
            .chain(other.edges().map(|e| e.iter().map(|&v| v + shift).collect()));
        Hypergraph::new(self.uniformity, self.vertex_count + other.vertex_count, edges.collect::<Vec<_>>())
    }

    /// Union of edge sets over the same vertex set.
    pub fn union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.uniformity != other.uniformity {
            return Err(Error::UniformityMismatch { expected: self.uniformity, found: other.uniformity });
        }
        let n = self.vertex_count.max(other.vertex_count);
        Hypergraph::from_edge_set(self.uniformity, n, self.edges().chain(other.edges()))
    }

    /// Whether every edge of `self` is an edge of `other` (same names).
    pub fn edges_within(&self, other: &Hypergraph) -> bool {
        self.uniformity == other.uniformity && self.edges().all(|e| other.contains_edge(e))
    }

    /// Checks that `injection` (indexed by vertices of `self`) is injective
    /// into `host` and maps every edge onto an edge of `host`.
    pub fn is_subhypergraph_via(&self, host: &Hypergraph, injection: &[Vertex]) -> Result<bool> {
        if self.uniformity != host.uniformity {
            return Err(Error::UniformityMismatch { expected: host.uniformity, found: self.uniformity });
        }
        if injection.len() != self.vertex_count {
            return Err(Error::Injection(format!(
                "expected {} images, got {}",
                self.vertex_count,
                injection.len()
            )));
        }
        let mut seen = vec![false; host.vertex_count];
        for &u in injection {
            host.check_vertex(u).map_err(|_| Error::Injection(format!("image {} outside host", u)))?;
            if core::mem::replace(&mut seen[u as usize], true) {
                return Err(Error::Injection(format!("vertex {} hit twice", u)));
            }
        }
        let mut buf = Vec::with_capacity(self.uniformity);
        Ok(self.edges().all(|e| {
            buf.clear();
            buf.extend(e.iter().map(|&v| injection[v as usize]));
            host.contains_set(&buf)
        }))
    }

    /// Whether the vertex set `set` (must be non-empty to matter) is a union
    /// of connected components, i.e. no edge crosses its boundary.
    pub fn is_component_closed(&self, set: &[Vertex]) -> bool {
        let mark = self.mark(set);
        self.edges().all(|e| {
            let inside = e.iter().filter(|&&v| mark[v as usize]).count();
            inside == 0 || inside == e.len()
        })
    }
}

/// One connected component with the original names of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub hypergraph: Hypergraph,
    pub vertices: Vec<Vertex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    pub degree_sum: usize,
}

/// Calls `f` on each k-subset of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[Vertex])) {
    if k > n {
        return;
    }
    let mut idx: Vec<Vertex> = (0..k as Vertex).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if (idx[i] as usize) < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// A hypergraph together with a vertex partition into classes `1..=r` such
/// that every edge meets every class exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartiteHypergraph {
    base: Hypergraph,
    parts: Vec<u8>,
}

/// Link of one anchor: a compact (r−1)-graph plus the original names of its
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub anchor: Vertex,
    pub hypergraph: Hypergraph,
    pub names: Vec<Vertex>,
}

impl Link {
    /// The link's edges written with parent names over `vertex_count`
    /// vertices.
    pub fn embedded(&self, vertex_count: usize) -> Hypergraph {
        self.hypergraph
            .relabel(&self.names, vertex_count)
            .expect("link names lie inside the parent")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkProfile {
    pub part: u8,
    pub entries: Vec<Link>,
}

impl LinkProfile {
    pub fn edge_total(&self) -> usize {
        self.entries.iter().map(|l| l.hypergraph.edge_count()).sum()
    }
}

impl PartiteHypergraph {
    pub fn new(base: Hypergraph, parts: Vec<u8>) -> Result<Self> {
        let r = base.uniformity();
        if parts.len() != base.vertex_count() {
            return Err(Error::Partition(format!(
                "{} class labels for {} vertices",
                parts.len(),
                base.vertex_count()
            )));
        }
        if let Some(&bad) = parts.iter().find(|&&p| p == 0 || p as usize > r) {
            return Err(Error::Partition(format!("class {} outside 1..={}", bad, r)));
        }
        for (i, e) in base.edges().enumerate() {
            let mut seen = 0u64;
            for &v in e {
                seen |= 1 << parts[v as usize];
            }
            if seen.count_ones() as usize != r {
                return Err(Error::Partition(format!("edge {} ({:?}) is not transversal", i, e)));
            }
        }
        Ok(PartiteHypergraph { base, parts })
    }

    /// Finds a partition by backtracking (vertices ascending, classes tried in
    /// increasing order), so the result is deterministic.
    pub fn detect(base: Hypergraph) -> Result<Self> {
        let fixed = vec![None; base.vertex_count()];
        Self::detect_with(base, &fixed, &[])
    }

    /// Partition search with some classes fixed and optional per-vertex
    /// preferred classes tried first.
    pub fn detect_with(base: Hypergraph, fixed: &[Option<u8>], preferred: &[Option<u8>]) -> Result<Self> {
        let n = base.vertex_count();
        let r = base.uniformity();
        if r > 63 {
            return Err(Error::InvalidParameter(format!("uniformity {} too large for partition search", r)));
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, e) in base.edges().enumerate() {
            for &v in e {
                incident[v as usize].push(i);
            }
        }
        let mut parts: Vec<u8> = vec![0; n];
        for (v, f) in fixed.iter().enumerate().take(n) {
            if let Some(c) = f {
                parts[v] = *c;
            }
        }
        let order: Vec<usize> = (0..n).filter(|&v| fixed.get(v).copied().flatten().is_none()).collect();

        fn consistent(base: &Hypergraph, incident: &[Vec<usize>], parts: &[u8], v: usize) -> bool {
            incident[v].iter().all(|&i| {
                let mut seen = 0u64;
                for &u in base.edge(i) {
                    let c = parts[u as usize];
                    if c != 0 {
                        if seen >> c & 1 == 1 {
                            return false;
                        }
                        seen |= 1 << c;
                    }
                }
                true
            })
        }
        for v in 0..n {
            if parts[v] != 0 && !consistent(&base, &incident, &parts, v) {
                return Err(Error::NotPartite(format!("fixed classes clash at vertex {}", v)));
            }
        }
        #[allow(clippy::too_many_arguments)]
        fn go(
            k: usize,
            order: &[usize],
            base: &Hypergraph,
            incident: &[Vec<usize>],
            parts: &mut [u8],
            preferred: &[Option<u8>],
            r: u8,
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let v = order[k];
            if incident[v].is_empty() {
                parts[v] = preferred.get(v).copied().flatten().unwrap_or(1);
                return go(k + 1, order, base, incident, parts, preferred, r);
            }
            let pref = preferred.get(v).copied().flatten();
            let candidates = pref.into_iter().chain((1..=r).filter(move |&c| Some(c) != pref));
            for c in candidates {
                parts[v] = c;
                if consistent(base, incident, parts, v) && go(k + 1, order, base, incident, parts, preferred, r) {
                    return true;
                }
            }
            parts[v] = 0;
            false
        }
        if go(0, &order, &base, &incident, &mut parts, preferred, r as u8) {
            PartiteHypergraph::new(base, parts)
        } else {
            Err(Error::NotPartite(String::from("no transversal partition exists")))
        }
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.base
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.base
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn uniformity(&self) -> usize {
        self.base.uniformity()
    }

    pub fn class_of(&self, v: Vertex) -> Result<u8> {
        self.parts
            .get(v as usize)
            .copied()
            .ok_or(Error::UnknownVertex { vertex: v, count: self.parts.len() })
    }

    pub fn part_vertices(&self, part: u8) -> Vec<Vertex> {
        (0..self.parts.len() as Vertex).filter(|&v| self.parts[v as usize] == part).collect()
    }

    /// L_F(v): compact (r−1)-graph on the vertices co-occurring with `v`.
    pub fn link(&self, v: Vertex) -> Result<Link> {
        if self.uniformity() < 2 {
            return Err(Error::NoLinks);
        }
        self.class_of(v)?;
        let down = self.base.downward(v)?;
        let (hypergraph, names) = down.compact();
        Ok(Link { anchor: v, hypergraph, names })
    }

    pub fn link_profile(&self, part: u8) -> Result<LinkProfile> {
        if part == 0 || part as usize > self.uniformity() {
            return Err(Error::Partition(format!("class {} outside 1..={}", part, self.uniformity())));
        }
        let entries = self.part_vertices(part).into_iter().map(|v| self.link(v)).collect::<Result<Vec<_>>>()?;
        Ok(LinkProfile { part, entries })
    }

    /// Link profile of the last class, the designated part.
    pub fn designated_profile(&self) -> Result<LinkProfile> {
        self.link_profile(self.uniformity() as u8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Hypergraph {
        Hypergraph::new(2, 4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap()
    }

    #[test]
    fn canonical_ordering() {
        let a = Hypergraph::new(2, 3, [[2, 1], [0, 1]]).unwrap();
        let b = Hypergraph::new(2, 3, [[0, 1], [1, 2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge(0), &[0, 1]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Hypergraph::new(2, 3, [[0, 0]]), Err(Error::DegenerateEdge { .. })));
        assert!(matches!(Hypergraph::new(2, 3, [[0, 5]]), Err(Error::UnknownVertex { .. })));
        assert!(matches!(Hypergraph::new(2, 3, [[0, 1], [1, 0]]), Err(Error::DuplicateEdge(_))));
        assert!(matches!(Hypergraph::new(3, 3, [[0, 1]]), Err(Error::EdgeSize { .. })));
        assert!(matches!(Hypergraph::new(0, 3, Vec::<Vec<u32>>::new()), Err(Error::ZeroUniformity)));
    }

    #[test]
    fn boundary_degree_examples() {
        let g = c4();
        assert_eq!(g.boundary_degree(&[0, 1, 2, 3]).unwrap(), 4);
        assert_eq!(g.boundary_degree(&[]).unwrap(), 0);
        assert!(g.boundary_degree(&[9]).is_err());
    }

    #[test]
    fn remove_vertices_reindexes() {
        let (p, map) = c4().remove_vertices(&[0]).unwrap();
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.edge_count(), 2);
        assert_eq!(map, vec![None, Some(0), Some(1), Some(2)]);
        let two = Hypergraph::new(2, 4, [[0, 1], [2, 3]]).unwrap();
        let (one, _) = two.remove_vertices(&[0, 1]).unwrap();
        assert_eq!(one, Hypergraph::new(2, 2, [[0, 1]]).unwrap());
    }

    #[test]
    fn downward_of_triangle() {
        let k3 = Hypergraph::complete(2, 3);
        let d = k3.downward(0).unwrap();
        assert_eq!(d, Hypergraph::new(1, 3, [[1], [2]]).unwrap());
        let lonely = Hypergraph::new(2, 3, [[0, 1]]).unwrap();
        assert_eq!(lonely.downward(2).unwrap().edge_count(), 0);
        assert!(Hypergraph::new(1, 2, [[0]]).unwrap().downward(0).is_err());
    }

    #[test]
    fn common_neighborhood_examples() {
        let k4 = Hypergraph::complete(3, 4);
        let s = Hypergraph::new(2, 4, [[0, 1]]).unwrap();
        assert_eq!(k4.common_neighborhood(&s).unwrap(), vec![2, 3]);
        let none = Hypergraph::empty(2, 4);
        assert_eq!(k4.common_neighborhood(&none).unwrap(), vec![0, 1, 2, 3]);
        assert!(k4.common_neighborhood(&k4).is_err());
    }

    #[test]
    fn components_of_two_edges() {
        let two = Hypergraph::new(2, 4, [[0, 1], [2, 3]]).unwrap();
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        let k2 = Hypergraph::complete(2, 2);
        assert!(comps.iter().all(|c| c.hypergraph == k2));
        assert_eq!(comps[1].vertices, vec![2, 3]);
    }

    #[test]
    fn subhypergraph_injection_checks() {
        let p = Hypergraph::new(2, 3, [[0, 1], [1, 2]]).unwrap();
        assert!(p.is_subhypergraph_via(&c4(), &[0, 1, 2]).unwrap());
        assert!(!p.is_subhypergraph_via(&c4(), &[0, 2, 1]).unwrap());
        assert!(p.is_subhypergraph_via(&c4(), &[0, 0, 1]).is_err());
        assert!(p.is_subhypergraph_via(&c4(), &[0, 1]).is_err());
    }

    #[test]
    fn partition_detection() {
        let p = PartiteHypergraph::detect(c4()).unwrap();
        assert_eq!(p.parts(), &[1, 2, 1, 2]);
        let k3 = Hypergraph::complete(2, 3);
        assert!(PartiteHypergraph::detect(k3).is_err());
        assert!(PartiteHypergraph::new(c4(), vec![1, 1, 2, 2]).is_err());
    }

    #[test]
    fn single_edge_link() {
        let e = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let f = PartiteHypergraph::new(e, vec![1, 2, 3]).unwrap();
        let l = f.link(2).unwrap();
        assert_eq!(l.hypergraph, Hypergraph::new(2, 2, [[0, 1]]).unwrap());
        assert_eq!(l.names, vec![0, 1]);
    }

    #[test]
    fn subsets_lexicographic() {
        let mut all = Vec::new();
        for_each_subset(4, 2, |s| all.push(s.to_vec()));
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        let mut none = 0;
        for_each_subset(2, 3, |_| none += 1);
        assert_eq!(none, 0);
        let mut empty = 0;
        for_each_subset(3, 0, |s| {
            assert!(s.is_empty());
            empty += 1
        });
        assert_eq!(empty, 1);
    }
}
