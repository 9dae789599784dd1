//! Injective homomorphisms (embeddings), isomorphism tests and automorphism
//! counts by plain backtracking with degree and co-neighbourhood filtering.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::hom::HostIndex;
use crate::hypergraph::{Hypergraph, Vertex};
use crate::{Error, Result};

pub const DEFAULT_VISITS: u64 = 100_000_000;

struct Plan {
    order: Vec<Vertex>,
    // closing edges per position, as positions of the other vertices
    closing: Vec<Vec<Vec<usize>>>,
}

fn plan(pattern: &Hypergraph, fixed: &[Option<Vertex>]) -> Plan {
    let n = pattern.vertex_count();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in pattern.edges().enumerate() {
        for &v in e {
            incident[v as usize].push(i);
        }
    }
    let deg = pattern.degrees();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    // pinned vertices first
    for v in 0..n {
        if fixed.get(v).copied().flatten().is_some() {
            placed[v] = true;
            order.push(v as Vertex);
        }
    }
    while order.len() < n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in (0..n).filter(|&v| !placed[v]) {
            let touching = incident[v]
                .iter()
                .filter(|&&i| pattern.edge(i).iter().any(|&u| u as usize != v && placed[u as usize]))
                .count();
            let key = (touching, deg[v]);
            if best.is_none_or(|(t, d, _)| key > (t, d)) {
                best = Some((touching, deg[v], v));
            }
        }
        let v = best.unwrap().2;
        placed[v] = true;
        order.push(v as Vertex);
    }
    let mut position = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        position[v as usize] = p;
    }
    let mut closing = vec![Vec::new(); n];
    for e in pattern.edges() {
        let last = e.iter().map(|&v| position[v as usize]).max().unwrap();
        closing[last].push(e.iter().map(|&v| position[v as usize]).filter(|&p| p != last).collect());
    }
    Plan { order, closing }
}

/// Calls `f` with every embedding of `pattern` into `host` that agrees with
/// `fixed` (indexed by pattern vertex). Stops when `f` returns `false`.
pub fn for_each_embedding(
    pattern: &Hypergraph,
    host: &Hypergraph,
    fixed: &[Option<Vertex>],
    max_visits: u64,
    mut f: impl FnMut(&[Vertex]) -> bool,
) -> Result<()> {
    if pattern.uniformity() != host.uniformity() {
        return Err(Error::UniformityMismatch { expected: host.uniformity(), found: pattern.uniformity() });
    }
    let n = pattern.vertex_count();
    let hn = host.vertex_count();
    if n > hn {
        return Ok(());
    }
    let p = plan(pattern, fixed);
    let index = HostIndex::new(host);
    let pdeg = pattern.degrees();
    let hdeg = host.degrees();
    let mut images = vec![0 as Vertex; n];
    let mut used = vec![false; hn];
    let mut buffers = vec![Bitset::new(hn); n.max(1)];
    let mut visits = 0u64;
    let mut tuples: Vec<Vec<Vertex>> = Vec::new();
    let mut assignment = vec![0 as Vertex; n];

    struct Ctx<'a, 'b, F> {
        p: &'a Plan,
        index: &'a HostIndex<'b>,
        fixed: &'a [Option<Vertex>],
        pdeg: &'a [usize],
        hdeg: &'a [usize],
        images: &'a mut [Vertex],
        used: &'a mut [bool],
        buffers: &'a mut [Bitset],
        tuples: &'a mut Vec<Vec<Vertex>>,
        assignment: &'a mut [Vertex],
        visits: &'a mut u64,
        max: u64,
        f: &'a mut F,
    }

    fn go<F: FnMut(&[Vertex]) -> bool>(c: &mut Ctx<'_, '_, F>, pos: usize) -> Result<bool> {
        if pos == c.p.order.len() {
            for (p, &v) in c.p.order.iter().enumerate() {
                c.assignment[v as usize] = c.images[p];
            }
            return Ok((c.f)(c.assignment));
        }
        let cons = &c.p.closing[pos];
        c.tuples.resize(cons.len().max(c.tuples.len()), Vec::new());
        for (k, t) in cons.iter().enumerate() {
            c.tuples[k].clear();
            let imgs = &*c.images;
            c.tuples[k].extend(t.iter().map(|&q| imgs[q]));
        }
        c.index.candidates(c.tuples[..cons.len()].iter().map(|t| t.as_slice()), &mut c.buffers[pos]);
        let v = c.p.order[pos] as usize;
        let pinned = c.fixed.get(v).copied().flatten();
        let cands: Vec<usize> = c.buffers[pos].iter().collect();
        for u in cands {
            if c.used[u] || c.hdeg[u] < c.pdeg[v] || pinned.is_some_and(|w| w as usize != u) {
                continue;
            }
            *c.visits += 1;
            if *c.visits > c.max {
                return Err(Error::BudgetExceeded(c.max));
            }
            c.used[u] = true;
            c.images[pos] = u as Vertex;
            let keep = go(c, pos + 1)?;
            c.used[u] = false;
            if !keep {
                return Ok(false);
            }
        }
        Ok(true)
    }

    let mut ctx = Ctx {
        p: &p,
        index: &index,
        fixed,
        pdeg: &pdeg,
        hdeg: &hdeg,
        images: &mut images,
        used: &mut used,
        buffers: &mut buffers,
        tuples: &mut tuples,
        assignment: &mut assignment,
        visits: &mut visits,
        max: max_visits,
        f: &mut f,
    };
    go(&mut ctx, 0)?;
    Ok(())
}

/// First embedding found, if any.
pub fn find_embedding(pattern: &Hypergraph, host: &Hypergraph) -> Result<Option<Vec<Vertex>>> {
    find_embedding_with(pattern, host, &[], DEFAULT_VISITS)
}

pub fn find_embedding_with(
    pattern: &Hypergraph,
    host: &Hypergraph,
    fixed: &[Option<Vertex>],
    max_visits: u64,
) -> Result<Option<Vec<Vertex>>> {
    let mut found = None;
    for_each_embedding(pattern, host, fixed, max_visits, |a| {
        found = Some(a.to_vec());
        false
    })?;
    Ok(found)
}

pub fn count_embeddings(pattern: &Hypergraph, host: &Hypergraph, max_visits: u64) -> Result<u64> {
    let mut count = 0u64;
    for_each_embedding(pattern, host, &[], max_visits, |_| {
        count += 1;
        true
    })?;
    Ok(count)
}

/// A bijection `a → b` preserving edges, if one exists.
pub fn isomorphism(a: &Hypergraph, b: &Hypergraph) -> Result<Option<Vec<Vertex>>> {
    if a.uniformity() != b.uniformity() || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }
    // an injective edge-preserving map between equal-size vertex and edge
    // sets is an isomorphism
    find_embedding(a, b)
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    Ok(isomorphism(a, b)?.is_some())
}

pub fn automorphism_count(g: &Hypergraph) -> Result<u64> {
    count_embeddings(g, g, DEFAULT_VISITS)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Hypergraph {
        Hypergraph::new(2, n as usize, (0..n).map(|i| [i, (i + 1) % n])).unwrap()
    }

    #[test]
    fn cycles_embed_and_automorphisms() {
        assert_eq!(automorphism_count(&cycle(4)).unwrap(), 8);
        assert_eq!(automorphism_count(&cycle(5)).unwrap(), 10);
        assert!(find_embedding(&cycle(4), &Hypergraph::complete(2, 4)).unwrap().is_some());
        assert!(find_embedding(&cycle(5), &cycle(6)).unwrap().is_none());
        assert_eq!(count_embeddings(&Hypergraph::complete(2, 2), &cycle(4), 1000).unwrap(), 8);
    }

    #[test]
    fn isomorphism_relabels() {
        let a = cycle(4);
        let b = Hypergraph::new(2, 4, [[0, 2], [2, 1], [1, 3], [3, 0]]).unwrap();
        let map = isomorphism(&a, &b).unwrap().unwrap();
        assert!(a.is_subhypergraph_via(&b, &map).unwrap());
        let path = Hypergraph::new(2, 4, [[0, 1], [1, 2], [2, 3]]).unwrap();
        assert!(!is_isomorphic(&a, &path).unwrap());
    }

    #[test]
    fn pinned_vertices() {
        let a = Hypergraph::complete(2, 2);
        let host = cycle(5);
        let e = find_embedding_with(&a, &host, &[Some(3), None], 1000).unwrap().unwrap();
        assert_eq!(e[0], 3);
        assert!(e[1] == 2 || e[1] == 4);
    }

    #[test]
    fn hypergraph_embedding() {
        let k4 = Hypergraph::complete(3, 4);
        let two = Hypergraph::new(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(count_embeddings(&two, &k4, 10_000).unwrap(), 24);
        let c6 = Hypergraph::new(3, 6, (0..6u32).map(|i| [i, (i + 1) % 6, (i + 2) % 6])).unwrap();
        assert_eq!(automorphism_count(&c6).unwrap(), 12);
    }
}
