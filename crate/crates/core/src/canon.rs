//! Canonical labelling of small hypergraphs by individualisation and
//! refinement, with transposition pruning, plus enumeration of all r-graphs
//! on n vertices up to isomorphism.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::{for_each_subset, Hypergraph, Vertex};
use crate::{Error, Result};

/// Largest vertex count accepted by the canonical labeller.
pub const MAX_CANON_VERTICES: usize = 12;

type Partition = Vec<Vec<Vertex>>;

fn refine(g: &Hypergraph, incident: &[Vec<usize>], mut cells: Partition) -> Partition {
    let n = g.vertex_count();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v as usize] = i;
            }
        }
        let signature = |v: Vertex| -> Vec<Vec<usize>> {
            let mut sig: Vec<Vec<usize>> = incident[v as usize]
                .iter()
                .map(|&i| {
                    let mut t: Vec<usize> =
                        g.edge(i).iter().filter(|&&u| u != v).map(|&u| cell_of[u as usize]).collect();
                    t.sort_unstable();
                    t
                })
                .collect();
            sig.sort_unstable();
            sig
        };
        let mut next: Partition = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<Vec<usize>>, Vertex)> = c.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        // refinement only splits cells, so an unchanged count means stable
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn swap_is_automorphism(g: &Hypergraph, a: Vertex, b: Vertex) -> bool {
    let mut buf = Vec::with_capacity(g.uniformity());
    g.edges().all(|e| {
        buf.clear();
        buf.extend(e.iter().map(|&v| if v == a { b } else if v == b { a } else { v }));
        g.contains_set(&buf)
    })
}

struct Best {
    edges: Vec<Vertex>,
    labelling: Vec<Vertex>,
}

fn relabelled_edges(g: &Hypergraph, label: &[Vertex]) -> Vec<Vertex> {
    let mut rows: Vec<Vec<Vertex>> = g
        .edges()
        .map(|e| {
            let mut t: Vec<Vertex> = e.iter().map(|&v| label[v as usize]).collect();
            t.sort_unstable();
            t
        })
        .collect();
    rows.sort_unstable();
    rows.concat()
}

fn search(g: &Hypergraph, incident: &[Vec<usize>], cells: Partition, best: &mut Option<Best>) {
    let cells = refine(g, incident, cells);
    let target = match cells.iter().position(|c| c.len() > 1) {
        Some(i) => i,
        None => {
            let mut label = vec![0 as Vertex; g.vertex_count()];
            for (i, c) in cells.iter().enumerate() {
                label[c[0] as usize] = i as Vertex;
            }
            let edges = relabelled_edges(g, &label);
            if best.as_ref().is_none_or(|b| edges < b.edges) {
                *best = Some(Best { edges, labelling: label });
            }
            return;
        }
    };
    let cell = &cells[target];
    let mut reps: Vec<Vertex> = Vec::new();
    for &v in cell {
        if !reps.iter().any(|&w| swap_is_automorphism(g, v, w)) {
            reps.push(v);
        }
    }
    for v in reps {
        let mut next = cells.clone();
        let rest: Vec<Vertex> = cell.iter().copied().filter(|&u| u != v).collect();
        next[target] = vec![v];
        next.insert(target + 1, rest);
        search(g, incident, next, best);
    }
}

/// Returns the canonical form and a labelling `old → new` realising it.
/// Isomorphic inputs produce identical canonical forms.
pub fn canonical_form(g: &Hypergraph) -> Result<(Hypergraph, Vec<Vertex>)> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(Error::SizeCap(alloc::format!("canonical labelling limited to {} vertices", MAX_CANON_VERTICES)));
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in g.edges().enumerate() {
        for &v in e {
            incident[v as usize].push(i);
        }
    }
    if n == 0 {
        return Ok((g.clone(), Vec::new()));
    }
    let mut best = None;
    search(g, &incident, vec![(0..n as Vertex).collect()], &mut best);
    let best = best.expect("search visits at least one leaf");
    let form = g.relabel(&best.labelling, n)?;
    Ok((form, best.labelling))
}

pub fn canonical(g: &Hypergraph) -> Result<Hypergraph> {
    Ok(canonical_form(g)?.0)
}

/// All r-graphs on n vertices, one per isomorphism class, in order of edge
/// count then canonical bytes. `keep` prunes a class and all its
/// supergraphs, so it must describe a property closed under taking
/// sub-hypergraphs.
pub fn enumerate_classes(
    r: usize,
    n: usize,
    max_classes: usize,
    mut keep: impl FnMut(&Hypergraph) -> bool,
) -> Result<Vec<Hypergraph>> {
    if r == 0 {
        return Err(Error::ZeroUniformity);
    }
    let mut all_edges: Vec<Vec<Vertex>> = Vec::new();
    for_each_subset(n, r, |s| all_edges.push(s.to_vec()));
    let start = Hypergraph::empty(r, n);
    if !keep(&start) {
        return Ok(Vec::new());
    }
    let mut out = vec![start.clone()];
    let mut level = vec![start];
    while !level.is_empty() {
        let mut next: BTreeSet<Hypergraph> = BTreeSet::new();
        for g in &level {
            for e in &all_edges {
                if g.contains_edge(e) {
                    continue;
                }
                let child = Hypergraph::new(r, n, g.edges().chain(core::iter::once(e.as_slice())))?;
                let c = canonical(&child)?;
                if next.contains(&c) || !keep(&c) {
                    continue;
                }
                next.insert(c);
                if out.len() + next.len() > max_classes {
                    return Err(Error::SizeCap(alloc::format!("more than {} isomorphism classes", max_classes)));
                }
            }
        }
        level = next.into_iter().collect();
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::is_isomorphic;

    #[test]
    fn class_counts() {
        // graphs on 4 and 5 vertices; 3-graphs on 4 vertices
        assert_eq!(enumerate_classes(2, 4, 1000, |_| true).unwrap().len(), 11);
        assert_eq!(enumerate_classes(2, 5, 1000, |_| true).unwrap().len(), 34);
        assert_eq!(enumerate_classes(3, 4, 1000, |_| true).unwrap().len(), 5);
    }

    #[test]
    fn canonical_agrees_with_isomorphism() {
        let a = Hypergraph::new(2, 5, [[0, 1], [1, 2], [2, 3], [3, 0], [0, 4]]).unwrap();
        let b = Hypergraph::new(2, 5, [[4, 1], [1, 3], [3, 2], [2, 4], [2, 0]]).unwrap();
        let c = Hypergraph::new(2, 5, [[0, 1], [1, 2], [2, 3], [3, 0], [1, 4]]).unwrap();
        assert_eq!(canonical(&a).unwrap(), canonical(&b).unwrap());
        assert_eq!(canonical(&a).unwrap(), canonical(&c).unwrap());
        assert!(is_isomorphic(&a, &canonical(&a).unwrap()).unwrap());
        let d = Hypergraph::new(2, 5, [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]).unwrap();
        assert_ne!(canonical(&a).unwrap(), canonical(&d).unwrap());
    }

    #[test]
    fn size_cap() {
        assert!(canonical(&Hypergraph::empty(2, MAX_CANON_VERTICES + 1)).is_err());
    }
}
