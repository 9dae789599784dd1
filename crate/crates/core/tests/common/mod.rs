#![allow(dead_code)]

use hypersid_core::hypergraph::for_each_subset;
use hypersid_core::{Hypergraph, Vertex};
use proptest::prelude::*;

/// Counts homomorphisms by trying every map V(F) → V(H).
pub fn brute_hom(f: &Hypergraph, h: &Hypergraph) -> u128 {
    let v = f.vertex_count();
    let n = h.vertex_count();
    if n == 0 {
        return u128::from(v == 0);
    }
    let mut phi = vec![0 as Vertex; v];
    let mut count = 0u128;
    let mut buf = Vec::new();
    loop {
        let ok = f.edges().all(|e| {
            buf.clear();
            buf.extend(e.iter().map(|&x| phi[x as usize]));
            buf.sort_unstable();
            buf.windows(2).all(|w| w[0] != w[1]) && h.contains_edge(&buf)
        });
        count += u128::from(ok);
        let mut i = 0;
        loop {
            if i == v {
                return count;
            }
            phi[i] += 1;
            if (phi[i] as usize) < n {
                break;
            }
            phi[i] = 0;
            i += 1;
        }
    }
}

/// Every injective map V(F) → V(H), as vectors.
pub fn injections(v: usize, n: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(v: usize, n: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == v {
            out.push(cur.clone());
            return;
        }
        for u in 0..n as Vertex {
            if !cur.contains(&u) {
                cur.push(u);
                go(v, n, cur, out);
                cur.pop();
            }
        }
    }
    go(v, n, &mut cur, &mut out);
    out
}

pub fn all_edges(r: usize, n: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for_each_subset(n, r, |s| out.push(s.to_vec()));
    out
}

pub fn from_mask(r: usize, n: usize, mask: u64) -> Hypergraph {
    let edges: Vec<Vec<Vertex>> = all_edges(r, n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
    Hypergraph::new(r, n, edges).unwrap()
}

/// Random r-graphs on 1..=max_n vertices.
pub fn arb_hypergraph(r: usize, max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n, any::<u64>()).prop_map(move |(n, mask)| {
        let m = all_edges(r, n).len();
        let mask = if m >= 64 { mask } else { mask & ((1u64 << m) - 1) };
        from_mask(r, n, mask)
    })
}

/// A uniformly random permutation of `0..n` from a seed.
pub fn permutation(n: usize, seed: u64) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n as Vertex).collect();
    let mut s = seed | 1;
    for i in (1..n).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        p.swap(i, (s % (i as u64 + 1)) as usize);
    }
    p
}
