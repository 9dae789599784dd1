//! Step-by-step evaluation of the rare/bad/good/rich argument behind the
//! link-profile bound on one concrete host.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::exact;
use crate::hom::{self, HomConfig};
use crate::hypergraph::{Hypergraph, PartiteHypergraph, Vertex};
use crate::{Error, Rational, Result};

/// Raw counts and classifications for the link-profile argument.
///
/// Index i runs over the designated links with i = 0 the link equal to M.
/// For a map ψ of V(M_i) into V(H), N(ψ) counts the u with ψ(e) ∪ {u} an
/// edge of H for every e in M_i. ψ is rare when it sends every edge of M_i
/// to r−1 distinct vertices and N(ψ) is at most the threshold of i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    pub host_vertices: usize,
    pub links: usize,
    pub container_edges: usize,
    pub edge_density: Rational,
    pub anchors: Vec<Vertex>,
    pub boundary: Vec<usize>,
    pub thresholds: Vec<Rational>,
    pub rare: Vec<u64>,
    /// Z^{(i)}: the sum of N(ψ) over rare ψ.
    pub z_total: Vec<u64>,
    /// Z_u^{(i)}: rare ψ with u in N_H(ψ(M_i)), per host vertex.
    pub z_vertex: Vec<Vec<u64>>,
    /// hom(M, D_H(v)) per host vertex.
    pub hom_link: Vec<u64>,
    /// Per i ≥ 1 and v: homomorphisms M → D_H(v) whose restriction to M_i is rare.
    pub rare_restricted: Vec<Vec<u64>>,
    pub bad: Vec<Vec<Vertex>>,
    pub good: Vec<Vertex>,
    /// Per good vertex: the number of rich homomorphisms.
    pub rich: Vec<(Vertex, u64)>,
    pub claim1_lhs: Rational,
    pub claim1_rhs: Rational,
    pub claim1: bool,
    pub claim2: bool,
    pub hom_pattern: BigUint,
    pub rich_sum: BigUint,
    pub exponent: usize,
    pub constant: Rational,
    pub final_rhs: Rational,
    pub final_holds: bool,
}

impl ProofTrace {
    pub fn all_hold(&self) -> bool {
        self.claim1 && self.claim2 && self.final_holds
    }

    /// Recomputes the classifications and claim verdicts from the raw counts.
    pub fn recheck(&self) -> bool {
        let t = self.links as u64;
        let n = self.host_vertices;
        let mut good = Vec::new();
        for v in 0..n {
            let bad = (1..self.links).any(|i| 2 * t * self.rare_restricted[i][v] >= self.hom_link[v]);
            if !bad {
                good.push(v as Vertex);
            }
        }
        let z_ok = (0..self.links).all(|i| self.z_vertex[i].iter().sum::<u64>() == self.z_total[i]);
        let claim2 = self.rich.iter().all(|&(u, c)| 2 * c >= self.hom_link[u as usize]);
        good == self.good && z_ok && claim2 == self.claim2
    }
}

struct LinkTable {
    positions: Vec<usize>,
    neighbours: Vec<u32>,
    rare: Vec<bool>,
}

/// Runs the argument for F with container M on host H. F's designated links
/// must lie inside M and one of them must equal M.
pub fn proof_trace(f: &PartiteHypergraph, m: &Hypergraph, h: &Hypergraph, cfg: &HomConfig) -> Result<ProofTrace> {
    let r = f.uniformity();
    if r < 2 {
        return Err(Error::NoLinks);
    }
    if h.uniformity() != r {
        return Err(Error::UniformityMismatch { expected: r, found: h.uniformity() });
    }
    if m.uniformity() != r - 1 {
        return Err(Error::UniformityMismatch { expected: r - 1, found: m.uniformity() });
    }
    let n = h.vertex_count();
    if n == 0 {
        return Err(Error::EmptyHost);
    }
    if m.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    let nf = f.hypergraph().vertex_count();
    let mw = m.with_vertex_count(nf)?;
    let mut entries = f.designated_profile()?.entries;
    let first = entries
        .iter()
        .position(|l| l.embedded(nf) == mw)
        .ok_or_else(|| Error::Hypothesis(String::from("no designated vertex has link M")))?;
    let head = entries.remove(first);
    entries.insert(0, head);
    for l in &entries {
        if !l.embedded(nf).edges_within(&mw) {
            return Err(Error::Hypothesis(format!("link of {} is not inside M", l.anchor)));
        }
    }
    let t = entries.len();
    let e_m = m.edge_count();
    let (mc, vm) = mw.compact();
    let a = vm.len();
    let tk = hom::edge_density(h)?;
    let two_t = exact::int(2 * t as i64);
    let scale = exact::pow(&two_t, e_m as u64).recip();

    let mut boundary = Vec::with_capacity(t);
    let mut thresholds = Vec::with_capacity(t);
    let mut tables = Vec::with_capacity(t);
    let mut rare_counts = Vec::with_capacity(t);
    let mut z_total = Vec::with_capacity(t);
    let mut z_vertex = Vec::with_capacity(t);
    let mut budget = cfg.max_visits;
    for l in &entries {
        let d = mw.boundary_degree(&l.names)?;
        let threshold = &scale * exact::pow(&tk, d as u64) * exact::int(n as i64);
        let positions: Vec<usize> = l.names.iter().map(|v| vm.binary_search(v).expect("link inside M")).collect();
        let edges: Vec<Vec<usize>> = l.hypergraph.edges().map(|e| e.iter().map(|&x| x as usize).collect()).collect();
        let k = positions.len();
        let size = (n as u64).checked_pow(k as u32).filter(|&s| s <= budget).ok_or(Error::BudgetExceeded(cfg.max_visits))?;
        budget -= size;
        let mut neighbours = vec![0u32; size as usize];
        let mut rare = vec![false; size as usize];
        let mut zv = vec![0u64; n];
        let mut rare_count = 0u64;
        let mut zt = 0u64;
        let mut psi = vec![0 as Vertex; k];
        let mut buf = Vec::with_capacity(r);
        for code in 0..size as usize {
            let mut c = code;
            for slot in psi.iter_mut() {
                *slot = (c % n) as Vertex;
                c /= n;
            }
            let proper = edges.iter().all(|e| {
                let mut img: Vec<Vertex> = e.iter().map(|&x| psi[x]).collect();
                img.sort_unstable();
                img.windows(2).all(|w| w[0] != w[1])
            });
            let mut count = 0u32;
            let mut members = Vec::new();
            for u in 0..n as Vertex {
                let ok = edges.iter().all(|e| {
                    buf.clear();
                    buf.extend(e.iter().map(|&x| psi[x]));
                    buf.push(u);
                    h.contains_set(&buf)
                });
                if ok {
                    count += 1;
                    members.push(u);
                }
            }
            neighbours[code] = count;
            if proper && exact::int(count as i64) <= threshold {
                rare[code] = true;
                rare_count += 1;
                zt += count as u64;
                for u in members {
                    zv[u as usize] += 1;
                }
            }
        }
        boundary.push(d);
        thresholds.push(threshold);
        rare_counts.push(rare_count);
        z_total.push(zt);
        z_vertex.push(zv);
        tables.push(LinkTable { positions, neighbours, rare });
    }

    let mut hom_link = vec![0u64; n];
    let mut rare_restricted = vec![vec![0u64; n]; t];
    let mut rich_count = vec![0u64; n];
    let mut rich_prod = vec![BigUint::zero(); n];
    let mut all_prod = vec![BigUint::zero(); n];
    let cfg_inner = HomConfig { max_visits: budget, ..*cfg };
    for v in 0..n as Vertex {
        let down = h.downward(v)?;
        hom::for_each_homomorphism(&mc, &down, &cfg_inner, |phi| {
            hom_link[v as usize] += 1;
            let mut rich = true;
            let mut prod = BigUint::one();
            for (i, tab) in tables.iter().enumerate().skip(1) {
                let mut code = 0usize;
                for &p in tab.positions.iter().rev() {
                    code = code * n + phi[p] as usize;
                }
                if tab.rare[code] {
                    rare_restricted[i][v as usize] += 1;
                    rich = false;
                }
                prod *= tab.neighbours[code];
            }
            if rich {
                rich_count[v as usize] += 1;
                rich_prod[v as usize] += &prod;
            }
            all_prod[v as usize] += prod;
            true
        })?;
    }

    let mut bad = vec![Vec::new(); t];
    let mut good = Vec::new();
    for v in 0..n {
        let mut is_bad = false;
        for i in 1..t {
            if 2 * t as u64 * rare_restricted[i][v] >= hom_link[v] {
                bad[i].push(v as Vertex);
                is_bad = true;
            }
        }
        if !is_bad {
            good.push(v as Vertex);
        }
    }
    let r1_fact: u64 = (1..r as u64).product();
    let n_pow = exact::from_biguint(&exact::pow_uint(n as u64, r as u64 - 1));
    let mut claim1_lhs = Rational::zero();
    for &v in &good {
        claim1_lhs += exact::int((r1_fact * h.degree(v) as u64) as i64) / &n_pow;
    }
    let claim1_rhs = exact::frac(1, 2) * &tk * exact::int(n as i64);
    let claim1 = claim1_lhs >= claim1_rhs;
    let rich: Vec<(Vertex, u64)> = good.iter().map(|&u| (u, rich_count[u as usize])).collect();
    let claim2 = rich.iter().all(|&(u, c)| 2 * c >= hom_link[u as usize]);

    let isolated = nf - t - a;
    let iso_factor = exact::pow_uint(n as u64, isolated as u64);
    let hom_pattern: BigUint = all_prod.iter().sum::<BigUint>() * &iso_factor;
    let direct = hom::count_homomorphisms_with(f.hypergraph(), h, cfg)?;
    if direct != hom_pattern {
        return Err(Error::Internal(format!("link decomposition gives {} but hom(F,H) = {}", hom_pattern, direct)));
    }
    let rich_sum: BigUint = good.iter().map(|&u| &rich_prod[u as usize]).sum::<BigUint>() * &iso_factor;
    let exponent: usize = boundary.iter().sum();
    let constant = exact::frac(1, 4) * exact::pow(&two_t, (t * e_m) as u64).recip();
    let final_rhs = &constant * exact::pow(&tk, exponent as u64) * exact::from_biguint(&exact::pow_uint(n as u64, nf as u64));
    let final_holds = exact::from_biguint(&rich_sum) >= final_rhs;
    Ok(ProofTrace {
        host_vertices: n,
        links: t,
        container_edges: e_m,
        edge_density: tk,
        anchors: entries.iter().map(|l| l.anchor).collect(),
        boundary,
        thresholds,
        rare: rare_counts,
        z_total,
        z_vertex,
        hom_link,
        rare_restricted,
        bad,
        good,
        rich,
        claim1_lhs,
        claim1_rhs,
        claim1,
        claim2,
        hom_pattern,
        rich_sum,
        exponent,
        constant,
        final_rhs,
        final_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn single_edge_container() {
        let f = constructions::complete_partite(&[1, 1, 2]).unwrap();
        let m = Hypergraph::new(2, 4, [[0, 1]]).unwrap();
        let h = Hypergraph::complete(3, 4);
        let tr = proof_trace(&f, &m, &h, &HomConfig::default()).unwrap();
        assert!(tr.all_hold(), "{:?}", tr);
        assert!(tr.recheck());
        assert_eq!(tr.exponent, 2);
    }

    #[test]
    fn empty_host() {
        let f = constructions::complete_partite(&[1, 1, 2]).unwrap();
        let m = Hypergraph::new(2, 4, [[0, 1]]).unwrap();
        let tr = proof_trace(&f, &m, &Hypergraph::empty(3, 5), &HomConfig::default()).unwrap();
        assert!(tr.all_hold());
        assert_eq!(tr.claim1_lhs, Rational::zero());
        assert_eq!(tr.claim1_rhs, Rational::zero());
        assert!(tr.good.is_empty());
    }
}
